import json
import os

from blockperm import checks


def test_registry_and_suites():
    assert set(checks.SUITES) == {"all", "cyclic", "klein4", "nilpotent",
                                  "s7"}
    assert checks.suite_ids("all") == sorted(checks.CHECKS)
    for name in checks.SUITES[1:]:
        ids = checks.suite_ids(name)
        assert ids and ids == sorted(ids)
        assert set(ids) <= set(checks.CHECKS)
    # every check carries a documentation anchor
    for spec in checks.CHECKS.values():
        assert spec.anchor


def test_run_check_produces_report():
    rep = checks.run_check("thm-1.11-a4p3", seed=0)
    assert rep.passed
    assert rep.id == "thm-1.11-a4p3"
    assert rep.wall_time is not None
    names = [a["name"] for a in rep.assertions]
    assert "End split local" in names


def test_suite_json_is_canonical_and_time_free():
    reps = checks.run_suite("nilpotent", seed=0)
    text = checks.suite_json(reps)
    assert "wall_time" not in text
    assert text.endswith("\n")
    data = json.loads(text)
    assert [r["id"] for r in data] == checks.suite_ids("nilpotent")
    assert all(r["seed"] == 0 for r in data)


def test_nilpotent_suite_reruns_identically():
    a = checks.suite_json(checks.run_suite("nilpotent", seed=0,
                                           ctx=checks.Context()))
    b = checks.suite_json(checks.run_suite("nilpotent", seed=0,
                                           ctx=checks.Context()))
    assert a == b


def test_golden_files_exist_for_every_suite():
    here = os.path.dirname(__file__)
    for name in checks.SUITES:
        path = os.path.join(here, "golden", "%s-seed0.json" % name)
        assert os.path.exists(path), path
        data = json.loads(open(path).read())
        assert all(r["seed"] == 0 for r in data)
        assert all(r["passed"] for r in data)


def test_klein4_matches_golden():
    here = os.path.dirname(__file__)
    stored = open(os.path.join(here, "golden", "klein4-seed0.json")).read()
    fresh = checks.suite_json(checks.run_suite("klein4", seed=0,
                                               ctx=checks.Context()))
    assert fresh == stored
