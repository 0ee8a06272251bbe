import json

import pytest

from blockperm import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_blocks_json(capsys):
    code, out = run(capsys, "blocks", "--group", "sym:4", "--field", "3",
                    "--json")
    assert code == 0
    data = json.loads(out)
    assert sum(b["dim"] for b in data) == 24
    assert sum(b["is_principal"] for b in data) == 1


def test_decompose_regular_module(capsys):
    code, out = run(capsys, "decompose", "--group", "cyclic:4", "--field",
                    "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 4
    assert sum(e["dim"] * e["multiplicity"] for e in data["summands"]) == 4


def test_decompose_with_subgroup_and_vertices(capsys):
    code, out = run(capsys, "vertex", "--group", "sym:4", "--field", "2",
                    "--subgroup", "sylow:sym:4:3", "--json")
    assert code == 0
    data = json.loads(out)
    assert all("vertex_order" in e for e in data["summands"])


def test_source_perm(capsys):
    code, out = run(capsys, "source-perm", "--group", "sym:5", "--field",
                    "5", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["block_dim"] == 70
    assert data["defect_order"] == 5
    dims = sorted(e["dim"] for e in data["summands"])
    assert dims == [1, 1, 6, 6]


def test_weights(capsys):
    code, out = run(capsys, "weights", "--group", "sym:5", "--field", "5",
                    "--json")
    assert code == 0
    data = json.loads(out)
    assert sum(e["num_weights"] for e in data) == 4


def test_brauer_tree_end_of_u(capsys):
    code, out = run(capsys, "brauer-tree", "--line", "6", "--end-of-u",
                    "--json")
    assert code == 0
    shapes = sorted((d["num_simples"], d["proj_length"])
                    for d in json.loads(out))
    assert shapes == [(1, 1), (1, 1), (2, 2), (2, 2)]


def test_brauer_tree_json_output(capsys):
    code, out = run(capsys, "brauer-tree", "--star", "3:2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["exceptional"]["m"] == 2
    assert len(data["vertices"]) == 4


def test_selfinj_true(capsys):
    code, out = run(capsys, "selfinj", "--algebra", "nakayama:2:2",
                    "--field", "7")
    assert code == 0
    assert out.strip() == "true"


def test_chars_sylow_shorthand(capsys):
    code, out = run(capsys, "chars", "--n", "7", "--subgroup", "sylow:7",
                    "--json")
    assert code == 0
    data = json.loads(out)
    assert data["7"] == 1
    assert data["5,1,1"] == 3
    # dim 35 character vanishing on 7-cycles: multiplicity 35/7
    assert data["4,2,1"] == 5


def test_paper_check_nilpotent_suite(capsys):
    code, out = run(capsys, "paper-check", "--suite", "nilpotent")
    assert code == 0
    lines = [l for l in out.splitlines() if l.strip()]
    assert all(" PASS " in l for l in lines)


def test_paper_check_golden_comparison(capsys, tmp_path):
    golden = tmp_path / "nilpotent.json"
    code, _ = run(capsys, "paper-check", "--suite", "nilpotent",
                  "--write-golden", str(golden))
    assert code == 0
    code, _ = run(capsys, "paper-check", "--suite", "nilpotent",
                  "--golden", str(golden))
    assert code == 0


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        cli.main(["decompose", "--group", "sym:4"])   # missing --field
    assert exc.value.code == 2


def test_bad_group_spec_exit_code(capsys):
    code = cli.main(["blocks", "--group", "nonsense:4", "--field", "3"])
    assert code == 2
