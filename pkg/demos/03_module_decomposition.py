"""Splitting modules into indecomposable summands over a modular field.

A permutation module k[G/H] is rarely semisimple when p divides |G|; the
MeatAxe finds composition factors, and idempotent lifting in the
endomorphism algebra peels off indecomposable direct summands.
"""

from blockperm import gfq, modules
from blockperm.modules import GModule, SimpleRegistry
from blockperm.permgrp import PermGroup

F = gfq.GF.get(2)
g = PermGroup.symmetric(5)
h = g.sylow_subgroup(5)
m = GModule.permutation(g, h, F)
print("k[S_5 / C_5] over GF(2) has dimension", m.dim)

reg = SimpleRegistry(F)
print("composition factors:",
      modules.composition_factor_labels(m, reg, seed=0))

for s in modules.decompose(m, seed=0):
    tag = "projective" if modules.is_projective(s.module) else "indecomposable"
    print("  summand of dim %2d (x%d, %s), Loewy layers %s"
          % (s.module.dim, s.multiplicity, tag,
             modules.loewy_layers(s.module, reg, seed=0)))

report = modules.decomposition_report(m, seed=0)
total = sum(e["dim"] * e["multiplicity"] for e in report["summands"])
assert total == m.dim
print("dimensions add up:", total, "=", m.dim)
