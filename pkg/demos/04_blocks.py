"""Block decomposition of a modular group algebra.

kG splits into indecomposable two-sided ideals (blocks), each with a
defect group measuring how far it is from being a matrix algebra.  The
block containing the trivial module is the principal block and its defect
group is a full Sylow p-subgroup.
"""

from blockperm import blocks, gfq
from blockperm.permgrp import PermGroup

F = gfq.GF.get(7)
g = PermGroup.symmetric(7)
ga = blocks.GroupAlgebra(g, F)

print("blocks of GF(7)S_7:")
for b in ga.blocks(seed=0):
    d = b.defect_group()
    print("  dim %4d  defect %d%s" % (
        b.dim, d.order(), "  (principal)" if b.is_principal else ""))

principal = [b for b in ga.blocks(seed=0) if b.is_principal][0]
print("the unique positive-defect block has dimension", principal.dim)

sylow = g.sylow_subgroup(7)
print("number of simple modules in it:",
      principal.number_of_simples(sylow, seed=0))

# Brauer correspondence: the principal block of kN_G(P) with the same
# central character
corr_ga, corr = principal.brauer_correspondent(sylow, seed=0)
print("Brauer correspondent lives in a group of order",
      corr_ga.group.order(), "and has dim", corr.dim)
