"""Source permutation modules and their endomorphism algebras.

For a block B with defect group P and source idempotent i, the module
Bi (x)_{kP} k packages the local structure of B.  For the principal block
of GF(5)S_5 it is a direct sum of four indecomposables, and its
endomorphism algebra is a product of tiny self-injective serial algebras.
"""

from blockperm import algebra, blocks, gfq, modules
from blockperm.permgrp import PermGroup

F = gfq.GF.get(5)
g = PermGroup.symmetric(5)
ga = blocks.GroupAlgebra(g, F)
b = [x for x in ga.blocks(seed=0) if x.is_principal][0]
p = b.defect_group()
print("principal block: dim", b.dim, " defect group of order", p.order())

spm = b.source_permutation_module(p, seed=0)
print("source permutation module has dim", spm.dim)
for s in modules.decompose(spm, seed=0):
    print("  summand of dim", s.module.dim, "x", s.multiplicity)

end, _basis = modules.endomorphism_algebra(spm)
print("dim End =", end.dim)
shape = algebra.algebra_shape(end, seed=0)
print("self-injective:", shape["flags"]["is_self_injective"])
print("serial (Nakayama):", shape["flags"]["is_nakayama"])

# the endomorphism ring dimension is also a purely combinatorial count:
# the number of P-P orbits on a stable basis of the corner iBi
print("P-P orbit count of iBi:", b.source_orbit_count(p, seed=0))

# compare with the bigger Sylow coinvariant module B (x)_{kS} k
bsm = b.block_sylow_module(g.sylow_subgroup(5))
big = modules.decompose(bsm, seed=0)
print("B (x)_S k has dim", bsm.dim, "with",
      sum(x.multiplicity for x in big), "summands; the non-projective",
      "ones are exactly the source module summands")
