"""Brauer trees and serial algebra combinatorics.

Blocks with cyclic defect group are described by a tree whose edges are
the simple modules.  Walking the tree's two vertex permutations predicts
the endomorphism algebra of the source permutation module; for GF(7)S_7
the prediction matches the algebra computed from the group.
"""

from blockperm import algebra, blocks, brauertree, gfq, modules
from blockperm.permgrp import PermGroup

p = 7
tree = brauertree.line_tree(p - 1)
print("straight-line tree with", len(tree.edges), "edges")

for e in (0, 2):
    print("projective at edge %d has Loewy layers %s"
          % (e, brauertree.projective_loewy(tree, e)))

descs = brauertree.end_of_U_sum(tree)
print("predicted factors (num simples, composition length):",
      sorted(d.shape() for d in descs))

# now compute the same algebra from the group
F = gfq.GF.get(p)
g = PermGroup.symmetric(p)
ga = blocks.GroupAlgebra(g, F)
b = [x for x in ga.blocks(seed=0) if x.is_principal][0]
spm = b.source_permutation_module(b.defect_group(), seed=0)
end, _ = modules.endomorphism_algebra(spm)
found = brauertree.descriptors_of_algebra(end, seed=0)
print("computed factors:", sorted(d.shape() for d in found))

print("algebra matches the tree (up to reflection):",
      brauertree.matches_tree(end, tree, seed=0))
