"""Vertices of indecomposable modules and weights of blocks.

The vertex of an indecomposable module is the smallest p-subgroup it is
relatively projective to; weights pair a p-subgroup Q with a projective
simple module of k[N_G(Q)/Q].  Counting weights per block reproduces the
number of simple modules of the block on every instance here.
"""

from blockperm import blocks, gfq, modules, vertexweight
from blockperm.modules import GModule
from blockperm.permgrp import PermGroup

F = gfq.GF.get(2)
g = PermGroup.symmetric(5)

triv = GModule.trivial(g, F)
cert = vertexweight.vertex_certificate(triv)
print("vertex of the trivial GF(2)S_5-module has order",
      cert.vertex.order(), "(a full Sylow 2-subgroup)")

free = GModule.regular(g, F)
print("vertex of the free module has order",
      vertexweight.vertex(free).order())

ga = blocks.GroupAlgebra(g, F)
sylow = g.sylow_subgroup(2)
for b in ga.blocks(seed=0):
    w = vertexweight.weight_count_for_block(ga, b, seed=0)
    ell = b.number_of_simples(sylow, seed=0) \
        if b.defect_group().order() > 1 else 1
    dz = b.defect_group().order() == 1
    print("block dim %3d: %d weights%s, %d simples"
          % (b.dim, w + (1 if dz else 0),
             " (counting the trivial-Q one)" if dz else "", ell))

# Green correspondence sends a weight module to a summand of the source
# permutation module of its block
b = [x for x in ga.blocks(seed=0) if x.is_principal][0]
spm = b.source_permutation_module(b.defect_group(), seed=0)
small = modules.decompose(spm, seed=0)
for w in vertexweight.weights(g, F, seed=0):
    if vertexweight.block_of_weight(ga, w, seed=0) is not b:
        continue
    corr = vertexweight.green_correspondent(w.module, g, w.q, seed=0)
    hit = any(modules.is_isomorphic(corr, s.module, seed=0) for s in small
              if s.module.dim == corr.dim)
    print("weight with |Q| =", w.q.order(),
          "-> Green correspondent of dim", corr.dim,
          "is a source-module summand:", hit)
