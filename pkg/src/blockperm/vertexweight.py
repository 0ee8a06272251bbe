"""Relative projectivity, vertices, weights and Green correspondence.

Relative projectivity is decided with Higman's criterion: a module M is
projective relative to a subgroup Q exactly when the identity endomorphism
lies in the image of the relative trace map Tr^G_Q on End_kQ(M).  The trace
is evaluated through the chain Q <= N_G(Q) <= G so transversals stay short.
"""

import numpy as np

from . import gfq
from . import meataxe
from . import modules
from .blocks import GroupAlgebra
from .modules import GModule
from .permgrp import Perm, PermGroup


def _coset_transversal(big, sub):
    reps, _images = big.coset_action(sub)
    return reps


def relative_trace_span(m, q):
    """Row space (flattened) of Tr^G_Q(End_kQ(M))."""
    F = m.field
    g = m.group
    qmats = [m.rep_of(x) for x in q.generators]
    if not qmats:
        # End over the trivial subgroup is all matrices; projectivity is
        # decided by the cheaper freeness test instead
        raise ValueError("use modules.is_projective for the trivial subgroup")
    endo = meataxe.hom_space(F, qmats, qmats)
    chain = [q]
    n = g.normalizer(q).with_small_generators()
    if n.order() > q.order() and n.order() < g.order():
        chain.append(n)
    chain.append(g)
    span = endo
    for lower, upper in zip(chain, chain[1:]):
        reps = _coset_transversal(upper, lower)
        traced = []
        for X in span:
            acc = np.zeros_like(X)
            for t in reps:
                R = m.rep_of(t)
                Rin = m.rep_of(t.inv())
                acc = F.add(acc, F.matmul(R, F.matmul(X, Rin)))
            traced.append(acc)
        flat = np.vstack([X.reshape(1, -1) for X in traced]) if traced else \
            np.zeros((0, m.dim * m.dim), dtype=np.int16)
        R, piv = gfq.echelon(F, flat)
        span = [R[i].reshape(m.dim, m.dim) for i in range(R.shape[0])]
    return span


def is_relatively_projective(m, q):
    """Higman's criterion for projectivity of m relative to q <= G."""
    F = m.field
    p = F.p
    if m.group.order() % p:
        return True
    if q.order() % p ** _p_valuation(m.group.order(), p) == 0:
        return True  # q contains a Sylow subgroup
    if q.order() == 1:
        return modules.is_projective(m)
    span = relative_trace_span(m, q)
    ident = np.eye(m.dim, dtype=np.int16).reshape(1, -1)
    if not span:
        return False
    flat = np.vstack([X.reshape(1, -1) for X in span])
    return gfq.rank(F, np.vstack([flat, ident])) == flat.shape[0]


def _p_valuation(n, p):
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


class VertexCertificate:
    """A vertex along with the relative-projectivity verdicts that led to
    it, one (subgroup order, verdict) per tested subgroup class."""

    def __init__(self, module, vertex, witnesses):
        self.module = module
        self.vertex = vertex
        self.witnesses = witnesses

    def __repr__(self):
        return "VertexCertificate(|Q|=%d)" % self.vertex.order()


def vertex_certificate(m):
    """Vertex of m with the tested-class record.

    The p-subgroup classes are scanned in ascending order; the first class
    relative to which m is projective is the vertex.  Only meaningful for
    indecomposable m, where the vertex is unique up to conjugacy.
    """
    g = m.group
    p = m.field.p
    classes = g.p_subgroups_up_to_conjugacy(p)
    witnesses = []
    if g.order() % p or modules.is_projective(m):
        witnesses.append((1, True))
        return VertexCertificate(m, classes[0], witnesses)
    witnesses.append((1, False))
    for q in classes[1:]:
        ok = is_relatively_projective(m, q)
        witnesses.append((q.order(), ok))
        if ok:
            return VertexCertificate(m, q, witnesses)
    raise AssertionError("no vertex found; Sylow should always work")


def vertex(m):
    """A vertex of m, as one of the group's p-subgroup class
    representatives."""
    return vertex_certificate(m).vertex


def brauer_construction(m, q):
    """The Brauer construction M(Q) of a module with a permutation basis.

    The Q-fixed basis points span a complement-stable subspace mod the
    span of the nontrivial orbits; N_G(Q) permutes the fixed points, and
    M(Q) is returned as a module over the normalizer (over G itself when
    Q is trivial).
    """
    assert m.tags is not None, "module has no declared permutation basis"
    F = m.field
    g = m.group
    if q.order() == 1:
        return m
    n = g.normalizer(q).with_small_generators()
    fixed = list(range(m.dim))
    for u in q.generators:
        M = m.rep_of(u)
        fixed = [j for j in fixed if M[j, j] == 1]
    idx = {j: a for a, j in enumerate(fixed)}
    mats = []
    for s in n.generators:
        M = m.rep_of(s)
        out = np.zeros((len(fixed), len(fixed)), dtype=np.int16)
        for a, j in enumerate(fixed):
            col = np.nonzero(M[:, j])[0]
            assert len(col) == 1 and M[col[0], j] == 1, \
                "action is not by permutation matrices"
            out[idx[int(col[0])], a] = 1
        mats.append(out)
    return GModule(n, F, mats, name="brauer(%s)" % (m.name or "M"),
                   dim=len(fixed))


def green_correspondent(x, big, q, seed=0):
    """The Green correspondent in big of a module x over N_big(Q) with
    vertex Q: the unique summand of the induced module with vertex Q."""
    ind = x.induce(big)
    hits = []
    for s in modules.decompose(ind, seed):
        v = vertex(s.module)
        if v.order() == q.order() and big.are_conjugate_subgroups(v, q):
            hits.append(s)
    assert len(hits) == 1, "Green correspondent not unique (%d hits)" \
        % len(hits)
    assert hits[0].multiplicity == 1
    return hits[0].module


class Weight:
    """A weight: a p-subgroup Q together with a projective simple module of
    k[N_G(Q)/Q], carried as its inflation to N_G(Q)."""

    def __init__(self, q, normalizer, module, simple_dim):
        self.q = q
        self.normalizer = normalizer
        self.module = module          # GModule over the normalizer
        self.simple_dim = simple_dim

    def __repr__(self):
        return "Weight(|Q|=%d, dim=%d)" % (self.q.order(), self.simple_dim)


def weights(group, field, seed=0):
    """All weights of the group with Q nontrivial, one per class of pairs.

    Weights with trivial Q correspond exactly to the defect-zero blocks and
    belong to those blocks, so they never contribute to a positive-defect
    block count and are listed separately by defect_zero_weight_count.
    """
    p = field.p
    out = []
    for q in group.p_subgroups_up_to_conjugacy(p)[1:]:
        n = group.normalizer(q).with_small_generators()
        reps, images = n.coset_action(q)
        r = len(reps)
        if r == 1:
            # Q is self-normalizing: k[N/Q] = k and the trivial module is
            # the unique (projective simple) weight module
            one = np.eye(1, dtype=np.int16)
            inflated = GModule(n, field, [one] * len(n.generators),
                               name="weight module")
            out.append(Weight(q, n, inflated, 1))
            continue
        wgens = [Perm(images[s]) for s in range(len(n.generators))]
        wgroup = PermGroup(r, wgens)
        gaw = GroupAlgebra(wgroup, field)
        for c in gaw.blocks(seed=seed):
            if c.defect_group().order() != 1:
                continue
            rows, piv = c.rows()
            block_mod = gaw.left_module_on_rows(rows, piv)
            facs = meataxe.composition_factors(field, block_mod.mats,
                                               seed=seed)
            assert len(facs) == 1, "defect zero block is not homogeneous"
            simple_mats, _mult = facs[0]
            # the block module's matrices follow wgroup's (possibly
            # reduced) generator list; inflate generator by generator so
            # the module lines up with n's generators even when some map
            # to the identity of N/Q
            wmod = GModule(wgroup, field, simple_mats)
            inflated_mats = [wmod.rep_of(w) for w in wgens]
            inflated = GModule(n, field, inflated_mats,
                               name="weight module")
            out.append(Weight(q, n, inflated,
                              meataxe.module_dim(simple_mats)))
    return out


def defect_zero_weight_count(ga, seed=0):
    """Number of weights with trivial Q: the defect-zero blocks of kG."""
    return sum(1 for b in ga.blocks(seed=seed)
               if b.defect_group().order() == 1)


def block_of_weight(ga, weight, seed=0):
    """The block of kG a weight belongs to.

    The inflated simple lies in a block c of k[N_G(Q)]; the weight belongs
    to the block of G whose central character agrees with the transport of
    c's central character through the Brauer homomorphism (truncation of
    each G-class sum to its C_G(Q)-supported part).
    """
    F = ga.field
    q = weight.q
    n = weight.normalizer
    gan = GroupAlgebra(n, F)
    # locate the kN-block acting as identity on the weight module
    target = None
    for c in gan.blocks(seed=seed):
        act = np.zeros((weight.module.dim,) * 2, dtype=np.int16)
        for g in np.nonzero(c.evec)[0]:
            R = weight.module.rep_of(gan.elems[int(g)])
            act = F.add(act, F.mul(np.int16(c.evec[g]), R))
        if np.array_equal(act, np.eye(weight.module.dim, dtype=np.int16)):
            assert target is None
            target = c
        else:
            assert not act.any()
    assert target is not None
    lam_small = gan.central_character(target.coords)
    class_of_n, _lists_n = gan.conjugacy_classes()
    cent = ga.group.centralizer(q)
    cent_idx_in_n = [gan.idx[g.img] for g in cent.elements()]
    # transported character on the big classes
    _class_of, lists = ga.conjugacy_classes()
    big_class_sets = [set(int(i) for i in l) for l in lists]
    elem_index_big = {g.img: i for i, g in enumerate(ga.elems)}
    lam = []
    for a, cls in enumerate(big_class_sets):
        val = 0
        seen_nclasses = np.zeros(len(_lists_n), dtype=np.int64)
        for j in cent_idx_in_n:
            if elem_index_big[gan.elems[j].img] in cls:
                seen_nclasses[class_of_n[j]] += 1
        # the truncation is a 0/1 combination of N-class sums
        for nc in np.nonzero(seen_nclasses)[0]:
            assert seen_nclasses[nc] == len(_lists_n[nc]), \
                "truncated class sum is not N-stable"
            val = int(F.add(val, lam_small[int(nc)]))
        lam.append(val)
    lam = tuple(lam)
    hits = [b for b in ga.blocks(seed=seed) if b.central_character() == lam]
    assert len(hits) == 1, "weight matches %d blocks" % len(hits)
    return hits[0]


def weight_count_for_block(ga, block, seed=0):
    """w(B) for a positive-defect block (nontrivial-Q weights only)."""
    count = 0
    for w in weights(ga.group, ga.field, seed=seed):
        if block_of_weight(ga, w, seed=seed) is block:
            count += 1
    return count
