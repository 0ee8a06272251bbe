"""Block decomposition of group algebras and the modules attached to blocks.

The group algebra kG is handled through index tables rather than structure
constant tensors: elements of kG are coefficient vectors over the sorted
element list, and multiplication facts are encoded in the table
M1[g, h] = index(g^-1 h).  A row of vec[M1] is then the left translate
g * vec, so left ideals, fixed-point algebras and coinvariant quotients all
reduce to integer gathers followed by echelon calls.

Blocks are found as the primitive idempotents of the center, which is small
(one dimension per conjugacy class) even when kG itself is large.
"""

import numpy as np

from . import gfq
from . import meataxe
from . import polys
from .algebra import FinDimAlgebra
from .modules import GModule
from .permgrp import Perm

# past this order the n x n echelon work is only viable with the BLAS-backed
# prime-field path
GENERIC_FIELD_ORDER_LIMIT = 600


class GroupAlgebra:
    """kG for a materialized permutation group, with index-table products."""

    def __init__(self, group, field):
        self.group = group
        self.field = field
        self.elems = group.elements()
        self.n = len(self.elems)
        if field.e > 1 and self.n > GENERIC_FIELD_ORDER_LIMIT:
            raise ValueError(
                "group of order %d needs a prime field for block work"
                % self.n)
        self.idx = {g.img: i for i, g in enumerate(self.elems)}
        self._eltarr = np.array([g.img for g in self.elems], dtype=np.int32)
        self._itype = np.int16 if self.n < 2 ** 15 else np.int32
        self.M1 = self._build_m1()
        self._classes = None
        self._center = None
        self._blocks = None

    # -- index tables --

    def lmul_index(self, g):
        """arr with arr[h] = index(g * elems[h])."""
        gi = np.array(g.img, dtype=np.int32)
        imgs = gi[self._eltarr]  # row h is (g * elems[h]).img
        return self._lookup_rows(imgs)

    def rmul_index(self, g):
        """arr with arr[h] = index(elems[h] * g)."""
        gi = np.array(g.img, dtype=np.int32)
        imgs = self._eltarr[:, gi]
        return self._lookup_rows(imgs)

    def conj_index(self, g):
        """arr with arr[h] = index(g * elems[h] * g^-1)."""
        gi = np.array(g.img, dtype=np.int32)
        gii = np.array(g.inv().img, dtype=np.int32)
        imgs = gi[self._eltarr[:, gii]]
        return self._lookup_rows(imgs)

    def _lookup_rows(self, imgs):
        out = np.empty(self.n, dtype=self._itype)
        for h in range(self.n):
            out[h] = self.idx[tuple(int(x) for x in imgs[h])]
        return out

    def _build_m1(self):
        """M1[g, h] = index(elems[g]^-1 * elems[h]), built by BFS on rows:
        for g' = s * g the row is M1[g'] = M1[g][linv_s]."""
        n = self.n
        M1 = np.empty((n, n), dtype=self._itype)
        linv = [self.lmul_index(s.inv()) for s in self.group.generators]
        lmul = [self.lmul_index(s) for s in self.group.generators]
        e = self.idx[Perm.identity(self.group.degree).img]
        M1[e] = np.arange(n, dtype=self._itype)
        done = np.zeros(n, dtype=bool)
        done[e] = True
        frontier = [e]
        while frontier:
            nxt = []
            for g in frontier:
                for s in range(len(linv)):
                    g2 = int(lmul[s][g])
                    if not done[g2]:
                        M1[g2] = M1[g][linv[s]]
                        done[g2] = True
                        nxt.append(g2)
            frontier = nxt
        assert done.all()
        return M1

    def inv_index(self):
        """arr[g] = index of elems[g]^-1."""
        e = self.idx[Perm.identity(self.group.degree).img]
        return self.M1[:, e].copy()

    def convolve(self, x, y):
        """Group algebra product of two coefficient vectors (O(n^2))."""
        F = self.field
        out = np.zeros(self.n, dtype=np.int16)
        for g in np.nonzero(x)[0]:
            out = F.add(out, F.mul(np.int16(x[g]), y[self.M1[int(g)]]))
        return out

    def augmentation(self, x):
        return int(self.field.sum(np.asarray(x, dtype=np.int16)))

    # -- conjugacy classes and the center --

    def conjugacy_classes(self):
        """(class_of, class_lists): classes sorted by smallest member index,
        so the identity class comes first."""
        if self._classes is not None:
            return self._classes
        n = self.n
        conj = [self.conj_index(s) for s in self.group.generators]
        class_of = np.full(n, -1, dtype=np.int32)
        lists = []
        for start in range(n):
            if class_of[start] >= 0:
                continue
            c = len(lists)
            members = [start]
            class_of[start] = c
            qi = 0
            while qi < len(members):
                g = members[qi]
                qi += 1
                for arr in conj:
                    g2 = int(arr[g])
                    if class_of[g2] < 0:
                        class_of[g2] = c
                        members.append(g2)
            lists.append(np.array(sorted(members), dtype=np.int32))
        self._classes = (class_of, lists)
        return self._classes

    def center_algebra(self):
        """Z(kG) on the class-sum basis, as a FinDimAlgebra.

        The structure constant of C_c in C_a C_b counts pairs (x, y) with
        x in C_a, y in C_b, x y = z for one fixed z in C_c; equivalently it
        counts x in C_a with x^-1 z in C_b.
        """
        if self._center is not None:
            return self._center
        class_of, lists = self.conjugacy_classes()
        c = len(lists)
        mult = np.zeros((c, c, c), dtype=np.int16)
        p = self.field.p
        for a in range(c):
            rows = self.M1[lists[a]]
            for k in range(c):
                z = int(lists[k][0])
                counts = np.bincount(class_of[rows[:, z]], minlength=c)
                mult[a, :, k] = (counts % p).astype(np.int16)
        one = np.zeros(c, dtype=np.int16)
        one[0] = 1  # the identity class is a singleton and sorts first
        Z = FinDimAlgebra(self.field, mult, one)
        self._center = Z
        return Z

    def class_vector(self, coeffs):
        """Coefficient vector over group elements from class-sum coords."""
        class_of, _ = self.conjugacy_classes()
        return np.asarray(coeffs, dtype=np.int16)[class_of]

    # -- blocks --

    def blocks(self, seed=0):
        if self._blocks is None:
            Z = self.center_algebra()
            prims = Z.primitive_idempotents(seed=seed)
            out = []
            for coords in prims:
                out.append(Block(self, coords))
            # principal block first, rest by ascending smallest support index
            out.sort(key=lambda b: (not b.is_principal,
                                    int(np.nonzero(b.evec)[0][0])))
            self._blocks = out
        return self._blocks

    def ideal_rows(self, vec):
        """RREF basis of the left ideal kG*vec (rows are g*vec)."""
        T = np.asarray(vec, dtype=np.int16)[self.M1]
        return gfq.echelon(self.field, T)

    def left_module_on_rows(self, rows, piv):
        """GModule on a left-ideal row basis, acting through the generators."""
        mats = []
        for s in self.group.generators:
            linv = self.lmul_index(s.inv())
            img = rows[:, linv]       # rows of s * basis vectors
            mats.append(img[:, piv].T.copy())
        return GModule(self.group, self.field, mats)

    def right_translation_mats(self, rows, piv, elements):
        """Matrices of v -> v*u on the coordinates of a right-stable row
        basis, for each u in elements."""
        out = []
        for u in elements:
            rinv = self.rmul_index(u.inv())
            img = rows[:, rinv]
            coords = img[:, piv]
            back = self.field.matmul(coords, rows)
            assert np.array_equal(back, img), "row space not right-stable"
            out.append(coords.T.copy())
        return out

    def central_character(self, evec_coords):
        """For a block idempotent in class-sum coords: the scalar by which
        each class sum acts on the block, as a tuple of field codes."""
        Z = self.center_algebra()
        c = Z.dim
        F = self.field
        out = []
        for a in range(c):
            delta = np.zeros(c, dtype=np.int16)
            delta[a] = 1
            y = Z.multiply(delta, evec_coords)
            # minpoly of y on the corner Z e, cyclic with generator e
            mp = meataxe.vector_annihilator(F, Z.lmul_of(y), evec_coords)
            roots = set()
            for f, _m in polys.factor(F, mp):
                assert polys.degree(f) == 1, "central character not rational"
                roots.add(int(F.neg(np.int16(f[0]))))
            assert len(roots) == 1
            out.append(roots.pop())
        return tuple(out)


def _subgroup_key(h):
    return (h.order(), tuple(g.img for g in h.generators))


class Block:
    """A block of kG: the ideal generated by a primitive central idempotent."""

    def __init__(self, ga, coords):
        self.ga = ga
        self.coords = np.asarray(coords, dtype=np.int16)  # class-sum coords
        self.evec = ga.class_vector(self.coords)
        self.is_principal = ga.augmentation(self.evec) == 1
        self._rows = None
        self._dim = None
        self._defect = None
        self._char = None
        self._fpa = {}
        self._source = {}

    def rows(self):
        if self._rows is None:
            self._rows = self.ga.ideal_rows(self.evec)
        return self._rows

    @property
    def dim(self):
        if self._dim is None:
            self._dim = self.rows()[0].shape[0]
        return self._dim

    def central_character(self):
        if self._char is None:
            self._char = self.ga.central_character(self.coords)
        return self._char

    def brauer_quotient_nonzero(self, q):
        """Whether the image of the block idempotent under truncation to
        C_G(Q)-supported coordinates is nonzero."""
        cent = self.ga.group.centralizer(q)
        sup = [self.ga.idx[g.img] for g in cent.elements()]
        return bool(np.asarray(self.evec)[sup].any())

    def defect_group(self):
        """A maximal p-subgroup with nonzero Brauer quotient (unique class)."""
        if self._defect is None:
            classes = self.ga.group.p_subgroups_up_to_conjugacy(self.ga.field.p)
            best = None
            for q in classes:
                if self.brauer_quotient_nonzero(q):
                    if best is None or q.order() > best.order():
                        best = q
            self._defect = best.with_small_generators()
        return self._defect

    def module(self):
        """The block as a left kG-module."""
        rows, piv = self.rows()
        m = self.ga.left_module_on_rows(rows, piv)
        m.name = "block ideal"
        return m

    # -- fixed points under a p-group and the source idempotent --

    def fixed_point_algebra(self, p_sub):
        """B^P = e (kG)^P for a p-subgroup P, as (algebra, rows, pivots).

        Spanned by the P-conjugation orbit sums of the translates g*e; the
        structure constants are read off pivot coordinates with one gathered
        matrix product per pivot.
        """
        key = _subgroup_key(p_sub)
        if key in self._fpa:
            return self._fpa[key]
        ga = self.ga
        F = ga.field
        n = ga.n
        T = np.asarray(self.evec, dtype=np.int16)[ga.M1]  # row g is g*e
        orbit_of = np.full(n, -1, dtype=np.int32)
        conj = [ga.conj_index(s) for s in p_sub.generators]
        orbits = []
        for start in range(n):
            if orbit_of[start] >= 0:
                continue
            members = [start]
            orbit_of[start] = len(orbits)
            qi = 0
            while qi < len(members):
                g = members[qi]
                qi += 1
                for arr in conj:
                    g2 = int(arr[g])
                    if orbit_of[g2] < 0:
                        orbit_of[g2] = len(orbits)
                        members.append(g2)
            orbits.append(members)
        sums = np.zeros((len(orbits), n), dtype=np.int16)
        for o, members in enumerate(orbits):
            acc = T[members[0]]
            for g in members[1:]:
                acc = F.add(acc, T[g])
            sums[o] = acc
        rows, piv = gfq.echelon(F, sums)
        d = rows.shape[0]
        mult = np.zeros((d, d, d), dtype=np.int16)
        for k, pk in enumerate(piv):
            col = ga.M1[:, pk]
            Y = rows[:, col]  # Y[j, g] = r_j[g^-1 z_k]
            mult[:, :, k] = F.matmul(rows, Y.T)
        one = np.asarray(self.evec)[piv].astype(np.int16)
        alg = FinDimAlgebra(F, mult, one)
        self._fpa[key] = (alg, rows, piv)
        return self._fpa[key]

    def source_idempotent(self, p_sub, seed=0):
        """A primitive idempotent of B^P with nonzero Brauer quotient,
        as a kG coefficient vector (deterministic for a fixed seed)."""
        key = (_subgroup_key(p_sub), seed)
        if key in self._source:
            return self._source[key]
        ga = self.ga
        alg, rows, piv = self.fixed_point_algebra(p_sub)
        cent = ga.group.centralizer(p_sub)
        sup = np.array(sorted(ga.idx[g.img] for g in cent.elements()))
        for f in alg.primitive_idempotents(seed=seed):
            vec = ga.field.matmul(f[None, :], rows)[0]
            if vec[sup].any():
                self._source[key] = vec
                return vec
        raise AssertionError("no source idempotent found")

    # -- coinvariant modules --

    def _coinvariants_of_rows(self, rows, piv, subgroup):
        """(GModule, projection) for span(rows) / span{v*u - v : u in H}."""
        ga = self.ga
        F = ga.field
        elems = [u for u in subgroup.elements() if u.order() > 1]
        rmats = ga.right_translation_mats(rows, piv, elems)
        d = rows.shape[0]
        diffs = np.vstack([F.sub(R, np.eye(d, dtype=np.int16)).T
                           for R in rmats])
        W, wpiv = gfq.echelon(F, diffs)
        left = ga.left_module_on_rows(rows, piv)
        quo_mats, P = meataxe.quotient_by_submodule(F, left.mats, W, wpiv)
        quo = GModule(ga.group, F, quo_mats, dim=d - W.shape[0])
        return quo, P

    def source_permutation_module(self, p_sub, seed=0):
        """Bi tensored over kP with the trivial module, for the source
        idempotent i of B^P."""
        ivec = self.source_idempotent(p_sub, seed=seed)
        rows, piv = self.ga.ideal_rows(ivec)
        quo, _ = self._coinvariants_of_rows(rows, piv, p_sub)
        quo.name = "source permutation module"
        return quo

    def sylow_coinvariants_module(self, sylow):
        """B tensored over kS with the trivial module."""
        rows, piv = self.rows()
        quo, _ = self._coinvariants_of_rows(rows, piv, sylow)
        quo.name = "block Sylow coinvariants"
        return quo

    def block_sylow_module(self, sylow):
        """B tensor_kS k for a full Sylow p-subgroup S of G.

        The isomorphism class does not depend on which Sylow subgroup is
        passed (they are all conjugate), so a conjugate of the defect group
        always sits inside the chosen S."""
        p = self.ga.field.p
        order = self.ga.group.order()
        part = 1
        while order % p == 0:
            part *= p
            order //= p
        assert sylow.order() == part, "subgroup is not a Sylow p-subgroup"
        return self.sylow_coinvariants_module(sylow)

    def source_corner_rows(self, p_sub, seed=0):
        """(rows, pivots) spanning the corner iBi inside kG.

        Computed by multiplying the left ideal Bi by i on the left; the
        corner is stable under left and right translation by P since i is
        fixed under P-conjugation.
        """
        ga = self.ga
        F = ga.field
        ivec = self.source_idempotent(p_sub, seed=seed)
        rows, _piv = ga.ideal_rows(ivec)
        inv = ga.inv_index()
        # LI[m, h] = i[m h^-1]; then (i*x)[m] = sum_h LI[m, h] x[h]
        A = ga.M1[np.ix_(inv, inv)]        # A[h, m] = idx(h m^-1)
        LI = np.asarray(ivec, dtype=np.int16)[inv[A]].T
        corner = F.matmul(rows, LI.T)
        return gfq.echelon(F, corner)

    def source_orbit_count(self, p_sub, seed=0):
        """Number of P-P orbits on a P-P-stable basis of the corner iBi.

        For a p-permutation bimodule this equals the dimension of its
        two-sided P-coinvariants, which is what is computed here.
        """
        rows, piv = self.source_corner_rows(p_sub, seed=seed)
        return self.two_sided_coinvariant_dim(p_sub, rows_piv=(rows, piv))

    def is_nilpotent_hint(self):
        """Cheap sufficient condition for the block being nilpotent at its
        defect group P: N_G(P) = P * C_G(P)."""
        p_sub = self.defect_group()
        g = self.ga.group
        norm = g.normalizer(p_sub)
        cent = g.centralizer(p_sub)
        meet = len(p_sub.element_set() & cent.element_set())
        return norm.order() * meet == p_sub.order() * cent.order()

    def two_sided_coinvariant_dim(self, subgroup, rows_piv=None):
        """dim of k tensor_H B tensor_H k: the quotient of the block by all
        u*b - b and b*u - b.

        With rows_piv given, the same quotient of that H-H-stable subspace
        of kG instead of the whole block."""
        ga = self.ga
        F = ga.field
        rows, piv = self.rows() if rows_piv is None else rows_piv
        d = rows.shape[0]
        elems = [u for u in subgroup.elements() if u.order() > 1]
        stacks = []
        for R in ga.right_translation_mats(rows, piv, elems):
            stacks.append(F.sub(R, np.eye(d, dtype=np.int16)).T)
        for u in elems:
            linv = ga.lmul_index(u.inv())
            img = rows[:, linv]
            L = img[:, piv].T
            stacks.append(F.sub(L, np.eye(d, dtype=np.int16)).T)
        return d - gfq.rank(F, np.vstack(stacks))

    def number_of_simples(self, sylow, seed=0):
        """l(B): distinct composition factors of the Sylow coinvariants of B.

        Every simple module of the block is a quotient of B tensor_S k: a
        nonzero fixed point of S on a simple gives a surjection from it.
        """
        m = self.sylow_coinvariants_module(sylow)
        return len(meataxe.composition_factors(m.field, m.mats, seed=seed))

    def number_of_simples_algebra(self, seed=0):
        """l(B) through the block algebra itself; for small groups.

        Counts the central primitive idempotents of the semisimple quotient,
        which is the number of simple modules when the field is splitting."""
        alg = self.block_algebra_small()
        quo, _P, _lift = alg.semisimple_quotient(seed=seed)
        return len(quo.central_primitive_idempotents(seed=seed))

    def brauer_correspondent(self, p_sub, seed=0):
        """The block of k[N_G(P)] cut out by truncating the block idempotent
        to C_G(P)-support.

        Returns (small GroupAlgebra, correspondent Block).  Valid when the
        defect group is P: the truncated idempotent is then the correspondent
        block idempotent.
        """
        ga = self.ga
        norm = ga.group.normalizer(p_sub).with_small_generators()
        cent = ga.group.centralizer(p_sub)
        small = GroupAlgebra(norm, ga.field)
        br = np.zeros(small.n, dtype=np.int16)
        for g in cent.elements():
            br[small.idx[g.img]] = self.evec[ga.idx[g.img]]
        assert np.array_equal(small.convolve(br, br), br), \
            "Brauer quotient of the block idempotent is not idempotent"
        hits = []
        for c in small.blocks(seed=seed):
            if np.array_equal(small.convolve(c.evec, br), c.evec):
                hits.append(c)
        assert sum(b.dim for b in hits) > 0
        total = np.zeros(small.n, dtype=np.int16)
        for b in hits:
            total = small.field.add(total, b.evec)
        assert np.array_equal(total, br)
        assert len(hits) == 1, "correspondent is not a single block"
        return small, hits[0]

    def block_algebra_small(self):
        """The block as a FinDimAlgebra (small groups only)."""
        ga = self.ga
        F = ga.field
        rows, piv = self.rows()
        d = rows.shape[0]
        mult = np.zeros((d, d, d), dtype=np.int16)
        for k, pk in enumerate(piv):
            col = ga.M1[:, pk]
            Y = rows[:, col]
            mult[:, :, k] = F.matmul(rows, Y.T)
        one = np.asarray(self.evec)[piv].astype(np.int16)
        return FinDimAlgebra(F, mult, one)

    def __repr__(self):
        return "Block(dim=%d%s)" % (self.dim,
                                    ", principal" if self.is_principal
                                    else "")


def block_decomposition(group, field, seed=0):
    """The blocks of kG, principal first.  Each Block keeps a reference to
    the shared GroupAlgebra as .ga; defect groups and source idempotents
    are computed on demand and cached."""
    ga = GroupAlgebra(group, field)
    return ga.blocks(seed=seed)


def brauer_hom(ga, x, p_sub):
    """Brauer homomorphism at P applied to a P-conjugation-fixed element.

    Truncates the coefficient vector to its C_G(P)-supported part; the
    result is returned as (centralizer, vector) with the vector still on
    the kG basis but supported only on centralizer elements.  Restricted
    to (kG)^P this is an algebra homomorphism onto kC_G(P).
    """
    F = ga.field
    x = np.asarray(x, dtype=np.int16)
    for s in p_sub.generators:
        assert np.array_equal(x[ga.conj_index(s)], x), \
            "element is not fixed under P-conjugation"
    cent = ga.group.centralizer(p_sub).with_small_generators()
    out = np.zeros(ga.n, dtype=np.int16)
    for g in cent.elements():
        j = ga.idx[g.img]
        out[j] = x[j]
    return cent, out
