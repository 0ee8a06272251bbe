"""Chop, spin and hom machinery for modules given by action matrices.

A module here is just (field, mats): a list of square int16 code matrices
acting on column vectors.  Whether the matrices come from group generators or
from an algebra basis makes no difference to anything below.  Submodules are
stored as row-matrices in reduced echelon form so that coordinates can be
read off pivot columns.

Irreducibility is certified with Norton's test: for theta in the enveloping
algebra and an irreducible factor f of its minimal polynomial on a vector,
with nullity(f(theta)) == deg f, the module is irreducible as soon as every
kernel vector spins to the whole space and one left-kernel vector spins the
transposed module.  Factors with larger nullity still witness reducibility
when a kernel vector spins to a proper submodule; otherwise we retry with a
fresh theta.
"""

import numpy as np

from . import gfq
from . import polys


def module_dim(mats):
    return mats[0].shape[0] if mats else 0


def random_element(field, mats, rng):
    """A pseudo-random element of the enveloping algebra (plus identity)."""
    n = module_dim(mats)
    acc = np.zeros((n, n), dtype=np.int16)
    terms = int(rng.integers(2, 5))
    for _ in range(terms):
        w = mats[int(rng.integers(0, len(mats)))]
        for _ in range(int(rng.integers(0, 3))):
            w = field.matmul(w, mats[int(rng.integers(0, len(mats)))])
        c = int(rng.integers(0, field.q))
        acc = field.add(acc, field.mul(np.int16(c), w))
    c = int(rng.integers(0, field.q))
    if c:
        acc = field.add(acc, field.mul(np.int16(c),
                                       np.eye(n, dtype=np.int16)))
    return acc


def vector_annihilator(field, M, v):
    """Monic minimal polynomial of M on the vector v (a column)."""
    n = M.shape[0]
    rows = [v.astype(np.int16)]
    cur = v.astype(np.int16)
    # incremental echelon with coefficient tracking
    basis = []
    pivots = []
    coeffs = []  # row i of krylov stack in terms of v, Mv, ...
    k = 0
    while True:
        red = rows[-1].copy()
        co = np.zeros(n + 1, dtype=np.int16)
        co[k] = 1
        for brow, bp, bco in zip(basis, pivots, coeffs):
            c = red[bp]
            if c:
                red = field.sub(red, field.mul(np.int16(c), brow))
                co = field.sub(co, field.mul(np.int16(c), bco))
        nz = np.nonzero(red)[0]
        if len(nz) == 0:
            # co encodes sum co[i] M^i v = 0 with co[k] == 1
            return polys.monic(field, polys.normalize(co))
        piv = int(nz[0])
        inv = field.inv(int(red[piv]))
        basis.append(field.mul(np.int16(inv), red))
        coeffs.append(field.mul(np.int16(inv), co))
        pivots.append(piv)
        cur = field.matmul(M, cur[:, None])[:, 0]
        rows.append(cur)
        k += 1


def eval_poly_at_matrix(field, f, M):
    n = M.shape[0]
    acc = np.zeros((n, n), dtype=np.int16)
    for c in f[::-1]:
        acc = field.matmul(acc, M)
        if c:
            acc = field.add(acc, field.mul(np.int16(c),
                                           np.eye(n, dtype=np.int16)))
    return acc


def rref_rows(field, rows):
    R, piv = gfq.echelon(field, rows)
    return R, piv


def spin_rref(field, mats, seeds):
    """Invariant span of seed row-vectors, returned in reduced echelon form."""
    B, _, _ = gfq.spin_basis(field, mats, seeds)
    return rref_rows(field, B)


def split_once(field, mats, rng, tries=60):
    """Return ('split', basis_rows, pivots) for a proper nonzero submodule,
    or ('irreducible', None, None) with a Norton certificate."""
    n = module_dim(mats)
    if n == 1:
        return ("irreducible", None, None)
    matsT = [M.T.copy() for M in mats]
    for t in range(tries):
        if t in (10, 30, 50):
            # fallback for homogeneous modules, where no factor ever has
            # nullity deg f: a singular nonzero endomorphism has an invariant
            # kernel, and one exists whenever such a module is reducible
            found = _singular_endo_split(field, mats, rng)
            if found is not None:
                return found
        theta = random_element(field, mats, rng)
        v = np.array(rng.integers(0, field.q, n), dtype=np.int16)
        if not v.any():
            continue
        g = vector_annihilator(field, theta, v)
        if polys.degree(g) < 1:
            continue
        for f, _m in polys.factor(field, g, seed=t):
            N = eval_poly_at_matrix(field, f, theta)
            ker = gfq.nullspace(field, N)
            if ker.shape[0] == 0:
                continue
            full = True
            for w in ker:
                B, piv = spin_rref(field, mats, w[None, :])
                if B.shape[0] < n:
                    return ("split", B, piv)
            if ker.shape[0] != polys.degree(f):
                continue  # inconclusive factor
            lker = gfq.nullspace(field, N.T)
            w = lker[0]
            B, _ = spin_rref(field, matsT, w[None, :])
            if B.shape[0] == n:
                return ("irreducible", None, None)
            sub = gfq.nullspace(field, B)
            R, piv = rref_rows(field, sub)
            assert 0 < R.shape[0] < n
            return ("split", R, piv)
    raise RuntimeError("meataxe made no progress after %d tries" % tries)


def _singular_endo_split(field, mats, rng):
    n = module_dim(mats)
    E = hom_space(field, mats, mats)
    if len(E) <= 1:
        return None
    cands = list(E)
    for _ in range(200):
        co = rng.integers(0, field.q, len(E))
        acc = np.zeros((n, n), dtype=np.int16)
        for c, X in zip(co, E):
            if c:
                acc = field.add(acc, field.mul(np.int16(int(c)), X))
        cands.append(acc)
    for X in cands:
        ker = gfq.nullspace(field, X)
        if 0 < ker.shape[0] < n:
            return ("split", *rref_rows(field, ker))
    return None


def restrict_to_submodule(field, mats, basis, pivots):
    """Action matrices on a submodule given by RREF row basis."""
    out = []
    for M in mats:
        img = field.matmul(basis, M.T)  # rows: images of basis vectors
        coords = img[:, pivots]  # valid because basis is reduced
        # sanity in debug: basis rows must be invariant
        out.append(coords.T.copy())
    return out


def quotient_by_submodule(field, mats, basis, pivots):
    """Action matrices on the quotient; also returns the projection map
    (rows: images of ambient basis vectors in quotient coordinates)."""
    n = mats[0].shape[0] if mats else basis.shape[1]
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    # proj: v -> v[free] - v[pivots] @ basis[:, free]
    P = np.zeros((len(free), n), dtype=np.int16)
    for i, c in enumerate(free):
        P[i, c] = 1
    if pivots:
        P[:, pivots] = field.neg(basis[:, free].T)
    out = []
    for M in mats:
        out.append(field.matmul(P, M[:, free]))
    return out, P


def hom_space(field, mats_m, mats_n, seeds=None):
    """Basis of intertwiners X with X @ A_g == B_g @ X, as a list of
    (dim_n x dim_m) matrices.

    Spins the source module from few generating vectors; the unknowns are
    only the images of those generators, so the linear system stays small
    even when dim_m * dim_n is large.
    """
    dm = module_dim(mats_m)
    dn = module_dim(mats_n)
    if dm == 0 or dn == 0:
        return []
    # greedy generating set of the source module
    raws = []        # raw spin vectors, as columns of the matrix R below
    tags = []        # ('seed', s) or ('mul', g, parent)
    basis = []       # echelonized rows for span testing
    pivots = []
    tree_edges = {}

    def reduce_row(v):
        v = v.copy()
        for brow, bp in zip(basis, pivots):
            c = v[bp]
            if c:
                v = field.sub(v, field.mul(np.int16(c), brow))
        return v

    def try_add(v, tag):
        red = reduce_row(v)
        nz = np.nonzero(red)[0]
        if len(nz) == 0:
            return False
        piv = int(nz[0])
        basis.append(field.mul(np.int16(field.inv(int(red[piv]))), red))
        pivots.append(piv)
        raws.append(v)
        tags.append(tag)
        return True

    nseeds = 0
    seed_list = list(seeds) if seeds is not None else []
    sidx = 0
    while len(raws) < dm:
        if sidx < len(seed_list):
            cand = np.asarray(seed_list[sidx], dtype=np.int16)
            sidx += 1
        else:
            free = [c for c in range(dm) if c not in set(pivots)]
            cand = np.zeros(dm, dtype=np.int16)
            cand[free[0]] = 1
        if not try_add(cand, ("seed", nseeds)):
            continue
        nseeds += 1
        qi = len(raws) - 1
        queue = [qi]
        while queue:
            i = queue.pop(0)
            for g, M in enumerate(mats_m):
                w = field.matmul(M, raws[i][:, None])[:, 0]
                if try_add(w, ("mul", g, i)):
                    j = len(raws) - 1
                    tree_edges[(g, i)] = j
                    queue.append(j)

    R = np.array(raws, dtype=np.int16).T  # columns are the spin vectors
    Rinv = gfq.inverse(field, R)
    U = nseeds * dn
    # Phi_j: dn x U with X v_j = Phi_j u
    Phi = [None] * dm
    for j, tag in enumerate(tags):
        if tag[0] == "seed":
            block = np.zeros((dn, U), dtype=np.int16)
            s = tag[1]
            block[:, s * dn:(s + 1) * dn] = np.eye(dn, dtype=np.int16)
            Phi[j] = block
        else:
            _, g, parent = tag
            Phi[j] = field.matmul(mats_n[g], Phi[parent])
    con = []
    for g, M in enumerate(mats_m):
        img = field.matmul(Rinv, field.matmul(M, R))  # coords of A_g v_j
        for j in range(dm):
            if (g, j) in tree_edges:
                continue
            c = img[:, j]
            block = field.matmul(mats_n[g], Phi[j])
            for k in np.nonzero(c)[0]:
                block = field.sub(block,
                                  field.mul(np.int16(c[k]), Phi[int(k)]))
            con.append(block)
    if con:
        big = np.vstack(con)
        sol = gfq.nullspace(field, big)
    else:
        sol = np.eye(U, dtype=np.int16)
    out = []
    RinvT = Rinv
    for u in sol:
        cols = [field.matmul(Phi[j], u[:, None])[:, 0] for j in range(dm)]
        P = np.array(cols, dtype=np.int16).T  # X @ R
        X = field.matmul(P, RinvT)
        out.append(X)
    return out


def fixed_points(field, mats):
    """Row basis of the common 1-eigenspace of all mats."""
    n = module_dim(mats)
    stacks = [field.sub(M, np.eye(n, dtype=np.int16)) for M in mats]
    if not stacks:
        return np.eye(n, dtype=np.int16)
    return gfq.nullspace(field, np.vstack(stacks))


def is_isomorphic_simple(field, mats_m, mats_n):
    if module_dim(mats_m) != module_dim(mats_n):
        return False
    return len(hom_space(field, mats_m, mats_n)) > 0


def iso_of_indecomposables(field, mats_m, mats_n):
    """For indecomposable modules: an isomorphism matrix or None.

    Valid because End(M) is local: if M and N are isomorphic then some
    product of hom-basis elements in the two directions falls outside the
    radical of End(M), i.e. is invertible.
    """
    dm, dn = module_dim(mats_m), module_dim(mats_n)
    if dm != dn:
        return None
    H = hom_space(field, mats_m, mats_n)
    if not H:
        return None
    Hback = hom_space(field, mats_n, mats_m)
    for h in H:
        for hb in Hback:
            prod = field.matmul(h, hb)  # N -> N
            if gfq.rank(field, prod) == dn:
                return h
    return None


def composition_factors(field, mats, seed=0):
    """List of (simple_mats, multiplicity), grouped up to isomorphism,
    sorted by (dim, first occurrence)."""
    rng = np.random.default_rng(seed)
    simples = []

    def chop(mats_cur):
        n = module_dim(mats_cur)
        if n == 0:
            return
        kind, B, piv = split_once(field, mats_cur, rng)
        if kind == "irreducible":
            for i, (s, cnt) in enumerate(simples):
                if is_isomorphic_simple(field, s, mats_cur):
                    simples[i] = (s, cnt + 1)
                    return
            simples.append((mats_cur, 1))
            return
        chop(restrict_to_submodule(field, mats_cur, B, piv))
        quo, _ = quotient_by_submodule(field, mats_cur, B, piv)
        chop(quo)

    chop(mats)
    simples.sort(key=lambda t: module_dim(t[0]))
    return simples


def module_radical(field, mats, seed=0, simples=None):
    """RREF row basis of rad M: the joint kernel of all homs to simples."""
    n = module_dim(mats)
    if simples is None:
        simples = [s for s, _ in composition_factors(field, mats, seed)]
    rows = []
    for s in simples:
        for X in hom_space(field, mats, s):
            rows.append(X)
    if not rows:
        return np.zeros((0, n), dtype=np.int16), []
    R, piv = rref_rows(field, gfq.nullspace(field, np.vstack(rows)))
    return R, piv


def module_socle(field, mats, seed=0, simples=None):
    """RREF row basis of soc M: the sum of images of all homs from simples."""
    n = module_dim(mats)
    if simples is None:
        simples = [s for s, _ in composition_factors(field, mats, seed)]
    rows = []
    for s in simples:
        for X in hom_space(field, s, mats):
            rows.append(X.T)
    if not rows:
        return np.zeros((0, n), dtype=np.int16), []
    return rref_rows(field, np.vstack(rows))


def radical_series(field, mats, seed=0):
    """Descending chain M > rad M > rad^2 M > ... > 0 as row bases in the
    coordinates of M, plus the Loewy layer factor lists.

    Returns (layers, chain) where layers[i] is the list of
    (simple_mats, multiplicity) in rad^i M / rad^(i+1) M.
    """
    n = module_dim(mats)
    simples = [s for s, _ in composition_factors(field, mats, seed)]
    chain = [np.eye(n, dtype=np.int16)]
    layers = []
    cur_mats = mats
    cur_basis = np.eye(n, dtype=np.int16)
    while module_dim(cur_mats) > 0:
        R, piv = module_radical(field, cur_mats, seed)
        quo, _ = quotient_by_submodule(field, cur_mats, R, piv)
        layers.append(composition_factors(field, quo, seed))
        if R.shape[0] == 0:
            break
        cur_basis = rref_rows(field, field.matmul(R, cur_basis))[0]
        chain.append(cur_basis)
        cur_mats = restrict_to_submodule(field, cur_mats, R, piv)
    del simples
    return layers, chain
