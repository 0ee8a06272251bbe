"""Exact dense linear algebra over finite fields GF(p^e) with p^e <= 256.

Field elements are integer codes 0..q-1.  For prime fields the code is the
residue itself.  For extension fields the element sum_i c_i * x^i (mod a fixed
monic modulus polynomial) gets the code sum_i c_i * p^i.  The modulus is the
lexicographically smallest monic primitive polynomial of the right degree, so
a given q always produces the same arithmetic.

Matrices are plain numpy int16 arrays of codes.  Prime-field matrix products
go through float64 BLAS (exact: entries stay far below 2**53), extension
fields multiply coefficient planes.  All row reduction is exact.
"""

import numpy as np

_FIELD_CACHE = {}


def _factorint(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _poly_mul_mod(a, b, mod, p):
    """Multiply coefficient tuples a, b modulo the monic poly mod, over GF(p)."""
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    e = len(mod) - 1
    for k in range(len(res) - 1, e - 1, -1):
        c = res[k]
        if c:
            res[k] = 0
            for j in range(e):
                res[k - e + j] = (res[k - e + j] - c * mod[j]) % p
    res = res[:e]
    return tuple(res + [0] * (e - len(res)))


def _is_irreducible(mod, p):
    """Rabin test on a monic coefficient tuple (c0,...,c_{e-1},1) over GF(p)."""
    e = len(mod) - 1
    x = tuple([0, 1] + [0] * (e - 2)) if e >= 2 else (0,)

    def frob(poly, times):
        for _ in range(times):
            acc = tuple([1] + [0] * (e - 1))
            base = poly
            k = p
            while k:
                if k & 1:
                    acc = _poly_mul_mod(acc, base, mod, p)
                base = _poly_mul_mod(base, base, mod, p)
                k >>= 1
            poly = acc
        return poly

    # x^(p^e) == x required
    if frob(x, e) != x:
        return False
    # no fixed points at proper prime-index subfields beyond linear factors
    for r in _factorint(e):
        y = frob(x, e // r)
        if y == x:
            return False
    return True


def _element_order(code_of_x, mul, q):
    n = q - 1
    o = 1
    acc = code_of_x
    while acc != 1:
        acc = mul[acc][code_of_x]
        o += 1
        if o > n:
            raise RuntimeError("broken field tables")
    return o


class GF:
    """Finite field GF(p^e) with vectorized arithmetic on numpy code arrays."""

    def __init__(self, p, e=1):
        if (p, e) in _FIELD_CACHE:
            raise RuntimeError("use GF.get")
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError("characteristic %d is not prime" % p)
        self.p = p
        self.e = e
        self.q = p ** e
        if self.q > 256:
            raise ValueError("field too large: q = %d > 256" % self.q)
        if e == 1:
            self.modulus = None
            inv = np.zeros(p, dtype=np.int16)
            for a in range(1, p):
                inv[a] = pow(a, p - 2, p)
            self._inv_table = inv
        else:
            self.modulus = self._find_modulus()
            self._build_tables()

    @staticmethod
    def get(p, e=1):
        key = (p, e)
        if key not in _FIELD_CACHE:
            _FIELD_CACHE[key] = GF(p, e)
        return _FIELD_CACHE[key]

    @staticmethod
    def parse(spec):
        """Parse 'p' or 'p^e' into a field."""
        if "^" in spec:
            p, e = spec.split("^")
            return GF.get(int(p), int(e))
        q = int(spec)
        fac = _factorint(q)
        if len(fac) != 1:
            raise ValueError("not a prime power: %s" % spec)
        (p, e), = fac.items()
        return GF.get(p, e)

    def __repr__(self):
        if self.e == 1:
            return "GF(%d)" % self.p
        return "GF(%d^%d)" % (self.p, self.e)

    @property
    def name(self):
        return "%d" % self.p if self.e == 1 else "%d^%d" % (self.p, self.e)

    def _find_modulus(self):
        p, e = self.p, self.e
        # scan monic polys by ascending code of the non-leading coefficients
        for code in range(1, p ** e):
            coeffs = []
            c = code
            for _ in range(e):
                coeffs.append(c % p)
                c //= p
            mod = tuple(coeffs + [1])
            if not _is_irreducible(mod, p):
                continue
            # primitivity: x must generate the unit group
            ok = True
            n = p ** e - 1
            x = tuple([0, 1] + [0] * (e - 2))
            for r in _factorint(n):
                acc = tuple([1] + [0] * (e - 1))
                base = x
                k = n // r
                while k:
                    if k & 1:
                        acc = _poly_mul_mod(acc, base, mod, p)
                    base = _poly_mul_mod(base, base, mod, p)
                    k >>= 1
                if acc == tuple([1] + [0] * (e - 1)):
                    ok = False
                    break
            if ok:
                return mod
        raise RuntimeError("no primitive polynomial found")

    def _decode(self, code):
        c = code
        out = []
        for _ in range(self.e):
            out.append(c % self.p)
            c //= self.p
        return tuple(out)

    def _encode(self, coeffs):
        code = 0
        for i in range(self.e - 1, -1, -1):
            code = code * self.p + coeffs[i]
        return code

    def _build_tables(self):
        p, e, q = self.p, self.e, self.q
        polys = [self._decode(c) for c in range(q)]
        add = np.zeros((q, q), dtype=np.int16)
        mul = np.zeros((q, q), dtype=np.int16)
        for a in range(q):
            pa = polys[a]
            for b in range(a, q):
                pb = polys[b]
                s = self._encode([(x + y) % p for x, y in zip(pa, pb)])
                add[a, b] = s
                add[b, a] = s
                m = self._encode(_poly_mul_mod(pa, pb, self.modulus, p))
                mul[a, b] = m
                mul[b, a] = m
        self._add_table = add
        self._mul_table = mul
        neg = np.zeros(q, dtype=np.int16)
        inv = np.zeros(q, dtype=np.int16)
        for a in range(q):
            neg[a] = self._encode([(-x) % p for x in polys[a]])
        for a in range(1, q):
            row = mul[a]
            inv[a] = int(np.nonzero(row == 1)[0][0])
        self._neg_table = neg
        self._inv_table = inv
        # x^t mod modulus for t < 2e-1, as coefficient rows (plane reduction)
        red = np.zeros((2 * e - 1, e), dtype=np.int16)
        xt = tuple([1] + [0] * (e - 1))
        x = tuple([0, 1] + [0] * (e - 2))
        for t in range(2 * e - 1):
            red[t] = xt
            xt = _poly_mul_mod(xt, x, self.modulus, p)
        self._red = red
        # sanity: x is a generator of the unit group
        assert _element_order(self._encode(x), mul.tolist(), q) == q - 1

    # ---- vectorized elementwise arithmetic on code arrays ----

    def array(self, data):
        a = np.asarray(data, dtype=np.int16)
        if self.e == 1:
            return a % self.p
        assert a.min() >= 0 and a.max() < self.q
        return a

    def add(self, a, b):
        if self.e == 1:
            return (np.asarray(a, dtype=np.int16) + b) % self.p
        return self._add_table[a, b]

    def neg(self, a):
        if self.e == 1:
            return (-np.asarray(a, dtype=np.int16)) % self.p
        return self._neg_table[a]

    def sub(self, a, b):
        if self.e == 1:
            return (np.asarray(a, dtype=np.int16) - b) % self.p
        return self._add_table[a, self._neg_table[b]]

    def mul(self, a, b):
        if self.e == 1:
            return (np.asarray(a, dtype=np.int64) * np.asarray(b, dtype=np.int64) % self.p).astype(np.int16)
        return self._mul_table[a, b]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("inverting zero in %r" % self)
        return self._inv_table[a]

    def pow_scalar(self, a, k):
        acc = 1
        base = int(a)
        while k:
            if k & 1:
                acc = int(self.mul(acc, base))
            base = int(self.mul(base, base))
            k >>= 1
        return acc

    def sum(self, a, axis=None):
        if self.e == 1:
            return (np.asarray(a, dtype=np.int64).sum(axis=axis) % self.p).astype(np.int16)
        # sum coefficient planes
        acc = 0
        arr = np.asarray(a, dtype=np.int64)
        enc = 0
        for d in range(self.e):
            plane = (arr // self.p ** d) % self.p
            enc = enc + (plane.sum(axis=axis) % self.p) * self.p ** d
        del acc
        return np.asarray(enc, dtype=np.int16)

    def matmul(self, A, B):
        A = np.asarray(A)
        B = np.asarray(B)
        if self.e == 1:
            return _matmul_prime(self.p, A, B)
        p, e = self.p, self.e
        planesA = [((A.astype(np.int64) // p ** d) % p).astype(np.float64) for d in range(e)]
        planesB = [((B.astype(np.int64) // p ** d) % p).astype(np.float64) for d in range(e)]
        poly = [None] * (2 * e - 1)
        for d1 in range(e):
            for d2 in range(e):
                prod = planesA[d1] @ planesB[d2]
                t = d1 + d2
                poly[t] = prod if poly[t] is None else poly[t] + prod
        out = np.zeros(poly[0].shape, dtype=np.int64)
        for j in range(e):
            plane = np.zeros(poly[0].shape, dtype=np.float64)
            for t in range(2 * e - 1):
                c = int(self._red[t, j])
                if c:
                    plane = plane + c * poly[t]
            out += (plane % p).astype(np.int64) * p ** j
        return out.astype(np.int16)

    def elements(self):
        return list(range(self.q))

    def frobenius(self, a):
        """a -> a^p, elementwise."""
        out = np.asarray(a, dtype=np.int16).copy()
        flat = out.ravel()
        for i, v in enumerate(flat):
            flat[i] = self.pow_scalar(int(v), self.p)
        return out

    def to_json(self):
        return self.name


def _matmul_prime(p, A, B):
    """Exact mod-p product via float64 BLAS; inner dim * (p-1)^2 << 2**53."""
    Af = (np.asarray(A, dtype=np.int64) % p).astype(np.float64)
    Bf = (np.asarray(B, dtype=np.int64) % p).astype(np.float64)
    k = Af.shape[-1]
    assert k * (p - 1) ** 2 < 2 ** 53
    return ((Af @ Bf) % p).astype(np.int16)


# ---------------------------------------------------------------------------
# row reduction


def echelon(field, A, transform=False):
    """Reduced row echelon form of A over field.

    Returns (R, pivots) where R has one row per pivot, pivot columns carry an
    identity pattern, and pivots is the sorted list of pivot column indices.
    With transform=True also returns T with T @ A == R (rows of R as explicit
    combinations of rows of A).
    """
    A = np.asarray(A, dtype=np.int16)
    if A.ndim != 2:
        raise ValueError("need a 2d array")
    nr, nc = A.shape
    if transform:
        aug = np.zeros((nr, nc + nr), dtype=np.int16)
        aug[:, :nc] = A
        aug[np.arange(nr), nc + np.arange(nr)] = 1
        R, piv = _echelon_core(field, aug, limit=nc)
        return R[:, :nc], piv, R[:, nc:]
    R, piv = _echelon_core(field, A, limit=nc)
    return R, piv


def _echelon_core(field, A, limit):
    if field.e == 1 and A.shape[0] * A.shape[1] > 4096:
        return _echelon_prime_blocked(field.p, A, limit)
    return _echelon_generic(field, A, limit)


def _echelon_generic(field, A, limit):
    F = field
    A = A.copy()
    nr, nc = A.shape
    pivots = []
    prow = 0
    for c in range(limit):
        if prow >= nr:
            break
        col = A[prow:, c]
        nz = np.nonzero(col)[0]
        if len(nz) == 0:
            continue
        r = prow + int(nz[0])
        if r != prow:
            A[[prow, r]] = A[[r, prow]]
        inv = F.inv(int(A[prow, c]))
        A[prow] = F.mul(A[prow], inv)
        f = A[:, c].copy()
        f[prow] = 0
        mask = f != 0
        if mask.any():
            upd = F.mul(f[mask][:, None], A[prow][None, :])
            A[mask] = F.sub(A[mask], upd)
        pivots.append(c)
        prow += 1
    return A[:prow], pivots


def _echelon_prime_blocked(p, A, limit):
    """RREF mod prime p with BLAS bulk reduction against accumulated pivots."""
    nr, nc = A.shape
    Rf = np.zeros((0, nc), dtype=np.float64)
    pivots = []
    chunk = 64
    for i0 in range(0, nr, chunk):
        C = (A[i0:i0 + chunk].astype(np.int64) % p).astype(np.float64)
        if pivots:
            C = (C - C[:, pivots] @ Rf) % p
        newidx = []
        newpivs = []
        taken = np.zeros(C.shape[0], dtype=bool)
        for c in range(limit):
            col = C[:, c]
            nz = np.nonzero((col != 0) & ~taken)[0]
            if len(nz) == 0:
                continue
            r = int(nz[0])
            taken[r] = True
            inv = pow(int(col[r]), p - 2, p)
            C[r] = (C[r] * inv) % p
            f = C[:, c].copy()
            f[r] = 0
            live = f != 0
            if live.any():
                C[live] = (C[live] - np.outer(f[live], C[r])) % p
            newidx.append(r)
            newpivs.append(c)
            if len(newidx) == C.shape[0]:
                break
        if newidx:
            N = C[newidx]
            if pivots:
                f = Rf[:, newpivs]
                if np.any(f):
                    Rf = (Rf - f @ N) % p
            Rf = np.vstack([Rf, N])
            pivots.extend(newpivs)
    order = np.argsort(pivots, kind="stable")
    pivots = [pivots[i] for i in order]
    Rf = Rf[order]
    return Rf.astype(np.int16), pivots


def rank(field, A):
    A = np.asarray(A, dtype=np.int16)
    if A.size == 0:
        return 0
    _, piv = echelon(field, A)
    return len(piv)


def nullspace(field, A):
    """Rows form a basis of {x : A @ x == 0}."""
    A = np.asarray(A, dtype=np.int16)
    nr, nc = A.shape
    R, piv = echelon(field, A)
    pivset = set(piv)
    free = [c for c in range(nc) if c not in pivset]
    out = np.zeros((len(free), nc), dtype=np.int16)
    for i, c in enumerate(free):
        out[i, c] = 1
        if piv:
            out[i, piv] = field.neg(R[:, c])
    return out


def solve(field, A, B):
    """Solve A @ X = B; returns X or None if inconsistent.

    Picks the solution with free variables zero.  B may be 1d or 2d.
    """
    A = np.asarray(A, dtype=np.int16)
    B = np.asarray(B, dtype=np.int16)
    vec = B.ndim == 1
    if vec:
        B = B[:, None]
    nr, nc = A.shape
    aug = np.concatenate([A, B], axis=1)
    R, piv = _echelon_core(field, aug, limit=nc)
    X = np.zeros((nc, B.shape[1]), dtype=np.int16)
    for i, c in enumerate(piv):
        X[c] = R[i, nc:]
    # consistency: rows of R with pivot beyond nc would witness 0 = nonzero,
    # but _echelon_core(limit=nc) drops them, so verify directly
    if not np.array_equal(field.matmul(A, X), B % field.p if field.e == 1 else B):
        return None
    return X[:, 0] if vec else X


def inverse(field, A):
    A = np.asarray(A, dtype=np.int16)
    n = A.shape[0]
    assert A.shape == (n, n)
    X = solve(field, A, np.eye(n, dtype=np.int16))
    if X is None:
        raise ValueError("matrix is singular")
    return X


def spin_basis(field, mats, seeds):
    """Closure of the row span of seeds under left action by mats.

    seeds: (k, n) array of row vectors.  Returns (basis, pivots, tree) where
    basis rows are in echelon form as produced incrementally, pivots are their
    leading columns, and tree[i] describes how row i arose: ('seed', j) or
    ('mul', g, parent_row_index).  The spanned subspace is mats-invariant.
    """
    seeds = np.atleast_2d(np.asarray(seeds, dtype=np.int16))
    n = seeds.shape[1]
    basis = []
    pivots = []
    tree = []
    raw = []  # unreduced vector for each accepted basis row (for hom trees)

    def reduce_vec(v):
        v = v.copy()
        for brow, bp in zip(basis, pivots):
            c = v[bp]
            if c:
                v = field.sub(v, field.mul(np.int16(c), brow))
        return v

    def try_add(v, tag):
        red = reduce_vec(v)
        nz = np.nonzero(red)[0]
        if len(nz) == 0:
            return False
        c = int(nz[0])
        red = field.mul(red, field.inv(int(red[c])))
        basis.append(red)
        pivots.append(c)
        raw.append(v)
        tree.append(tag)
        return True

    queue = []
    for j in range(seeds.shape[0]):
        if try_add(seeds[j], ("seed", j)):
            queue.append(len(basis) - 1)
    qi = 0
    while qi < len(queue):
        i = queue[qi]
        qi += 1
        v = raw[i]
        for g, M in enumerate(mats):
            w = field.matmul(M, v[:, None])[:, 0]
            if try_add(w, ("mul", g, i)):
                queue.append(len(basis) - 1)
    if basis:
        B = np.array(basis, dtype=np.int16)
    else:
        B = np.zeros((0, n), dtype=np.int16)
    return B, pivots, tree


class FqMatrix:
    """Thin matrix wrapper tying an int16 code array to its field."""

    def __init__(self, field, data):
        self.field = field
        self.a = field.array(data)
        assert self.a.ndim == 2

    @classmethod
    def identity(cls, field, n):
        return cls(field, np.eye(n, dtype=np.int16))

    @classmethod
    def zeros(cls, field, nr, nc):
        return cls(field, np.zeros((nr, nc), dtype=np.int16))

    @property
    def shape(self):
        return self.a.shape

    def __matmul__(self, other):
        assert self.field is other.field
        return FqMatrix(self.field, self.field.matmul(self.a, other.a))

    def __add__(self, other):
        return FqMatrix(self.field, self.field.add(self.a, other.a))

    def __sub__(self, other):
        return FqMatrix(self.field, self.field.sub(self.a, other.a))

    def __eq__(self, other):
        return self.field is other.field and np.array_equal(self.a, other.a)

    def rref(self):
        R, piv = echelon(self.field, self.a)
        return FqMatrix(self.field, R), piv, len(piv)

    def rank(self):
        return rank(self.field, self.a)

    def nullspace_basis(self):
        return FqMatrix(self.field, nullspace(self.field, self.a))

    def solve(self, b):
        x = solve(self.field, self.a, b.a if isinstance(b, FqMatrix) else b)
        return None if x is None else FqMatrix(self.field, np.atleast_2d(x))

    def inverse(self):
        return FqMatrix(self.field, inverse(self.field, self.a))

    def transpose(self):
        return FqMatrix(self.field, self.a.T.copy())

    def __repr__(self):
        return "FqMatrix(%r,\n%r)" % (self.field, self.a)
