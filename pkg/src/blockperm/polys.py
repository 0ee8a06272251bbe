"""Univariate polynomial arithmetic and factorization over GF(p^e).

Polynomials are numpy int16 arrays of field codes, index = degree, with no
trailing zeros (the zero polynomial is the empty array).  Factorization runs
squarefree decomposition, then distinct-degree, then equal-degree splitting,
so callers that only want a smallest-degree irreducible factor can stop
early via smallest_irreducible_factor.
"""

import numpy as np


def normalize(f):
    f = np.asarray(f, dtype=np.int16)
    nz = np.nonzero(f)[0]
    if len(nz) == 0:
        return np.zeros(0, dtype=np.int16)
    return f[: int(nz[-1]) + 1].copy()


def degree(f):
    return len(f) - 1


def is_zero(f):
    return len(f) == 0


def constant(field, c):
    return normalize(np.array([c], dtype=np.int16))


def x_poly():
    return np.array([0, 1], dtype=np.int16)


def add(field, f, g):
    n = max(len(f), len(g))
    a = np.zeros(n, dtype=np.int16)
    b = np.zeros(n, dtype=np.int16)
    a[: len(f)] = f
    b[: len(g)] = g
    return normalize(field.add(a, b))


def sub(field, f, g):
    n = max(len(f), len(g))
    a = np.zeros(n, dtype=np.int16)
    b = np.zeros(n, dtype=np.int16)
    a[: len(f)] = f
    b[: len(g)] = g
    return normalize(field.sub(a, b))


def scale(field, f, c):
    return normalize(field.mul(np.asarray(f, dtype=np.int16), np.int16(c)))


def mul(field, f, g):
    if is_zero(f) or is_zero(g):
        return np.zeros(0, dtype=np.int16)
    if field.e == 1:
        out = np.convolve(np.asarray(f, dtype=np.int64),
                          np.asarray(g, dtype=np.int64)) % field.p
        return normalize(out.astype(np.int16))
    out = np.zeros(len(f) + len(g) - 1, dtype=np.int16)
    for i, c in enumerate(f):
        if c:
            out[i:i + len(g)] = field.add(out[i:i + len(g)],
                                          field.mul(np.int16(c), g))
    return normalize(out)


def divmod_poly(field, f, g):
    if is_zero(g):
        raise ZeroDivisionError("polynomial division by zero")
    f = normalize(f)
    g = normalize(g)
    if len(f) < len(g):
        return np.zeros(0, dtype=np.int16), f
    r = f.copy()
    q = np.zeros(len(f) - len(g) + 1, dtype=np.int16)
    ginv = field.inv(int(g[-1]))
    dg = len(g) - 1
    for i in range(len(f) - 1, dg - 1, -1):
        c = r[i]
        if c:
            factor = field.mul(np.int16(c), np.int16(ginv))
            q[i - dg] = factor
            r[i - dg:i + 1] = field.sub(r[i - dg:i + 1],
                                        field.mul(np.int16(factor), g))
    return normalize(q), normalize(r)


def mod(field, f, g):
    return divmod_poly(field, f, g)[1]


def monic(field, f):
    f = normalize(f)
    if is_zero(f):
        return f
    return scale(field, f, field.inv(int(f[-1])))


def gcd(field, f, g):
    f, g = normalize(f), normalize(g)
    while not is_zero(g):
        f, g = g, mod(field, f, g)
    return monic(field, f)


def pow_mod(field, base, k, modulus):
    acc = np.array([1], dtype=np.int16)
    base = mod(field, base, modulus)
    while k:
        if k & 1:
            acc = mod(field, mul(field, acc, base), modulus)
        base = mod(field, mul(field, base, base), modulus)
        k >>= 1
    return acc


def derivative(field, f):
    if len(f) <= 1:
        return np.zeros(0, dtype=np.int16)
    degs = np.arange(1, len(f), dtype=np.int16)
    if field.e == 1:
        return normalize((f[1:].astype(np.int64) * degs) % field.p)
    coeff = np.array([d % field.p for d in range(1, len(f))], dtype=np.int16)
    return normalize(field.mul(f[1:], coeff))


def eval_at(field, f, c):
    acc = 0
    for a in f[::-1]:
        acc = int(field.add(int(field.mul(acc, c)), int(a)))
    return acc


def _pth_root_poly(field, f):
    """For f with zero derivative, f(x) = g(x^p); return the p-th root of g's
    coefficients reassembled, i.e. h with h(x)^p = f(x)."""
    p = field.p
    coeffs = f[::p]
    # c -> c^(q/p) is the inverse of Frobenius
    k = field.q // p
    out = np.array([field.pow_scalar(int(c), k) for c in coeffs],
                   dtype=np.int16)
    return normalize(out)


def squarefree_decomposition(field, f):
    """List of (g_i, i) with f = prod g_i^i (up to the leading unit), g_i
    squarefree and pairwise coprime."""
    f = monic(field, f)
    out = {}

    def accumulate(g, mult):
        g = monic(field, g)
        if degree(g) > 0:
            out[mult] = mul(field, out[mult], g) if mult in out else g

    def walk(f, mult):
        if degree(f) < 1:
            return
        d = derivative(field, f)
        if is_zero(d):
            walk(_pth_root_poly(field, f), mult * field.p)
            return
        c = gcd(field, f, d)
        w = divmod_poly(field, f, c)[0]
        i = 1
        while degree(w) > 0:
            y = gcd(field, w, c)
            accumulate(divmod_poly(field, w, y)[0], mult * i)
            w = y
            c = divmod_poly(field, c, y)[0]
            i += 1
        walk(c, mult)  # leftover is a p-th power

    walk(f, 1)
    return sorted(((g, m) for m, g in out.items()), key=lambda t: t[1])


def distinct_degree_factorization(field, f):
    """For squarefree monic f: list of (product_of_degree_d_factors, d)."""
    q = field.q
    out = []
    x = x_poly()
    h = x.copy()
    d = 0
    rest = f
    while degree(rest) > 2 * d:
        d += 1
        h = pow_mod(field, h, q, rest)
        g = gcd(field, rest, sub(field, h, x))
        if degree(g) > 0:
            out.append((g, d))
            rest = divmod_poly(field, rest, g)[0]
            h = mod(field, h, rest)
    if degree(rest) > 0:
        out.append((rest, degree(rest)))
    return out


def equal_degree_split(field, f, d, rng):
    """Split squarefree monic f, all of whose irreducible factors have degree
    d, into its irreducible factors (Cantor-Zassenhaus)."""
    n = degree(f)
    if n == d:
        return [f]
    q = field.q
    while True:
        r = np.array([int(rng.integers(0, q)) for _ in range(n)],
                     dtype=np.int16)
        r = normalize(r)
        if degree(r) < 1:
            continue
        g = gcd(field, f, r)
        if 0 < degree(g) < n:
            pass
        elif field.p == 2:
            # trace map over GF(2^(e*d))
            t = np.zeros(0, dtype=np.int16)
            acc = mod(field, r, f)
            for _ in range(field.e * d):
                t = add(field, t, acc)
                acc = mod(field, mul(field, acc, acc), f)
            g = gcd(field, f, t)
        else:
            rp = pow_mod(field, r, (q ** d - 1) // 2, f)
            g = gcd(field, f, sub(field, rp, np.array([1], dtype=np.int16)))
        if 0 < degree(g) < n:
            left = divmod_poly(field, f, g)[0]
            return equal_degree_split(field, g, d, rng) + \
                equal_degree_split(field, left, d, rng)


def factor(field, f, seed=0):
    """Full factorization: list of (monic irreducible, multiplicity),
    sorted by (degree, coefficients)."""
    rng = np.random.default_rng(seed)
    out = []
    for g, m in squarefree_decomposition(field, f):
        for h, d in distinct_degree_factorization(field, g):
            for irr in equal_degree_split(field, h, d, rng):
                out.append((irr, m))
    out.sort(key=lambda t: (degree(t[0]), t[0].tolist()))
    # consistency: degrees must add up
    assert sum(degree(g) * m for g, m in out) == degree(normalize(f))
    return out


def smallest_irreducible_factor(field, f, seed=0):
    """One monic irreducible factor of smallest degree, without full EDF of
    larger-degree parts."""
    rng = np.random.default_rng(seed)
    best = None
    for g, _m in squarefree_decomposition(field, f):
        for h, d in distinct_degree_factorization(field, g):
            if best is not None and d >= degree(best):
                continue
            irr = equal_degree_split(field, h, d, rng)[0] if degree(h) > d \
                else h
            if best is None or degree(irr) < degree(best):
                best = irr
            break  # ddf yields ascending d
    return best


def is_irreducible(field, f):
    f = monic(field, f)
    if degree(f) < 1:
        return False
    if degree(f) == 1:
        return True
    d = derivative(field, f)
    if is_zero(d) or degree(gcd(field, f, d)) > 0:
        return False
    ddf = distinct_degree_factorization(field, f)
    return len(ddf) == 1 and ddf[0][1] == degree(f)
