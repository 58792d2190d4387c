"""Exact rational polynomial helpers for the characteristic-polynomial oracle.

Polynomials are lists of coefficients, highest degree first.
"""
from fractions import Fraction


def _trim(p):
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def degree(p):
    p = _trim(p)
    return -1 if p == [0] else len(p) - 1


def evaluate(p, x):
    acc = 0
    for c in p:
        acc = acc * x + c
    return acc


def derivative(p):
    d = len(p) - 1
    out = [c * (d - i) for i, c in enumerate(p[:-1])]
    return out or [0]


def divmod_poly(a, b):
    a = [Fraction(c) for c in _trim(a)]
    b = [Fraction(c) for c in _trim(b)]
    if degree(b) < 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = a[:]
    while degree(r) >= degree(b) and degree(r) >= 0:
        r = _trim(r)
        shift = len(r) - len(b)
        f = r[0] / b[0]
        q[len(q) - 1 - shift] = f
        for i, c in enumerate(b):
            r[i] -= f * c
        r = _trim(r[1:] if len(r) > 1 else [Fraction(0)])
    return _trim(q), _trim(r)


def sub(a, b):
    n = max(len(a), len(b))
    a = [0] * (n - len(a)) + list(a)
    b = [0] * (n - len(b)) + list(b)
    return _trim([x - y for x, y in zip(a, b)])


def monic(p):
    p = _trim(p)
    return [Fraction(c) / p[0] for c in p]


def gcd(a, b):
    a, b = _trim(a), _trim(b)
    while degree(b) >= 0:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def squarefree_factors(p):
    """Yun's algorithm: list of (factor, multiplicity) with squarefree factors."""
    out = []
    a0 = gcd(p, derivative(p))
    b = divmod_poly(p, a0)[0]
    c = divmod_poly(derivative(p), a0)[0]
    d = sub(c, derivative(b))
    i = 1
    while degree(b) > 0:
        a = gcd(b, d)
        b = divmod_poly(b, a)[0]
        c = divmod_poly(d, a)[0]
        d = sub(c, derivative(b))
        if degree(a) > 0:
            out.append((a, i))
        i += 1
    return out


def sturm_sequence(p):
    seq = [_trim([Fraction(c) for c in p]), derivative(p)]
    while degree(seq[-1]) > 0:
        r = divmod_poly(seq[-2], seq[-1])[1]
        if degree(r) < 0:
            break
        seq.append([-c for c in r])
    return seq


def _variations(seq, x):
    signs = [v for v in (evaluate(s, x) for s in seq) if v != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))


def isolate_real_roots(p, eps=Fraction(1, 10**13)):
    """Distinct real roots of a squarefree polynomial, each to within eps."""
    p = _trim([Fraction(c) for c in p])
    if degree(p) <= 0:
        return []
    seq = sturm_sequence(p)
    bound = 1 + max(abs(c / p[0]) for c in p[1:])
    roots = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        k = _variations(seq, lo) - _variations(seq, hi)
        if k == 0:
            continue
        if k == 1:
            while hi - lo > eps:
                mid = (lo + hi) / 2
                if _variations(seq, lo) - _variations(seq, mid) == 1:
                    hi = mid
                else:
                    lo = mid
            roots.append(float((lo + hi) / 2) if evaluate(p, hi) != 0 else float(hi))
            continue
        mid = (lo + hi) / 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    return sorted(roots)


def real_roots(p, eps=Fraction(1, 10**13)):
    """All real roots with multiplicity, ascending."""
    out = []
    for factor, mult in squarefree_factors(p):
        out += isolate_real_roots(factor, eps) * mult
    return sorted(out)
