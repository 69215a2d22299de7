"""Exact univariate and bivariate elimination over the rationals.

Univariate polynomials are dense coefficient lists, lowest degree first.
Bivariate gcds are computed in Q[s][t] (``t`` the main variable) with a
primitive pseudo-remainder sequence, which is enough to decide whether a few
plane curves share a component.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .polyring import Polynomial, VariableSet

UPoly = list[Fraction]


def utrim(p: Sequence[Fraction]) -> UPoly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def udeg(p: Sequence[Fraction]) -> int:
    return len(utrim(p)) - 1


def uadd(p: Sequence[Fraction], q: Sequence[Fraction]) -> UPoly:
    n = max(len(p), len(q))
    return utrim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def uneg(p: Sequence[Fraction]) -> UPoly:
    return [-c for c in p]


def umul(p: Sequence[Fraction], q: Sequence[Fraction]) -> UPoly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return utrim(out)


def uscale(p: Sequence[Fraction], c: Fraction) -> UPoly:
    return utrim([c * a for a in p])


def udivmod(p: Sequence[Fraction], q: Sequence[Fraction]) -> tuple[UPoly, UPoly]:
    q = utrim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = utrim(p)
    quot = [Fraction(0)] * max(len(r) - len(q) + 1, 0)
    lead = q[-1]
    while len(r) >= len(q):
        shift = len(r) - len(q)
        c = r[-1] / lead
        quot[shift] = c
        for i, b in enumerate(q):
            r[shift + i] -= c * b
        r = utrim(r)
    return utrim(quot), r


def umonic(p: Sequence[Fraction]) -> UPoly:
    p = utrim(p)
    return [c / p[-1] for c in p] if p else []


def ugcd(p: Sequence[Fraction], q: Sequence[Fraction]) -> UPoly:
    """Monic gcd; the gcd of two zero polynomials is zero."""
    a, b = utrim(p), utrim(q)
    while b:
        a, b = b, udivmod(a, b)[1]
    return umonic(a)


def uderiv(p: Sequence[Fraction]) -> UPoly:
    return utrim([i * c for i, c in enumerate(p)][1:])


def ueval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def usquarefree(p: Sequence[Fraction]) -> UPoly:
    """Monic squarefree part (product of the distinct irreducible factors)."""
    p = utrim(p)
    if udeg(p) <= 0:
        return umonic(p)
    return umonic(udivmod(p, ugcd(p, uderiv(p)))[0])


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def urational_roots(p: Sequence[Fraction]) -> list[Fraction]:
    """Distinct rational roots, ascending, by the rational root theorem."""
    p = usquarefree(p)
    if udeg(p) <= 0:
        return []
    roots = []
    if p[0] == 0:
        roots.append(Fraction(0))
        p = udivmod(p, [Fraction(0), Fraction(1)])[0]
    if udeg(p) > 0:
        den = math.lcm(*(c.denominator for c in p))
        ints = [int(c * den) for c in p]
        g = math.gcd(*ints)
        ints = [c // g for c in ints]
        for num in _divisors(ints[0]):
            for den_ in _divisors(ints[-1]):
                for sign in (1, -1):
                    r = Fraction(sign * num, den_)
                    if r not in roots and ueval(p, r) == 0:
                        roots.append(r)
    return sorted(roots)


def udivide_out_roots(p: Sequence[Fraction], roots: Sequence[Fraction]) -> UPoly:
    """Squarefree part of ``p`` with the given (simple) roots removed."""
    q = usquarefree(p)
    for r in roots:
        q = udivmod(q, [-r, Fraction(1)])[0]
    return umonic(q)


def to_univariate(p: Polynomial, name: str) -> UPoly:
    """Dense coefficients of ``p`` in ``name``; other variables must be absent."""
    i = p.variables.index(name)
    out: UPoly = [Fraction(0)] * (p.degree_in(name) + 1)
    for m, c in p.terms.items():
        if any(e for j, e in enumerate(m) if j != i):
            raise ValueError(f"{p} involves variables other than {name}")
        out[m[i]] += c
    return utrim(out)


def from_univariate(coeffs: Sequence[Fraction], variables: VariableSet, name: str) -> Polynomial:
    i = variables.index(name)
    n = len(variables)
    return Polynomial(variables, {tuple(d if j == i else 0 for j in range(n)): c for d, c in enumerate(coeffs) if c})


# bivariate: dict t-degree -> UPoly in s

BPoly = dict[int, UPoly]


def _to_bpoly(p: Polynomial, s: str, t: str) -> BPoly:
    si, ti = p.variables.index(s), p.variables.index(t)
    out: BPoly = {}
    for m, c in p.terms.items():
        if any(e for j, e in enumerate(m) if j not in (si, ti)):
            raise ValueError(f"{p} is not a polynomial in {s}, {t} only")
        row = out.setdefault(m[ti], [])
        row.extend([Fraction(0)] * (m[si] + 1 - len(row)))
        row[m[si]] += c
    return {k: utrim(v) for k, v in out.items() if utrim(v)}


def _from_bpoly(b: BPoly, variables: VariableSet, s: str, t: str) -> Polynomial:
    si, ti = variables.index(s), variables.index(t)
    n = len(variables)
    terms = {}
    for dt, row in b.items():
        for ds, c in enumerate(row):
            if c:
                terms[tuple(ds if j == si else dt if j == ti else 0 for j in range(n))] = c
    return Polynomial(variables, terms)


def _bdeg(b: BPoly) -> int:
    return max(b, default=-1)


def _bcontent(b: BPoly) -> UPoly:
    g: UPoly = []
    for row in b.values():
        g = ugcd(g, row)
    return g


def _bdiv_content(b: BPoly, c: UPoly) -> BPoly:
    out = {}
    for k, row in b.items():
        q, r = udivmod(row, c)
        assert not r
        out[k] = q
    return out


def _bpp(b: BPoly) -> BPoly:
    return _bdiv_content(b, _bcontent(b)) if b else {}


def _bprem(a: BPoly, b: BPoly) -> BPoly:
    db = _bdeg(b)
    lb = b[db]
    r = dict(a)
    while r and _bdeg(r) >= db:
        dr = _bdeg(r)
        lr = r[dr]
        shift = dr - db
        new: BPoly = {}
        for k, row in r.items():
            new[k] = umul(row, lb)
        for k, row in b.items():
            new[k + shift] = uadd(new.get(k + shift, []), uneg(umul(row, lr)))
        r = {k: v for k, v in new.items() if v}
    return r


def bivariate_gcd(p: Polynomial, q: Polynomial, s: str, t: str) -> Polynomial:
    """Gcd in Q[s, t], normalized so its leading coefficient is 1."""
    if p.variables != q.variables:
        raise ValueError("variable sets differ")
    A, B = _to_bpoly(p, s, t), _to_bpoly(q, s, t)
    if not A or not B:
        g = A or B
        return _normalize(_from_bpoly(g, p.variables, s, t))
    c = ugcd(_bcontent(A), _bcontent(B))
    A, B = _bpp(A), _bpp(B)
    if _bdeg(A) < _bdeg(B):
        A, B = B, A
    while True:
        if not B:
            g = A
            break
        if _bdeg(B) == 0:
            g = {0: [Fraction(1)]}
            break
        A, B = B, _bpp(_bprem(A, B))
    g = {k: umul(row, c) for k, row in _bpp(g).items()}
    return _normalize(_from_bpoly(g, p.variables, s, t))


def _normalize(p: Polynomial) -> Polynomial:
    if p.is_zero():
        return p
    lead = p.sorted_terms()[0][1]
    return p * (1 / lead)


def common_gcd(polys: Sequence[Polynomial], s: str, t: str) -> Polynomial:
    g = polys[0]
    for p in polys[1:]:
        g = bivariate_gcd(g, p, s, t)
    return _normalize(g)
