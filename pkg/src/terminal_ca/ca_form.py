"""Standard cA germs ``xy + f(z,u) = 0`` and their order ``k``.

Isolatedness of the curve singularity ``f = 0`` at the origin is our working
form of the terminality hypothesis: the three-fold point ``xy + f = 0`` is an
isolated (hence terminal) cA point exactly when ``f`` is reduced near 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .elimination import common_gcd
from .errors import (
    DegreeBoundExceeded,
    NotIsolated,
    NotSingular,
    NotStandardForm,
    ZeroPolynomialError,
)
from .polyring import (
    AMBIENT,
    PLANE,
    Polynomial,
    derivative,
    serialize,
    substitute,
    weighted_order,
)

DEFAULT_MAX_DEGREE = 64

_XY = (1, 1, 0, 0)


def embed_f(f: Polynomial) -> Polynomial:
    """Lift ``f(z,u)`` to the ambient ring in x, y, z, u."""
    return substitute(f, {"z": Polynomial.var(AMBIENT, "z"), "u": Polynomial.var(AMBIENT, "u")})


def standard_equation(f: Polynomial) -> Polynomial:
    return Polynomial.monomial(AMBIENT, _XY) + embed_f(f)


@dataclass(frozen=True)
class StandardCAGerm:
    f: Polynomial
    k: int
    isolated: bool
    phi: Polynomial = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.f.variables != PLANE:
            raise ValueError("f must be a polynomial in (z, u)")
        if self.f.is_zero():
            raise NotIsolated("f = 0: the germ is not an isolated cA point")
        if self.k != min_order(self.f) or self.k < 2:
            raise ValueError(f"inconsistent order k={self.k} for f = {self.f}")
        object.__setattr__(self, "phi", standard_equation(self.f))

    @classmethod
    def from_f(cls, f: Polynomial, *, max_degree: int = DEFAULT_MAX_DEGREE) -> StandardCAGerm:
        _check_singular(f)
        return cls(f, min_order(f), isolated_singularity_check(f, max_degree=max_degree))

    def require_isolated(self) -> None:
        if not self.isolated:
            raise NotIsolated(
                f"f = {self.f} is not reduced at the origin; xy + f = 0 has a curve of singular points"
            )

    def __str__(self) -> str:
        return serialize(self.phi)


def min_order(f: Polynomial) -> int:
    """Smallest total degree of a monomial of ``f``."""
    if f.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no order")
    return weighted_order(f, (1,) * len(f.variables))


def _check_singular(f: Polynomial) -> None:
    if f.is_zero():
        raise NotIsolated("f = 0: the germ is not an isolated cA point")
    k = min_order(f)
    if k == 0:
        raise NotSingular(f"f has constant term {f.constant_term()}; the origin does not lie on X")
    if k == 1:
        raise NotSingular("f has a linear term; the origin is a smooth point of X, not a singularity")


def isolated_singularity_check(f: Polynomial, *, max_degree: int = DEFAULT_MAX_DEGREE) -> bool:
    """True iff f, f_z, f_u have no common curve through the origin.

    The common zero set of three plane polynomials is finite away from the
    zero set of their gcd, so the germ is isolated iff that gcd is a unit at 0.
    """
    if f.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no isolated singularity")
    if f.total_degree() > max_degree:
        raise DegreeBoundExceeded(f"deg f = {f.total_degree()} exceeds the bound {max_degree}")
    g = common_gcd([f, derivative(f, "z"), derivative(f, "u")], "z", "u")
    return g.is_constant() or g.constant_term() != 0


def recognize(phi: Polynomial, *, max_degree: int = DEFAULT_MAX_DEGREE) -> StandardCAGerm:
    """Read off ``f`` from ``phi = xy + f(z,u)`` given literally in those coordinates."""
    if phi.variables != AMBIENT:
        raise NotStandardForm(f"expected a polynomial in x, y, z, u, got {phi.variables.names}")
    if phi.is_zero():
        raise NotStandardForm("the zero polynomial does not define a hypersurface")
    coeff = phi.coefficient(_XY)
    f_terms = {}
    for m, c in phi.sorted_terms():
        if m == _XY:
            continue
        if m[0] or m[1]:
            term = Polynomial(AMBIENT, {m: c})
            raise NotStandardForm(
                f"term {term} involves x or y; the standard form is xy + f(z,u)"
                " (bring the equation to this normal form first)"
            )
        f_terms[m[2:]] = c
    if coeff != 1:
        hint = "no xy term" if coeff == 0 else f"coefficient of xy is {coeff}, expected 1"
        raise NotStandardForm(f"{hint}; the standard form is xy + f(z,u)")
    f = Polynomial(PLANE, f_terms)
    return StandardCAGerm.from_f(f, max_degree=max_degree)


def divisor_count(germ: StandardCAGerm) -> int:
    """Number of divisors of discrepancy 1 over the germ: ``k - 1``."""
    germ.require_isolated()
    return germ.k - 1
