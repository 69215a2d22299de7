"""Pseudo-weighted valuations over a cA germ and the order between them.

A valuation is a pair (embedding, weight).  The embedding is either the
standard one or a polynomial coordinate change ``chi`` whose images
``p, q, r, s`` are the pullbacks of ``x, y, z, u``; its defining equation is
then ``p*q + f(r, s)``.

Direction convention for the partial order: ``nu1 > nu2`` (witnessed by
``chi``, which pulls functions on the ``nu2`` side back to the ``nu1`` side)
means ``wt2(g) <= wt1(chi^* g)`` for every ``g``.  With this reading the
valuations ``nu_{a,b}`` with ``a + b = k`` come out maximal.  Because weighted
order is additive on products and superadditive on sums, it suffices to test
the four coordinates ``g = x, y, z, u``.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .ca_form import StandardCAGerm
from .errors import LinkingError, OrderConditionError, ValuationError
from .polyring import (
    AMBIENT,
    Polynomial,
    Weight,
    linear_part,
    parse,
    substitute,
    truncate,
    weighted_order,
)

COORDS = AMBIENT.names
DEFAULT_ALPHA = Weight((1, 1, 1, 1))


def _invert(matrix: Sequence[Sequence[Fraction]]) -> list[list[Fraction]] | None:
    """Gauss-Jordan inverse over Q; None if singular."""
    n = len(matrix)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def map_order_check(images: "CoordinateChange | Sequence[Polynomial]", alpha: Weight | Iterable[int], d: int) -> bool:
    """True iff every monomial of ``chi^*(w) - w`` has alpha-weight >= alpha(w) + d."""
    if isinstance(images, CoordinateChange):
        images = images.images
    alpha = alpha if isinstance(alpha, Weight) else Weight(tuple(alpha))
    return _order_holds(images, alpha, d, tuple(range(4)))


def _order_holds(images: Sequence[Polynomial], alpha: Weight, d: int, perm: Sequence[int]) -> bool:
    for i, img in enumerate(images):
        moved = img - Polynomial.var(AMBIENT, COORDS[perm[i]])
        if weighted_order(moved, alpha) < alpha[i] + d:
            return False
    return True


@dataclass(frozen=True)
class CoordinateChange:
    """Polynomial biholomorphism germ given by the pullbacks of x, y, z, u.

    The order condition is checked up to a permutation of coordinates that
    preserves ``alpha``, so that plain coordinate swaps are admissible.
    """

    images: tuple[Polynomial, Polynomial, Polynomial, Polynomial]
    declared_order: int = 1
    alpha: Weight = DEFAULT_ALPHA
    permutation: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != 4 or any(p.variables != AMBIENT for p in images):
            raise ValuationError("a coordinate change needs four images in x, y, z, u")
        if self.declared_order < 1:
            raise ValuationError("the declared order must be a positive integer")
        if any(p.constant_term() for p in images):
            raise ValuationError("coordinate change must fix the origin (images without constant term)")
        if _invert(self.linear_matrix()) is None:
            raise ValuationError("linear part of the coordinate change is not invertible")
        for perm in itertools.permutations(range(4)):
            if all(self.alpha[perm[i]] == self.alpha[i] for i in range(4)) and _order_holds(
                images, self.alpha, self.declared_order, perm
            ):
                object.__setattr__(self, "permutation", perm)
                break
        else:
            raise OrderConditionError(
                f"coordinate change does not have order {self.declared_order} with respect to"
                f" weights {self.alpha.components}, even up to a coordinate permutation"
            )

    @classmethod
    def from_strings(cls, exprs: Sequence[str], declared_order: int = 1, alpha: Weight = DEFAULT_ALPHA) -> CoordinateChange:
        return cls(tuple(parse(e, AMBIENT) for e in exprs), declared_order, alpha)

    @classmethod
    def identity(cls) -> CoordinateChange:
        return cls(tuple(Polynomial.var(AMBIENT, v) for v in COORDS))

    @classmethod
    def swap_xy(cls) -> CoordinateChange:
        return cls.from_strings(("y", "x", "z", "u"))

    def image(self, coord: str) -> Polynomial:
        return self.images[COORDS.index(coord)]

    def pullback(self, g: Polynomial) -> Polynomial:
        return substitute(g, dict(zip(COORDS, self.images)))

    def linear_matrix(self) -> list[list[Fraction]]:
        return [[linear_part(p)[v] for v in COORDS] for p in self.images]

    def is_linear(self) -> bool:
        return all(sum(m) == 1 for p in self.images for m in p.terms)

    def inverse_images(self, degree: int) -> tuple[Polynomial, ...]:
        """Images of the inverse map, exact in all terms of total degree <= ``degree``."""
        minv = _invert(self.linear_matrix())
        w = [Polynomial.var(AMBIENT, v) for v in COORDS]
        lin = [Polynomial(AMBIENT, {AMBIENT.unit(v): c for v, c in linear_part(p).items()}) for p in self.images]
        nonlinear = [p - l for p, l in zip(self.images, lin)]

        def apply_minv(vec):
            return [sum((vec[j] * minv[i][j] for j in range(4)), Polynomial.zero(AMBIENT)) for i in range(4)]

        inv = apply_minv(w)
        if self.is_linear():
            return tuple(inv)
        for _ in range(degree):
            subs = dict(zip(COORDS, inv))
            rhs = [wi - substitute(n, subs) for wi, n in zip(w, nonlinear)]
            inv = [truncate(p, degree) for p in apply_minv(rhs)]
        return tuple(inv)

    def __str__(self) -> str:
        return ", ".join(f"{v} -> {p}" for v, p in zip(COORDS, self.images))


@dataclass(frozen=True)
class PseudoWeightedValuation:
    """Pair (embedding, weight); ``embedding=None`` is the standard embedding."""

    weight: Weight
    embedding: CoordinateChange | None = None

    def __post_init__(self):
        w = self.weight if isinstance(self.weight, Weight) else Weight(tuple(self.weight))
        object.__setattr__(self, "weight", w)
        if len(w) != 4 or min(w) < 1:
            raise ValuationError(f"valuation weights must be four positive integers, got {w.components}")

    @classmethod
    def standard(cls, a: int, b: int) -> PseudoWeightedValuation:
        """The valuation nu_{a,b} = (standard embedding, (a, b, 1, 1))."""
        return cls(Weight((a, b, 1, 1)))

    @property
    def is_standard(self) -> bool:
        return self.embedding is None

    @property
    def ab(self) -> tuple[int, int]:
        return self.weight[0], self.weight[1]

    @property
    def label(self) -> str:
        a, b, c, d = self.weight
        if self.is_standard and c == d == 1:
            return f"nu_{{{a},{b}}}"
        emb = "standard" if self.is_standard else "chi"
        return f"({emb}, ({a},{b},{c},{d}))"

    def __str__(self) -> str:
        return self.label


def defining_equation(nu: PseudoWeightedValuation, germ: StandardCAGerm) -> Polynomial:
    """``phi`` for the standard embedding, ``p*q + f(r, s)`` for a coordinate change."""
    if nu.is_standard:
        phi = germ.phi
    else:
        phi = nu.embedding.pullback(germ.phi)
    if phi.is_zero() or phi.constant_term() != 0:
        raise ValuationError("defining equation must be nonzero and vanish at the origin")
    return phi


def virtual_discrepancy(nu: PseudoWeightedValuation, germ: StandardCAGerm) -> Fraction:
    """a + b + c + d - wt(phi') - 1."""
    phi = defining_equation(nu, germ)
    return Fraction(sum(nu.weight) - weighted_order(phi, nu.weight) - 1)


def admit_to_W1(nu: PseudoWeightedValuation, germ: StandardCAGerm) -> PseudoWeightedValuation:
    """Return ``nu`` if it has virtual discrepancy 1, else raise.

    Members of W_1 necessarily give weight 1 to the z- and u-coordinates;
    that is checked first so the error names the actual obstruction.
    """
    _, _, c, d = nu.weight
    if (c, d) != (1, 1):
        raise ValuationError(
            f"{nu.label}: a valuation of discrepancy 1 gives weight 1 to z and u, got ({c}, {d})"
        )
    disc = virtual_discrepancy(nu, germ)
    if disc != 1:
        raise ValuationError(f"{nu.label} has virtual discrepancy {disc}, not 1")
    return nu


def enumerate_W1_standard(germ: StandardCAGerm) -> list[PseudoWeightedValuation]:
    """All nu_{a,b} of discrepancy 1 on the standard embedding, sorted by (a, b)."""
    return [
        admit_to_W1(PseudoWeightedValuation.standard(a, b), germ)
        for a in range(1, germ.k)
        for b in range(1, germ.k - a + 1)
    ]


def maximal_elements(valuations: Sequence[PseudoWeightedValuation]) -> list[PseudoWeightedValuation]:
    """Elements not strictly dominated by another one under the identity comparison.

    Meant for lists over a single embedding (e.g. from enumerate_W1_standard).
    """
    def dominated(v: PseudoWeightedValuation) -> bool:
        return any(
            _dominates(w.weight, v.weight) and not _dominates(v.weight, w.weight) for w in valuations
        )

    return [v for v in valuations if not dominated(v)]


def _dominates(big: Weight, small: Weight) -> bool:
    return all(s <= b for s, b in zip(small, big))


def canonical_order(valuations: Iterable[PseudoWeightedValuation]) -> list[PseudoWeightedValuation]:
    """Reporting order for standard valuations: a <= b first, then a > b."""
    return sorted(valuations, key=lambda v: (v.ab[0] > v.ab[1], v.ab))


class ComparisonVerdict(str, enum.Enum):
    STRICTLY_GREATER = "strictly_greater"
    STRICTLY_LESS = "strictly_less"
    EQUIVALENT = "equivalent"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Comparison:
    verdict: ComparisonVerdict
    # per coordinate: (coordinate, weight on its own side, weight of its image on the other side)
    forward: tuple[tuple[str, int, int | float], ...]
    backward: tuple[tuple[str, int, int | float], ...]
    unit: Fraction


def _linking_unit(chi: CoordinateChange, phi_src: Polynomial, phi_dst: Polynomial) -> Fraction:
    pulled = chi.pullback(phi_src)
    if pulled.is_zero():
        raise LinkingError("chi^*(phi'') vanishes identically")
    m, c = pulled.sorted_terms()[0]
    unit = c / phi_dst.coefficient(m) if phi_dst.coefficient(m) else None
    if unit is None or pulled != phi_dst * unit:
        raise LinkingError(
            f"chi does not carry one defining equation to the other: chi^*(phi'') = {pulled},"
            f" phi' = {phi_dst}"
        )
    return unit


def compare_detailed(
    nu1: PseudoWeightedValuation,
    nu2: PseudoWeightedValuation,
    chi: CoordinateChange,
    germ: StandardCAGerm,
) -> Comparison:
    """Compare ``nu1`` and ``nu2`` through ``chi`` (functions on the nu2 side pull back to nu1)."""
    phi1 = defining_equation(nu1, germ)
    phi2 = defining_equation(nu2, germ)
    unit = _linking_unit(chi, phi2, phi1)
    w1, w2 = nu1.weight, nu2.weight

    forward = tuple((v, w2[i], weighted_order(chi.images[i], w1)) for i, v in enumerate(COORDS))
    # exact up to the total degree beyond which every term has w2-weight >= max(w1)
    depth = math.ceil(max(w1) / min(w2))
    inverse = chi.inverse_images(depth)
    backward = tuple((v, w1[i], weighted_order(truncate(inverse[i], depth), w2)) for i, v in enumerate(COORDS))

    greater = all(own <= img for _, own, img in forward)
    less = all(own <= img for _, own, img in backward)
    if greater and less:
        verdict = ComparisonVerdict.EQUIVALENT
    elif greater:
        verdict = ComparisonVerdict.STRICTLY_GREATER
    elif less:
        verdict = ComparisonVerdict.STRICTLY_LESS
    else:
        verdict = ComparisonVerdict.INCOMPARABLE
    return Comparison(verdict, forward, backward, unit)


def compare(
    nu1: PseudoWeightedValuation,
    nu2: PseudoWeightedValuation,
    chi: CoordinateChange,
    germ: StandardCAGerm,
) -> ComparisonVerdict:
    return compare_detailed(nu1, nu2, chi, germ).verdict
