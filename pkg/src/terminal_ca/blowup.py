"""Charts of the weighted blow-up with weights (a, b, 1, 1) of a standard cA germ.

Chart ``U_i`` inverts the i-th coordinate: with exceptional coordinate ``t``
the map is ``x_i = t^{w_i}``, ``x_j = t^{w_j} * xb_j`` and the chart is the
quotient of C^4 by Z_{w_i} acting with weight 1 on ``t`` and ``-w_j`` on the
other coordinates.  The strict transform is the pulled-back equation divided
by ``t^{wt(phi)}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import elimination as el
from .ca_form import StandardCAGerm
from .errors import (
    PositiveDimensionalSingularLocus,
    UnsupportedChartShape,
    WeightRangeError,
    ZeroPolynomialError,
)
from .polyring import (
    AMBIENT,
    CHART,
    Polynomial,
    Weight,
    derivative,
    divide_by_monomial,
    initial_form,
    substitute,
    weighted_order,
)

CHART_NAMES = ("U1", "U2", "U3", "U4")


def _signed(w: int, order: int) -> int:
    w %= order
    return w - order if 2 * w > order else w


@dataclass(frozen=True)
class CyclicQuotientAction:
    """Diagonal action of Z_order; ``raw`` keeps the weights as written."""

    order: int
    raw: tuple[int, ...]

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order of a cyclic group must be >= 1")

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(w % self.order for w in self.raw)

    @property
    def trivial(self) -> bool:
        return self.order == 1

    def __str__(self) -> str:
        if self.trivial:
            return "trivial"
        return f"Z_{self.order}({','.join(map(str, self.raw))})"


@dataclass(frozen=True)
class Chart:
    index: str
    a: int
    b: int
    parameterization: tuple[tuple[str, Polynomial], ...]
    equation: Polynomial
    action: CyclicQuotientAction
    exceptional_variable: str
    exceptional_power: int

    @property
    def variables(self):
        return CHART

    @property
    def images(self) -> dict[str, Polynomial]:
        return dict(self.parameterization)

    def __str__(self) -> str:
        return f"{self.index}: {{{self.equation} = 0}} / {self.action}"


@dataclass(frozen=True)
class QuotientSingularityRecord:
    chart: str
    point: tuple[int, ...]
    order: int
    weights: tuple[int, ...]
    eliminated: str
    surviving: tuple[str, ...]

    @property
    def type_label(self) -> str:
        return f"1/{self.order}({','.join(map(str, self.weights))})"


@dataclass(frozen=True)
class ResidualPointReport:
    """Singular point of a chart hypersurface on the exceptional divisor.

    ``location`` is exact when the point is rational; otherwise it is None
    and ``ideal`` (with ``count`` conjugate points) describes it.
    """

    chart: str
    location: Mapping[str, Fraction] | None
    ideal: tuple[Polynomial, ...]
    local_equation: Polynomial
    multiplicity: int
    isolated: bool
    count: int = 1


def _check_weights(germ: StandardCAGerm, a: int, b: int, allow_beyond: bool) -> None:
    if a < 1 or b < 1:
        raise WeightRangeError(f"weights must be positive, got a={a}, b={b}")
    if a + b > germ.k and not allow_beyond:
        raise WeightRangeError(
            f"a + b = {a + b} exceeds k = {germ.k}: the blow-up has virtual discrepancy"
            f" {a + b + 1 - germ.k} > 1 (use the override, allow_beyond=True or --force, to build it anyway)"
        )


def _chart(phi: Polynomial, sigma: tuple[int, ...], i: int, a: int, b: int) -> Chart:
    t = CHART.names[i]
    tvar = Polynomial.var(CHART, t)
    images = []
    for j, (v, w) in enumerate(zip(AMBIENT, sigma)):
        img = tvar**w if j == i else tvar**w * Polynomial.var(CHART, CHART.names[j])
        images.append((v, img))
    pulled = substitute(phi, dict(images))
    m = weighted_order(phi, sigma)
    equation = divide_by_monomial(pulled, tuple(m if j == i else 0 for j in range(4)))
    raw = tuple(1 if j == i else -w for j, w in enumerate(sigma))
    return Chart(CHART_NAMES[i], a, b, tuple(images), equation, CyclicQuotientAction(sigma[i], raw), t, m)


def charts(germ: StandardCAGerm, a: int, b: int, *, allow_beyond: bool = False) -> list[Chart]:
    """The four affine charts U1..U4 of the (a, b, 1, 1) blow-up."""
    _check_weights(germ, a, b, allow_beyond)
    sigma = (a, b, 1, 1)
    return [_chart(germ.phi, sigma, i, a, b) for i in range(4)]


def pullback_identity_check(chart: Chart, phi: Polynomial) -> bool:
    """substitute(phi, chart map) == t^{wt(phi)} * strict transform."""
    pulled = substitute(phi, chart.images)
    t = Polynomial.var(CHART, chart.exceptional_variable)
    return pulled == t**chart.exceptional_power * chart.equation


def classify_initial_form(form: Polynomial) -> str:
    """Irreducibility verdict for a weighted initial form in x, y, z, u.

    ``xy + g(z,u)`` with ``g != 0`` is irreducible: in a factorization one
    factor has degree 0 in both x and y and would have to divide g and xy.
    Bare ``xy`` is reducible.  Other shapes are not decided.
    """
    xy = (1, 1, 0, 0)
    if form.coefficient(xy) == 0:
        return "unknown"
    if any((m[0] or m[1]) and m != xy for m in form.terms):
        return "unknown"
    return "reducible" if len(form) == 1 else "irreducible"


def exceptional_initial_form(germ: StandardCAGerm, a: int, b: int, *, allow_beyond: bool = False) -> tuple[Polynomial, str]:
    _check_weights(germ, a, b, allow_beyond)
    form = initial_form(germ.phi, (a, b, 1, 1))
    return form, classify_initial_form(form)


def divisor_multiplicity(D: Polynomial, a: int, b: int) -> int:
    """Coefficient of the exceptional divisor in the pullback of {D = 0}."""
    if D.is_zero():
        raise ZeroPolynomialError("{0 = 0} is not a divisor")
    return weighted_order(D, Weight((a, b, 1, 1)))


def _unit_variable(eq: Polynomial) -> str | None:
    """A variable whose partial derivative is a nonzero constant, if any."""
    for v in eq.variables:
        d = derivative(eq, v)
        if d.is_constant() and not d.is_zero():
            return v
    return None


def _quotient_point(chart: Chart) -> QuotientSingularityRecord | None:
    order = chart.action.order
    if order < 2 or chart.equation.constant_term() != 0:
        return None
    elim = _unit_variable(chart.equation)
    if elim is None:
        raise UnsupportedChartShape(f"{chart.index}: no coordinate can be eliminated at the fixed point")
    k = CHART.index(elim)
    surviving = tuple(v for v in CHART.names if v != elim)
    ws = [w for j, w in enumerate(chart.action.raw) if j != k]
    # rescale the generator so the first surviving weight is -1
    unit = (-pow(ws[0], -1, order)) % order
    ws = [_signed(w * unit, order) for w in ws]
    ws[0] = -1
    return QuotientSingularityRecord(chart.index, (0, 0, 0, 0), order, tuple(ws), elim, surviving)


def _split_xy_plus_g(chart: Chart) -> Polynomial:
    eq = chart.equation
    xy = (1, 1, 0, 0)
    if eq.coefficient(xy) == 0 or any((m[0] or m[1]) and m != xy for m in eq.terms):
        raise UnsupportedChartShape(
            f"{chart.index}: equation {eq} is not of the form c*xb*yb + g(zb, ub)"
        )
    return eq - Polynomial(CHART, {xy: eq.coefficient(xy)})


def _residual_points(chart: Chart) -> list[ResidualPointReport]:
    if _unit_variable(chart.equation) is not None:
        return []
    g = _split_xy_plus_g(chart)
    t = chart.exceptional_variable
    if t not in ("zb", "ub"):
        raise UnsupportedChartShape(f"{chart.index}: exceptional coordinate {t} is not zb or ub")
    s = "ub" if t == "zb" else "zb"
    partials = [g, derivative(g, "zb"), derivative(g, "ub")]

    restrict = {t: Polynomial.zero(CHART), s: Polynomial.var(CHART, s)}

    def on_E(p: Polynomial) -> el.UPoly:
        return el.to_univariate(substitute(p, restrict), s)

    common = el.common_gcd(partials, "zb", "ub")
    if not common.is_constant():
        c0 = on_E(common)
        if not c0 or el.udeg(c0) >= 1:
            raise PositiveDimensionalSingularLocus(
                f"{chart.index}: the curve {{xb = yb = 0, {common} = 0}} of singular points"
                " meets the exceptional divisor (the germ is not isolated)"
            )
    h: el.UPoly = []
    for p in partials:
        h = el.ugcd(h, on_E(p))
    if not h:
        raise PositiveDimensionalSingularLocus(f"{chart.index}: singular along the whole exceptional line")
    if el.udeg(h) < 1:
        return []

    sv, tv = Polynomial.var(CHART, s), Polynomial.var(CHART, t)
    xb, yb = Polynomial.var(CHART, "xb"), Polynomial.var(CHART, "yb")
    reports = []
    roots = el.urational_roots(h)
    for r in roots:
        images = {"xb": xb, "yb": yb, t: tv, s: sv + r}
        local = substitute(chart.equation, images)
        location = {"xb": Fraction(0), "yb": Fraction(0), t: Fraction(0), s: r}
        ideal = (xb, yb, tv, sv - r)
        mult = weighted_order(local, (1, 1, 1, 1))
        reports.append(ResidualPointReport(chart.index, location, ideal, local, mult, True))
    rest = el.udivide_out_roots(h, roots)
    if el.udeg(rest) >= 1:
        ideal = (xb, yb, tv, el.from_univariate(rest, CHART, s))
        # xb*yb has order 2 and g vanishes to order >= 2 at each such point
        reports.append(ResidualPointReport(chart.index, None, ideal, chart.equation, 2, True, el.udeg(rest)))
    return reports


def chart_singular_points(chart: Chart) -> tuple[list[QuotientSingularityRecord], list[ResidualPointReport]]:
    """Cyclic quotient points and hypersurface singular points on the exceptional divisor."""
    q = _quotient_point(chart)
    return ([q] if q else []), _residual_points(chart)
