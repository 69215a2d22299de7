"""Discrepancy bookkeeping for the divisors of discrepancy 1 over a cA germ.

For a maximal nu_{a,b} (a + b = k) the blow-up carries the exceptional divisor
E_{a,b} plus the quotient points 1/a(-1,1,1) and 1/b(-1,1,1).  The economic
resolution of 1/a(-1,1,1) has divisors F_1..F_{a-1} with discrepancies i/a
over the blow-up, and E_{a,b} pulls back with coefficients (a-i)/a, so each
F_i has discrepancy exactly 1 over the germ.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .blowup import charts, chart_singular_points
from .ca_form import StandardCAGerm, divisor_count
from .errors import CAError, WeightRangeError
from .valuation import PseudoWeightedValuation, enumerate_W1_standard, maximal_elements, virtual_discrepancy


def quotient_discrepancies(a: int) -> list[Fraction]:
    """[i/a for i = 1..a-1]."""
    if a < 1:
        raise ValueError("index must be >= 1")
    return [Fraction(i, a) for i in range(1, a)]


def pullback_coefficients(a: int) -> list[Fraction]:
    """[(a-i)/a for i = 1..a-1]."""
    if a < 1:
        raise ValueError("index must be >= 1")
    return [Fraction(a - i, a) for i in range(1, a)]


def compose_discrepancy(over_blowup: Fraction, pullback_coeff: Fraction) -> Fraction:
    return Fraction(over_blowup) + Fraction(pullback_coeff)


@dataclass(frozen=True)
class DivisorRecord:
    name: str
    center: str
    discrepancy_over_blowup: Fraction
    pullback_coefficient: Fraction
    discrepancy_over_X: Fraction

    def __post_init__(self):
        if self.discrepancy_over_X != self.discrepancy_over_blowup + self.pullback_coefficient:
            raise ValueError(f"{self.name}: discrepancies do not compose")


@dataclass(frozen=True)
class Ledger:
    germ: StandardCAGerm
    a: int
    b: int
    records: tuple[DivisorRecord, ...]

    def __len__(self) -> int:
        return len(self.records)

    def __post_init__(self):
        names = [r.name for r in self.records]
        if len(set(names)) != len(names):
            raise ValueError("duplicate divisor names")


def _quotient_records(prefix: str, center: str, order: int) -> list[DivisorRecord]:
    return [
        DivisorRecord(f"{prefix}_{i}", center, d, c, compose_discrepancy(d, c))
        for i, (d, c) in enumerate(zip(quotient_discrepancies(order), pullback_coefficients(order)), start=1)
    ]


def full_divisor_ledger(germ: StandardCAGerm, a: int, b: int) -> Ledger:
    """All divisors of discrepancy 1 seen from the nu_{a,b} blow-up, a + b = k."""
    germ.require_isolated()
    if a < 1 or b < 1 or a + b != germ.k:
        raise WeightRangeError(f"the ledger needs a, b >= 1 with a + b = k = {germ.k}, got ({a}, {b})")
    disc_E = virtual_discrepancy(PseudoWeightedValuation.standard(a, b), germ)
    if disc_E != 1:
        raise CAError(f"E_{{{a},{b}}} has discrepancy {disc_E}, expected 1")

    # the quotient points are read off the actual charts
    orders = {}
    for chart in charts(germ, a, b)[:2]:
        quotients, _ = chart_singular_points(chart)
        orders[chart.index] = quotients[0].order if quotients else 1
    if (orders["U1"], orders["U2"]) != (a, b):
        raise CAError(f"unexpected quotient orders {orders} for (a, b) = ({a}, {b})")

    records = [DivisorRecord(f"E_{{{a},{b}}}", "exceptional divisor", disc_E, Fraction(0), disc_E)]
    records += _quotient_records("F", "Q1", orders["U1"])
    records += _quotient_records("G", "Q2", orders["U2"])
    return Ledger(germ, a, b, tuple(records))


def cross_check_count(germ: StandardCAGerm) -> bool:
    """Every maximal ledger has k - 1 records, the number of maximal valuations."""
    expected = divisor_count(germ)
    maximal = maximal_elements(enumerate_W1_standard(germ))
    if len(maximal) != expected:
        return False
    for nu in maximal:
        ledger = full_divisor_ledger(germ, *nu.ab)
        if len(ledger) != expected or any(r.discrepancy_over_X != 1 for r in ledger.records):
            return False
    return True
