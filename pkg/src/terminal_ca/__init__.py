"""Weighted blow-ups and divisors of discrepancy 1 over cA points xy + f(z,u) = 0."""

from .ca_form import StandardCAGerm, divisor_count, isolated_singularity_check, min_order, recognize
from .blowup import (
    Chart,
    chart_singular_points,
    charts,
    divisor_multiplicity,
    exceptional_initial_form,
    pullback_identity_check,
)
from .polyring import AMBIENT, CHART, PLANE, Polynomial, VariableSet, Weight, parse
from .resolution import cross_check_count, full_divisor_ledger
from .valuation import (
    ComparisonVerdict,
    CoordinateChange,
    PseudoWeightedValuation,
    compare,
    enumerate_W1_standard,
    maximal_elements,
    virtual_discrepancy,
)

__version__ = "0.1.0"
