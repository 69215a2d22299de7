"""Machine-readable reports (plain dicts ready for ``json.dumps``).

Rationals are rendered with ``str(Fraction)``: ``"1/2"``, or ``"1"`` when
integral.  Polynomials use the canonical serialization of :mod:`polyring`.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from importlib import resources
from typing import Any, Sequence

from .blowup import Chart, QuotientSingularityRecord, ResidualPointReport, chart_singular_points, charts, exceptional_initial_form, pullback_identity_check
from .ca_form import DEFAULT_MAX_DEGREE, StandardCAGerm, recognize
from .errors import CAError
from .polyring import AMBIENT, PLANE, Polynomial, Weight, change_variables, parse
from .resolution import Ledger, full_divisor_ledger
from .valuation import (
    COORDS,
    Comparison,
    CoordinateChange,
    PseudoWeightedValuation,
    compare_detailed,
    enumerate_W1_standard,
    maximal_elements,
    virtual_discrepancy,
)

SCHEMA_VERSION = "1.0"


def rational(q: Fraction | int) -> str:
    return str(Fraction(q))


def germ_from_expression(expr: str, *, max_degree: int = DEFAULT_MAX_DEGREE) -> StandardCAGerm:
    """Accept either ``f(z,u)`` or a full equation in x, y, z, u."""
    phi = parse(expr, AMBIENT, max_degree=max_degree)
    if set(phi.used_variables()) & {"x", "y"}:
        return recognize(phi, max_degree=max_degree)
    f = change_variables(phi, PLANE) if phi.used_variables() else Polynomial.constant(PLANE, phi.constant_term())
    return StandardCAGerm.from_f(f, max_degree=max_degree)


def _base(command: str, expr: str) -> dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "command": command, "input": expr, "ok": True, "errors": [], "warnings": []}


def germ_dict(germ: StandardCAGerm) -> dict[str, Any]:
    return {"f": str(germ.f), "phi": str(germ.phi), "k": germ.k, "isolated": germ.isolated}


def valuation_dict(nu: PseudoWeightedValuation, germ: StandardCAGerm) -> dict[str, Any]:
    return {
        "label": nu.label,
        "weight": list(nu.weight),
        "embedding": "standard" if nu.is_standard else str(nu.embedding),
        "virtual_discrepancy": rational(virtual_discrepancy(nu, germ)),
    }


def chart_dict(chart: Chart, phi: Polynomial) -> dict[str, Any]:
    return {
        "index": chart.index,
        "variables": list(chart.variables),
        "parameterization": {v: str(p) for v, p in chart.parameterization},
        "equation": str(chart.equation),
        "action": {"order": chart.action.order, "weights": list(chart.action.raw), "reduced": list(chart.action.weights)},
        "exceptional_variable": chart.exceptional_variable,
        "exceptional_power": chart.exceptional_power,
        "pullback_identity": pullback_identity_check(chart, phi),
    }


def quotient_dict(q: QuotientSingularityRecord) -> dict[str, Any]:
    return {
        "chart": q.chart,
        "point": list(q.point),
        "type": q.type_label,
        "order": q.order,
        "weights": list(q.weights),
        "eliminated": q.eliminated,
    }


def residual_dict(r: ResidualPointReport) -> dict[str, Any]:
    return {
        "chart": r.chart,
        "location": None if r.location is None else {v: rational(c) for v, c in r.location.items()},
        "ideal": [str(p) for p in r.ideal],
        "local_equation": str(r.local_equation),
        "multiplicity": r.multiplicity,
        "isolated": r.isolated,
        "count": r.count,
    }


def ledger_dict(ledger: Ledger) -> dict[str, Any]:
    return {
        "a": ledger.a,
        "b": ledger.b,
        "records": [
            {
                "name": r.name,
                "center": r.center,
                "discrepancy_over_blowup": rational(r.discrepancy_over_blowup),
                "pullback_coefficient": rational(r.pullback_coefficient),
                "discrepancy_over_X": rational(r.discrepancy_over_X),
            }
            for r in ledger.records
        ],
        "count": len(ledger),
    }


def _blowup_section(germ: StandardCAGerm, a: int, b: int, *, allow_beyond: bool = False) -> dict[str, Any]:
    chart_list = charts(germ, a, b, allow_beyond=allow_beyond)
    section: dict[str, Any] = {"a": a, "b": b, "charts": [chart_dict(c, germ.phi) for c in chart_list]}
    if a + b <= germ.k:
        form, verdict = exceptional_initial_form(germ, a, b)
        section["initial_form"] = {"form": str(form), "verdict": verdict}
    quotients, residuals, diagnostics = [], [], []
    if a + b == germ.k:
        for c in chart_list:
            try:
                qs, rs = chart_singular_points(c)
            except CAError as exc:
                diagnostics.append(str(exc))
                continue
            quotients += [quotient_dict(q) for q in qs]
            residuals += [residual_dict(r) for r in rs]
    section["quotient_points"] = quotients
    section["residual_points"] = residuals
    section["diagnostics"] = diagnostics
    return section


def _finish(report: dict[str, Any]) -> dict[str, Any]:
    verdicts = report.get("verdicts", {})
    report["ok"] = not report["errors"] and all(v for v in verdicts.values() if v is not None)
    return report


def analyze_report(expr: str, *, force: bool = False, max_degree: int = DEFAULT_MAX_DEGREE) -> dict[str, Any]:
    report = _base("analyze", expr)
    germ = germ_from_expression(expr, max_degree=max_degree)
    report["germ"] = germ_dict(germ)
    w1 = enumerate_W1_standard(germ)
    maximal = maximal_elements(w1)
    report["valuations"] = {
        "W1": [valuation_dict(nu, germ) for nu in w1],
        "maximal": [valuation_dict(nu, germ) for nu in maximal],
    }
    if not germ.isolated:
        msg = f"non-isolated: f = {germ.f} is not reduced at the origin, so X is not a terminal cA point"
        if not force:
            report["errors"].append(msg)
            report["blowups"] = []
            report["count"] = {"expected": None, "divisors": None, "maximal_valuations": len(maximal)}
            report["verdicts"] = {"pullback_identities": None, "count_cross_check": None, "ledger_discrepancies": None, "initial_forms_irreducible": None}
            return _finish(report)
        report["warnings"].append(msg + "; ledgers skipped")

    blowups = []
    ledger_sizes = []
    for nu in maximal:
        a, b = nu.ab
        section = _blowup_section(germ, a, b)
        if germ.isolated:
            ledger = full_divisor_ledger(germ, a, b)
            section["ledger"] = ledger_dict(ledger)
            ledger_sizes.append(len(ledger))
        else:
            section["ledger"] = None
        if section["diagnostics"] and germ.isolated:
            report["errors"] += section["diagnostics"]
        blowups.append(section)
    report["blowups"] = blowups

    expected = germ.k - 1 if germ.isolated else None
    divisors = ledger_sizes[0] if ledger_sizes and len(set(ledger_sizes)) == 1 else None
    report["count"] = {"expected": expected, "divisors": divisors, "maximal_valuations": len(maximal)}
    report["verdicts"] = {
        "pullback_identities": all(c["pullback_identity"] for s in blowups for c in s["charts"]),
        "count_cross_check": (
            None if expected is None
            else divisors == expected == len(maximal) and all(n == expected for n in ledger_sizes)
        ),
        "ledger_discrepancies": (
            None if not germ.isolated
            else all(r["discrepancy_over_X"] == "1" for s in blowups for r in s["ledger"]["records"])
        ),
        "initial_forms_irreducible": all(s["initial_form"]["verdict"] == "irreducible" for s in blowups),
    }
    return _finish(report)


def charts_report(expr: str, a: int, b: int, *, force: bool = False, max_degree: int = DEFAULT_MAX_DEGREE) -> dict[str, Any]:
    report = _base("charts", expr)
    germ = germ_from_expression(expr, max_degree=max_degree)
    report["germ"] = germ_dict(germ)
    section = _blowup_section(germ, a, b, allow_beyond=force)
    if a + b > germ.k:
        report["warnings"].append(f"a + b = {a + b} > k = {germ.k}: exploratory construction, discrepancy > 1")
    if section["diagnostics"]:
        (report["errors"] if germ.isolated else report["warnings"]).extend(section["diagnostics"])
    report["blowup"] = section
    report["verdicts"] = {"pullback_identities": all(c["pullback_identity"] for c in section["charts"])}
    return _finish(report)


def ledger_report(expr: str, a: int, b: int, *, max_degree: int = DEFAULT_MAX_DEGREE) -> dict[str, Any]:
    report = _base("ledger", expr)
    germ = germ_from_expression(expr, max_degree=max_degree)
    report["germ"] = germ_dict(germ)
    ledger = full_divisor_ledger(germ, a, b)
    report["ledger"] = ledger_dict(ledger)
    report["verdicts"] = {
        "count_cross_check": len(ledger) == germ.k - 1,
        "ledger_discrepancies": all(r.discrepancy_over_X == 1 for r in ledger.records),
    }
    return _finish(report)


def count_report(expr: str, *, max_degree: int = DEFAULT_MAX_DEGREE) -> dict[str, Any]:
    report = _base("count", expr)
    germ = germ_from_expression(expr, max_degree=max_degree)
    report["germ"] = germ_dict(germ)
    germ.require_isolated()
    maximal = maximal_elements(enumerate_W1_standard(germ))
    sizes = [len(full_divisor_ledger(germ, *nu.ab)) for nu in maximal]
    report["count"] = {"expected": germ.k - 1, "divisors": sizes[0], "maximal_valuations": len(maximal)}
    report["verdicts"] = {"count_cross_check": all(n == germ.k - 1 for n in sizes) and len(maximal) == germ.k - 1}
    return _finish(report)


def _weight_arg(values: Sequence[int]) -> Weight:
    values = tuple(values)
    if len(values) == 2:
        values = values + (1, 1)
    if len(values) != 4:
        raise CAError(f"a valuation weight needs 2 or 4 entries, got {len(values)}")
    return Weight(values)


def _table(rows) -> list[dict[str, Any]]:
    return [
        {"coordinate": v, "weight": own, "image_weight": None if img == math.inf else img}
        for v, own, img in rows
    ]


def compare_report(
    expr: str,
    first: Sequence[int],
    second: Sequence[int],
    chi_images: Sequence[str] = COORDS,
    *,
    embed_first: bool = False,
    order: int | None = None,
    alpha: Sequence[int] = (1, 1, 1, 1),
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> dict[str, Any]:
    report = _base("compare", expr)
    germ = germ_from_expression(expr, max_degree=max_degree)
    report["germ"] = germ_dict(germ)
    order = germ.k if order is None else order
    chi = CoordinateChange.from_strings(chi_images, declared_order=order, alpha=Weight(tuple(alpha)))
    nu1 = PseudoWeightedValuation(_weight_arg(first), chi if embed_first else None)
    nu2 = PseudoWeightedValuation(_weight_arg(second))
    result: Comparison = compare_detailed(nu1, nu2, chi, germ)
    report["first"] = valuation_dict(nu1, germ)
    report["second"] = valuation_dict(nu2, germ)
    report["chi"] = {"images": [str(p) for p in chi.images], "declared_order": order, "alpha": list(alpha)}
    report["verdict"] = result.verdict.value
    report["forward"] = _table(result.forward)
    report["backward"] = _table(result.backward)
    return _finish(report)


def error_report(command: str, expr: str, exc: Exception) -> dict[str, Any]:
    report = _base(command, expr)
    report["errors"].append(f"{type(exc).__name__}: {exc}")
    report["ok"] = False
    return report


def load_schema() -> dict[str, Any]:
    text = resources.files("terminal_ca").joinpath("schemas/report.schema.json").read_text()
    return json.loads(text)


def validate(report: dict[str, Any]) -> None:
    """Raise ``jsonschema.ValidationError`` if the report does not match the schema."""
    import jsonschema

    jsonschema.validate(report, load_schema())


def dumps(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=True)
