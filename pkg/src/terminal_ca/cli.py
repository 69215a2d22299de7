"""Command line interface: ``terminal-ca {analyze,charts,compare,ledger,count}``.

Exit status is 0 when every verification verdict in the report passes, 1 when
a verdict fails or the report carries errors, and 2 for unusable input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Sequence

from . import report as rp
from .ca_form import DEFAULT_MAX_DEGREE
from .errors import CAError


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _pair(text: str) -> tuple[int, int]:
    values = _int_list(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"expected a,b, got {text!r}")
    return values[0], values[1]


def _images(text: str) -> list[str]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("chi needs four comma-separated images (of x, y, z, u)")
    return parts


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=default(False), help="emit the JSON report")
    parser.add_argument("--quiet", action="store_true", default=default(False), help="print only the verdict")
    parser.add_argument(
        "--force", action="store_true", default=default(False),
        help="continue on non-isolated germs; allow a + b > k for charts",
    )
    parser.add_argument(
        "--max-degree", type=int, default=default(DEFAULT_MAX_DEGREE), metavar="N",
        help=f"total degree bound for inputs (default {DEFAULT_MAX_DEGREE})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="terminal-ca",
        description="Divisors of discrepancy 1 over cA points xy + f(z,u) = 0.",
    )
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("expr", help="f(z,u), or a full equation xy + f(z,u)")
        _global_flags(p, suppress=True)
        return p

    add("analyze", help="full classification report")
    p = add("charts", help="the four charts of one weighted blow-up")
    p.add_argument("--weights", type=_pair, required=True, metavar="A,B")
    p = add("compare", help="compare two valuations through a coordinate change")
    p.add_argument("--first", type=_int_list, required=True, metavar="A,B[,C,D]")
    p.add_argument("--second", type=_int_list, required=True, metavar="A,B[,C,D]")
    p.add_argument("--chi", type=_images, default=["x", "y", "z", "u"], metavar="P,Q,R,S",
                   help="pullbacks of x, y, z, u (default: identity)")
    p.add_argument("--embed-first", action="store_true",
                   help="the first valuation uses chi as its embedding")
    p.add_argument("--order", type=int, default=None, help="declared order of chi (default: k)")
    p.add_argument("--alpha", type=_int_list, default=[1, 1, 1, 1], metavar="W,W,W,W",
                   help="base weights for the order condition")
    p = add("ledger", help="divisors of discrepancy 1 seen from one maximal blow-up")
    p.add_argument("--weights", type=_pair, required=True, metavar="A,B")
    add("count", help="number of divisors of discrepancy 1")
    return parser


def _run(args: argparse.Namespace) -> dict[str, Any]:
    common = {"max_degree": args.max_degree}
    if args.command == "analyze":
        return rp.analyze_report(args.expr, force=args.force, **common)
    if args.command == "charts":
        return rp.charts_report(args.expr, *args.weights, force=args.force, **common)
    if args.command == "ledger":
        return rp.ledger_report(args.expr, *args.weights, **common)
    if args.command == "count":
        return rp.count_report(args.expr, **common)
    return rp.compare_report(
        args.expr, args.first, args.second, args.chi,
        embed_first=args.embed_first, order=args.order, alpha=args.alpha, **common,
    )


# text rendering

def _charts_text(section: dict[str, Any]) -> list[str]:
    lines = []
    for c in section["charts"]:
        act = c["action"]
        group = "" if act["order"] == 1 else f" / Z_{act['order']}({','.join(map(str, act['weights']))})"
        params = ", ".join(f"{v} = {p}" for v, p in c["parameterization"].items())
        check = "ok" if c["pullback_identity"] else "FAILED"
        lines.append(f"  {c['index']}: {{{c['equation']} = 0}}{group}")
        lines.append(f"      {params}   [pullback identity {check}]")
    for q in section["quotient_points"]:
        lines.append(f"  quotient point in {q['chart']}: type {q['type']}")
    for r in section["residual_points"]:
        where = r["location"] if r["location"] is not None else "{" + ", ".join(r["ideal"]) + " = 0}"
        lines.append(
            f"  singular point in {r['chart']} at {where}: local equation {r['local_equation']},"
            f" multiplicity {r['multiplicity']}, {'isolated' if r['isolated'] else 'NOT isolated'}"
            + (f", {r['count']} points" if r["count"] > 1 else "")
        )
    if not section["quotient_points"] and not section["residual_points"] and not section["diagnostics"]:
        lines.append("  no singular points on the exceptional divisor")
    for d in section["diagnostics"]:
        lines.append(f"  DIAGNOSTIC: {d}")
    return lines


def _ledger_text(ledger: dict[str, Any]) -> list[str]:
    lines = [f"  {'divisor':<10} {'center':<20} {'a(F,Xbar)':>10} {'coeff':>8} {'a(F,X)':>8}"]
    for r in ledger["records"]:
        lines.append(
            f"  {r['name']:<10} {r['center']:<20} {r['discrepancy_over_blowup']:>10}"
            f" {r['pullback_coefficient']:>8} {r['discrepancy_over_X']:>8}"
        )
    lines.append(f"  {ledger['count']} divisor(s)")
    return lines


def render_text(report: dict[str, Any]) -> str:
    lines = []
    germ = report.get("germ")
    if germ:
        lines.append(f"germ: {germ['phi']} = 0   (k = {germ['k']}, isolated: {'yes' if germ['isolated'] else 'no'})")
    cmd = report["command"]
    if cmd == "analyze" and "valuations" in report:
        vals = report["valuations"]
        lines.append("W1 (standard embedding): " + ", ".join(v["label"] for v in vals["W1"]))
        lines.append("maximal: " + ", ".join(v["label"] for v in vals["maximal"]))
        for s in report.get("blowups", []):
            lines.append(f"blow-up nu_{{{s['a']},{s['b']}}}: initial form {s['initial_form']['form']} ({s['initial_form']['verdict']})")
            lines += _charts_text(s)
            if s.get("ledger"):
                lines += _ledger_text(s["ledger"])
    elif cmd == "charts" and "blowup" in report:
        s = report["blowup"]
        lines.append(f"charts of the (a, b) = ({s['a']}, {s['b']}) blow-up:")
        lines += _charts_text(s)
    elif cmd == "ledger" and "ledger" in report:
        lines += _ledger_text(report["ledger"])
    elif cmd == "compare" and "verdict" in report:
        lines.append(f"{report['first']['label']} vs {report['second']['label']}: {report['verdict']}")
        lines.append("  coordinate  weight  weight of chi^*(coordinate)")
        for row in report["forward"]:
            lines.append(f"  {row['coordinate']:<10}  {row['weight']:>6}  {row['image_weight']}")
        lines.append("  reverse direction (through chi^-1):")
        for row in report["backward"]:
            lines.append(f"  {row['coordinate']:<10}  {row['weight']:>6}  {row['image_weight']}")
    if "count" in report and report["count"]["expected"] is not None:
        c = report["count"]
        lines.append(
            f"divisors of discrepancy 1: {c['divisors']} (expected k - 1 = {c['expected']},"
            f" maximal valuations: {c['maximal_valuations']})"
        )
    for name, v in report.get("verdicts", {}).items():
        if v is not None:
            lines.append(f"check {name}: {'pass' if v else 'FAIL'}")
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    for e in report["errors"]:
        lines.append(f"error: {e}")
    lines.append("OK" if report["ok"] else "FAILED")
    return "\n".join(lines)


def _quiet(report: dict[str, Any]) -> str:
    if report["command"] == "compare" and "verdict" in report:
        return report["verdict"]
    if report["command"] == "count" and report["ok"]:
        return str(report["count"]["divisors"])
    return "OK" if report["ok"] else "FAILED"


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = _run(args)
        status = 0 if report["ok"] else 1
    except CAError as exc:
        report = rp.error_report(args.command, args.expr, exc)
        status = 2
    if args.json:
        print(rp.dumps(report))
    elif args.quiet:
        print(_quiet(report))
    else:
        print(render_text(report))
    return status


if __name__ == "__main__":
    sys.exit(main())
