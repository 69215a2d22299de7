"""Discrepancy bookkeeping over the cyclic quotient points."""

from terminal_ca import PLANE, StandardCAGerm, parse
from terminal_ca.resolution import cross_check_count, full_divisor_ledger, pullback_coefficients, quotient_discrepancies

print("a = 4 discrepancies:", [str(q) for q in quotient_discrepancies(4)])
print("a = 4 coefficients: ", [str(q) for q in pullback_coefficients(4)])

germ = StandardCAGerm.from_f(parse("z^5 + u^5", PLANE))
for a in range(1, germ.k):
    ledger = full_divisor_ledger(germ, a, germ.k - a)
    rows = ", ".join(f"{r.name}: {r.discrepancy_over_blowup} + {r.pullback_coefficient}" for r in ledger.records)
    print(f"({a},{germ.k - a}) -> {len(ledger)} divisors [{rows}]")

print("all maximal ledgers have k - 1 entries:", cross_check_count(germ))
