"""The partial order on valuations, with and without coordinate changes."""

from terminal_ca import PLANE, StandardCAGerm, parse
from terminal_ca.polyring import Weight
from terminal_ca.valuation import CoordinateChange, PseudoWeightedValuation, compare, compare_detailed

germ = StandardCAGerm.from_f(parse("z^3 + u^3", PLANE))
nu = PseudoWeightedValuation.standard
ident = CoordinateChange.identity()

print("nu_{2,1} vs nu_{1,1}:", compare(nu(2, 1), nu(1, 1), ident, germ).value)
print("nu_{1,2} vs nu_{2,1}:", compare(nu(1, 2), nu(2, 1), ident, germ).value)
print("with x <-> y:        ", compare(nu(1, 2), nu(2, 1), CoordinateChange.swap_xy(), germ).value)

# a genuine coordinate change x -> x + z^2 of order 1
chi = CoordinateChange.from_strings(["x + z^2", "y", "z", "u"], declared_order=1)
moved = PseudoWeightedValuation(Weight((1, 1, 1, 1)), chi)
result = compare_detailed(moved, nu(2, 1), chi, germ)
print(f"{moved.label} vs nu_{{2,1}}: {result.verdict.value}")
for name, own, image in result.forward:
    print(f"  {name}: {own} <= {image}?")
