"""Standard form, order k, and the valuations of discrepancy one."""

from terminal_ca import PLANE, StandardCAGerm, parse
from terminal_ca.ca_form import recognize
from terminal_ca.polyring import AMBIENT
from terminal_ca.valuation import PseudoWeightedValuation, enumerate_W1_standard, maximal_elements, virtual_discrepancy

germ = StandardCAGerm.from_f(parse("z^4 + z^2*u^2 + u^4", PLANE))
print(f"f = {germ.f}, k = {germ.k}, isolated = {germ.isolated}")

# a full equation is recognized as well
print("recognized:", recognize(parse("x*y + z^2*u + u^4", AMBIENT)).f)

# a non-reduced f is flagged
print("z^2 isolated:", StandardCAGerm.from_f(parse("z^2", PLANE)).isolated)

w1 = enumerate_W1_standard(germ)
print("W1:", ", ".join(nu.label for nu in w1))
maximal = maximal_elements(w1)
print("maximal:", ", ".join(nu.label for nu in maximal))
print("count k - 1 =", len(maximal))

# beyond a + b = k the discrepancy grows by one per step
for a in range(1, 6):
    nu = PseudoWeightedValuation.standard(a, 3)
    print(f"  d({nu.label}) = {virtual_discrepancy(nu, germ)}")
