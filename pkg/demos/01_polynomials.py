"""Exact polynomial arithmetic, weighted orders and initial forms."""

from fractions import Fraction

from terminal_ca import AMBIENT, PLANE, Weight, parse
from terminal_ca.polyring import derivative, initial_form, serialize, substitute, weighted_order

phi = parse("x*y + z^5 + u^6", AMBIENT)
print("phi =", phi)

# weighted order and the lowest-weight part
sigma = Weight((2, 3, 1, 1))
print("order under (2,3,1,1):", weighted_order(phi, sigma))
print("initial form:", initial_form(phi, sigma))

# zero has infinite order
print("order of 0:", weighted_order(phi - phi, sigma))

# substitution composes polynomial maps
f = parse("z^2 + u^3", PLANE)
g = substitute(f, {"z": parse("z + u^2", PLANE), "u": parse("u", PLANE)})
print("f(z + u^2, u) =", g)
print("d/dz:", derivative(g, "z"))

# rational coefficients stay exact
h = parse("3*z^2 - u", PLANE) * Fraction(1, 6)
print("h =", serialize(h))
