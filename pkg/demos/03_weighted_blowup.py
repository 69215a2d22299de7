"""Charts of a weighted blow-up and the singular points on them."""

from terminal_ca import PLANE, StandardCAGerm, parse
from terminal_ca.blowup import chart_singular_points, charts, exceptional_initial_form, pullback_identity_check

germ = StandardCAGerm.from_f(parse("z^3 + u^3", PLANE))
a, b = 2, 1

form, verdict = exceptional_initial_form(germ, a, b)
print(f"initial form {form}: {verdict}")

for chart in charts(germ, a, b):
    print(chart)
    print("   pullback identity:", pullback_identity_check(chart, germ.phi))
    quotients, residual = chart_singular_points(chart)
    for q in quotients:
        print("   cyclic quotient point of type", q.type_label)
    for r in residual:
        print("   hypersurface point", r.location, "multiplicity", r.multiplicity)

# a germ whose blow-up keeps a cA point in U4
germ = StandardCAGerm.from_f(parse("z^2 + u^5", PLANE))
u4 = charts(germ, 1, 1)[3]
_, (point,) = chart_singular_points(u4)
print(u4.index, "local equation:", point.local_equation)

# irrational points are described by their ideal
germ = StandardCAGerm.from_f(parse("(z^2 - 2*u^2)^2 + (z^2 - 2*u^2)*z^3", PLANE))
_, (point,) = chart_singular_points(charts(germ, 2, 2)[2])
print(point.count, "points cut out by", ", ".join(map(str, point.ideal)))
