import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from terminal_ca.errors import LinkingError, OrderConditionError, ValuationError
from terminal_ca.polyring import AMBIENT, Polynomial, Weight, substitute, truncate, weighted_order
from terminal_ca.valuation import (
    ComparisonVerdict as V,
    CoordinateChange,
    PseudoWeightedValuation as Nu,
    admit_to_W1,
    canonical_order,
    compare,
    compare_detailed,
    defining_equation,
    enumerate_W1_standard,
    map_order_check,
    maximal_elements,
    virtual_discrepancy,
)

from conftest import A, CORPUS, germ, polynomials

nu = Nu.standard


def test_defining_equation_standard():
    assert defining_equation(nu(1, 1), germ("z^2+u^2")) == A("x*y + z^2 + u^2")


def test_defining_equation_coordinate_change():
    chi = CoordinateChange.from_strings(["x + z^2", "y", "z", "u"])
    g = germ("z^3+u^3")
    assert defining_equation(Nu(Weight((1, 1, 1, 1)), chi), g) == A("x*y + y*z^2 + z^3 + u^3")


def test_defining_equation_swap():
    g = germ("z^3+u^3")
    assert defining_equation(Nu(Weight((1, 1, 1, 1)), CoordinateChange.swap_xy()), g) == g.phi


def test_virtual_discrepancy_examples():
    g = germ("z^2+u^2")
    assert virtual_discrepancy(nu(1, 1), g) == 1
    assert virtual_discrepancy(nu(2, 1), g) == 2


@pytest.mark.parametrize("text", CORPUS)
def test_virtual_discrepancy_is_one_on_the_boundary(text):
    g = germ(text)
    for a in range(1, g.k):
        assert virtual_discrepancy(nu(a, g.k - a), g) == 1


@pytest.mark.parametrize("text", CORPUS)
def test_virtual_discrepancy_ladder(text):
    g = germ(text)
    for a, b in itertools.product(range(1, 2 * g.k + 1), repeat=2):
        expected = 1 if a + b <= g.k else a + b + 1 - g.k
        assert virtual_discrepancy(nu(a, b), g) == expected


@pytest.mark.parametrize(
    "text, expected",
    [("z^2+u^2", [(1, 1)]), ("z^3+u^3", [(1, 1), (1, 2), (2, 1)])],
)
def test_enumerate_W1(text, expected):
    assert [v.ab for v in enumerate_W1_standard(germ(text))] == expected


def test_enumerate_W1_k4():
    w1 = enumerate_W1_standard(germ("z^4+z^2*u^2+u^4"))
    assert len(w1) == 6
    assert [v.ab for v in maximal_elements(w1)] == [(1, 3), (2, 2), (3, 1)]


@pytest.mark.parametrize(
    "text, expected",
    [("z^2+u^2", [(1, 1)]), ("z^5+u^5", [(1, 4), (2, 3), (3, 2), (4, 1)]), ("z^3+u^3", [(1, 2), (2, 1)])],
)
def test_maximal_elements(text, expected):
    g = germ(text)
    maximal = maximal_elements(enumerate_W1_standard(g))
    assert [v.ab for v in maximal] == expected
    assert len(maximal) == g.k - 1


def test_W1_rejects_nonunit_zu_weights():
    g = germ("z^2+u^2")
    with pytest.raises(ValuationError, match="weight 1 to z and u"):
        admit_to_W1(Nu(Weight((1, 1, 2, 1))), g)
    with pytest.raises(ValuationError, match="virtual discrepancy 2"):
        admit_to_W1(nu(2, 1), g)
    assert admit_to_W1(nu(1, 1), g) == nu(1, 1)


def test_valuation_weights_must_be_positive():
    with pytest.raises(ValuationError):
        Nu(Weight((1, 0, 1, 1)))


def test_canonical_order():
    vals = [nu(3, 1), nu(1, 3), nu(2, 2)]
    assert [v.ab for v in canonical_order(vals)] == [(1, 3), (2, 2), (3, 1)]


# map order

def test_map_order_examples():
    ident = CoordinateChange.identity()
    assert all(map_order_check(ident, (1, 1, 1, 1), d) for d in (1, 5, 50))
    assert map_order_check(ident, (2, 1, 3, 1), 7)
    chi = CoordinateChange.from_strings(["x + z^3", "y", "z", "u"])
    assert map_order_check(chi, (1, 1, 1, 1), 2)
    assert not map_order_check(chi, (1, 1, 1, 1), 3)


def test_coordinate_change_validation():
    with pytest.raises(ValuationError, match="invertible"):
        CoordinateChange.from_strings(["x + y", "x + y", "z", "u"])
    with pytest.raises(ValuationError, match="origin"):
        CoordinateChange.from_strings(["x + 1", "y", "z", "u"])
    with pytest.raises(OrderConditionError):
        CoordinateChange.from_strings(["x + z^2", "y", "z", "u"], declared_order=2)
    # a pure permutation is accepted at any order
    assert CoordinateChange.from_strings(["y", "x", "z", "u"], declared_order=9).permutation == (1, 0, 2, 3)


def test_inverse_images_compose_to_identity():
    chi = CoordinateChange.from_strings(["x + z^2 + y*u", "y - z*u", "z + u^3", "u + z^2"])
    T = 6
    inv = chi.inverse_images(T)
    composed = [truncate(substitute(p, dict(zip("xyzu", inv))), T) for p in chi.images]
    assert composed == [Polynomial.var(AMBIENT, v) for v in "xyzu"]


# compare

def test_compare_identity_examples():
    g = germ("z^3+u^3")
    ident = CoordinateChange.identity()
    assert compare(nu(2, 1), nu(1, 1), ident, g) is V.STRICTLY_GREATER
    assert compare(nu(1, 1), nu(2, 1), ident, g) is V.STRICTLY_LESS
    assert compare(nu(1, 2), nu(2, 1), ident, g) is V.INCOMPARABLE
    assert compare(nu(1, 2), nu(1, 2), ident, g) is V.EQUIVALENT


def test_compare_swap_is_equivalence():
    g = germ("z^3+u^3")
    assert compare(nu(1, 2), nu(2, 1), CoordinateChange.swap_xy(), g) is V.EQUIVALENT


def test_compare_rejects_unlinked_change():
    chi = CoordinateChange.from_strings(["x + z^2", "y", "z", "u"])
    with pytest.raises(LinkingError):
        compare(nu(1, 1), nu(1, 1), chi, germ("z^3+u^3"))


def test_compare_scaling_fails_order_condition():
    # a scaling moves x by a term of the same degree
    with pytest.raises(OrderConditionError):
        CoordinateChange.from_strings(["2*x", "y", "z", "u"])


def test_compare_swap_unit():
    g = germ("z^2+u^2")
    assert compare_detailed(nu(1, 1), nu(1, 1), CoordinateChange.swap_xy(), g).unit == 1


def test_compare_nonlinear_equivalent():
    # order-3 change x -> x + z^4 does not move the weight of x under (2,1,1,1)
    g = germ("z^3+u^3")
    chi = CoordinateChange.from_strings(["x + z^4", "y", "z", "u"], declared_order=3)
    nu1 = Nu(Weight((2, 1, 1, 1)), chi)
    assert compare(nu1, nu(2, 1), chi, g) is V.EQUIVALENT


def test_compare_nonlinear_strictly_less():
    g = germ("z^3+u^3")
    chi = CoordinateChange.from_strings(["x + z^2", "y", "z", "u"], declared_order=1)
    nu1 = Nu(Weight((1, 1, 1, 1)), chi)
    res = compare_detailed(nu1, nu(2, 1), chi, g)
    assert res.verdict is V.STRICTLY_LESS
    assert res.forward[0] == ("x", 2, 1)
    assert res.backward[0] == ("x", 1, 2)


positive_weights = st.tuples(*[st.integers(1, 4)] * 4)


@given(positive_weights, positive_weights)
def test_compare_with_identity_is_componentwise(w1, w2):
    g = germ("z^3+u^3")
    verdict = compare(Nu(Weight(w1)), Nu(Weight(w2)), CoordinateChange.identity(), g)
    ge = all(a >= b for a, b in zip(w1, w2))
    le = all(a <= b for a, b in zip(w1, w2))
    expected = V.EQUIVALENT if ge and le else V.STRICTLY_GREATER if ge else V.STRICTLY_LESS if le else V.INCOMPARABLE
    assert verdict is expected


@given(positive_weights, positive_weights, positive_weights)
def test_compare_transitive_on_chains(w1, w2, w3):
    top = tuple(max(t) for t in zip(w1, w2, w3))
    mid = tuple(sorted(t)[1] for t in zip(w1, w2, w3))
    low = tuple(min(t) for t in zip(w1, w2, w3))
    g = germ("z^2+u^2")
    ident = CoordinateChange.identity()
    ok = (V.STRICTLY_GREATER, V.EQUIVALENT)
    assert compare(Nu(Weight(top)), Nu(Weight(mid)), ident, g) in ok
    assert compare(Nu(Weight(mid)), Nu(Weight(low)), ident, g) in ok
    assert compare(Nu(Weight(top)), Nu(Weight(low)), ident, g) in ok
    assert compare(Nu(Weight(top)), Nu(Weight(top)), ident, g) is V.EQUIVALENT


SYMMETRIES = [("y", "x", "z", "u"), ("x", "y", "u", "z"), ("y", "x", "u", "z")]


def _inverse_perm(images):
    pos = {v: i for i, v in enumerate(images)}
    return tuple("xyzu"[pos[v]] for v in "xyzu")


@pytest.mark.parametrize("images", SYMMETRIES)
def test_equivalence_is_symmetric_under_permutations(images):
    g = germ("z^3+u^3")
    chi = CoordinateChange.from_strings(images)
    chi_inv = CoordinateChange.from_strings(_inverse_perm(images))
    vals = [Nu(Weight(w)) for w in itertools.product((1, 2), repeat=4)]
    for v1, v2 in itertools.product(vals, repeat=2):
        forward = compare(v1, v2, chi, g) is V.EQUIVALENT
        backward = compare(v2, v1, chi_inv, g) is V.EQUIVALENT
        assert forward == backward


@settings(max_examples=40, deadline=None)
@given(
    positive_weights,
    positive_weights,
    st.lists(polynomials(AMBIENT, max_exp=2, max_terms=2), min_size=4, max_size=4),
    polynomials(AMBIENT, max_exp=3, max_terms=4),
)
def test_coordinate_reduction_lemma(w1, w2, higher, g):
    """Domination on the four coordinates implies it for every polynomial."""
    # chi = identity + terms of degree >= 2
    images = [Polynomial.var(AMBIENT, v) + sum((Polynomial(AMBIENT, {m: c}) for m, c in h.terms.items() if sum(m) >= 2),
                                                 Polynomial.zero(AMBIENT))
              for v, h in zip("xyzu", higher)]
    pulled = substitute(g, dict(zip("xyzu", images)))
    on_coords = all(w2[i] <= weighted_order(images[i], w1) for i in range(4))
    if on_coords:
        assert weighted_order(g, w2) <= weighted_order(pulled, w1)
    else:
        # necessity: some coordinate itself is a witness
        i = next(i for i in range(4) if w2[i] > weighted_order(images[i], w1))
        coord = Polynomial.var(AMBIENT, "xyzu"[i])
        assert weighted_order(coord, w2) > weighted_order(substitute(coord, dict(zip("xyzu", images))), w1)
