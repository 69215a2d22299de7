import pytest
from hypothesis import strategies as st

from terminal_ca.ca_form import StandardCAGerm
from terminal_ca.polyring import AMBIENT, CHART, PLANE, Polynomial, parse

CORPUS = [
    "z^2+u^2",
    "z^2+u^3",
    "z^3+u^3",
    "z^2+u^7",
    "z^4+z^2*u^2+u^4",
    "z^5+u^5",
    "z^3*u+z*u^3",
    "z^2*u+u^4",
]

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def A(text):
    return parse(text, AMBIENT)


def P(text):
    return parse(text, PLANE)


def C(text):
    return parse(text, CHART)


def germ(text):
    return StandardCAGerm.from_f(P(text))


@pytest.fixture(params=CORPUS)
def corpus_germ(request):
    return germ(request.param)


def polynomials(variables, max_exp=3, max_terms=5, coeffs=st.integers(-3, 3)):
    n = len(variables)
    monos = st.tuples(*[st.integers(0, max_exp)] * n)
    return st.dictionaries(monos, coeffs, max_size=max_terms).map(lambda d: Polynomial(variables, d))


@st.composite
def plane_germs(draw, max_k=8):
    """Random f(z, u) of order exactly k (not necessarily isolated)."""
    k = draw(st.integers(2, max_k))
    i = draw(st.integers(0, k))
    terms = {(i, k - i): draw(st.sampled_from([-2, -1, 1, 2, 3]))}
    extra = draw(st.dictionaries(
        st.tuples(st.integers(0, k + 2), st.integers(0, k + 2)).filter(lambda m: k <= sum(m) <= k + 3),
        st.integers(-3, 3), max_size=4,
    ))
    for m, c in extra.items():
        terms.setdefault(m, c)
    return StandardCAGerm.from_f(Polynomial(PLANE, terms))


def random_germ(rng, max_k=8):
    """Seeded counterpart of ``plane_germs`` for fixed-size sweeps."""
    k = rng.randint(2, max_k)
    i = rng.randint(0, k)
    terms = {(i, k - i): rng.choice([-2, -1, 1, 2, 3])}
    for _ in range(rng.randint(0, 4)):
        d = rng.randint(k, k + 3)
        j = rng.randint(0, d)
        terms.setdefault((j, d - j), rng.randint(-3, 3))
    return StandardCAGerm.from_f(Polynomial(PLANE, terms))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
