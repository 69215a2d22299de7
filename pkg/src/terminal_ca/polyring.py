"""Exact sparse polynomials over the rationals in at most four named variables.

A :class:`Polynomial` is an immutable map from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients.  Besides ring arithmetic the module
provides the weighted-order machinery (weighted order, initial form) and the
substitution / monomial-division steps used to build blow-up charts.

Only polynomials are supported, never truncated power series: every germ and
coordinate change handled by the package must be given by polynomial data.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Union

from .errors import (
    DegreeBoundExceeded,
    DivisionError,
    ParseError,
    SubstitutionError,
    VariableSetMismatch,
    ZeroPolynomialError,
)

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]

MAX_VARIABLES = 4
DEFAULT_MAX_EXPONENT = 10**6

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class VariableSet:
    """Ordered, distinct variable names; the order fixes exponent positions."""

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("a variable set needs at least one variable")
        if len(names) > MAX_VARIABLES:
            raise ValueError(f"at most {MAX_VARIABLES} variables are supported, got {len(names)}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not _IDENT.match(name):
                raise ValueError(f"invalid variable name {name!r}")

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self.names

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise VariableSetMismatch(f"variable {name!r} not in {self.names}") from None

    def unit(self, name: str) -> Monomial:
        """Exponent tuple of the single variable ``name``."""
        i = self.index(name)
        return tuple(1 if j == i else 0 for j in range(len(self.names)))


AMBIENT = VariableSet(("x", "y", "z", "u"))
PLANE = VariableSet(("z", "u"))
CHART = VariableSet(("xb", "yb", "zb", "ub"))


@dataclass(frozen=True)
class Weight:
    """Nonnegative integer weight vector, one entry per variable."""

    components: tuple[int, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise ValueError("empty weight")
        for c in comps:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise ValueError(f"weight components must be nonnegative integers, got {comps}")
        if not any(comps):
            raise ValueError("a weight needs at least one positive component")

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[int]:
        return iter(self.components)

    def __getitem__(self, i: int) -> int:
        return self.components[i]

    def of(self, exponents: Monomial) -> int:
        return sum(w * e for w, e in zip(self.components, exponents))


def _as_weight(sigma: Weight | Iterable[int]) -> Weight:
    return sigma if isinstance(sigma, Weight) else Weight(tuple(sigma))


def _coerce(c: Scalar) -> Fraction:
    if isinstance(c, bool) or not isinstance(c, (int, Fraction)):
        raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")
    return Fraction(c)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, variables: VariableSet, terms: Mapping[Monomial, Scalar] | None = None):
        n = len(variables)
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != n or any(not isinstance(e, int) or e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono} for variables {variables.names}")
            c = _coerce(c)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
                if not clean[mono]:
                    del clean[mono]
        self.variables = variables
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, variables: VariableSet, terms: dict[Monomial, Fraction]) -> Polynomial:
        p = cls.__new__(cls)
        p.variables = variables
        p._terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, variables: VariableSet) -> Polynomial:
        return cls._from_clean(variables, {})

    @classmethod
    def constant(cls, variables: VariableSet, c: Scalar) -> Polynomial:
        c = _coerce(c)
        return cls._from_clean(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def var(cls, variables: VariableSet, name: str) -> Polynomial:
        return cls._from_clean(variables, {variables.unit(name): Fraction(1)})

    @classmethod
    def monomial(cls, variables: VariableSet, exponents: Monomial, coeff: Scalar = 1) -> Polynomial:
        return cls(variables, {tuple(exponents): coeff})

    # inspection

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exponents: Monomial) -> Fraction:
        return self._terms.get(tuple(exponents), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * len(self.variables))

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.variables.index(name)
        return max((m[i] for m in self._terms), default=-1)

    def used_variables(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.variables) if any(m[i] for m in self._terms))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in graded lexicographic order, leading term first."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    # arithmetic

    def _check(self, other: Polynomial) -> None:
        if self.variables != other.variables:
            raise VariableSetMismatch(
                f"variable sets differ: {self.variables.names} vs {other.variables.names}"
            )

    def _lift(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.variables, other)

    def __add__(self, other) -> Polynomial:
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._from_clean(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._from_clean(self.variables, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            try:
                c = _coerce(other)
            except TypeError:
                return NotImplemented
            if not c:
                return Polynomial.zero(self.variables)
            return Polynomial._from_clean(self.variables, {m: c * v for m, v in self._terms.items()})
        self._check(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._from_clean(self.variables, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {n!r}")
        result = Polynomial.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.variables == other.variables and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == Polynomial.constant(self.variables, other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        return serialize(self)

    def __repr__(self) -> str:
        return f"Polynomial({serialize(self)!r}, vars={','.join(self.variables)})"


# ring operations as functions

def add(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    return p * q


def derivative(p: Polynomial, name: str) -> Polynomial:
    i = p.variables.index(name)
    out = {}
    for m, c in p._terms.items():
        if m[i]:
            out[m[:i] + (m[i] - 1,) + m[i + 1:]] = c * m[i]
    return Polynomial._from_clean(p.variables, out)


def substitute(p: Polynomial, images: Mapping[str, Polynomial]) -> Polynomial:
    """Replace every variable of ``p`` by its image and expand.

    All images must live in one target variable set.  Variables that do not
    occur in ``p`` need no image.
    """
    targets = {img.variables for img in images.values()}
    if len(targets) > 1:
        raise VariableSetMismatch("substitution images use different variable sets")
    for name in images:
        p.variables.index(name)
    used = p.used_variables()
    missing = [v for v in used if v not in images]
    if missing:
        raise SubstitutionError(f"no image given for variable(s) {', '.join(missing)}")
    if not targets:
        if p.is_constant():
            return p
        raise SubstitutionError("cannot substitute without images")
    (target,) = targets

    powers: dict[tuple[str, int], Polynomial] = {}

    def power(name: str, e: int) -> Polynomial:
        key = (name, e)
        if key not in powers:
            powers[key] = images[name] if e == 1 else power(name, e - 1) * images[name]
        return powers[key]

    result = Polynomial.zero(target)
    for m, c in p._terms.items():
        term = Polynomial.constant(target, c)
        for name, e in zip(p.variables, m):
            if e:
                term = term * power(name, e)
        result = result + term
    return result


def evaluate(p: Polynomial, point: Mapping[str, Scalar]) -> Fraction:
    values = [Fraction(point[v]) if v in point else None for v in p.variables]
    total = Fraction(0)
    for m, c in p._terms.items():
        t = c
        for v, e in zip(values, m):
            if e:
                if v is None:
                    raise SubstitutionError("point does not assign every used variable")
                t *= v**e
        total += t
    return total


def weighted_order(p: Polynomial, sigma: Weight | Iterable[int]) -> int | float:
    """Minimum sigma-weight over the terms of ``p``; ``math.inf`` for zero."""
    sigma = _as_weight(sigma)
    if len(sigma) != len(p.variables):
        raise VariableSetMismatch(f"weight {sigma.components} does not match {p.variables.names}")
    return min((sigma.of(m) for m in p._terms), default=math.inf)


def initial_form(p: Polynomial, sigma: Weight | Iterable[int]) -> Polynomial:
    """Sum of the terms of ``p`` of minimal sigma-weight."""
    sigma = _as_weight(sigma)
    if p.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no initial form")
    d = weighted_order(p, sigma)
    return Polynomial._from_clean(
        p.variables, {m: c for m, c in p._terms.items() if sigma.of(m) == d}
    )


def divide_by_monomial(p: Polynomial, m: Monomial) -> Polynomial:
    m = tuple(m)
    if len(m) != len(p.variables):
        raise VariableSetMismatch(f"monomial {m} does not match {p.variables.names}")
    out = {}
    for mono, c in p._terms.items():
        q = tuple(a - b for a, b in zip(mono, m))
        if min(q) < 0:
            raise DivisionError(
                f"term {serialize(Polynomial._from_clean(p.variables, {mono: c}))} "
                f"is not divisible by {_monomial_str(p.variables, m) or '1'}"
            )
        out[q] = c
    return Polynomial._from_clean(p.variables, out)


def truncate(p: Polynomial, degree: int) -> Polynomial:
    """Drop every term of total degree above ``degree``."""
    return Polynomial._from_clean(p.variables, {m: c for m, c in p._terms.items() if sum(m) <= degree})


def homogeneous_part(p: Polynomial, degree: int) -> Polynomial:
    return Polynomial._from_clean(p.variables, {m: c for m, c in p._terms.items() if sum(m) == degree})


def linear_part(p: Polynomial) -> dict[str, Fraction]:
    """Coefficient of each variable in the degree-one part."""
    return {v: p.coefficient(p.variables.unit(v)) for v in p.variables}


def change_variables(p: Polynomial, target: VariableSet, mapping: Mapping[str, str] | None = None) -> Polynomial:
    """Re-express ``p`` over ``target`` by renaming (default: same names)."""
    mapping = mapping or {}
    return substitute(p, {v: Polynomial.var(target, mapping.get(v, v)) for v in p.used_variables()})


# serialization

def _monomial_str(variables: VariableSet, m: Monomial) -> str:
    parts = []
    for name, e in zip(variables, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def serialize(p: Polynomial) -> str:
    """Canonical text form, graded lex with the variable order as priority.

    Integer coefficients give text accepted by :func:`parse`; other rationals
    are written ``p/q*...`` which is display-only.
    """
    if p.is_zero():
        return "0"
    pieces = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        mono = _monomial_str(p.variables, m)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces)


# parsing

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\.\d*)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()])|(?P<bad>\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None or mt.end() == pos:
            break
        kind = mt.lastgroup
        if kind == "bad":
            raise ParseError(f"unexpected character {mt.group(kind)!r}", mt.start(kind))
        tokens.append((kind, mt.group(kind), mt.start(kind)))
        pos = mt.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: VariableSet, max_exponent: int, max_degree: int | None):
        self.tokens = _tokenize(text)
        self.i = 0
        self.variables = variables
        self.max_exponent = max_exponent
        self.max_degree = max_degree

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def _bound(self, p: Polynomial) -> Polynomial:
        if self.max_degree is not None and p.total_degree() > self.max_degree:
            raise DegreeBoundExceeded(f"total degree exceeds the bound {self.max_degree}")
        for m in p._terms:
            if any(e > self.max_exponent for e in m):
                raise ParseError(f"exponent overflow: exceeds bound {self.max_exponent}")
        return p

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        p = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", pos)
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.unary()
        while True:
            kind, text, pos = self.peek()
            if kind == "op" and text == "*":
                self.take()
                p = self._bound(p * self.unary())
            elif kind in ("num", "name") or (kind == "op" and text == "("):
                raise ParseError("implicit multiplication is not allowed; write '*'", pos)
            else:
                return p

    def unary(self) -> Polynomial:
        kind, text, _ = self.peek()
        if kind == "op" and text == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        kind, text, pos = self.peek()
        if not (kind == "op" and text == "^"):
            return base
        self.take()
        kind, text, pos = self.take()
        if kind != "num" or "." in text:
            raise ParseError("non-integer exponent", pos)
        n = int(text)
        if n > self.max_exponent:
            raise ParseError(f"exponent overflow: {n} exceeds bound {self.max_exponent}", pos)
        if self.max_degree is not None and base.total_degree() * n > self.max_degree:
            raise DegreeBoundExceeded(f"total degree exceeds the bound {self.max_degree}")
        nxt = self.peek()
        if nxt[0] == "op" and nxt[1] == "^":
            raise ParseError("chained '^' is ambiguous; use parentheses", nxt[2])
        return self._bound(base**n)

    def atom(self) -> Polynomial:
        kind, text, pos = self.take()
        if kind == "num":
            if "." in text:
                raise ParseError(f"non-integer literal {text!r}", pos)
            return Polynomial.constant(self.variables, int(text))
        if kind == "name":
            if text not in self.variables:
                raise ParseError(f"unknown variable {text!r}; expected one of {', '.join(self.variables)}", pos)
            return Polynomial.var(self.variables, text)
        if kind == "op" and text == "(":
            p = self.expr()
            k2, t2, p2 = self.take()
            if not (k2 == "op" and t2 == ")"):
                raise ParseError("expected ')'", p2)
            return p
        if kind == "end":
            raise ParseError("unexpected end of expression", pos)
        raise ParseError(f"unexpected {text!r}", pos)


def parse(
    expr: str,
    variables: VariableSet,
    *,
    max_exponent: int = DEFAULT_MAX_EXPONENT,
    max_degree: int | None = None,
) -> Polynomial:
    """Parse an expression over ``variables``.

    Grammar: integer literals, variable names, ``+ - * ^`` and parentheses.
    ``^`` binds tightest and takes a nonnegative integer literal; unary minus
    is allowed; implicit multiplication (``2z``) is rejected.
    """
    return _Parser(expr, variables, max_exponent, max_degree).parse()
