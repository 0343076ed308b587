"""
Sparse multivariate polynomials in ``x1, x2, ...`` with exact coefficients.

A monomial is a tuple of exponents ``(e1, e2, ...)`` with trailing zeros
removed, so ``()`` is the constant monomial and ``(0, 2)`` is ``x2^2``.
Coefficients are Python ints or :class:`fractions.Fraction`; nothing is ever
rounded.

>>> f = parse("x1^2 - x1*x2")
>>> f
Polynomial('x1^2 - x1*x2')
>>> divided_difference(f, 1)
Polynomial('x1 + x2')
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterator, Mapping, Union

__all__ = [
    "Monomial", "Polynomial", "DivisionError", "var", "const", "swap_vars",
    "divided_difference", "exact_divide_linear", "evaluate", "parse",
    "format_poly", "grlex_key", "add", "sub", "mul", "negate", "scale",
]

Monomial = tuple[int, ...]
Coeff = Union[int, Fraction]


class DivisionError(ArithmeticError):
    """Raised when an exact division leaves a remainder."""

    def __init__(self, message: str, remainder: "Polynomial"):
        super().__init__(f"{message}; remainder {remainder}")
        self.remainder = remainder


def _strip(exps) -> Monomial:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


def _normalize(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def grlex_key(m: Monomial) -> tuple:
    """Sort key: larger key means larger monomial in grlex, x1 > x2 > ..."""
    # stripped tuples compare lexicographically exactly as padded ones do
    return (sum(m), m)


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps monomials to nonzero coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coeff] | None = None):
        clean: dict[Monomial, Coeff] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    m = _strip(m)
                    c = _normalize(clean.get(m, 0) + c)
                    if c:
                        clean[m] = c
                    else:
                        clean.pop(m, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Coeff]) -> Polynomial:
        # caller guarantees stripped monomials and nonzero normalized coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Coeff]:
        return self._terms

    def items(self):
        return self._terms.items()

    def __iter__(self) -> Iterator[tuple[Monomial, Coeff]]:
        return iter(sorted(self._terms.items(), key=lambda t: grlex_key(t[0]),
                           reverse=True))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def nvars(self) -> int:
        """Largest variable index occurring (0 for constants)."""
        return max((len(m) for m in self._terms), default=0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def leading_term(self) -> tuple[Monomial, Coeff]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=grlex_key)
        return m, self._terms[m]

    def coefficients(self) -> list[Coeff]:
        return list(self._terms.values())

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            self, other = other, self
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _normalize(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Coeff] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                if len(m1) < len(m2):
                    m = tuple(a + b for a, b in zip(m1 + (0,) * (len(m2) - len(m1)), m2))
                else:
                    m = tuple(a + b for a, b in zip(m1, m2 + (0,) * (len(m1) - len(m2))))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw({m: _normalize(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Coeff) -> Polynomial:
        if not c:
            return ZERO
        return Polynomial._raw({m: _normalize(v * c) for m, v in self._terms.items()})

    def monic(self) -> Polynomial:
        _, lc = self.leading_term()
        return self.scale(Fraction(1) / lc)

    def mul_monomial(self, mono: Monomial, c: Coeff = 1) -> Polynomial:
        return self * Polynomial._raw({_strip(mono): c})

    # -- comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Polynomial({(): other})._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def _coerce(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial({(): x})
    return NotImplemented


ZERO = Polynomial()
ONE = Polynomial({(): 1})


def const(c: Coeff) -> Polynomial:
    return Polynomial({(): c})


def var(k: int) -> Polynomial:
    """The variable ``x_k`` (1-based)."""
    if k < 1:
        raise ValueError(f"variable index must be positive, got {k}")
    return Polynomial._raw({(0,) * (k - 1) + (1,): 1})


# functional spellings of the ring operations

def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def sub(f: Polynomial, g: Polynomial) -> Polynomial:
    return f - g


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def negate(f: Polynomial) -> Polynomial:
    return -f


def scale(f: Polynomial, c: Coeff) -> Polynomial:
    return f.scale(c)


# -- the S_n action and divided differences --------------------------------

def _swap_mono(m: Monomial, i: int) -> Monomial:
    if len(m) < i:
        return m
    e = list(m) + [0] * (i + 1 - len(m))
    e[i - 1], e[i] = e[i], e[i - 1]
    return _strip(e)


def swap_vars(f: Polynomial, i: int) -> Polynomial:
    """Interchange ``x_i`` and ``x_{i+1}``."""
    if i < 1:
        raise ValueError(f"index must be positive, got {i}")
    return Polynomial._raw({_swap_mono(m, i): c for m, c in f.items()})


def exact_divide_linear(f: Polynomial, i: int) -> Polynomial:
    """
    Quotient of ``f`` by ``x_i - x_{i+1}``; raises :class:`DivisionError` if inexact.

    ``f`` is grouped by the exponents of the other variables, and each group,
    a polynomial in ``x_i`` with coefficients in ``x_{i+1}``, goes through
    synthetic division by ``x_i - x_{i+1}``.
    """
    if i < 1:
        raise ValueError(f"index must be positive, got {i}")
    # rest-monomial -> {a: {b: coeff}} for terms  rest * x_i^a * x_{i+1}^b
    groups: dict[Monomial, dict[int, dict[int, Coeff]]] = {}
    for m, c in f.items():
        e = list(m) + [0] * max(0, i + 1 - len(m))
        a, b = e[i - 1], e[i]
        e[i - 1] = e[i] = 0
        rest = tuple(e)
        groups.setdefault(rest, {}).setdefault(a, {})[b] = c

    quotient: dict[Monomial, Coeff] = {}
    remainder: dict[Monomial, Coeff] = {}
    for rest, by_a in groups.items():
        top = max(by_a)
        carry: dict[int, Coeff] = {}  # q_{a} as a polynomial in x_{i+1}
        for a in range(top, 0, -1):
            # q_{a-1} = c_a + x_{i+1} * q_a
            qa = dict(by_a.get(a, {}))
            for b, c in carry.items():
                qa[b + 1] = qa.get(b + 1, 0) + c
            qa = {b: c for b, c in qa.items() if c}
            for b, c in qa.items():
                e = list(rest)
                e[i - 1], e[i] = a - 1, b
                quotient[_strip(e)] = _normalize(c)
            carry = qa
        # remainder = c_0 + x_{i+1} * q_0
        r = dict(by_a.get(0, {}))
        for b, c in carry.items():
            r[b + 1] = r.get(b + 1, 0) + c
        for b, c in r.items():
            if c:
                e = list(rest)
                e[i] = b
                remainder[_strip(e)] = c
    if remainder:
        raise DivisionError(f"not divisible by x{i} - x{i + 1}", Polynomial(remainder))
    return Polynomial._raw(quotient)


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """``(f - s_i f) / (x_i - x_{i+1})``, by exact division."""
    diff = f - swap_vars(f, i)
    try:
        return exact_divide_linear(diff, i)
    except DivisionError as exc:  # pragma: no cover - would be an arithmetic bug
        raise AssertionError(f"f - s_{i}(f) not divisible: {exc}") from exc


def evaluate(f: Polynomial, point: Mapping[int, Rational]) -> Coeff:
    """Substitute ``x_k = point[k]`` exactly."""
    total: Coeff = 0
    for m, c in f.items():
        term: Coeff = c
        for k, e in enumerate(m, start=1):
            if e:
                if k not in point:
                    raise KeyError(f"no value assigned to x{k}")
                term = term * Fraction(point[k]) ** e
        total += term
    return _normalize(Fraction(total))


# -- text form -------------------------------------------------------------

def _format_mono(m: Monomial) -> str:
    parts = []
    for k, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{k}")
        elif e > 1:
            parts.append(f"x{k}^{e}")
    return "*".join(parts)


def _format_coeff(c: Coeff) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def format_poly(f: Polynomial) -> str:
    """Deterministic text, terms in descending grlex order."""
    if f.is_zero():
        return "0"
    out = []
    for idx, (m, c) in enumerate(f):
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        body = _format_mono(m)
        if not body:
            text = _format_coeff(a)
        elif a == 1:
            text = body
        else:
            text = f"{_format_coeff(a)}*{body}"
        if idx == 0:
            out.append(("-" if sign == "-" else "") + text)
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


_TOKEN = re.compile(r"(\d+(?:\s*/\s*\d+)?)|x(\d+)(?:\s*\^\s*(\d+))?|([+\-*])")


def parse(text: str) -> Polynomial:
    """
    Parse e.g. ``"3*x1^2*x3 - x2 + 5"``; whitespace is ignored.

    Raises :class:`ValueError` naming the offending position.
    """
    pos = 0
    tokens = []
    stripped = text.rstrip()
    while pos < len(stripped):
        while stripped[pos].isspace():
            pos += 1
        m = _TOKEN.match(stripped, pos)
        if not m:
            raise ValueError(f"unexpected character at position {pos} in {text!r}")
        start = pos
        if m.group(1) is not None:
            tokens.append(("num", Fraction(re.sub(r"\s", "", m.group(1))), start))
        elif m.group(2) is not None:
            k = int(m.group(2))
            if k < 1:
                raise ValueError(f"variable index must be positive at position {start}")
            tokens.append(("var", (k, int(m.group(3) or 1)), start))
        else:
            tokens.append(("op", m.group(4), start))
        pos = m.end()
    if not tokens:
        raise ValueError("empty polynomial text")

    result: dict[Monomial, Coeff] = {}
    idx = 0
    first = True
    while idx < len(tokens):
        sign = 1
        kind, val, at = tokens[idx]
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            idx += 1
        elif not first:
            raise ValueError(f"expected '+' or '-' at position {at}")
        first = False
        coeff: Coeff = Fraction(sign)
        exps: dict[int, int] = {}
        expect_factor = True
        while idx < len(tokens):
            kind, val, at = tokens[idx]
            if expect_factor:
                if kind == "num":
                    coeff *= val
                elif kind == "var":
                    k, e = val
                    exps[k] = exps.get(k, 0) + e
                else:
                    raise ValueError(f"expected a factor at position {at}")
                expect_factor = False
                idx += 1
            elif kind == "op" and val == "*":
                expect_factor = True
                idx += 1
            else:
                break
        if expect_factor:
            raise ValueError(f"dangling operator at end of {text!r}")
        mono = [0] * max(exps, default=0)
        for k, e in exps.items():
            mono[k - 1] = e
        mono_t = _strip(mono)
        result[mono_t] = result.get(mono_t, 0) + coeff
    return Polynomial(result)
