"""
Gröbner bases over the rationals in graded lexicographic order.

Only what the Hessenberg presentations need: Buchberger with the product
criterion, normal forms, membership, and Hilbert series of Artinian
quotients.  :func:`graded_quotient_dims` and :func:`graded_contains` solve
the same questions by plain linear algebra on each graded piece and serve as
an independent cross-check for homogeneous ideals.

>>> from schubhess.polynomial import parse
>>> G = groebner([parse("x1 + x2"), parse("x2")], 2)
>>> [str(g) for g in G]
['x1', 'x2']
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .polynomial import Monomial, Polynomial, grlex_key, parse

__all__ = [
    "GroebnerBasis", "groebner", "normal_form", "contains", "s_polynomial",
    "standard_monomials", "is_zero_dimensional", "is_groebner", "is_reduced",
    "hilbert_from_basis", "hilbert_series",
    "monomials_of_degree", "graded_quotient_dims", "graded_contains",
    "parse_ideal_text", "read_ideal_file",
]

MONOMIAL_ORDER = "grlex"


def _pad(m: Monomial, n: int) -> tuple[int, ...]:
    return m + (0,) * (n - len(m))


def _divides(a: Monomial, b: Monomial) -> bool:
    if len(a) > len(b):
        return False
    return all(x <= y for x, y in zip(a, b))


def _quot(b: Monomial, a: Monomial) -> Monomial:
    e = list(b)
    for k, x in enumerate(a):
        e[k] -= x
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    n = max(len(a), len(b))
    return tuple(max(x, y) for x, y in zip(_pad(a, n), _pad(b, n)))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _lm(f: Polynomial) -> Monomial:
    return f.leading_term()[0]


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Gröbner basis: monic generators sorted by leading monomial."""
    generators: tuple[Polynomial, ...]
    n: int
    order: str = MONOMIAL_ORDER

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    @property
    def leading_monomials(self) -> list[Monomial]:
        return [_lm(g) for g in self.generators]

    def is_unit(self) -> bool:
        return any(not _lm(g) for g in self.generators)


def _reduce(f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """Full reduction of ``f`` by ``basis`` (leading terms assumed monic-able)."""
    lts = [(_lm(g), g.leading_term()[1], g) for g in basis]
    remaining = dict(f.terms)
    rem: dict[Monomial, Fraction] = {}
    while remaining:
        m = max(remaining, key=grlex_key)
        c = remaining[m]
        for lm, lc, g in lts:
            if _divides(lm, m):
                factor = Fraction(c) / lc
                q = _quot(m, lm)
                for gm, gc in g.items():
                    tm = tuple(a + b for a, b in itertools.zip_longest(gm, q, fillvalue=0))
                    v = remaining.get(tm, 0) - factor * gc
                    if v:
                        remaining[tm] = v
                    else:
                        remaining.pop(tm, None)
                break
        else:
            rem[m] = c
            del remaining[m]
    return Polynomial(rem)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    (mf, cf), (mg, cg) = f.leading_term(), g.leading_term()
    l = _lcm(mf, mg)
    return (f.mul_monomial(_quot(l, mf), Fraction(1) / cf)
            - g.mul_monomial(_quot(l, mg), Fraction(1) / cg))


def _interreduce(basis: list[Polynomial]) -> list[Polynomial]:
    basis = [g.monic() for g in basis if g]
    # drop generators whose leading monomial is divisible by another's
    basis.sort(key=lambda g: grlex_key(_lm(g)))
    minimal: list[Polynomial] = []
    for g in basis:
        if not any(_divides(_lm(h), _lm(g)) for h in minimal):
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        lm = _lm(g)
        tail = _reduce(g - Polynomial({lm: 1}), others)
        reduced.append(Polynomial({lm: 1}) + tail)
    reduced.sort(key=lambda g: grlex_key(_lm(g)), reverse=True)
    return reduced


def groebner(gens: Iterable[Polynomial], n: int) -> GroebnerBasis:
    """Reduced Gröbner basis (grlex, x1 > ... > xn) of the ideal spanned by ``gens``."""
    basis = [Polynomial({m: Fraction(c) for m, c in g.items()}) for g in gens]
    basis = [g for g in basis if g]
    for g in basis:
        if g.nvars > n:
            raise ValueError(f"{g} uses variables beyond x{n}")
    if not basis:
        return GroebnerBasis((), n)
    pairs = [(a, b) for a in range(len(basis)) for b in range(a)]
    while pairs:
        # normal selection: smallest lcm first
        pairs.sort(key=lambda ab: grlex_key(_lcm(_lm(basis[ab[0]]), _lm(basis[ab[1]]))),
                   reverse=True)
        a, b = pairs.pop()
        if _coprime(_lm(basis[a]), _lm(basis[b])):
            continue
        r = _reduce(s_polynomial(basis[a], basis[b]), basis)
        if r:
            basis.append(r.monic())
            new = len(basis) - 1
            pairs.extend((new, k) for k in range(new))
    return GroebnerBasis(tuple(_interreduce(basis)), n)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    if f.nvars > G.n:
        raise ValueError(f"{f} uses variables beyond x{G.n}")
    return _reduce(f, G.generators)


def contains(G: GroebnerBasis, f: Polynomial) -> bool:
    return normal_form(f, G).is_zero()


def is_groebner(G: GroebnerBasis) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    gens = G.generators
    return all(not _reduce(s_polynomial(f, g), gens)
               for f, g in itertools.combinations(gens, 2))


def is_reduced(G: GroebnerBasis) -> bool:
    lms = G.leading_monomials
    for g, lm in zip(G.generators, lms):
        if g.leading_term()[1] != 1:
            return False
        for other in lms:
            if other != lm and any(_divides(other, m) for m in g.terms):
                return False
    return True


def monomials_of_degree(d: int, n: int) -> list[Monomial]:
    """All monomials of total degree ``d`` in ``x1..xn``, descending grlex."""
    out = []
    for combo in itertools.combinations_with_replacement(range(n), d):
        e = [0] * n
        for k in combo:
            e[k] += 1
        while e and e[-1] == 0:
            e.pop()
        out.append(tuple(e))
    out.sort(key=grlex_key, reverse=True)
    return out


def standard_monomials(G: GroebnerBasis, max_degree: int | None = None) -> list[Monomial]:
    """
    Monomials divisible by no leading monomial of ``G``.

    Requires a zero-dimensional ideal unless ``max_degree`` is given.
    """
    lms = G.leading_monomials
    if max_degree is None and not is_zero_dimensional(G):
        raise ValueError("quotient is not finite-dimensional")
    out = []
    d = 0
    while max_degree is None or d <= max_degree:
        found = [m for m in monomials_of_degree(d, G.n)
                 if not any(_divides(lm, m) for lm in lms)]
        if not found and max_degree is None:
            break
        out.extend(found)
        d += 1
    return out


def is_zero_dimensional(G: GroebnerBasis) -> bool:
    """Every variable has a pure power among the leading monomials."""
    pure = {len(m) for m in G.leading_monomials if sum(1 for e in m if e) == 1}
    return G.is_unit() or all(k in pure for k in range(1, G.n + 1))


def hilbert_from_basis(G: GroebnerBasis) -> list[int]:
    """Coefficients (degree 0 upward) of the Hilbert series of ``Q[x1..xn]/I``."""
    counts: dict[int, int] = {}
    for m in standard_monomials(G):
        counts[sum(m)] = counts.get(sum(m), 0) + 1
    if not counts:
        return []
    return [counts.get(d, 0) for d in range(max(counts) + 1)]


def hilbert_series(h) -> list[int]:
    """Hilbert series of the quotient by the Hessenberg generators of ``h``."""
    from .hessenberg import ideal_generators
    return hilbert_from_basis(groebner(ideal_generators(h), h.n))


# -- graded linear algebra --------------------------------------------------

def _rank(rows: list[dict[Monomial, Fraction]]) -> int:
    """Rank of sparse row vectors by Gaussian elimination over Q."""
    pivots: dict[Monomial, dict[Monomial, Fraction]] = {}
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        while row:
            col = max(row, key=grlex_key)
            piv = pivots.get(col)
            if piv is None:
                inv = 1 / row[col]
                pivots[col] = {k: v * inv for k, v in row.items()}
                break
            factor = row[col]
            for k, v in piv.items():
                nv = row.get(k, 0) - factor * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)


def _graded_span(gens: Sequence[Polynomial], d: int, n: int) -> list[dict]:
    rows = []
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError(f"{g} is not homogeneous")
        k = d - g.degree()
        if k < 0 or g.is_zero():
            continue
        for m in monomials_of_degree(k, n):
            rows.append(dict(g.mul_monomial(m).terms))
    return rows


def graded_quotient_dims(gens: Sequence[Polynomial], n: int, max_degree: int) -> list[int]:
    """dim of (Q[x1..xn]/I)_d for d = 0..max_degree, with I homogeneous."""
    return [len(monomials_of_degree(d, n)) - _rank(_graded_span(gens, d, n))
            for d in range(max_degree + 1)]


def graded_contains(gens: Sequence[Polynomial], f: Polynomial, n: int) -> bool:
    """Whether homogeneous ``f`` lies in the ideal, decided in degree ``deg f``."""
    if f.is_zero():
        return True
    if not f.is_homogeneous():
        raise ValueError(f"{f} is not homogeneous")
    rows = _graded_span(gens, f.degree(), n)
    return _rank(rows) == _rank(rows + [dict(f.terms)])


# -- file format ------------------------------------------------------------

def parse_ideal_text(text: str) -> tuple[int, list[Polynomial]]:
    """
    Parse ``vars: n`` followed by one polynomial per line.

    Blank lines and lines starting with ``#`` are skipped.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].lower().startswith("vars:"):
        raise ValueError("ideal file must start with a 'vars: n' line")
    try:
        n = int(lines[0].split(":", 1)[1])
    except ValueError:
        raise ValueError(f"bad variable count in {lines[0]!r}") from None
    if n < 1:
        raise ValueError("variable count must be positive")
    polys = []
    for lineno, ln in enumerate(lines[1:], start=2):
        try:
            polys.append(parse(ln))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return n, polys


def read_ideal_file(path) -> tuple[int, list[Polynomial]]:
    with open(path) as fh:
        return parse_ideal_text(fh.read())
