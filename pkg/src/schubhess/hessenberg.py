"""
Hessenberg functions, the generators ``f_{i,j}`` and the permutations
``w_k^{(i,j)}``.

A Hessenberg function on ``[n]`` is a weakly increasing ``h`` with
``j <= h(j) <= n``.  Drawn on an ``n x n`` grid, box ``(i, j)`` (row ``i``,
column ``j``) is shaded when ``i <= h(j)``.

>>> h = parse_hessenberg("(2,3,3)")
>>> corners(h)
[Corner(i=2, j=1), Corner(i=3, j=2)]
>>> remove_corner(h, Corner(2, 1))
HessenbergFunction((1, 3, 3))
>>> f_poly(2, 1)
Polynomial('x1^2 - x1*x2')
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

from .parallel import ordered_map
from .permutation import Permutation, all_permutations, from_word, inverse, length
from .polynomial import Polynomial, ZERO, divided_difference, var
from .report import VerificationReport
from .schubert import schubert

__all__ = [
    "HessenbergFunction", "Corner", "parse_hessenberg", "f_poly",
    "ideal_generators", "hess_dimension", "corners", "removable_corners",
    "remove_corner", "w_kij", "alternating_schubert_sum", "verify_theorem",
    "f_via_chain", "cell_intersects", "minimal_missing",
    "enumerate_hessenberg", "render_grid",
]


@dataclass(frozen=True)
class HessenbergFunction:
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        if n < 1:
            raise ValueError("a Hessenberg function needs at least one value")
        for j, v in enumerate(values, start=1):
            if v < j:
                raise ValueError(f"h({j}) = {v} violates h(j) >= j")
            if v > n:
                raise ValueError(f"h({j}) = {v} violates h(j) <= n = {n}")
            if j > 1 and v < values[j - 2]:
                raise ValueError(f"h({j}) = {v} < h({j - 1}) = {values[j - 2]}: "
                                 "not weakly increasing")

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, j: int) -> int:
        return self.values[j - 1]

    def __repr__(self) -> str:
        return f"HessenbergFunction({self.values})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.values)) + ")"


class Corner(NamedTuple):
    i: int
    j: int

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


_HESS_RE = re.compile(r"^\s*\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)\s*$")


def parse_hessenberg(text: str) -> HessenbergFunction:
    m = _HESS_RE.match(text)
    if not m:
        raise ValueError(f"malformed Hessenberg function {text!r}; expected e.g. (3,3,4,5,5)")
    return HessenbergFunction(tuple(int(t) for t in m.group(1).split(",")))


@lru_cache(maxsize=None)
def f_poly(i: int, j: int) -> Polynomial:
    """sum_{k=1}^{j} prod_{l=j+1}^{i} (x_k - x_l) * x_k."""
    if not 1 <= j <= i:
        raise ValueError(f"f_(i,j) needs 1 <= j <= i, got i={i}, j={j}")
    total = ZERO
    for k in range(1, j + 1):
        term = var(k)
        for l in range(j + 1, i + 1):
            term = term * (var(k) - var(l))
        total = total + term
    return total


def ideal_generators(h: HessenbergFunction) -> list[Polynomial]:
    return [f_poly(h(j), j) for j in range(1, h.n + 1)]


def hess_dimension(h: HessenbergFunction) -> int:
    return sum(h(j) - j for j in range(1, h.n + 1))


def corners(h: HessenbergFunction) -> list[Corner]:
    """Shaded boxes with nothing shaded directly below or directly to the left."""
    return [Corner(h(j), j) for j in range(1, h.n + 1)
            if j == 1 or h(j - 1) < h(j)]


def removable_corners(h: HessenbergFunction) -> list[Corner]:
    return [c for c in corners(h) if c.i > c.j]


def remove_corner(h: HessenbergFunction, c: Corner) -> HessenbergFunction:
    i, j = c
    if c not in corners(h):
        raise ValueError(f"{c} is not a corner of {h}")
    if i == j:
        raise ValueError(f"corner {c} lies on the diagonal; removing it breaks h(j) >= j")
    vals = list(h.values)
    vals[j - 1] -= 1
    return HessenbergFunction(tuple(vals))


def w_kij(i: int, j: int, k: int, n: int | None = None) -> Permutation:
    """
    ``(s_{i-k} s_{i-k-1} ... s_j)(s_{i-k+1} ... s_{i-1})`` in S_n (default n = i).

    >>> w_kij(3, 1, 1), w_kij(3, 1, 2)
    (Permutation([3, 1, 2]), Permutation([2, 3, 1]))
    """
    if not 1 <= j < i:
        raise ValueError(f"need 1 <= j < i, got i={i}, j={j}")
    if not 1 <= k <= i - j:
        raise ValueError(f"k={k} outside 1..{i - j}")
    n = i if n is None else n
    if n < i:
        raise ValueError(f"degree {n} too small for i={i}")
    word = list(range(i - k, j - 1, -1)) + list(range(i - k + 1, i))
    return from_word(word, n)


def alternating_schubert_sum(i: int, j: int) -> Polynomial:
    """sum_{k=1}^{i-j} (-1)^(k-1) S_{w_k^{(i,j)}}."""
    if not 1 <= j < i:
        raise ValueError(f"need 1 <= j < i, got i={i}, j={j}")
    total = ZERO
    for k in range(1, i - j + 1):
        s = schubert(w_kij(i, j, k))
        total = total + s if k % 2 else total - s
    return total


def _theorem_case(ij: tuple[int, int]) -> tuple[bool, Polynomial, Polynomial]:
    i, j = ij
    lhs, rhs = f_poly(i - 1, j), alternating_schubert_sum(i, j)
    return lhs == rhs, lhs, rhs


def verify_theorem(n: int, jobs: int = 1) -> VerificationReport:
    """Check f_{i-1,j} == alternating Schubert sum for all 1 <= j < i <= n."""
    if n < 2:
        raise ValueError("need n >= 2")
    report = VerificationReport("theorem", {"n": n})
    start = time.perf_counter()
    cases = [(i, j) for i in range(2, n + 1) for j in range(1, i)]
    for (i, j), (ok, lhs, rhs) in zip(cases, ordered_map(_theorem_case, cases, jobs)):
        report.record(ok, i=i, j=j, expected=lhs, actual=rhs)
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def f_via_chain(i: int, j: int, n: int) -> Polynomial:
    """f_{i,j} = (-1)^(n-i) d_{i+1} ... d_n  d_{j-1} ... d_1 (f_{n,1})."""
    if not 1 <= j <= i <= n:
        raise ValueError(f"need 1 <= j <= i <= n, got i={i}, j={j}, n={n}")
    f = f_poly(n, 1)
    for r in range(1, j):
        f = divided_difference(f, r)
    for r in range(n, i, -1):
        f = divided_difference(f, r)
    return -f if (n - i) % 2 else f


def cell_intersects(h: HessenbergFunction, w: Permutation) -> bool:
    """
    Whether the Schubert cell of ``w`` meets Hess(N, h):
    ``w^{-1}(w(r) - 1) <= h(r)`` for every ``r`` with ``w(r) >= 2``.
    """
    if w.n != h.n:
        raise ValueError(f"degree mismatch: w in S_{w.n}, h on [{h.n}]")
    winv = inverse(w).images
    img = w.images
    return all(img[r] == 1 or winv[img[r] - 2] <= h.values[r]
               for r in range(h.n))


def minimal_missing(h: HessenbergFunction, c: Corner) -> set[Permutation]:
    """
    Brute force over S_n: the shortest ``w`` whose cell meets Hess(N, h) but
    not Hess(N, h') where h' drops the corner ``c``.
    """
    h2 = remove_corner(h, c)
    found = [w for w in all_permutations(h.n)
             if cell_intersects(h, w) and not cell_intersects(h2, w)]
    if not found:
        return set()
    best = min(length(w) for w in found)
    return {w for w in found if length(w) == best}


def enumerate_hessenberg(n: int) -> Iterator[HessenbergFunction]:
    """All Hessenberg functions on [n], lexicographically."""
    if n < 1:
        raise ValueError(f"invalid size {n}")

    def extend(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        j = len(prefix) + 1
        if j > n:
            yield tuple(prefix)
            return
        lo = max(j, prefix[-1] if prefix else 1)
        for v in range(lo, n + 1):
            yield from extend(prefix + [v])

    for vals in extend([]):
        yield HessenbergFunction(vals)


def render_grid(h: HessenbergFunction) -> str:
    """Rows top to bottom, ``#`` for shaded boxes (``i <= h(j)``), ``.`` otherwise."""
    n = h.n
    return "\n".join(
        "".join("#" if i <= h(j) else "." for j in range(1, n + 1))
        for i in range(1, n + 1))
