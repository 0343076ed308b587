"""
Schubert polynomials via divided differences, and Monk's rule.

``schubert(w)`` starts from ``x1^(n-1) x2^(n-2) ... x_{n-1}`` for the longest
element and walks down to ``w`` by divided differences.  Results are cached
on ``w`` with trailing fixed points removed, which is harmless because the
polynomial does not depend on the ambient S_n.

>>> from schubhess.permutation import Permutation
>>> schubert(Permutation((3, 1, 2)))
Polynomial('x1^2')
>>> schubert(Permutation((2, 3, 1)))
Polynomial('x1*x2')
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Sequence

from .permutation import Permutation, embed, longest, simple, transposition
from .polynomial import ONE, Polynomial, ZERO, divided_difference

__all__ = [
    "schubert", "schubert_along", "ddo_rule_check", "MonkExpansion",
    "monk_expand", "monk_sum", "schubert_simple", "clear_cache", "cache_size",
]

_cache: dict[tuple[int, ...], Polynomial] = {}
_lock = threading.RLock()


def clear_cache() -> None:
    with _lock:
        _cache.clear()


def cache_size() -> int:
    return len(_cache)


def _top(n: int) -> Polynomial:
    return Polynomial({tuple(range(n - 1, 0, -1)): 1}) if n > 1 else ONE


def _first_ascent(img: tuple[int, ...]) -> int | None:
    for i in range(len(img) - 1):
        if img[i] < img[i + 1]:
            return i + 1
    return None


def schubert(w: Permutation) -> Polynomial:
    """
    The Schubert polynomial of ``w``.

    Uses ``S_w = d_i S_{w s_i}`` at the smallest ascent ``i`` of ``w``, which
    climbs one length step at a time to the longest element.
    """
    key = w.stripped().images
    with _lock:
        hit = _cache.get(key)
        if hit is not None:
            return hit
        # iterative walk up to w_0, then fill the cache on the way down
        chain = []
        img = key
        while img not in _cache:
            i = _first_ascent(img)
            if i is None:
                _cache[img] = _top(len(img))
                break
            chain.append((img, i))
            up = list(img)
            up[i - 1], up[i] = up[i], up[i - 1]
            img = tuple(up)
        poly = _cache[img]
        for img, i in reversed(chain):
            poly = divided_difference(poly, i)
            _cache[img] = poly
        return _cache[key]


def schubert_along(w: Permutation, word: Sequence[int]) -> Polynomial:
    """
    Uncached ``S_w`` from an explicit chain: ``w = w_0 s_{word[0]} s_{word[1]} ...``.

    Each step must lower the length by one; raises ``ValueError`` otherwise.
    """
    n = w.n
    cur = list(longest(n).images)
    poly = _top(n)
    for i in word:
        if not cur[i - 1] > cur[i]:
            raise ValueError(f"step s_{i} does not lower the length")
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
        poly = divided_difference(poly, i)
    if tuple(cur) != w.images:
        raise ValueError(f"chain ends at {cur}, not {w}")
    return poly


def ddo_rule_check(w: Permutation, i: int) -> Polynomial:
    """Apply d_i to S_w.  Should be S_{w s_i} at a descent and 0 at an ascent."""
    if not 1 <= i <= w.n - 1:
        raise ValueError(f"index {i} outside 1..{w.n - 1}")
    return divided_difference(schubert(w), i)


@dataclass(frozen=True)
class MonkExpansion:
    """The permutations ``w t_{pq}`` in the expansion of ``S_{s_r} * S_w``."""
    base: Permutation
    index: int
    terms: frozenset[Permutation]

    def transpositions(self) -> list[tuple[int, int]]:
        """The ``(p, q)`` pairs, recovered from where each term differs from ``base``."""
        out = []
        for t in self.terms:
            b = embed(self.base, t.n)
            diff = [k for k in range(1, t.n + 1) if t(k) != b(k)]
            out.append((diff[0], diff[1]))
        return sorted(out)


def monk_expand(r: int, w: Permutation) -> MonkExpansion:
    """
    Monk's rule for ``S_{s_r} * S_w``.

    ``w`` is embedded into S_m with ``m = max(n, r + 1) + 1``.  That is enough:
    with ``w`` fixing everything past ``m - 1``, any ``q > m`` has the value
    ``m`` (sitting at position ``m``) strictly inside ``(w(p), w(q))``.
    """
    if r < 1:
        raise ValueError(f"index must be positive, got {r}")
    m = max(w.n, r + 1) + 1
    v = embed(w, m)
    img = v.images
    terms = set()
    for p in range(1, r + 1):
        for q in range(r + 1, m + 1):
            lo, hi = img[p - 1], img[q - 1]
            if lo >= hi:
                continue
            if any(lo < img[k - 1] < hi for k in range(p + 1, q)):
                continue
            terms.add(v * transposition(p, q, m))
    return MonkExpansion(base=w, index=r, terms=frozenset(terms))


def monk_sum(exp: MonkExpansion) -> Polynomial:
    total = ZERO
    for t in exp.terms:
        total = total + schubert(t)
    return total


def schubert_simple(r: int) -> Polynomial:
    """``S_{s_r}``; equals ``x1 + ... + x_r``."""
    return schubert(simple(r, r + 1))
