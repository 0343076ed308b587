"""
Permutations of ``{1, ..., n}`` in one-line notation.

Products are applied right to left, ``(u * v)(i) == u(v(i))``, so right
multiplication by ``s_i`` swaps positions ``i`` and ``i+1`` of the one-line
word.

>>> s1, s2 = simple(1, 3), simple(2, 3)
>>> s2 * s1
Permutation([3, 1, 2])
>>> (s2 * s1).length
2
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "Permutation", "identity", "compose", "inverse", "length", "simple",
    "transposition", "longest", "reduced_word", "from_word", "embed",
    "all_permutations", "parse_permutation",
]


@dataclass(frozen=True)
class Permutation:
    """An element of S_n, stored as the tuple ``(w(1), ..., w(n))``."""
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        n = len(images)
        if n < 1:
            raise ValueError("permutation degree must be at least 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"{list(images)} is not a permutation of 1..{n}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} outside 1..{self.n}")
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    @property
    def length(self) -> int:
        return length(self)

    def inverse(self) -> Permutation:
        return inverse(self)

    def stripped(self) -> Permutation:
        """Drop trailing fixed points (keeping at least one entry)."""
        m = self.n
        while m > 1 and self.images[m - 1] == m:
            m -= 1
        return Permutation(self.images[:m])

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"


def identity(n: int) -> Permutation:
    if n < 1:
        raise ValueError(f"invalid degree {n}")
    return Permutation(tuple(range(1, n + 1)))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """Return ``u * v``, i.e. ``i -> u(v(i))``."""
    if u.n != v.n:
        raise ValueError(f"degree mismatch: {u.n} vs {v.n}")
    return Permutation(tuple(u.images[x - 1] for x in v.images))


def inverse(w: Permutation) -> Permutation:
    inv = [0] * w.n
    for pos, val in enumerate(w.images, start=1):
        inv[val - 1] = pos
    return Permutation(tuple(inv))


def length(w: Permutation) -> int:
    """Number of inversions: pairs ``a < b`` with ``w(a) > w(b)``."""
    img = w.images
    return sum(1 for a, b in itertools.combinations(range(len(img)), 2)
               if img[a] > img[b])


def simple(r: int, n: int) -> Permutation:
    """The simple transposition ``s_r`` in S_n."""
    if not 1 <= r <= n - 1:
        raise ValueError(f"simple reflection index {r} outside 1..{n - 1}")
    return transposition(r, r + 1, n)


def transposition(p: int, q: int, n: int) -> Permutation:
    """The transposition exchanging ``p`` and ``q`` in S_n."""
    if not 1 <= p < q <= n:
        raise ValueError(f"need 1 <= p < q <= n, got p={p}, q={q}, n={n}")
    img = list(range(1, n + 1))
    img[p - 1], img[q - 1] = q, p
    return Permutation(tuple(img))


def longest(n: int) -> Permutation:
    if n < 1:
        raise ValueError(f"invalid degree {n}")
    return Permutation(tuple(range(n, 0, -1)))


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """
    A reduced word ``(i_1, ..., i_r)`` with ``s_{i_1} * ... * s_{i_r} == w``.

    Built by repeatedly stripping the smallest right descent.

    >>> reduced_word(Permutation((3, 1, 2)))
    (2, 1)
    """
    img = list(w.images)
    word = []
    while True:
        for i in range(len(img) - 1):
            if img[i] > img[i + 1]:
                img[i], img[i + 1] = img[i + 1], img[i]
                word.append(i + 1)
                break
        else:
            break
    return tuple(reversed(word))


def from_word(word: Sequence[int], n: int) -> Permutation:
    """The product ``s_{word[0]} * s_{word[1]} * ...`` in S_n."""
    img = list(range(1, n + 1))
    for i in word:
        if not 1 <= i <= n - 1:
            raise ValueError(f"simple reflection index {i} outside 1..{n - 1}")
        img[i - 1], img[i] = img[i], img[i - 1]
    return Permutation(tuple(img))


def embed(w: Permutation, m: int) -> Permutation:
    """Extend ``w`` to S_m by fixing ``n+1, ..., m``."""
    if m < w.n:
        raise ValueError(f"cannot embed S_{w.n} into S_{m}")
    return Permutation(w.images + tuple(range(w.n + 1, m + 1)))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line words."""
    for img in itertools.permutations(range(1, n + 1)):
        yield Permutation(img)


_PERM_RE = re.compile(r"^\s*\[\s*(\d+(?:\s*,\s*\d+)*)\s*\]\s*$")


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation such as ``"[3,1,2]"``."""
    m = _PERM_RE.match(text)
    if not m:
        raise ValueError(f"malformed permutation {text!r}; expected e.g. [3,1,2]")
    return Permutation(tuple(int(t) for t in m.group(1).split(",")))
