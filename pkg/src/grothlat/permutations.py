"""Permutations, their diagrams, and vexillary combinatorics.

One-line notation throughout; composition is (u*v)(i) = u(v(i)), so w*s_i
swaps positions i, i+1 of w's word.
"""

from __future__ import annotations

from functools import cached_property
from itertools import permutations as _all_perms


class NotVexillaryError(ValueError):
    """Raised when a vexillary-only statistic is requested for a 2143 pattern."""


class Permutation:
    """Immutable permutation of {1..n} in one-line notation."""

    __slots__ = ("word", "__dict__")

    def __init__(self, word):
        w = tuple(int(v) for v in word)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation word: {word}")
        self.word = w

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        return cls(range(n, 0, -1))

    @classmethod
    def transposition(cls, n: int, i: int) -> Permutation:
        """The simple transposition s_i in S_n."""
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Read '2413' (digits, n <= 9) or '12,4,3,...' (comma-separated)."""
        text = text.strip()
        if "," in text:
            return cls(int(v) for v in text.split(","))
        return cls(int(ch) for ch in text)

    def __str__(self) -> str:
        if self.size <= 9:
            return "".join(str(v) for v in self.word)
        return ",".join(str(v) for v in self.word)

    def __repr__(self) -> str:
        return f"Permutation({list(self.word)})"

    @property
    def size(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.word == other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __mul__(self, other: Permutation) -> Permutation:
        if self.size != other.size:
            raise ValueError("size mismatch")
        return Permutation(self.word[v - 1] for v in other.word)

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for i, v in enumerate(self.word, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    @cached_property
    def length(self) -> int:
        """Inversion count = minimal number of simple transpositions."""
        w = self.word
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def right_mult(self, i: int) -> Permutation:
        """w * s_i (swap positions i, i+1)."""
        w = list(self.word)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(w)

    def has_ascent(self, i: int) -> bool:
        """True iff w(i) < w(i+1), i.e. length(w * s_i) = length(w) + 1."""
        return self.word[i - 1] < self.word[i]

    def ascents(self) -> list[int]:
        return [i for i in range(1, self.size) if self.has_ascent(i)]

    def descents(self) -> list[int]:
        return [i for i in range(1, self.size) if not self.has_ascent(i)]


def all_permutations(n: int):
    """All of S_n in lexicographic word order."""
    return [Permutation(w) for w in _all_perms(range(1, n + 1))]


def diagram(w: Permutation) -> frozenset[tuple[int, int]]:
    """Boxes (p, q) with w(p) > q and w^{-1}(q) > p (1-based)."""
    inv = w.inverse()
    n = w.size
    return frozenset(
        (p, q)
        for p in range(1, n + 1)
        for q in range(1, n + 1)
        if w(p) > q and inv(q) > p
    )


def essential_set(w: Permutation) -> frozenset[tuple[int, int]]:
    """SE-maximal boxes of the diagram: no box directly right or below."""
    d = diagram(w)
    return frozenset((p, q) for (p, q) in d if (p + 1, q) not in d and (p, q + 1) not in d)


def is_vexillary(w: Permutation) -> bool:
    """2143-avoidance: no i<j<k<l with w(j) < w(i) < w(l) < w(k)."""
    v = w.word
    n = len(v)
    for i in range(n):
        for j in range(i + 1, n):
            if v[j] >= v[i]:
                continue
            for k in range(j + 1, n):
                if v[k] <= v[i]:
                    continue
                for l in range(k + 1, n):
                    if v[i] < v[l] < v[k]:
                        return False
    return True


def is_vexillary_by_essential_set(w: Permutation) -> bool:
    """Classification via the essential set: no two boxes strictly NW/SE."""
    ess = essential_set(w)
    return not any(
        p < i and q < j for (p, q) in ess for (i, j) in ess if (p, q) != (i, j)
    )


def diagram_shape(w: Permutation) -> tuple[int, ...]:
    """The partition obtained by sorting the diagram's row sizes (vexillary only)."""
    if not is_vexillary(w):
        raise NotVexillaryError(f"{w} contains a 2143 pattern")
    counts = [0] * w.size
    for p, _ in diagram(w):
        counts[p - 1] += 1
    return tuple(sorted((c for c in counts if c), reverse=True))


def bounding_shape(w: Permutation) -> tuple[int, ...]:
    """Smallest partition whose Young diagram contains every diagram box."""
    n = w.size
    row_max = [0] * (n + 1)
    for p, q in diagram(w):
        row_max[p] = max(row_max[p], q)
    # enforce weak decrease from the bottom up
    for p in range(n - 1, 0, -1):
        row_max[p] = max(row_max[p], row_max[p + 1])
    parts = [row_max[p] for p in range(1, n + 1)]
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def flagging(w: Permutation) -> tuple[int, ...]:
    """Row bounds F: F_i is the row of the last bounding-shape box on the
    diagonal through the end of row i of the diagram shape."""
    lam = diagram_shape(w)
    big = bounding_shape(w)
    flags = []
    for i, lam_i in enumerate(lam, start=1):
        content = lam_i - i
        r = i
        while r + 1 <= len(big) and big[r] >= (r + 1) + content:
            r += 1
        flags.append(r)
    return tuple(flags)


def shift(w: Permutation, k: int) -> Permutation:
    """The permutation fixing 1..k and acting as w on k+1..k+n."""
    if k < 0:
        raise ValueError("shift amount must be nonnegative")
    return Permutation(list(range(1, k + 1)) + [v + k for v in w.word])


def demazure_product(word, n: int | None = None) -> Permutation:
    """Left-to-right fold with s_i^2 = s_i: multiply only when length grows."""
    word = list(word)
    if n is None:
        n = max(word) + 1 if word else 1
    u = Permutation.identity(n)
    for i in word:
        if u.has_ascent(i):
            u = u.right_mult(i)
    return u


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """One reduced word for w (repeatedly strip the smallest descent)."""
    out = []
    u = w
    while u.length:
        i = u.descents()[0]
        out.append(i)
        u = u.right_mult(i)
    # w = s_{out[-1]} ... s_{out[0]} read right-to-left, so reverse
    return tuple(reversed(out))


def all_reduced_words(w: Permutation):
    """Every reduced word of w (w = s_{i1} ... s_{ik} for each word)."""
    if w.length == 0:
        yield ()
        return
    for i in w.descents():
        for tail in all_reduced_words(w.right_mult(i)):
            yield tail + (i,)
