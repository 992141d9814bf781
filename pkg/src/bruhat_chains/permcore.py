"""
Permutations of ``{1, ..., n}`` in one-line notation.

Products compose right to left, ``(u*v)(k) == u(v(k))``, so multiplying on
the right by a transposition ``t(i, j)`` swaps *positions* i and j, and
multiplying on the left by ``s(a)`` swaps the *values* a and a+1.

>>> w = Permutation.parse("132")
>>> w * transposition(1, 2, 3)
Permutation('312')
>>> w.length
1
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

__all__ = [
    "MAX_N", "Permutation", "identity", "longest_element", "simple",
    "transposition", "multiply", "length", "reduced_words", "lehmer_code",
    "from_lehmer_code", "all_permutations", "word_to_permutation",
]

# all verifications are desk scale; n! must stay enumerable
MAX_N = 10


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation stored by its one-line window ``(w(1), ..., w(n))``."""

    window: tuple[int, ...]

    def __post_init__(self):
        n = len(self.window)
        if not 1 <= n <= MAX_N:
            raise ValueError(f"n={n} outside 1..{MAX_N}")
        if sorted(self.window) != list(range(1, n + 1)):
            raise ValueError(f"{self.window!r} is not a permutation of 1..{n}")

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Read ``"2143"`` or ``"10,9,1,..."`` style strings."""
        text = text.strip()
        if "," in text:
            return cls(tuple(int(part) for part in text.split(",")))
        if not text.isdigit():
            raise ValueError(f"cannot parse permutation {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, k: int) -> int:
        return self.window[k - 1]

    def __getitem__(self, k: int) -> int:
        # 1-based, mirrors w_k
        return self.window[k - 1]

    def __iter__(self):
        return iter(self.window)

    def __len__(self):
        return len(self.window)

    def __mul__(self, other: Permutation) -> Permutation:
        return multiply(self, other)

    def __str__(self):
        if self.n <= 9:
            return "".join(map(str, self.window))
        return ",".join(map(str, self.window))

    def __repr__(self):
        return f"Permutation({str(self)!r})"

    @cached_property
    def length(self) -> int:
        """Number of inversions."""
        w = self.window
        return sum(1 for i, j in itertools.combinations(range(self.n), 2) if w[i] > w[j])

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for pos, val in enumerate(self.window, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def swap_positions(self, i: int, j: int) -> Permutation:
        """Right multiplication by the transposition ``t(i, j)``."""
        w = list(self.window)
        w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
        return Permutation(tuple(w))

    def right_descents(self) -> list[int]:
        w = self.window
        return [i for i in range(1, self.n) if w[i - 1] > w[i]]

    def left_descents(self) -> list[int]:
        """Indices a with ``length(s(a) * self) < length(self)``."""
        pos = self.inverse().window
        return [a for a in range(1, self.n) if pos[a - 1] > pos[a]]

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.window, start=1))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest_element(n: int) -> Permutation:
    """``w_0 = n (n-1) ... 1``."""
    if n < 1:
        raise ValueError(f"n={n} must be positive")
    return Permutation(tuple(range(n, 0, -1)))


def transposition(i: int, j: int, n: int) -> Permutation:
    if not (1 <= i <= n and 1 <= j <= n and i != j):
        raise ValueError(f"bad transposition ({i} {j}) in S_{n}")
    return identity(n).swap_positions(i, j)


def simple(a: int, n: int) -> Permutation:
    return transposition(a, a + 1, n)


def multiply(u: Permutation, v: Permutation) -> Permutation:
    """Composition ``(u*v)(k) = u(v(k))``."""
    if u.n != v.n:
        raise ValueError(f"cannot multiply permutations of sizes {u.n} and {v.n}")
    return Permutation(tuple(u.window[k - 1] for k in v.window))


def length(w: Permutation) -> int:
    return w.length


def word_to_permutation(word, n: int) -> Permutation:
    """Fold ``s(a_1) * s(a_2) * ... * s(a_l)``."""
    w = list(range(1, n + 1))
    for a in word:
        # right multiplication by s_a swaps positions a, a+1
        w[a - 1], w[a] = w[a], w[a - 1]
    return Permutation(tuple(w))


@lru_cache(maxsize=None)
def _reduced_words(w: Permutation) -> tuple[tuple[int, ...], ...]:
    if w.length == 0:
        return ((),)
    words = []
    for d in w.right_descents():
        for prefix in _reduced_words(w.swap_positions(d, d + 1)):
            words.append(prefix + (d,))
    return tuple(sorted(words))


def reduced_words(w: Permutation) -> list[tuple[int, ...]]:
    """
    All reduced words of ``w``, found by peeling off right descents.

    >>> reduced_words(Permutation.parse("321"))
    [(1, 2, 1), (2, 1, 2)]
    """
    return list(_reduced_words(w))


def lehmer_code(w: Permutation) -> tuple[int, ...]:
    """``c_i = #{j > i : w_j < w_i}``."""
    win = w.window
    return tuple(sum(1 for later in win[i + 1:] if later < win[i]) for i in range(w.n))


def from_lehmer_code(code) -> Permutation:
    remaining = list(range(1, len(code) + 1))
    out = []
    for i, c in enumerate(code):
        if not 0 <= c < len(remaining):
            raise ValueError(f"code entry {c} at position {i + 1} out of range")
        out.append(remaining.pop(c))
    return Permutation(tuple(out))


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[Permutation, ...]:
    """All of ``S_n``, sorted by length and then lexicographically."""
    perms = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    return tuple(sorted(perms, key=lambda p: (p.length, p.window)))
