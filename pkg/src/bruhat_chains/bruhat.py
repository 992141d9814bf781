"""
Strong Bruhat order on ``S_n``: covers, their region statistics, intervals.

For a cover ``v < v*t(i, j)`` with ``i < j`` and ``v_i < v_j`` the four
statistics count entries of the one-line window of ``v``:

* ``a``: positions k < i with ``v_i < v_k < v_j``
* ``b``: positions i < k < j with ``v_k > v_j``
* ``c``: positions k > j with ``v_i < v_k < v_j``
* ``d``: positions i < k < j with ``v_k < v_i``

>>> cover_stats(Permutation.parse("132"), 1, 3)
(0, 1, 0, 0)
"""

from __future__ import annotations

from collections import deque
from dataclasses import asdict, dataclass
from functools import lru_cache

from .permcore import Permutation, all_permutations, longest_element, multiply
from .report import Report

__all__ = [
    "BruhatError", "NotACover", "NotComparable", "Cover", "Interval",
    "cover_stats", "is_cover", "covers_up", "covers_down", "interval",
    "bruhat_leq", "up_set", "symmetry_image", "SYMMETRY_MAPS",
    "all_covers", "verify_symmetries",
]


class BruhatError(ValueError):
    pass


class NotACover(BruhatError):
    pass


class NotComparable(BruhatError):
    pass


@dataclass(frozen=True)
class Cover:
    lower: Permutation
    upper: Permutation
    i: int
    j: int
    a: int
    b: int
    c: int
    d: int

    @property
    def stats(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def to_json(self) -> dict:
        out = asdict(self)
        out["lower"] = str(self.lower)
        out["upper"] = str(self.upper)
        return out

    def __str__(self):
        return f"{self.lower} < {self.upper} via t({self.i},{self.j}) abcd={self.stats}"


def is_cover(v: Permutation, i: int, j: int) -> bool:
    """True iff ``v*t(i, j)`` covers ``v``: ``v_i < v_j`` and nothing in between."""
    if not 1 <= i < j <= v.n:
        return False
    lo, hi = v[i], v[j]
    if lo > hi:
        return False
    return not any(lo < v[k] < hi for k in range(i + 1, j))


def cover_stats(v: Permutation, i: int, j: int) -> tuple[int, int, int, int]:
    if not is_cover(v, i, j):
        raise NotACover(f"t({i},{j}) does not give a cover of {v}")
    lo, hi = v[i], v[j]
    w = v.window
    a = sum(1 for k in range(i - 1) if lo < w[k] < hi)
    b = sum(1 for k in range(i, j - 1) if w[k] > hi)
    c = sum(1 for k in range(j, v.n) if lo < w[k] < hi)
    d = sum(1 for k in range(i, j - 1) if w[k] < lo)
    return a, b, c, d


def make_cover(v: Permutation, i: int, j: int) -> Cover:
    return Cover(v, v.swap_positions(i, j), i, j, *cover_stats(v, i, j))


@lru_cache(maxsize=None)
def _covers_up(v: Permutation) -> tuple[Cover, ...]:
    return tuple(make_cover(v, i, j)
                 for i in range(1, v.n)
                 for j in range(i + 1, v.n + 1)
                 if is_cover(v, i, j))


def covers_up(v: Permutation) -> list[Cover]:
    """All covers ``v < u``, ordered by the transposition ``(i, j)``."""
    return list(_covers_up(v))


@lru_cache(maxsize=None)
def _covers_down(w: Permutation) -> tuple[Cover, ...]:
    out = []
    for i in range(1, w.n):
        for j in range(i + 1, w.n + 1):
            v = w.swap_positions(i, j)
            if is_cover(v, i, j):
                out.append(make_cover(v, i, j))
    return tuple(out)


def covers_down(w: Permutation) -> list[Cover]:
    return list(_covers_down(w))


def all_covers(n: int):
    for v in all_permutations(n):
        yield from _covers_up(v)


@lru_cache(maxsize=4096)
def up_set(v: Permutation) -> frozenset[Permutation]:
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for cov in _covers_up(u):
            if cov.upper not in seen:
                seen.add(cov.upper)
                queue.append(cov.upper)
    return frozenset(seen)


@lru_cache(maxsize=4096)
def down_set(w: Permutation) -> frozenset[Permutation]:
    seen = {w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        for cov in _covers_down(u):
            if cov.lower not in seen:
                seen.add(cov.lower)
                queue.append(cov.lower)
    return frozenset(seen)


def bruhat_leq(v: Permutation, w: Permutation) -> bool:
    if v.n != w.n:
        raise ValueError("permutations of different sizes")
    if v.length > w.length:
        return False
    return w in up_set(v)


@dataclass(frozen=True)
class Interval:
    """``[bottom, top]`` with vertices grouped by length and the covers between them."""

    bottom: Permutation
    top: Permutation
    ranks: dict[int, tuple[Permutation, ...]]
    edges: tuple[Cover, ...]

    @property
    def vertices(self) -> list[Permutation]:
        return [u for rank in sorted(self.ranks) for u in self.ranks[rank]]

    def __len__(self):
        return sum(len(r) for r in self.ranks.values())


def interval(v: Permutation, w: Permutation) -> Interval:
    if not bruhat_leq(v, w):
        raise NotComparable(f"{v} is not below {w} in Bruhat order")
    members = up_set(v) & down_set(w)
    ranks: dict[int, list] = {}
    for u in sorted(members):
        ranks.setdefault(u.length, []).append(u)
    edges = tuple(cov for u in sorted(members, key=lambda p: (p.length, p.window))
                  for cov in _covers_up(u) if cov.upper in members)
    return Interval(v, w, {r: tuple(us) for r, us in sorted(ranks.items())}, edges)


SYMMETRY_MAPS = ("inverse", "left_w0", "right_w0")


def symmetry_image(cov: Cover, kind: str) -> Cover:
    """
    Image of a cover under one of the order (anti)automorphisms.

    ``inverse`` gives ``v^-1 < w^-1``; ``left_w0`` gives ``w0*w < w0*v``;
    ``right_w0`` gives ``w*w0 < v*w0``.  Statistics are recomputed from scratch.
    """
    v, w = cov.lower, cov.upper
    if kind == "inverse":
        lo, hi = v.inverse(), w.inverse()
    elif kind == "left_w0":
        w0 = longest_element(v.n)
        lo, hi = multiply(w0, w), multiply(w0, v)
    elif kind == "right_w0":
        w0 = longest_element(v.n)
        lo, hi = multiply(w, w0), multiply(v, w0)
    else:
        raise ValueError(f"unknown symmetry {kind!r}; expected one of {SYMMETRY_MAPS}")
    # lo and hi differ by exactly one transposition of positions
    i, j = [k for k in range(1, v.n + 1) if lo[k] != hi[k]]
    return make_cover(lo, i, j)


def verify_symmetries(n: int) -> Report:
    """Check the three statistic identities under the symmetry maps on every cover."""
    report = Report("prop21", n)
    counts = {"inverse": 0, "left_w0": 0, "right_w0": 0}
    bad: dict[str, list[str]] = {k: [] for k in counts}
    for cov in all_covers(n):
        inv = symmetry_image(cov, "inverse")
        left = symmetry_image(cov, "left_w0")
        right = symmetry_image(cov, "right_w0")
        checks = {
            "inverse": cov.a == inv.d and cov.b == inv.c,
            "left_w0": cov.b == left.d,
            "right_w0": cov.a == right.c,
        }
        for kind, ok in checks.items():
            counts[kind] += 1
            if not ok:
                bad[kind].append(str(cov))
    for kind in SYMMETRY_MAPS:
        detail = f"{counts[kind]} covers checked"
        if bad[kind]:
            detail += f"; {len(bad[kind])} failures, first: {bad[kind][0]}"
        report.add(f"prop21/{kind}", not bad[kind], detail)
    return report
