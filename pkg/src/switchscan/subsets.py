"""Colex ranking of small k-subsets and bitmask helpers."""

from __future__ import annotations

from itertools import combinations
from math import comb

MAX_DEGREE = 63


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(points) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def subset_rank(s) -> int:
    """Colex rank of a k-subset given as an iterable of distinct points."""
    return sum(comb(p, i + 1) for i, p in enumerate(sorted(s)))


def subset_unrank(r: int, k: int) -> tuple[int, ...]:
    out = []
    for i in range(k, 0, -1):
        p = i - 1
        while comb(p + 1, i) <= r:
            p += 1
        out.append(p)
        r -= comb(p, i)
    return tuple(reversed(out))


def triple_rank(a: int, b: int, c: int) -> int:
    if a > b:
        a, b = b, a
    if b > c:
        b, c = c, b
    if a > b:
        a, b = b, a
    return c * (c - 1) * (c - 2) // 6 + b * (b - 1) // 2 + a


def all_triples(n: int) -> list[tuple[int, int, int]]:
    """Every 3-subset of range(n), indexed by colex rank."""
    out = []
    for c in range(2, n):
        for b in range(1, c):
            for a in range(b):
                out.append((a, b, c))
    return out


def all_ksubsets(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-subsets of range(n) in colex order."""
    return sorted(combinations(range(n), k), key=lambda s: s[::-1])
