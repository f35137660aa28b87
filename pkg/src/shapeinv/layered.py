"""Minimal-inversion (layered) permutations of a given RS shape.

A block composition ``c = (c_1, ..., c_M)`` rearranges the parts of the
conjugate shape.  Its layered permutation has M consecutively decreasing
blocks of lengths c_1, ..., c_M, each block sitting entirely below the next.
"""
from __future__ import annotations

from itertools import accumulate
from math import comb
from typing import Iterator, Sequence

from .partitions import Partition, conjugate, frequency_form, multinomial
from .permutations import Permutation, inversions

BlockComposition = tuple[int, ...]


def prefix_sums(c: Sequence[int]) -> tuple[int, ...]:
    """``(c*_0, c*_1, ..., c*_M)`` with ``c*_0 = 0``."""
    return (0, *accumulate(c))


def check_composition(c: Sequence[int], shape: Sequence[int] | None = None) -> BlockComposition:
    c = tuple(c)
    if not c or any(not isinstance(x, int) or x <= 0 for x in c):
        raise ValueError(f"block lengths must be positive integers: {c!r}")
    if shape is not None and sorted(c, reverse=True) != list(conjugate(shape)):
        raise ValueError(f"{c!r} is not a rearrangement of the columns of {tuple(shape)!r}")
    return c


def minimal_from_composition(c: Sequence[int]) -> Permutation:
    c = check_composition(c)
    out: list[int] = []
    for lo, hi in zip(prefix_sums(c), prefix_sums(c)[1:]):
        out.extend(range(hi, lo, -1))
    return tuple(out)


def _multiset_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    # lexicographic next-permutation over a sorted multiset
    a = sorted(items)
    while True:
        yield tuple(a)
        i = len(a) - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = len(a) - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def all_minimal(shape: Sequence[int]) -> list[tuple[BlockComposition, Permutation]]:
    """Every minimal permutation of ``shape``, ordered lexicographically by block composition."""
    if not shape:
        raise ValueError("shape must be non-empty")
    return [(c, minimal_from_composition(c)) for c in _multiset_permutations(conjugate(shape))]


def count_minimal(shape: Sequence[int]) -> int:
    ms = [m for _, m in frequency_form(conjugate(shape))]
    return multinomial(sum(ms), ms)


def min_inversions(shape: Sequence[int]) -> int:
    """Sum of binom(column length, 2) over the columns of ``shape``."""
    return sum(comb(col, 2) for col in conjugate(shape))


def is_minimal(p: Sequence[int]) -> BlockComposition | None:
    """Block composition of ``p`` if it is layered, else None."""
    n = len(p)
    if n == 0:
        return None
    blocks = []
    start = 0
    for i in range(1, n + 1):
        if i == n or p[i] != p[i - 1] - 1:
            # block occupies positions start+1..i and must hold values start+1..i
            if p[start] != i or p[i - 1] != start + 1:
                return None
            blocks.append(i - start)
            start = i
    return tuple(blocks)


def excess(p: Sequence[int], shape: Partition) -> int:
    """Inversions of ``p`` above the minimum for ``shape``."""
    return inversions(p) - min_inversions(shape)
