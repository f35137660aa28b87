"""Pure-Python sweep over a lexicographic rank range of S_n."""
from __future__ import annotations

from collections import Counter
from math import factorial

from .permutations import Permutation, inversions
from .tableaux import shape_of


def unrank(n: int, rank: int) -> Permutation:
    """The permutation of rank ``rank`` (0-based) in lexicographic order."""
    if not 0 <= rank < factorial(n):
        raise ValueError(f"rank {rank} out of range for n={n}")
    pool = list(range(1, n + 1))
    out = []
    for i in range(n, 0, -1):
        idx, rank = divmod(rank, factorial(i - 1))
        out.append(pool.pop(idx))
    return tuple(out)


def _next_permutation(a: list[int]) -> bool:
    i = len(a) - 2
    while i >= 0 and a[i] > a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] < a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:] = reversed(a[i + 1:])
    return True


def sweep_range(n: int, start: int, count: int) -> dict[tuple[tuple[int, ...], int], int]:
    """Counts keyed by ``(shape, inversions)`` over ranks ``start .. start+count-1``."""
    acc: Counter = Counter()
    perm = list(unrank(n, start))
    for _ in range(count):
        acc[shape_of(perm), inversions(perm)] += 1
        if not _next_permutation(perm):
            break
    return dict(acc)
