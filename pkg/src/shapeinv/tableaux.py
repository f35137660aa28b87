"""Standard Young tableaux and the Robinson-Schensted correspondence.

Tableaux are stored row-major as tuples of row tuples, top row first.
Cells are addressed ``(row, column)``, both 1-indexed.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .partitions import Partition, is_partition
from .permutations import Permutation

Tableau = tuple[tuple[int, ...], ...]


def shape(t: Sequence[Sequence[int]]) -> Partition:
    return tuple(len(row) for row in t)


def is_standard(t: Sequence[Sequence[int]]) -> bool:
    """Rows and columns strictly increase and the entries are exactly 1..n."""
    sh = shape(t)
    if not is_partition(sh):
        return False
    entries = sorted(x for row in t for x in row)
    if entries != list(range(1, len(entries) + 1)):
        return False
    for r, row in enumerate(t):
        if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
            return False
        if r and any(t[r - 1][j] >= row[j] for j in range(len(row))):
            return False
    return True


def row_insert(t: Sequence[Sequence[int]], x: int) -> tuple[Tableau, tuple[int, int]]:
    """Schensted row insertion ``t <- x``; returns the new tableau and the added cell."""
    rows = [list(row) for row in t]
    if any(x in row for row in rows):
        raise ValueError(f"{x} is already in the tableau")
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            break
        row = rows[r]
        k = bisect_right(row, x)
        if k == len(row):
            row.append(x)
            break
        row[k], x = x, row[k]
        r += 1
    return tuple(tuple(row) for row in rows), (r + 1, len(rows[r]))


@dataclass(frozen=True)
class RSPair:
    insertion: Tableau
    recording: Tableau

    @property
    def shape(self) -> Partition:
        return shape(self.insertion)


def rs(p: Sequence[int]) -> RSPair:
    """Insertion and recording tableaux of ``p``."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for i, x in enumerate(p, 1):
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([i])
                break
            row = P[r]
            k = bisect_right(row, x)
            if k == len(row):
                row.append(x)
                Q[r].append(i)
                break
            row[k], x = x, row[k]
            r += 1
    return RSPair(tuple(map(tuple, P)), tuple(map(tuple, Q)))


def shape_of(p: Sequence[int]) -> Partition:
    """RS shape of ``p``, tracking only the insertion tableau."""
    rows: list[list[int]] = []
    for x in p:
        for row in rows:
            k = bisect_right(row, x)
            if k == len(row):
                row.append(x)
                break
            row[k], x = x, row[k]
        else:
            rows.append([x])
    return tuple(len(row) for row in rows)


def rs_inverse(pair: RSPair) -> Permutation:
    """Recover the permutation from its (P, Q) pair by reverse bumping."""
    P, Q = pair.insertion, pair.recording
    if shape(P) != shape(Q):
        raise ValueError(f"shapes differ: {shape(P)} vs {shape(Q)}")
    if not (is_standard(P) and is_standard(Q)):
        raise ValueError("both tableaux must be standard")
    rows = [list(row) for row in P]
    where = {v: r for r, row in enumerate(Q) for v in row}
    n = sum(shape(P))
    out = [0] * n
    for i in range(n, 0, -1):
        r = where[i]
        x = rows[r].pop()
        if not rows[r]:
            rows.pop()
        for above in range(r - 1, -1, -1):
            row = rows[above]
            k = bisect_left(row, x) - 1
            row[k], x = x, row[k]
        out[i - 1] = x
    return tuple(out)


def standard_tableaux(sh: Sequence[int]) -> Iterator[Tableau]:
    """Every SYT of shape ``sh``, generated by placing n in each removable corner."""
    sh = tuple(sh)
    n = sum(sh)
    if n == 0:
        yield ()
        return
    for r in range(len(sh)):
        below = sh[r + 1] if r + 1 < len(sh) else 0
        if sh[r] > below:
            smaller = list(sh)
            smaller[r] -= 1
            smaller_t = tuple(x for x in smaller if x)
            for t in standard_tableaux(smaller_t):
                rows = [list(row) for row in t]
                if r == len(rows):
                    rows.append([])
                rows[r].append(n)
                yield tuple(map(tuple, rows))


@lru_cache(maxsize=None)
def count_standard_tableaux(sh: tuple[int, ...]) -> int:
    """Number of SYT of shape ``sh`` by the corner-removal recursion."""
    if sum(sh) == 0:
        return 1
    total = 0
    for r in range(len(sh)):
        below = sh[r + 1] if r + 1 < len(sh) else 0
        if sh[r] > below:
            smaller = list(sh)
            smaller[r] -= 1
            total += count_standard_tableaux(tuple(x for x in smaller if x))
    return total
