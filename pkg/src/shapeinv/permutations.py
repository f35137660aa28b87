"""Permutations in one-line notation, inversion statistics and Knuth moves.

A permutation of size n is a tuple holding each of 1..n once; position i
(1-indexed) holds the value ``p[i - 1]``.  All positions and values exposed
by this module are 1-indexed.
"""
from __future__ import annotations

import enum
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

Permutation = tuple[int, ...]

KNUTH_CLOSURE_MAX_N = 9


def is_permutation(seq: Sequence[int]) -> bool:
    return sorted(seq) == list(range(1, len(seq) + 1))


def as_permutation(seq: Iterable[int]) -> Permutation:
    perm = tuple(seq)
    if not is_permutation(perm):
        raise ValueError(f"not a permutation of 1..{len(perm)}: {perm!r}")
    return perm


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def inverse(p: Sequence[int]) -> Permutation:
    out = [0] * len(p)
    for i, v in enumerate(p, 1):
        out[v - 1] = i
    return tuple(out)


def inversions(p: Sequence[int]) -> int:
    """Number of pairs i < j with p_i > p_j, by merge-count in O(n log n)."""
    _, count = _sort_count(list(p))
    return count


def _sort_count(seq: list[int]) -> tuple[list[int], int]:
    if len(seq) <= 1:
        return seq, 0
    mid = len(seq) // 2
    left, a = _sort_count(seq[:mid])
    right, b = _sort_count(seq[mid:])
    merged: list[int] = []
    count = a + b
    i = j = 0
    while i < len(left) and j < len(right):
        if left[i] <= right[j]:
            merged.append(left[i])
            i += 1
        else:
            merged.append(right[j])
            count += len(left) - i
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return merged, count


def right_transpose(p: Sequence[int], i: int) -> Permutation:
    """``p * s_i``: swap the entries at positions i and i+1."""
    if not 1 <= i < len(p):
        raise ValueError(f"position {i} out of range for n={len(p)}")
    out = list(p)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def left_transpose(p: Sequence[int], i: int) -> Permutation:
    """``s_i * p``: swap the values i and i+1 wherever they sit."""
    if not 1 <= i < len(p):
        raise ValueError(f"value {i} out of range for n={len(p)}")
    out = list(p)
    a, b = out.index(i), out.index(i + 1)
    out[a], out[b] = i + 1, i
    return tuple(out)


def lis_length(p: Sequence[int]) -> int:
    """Longest increasing subsequence length (patience sorting)."""
    piles: list[int] = []
    for v in p:
        k = bisect_left(piles, v)
        if k == len(piles):
            piles.append(v)
        else:
            piles[k] = v
    return len(piles)


def lds_length(p: Sequence[int]) -> int:
    return lis_length([-v for v in p])


def leftmost_lds(p: Sequence[int]) -> tuple[int, ...]:
    """Positions of a leftmost longest decreasing subsequence.

    The top point is the leftmost position that starts a maximal-length
    decreasing subsequence; each following point is the leftmost one that
    still extends to a maximal-length subsequence.
    """
    n = len(p)
    if n == 0:
        return ()
    # longest[i]: longest decreasing subsequence starting at index i
    longest = [1] * n
    for i in range(n - 2, -1, -1):
        longest[i] = 1 + max((longest[j] for j in range(i + 1, n) if p[j] < p[i]), default=0)
    target = max(longest)
    cur = longest.index(target)
    chosen = [cur]
    for need in range(target - 1, 0, -1):
        cur = next(j for j in range(cur + 1, n) if p[j] < p[cur] and longest[j] == need)
        chosen.append(cur)
    return tuple(i + 1 for i in chosen)


class MoveKind(enum.Enum):
    K_PLUS = "K+"
    K_MINUS = "K-"
    KD_PLUS = "KD+"
    KD_MINUS = "KD-"

    @property
    def sign(self) -> int:
        return 1 if self in (MoveKind.K_PLUS, MoveKind.KD_PLUS) else -1

    @property
    def dual(self) -> bool:
        return self in (MoveKind.KD_PLUS, MoveKind.KD_MINUS)


@dataclass(frozen=True, order=True)
class KnuthMove:
    """A Knuth move anchored at a window start position (K kinds) or at the value ``a`` (KD kinds)."""

    kind: MoveKind
    anchor: int

    def __str__(self) -> str:
        return f"{self.kind.value}@{self.anchor}"


def _k_transposition(p: Sequence[int], start: int) -> tuple[MoveKind, int] | None:
    # window p[start-1 : start+2]; returns (kind, position swapped with its right neighbour)
    x, y, z = p[start - 1], p[start], p[start + 1]
    if x < z < y:  # acb -> cab
        return MoveKind.K_PLUS, start
    if y < x < z:  # bac -> bca
        return MoveKind.K_PLUS, start + 1
    if y < z < x:  # cab -> acb
        return MoveKind.K_MINUS, start
    if z < x < y:  # bca -> bac
        return MoveKind.K_MINUS, start + 1
    return None


def _kd_kinds(pos: Sequence[int], a: int) -> set[MoveKind]:
    # pos[v] is the position of value v; patterns on values a-1, a, a+1, a+2
    n = len(pos) - 1
    kinds = set()
    if a >= 2:
        if pos[a] < pos[a - 1] < pos[a + 1]:
            kinds.add(MoveKind.KD_PLUS)
        if pos[a + 1] < pos[a - 1] < pos[a]:
            kinds.add(MoveKind.KD_MINUS)
    if a + 2 <= n:
        if pos[a] < pos[a + 2] < pos[a + 1]:
            kinds.add(MoveKind.KD_PLUS)
        if pos[a + 1] < pos[a + 2] < pos[a]:
            kinds.add(MoveKind.KD_MINUS)
    return kinds


def available_knuth_moves(p: Sequence[int], include_dual: bool = True) -> list[KnuthMove]:
    """All applicable K+/K- moves (by window start) and KD+/KD- moves (by value ``a``)."""
    n = len(p)
    moves = []
    for start in range(1, n - 1):
        hit = _k_transposition(p, start)
        if hit is not None:
            moves.append(KnuthMove(hit[0], start))
    if include_dual:
        pos = [0] + list(inverse(p))
        for a in range(1, n):
            for kind in sorted(_kd_kinds(pos, a), key=lambda k: k.value):
                moves.append(KnuthMove(kind, a))
    return moves


def apply_knuth_move(p: Sequence[int], move: KnuthMove) -> Permutation:
    n = len(p)
    if move.kind.dual:
        if not 1 <= move.anchor < n or move.kind not in _kd_kinds([0] + list(inverse(p)), move.anchor):
            raise ValueError(f"move {move} does not apply to {tuple(p)}")
        return left_transpose(p, move.anchor)
    if not 1 <= move.anchor <= n - 2:
        raise ValueError(f"move {move} does not apply to {tuple(p)}")
    hit = _k_transposition(p, move.anchor)
    if hit is None or hit[0] is not move.kind:
        raise ValueError(f"move {move} does not apply to {tuple(p)}")
    return right_transpose(p, hit[1])


def knuth_closure(p: Sequence[int], include_dual: bool = True, max_n: int = KNUTH_CLOSURE_MAX_N) -> set[Permutation]:
    """Breadth-first closure of ``p`` under Knuth moves (and dual moves if requested)."""
    if len(p) > max_n:
        raise ValueError(f"knuth_closure is limited to n <= {max_n}, got n={len(p)}")
    start = as_permutation(p)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for move in available_knuth_moves(cur, include_dual):
            nxt = apply_knuth_move(cur, move)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def reverse_complement(p: Sequence[int]) -> Permutation:
    """Rotate the permutation diagram by 180 degrees."""
    n = len(p)
    return tuple(n + 1 - v for v in reversed(p))
