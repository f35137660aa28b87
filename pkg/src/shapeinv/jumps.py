"""Jump partitions acting on minimal permutations, and the two-column decomposition.

A jump partition attached to a block composition ``c = (c_1, ..., c_M)`` is a
pair of (M-1)-tuples of partitions.  The inner part acts on positions: for
component i and row j, the entry at position ``c*_i - j + 1`` slides right by
``mu_j`` places.  The outer part acts on values: the value ``c*_i - j + 1``
moves up by ``nu_j``, each step swapping it with the next larger value.  Rows
are applied top row first.  Each component must satisfy ``len(mu) <= c_i`` and
``mu_1 < c_{i+1}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .layered import (
    BlockComposition,
    check_composition,
    is_minimal,
    min_inversions,
    minimal_from_composition,
    prefix_sums,
)
from .partitions import Partition, as_partition, colored_enumerate, conjugate
from .permutations import Permutation, as_permutation, inverse, inversions, leftmost_lds
from .tableaux import shape_of


class JumpError(ValueError):
    """A jump partition does not fit its composition or permutation."""


class OutOfRegimeError(ValueError):
    """Input lies outside the regime where the two-column results apply."""


class DecompositionError(RuntimeError):
    """The decomposition failed its own apply-and-compare check."""


@dataclass(frozen=True)
class JumpPartition:
    composition: BlockComposition
    inner: tuple[Partition, ...]
    outer: tuple[Partition, ...]

    def __post_init__(self) -> None:
        comp = check_composition(self.composition)
        inner = tuple(as_partition(mu) for mu in self.inner)
        outer = tuple(as_partition(nu) for nu in self.outer)
        if len(inner) != len(comp) - 1 or len(outer) != len(comp) - 1:
            raise JumpError(f"composition {comp} needs {len(comp) - 1} inner and outer components")
        object.__setattr__(self, "composition", comp)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "outer", outer)

    @classmethod
    def empty(cls, composition: Sequence[int]) -> "JumpPartition":
        k = len(composition) - 1
        return cls(tuple(composition), ((),) * k, ((),) * k)

    @property
    def size(self) -> int:
        return sum(map(sum, self.inner)) + sum(map(sum, self.outer))

    def swap(self) -> "JumpPartition":
        """Exchange the inner and outer roles."""
        return JumpPartition(self.composition, self.outer, self.inner)

    def violations(self) -> list[str]:
        out = []
        c = self.composition
        for side, comps in (("inner", self.inner), ("outer", self.outer)):
            for i, part in enumerate(comps):
                if len(part) > c[i]:
                    out.append(f"{side}[{i + 1}] has {len(part)} rows > c_{i + 1} = {c[i]}")
                if part and part[0] >= c[i + 1]:
                    out.append(f"{side}[{i + 1}] has first row {part[0]} >= c_{i + 2} = {c[i + 1]}")
        return out

    def to_json(self) -> dict:
        return {
            "composition": list(self.composition),
            "inner": [list(mu) for mu in self.inner],
            "outer": [list(nu) for nu in self.outer],
        }

    @classmethod
    def from_json(cls, data: dict) -> "JumpPartition":
        return cls(
            tuple(data["composition"]),
            tuple(tuple(mu) for mu in data["inner"]),
            tuple(tuple(nu) for nu in data["outer"]),
        )

    def __str__(self) -> str:
        def fmt(parts: Iterable[Partition]) -> str:
            return "(" + ", ".join("(" + ",".join(map(str, p)) + ")" if p else "()" for p in parts) + ")"

        return f"inner={fmt(self.inner)} outer={fmt(self.outer)}"


def _act_inner(perm: Sequence[int], composition: Sequence[int], inner: Sequence[Partition]) -> Permutation:
    out = list(perm)
    stars = prefix_sums(composition)
    for i, mu in enumerate(inner, 1):
        for j, row in enumerate(mu, 1):
            start = stars[i] - j + 1
            for t in range(row):
                a = start + t - 1
                out[a], out[a + 1] = out[a + 1], out[a]
    return tuple(out)


def _act_outer(perm: Sequence[int], composition: Sequence[int], outer: Sequence[Partition]) -> Permutation:
    out = list(perm)
    where = [0] * (len(out) + 2)
    for idx, v in enumerate(out):
        where[v] = idx
    stars = prefix_sums(composition)
    for i, nu in enumerate(outer, 1):
        for j, row in enumerate(nu, 1):
            value = stars[i] - j + 1
            for t in range(row):
                lo = value + t
                a, b = where[lo], where[lo + 1]
                out[a], out[b] = lo + 1, lo
                where[lo], where[lo + 1] = b, a
    return tuple(out)


def _check(perm: Sequence[int], jp: JumpPartition) -> Permutation:
    perm = as_permutation(perm)
    if is_minimal(perm) != jp.composition:
        raise JumpError(f"{perm} is not the minimal permutation of composition {jp.composition}")
    bad = jp.violations()
    if bad:
        raise JumpError("; ".join(bad))
    return perm


def apply_inner(perm: Sequence[int], jp: JumpPartition) -> Permutation:
    """Right action of the inner part of ``jp`` on a minimal permutation."""
    perm = _check(perm, jp)
    return _act_inner(perm, jp.composition, jp.inner)


def apply_outer(perm: Sequence[int], jp: JumpPartition) -> Permutation:
    """Left action of the outer part of ``jp`` on a minimal permutation."""
    perm = _check(perm, jp)
    return _act_outer(perm, jp.composition, jp.outer)


def apply(jp: JumpPartition, perm: Sequence[int], outer_first: bool = False) -> Permutation:
    """``J(pi)``: inner action, then outer action (or the reverse order if asked)."""
    perm = _check(perm, jp)
    if outer_first:
        return _act_inner(_act_outer(perm, jp.composition, jp.outer), jp.composition, jp.inner)
    return _act_outer(_act_inner(perm, jp.composition, jp.inner), jp.composition, jp.outer)


def inverse_identity_check(jp: JumpPartition, perm: Sequence[int]) -> bool:
    """Whether inverting ``J(pi)`` is the same as applying J with inner and outer swapped."""
    return inverse(apply(jp, perm)) == apply(jp.swap(), perm)


def is_valid(jp: JumpPartition, perm: Sequence[int]) -> bool:
    """Whether ``J(pi)`` keeps the RS shape of ``pi``."""
    return shape_of(apply(jp, perm)) == shape_of(perm)


def enumerate_jumps(composition: Sequence[int], size: int) -> list[JumpPartition]:
    """All jump partitions of the given size attached to ``composition``.

    Built from 2(M-1)-colored partitions: color ``2i`` feeds inner component
    i+1 and color ``2i+1`` feeds outer component i+1.  Candidates breaking the
    row-count or first-row bounds are dropped.
    """
    comp = check_composition(composition)
    k = len(comp) - 1
    if k == 0:
        return [JumpPartition.empty(comp)] if size == 0 else []
    out = []
    for colored in colored_enumerate(2 * k, size):
        rows: list[list[int]] = [[] for _ in range(2 * k)]
        for value, color in colored:
            rows[color].append(value)
        jp = JumpPartition(
            comp,
            tuple(tuple(rows[2 * i]) for i in range(k)),
            tuple(tuple(rows[2 * i + 1]) for i in range(k)),
        )
        if not jp.violations():
            out.append(jp)
    return out


# --- two-column decomposition ------------------------------------------------

LOW_REGIONS = frozenset("bcf")
HIGH_REGIONS = frozenset("ghj")


def two_column_data(sigma: Sequence[int]) -> tuple[int, int, int]:
    """``(s, r, delta)`` for a permutation whose shape has exactly two columns."""
    sh = shape_of(sigma)
    cols = conjugate(sh)
    if len(cols) != 2:
        raise OutOfRegimeError(f"shape {sh} does not have exactly two columns")
    s, r = cols
    return s, r, inversions(sigma) - min_inversions(sh)


def classify_regions(sigma: Sequence[int], lds: Sequence[int] | None = None) -> dict[int, str]:
    """Region letter for every position outside the given decreasing subsequence.

    The rectangle spanned by the first and last points of ``lds`` splits the
    plane into a 3x3 grid; letters follow the usual picture: ``d b c`` down the
    left column, ``g a f`` down the middle and ``h j e`` down the right, with
    ``a`` the rectangle itself.
    """
    lds = tuple(lds) if lds is not None else leftmost_lds(sigma)
    x_lo, x_hi = lds[0], lds[-1]
    y_hi, y_lo = sigma[x_lo - 1], sigma[x_hi - 1]
    members = set(lds)
    grid = {(-1, 1): "d", (-1, 0): "b", (-1, -1): "c",
            (0, 1): "g", (0, 0): "a", (0, -1): "f",
            (1, 1): "h", (1, 0): "j", (1, -1): "e"}
    out = {}
    for pos, val in enumerate(sigma, 1):
        if pos in members:
            continue
        col = -1 if pos < x_lo else (1 if pos > x_hi else 0)
        row = -1 if val < y_lo else (1 if val > y_hi else 0)
        out[pos] = grid[col, row]
    return out


def _peel_values(perm: list[int], fixed: set[int], movers: list[int], step: int) -> list[int]:
    # move each mover's value by `step` while the neighbouring value sits at a fixed position
    where = {v: i for i, v in enumerate(perm, 1)}
    counts = []
    for pos in movers:
        moves = 0
        while True:
            v = perm[pos - 1]
            other = where.get(v + step)
            if other is None or other not in fixed:
                break
            perm[pos - 1], perm[other - 1] = v + step, v
            where[v], where[v + step] = other, pos
            moves += 1
        counts.append(moves)
    return counts


def _peel_positions(perm: list[int], fixed: set[int], movers: list[int], step: int) -> list[int]:
    # move each mover by `step` positions while the neighbouring entry has a fixed value
    counts = []
    for value in movers:
        pos = perm.index(value) + 1
        moves = 0
        while 1 <= pos + step <= len(perm) and perm[pos + step - 1] in fixed:
            perm[pos - 1], perm[pos + step - 1] = perm[pos + step - 1], value
            pos += step
            moves += 1
        counts.append(moves)
    return counts


def decompose_two_column(sigma: Sequence[int]) -> tuple[Permutation, JumpPartition]:
    """Write ``sigma`` as ``J(pi)`` with ``pi`` minimal and ``|J|`` the excess.

    Requires a two-column shape ``(s, r)'`` and excess below r.  Points off
    the leftmost longest decreasing subsequence S lie either all left/below
    its bounding rectangle or all above/right.  In the first case points left
    of the rectangle undo outer jumps by trading values with S points below
    them and points below it undo inner jumps by trading places with S points
    to their left; the counts are the rows of nu and mu.  In the mirrored case
    the counts come out as the conjugate partitions.
    """
    sigma = as_permutation(sigma)
    s, r, excess = two_column_data(sigma)
    if excess >= r:
        raise OutOfRegimeError(f"excess {excess} >= r = {r}: no decomposition theorem applies")
    lds = leftmost_lds(sigma)
    regions = classify_regions(sigma, lds)
    letters = set(regions.values())
    perm = list(sigma)
    if letters <= LOW_REGIONS:
        left = sorted((p for p, g in regions.items() if g == "b"), key=lambda p: sigma[p - 1])
        outer_counts = _peel_values(perm, set(lds), left, -1)
        s_values = {perm[p - 1] for p in lds}
        below = [sigma[p - 1] for p, g in sorted(regions.items()) if g == "f"]
        inner_counts = _peel_positions(perm, s_values, below, -1)
        composition = (r, s)
        mu = tuple(sorted((x for x in inner_counts if x), reverse=True))
        nu = tuple(sorted((x for x in outer_counts if x), reverse=True))
    elif letters <= HIGH_REGIONS:
        right = sorted((p for p, g in regions.items() if g == "j"), key=lambda p: -sigma[p - 1])
        outer_counts = _peel_values(perm, set(lds), right, 1)
        s_values = {perm[p - 1] for p in lds}
        above = sorted((sigma[p - 1] for p, g in regions.items() if g == "g"), key=lambda v: -sigma.index(v))
        inner_counts = _peel_positions(perm, s_values, above, 1)
        composition = (s, r)
        mu = conjugate(sorted((x for x in inner_counts if x), reverse=True))
        nu = conjugate(sorted((x for x in outer_counts if x), reverse=True))
    else:
        raise DecompositionError(f"points off the leftmost LDS of {sigma} lie in regions {sorted(letters)}")
    pi = minimal_from_composition(composition)
    jp = JumpPartition(composition, (mu,), (nu,))
    if tuple(perm) != pi or jp.violations() or apply(jp, pi) != sigma:
        raise DecompositionError(f"self-check failed for {sigma}: got {pi} with {jp}")
    return pi, jp


def fixed_block_check(sigma: Sequence[int]) -> bool:
    """Whether ``sigma`` keeps long runs of one of its two minimal permutations in place.

    For shape ``(s, r)'`` and excess d < r, either positions starting somewhere
    in ``1..d+1`` hold ``s+1-i`` for s-d consecutive i and positions starting
    in ``s+1..s+d+1`` hold ``2s+r+1-i`` for r-d consecutive i, or the same with
    the roles of s and r exchanged.
    """
    sigma = as_permutation(sigma)
    s, r, d = two_column_data(sigma)
    if d >= r:
        raise OutOfRegimeError(f"excess {d} >= r = {r}")
    n = len(sigma)

    def run(first_starts: range, length: int, offset: int) -> bool:
        for i in first_starts:
            if i + length - 1 <= n and all(sigma[t - 1] == offset - t for t in range(i, i + length)):
                return True
        return False

    def alternative(a: int, b: int) -> bool:
        # first block has length a, second has length b
        return run(range(1, d + 2), a - d, a + 1) and run(range(a + 1, a + d + 2), b - d, 2 * a + b + 1)

    return alternative(s, r) or alternative(r, s)
