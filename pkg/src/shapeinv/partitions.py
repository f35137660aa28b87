"""Integer partitions, conjugation, frequency notation and colored partitions.

Partitions are plain tuples of positive integers in weakly decreasing order;
``()`` is the unique partition of 0.  A colored part is a ``(value, color)``
pair and a colored partition is a tuple of colored parts sorted by value
descending, then color ascending.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

Partition = tuple[int, ...]
FrequencyForm = tuple[tuple[int, int], ...]
ColoredPartition = tuple[tuple[int, int], ...]


def is_partition(parts: Sequence[int]) -> bool:
    if any(not isinstance(p, int) or p <= 0 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def as_partition(parts: Sequence[int]) -> Partition:
    """Validate ``parts`` and return it as a tuple."""
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts!r}")
    return parts


def conjugate(p: Sequence[int]) -> Partition:
    """Transpose of the Young diagram: ``result[i] = #{j : p[j] > i}``."""
    if not p:
        return ()
    return tuple(sum(1 for part in p if part > i) for i in range(p[0]))


def frequency_form(p: Sequence[int]) -> FrequencyForm:
    """Run-length encode ``p`` as ``((t_1, m_1), ..., (t_k, m_k))`` with t_1 > ... > t_k."""
    out: list[tuple[int, int]] = []
    for part in p:
        if out and out[-1][0] == part:
            out[-1] = (part, out[-1][1] + 1)
        else:
            out.append((part, 1))
    return tuple(out)


def from_frequency_form(freq: Sequence[tuple[int, int]]) -> Partition:
    return as_partition([t for t, m in freq for _ in range(m)])


def multinomial(total: int, ms: Sequence[int]) -> int:
    """Exact ``total! / prod(m!)``; rejects multiplicities that do not sum to ``total``."""
    if any(m < 0 for m in ms) or sum(ms) != total:
        raise ValueError(f"multiplicities {list(ms)} do not sum to {total}")
    result, remaining = 1, total
    for m in ms:
        result *= comb(remaining, m)
        remaining -= m
    return result


@lru_cache(maxsize=None)
def _colored_series(c: int, n: int) -> tuple[int, ...]:
    # coefficients of prod_{m>=1} (1 - x^m)^(-c) up to x^n
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    for m in range(1, n + 1):
        for _ in range(c):
            for k in range(m, n + 1):
                coeffs[k] += coeffs[k - m]
    return tuple(coeffs)


def colored_count(c: int, n: int) -> int:
    """Number of partitions of ``n`` into parts of ``c`` colors, p_c(n)."""
    if c < 1:
        raise ValueError("number of colors must be positive")
    if n < 0:
        return 0
    return _colored_series(c, n)[n]


def colored_enumerate(c: int, n: int) -> list[ColoredPartition]:
    """All colored partitions of ``n`` with ``c`` colors, each once.

    Parts inside a partition are ordered by value descending, then color
    ascending.  The list itself is ordered lexicographically by that part
    order, so ``colored_enumerate(2, 2)`` starts with ``((2, 0),)`` and ends
    with ``((1, 1), (1, 1))``.
    """
    if c < 1:
        raise ValueError("number of colors must be positive")
    if n < 0:
        return []
    out: list[ColoredPartition] = []

    def extend(prefix: list[tuple[int, int]], remaining: int, max_value: int, min_color: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for value in range(min(remaining, max_value), 0, -1):
            first_color = min_color if value == max_value else 0
            for color in range(first_color, c):
                prefix.append((value, color))
                extend(prefix, remaining - value, value, color)
                prefix.pop()

    extend([], n, n, 0)
    return out


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order: ``(n), (n-1, 1), ..., (1,)*n``."""
    if n < 0:
        return []
    return list(_partitions(n, n))


def _partitions(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def parse_shape(text: str) -> Partition:
    """Parse ``"4,3,1"``, ``"(4,3,1)"``, ``"4 3 1"`` or frequency notation ``"2^6"`` / ``"3^2,1"``.

    Grammar::

        shape  := "" | "(" body ")" | body
        body   := item { ("," | " ") item }
        item   := int [ "^" int ]
    """
    body = text.strip()
    if body.startswith(("(", "<", "[")) and body.endswith((")", ">", "]")):
        body = body[1:-1]
    tokens = [tok for tok in body.replace(",", " ").split() if tok]
    parts: list[int] = []
    for tok in tokens:
        value, _, mult = tok.partition("^")
        try:
            v = int(value)
            m = int(mult) if mult else 1
        except ValueError:
            raise ValueError(f"bad shape token {tok!r}") from None
        if v <= 0 or m <= 0:
            raise ValueError(f"bad shape token {tok!r}")
        parts.extend([v] * m)
    return as_partition(parts)


def shape_key(p: Sequence[int]) -> str:
    """Canonical string key ``"4.3.1"`` (empty string for the empty partition)."""
    return ".".join(str(x) for x in p)


def parse_shape_key(key: str) -> Partition:
    return as_partition([int(x) for x in key.split(".")]) if key else ()
