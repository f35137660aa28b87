from itertools import permutations, product

import pytest
from hypothesis import given, strategies as st

from shapeinv.partitions import (
    as_partition,
    colored_count,
    colored_enumerate,
    conjugate,
    frequency_form,
    from_frequency_form,
    multinomial,
    parse_shape,
    partitions_of,
)


def brute_partitions(n):
    """Partitions of n as sorted tuples, found by exploring all compositions."""
    found = set()

    def walk(rest, acc):
        if rest == 0:
            found.add(tuple(sorted(acc, reverse=True)))
        for k in range(1, rest + 1):
            walk(rest - k, acc + [k])

    walk(n, [])
    return found


@pytest.mark.parametrize("p, expected", [
    ((5, 5, 3, 2), (4, 4, 3, 2, 2)),
    ((), ()),
    ((4, 3, 1), (3, 2, 2, 1)),
])
def test_conjugate_examples(p, expected):
    assert conjugate(p) == expected


def test_conjugate_is_involution_up_to_30():
    for n in range(31):
        for p in partitions_of(n):
            assert conjugate(conjugate(p)) == p
            assert sum(conjugate(p)) == n


@pytest.mark.parametrize("p, expected", [
    ((3, 2, 2, 1), ((3, 1), (2, 2), (1, 1))),
    ((7,), ((7, 1),)),
    ((2,) * 6, ((2, 6),)),
])
def test_frequency_form(p, expected):
    assert frequency_form(p) == expected
    assert from_frequency_form(expected) == p


def test_multinomial_examples():
    assert multinomial(1, [1]) == 1
    assert multinomial(4, [1, 2, 1]) == len(set(permutations((3, 2, 2, 1)))) == 12
    assert multinomial(2, [1, 1]) == len(set(permutations((5, 3)))) == 2


def test_multinomial_rejects_bad_sum():
    with pytest.raises(ValueError):
        multinomial(5, [1, 2])


def test_multinomial_is_exact_beyond_64_bits():
    assert multinomial(40, [20, 20]) == 137846528820
    assert multinomial(60, [1] * 60) > 2 ** 64


def test_colored_count_examples():
    assert colored_count(2, 2) == 5
    assert all(colored_count(c, 0) == 1 for c in range(1, 6))
    assert colored_count(1, 4) == len(brute_partitions(4)) == 5


def test_colored_enumerate_examples():
    # 2, 2bar, 11, 1 1bar, 1bar 1bar
    assert colored_enumerate(2, 2) == [
        ((2, 0),), ((2, 1),), ((1, 0), (1, 0)), ((1, 0), (1, 1)), ((1, 1), (1, 1)),
    ]
    assert colored_enumerate(3, 0) == [()]
    assert colored_enumerate(2, 1) == [((1, 0),), ((1, 1),)]


def test_partitions_of_examples():
    assert partitions_of(0) == [()]
    assert len(partitions_of(4)) == 5
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions_of(9)) == 30


def test_partitions_match_brute_force_and_series():
    for n in range(16):
        ps = partitions_of(n)
        assert len(ps) == len(set(ps))
        assert set(ps) == brute_partitions(n)
        assert len(ps) == colored_count(1, n)
    for n in range(16, 31):
        assert len(partitions_of(n)) == colored_count(1, n)


def test_partitions_of_is_reverse_lexicographic():
    for n in range(1, 12):
        ps = partitions_of(n)
        assert ps == sorted(ps, reverse=True)


def test_colored_enumerate_matches_count():
    # only where the listing stays small enough to materialise
    for c in range(1, 11):
        for n in range(21):
            if colored_count(c, n) > 250_000:
                break
            listing = colored_enumerate(c, n)
            assert len(listing) == colored_count(c, n)
            assert len(set(listing)) == len(listing)
            for cp in listing:
                assert sum(v for v, _ in cp) == n
                assert list(cp) == sorted(cp, key=lambda t: (-t[0], t[1]))


def test_colored_enumerate_matches_brute_force():
    # independent: color every part of every ordinary partition in all ways
    for c in range(1, 4):
        for n in range(8):
            brute = set()
            for p in brute_partitions(n):
                for colors in product(range(c), repeat=len(p)):
                    brute.add(tuple(sorted(zip(p, colors), key=lambda t: (-t[0], t[1]))))
            assert set(colored_enumerate(c, n)) == brute


def test_colored_convolution():
    for a in range(1, 5):
        for b in range(1, 5):
            for n in range(16):
                assert colored_count(a + b, n) == sum(
                    colored_count(a, j) * colored_count(b, n - j) for j in range(n + 1))


@pytest.mark.parametrize("text, expected", [
    ("4,3,1", (4, 3, 1)),
    ("(4,3,1)", (4, 3, 1)),
    ("4 3 1", (4, 3, 1)),
    ("2^6", (2,) * 6),
    ("3^2,1", (3, 3, 1)),
])
def test_parse_shape(text, expected):
    assert parse_shape(text) == expected


@pytest.mark.parametrize("text", ["1,3", "x", "2^0", "0"])
def test_parse_shape_rejects(text):
    with pytest.raises(ValueError):
        parse_shape(text)


@given(st.lists(st.integers(1, 12), max_size=12))
def test_conjugate_properties(parts):
    p = as_partition(sorted(parts, reverse=True))
    q = conjugate(p)
    assert conjugate(q) == p
    assert sum(q) == sum(p)
    assert len(q) == (p[0] if p else 0)
