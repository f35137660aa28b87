from collections import defaultdict
from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from shapeinv.permutations import (
    KnuthMove,
    MoveKind,
    apply_knuth_move,
    as_permutation,
    available_knuth_moves,
    inverse,
    inversions,
    knuth_closure,
    lds_length,
    left_transpose,
    leftmost_lds,
    lis_length,
    reverse_complement,
    right_transpose,
)
from shapeinv.tableaux import rs, shape_of

OPPOSITE = {
    MoveKind.K_PLUS: MoveKind.K_MINUS, MoveKind.K_MINUS: MoveKind.K_PLUS,
    MoveKind.KD_PLUS: MoveKind.KD_MINUS, MoveKind.KD_MINUS: MoveKind.KD_PLUS,
}


def brute_inversions(p):
    return sum(1 for i, j in combinations(range(len(p)), 2) if p[i] > p[j])


def brute_leftmost_lds(p):
    """Lexicographically smallest position tuple among all longest decreasing subsequences."""
    n = len(p)
    for k in range(n, 0, -1):
        hits = [c for c in combinations(range(n), k)
                if all(p[c[t]] > p[c[t + 1]] for t in range(k - 1))]
        if hits:
            return tuple(i + 1 for i in min(hits))
    return ()


perms = st.integers(0, 9).flatmap(lambda n: st.permutations(range(1, n + 1)).map(tuple))


def test_inverse_and_inversions_examples():
    assert inverse((2, 3, 1)) == (3, 1, 2)
    assert inversions((3, 1, 2)) == 2
    assert inversions((1, 2, 3, 4)) == 0
    assert inversions((4, 3, 2, 1)) == 6


def test_transpositions():
    assert right_transpose((1, 2, 3), 1) == (2, 1, 3)
    assert left_transpose((1, 3, 2), 2) == (1, 2, 3)
    with pytest.raises(ValueError):
        right_transpose((1, 2, 3), 3)
    with pytest.raises(ValueError):
        left_transpose((1, 2, 3), 0)


def test_as_permutation_rejects():
    for bad in [(1, 1), (0, 1), (2, 3)]:
        with pytest.raises(ValueError):
            as_permutation(bad)


@given(perms)
def test_inversions_match_brute_force(p):
    assert inversions(p) == brute_inversions(p)
    assert inversions(inverse(p)) == inversions(p)
    assert inverse(inverse(p)) == p


def test_transposition_changes_inversions_by_one(s_n):
    for p in s_n(6):
        inv = inversions(p)
        for i in range(1, 6):
            r = right_transpose(p, i)
            assert inversions(r) == inv + (1 if p[i - 1] < p[i] else -1)
            assert left_transpose(p, i) == inverse(right_transpose(inverse(p), i))


def test_leftmost_lds_example():
    p = (6, 5, 4, 3, 2, 12, 1, 11, 10, 9, 8, 7)
    assert lds_length(p) == 6
    assert leftmost_lds(p) == brute_leftmost_lds(p) == (1, 2, 3, 4, 5, 7)


def test_leftmost_lds_exhaustive(s_n):
    for n in range(1, 8):
        for p in s_n(n):
            got = leftmost_lds(p)
            assert got == brute_leftmost_lds(p)
            assert len(got) == lds_length(p)


@given(perms)
def test_greene_first_row_and_column(p):
    sh = shape_of(p)
    assert lis_length(p) == (sh[0] if sh else 0)
    assert lds_length(p) == len(sh)


def test_knuth_moves_exhaustive_n7(s_n):
    for p in s_n(7):
        pair = rs(p)
        P, Q = pair.insertion, pair.recording
        inv = inversions(p)
        for move in available_knuth_moves(p):
            q = apply_knuth_move(p, move)
            assert inversions(q) == inv + move.kind.sign
            assert apply_knuth_move(q, KnuthMove(OPPOSITE[move.kind], move.anchor)) == p
            P2, Q2 = rs(q).insertion, rs(q).recording
            if move.kind.dual:
                assert Q2 == Q
            else:
                assert P2 == P


def test_knuth_move_patterns():
    assert apply_knuth_move((1, 3, 2), KnuthMove(MoveKind.K_PLUS, 1)) == (3, 1, 2)
    assert apply_knuth_move((2, 1, 3), KnuthMove(MoveKind.K_PLUS, 1)) == (2, 3, 1)
    assert apply_knuth_move((3, 1, 2), KnuthMove(MoveKind.K_MINUS, 1)) == (1, 3, 2)
    assert apply_knuth_move((2, 3, 1), KnuthMove(MoveKind.K_MINUS, 1)) == (2, 1, 3)
    # dual: value 2 before 1 before 3, swap 2 and 3
    assert apply_knuth_move((2, 1, 3), KnuthMove(MoveKind.KD_PLUS, 2)) == (3, 1, 2)
    with pytest.raises(ValueError):
        apply_knuth_move((1, 2, 3), KnuthMove(MoveKind.K_PLUS, 1))


def test_available_moves_are_exactly_the_applicable_ones(s_n):
    every = [KnuthMove(k, a) for k in MoveKind for a in range(1, 6)]
    for p in s_n(5):
        listed = set(available_knuth_moves(p))
        for m in every:
            try:
                apply_knuth_move(p, m)
                ok = True
            except ValueError:
                ok = False
            assert ok == (m in listed)


def test_knuth_closure_is_shape_class_n6(s_n):
    by_shape, by_p = defaultdict(set), defaultdict(set)
    for p in s_n(6):
        pair = rs(p)
        by_shape[pair.shape].add(p)
        by_p[pair.insertion].add(p)
    for cls in by_shape.values():
        assert knuth_closure(min(cls)) == cls
    for cls in by_p.values():
        assert knuth_closure(min(cls), include_dual=False) == cls


def test_knuth_closure_guard():
    with pytest.raises(ValueError):
        knuth_closure(tuple(range(1, 11)))


@given(perms)
def test_reverse_complement(p):
    q = reverse_complement(p)
    assert reverse_complement(q) == p
    assert inversions(q) == inversions(p)
    assert shape_of(q) == shape_of(p)

