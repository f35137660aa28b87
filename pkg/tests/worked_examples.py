"""Worked examples with hand-transcribed expected outputs."""
from shapeinv.jumps import JumpPartition

PI_3431 = (3, 2, 1, 7, 6, 5, 4, 10, 9, 8)
COMP_3431 = (3, 4, 3)
PI_2_6 = (6, 5, 4, 3, 2, 1, 12, 11, 10, 9, 8, 7)

# (name, minimal permutation, jump partition, expected image)
CASES = [
    ("inner only, lambda=(3,3,3,1)", PI_3431,
     JumpPartition(COMP_3431, ((), (1, 1)), ((), ())),
     (3, 2, 1, 7, 6, 10, 5, 4, 9, 8)),
    ("outer only, lambda=(3,3,3,1)", PI_3431,
     JumpPartition(COMP_3431, ((), ()), ((2,), ())),
     (5, 2, 1, 7, 6, 4, 3, 10, 9, 8)),
    ("inner and outer, lambda=(3,3,3,1)", PI_3431,
     JumpPartition(COMP_3431, ((), (1, 1)), ((2,), ())),
     (5, 2, 1, 7, 6, 10, 4, 3, 9, 8)),
    ("four blocks in S_53",
     tuple(range(14, 0, -1)) + tuple(range(29, 14, -1)) + tuple(range(41, 29, -1)) + tuple(range(53, 41, -1)),
     JumpPartition((14, 15, 12, 12), ((1, 1), (2, 1), ()), ((), (3, 1), (2,))),
     tuple(range(14, 2, -1)) + (32, 2)
     + (1, 29) + tuple(range(27, 16, -1)) + (43, 16)
     + (40, 15) + tuple(range(39, 32, -1)) + (31, 30, 28)
     + tuple(range(53, 43, -1)) + (42, 41)),
]

# shape 2^6: every jump partition of size <= 2 and its image
TWO_SIX = [
    (((), ()), (6, 5, 4, 3, 2, 1, 12, 11, 10, 9, 8, 7)),
    (((1,), ()), (6, 5, 4, 3, 2, 12, 1, 11, 10, 9, 8, 7)),
    (((), (1,)), (7, 5, 4, 3, 2, 1, 12, 11, 10, 9, 8, 6)),
    (((1,), (1,)), (7, 5, 4, 3, 2, 12, 1, 11, 10, 9, 8, 6)),
    (((2,), ()), (6, 5, 4, 3, 2, 12, 11, 1, 10, 9, 8, 7)),
    (((1, 1), ()), (6, 5, 4, 3, 12, 2, 1, 11, 10, 9, 8, 7)),
    (((), (2,)), (8, 5, 4, 3, 2, 1, 12, 11, 10, 9, 7, 6)),
    (((), (1, 1)), (7, 6, 4, 3, 2, 1, 12, 11, 10, 9, 8, 5)),
]


def two_six_jump(inner, outer):
    return JumpPartition((6, 6), (inner,), (outer,))
