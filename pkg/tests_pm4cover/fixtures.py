# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""Worked poles shared by the test modules"""

from pathlib import Path

from pm4cover.pole import Edge, validate_pole

DATA_DIR = Path(__file__).parent / "data"

# smallest pole, three segments of length 1
T3 = validate_pole(3, (0, 1, 2), [])
# three odd segments of lengths 3, 3, 1
A7 = validate_pole(7, (0, 3, 6), [(1, 4), (2, 5)])
# two segments of length 2
P5 = validate_pole(5, (0, 4, 2), [(1, 3)])
# both even segments of length 4 with three exterior chords
B9 = validate_pole(9, (0, 8, 4), [(1, 6), (2, 7), (3, 5)])
# E1 = 0..4 has the single exterior chord (2, 9)
P11 = validate_pole(11, (0, 8, 4), [(1, 3), (2, 9), (5, 7), (6, 10)])
P11_REDUCED = validate_pole(9, (0, 6, 2), [(1, 7), (3, 5), (4, 8)])
# E1 = 0..6 of length 6, shortened once to reach the base case
I11 = validate_pole(11, (0, 10, 6), [(1, 5), (2, 9), (3, 8), (4, 7)])
# base case reaching the red-green window on O; W15 also routes its grey path through O
W13 = validate_pole(13, (0, 8, 4), [(1, 9), (3, 10), (5, 12), (7, 11), (2, 6)])
W15 = validate_pole(15, (0, 8, 4), [(1, 13), (3, 14), (2, 11), (6, 12), (7, 9), (5, 10)])


def H(n, i):
    return Edge.h(n, i)


def C(a, b):
    return Edge.chord(a, b)


def S(v):
    return Edge.spoke(v)


T3_COVER = {
    S(0): {1, 4}, S(1): {2, 4}, S(2): {3, 4},
    H(3, 0): {3}, H(3, 1): {1}, H(3, 2): {2},
}

P5_COVER = {
    S(0): {1, 4}, S(4): {2, 4}, S(2): {3, 4},
    H(5, 0): {2}, H(5, 1): {1}, H(5, 2): {2}, H(5, 3): {1}, H(5, 4): {3},
    C(1, 3): {3, 4},
}

B9_COVER = {
    H(9, 0): {2}, H(9, 1): {1, 3}, H(9, 2): {2}, H(9, 3): {1}, H(9, 4): {2},
    H(9, 5): {1}, H(9, 6): {2, 3}, H(9, 7): {1}, H(9, 8): {3},
    C(1, 6): {4}, C(2, 7): {4}, C(3, 5): {3, 4},
    S(0): {1, 4}, S(8): {2, 4}, S(4): {3, 4},
}

A7_COVER = {
    H(7, 0): {3}, H(7, 1): {1, 2}, H(7, 2): {3},
    H(7, 3): {1}, H(7, 4): {2, 3}, H(7, 5): {1},
    H(7, 6): {2},
    C(1, 4): {4}, C(2, 5): {4},
    S(0): {1, 4}, S(3): {2, 4}, S(6): {3, 4},
}
