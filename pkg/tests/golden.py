"""Reference instances and their known invariants."""

from latbar.exactalg import IntegerMatrix
from latbar.groebner import Binomial, binomial_from_polynomial, default_names, parse_polynomial

P_ROWS = [
    [1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 3, 0, 1, 2, 1, 2],
    [1, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 2],
    [1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 2],
    [0, 1, 1, 1, 1, 2, 1, 2, 0, 1, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 1, 0],
]
P = IntegerMatrix(P_ROWS)


def binomial(text: str, n: int) -> Binomial:
    return binomial_from_polynomial(parse_polynomial(text, default_names(n))).canonical()


P_MINIMAL = [
    "x2 x5 - x3 x4", "x1 x6 - x3 x4", "x1 x4 - x2 x9", "x1 x5 - x3 x9",
    "x4 x5 - x6 x9", "x10^2 - x5 x7", "x11^2 - x8 x9^2", "x9^2 - x12",
]

P_CIRCUITS = [
    "x2 x5 - x3 x4", "x1 x6 - x3 x4", "x1 x6 - x2 x5", "x1 x4 - x2 x9",
    "x1^2 x4^2 - x2^2 x12", "x1 x5 - x3 x9", "x1^2 x5^2 - x3^2 x12",
    "x4 x5 - x6 x9", "x4^2 x5^2 - x6^2 x12", "x10^2 - x5 x7",
    "x11^2 - x8 x9^2", "x11^2 - x8 x12", "x9^2 - x12",
    "x2 x10^2 - x3 x4 x7", "x2 x10^2 - x1 x6 x7", "x1^2 x6 - x2 x3 x9",
    "x1^4 x6^2 - x2^2 x3^2 x12", "x3 x4^2 - x2 x6 x9",
    "x3^2 x4^4 - x2^2 x6^2 x12", "x2 x5^2 - x3 x6 x9",
    "x2^2 x5^4 - x3^2 x6^2 x12", "x1 x10^2 - x3 x7 x9",
    "x1^2 x10^4 - x3^2 x7^2 x12", "x4 x10^2 - x6 x7 x9",
    "x4^2 x10^4 - x6^2 x7^2 x12", "x2^2 x11^2 - x1^2 x4^2 x8",
    "x3^2 x11^2 - x1^2 x5^2 x8", "x6^2 x11^2 - x4^2 x5^2 x8",
    "x2 x10^4 - x3 x6 x7^2 x9", "x2^2 x10^8 - x3^2 x6^2 x7^4 x12",
    "x1^4 x6^2 x8 - x2^2 x3^2 x11^2", "x2^2 x6^2 x11^2 - x3^2 x4^4 x8",
    "x3^2 x6^2 x11^2 - x2^2 x5^4 x8", "x3^2 x7^2 x11^2 - x1^2 x8 x10^4",
    "x6^2 x7^2 x11^2 - x4^2 x8 x10^4",
]

# vertices E1..E11, 1-based column indices
P_VERTICES = [{1, 4}, {1, 5}, {1, 6}, {2, 5}, {3, 4}, {4, 5}, {5, 7}, {9}, {10}, {11}, {12}]

# components as lists of vertex labels 1..11
P_COMPONENTS = [[1], [2], [6], [10], [7, 9], [8, 11], [3, 4, 5]]

P_F = "x1^2 x6^2 - x2^2 x5^2 + x3^2 x4^2 - x2 x3 x6 x9"

B_VERTICES = [{1, 4}, {1, 5}, {1, 6}, {2, 5}, {3, 4}, {4, 5}, {2, 9}, {3, 9}, {6, 9}]


def hexagon_two_chords():
    edges = [(i, i + 1) for i in range(1, 6)] + [(1, 6), (1, 3), (2, 4)]
    return 6, edges


HEX_CIRCUITS = ["x1 x3 - x7 x8", "x2 x4 x6 - x5 x7 x8", "x1 x3 x5 - x2 x4 x6"]
HEX_TMIN = [{1, 3}, {7, 8}, {2, 4, 6}]


def ten_vertex_graph():
    edges = [(i, i + 1) for i in range(1, 10)] + [(1, 10), (1, 5), (2, 6), (1, 7), (6, 10)]
    return 10, edges


TEN_GENERATORS = [
    "x1 x14 - x10 x12", "x5 x10 - x11 x14", "x6 x10 - x13 x14",
    "x1 x5 - x11 x12", "x5 x13 - x6 x11", "x1 x6 - x12 x13",
    "x2 x4 x6 x8 x14 - x3 x5 x7 x9 x12", "x1 x3 x7 x9 x11 - x2 x4 x8 x10 x13",
    "x1 x3 x5 x7 x9 - x2 x4 x6 x8 x10",
]
# F4s of w9 as 1-based edge labels
TEN_F4 = [(6, 13, 10, 14), (1, 11, 5, 12)]


def octagon_four_chords():
    edges = [(i, i + 1) for i in range(1, 8)] + [(1, 8), (1, 5), (2, 4), (4, 6), (5, 7)]
    return 8, edges


LAWRENCE_D = (2, 4, 5, 7)
LAWRENCE_B_VECTOR = (140, 70, 56, 40)
