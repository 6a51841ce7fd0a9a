"""Hand-encoded reference data from the worked examples."""


def from_vertex_sets(n, layers):
    """Layering from per-layer sets of 1-based vertices (all multiplicities 1)."""
    return tuple(tuple(1 if v + 1 in layer else 0 for v in range(n)) for layer in layers)


EX42_D = (0, 1, 1, 0, 3, 2, 3, 5, 10)
EX42_TOP = (0, 1, 1, 0, 2, 0, 0, 1, 0)
EX42_RAD = (
    (0, 1, 1, 0, 2, 0, 0, 1, 0),
    (0, 0, 0, 0, 1, 1, 2, 0, 2),
    (0, 0, 0, 0, 0, 1, 1, 2, 3),
    (0, 0, 0, 0, 0, 0, 0, 2, 3),
    (0, 0, 0, 0, 0, 0, 0, 0, 2),
    (0,) * 9,
    (0,) * 9,
)
# S_2 + S_9^10, S_7^3 + S_8^5, S_5 + S_6^2, S_5^2, S_3, 0, 0
EX42_SOC = (
    (0, 1, 0, 0, 0, 0, 0, 0, 10),
    (0, 0, 0, 0, 0, 0, 3, 5, 0),
    (0, 0, 0, 0, 1, 2, 0, 0, 0),
    (0, 0, 0, 0, 2, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 0, 0, 0),
    (0,) * 9,
    (0,) * 9,
)
# tops z1..z5 sit at vertices 2, 3, 5, 5, 8
EX42_SKELETON = [
    "z1", "z2", "z3", "z4", "z5",
    "b3*z2", "a3*z2", "a7*b3*z2", "b5*a3*z2", "a5*a3*z2", "g5*a3*z2",
    "a6*b5*a3*z2", "b6*b5*a3*z2", "a7*a5*a3*z2", "a8*a6*b5*a3*z2", "a8*b6*b5*a3*z2",
    "b5*z3", "g5*z3", "a6*b5*z3", "b6*b5*z3", "a8*a6*b5*z3", "a8*b6*b5*z3",
    "a5*z4", "g5*z4", "a7*a5*z4",
]
EX42_CRITICAL = ["a2*z1", "a5*z3", "b5*z4", "a8*z5"]

ONES7 = (1,) * 7
ONES6 = (1,) * 6

EX51_A_RAD = from_vertex_sets(7, [{i} for i in range(1, 8)])
EX51_B_EXTRA = from_vertex_sets(7, [{1, 2}, {3}, {4}, {5}, {6}, {7}])

# the nine module diagrams drawn for L = 3, read off layer by layer
DIAGRAM_512 = {
    "A": from_vertex_sets(7, [{1}, {2, 3}, {4, 5}, {6, 7}]),
    "B": from_vertex_sets(7, [{1, 2}, {3, 4}, {5}, {6, 7}]),
    "C": from_vertex_sets(7, [{1, 7}, {2, 3}, {4}, {5, 6}]),
    "D": from_vertex_sets(7, [{1, 3}, {2, 5}, {4, 6}, {7}]),
    "E": from_vertex_sets(7, [{1, 3}, {2, 4, 5}, {6}, {7}]),
    "F": from_vertex_sets(7, [{1, 4}, {2, 5}, {3, 6}, {7}]),
    "G": from_vertex_sets(7, [{1, 4}, {2, 3}, {5}, {6, 7}]),
    "H": from_vertex_sets(7, [{1, 5}, {2, 7}, {3, 4}, {6}]),
    "I": from_vertex_sets(7, [{1, 2, 6}, {3}, {4, 5}, {7}]),
}

EX52_RADS = [
    from_vertex_sets(6, [{1, 4}, {2, 5}, {3, 6}]),
    from_vertex_sets(6, [{1, 2, 4}, {3, 5}, {6}]),
    from_vertex_sets(6, [{1, 4, 6}, {2}, {3, 5}]),
]
EX52_S_HAT = EX52_RADS[0]
EX52_S = from_vertex_sets(6, [{1, 2, 4, 6}, {3, 5}, set()])
