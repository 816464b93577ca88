"""Averaged Seiberg-Witten tables.

Each symmetric power degree n corresponds to a spin-c degree m through the
slice genus, with the map depending on whether b_1 is one or larger.  The
table rows carry the graded TQFT trace, which is the sum of the invariants
over all spin-c structures of that degree.
"""
from swtorsion import Presentation, compute_b1, sw_table

examples = [
    Presentation.from_matrix(0, 0, [], name="S2 x S1"),
    Presentation.from_matrix(1, 0, [[1, 0], [0, 1]], name="T3"),
    Presentation.from_matrix(1, 0, [[2, 1], [1, 1]], name="anosov torus bundle"),
    Presentation.from_matrix(0, 1, [[0, -1], [1, 0]], name="one-handle rotation"),
]

for P in examples:
    table = sw_table(P, 4)
    print(f"{P.name}: b1 = {table.b1} ({table.mode})")
    print("  n   m   trace")
    for row in table.rows:
        print(f"  {row.n:<3} {row.m:<3} {row.value}")
    print()

# For S2 x S1 the values n + 1 reproduce the expansion of 1/(1-t)^2, the
# classical wall-crossing series of the product manifold.
sphere = examples[0]
assert [r.value for r in sw_table(sphere, 6).rows] == [1, 2, 3, 4, 5, 6, 7]
assert compute_b1(sphere) == 1
