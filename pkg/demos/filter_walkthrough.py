"""Walk through both filters on a small corrupted function.

Builds a 5x5 grid whose values follow a distance cone except for two
spiked points, then shows what each filter does about them and how far
the input was from Lipschitz to begin with.
"""
from fractions import Fraction

from lipfilter import (
    Hypergrid,
    LocalFilterL0,
    LocalFilterL1,
    Seed,
    TableFunction,
    exact_l0_distance,
    exact_l1_distance,
    max_violation_score,
    violation_edges,
)

R = 4
grid = Hypergrid(5, 2)
anchor = (3, 3)

values = {x: Fraction(min(grid.dist(x, anchor), R)) for x in grid.vertices()}
values[(1, 1)] = Fraction(0)   # the cone says 4 here
values[(4, 3)] = Fraction(R)   # and 1 here
f = TableFunction(grid, values, R)

print("input: distance cone around", anchor, "with two spiked points")
print("violated pairs:", violation_edges(grid, f))
print("max violation score:", max_violation_score(grid, f))
print("l0 distance:", exact_l0_distance(grid, f))
print("l1 distance:", exact_l1_distance(grid, f))
print()

seed = Seed.from_int(7)

l0 = LocalFilterL0(grid, f, seed)
print("l0 filter rewrites:", sorted(l0.matched_set()))
for x in sorted(l0.matched_set()):
    print(f"  g({x}) = {l0.value(x)}   (was {f.lookup(x)})")
print()

l1 = LocalFilterL1(grid, f, seed)
print(f"l1 filter: {l1.schedule.rounds} rounds at slack {l1.schedule.slack}")
table = l1.table()
moved = {x: v for x, v in table.items() if v != f.lookup(x)}
print(f"values moved at {len(moved)} points, for example:")
for x in sorted(moved)[:5]:
    print(f"  g({x}) = {moved[x]}   (was {f.lookup(x)})")

gaps = [abs(table[u] - table[v]) for u, v in grid.edges()]
print("largest output edge gap:", max(gaps), "=", float(max(gaps)))
