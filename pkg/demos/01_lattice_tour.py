"""Lattice families and the square-shell vertex order.

Walks through the three supported lattices, the order in which vertices
are added, and the finite prefix graphs the search operates on.
"""

# %%
# The three families
# ------------------
from thuegrid import CARTESIAN, STRONG, TRIANGULAR, neighbors

for fam in (CARTESIAN, STRONG, TRIANGULAR):
    print(f"{fam.kind:11s} degree {len(fam.offsets)}  offsets {sorted(fam.offsets)}")

# %%
# Neighborhoods are just offset translations.
print("\nking neighbors of (2,3):", sorted(neighbors(STRONG, (2, 3))))
print("triangular neighbors of origin:", sorted(neighbors(TRIANGULAR, (0, 0))))

# %%
# The vertex-addition order
# -------------------------
# A 2x2 seed block, then square shells: each shell adds one column top
# down and one row right to left, so every prefix fills out a square and
# every new vertex touches only a few earlier ones.
from thuegrid import build_order

order = build_order(CARTESIAN, 16)
for k, (x, y) in enumerate(order.coords):
    tag = "seed" if k < 4 else f"v{k - 3}"
    print(f"{k:2d}  ({x},{y})  {tag}")

# %%
# Text sketch of the addition order on the grid (numbers are indices).
grid = {}
for k, (x, y) in enumerate(order.coords):
    grid[(x, y)] = k
size = max(x for x, _ in grid) + 1
for y in range(size):
    print("  ".join(f"{grid.get((x, y), -1):2d}" for x in range(size)))

# %%
# Prefix graphs
# -------------
# The induced subgraph on the first i vertices, with sorted adjacency
# lists and bitmask rows for O(1) adjacency tests.
from thuegrid import prefix_graph

for fam in (CARTESIAN, STRONG, TRIANGULAR):
    g = prefix_graph(build_order(fam, 9), 9)
    edges = sum(len(a) for a in g.adjacency) // 2
    print(f"{fam.kind:11s} 9-vertex prefix has {edges} edges; "
          f"new-vertex degrees {[len([w for w in g.adjacency[j] if w < j]) for j in range(4, 9)]}")
