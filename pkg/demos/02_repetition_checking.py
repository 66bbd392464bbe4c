"""Detecting repetitively colored paths.

Shows the twin-path checker on small graphs, square-free words on paths,
and the classic 5-cycle behavior, with the brute-force oracle as a
cross-check.
"""

# %%
# A repetition is a simple path whose color word reads ww.  The shortest
# case is an adjacent same-colored pair.
from thuegrid import Coloring, PrefixGraph, find_repetitive

edge = PrefixGraph.from_edges(2, [(0, 1)])
print(find_repetitive(edge, Coloring((0, 0), 2)))

# %%
# The pattern x y x y around a 4-cycle is a repetition of length 4.
c4 = PrefixGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
w = find_repetitive(c4, Coloring((0, 1, 0, 1), 2))
print("halves:", w.first_half, w.second_half, "->", w.as_path())

# %%
# Square-free words color paths without repetitions.  Iterating the
# morphism 0 -> 012, 1 -> 02, 2 -> 1 yields one over three letters.
rules = {0: (0, 1, 2), 1: (0, 2), 2: (1,)}
word = (0,)
while len(word) < 40:
    word = tuple(x for letter in word for x in rules[letter])
word = word[:40]
print("word:", "".join(map(str, word)))

path = PrefixGraph.from_edges(40, [(k, k + 1) for k in range(39)])
print("repetition on the 40-path:", find_repetitive(path, Coloring(word, 3)))

# %%
# Two colors never suffice beyond three vertices.
for colors in ((0, 1, 0, 1), (0, 1, 1, 0), (0, 0, 1, 0)):
    p4 = PrefixGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    print(colors, "->", find_repetitive(p4, Coloring(colors, 2)).as_path())

# %%
# Five-cycles are the odd ones out: they need four colors.  The oracle
# (plain enumeration of every simple path) agrees with the fast checker.
from itertools import product
from thuegrid.oracle import oracle_find_repetitive

c5 = PrefixGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
bad = sum(
    1 for colors in product(range(3), repeat=5)
    if find_repetitive(c5, Coloring(colors, 3)) is not None
)
print(f"ternary colorings of C5 with a repetition: {bad} of {3**5}")
print("a clean 4-coloring:", oracle_find_repetitive(c5, Coloring((0, 1, 2, 1, 3), 4)))

# %%
# The incremental variant only looks for repetitions through one vertex,
# which is what makes frontier growth cheap.
from thuegrid import CARTESIAN, build_order, find_repetitive_through, prefix_graph

g = prefix_graph(build_order(CARTESIAN, 5), 5)
for color in range(5):
    f = Coloring((0, 1, 1, 2, color), 5)
    w = find_repetitive_through(g, f, 4)
    print(f"new vertex colored {color}:", "clean" if w is None else w.as_path())
