import pytest

from thuegrid import Coloring, PrefixGraph


def path_graph(n: int) -> PrefixGraph:
    return PrefixGraph.from_edges(n, [(k, k + 1) for k in range(n - 1)])


def cycle_graph(n: int) -> PrefixGraph:
    edges = [(k, (k + 1) % n) for k in range(n)]
    return PrefixGraph.from_edges(n, edges)


def thue_word(length: int) -> tuple[int, ...]:
    """Ternary square-free word from iterating 0->012, 1->02, 2->1."""
    rules = {0: (0, 1, 2), 1: (0, 2), 2: (1,)}
    word = (0,)
    while len(word) < length:
        word = tuple(x for letter in word for x in rules[letter])
    return word[:length]


def word_has_square(word) -> bool:
    """Direct factor-square scan, independent of any graph machinery."""
    n = len(word)
    for start in range(n):
        for half in range(1, (n - start) // 2 + 1):
            if word[start:start + half] == word[start + half:start + 2 * half]:
                return True
    return False


def assert_valid_witness(g: PrefixGraph, coloring: Coloring, w) -> None:
    """Check every witness invariant directly, independent of the search."""
    k = len(w.first_half)
    assert k >= 1
    assert len(w.second_half) == k
    both = w.first_half + w.second_half
    assert len(set(both)) == 2 * k, "witness vertices are not distinct"
    for a, b in zip(w.first_half, w.second_half):
        assert coloring.colors[a] == coloring.colors[b], "halves disagree in color"
    for half in (w.first_half, w.second_half):
        for a, b in zip(half, half[1:]):
            assert g.adjacent(a, b), "half is not a path"
    if w.joined_at == "tail_to_head":
        assert g.adjacent(w.first_half[-1], w.second_half[0])
    elif w.joined_at == "head_to_tail":
        assert g.adjacent(w.first_half[0], w.second_half[-1])
    else:
        pytest.fail(f"unknown join direction {w.joined_at!r}")
    path = w.as_path()
    for a, b in zip(path, path[1:]):
        assert g.adjacent(a, b), "joined witness is not a path"
