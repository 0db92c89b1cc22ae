import random
from itertools import product

import pytest

from helpers_naive import naive_chromatic, random_graph
from ramsey_goodness import (
    Graph,
    PreconditionError,
    burr_lower_bound,
    chromatic_number,
    complete_multipartite,
    join,
    min_color_class,
    standard_graph,
)


def test_chromatic_fixtures():
    assert chromatic_number(complete_multipartite([3, 3])) == 2
    assert chromatic_number(complete_multipartite([2, 2, 2])) == 3
    p6k1 = join(standard_graph("path", 6), standard_graph("complete", 1))
    assert chromatic_number(p6k1) == 3
    assert chromatic_number(standard_graph("cycle", 5)) == 3
    assert chromatic_number(Graph.empty(4)) == 1
    with pytest.raises(PreconditionError):
        chromatic_number(Graph.empty(0))
    with pytest.raises(PreconditionError):
        chromatic_number(Graph.empty(17))


def test_chromatic_against_naive_oracle():
    rng = random.Random(42)
    for _ in range(60):
        n = rng.randint(1, 6)
        g = random_graph(rng, n, rng.random())
        assert chromatic_number(g) == naive_chromatic(g)
    # a couple of larger spot checks
    for g in [standard_graph("cycle", 7), complete_multipartite([2, 3, 3])]:
        assert chromatic_number(g) == naive_chromatic(g)


def test_min_color_class_fixtures():
    p6k1 = join(standard_graph("path", 6), standard_graph("complete", 1))
    profile = min_color_class(p6k1)
    assert (profile.chi, profile.s) == (3, 1)

    profile = min_color_class(complete_multipartite([3, 3]))
    assert (profile.chi, profile.s) == (2, 3)

    # every proper 3-coloring of C_5 has a singleton class: check by enumeration
    c5 = standard_graph("cycle", 5)
    edges = c5.edges()
    mins = set()
    for colors in product(range(3), repeat=5):
        if len(set(colors)) == 3 and all(colors[u] != colors[v] for u, v in edges):
            mins.add(min(colors.count(c) for c in range(3)))
    assert min(mins) == 1 and mins == {1}
    assert min_color_class(c5).s == 1


def test_witness_is_attained():
    rng = random.Random(9)
    graphs = [
        join(standard_graph("path", 6), standard_graph("complete", 1)),
        complete_multipartite([3, 3]),
        standard_graph("cycle", 5),
    ] + [random_graph(rng, rng.randint(1, 7), rng.random()) for _ in range(40)]
    for g in graphs:
        profile = min_color_class(g)
        assert len(profile.witness) == g.n
        assert all(profile.witness[u] != profile.witness[v] for u, v in g.edges())
        used = set(profile.witness)
        assert used == set(range(profile.chi))
        sizes = [list(profile.witness).count(c) for c in sorted(used)]
        assert min(sizes) == profile.s
        assert 1 <= profile.s <= g.n // profile.chi


def test_chi_monotone_under_edge_addition():
    rng = random.Random(12)
    for _ in range(40):
        n = rng.randint(2, 7)
        g = random_graph(rng, n, 0.4)
        non_edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if not g.has_edge(u, v)
        ]
        if not non_edges:
            continue
        u, v = rng.choice(non_edges)
        bigger = Graph.from_edges(n, g.edges() + [(u, v)])
        assert chromatic_number(bigger) >= chromatic_number(g)


def test_burr_lower_bound():
    assert burr_lower_bound(standard_graph("complete", 3), 4) == 7
    for h_order in (1, 4, 9):
        assert burr_lower_bound(standard_graph("complete", 2), h_order) == h_order
    # chi = k+1, s = 1, host order p*alpha + n gives k(p*alpha + n - 1) + 1
    g = join(standard_graph("path", 6), standard_graph("complete", 1))  # chi=3 -> k=2
    alpha, p, n = 60, 7, 5
    assert burr_lower_bound(g, p * alpha + n) == 2 * (p * alpha + n - 1) + 1
    with pytest.raises(PreconditionError):
        burr_lower_bound(complete_multipartite([3, 3]), 2)  # h_order < s = 3
