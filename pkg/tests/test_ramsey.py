import random
from itertools import combinations

import pytest

from helpers_naive import random_graph
from ramsey_goodness import (
    Graph,
    PreconditionError,
    arrows,
    burr_lower_bound,
    canonical_form,
    complete_multipartite,
    enumerate_graphs,
    find_embedding,
    ramsey_number,
    standard_graph,
)

CLASS_COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044]  # n = 0..7


def test_enumeration_counts():
    for n, expected in enumerate(CLASS_COUNTS):
        assert len(enumerate_graphs(n)) == expected


def test_enumeration_count_n8():
    assert len(enumerate_graphs(8)) == 12346


def test_enumeration_matches_labeled_dedupe():
    for n in range(0, 7):
        pairs = list(combinations(range(n), 2))
        forms = set()
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1]
            forms.add(canonical_form(Graph.from_edges(n, edges)))
        assert forms == {canonical_form(g) for g in enumerate_graphs(n)}


def test_enumeration_bound():
    with pytest.raises(PreconditionError):
        enumerate_graphs(10)


def test_arrows_k3_k3():
    k3 = standard_graph("complete", 3)
    result = arrows(5, k3, k3)
    assert not result.arrows
    cx = result.counterexample
    assert cx is not None
    assert canonical_form(cx.red) == canonical_form(standard_graph("cycle", 5))
    assert canonical_form(cx.blue) == canonical_form(standard_graph("cycle", 5))
    assert arrows(6, k3, k3).arrows


def test_arrows_k2_trivial():
    rng = random.Random(20)
    for _ in range(6):
        h = random_graph(rng, rng.randint(1, 6), rng.random())
        assert arrows(h.n, standard_graph("complete", 2), h).arrows


def test_counterexamples_reverify():
    k3 = standard_graph("complete", 3)
    p4 = standard_graph("path", 4)
    for n, g, h in [(5, k3, k3), (4, p4, k3), (6, p4, k3)]:
        result = arrows(n, g, h)
        assert not result.arrows
        cx = result.counterexample
        assert find_embedding(g, cx.red) is None
        assert find_embedding(h, cx.blue) is None


def test_ramsey_values():
    k3 = standard_graph("complete", 3)
    assert ramsey_number(k3, k3, 7).value == 6
    assert ramsey_number(standard_graph("path", 3), k3, 7).value == 5
    assert ramsey_number(standard_graph("path", 4), k3, 7).value == 7
    # r(K_2, K_p(alpha) + nK_1) = p*alpha + n at alpha=2, p=3, n=1
    host_part = complete_multipartite([2, 2, 2, 1])
    value = ramsey_number(standard_graph("complete", 2), host_part, 7)
    assert value.value == 7
    assert value.lower_witness is not None
    assert value.lower_witness.red.edge_count == 0  # all-blue K_6 below


def test_ramsey_lower_bound_only():
    k3 = standard_graph("complete", 3)
    k4 = standard_graph("complete", 4)
    result = ramsey_number(k3, k4, 8)  # r(K_3, K_4) = 9
    assert result.status == "lower_bound_only"
    assert result.value is None
    assert result.lower_bound == 9
    assert result.lower_witness is not None
    assert find_embedding(k3, result.lower_witness.red) is None
    assert find_embedding(k4, result.lower_witness.blue) is None


def test_symmetry():
    k3 = standard_graph("complete", 3)
    p4 = standard_graph("path", 4)
    star = standard_graph("star", 4)
    for g, h in [(p4, k3), (star, k3), (p4, star)]:
        assert ramsey_number(g, h, 7).value == ramsey_number(h, g, 7).value


def test_burr_bound_consistency():
    k3 = standard_graph("complete", 3)
    cases = [
        (standard_graph("path", 3), k3),
        (standard_graph("path", 4), k3),
        (k3, k3),
    ]
    for g, h in cases:
        value = ramsey_number(g, h, 7).value
        assert value is not None
        assert value >= burr_lower_bound(g, h.n)
