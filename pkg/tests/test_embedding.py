import random

import pytest

from helpers_naive import naive_find_embedding, random_composition, random_graph
from ramsey_goodness import (
    BudgetExceededError,
    Embedding,
    Graph,
    PreconditionError,
    complete_multipartite,
    complement,
    contains_multipartite,
    disjoint_union,
    find_embedding,
    join,
    standard_graph,
    verify_embedding,
    verify_part_assignment,
)


def p6k1():
    return join(standard_graph("path", 6), standard_graph("complete", 1))


def claw_tree_7():
    # 7-vertex tree containing K_{1,3} with claw edges at the center 0
    return Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])


def test_path_tree_host_witness_map():
    # w_1..w_6, y -> u_1..u_6, v_1 in P_7 + 7K_1
    host = join(standard_graph("path", 7), Graph.empty(7))
    emb = Embedding((0, 1, 2, 3, 4, 5, 7))
    assert verify_embedding(p6k1(), host, emb)
    found = find_embedding(p6k1(), host)
    assert found is not None and verify_embedding(p6k1(), host, found)


def test_claw_tree_host_witness_map():
    # w_1..w_6, y -> u_2, v_1, u_3, v_2, u_4, v_3, u_1 (y on the claw center)
    host = join(claw_tree_7(), Graph.empty(7))
    emb = Embedding((1, 7, 2, 8, 3, 9, 0))
    assert verify_embedding(p6k1(), host, emb)
    assert find_embedding(p6k1(), host) is not None


def test_star_forest_host_is_impossible():
    host = join(disjoint_union([standard_graph("star", 3)] * 7), Graph.empty(7))
    assert find_embedding(p6k1(), host) is None


def test_verify_embedding_edge_cases():
    g = standard_graph("path", 3)
    assert verify_embedding(g, g, Embedding((0, 1, 2)))
    # symmetric relabeling of a path still verifies
    assert verify_embedding(g, g, Embedding((2, 1, 0)))
    # collapsing two vertices is not an embedding
    assert not verify_embedding(g, g, Embedding((0, 1, 0)))
    with pytest.raises(PreconditionError):
        verify_embedding(g, g, Embedding((0, 1)))
    with pytest.raises(PreconditionError):
        verify_embedding(g, g, Embedding((0, 1, 5)))


def test_find_embedding_against_naive():
    rng = random.Random(101)
    positives = 0
    for _ in range(60):
        pattern = random_graph(rng, rng.randint(1, 4), rng.random())
        host = random_graph(rng, rng.randint(1, 6), rng.random())
        fast = find_embedding(pattern, host)
        slow = naive_find_embedding(pattern, host)
        assert (fast is None) == (slow is None)
        if fast is not None:
            positives += 1
            assert verify_embedding(pattern, host, fast)
    assert positives  # sanity: the sample hit both outcomes


def test_embedding_monotone_under_host_growth():
    rng = random.Random(55)
    for _ in range(30):
        host = random_graph(rng, 7, 0.5)
        pattern = random_graph(rng, 4, 0.5)
        if find_embedding(pattern, host) is None:
            continue
        non_edges = [
            (u, v)
            for u in range(7)
            for v in range(u + 1, 7)
            if not host.has_edge(u, v)
        ]
        rng.shuffle(non_edges)
        grown = Graph.from_edges(7, host.edges() + non_edges[:2])
        assert find_embedding(pattern, grown) is not None


def test_budget():
    host = join(disjoint_union([standard_graph("star", 3)] * 7), Graph.empty(7))
    with pytest.raises(BudgetExceededError):
        find_embedding(p6k1(), host, budget=5)


def test_contains_multipartite_spanning():
    # K_9 minus 3K_{1,2}: complement components 3,3,3 cannot fill bins 2,2,2,3
    host = complement(disjoint_union([standard_graph("star", 3)] * 3))
    assert contains_multipartite(host, [2, 2, 2, 3]) is None
    assert find_embedding(complete_multipartite([2, 2, 2, 3]), host) is None

    found = contains_multipartite(standard_graph("complete", 6), [2, 2, 2])
    assert found is not None
    assert verify_part_assignment(standard_graph("complete", 6), [2, 2, 2], found)


def test_contains_multipartite_non_spanning():
    # K_7 minus one P_3: drop the path center, the rest is K_{2,2,2} and more
    p3_and_rest = disjoint_union([standard_graph("path", 3), Graph.empty(4)])
    host = complement(p3_and_rest)
    found = contains_multipartite(host, [2, 2, 2])
    assert found is not None
    assert verify_part_assignment(host, [2, 2, 2], found)


def test_contains_multipartite_single_part():
    assert contains_multipartite(Graph.empty(3), [3]) is not None
    assert contains_multipartite(Graph.empty(2), [3]) is None
    with pytest.raises(PreconditionError):
        contains_multipartite(Graph.empty(3), [])


def test_contains_multipartite_agrees_with_generic():
    rng = random.Random(77)
    hits = 0
    for _ in range(120):
        n = rng.randint(2, 9)
        host = random_graph(rng, n, rng.uniform(0.3, 0.95))
        parts = random_composition(rng, n, rng.randint(2, 4))
        direct = contains_multipartite(host, parts)
        generic = find_embedding(complete_multipartite(parts), host)
        assert (direct is None) == (generic is None), (host, parts)
        if direct is not None:
            hits += 1
            assert verify_part_assignment(host, parts, direct)
    assert hits
