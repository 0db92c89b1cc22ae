"""Isomorph-free enumeration of free trees via canonical level sequences.

Rooted trees are generated by the classic level-sequence successor algorithm
(constant amortized time); a rooted sequence is kept exactly when it is the
centroid-rooted canonical sequence of its underlying free tree, so every free
tree appears once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import PreconditionError
from .graphs import Graph, connected_components, standard_graph

TREE_ORDER_LIMIT = 16


@dataclass(frozen=True)
class TreeSet:
    """All free trees on n vertices, pairwise non-isomorphic, complete."""

    n: int
    trees: tuple[Graph, ...]

    def __len__(self) -> int:
        return len(self.trees)

    def __iter__(self):
        return iter(self.trees)


class TreeFacts(NamedTuple):
    is_path: bool
    contains_claw: bool


def _rooted_level_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Canonical level sequences (depths, root=0) of all rooted trees on n vertices."""
    if n == 1:
        yield (0,)
        return
    seq = list(range(n))
    while True:
        yield tuple(seq)
        p = None
        for i in range(n - 1, 0, -1):
            if seq[i] >= 2:
                p = i
                break
        if p is None:
            return
        q = next(i for i in range(p - 1, -1, -1) if seq[i] == seq[p] - 1)
        for i in range(p, n):
            seq[i] = seq[i - (p - q)]


def _parents(seq: tuple[int, ...]) -> list[int]:
    last_at_depth = [0] * len(seq)
    parents = [-1] * len(seq)
    for v in range(1, len(seq)):
        parents[v] = last_at_depth[seq[v] - 1]
        last_at_depth[seq[v]] = v
    return parents


def _adjacency(seq: tuple[int, ...]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in seq]
    for v, parent in enumerate(_parents(seq)):
        if parent >= 0:
            adj[v].append(parent)
            adj[parent].append(v)
    return adj


def _centroids(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    if n == 1:
        return [0]
    size = [1] * n
    parent = [-1] * n
    order = [0]
    for v in order:
        for u in adj[v]:
            if u != parent[v]:
                parent[u] = v
                order.append(u)
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    best = n
    cents: list[int] = []
    for v in range(n):
        heaviest = n - size[v]
        for u in adj[v]:
            if u != parent[v]:
                heaviest = max(heaviest, size[u])
        if heaviest < best:
            best = heaviest
            cents = [v]
        elif heaviest == best:
            cents.append(v)
    return cents


def _canon_rooted(adj: list[list[int]], root: int) -> tuple[int, ...]:
    """Canonical level sequence rooted at root: children sorted lex-descending."""

    def sub(v: int, parent: int) -> tuple[int, ...]:
        kids = sorted((sub(u, v) for u in adj[v] if u != parent), reverse=True)
        out = [0]
        for kid in kids:
            out.extend(x + 1 for x in kid)
        return tuple(out)

    return sub(root, -1)


def _graph_from_sequence(seq: tuple[int, ...]) -> Graph:
    return Graph.from_edges(
        len(seq), [(v, p) for v, p in enumerate(_parents(seq)) if p >= 0]
    )


def free_tree_sequence(t: Graph) -> tuple[int, ...]:
    """Canonical level sequence of a free tree: equal iff the trees are isomorphic."""
    _require_tree(t)
    adj = [t.neighbors(v) for v in range(t.n)]
    return max(_canon_rooted(adj, c) for c in _centroids(adj))


def enumerate_free_trees(n: int) -> TreeSet:
    """All free trees on n vertices, ordered lexicographically by canonical sequence."""
    if not 1 <= n <= TREE_ORDER_LIMIT:
        raise PreconditionError(f"tree enumeration supports 1..{TREE_ORDER_LIMIT}, got {n}")
    kept = []
    for seq in _rooted_level_sequences(n):
        adj = _adjacency(seq)
        canonical = max(_canon_rooted(adj, c) for c in _centroids(adj))
        if canonical == seq:
            kept.append(seq)
    kept.sort()
    return TreeSet(n=n, trees=tuple(_graph_from_sequence(seq) for seq in kept))


def _require_tree(t: Graph) -> None:
    if t.n < 1 or t.edge_count != t.n - 1 or len(connected_components(t)) != 1:
        raise PreconditionError("input is not a tree")


def tree_structure_fact(t: Graph) -> TreeFacts:
    """Whether a tree is a path or contains K_{1,3}; exactly one holds for n >= 2.

    The two facts are computed independently: the path check inspects the
    degree profile, the claw check runs a subgraph search.
    """
    from .embedding import find_embedding

    _require_tree(t)
    if t.n <= 2:
        is_path = True
    else:
        degrees = sorted(t.degree(v) for v in range(t.n))
        is_path = degrees[:2] == [1, 1] and all(d == 2 for d in degrees[2:])
    claw = t.n >= 4 and find_embedding(standard_graph("star", 4), t) is not None
    return TreeFacts(is_path=is_path, contains_claw=claw)
