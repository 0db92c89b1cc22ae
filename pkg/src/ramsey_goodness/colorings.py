"""Extremal two-colorings: the general lower-bound coloring and the necessity
colorings whose blue side is (k-1)K_M together with K_{M+1} minus t disjoint
trees, plus verifiers for their defining properties at concrete sizes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .embedding import Embedding, contains_multipartite, find_embedding
from .errors import PreconditionError
from .goodness import snd
from .graphs import (
    MAX_ORDER,
    Graph,
    complement,
    complete_multipartite,
    connected_components,
    disjoint_union,
    induced_subgraph,
    join,
    standard_graph,
)
from .invariants import ChromaticProfile


@dataclass(frozen=True)
class TwoColoring:
    """Red/blue edge partition of a complete graph on 0..order-1."""

    red: Graph
    blue: Graph

    def __post_init__(self) -> None:
        if self.red.n != self.blue.n:
            raise PreconditionError("red and blue graphs must share the vertex set")
        full = (1 << self.red.n) - 1
        for v in range(self.red.n):
            if self.red.adj[v] & self.blue.adj[v]:
                raise PreconditionError(f"edge colored twice at vertex {v}")
            if (self.red.adj[v] | self.blue.adj[v]) != full & ~(1 << v):
                raise PreconditionError(f"uncolored pair at vertex {v}")

    @property
    def order(self) -> int:
        return self.red.n


@dataclass(frozen=True)
class NecessityParams:
    """Parameters of the necessity coloring on N = k(p*alpha + n*h - 1) + 1 vertices.

    t trees of order snd(alpha) are deleted from the big block and q vertices
    are left over, so t*snd(alpha) + q = p*alpha + n*h.
    """

    alpha: int
    p: int
    k: int
    n: int
    h: int
    tree: Graph
    t: int
    q: int

    @classmethod
    def derive(cls, alpha: int, p: int, k: int, n: int, h: int, tree: Graph) -> "NecessityParams":
        if alpha < 1 or p < 1 or k < 1 or n < 0 or h < 1:
            raise PreconditionError("necessity parameters require alpha,p,k,h >= 1 and n >= 0")
        d = snd(alpha)
        block = p * alpha + n * h
        t, q = divmod(block, d)
        return cls(alpha=alpha, p=p, k=k, n=n, h=h, tree=tree, t=t, q=q)

    def __post_init__(self) -> None:
        d = snd(self.alpha)
        if (
            self.tree.n != d
            or self.tree.edge_count != self.tree.n - 1
            or len(connected_components(self.tree)) != 1
        ):
            raise PreconditionError(f"tree must be a tree on snd(alpha) = {d} vertices")
        if self.t * d + self.q != self.block or not 0 <= self.q < d:
            raise PreconditionError("t, q inconsistent with p*alpha + n*h and snd(alpha)")
        if self.t < 1:
            raise PreconditionError("degenerate construction: no tree copy fits (t = 0)")
        if self.order > MAX_ORDER:
            raise PreconditionError(
                f"coloring order {self.order} exceeds the graph6 cap {MAX_ORDER}"
            )

    @property
    def block(self) -> int:
        return self.p * self.alpha + self.n * self.h

    @property
    def order(self) -> int:
        return self.k * (self.block - 1) + 1

    @property
    def case(self) -> int:
        return 1 if self.q == 0 else 2


def burr_coloring(g_profile: ChromaticProfile, h_order: int) -> TwoColoring:
    """The standard lower-bound witness on (chi-1)(h_order-1) + s - 1 vertices.

    Blue is (chi-1) disjoint K_{h_order-1} plus a K_{s-1} block: no blue
    connected subgraph has h_order vertices.  Red is the complete multipartite
    graph between the blocks, so a red copy of any graph with this (chi, s)
    profile would force a proper chi-coloring with a class smaller than s.
    """
    chi, s = g_profile.chi, g_profile.s
    if chi < 2:
        raise PreconditionError("burr_coloring needs chi >= 2")
    if h_order < s:
        raise PreconditionError(f"burr_coloring needs h_order >= s = {s}, got {h_order}")
    blocks = [standard_graph("complete", h_order - 1) for _ in range(chi - 1)]
    if s > 1:
        blocks.append(standard_graph("complete", s - 1))
    blue = disjoint_union(blocks)
    return TwoColoring(red=complement(blue), blue=blue)


def necessity_coloring(params: NecessityParams) -> TwoColoring:
    """Blue = (k-1)K_M together with K_{M+1} minus t translated tree copies.

    Layout: the k-1 clique blocks first, then the big block with the tree
    copies occupying consecutive vertex ranges and the q leftover vertices
    last.  The red complement is then (tT union qK_1) + K_{k-1}(M).
    """
    m_block = params.block - 1
    n_total = params.order
    rows = [0] * n_total
    for b in range(params.k - 1):
        base = b * m_block
        mask = ((1 << m_block) - 1) << base
        for v in range(base, base + m_block):
            rows[v] |= mask & ~(1 << v)
    base = (params.k - 1) * m_block
    mask = ((1 << params.block) - 1) << base
    for v in range(base, base + params.block):
        rows[v] |= mask & ~(1 << v)
    d = params.tree.n
    for i in range(params.t):
        offset = base + i * d
        for a, b in params.tree.edges():
            rows[offset + a] &= ~(1 << (offset + b))
            rows[offset + b] &= ~(1 << (offset + a))
    blue = Graph(n_total, tuple(rows))
    return TwoColoring(red=complement(blue), blue=blue)


def expected_red_graph(params: NecessityParams) -> Graph:
    """(tT union qK_1) + K_{k-1}(M), the red side the construction must realize."""
    pieces: list[Graph] = [params.tree] * params.t
    if params.q:
        pieces.append(Graph.empty(params.q))
    left = disjoint_union(pieces)
    if params.k == 1:
        return left
    return join(left, complete_multipartite([params.block - 1] * (params.k - 1)))


def verify_no_blue_target(c: TwoColoring, parts: Sequence[int]) -> tuple[bool, str]:
    """Mechanized check that the blue graph contains no K_{parts}.

    On spanning components the obstruction is reported as complement component
    sizes versus the part sizes they would have to fill.
    """
    total = sum(parts)
    if total > c.order:
        return True, f"target needs {total} vertices, coloring has {c.order}"
    witness = contains_multipartite(c.blue, parts)
    if witness is not None:
        return False, "blue target present"
    notes = []
    small = 0
    for comp in connected_components(c.blue):
        if len(comp) < total:
            small += 1
            continue
        sub = induced_subgraph(c.blue, comp)
        if len(comp) == total:
            sizes = sorted(len(x) for x in connected_components(complement(sub)))
            notes.append(
                "components " + ",".join(map(str, sizes))
                + " vs bins " + ",".join(map(str, parts))
            )
        else:
            notes.append(f"search exhausted on component of order {len(comp)}")
    if small:
        notes.append(f"{small} component(s) smaller than the target")
    return True, "; ".join(notes)


def red_avoids(c: TwoColoring, g: Graph, budget: int | None = None) -> tuple[bool, Embedding | None]:
    """True when the red graph provably contains no copy of g; otherwise the witness."""
    emb = find_embedding(g, c.red, budget)
    return (emb is None), emb
