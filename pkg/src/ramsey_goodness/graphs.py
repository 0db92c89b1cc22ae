"""Bitset-backed immutable simple graphs and the constructions everything else uses.

Vertices are always 0..n-1.  Adjacency is stored as one Python int per vertex
used as a bitmask, so the neighborhood intersections inside backtracking
searches are single AND operations.  Order is capped at 62 so that every graph
fits a one-byte graph6 size header.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import Graph6Error, PreconditionError

MAX_ORDER = 62  # one-byte graph6 size header
CANONICAL_ORDER_LIMIT = 12  # default exact-canonicalization bound

STANDARD_KINDS = ("path", "star", "cycle", "complete", "empty")


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; bit u of ``adj[v]`` is set iff uv is an edge."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise PreconditionError(f"graph order must be 0..{MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise PreconditionError("adjacency row count differs from order")
        for v, row in enumerate(self.adj):
            if row >> self.n:
                raise PreconditionError(f"row {v} refers to vertices outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise PreconditionError(f"self-loop at vertex {v}")
            m = row
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if not (self.adj[u] >> v) & 1:
                    raise PreconditionError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u},{v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            m = self.adj[v] >> (v + 1)
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                out.append((v, v + 1 + u))
        return out

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Rename old vertex v to perm[v]; perm must be a permutation of 0..n-1."""
        if sorted(perm) != list(range(self.n)):
            raise PreconditionError("relabel requires a permutation of 0..n-1")
        rows = [0] * self.n
        for v in range(self.n):
            m = self.adj[v]
            moved = 0
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                moved |= 1 << perm[u]
            rows[perm[v]] = moved
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count})"


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full & ~row & ~(1 << v)) for v, row in enumerate(g.adj)))


def disjoint_union(gs: Iterable[Graph]) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in gs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """All of g1, then all of g2, plus every edge in between."""
    n = g1.n + g2.n
    mask1 = (1 << g1.n) - 1
    mask2 = ((1 << n) - 1) ^ mask1
    rows = [row | mask2 for row in g1.adj]
    rows += [(row << g1.n) | mask1 for row in g2.adj]
    return Graph(n, tuple(rows))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """K_{parts[0],...,parts[-1]} with the parts laid out consecutively."""
    if not parts:
        raise PreconditionError("complete_multipartite requires at least one part")
    if any(p < 1 for p in parts):
        raise PreconditionError("part sizes must be >= 1")
    n = sum(parts)
    full = (1 << n) - 1
    rows = []
    offset = 0
    for size in parts:
        part_mask = ((1 << size) - 1) << offset
        for v in range(offset, offset + size):
            rows.append(full & ~part_mask)
        offset += size
    return Graph(n, tuple(rows))


def standard_graph(kind: str, n: int) -> Graph:
    """Named graph on vertices 0..n-1: path, star (center 0), cycle, complete, empty."""
    if kind not in STANDARD_KINDS:
        raise PreconditionError(f"unknown graph kind {kind!r}; expected one of {STANDARD_KINDS}")
    if n < 0:
        raise PreconditionError("vertex count must be >= 0")
    if kind == "empty":
        return Graph.empty(n)
    if kind == "path":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "star":
        return Graph.from_edges(n, [(0, i) for i in range(1, n)])
    if kind == "complete":
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if n < 3:
        raise PreconditionError("cycle requires at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    """Subgraph induced by vs, relabeled 0..|vs|-1 in ascending vertex order."""
    kept = sorted(vs)
    if len(set(kept)) != len(kept):
        raise PreconditionError("duplicate vertices in induced_subgraph")
    if kept and not (0 <= kept[0] and kept[-1] < g.n):
        raise PreconditionError("vertex out of range in induced_subgraph")
    index = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        row = 0
        for u in _bits(g.adj[v]):
            if u in index:
                row |= 1 << index[u]
        rows.append(row)
    return Graph(len(kept), tuple(rows))


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    seen = 0
    out = []
    for start in range(g.n):
        if (seen >> start) & 1:
            continue
        comp = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        out.append(tuple(_bits(comp)))
    return out


# ---------------------------------------------------------------------------
# graph6 codec
#
# Header byte chr(63+n) for n <= 62.  Body: upper-triangle adjacency bits in
# column order (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit groups,
# each group +63, zero-padded to a multiple of 6 bits.
# ---------------------------------------------------------------------------


def graph6_encode(g: Graph) -> str:
    chunks = [chr(63 + g.n)]
    value = 0
    filled = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            value = (value << 1) | ((col >> i) & 1)
            filled += 1
            if filled == 6:
                chunks.append(chr(63 + value))
                value = 0
                filled = 0
    if filled:
        chunks.append(chr(63 + (value << (6 - filled))))
    return "".join(chunks)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 string")
    header = ord(s[0])
    if header == 126:
        raise Graph6Error("multi-byte graph6 headers (order > 62) are not supported")
    if not 63 <= header <= 125:
        raise Graph6Error(f"malformed graph6 size header {s[0]!r}")
    n = header - 63
    nbits = n * (n - 1) // 2
    body = s[1:]
    expected = (nbits + 5) // 6
    if len(body) < expected:
        raise Graph6Error(f"truncated graph6 body: need {expected} bytes, got {len(body)}")
    if len(body) > expected:
        raise Graph6Error("trailing data after graph6 body")
    values = []
    for ch in body:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise Graph6Error(f"graph6 character out of range: {ch!r}")
        values.append(o - 63)
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if (values[idx // 6] >> (5 - idx % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    while idx < 6 * expected:
        if (values[idx // 6] >> (5 - idx % 6)) & 1:
            raise Graph6Error("nonzero graph6 padding bits")
        idx += 1
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------


def _triangle_counts(g: Graph) -> list[int]:
    counts = []
    for v in range(g.n):
        total = 0
        for u in _bits(g.adj[v]):
            total += (g.adj[v] & g.adj[u]).bit_count()
        counts.append(total // 2)
    return counts


def _initial_partition(g: Graph) -> list[list[int]]:
    """Cells by (degree, triangle count); order depends only on the isomorphism class."""
    tri = _triangle_counts(g)
    buckets: dict[tuple[int, int], list[int]] = {}
    for v in range(g.n):
        buckets.setdefault((g.degree(v), tri[v]), []).append(v)
    return [buckets[key] for key in sorted(buckets)]


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition; split order is invariant."""
    changed = True
    while changed:
        changed = False
        masks = [sum(1 << v for v in cell) for cell in cells]
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            buckets: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((g.adj[v] & m).bit_count() for m in masks)
                buckets.setdefault(sig, []).append(v)
            if len(buckets) > 1:
                changed = True
            for sig in sorted(buckets):
                new_cells.append(buckets[sig])
        cells = new_cells
    return cells


def canonical_form(g: Graph, max_order: int = CANONICAL_ORDER_LIMIT) -> bytes:
    """Canonical graph6 bytes: equal for two graphs iff they are isomorphic.

    Individualization-refinement search: the column-major adjacency bit string
    is minimized over the leaf labelings of the refinement tree.  Branches
    whose head vertices are swapped by a transposition automorphism are
    searched once, which keeps the symmetric joins and blow-ups that occur
    here tractable.  ``max_order`` guards against adversarial inputs; raise it
    explicitly for larger structured graphs.
    """
    if g.n > max_order:
        raise PreconditionError(
            f"canonical_form is exact only up to order {max_order}, got {g.n}"
        )
    if g.n <= 1:
        return graph6_encode(g).encode("ascii")

    comps = connected_components(g)
    if len(comps) > 1:
        # canonicalize components independently; their sorted graph6 forms
        # (order byte first) determine the composite labeling
        keys = sorted(canonical_form(induced_subgraph(g, c), max_order) for c in comps)
        pieces = [graph6_decode(key.decode("ascii")) for key in keys]
        return graph6_encode(disjoint_union(pieces)).encode("ascii")

    n = g.n
    adj = g.adj
    best: list[int] | None = None

    def search(cells: list[list[int]], labels: list[int], cols: list[int], tight: bool) -> None:
        nonlocal best
        cells = _refine(g, cells)
        # consume the leading singleton cells into labeled positions
        labels = list(labels)
        cols = list(cols)
        idx = len(labels)
        consumed = 0
        for cell in cells:
            if len(cell) != 1:
                break
            consumed += 1
        while idx < consumed:
            u = cells[idx][0]
            col = 0
            row = adj[u]
            for w in labels:
                col = (col << 1) | ((row >> w) & 1)
            if tight and best is not None:
                if col > best[idx]:
                    return
                tight = col == best[idx]
            labels.append(u)
            cols.append(col)
            idx += 1
        if consumed == len(cells):
            if best is None or cols < best:
                best = cols
            return
        target = cells[consumed]
        prefix = cells[:consumed]
        suffix = cells[consumed + 1 :]
        tried: list[int] = []
        for v in target:
            if any((adj[v] & ~(1 << w)) == (adj[w] & ~(1 << v)) for w in tried):
                continue
            tried.append(v)
            rest = [u for u in target if u != v]
            search(prefix + [[v], rest] + suffix, labels, cols, tight)

    search(_initial_partition(g), [], [], True)
    assert best is not None
    rows = [0] * n
    for i in range(1, n):
        col = best[i]
        for j in range(i):
            if (col >> (i - 1 - j)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return graph6_encode(Graph(n, tuple(rows))).encode("ascii")
