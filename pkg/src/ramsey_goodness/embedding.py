"""Exact subgraph-containment searches with machine-checkable witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BudgetExceededError, PreconditionError
from .graphs import (
    Graph,
    complete_multipartite,
    complement,
    connected_components,
    induced_subgraph,
)


@dataclass(frozen=True)
class Embedding:
    """Injective map pattern vertex i -> host vertex mapping[i], edge-preserving."""

    mapping: tuple[int, ...]


@dataclass(frozen=True)
class PartAssignment:
    """Selected host vertices mapped to part indices of a multipartite target."""

    pairs: tuple[tuple[int, int], ...]  # (host vertex, part index), sorted by vertex

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)


def _extension_order(pattern: Graph) -> list[int]:
    """Descending degree, each next vertex maximizing placed neighbors."""
    n = pattern.n
    start = max(range(n), key=lambda v: (pattern.degree(v), -v))
    order = [start]
    placed = 1 << start
    rest = set(range(n)) - {start}
    while rest:
        v = max(
            rest,
            key=lambda u: ((pattern.adj[u] & placed).bit_count(), pattern.degree(u), -u),
        )
        order.append(v)
        placed |= 1 << v
        rest.remove(v)
    return order


def find_embedding(pattern: Graph, host: Graph, budget: int | None = None) -> Embedding | None:
    """Backtracking subgraph (not induced) search; None means no embedding exists.

    Candidates are filtered by degree and by bitmask intersection of the host
    neighborhoods of already-placed pattern neighbors.  ``budget`` caps node
    expansions; exceeding it raises BudgetExceededError rather than answering.
    """
    np_, nh = pattern.n, host.n
    if np_ == 0:
        return Embedding(())
    if np_ > nh or pattern.edge_count > host.edge_count:
        return None
    pattern_degrees = sorted((pattern.degree(v) for v in range(np_)), reverse=True)
    host_degrees = sorted((host.degree(v) for v in range(nh)), reverse=True)
    if any(p > h for p, h in zip(pattern_degrees, host_degrees)):
        return None

    order = _extension_order(pattern)
    prev_nbrs = [
        [j for j in range(i) if pattern.has_edge(order[i], order[j])] for i in range(np_)
    ]
    base_masks = []
    for i in range(np_):
        need = pattern.degree(order[i])
        mask = 0
        for w in range(nh):
            if host.degree(w) >= need:
                mask |= 1 << w
        base_masks.append(mask)

    images = [0] * np_
    nodes = 0

    def place(i: int, used: int) -> bool:
        nonlocal nodes
        if i == np_:
            return True
        cand = base_masks[i] & ~used
        for j in prev_nbrs[i]:
            cand &= host.adj[images[j]]
        while cand:
            low = cand & -cand
            cand ^= low
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceededError(nodes)
            images[i] = low.bit_length() - 1
            if place(i + 1, used | low):
                return True
        return False

    if not place(0, 0):
        return None
    mapping = [0] * np_
    for i, v in enumerate(order):
        mapping[v] = images[i]
    return Embedding(tuple(mapping))


def verify_embedding(pattern: Graph, host: Graph, e: Embedding) -> bool:
    """True iff the map is injective and every pattern edge lands on a host edge."""
    if len(e.mapping) != pattern.n:
        raise PreconditionError(
            f"embedding domain has {len(e.mapping)} vertices, pattern has {pattern.n}"
        )
    if any(not 0 <= w < host.n for w in e.mapping):
        raise PreconditionError("embedding image outside host vertex range")
    if len(set(e.mapping)) != pattern.n:
        return False
    return all(host.has_edge(e.mapping[u], e.mapping[v]) for u, v in pattern.edges())


def verify_part_assignment(host: Graph, parts: Sequence[int], pa: PartAssignment) -> bool:
    """Re-check a PartAssignment edge by edge against its invariants."""
    selected = [v for v, _ in pa.pairs]
    if len(set(selected)) != len(selected):
        return False
    if any(not 0 <= v < host.n for v in selected):
        return False
    counts = [0] * len(parts)
    for _, part in pa.pairs:
        if not 0 <= part < len(parts):
            return False
        counts[part] += 1
    if counts != list(parts):
        return False
    lookup = pa.as_dict()
    for i, u in enumerate(selected):
        for v in selected[i + 1 :]:
            if lookup[u] != lookup[v] and not host.has_edge(u, v):
                return False
    return True


def _pack_components(components: list[tuple[int, ...]], bins: Sequence[int]) -> list[int] | None:
    """Assign whole components to bins filling each exactly; None if impossible.

    Equal-remainder bins are interchangeable, so only the first of each
    remainder value is tried (lexicographic tie-breaking).
    """
    order = sorted(range(len(components)), key=lambda i: (-len(components[i]), components[i]))
    remaining = list(bins)
    assign = [0] * len(components)

    def fill(k: int) -> bool:
        if k == len(order):
            return True
        idx = order[k]
        size = len(components[idx])
        seen: set[int] = set()
        for b, room in enumerate(remaining):
            if room >= size and room not in seen:
                seen.add(room)
                remaining[b] -= size
                assign[idx] = b
                if fill(k + 1):
                    return True
                remaining[b] += size
        return False

    return assign if fill(0) else None


def _spanning_assignment(host: Graph, parts: Sequence[int]) -> dict[int, int] | None:
    """Spanning case: every complement component must sit inside a single part."""
    comps = connected_components(complement(host))
    assign = _pack_components(comps, parts)
    if assign is None:
        return None
    out: dict[int, int] = {}
    for comp, part in zip(comps, assign):
        for v in comp:
            out[v] = part
    return out


def contains_multipartite(
    host: Graph, parts: Sequence[int], budget: int | None = None
) -> PartAssignment | None:
    """Exact test for K_{parts} as a subgraph of host, with a placement witness.

    When the target spans the host (or one of its components) the decision
    reduces to packing complement components into the parts; otherwise it falls
    back to the generic embedding search.
    """
    if not parts or any(p < 1 for p in parts):
        raise PreconditionError("part sizes must be a nonempty list of integers >= 1")
    total = sum(parts)
    if total > host.n:
        return None
    if len(parts) == 1:
        # Edgeless target: any |parts[0]| vertices will do.
        return PartAssignment(tuple((v, 0) for v in range(parts[0])))

    pattern = complete_multipartite(parts)
    part_of_pattern: list[int] = []
    for idx, size in enumerate(parts):
        part_of_pattern.extend([idx] * size)

    # K_{parts} with >= 2 parts is connected, so it embeds inside one component.
    for comp in connected_components(host):
        if len(comp) < total:
            continue
        sub = induced_subgraph(host, comp)
        if len(comp) == total:
            local = _spanning_assignment(sub, parts)
            if local is not None:
                pairs = sorted((comp[v], part) for v, part in local.items())
                return PartAssignment(tuple(pairs))
            continue
        emb = find_embedding(pattern, sub, budget)
        if emb is not None:
            pairs = sorted(
                (comp[w], part_of_pattern[u]) for u, w in enumerate(emb.mapping)
            )
            return PartAssignment(tuple(pairs))
    return None
