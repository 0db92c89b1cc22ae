"""Exact chromatic number and the minimum color-class size over optimal colorings.

Both are computed by backtracking with the first-use symmetry breaking (vertex
order is fixed, a vertex may open at most one new class), which is exhaustive
up to class relabeling and therefore exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .graphs import Graph

CHI_ORDER_LIMIT = 16


@dataclass(frozen=True)
class ChromaticProfile:
    """chi, the minimum class size s over all proper chi-colorings, one witness."""

    chi: int
    s: int
    witness: tuple[int, ...]


def _check_order(g: Graph, max_order: int) -> None:
    if g.n == 0:
        raise PreconditionError("chromatic invariants need at least one vertex")
    if g.n > max_order:
        raise PreconditionError(f"exact coloring limited to order <= {max_order}, got {g.n}")


def _clique_lower_bound(g: Graph) -> int:
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    best = 1
    for seed in range(g.n):
        size = 1
        cand = g.adj[seed]
        for v in order:
            if (cand >> v) & 1:
                size += 1
                cand &= g.adj[v]
        best = max(best, size)
    return best


def _greedy_upper_bound(g: Graph) -> int:
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    color: dict[int, int] = {}
    used = 0
    for v in order:
        taken = {color[u] for u in g.neighbors(v) if u in color}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
        used = max(used, c + 1)
    return used


def _colorable(g: Graph, k: int) -> bool:
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    class_masks = [0] * k

    def place(i: int, opened: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        row = g.adj[v]
        limit = min(opened + 1, k)
        for c in range(limit):
            if class_masks[c] & row:
                continue
            class_masks[c] |= 1 << v
            if place(i + 1, max(opened, c + 1)):
                return True
            class_masks[c] &= ~(1 << v)
        return False

    return place(0, 0)


def chromatic_number(g: Graph, max_order: int = CHI_ORDER_LIMIT) -> int:
    """Smallest k such that g has a proper k-coloring."""
    _check_order(g, max_order)
    if g.edge_count == 0:
        return 1
    low = _clique_lower_bound(g)
    high = _greedy_upper_bound(g)
    for k in range(low, high):
        if _colorable(g, k):
            return k
    return high


def min_color_class(g: Graph, max_order: int = CHI_ORDER_LIMIT) -> ChromaticProfile:
    """Exact s(g): minimum class size over ALL proper chi(g)-colorings.

    Enumerates every chi-coloring up to class relabeling, pruning branches that
    cannot beat the best minimum found so far.
    """
    _check_order(g, max_order)
    chi = chromatic_number(g, max_order)
    n = g.n
    assignment = [0] * n
    counts = [0] * chi
    best_s = n + 1
    best_witness: tuple[int, ...] = ()

    def walk(v: int, opened: int) -> bool:
        """Returns True once a size-1 class is found, to stop the search early."""
        nonlocal best_s, best_witness
        if v == n:
            if opened == chi:
                m = min(counts)
                if m < best_s:
                    best_s = m
                    best_witness = tuple(assignment)
                    if best_s == 1:
                        return True
            return False
        if chi - opened > n - v:
            return False
        if opened == chi and min(counts) >= best_s:
            return False
        row = g.adj[v]
        limit = min(opened + 1, chi)
        for c in range(limit):
            ok = True
            for u in range(v):
                if assignment[u] == c and (row >> u) & 1:
                    ok = False
                    break
            if not ok:
                continue
            assignment[v] = c
            counts[c] += 1
            done = walk(v + 1, max(opened, c + 1))
            counts[c] -= 1
            if done:
                return True
        return False

    walk(0, 0)
    return ChromaticProfile(chi=chi, s=best_s, witness=best_witness)


def burr_lower_bound(g: Graph, h_order: int) -> int:
    """(chi(g)-1)(h_order-1) + s(g), the general lower bound for r(g, H) with v(H)=h_order."""
    profile = min_color_class(g)
    if h_order < profile.s:
        raise PreconditionError(
            f"burr_lower_bound needs h_order >= s(g) = {profile.s}, got {h_order}"
        )
    return (profile.chi - 1) * (h_order - 1) + profile.s
