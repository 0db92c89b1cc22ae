"""Exhaustive small-instance Ramsey arithmetic.

Arrowing iterates isomorphism classes rather than labeled colorings (1044
versus 2^21 classes at order 7); the per-class subgraph verdicts are cached.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colorings import TwoColoring
from .embedding import find_embedding
from .errors import PreconditionError
from .graphs import Graph, canonical_form, complement, graph6_decode

ENUM_ORDER_LIMIT = 9

_classes_cache: dict[int, tuple[Graph, ...]] = {}
_subgraph_cache: dict[tuple[Graph, Graph], bool] = {}


@dataclass(frozen=True)
class ArrowingResult:
    """Outcome of the exhaustive K_n -> (g, h) check."""

    n: int
    arrows: bool
    counterexample: TwoColoring | None


@dataclass(frozen=True)
class RamseyValue:
    """Exact r(g,h) when found within the cap, else the residual lower bound."""

    value: int | None
    lower_bound: int
    lower_witness: TwoColoring | None
    status: str  # "exact" | "lower_bound_only"


def enumerate_graphs(n: int) -> tuple[Graph, ...]:
    """Complete isomorph-free list of simple graphs on n vertices.

    Built by augmenting each (n-1)-vertex class with every possible new-vertex
    neighborhood and deduplicating by canonical form; the output graphs carry
    their canonical labeling.
    """
    if not 0 <= n <= ENUM_ORDER_LIMIT:
        raise PreconditionError(f"graph enumeration supports 0..{ENUM_ORDER_LIMIT}, got {n}")
    if n in _classes_cache:
        return _classes_cache[n]
    if n == 0:
        result: tuple[Graph, ...] = (Graph.empty(0),)
    else:
        seen: set[bytes] = set()
        for parent in enumerate_graphs(n - 1):
            rows = list(parent.adj) + [0]
            for nbrs in range(1 << (n - 1)):
                child_rows = [
                    row | (((nbrs >> v) & 1) << (n - 1)) for v, row in enumerate(rows[:-1])
                ]
                child_rows.append(nbrs)
                seen.add(canonical_form(Graph(n, tuple(child_rows)), max_order=n))
        result = tuple(graph6_decode(key.decode("ascii")) for key in sorted(seen))
    _classes_cache[n] = result
    return result


def _contains(pattern: Graph, host: Graph) -> bool:
    key = (pattern, host)
    cached = _subgraph_cache.get(key)
    if cached is None:
        cached = find_embedding(pattern, host) is not None
        _subgraph_cache[key] = cached
    return cached


def arrows(n: int, g: Graph, h: Graph) -> ArrowingResult:
    """True iff every red/blue coloring of K_n has a red g or a blue h.

    Checking "g in F or h in complement(F)" is isomorphism-invariant, so one
    representative per class suffices; a failing class is returned as the
    counterexample coloring.
    """
    if not 0 <= n <= ENUM_ORDER_LIMIT:
        raise PreconditionError(f"arrowing supports 0..{ENUM_ORDER_LIMIT}, got {n}")
    for red in enumerate_graphs(n):
        if _contains(g, red):
            continue
        blue = complement(red)
        if _contains(h, blue):
            continue
        return ArrowingResult(n=n, arrows=False, counterexample=TwoColoring(red=red, blue=blue))
    return ArrowingResult(n=n, arrows=True, counterexample=None)


def ramsey_number(g: Graph, h: Graph, n_max: int) -> RamseyValue:
    """Smallest N <= n_max with K_N -> (g,h), plus the extremal coloring below it."""
    if not 0 <= n_max <= ENUM_ORDER_LIMIT:
        raise PreconditionError(f"ramsey_number supports n_max 0..{ENUM_ORDER_LIMIT}")
    witness: TwoColoring | None = None
    for n in range(1, n_max + 1):
        result = arrows(n, g, h)
        if result.arrows:
            return RamseyValue(value=n, lower_bound=n, lower_witness=witness, status="exact")
        witness = result.counterexample
    return RamseyValue(
        value=None, lower_bound=n_max + 1, lower_witness=witness, status="lower_bound_only"
    )
