"""Ramsey goodness of complete multipartite graphs with one large part.

Exact decision procedure for the characterization "K_{p+1}(alpha;n) is G-good
for large n iff G embeds into mT + K_{k-1}(m) for every free tree T on
snd(alpha) vertices", together with the extremal colorings behind it and
exhaustive small-instance Ramsey oracles.
"""

from .colorings import (
    NecessityParams,
    TwoColoring,
    burr_coloring,
    expected_red_graph,
    necessity_coloring,
    red_avoids,
    verify_no_blue_target,
)
from .embedding import (
    Embedding,
    PartAssignment,
    contains_multipartite,
    find_embedding,
    verify_embedding,
    verify_part_assignment,
)
from .errors import (
    BudgetExceededError,
    Graph6Error,
    HypothesisError,
    PreconditionError,
    RamseyGoodnessError,
)
from .goodness import (
    GoodnessCertificate,
    GoodnessProblem,
    decide_goodness,
    decide_goodness_multisize,
    host_template,
    reverify_certificate,
    snd,
)
from .graphs import (
    CANONICAL_ORDER_LIMIT,
    MAX_ORDER,
    Graph,
    canonical_form,
    complement,
    complete_multipartite,
    connected_components,
    disjoint_union,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    join,
    standard_graph,
)
from .invariants import ChromaticProfile, burr_lower_bound, chromatic_number, min_color_class
from .ramsey import (
    ENUM_ORDER_LIMIT,
    ArrowingResult,
    RamseyValue,
    arrows,
    enumerate_graphs,
    ramsey_number,
)
from .trees import TreeFacts, TreeSet, enumerate_free_trees, free_tree_sequence, tree_structure_fact

__all__ = [
    "ArrowingResult",
    "BudgetExceededError",
    "CANONICAL_ORDER_LIMIT",
    "ChromaticProfile",
    "ENUM_ORDER_LIMIT",
    "Embedding",
    "GoodnessCertificate",
    "GoodnessProblem",
    "Graph",
    "Graph6Error",
    "HypothesisError",
    "MAX_ORDER",
    "NecessityParams",
    "PartAssignment",
    "PreconditionError",
    "RamseyGoodnessError",
    "RamseyValue",
    "TreeFacts",
    "TreeSet",
    "TwoColoring",
    "arrows",
    "burr_coloring",
    "burr_lower_bound",
    "canonical_form",
    "chromatic_number",
    "complement",
    "complete_multipartite",
    "connected_components",
    "contains_multipartite",
    "decide_goodness",
    "decide_goodness_multisize",
    "disjoint_union",
    "enumerate_free_trees",
    "enumerate_graphs",
    "expected_red_graph",
    "find_embedding",
    "free_tree_sequence",
    "graph6_decode",
    "graph6_encode",
    "host_template",
    "induced_subgraph",
    "join",
    "min_color_class",
    "necessity_coloring",
    "ramsey_number",
    "red_avoids",
    "reverify_certificate",
    "snd",
    "standard_graph",
    "tree_structure_fact",
    "verify_embedding",
    "verify_no_blue_target",
    "verify_part_assignment",
]
