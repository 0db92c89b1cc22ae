"""The headline decision procedure: is K_{p+1}(alpha;n) G-good for large n?

The answer is exactly "G embeds into mT + K_{k-1}(m) for every free tree T on
snd(alpha) vertices" (m = v(G), k = chi(G) - 1), so the certificate carries one
embedding per tree, or a failing tree plus a small extremal coloring that
re-verifies.  The asymptotic threshold itself is not effective; certificates
report the claimed Ramsey value k(p*alpha + n*h - 1) + 1 as a linear form in n
and never claim a concrete n_0.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Sequence

from .embedding import Embedding, find_embedding, verify_embedding
from .errors import HypothesisError, PreconditionError
from .graphs import (
    MAX_ORDER,
    Graph,
    complete_multipartite,
    connected_components,
    disjoint_union,
    graph6_encode,
    join,
)
from .invariants import min_color_class
from .trees import TreeSet, enumerate_free_trees


def snd(alpha: int) -> int:
    """Smallest positive integer that does not divide alpha; always >= 2."""
    if alpha < 1:
        raise PreconditionError(f"snd requires alpha >= 1, got {alpha}")
    k = 2
    while alpha % k == 0:
        k += 1
    return k


def host_template(m: int, k_minus_1: int, t: Graph) -> Graph:
    """m disjoint copies of the tree t, joined with K_{k_minus_1}(m)."""
    if m < 1:
        raise PreconditionError("host_template requires m >= 1")
    if k_minus_1 < 0:
        raise PreconditionError("host_template requires k_minus_1 >= 0")
    if t.n < 1 or t.edge_count != t.n - 1 or len(connected_components(t)) != 1:
        raise PreconditionError("host_template requires t to be a tree")
    order = m * t.n + m * k_minus_1
    if order > MAX_ORDER:
        raise PreconditionError(
            f"host mT + K_(k-1)(m) would have order {order} > {MAX_ORDER}"
        )
    copies = disjoint_union([t] * m)
    if k_minus_1 == 0:
        return copies
    return join(copies, complete_multipartite([m] * k_minus_1))


@dataclass(frozen=True)
class GoodnessProblem:
    """Target graph G against K_p(alpha) + nH with H = K_1 or K_{q+1}(alpha;beta)."""

    g: Graph
    alpha: int
    p: int
    family: tuple[int, int] | None = None  # (q, beta); None means H = K_1

    @property
    def h(self) -> int:
        if self.family is None:
            return 1
        q, beta = self.family
        return q * self.alpha + beta

    def family_label(self) -> str:
        if self.family is None:
            return "K1"
        q, beta = self.family
        return f"K_{q + 1}({self.alpha};{beta})"


@dataclass(frozen=True)
class ExtremalWitness:
    """A concrete necessity coloring backing a not_good verdict at one small n."""

    n_instance: int
    coloring: "TwoColoring"  # noqa: F821 -- colorings imports this module
    red_avoids_g: bool
    no_blue_target: bool
    obstruction: str

    @property
    def order(self) -> int:
        return self.coloring.order


@dataclass(frozen=True)
class GoodnessCertificate:
    """Verdict plus everything needed to re-check it.

    verdict is "good"/"not_good" for the two-sided criterion, or
    "sufficient"/"inconclusive" for the one-way multi-size variant.
    claimed_value is (slope, intercept): r = slope*n + intercept for large n.
    embeddings align with trees_checked; entries after an early exit are None
    and complete is False.
    """

    verdict: str
    g: Graph
    chi: int
    s: int
    m: int
    snd: int
    claimed_value: tuple[int, int]
    trees_checked: TreeSet
    embeddings: tuple[Embedding | None, ...]
    failing_indices: tuple[int, ...] = ()
    complete: bool = True
    alpha: int | None = None
    p: int | None = None
    h: int = 1
    family: str = "K1"
    part_sizes: tuple[int, ...] | None = None
    sufficiency_only: bool = False
    extremal: ExtremalWitness | None = None
    notes: tuple[str, ...] = ()

    @property
    def failing_tree(self) -> Graph | None:
        if not self.failing_indices:
            return None
        return self.trees_checked.trees[self.failing_indices[0]]

    def to_json_dict(self) -> dict:
        doc = {
            "verdict": self.verdict,
            "graph": graph6_encode(self.g),
            "alpha": self.alpha,
            "snd": self.snd,
            "p": self.p,
            "chi": self.chi,
            "s": self.s,
            "m": self.m,
            "h": self.h,
            "family": self.family,
            "claimed_value": {
                "slope": self.claimed_value[0],
                "intercept": self.claimed_value[1],
            },
            "trees": [graph6_encode(t) for t in self.trees_checked.trees],
            "embeddings": [
                list(e.mapping) if e is not None else None for e in self.embeddings
            ],
            "failing_index": self.failing_indices[0] if self.failing_indices else None,
            "failing_tree": graph6_encode(self.failing_tree) if self.failing_tree else None,
            "complete": self.complete,
            "sufficiency_only": self.sufficiency_only,
            "notes": list(self.notes),
        }
        if self.part_sizes is not None:
            doc["part_sizes"] = list(self.part_sizes)
        if self.extremal is not None:
            doc["extremal"] = {
                "n": self.extremal.n_instance,
                "order": self.extremal.order,
                "red_g6": graph6_encode(self.extremal.coloring.red),
                "blue_g6": graph6_encode(self.extremal.coloring.blue),
                "red_avoids_g": self.extremal.red_avoids_g,
                "no_blue_target": self.extremal.no_blue_target,
                "obstruction": self.extremal.obstruction,
            }
        else:
            doc["extremal"] = None
        return doc


def _tree_check(task: tuple[Graph, Graph, int | None]) -> Embedding | None:
    pattern, host, budget = task
    return find_embedding(pattern, host, budget)


def _run_tree_checks(
    g: Graph,
    trees: TreeSet,
    k_minus_1: int,
    exhaustive: bool,
    budget: int | None,
    jobs: int,
) -> tuple[list[Embedding | None], list[int], bool]:
    hosts = [host_template(g.n, k_minus_1, t) for t in trees.trees]
    results: list[Embedding | None] = [None] * len(hosts)
    if jobs > 1:
        tasks = [(g, host, budget) for host in hosts]
        with multiprocessing.Pool(jobs) as pool:
            results = list(pool.map(_tree_check, tasks))
        failing = [i for i, e in enumerate(results) if e is None]
        return results, failing, True
    failing = []
    for i, host in enumerate(hosts):
        emb = find_embedding(g, host, budget)
        results[i] = emb
        if emb is None:
            failing.append(i)
            if not exhaustive:
                return results, failing, False
    return results, failing, True


def _validated_profile(g: Graph):
    profile = min_color_class(g)
    if profile.s != 1:
        raise HypothesisError("s(G) = 1", f"s(G) = {profile.s}")
    if profile.chi < 2:
        raise HypothesisError("chi(G) = k + 1 >= 2", f"chi(G) = {profile.chi}")
    return profile


def decide_goodness(
    prob: GoodnessProblem,
    exhaustive: bool = False,
    budget: int | None = None,
    jobs: int = 1,
) -> GoodnessCertificate:
    """Decide the characterization and build a re-checkable certificate.

    good requires an embedding of G into mT + K_{k-1}(m) for every free tree T
    on snd(alpha) vertices.  A not_good certificate names the first failing
    tree and, when one fits under the order cap, attaches a verified small
    instance of the matching necessity coloring.
    """
    if prob.alpha < 1:
        raise PreconditionError(f"alpha must be >= 1, got {prob.alpha}")
    d = snd(prob.alpha)
    if prob.p < d:
        raise HypothesisError("p >= snd(alpha)", f"p = {prob.p}, snd({prob.alpha}) = {d}")
    if prob.family is not None:
        q, beta = prob.family
        if q < 1 or beta < 0:
            raise PreconditionError("family K_{q+1}(alpha;beta) needs q >= 1, beta >= 0")
    profile = _validated_profile(prob.g)
    k = profile.chi - 1
    m = prob.g.n
    h = prob.h
    notes: list[str] = []
    if prob.family is not None and prob.family[1] == 0:
        notes.append("family with beta = 0 read as H = K_q(alpha)")

    trees = enumerate_free_trees(d)
    embeddings, failing, complete = _run_tree_checks(
        prob.g, trees, k - 1, exhaustive, budget, jobs
    )
    verdict = "good" if not failing else "not_good"
    extremal = None
    if failing:
        extremal = _extremal_witness(prob, trees.trees[failing[0]], k, budget, notes)
    return GoodnessCertificate(
        verdict=verdict,
        g=prob.g,
        chi=profile.chi,
        s=profile.s,
        m=m,
        snd=d,
        claimed_value=(k * h, k * (prob.p * prob.alpha - 1) + 1),
        trees_checked=trees,
        embeddings=tuple(embeddings),
        failing_indices=tuple(failing),
        complete=complete,
        alpha=prob.alpha,
        p=prob.p,
        h=h,
        family=prob.family_label(),
        extremal=extremal,
        notes=tuple(notes),
    )


def _extremal_witness(
    prob: GoodnessProblem,
    failing_tree: Graph,
    k: int,
    budget: int | None,
    notes: list[str],
) -> ExtremalWitness | None:
    from .colorings import NecessityParams, necessity_coloring, red_avoids, verify_no_blue_target

    n_instance = 1
    if k * (prob.p * prob.alpha + n_instance * prob.h - 1) + 1 > MAX_ORDER:
        notes.append("no extremal instance fits under the order cap")
        return None
    params = NecessityParams.derive(
        alpha=prob.alpha, p=prob.p, k=k, n=n_instance, h=prob.h, tree=failing_tree
    )
    coloring = necessity_coloring(params)
    avoided, _ = red_avoids(coloring, prob.g, budget)
    skeleton = [prob.alpha] * prob.p + [n_instance * prob.h]
    no_blue, obstruction = verify_no_blue_target(coloring, skeleton)
    return ExtremalWitness(
        n_instance=n_instance,
        coloring=coloring,
        red_avoids_g=avoided,
        no_blue_target=no_blue,
        obstruction=obstruction,
    )


def decide_goodness_multisize(
    g: Graph,
    part_sizes: Sequence[int],
    exhaustive: bool = False,
    budget: int | None = None,
    jobs: int = 1,
) -> GoodnessCertificate:
    """One-way variant for K_{alpha_1,...,alpha_p,n}: sufficiency only.

    The embedding condition runs with tree order min_i snd(alpha_i); when it
    holds the verdict is "sufficient", otherwise "inconclusive" (this test
    cannot certify non-goodness).
    """
    if not part_sizes or any(a < 1 for a in part_sizes):
        raise PreconditionError("part sizes must be a nonempty list of integers >= 1")
    profile = _validated_profile(g)
    k = profile.chi - 1
    d = min(snd(a) for a in part_sizes)
    trees = enumerate_free_trees(d)
    embeddings, failing, complete = _run_tree_checks(g, trees, k - 1, exhaustive, budget, jobs)
    total = sum(part_sizes)
    return GoodnessCertificate(
        verdict="sufficient" if not failing else "inconclusive",
        g=g,
        chi=profile.chi,
        s=profile.s,
        m=g.n,
        snd=d,
        claimed_value=(k, k * (total - 1) + 1),
        trees_checked=trees,
        embeddings=tuple(embeddings),
        failing_indices=tuple(failing),
        complete=complete,
        p=len(part_sizes),
        part_sizes=tuple(part_sizes),
        family="K1",
        sufficiency_only=True,
        notes=("sufficiency-only criterion: inconclusive does not certify not_good",),
    )


def reverify_certificate(cert: GoodnessCertificate) -> bool:
    """Re-check a certificate against freshly rebuilt hosts.

    For a good (or sufficient) verdict every stored embedding must verify; for
    the other verdicts every recorded failing tree must still admit no
    embedding.
    """
    k_minus_1 = cert.chi - 2
    for i, (tree, emb) in enumerate(zip(cert.trees_checked.trees, cert.embeddings)):
        host = host_template(cert.m, k_minus_1, tree)
        if emb is not None:
            if not verify_embedding(cert.g, host, emb):
                return False
        elif i in cert.failing_indices:
            if find_embedding(cert.g, host) is not None:
                return False
    return True
