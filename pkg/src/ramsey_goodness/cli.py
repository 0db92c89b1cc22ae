"""Single executable exposing every module as a subcommand.

Graphs are always passed as graph6, either inline or as @path-to-file.  Exit
codes: 0 decided, 2 precondition/usage violation, 3 search budget exhausted.
JSON mode emits exactly one document on stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from .colorings import (
    NecessityParams,
    necessity_coloring,
    verify_no_blue_target,
)
from .embedding import find_embedding, verify_embedding
from .errors import BudgetExceededError, Graph6Error, PreconditionError
from .goodness import GoodnessProblem, decide_goodness, snd
from .graphs import Graph, graph6_decode, graph6_encode
from .invariants import min_color_class
from .ramsey import ramsey_number
from .trees import enumerate_free_trees

BUDGET_ENV = "RGK_BUDGET"


def _graph_arg(value: str) -> Graph:
    if value.startswith("@"):
        value = Path(value[1:]).read_text(encoding="ascii")
    return graph6_decode(value)


def _default_budget() -> int | None:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return None
    try:
        budget = int(raw)
    except ValueError as exc:
        raise PreconditionError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from exc
    if budget < 1:
        raise PreconditionError(f"{BUDGET_ENV} must be positive, got {budget}")
    return budget


def _budget_of(args: argparse.Namespace) -> int | None:
    if getattr(args, "budget", None) is not None:
        if args.budget < 1:
            raise PreconditionError(f"--budget must be positive, got {args.budget}")
        return args.budget
    return _default_budget()


def _emit(args: argparse.Namespace, doc: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_snd(args: argparse.Namespace) -> int:
    value = snd(args.alpha)
    _emit(args, {"alpha": args.alpha, "snd": value}, [str(value)])
    return 0


def _cmd_trees(args: argparse.Namespace) -> int:
    trees = enumerate_free_trees(args.n)
    encoded = [graph6_encode(t) for t in trees]
    _emit(args, {"n": args.n, "count": len(encoded), "trees": encoded}, encoded)
    return 0


def _cmd_invariants(args: argparse.Namespace) -> int:
    profile = min_color_class(args.graph)
    doc = {"chi": profile.chi, "s": profile.s, "witness": list(profile.witness)}
    text = f"chi={profile.chi} s={profile.s} witness={','.join(map(str, profile.witness))}"
    _emit(args, doc, [text])
    return 0


def _cmd_embed(args: argparse.Namespace) -> int:
    emb = find_embedding(args.pattern, args.host, _budget_of(args))
    if emb is None:
        _emit(args, {"found": False, "mapping": None}, ["NONE"])
    else:
        assert verify_embedding(args.pattern, args.host, emb)
        _emit(
            args,
            {"found": True, "mapping": list(emb.mapping)},
            [" ".join(map(str, emb.mapping))],
        )
    return 0


def _parse_family(raw: str | None) -> tuple[int, int] | None:
    if raw is None:
        return None
    pieces = raw.split(",")
    if len(pieces) != 2:
        raise PreconditionError(f"--family expects 'q,beta', got {raw!r}")
    try:
        q, beta = int(pieces[0]), int(pieces[1])
    except ValueError as exc:
        raise PreconditionError(f"--family expects integers, got {raw!r}") from exc
    return q, beta


def _cmd_goodness(args: argparse.Namespace) -> int:
    if args.jobs < 1:
        raise PreconditionError(f"--jobs must be positive, got {args.jobs}")
    prob = GoodnessProblem(
        g=args.graph, alpha=args.alpha, p=args.p, family=_parse_family(args.family)
    )
    cert = decide_goodness(
        prob, exhaustive=args.exhaustive, budget=_budget_of(args), jobs=args.jobs
    )
    doc = cert.to_json_dict()
    slope, intercept = cert.claimed_value
    text = [
        f"verdict: {cert.verdict}",
        f"snd({cert.alpha}) = {cert.snd}, trees checked: {len(cert.trees_checked)}",
        f"claimed value for large n: {slope}*n + {intercept}",
    ]
    if cert.failing_indices:
        text.append(f"failing tree: {graph6_encode(cert.failing_tree)}")
    _emit(args, doc, text)
    return 0


def _cmd_coloring(args: argparse.Namespace) -> int:
    params = NecessityParams.derive(
        alpha=args.alpha, p=args.p, k=args.k, n=args.n, h=args.h, tree=args.tree
    )
    coloring = necessity_coloring(params)
    skeleton = [args.alpha] * args.p
    if args.n * args.h:
        skeleton.append(args.n * args.h)
    ok, obstruction = verify_no_blue_target(coloring, skeleton)
    doc = {
        "N": params.order,
        "red_g6": graph6_encode(coloring.red),
        "blue_g6": graph6_encode(coloring.blue),
        "case": params.case,
        "t": params.t,
        "q": params.q,
        "verification": {"complementary": True, "no_blue_target": ok, "obstruction": obstruction},
    }
    text = [
        f"N={params.order} case={params.case} t={params.t} q={params.q}",
        f"red:  {doc['red_g6']}",
        f"blue: {doc['blue_g6']}",
        f"no blue target: {ok} ({obstruction})",
    ]
    _emit(args, doc, text)
    return 0


def _cmd_ramsey(args: argparse.Namespace) -> int:
    result = ramsey_number(args.g, args.h, args.max)
    witness = result.lower_witness
    doc = {
        "value": result.value,
        "lower_bound": result.lower_bound,
        "status": result.status,
        "witness": None
        if witness is None
        else {
            "order": witness.order,
            "red_g6": graph6_encode(witness.red),
            "blue_g6": graph6_encode(witness.blue),
        },
    }
    if result.status == "exact":
        text = [f"r = {result.value} (exact)"]
    else:
        text = [f"r >= {result.lower_bound} (lower_bound_only at cap {args.max})"]
    if witness is not None:
        text.append(f"witness red:  {graph6_encode(witness.red)}")
        text.append(f"witness blue: {graph6_encode(witness.blue)}")
    _emit(args, doc, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rgk",
        description="Ramsey goodness of complete multipartite graphs with one large part",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="emit one JSON document")
        p.set_defaults(func=handler)
        return p

    p = add("snd", _cmd_snd, "smallest non-divisor of alpha")
    p.add_argument("--alpha", type=int, required=True)

    p = add("trees", _cmd_trees, "enumerate free trees, one graph6 per line")
    p.add_argument("--n", type=int, required=True)

    p = add("invariants", _cmd_invariants, "chromatic number and minimum color-class size")
    p.add_argument("--graph", type=_graph_arg, required=True)

    p = add("embed", _cmd_embed, "subgraph embedding witness or NONE")
    p.add_argument("--pattern", type=_graph_arg, required=True)
    p.add_argument("--host", type=_graph_arg, required=True)
    p.add_argument("--budget", type=int)

    p = add("goodness", _cmd_goodness, "decide the goodness characterization")
    p.add_argument("--graph", type=_graph_arg, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--family", help="q,beta for H = K_{q+1}(alpha;beta); default H = K_1")
    p.add_argument("--exhaustive", action="store_true", help="check all trees even after a failure")
    p.add_argument("--budget", type=int)
    p.add_argument("--jobs", type=int, default=1)

    p = add("coloring", _cmd_coloring, "construct and verify a necessity coloring")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int, default=1)
    p.add_argument("--tree", type=_graph_arg, required=True)

    p = add("ramsey", _cmd_ramsey, "exact small Ramsey number by exhaustive arrowing")
    p.add_argument("--g", type=_graph_arg, required=True)
    p.add_argument("--h", type=_graph_arg, required=True)
    p.add_argument("--max", type=int, required=True)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (Graph6Error, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
