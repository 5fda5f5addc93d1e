"""Command-line frontend: enumerate, search, verify, export.

Exit codes: 0 success (found/enumerated/all claims pass), 1 data or
resource error, 2 usage error, 3 search exhausted with no code,
4 budget exceeded or claims skipped on budget.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys

from .limits import ResourceLimitError
from .words import BitWord, Family, has_circular_ones_run, iter_family_bits, parse_family
from .graphs import VertexSet, build_graph
from .codes import STATUS_BUDGET, STATUS_EXHAUSTED, search_constrained
from .claims import CLAIM_IDS, CLAIM_RUNNERS, run_claim

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3
EXIT_BUDGET = 4


def _family_arg(text: str) -> Family:
    try:
        return parse_family(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _int_list_arg(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _cmd_enumerate(args) -> int:
    if args.count:
        total = sum(1 for _ in iter_family_bits(args.family, args.n))
        _emit(f"{total}\n", args.output)
        return EXIT_OK
    width = args.n
    lines = []
    for bits in iter_family_bits(args.family, args.n):
        lines.append(format(bits, f"0{width}b") if width else "")
    _emit("".join(line + "\n" for line in lines), args.output)
    return EXIT_OK


def _cmd_search(args) -> int:
    graph = build_graph(args.family, args.n)
    forbidden = None
    if args.avoid_circular_run is not None:
        s = args.avoid_circular_run
        forbidden = lambda w: has_circular_ones_run(w, s)
    outcome = search_constrained(
        graph,
        forbidden,
        args.mode,
        node_budget=args.budget_nodes,
        time_budget=args.budget_seconds,
        seed=args.seed,
        threads=args.threads,
    )
    _emit(json.dumps(outcome.to_json_dict()) + "\n", args.output)
    if outcome.status == STATUS_EXHAUSTED:
        return EXIT_EXHAUSTED
    if outcome.status == STATUS_BUDGET:
        return EXIT_BUDGET
    return EXIT_OK


def _claim_params(args) -> dict:
    params = {}
    if args.n_max is not None:
        params["n_max"] = args.n_max
    if args.p is not None:
        params["p_set"] = [args.p]
    if args.p_set is not None:
        params["p_set"] = args.p_set
    if args.n_set is not None:
        params["n_set"] = args.n_set
    if args.budget_nodes is not None:
        params["node_budget"] = args.budget_nodes
    if args.budget_seconds is not None:
        params["time_budget"] = args.budget_seconds
    return params


def _cmd_verify(args) -> int:
    params = _claim_params(args)
    if args.claim == "all":
        # range parameters are claim-specific; only budgets fan out
        params = {k: v for k, v in params.items() if k in ("node_budget", "time_budget")}
    claim_ids = CLAIM_IDS if args.claim == "all" else (args.claim,)
    reports = []
    for claim_id in claim_ids:
        accepted = inspect.signature(CLAIM_RUNNERS[claim_id]).parameters
        reports.append(run_claim(claim_id, **{k: v for k, v in params.items() if k in accepted}))
    if args.format == "json":
        _emit(json.dumps([r.to_json_dict() for r in reports]) + "\n", args.output)
    else:
        lines = []
        for r in reports:
            lines.append(f"{r.verdict.upper():<8} {r.claim:<18} params={json.dumps(r.params)}")
            if r.verdict != "pass":
                lines.append(f"         evidence={json.dumps(r.evidence)}")
        _emit("".join(line + "\n" for line in lines), args.output)
    if any(r.verdict == "fail" for r in reports):
        return EXIT_ERROR
    if any(r.verdict == "skipped" for r in reports):
        return EXIT_BUDGET
    return EXIT_OK


def _load_code_words(path: str) -> list[str]:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError:
        return [line.strip() for line in text.splitlines() if line.strip()]
    if isinstance(payload, dict):
        return list(payload.get("witness", []))
    if isinstance(payload, list):
        return [str(item) for item in payload]
    raise ValueError(f"cannot read a code from {path!r}")


def _cmd_export(args) -> int:
    graph = build_graph(args.family, args.n)
    code = None
    if args.highlight_code is not None:
        words = []
        for text in _load_code_words(args.highlight_code):
            w = BitWord.from_string(text)
            if w.length != graph.n or w.bits not in graph.index:
                raise ValueError(f"code word {text!r} is not a vertex of {args.family} n={args.n}")
            words.append(w)
        code = VertexSet.from_words(graph, words)
    if args.format == "dot":
        _emit(graph.to_dot(code), args.output)
    else:
        _emit(json.dumps(graph.to_json_dict(code)) + "\n", args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubecodes",
        description="Perfect codes in hypercubes, Fibonacci/Lucas cubes, and their circular generalizations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    family_help = "family spec: qn | fib | lucas | fib1s:<s> | lucas1s:<s>"

    p_enum = sub.add_parser("enumerate", help="list the members of a family")
    p_enum.add_argument("--family", type=_family_arg, required=True, help=family_help)
    p_enum.add_argument("--n", type=int, required=True, help="word length")
    p_enum.add_argument("--count", action="store_true", help="print only the cardinality")
    p_enum.add_argument("--output", "-o", default=None, help="write to file instead of stdout")
    p_enum.set_defaults(func=_cmd_enumerate)

    p_search = sub.add_parser("search", help="search perfect codes by exact cover")
    p_search.add_argument("--family", type=_family_arg, required=True, help=family_help)
    p_search.add_argument("--n", type=int, required=True, help="word length")
    p_search.add_argument(
        "--mode", choices=("first", "prove-none", "enumerate"), default="first"
    )
    p_search.add_argument(
        "--avoid-circular-run",
        type=int,
        metavar="S",
        default=None,
        help="restrict codewords to words with no cyclic run of S ones",
    )
    p_search.add_argument("--budget-nodes", type=int, default=None)
    p_search.add_argument("--budget-seconds", type=float, default=None)
    p_search.add_argument("--seed", type=int, default=0, help="search-order seed (0 = canonical)")
    p_search.add_argument("--threads", type=int, default=1)
    p_search.add_argument("--output", "-o", default=None)
    p_search.set_defaults(func=_cmd_search)

    p_verify = sub.add_parser("verify", help="run claim checks")
    p_verify.add_argument(
        "--claim",
        required=True,
        choices=CLAIM_IDS + ("all",),
        help="claim id to check, or all: " + ", ".join(CLAIM_IDS),
    )
    p_verify.add_argument("--n-max", type=int, default=None)
    p_verify.add_argument("--p", type=int, default=None, help="single Hamming parameter p")
    p_verify.add_argument("--p-set", type=_int_list_arg, default=None, help="e.g. 2,3,4")
    p_verify.add_argument("--n-set", type=_int_list_arg, default=None, help="e.g. 3,7")
    p_verify.add_argument("--budget-nodes", type=int, default=None)
    p_verify.add_argument("--budget-seconds", type=float, default=None)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--output", "-o", default=None)
    p_verify.set_defaults(func=_cmd_verify)

    p_export = sub.add_parser("export", help="export a graph as DOT or JSON")
    p_export.add_argument("--family", type=_family_arg, required=True, help=family_help)
    p_export.add_argument("--n", type=int, required=True, help="word length")
    p_export.add_argument("--format", choices=("dot", "json"), default="dot")
    p_export.add_argument(
        "--highlight-code",
        metavar="FILE",
        default=None,
        help="overlay a code: JSON search outcome, JSON array, or one word per line",
    )
    p_export.add_argument("--output", "-o", default=None)
    p_export.set_defaults(func=_cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as e:
        print(f"cubecodes: resource limit: {e}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, OSError) as e:
        print(f"cubecodes: error: {e}", file=sys.stderr)
        return EXIT_ERROR


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
