"""Command-line front end.

JSON reports go to stdout, human-readable notes to stderr. Exit codes: 0
pass, 1 property or bound violation, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from . import edgelist
from .bounds import bound_main1, bound_tw
from .chordal import NotChordalError, chordless_cycle, clique_number_chordal, is_chordal, mcs_order
from .exact import color_distances, coloring_report, exact_color
from .facefill import face_fill_gadget, verify_distance_preservation
from .generators import MODELS, GenSpec, generate
from .graph import GraphError, exact_distance_graph, max_degree
from .oracle import TooLargeError, brute_chromatic_number
from .props import SUITES, run_suite

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    def __init__(self, message: str, details: dict | None = None) -> None:
        super().__init__(message)
        self.details = details or {}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2 as well; keep JSON on stdout
        raise UsageError(message)


def _digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _load(path: str):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return edgelist.loads(data.decode("utf-8")), _digest(data)
    except (GraphError, UnicodeDecodeError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _parse_set(raw: str | None) -> list[int] | None:
    if raw is None:
        return None
    try:
        return [int(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"--set expects comma-separated integers, got {raw!r}") from None


def cmd_gen(args) -> tuple[dict, int]:
    params = {
        name: getattr(args, name)
        for name in ("n", "k", "delta", "radius")
        if getattr(args, name) is not None
    }
    spec = GenSpec(args.model, params, args.seed)
    try:
        G = generate(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = edgelist.dumps(G)
    result = {"model": args.model, "params": params, "seed": args.seed, "n": G.n, "m": G.m}
    if args.out is None:
        sys.stdout.write(text)
        return {}, EXIT_PASS
    try:
        Path(args.out).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc.strerror}") from None
    result["out"] = args.out
    result["digest"] = _digest(text.encode("utf-8"))
    return result, EXIT_PASS


def cmd_color(args) -> tuple[dict, int]:
    G, _ = _load(args.graph)
    S = _parse_set(args.set)
    try:
        if S is None:
            coloring, report = exact_color(G, args.p)
        else:
            coloring, report = color_distances(G, args.p, S)
    except NotChordalError as exc:
        raise UsageError(
            f"{args.graph}: graph is not chordal; induced cycle {exc.witness}",
            {"induced_cycle": exc.witness},
        ) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ok = report.proper and report.colors_used <= report.bound
    return coloring_report(G, coloring, report), EXIT_PASS if ok else EXIT_FAIL


def cmd_chi(args) -> tuple[dict, int]:
    G, _ = _load(args.graph)
    if args.p < 1:
        raise UsageError("--p must be >= 1")
    H = exact_distance_graph(G, args.p)
    try:
        chi = brute_chromatic_number(H, max_n=args.max_n)
    except TooLargeError as exc:
        raise UsageError(str(exc)) from None
    result = {"n": G.n, "p": args.p, "chi": chi, "chordal": is_chordal(G)}
    ok = True
    if result["chordal"]:
        t = clique_number_chordal(G, mcs_order(G))
        delta = max_degree(G)
        bound = bound_main1(t, args.p, delta) if t >= 2 else 1
        ok = chi <= bound
        result.update(
            t=t,
            delta=delta,
            bound=bound,
            bound_tw=bound_tw(t - 1, args.p, delta) if t - 1 >= 2 else None,
        )
    else:
        result["induced_cycle"] = chordless_cycle(G)
    result["ok"] = ok
    return result, EXIT_PASS if ok else EXIT_FAIL


def cmd_props(args) -> tuple[dict, int]:
    G, _ = _load(args.graph)
    results = run_suite(G, args.suite)
    for r in results:
        print(f"{r.name}: {'pass' if r.ok else 'FAIL'} ({r.checked} checks)", file=sys.stderr)
    ok = all(r.ok for r in results)
    return {"n": G.n, "suites": [r.as_dict() for r in results]}, EXIT_PASS if ok else EXIT_FAIL


def cmd_facefill(args) -> tuple[dict, int]:
    try:
        g = face_fill_gadget(args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = {
        "k": g.k,
        "n": g.graph.n,
        "m": g.graph.m,
        "outer": list(g.outer),
        "inner": list(g.inner),
        "edges": [list(e) for e in g.graph.edges()],
    }
    code = EXIT_PASS
    if args.check:
        preserved = verify_distance_preservation(g)
        result["distances_preserved"] = preserved
        print(f"face fill k={g.k}: {'pass' if preserved else 'FAIL'}", file=sys.stderr)
        code = EXIT_PASS if preserved else EXIT_FAIL
    return result, code


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="exactchroma", description=__doc__.splitlines()[0])
    parser.add_argument("--timing", action="store_true", help="add wall-clock timing to the JSON report")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="generate a graph in edge-list format")
    gen.add_argument("--model", required=True, choices=MODELS)
    gen.add_argument("--n", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--delta", type=int)
    gen.add_argument("--radius", type=int)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", help="write here and print a JSON report (default: edge list to stdout)")
    gen.set_defaults(func=cmd_gen)

    color = sub.add_parser("color", help="colour the exact distance-p graph of a chordal graph")
    color.add_argument("graph")
    color.add_argument("--p", type=int, required=True)
    color.add_argument("--set", help="comma-separated distances S within 1..p")
    color.set_defaults(func=cmd_color)

    chi = sub.add_parser("chi", help="exact chromatic number of the exact distance-p graph")
    chi.add_argument("graph")
    chi.add_argument("--p", type=int, required=True)
    chi.add_argument("--max-n", type=int, default=16)
    chi.set_defaults(func=cmd_chi)

    props = sub.add_parser("props", help="run structural property suites")
    props.add_argument("graph")
    props.add_argument("--suite", default="all", choices=(*SUITES, "all"))
    props.set_defaults(func=cmd_props)

    ff = sub.add_parser("facefill", help="build the face-fill gadget")
    ff.add_argument("--k", type=int, required=True)
    ff.add_argument("--check", action="store_true", help="verify outer distances are preserved")
    ff.set_defaults(func=cmd_facefill)
    return parser


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload) + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    started = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        graph_path = getattr(args, "graph", None)
        digest = _load(graph_path)[1] if graph_path else None
        result, code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit({"command": argv, "input_digest": None, "outcome": "error", "error": str(exc), **exc.details})
        return EXIT_USAGE
    if args.command == "gen" and args.out is None:
        return code
    report = {
        "command": argv,
        "input_digest": digest,
        "outcome": "pass" if code == EXIT_PASS else "fail",
        "result": result,
    }
    if args.timing:
        report["seconds"] = round(time.perf_counter() - started, 6)
    _emit(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
