"""Command-line front end: count, verify, generate, and bench.

Exit codes: 0 success, 1 method disagreement, 2 parse error (bad file,
bad family spec, bad flags), 3 method unavailable for the input, 4 subset
oracle over its guard.  The guard defaults to 10^7 subsets and can be
overridden with the TREECOUNT_ORACLE_LIMIT environment variable.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import random
import re
import sys
import time

from . import edgelist, families, kirchhoff, oracle
from .graph import Graph

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_METHOD = 3
EXIT_ORACLE = 4

COUNT_METHODS = ("reduced", "rankone", "temperley", "schur", "formula", "oracle")
VERIFY_METHODS = ("reduced", "rankone", "temperley", "schur", "formula", "oracle", "delcon")


class CliInputError(ValueError):
    """Bad command-line input not caught by argparse itself."""


class MethodUnavailableError(Exception):
    """The requested method cannot run on this input."""


class MismatchError(Exception):
    """Two counting methods returned different values."""


def _subset_limit() -> int:
    raw = os.environ.get("TREECOUNT_ORACLE_LIMIT")
    if raw is None:
        return oracle.DEFAULT_SUBSET_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise CliInputError(f"TREECOUNT_ORACLE_LIMIT must be an integer, got {raw!r}") from None


def _load_input(args) -> tuple[Graph, families.Family | None]:
    if getattr(args, "family", None) and getattr(args, "file", None):
        raise CliInputError("give either --family or --file, not both")
    if getattr(args, "family", None):
        fam = families.parse_family(args.family)
        return fam.graph(), fam
    if getattr(args, "file", None):
        return edgelist.read_edgelist(args.file), None
    raise CliInputError("an input is required: --family or --file")


def _compute(method: str, g: Graph, fam: families.Family | None, limit: int) -> int:
    if method == "reduced":
        return kirchhoff.tau_reduced(g, 1, 1)
    if method == "rankone":
        u = [1] * g.n
        v = [0] * g.n
        v[0] = 1
        return kirchhoff.tau_rank_one(g, u, v)
    if method == "temperley":
        return kirchhoff.tau_temperley(g)
    if method == "schur":
        bp = kirchhoff.find_bipartition(g)
        if bp is None or not bp.rows or not bp.cols:
            raise MethodUnavailableError("schur needs a bipartite graph with two nonempty sides")
        return kirchhoff.tau_bipartite_schur(g, bp)
    if method == "formula":
        if fam is None:
            raise MethodUnavailableError("formula needs a --family input")
        return fam.formula_count()
    if method == "oracle":
        return oracle.tau_subsets(g, limit)
    if method == "delcon":
        return oracle.tau_delcon(oracle.Multigraph.from_graph(g))
    raise CliInputError(f"unknown method {method!r}")


def _applicable_methods(g: Graph, fam: families.Family | None, limit: int) -> list[str]:
    methods = ["reduced", "rankone", "temperley"]
    bp = kirchhoff.find_bipartition(g)
    if bp is not None and bp.rows and bp.cols:
        methods.append("schur")
    if fam is not None:
        methods.append("formula")
    if math.comb(len(g.edges), g.n - 1) <= limit:
        methods.append("oracle")
    methods.append("delcon")
    return methods


def _parse_method_list(text: str, allowed: tuple[str, ...]) -> list[str]:
    methods = [t.strip() for t in text.split(",") if t.strip()]
    if not methods:
        raise CliInputError("empty method list")
    for m in methods:
        if m not in allowed:
            raise CliInputError(f"unknown method {m!r}; choose from {', '.join(allowed)}")
    return methods


def cmd_count(args) -> int:
    g, fam = _load_input(args)
    limit = _subset_limit()
    start = time.perf_counter()
    value = _compute(args.method, g, fam, limit)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    if args.json:
        print(json.dumps({
            "method": args.method,
            "tau": str(value),
            "n": g.n,
            "edges": len(g.edges),
            "elapsed_ms": round(elapsed_ms, 3),
        }))
    else:
        print(f"n={g.n} edges={len(g.edges)} method={args.method} elapsed_ms={elapsed_ms:.3f}")
        print(f"tau = {value}")
    return EXIT_OK


def _run_methods(g: Graph, fam, methods: list[str], limit: int) -> list[tuple[str, int, float]]:
    rows = []
    for method in methods:
        start = time.perf_counter()
        value = _compute(method, g, fam, limit)
        rows.append((method, value, (time.perf_counter() - start) * 1000.0))
    return rows


def _parse_random_spec(tokens: list[str]) -> tuple[int, int]:
    params = {"n": 6, "trials": 20}
    for token in tokens:
        key, sep, value = token.partition("=")
        if not sep or key not in params:
            raise CliInputError(f"bad --random token {token!r}; expected n=K and/or trials=T")
        try:
            params[key] = int(value)
        except ValueError:
            raise CliInputError(f"--random {key} must be an integer, got {value!r}") from None
    if params["n"] < 1 or params["trials"] < 1:
        raise CliInputError("--random n and trials must be >= 1")
    return params["n"], params["trials"]


def _random_connected_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    while True:
        edges = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if rng.random() < p
        ]
        g = Graph(n, edges)
        if g.is_connected():
            return g


def cmd_verify(args) -> int:
    limit = _subset_limit()
    if args.random is not None:
        return _verify_random(args, limit)
    g, fam = _load_input(args)
    methods = _applicable_methods(g, fam, limit)
    if args.methods:
        methods = _parse_method_list(args.methods, VERIFY_METHODS)
    rows = _run_methods(g, fam, methods, limit)
    width = max(len(m) for m, _, _ in rows)
    print(f"{'method'.ljust(width)}  {'tau'.rjust(12)}  elapsed_ms")
    for method, value, ms in rows:
        print(f"{method.ljust(width)}  {str(value).rjust(12)}  {ms:10.3f}")
    values = {value for _, value, _ in rows}
    if len(values) > 1:
        detail = ", ".join(f"{m}={v}" for m, v, _ in rows)
        raise MismatchError(f"methods disagree: {detail}")
    print(f"all methods agree: tau = {values.pop()}")
    return EXIT_OK


def _verify_random(args, limit: int) -> int:
    n, trials = _parse_random_spec(args.random)
    seed = args.seed if args.seed is not None else 0
    rng = random.Random(seed)
    print(f"random corpus: n={n} trials={trials} seed={seed}")
    failures = 0
    for trial in range(1, trials + 1):
        g = _random_connected_graph(rng, n)
        methods = [m for m in _applicable_methods(g, None, limit) if m != "formula"]
        if args.methods:
            methods = _parse_method_list(args.methods, VERIFY_METHODS)
        rows = _run_methods(g, None, methods, limit)
        values = {value for _, value, _ in rows}
        if len(values) > 1:
            failures += 1
            detail = ", ".join(f"{m}={v}" for m, v, _ in rows)
            print(f"trial {trial}: MISMATCH on edges={sorted(g.edges)}: {detail}")
    print(f"agreements: {trials - failures}/{trials}")
    if failures:
        raise MismatchError(f"{failures} of {trials} random trials disagreed (seed={seed})")
    return EXIT_OK


def cmd_generate(args) -> int:
    fam = families.parse_family(args.family)
    text = edgelist.format_edgelist(fam.graph())
    if args.output:
        with open(args.output, "w", encoding="ascii", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


_BARE_PATTERNS = {"complete": "complete:k", "bipartite": "bipartite:k,k"}


def _substitute_size(pattern: str, size: int) -> str:
    if ":" not in pattern:
        if pattern in _BARE_PATTERNS:
            pattern = _BARE_PATTERNS[pattern]
        else:
            raise CliInputError(
                f"bench pattern {pattern!r} needs an explicit 'k' placeholder, e.g. ferrers:kxk"
            )
    # 'k' is the size placeholder; tokens are delimited by ':', ',' and the
    # 'x' of the CxV repetition syntax
    tokens = re.split(r"([:,x])", pattern)
    if "k" not in tokens:
        raise CliInputError(f"bench pattern {pattern!r} contains no 'k' placeholder")
    return "".join(str(size) if token == "k" else token for token in tokens)


def _parse_sizes(text: str) -> list[int]:
    match = re.fullmatch(r"(\d+)(?:\.\.(\d+))?", text)
    if not match:
        raise argparse.ArgumentTypeError(f"sizes must look like A..B, got {text!r}")
    low = int(match.group(1))
    high = int(match.group(2)) if match.group(2) else low
    if low < 1 or high < low:
        raise argparse.ArgumentTypeError(f"bad size range {text!r}")
    return list(range(low, high + 1))


def cmd_bench(args) -> int:
    limit = _subset_limit()
    methods = _parse_method_list(args.methods, VERIFY_METHODS) if args.methods else ["temperley"]
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["family", "size", "method", "tau", "elapsed_ms"])
    for size in args.sizes:
        fam = families.parse_family(_substitute_size(args.family, size))
        g = fam.graph()
        values = {}
        for method, value, ms in _run_methods(g, fam, methods, limit):
            values[method] = value
            writer.writerow([args.family, size, method, str(value), f"{ms:.3f}"])
        if len(set(values.values())) > 1:
            detail = ", ".join(f"{m}={v}" for m, v in values.items())
            raise MismatchError(f"size {size}: methods disagree: {detail}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treecount",
        description="Count spanning trees exactly and cross-check the counting methods.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="count spanning trees of one graph")
    count.add_argument("--family", help="family spec, e.g. complete:5 or threshold:ididd")
    count.add_argument("--file", help="edge-list file (header 'n m', lines 'i j')")
    count.add_argument("--method", choices=COUNT_METHODS, default="temperley")
    count.add_argument("--json", action="store_true", help="emit a JSON report")
    count.set_defaults(func=cmd_count)

    verify = sub.add_parser("verify", help="run all applicable methods and compare")
    verify.add_argument("--family")
    verify.add_argument("--file")
    verify.add_argument("--methods", help="comma-separated subset of methods to run")
    verify.add_argument(
        "--random",
        nargs="+",
        metavar="KEY=VAL",
        help="check random connected graphs, e.g. --random n=6 trials=50",
    )
    verify.add_argument("--seed", type=int, help="seed for the random corpus")
    verify.set_defaults(func=cmd_verify)

    generate = sub.add_parser("generate", help="write a family graph as an edge list")
    generate.add_argument("--family", required=True)
    generate.add_argument("-o", "--output", help="output path (default: stdout)")
    generate.set_defaults(func=cmd_generate)

    bench = sub.add_parser("bench", help="time methods across a size range, as CSV")
    bench.add_argument(
        "--family",
        required=True,
        help="family pattern with 'k' as the size placeholder, e.g. complete or ferrers:kxk",
    )
    bench.add_argument("--sizes", type=_parse_sizes, required=True, metavar="A..B")
    bench.add_argument("--methods", help="comma-separated methods (default: temperley)")
    bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MismatchError as exc:
        print(f"MISMATCH: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (CliInputError, families.FamilySpecError, edgelist.EdgeListParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except MethodUnavailableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_METHOD
    except oracle.OracleTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
