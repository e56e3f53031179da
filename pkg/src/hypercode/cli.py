"""Command-line interface.

Subcommands:

* ``family``        generate a built-in hypergraph family as a text file
* ``analyze``       code parameters and self-duality flags for an input file
* ``verify``        run the built-in verification suite
* ``selfdual-scan`` seeded random search for self-orthogonal/self-dual codes
* ``poly``          polynomial helpers (gcd, cyclic code dimension)

Files use 0-based vertex indices; human-facing output (reports, findings)
uses 1-based labels.  Exit codes for ``analyze``: 2 on parse failure, 3 on
engine disagreement, 4 on an exceeded enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from .analysis import EngineDisagreement, analyze_hypergraph, analyze_matrix
from .codes import (
    from_generator,
    graph_self_duality_criterion,
    is_self_dual,
    is_self_orthogonal,
    structural_self_orthogonality,
)
from .gf2core import parse_matrix
from .gf2poly import GF2Poly, cyclic_code_dimension, poly_gcd
from .hypergraph import (
    Hypergraph,
    block_row,
    circulant_hypergraph,
    complete_3partite,
    fano_circulant,
    format_hypergraph,
    incidence_matrix,
    is_connected,
    parse_hypergraph,
    projective_geometry,
)
from .limits import EnumerationCapError
from .verify import run_criteria

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_DISAGREEMENT = 3
EXIT_CAP = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercode",
        description="Binary linear codes from hypergraph incidence matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    family = sub.add_parser("family", help="generate a built-in hypergraph family")
    family.add_argument(
        "kind",
        choices=["k3partite", "pg", "fano", "circulant", "block-circulant"],
        help="which family to generate",
    )
    family.add_argument("--n", type=int, help="part size (k3partite) or dimension (pg)")
    family.add_argument("--row", help="first row of a circulant incidence matrix, e.g. 1000101")
    family.add_argument("--k", type=int, help="block count for block-circulant")
    family.add_argument("--m", type=int, help="block width for block-circulant")
    family.add_argument("-o", "--output", help="output file (default: stdout)")

    analyze = sub.add_parser("analyze", help="analyze a hypergraph or matrix file")
    analyze.add_argument("input", help="input path, or '-' for stdin")
    analyze.add_argument(
        "--format",
        choices=["auto", "hypergraph", "matrix"],
        default="auto",
        help="input format; auto tries the hypergraph format first",
    )
    analyze.add_argument(
        "--method",
        choices=["codeword", "eonv", "both"],
        default="both",
        help="distance engine; 'both' cross-checks the two",
    )
    analyze.add_argument("--weights", action="store_true", help="include the weight distribution")
    analyze.add_argument(
        "--early-exit",
        type=int,
        metavar="T",
        help="stop at the first weight <= T; the result is then an upper bound",
    )
    analyze.add_argument("--threads", type=int, default=1, help="worker threads (default 1)")
    analyze.add_argument("--csv", action="store_true", help="emit one flat CSV row instead of JSON")

    verify = sub.add_parser("verify", help="run the built-in verification suite")
    verify.add_argument("--only", help="run only the criteria matching this name or tag")

    scan = sub.add_parser(
        "selfdual-scan",
        help="seeded random search for self-orthogonal/self-dual incidence codes",
    )
    scan.add_argument("--n-max", type=int, required=True, help="largest vertex count to sample")
    scan.add_argument("--seed", type=int, required=True, help="RNG seed (reproducibility is required)")
    scan.add_argument("--budget", type=int, default=1000, help="number of samples to draw")
    scan.add_argument("--uniform", type=int, default=2, help="edge size of the sampled hypergraphs")

    poly = sub.add_parser("poly", help="polynomial helpers")
    poly_sub = poly.add_subparsers(dest="poly_command", required=True)
    gcd = poly_sub.add_parser("gcd", help="gcd of two polynomials over GF(2)")
    gcd.add_argument("first", help="ascending coefficient string, e.g. 1000101")
    gcd.add_argument("second", help="ascending coefficient string")
    cyc = poly_sub.add_parser(
        "cyclic-dim", help="dimension of the cyclic code generated by a first row"
    )
    cyc.add_argument("row", help="first row of the circulant, e.g. 1000101")
    cyc.add_argument("--n", type=int, help="code length (default: length of the row string)")

    return parser


def _make_family(args: argparse.Namespace) -> Hypergraph:
    kind = args.kind
    if kind == "k3partite":
        if args.n is None or args.n < 1:
            raise ValueError("k3partite needs --n >= 1")
        return complete_3partite(args.n)
    if kind == "pg":
        if args.n is None or args.n < 3:
            raise ValueError("pg needs --n >= 3")
        return projective_geometry(args.n)
    if kind == "fano":
        return fano_circulant()
    if kind == "circulant":
        if not args.row:
            raise ValueError("circulant needs --row")
        return circulant_hypergraph(args.row)
    if args.k is None or args.m is None or args.k < 1 or args.m < 1:
        raise ValueError("block-circulant needs --k >= 1 and --m >= 1")
    return circulant_hypergraph(block_row(args.k, args.m))


def _cmd_family(args: argparse.Namespace) -> int:
    try:
        hypergraph = _make_family(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    text = format_hypergraph(hypergraph)
    if args.output:
        with open(args.output, "w", encoding="ascii") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as handle:
        return handle.read()


def _cmd_analyze(args: argparse.Namespace) -> int:
    try:
        text = _read_input(args.input)
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_PARSE

    hypergraph = None
    matrix = None
    try:
        if args.format == "hypergraph":
            hypergraph = parse_hypergraph(text)
        elif args.format == "matrix":
            matrix = parse_matrix(text)
        else:
            try:
                hypergraph = parse_hypergraph(text)
            except ValueError:
                matrix = parse_matrix(text)
    except ValueError as exc:
        print(f"error: cannot parse {args.input}: {exc}", file=sys.stderr)
        return EXIT_PARSE

    if args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return EXIT_PARSE

    try:
        if hypergraph is not None:
            report = analyze_hypergraph(
                hypergraph,
                method=args.method,
                weights=args.weights,
                early_exit=args.early_exit,
                threads=args.threads,
            )
        else:
            report = analyze_matrix(
                matrix,
                method=args.method,
                weights=args.weights,
                early_exit=args.early_exit,
                threads=args.threads,
            )
    except EngineDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    sys.stdout.write(report.to_csv() if args.csv else report.to_json() + "\n")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        results = run_criteria(args.only)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    failed = 0
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{status} {result.name}: {result.detail} ({result.elapsed:.2f}s)")
        if not result.passed:
            failed += 1
    print(f"{len(results) - failed}/{len(results)} criteria passed")
    return EXIT_OK if failed == 0 else EXIT_FAILURE


def _cmd_selfdual_scan(args: argparse.Namespace) -> int:
    if args.n_max < 2:
        print("error: --n-max must be at least 2", file=sys.stderr)
        return EXIT_PARSE
    if args.uniform < 1 or args.uniform > args.n_max:
        print("error: --uniform must lie between 1 and --n-max", file=sys.stderr)
        return EXIT_PARSE
    if args.budget < 0:
        print("error: --budget must be non-negative", file=sys.stderr)
        return EXIT_PARSE

    rng = random.Random(args.seed)
    low = max(2, args.uniform)
    scanned = 0
    findings = 0
    for _ in range(args.budget):
        n = rng.randint(low, args.n_max)
        m = rng.randint(1, 2 * n)
        edges = tuple(
            tuple(sorted(rng.sample(range(n), args.uniform))) for _ in range(m)
        )
        hypergraph = Hypergraph(n, edges)
        if not is_connected(hypergraph):
            continue
        scanned += 1
        code = from_generator(incidence_matrix(hypergraph))
        self_orth = is_self_orthogonal(code)
        self_dual = is_self_dual(code)
        if not (self_orth or self_dual):
            continue
        findings += 1
        finding = {
            "vertices": n,
            "edge_count": m,
            "edges_1based": [[v + 1 for v in edge] for edge in edges],
            "rank": code.dimension,
            "self_orthogonal": self_orth,
            "self_dual": self_dual,
            "structural_self_orthogonal": structural_self_orthogonality(hypergraph),
        }
        if args.uniform == 2:
            criterion = graph_self_duality_criterion(hypergraph)
            finding["criterion_self_dual"] = criterion
            finding["criterion_agrees"] = criterion == self_dual
        print(json.dumps(finding))
    print(
        f"scanned {scanned} connected samples, {findings} findings",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_poly(args: argparse.Namespace) -> int:
    try:
        if args.poly_command == "gcd":
            result = poly_gcd(GF2Poly.from_string(args.first), GF2Poly.from_string(args.second))
            print(result.to_string())
        else:
            p = GF2Poly.from_string(args.row)
            n = args.n if args.n is not None else len(args.row)
            print(cyclic_code_dimension(p, n))
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "family":
        return _cmd_family(args)
    if args.command == "analyze":
        return _cmd_analyze(args)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "selfdual-scan":
        return _cmd_selfdual_scan(args)
    return _cmd_poly(args)


if __name__ == "__main__":
    sys.exit(main())
