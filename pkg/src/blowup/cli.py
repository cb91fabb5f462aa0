"""Command-line front end.

Subcommands: poly, upoly, check, scan, reproduce, recover.  Graphs come
from an edge-list file (--input), an inline edge list (--edges), a graph6
string (--graph6), or a distance-matrix file (--input with --matrix).
Exit codes: 0 success, 2 input error, 3 property violation, 4 capacity
exceeded.  All randomness is seeded (--seed, default 0) and echoed in the
output; the BLOWUP_MAX_K environment variable overrides the capacity caps.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import graphs, matroids, polynomials, reproduce, stability
from .errors import BlowupError, CapacityError, ParseError
from .graphs import DistMatrix, Graph
from .polynomials import MultiAffinePoly, graph_blowup_polynomial

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VIOLATION = 3
EXIT_CAPACITY = 4

BATTERIES = ("stability", "equivalence", "matroid", "matroid-prime", "all")


def _add_input_options(sub):
    sub.add_argument("--input", metavar="FILE", help="read the graph from FILE")
    sub.add_argument("--edges", metavar="STR", help="inline edge list, ';' separated")
    sub.add_argument("--graph6", metavar="STR", help="one graph6 record")
    sub.add_argument(
        "--matrix",
        action="store_true",
        help="treat --input as a distance-matrix file instead of an edge list",
    )
    sub.add_argument(
        "--skip-metric-check",
        action="store_true",
        help="with --matrix: only enforce symmetry and the zero diagonal",
    )


def _add_sampling_options(sub):
    sub.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    sub.add_argument(
        "--samples", type=int, default=stability.DEFAULT_SAMPLES,
        help="sample count for the stability certificates",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blowup",
        description="Exact blowup polynomials of graphs and their invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser("poly", help="emit the multivariate blowup polynomial")
    _add_input_options(p_poly)
    p_poly.add_argument("--json", action="store_true", help="emit JSON")
    p_poly.add_argument("--univariate", action="store_true", help="also emit the diagonal specialization")
    p_poly.add_argument("--homogenized", action="store_true", help="also emit the homogenization")

    p_upoly = sub.add_parser("upoly", help="emit the univariate blowup polynomial")
    _add_input_options(p_upoly)
    p_upoly.add_argument("--json", action="store_true")

    p_check = sub.add_parser("check", help="run a property battery on one graph")
    _add_input_options(p_check)
    _add_sampling_options(p_check)
    p_check.add_argument("--battery", choices=BATTERIES, default="all")
    p_check.add_argument("--json", action="store_true")

    p_scan = sub.add_parser("scan", help="run a battery over a graph corpus")
    p_scan.add_argument("--n", type=int, metavar="MAX", help="enumerate connected graphs on <= MAX vertices")
    p_scan.add_argument("--input", metavar="FILE", help="stream graph6 records, one per line")
    p_scan.add_argument("--dedup", action="store_true", help="one representative per isomorphism class")
    p_scan.add_argument("--battery", choices=BATTERIES, default="equivalence")
    _add_sampling_options(p_scan)

    p_rep = sub.add_parser("reproduce", help="re-run every desk-scale reproduction check")
    p_rep.add_argument("--json", action="store_true")

    p_rec = sub.add_parser("recover", help="rebuild the graph from a polynomial JSON document")
    p_rec.add_argument("--input", metavar="FILE", help="polynomial JSON (default: stdin)")
    p_rec.add_argument("--json", action="store_true")

    return parser


# ---------------------------------------------------------------------------
# input plumbing
# ---------------------------------------------------------------------------

def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def _parse_distance_file(text: str, validate_metric: bool) -> DistMatrix:
    rows = []
    n = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None and len(line.split()) == 1:
            n = int(line)
            continue
        rows.append([int(tok) for tok in line.split()])
    if n is not None and len(rows) != n:
        raise ParseError(f"expected {n} matrix rows, got {len(rows)}")
    if not rows:
        raise ParseError("empty distance-matrix input")
    return DistMatrix(rows, validate_metric=validate_metric)


def _load_metric(args) -> tuple[DistMatrix, Graph | None, str | None]:
    """Resolve the input options to (distance matrix, graph if any, note)."""
    chosen = [opt for opt in (args.input, args.edges, args.graph6) if opt]
    if len(chosen) != 1:
        raise ParseError("provide exactly one of --input, --edges, --graph6")
    if args.graph6:
        g = graphs.parse_graph6(args.graph6)
    elif args.edges:
        g = graphs.parse_edge_list(args.edges)
    elif args.matrix:
        d = _parse_distance_file(_read_text(args.input), not args.skip_metric_check)
        return d, None, "metric-input"
    else:
        g = graphs.parse_edge_list(_read_text(args.input))
    return graphs.distance_matrix(g), g, None


def _load_graph(args) -> Graph:
    d, g, _ = _load_metric(args)
    if g is None:
        raise ParseError("this command needs a graph, not a raw metric")
    return g


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_poly(args) -> int:
    d, _, note = _load_metric(args)
    p = polynomials.blowup_polynomial(d)
    if args.json:
        doc = p.to_json_dict()
        if note:
            doc["note"] = note
        if args.univariate:
            u = p.univariate()
            doc["univariate"] = [str(c) for c in u.coeffs]
        if args.homogenized:
            h = p.homogenize()
            doc["homogenized"] = {str(m): str(h.coeffs[m]) for m in sorted(h.coeffs)}
        print(json.dumps(doc))
    else:
        if note:
            print(f"# {note}")
        print(f"p = {p.pretty()}")
        if args.univariate:
            print(f"u coefficients (low degree first): {list(p.univariate().coeffs)}")
        if args.homogenized:
            h = p.homogenize()
            print(f"homogenized coefficients by subset: {dict(sorted(h.coeffs.items()))}")
    return EXIT_OK


def cmd_upoly(args) -> int:
    d, _, note = _load_metric(args)
    u = polynomials.blowup_polynomial(d).univariate()
    if args.json:
        doc = {"degree": u.degree, "coeffs": [str(c) for c in u.coeffs]}
        if note:
            doc["note"] = note
        print(json.dumps(doc))
    else:
        if note:
            print(f"# {note}")
        print(f"u coefficients (low degree first): {list(u.coeffs)}")
    return EXIT_OK


def _run_battery(g: Graph, battery: str, seed: int, samples: int) -> dict:
    p = graph_blowup_polynomial(g)
    doc: dict = {"k": g.k, "battery": battery, "seed": seed, "samples": samples}
    passed = True
    if battery in ("stability", "all"):
        rayleigh = stability.rayleigh_sample_check(p, seed, count=samples)
        line = stability.line_realroot_check(p, seed, count=samples)
        doc["stability"] = {
            "rayleigh": rayleigh.to_json_dict(),
            "line": line.to_json_dict(),
        }
        passed = passed and rayleigh.passed and line.passed
    if battery in ("equivalence", "all"):
        report = stability.equivalence_report(g, seed, samples=samples)
        doc["equivalence"] = report.to_json_dict()
        passed = passed and report.consistent
    if battery in ("matroid", "all"):
        witness = matroids.is_delta_matroid(matroids.support_family(p))
        doc["matroid"] = {"support_delta_matroid": witness is None}
        if witness is not None:
            doc["matroid"]["witness"] = list(witness)
            passed = False
    if battery in ("matroid-prime", "all"):
        prime: dict = {}
        for kind in (1, 2):
            fam = matroids.twin_obstruction_family(g, kind)
            witness = matroids.is_delta_matroid(fam)
            entry = {"delta_matroid": witness is None}
            if witness is not None:
                entry["witness"] = list(witness)
                passed = False
            prime[f"kind{kind}"] = entry
        doc["matroid_prime"] = prime
    doc["passed"] = passed
    return doc


def cmd_check(args) -> int:
    g = _load_graph(args)
    doc = _run_battery(g, args.battery, args.seed, args.samples)
    if args.json:
        print(json.dumps(doc))
    else:
        for key, val in doc.items():
            print(f"{key}: {val}")
    return EXIT_OK if doc["passed"] else EXIT_VIOLATION


def _scan_sources(args):
    if (args.n is None) == (args.input is None):
        raise ParseError("scan needs exactly one of --n or --input")
    if args.n is not None:
        for n in range(1, args.n + 1):
            for g in graphs.enumerate_connected_graphs(n, dedup=args.dedup):
                yield g, None
        return
    with open(args.input, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield graphs.parse_graph6(line), None
            except ParseError as exc:
                yield None, f"line {lineno}: {exc}"


def cmd_scan(args) -> int:
    total = passed = failed = bad_input = 0
    for g, err in _scan_sources(args):
        if err is not None:
            bad_input += 1
            print(json.dumps({"error": err}))
            continue
        total += 1
        doc = _run_battery(g, args.battery, args.seed, args.samples)
        doc["graph"] = {"k": g.k, "edges": g.edges()}
        if doc["passed"]:
            passed += 1
        else:
            failed += 1
        print(json.dumps(doc))
    print(json.dumps({
        "summary": {"graphs": total, "passed": passed, "failed": failed,
                    "parse_errors": bad_input},
    }))
    if bad_input:
        return EXIT_INPUT
    return EXIT_OK if failed == 0 else EXIT_VIOLATION


def cmd_reproduce(args) -> int:
    results = reproduce.run_all()
    failures = [r for r in results if not r.passed]
    if args.json:
        print(json.dumps([r.to_json_dict() for r in results]))
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}")
        print(f"{len(results) - len(failures)}/{len(results)} checks passed")
        for r in failures:
            print(f"FAILED: {r.name}")
    return EXIT_OK if not failures else EXIT_VIOLATION


def cmd_recover(args) -> int:
    text = _read_text(args.input) if args.input else sys.stdin.read()
    try:
        p = MultiAffinePoly.from_json(text)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"bad polynomial document: {exc}") from None
    g = polynomials.recover_graph(p)
    if args.json:
        print(json.dumps({"k": g.k, "edges": g.edges()}))
    else:
        print(f"n={g.k} base=1")
        for u, v in sorted(g.edges()):
            print(f"{u + 1} {v + 1}")
    return EXIT_OK


COMMANDS = {
    "poly": cmd_poly,
    "upoly": cmd_upoly,
    "check": cmd_check,
    "scan": cmd_scan,
    "reproduce": cmd_reproduce,
    "recover": cmd_recover,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except BlowupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
