"""Command-line entry point: ``signless-main <command> ...``.

Exit status is 0 on success, 1 when a check finds a discrepancy, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, TextIO

from .families import EXPECTED_PARAMS, FAMILY_NAMES, BadParameters, make_family, parse_family, target_families
from .graph import (
    CoreEmpty,
    Graph,
    GraphError,
    degree_profile,
    delete_pendants,
    is_bicyclic,
    is_connected,
    min_degree,
    parse_edgelist,
    parse_graph6,
    to_edgelist,
    to_graph6,
)
from .parabolic import Parabolic, audit_lemmas, check_parabolic, verdict_json
from .spectra import (
    DEFAULT_CLUSTER_TOL,
    DEFAULT_JACOBI_TOL,
    DEFAULT_MAIN_TOL,
    graph_spectrum,
    spectrum_json,
)
from .enumerate import EnumerationConfig, bicyclic_counts, enumerate_bicyclic, equivalence_sweep, verify_classification

EXIT_OK, EXIT_DISCREPANCY, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _open_input(path: str) -> TextIO:
    if path == "-":
        return sys.stdin
    try:
        return open(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _read_graphs(path: str, fmt: str) -> Iterator[Graph]:
    fh = _open_input(path)
    try:
        if fmt == "edgelist":
            yield parse_edgelist(fh.read())
            return
        for line in fh:
            if line.strip():
                yield parse_graph6(line)
    finally:
        if fh is not sys.stdin:
            fh.close()


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True), flush=True)


def _verdict_with_audit(g: Graph) -> dict:
    verdict = check_parabolic(g)
    audit = audit_lemmas(g, verdict.params) if isinstance(verdict, Parabolic) and is_bicyclic(g) else None
    return verdict_json(verdict, audit)


def analyze_graph(g: Graph, tols: dict) -> dict:
    prof = degree_profile(g)
    out = {"graph6": to_graph6(g), "degrees": list(prof.degrees), "two_walk_sums": list(prof.two_walk_sums)}
    out.update(spectrum_json(g, graph_spectrum(g, **tols)))
    out["parabolic"] = _verdict_with_audit(g)
    core = None
    if is_connected(g) and g.n >= 3:
        try:
            dec = delete_pendants(g)
            core = {
                "graph6": to_graph6(dec.core),
                "n": dec.core.n,
                "min_degree": min_degree(dec.core),
                "low_degree_core": min_degree(dec.core) < 2,
            }
        except CoreEmpty:
            core = None
    out["pendant_core"] = core
    return out


def _tols(args) -> dict:
    return {"tol": args.tol_jacobi, "cluster_tol": args.tol_cluster, "main_tol": args.tol_main}


def cmd_analyze(args) -> int:
    for g in _read_graphs(args.input, args.format):
        _emit(analyze_graph(g, _tols(args)))
    return EXIT_OK


def cmd_parabolic(args) -> int:
    for g in _read_graphs(args.input, args.format):
        out = {"graph6": to_graph6(g)}
        out.update(_verdict_with_audit(g))
        _emit(out)
    return EXIT_OK


def check_all_families() -> list[dict]:
    rows = []
    for name, g in target_families(12).items():
        want = EXPECTED_PARAMS["H" if name.startswith("H") else name]
        verdict = check_parabolic(g)
        got = (verdict.a, verdict.b) if isinstance(verdict, Parabolic) else None
        spec = graph_spectrum(g)
        rows.append(
            {
                "family": name,
                "graph6": to_graph6(g),
                "expected": list(want),
                "found": list(got) if got else None,
                "main_count_exact": spec.exact_main_count,
                "main_values": spec.main_values,
                "ok": got == want and spec.exact_main_count == 2,
            }
        )
    return rows


def cmd_families(args) -> int:
    if args.action == "list":
        for name in FAMILY_NAMES:
            print(name)
        return EXIT_OK
    if args.action == "emit":
        if not args.name:
            raise InputError("families emit needs a family name")
        g = make_family(parse_family(args.name))
        sys.stdout.write(to_graph6(g) + "\n" if args.format == "graph6" else to_edgelist(g))
        return EXIT_OK
    rows = check_all_families()
    for row in rows:
        _emit(row)
    return EXIT_OK if all(r["ok"] for r in rows) else EXIT_DISCREPANCY


def _config(args) -> EnumerationConfig:
    try:
        return EnumerationConfig(max_n=args.max_n, parallel=args.parallel, emit_graph6=getattr(args, "emit", False))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_enumerate(args) -> int:
    cfg = _config(args)
    graphs = enumerate_bicyclic(cfg)
    if cfg.emit_graph6:
        for g in graphs:
            print(to_graph6(g))
    else:
        _emit({"max_n": cfg.max_n, "bicyclic_counts": {str(k): v for k, v in bicyclic_counts(graphs).items()}})
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_classification(_config(args), cross_check=not args.no_cross_check)
    text = report.dumps()
    print(text)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text + "\n")
    if args.graph6:
        with open(args.graph6, "w") as fh:
            fh.write(report.graph6_stream())
    return EXIT_OK if report.ok else EXIT_DISCREPANCY


def cmd_sweep(args) -> int:
    try:
        report = equivalence_sweep(args.exhaustive_n, args.samples, args.seed, cross_check=not args.no_cross_check)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    return EXIT_OK if report.ok else EXIT_DISCREPANCY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="signless-main", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", nargs="?", default="-", help="file path or '-' for stdin")
        p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")

    p = sub.add_parser("analyze", help="spectrum, main count and parabolic verdict per graph")
    add_input(p)
    p.add_argument("--tol-jacobi", type=float, default=DEFAULT_JACOBI_TOL)
    p.add_argument("--tol-cluster", type=float, default=DEFAULT_CLUSTER_TOL)
    p.add_argument("--tol-main", type=float, default=DEFAULT_MAIN_TOL)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("parabolic", help="parabolic verdict (with lemma audit for bicyclic graphs)")
    add_input(p)
    p.set_defaults(func=cmd_parabolic)

    p = sub.add_parser("families", help="list, emit or check the named families")
    p.add_argument("action", choices=["list", "emit", "check-all"])
    p.add_argument("name", nargs="?")
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("enumerate", help="connected bicyclic graphs up to isomorphism")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--emit", action="store_true", help="print graph6 lines instead of counts")
    p.add_argument("--parallel", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check the two-main bicyclic classification up to --max-n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--graph6", metavar="PATH", help="write the two-main graphs as a graph6 stream")
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--no-cross-check", action="store_true", help="skip the floating-point mainness check")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="main count vs parabolic verdict over small and random graphs")
    p.add_argument("--exhaustive-n", type=int, default=6)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--no-cross-check", action="store_true")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GraphError, BadParameters) as exc:
        print(f"signless-main: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
