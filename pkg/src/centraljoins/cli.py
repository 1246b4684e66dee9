"""Command-line interface.

Subcommands: construct, spectrum, invariants, cospectral, verify.  The
spectrum and invariants commands take a base graph (and optionally a
partner) and operate on the composite selected by ``--op``; ``--op none``
works on the input graph as-is.  Exit codes: 0 success, 1 mathematical
precondition violated (the message names the guard), 2 I/O or parse
failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cospectral import SpectrumMismatch, check_cospectral
from .errors import GraphInputError, MathGuardError, ParseError
from .graphs import (
    Graph,
    as_regular,
    central_edge_join,
    central_graph,
    central_vertex_join,
)
from .invariants import (
    degree_kirchhoff_resistance_oracle,
    kemeny_cej_closed,
    kemeny_central_closed,
    kemeny_cvj_closed,
    kemeny_from_spectrum,
)
from .io import read_graph, write_graph
from .numeric import Spectrum, spectra_equal
from .spectra import (
    cej_spectrum_closed,
    central_spectrum_closed,
    cvj_spectrum_closed,
    direct_spectrum,
    regular_nl_spectrum,
)
from .suite import format_results_table, run_default_suite

CROSS_METHOD_TOL = 1e-8


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="centraljoins",
        description="central graph constructions, normalized Laplacian spectra, "
        "and random-walk invariants",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a composite graph and write it out")
    p.add_argument("--op", required=True, choices=("central", "cvj", "cej"))
    p.add_argument("--g1", required=True, help="base graph file")
    p.add_argument("--g2", help="partner graph file (cvj/cej only)")
    p.add_argument("--out", required=True, help="output path")
    p.add_argument("--format", default="edgelist", choices=("edgelist", "graph6"))

    p = sub.add_parser("spectrum", help="normalized Laplacian spectrum of a composite")
    p.add_argument("--input", required=True, help="base graph file")
    p.add_argument("--op", default="central", choices=("none", "central", "cvj", "cej"))
    p.add_argument("--g2", help="partner graph file (cvj/cej only)")
    p.add_argument("--method", default="both", choices=("direct", "closed", "both"))
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("invariants", help="Kemeny's constant and degree Kirchhoff index")
    p.add_argument("--input", required=True, help="base graph file")
    p.add_argument("--op", default="central", choices=("none", "central", "cvj", "cej"))
    p.add_argument("--g2", help="partner graph file (cvj/cej only)")
    p.add_argument("--route", default="all", choices=("spectral", "closed", "oracle", "all"))
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("cospectral", help="compare the spectra of two graphs")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--tol", type=float, default=1e-7)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run the built-in family suite")
    p.add_argument("--suite", default="default", choices=("default",))
    p.add_argument("--json", action="store_true")
    return parser


def _composite(op: str, g1: Graph, g2: Graph | None) -> Graph:
    if op in ("cvj", "cej") and g2 is None:
        raise GraphInputError(f"--op {op} requires --g2")
    if op == "central":
        return central_graph(g1)[0]
    if op == "cvj":
        return central_vertex_join(g1, g2)[0]
    if op == "cej":
        return central_edge_join(g1, g2)[0]
    return g1


def _closed_spectrum(op: str, g1: Graph, g2: Graph | None) -> Spectrum:
    if op == "none":
        return regular_nl_spectrum(as_regular(g1))
    if op == "central":
        return central_spectrum_closed(as_regular(g1)).assembled
    if op == "cvj":
        return cvj_spectrum_closed(as_regular(g1), as_regular(g2)).assembled
    return cej_spectrum_closed(as_regular(g1), as_regular(g2)).assembled


def _closed_kemeny(op: str, g1: Graph, g2: Graph | None) -> float:
    if op == "none":
        return kemeny_from_spectrum(regular_nl_spectrum(as_regular(g1)))
    if op == "central":
        return kemeny_central_closed(as_regular(g1))
    if op == "cvj":
        return kemeny_cvj_closed(as_regular(g1), as_regular(g2))
    return kemeny_cej_closed(as_regular(g1), as_regular(g2))


def _spectrum_json(s: Spectrum) -> list[dict]:
    return [{"value": v, "multiplicity": k} for v, k in s.items]


def _print_spectrum(s: Spectrum) -> None:
    for value, mult in s.items:
        print(f"  {value:.12g}  (multiplicity {mult})")


def _cmd_construct(args) -> int:
    g1 = read_graph(args.g1)
    g2 = read_graph(args.g2) if args.g2 else None
    composite = _composite(args.op, g1, g2)
    write_graph(composite, args.out, args.format)
    print(f"wrote {args.op} composite: n={composite.n} m={composite.m} -> {args.out}")
    return 0


def _cmd_spectrum(args) -> int:
    g1 = read_graph(args.input)
    g2 = read_graph(args.g2) if args.g2 else None
    subject = _composite(args.op, g1, g2)
    report: dict = {"n": subject.n, "m": subject.m, "method": args.method}
    deviation = None
    if args.method in ("direct", "both"):
        spectrum = direct_spectrum(subject)
    if args.method == "closed":
        spectrum = _closed_spectrum(args.op, g1, g2)
    if args.method == "both":
        closed = _closed_spectrum(args.op, g1, g2)
        _, deviation = spectra_equal(spectrum, closed, CROSS_METHOD_TOL)
        report["deviations"] = {"closed_vs_direct": deviation}
    report["eigenvalues"] = _spectrum_json(spectrum)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(f"graph: n={subject.n} m={subject.m} (op={args.op}, method={args.method})")
        _print_spectrum(spectrum)
        if deviation is not None:
            print(f"closed vs direct max deviation: {deviation:.3e}")
    return 0


def _cmd_invariants(args) -> int:
    g1 = read_graph(args.input)
    g2 = read_graph(args.g2) if args.g2 else None
    subject = _composite(args.op, g1, g2)
    m = subject.m
    values: dict[str, tuple[float, float]] = {}
    if args.route in ("spectral", "all"):
        k = kemeny_from_spectrum(direct_spectrum(subject))
        values["spectral"] = (k, 2.0 * m * k)
    if args.route in ("closed", "all"):
        k = _closed_kemeny(args.op, g1, g2)
        values["closed_form"] = (k, 2.0 * m * k)
    if args.route in ("oracle", "all"):
        kf = degree_kirchhoff_resistance_oracle(subject)
        values["resistance_oracle"] = (kf / (2.0 * m), kf)

    primary = values.get("spectral") or next(iter(values.values()))
    report: dict = {
        "n": subject.n,
        "m": m,
        "method": args.route,
        "kemeny": primary[0],
        "degree_kirchhoff": primary[1],
    }
    if len(values) > 1:
        names = list(values)
        report["deviations"] = {
            f"{na}_vs_{nb}": abs(values[na][0] - values[nb][0])
            for i, na in enumerate(names)
            for nb in names[i + 1:]
        }
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(f"graph: n={subject.n} m={m} (op={args.op})")
        for name, (k, kf) in values.items():
            print(f"  {name}: kemeny={k:.12g}  degree_kirchhoff={kf:.12g}")
        for key, dev in report.get("deviations", {}).items():
            print(f"  {key}: {dev:.3e}")
    return 0


def _cmd_cospectral(args) -> int:
    a = read_graph(args.a)
    b = read_graph(args.b)
    result = check_cospectral(a, b, args.tol)
    if isinstance(result, SpectrumMismatch):
        if args.json:
            print(json.dumps({"cospectral": False, "max_deviation": result.max_deviation}))
        else:
            print(f"not cospectral: max deviation {result.max_deviation:.3e}")
        return 0
    if args.json:
        print(result.to_json())
    else:
        print(f"cospectral within {result.tol:.1e} (max deviation {result.max_deviation:.3e})")
        witness = result.nonisomorphism_witness
        if witness is None:
            print("no cheap invariant separates the graphs; isomorphism undetermined")
        else:
            print(f"non-isomorphism witness: {witness.invariant} differs")
    return 0


def _cmd_verify(args) -> int:
    results = run_default_suite()
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "subject": r.subject,
                        "check": r.check,
                        "status": r.status,
                        "detail": r.detail,
                        "deviation": r.deviation,
                    }
                    for r in results
                ],
                indent=2,
            )
        )
    else:
        print(format_results_table(results))
    return 0 if all(r.ok for r in results) else 1


_COMMANDS = {
    "construct": _cmd_construct,
    "spectrum": _cmd_spectrum,
    "invariants": _cmd_invariants,
    "cospectral": _cmd_cospectral,
    "verify": _cmd_verify,
}


def run(argv: list[str] | None = None) -> int:
    """Parse arguments and dispatch; returns the process exit code."""
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except MathGuardError as exc:
        print(f"error: {type(exc).__name__.removesuffix('Error')}: {exc}", file=sys.stderr)
        return 1
    except (ParseError, GraphInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
