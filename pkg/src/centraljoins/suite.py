"""Built-in fixture families and the closed-vs-direct verification sweep.

The default suite covers complete graphs K_3..K_8, complete bipartite
K_{p,p} for p = 2..4, cycles C_3..C_10 and the Petersen graph, joined
against the partners K_2, K_3 and C_4.  For every admissible combination it
checks that the closed-form spectrum matches direct eigendecomposition and
that the invariant routes agree; combinations excluded by a mathematical
guard are reported as skips with the guard's name.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import MathGuardError
from .graphs import (
    Graph,
    RegularGraph,
    as_regular,
    central_edge_join,
    central_graph,
    central_vertex_join,
    complete,
    complete_bipartite,
    cycle,
    petersen,
)
from .invariants import (
    degree_kirchhoff_from_spectrum,
    degree_kirchhoff_resistance_oracle,
    kemeny_cej_closed,
    kemeny_central_closed,
    kemeny_cvj_closed,
    kemeny_from_spectrum,
)
from .spectra import (
    ClosedFormSpectrum,
    cej_spectrum_closed,
    central_spectrum_closed,
    cvj_spectrum_closed,
    direct_spectrum,
)
from .numeric import Spectrum, spectra_equal

TOL_SPECTRUM = 1e-8
TOL_KEMENY_REL = 1e-8
TOL_ORACLE_REL = 1e-6


@dataclass(frozen=True)
class CheckResult:
    subject: str
    check: str
    status: str  # "pass", "fail", or "skip"
    detail: str = ""
    deviation: float | None = None

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def default_bases() -> list[tuple[str, RegularGraph]]:
    bases = [(f"K{n}", as_regular(complete(n))) for n in range(3, 9)]
    bases += [(f"K{p},{p}", as_regular(complete_bipartite(p, p))) for p in (2, 3, 4)]
    bases += [(f"C{n}", as_regular(cycle(n))) for n in range(3, 11)]
    bases.append(("Petersen", as_regular(petersen())))
    return bases


def default_partners() -> list[tuple[str, RegularGraph]]:
    return [
        ("K2", as_regular(complete(2))),
        ("K3", as_regular(complete(3))),
        ("C4", as_regular(cycle(4))),
    ]


def _worst_piece(closed: ClosedFormSpectrum, direct: Spectrum) -> str:
    """Name the closed-form piece nearest the worst-deviating eigenvalue."""
    dv, cv = direct.expand(), closed.assembled.expand()
    if dv.shape != cv.shape:
        return "piece multiset has wrong total multiplicity"
    worst = float(cv[int(np.argmax(np.abs(dv - cv)))])
    best = min(
        closed.pieces,
        key=lambda piece: min(abs(v - worst) for v in piece.values),
    )
    return f"worst eigenvalue {worst:.12g} from piece '{best.description}'"


def _spectrum_check(
    subject: str, check: str, closed_fn, direct_graph: Graph
) -> CheckResult:
    try:
        closed = closed_fn()
    except MathGuardError as exc:
        return CheckResult(
            subject, check, "skip", f"{type(exc).__name__.removesuffix('Error')}: {exc}"
        )
    direct = direct_spectrum(direct_graph)
    equal, dev = spectra_equal(closed.assembled, direct, TOL_SPECTRUM)
    if equal:
        return CheckResult(subject, check, "pass", deviation=dev)
    return CheckResult(subject, check, "fail", _worst_piece(closed, direct), dev)


def _invariant_checks(
    subject: str, composite: Graph, closed_kemeny_fn
) -> list[CheckResult]:
    results = []
    spectrum = direct_spectrum(composite)
    k_spec = kemeny_from_spectrum(spectrum)
    kf_spec = degree_kirchhoff_from_spectrum(spectrum, composite.m)
    try:
        k_closed = closed_kemeny_fn()
        rel = abs(k_spec - k_closed) / (1.0 + abs(k_spec))
        results.append(
            CheckResult(
                subject,
                "kemeny spectral vs closed",
                "pass" if rel <= TOL_KEMENY_REL else "fail",
                "" if rel <= TOL_KEMENY_REL else f"{k_spec} vs {k_closed}",
                rel,
            )
        )
    except MathGuardError as exc:
        results.append(
            CheckResult(
                subject,
                "kemeny spectral vs closed",
                "skip",
                f"{type(exc).__name__.removesuffix('Error')}: {exc}",
            )
        )
    kf_oracle = degree_kirchhoff_resistance_oracle(composite)
    rel = abs(kf_spec - kf_oracle) / (1.0 + abs(kf_spec))
    results.append(
        CheckResult(
            subject,
            "kirchhoff spectral vs resistance oracle",
            "pass" if rel <= TOL_ORACLE_REL else "fail",
            "" if rel <= TOL_ORACLE_REL else f"{kf_spec} vs {kf_oracle}",
            rel,
        )
    )
    rel = abs(kf_spec - 2.0 * composite.m * k_spec) / (1.0 + abs(kf_spec))
    results.append(
        CheckResult(
            subject,
            "kirchhoff = 2m * kemeny",
            "pass" if rel <= TOL_KEMENY_REL else "fail",
            deviation=rel,
        )
    )
    return results


def run_default_suite() -> list[CheckResult]:
    """Run every closed-vs-direct and route-agreement check in the suite."""
    results: list[CheckResult] = []
    partners = default_partners()
    for base_name, base in default_bases():
        composite, _ = central_graph(base.graph)
        subject = f"central({base_name})"
        results.append(
            _spectrum_check(
                subject, "closed vs direct", lambda b=base: central_spectrum_closed(b), composite
            )
        )
        results.extend(
            _invariant_checks(subject, composite, lambda b=base: kemeny_central_closed(b))
        )
        for partner_name, partner in partners:
            cvj, _ = central_vertex_join(base.graph, partner.graph)
            subject = f"{base_name} vertex-join {partner_name}"
            results.append(
                _spectrum_check(
                    subject,
                    "closed vs direct",
                    lambda b=base, p=partner: cvj_spectrum_closed(b, p),
                    cvj,
                )
            )
            results.extend(
                _invariant_checks(
                    subject, cvj, lambda b=base, p=partner: kemeny_cvj_closed(b, p)
                )
            )
            cej, _ = central_edge_join(base.graph, partner.graph)
            subject = f"{base_name} edge-join {partner_name}"
            results.append(
                _spectrum_check(
                    subject,
                    "closed vs direct",
                    lambda b=base, p=partner: cej_spectrum_closed(b, p),
                    cej,
                )
            )
            results.extend(
                _invariant_checks(
                    subject, cej, lambda b=base, p=partner: kemeny_cej_closed(b, p)
                )
            )
    return results


def format_results_table(results: list[CheckResult]) -> str:
    width_subject = max(len(r.subject) for r in results)
    width_check = max(len(r.check) for r in results)
    lines = []
    for r in results:
        dev = "" if r.deviation is None else f"  dev={r.deviation:.3e}"
        detail = f"  {r.detail}" if r.detail else ""
        lines.append(
            f"{r.status.upper():<5} {r.subject:<{width_subject}} "
            f"{r.check:<{width_check}}{dev}{detail}"
        )
    counts = {
        status: sum(1 for r in results if r.status == status)
        for status in ("pass", "fail", "skip")
    }
    lines.append(
        f"total: {len(results)}  pass: {counts['pass']}  "
        f"fail: {counts['fail']}  skip: {counts['skip']}"
    )
    return "\n".join(lines)
