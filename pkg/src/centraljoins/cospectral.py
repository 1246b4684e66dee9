"""Cospectrality checking, certificates, and the join-based pair factory.

Two graphs are cospectral here when their normalized Laplacian spectra agree
as multisets within a tolerance.  A successful check produces a
:class:`CospectralCertificate` carrying the shared spectrum and, when one of
a few cheap invariants separates the graphs, a non-isomorphism witness.
Isomorphism itself is never decided: absence of a witness means
"undetermined", not "isomorphic".

``build_cospectral_family`` turns a cospectral pair of regular graphs (plus
a second such pair) into cospectral non-regular composites via the central
vertex join and central edge join, verifying each output numerically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import NotCospectralInputError
from .graphs import Graph, RegularGraph, central_edge_join, central_vertex_join, make_graph
from .numeric import Spectrum, spectra_equal
from .spectra import direct_spectrum, regular_nl_spectrum

DEFAULT_CERTIFICATE_TOL = 1e-7


def degree_multiset(g: Graph) -> list[int]:
    return sorted(g.degrees().tolist())


def triangle_counts(g: Graph) -> list[int]:
    """Per-vertex triangle participation counts, sorted."""
    a = g.adjacency()
    diag = np.einsum("ij,jk,ki->i", a, a, a)
    return sorted(int(round(t / 2.0)) for t in diag)


def neighbor_degree_profile(g: Graph) -> list[list[int]]:
    """Sorted multiset of each vertex's sorted neighbor-degree multiset."""
    deg = g.degrees()
    neigh: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        neigh[u].append(int(deg[v]))
        neigh[v].append(int(deg[u]))
    return sorted(sorted(row) for row in neigh)


# tried in order; the first differing invariant becomes the witness
WITNESS_INVARIANTS = (
    ("degree_multiset", degree_multiset),
    ("triangle_counts", triangle_counts),
    ("neighbor_degree_profile", neighbor_degree_profile),
)


class Witness(NamedTuple):
    invariant: str
    value_a: object
    value_b: object


@dataclass(frozen=True)
class SpectrumMismatch:
    """Result of a failed cospectrality check (a result, not an error)."""

    spectrum_a: Spectrum
    spectrum_b: Spectrum
    max_deviation: float


@dataclass(frozen=True)
class CospectralCertificate:
    graph_a: Graph
    graph_b: Graph
    shared_spectrum: Spectrum
    max_deviation: float
    nonisomorphism_witness: Witness | None
    tol: float

    def verify(self) -> tuple[bool, float]:
        """Recompute both spectra and compare them to the stored one."""
        worst = 0.0
        ok = True
        for g in (self.graph_a, self.graph_b):
            equal, dev = spectra_equal(direct_spectrum(g), self.shared_spectrum, self.tol)
            ok = ok and equal
            worst = max(worst, dev)
        return ok, worst

    def to_dict(self) -> dict:
        return {
            "cospectral": True,
            "tol": self.tol,
            "max_deviation": self.max_deviation,
            "graph_a": {"n": self.graph_a.n, "edges": [list(e) for e in self.graph_a.edges]},
            "graph_b": {"n": self.graph_b.n, "edges": [list(e) for e in self.graph_b.edges]},
            "shared_spectrum": [
                {"value": v, "multiplicity": k} for v, k in self.shared_spectrum.items
            ],
            "grouping_tol": self.shared_spectrum.grouping_tol,
            "nonisomorphism_witness": (
                None
                if self.nonisomorphism_witness is None
                else {
                    "invariant": self.nonisomorphism_witness.invariant,
                    "value_a": self.nonisomorphism_witness.value_a,
                    "value_b": self.nonisomorphism_witness.value_b,
                }
            ),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def certificate_from_dict(data: dict, verify: bool = True) -> CospectralCertificate:
    """Rebuild a certificate from its JSON form, re-verifying by default."""
    witness = data.get("nonisomorphism_witness")
    cert = CospectralCertificate(
        graph_a=make_graph(data["graph_a"]["n"], [tuple(e) for e in data["graph_a"]["edges"]]),
        graph_b=make_graph(data["graph_b"]["n"], [tuple(e) for e in data["graph_b"]["edges"]]),
        shared_spectrum=Spectrum(
            tuple((item["value"], item["multiplicity"]) for item in data["shared_spectrum"]),
            data.get("grouping_tol", 1e-7),
        ),
        max_deviation=data["max_deviation"],
        nonisomorphism_witness=(
            None
            if witness is None
            else Witness(witness["invariant"], witness["value_a"], witness["value_b"])
        ),
        tol=data["tol"],
    )
    if verify:
        ok, dev = cert.verify()
        if not ok:
            raise ValueError(
                f"stored spectrum no longer matches the graphs (deviation {dev:.3e})"
            )
    return cert


def certificate_from_json(text: str, verify: bool = True) -> CospectralCertificate:
    return certificate_from_dict(json.loads(text), verify=verify)


def check_cospectral(
    a: Graph, b: Graph, tol: float = DEFAULT_CERTIFICATE_TOL
) -> CospectralCertificate | SpectrumMismatch:
    """Compare normalized Laplacian spectra; certify on a match.

    On a match, cheap invariants are tried in a fixed order and the first
    one that differs is recorded as a non-isomorphism witness.  A mismatch
    returns a :class:`SpectrumMismatch` rather than raising.
    """
    sa = direct_spectrum(a)
    sb = direct_spectrum(b)
    equal, dev = spectra_equal(sa, sb, tol)
    if not equal:
        return SpectrumMismatch(sa, sb, dev)
    witness = None
    for name, fn in WITNESS_INVARIANTS:
        va, vb = fn(a), fn(b)
        if va != vb:
            witness = Witness(name, va, vb)
            break
    return CospectralCertificate(a, b, sa, dev, witness, tol)


def _require_cospectral_pair(
    x: RegularGraph, y: RegularGraph, label: str, tol: float
) -> None:
    if x.n != y.n or x.r != y.r:
        raise NotCospectralInputError(
            f"{label}: cospectral regular graphs must share size and regularity, "
            f"got (n={x.n}, r={x.r}) vs (n={y.n}, r={y.r})"
        )
    equal, dev = spectra_equal(regular_nl_spectrum(x), regular_nl_spectrum(y), tol)
    if not equal:
        raise NotCospectralInputError(
            f"{label}: input spectra differ by {dev:.3e} (tol {tol:.1e})"
        )


def build_cospectral_family(
    g1: RegularGraph,
    g2: RegularGraph,
    h1: RegularGraph,
    h2: RegularGraph,
    tol: float = DEFAULT_CERTIFICATE_TOL,
) -> list[CospectralCertificate]:
    """Certify (g1 vertex-join h1, g2 vertex-join h2) and the edge-join pair.

    The inputs must form two cospectral pairs of regular graphs; the outputs
    are then cospectral non-regular composites, and each certificate is
    verified numerically rather than taken on faith.
    """
    _require_cospectral_pair(g1, g2, "base pair", tol)
    _require_cospectral_pair(h1, h2, "partner pair", tol)
    certificates = []
    for op, name in ((central_vertex_join, "vertex join"), (central_edge_join, "edge join")):
        composite_a, _ = op(g1.graph, h1.graph)
        composite_b, _ = op(g2.graph, h2.graph)
        result = check_cospectral(composite_a, composite_b, tol)
        if isinstance(result, SpectrumMismatch):  # pragma: no cover - defect path
            raise ArithmeticError(
                f"{name} composites failed cospectrality (deviation "
                f"{result.max_deviation:.3e}); this contradicts the construction"
            )
        certificates.append(result)
    return certificates
