"""Kemeny's constant and the degree Kirchhoff index by independent routes.

For a connected graph the random walk's Kemeny constant equals the sum of
reciprocals of the non-zero normalized Laplacian eigenvalues, and the degree
Kirchhoff index is ``2m`` times that.  Three routes are provided:

* spectral: reciprocal sums over any :class:`~centraljoins.numeric.Spectrum`,
* closed form: explicit formulas for the three composites built from
  regular graphs, evaluated without ever forming the composite matrix,
* resistance oracle: ``sum_{i<j} d_i d_j r_ij`` with effective resistances
  from the combinatorial Laplacian pseudoinverse.

The closed forms for the two joins default to coefficient sets that were
re-derived from the spectral factorizations and verified against both other
routes; pass ``corrected=False`` to get the uncorrected transcriptions,
which fail cross-route validation and are retained for diagnostics only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DisconnectedGraphError,
    NegativeMultiplicityError,
    ZeroRegularityError,
)
from .graphs import Graph, RegularGraph, is_connected
from .numeric import (
    DEFAULT_GROUPING_TOL,
    Spectrum,
    SymmetricMatrix,
    eigenvalues_sym,
    pseudoinverse,
)
from .spectra import _drop_one_extreme, regular_nl_spectrum

ROUTE_SPECTRAL = "spectral"
ROUTE_CLOSED_FORM = "closed_form"
ROUTE_RESISTANCE_ORACLE = "resistance_oracle"


@dataclass(frozen=True)
class InvariantReport:
    """Kemeny's constant and degree Kirchhoff index with their provenance.

    ``edge_count_used`` is the m in the ``Kf* = 2m K`` normalization.
    """

    kemeny: float
    degree_kirchhoff: float
    route: str
    edge_count_used: int


def _nonzero_items(s: Spectrum) -> list[tuple[float, int]]:
    zero_mult = s.multiplicity_near(0.0)
    if zero_mult != 1:
        raise DisconnectedGraphError(
            f"expected a single zero eigenvalue, found multiplicity {zero_mult}; "
            "Kemeny's constant needs an irreducible walk"
        )
    return [(v, k) for v, k in s.items if abs(v) > s.grouping_tol]


def kemeny_from_spectrum(s: Spectrum) -> float:
    """Sum of reciprocals of the non-zero eigenvalues (with multiplicity)."""
    return float(sum(k / v for v, k in _nonzero_items(s)))


def degree_kirchhoff_from_spectrum(s: Spectrum, m: int) -> float:
    """``2m`` times the reciprocal sum; the spectral degree Kirchhoff index."""
    return 2.0 * m * kemeny_from_spectrum(s)


def kemeny_central_closed(rg: RegularGraph) -> float:
    """Kemeny's constant of the central graph of a connected regular graph.

    Evaluates ``m - n + (n-1)/(n-1+r) + sum 2(2n+lam-1)/(2n+lam-r)`` over
    the adjacency eigenvalues ``lam`` of the base with one copy of ``r``
    removed.
    """
    n, m, r = rg.n, rg.m, rg.r
    if r == 0:
        raise ZeroRegularityError("closed form needs regularity >= 1")
    if not is_connected(rg.graph):
        raise DisconnectedGraphError("closed form needs a connected base graph")
    if m < n:
        raise NegativeMultiplicityError(f"closed form needs m >= n, got m - n = {m - n}")
    adjacency = eigenvalues_sym(
        SymmetricMatrix(rg.graph.adjacency()), DEFAULT_GROUPING_TOL
    )
    rest, _ = _drop_one_extreme(adjacency, float(r), "high")
    total = m - n + (n - 1.0) / (n - 1.0 + r)
    total += sum(
        mult * 2.0 * (2.0 * n + lam - 1.0) / (2.0 * n + lam - r) for lam, mult in rest
    )
    return float(total)


def _join_rest(rg1: RegularGraph, rg2: RegularGraph):
    mu1, _ = _drop_one_extreme(regular_nl_spectrum(rg1), 0.0, "low")
    mu2, _ = _drop_one_extreme(regular_nl_spectrum(rg2), 0.0, "low")
    return mu1, mu2


def kemeny_cvj_closed(
    rg1: RegularGraph, rg2: RegularGraph, corrected: bool = True
) -> float:
    """Kemeny's constant of the central vertex join of two regular graphs."""
    n1, m1, r1 = rg1.n, rg1.m, rg1.r
    n2, r2 = rg2.n, rg2.r
    if r1 == 0 or r2 == 0:
        raise ZeroRegularityError("closed form needs both regularities >= 1")
    if m1 < n1:
        raise NegativeMultiplicityError(
            f"closed form needs m1 >= n1, got m1 - n1 = {m1 - n1}"
        )
    mu1_rest, mu2_rest = _join_rest(rg1, rg2)
    if corrected:
        coupling_num = n1 * (2 * n1 + 3 * n2 + r1 + r2) + 2 * n2 * r2 - 2 * n1 - r2 + r1 * r2
        coupling_den = n1 * (n1 + 2 * n2 - 1 + r1) + n2 * r2
    else:
        coupling_num = n1 * (2 * n1 + 3 * n2 + r1 + r2) + 2 * n2 * r2 - 2 * n1 - r2 - r1 * r2
        coupling_den = n1 * (n1 + 2 * n2 - 2) + n2 * r2
    total = m1 - n1 + coupling_num / coupling_den
    total += sum(mult * (r2 + n1) / (n1 + r2 * mu) for mu, mult in mu2_rest)
    total += sum(
        mult * 2.0 * (-r1 * mu + 2 * n1 + 2 * n2 + r1 - 1) / (2 * n1 + 2 * n2 - r1 * mu)
        for mu, mult in mu1_rest
    )
    return float(total)


def kemeny_cej_closed(
    rg1: RegularGraph, rg2: RegularGraph, corrected: bool = True
) -> float:
    """Kemeny's constant of the central edge join of two regular graphs."""
    n1, m1, r1 = rg1.n, rg1.m, rg1.r
    n2, r2 = rg2.n, rg2.r
    if r1 == 0 or r2 == 0:
        raise ZeroRegularityError("closed form needs both regularities >= 1")
    if m1 < n1 + 1:
        raise NegativeMultiplicityError(
            f"closed form needs m1 >= n1 + 1, got m1 - n1 - 1 = {m1 - n1 - 1}"
        )
    mu1_rest, mu2_rest = _join_rest(rg1, rg2)
    if corrected:
        coupling_num = m1 * (2 * n1 * n2 + 6 * n1 + 3 * n2 * r1 - 2 * n2 + 4 * r1 - 6) + r2 * (
            n1 * n2 + 2 * n1 + 2 * n2 * r1 - n2 + 2 * r1 - 2
        )
        coupling_den = 2 * m1 * (n1 + n2 * r1 + r1 - 1) + n2 * r1 * r2
        extra = 1.0
    else:
        coupling_num = (
            r2 * (4 * n1 * n2 - n2**2 + 6 * n2 * r1 + 4 * n1 - 4 * n2 + 4 * r1 - 4)
            + n2**2 * (n1 * r2 + 2 * n1 * m1 + 2 * r1 * r2 + 3 * m1 * r1)
            + m1 * (10 * n1 * n2 - 2 * n2**2 + 10 * n2 * r1 + 12 * n1 - 10 * n2 + 8 * r1 - 12)
        )
        coupling_den = (
            m1 * (2 * n2**2 * r1 + 2 * n1 * n2 + 6 * n2 * r1 + 4 * n1 + 2 * n2)
            + 2 * n2 * r1
            + n2**2 * r1 * r2
        )
        extra = 3.0
    total = m1 - n1 - 1 + coupling_num / coupling_den
    total += sum(mult * (r2 + m1) / (m1 + r2 * mu) for mu, mult in mu2_rest)
    total += sum(
        mult
        * (-n2 * r1 * mu - 2 * r1 * mu + 2 * n1 * n2 + n2 * r1 + 4 * n1 - n2 + 2 * r1 - 2)
        / (n1 * n2 + n2 * r1 + 2 * n1 - n2 * r1 * mu - extra * r1 * mu)
        for mu, mult in mu1_rest
    )
    return float(total)


def degree_kirchhoff_resistance_oracle(g: Graph) -> float:
    """Degree Kirchhoff index from effective resistances.

    Computes ``r_ij = Lp_ii + Lp_jj - 2 Lp_ij`` from the pseudoinverse of
    the combinatorial Laplacian ``D - A`` and returns
    ``sum_{i<j} d_i d_j r_ij``.  Route-independent of the spectral paths.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("effective resistance needs a connected graph")
    deg = g.degrees().astype(float)
    laplacian = np.diag(deg) - g.adjacency()
    lp = pseudoinverse(SymmetricMatrix(laplacian)).values
    diag = np.diag(lp)
    resist = diag[:, None] + diag[None, :] - 2.0 * lp
    # resist has zero diagonal, so the full bilinear form double-counts pairs
    return float(0.5 * deg @ resist @ deg)
