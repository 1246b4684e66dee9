"""Normalized Laplacian assembly and closed-form spectra of the composites.

For a graph without isolated vertices the normalized Laplacian is
``I - D^{-1/2} A D^{-1/2}``: ones on the diagonal and ``-1/sqrt(d_i d_j)``
on edges.  ``direct_spectrum`` eigendecomposes that matrix and is the
numerical oracle everything else is validated against.

When the building blocks are regular, the spectra of the three composites
factor completely.  Writing ``n1, m1, r1`` for the base graph and
``n2, r2`` for the partner, each closed form below emits:

* a flat eigenvalue 1 coming from the subdivision block,
* one small "coupling" polynomial (quadratic, cubic or quartic) binding the
  regularity eigenvalue to the join structure, and
* one quadratic (or linear shift) per remaining eigenvalue of each block.

Every piece is expanded numerically into coefficients and handed to the
companion-matrix root finder; no symbolic algebra is involved.  The pieces
are kept alongside the assembled spectrum so reports can show where each
eigenvalue came from.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.polynomial.polynomial as npoly

from .errors import (
    IsolatedVertexError,
    NegativeMultiplicityError,
    TrivialDenominatorError,
    ZeroRegularityError,
)
from .graphs import Graph, RegularGraph, component_count
from .numeric import (
    DEFAULT_GROUPING_TOL,
    RealPolynomial,
    Spectrum,
    SymmetricMatrix,
    eigenvalues_sym,
    real_roots,
)

# (x - 1) as ascending coefficients, the recurring building block
_XM1 = np.array([-1.0, 1.0])
_X = np.array([0.0, 1.0])


@dataclass(frozen=True)
class NormalizedLaplacian:
    matrix: SymmetricMatrix
    source: Graph


def normalized_laplacian(g: Graph) -> NormalizedLaplacian:
    """Assemble ``I - D^{-1/2} A D^{-1/2}`` for a graph with all degrees >= 1."""
    deg = g.degrees()
    if np.any(deg == 0):
        isolated = int(np.argmax(deg == 0))
        raise IsolatedVertexError(f"vertex {isolated} has degree 0")
    scale = 1.0 / np.sqrt(deg.astype(float))
    mat = np.eye(g.n)
    for u, v in g.edges:
        mat[u, v] = mat[v, u] = -scale[u] * scale[v]
    return NormalizedLaplacian(SymmetricMatrix(mat), g)


def direct_spectrum(g: Graph, grouping_tol: float = DEFAULT_GROUPING_TOL) -> Spectrum:
    """Normalized Laplacian spectrum by dense eigendecomposition."""
    return eigenvalues_sym(normalized_laplacian(g).matrix, grouping_tol)


def regular_nl_spectrum(
    rg: RegularGraph, grouping_tol: float = DEFAULT_GROUPING_TOL
) -> Spectrum:
    """Normalized Laplacian spectrum of a regular graph via ``1 - lambda/r``."""
    if rg.r == 0:
        raise ZeroRegularityError("normalized Laplacian needs regularity >= 1")
    adjacency = eigenvalues_sym(SymmetricMatrix(rg.graph.adjacency()), grouping_tol)
    return Spectrum.from_values(1.0 - adjacency.expand() / rg.r, grouping_tol)


@dataclass(frozen=True)
class SpectrumPiece:
    """One factor of a closed-form spectrum.

    ``values`` are the eigenvalues the factor contributes (polynomial roots,
    or explicit values when no polynomial is involved), each counted
    ``multiplicity`` times.
    """

    description: str
    polynomial: RealPolynomial | None
    values: tuple[float, ...]
    multiplicity: int


@dataclass(frozen=True)
class ClosedFormSpectrum:
    pieces: tuple[SpectrumPiece, ...]
    assembled: Spectrum
    warnings: tuple[str, ...] = ()


def _assemble(
    pieces: list[SpectrumPiece], warnings: list[str], grouping_tol: float
) -> ClosedFormSpectrum:
    values: list[float] = []
    for piece in pieces:
        values.extend(v for v in piece.values for _ in range(piece.multiplicity))
    return ClosedFormSpectrum(
        tuple(pieces), Spectrum.from_values(values, grouping_tol), tuple(warnings)
    )


def _poly_piece(description: str, coeffs: np.ndarray, multiplicity: int) -> SpectrumPiece:
    poly = RealPolynomial(tuple(coeffs))
    return SpectrumPiece(
        description, poly, tuple(real_roots(poly).tolist()), multiplicity
    )


def _drop_one_extreme(
    spectrum: Spectrum, expected: float, which: str
) -> tuple[list[tuple[float, int]], int]:
    """Remove one copy of the lowest/highest group, asserting its value.

    Returns the remaining (value, multiplicity) items and the multiplicity
    the extreme group had before removal (> 1 signals a disconnected input).
    """
    items = list(spectrum.items)
    idx = 0 if which == "low" else len(items) - 1
    value, mult = items[idx]
    assert abs(value - expected) <= 1e-6, (
        f"expected extreme eigenvalue {expected}, found {value}"
    )
    if mult == 1:
        del items[idx]
    else:
        items[idx] = (value, mult - 1)
    return items, mult


def central_spectrum_closed(
    rg: RegularGraph, grouping_tol: float = DEFAULT_GROUPING_TOL
) -> ClosedFormSpectrum:
    """Closed-form normalized Laplacian spectrum of the central graph.

    For an r-regular base on n vertices and m edges the spectrum is
    eigenvalue 1 with multiplicity ``m - n``, the two roots of a regularity
    quadratic, and two roots of one quadratic per remaining adjacency
    eigenvalue of the base.  Requires ``r >= 1`` and ``m >= n``.
    """
    n, m, r = rg.n, rg.m, rg.r
    if n == 1:
        raise TrivialDenominatorError("central-graph closed form needs n >= 2")
    if r == 0:
        raise ZeroRegularityError("central-graph closed form needs r >= 1")
    if m < n:
        raise NegativeMultiplicityError(
            f"flat-eigenvalue multiplicity m - n = {m - n} is negative; "
            "use direct_spectrum instead"
        )
    warnings: list[str] = []
    adjacency = eigenvalues_sym(SymmetricMatrix(rg.graph.adjacency()), grouping_tol)
    rest, top_mult = _drop_one_extreme(adjacency, float(r), "high")
    if top_mult > 1:
        warnings.append(
            "unvalidated-disconnected: base graph has "
            f"{component_count(rg.graph)} components; "
            "cross-check against direct_spectrum"
        )

    pieces: list[SpectrumPiece] = []
    if m > n:
        pieces.append(SpectrumPiece("eigenvalue 1, multiplicity m - n", None, (1.0,), m - n))
    # (x-1)((x-1) + (n-1-r)/(n-1)) - r/(n-1)
    coeffs = npoly.polysub(
        npoly.polymul(_XM1, npoly.polyadd(_XM1, [(n - 1 - r) / (n - 1)])),
        [r / (n - 1)],
    )
    pieces.append(_poly_piece("regularity quadratic", coeffs, 1))
    for lam, mult in rest:
        # (x-1)((x-1) + (-1-lam)/(n-1)) - (lam+r)/(2(n-1))
        coeffs = npoly.polysub(
            npoly.polymul(_XM1, npoly.polyadd(_XM1, [(-1.0 - lam) / (n - 1)])),
            [(lam + r) / (2.0 * (n - 1))],
        )
        pieces.append(
            _poly_piece(f"quadratic for adjacency eigenvalue {lam:.12g}", coeffs, mult)
        )
    return _assemble(pieces, warnings, grouping_tol)


def _join_guards(rg1: RegularGraph, rg2: RegularGraph, min_surplus: int, kind: str):
    if rg1.n < 2:
        raise TrivialDenominatorError(f"{kind} closed form needs n1 >= 2")
    if rg1.r == 0:
        raise ZeroRegularityError(f"{kind} closed form needs base regularity >= 1")
    if rg2.r == 0:
        raise ZeroRegularityError(
            f"{kind} closed form needs partner regularity >= 1; "
            "use direct_spectrum for empty partners"
        )
    surplus = rg1.m - rg1.n - min_surplus
    if surplus < 0:
        raise NegativeMultiplicityError(
            f"flat-eigenvalue multiplicity m1 - n1"
            f"{' - 1' if min_surplus else ''} = {surplus} is negative; "
            "use direct_spectrum instead"
        )


def _base_warnings(rg1: RegularGraph, zero_mult: int) -> list[str]:
    if zero_mult > 1:
        return [
            "unvalidated-disconnected: base graph has "
            f"{component_count(rg1.graph)} components; "
            "cross-check against direct_spectrum"
        ]
    return []


def cvj_spectrum_closed(
    rg1: RegularGraph,
    rg2: RegularGraph,
    grouping_tol: float = DEFAULT_GROUPING_TOL,
) -> ClosedFormSpectrum:
    """Closed-form spectrum of the central vertex join of two regular graphs.

    Pieces: eigenvalue 1 with multiplicity ``m1 - n1``; a linear shift of
    every non-zero partner eigenvalue; a coupling cubic (which carries the
    composite's zero eigenvalue); and one quadratic per remaining base
    eigenvalue.
    """
    _join_guards(rg1, rg2, 0, "vertex-join")
    n1, m1, r1 = rg1.n, rg1.m, rg1.r
    n2, r2 = rg2.n, rg2.r
    big_n = n1 + n2 - 1.0

    mu2_rest, _ = _drop_one_extreme(regular_nl_spectrum(rg2, grouping_tol), 0.0, "low")
    mu1_rest, zero_mult = _drop_one_extreme(
        regular_nl_spectrum(rg1, grouping_tol), 0.0, "low"
    )
    warnings = _base_warnings(rg1, zero_mult)

    pieces: list[SpectrumPiece] = []
    if m1 > n1:
        pieces.append(
            SpectrumPiece("eigenvalue 1, multiplicity m1 - n1", None, (1.0,), m1 - n1)
        )
    for mu, mult in mu2_rest:
        shifted = (n1 + r2 * mu) / (r2 + n1)
        pieces.append(
            SpectrumPiece(
                f"shift of partner eigenvalue {mu:.12g}", None, (shifted,), mult
            )
        )
    # coupling cubic:
    # (x - n1/(r2+n1)) * [(x-1)^2 - r1/N - (1+r1)(x-1)/N]
    #   - [n1*n2*(x-1) - n1*(x-1)*((n1+r2)x - n1)] / (N*(n1+r2))
    base_quad = npoly.polysub(
        npoly.polymul(_XM1, _XM1),
        npoly.polyadd([r1 / big_n], npoly.polymul([(1.0 + r1) / big_n], _XM1)),
    )
    bracket = npoly.polysub(
        npoly.polymul([float(n1 * n2)], _XM1),
        npoly.polymul(
            [float(n1)], npoly.polymul(_XM1, npoly.polysub((n1 + r2) * _X, [float(n1)]))
        ),
    )
    cubic = npoly.polysub(
        npoly.polymul(npoly.polysub(_X, [n1 / (r2 + n1)]), base_quad),
        bracket / (big_n * (n1 + r2)),
    )
    pieces.append(_poly_piece("base-partner coupling cubic", cubic, 1))
    for mu, mult in mu1_rest:
        coeffs = npoly.polyadd(
            npoly.polyadd(base_quad, [r1 * mu / (2.0 * big_n)]),
            npoly.polymul([r1 * mu / big_n], _XM1),
        )
        pieces.append(
            _poly_piece(f"quadratic for base eigenvalue {mu:.12g}", coeffs, mult)
        )
    return _assemble(pieces, warnings, grouping_tol)


def cej_spectrum_closed(
    rg1: RegularGraph,
    rg2: RegularGraph,
    grouping_tol: float = DEFAULT_GROUPING_TOL,
) -> ClosedFormSpectrum:
    """Closed-form spectrum of the central edge join of two regular graphs.

    Pieces: eigenvalue 1 with multiplicity ``m1 - n1 - 1``; a linear shift
    of every non-zero partner eigenvalue; a coupling quartic (two quadratics
    multiplied minus a rank-one correction, carrying the zero eigenvalue);
    and one quadratic per remaining base eigenvalue.
    """
    _join_guards(rg1, rg2, 1, "edge-join")
    n1, m1, r1 = rg1.n, rg1.m, rg1.r
    n2, r2 = rg2.n, rg2.r

    mu2_rest, _ = _drop_one_extreme(regular_nl_spectrum(rg2, grouping_tol), 0.0, "low")
    mu1_rest, zero_mult = _drop_one_extreme(
        regular_nl_spectrum(rg1, grouping_tol), 0.0, "low"
    )
    warnings = _base_warnings(rg1, zero_mult)

    pieces: list[SpectrumPiece] = []
    if m1 > n1 + 1:
        pieces.append(
            SpectrumPiece(
                "eigenvalue 1, multiplicity m1 - n1 - 1", None, (1.0,), m1 - n1 - 1
            )
        )
    for mu, mult in mu2_rest:
        shifted = (m1 + r2 * mu) / (r2 + m1)
        pieces.append(
            SpectrumPiece(
                f"shift of partner eigenvalue {mu:.12g}", None, (shifted,), mult
            )
        )
    # coupling quartic: q1 * q2 - c with
    #   q1 = (x-1)^2 + (n1-1-r1)(x-1)/(n1-1) - 2 r1/((n1-1)(n2+2))
    #   q2 = (x - m1/(r2+m1))(x-1) - n2 m1/((n2+2)(r2+m1))
    #   c  = n2 r1^2 n1 / ((n1-1)(n2+2)^2 (r2+m1))
    q1 = npoly.polyadd(
        npoly.polysub(npoly.polymul(_XM1, _XM1), [2.0 * r1 / ((n1 - 1) * (n2 + 2))]),
        npoly.polymul([(n1 - 1.0 - r1) / (n1 - 1)], _XM1),
    )
    q2 = npoly.polysub(
        npoly.polymul(npoly.polysub(_X, [m1 / (r2 + m1)]), _XM1),
        [n2 * m1 / ((n2 + 2.0) * (r2 + m1))],
    )
    coupling = n2 * r1**2 * n1 / ((n1 - 1.0) * (n2 + 2.0) ** 2 * (r2 + m1))
    quartic = npoly.polysub(npoly.polymul(q1, q2), [coupling])
    pieces.append(_poly_piece("base-partner coupling quartic", quartic, 1))
    for mu, mult in mu1_rest:
        coeffs = npoly.polysub(
            npoly.polyadd(
                npoly.polymul(_XM1, _XM1),
                npoly.polymul([(-1.0 - r1 + r1 * mu) / (n1 - 1)], _XM1),
            ),
            [(2.0 * r1 - r1 * mu) / ((n1 - 1.0) * (n2 + 2.0))],
        )
        pieces.append(
            _poly_piece(f"quadratic for base eigenvalue {mu:.12g}", coeffs, mult)
        )
    return _assemble(pieces, warnings, grouping_tol)
