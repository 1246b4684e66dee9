"""Central graph constructions and their normalized Laplacian spectra.

Build central graphs, central vertex joins and central edge joins of simple
graphs; compute normalized Laplacian spectra both by dense eigendecomposition
and by closed-form factorizations valid for regular building blocks; and
derive Kemeny's constant and the degree Kirchhoff index along three
independent routes that cross-validate each other.
"""

from .cospectral import (
    CospectralCertificate,
    SpectrumMismatch,
    Witness,
    build_cospectral_family,
    certificate_from_dict,
    certificate_from_json,
    check_cospectral,
)
from .graphs import (
    Graph,
    RegularGraph,
    Role,
    VertexLabeling,
    as_regular,
    central_edge_join,
    central_graph,
    central_vertex_join,
    complement,
    complete,
    complete_bipartite,
    component_count,
    cycle,
    family,
    has_bipartite_component,
    is_connected,
    make_graph,
    path,
    petersen,
    rook_4x4,
    shrikhande,
)
from .invariants import (
    InvariantReport,
    degree_kirchhoff_from_spectrum,
    degree_kirchhoff_resistance_oracle,
    kemeny_cej_closed,
    kemeny_central_closed,
    kemeny_cvj_closed,
    kemeny_from_spectrum,
)
from .io import (
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    read_graph,
    write_graph,
)
from .numeric import (
    RealPolynomial,
    Spectrum,
    SymmetricMatrix,
    eigenvalues_sym,
    poly_roots,
    pseudoinverse,
    spectra_equal,
)
from .spectra import (
    ClosedFormSpectrum,
    NormalizedLaplacian,
    SpectrumPiece,
    cej_spectrum_closed,
    central_spectrum_closed,
    cvj_spectrum_closed,
    direct_spectrum,
    normalized_laplacian,
    regular_nl_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "CospectralCertificate",
    "SpectrumMismatch",
    "Witness",
    "build_cospectral_family",
    "certificate_from_dict",
    "certificate_from_json",
    "check_cospectral",
    "Graph",
    "RegularGraph",
    "Role",
    "VertexLabeling",
    "as_regular",
    "central_edge_join",
    "central_graph",
    "central_vertex_join",
    "complement",
    "complete",
    "complete_bipartite",
    "component_count",
    "cycle",
    "family",
    "has_bipartite_component",
    "is_connected",
    "make_graph",
    "path",
    "petersen",
    "rook_4x4",
    "shrikhande",
    "InvariantReport",
    "degree_kirchhoff_from_spectrum",
    "degree_kirchhoff_resistance_oracle",
    "kemeny_cej_closed",
    "kemeny_central_closed",
    "kemeny_cvj_closed",
    "kemeny_from_spectrum",
    "emit_edge_list",
    "emit_graph6",
    "parse_edge_list",
    "parse_graph6",
    "read_graph",
    "write_graph",
    "RealPolynomial",
    "Spectrum",
    "SymmetricMatrix",
    "eigenvalues_sym",
    "poly_roots",
    "pseudoinverse",
    "spectra_equal",
    "ClosedFormSpectrum",
    "NormalizedLaplacian",
    "SpectrumPiece",
    "cej_spectrum_closed",
    "central_spectrum_closed",
    "cvj_spectrum_closed",
    "direct_spectrum",
    "normalized_laplacian",
    "regular_nl_spectrum",
]
