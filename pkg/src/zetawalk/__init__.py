"""Exact zeta functions of Grover walks on finite graphs.

Builds the Grover matrix of a connected simple graph over exact rationals,
computes zeta reciprocal polynomials by three routes (arc characteristic
polynomial, positive support, Ihara-Bass), verifies the Konno-Sato
factorizations as exact polynomial identities, counts weighted and reduced
cycles, and evaluates generalized zetas spectrally, including closed-form
discrete torus spectra and their infinite-volume limits.
"""

from .errors import (
    CoinError,
    DisconnectedGraphError,
    DuplicateEdgeError,
    FamilyParameterError,
    GraphError,
    GraphFormatError,
    LoopEdgeError,
    NonRegularGraphError,
    NotVertexTransitiveError,
    OracleGuardError,
    TreeGraphError,
    ZetaDomainError,
)
from .graphs import (
    ArcSpace,
    Graph,
    arc_space,
    build_family,
    complete_graph,
    cycle_graph,
    graph_from_edges,
    graph_payload,
    hypercube_graph,
    load_graph,
    petersen_graph,
    save_graph,
    torus_graph,
)
from .limits import (
    ConvergenceRow,
    ConvergenceStudy,
    EmpiricalSpectralMeasure,
    SpectrumList,
    convergence_study,
    empirical_spectral_measure,
    finite_torus_zeta_reciprocal,
    graph_spectrum,
    torus_limit_log_mean,
    torus_limit_zeta_reciprocal,
    torus_prefactor,
    torus_spectrum,
)
from .operators import (
    adjacency,
    coin,
    degree_matrix,
    grover,
    grover_positive_support,
    laplacian,
    positive_support,
    shift,
    transition,
)
from .polynomials import (
    Poly,
    det_i_minus_u,
    det_matrix_polynomial,
    log_series,
    one_minus_u_squared_pow,
)
from .rational import RatMatrix, det
from .zeta import (
    ORACLE_STATE_BOUND,
    SERIES_ORDER_CAP,
    IdentityCheck,
    KonnoSatoReport,
    SeriesCoefficients,
    SeriesConsistencyReport,
    charpoly_zeta_reciprocal,
    cycle_oracle,
    grover_zeta_reciprocal,
    ihara_reciprocal_bass,
    ihara_reciprocal_edge,
    konno_sato_check,
    reduced_cycle_counts,
    rooted_cycle_counts,
    spectral_zeta_reciprocal,
    weighted_cycle_counts,
    zeta_series_consistency,
)

__version__ = "0.1.0"

__all__ = [
    "ArcSpace",
    "CoinError",
    "ConvergenceRow",
    "ConvergenceStudy",
    "DisconnectedGraphError",
    "DuplicateEdgeError",
    "EmpiricalSpectralMeasure",
    "FamilyParameterError",
    "Graph",
    "GraphError",
    "GraphFormatError",
    "IdentityCheck",
    "KonnoSatoReport",
    "LoopEdgeError",
    "NonRegularGraphError",
    "NotVertexTransitiveError",
    "ORACLE_STATE_BOUND",
    "OracleGuardError",
    "Poly",
    "RatMatrix",
    "SERIES_ORDER_CAP",
    "SeriesCoefficients",
    "SeriesConsistencyReport",
    "SpectrumList",
    "TreeGraphError",
    "ZetaDomainError",
    "adjacency",
    "arc_space",
    "build_family",
    "charpoly_zeta_reciprocal",
    "coin",
    "complete_graph",
    "convergence_study",
    "cycle_graph",
    "cycle_oracle",
    "degree_matrix",
    "det",
    "det_i_minus_u",
    "det_matrix_polynomial",
    "empirical_spectral_measure",
    "finite_torus_zeta_reciprocal",
    "graph_from_edges",
    "graph_payload",
    "graph_spectrum",
    "grover",
    "grover_positive_support",
    "grover_zeta_reciprocal",
    "hypercube_graph",
    "ihara_reciprocal_bass",
    "ihara_reciprocal_edge",
    "konno_sato_check",
    "laplacian",
    "load_graph",
    "log_series",
    "one_minus_u_squared_pow",
    "petersen_graph",
    "positive_support",
    "reduced_cycle_counts",
    "rooted_cycle_counts",
    "save_graph",
    "shift",
    "spectral_zeta_reciprocal",
    "torus_graph",
    "torus_limit_log_mean",
    "torus_limit_zeta_reciprocal",
    "torus_prefactor",
    "torus_spectrum",
    "transition",
    "weighted_cycle_counts",
    "zeta_series_consistency",
]
