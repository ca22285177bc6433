"""pstlab: deciding, certifying, and exploring perfect quantum state
transfer in the single-excitation subspace of coupling-graph Hamiltonians.
"""

from .graphs import (
    BipartiteColoring,
    Graph,
    MalformedGraph6,
    bipartite_coloring,
    cartesian_product,
    complement,
    complete_graph,
    conjunction,
    cycle_graph,
    diameter,
    distance,
    empty_graph,
    encode_graph6,
    hypercube_graph,
    join,
    parse_graph6,
    path_graph,
    strong_product,
)
from .hamiltonians import (
    EdgeNotInGraph,
    NonPositiveCoupling,
    adjacency_hamiltonian,
    asymmetric_5chain_couplings,
    chain_hamiltonian,
    check_coupling_identity_5chain,
    is_real_hamiltonian,
    laplacian_hamiltonian,
    standard_pst_chain_couplings,
    support_graph,
    weighted_hamiltonian,
)
from .spectral import (
    CommensurabilityResult,
    DegenerateInput,
    EigensolverFailure,
    SpectralDecomposition,
    decompose,
    integer_char_poly,
    is_integral_spectrum,
    real_gcd,
    support_components,
)
from .transfer import (
    NO_TRANSFER,
    PERFECT,
    UNDECIDED,
    NotPerfect,
    TransferVerdict,
    VertexCoincide,
    bipartite_phase_class,
    check_transfer,
    evolve,
    fidelity,
    fidelity_curve,
    minimal_transfer_time,
    symmetry_operator,
)
from .limits import (
    DiameterBoundsReport,
    RateReport,
    autocorrelation_zeros,
    complement_pst_condition,
    laplacian_diameter_bounds,
    rate_report,
    routing_bound_check,
    routing_impossibility_scan,
)
from .search import (
    CensusResult,
    MalformedRecord,
    NTooLarge,
    SearchRecord,
    canonical_form,
    census,
    enumerate_connected_graphs,
    read_graph6_stream,
    read_records,
    write_records,
    write_records_csv,
)
from .config import Config

__version__ = "0.1.0"

__all__ = [
    # graphs
    "BipartiteColoring", "Graph", "MalformedGraph6", "bipartite_coloring",
    "cartesian_product", "complement", "complete_graph", "conjunction",
    "cycle_graph", "diameter", "distance", "empty_graph", "encode_graph6",
    "hypercube_graph", "join", "parse_graph6", "path_graph", "strong_product",
    # hamiltonians
    "EdgeNotInGraph", "NonPositiveCoupling", "adjacency_hamiltonian",
    "asymmetric_5chain_couplings", "chain_hamiltonian",
    "check_coupling_identity_5chain", "is_real_hamiltonian",
    "laplacian_hamiltonian", "standard_pst_chain_couplings", "support_graph",
    "weighted_hamiltonian",
    # spectral
    "CommensurabilityResult", "DegenerateInput", "EigensolverFailure",
    "SpectralDecomposition", "decompose", "integer_char_poly",
    "is_integral_spectrum", "real_gcd", "support_components",
    # transfer
    "NO_TRANSFER", "PERFECT", "UNDECIDED", "NotPerfect", "TransferVerdict",
    "VertexCoincide", "bipartite_phase_class", "check_transfer", "evolve",
    "fidelity", "fidelity_curve", "minimal_transfer_time", "symmetry_operator",
    # limits
    "DiameterBoundsReport", "RateReport", "autocorrelation_zeros",
    "complement_pst_condition", "laplacian_diameter_bounds", "rate_report",
    "routing_bound_check", "routing_impossibility_scan",
    # search
    "CensusResult", "MalformedRecord", "NTooLarge", "SearchRecord",
    "canonical_form", "census", "enumerate_connected_graphs",
    "read_graph6_stream", "read_records", "write_records",
    "write_records_csv",
    # config
    "Config",
]
