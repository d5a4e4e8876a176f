"""Verification toolkit for alpha-spectral radii of t-connected graphs
with bounded matching number: certified closed forms, an exact-arithmetic
identity layer, a verdict classifier, and exhaustive/sampled searches that
check the predictions against every labelled graph in range.
"""

from .classifier import (
    EXTREMAL_T,
    HALF,
    TIE,
    UNDETERMINED,
    ClassificationResult,
    ThresholdResult,
    classify,
    classify_alpha_zero,
    perfect_matching_threshold,
)
from .closedforms import (
    ScenarioParams,
    alpha_zero_discriminant,
    charpoly_gap,
    family_charpoly,
    family_radius,
    gap_at_half_radius,
    half_charpoly,
    half_radius_closed,
    half_radius_margin,
    half_radius_radical,
    half_radius_radicand,
    scenario_violations,
)
from .combinatorics import (
    DeficiencyWitness,
    VertexSet,
    berge_tutte_deficiency,
    components,
    is_connected,
    is_t_connected,
    matching_number,
    odd_component_count,
    vertex_connectivity,
)
from .equitable import (
    VertexPartition,
    family_partition,
    half_partition,
    is_equitable,
    quotient,
    quotient_eigenvalues,
    quotient_json,
    quotient_radius,
)
from .errors import (
    CapabilityError,
    Graph6DecodeError,
    NumericError,
    ParameterError,
)
from .exactpoly import (
    Poly,
    RadicalRing,
    VerificationOutcome,
    run_all_checks,
)
from .graphs import (
    FamilySpec,
    Graph,
    complete,
    complement,
    disjoint_union,
    empty,
    extremal_family,
    graph6_decode,
    graph6_encode,
    half_family,
    join,
)
from .search import (
    ProbeReport,
    SearchReport,
    SearchTask,
    admissible,
    counterexample_probe,
    edge_mask_of,
    enumerate_graphs,
    graph_from_edge_mask,
    run,
)
from .spectra import (
    SpectralResult,
    alpha_matrix,
    full_spectrum,
    largest_eigenpair,
    rayleigh_quotient,
    spectral_radius,
    symmetric_eigenvalues,
)

__version__ = "0.1.0"

__all__ = [
    "CapabilityError",
    "ClassificationResult",
    "DeficiencyWitness",
    "EXTREMAL_T",
    "FamilySpec",
    "Graph",
    "Graph6DecodeError",
    "HALF",
    "NumericError",
    "ParameterError",
    "Poly",
    "ProbeReport",
    "RadicalRing",
    "ScenarioParams",
    "SearchReport",
    "SearchTask",
    "SpectralResult",
    "ThresholdResult",
    "TIE",
    "UNDETERMINED",
    "VertexPartition",
    "VertexSet",
    "VerificationOutcome",
    "admissible",
    "alpha_matrix",
    "alpha_zero_discriminant",
    "berge_tutte_deficiency",
    "charpoly_gap",
    "classify",
    "classify_alpha_zero",
    "complement",
    "complete",
    "components",
    "counterexample_probe",
    "disjoint_union",
    "edge_mask_of",
    "empty",
    "enumerate_graphs",
    "extremal_family",
    "family_charpoly",
    "family_partition",
    "family_radius",
    "full_spectrum",
    "gap_at_half_radius",
    "graph6_decode",
    "graph6_encode",
    "graph_from_edge_mask",
    "half_charpoly",
    "half_family",
    "half_partition",
    "half_radius_closed",
    "half_radius_margin",
    "half_radius_radical",
    "half_radius_radicand",
    "is_connected",
    "is_equitable",
    "is_t_connected",
    "join",
    "largest_eigenpair",
    "matching_number",
    "odd_component_count",
    "perfect_matching_threshold",
    "quotient",
    "quotient_eigenvalues",
    "quotient_json",
    "quotient_radius",
    "rayleigh_quotient",
    "run",
    "run_all_checks",
    "scenario_violations",
    "spectral_radius",
    "symmetric_eigenvalues",
    "vertex_connectivity",
]
