"""Diagrams, edge cones and torus-action complexity of the varieties Y_w
attached to matrix Schubert varieties."""

from msv._core import (
    DEFAULT_MAX_EXHAUSTIVE_N,
    DEFAULT_MINOR_CAP,
    ComplexityReport,
    LimitError,
    MinorDescriptor,
    Permutation,
    RankCondition,
    SpectrumResult,
    VerificationOutcome,
    analyze,
    bundle,
    compose_antidiagonal,
    cone_dim_by_formula,
    cone_dim_by_rank,
    connected_components,
    dim_msv,
    dim_y,
    dominant_piece,
    enumerate_reports,
    essential_set,
    graph,
    is_french_young,
    l_diagram,
    l_prime_diagram,
    load_cache,
    minor_count,
    minor_generators,
    opposite_rothe,
    permutation_with_noninversions,
    rank_conditions,
    render,
    sample_reports,
    save_cache,
    southwest_closure,
    spectrum,
    verify,
    w0_si,
    witness,
)
from msv._core import VerificationError, __version__

__all__ = [
    "DEFAULT_MAX_EXHAUSTIVE_N",
    "DEFAULT_MINOR_CAP",
    "ComplexityReport",
    "LimitError",
    "MinorDescriptor",
    "Permutation",
    "RankCondition",
    "SpectrumResult",
    "VerificationError",
    "VerificationOutcome",
    "analyze",
    "bundle",
    "compose_antidiagonal",
    "cone_dim_by_formula",
    "cone_dim_by_rank",
    "connected_components",
    "dim_msv",
    "dim_y",
    "dominant_piece",
    "enumerate_reports",
    "essential_set",
    "graph",
    "is_french_young",
    "l_diagram",
    "l_prime_diagram",
    "load_cache",
    "minor_count",
    "minor_generators",
    "opposite_rothe",
    "permutation_with_noninversions",
    "rank_conditions",
    "render",
    "sample_reports",
    "save_cache",
    "southwest_closure",
    "spectrum",
    "verify",
    "w0_si",
    "witness",
]
