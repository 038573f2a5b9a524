"""Exact sheaf cohomology of line bundles on complete simplicial toric varieties."""

from ._core import (
    ChowElement,
    ChowRing,
    CoefficientRing,
    CohomologyEngine,
    CohomologyTable,
    CycleCheck,
    DomainError,
    Fan,
    Feasibility,
    H1Class,
    HomologyProfile,
    PatternAudit,
    PicardPresentation,
    SignPattern,
    SupportComplex,
    SymmetryReport,
    ValidationReport,
    __version__,
    build_del_pezzo_fan,
    build_projective_fan,
    canonical_divisor,
    chern_pair,
    cycle_criterion,
    fan_from_json,
    lattice_points,
    prop43_divisor,
    prop43_uniform_divisor,
    reduced_homology,
    riemann_roch_chi,
    smith_diagonal,
    splitting_candidates,
    support_complex,
    symmetry_report,
)

__all__ = [
    "ChowElement",
    "ChowRing",
    "CoefficientRing",
    "CohomologyEngine",
    "CohomologyTable",
    "CycleCheck",
    "DomainError",
    "Fan",
    "Feasibility",
    "H1Class",
    "HomologyProfile",
    "PatternAudit",
    "PicardPresentation",
    "SignPattern",
    "SupportComplex",
    "SymmetryReport",
    "ValidationReport",
    "__version__",
    "build_del_pezzo_fan",
    "build_projective_fan",
    "canonical_divisor",
    "chern_pair",
    "cycle_criterion",
    "fan_from_json",
    "lattice_points",
    "prop43_divisor",
    "prop43_uniform_divisor",
    "reduced_homology",
    "riemann_roch_chi",
    "smith_diagonal",
    "splitting_candidates",
    "support_complex",
    "symmetry_report",
]
