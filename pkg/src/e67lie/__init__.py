"""Exact-arithmetic structure toolkit for the split Lie algebras E6 and E7.

Builds the root systems, a Chevalley basis with signed integer structure
constants, the named parabolic subalgebras with their nilradical gradings,
the three-layer Heisenberg tower, and the center decompositions, paired
bases, invariant forms and stabilizer dimensions used by the verification
suite.  Every computation is exact; the ``verify`` module turns each claim
into a named check with an expected and an actual value.
"""

from .chevalley import (
    ActionMatrix,
    AlgElement,
    ChevalleyAlgebra,
    ChevalleyError,
    action_matrix,
    bracket,
    build_chevalley,
    kernel_dim,
)
from .golden import (
    GoldenTableError,
    GoldenTables,
    compare_tables,
    packaged_golden_path,
    parse_golden_file,
    parse_golden_text,
)
from .parabolic import (
    HeisenbergTower,
    NamedParabolic,
    ParabolicDecomposition,
    ParabolicError,
    PrincipalSeriesCodim,
    TowerError,
    decompose,
    heisenberg_tower,
    named_parabolic,
    principal_series_codim,
    rank3_orbit_dim,
)
from .roots import (
    Root,
    RootSystem,
    RootSystemError,
    RootSystemType,
    Subsystem,
    SubsystemComponent,
    build_root_system,
    highest_root,
    orthogonal_subsystem,
    pairing,
    subsystem,
)
from .structures import (
    BasisVector,
    CharacterClass,
    HeisenbergDecomposition,
    InvariantForm,
    OrbitTangents,
    PairedBasis,
    Poly,
    PolarizationReport,
    Quartet,
    QuartetPartition,
    RadicalDecomposition,
    SpectrumVector,
    StabilizerResult,
    StructureError,
    abelian_radical_partition,
    center_form,
    center_slice_action,
    classify_character,
    find_paired_basis,
    induced_heisenberg_rank,
    omega_matrix,
    orbit_tangent_dims,
    polarization_check,
    quartet_partition,
    spectrum_identity_poly,
    spectrum_vector,
    split_heisenberg_radical,
    split_radical,
    stabilizer_dim,
)
from .verify import (
    Check,
    StructureSet,
    VerificationReport,
    build_structures,
    verify_all,
)

__version__ = "0.1.0"

__all__ = [
    "ActionMatrix",
    "AlgElement",
    "BasisVector",
    "CharacterClass",
    "Check",
    "ChevalleyAlgebra",
    "ChevalleyError",
    "GoldenTableError",
    "GoldenTables",
    "HeisenbergDecomposition",
    "HeisenbergTower",
    "InvariantForm",
    "NamedParabolic",
    "OrbitTangents",
    "PairedBasis",
    "ParabolicDecomposition",
    "ParabolicError",
    "Poly",
    "PolarizationReport",
    "PrincipalSeriesCodim",
    "Quartet",
    "QuartetPartition",
    "RadicalDecomposition",
    "Root",
    "RootSystem",
    "RootSystemError",
    "RootSystemType",
    "SpectrumVector",
    "StabilizerResult",
    "StructureError",
    "StructureSet",
    "Subsystem",
    "SubsystemComponent",
    "TowerError",
    "VerificationReport",
    "abelian_radical_partition",
    "action_matrix",
    "bracket",
    "build_chevalley",
    "build_root_system",
    "build_structures",
    "center_form",
    "center_slice_action",
    "classify_character",
    "compare_tables",
    "decompose",
    "find_paired_basis",
    "heisenberg_tower",
    "highest_root",
    "induced_heisenberg_rank",
    "kernel_dim",
    "named_parabolic",
    "omega_matrix",
    "orbit_tangent_dims",
    "orthogonal_subsystem",
    "packaged_golden_path",
    "pairing",
    "parse_golden_file",
    "parse_golden_text",
    "polarization_check",
    "principal_series_codim",
    "quartet_partition",
    "rank3_orbit_dim",
    "spectrum_identity_poly",
    "spectrum_vector",
    "split_heisenberg_radical",
    "split_radical",
    "stabilizer_dim",
    "subsystem",
    "verify_all",
]
