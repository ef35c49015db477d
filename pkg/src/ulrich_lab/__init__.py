"""Exact numerics of Ulrich bundles and their iterated syzygy bundles
on anticanonically embedded del Pezzo surfaces.

The package computes only with numerical invariants: Picard-lattice
divisor classes, ranks and Chern classes.  Everything is exact
(integers and rationals, plus one real quadratic field for the closed
rank formulas); nothing is floating point.
"""

from __future__ import annotations

from .chern import (
    BundleNumerics,
    NumericClassData,
    direct_sum,
    discriminant,
    dual,
    euler_char,
    expected_moduli_dim,
    reduce_numerics,
    slope,
    tensor,
    tensor_line,
    twist_by_h,
)
from .cubic import (
    CUBIC_SURFACE,
    StableSumDecomposition,
    TwistedCubicClass,
    chi_pair_closed_form,
    chi_pair_oracle,
    cubic_moduli_pair,
    decompose_stable_sum,
    decomposition_to_dict,
    is_twisted_cubic,
    kernel_bundle_of_cubic,
    twist_partner,
    twisted_cubic_representative,
    twisted_cubics,
)
from .errors import (
    BadPermutation,
    DegreeOutOfRange,
    EmptySum,
    LatticeMismatch,
    NoKernel,
    NonIntegerResult,
    NotUlrich,
    NotUlrichCompatible,
    OutOfTheoremScope,
    ParityViolation,
    ParseError,
    UlrichLabError,
)
from .picard import (
    DelPezzoSurface,
    DivisorClass,
    format_divisor,
    intersect,
    make_surface,
    parse_divisor,
    permute_exceptionals,
)
from .syzygy import (
    QuadraticNumber,
    SyzygyTrace,
    TraceEntry,
    closed_syzygy_chern,
    closed_syzygy_chern_numeric,
    discriminant_drift,
    iterate_syzygy,
    rank_by_recurrence,
    rank_closed_form,
    rank_two_table_chern,
    syzygy_numerics,
)
from .ulrich import (
    PolarizedData,
    butler_semistability_criterion,
    coprime_stability_criterion,
    curve_section_genus,
    is_ulrich_candidate,
    koszul_criterion,
    polarized_data_for,
    prioritary_polarization_check,
    ulrich_c2,
    ulrich_profile,
)

__version__ = "0.1.0"

__all__ = [
    "BadPermutation",
    "BundleNumerics",
    "CUBIC_SURFACE",
    "DegreeOutOfRange",
    "DelPezzoSurface",
    "DivisorClass",
    "EmptySum",
    "LatticeMismatch",
    "NoKernel",
    "NonIntegerResult",
    "NotUlrich",
    "NotUlrichCompatible",
    "NumericClassData",
    "OutOfTheoremScope",
    "ParityViolation",
    "ParseError",
    "PolarizedData",
    "QuadraticNumber",
    "StableSumDecomposition",
    "SyzygyTrace",
    "TraceEntry",
    "TwistedCubicClass",
    "UlrichLabError",
    "butler_semistability_criterion",
    "chi_pair_closed_form",
    "chi_pair_oracle",
    "closed_syzygy_chern",
    "closed_syzygy_chern_numeric",
    "coprime_stability_criterion",
    "cubic_moduli_pair",
    "curve_section_genus",
    "decompose_stable_sum",
    "decomposition_to_dict",
    "direct_sum",
    "discriminant",
    "discriminant_drift",
    "dual",
    "euler_char",
    "expected_moduli_dim",
    "format_divisor",
    "intersect",
    "is_twisted_cubic",
    "is_ulrich_candidate",
    "iterate_syzygy",
    "kernel_bundle_of_cubic",
    "koszul_criterion",
    "make_surface",
    "parse_divisor",
    "permute_exceptionals",
    "polarized_data_for",
    "prioritary_polarization_check",
    "rank_by_recurrence",
    "rank_closed_form",
    "rank_two_table_chern",
    "reduce_numerics",
    "slope",
    "syzygy_numerics",
    "tensor",
    "tensor_line",
    "twist_by_h",
    "twist_partner",
    "twisted_cubic_representative",
    "twisted_cubics",
    "ulrich_c2",
    "ulrich_profile",
]
