"""Persistence spaces of multi-parameter filtrations on finite simplicial
complexes, with exact rational arithmetic throughout.

The package computes persistent Betti numbers over a prime field,
cornerpoint multiplicities, ray sections of persistence spaces, exact
diagonal-window counts, Hausdorff-stability certificates, and
homological-critical-value witnesses.
"""
from .grades import Grade, diagonal, rational
from .complexes import (
    ComplexFormatError,
    CoordinateGrid,
    MultiFilteredComplex,
    Simplex,
    SubcomplexSelection,
    ValidationError,
    complex_to_text,
    coordinate_grid,
    lower_star_extend,
    parse_complex,
    sublevel,
    validate,
)
from .homology import (
    BoundaryMatrix,
    FieldPrime,
    PBNValue,
    betti,
    boundary_matrix,
    diagram_1d,
    kernel_basis,
    pbn,
    rank_mod_p,
)
from .space import (
    Cornerpoint,
    RaySection,
    StabilizationRadius,
    default_rays,
    mu_infinity,
    mu_proper,
    persistence_of,
    ray_section,
    reconstruct_pbn,
    sample_space,
    stabilization_radius,
    window_count_infinity,
    window_count_proper,
)
from .metric import (
    ExtendedPoint,
    MatchVerdict,
    SkeletonMismatch,
    StabilityReport,
    diagonal_distance,
    directed_match_check,
    ext_distance,
    interpolate,
    stability_check,
    sup_norm_distance,
)
from .critical import (
    CornerpointCriticalReport,
    CriticalWitness,
    StaleCornerpoint,
    check_cornerpoint_critical,
    is_homological_critical,
)
from .generate import random_complex
from . import fixtures

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
