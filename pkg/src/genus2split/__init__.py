"""Exact computer algebra for genus 2 curves with split Jacobians.

The package computes Igusa and absolute invariants of sextics, the
invariants of unordered cubic pairs, and the surfaces in moduli space cut
out by degree 2 and degree 3 elliptic subcovers, together with their
singular loci and exceptional parametrization points.
"""

from .errors import Genus2Error
from .invariants import (
    AbsoluteInvariants,
    CubicPair,
    CubicPairInvariants,
    IgusaInvariants,
    SexticForm,
    absolute_from_igusa,
    absolute_from_sextic,
    curve_from_uv,
    igusa_from_sextic,
    pair_invariants,
)
from .multipoly import MultiPoly, RationalFunction, parse_poly
from .scalars import GFp, QuadExt, parse_scalar
from .singular import (
    ClassificationResult,
    GradientReport,
    classify_automorphism,
    gradient,
    sample_component_singularity,
    verify_c3_system,
    verify_minors_on_iso1,
    verify_t3_points,
    verify_table1,
    z_from_xy,
)
from .surfaces import (
    check_identity,
    eqr_to_rho_coordinates,
    identity_names,
    rho,
    surface_eval,
    theta,
    theta_from_pipeline,
    uv_to_r,
)

__all__ = [
    "AbsoluteInvariants",
    "ClassificationResult",
    "CubicPair",
    "CubicPairInvariants",
    "GFp",
    "Genus2Error",
    "GradientReport",
    "IgusaInvariants",
    "MultiPoly",
    "QuadExt",
    "RationalFunction",
    "SexticForm",
    "absolute_from_igusa",
    "absolute_from_sextic",
    "check_identity",
    "classify_automorphism",
    "curve_from_uv",
    "eqr_to_rho_coordinates",
    "gradient",
    "identity_names",
    "igusa_from_sextic",
    "pair_invariants",
    "parse_poly",
    "parse_scalar",
    "rho",
    "sample_component_singularity",
    "surface_eval",
    "theta",
    "theta_from_pipeline",
    "uv_to_r",
    "verify_c3_system",
    "verify_minors_on_iso1",
    "verify_t3_points",
    "verify_table1",
    "z_from_xy",
]

__version__ = "1.0.0"
