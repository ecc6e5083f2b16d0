"""Standard spines of one-vertex triangulations, Farey calculus on torus
slopes, and the assembling calculus of marked 3-manifolds."""

from .gluing import GluingError, GluingTable, parse_gluing_table, format_gluing_table, vertex_count
from .spine import StandardSpine, dual_spine, is_standard, prune_nonminimal
from .stiefel import stiefel_whitney_surface, surface_topology, sigma_stats, w1_cocycle
from .isosig import canonical_signature, from_signature
from .enumerate import PruneFlags, enumerate_one_vertex
from .theta_farey import (Slope, ThetaGraph, LensSpace, is_theta, flip, flip_distance,
                          apply_gl2, lens_complexity, lens_census)
from .seifert import Geometry, SeifertData, chi_orb, classify_geometry
from .assembling import (MarkedManifold, assemble, self_assemble, brick_fill_effect,
                         classify_torus_bundle, classify_two_twisted, classify_seifert_twisted,
                         nonorientable_c6_census)

__version__ = "0.1.0"

__all__ = [
    "GluingError", "GluingTable", "parse_gluing_table", "format_gluing_table", "vertex_count",
    "StandardSpine", "dual_spine", "is_standard", "prune_nonminimal",
    "stiefel_whitney_surface", "surface_topology", "sigma_stats", "w1_cocycle",
    "canonical_signature", "from_signature", "PruneFlags", "enumerate_one_vertex",
    "Slope", "ThetaGraph", "LensSpace", "is_theta", "flip", "flip_distance", "apply_gl2",
    "lens_complexity", "lens_census", "Geometry", "SeifertData", "chi_orb", "classify_geometry",
    "MarkedManifold", "assemble", "self_assemble", "brick_fill_effect", "classify_torus_bundle",
    "classify_two_twisted", "classify_seifert_twisted", "nonorientable_c6_census",
]
