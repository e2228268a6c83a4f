from .chain_map import ChainMap
from .complex import Complex, ValidationReport, validate
from .constructions import (
    Cone,
    cocylinder_factor,
    cocylinder_map,
    cone,
    cylinder_factor,
    cylinder_map,
    detour_cocylinder_factor,
    detour_cylinder_factor,
    direct_sum,
    dualize,
    dualize_map,
    shift,
    sum_inclusions,
    sum_projections,
)
from .exceptions import ChainError, DocumentError, SupportGuardError, ValidationError
from .fillers import ChainMapSpace, MapConstraint, chain_map_space, solve_chain_map
from .homology import (
    GradedDims,
    are_weakly_equivalent,
    cycle_inclusion,
    cycle_representatives,
    homology_complex,
    homology_dims,
    homology_projection,
    induced_rank,
    is_acyclic,
    is_homology_surjective,
    is_quasi_iso,
)
from .limits import pullback, pullback_map, pushout, pushout_map

__all__ = [
    "ChainError",
    "ChainMap",
    "ChainMapSpace",
    "Complex",
    "Cone",
    "DocumentError",
    "GradedDims",
    "MapConstraint",
    "SupportGuardError",
    "ValidationError",
    "ValidationReport",
    "are_weakly_equivalent",
    "chain_map_space",
    "cocylinder_factor",
    "cocylinder_map",
    "cone",
    "cycle_inclusion",
    "cycle_representatives",
    "cylinder_factor",
    "cylinder_map",
    "detour_cocylinder_factor",
    "detour_cylinder_factor",
    "direct_sum",
    "dualize",
    "dualize_map",
    "homology_complex",
    "homology_dims",
    "homology_projection",
    "induced_rank",
    "is_acyclic",
    "is_homology_surjective",
    "is_quasi_iso",
    "pullback",
    "pullback_map",
    "pushout",
    "pushout_map",
    "shift",
    "solve_chain_map",
    "sum_inclusions",
    "sum_projections",
    "validate",
]
