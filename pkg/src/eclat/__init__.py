"""Lattices attached to finite abelian groups and elliptic curves over
prime fields: minimal-vector bases, exact determinants, packing-density and
covering-radius verification."""

from .basis import (
    BasisResult,
    VerificationReport,
    build_minimal_basis,
    cyclic_basis,
    explicit_small_basis,
    klein_basis,
    rect_basis,
    small_cyclic_basis,
    verify_basis,
)
from .curves import Curve, CurveGroup, CurvePoint, curve_group, group_structure, subgroup
from .geometry import (
    CoveringReport,
    DensityReport,
    SampledCoveringReport,
    covering_bounds,
    covering_radius_An_sq,
    cvp,
    deep_hole_An,
    mh_window_scan,
    packing_density_log,
    retract,
    sampled_covering_check,
    zeta,
)
from .groups import (
    AbelianGroup,
    GroupElement,
    canonical_groups_of_order,
    canonical_map,
    make_group,
    parse_group_spec,
)
from .lattice import (
    GramReport,
    Lattice,
    Vector,
    divisor_degree,
    gram_report,
    index_from_generators,
    span_rank,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "BasisResult",
    "CoveringReport",
    "Curve",
    "CurveGroup",
    "CurvePoint",
    "DensityReport",
    "GramReport",
    "GroupElement",
    "Lattice",
    "SampledCoveringReport",
    "VerificationReport",
    "Vector",
    "build_minimal_basis",
    "canonical_groups_of_order",
    "canonical_map",
    "covering_bounds",
    "covering_radius_An_sq",
    "curve_group",
    "cvp",
    "cyclic_basis",
    "deep_hole_An",
    "divisor_degree",
    "explicit_small_basis",
    "gram_report",
    "group_structure",
    "index_from_generators",
    "klein_basis",
    "make_group",
    "mh_window_scan",
    "packing_density_log",
    "parse_group_spec",
    "rect_basis",
    "retract",
    "sampled_covering_check",
    "small_cyclic_basis",
    "span_rank",
    "subgroup",
    "verify_basis",
    "zeta",
]
