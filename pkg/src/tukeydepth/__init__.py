"""Exact Tukey depth of points and flats, depth histograms and their realization."""

from .depth import (
    DepthHistogram,
    FlatSpec,
    MultisetPoint,
    affine_depth,
    convex_depth,
    depth_histogram,
    flat_depth,
    max_open_count,
    point_depths,
    tukey_depth,
    tukey_depth_multiset,
)
from .errors import (
    DegeneracyError,
    InputError,
    RealizationFailed,
    RejectionLimitError,
    TukeyDepthError,
)
from .geometry import (
    PointSet,
    SidePartition,
    is_general_position,
    orientation,
    random_point_set,
    side_partition,
)
from .histograms import (
    check_convex_cross_necessary,
    check_kflat_necessary,
    count_recurrence,
    count_total,
    count_with_max_depth,
    enumerate_valid,
    max_depth_bound,
    simplesum_identity_check,
    truncate,
    validate_point_histogram,
)
from .io import parse_document, serialize_document
from .realizer import (
    ConfigKind,
    PushEvent,
    RealizationTrace,
    classify_configuration,
    find_push_directions,
    induced_spherical,
    push_to_depth,
    realize,
    stereographic_to_lower,
)

__all__ = [
    "DepthHistogram",
    "FlatSpec",
    "MultisetPoint",
    "affine_depth",
    "convex_depth",
    "depth_histogram",
    "flat_depth",
    "max_open_count",
    "point_depths",
    "tukey_depth",
    "tukey_depth_multiset",
    "DegeneracyError",
    "InputError",
    "RealizationFailed",
    "RejectionLimitError",
    "TukeyDepthError",
    "PointSet",
    "SidePartition",
    "is_general_position",
    "orientation",
    "random_point_set",
    "side_partition",
    "check_convex_cross_necessary",
    "check_kflat_necessary",
    "count_recurrence",
    "count_total",
    "count_with_max_depth",
    "enumerate_valid",
    "max_depth_bound",
    "simplesum_identity_check",
    "truncate",
    "validate_point_histogram",
    "ConfigKind",
    "PushEvent",
    "RealizationTrace",
    "classify_configuration",
    "find_push_directions",
    "induced_spherical",
    "push_to_depth",
    "realize",
    "stereographic_to_lower",
]
