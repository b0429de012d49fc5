"""Exact divisor-class computations on blow-ups of the projective plane."""
from .picard import (
    DivisorClass,
    SurfaceContext,
    add,
    canonical_class,
    edim,
    format_divisor,
    homogeneous,
    intersect,
    parse_divisor,
    primitive_part,
    scale,
    vdim,
)

__version__ = "0.1.0"
