"""Exact constructive projective plane geometry over the rationals."""
from .conic import Conic, conic_through_5, on_conic, pascal_line, pascal_sixth_point, polar, pole, steiner_conic, tangent_at
from .errors import EvalError, GeometryError, ParseError
from .harmonic import cross_ratio
from .harmonic import harmonic as harmonic_conjugate  # keeps pgeo.harmonic the module
from .plane import (
    LINE_AT_INFINITY,
    HomLine,
    HomPoint,
    apart,
    incident,
    join,
    line,
    meet,
    outside,
    point,
)
from .projectivity import Pencil, Projectivity, Range, fixed_elements, projectivity_from_triples
from .scalar import Scalar

__version__ = "0.1.0"

__all__ = [
    "Conic", "EvalError", "GeometryError", "HomLine", "HomPoint", "LINE_AT_INFINITY", "ParseError",
    "Pencil", "Projectivity", "Range", "Scalar", "apart", "conic_through_5", "cross_ratio",
    "fixed_elements", "harmonic_conjugate", "incident", "join", "line", "meet", "on_conic", "outside",
    "pascal_line", "pascal_sixth_point", "point", "polar", "pole", "projectivity_from_triples",
    "steiner_conic", "tangent_at",
]
