"""Welded knot diagrams as signed Gauss codes: moves, group invariants,
triviality verdicts and welded unknotting bounds."""

from . import _kernels
from .errors import WeldkitError
from .gaussdiag import (
    EMPTY,
    Arc,
    Pass,
    WeldedDiagram,
    arcs,
    canonicalize,
    format_code,
    parse,
    relabel,
    reverse,
    rotate,
    serialize,
    weld,
    weld_set,
)

BACKEND = _kernels.BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "EMPTY",
    "Arc",
    "Pass",
    "WeldedDiagram",
    "WeldkitError",
    "arcs",
    "canonicalize",
    "format_code",
    "parse",
    "relabel",
    "reverse",
    "rotate",
    "serialize",
    "weld",
    "weld_set",
]
