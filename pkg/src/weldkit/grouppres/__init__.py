"""Group presentations of welded knots and the certificates built on them."""

from .invariants import (
    ColoringReport,
    abelianization,
    alexander_matrix,
    alexander_polynomial,
    coloring_count,
    coloring_matrix,
    dihedral_nontriviality,
    is_h1_infinite_cyclic,
    presentation_coloring_count,
)
from .laurent import LaurentPolynomial
from .presentation import (
    PROVED,
    UNKNOWN,
    Presentation,
    crossing_arcs,
    cyclic_reduce,
    free_reduce,
    is_infinite_cyclic_certificate,
    tietze_simplify,
    wirtinger,
)
from .snf import smith_normal_form

__all__ = [
    "PROVED",
    "UNKNOWN",
    "ColoringReport",
    "LaurentPolynomial",
    "Presentation",
    "abelianization",
    "alexander_matrix",
    "alexander_polynomial",
    "coloring_count",
    "coloring_matrix",
    "crossing_arcs",
    "cyclic_reduce",
    "dihedral_nontriviality",
    "free_reduce",
    "is_h1_infinite_cyclic",
    "is_infinite_cyclic_certificate",
    "presentation_coloring_count",
    "smith_normal_form",
    "tietze_simplify",
    "wirtinger",
]
