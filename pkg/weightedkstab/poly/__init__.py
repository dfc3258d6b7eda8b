from weightedkstab.poly.polynomial import Polynomial, as_rational
from weightedkstab.poly.piecewise import PiecewisePoly, definite_integral
from weightedkstab.poly.roots import (
    RootInterval,
    PieceWitness,
    NonnegativityReport,
    isolate_roots,
    is_nonnegative_on,
    square_free_part,
    square_free_decomposition,
    descartes_bound,
)

__all__ = [
    "Polynomial",
    "as_rational",
    "PiecewisePoly",
    "definite_integral",
    "RootInterval",
    "PieceWitness",
    "NonnegativityReport",
    "isolate_roots",
    "is_nonnegative_on",
    "square_free_part",
    "square_free_decomposition",
    "descartes_bound",
]
