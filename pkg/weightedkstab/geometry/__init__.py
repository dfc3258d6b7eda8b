from weightedkstab.geometry.polytope import (
    MomentPolytope,
    Slice,
    anticanonical_degree,
    logpair_polytope,
    quadric_polytope,
)

__all__ = [
    "MomentPolytope",
    "Slice",
    "anticanonical_degree",
    "logpair_polytope",
    "quadric_polytope",
]
