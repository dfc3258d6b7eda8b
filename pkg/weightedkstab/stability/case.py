from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from weightedkstab.geometry import MomentPolytope, logpair_polytope, quadric_polytope
from weightedkstab.measures import SignedMeasure, lookup, measures
from weightedkstab.poly import as_rational
from weightedkstab.poly.polynomial import RationalLike


class CaseFamily(Enum):
    THREEFOLD = "threefold"
    LOGPAIR = "logpair"
    QUADRIC = "quadric"
    CUSTOM = "custom"


@dataclass(frozen=True)
class StabilityCase:
    """Everything the stability criterion needs: the two signed measures of a polytope and its symmetry"""

    label: str
    mu: SignedMeasure
    nu: SignedMeasure
    symmetric: bool
    family: CaseFamily
    polytope: MomentPolytope
    parameter: Optional[Fraction] = None

    @property
    def support(self) -> Tuple[Fraction, Fraction]:
        return self.mu.support

    @classmethod
    def from_polytope(
        cls, polytope: MomentPolytope, family: CaseFamily = CaseFamily.CUSTOM, parameter: Optional[Fraction] = None
    ) -> "StabilityCase":
        mu, nu = measures(polytope)
        label = polytope.label or repr(polytope)
        return cls(label, mu, nu, polytope.is_y_symmetric(), family, polytope, parameter)

    @classmethod
    def from_catalog(cls, identifier: str) -> "StabilityCase":
        case = lookup(identifier)
        return cls.from_polytope(case.polytope, CaseFamily.THREEFOLD)

    @classmethod
    def logpair(cls, t: RationalLike) -> "StabilityCase":
        polytope = logpair_polytope(t)
        return cls.from_polytope(polytope, CaseFamily.LOGPAIR, as_rational(t))

    @classmethod
    def quadric(cls, n: int) -> "StabilityCase":
        return cls.from_polytope(quadric_polytope(n), CaseFamily.QUADRIC, Fraction(n))
