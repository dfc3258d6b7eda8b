import logging
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Tuple

from weightedkstab.exceptions import DomainError
from weightedkstab.geometry import MomentPolytope, logpair_polytope, quadric_polytope
from weightedkstab.poly import Polynomial, PiecewisePoly, as_rational
from weightedkstab.poly.polynomial import RationalLike

logger = logging.getLogger(__name__)

Y = Polynomial.identity()


class MeasureKind(Enum):
    MU = "mu"
    NU = "nu"


@dataclass(frozen=True)
class SignedMeasure:
    """A signed measure on the y-line, given by its exact density"""

    density: PiecewisePoly
    kind: MeasureKind
    case_ref: str = ""
    folded: bool = False

    @property
    def support(self) -> Tuple[Fraction, Fraction]:
        return self.density.support

    def total(self) -> Fraction:
        """Pairing with the constant weight 1"""
        return self.density.total()

    def fold(self) -> "SignedMeasure":
        """Measure on y >= 0 whose pairing with an even weight equals the pairing of self"""
        if self.folded:
            return self
        return replace(self, density=self.density.fold(), case_ref=f"{self.case_ref} (folded)", folded=True)


def nu_density(polytope: MomentPolytope) -> SignedMeasure:
    """
    ν: y ↦ (y - κ_y) ∫_{slice(y)} x**k dx
    :param polytope:
    :return:
    """
    factor = Y - polytope.kappa[1]
    density = polytope.fiber_integral(Polynomial.monomial(polytope.dh_exponent), factor)
    return SignedMeasure(density, MeasureKind.NU, polytope.label)


def mu_density(polytope: MomentPolytope) -> SignedMeasure:
    """
    μ: y ↦ ∫_{slice(y)} (x - κ_x) x**k dx
    :param polytope:
    :return:
    """
    k = polytope.dh_exponent
    integrand = Polynomial.monomial(k + 1) - Polynomial.monomial(k, polytope.kappa[0])
    return SignedMeasure(polytope.fiber_integral(integrand), MeasureKind.MU, polytope.label)


def measures(polytope: MomentPolytope) -> Tuple[SignedMeasure, SignedMeasure]:
    logger.debug("fiber integration over %r", polytope)
    return mu_density(polytope), nu_density(polytope)


def logpair_measures(t: RationalLike) -> Tuple[SignedMeasure, SignedMeasure]:
    """
    (μ_t, ν_t) of the log pair (2-29, tE)
    :param t: rational, 0 <= t < 1
    :return:
    """
    return measures(logpair_polytope(t))


def logpair_mu_folded_formula(t: RationalLike) -> PiecewisePoly:
    """(8/3)[(2-t)²(1-2t) on [0, 1+t] + (3-y)²(3-2y) on [1+t, 3]]"""
    t = as_rational(t)
    if not 0 <= t < 1:
        raise DomainError(f"Log pair parameter t must satisfy 0 <= t < 1, got {t}")
    eight_thirds = Fraction(8, 3)
    flat = Polynomial.constant(eight_thirds * (2 - t) ** 2 * (1 - 2 * t))
    tail = ((3 - Y) ** 2 * (3 - 2 * Y)).scale(eight_thirds)
    return PiecewisePoly([0, 1 + t, 3], [flat, tail])


def logpair_mu_one(t: RationalLike) -> Fraction:
    """μ_t(1) = -(4/3)(t-2)²(3t²+4t-2)"""
    t = as_rational(t)
    return -Fraction(4, 3) * (t - 2) ** 2 * (3 * t ** 2 + 4 * t - 2)


def quadric_measures(n: int) -> Tuple[SignedMeasure, SignedMeasure]:
    """Unfolded (μ, ν) of the quadric Q^{n-2}"""
    return measures(quadric_polytope(n))


def quadric_mu_density(n: int) -> SignedMeasure:
    """
    μ of Q^{n-2} folded onto [0, n-2], for pairing with even weights
    :param n: n >= 5
    :return:
    """
    mu, _ = quadric_measures(n)
    folded = mu.fold()
    formula = quadric_mu_folded_formula(n)
    if folded.density != formula:
        raise RuntimeError(f"Q^{n - 2}: folded density {folded.density!r} differs from the closed form {formula!r}")
    return folded


def quadric_mu_folded_formula(n: int) -> PiecewisePoly:
    """(4 / ((n-2)(n-3))) (2n-4-2y)^{n-3} (n-2-(n-3)y) on [0, n-2]"""
    if isinstance(n, bool) or not isinstance(n, int) or n < 5:
        raise DomainError(f"Quadric family needs an integer n >= 5, got {n!r}")
    factor = Fraction(4, (n - 2) * (n - 3))
    density = ((2 * n - 4 - 2 * Y) ** (n - 3) * ((n - 2) - (n - 3) * Y)).scale(factor)
    return PiecewisePoly([0, n - 2], [density])
