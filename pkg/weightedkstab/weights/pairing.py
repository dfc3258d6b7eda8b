import logging
import sys
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from weightedkstab.config import Config
from weightedkstab.measures import SignedMeasure
from weightedkstab.poly import PiecewisePoly
from weightedkstab.weights.closed_forms import pair_expsum
from weightedkstab.weights.quadrature import gauss_legendre_integrate
from weightedkstab.weights.spec import WeightSpec, Constant, PolynomialWeight, CoshFamily, ExpSum

logger = logging.getLogger(__name__)

MASS_TOLERANCE = 1e-6


class PairingMethod(Enum):
    EXACT_RATIONAL = "exact_rational"
    CLOSED_FORM = "closed_form"
    QUADRATURE = "quadrature"


@dataclass(frozen=True)
class PairingResult:
    value: float
    method: PairingMethod
    error_bound: float
    exact: Optional[Fraction] = None

    @property
    def is_exact(self) -> bool:
        return self.exact is not None


def density_values(density: PiecewisePoly, ys: np.ndarray) -> np.ndarray:
    """Vectorised float evaluation, zero outside of the support"""
    ys = np.asarray(ys, dtype=float)
    breakpoints = np.array([float(b) for b in density.breakpoints])
    index = np.clip(np.searchsorted(breakpoints, ys, side="right") - 1, 0, len(density.pieces) - 1)
    values = np.zeros_like(ys)
    for i, piece in enumerate(density.pieces):
        mask = index == i
        if piece.is_zero() or not mask.any():
            continue
        values[mask] = np.polyval(piece.float_coefficients()[::-1], ys[mask])
    outside = (ys < breakpoints[0]) | (ys > breakpoints[-1])
    values[outside] = 0.0
    return values


def _density(m: Union[SignedMeasure, PiecewisePoly]) -> PiecewisePoly:
    return m.density if isinstance(m, SignedMeasure) else m


def _quadrature_points(density: PiecewisePoly, g: WeightSpec):
    lo, hi = (float(b) for b in density.support)
    return [float(b) for b in density.breakpoints] + [p for p in g.breakpoints() if lo < p < hi]


def _pair_quadrature(density: PiecewisePoly, g: WeightSpec, tol: float) -> PairingResult:
    result = gauss_legendre_integrate(
        lambda ys: density_values(density, ys) * g.evaluate_array(ys), _quadrature_points(density, g), tol
    )
    return PairingResult(result.value, PairingMethod.QUADRATURE, result.error)


def pair(
    m: Union[SignedMeasure, PiecewisePoly],
    g: WeightSpec,
    tol: Optional[float] = None,
    method: Optional[PairingMethod] = None,
) -> PairingResult:
    """
    ∫ density(y) g(y) dy over the support of the measure.

    Polynomial and constant weights are integrated exactly, cosh and exponential sums through exponential
    moments, everything else by adaptive Gauss-Legendre quadrature.
    :param m: signed measure (or bare density)
    :param g:
    :param tol: relative tolerance, Config.DEFAULT_TOLERANCE by default
    :param method: force a backend, e.g. QUADRATURE to cross-check a closed form
    :return:
    """
    tol = Config.DEFAULT_TOLERANCE if tol is None else tol
    if tol <= 0:
        raise ValueError(f"Pairing tolerance must be positive, got {tol}")
    density = _density(m)
    if method is None:
        if isinstance(g, (Constant, PolynomialWeight)):
            method = PairingMethod.EXACT_RATIONAL
        elif isinstance(g, (CoshFamily, ExpSum)):
            method = PairingMethod.CLOSED_FORM
        else:
            method = PairingMethod.QUADRATURE
    logger.debug("pairing with %r via %s", g, method.value)

    if method is PairingMethod.EXACT_RATIONAL:
        if not isinstance(g, (Constant, PolynomialWeight)):
            raise ValueError(f"{type(g).__name__} weights cannot be paired exactly")
        exact = (density * g.as_polynomial()).total()
        return PairingResult(float(exact), method, 0.0, exact)
    if method is PairingMethod.CLOSED_FORM:
        if not isinstance(g, (CoshFamily, ExpSum)):
            raise ValueError(f"{type(g).__name__} weights have no exponential closed form")
        terms = (g.as_expsum() if isinstance(g, CoshFamily) else g).terms
        value = pair_expsum(density, terms)
        return PairingResult(value, method, sys.float_info.epsilon * (1 + abs(value)))
    return _pair_quadrature(density, g, tol)


def weighted_mass(m: Union[SignedMeasure, PiecewisePoly], g: WeightSpec, tol: float = MASS_TOLERANCE) -> float:
    """∫ |density| g, the scale verdict tolerances are measured against (a few digits are enough)"""
    density = _density(m)
    result = gauss_legendre_integrate(
        lambda ys: np.abs(density_values(density, ys)) * g.evaluate_array(ys), _quadrature_points(density, g), tol
    )
    return result.value
