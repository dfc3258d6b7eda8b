"""The log Fano pairs (X, tE), X the threefold 2-29 and E the exceptional divisor of X → Q^3.

μ_t(1) = -(4/3)(t - 2)²(3t² + 4t - 2) vanishes at t0 = (√10 - 2)/3, where the pair is strictly
K-semistable for the trivial weight and weighted K-polystable for weights concentrated around y = 0.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from weightedkstab.config import Config
from weightedkstab.poly import Polynomial, RootInterval, as_rational, isolate_roots
from weightedkstab.stability.case import StabilityCase
from weightedkstab.stability.verdict import StabilityVerdict, classify
from weightedkstab.weights import Constant, MollifiedIndicator, Sech

logger = logging.getLogger(__name__)

T0_POLYNOMIAL = Polynomial([-2, 4, 3])
DEFAULT_BUMP_HALF_WIDTH = Fraction(1, 2)


def logpair_t0_interval(resolution=None) -> RootInterval:
    """Isolating interval of t0 in (0, 1), narrower than resolution (Config.ROOT_RESOLUTION by default)"""
    resolution = Config.ROOT_RESOLUTION if resolution is None else resolution
    roots = isolate_roots(T0_POLYNOMIAL, 0, 1, resolution=_as_resolution(resolution))
    (root,) = roots
    return root


def _as_resolution(value) -> Fraction:
    return Fraction(value) if isinstance(value, float) else as_rational(value)


def logpair_t0(tol: float = 1e-9) -> float:
    """
    t0 = (√10 - 2)/3 by exact root isolation
    :param tol: width of the isolating interval
    :return:
    """
    if tol <= 0:
        raise ValueError(f"Tolerance must be positive, got {tol}")
    return float(logpair_t0_interval(tol).midpoint)


def stabilizing_bump(half_width=DEFAULT_BUMP_HALF_WIDTH) -> MollifiedIndicator:
    """Smooth even positive approximation of the indicator of [-half_width, half_width]"""
    half_width = float(half_width)
    return MollifiedIndicator(-half_width, half_width, half_width / 2)


@dataclass(frozen=True)
class LogPairReport:
    t0: float
    t0_rational: Fraction
    resolution: Fraction
    constant: StabilityVerdict
    sech: StabilityVerdict
    bump: StabilityVerdict


def analyze_logpair(tol: Optional[float] = None, half_width=DEFAULT_BUMP_HALF_WIDTH) -> LogPairReport:
    """
    Verdicts of (X, t0 E) for the constant weight, 1/cosh and a bump around y = 0. The pair is
    materialized at the midpoint of an isolating interval of width Config.ROOT_RESOLUTION.
    :param tol: relative tolerance of the verdicts
    :param half_width: half width of the bump weight
    :return:
    """
    interval = logpair_t0_interval()
    t0 = interval.midpoint
    case = StabilityCase.logpair(t0)
    report = LogPairReport(
        t0=float(t0),
        t0_rational=t0,
        resolution=interval.width,
        constant=classify(case, Constant(1), tol),
        sech=classify(case, Sech(), tol),
        bump=classify(case, stabilizing_bump(half_width), tol),
    )
    logger.info("t0 = %.12f: constant %s, sech %s", report.t0, report.constant.classification.value, report.sech.classification.value)
    return report
