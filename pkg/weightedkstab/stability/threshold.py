import logging
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

from weightedkstab.config import Config
from weightedkstab.exceptions import ArgumentOrderError, BracketError, SearchFailureError
from weightedkstab.stability.case import StabilityCase
from weightedkstab.weights import CoshFamily, PairingMethod, closed_form_case, mu_ga_closed_form, pair

logger = logging.getLogger(__name__)

MAX_ITERATIONS = 200
# bracket width below which bisection hands over to the secant steps
SECANT_WIDTH = 1e-2


@dataclass(frozen=True)
class ThresholdResult:
    case: str
    a0: float
    bracket: Tuple[float, float]
    residual: float
    iterations: int
    tolerance: float
    quadrature_check: Optional[float] = None


def _sign(value: float) -> int:
    return (value > 0) - (value < 0)


def bisection_secant(
    f: Callable[[float], float], lo: float, hi: float, target: float, max_iterations: int = MAX_ITERATIONS
) -> Tuple[float, float, int, Tuple[float, float]]:
    """
    Root of f in [lo, hi] with |f(root)| <= target. Bisection narrows the bracket, then secant steps
    take over; a secant step leaving the current bracket falls back to bisection.
    :return: (root, f(root), iterations, final bracket); the bracket still has the sign change and
        the root is one of its ends
    """
    f_lo, f_hi = f(lo), f(hi)
    for value, point in ((f_lo, lo), (f_hi, hi)):
        if abs(value) <= target:
            return point, value, 0, (lo, hi)
    if _sign(f_lo) == _sign(f_hi):
        raise BracketError(f"f({lo}) = {f_lo:.6g} and f({hi}) = {f_hi:.6g} have the same sign")

    for iteration in range(1, max_iterations + 1):
        if hi - lo > SECANT_WIDTH:
            x = (lo + hi) / 2
        else:
            x = hi - f_hi * (hi - lo) / (f_hi - f_lo)
            if not lo < x < hi:
                x = (lo + hi) / 2
        f_x = f(x)
        logger.debug("iteration %d: f(%.15g) = %.6g", iteration, x, f_x)
        if _sign(f_x) == _sign(f_lo):
            lo, f_lo = x, f_x
        else:
            hi, f_hi = x, f_x
        if abs(f_x) <= target or hi - lo <= 4 * abs(x) * 2.0 ** -52:
            return x, f_x, iteration, (lo, hi)
    raise SearchFailureError(f"No root within {max_iterations} iterations, last bracket [{lo}, {hi}]")


def find_threshold(
    case,
    bracket: Optional[Tuple[float, float]] = None,
    tol: Optional[float] = None,
    validate: bool = True,
) -> ThresholdResult:
    """
    Parameter a0 where μ(cosh(a0·)) changes sign, from the closed form of μ(g_a)
    :param case: "3-2-18" (quadric threefold) or "3-2-19" (threefold 2-29), aliases accepted
    :param bracket: (lo, hi), Config.THRESHOLD_BRACKET by default
    :param tol: |μ(g_a0)| <= tol * μ(1), Config.THRESHOLD_TOLERANCE by default
    :param validate: cross-check μ(g_a0) by quadrature over the exact density
    :return:
    """
    closed_form = closed_form_case(case)
    lo, hi = (float(b) for b in (bracket or Config.THRESHOLD_BRACKET))
    tol = Config.THRESHOLD_TOLERANCE if tol is None else tol
    if lo >= hi:
        raise ArgumentOrderError(f"Bracket must satisfy lo < hi, got ({lo}, {hi})")
    scale = abs(mu_ga_closed_form(closed_form, 0.0))
    target = tol * scale

    def margin(a: float) -> float:
        return mu_ga_closed_form(closed_form, a)

    try:
        a0, residual, iterations, narrowed = bisection_secant(margin, lo, hi, target)
    except BracketError as e:
        raise BracketError(f"{closed_form.value}: no sign change of μ(cosh(a·)) on [{lo}, {hi}] ({e.detail})")

    quadrature_check = None
    if validate:
        mu = StabilityCase.from_catalog(closed_form.value).mu
        quadrature_check = pair(mu, CoshFamily(a0), method=PairingMethod.QUADRATURE).value
        if abs(quadrature_check - residual) > 1e-8 * (1 + scale):
            logger.warning(
                "%s: quadrature %.6g disagrees with the closed form %.6g at a0", closed_form.value, quadrature_check, residual
            )
    logger.info("%s: a0 = %.12f after %d iterations", closed_form.value, a0, iterations)
    return ThresholdResult(closed_form.value, a0, narrowed, residual, iterations, target, quadrature_check)
