import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from weightedkstab.config import Config
from weightedkstab.exceptions import NonPositiveWeightError
from weightedkstab.stability.case import StabilityCase
from weightedkstab.utils.exit_status import ExitCode
from weightedkstab.weights import WeightSpec, PairingMethod, PairingResult, pair, validate_positive_on, weighted_mass
from weightedkstab.weights.parser import format_weight

logger = logging.getLogger(__name__)


class Classification(Enum):
    POLYSTABLE = "polystable"
    STRICTLY_SEMISTABLE = "strictly_semistable"
    UNSTABLE = "unstable"
    FUTAKI_NONZERO = "futaki_nonzero"

    @property
    def exit_code(self) -> ExitCode:
        return {
            Classification.POLYSTABLE: ExitCode.POLYSTABLE,
            Classification.STRICTLY_SEMISTABLE: ExitCode.STRICTLY_SEMISTABLE,
            Classification.UNSTABLE: ExitCode.UNSTABLE,
            Classification.FUTAKI_NONZERO: ExitCode.FUTAKI_NONZERO,
        }[self]


@dataclass(frozen=True)
class StabilityVerdict:
    case: str
    weight: str
    futaki: float
    margin: float
    classification: Classification
    tolerance: float
    futaki_method: PairingMethod
    margin_method: PairingMethod
    futaki_exact: Optional[Fraction] = None
    margin_exact: Optional[Fraction] = None

    @property
    def exit_code(self) -> ExitCode:
        return self.classification.exit_code


def classify_values(futaki: float, margin: float, tolerance: float) -> Classification:
    if abs(futaki) > tolerance:
        return Classification.FUTAKI_NONZERO
    if margin > tolerance:
        return Classification.POLYSTABLE
    if margin < -tolerance:
        return Classification.UNSTABLE
    return Classification.STRICTLY_SEMISTABLE


def _futaki(case: StabilityCase, g: WeightSpec, tol: float) -> PairingResult:
    if case.symmetric and g.is_even:
        # ν is odd and g even
        return PairingResult(0.0, PairingMethod.EXACT_RATIONAL, 0.0, Fraction(0))
    return pair(case.nu, g, tol)


def classify(case: StabilityCase, g: WeightSpec, tol: Optional[float] = None) -> StabilityVerdict:
    """
    Weighted K-stability of a rank two case for the weight g: the Futaki term ν(g) must vanish and the
    margin μ(g) decides between polystable, strictly semistable and unstable.
    :param case:
    :param g: weight, checked to be positive on the support first
    :param tol: relative tolerance; the absolute tolerance is tol * ∫|μ| g
    :return:
    """
    tol = Config.DEFAULT_TOLERANCE if tol is None else tol
    lo, hi = case.support
    if not validate_positive_on(g, lo, hi):
        raise NonPositiveWeightError(f"Weight {format_weight(g)} is not positive on [{lo}, {hi}]")
    futaki = _futaki(case, g, tol)
    margin = pair(case.mu, g, tol)
    tolerance = tol * weighted_mass(case.mu, g)
    classification = classify_values(futaki.value, margin.value, tolerance)
    logger.info(
        "%s, %s: futaki %.12g, margin %.12g, tolerance %.3g -> %s",
        case.label,
        format_weight(g),
        futaki.value,
        margin.value,
        tolerance,
        classification.value,
    )
    return StabilityVerdict(
        case=case.label,
        weight=format_weight(g),
        futaki=futaki.value,
        margin=margin.value,
        classification=classification,
        tolerance=tolerance,
        futaki_method=futaki.method,
        margin_method=margin.method,
        futaki_exact=futaki.exact,
        margin_exact=margin.exact,
    )


def pairing_along(case: StabilityCase, xi: Sequence[float], g: WeightSpec, tol: Optional[float] = None) -> float:
    """
    ∫ <p - κ, ξ> g P_DH over the polytope for ξ = (ξ1, ξ2), in the sign convention where the valuation
    cone is the half-plane ξ1 >= 0: semistability means this is <= 0 on the whole half-plane.
    :param case:
    :param xi:
    :param g:
    :param tol:
    :return: -ξ1·μ(g) + ξ2·ν(g)
    """
    xi1, xi2 = (float(c) for c in xi)
    value = 0.0
    if xi1:
        value -= xi1 * pair(case.mu, g, tol).value
    if xi2:
        value += xi2 * _futaki(case, g, Config.DEFAULT_TOLERANCE if tol is None else tol).value
    return value
