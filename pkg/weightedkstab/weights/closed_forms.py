"""Closed forms for pairings with exponential weights.

Two kinds of formulas live here: the exponential moments ∫ y^m e^{ry} dy that pair any polynomial
density with an exponential sum, and the explicit expressions of μ(cosh(a·)) for the quadric
threefold (action 3-2-18) and for the threefold 2-29 (action 3-2-19). All of them are evaluated with
mpmath at ``Config.CLOSED_FORM_DPS`` digits and rounded to float at the end.
"""
import logging
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import List

import mpmath

from weightedkstab.config import Config
from weightedkstab.exceptions import UnsupportedCaseError
from weightedkstab.poly import PiecewisePoly

logger = logging.getLogger(__name__)

SERIES_TERMS = 24


class ClosedFormCase(Enum):
    Q3 = "3-2-18"
    MM_2_29 = "3-2-19"


_ALIASES = {
    "q3": ClosedFormCase.Q3,
    "3-2-18": ClosedFormCase.Q3,
    "2-29": ClosedFormCase.MM_2_29,
    "mm2-29": ClosedFormCase.MM_2_29,
    "3-2-19": ClosedFormCase.MM_2_29,
}


def closed_form_case(identifier) -> ClosedFormCase:
    if isinstance(identifier, ClosedFormCase):
        return identifier
    try:
        return _ALIASES[str(identifier).strip().lower()]
    except KeyError:
        raise UnsupportedCaseError(f"No closed form for μ(cosh(a·)) is known for {identifier!r}")


def _mpf(value: Fraction) -> mpmath.mpf:
    return mpmath.mpf(value.numerator) / value.denominator


@lru_cache(maxsize=4)
def _series_coefficients(case: ClosedFormCase) -> List[Fraction]:
    """Coefficients c_j with μ(g_a) = Σ_j c_j a^{2j}"""
    coefficients = []
    for k in range(2, SERIES_TERMS + 2):
        if case is ClosedFormCase.Q3:
            bracket = Fraction(3 ** (2 * k - 1) * (2 * k - 6), factorial(2 * k))
            coefficients.append(-16 * bracket)
        else:
            bracket = (
                Fraction(9 ** k - 1, factorial(2 * k))
                - Fraction(2, factorial(2 * k - 1))
                - Fraction(3 ** (2 * k - 1) - 1, 2 * factorial(2 * k - 1))
                - Fraction(1, factorial(2 * k - 2))
            )
            coefficients.append(32 * bracket)
    return coefficients


def mu_ga_series(case, a: float) -> float:
    """Taylor expansion of μ(g_a) at a = 0; the constant term is μ(1)"""
    case = closed_form_case(case)
    with mpmath.workdps(Config.CLOSED_FORM_DPS):
        a2 = mpmath.mpf(a) ** 2
        total = mpmath.mpf(0)
        power = mpmath.mpf(1)
        for coefficient in _series_coefficients(case):
            total += _mpf(coefficient) * power
            power *= a2
        return float(total)


def _closed_form(case: ClosedFormCase, a: mpmath.mpf) -> mpmath.mpf:
    if case is ClosedFormCase.Q3:
        bracket = 6 * a ** 2 + a * mpmath.sinh(3 * a) - 2 * mpmath.cosh(3 * a) + 2
        return -16 / a ** 4 * bracket
    bracket = (
        -mpmath.cosh(a)
        + mpmath.cosh(3 * a)
        - 2 * a * mpmath.sinh(a)
        - a * mpmath.sinh(a) * mpmath.cosh(2 * a)
        - a ** 2 * mpmath.cosh(a)
    )
    return 32 / a ** 4 * bracket


def mu_ga_closed_form(case, a: float) -> float:
    """
    μ(cosh(a·)) for the quadric threefold (3-2-18) or the threefold 2-29 (3-2-19).

    The expressions have a removable singularity at a = 0, so for |a| < Config.SERIES_RADIUS the Taylor
    series is summed instead; at a = 0 this gives μ(1), 36 and 32/3 respectively.
    :param case: ClosedFormCase or one of "Q3", "3-2-18", "2-29", "3-2-19"
    :param a:
    :return:
    """
    case = closed_form_case(case)
    a = abs(float(a))
    if a < Config.SERIES_RADIUS:
        return mu_ga_series(case, a)
    with mpmath.workdps(Config.CLOSED_FORM_DPS):
        return float(_closed_form(case, mpmath.mpf(a)))


def mu_ga_asymptotic(case, a: float) -> float:
    """Leading term -8 e^{3a} / a^3 of μ(g_a) as a → +∞; both densities behave like -4(3-|y|)² at |y| = 3"""
    closed_form_case(case)
    with mpmath.workdps(Config.CLOSED_FORM_DPS):
        a = mpmath.mpf(a)
        return float(-8 * mpmath.exp(3 * a) / a ** 3)


def exp_moment(m: int, r, lo: Fraction, hi: Fraction) -> mpmath.mpf:
    """
    ∫_lo^hi y^m e^{r y} dy at the current mpmath precision.

    Uses I_m = [y^m e^{ry} / r] - (m / r) I_{m-1} when |r|·max(|lo|, |hi|) is large, and the power
    series of e^{ry} otherwise, where the recurrence would cancel.
    """
    r = mpmath.mpf(r)
    lo, hi = _mpf(lo), _mpf(hi)
    reach = max(abs(lo), abs(hi))
    if r == 0 or abs(r) * reach < Config.SERIES_RADIUS:
        total = mpmath.mpf(0)
        term_factor = mpmath.mpf(1)
        for j in range(SERIES_TERMS * 3 if r else 1):
            total += term_factor * (hi ** (m + j + 1) - lo ** (m + j + 1)) / (m + j + 1)
            term_factor *= r / (j + 1)
        return total
    e_hi, e_lo = mpmath.exp(r * hi), mpmath.exp(r * lo)
    moment = (e_hi - e_lo) / r
    for k in range(1, m + 1):
        moment = (hi ** k * e_hi - lo ** k * e_lo) / r - k * moment / r
    return moment


def pair_expsum(density: PiecewisePoly, terms) -> float:
    """Σ_terms c ∫ density(y) e^{r y} dy, piece by piece"""
    with mpmath.workdps(Config.CLOSED_FORM_DPS):
        total = mpmath.mpf(0)
        for c, r in terms:
            if c == 0:
                continue
            part = mpmath.mpf(0)
            for lo, hi, piece in density.intervals():
                for m, coefficient in enumerate(piece.coefficients):
                    if coefficient:
                        part += _mpf(coefficient) * exp_moment(m, r, lo, hi)
            total += mpmath.mpf(c) * part
        return float(total)
