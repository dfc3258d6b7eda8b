import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from weightedkstab.exceptions import SearchFailureError, UnsupportedCaseError
from weightedkstab.stability.case import CaseFamily, StabilityCase
from weightedkstab.stability.verdict import Classification, StabilityVerdict, classify
from weightedkstab.weights import CoshFamily, MollifiedIndicator, WeightSpec

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_BUDGET = 8


@dataclass(frozen=True)
class DestabilizingWeight:
    weight: WeightSpec
    verdict: StabilityVerdict
    attempts: int


def quadric_bump(n: int, epsilon: Optional[float] = None) -> MollifiedIndicator:
    """Even bump on ±[(n-2)/(n-3), n-2], where the folded μ of Q^{n-2} is negative"""
    lo, hi = Fraction(n - 2, n - 3), Fraction(n - 2)
    epsilon = float(hi - lo) / 4 if epsilon is None else epsilon
    return MollifiedIndicator(float(lo), float(hi), epsilon, symmetrize=True)


def _cosh_candidates(budget: int):
    a = 1.0
    for _ in range(budget):
        yield CoshFamily(a)
        a *= 2


def _bump_candidates(n: int, budget: int):
    bump = quadric_bump(n)
    for _ in range(budget):
        yield bump
        bump = bump.with_epsilon(bump.epsilon / 2)


def destabilizing_weight(case: StabilityCase, search_budget: int = DEFAULT_SEARCH_BUDGET) -> DestabilizingWeight:
    """
    Even positive weight g with ν(g) = 0 and μ(g) < 0.

    Quadrics get the symmetrized bump on [(n-2)/(n-3), n-2] with its edge width halved between
    attempts; other y-symmetric cases get cosh(a·) with a = 1, 2, 4, ...
    :param case:
    :param search_budget: number of weights tried
    :return:
    """
    if not case.symmetric:
        raise UnsupportedCaseError(f"{case.label}: even weights need a y-symmetric polytope to kill the Futaki term")
    if case.family is CaseFamily.QUADRIC:
        candidates = _bump_candidates(int(case.parameter), search_budget)
    else:
        candidates = _cosh_candidates(search_budget)
    for attempt, weight in enumerate(candidates, start=1):
        verdict = classify(case, weight)
        logger.debug("%s: attempt %d, %s -> %s", case.label, attempt, verdict.weight, verdict.classification.value)
        if verdict.classification is Classification.UNSTABLE:
            logger.info("%s: destabilized by %s", case.label, verdict.weight)
            return DestabilizingWeight(weight, verdict, attempt)
    raise SearchFailureError(f"{case.label}: no destabilizing weight among {search_budget} attempt(s)")
