"""Globally adaptive Gauss-Legendre quadrature.

The integration range is first cut at the supplied breakpoints (density kinks, bump edges). Every
panel is integrated with a fixed-order Gauss-Legendre rule and with the same rule on its two halves;
the difference is the panel's error estimate. The panel with the largest estimate is split until the
total estimate meets the tolerance or the panel budget runs out.
"""
import heapq
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional, Tuple

import numpy as np

from weightedkstab.config import Config
from weightedkstab.exceptions import ArgumentOrderError, ConvergenceError

logger = logging.getLogger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error: float
    panels: int


@lru_cache(maxsize=16)
def gauss_legendre_rule(order: int) -> Tuple[np.ndarray, np.ndarray]:
    """Nodes and weights on [-1, 1]"""
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return nodes, weights


def _rule(f: Integrand, lo: float, hi: float, order: int) -> float:
    nodes, weights = gauss_legendre_rule(order)
    half = (hi - lo) / 2
    middle = (hi + lo) / 2
    return float(half * np.dot(weights, f(middle + half * nodes)))


def _panel(f: Integrand, lo: float, hi: float, order: int) -> Tuple[float, float]:
    """(refined value, error estimate) of one panel"""
    middle = (lo + hi) / 2
    coarse = _rule(f, lo, hi, order)
    fine = _rule(f, lo, middle, order) + _rule(f, middle, hi, order)
    return fine, abs(fine - coarse)


def gauss_legendre_integrate(
    f: Integrand,
    breakpoints: Iterable[float],
    tol: Optional[float] = None,
    budget: Optional[int] = None,
    order: Optional[int] = None,
) -> QuadratureResult:
    """
    ∫ f over [min(breakpoints), max(breakpoints)] with |error| <= tol * (1 + |value|)
    :param f: vectorised integrand
    :param breakpoints: at least two points; the range is split at every one of them
    :param tol: relative tolerance, Config.DEFAULT_TOLERANCE by default
    :param budget: maximal number of panels, Config.QUADRATURE_PANEL_BUDGET by default
    :param order: Gauss-Legendre order, Config.GAUSS_LEGENDRE_ORDER by default
    :return:
    """
    tol = Config.DEFAULT_TOLERANCE if tol is None else tol
    budget = Config.QUADRATURE_PANEL_BUDGET if budget is None else budget
    order = Config.GAUSS_LEGENDRE_ORDER if order is None else order
    if tol <= 0:
        raise ValueError(f"Quadrature tolerance must be positive, got {tol}")
    points = sorted({float(p) for p in breakpoints})
    if len(points) < 2:
        if len(points) == 1:
            return QuadratureResult(0.0, 0.0, 0)
        raise ArgumentOrderError("Quadrature needs an integration range")

    heap = []
    value = error = 0.0
    for lo, hi in zip(points, points[1:]):
        panel_value, panel_error = _panel(f, lo, hi, order)
        heapq.heappush(heap, (-panel_error, lo, hi, panel_value))
        value += panel_value
        error += panel_error

    while error > tol * (1 + abs(value)):
        if len(heap) >= budget:
            raise ConvergenceError(
                f"Quadrature reached {len(heap)} panels with error estimate {error:.3e}",
                best_estimate=value,
                error_estimate=error,
            )
        neg_error, lo, hi, panel_value = heapq.heappop(heap)
        value -= panel_value
        error += neg_error
        middle = (lo + hi) / 2
        for a, b in ((lo, middle), (middle, hi)):
            part_value, part_error = _panel(f, a, b, order)
            heapq.heappush(heap, (-part_error, a, b, part_value))
            value += part_value
            error += part_error

    logger.debug("quadrature converged on %d panels, value %.17g, error %.3e", len(heap), value, error)
    return QuadratureResult(value, error, len(heap))
