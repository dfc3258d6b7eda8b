"""Weight functions of the torus coordinate y.

A weight is an immutable description; evaluation happens in floating point (``__call__`` and the
vectorised ``evaluate_array``) except for polynomial and constant weights, which also expose their
exact rational form to the pairing code.
"""
import logging
import math
from abc import ABC, abstractmethod
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from weightedkstab.config import Config
from weightedkstab.exceptions import ArgumentOrderError, WeightSyntaxError
from weightedkstab.poly import Polynomial, as_rational, isolate_roots

logger = logging.getLogger(__name__)


class WeightSpec(ABC):
    kind: str = ""

    @abstractmethod
    def __call__(self, y: float) -> float:
        raise NotImplementedError

    @abstractmethod
    def evaluate_array(self, ys: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    @property
    @abstractmethod
    def is_even(self) -> bool:
        raise NotImplementedError

    def breakpoints(self) -> List[float]:
        """Points where the weight bends sharply; quadrature splits panels there"""
        return []

    def scaled(self, factor: float) -> "WeightSpec":
        raise NotImplementedError(f"{type(self).__name__} cannot be rescaled")


@dataclass(frozen=True)
class Constant(WeightSpec):
    value: Fraction = Fraction(1)
    kind = "const"

    def __post_init__(self):
        object.__setattr__(self, "value", as_rational(self.value))

    def __call__(self, y: float) -> float:
        return float(self.value)

    def evaluate_array(self, ys: np.ndarray) -> np.ndarray:
        return np.full(np.shape(ys), float(self.value))

    @property
    def is_even(self) -> bool:
        return True

    def as_polynomial(self) -> Polynomial:
        return Polynomial.constant(self.value)

    def scaled(self, factor) -> "Constant":
        return Constant(self.value * as_rational(factor))


@dataclass(frozen=True)
class PolynomialWeight(WeightSpec):
    polynomial: Polynomial
    kind = "poly"

    def __call__(self, y: float) -> float:
        return self.polynomial.eval_float(y)

    def evaluate_array(self, ys: np.ndarray) -> np.ndarray:
        return np.polyval(self.polynomial.float_coefficients()[::-1] or [0.0], ys)

    @property
    def is_even(self) -> bool:
        return self.polynomial.is_even()

    def as_polynomial(self) -> Polynomial:
        return self.polynomial

    def scaled(self, factor) -> "PolynomialWeight":
        return PolynomialWeight(self.polynomial.scale(factor))


@dataclass(frozen=True)
class ExpSum(WeightSpec):
    """y ↦ Σ c·exp(r·y) over the ``(c, r)`` terms"""

    terms: Tuple[Tuple[float, float], ...]
    kind = "expsum"

    def __post_init__(self):
        if not self.terms:
            raise WeightSyntaxError("An exponential sum needs at least one term")
        object.__setattr__(self, "terms", tuple((float(c), float(r)) for c, r in self.terms))

    def __call__(self, y: float) -> float:
        return math.fsum(c * math.exp(r * y) for c, r in self.terms)

    def evaluate_array(self, ys: np.ndarray) -> np.ndarray:
        ys = np.asarray(ys, dtype=float)
        return sum(c * np.exp(r * ys) for c, r in self.terms)

    @property
    def is_even(self) -> bool:
        by_rate = defaultdict(float)
        for c, r in self.terms:
            by_rate[r] += c
        return all(by_rate[r] == by_rate.get(-r, 0.0) for r in by_rate)

    def scaled(self, factor) -> "ExpSum":
        factor = float(factor)
        return ExpSum(tuple((c * factor, r) for c, r in self.terms))


@dataclass(frozen=True)
class CoshFamily(WeightSpec):
    """g_a: y ↦ cosh(a·y)"""

    a: float
    kind = "cosh"

    def __post_init__(self):
        object.__setattr__(self, "a", float(self.a))

    def __call__(self, y: float) -> float:
        return math.cosh(self.a * y)

    def evaluate_array(self, ys: np.ndarray) -> np.ndarray:
        return np.cosh(self.a * np.asarray(ys, dtype=float))

    @property
    def is_even(self) -> bool:
        return True

    def as_expsum(self) -> ExpSum:
        if self.a == 0:
            return ExpSum(((1.0, 0.0),))
        return ExpSum(((0.5, self.a), (0.5, -self.a)))

    def scaled(self, factor) -> ExpSum:
        return self.as_expsum().scaled(factor)


@dataclass(frozen=True)
class Sech(WeightSpec):
    """y ↦ 1/cosh(y)"""

    kind = "sech"

    def __call__(self, y: float) -> float:
        return 1.0 / math.cosh(y)

    def evaluate_array(self, ys: np.ndarray) -> np.ndarray:
        return 1.0 / np.cosh(np.asarray(ys, dtype=float))

    @property
    def is_even(self) -> bool:
        return True


def _psi(u: np.ndarray) -> np.ndarray:
    positive = u > 0
    return np.where(positive, np.exp(-1.0 / np.where(positive, u, 1.0)), 0.0)


def smooth_step(u: np.ndarray) -> np.ndarray:
    """C^∞ transition, 0 for u <= 0 and 1 for u >= 1"""
    u = np.asarray(u, dtype=float)
    left, right = _psi(u), _psi(1.0 - u)
    return left / (left + right)


@dataclass(frozen=True)
class MollifiedIndicator(WeightSpec):
    """
    Smooth positive stand-in for the indicator of [lo, hi]: ``floor + B(y)`` (plus ``B(-y)`` when
    symmetrized), where B vanishes outside [lo, hi], equals 1 on [lo + epsilon, hi - epsilon] and ramps
    with a C^∞ step in between.
    """

    lo: float
    hi: float
    epsilon: float
    symmetrize: bool = False
    floor: float = None
    kind = "bump"

    def __post_init__(self):
        for name in ("lo", "hi", "epsilon"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if self.floor is None:
            object.__setattr__(self, "floor", Config.MOLLIFIER_FLOOR)
        if self.lo >= self.hi:
            raise ArgumentOrderError(f"Bump needs lo < hi, got [{self.lo}, {self.hi}]")
        if not 0 < self.epsilon <= (self.hi - self.lo) / 2:
            raise WeightSyntaxError(f"Bump width must satisfy 0 < eps <= (hi - lo)/2, got {self.epsilon}")
        if self.floor < 0:
            raise WeightSyntaxError(f"Bump floor must be nonnegative, got {self.floor}")

    def bump(self, ys: np.ndarray) -> np.ndarray:
        ys = np.asarray(ys, dtype=float)
        return smooth_step((ys - self.lo) / self.epsilon) * smooth_step((self.hi - ys) / self.epsilon)

    def evaluate_array(self, ys: np.ndarray) -> np.ndarray:
        ys = np.asarray(ys, dtype=float)
        values = self.floor + self.bump(ys)
        if self.symmetrize:
            values = values + self.bump(-ys)
        return values

    def __call__(self, y: float) -> float:
        return float(self.evaluate_array(np.array([y]))[0])

    @property
    def is_even(self) -> bool:
        return self.symmetrize or self.lo == -self.hi

    def breakpoints(self) -> List[float]:
        points = [self.lo, self.lo + self.epsilon, self.hi - self.epsilon, self.hi]
        if self.symmetrize:
            points += [-p for p in points]
        return sorted(set(points))

    def with_epsilon(self, epsilon: float) -> "MollifiedIndicator":
        return MollifiedIndicator(self.lo, self.hi, epsilon, self.symmetrize, self.floor)


def eval_weight(g: WeightSpec, y: float) -> float:
    return g(y)


def _to_fraction(value) -> Fraction:
    if isinstance(value, float):
        return Fraction(value)
    return as_rational(value)


def _expsum_is_positive(g: ExpSum, a: float, b: float, samples: int = 1000) -> bool:
    if all(c > 0 for c, _ in g.terms):
        return True
    if all(c <= 0 for c, _ in g.terms):
        return False
    ys = np.linspace(a, b, samples)
    values = g.evaluate_array(ys)
    if a == b:
        return bool(values[0] > 0)
    # a Lipschitz bound of g on [a, b] turns the sampled minimum into a certified one
    reach = max(abs(a), abs(b))
    lipschitz = sum(abs(c * r) * math.exp(abs(r) * reach) for c, r in g.terms)
    spacing = (b - a) / (samples - 1)
    return bool(values.min() > lipschitz * spacing / 2)


def validate_positive_on(g: WeightSpec, a, b) -> bool:
    """
    Decide whether g > 0 on [a, b]
    :param g:
    :param a:
    :param b:
    :return:
    """
    if a > b:
        raise ArgumentOrderError(f"Lower bound {a} exceeds upper bound {b}")
    if isinstance(g, Constant):
        return g.value > 0
    if isinstance(g, PolynomialWeight):
        p = g.polynomial
        if p.is_zero():
            return False
        lo, hi = _to_fraction(a), _to_fraction(b)
        if isolate_roots(p, lo, hi):
            return False
        return p.eval((lo + hi) / 2) > 0
    if isinstance(g, CoshFamily) or isinstance(g, Sech):
        return True
    if isinstance(g, MollifiedIndicator):
        return g.floor > 0
    if isinstance(g, ExpSum):
        return _expsum_is_positive(g, float(a), float(b))
    logger.warning("no positivity rule for %s, falling back to sampling", type(g).__name__)
    return bool(np.all(g.evaluate_array(np.linspace(float(a), float(b), 1000)) > 0))
