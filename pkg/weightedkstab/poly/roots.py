"""Certified real root isolation and sign analysis.

Roots are isolated on the square-free part of a polynomial with Descartes' rule of signs, by
bisection on rational intervals, so every answer is exact. An isolating interval is either a single
rational point (an exact root) or an open interval containing exactly one root.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from weightedkstab.exceptions import ArgumentOrderError, ZeroPolynomialError
from weightedkstab.poly.piecewise import PiecewisePoly
from weightedkstab.poly.polynomial import Polynomial, RationalLike, as_rational

logger = logging.getLogger(__name__)

MAX_BISECTION_DEPTH = 4096


@dataclass(frozen=True)
class RootInterval:
    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: RationalLike) -> bool:
        if self.is_exact:
            return x == self.lo
        return self.lo < x < self.hi


def square_free_part(p: Polynomial) -> Polynomial:
    if p.degree <= 0:
        return p.monic()
    return (p // p.gcd(p.derivative())).monic()


def square_free_decomposition(p: Polynomial) -> List[Tuple[Polynomial, int]]:
    """
    Yun's algorithm: monic square-free, pairwise coprime factors f_i with p = c * prod f_i ** i
    :param p:
    :return: list of (factor, multiplicity) with non-constant factors only
    """
    if p.is_zero():
        raise ZeroPolynomialError("The zero polynomial has no square-free decomposition")
    factors: List[Tuple[Polynomial, int]] = []
    derivative = p.derivative()
    a = p.gcd(derivative)
    b = p // a
    c = derivative // a
    d = c - b.derivative()
    multiplicity = 1
    while b.degree > 0:
        a = b.gcd(d)
        if a.degree > 0:
            factors.append((a, multiplicity))
        b = b // a
        c = d // a
        d = c - b.derivative()
        multiplicity += 1
    return factors


def descartes_bound(p: Polynomial, lo: Fraction, hi: Fraction) -> int:
    """
    Upper bound on the number of roots of p in the open interval (lo, hi), exact when it is 0 or 1
    :param p:
    :param lo:
    :param hi:
    :return:
    """
    mapped = p.substitute_affine(hi - lo, lo)
    return mapped.reciprocal(p.degree).taylor_shift(1).sign_variations()


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def _refine(p: Polynomial, lo: Fraction, hi: Fraction, resolution: Optional[Fraction]) -> Tuple[Fraction, Fraction]:
    """Shrink an open isolating interval of a simple root until it is narrower than resolution.
    Returns a degenerate interval if a bisection point hits the root exactly."""
    sign_lo = _sign(p.eval(lo))
    while resolution is not None and hi - lo > resolution:
        middle = (lo + hi) / 2
        sign_middle = _sign(p.eval(middle))
        if sign_middle == 0:
            return middle, middle
        if sign_middle == sign_lo:
            lo = middle
        else:
            hi = middle
    return lo, hi


def _isolate_open(p: Polynomial, lo: Fraction, hi: Fraction, exact: List[Fraction], found: List[Tuple[Fraction, Fraction]]):
    stack = [(lo, hi, 0)]
    while stack:
        a, b, depth = stack.pop()
        count = descartes_bound(p, a, b)
        if count == 0:
            continue
        if count == 1 and p.eval(a) != 0 and p.eval(b) != 0:
            found.append((a, b))
            continue
        if depth > MAX_BISECTION_DEPTH:
            raise RuntimeError("Root isolation did not terminate; is the polynomial square-free?")
        middle = (a + b) / 2
        if p.eval(middle) == 0:
            exact.append(middle)
        stack.append((middle, b, depth + 1))
        stack.append((a, middle, depth + 1))


def _multiplicity(factors: List[Tuple[Polynomial, int]], lo: Fraction, hi: Fraction) -> int:
    """
    Multiplicity of the only root of the square-free part in [lo, hi].

    Requires [lo, hi] to isolate that root, with ends that are not roots unless lo == hi. The factors
    of the decomposition are coprime divisors of the square-free part, so exactly one of them has the
    root, and it is simple there: that factor vanishes at lo == hi or changes sign across (lo, hi).
    """
    if lo == hi:
        matching = [multiplicity for factor, multiplicity in factors if factor.eval(lo) == 0]
    else:
        matching = [
            multiplicity for factor, multiplicity in factors if _sign(factor.eval(lo)) != _sign(factor.eval(hi))
        ]
    if len(matching) != 1:
        raise RuntimeError(f"[{lo}, {hi}] is not an isolating interval of a single root")
    return matching[0]


def isolate_roots(
    p: Polynomial, a: RationalLike, b: RationalLike, resolution: Optional[RationalLike] = None
) -> List[RootInterval]:
    """
    Isolate the real roots of p in the closed interval [a, b]. Roots at a or b are included.
    :param p: polynomial, not identically zero
    :param a:
    :param b:
    :param resolution: maximal width of the returned intervals, None to stop as soon as roots are separated
    :return: sorted, pairwise disjoint intervals, one per distinct root, with multiplicities
    """
    if p.is_zero():
        raise ZeroPolynomialError("Cannot isolate the roots of the zero polynomial")
    a, b = as_rational(a), as_rational(b)
    if a > b:
        raise ArgumentOrderError(f"Lower bound {a} exceeds upper bound {b}")
    resolution = None if resolution is None else as_rational(resolution)
    if p.degree == 0:
        return []
    square_free = square_free_part(p)
    factors = square_free_decomposition(p)

    exact = [x for x in {a, b} if square_free.eval(x) == 0]
    open_intervals: List[Tuple[Fraction, Fraction]] = []
    if a < b:
        _isolate_open(square_free, a, b, exact, open_intervals)

    intervals = [_refine(square_free, lo, hi, resolution) for lo, hi in open_intervals]
    intervals.extend((x, x) for x in set(exact))

    result = sorted(
        {RootInterval(lo, hi, _multiplicity(factors, lo, hi)) for lo, hi in intervals}, key=lambda r: (r.lo, r.hi)
    )
    logger.debug("isolated %d root(s) of %s on [%s, %s]", len(result), p, a, b)
    return result


@dataclass(frozen=True)
class PieceWitness:
    """Sign proof for one piece: its roots and one exact sample between each pair of consecutive roots"""

    lo: Fraction
    hi: Fraction
    identically_zero: bool
    roots: Tuple[RootInterval, ...] = ()
    samples: Tuple[Tuple[Fraction, Fraction], ...] = ()

    @property
    def nonnegative(self) -> bool:
        return all(value >= 0 for _, value in self.samples)


@dataclass(frozen=True)
class NonnegativityReport:
    holds: bool
    identically_zero: bool
    witnesses: Tuple[PieceWitness, ...] = field(default_factory=tuple)
    counterexample: Optional[Fraction] = None

    def __bool__(self) -> bool:
        return self.holds


def _sample_points(p: Polynomial, lo: Fraction, hi: Fraction, roots: List[RootInterval]) -> List[Fraction]:
    """One point in every maximal subinterval of [lo, hi] free of roots"""
    points = []
    bounds = [(lo, lo)] + [(r.lo, r.hi) for r in roots] + [(hi, hi)]
    for (_, left), (right, _) in zip(bounds, bounds[1:]):
        if left < right:
            points.append((left + right) / 2)
        elif p.eval(left) != 0:
            points.append(left)
    return points


def piece_witness(p: Polynomial, lo: Fraction, hi: Fraction) -> PieceWitness:
    if p.is_zero():
        return PieceWitness(lo, hi, identically_zero=True)
    roots = isolate_roots(p, lo, hi)
    samples = tuple((x, p.eval(x)) for x in _sample_points(p, lo, hi, roots))
    return PieceWitness(lo, hi, identically_zero=False, roots=tuple(roots), samples=samples)


def is_nonnegative_on(p: PiecewisePoly, a: RationalLike, b: RationalLike) -> NonnegativityReport:
    """
    Decide exactly whether p ≥ 0 on [a, b] ∩ support(p).

    The sign of each piece is constant between consecutive distinct roots, so one exact evaluation per
    root-free subinterval decides it.
    :param p:
    :param a:
    :param b:
    :return: report with the verdict, the per-piece witnesses and a counterexample when it fails
    """
    a, b = as_rational(a), as_rational(b)
    if a > b:
        raise ArgumentOrderError(f"Lower bound {a} exceeds upper bound {b}")
    witnesses = []
    counterexample = None
    for lo, hi, piece in p.intervals():
        lo, hi = max(lo, a), min(hi, b)
        if lo > hi:
            continue
        if lo == hi:
            value = piece.eval(lo)
            witness = PieceWitness(lo, hi, identically_zero=False, samples=((lo, value),))
        else:
            witness = piece_witness(piece, lo, hi)
        witnesses.append(witness)
        if counterexample is None:
            counterexample = next((x for x, value in witness.samples if value < 0), None)
    identically_zero = any(w.identically_zero and w.lo < w.hi for w in witnesses)
    return NonnegativityReport(
        holds=counterexample is None,
        identically_zero=identically_zero,
        witnesses=tuple(witnesses),
        counterexample=counterexample,
    )
