"""Weight-insensitivity certificates.

If μ + λν is a nonnegative measure of full support for some λ, then μ(g) = (μ + λν)(g) > 0 for every
positive weight g with ν(g) = 0, so the case is weighted K-polystable for all such weights at once.
The search below only produces such witnesses; failing to find one proves nothing.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from weightedkstab.config import Config
from weightedkstab.exceptions import ArgumentOrderError, InputError
from weightedkstab.poly import NonnegativityReport, PieceWitness, PiecewisePoly, as_rational, is_nonnegative_on
from weightedkstab.stability.case import StabilityCase

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Certificate:
    case: str
    lam: Fraction
    combined_density: PiecewisePoly
    report: NonnegativityReport

    @property
    def per_interval_proofs(self) -> Tuple[PieceWitness, ...]:
        return self.report.witnesses

    @property
    def valid(self) -> bool:
        return self.report.holds and not self.report.identically_zero


def combined_density(case: StabilityCase, lam) -> PiecewisePoly:
    """μ + λν, exactly"""
    return case.mu.density + case.nu.density.scale(as_rational(lam))


def certify_lambda(case: StabilityCase, lam) -> Optional[Certificate]:
    """Certificate for this λ, or None when μ + λν is negative somewhere or vanishes on a whole piece"""
    lam = as_rational(lam)
    density = combined_density(case, lam)
    report = is_nonnegative_on(density, *density.support)
    certificate = Certificate(case.label, lam, density, report)
    if not certificate.valid:
        return None
    return certificate


def candidate_lambdas(
    lambda_range: Tuple[Fraction, Fraction], grid: int, known: Sequence[Fraction] = ()
) -> Iterator[Fraction]:
    """The known values first, then lo + i (hi - lo) / grid for i = 0..grid, without repetitions"""
    lo, hi = (as_rational(b) for b in lambda_range)
    if lo > hi:
        raise ArgumentOrderError(f"Lambda range must satisfy lo <= hi, got ({lo}, {hi})")
    if grid < 1:
        raise InputError(f"Grid size must be at least 1, got {grid}")
    seen = set()
    step = (hi - lo) / grid
    for lam in [as_rational(k) for k in known] + [lo + i * step for i in range(grid + 1)]:
        if lam not in seen:
            seen.add(lam)
            yield lam


def _screening_points(case: StabilityCase) -> List[Fraction]:
    points = set()
    for lo, hi, _ in case.mu.density.refine(case.nu.density.breakpoints).intervals():
        width = hi - lo
        points.update(lo + width * Fraction(k, 8) for k in range(1, 8))
    return sorted(points)


def insensitivity_certificate(
    case: StabilityCase, lambda_range: Optional[Tuple] = None, grid: Optional[int] = None
) -> Optional[Certificate]:
    """
    Search λ with μ + λν ≥ 0 on the support and not identically zero on any piece
    :param case:
    :param lambda_range: Config.LAMBDA_RANGE by default
    :param grid: Config.LAMBDA_GRID by default
    :return: the first certificate found, None when no candidate works
    """
    lambda_range = Config.LAMBDA_RANGE if lambda_range is None else lambda_range
    grid = Config.LAMBDA_GRID if grid is None else grid
    # exact values at interior points reject most candidates before any root isolation
    samples = [(case.mu.density(y), case.nu.density(y)) for y in _screening_points(case)]
    tried = 0
    for lam in candidate_lambdas(lambda_range, grid, Config.KNOWN_LAMBDAS):
        if any(mu + lam * nu < 0 for mu, nu in samples):
            continue
        tried += 1
        logger.debug("%s: proving lambda = %s", case.label, lam)
        certificate = certify_lambda(case, lam)
        if certificate is not None:
            logger.info("%s: mu + %s nu is a positive measure", case.label, lam)
            return certificate
    logger.info("%s: no certificate on the search set (%d candidate(s) reached the exact proof)", case.label, tried)
    return None
