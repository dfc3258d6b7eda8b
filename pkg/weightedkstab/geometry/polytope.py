import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, List, Sequence, Tuple

from weightedkstab.exceptions import InvalidPolytopeError, SliceOutOfRangeError, DomainError
from weightedkstab.poly import Polynomial, PiecewisePoly, as_rational
from weightedkstab.poly.polynomial import RationalLike

logger = logging.getLogger(__name__)

POINT = Tuple[Fraction, Fraction]


def _cross(o: POINT, a: POINT, b: POINT) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _as_point(point: Sequence[RationalLike]) -> POINT:
    if len(point) != 2:
        raise InvalidPolytopeError(f"A point has two coordinates, got {point!r}")
    return as_rational(point[0]), as_rational(point[1])


def _normalize(vertices: List[POINT]) -> Tuple[POINT, ...]:
    """Counterclockwise order, consecutive duplicates and collinear vertices dropped"""
    unique: List[POINT] = []
    for vertex in vertices:
        if not unique or unique[-1] != vertex:
            unique.append(vertex)
    if len(unique) > 1 and unique[0] == unique[-1]:
        unique.pop()
    doubled_area = sum(a[0] * b[1] - b[0] * a[1] for a, b in zip(unique, unique[1:] + unique[:1]))
    if doubled_area < 0:
        unique.reverse()
    changed = True
    while changed and len(unique) >= 3:
        changed = False
        for i in range(len(unique)):
            if _cross(unique[i - 1], unique[i], unique[(i + 1) % len(unique)]) == 0:
                del unique[i]
                changed = True
                break
    return tuple(unique)


def _turning_number(vertices: Sequence[POINT]) -> int:
    """
    Number of full turns of the edge direction along a closed polygon whose turns all go the same way.
    Each turn makes the edges go up once and down once, so it is half the number of sign changes of the
    nonzero y increments.
    """
    signs = [dy > 0 for dy in (b[1] - a[1] for a, b in zip(vertices, vertices[1:] + vertices[:1])) if dy != 0]
    return sum(s != t for s, t in zip(signs, signs[1:] + signs[:1])) // 2


@dataclass(frozen=True)
class Slice:
    y: Fraction
    x_lo: Fraction
    x_hi: Fraction

    @property
    def length(self) -> Fraction:
        return self.x_hi - self.x_lo

    @property
    def is_degenerate(self) -> bool:
        return self.x_lo == self.x_hi


class MomentPolytope:
    """
    Convex polygon in the (x, y) coordinates of the basis (α/2, χ) with its κ point and the exponent k
    of the Duistermaat-Heckman density x**k.

    The constant normalization of the Duistermaat-Heckman polynomial is dropped; every stability
    verdict is invariant under a positive rescaling of the measure.
    """

    __slots__ = ("_vertices", "_kappa", "_dh_exponent", "_label")

    def __init__(
        self,
        vertices: Iterable[Sequence[RationalLike]],
        kappa: Sequence[RationalLike] = (2, 0),
        dh_exponent: int = 1,
        label: str = "",
    ):
        """

        :param vertices: polygon vertices in either orientation
        :param kappa: the point κ, (2, 0) for all rank two threefolds
        :param dh_exponent: P_DH is proportional to x**dh_exponent
        :param label: free text used in logs and error messages
        """
        if isinstance(dh_exponent, bool) or not isinstance(dh_exponent, int) or dh_exponent < 0:
            raise InvalidPolytopeError(f"dh_exponent must be a nonnegative integer, got {dh_exponent!r}")
        self._label = label
        self._vertices = _normalize([_as_point(v) for v in vertices])
        self._kappa = _as_point(kappa)
        self._dh_exponent = dh_exponent
        self._validate()

    def _validate(self) -> None:
        name = self._label or "polytope"
        if len(self._vertices) < 3:
            raise InvalidPolytopeError(f"{name}: needs at least three non-collinear vertices")
        n = len(self._vertices)
        for i in range(n):
            if _cross(self._vertices[i - 1], self._vertices[i], self._vertices[(i + 1) % n]) < 0:
                raise InvalidPolytopeError(f"{name}: vertices do not bound a convex polygon")
        if _turning_number(self._vertices) != 1:
            raise InvalidPolytopeError(f"{name}: vertices bound a self-intersecting polygon")
        if any(x < 0 for x, _ in self._vertices):
            raise InvalidPolytopeError(f"{name}: polytope must lie in the half-plane x >= 0")
        if not self.contains(self._kappa):
            logger.warning("%s: kappa %s lies outside of the polytope", name, [str(c) for c in self._kappa])

    @property
    def vertices(self) -> Tuple[POINT, ...]:
        return self._vertices

    @property
    def kappa(self) -> POINT:
        return self._kappa

    @property
    def dh_exponent(self) -> int:
        return self._dh_exponent

    @property
    def label(self) -> str:
        return self._label

    @property
    def edges(self) -> List[Tuple[POINT, POINT]]:
        return list(zip(self._vertices, self._vertices[1:] + self._vertices[:1]))

    @property
    def y_range(self) -> Tuple[Fraction, Fraction]:
        ys = [y for _, y in self._vertices]
        return min(ys), max(ys)

    def contains(self, point: Sequence[RationalLike]) -> bool:
        """Closed polygon membership"""
        point = _as_point(point)
        return all(_cross(a, b, point) >= 0 for a, b in self.edges)

    def area(self) -> Fraction:
        """Shoelace formula"""
        return sum((a[0] * b[1] - b[0] * a[1] for a, b in self.edges), Fraction(0)) / 2

    def y_breakpoints(self) -> List[Fraction]:
        """Sorted distinct vertex ordinates; between two of them both slice endpoints are affine in y"""
        return sorted({y for _, y in self._vertices})

    def slice_at(self, y: RationalLike) -> Slice:
        """
        The segment {x : (x, y) in P}
        :param y:
        :return:
        """
        y = as_rational(y)
        lo, hi = self.y_range
        if not lo <= y <= hi:
            raise SliceOutOfRangeError(f"y = {y} outside of [{lo}, {hi}] for {self._label or 'polytope'}")
        xs = []
        for (x0, y0), (x1, y1) in self.edges:
            if y0 == y1:
                if y0 == y:
                    xs.extend((x0, x1))
            elif min(y0, y1) <= y <= max(y0, y1):
                xs.append(x0 + (x1 - x0) * (y - y0) / (y1 - y0))
        return Slice(y, min(xs), max(xs))

    def slice_bounds(self, y0: RationalLike, y1: RationalLike) -> Tuple[Polynomial, Polynomial]:
        """
        Affine functions of y giving the left and right slice endpoints on [y0, y1], where y0 < y1 are
        consecutive y breakpoints (or lie between two consecutive ones)
        :param y0:
        :param y1:
        :return: (left, right)
        """
        y0, y1 = as_rational(y0), as_rational(y1)
        first, second = self.slice_at(y0), self.slice_at(y1)

        def affine(v0: Fraction, v1: Fraction) -> Polynomial:
            slope = (v1 - v0) / (y1 - y0)
            return Polynomial([v0 - slope * y0, slope])

        return affine(first.x_lo, second.x_lo), affine(first.x_hi, second.x_hi)

    def fiber_integral(self, integrand: Polynomial, factor: Polynomial = Polynomial.constant(1)) -> PiecewisePoly:
        """
        y ↦ factor(y) * ∫_{slice(y)} integrand(x) dx as an exact piecewise polynomial over y_breakpoints
        :param integrand: polynomial in x
        :param factor: polynomial in y
        :return:
        """
        primitive = integrand.antiderivative()
        breakpoints = self.y_breakpoints()
        pieces = []
        for y0, y1 in zip(breakpoints, breakpoints[1:]):
            left, right = self.slice_bounds(y0, y1)
            pieces.append(factor * (primitive.compose(right) - primitive.compose(left)))
        return PiecewisePoly(breakpoints, pieces)

    def dh_integral(self) -> Fraction:
        """∫_P x**k dx dy with the standard Lebesgue measure"""
        return self.fiber_integral(Polynomial.monomial(self._dh_exponent)).total()

    def is_y_symmetric(self) -> bool:
        return set(self._vertices) == {(x, -y) for x, y in self._vertices}

    def __eq__(self, other) -> bool:
        if not isinstance(other, MomentPolytope):
            return NotImplemented
        return (
            set(self._vertices) == set(other._vertices)
            and self._kappa == other._kappa
            and self._dh_exponent == other._dh_exponent
        )

    def __hash__(self) -> int:
        return hash((frozenset(self._vertices), self._kappa, self._dh_exponent))

    def __repr__(self) -> str:
        vertices = ", ".join(f"({x}, {y})" for x, y in self._vertices)
        return f"MomentPolytope([{vertices}], kappa=({self._kappa[0]}, {self._kappa[1]}), k={self._dh_exponent})"


def anticanonical_degree(polytope: MomentPolytope, dimension: int, dh_scale: RationalLike = 1) -> Fraction:
    """
    (-K_X)^n = n! ∫ P_DH, with P_DH = dh_scale * x**k. Only meaningful when the Lebesgue measure of
    the coordinates is the one normalized by the weight lattice.
    :param polytope:
    :param dimension: complex dimension n of the variety
    :param dh_scale: constant factor of the Duistermaat-Heckman polynomial (1/4 for the threefolds)
    :return:
    """
    return factorial(dimension) * as_rational(dh_scale) * polytope.dh_integral()


def logpair_polytope(t: RationalLike) -> MomentPolytope:
    """
    Moment polytope of the pair (X, tE), X the threefold 2-29 and E the exceptional divisor of X → Q^3
    :param t: 0 <= t < 1
    :return:
    """
    t = as_rational(t)
    if not 0 <= t < 1:
        raise DomainError(f"Log pair parameter t must satisfy 0 <= t < 1, got {t}")
    return MomentPolytope(
        [(0, 3), (4 - 2 * t, 1 + t), (4 - 2 * t, -1 - t), (0, -3)],
        kappa=(2, 0),
        dh_exponent=1,
        label=f"(2-29, {t}E)",
    )


def quadric_polytope(n: int) -> MomentPolytope:
    """
    Triangle x >= 0, x <= 2n - 4 ± 2y of the quadric Q^{n-2} under SO_{n-2} x SO_2
    :param n: n >= 5
    :return:
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 5:
        raise DomainError(f"Quadric family needs an integer n >= 5, got {n!r}")
    return MomentPolytope(
        [(0, -(n - 2)), (2 * n - 4, 0), (0, n - 2)],
        kappa=(2 * n - 8, 0),
        dh_exponent=n - 4,
        label=f"Q^{n - 2}",
    )
