from bisect import bisect_right
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from weightedkstab.exceptions import ArgumentOrderError, InputError
from weightedkstab.poly.polynomial import Polynomial, RationalLike, as_rational

PIECE = Tuple[Fraction, Fraction, Polynomial]


class PiecewisePoly:
    """
    Piecewise polynomial ``pieces[i]`` on ``[breakpoints[i], breakpoints[i + 1]]``, zero outside of
    ``[breakpoints[0], breakpoints[-1]]``. At an inner breakpoint the right-hand piece is used for
    evaluation; this never matters for integrals.
    """

    __slots__ = ("_breakpoints", "_pieces")

    def __init__(self, breakpoints: Sequence[RationalLike], pieces: Sequence[Polynomial]):
        breakpoints = tuple(as_rational(b) for b in breakpoints)
        pieces = tuple(pieces)
        if len(breakpoints) < 2:
            raise InputError("A piecewise polynomial needs at least two breakpoints")
        if any(lo >= hi for lo, hi in zip(breakpoints, breakpoints[1:])):
            raise InputError(f"Breakpoints must be strictly increasing: {[str(b) for b in breakpoints]}")
        if len(pieces) != len(breakpoints) - 1:
            raise InputError(f"Expected {len(breakpoints) - 1} pieces, got {len(pieces)}")
        self._breakpoints: Tuple[Fraction, ...] = breakpoints
        self._pieces: Tuple[Polynomial, ...] = pieces

    @classmethod
    def from_pieces(cls, pieces: Iterable[Tuple[RationalLike, RationalLike, Polynomial]]) -> "PiecewisePoly":
        """
        Build from ``(lo, hi, polynomial)`` triples given in increasing order; gaps between consecutive
        triples are filled with the zero polynomial
        :param pieces:
        :return:
        """
        breakpoints: List[Fraction] = []
        polys: List[Polynomial] = []
        for lo, hi, poly in pieces:
            lo, hi = as_rational(lo), as_rational(hi)
            if breakpoints and lo != breakpoints[-1]:
                if lo < breakpoints[-1]:
                    raise InputError("Pieces overlap or are not sorted")
                polys.append(Polynomial())
                breakpoints.append(lo)
            if not breakpoints:
                breakpoints.append(lo)
            polys.append(poly)
            breakpoints.append(hi)
        return cls(breakpoints, polys)

    @classmethod
    def constant(cls, value: RationalLike, lo: RationalLike, hi: RationalLike) -> "PiecewisePoly":
        return cls([lo, hi], [Polynomial.constant(value)])

    @property
    def breakpoints(self) -> Tuple[Fraction, ...]:
        return self._breakpoints

    @property
    def pieces(self) -> Tuple[Polynomial, ...]:
        return self._pieces

    @property
    def support(self) -> Tuple[Fraction, Fraction]:
        return self._breakpoints[0], self._breakpoints[-1]

    def intervals(self) -> Iterator[PIECE]:
        for lo, hi, piece in zip(self._breakpoints, self._breakpoints[1:], self._pieces):
            yield lo, hi, piece

    def degree(self) -> int:
        return max(piece.degree for piece in self._pieces)

    def piece_at(self, y: RationalLike) -> Polynomial:
        """The polynomial in force at y (zero polynomial outside of the support)"""
        lo, hi = self.support
        if y < lo or y > hi:
            return Polynomial()
        index = bisect_right(self._breakpoints, y) - 1
        return self._pieces[min(index, len(self._pieces) - 1)]

    def eval(self, y: RationalLike) -> Fraction:
        y = as_rational(y)
        return self.piece_at(y).eval(y)

    __call__ = eval

    def eval_float(self, y: float) -> float:
        lo, hi = self.support
        if y < lo or y > hi:
            return 0.0
        index = bisect_right(self._breakpoints, y) - 1
        return self._pieces[min(index, len(self._pieces) - 1)].eval_float(y)

    def refine(self, breakpoints: Iterable[RationalLike]) -> "PiecewisePoly":
        """Same function, with extra breakpoints inserted (points outside of the support are ignored)"""
        lo, hi = self.support
        points = sorted(set(self._breakpoints) | {as_rational(b) for b in breakpoints if lo <= b <= hi})
        return PiecewisePoly(points, [self.piece_at((a + b) / 2) for a, b in zip(points, points[1:])])

    def _combine(self, other: "PiecewisePoly", operator) -> "PiecewisePoly":
        points = sorted(set(self._breakpoints) | set(other._breakpoints))
        pieces = []
        for a, b in zip(points, points[1:]):
            middle = (a + b) / 2
            pieces.append(operator(self.piece_at(middle), other.piece_at(middle)))
        return PiecewisePoly(points, pieces)

    def __add__(self, other: "PiecewisePoly") -> "PiecewisePoly":
        if not isinstance(other, PiecewisePoly):
            return NotImplemented
        return self._combine(other, lambda p, q: p + q)

    def __sub__(self, other: "PiecewisePoly") -> "PiecewisePoly":
        if not isinstance(other, PiecewisePoly):
            return NotImplemented
        return self._combine(other, lambda p, q: p - q)

    def __neg__(self) -> "PiecewisePoly":
        return PiecewisePoly(self._breakpoints, [-piece for piece in self._pieces])

    def scale(self, factor: RationalLike) -> "PiecewisePoly":
        return PiecewisePoly(self._breakpoints, [piece.scale(factor) for piece in self._pieces])

    def __mul__(self, other) -> "PiecewisePoly":
        if isinstance(other, Polynomial):
            return PiecewisePoly(self._breakpoints, [piece * other for piece in self._pieces])
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def restrict(self, a: RationalLike, b: RationalLike) -> Optional["PiecewisePoly"]:
        """Restriction to [a, b] ∩ support, None when that intersection has no interior"""
        a, b = as_rational(a), as_rational(b)
        lo, hi = max(a, self.support[0]), min(b, self.support[1])
        if lo >= hi:
            return None
        points = [lo] + [p for p in self._breakpoints if lo < p < hi] + [hi]
        return PiecewisePoly(points, [self.piece_at((x + y) / 2) for x, y in zip(points, points[1:])])

    def reflect(self) -> "PiecewisePoly":
        """y ↦ -y"""
        return PiecewisePoly(
            [-b for b in reversed(self._breakpoints)], [piece.reflect() for piece in reversed(self._pieces)]
        )

    def fold(self) -> "PiecewisePoly":
        """Density of the y ≥ 0 half of f(y) + f(-y): pairing it with an even weight over y ≥ 0 equals
        pairing f over its whole support"""
        folded = (self + self.reflect()).restrict(0, max(abs(self.support[0]), abs(self.support[1])))
        if folded is None:
            raise InputError("Cannot fold a density supported at a single point")
        return folded

    def simplified(self) -> "PiecewisePoly":
        """Merge adjacent equal pieces"""
        points = [self._breakpoints[0]]
        pieces: List[Polynomial] = []
        for _, hi, piece in self.intervals():
            if pieces and pieces[-1] == piece:
                points[-1] = hi
            else:
                pieces.append(piece)
                points.append(hi)
        return PiecewisePoly(points, pieces)

    def is_even(self) -> bool:
        return self == self.reflect()

    def is_odd(self) -> bool:
        return self == -self.reflect()

    def is_zero(self) -> bool:
        return all(piece.is_zero() for piece in self._pieces)

    def integrate(self, a: RationalLike, b: RationalLike) -> Fraction:
        return definite_integral(self, a, b)

    def total(self) -> Fraction:
        return definite_integral(self, *self.support)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PiecewisePoly):
            return NotImplemented
        left, right = self.simplified(), other.simplified()
        return left._breakpoints == right._breakpoints and left._pieces == right._pieces

    def __hash__(self) -> int:
        simple = self.simplified()
        return hash((simple._breakpoints, simple._pieces))

    def __repr__(self) -> str:
        body = ", ".join(f"[{lo}, {hi}]: {piece}" for lo, hi, piece in self.intervals())
        return f"PiecewisePoly({body})"


def definite_integral(p: PiecewisePoly, a: RationalLike, b: RationalLike) -> Fraction:
    """
    Exact ∫_a^b p(y) dy, the integration range being clipped to the support of p
    :param p:
    :param a:
    :param b:
    :return:
    """
    a, b = as_rational(a), as_rational(b)
    if a > b:
        raise ArgumentOrderError(f"Lower bound {a} exceeds upper bound {b}")
    total = Fraction(0)
    for lo, hi, piece in p.intervals():
        lo, hi = max(lo, a), min(hi, b)
        if lo < hi:
            total += piece.integrate(lo, hi)
    return total
