from fractions import Fraction

import pytest

from weightedkstab.exceptions import InputError
from weightedkstab.poly import PiecewisePoly, Polynomial, definite_integral

Y = Polynomial.identity()


@pytest.fixture
def tent():
    """1 + y on [-1, 0], 1 - y on [0, 1]"""
    return PiecewisePoly([-1, 0, 1], [1 + Y, 1 - Y])


class TestPiecewisePoly:
    def test_validation(self):
        with pytest.raises(InputError):
            PiecewisePoly([0], [])
        with pytest.raises(InputError):
            PiecewisePoly([0, 0, 1], [Y, Y])
        with pytest.raises(InputError):
            PiecewisePoly([0, 1], [Y, Y])

    def test_from_pieces_fills_gaps(self):
        density = PiecewisePoly.from_pieces([(0, 1, Y), (2, 3, Polynomial([1]))])
        assert density.breakpoints == (0, 1, 2, 3)
        assert density.pieces[1].is_zero()

    def test_evaluation(self, tent):
        assert tent(Fraction(-1, 2)) == Fraction(1, 2)
        assert tent(0) == 1
        assert tent(2) == 0
        assert tent.eval_float(0.5) == pytest.approx(0.5)

    def test_integrals(self, tent):
        assert tent.total() == 1
        assert definite_integral(tent, 0, 5) == Fraction(1, 2)
        assert tent.integrate(Fraction(-1, 2), Fraction(1, 2)) == Fraction(3, 4)

    def test_sum_over_different_breakpoints(self, tent):
        total = tent + PiecewisePoly.constant(1, 0, 2)
        assert total.breakpoints == (-1, 0, 1, 2)
        assert total(Fraction(1, 2)) == Fraction(3, 2)
        assert total(Fraction(3, 2)) == 1

    def test_equality_ignores_redundant_breakpoints(self):
        assert PiecewisePoly([0, 1, 2], [Y, Y]) == PiecewisePoly([0, 2], [Y])
        assert hash(PiecewisePoly([0, 1, 2], [Y, Y])) == hash(PiecewisePoly([0, 2], [Y]))

    def test_parity(self, tent):
        assert tent.is_even()
        assert PiecewisePoly([-1, 1], [Y]).is_odd()
        assert tent.reflect() == tent

    def test_fold(self):
        density = PiecewisePoly.constant(1, -1, 2)
        folded = density.fold()
        assert folded == PiecewisePoly([0, 1, 2], [Polynomial([2]), Polynomial([1])])
        assert folded.total() == density.total()

    def test_restrict(self, tent):
        assert tent.restrict(Fraction(1, 2), 3) == PiecewisePoly([Fraction(1, 2), 1], [1 - Y])
        assert tent.restrict(2, 3) is None

    def test_product_with_polynomial(self, tent):
        assert (tent * Y).total() == 0
        assert (tent * 2).total() == 2
