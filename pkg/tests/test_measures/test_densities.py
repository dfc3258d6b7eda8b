from fractions import Fraction

import pytest
import sympy

from weightedkstab.exceptions import DomainError, UnknownCaseError
from weightedkstab.geometry import MomentPolytope
from weightedkstab.measures import (
    MeasureKind,
    catalog,
    find_by_mori_mukai,
    get_case,
    logpair_measures,
    logpair_mu_folded_formula,
    logpair_mu_one,
    lookup,
    measures,
    mu_density,
    nu_density,
    quadric_measures,
    quadric_mu_density,
    quadric_mu_folded_formula,
)
from weightedkstab.poly import PiecewisePoly, Polynomial, is_nonnegative_on
from weightedkstab.weights import PolynomialWeight, pair

y = sympy.Symbol("y")
R = sympy.Rational

# (lo, hi, expression) pieces of μ/dy and ν/dy for every spherical action
TABLE = {
    "3-2-3": (
        [(-1, 0, R(16, 3)), (0, 1, R(4, 3) * (1 - 2 * y) * (2 - y) ** 2)],
        [(-1, 0, 8 * y), (0, 1, 2 * y * (2 - y) ** 2)],
    ),
    "3-2-4": (
        [(-3, 0, R(1, 3) * y ** 2 * (y + 3)), (0, 3, -R(1, 3) * y ** 2 * (y - 3))],
        [(-3, 3, R(1, 2) * y * (3 - y) * (y + 3))],
    ),
    "3-2-5": (
        [(-2, 0, R(2, 3) * (y + 2) ** 3), (0, 2, -R(2, 3) * (y - 2) ** 3)],
        [(-2, 0, 4 * y * (2 + y)), (0, 2, 4 * y * (2 - y))],
    ),
    "3-2-6": (
        [(-2, -1, R(2, 3) * (y + 2) ** 3), (-1, 0, R(1, 3) * y ** 2 * (y + 3)), (0, 3, -R(1, 3) * y ** 2 * (y - 3))],
        [(-2, -1, 4 * y * (2 + y)), (-1, 3, R(1, 2) * y * (3 - y) * (y + 3))],
    ),
    "3-2-8": (
        [(-1, 0, R(2, 3) * (y + 2) ** 3), (0, 2, -R(2, 3) * (y - 2) ** 3)],
        [(-1, 0, 4 * y * (2 + y)), (0, 2, 4 * y * (2 - y))],
    ),
    "3-2-9": (
        [
            (-2, -1, R(2, 3) * (y + 2) ** 3),
            (-1, 0, R(1, 3) * y ** 2 * (y + 3)),
            (0, 1, -R(1, 3) * y ** 2 * (y - 3)),
            (1, 2, -R(2, 3) * (y - 2) ** 3),
        ],
        [(-2, -1, 4 * y * (2 + y)), (-1, 1, R(1, 2) * y * (3 - y) * (y + 3)), (1, 2, 4 * y * (2 - y))],
    ),
    "3-2-11": (
        [(-1, 0, R(2, 3) * (y + 2) ** 3), (0, 1, -R(2, 3) * (y - 2) ** 3)],
        [(-1, 0, 4 * y * (2 + y)), (0, 1, 4 * y * (2 - y))],
    ),
    "3-2-17": (
        [(-1, 0, sympy.Integer(36)), (0, 1, R(4, 3) * (3 - 2 * y) ** 2 * (3 - 4 * y))],
        [(-1, 0, 18 * y), (0, 1, 2 * y * (3 - 2 * y) ** 2)],
    ),
    "3-2-18": (
        [(-3, 0, R(4, 3) * (y + 3) ** 2 * (2 * y + 3)), (0, 3, R(4, 3) * (y - 3) ** 2 * (3 - 2 * y))],
        [(-3, 0, 2 * y * (3 + y) ** 2), (0, 3, 2 * y * (3 - y) ** 2)],
    ),
    "3-2-19": (
        [
            (-3, -1, R(4, 3) * (y + 3) ** 2 * (2 * y + 3)),
            (-1, 1, R(16, 3)),
            (1, 3, R(4, 3) * (y - 3) ** 2 * (3 - 2 * y)),
        ],
        [(-3, -1, 2 * y * (3 + y) ** 2), (-1, 1, 8 * y), (1, 3, 2 * y * (3 - y) ** 2)],
    ),
    "3-2-21": (
        [(-1, 0, R(4, 3) * (y + 3) ** 2 * (2 * y + 3)), (0, 3, R(4, 3) * (y - 3) ** 2 * (3 - 2 * y))],
        [(-1, 0, 2 * y * (3 + y) ** 2), (0, 3, 2 * y * (3 - y) ** 2)],
    ),
    "3-2-23": (
        [(-1, 0, R(4, 3) * (y + 3) ** 2 * (2 * y + 3)), (0, 1, R(4, 3) * (y - 3) ** 2 * (3 - 2 * y))],
        [(-1, 0, 2 * y * (3 + y) ** 2), (0, 1, 2 * y * (3 - y) ** 2)],
    ),
}


def as_polynomial(expression) -> Polynomial:
    coefficients = sympy.Poly(sympy.expand(expression), y).all_coeffs()[::-1]
    return Polynomial(Fraction(int(c.p), int(c.q)) for c in coefficients)


def as_piecewise(rows) -> PiecewisePoly:
    return PiecewisePoly.from_pieces((lo, hi, as_polynomial(expression)) for lo, hi, expression in rows)


class TestCatalog:
    def test_twelve_actions(self):
        assert len(catalog()) == 12
        assert {case.dm_id for case in catalog()} == set(TABLE)

    def test_polytope_vertices(self):
        assert set(get_case("3-2-19").polytope.vertices) == {(0, 3), (4, 1), (4, -1), (0, -3)}

    def test_two_actions_on_the_quadric(self):
        assert [case.dm_id for case in find_by_mori_mukai("1-16")] == ["3-2-4", "3-2-18"]

    def test_lookup(self):
        assert lookup("2-29").dm_id == "3-2-19"
        assert lookup(" 3-2-21 ").mori_mukai == "2-30"

    @pytest.mark.parametrize("identifier", ["1-16", "9-9-9"])
    def test_lookup_failures(self, identifier):
        with pytest.raises(UnknownCaseError):
            lookup(identifier)

    def test_notes(self):
        notes = " ".join(get_case("3-2-18").notes)
        assert "x0x2 - x1^2 + z x3x4" in notes
        assert "valuation cone" in notes


class TestThreefoldMeasures:
    @pytest.mark.parametrize("dm_id", sorted(TABLE))
    def test_mu(self, dm_id):
        mu, _ = measures(get_case(dm_id).polytope)
        assert mu.kind is MeasureKind.MU
        assert mu.density == as_piecewise(TABLE[dm_id][0])

    @pytest.mark.parametrize("dm_id", sorted(TABLE))
    def test_nu(self, dm_id):
        _, nu = measures(get_case(dm_id).polytope)
        assert nu.kind is MeasureKind.NU
        assert nu.density == as_piecewise(TABLE[dm_id][1])

    def test_total_mass(self):
        assert mu_density(get_case("3-2-18").polytope).total() == 36
        assert mu_density(get_case("3-2-19").polytope).total() == Fraction(32, 3)
        assert nu_density(get_case("3-2-21").polytope).total() == 8

    def test_unit_square(self):
        square = MomentPolytope([(0, 0), (1, 0), (1, 1), (0, 1)], kappa=(2, 0), dh_exponent=1)
        assert mu_density(square).total() == Fraction(-2, 3)

    def test_fold(self):
        mu, _ = measures(get_case("3-2-18").polytope)
        folded = mu.fold()
        assert folded.folded
        assert folded.support == (0, 3)
        assert folded.total() == mu.total()
        assert folded.fold() is folded


class TestLogPair:
    @pytest.mark.parametrize("t", [Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(9, 10)])
    def test_folded_formula(self, t):
        mu, _ = logpair_measures(t)
        assert mu.density.fold() == logpair_mu_folded_formula(t)

    @pytest.mark.parametrize("t", [Fraction(0), Fraction(1, 5), Fraction(2, 3)])
    def test_mu_one(self, t):
        mu, _ = logpair_measures(t)
        assert mu.total() == logpair_mu_one(t)

    def test_reduces_to_2_29(self):
        mu, nu = logpair_measures(0)
        reference_mu, reference_nu = measures(get_case("3-2-19").polytope)
        assert mu.density == reference_mu.density
        assert nu.density == reference_nu.density

    def test_domain(self):
        with pytest.raises(DomainError):
            logpair_mu_folded_formula(1)


class TestQuadric:
    def test_folded_density(self):
        expected = as_piecewise([(0, 4, R(1, 3) * (8 - 2 * y) ** 3 * (4 - 3 * y))])
        assert quadric_mu_density(6).density == expected
        assert quadric_mu_density(6).total() == Fraction(4096, 15)

    @pytest.mark.parametrize("n", [5, 6, 7, 9])
    def test_generic_construction_matches_closed_form(self, n):
        mu, nu = quadric_measures(n)
        assert mu.density.fold() == quadric_mu_folded_formula(n)
        assert nu.density.is_odd()

    def test_domain(self):
        with pytest.raises(DomainError):
            quadric_mu_folded_formula(4)

    def test_n_5_is_the_folded_quadric_threefold(self):
        mu, _ = measures(get_case("3-2-18").polytope)
        assert quadric_mu_density(5).density == mu.density.fold()

    @pytest.mark.parametrize("n", [5, 6, 7, 8])
    def test_trivial_weight_is_stabilizing(self, n):
        mu, nu = quadric_measures(n)
        assert mu.total() > 0
        assert nu.total() == 0


SYMMETRIC = {"3-2-4", "3-2-5", "3-2-9", "3-2-11", "3-2-18", "3-2-19", "3-2-23"}
EVEN_WEIGHTS = [Polynomial([1]), Polynomial([1, 0, 1]), Polynomial([2, 0, -1, 0, 3]), Polynomial([0, 0, 0, 0, 0, 0, 1])]


class TestSymmetry:
    def test_symmetric_actions(self):
        assert {case.dm_id for case in catalog() if case.polytope.is_y_symmetric()} == SYMMETRIC

    @pytest.mark.parametrize("dm_id", sorted(SYMMETRIC))
    def test_parity_of_the_densities(self, dm_id):
        mu, nu = measures(get_case(dm_id).polytope)
        assert mu.density.is_even()
        assert nu.density.is_odd()

    @pytest.mark.parametrize("dm_id", sorted(SYMMETRIC))
    @pytest.mark.parametrize("weight", EVEN_WEIGHTS, ids=str)
    def test_even_weights_kill_the_futaki_term(self, dm_id, weight):
        _, nu = measures(get_case(dm_id).polytope)
        assert (nu.density * weight).total() == 0
        assert pair(nu, PolynomialWeight(weight)).exact == 0

    @pytest.mark.parametrize("dm_id", sorted(set(TABLE) - SYMMETRIC))
    def test_asymmetric_actions_have_a_futaki_term(self, dm_id):
        _, nu = measures(get_case(dm_id).polytope)
        assert nu.total() != 0 or (nu.density * Polynomial([0, 0, 1])).total() != 0


class TestNonnegativityAgainstSampling:
    @pytest.mark.parametrize("dm_id", sorted(TABLE))
    def test_exact_decision_matches_dense_sampling(self, dm_id):
        for measure in measures(get_case(dm_id).polytope):
            density = measure.density
            lo, hi = density.support
            sampled = all(density(lo + (hi - lo) * Fraction(k, 999)) >= 0 for k in range(1000))
            assert bool(is_nonnegative_on(density, lo, hi)) is sampled
