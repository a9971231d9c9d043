import random
from fractions import Fraction

import pytest
import sympy

from unitgate import (
    NumberField,
    char_poly,
    is_algebraic_integer,
    norm,
    trace,
)
from unitgate.numberfield import evaluate_charpoly_at

x, y = sympy.symbols("x y")


def sympy_charpoly(mincoeffs, elem_coords):
    """Independent oracle: resultant_y(f(y), x - g(y)) is the characteristic
    polynomial of g(t) in Q[t]/(f)."""
    f = sum(int(c) * y**i for i, c in enumerate(mincoeffs))
    g = sum(sympy.Rational(c) * y**i for i, c in enumerate(elem_coords))
    res = sympy.resultant(f, x - g, y)
    poly = sympy.Poly(sympy.expand(res), x)
    coeffs = list(reversed(poly.all_coeffs()))
    return [sympy.Rational(c) for c in coeffs]


class TestConstruction:
    def test_rejects_reducible(self):
        with pytest.raises(ValueError):
            NumberField.from_minpoly([-1, 0, 1])

    def test_rejects_non_monic(self):
        with pytest.raises(ValueError):
            NumberField.from_minpoly([1, 0, 2])

    def test_fixture_invariants(self, cubic_fixture):
        assert cubic_fixture.degree == 3
        assert cubic_fixture.disc_f == 81
        assert cubic_fixture.totally_real

    def test_gauss_not_totally_real(self, gauss):
        assert not gauss.totally_real
        assert gauss.disc_f == -4

    def test_degree_one(self, rationals):
        assert rationals.degree == 1
        assert rationals.totally_real
        assert rationals.theta().is_zero


class TestElementArithmetic:
    def test_gauss_product(self, gauss):
        t = gauss.theta()
        assert ((1 + t) * (1 - t)).coords == (Fraction(2), Fraction(0))

    def test_cubic_fixture_solution_sums_to_one(self, cubic_fixture):
        t = cubic_fixture.theta()
        lam = 2 - t
        mu = -1 + t
        assert (lam + mu).coords == (Fraction(1), Fraction(0), Fraction(0))

    def test_omega_solution_sums_to_one(self, omega_field):
        t = omega_field.theta()
        assert ((1 + t) + (-t)).coords == (Fraction(1), Fraction(0))

    def test_division_roundtrip(self, cubic_fixture):
        t = cubic_fixture.theta()
        a = 3 - 2 * t + t * t
        b = 1 + t
        assert ((a / b) * b).coords == a.coords

    def test_inverse(self, cubic_fixture):
        t = cubic_fixture.theta()
        assert (t * t.inverse()).coords == cubic_fixture.one().coords
        # 1/(2 - t) = -1 + 4t - t^2, solved by hand from t^3 = 6t^2 - 9t + 3
        inv = (2 - t).inverse()
        assert inv.coords == (Fraction(-1), Fraction(4), Fraction(-1))

    def test_zero_division(self, gauss):
        with pytest.raises(ZeroDivisionError):
            gauss.one() / gauss.zero()

    def test_mismatched_fields(self, gauss, omega_field):
        with pytest.raises(ValueError):
            gauss.theta() + omega_field.theta()


class TestCharPoly:
    def test_generator_reproduces_minpoly(self, gauss):
        cp = char_poly(gauss.theta())
        assert cp.coeffs == (Fraction(1), Fraction(0), Fraction(1))
        assert cp.norm == 1 and cp.trace == 0

    def test_cubic_fixture_element(self, cubic_fixture):
        # oracle: prod(X - (2 - t_i)) = -f(2 - X) expands to X^3 - 3X + 1,
        # so norm = -1 and trace = 0 (trace 6 would be the trace of t itself)
        lam = 2 - cubic_fixture.theta()
        cp = char_poly(lam)
        expected = sympy_charpoly([-3, 9, -6, 1], [2, -1, 0])
        assert [Fraction(str(c)) for c in expected] == list(cp.coeffs)
        assert cp.coeffs == (Fraction(1), Fraction(-3), Fraction(0), Fraction(1))
        assert cp.norm == -1
        assert cp.trace == 0
        assert trace(cubic_fixture.theta()) == 6

    def test_norm_of_theta_minus_one(self, cubic_fixture):
        # prod(t_i - 1) = (-1)^3 f(1) = -1 since f(1) = 1
        lam = -1 + cubic_fixture.theta()
        assert norm(lam) == -1

    def test_matches_sympy_oracle_random(self, field_pool):
        rng = random.Random(23)
        for field in field_pool:
            for _ in range(5):
                coords = [
                    Fraction(rng.randint(-6, 6), rng.choice([1, 1, 2, 3]))
                    for _ in range(field.degree)
                ]
                cp = char_poly(field.element(coords))
                expected = sympy_charpoly(field.minpoly.coeffs, coords)
                assert [Fraction(str(c)) for c in expected] == list(cp.coeffs)

    def test_rational_constant(self, cubic_fixture):
        cp = char_poly(cubic_fixture.rational(Fraction(1, 2)))
        # (X - 1/2)^3
        assert cp.coeffs == (Fraction(-1, 8), Fraction(3, 4), Fraction(-3, 2), Fraction(1))
        assert cp.norm == Fraction(1, 8)
        assert cp.trace == Fraction(3, 2)


class TestAlgebraicProperties:
    def test_norm_multiplicative_trace_additive(self, field_pool):
        rng = random.Random(31)
        for field in field_pool:
            for _ in range(6):
                a = field.element([rng.randint(-5, 5) for _ in range(field.degree)])
                b = field.element([rng.randint(-5, 5) for _ in range(field.degree)])
                assert norm(a * b) == norm(a) * norm(b)
                assert trace(a + b) == trace(a) + trace(b)

    def test_cayley_hamilton(self, field_pool):
        rng = random.Random(37)
        for field in field_pool:
            for _ in range(4):
                elem = field.element(
                    [Fraction(rng.randint(-4, 4), rng.choice([1, 2])) for _ in range(field.degree)]
                )
                assert evaluate_charpoly_at(char_poly(elem), elem).is_zero

    def test_integer_coords_integer_charpoly(self, field_pool):
        rng = random.Random(41)
        for field in field_pool:
            elem = field.element([rng.randint(-9, 9) for _ in range(field.degree)])
            assert char_poly(elem).is_integral


class TestIntegrality:
    def test_theta_is_integral(self, cubic_fixture):
        assert is_algebraic_integer(cubic_fixture.theta())

    def test_half_is_not(self, cubic_fixture):
        assert not is_algebraic_integer(cubic_fixture.rational(Fraction(1, 2)))

    def test_omega_unit(self, omega_field):
        elem = 1 + omega_field.theta()
        assert is_algebraic_integer(elem)
        assert char_poly(elem).coeffs == (Fraction(1), Fraction(-1), Fraction(1))

    def test_golden_ratio_style(self):
        # (1 + sqrt(5))/2 is integral although not in Z[sqrt(5)]
        field = NumberField.from_minpoly([-5, 0, 1])
        elem = field.element([Fraction(1, 2), Fraction(1, 2)])
        assert is_algebraic_integer(elem)
