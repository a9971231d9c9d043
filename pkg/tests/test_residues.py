import random
from fractions import Fraction
from itertools import product

import pytest

from unitgate import (
    HypothesisError,
    IntPoly,
    LemmaContradiction,
    NumberField,
    check_3adic_lemma,
    check_charpoly_congruence,
    check_norm_congruence,
    mod9_norm_residue,
    norm,
    residue_report,
    residue_totally_ramified,
    sunit_context,
    trace_obstruction,
    unit_residue_pm1,
)
from unitgate.exactmath import ResiduePoly
from unitgate.residues import residue_pairs_summing_to_one, three_times_solvable_mod9


def eisenstein_fields(p, degree, count, seed=0):
    """Random-coefficient fields Eisenstein at p (hence totally ramified and
    p-maximal there)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        coeffs = [p * rng.randint(-3, 3) for _ in range(degree)]
        coeffs[0] = p * rng.choice([u for u in range(-3, 4) if u and u % p])
        out.append(NumberField.from_minpoly(coeffs + [1]))
    return out


class TestResidue:
    def test_fixture_solution_residue(self, cubic_fixture):
        t = cubic_fixture.theta()
        assert residue_totally_ramified(cubic_fixture, 3, 2 - t) == 2

    def test_uniformizer(self, cubic_fixture):
        assert residue_totally_ramified(cubic_fixture, 3, cubic_fixture.theta()) == 0

    def test_omega_double_root(self, omega_field):
        # x^2 + x + 1 = (x - 1)^2 mod 3, so t = 1 and 1 + t = 2 mod the prime
        assert residue_totally_ramified(omega_field, 3, 1 + omega_field.theta()) == 2

    def test_requires_ramification(self, gauss):
        with pytest.raises(HypothesisError):
            residue_totally_ramified(gauss, 5, gauss.theta())

    def test_requires_integrality(self, cubic_fixture):
        with pytest.raises(HypothesisError):
            residue_totally_ramified(cubic_fixture, 3, cubic_fixture.rational(Fraction(1, 2)))


class TestCharpolyCongruence:
    def test_fixture_solution(self, cubic_fixture):
        # (x-2)^3 = x^3 - 6x^2 + 12x - 8 = x^3 + 1 mod 3, and the charpoly
        # x^3 - 3x + 1 = x^3 + 1 mod 3 as well
        lhs = ResiduePoly(3, (-8, 12, -6, 1))
        assert lhs.coeffs == (1, 0, 0, 1)
        check = check_charpoly_congruence(cubic_fixture, 3, 2 - cubic_fixture.theta())
        assert check.passed and check.b == 2

    def test_integer_constants(self, cubic_fixture):
        for c in (-4, 0, 7):
            check = check_charpoly_congruence(cubic_fixture, 3, cubic_fixture.rational(c))
            assert check.passed and check.b == c % 3

    def test_property_on_eisenstein_fields(self):
        rng = random.Random(99)
        for p, degree in ((3, 3), (5, 3), (5, 5), (7, 3), (7, 7)):
            for field in eisenstein_fields(p, degree, 2, seed=p * degree):
                for _ in range(8):
                    elem = field.element([rng.randint(-5, 5) for _ in range(degree)])
                    assert check_charpoly_congruence(field, p, elem).passed
                    assert check_norm_congruence(field, p, elem)


class TestNormCongruence:
    def test_fixture_solution(self, cubic_fixture):
        # norm(2 - t) = -1 = 2 = 2^3 mod 3
        assert check_norm_congruence(cubic_fixture, 3, 2 - cubic_fixture.theta())

    def test_other_solution_component(self, cubic_fixture):
        assert check_norm_congruence(cubic_fixture, 3, -1 + cubic_fixture.theta())

    def test_report_aggregates(self, cubic_fixture):
        rep = residue_report(cubic_fixture, 3, 2 - cubic_fixture.theta())
        assert rep.b == 2 and rep.passed()
        assert dict(rep.checks) == {"charpoly_congruence": True, "norm_congruence": True}


class TestUnitResiduePM1:
    def test_constants(self, cubic_5eis):
        assert unit_residue_pm1(cubic_5eis, 5, cubic_5eis.one()) == 1
        assert unit_residue_pm1(cubic_5eis, 5, -cubic_5eis.one()) == -1

    def test_exhaustive_units_height_5(self, cubic_5eis):
        # x^3 - 10x + 5 is Eisenstein at 5, gcd(3, 2) = 1: every unit must
        # land on +-1, with no contradiction over the whole height-5 box
        seen = set()
        for coords in product(range(-5, 6), repeat=3):
            elem = cubic_5eis.element(coords)
            if elem.is_zero or abs(norm(elem)) != 1:
                continue
            seen.add(unit_residue_pm1(cubic_5eis, 5, elem))
        assert seen == {1, -1}

    def test_hypothesis_violations(self, cubic_fixture, gauss):
        with pytest.raises(HypothesisError):
            # gcd(2, (5-1)/2) = 2 fails for a quadratic field
            unit_residue_pm1(gauss, 5, gauss.one())
        with pytest.raises(HypothesisError):
            # not a unit
            unit_residue_pm1(cubic_fixture, 3, cubic_fixture.theta())


class TestThreeAdicLemma:
    def test_rational_solutions_pass(self, rationals):
        ctx = sunit_context(rationals)
        two = rationals.rational(2)
        minus_one = rationals.rational(-1)
        assert check_3adic_lemma(rationals, ctx, two, minus_one)
        assert check_3adic_lemma(rationals, ctx, minus_one, two)

    def test_non_sunit_rejected(self, rationals):
        ctx = sunit_context(rationals)
        with pytest.raises(HypothesisError):
            check_3adic_lemma(rationals, ctx, rationals.rational(3), rationals.rational(-2))

    def test_requires_split_three(self, cubic_fixture):
        ctx = sunit_context(cubic_fixture)
        with pytest.raises(HypothesisError):
            check_3adic_lemma(
                cubic_fixture, ctx, cubic_fixture.rational(2), cubic_fixture.rational(-1)
            )

    def test_integral_sunit_solutions_in_split_field(self, cubic_t23ram):
        from unitgate import SearchConfig, enumerate_sunit_solutions, is_algebraic_integer

        ctx = sunit_context(cubic_t23ram)
        sols = enumerate_sunit_solutions(cubic_t23ram, ctx, SearchConfig(6, denom_exp_max=2))
        checked = 0
        for sol in sols.solutions:
            if is_algebraic_integer(sol.lam) and is_algebraic_integer(sol.mu):
                assert check_3adic_lemma(cubic_t23ram, ctx, sol.lam, sol.mu)
                checked += 1
        assert checked > 0


class TestTraceObstruction:
    def test_mod9_identity(self):
        # synthetic: n = 5, Tr(phi) = 3 gives (-1)^5 + (-1)^4 * 9 = 8 = -1 mod 9
        assert mod9_norm_residue(5, 3) == 8

    def test_unsolvable_congruence(self):
        assert not three_times_solvable_mod9(2)
        assert three_times_solvable_mod9(0)
        assert three_times_solvable_mod9(6)

    def test_forced_residue_pairs(self):
        # the only sign pair summing to 1 mod 3 is (-1, -1); none exist mod 5
        assert residue_pairs_summing_to_one(3) == ((-1, -1),)
        assert residue_pairs_summing_to_one(5) == ()

    def test_hypothesis_violations(self, cubic_t23ram, sqrt7_field):
        with pytest.raises(HypothesisError):
            # degree divisible by 3
            t = cubic_t23ram.theta()
            trace_obstruction(cubic_t23ram, 2 - t, -1 + t)
        with pytest.raises(HypothesisError):
            # not units
            trace_obstruction(sqrt7_field, sqrt7_field.rational(4), sqrt7_field.rational(-3))
        with pytest.raises(HypothesisError):
            # lam + mu != 1
            u = 8 + 3 * sqrt7_field.theta()
            trace_obstruction(sqrt7_field, u, u)

    def test_no_real_inputs_exist(self, sqrt7_field, rationals):
        # the detector's domain is empty: the search oracle agrees there are
        # no unit solutions in fields satisfying the split-3 hypotheses
        from unitgate import SearchConfig, enumerate_unit_solutions

        for field in (sqrt7_field, rationals):
            assert len(enumerate_unit_solutions(field, SearchConfig(8)).solutions) == 0
