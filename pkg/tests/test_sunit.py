import random
from fractions import Fraction

import pytest

from unitgate import (
    HypothesisError,
    NumberField,
    SearchConfig,
    check_FS_conditions,
    check_valbound_lemma,
    enumerate_sunit_solutions,
    is_S_unit,
    is_algebraic_integer,
    m_value,
    make_solution,
    norm,
    ord_q,
    simplify_solution,
    sunit_context,
)


class TestContext:
    def test_rationals(self, rationals):
        ctx = sunit_context(rationals)
        assert ctx.f_q == 1 and ctx.ord_q_of_2 == 1

    def test_gauss_ramified(self, gauss):
        ctx = sunit_context(gauss)
        assert ctx.ord_q_of_2 == 2 and ctx.f_q == 1 and ctx.ramified

    def test_cubic_inert(self, cubic_fixture):
        ctx = sunit_context(cubic_fixture)
        assert ctx.f_q == 3 and ctx.ord_q_of_2 == 1 and ctx.inert

    def test_split_two_rejected(self):
        # x^2 + x - 4 = x(x+1) mod 2: two primes above 2
        field = NumberField.from_minpoly([-4, 1, 1])
        with pytest.raises(HypothesisError):
            sunit_context(field)

    def test_non_maximal_rejected(self):
        field = NumberField.from_minpoly([-5, 0, 1])
        with pytest.raises(HypothesisError):
            sunit_context(field)


class TestOrdQ:
    def test_half_over_rationals(self, rationals):
        ctx = sunit_context(rationals)
        assert ord_q(ctx, rationals.rational(Fraction(1, 2))) == -1

    def test_one_plus_i(self, gauss):
        # norm(1 + i) = 2 and 2 is totally ramified: ord is 1
        ctx = sunit_context(gauss)
        assert ord_q(ctx, 1 + gauss.theta()) == 1
        assert ord_q(ctx, gauss.rational(2)) == 2

    def test_unit_gets_zero(self, cubic_fixture):
        ctx = sunit_context(cubic_fixture)
        assert ord_q(ctx, cubic_fixture.one()) == 0
        assert ord_q(ctx, 2 - cubic_fixture.theta()) == 0

    def test_zero_rejected(self, rationals):
        ctx = sunit_context(rationals)
        with pytest.raises(ZeroDivisionError):
            ord_q(ctx, rationals.zero())

    def test_additive_on_sunits(self, cubic_t23ram):
        ctx = sunit_context(cubic_t23ram)
        rng = random.Random(5)
        sols = enumerate_sunit_solutions(cubic_t23ram, ctx, SearchConfig(4, denom_exp_max=2))
        pool = [s.lam for s in sols.solutions] + [cubic_t23ram.rational(Fraction(1, 4))]
        for _ in range(10):
            a, b = rng.choice(pool), rng.choice(pool)
            assert ord_q(ctx, a * b) == ord_q(ctx, a) + ord_q(ctx, b)


class TestIsSUnit:
    def test_rational_cases(self, rationals):
        ctx = sunit_context(rationals)
        assert is_S_unit(ctx, rationals.rational(2))
        assert is_S_unit(ctx, rationals.rational(Fraction(-1, 8)))
        assert not is_S_unit(ctx, rationals.rational(3))

    def test_unit_is_sunit(self, cubic_fixture):
        ctx = sunit_context(cubic_fixture)
        lam = 2 - cubic_fixture.theta()
        assert norm(lam) == -1
        assert is_S_unit(ctx, lam)

    def test_mixed_denominator_rejected(self, rationals):
        ctx = sunit_context(rationals)
        assert not is_S_unit(ctx, rationals.rational(Fraction(2, 3)))


class TestSolutions:
    def test_m_values(self, rationals):
        ctx = sunit_context(rationals)
        half = rationals.rational(Fraction(1, 2))
        assert m_value(make_solution(ctx, half)) == 1
        assert m_value(make_solution(ctx, rationals.rational(2))) == 1

    def test_unit_solution_m_zero(self, cubic_fixture):
        ctx = sunit_context(cubic_fixture)
        sol = make_solution(ctx, 2 - cubic_fixture.theta())
        assert sol.m == 0 and sol.profile() == (0, 0)

    def test_validation(self, rationals):
        ctx = sunit_context(rationals)
        with pytest.raises(HypothesisError):
            make_solution(ctx, rationals.rational(1))  # mu = 0
        with pytest.raises(HypothesisError):
            make_solution(ctx, rationals.rational(3))  # not an S-unit
        with pytest.raises(HypothesisError):
            make_solution(ctx, rationals.rational(2), rationals.rational(2))  # sum != 1


class TestSimplify:
    def test_both_negative_case(self, rationals):
        ctx = sunit_context(rationals)
        sol = make_solution(ctx, rationals.rational(Fraction(1, 2)))
        out = simplify_solution(ctx, sol)
        assert out.lam.as_fraction() == 2 and out.mu.as_fraction() == -1
        assert out.m == sol.m == 1

    def test_swap_case(self, rationals):
        ctx = sunit_context(rationals)
        sol = make_solution(ctx, rationals.rational(-1))
        out = simplify_solution(ctx, sol)
        assert out.lam.as_fraction() == 2 and out.mu.as_fraction() == -1

    def test_identity_case(self, rationals):
        ctx = sunit_context(rationals)
        sol = make_solution(ctx, rationals.rational(2))
        out = simplify_solution(ctx, sol)
        assert out is sol

    def test_idempotent_and_m_preserving(self, cubic_t23ram):
        ctx = sunit_context(cubic_t23ram)
        sols = enumerate_sunit_solutions(cubic_t23ram, ctx, SearchConfig(5, denom_exp_max=3))
        assert len(sols.solutions) > 0
        for sol in sols.solutions:
            out = simplify_solution(ctx, sol)
            assert out.m == sol.m
            assert is_algebraic_integer(out.lam)
            assert abs(norm(out.mu)) == 1
            again = simplify_solution(ctx, out)
            assert again.lam.coords == out.lam.coords


class TestFSConditions:
    def test_rational_profiles(self, rationals):
        ctx = sunit_context(rationals)
        sols = [
            make_solution(ctx, rationals.rational(Fraction(1, 2))),
            make_solution(ctx, rationals.rational(2)),
            make_solution(ctx, rationals.rational(-1)),
        ]
        rep = check_FS_conditions(ctx, sols)
        assert rep.route == "inert" and rep.passed
        assert {s.profile() for s in sols} == {(-1, -1), (1, 0), (0, 1)}

    def test_ramified_threshold(self, cubic_t23ram):
        ctx = sunit_context(cubic_t23ram)
        sols = enumerate_sunit_solutions(cubic_t23ram, ctx, SearchConfig(4, denom_exp_max=3))
        rep = check_FS_conditions(ctx, sols.solutions)
        assert rep.route == "ramified" and rep.bound == 12
        assert rep.passed

    def test_even_degree_inert_errors(self, omega_field):
        ctx = sunit_context(omega_field)
        sol = make_solution(ctx, omega_field.rational(2))
        with pytest.raises(HypothesisError):
            check_FS_conditions(ctx, [sol])

    def test_violation_reported(self, rationals):
        # no rational S-unit pair breaks the bound, so exercise the report on
        # a synthetic valuation record
        from unitgate.sunit import SUnitSolution

        ctx = sunit_context(rationals)
        fake = SUnitSolution(rationals.rational(1), rationals.rational(1), -5, -5, 5)
        rep = check_FS_conditions(ctx, [fake])
        assert not rep.passed
        assert any("m = 5 > 4" in reason for _, reason in rep.violations)


class TestValuationBound:
    def test_rational_solutions_pass(self, rationals):
        ctx = sunit_context(rationals)
        sols = [
            make_solution(ctx, rationals.rational(Fraction(1, 2))),
            make_solution(ctx, rationals.rational(2)),
        ]
        rep = check_valbound_lemma(ctx, sols)
        assert rep.passed and rep.bound == 2
        assert rep.unit_solution_flags == ()

    def test_unit_solution_flagged(self, cubic_fixture):
        ctx = sunit_context(cubic_fixture)
        sol = make_solution(ctx, 2 - cubic_fixture.theta())
        rep = check_valbound_lemma(ctx, [sol])
        assert rep.unit_solution_flags == (0,)

    def test_vacuous(self, rationals):
        ctx = sunit_context(rationals)
        assert check_valbound_lemma(ctx, []).passed
