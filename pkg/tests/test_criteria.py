import pytest

from unitgate import (
    NumberField,
    SearchConfig,
    all_verdicts,
    check_conditional,
    check_pram,
    check_t23,
    check_t23ram,
    check_triantafillou,
    check_unitcrit,
    enumerate_unit_solutions,
    replay_certificate,
    verify_solutions_against_certificate,
)
from unitgate.criteria import CONDITIONAL_ASSUMPTIONS, THEOREM_IDS


def trace_status(verdict, fragment):
    for check in verdict.hypothesis_trace:
        if fragment in check.name:
            return check.status
    raise AssertionError(f"no hypothesis matching {fragment!r} in {verdict.theorem_id}")


class TestUnitCrit:
    def test_small_p_rejected(self, omega_field):
        with pytest.raises(ValueError, match="p >= 5"):
            check_unitcrit(omega_field, 3)

    def test_eisenstein_cubic_yes(self, cubic_5eis):
        v = check_unitcrit(cubic_5eis, 5)
        assert v.holds == "yes"
        assert all(c.status == "pass" for c in v.hypothesis_trace)
        assert replay_certificate(cubic_5eis, v)
        # the certified conclusion agrees with the oracle
        assert len(enumerate_unit_solutions(cubic_5eis, SearchConfig(10)).solutions) == 0

    def test_even_degree_no(self):
        field = NumberField.from_minpoly([-5, 0, 1])
        v = check_unitcrit(field, 5)
        assert v.holds == "no"
        assert trace_status(v, "gcd") == "fail"
        assert v.certificate is None


class TestTriantafillou:
    def test_rationals_yes(self, rationals):
        v = check_triantafillou(rationals)
        assert v.holds == "yes"
        assert replay_certificate(rationals, v)

    def test_sqrt7_yes_and_oracle_agrees(self, sqrt7_field):
        v = check_triantafillou(sqrt7_field)
        assert v.holds == "yes"
        assert replay_certificate(sqrt7_field, v)
        assert len(enumerate_unit_solutions(sqrt7_field, SearchConfig(10)).solutions) == 0

    def test_cubic_fixture_no(self, cubic_fixture):
        # 3 is totally ramified here and 18 unit solutions exist
        v = check_triantafillou(cubic_fixture)
        assert v.holds == "no"
        assert trace_status(v, "totally split") == "fail"
        assert "totally_ramified" in [
            c.detail for c in v.hypothesis_trace if "totally split" in c.name
        ][0]

    def test_omega_no(self, omega_field):
        assert check_triantafillou(omega_field).holds == "no"

    def test_t23ram_field_degree_fails(self, cubic_t23ram):
        v = check_triantafillou(cubic_t23ram)
        assert v.holds == "no"
        assert trace_status(v, "3 does not divide") == "fail"
        assert trace_status(v, "totally split") == "pass"


class TestPram:
    def test_scan_witness_yes(self, cubic_2inert_5eis):
        v = check_pram(cubic_2inert_5eis, 5)
        assert v.holds == "yes"
        assert replay_certificate(cubic_2inert_5eis, v)

    def test_not_totally_real_no(self):
        field = NumberField.from_minpoly([10, 10, 0, 1])  # x^3 + 10x + 10
        v = check_pram(field, 5)
        assert v.holds == "no"
        assert trace_status(v, "totally real") == "fail"

    def test_even_degree_no(self, sqrt7_field):
        # 2 ramifies (determinate shape) but gcd(2, 4) = 2
        v = check_pram(sqrt7_field, 5)
        assert v.holds == "no"
        assert trace_status(v, "gcd") == "fail"

    def test_small_p_rejected(self, cubic_2inert_5eis):
        with pytest.raises(ValueError):
            check_pram(cubic_2inert_5eis, 3)

    def test_pram_implies_unitcrit(self, cubic_2inert_5eis, cubic_5eis):
        for field in (cubic_2inert_5eis, cubic_5eis):
            if check_pram(field, 5).holds == "yes":
                assert check_unitcrit(field, 5).holds == "yes"


class TestT23:
    def test_rationals_yes(self, rationals):
        v = check_t23(rationals)
        assert v.holds == "yes"
        assert replay_certificate(rationals, v)

    def test_cubic_degree_fails(self, cubic_fixture):
        v = check_t23(cubic_fixture)
        assert v.holds == "no"
        assert trace_status(v, "mod 6") == "fail"

    def test_sqrt7_degree_fails(self, sqrt7_field):
        assert check_t23(sqrt7_field).holds == "no"


class TestT23Ram:
    def test_scan_witness_yes(self, cubic_t23ram):
        v = check_t23ram(cubic_t23ram)
        assert v.holds == "yes"
        assert replay_certificate(cubic_t23ram, v)

    def test_even_degree_no(self):
        field = NumberField.from_minpoly([-7, 0, 1])
        assert check_t23ram(field).holds == "no"

    def test_three_ramified_no(self, cubic_fixture):
        v = check_t23ram(cubic_fixture)
        assert v.holds == "no"
        assert trace_status(v, "totally split") == "fail"


class TestConditional:
    def test_complex_cubic_yes(self):
        field = NumberField.from_minpoly([10, 10, 0, 1])  # not totally real
        assert not field.totally_real
        v = check_conditional(field, "pram_conditional", 5)
        assert v.holds == "yes"
        assert v.conditional_on == CONDITIONAL_ASSUMPTIONS
        assert replay_certificate(field, v)
        # totally-real is genuinely not required
        assert all("totally real" not in c.name for c in v.hypothesis_trace)

    def test_inert_two_rejected(self, cubic_2inert_5eis):
        v = check_conditional(cubic_2inert_5eis, "pram_conditional", 5)
        assert v.holds == "no"
        assert trace_status(v, "2 is totally ramified") == "fail"

    def test_even_degree_no(self, sqrt7_field):
        v = check_conditional(sqrt7_field, "pram_conditional", 5)
        assert v.holds == "no"
        assert trace_status(v, "gcd") == "fail"

    def test_t23ram_variant(self, cubic_t23ram):
        v = check_conditional(cubic_t23ram, "t23ram_conditional")
        assert v.holds == "yes"
        assert v.conditional_on == CONDITIONAL_ASSUMPTIONS

    def test_unknown_variant(self, rationals):
        with pytest.raises(ValueError):
            check_conditional(rationals, "bogus")


class TestIndeterminate:
    def test_non_maximal_two(self):
        field = NumberField.from_minpoly([-8, -2, -1, 1])
        assert check_t23ram(field).holds == "indeterminate"
        assert check_pram(field, 5).holds == "indeterminate"
        v = check_t23(field)
        assert v.holds == "indeterminate"
        assert trace_status(v, "2 is inert") == "indeterminate"


class TestAllVerdicts:
    def test_seven_theorems(self, cubic_fixture):
        verdicts = all_verdicts(cubic_fixture, 5)
        assert tuple(v.theorem_id for v in verdicts) == THEOREM_IDS

    def test_yes_needs_all_pass(self, field_pool):
        for field in field_pool:
            for v in all_verdicts(field, 5):
                if v.holds == "yes":
                    assert all(c.status == "pass" for c in v.hypothesis_trace)
                    assert v.certificate is not None
                    assert replay_certificate(field, v)


class TestOracleCrossCheck:
    def test_synthetic_violation_detected(self, cubic_5eis, cubic_fixture):
        v = check_unitcrit(cubic_5eis, 5)
        assert v.holds == "yes"
        # borrow genuine solutions from the wrong field to simulate the alarm
        fake = enumerate_unit_solutions(cubic_fixture, SearchConfig(3)).solutions
        assert len(fake) > 0
        problems = verify_solutions_against_certificate(v, fake)
        assert problems and "no unit solutions" in problems[0]

    def test_no_verdict_no_problem(self, cubic_fixture):
        v = check_triantafillou(cubic_fixture)  # holds == no
        assert verify_solutions_against_certificate(v, []) == []
