"""Valuations at the unique prime above 2, S-unit predicates, the
normalization that replaces an arbitrary S-unit-equation solution by an
integral one, and the bound checks the Fermat deduction needs.

Everything assumes a field where 2 is inert or totally ramified, so there is
a single prime q above 2; then v_2(Norm(x)) = f_q * ord_q(x), which lets the
valuation be read off the norm without ever constructing the ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import HypothesisError
from .numberfield import FieldElement, NumberField, char_poly, is_algebraic_integer, norm
from .splitting import SplittingShape, splitting_shape


@dataclass(frozen=True)
class SUnitContext:
    """S = {q} for the unique prime q above 2 (2 inert or totally ramified).
    f_q is the residue degree of q; ord_q_of_2 its ramification index, which
    equals ord_q(2)."""

    field: NumberField
    q_shape: SplittingShape
    f_q: int
    ord_q_of_2: int

    @property
    def ramified(self) -> bool:
        return self.ord_q_of_2 == self.field.degree and self.field.degree > 1

    @property
    def inert(self) -> bool:
        return self.f_q == self.field.degree

    def to_json(self) -> dict:
        return {
            "classification": self.q_shape.classification,
            "f_q": self.f_q,
            "ord_q_of_2": self.ord_q_of_2,
        }


def sunit_context(field: NumberField, seed: int | None = None) -> SUnitContext:
    """Build the S = {q} context, refusing fields where 2 is not inert or
    totally ramified, or where Z[t] is not 2-maximal."""
    shape = splitting_shape(field, 2, seed=seed)
    if not shape.p_maximal:
        raise HypothesisError("Z[t] is not 2-maximal; 2-adic valuations not readable")
    if not (shape.is_inert or shape.is_totally_ramified):
        raise HypothesisError(
            f"2 is neither inert nor totally ramified (shape {shape.classification})"
        )
    e, f, _ = shape.pairs[0]
    return SUnitContext(field, shape, f, e)


def _v2(x: int) -> int:
    return (x & -x).bit_length() - 1


def ord_q(ctx: SUnitContext, elem: FieldElement) -> int:
    """ord_q via v_2(Norm)/f_q; non-divisibility means the input was not an
    S-unit-supported element (or maximality was broken) and is an error."""
    if elem.is_zero:
        raise ZeroDivisionError("valuation of zero")
    nm = norm(elem)
    v = _v2(abs(nm.numerator)) - _v2(nm.denominator)
    if v % ctx.f_q:
        raise ValueError(
            f"v_2(Norm) = {v} not divisible by residue degree {ctx.f_q}; "
            "element is not supported only at the prime above 2"
        )
    return v // ctx.f_q


def _is_pm_power_of_2(q: Fraction) -> bool:
    num, den = abs(q.numerator), q.denominator
    return num != 0 and num & (num - 1) == 0 and den & (den - 1) == 0


def is_S_unit(ctx: SUnitContext, elem: FieldElement) -> bool:
    """S-unit test: |Norm| is (+ or -) a power of 2 and the characteristic
    polynomials of the element and its inverse have denominators supported
    only at 2."""
    if elem.is_zero:
        raise ZeroDivisionError("zero element")
    if not _is_pm_power_of_2(norm(elem)):
        return False
    if char_poly(elem).denominator_support() - {2}:
        return False
    if char_poly(elem.inverse()).denominator_support() - {2}:
        return False
    return True


@dataclass(frozen=True)
class SUnitSolution:
    """A solution lam + mu = 1 in S-units, with its q-adic valuation profile
    and the statistic m = max(|v_lam|, |v_mu|).  Unit-equation solutions are
    the special case of an all-zero profile (and may carry no context)."""

    lam: FieldElement
    mu: FieldElement
    v_lam: int
    v_mu: int
    m: int

    def profile(self) -> tuple[int, int]:
        return (self.v_lam, self.v_mu)

    def is_unit_solution(self) -> bool:
        return self.v_lam == 0 and self.v_mu == 0

    def to_json(self) -> dict:
        return {
            "lambda": [str(c) for c in self.lam.coords],
            "mu": [str(c) for c in self.mu.coords],
            "v_lambda": self.v_lam,
            "v_mu": self.v_mu,
            "m": self.m,
        }


def make_solution(ctx: SUnitContext | None, lam: FieldElement, mu: FieldElement | None = None) -> SUnitSolution:
    """Validate and package a solution; mu defaults to 1 - lam."""
    if mu is None:
        mu = 1 - lam
    if lam.is_zero or mu.is_zero:
        raise HypothesisError("lam and mu must be nonzero")
    if not (lam + mu - 1).is_zero:
        raise HypothesisError("lam + mu != 1")
    if ctx is None:
        for name, e in (("lam", lam), ("mu", mu)):
            if abs(norm(e)) != 1:
                raise HypothesisError(f"{name} is not a unit (norm {norm(e)})")
        return SUnitSolution(lam, mu, 0, 0, 0)
    for name, e in (("lam", lam), ("mu", mu)):
        if not is_S_unit(ctx, e):
            raise HypothesisError(f"{name} is not an S-unit (norm {norm(e)})")
    v_l = ord_q(ctx, lam)
    v_m = ord_q(ctx, mu)
    return SUnitSolution(lam, mu, v_l, v_m, max(abs(v_l), abs(v_m)))


def m_value(sol: SUnitSolution) -> int:
    return sol.m


def simplify_solution(ctx: SUnitContext, sol: SUnitSolution) -> SUnitSolution:
    """Replace a solution by one with lam integral (an S-unit of the ring of
    integers) and mu a unit, preserving m exactly.  Cases, by the valuation
    profile: both zero or v_lam > 0 keep the pair, v_mu > 0 swaps it, and
    both negative (necessarily equal) maps to (1/lam, -mu/lam)."""
    lam, mu = sol.lam, sol.mu
    if sol.v_lam == 0 and sol.v_mu == 0:
        out = sol
    elif sol.v_lam > 0:
        out = sol
    elif sol.v_mu > 0:
        out = make_solution(ctx, mu, lam)
    else:
        if sol.v_lam != sol.v_mu:
            raise HypothesisError(
                f"negative valuations must agree, got {sol.profile()}"
            )
        out = make_solution(ctx, 1 / lam, -mu / lam)
    if out.m != sol.m:
        raise HypothesisError(f"normalization changed m: {sol.m} -> {out.m}")
    return out


@dataclass(frozen=True)
class FSConditionReport:
    """Per-solution check of the S-unit bounds required by the Fermat
    deduction: ramified 2 needs m <= 4 ord_q(2); inert 2 needs odd degree,
    m <= 4 and ord_q(lam mu) = 1 mod 3."""

    route: str  # "ramified" | "inert"
    bound: int
    violations: tuple[tuple[int, str], ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def check_FS_conditions(ctx: SUnitContext, solutions) -> FSConditionReport:
    if ctx.q_shape.is_totally_ramified and not ctx.inert:
        route = "ramified"
    elif ctx.inert:
        route = "inert"
    else:
        raise HypothesisError("2 must be inert or totally ramified")
    violations = []
    if route == "ramified":
        bound = 4 * ctx.ord_q_of_2
        for i, sol in enumerate(solutions):
            if sol.m > bound:
                violations.append((i, f"m = {sol.m} > {bound}"))
    else:
        if ctx.field.degree % 2 == 0:
            raise HypothesisError("inert route requires odd degree")
        bound = 4
        for i, sol in enumerate(solutions):
            if sol.m > bound:
                violations.append((i, f"m = {sol.m} > {bound}"))
            if (sol.v_lam + sol.v_mu) % 3 != 1:
                violations.append(
                    (i, f"ord_q(lam*mu) = {sol.v_lam + sol.v_mu} != 1 mod 3")
                )
    return FSConditionReport(route, bound, tuple(violations))


@dataclass(frozen=True)
class ValuationBoundReport:
    """Strict bound m < 2 ord_q(2) on every solution, plus flags for m = 0
    entries (those are unit-equation solutions, which contradict any
    no-unit-solutions certificate in force)."""

    bound: int
    violations: tuple[int, ...]
    unit_solution_flags: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def check_valbound_lemma(ctx: SUnitContext, solutions) -> ValuationBoundReport:
    bound = 2 * ctx.ord_q_of_2
    violations = tuple(i for i, sol in enumerate(solutions) if sol.m >= bound)
    flags = tuple(i for i, sol in enumerate(solutions) if sol.m == 0)
    return ValuationBoundReport(bound, violations, flags)
