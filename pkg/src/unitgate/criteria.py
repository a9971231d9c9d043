"""Hypothesis checkers and certificate builders for the local criteria.

Each checker evaluates every hypothesis (no short-circuit, so the trace is
complete), returns yes only when all pass, and returns indeterminate whenever
a needed splitting shape is indeterminate: the criteria are statements about
the field, while a non-maximal presentation only obscures the shape, it never
refutes anything.  Yes-verdicts carry a certificate whose steps replay
against the residue/valuation machinery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import HypothesisError
from .numberfield import NumberField
from .residues import residue_pairs_summing_to_one
from .splitting import (
    INDETERMINATE,
    INERT,
    TOTALLY_RAMIFIED,
    TOTALLY_SPLIT,
    SplittingShape,
    degree_one_residues,
    splitting_shape,
)

YES = "yes"
NO = "no"
IND = "indeterminate"

THEOREM_IDS = (
    "pram",
    "t23",
    "t23ram",
    "unitcrit",
    "triantafillou",
    "pram_conditional",
    "t23ram_conditional",
)

# Content-descriptive labels for the two standard Langlands-programme
# assumptions the section-7 variants are conditional on: a weak Serre-type
# modularity conjecture for mod-l Galois representations, and the statement
# that weight-2 newforms with integer Hecke eigenvalues over F come from
# elliptic curves or fake elliptic curves.
CONDITIONAL_ASSUMPTIONS = (
    "conjecture:mod-l-serre-modularity-over-F",
    "conjecture:weight2-newforms-elliptic-or-fake",
)

NO_UNIT_SOLUTIONS = "the unit equation lam + mu = 1 has no solutions in units of O_F"
ASYMPTOTIC_FLT = "the asymptotic Fermat's Last Theorem holds over F"


@dataclass(frozen=True)
class HypothesisCheck:
    name: str
    status: str  # "pass" | "fail" | "indeterminate"
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass(frozen=True)
class CertificateStep:
    rule: str
    statement: str
    data: dict

    def to_json(self) -> dict:
        return {"rule": self.rule, "statement": self.statement, "data": self.data}


@dataclass(frozen=True)
class Certificate:
    steps: tuple[CertificateStep, ...]
    conclusion: str

    def to_json(self) -> dict:
        return {"steps": [s.to_json() for s in self.steps], "conclusion": self.conclusion}


@dataclass(frozen=True)
class Verdict:
    theorem_id: str
    holds: str  # "yes" | "no" | "indeterminate"
    hypothesis_trace: tuple[HypothesisCheck, ...]
    conclusion: str
    p: int | None = None
    conditional_on: tuple[str, ...] = ()
    certificate: Certificate | None = None

    def to_json(self) -> dict:
        out = {
            "theorem": self.theorem_id,
            "holds": self.holds,
            "hypotheses": [h.to_json() for h in self.hypothesis_trace],
            "conclusion": self.conclusion,
            "conditional_on": list(self.conditional_on),
        }
        if self.p is not None:
            out["p"] = self.p
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


def _resolve(checks: list[HypothesisCheck]) -> str:
    if any(c.status == IND for c in checks):
        return IND
    if all(c.status == "pass" for c in checks):
        return YES
    return NO


def _shape_check(field: NumberField, p: int, want: str) -> tuple[HypothesisCheck, SplittingShape]:
    shape = splitting_shape(field, p)
    detail = f"{p} has shape {shape.classification} (pairs {[(e, f) for e, f, _ in shape.pairs]})"
    if not shape.p_maximal:
        status = IND
        detail = f"Z[t] is not {p}-maximal; shape of {p} not verifiable for this presentation"
    elif want == TOTALLY_RAMIFIED:
        status = "pass" if shape.is_totally_ramified else "fail"
    elif want == TOTALLY_SPLIT:
        status = "pass" if shape.is_totally_split else "fail"
    elif want == INERT:
        status = "pass" if shape.is_inert else "fail"
    elif want == "inert_or_totally_ramified":
        status = "pass" if (shape.is_inert or shape.is_totally_ramified) else "fail"
    else:
        raise ValueError(f"unknown wanted shape {want}")
    return HypothesisCheck(f"{p} is {want.replace('_', ' ')}", status, detail), shape


def _totally_real_check(field: NumberField) -> HypothesisCheck:
    status = "pass" if field.totally_real else "fail"
    return HypothesisCheck(
        "F is totally real",
        status,
        f"minimal polynomial has {'all' if field.totally_real else 'not all'} real roots"
        f" (disc of the presentation: {field.disc_f})",
    )


def _gcd_check(n: int, modulus: int, label: str) -> HypothesisCheck:
    g = math.gcd(n, modulus)
    return HypothesisCheck(
        f"gcd(n, {label}) = 1",
        "pass" if g == 1 else "fail",
        f"gcd({n}, {modulus}) = {g}",
    )


def _bezout(n: int, m: int) -> tuple[int, int]:
    """u, v with u*n + v*m = gcd(n, m)."""
    old_r, r = n, m
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_u, u = u, old_u - qt * u
        old_v, v = v, old_v - qt * v
    return old_u, old_v


def _splitting_step(p: int, shape: SplittingShape, role: str) -> CertificateStep:
    return CertificateStep(
        "splitting-shape",
        f"{p} has splitting shape {shape.classification} with p-maximal Z[t]",
        {
            "p": p,
            "classification": shape.classification,
            "pairs": [[e, f] for e, f, _ in shape.pairs],
            "role": role,
        },
    )


def _unit_residue_steps(n: int, p: int) -> list[CertificateStep]:
    """The residues-at-a-ramified-prime argument: units land in +-1 mod the
    ramified prime, and +-1 +-1 never sums to 1 mod p for p >= 5."""
    half = (p - 1) // 2
    u, v = _bezout(n, half)
    steps = [
        CertificateStep(
            "degree-coprime",
            f"gcd(n, (p-1)/2) = 1 with Bezout witness {u}*{n} + {v}*{half} = 1",
            {"n": n, "modulus": half, "u": u, "v": v},
        ),
        CertificateStep(
            "unit-residues-pm1",
            "every unit is congruent to +1 or -1 modulo the ramified prime",
            {"p": p, "n": n},
        ),
        CertificateStep(
            "residue-sum-obstruction",
            f"no signs s, t in {{+1, -1}} satisfy s + t = 1 mod {p}",
            {"p": p, "solutions": [list(st) for st in residue_pairs_summing_to_one(p)]},
        ),
    ]
    return steps


def _three_adic_step(field: NumberField) -> CertificateStep:
    return CertificateStep(
        "three-adic-residues",
        "any integral solution satisfies lam = mu = -1 at every degree-one residue of 3",
        {
            "residues": list(degree_one_residues(field, 3)),
            "forced_pair": [-1, -1],
            "admissible_pairs": [list(st) for st in residue_pairs_summing_to_one(3)],
        },
    )


def _trace_contradiction_step(n: int) -> CertificateStep:
    # only valid when 3 does not divide n
    return CertificateStep(
        "trace-contradiction",
        "writing lam = -1 + 3 phi, the norm expansion mod 9 forces "
        "Tr(phi) = Tr(psi) = 0 mod 3, so n = Tr(phi + psi) = 0 mod 3",
        {"n": n, "n_mod_3": n % 3},
    )


def _norm_sign_clash_step(n: int) -> CertificateStep:
    return CertificateStep(
        "norm-sign-clash",
        "a solution with m >= 2 ord_q(2) normalizes to mu' = 1 mod 4, giving "
        "Norm(mu') = 1, while the residue argument gives Norm(mu') = (-1)^n = -1",
        {"n": n, "n_odd": n % 2 == 1},
    )


def _valuation_bound_step(ord2: int) -> CertificateStep:
    return CertificateStep(
        "valuation-bound",
        f"every S-unit solution satisfies m < 2 ord_q(2) = {2 * ord2}",
        {"ord_q_of_2": ord2, "strict_bound": 2 * ord2},
    )


def _profile_step() -> CertificateStep:
    return CertificateStep(
        "solution-profiles",
        "with 2 inert every solution has valuation profile (-1,-1), (0,1) or "
        "(1,0); all satisfy m <= 4 and ord_q(lam mu) = 1 mod 3",
        {"profiles": [[-1, -1], [0, 1], [1, 0]], "m_bound": 4, "sum_mod_3": 1},
    )


def _flt_step(route: str, ord2: int, conditional: bool) -> CertificateStep:
    bound = 4 * ord2 if route == "ramified" else 4
    return CertificateStep(
        "flt-deduction",
        "S-unit solution bounds feed the modularity-based Fermat criterion "
        "(black-box deduction rule)" + (" under the stated conjectures" if conditional else ""),
        {"route": route, "max_bound": bound, "conditional": conditional},
    )


def check_unitcrit(field: NumberField, p: int) -> Verdict:
    """No unit-equation solutions when gcd(n, (p-1)/2) = 1 and p >= 5 is
    totally ramified."""
    if p < 5:
        raise ValueError(
            f"p = {p} rejected: the unit criterion requires p >= 5 (for p = 3 it fails, "
            "e.g. the field of cube roots of unity has the unit solution "
            "((1+sqrt(-3))/2, (1-sqrt(-3))/2))"
        )
    n = field.degree
    checks = [_gcd_check(n, (p - 1) // 2, f"({p}-1)/2")]
    shape_check, shape = _shape_check(field, p, TOTALLY_RAMIFIED)
    checks.append(shape_check)
    holds = _resolve(checks)
    cert = None
    if holds == YES:
        steps = [_splitting_step(p, shape, "ramified prime")] + _unit_residue_steps(n, p)
        cert = Certificate(tuple(steps), NO_UNIT_SOLUTIONS)
    return Verdict("unitcrit", holds, tuple(checks), NO_UNIT_SOLUTIONS, p=p, certificate=cert)


def check_triantafillou(field: NumberField) -> Verdict:
    """No unit-equation solutions when 3 does not divide n and 3 splits
    completely (Triantafillou's criterion)."""
    n = field.degree
    checks = [
        HypothesisCheck(
            "3 does not divide n",
            "pass" if n % 3 else "fail",
            f"n = {n}, n mod 3 = {n % 3}",
        )
    ]
    shape_check, shape = _shape_check(field, 3, TOTALLY_SPLIT)
    checks.append(shape_check)
    holds = _resolve(checks)
    cert = None
    if holds == YES:
        steps = [
            _splitting_step(3, shape, "split prime"),
            _three_adic_step(field),
            _trace_contradiction_step(n),
        ]
        cert = Certificate(tuple(steps), NO_UNIT_SOLUTIONS)
    return Verdict("triantafillou", holds, tuple(checks), NO_UNIT_SOLUTIONS, certificate=cert)


def check_pram(field: NumberField, p: int) -> Verdict:
    """Asymptotic-Fermat criterion: F totally real, gcd(n, p-1) = 1, 2 inert
    or totally ramified, p >= 5 totally ramified."""
    if p < 5:
        raise ValueError(f"p = {p} rejected: criterion requires a prime p >= 5")
    n = field.degree
    checks = [_totally_real_check(field), _gcd_check(n, p - 1, f"{p}-1")]
    two_check, two_shape = _shape_check(field, 2, "inert_or_totally_ramified")
    checks.append(two_check)
    p_check, p_shape = _shape_check(field, p, TOTALLY_RAMIFIED)
    checks.append(p_check)
    holds = _resolve(checks)
    cert = None
    if holds == YES:
        ord2 = two_shape.pairs[0][0]
        route = "ramified" if (two_shape.is_totally_ramified and not two_shape.is_inert) else "inert"
        u, v = _bezout(n, p - 1)
        steps = [
            _splitting_step(2, two_shape, "prime above 2"),
            _splitting_step(p, p_shape, "ramified prime"),
            CertificateStep(
                "degree-coprime",
                f"gcd(n, p-1) = 1 with Bezout witness {u}*{n} + {v}*{p - 1} = 1; "
                "in particular n is odd and gcd(n, (p-1)/2) = 1",
                {"n": n, "modulus": p - 1, "u": u, "v": v},
            ),
        ]
        steps += _unit_residue_steps(n, p)
        steps.append(_valuation_bound_step(ord2))
        if route == "inert":
            steps.append(_profile_step())
        steps.append(_flt_step(route, ord2, conditional=False))
        cert = Certificate(tuple(steps), ASYMPTOTIC_FLT)
    return Verdict("pram", holds, tuple(checks), ASYMPTOTIC_FLT, p=p, certificate=cert)


def check_t23(field: NumberField) -> Verdict:
    """Asymptotic-Fermat criterion: F totally real, n = 1 or 5 mod 6, 2
    inert, 3 totally split."""
    n = field.degree
    checks = [
        _totally_real_check(field),
        HypothesisCheck(
            "n = 1 or 5 mod 6",
            "pass" if n % 6 in (1, 5) else "fail",
            f"n = {n}, n mod 6 = {n % 6}",
        ),
    ]
    two_check, two_shape = _shape_check(field, 2, INERT)
    checks.append(two_check)
    three_check, three_shape = _shape_check(field, 3, TOTALLY_SPLIT)
    checks.append(three_check)
    holds = _resolve(checks)
    cert = None
    if holds == YES:
        steps = [
            _splitting_step(2, two_shape, "prime above 2"),
            _splitting_step(3, three_shape, "split prime"),
        ]
        steps.append(_three_adic_step(field))
        steps.append(_trace_contradiction_step(n))
        steps.append(_norm_sign_clash_step(n))
        steps.append(_profile_step())
        steps.append(_flt_step("inert", 1, conditional=False))
        cert = Certificate(tuple(steps), ASYMPTOTIC_FLT)
    return Verdict("t23", holds, tuple(checks), ASYMPTOTIC_FLT, certificate=cert)


def check_t23ram(field: NumberField) -> Verdict:
    """Asymptotic-Fermat criterion: F totally real, n odd, 2 totally
    ramified, 3 totally split."""
    n = field.degree
    checks = [
        _totally_real_check(field),
        HypothesisCheck("n is odd", "pass" if n % 2 else "fail", f"n = {n}"),
    ]
    two_check, two_shape = _shape_check(field, 2, TOTALLY_RAMIFIED)
    checks.append(two_check)
    three_check, three_shape = _shape_check(field, 3, TOTALLY_SPLIT)
    checks.append(three_check)
    holds = _resolve(checks)
    cert = None
    if holds == YES:
        ord2 = two_shape.pairs[0][0]
        steps = [
            _splitting_step(2, two_shape, "prime above 2"),
            _splitting_step(3, three_shape, "split prime"),
        ]
        steps.append(_three_adic_step(field))
        steps.append(_norm_sign_clash_step(n))
        steps.append(_valuation_bound_step(ord2))
        steps.append(_flt_step("ramified", ord2, conditional=False))
        cert = Certificate(tuple(steps), ASYMPTOTIC_FLT)
    return Verdict("t23ram", holds, tuple(checks), ASYMPTOTIC_FLT, certificate=cert)


def check_conditional(field: NumberField, variant: str, p: int | None = None) -> Verdict:
    """Variants of the ramified criteria for arbitrary (not necessarily
    totally real) fields, conditional on the two Langlands-programme
    conjectures; 2 must be totally ramified (inert is not allowed here)."""
    if variant not in ("pram_conditional", "t23ram_conditional"):
        raise ValueError(f"unknown variant {variant}")
    n = field.degree
    checks: list[HypothesisCheck] = []
    if variant == "pram_conditional":
        if p is None or p < 5:
            raise ValueError("pram_conditional requires a prime p >= 5")
        checks.append(_gcd_check(n, p - 1, f"{p}-1"))
    else:
        checks.append(HypothesisCheck("n is odd", "pass" if n % 2 else "fail", f"n = {n}"))
    two_check, two_shape = _shape_check(field, 2, TOTALLY_RAMIFIED)
    checks.append(two_check)
    if variant == "pram_conditional":
        p_check, p_shape = _shape_check(field, p, TOTALLY_RAMIFIED)
        checks.append(p_check)
    else:
        three_check, three_shape = _shape_check(field, 3, TOTALLY_SPLIT)
        checks.append(three_check)
    holds = _resolve(checks)
    cert = None
    if holds == YES:
        ord2 = two_shape.pairs[0][0]
        steps = [_splitting_step(2, two_shape, "prime above 2")]
        if variant == "pram_conditional":
            steps.append(_splitting_step(p, p_shape, "ramified prime"))
            steps += _unit_residue_steps(n, p)
        else:
            steps.append(_splitting_step(3, three_shape, "split prime"))
            steps.append(_three_adic_step(field))
            steps.append(_norm_sign_clash_step(n))
        steps.append(_valuation_bound_step(ord2))
        steps.append(_flt_step("ramified", ord2, conditional=True))
        cert = Certificate(tuple(steps), ASYMPTOTIC_FLT + " (conditional)")
    return Verdict(
        variant,
        holds,
        tuple(checks),
        ASYMPTOTIC_FLT + " (conditional)",
        p=p,
        conditional_on=CONDITIONAL_ASSUMPTIONS,
    certificate=cert,
    )


def all_verdicts(field: NumberField, p: int = 5) -> tuple[Verdict, ...]:
    """All seven verdicts for one field (the three unconditional Fermat
    criteria, the two unit-equation criteria, and the two conditional
    variants), using p for the p-dependent ones."""
    return (
        check_pram(field, p),
        check_t23(field),
        check_t23ram(field),
        check_unitcrit(field, p),
        check_triantafillou(field),
        check_conditional(field, "pram_conditional", p),
        check_conditional(field, "t23ram_conditional"),
    )


# ---------------------------------------------------------------------------
# certificate replay


def replay_certificate(field: NumberField, verdict: Verdict) -> bool:
    """Re-execute every certificate step against the live machinery and
    confirm the recorded data; True only if all steps replay."""
    cert = verdict.certificate
    if cert is None:
        return False
    for step in cert.steps:
        data = step.data
        rule = step.rule
        if rule == "splitting-shape":
            shape = splitting_shape(field, data["p"])
            if not shape.p_maximal:
                return False
            if shape.classification != data["classification"]:
                return False
            if [[e, f] for e, f, _ in shape.pairs] != data["pairs"]:
                return False
        elif rule == "degree-coprime":
            if data["u"] * data["n"] + data["v"] * data["modulus"] != 1:
                return False
            if math.gcd(data["n"], data["modulus"]) != 1:
                return False
        elif rule == "unit-residues-pm1":
            if math.gcd(field.degree, (data["p"] - 1) // 2) != 1:
                return False
            if not splitting_shape(field, data["p"]).is_totally_ramified:
                return False
        elif rule == "residue-sum-obstruction":
            pairs = [list(st) for st in residue_pairs_summing_to_one(data["p"])]
            if pairs != data["solutions"] or pairs:
                return False
        elif rule == "three-adic-residues":
            if list(degree_one_residues(field, 3)) != data["residues"]:
                return False
            admissible = residue_pairs_summing_to_one(3)
            if admissible != ((-1, -1),):
                return False
        elif rule == "trace-contradiction":
            if data["n"] % 3 == 0 or data["n"] % 3 != data["n_mod_3"]:
                return False
        elif rule == "norm-sign-clash":
            if data["n"] % 2 == 0 or not data["n_odd"]:
                return False
        elif rule == "valuation-bound":
            shape = splitting_shape(field, 2)
            if not shape.is_totally_ramified and not shape.is_inert:
                return False
            if shape.pairs[0][0] != data["ord_q_of_2"]:
                return False
            if data["strict_bound"] != 2 * data["ord_q_of_2"]:
                return False
        elif rule == "solution-profiles":
            if data["profiles"] != [[-1, -1], [0, 1], [1, 0]]:
                return False
            if any((a + b) % 3 != data["sum_mod_3"] for a, b in data["profiles"]):
                return False
        elif rule == "flt-deduction":
            if data["route"] not in ("ramified", "inert"):
                return False
        else:
            return False
    return True


def verify_solutions_against_certificate(verdict: Verdict, solutions) -> list[str]:
    """Cross-check enumerated solutions against the bounds a certificate
    promises; returns human-readable violation strings (the critical alarm
    when non-empty)."""
    problems = []
    if verdict.holds != YES or verdict.certificate is None:
        return problems
    if verdict.theorem_id in ("unitcrit", "triantafillou"):
        for i, sol in enumerate(solutions):
            problems.append(
                f"{verdict.theorem_id}: certificate says no unit solutions, oracle found #{i}"
            )
        return problems
    for step in verdict.certificate.steps:
        if step.rule == "valuation-bound":
            bound = step.data["strict_bound"]
            for i, sol in enumerate(solutions):
                if sol.m >= bound:
                    problems.append(
                        f"{verdict.theorem_id}: solution #{i} has m = {sol.m} >= {bound}"
                    )
        if step.rule == "solution-profiles":
            allowed = {tuple(pr) for pr in step.data["profiles"]}
            for i, sol in enumerate(solutions):
                if sol.profile() not in allowed:
                    problems.append(
                        f"{verdict.theorem_id}: solution #{i} has profile {sol.profile()}"
                    )
        if step.rule == "flt-deduction":
            bound = step.data["max_bound"]
            for i, sol in enumerate(solutions):
                if sol.m > bound:
                    problems.append(
                        f"{verdict.theorem_id}: solution #{i} breaks the deduction bound "
                        f"m = {sol.m} > {bound}"
                    )
    return problems
