"""The criteria layer: hypothesis traces, lemma-level certificates, replay,
and the certificate-vs-oracle cross-check that backs every yes verdict.

Run:  python demos/07_criteria_certificates_and_crosscheck.py
"""

from unitgate import (
    NumberField,
    SearchConfig,
    all_verdicts,
    check_t23ram,
    check_triantafillou,
    check_unitcrit,
    enumerate_unit_solutions,
    replay_certificate,
)

# A field certified to have no unit-equation solutions: x^3 - 10x + 5 is
# Eisenstein at 5 (totally ramified) and gcd(3, (5-1)/2) = 1.
field = NumberField.from_minpoly([5, -10, 0, 1])
verdict = check_unitcrit(field, 5)
print(f"{field}: no-unit-solutions criterion at 5 -> {verdict.holds}")
for check in verdict.hypothesis_trace:
    print(f"  [{check.status}] {check.name}: {check.detail}")
print("  certificate steps:")
for step in verdict.certificate.steps:
    print(f"    - {step.rule}: {step.statement}")
print(f"  replay against live machinery: {replay_certificate(field, verdict)}")
print(f"  oracle at height 10 finds "
      f"{len(enumerate_unit_solutions(field, SearchConfig(10)))} solutions")

# The split-3 criterion says no for the cubic where 3 ramifies (that field
# genuinely has 18 unit solutions), and yes for Q(sqrt 7).
cubic = NumberField.from_minpoly([-3, 9, -6, 1])
print(f"\n{cubic}: split-3 criterion -> {check_triantafillou(cubic).holds}"
      f" (3 is totally ramified there, and solutions exist)")
sqrt7 = NumberField.from_minpoly([-7, 0, 1])
v7 = check_triantafillou(sqrt7)
print(f"{sqrt7}: split-3 criterion -> {v7.holds}; "
      f"oracle finds {len(enumerate_unit_solutions(sqrt7, SearchConfig(10)))} solutions")

# An asymptotic-Fermat verdict with 2 totally ramified and 3 totally split.
t23 = NumberField.from_minpoly([6, -10, 0, 1])
v = check_t23ram(t23)
print(f"\n{t23}: ramified-2/split-3 Fermat criterion -> {v.holds}")
print(f"  conclusion: {v.conclusion}")

# All seven verdicts for one field in a single call.
print(f"\nall verdicts for {t23}:")
for v in all_verdicts(t23, 5):
    tag = f" (conditional on: {', '.join(v.conditional_on)})" if v.conditional_on else ""
    print(f"  {v.theorem_id}: {v.holds}{tag}")
