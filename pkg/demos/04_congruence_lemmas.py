"""The congruence checks behind the criteria: residues at a totally ramified
prime, the (x - b)^n characteristic-polynomial congruence, the norm
congruence, unit residues +-1, and the -1 mod 3 residue forcing at split 3.

Run:  python demos/04_congruence_lemmas.py
"""

from unitgate import (
    NumberField,
    check_3adic_lemma,
    check_charpoly_congruence,
    check_norm_congruence,
    mod9_norm_residue,
    residue_report,
    residue_totally_ramified,
    sunit_context,
    unit_residue_pm1,
)

cubic = NumberField.from_minpoly([-3, 9, -6, 1])
lam = 2 - cubic.theta()

# 3 is totally ramified, so the residue field at the prime above 3 is Z/3
# and every integral element is congruent to a rational integer b.
b = residue_totally_ramified(cubic, 3, lam)
print(f"lam = {lam} is congruent to b = {b} mod the prime above 3")

check = check_charpoly_congruence(cubic, 3, lam)
print(f"charpoly(lam) = (x - {check.b})^3 mod 3: {check.passed}")
print(f"norm(lam) = b^3 mod 3: {check_norm_congruence(cubic, 3, lam)}")
print(f"full report: {residue_report(cubic, 3, lam)}")

# Units at an odd totally ramified prime with gcd(n, (p-1)/2) = 1 must land
# on +-1 (any other residue is mathematically impossible and would raise).
eis5 = NumberField.from_minpoly([5, -10, 0, 1])
for elem in (eis5.one(), -eis5.one(), 2 * eis5.theta() - 1):
    print(f"unit {elem} is {unit_residue_pm1(eis5, 5, elem):+d} mod the prime above 5")

# At a split 3, any integral solution of lam + mu = 1 in S-units must be
# -1 mod every prime above 3 (residue 0 is barred by S-unit support, and the
# only sign pair summing to 1 mod 3 is (-1) + (-1)).
rationals = NumberField.from_minpoly([0, 1])
ctx = sunit_context(rationals)
print(f"(2, -1) over Q: {check_3adic_lemma(rationals, ctx, rationals.rational(2), rationals.rational(-1))}")

# The mod-9 expansion of the norm that powers the split-3 criterion:
# with n = 5 and Tr(phi) = 3, the norm residue is -1 mod 9.
print(f"mod-9 norm residue for n=5, Tr(phi)=3: {mod9_norm_residue(5, 3)} (= -1 mod 9)")
