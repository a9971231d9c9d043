"""S-units at the unique prime above 2: valuations read off norms, the
m statistic, the normalization to integral solutions, and the bound checks.

Run:  python demos/05_sunit_valuations_and_normalization.py
"""

from fractions import Fraction

from unitgate import (
    NumberField,
    check_FS_conditions,
    check_valbound_lemma,
    is_S_unit,
    make_solution,
    ord_q,
    simplify_solution,
    sunit_context,
)

rationals = NumberField.from_minpoly([0, 1])
ctx = sunit_context(rationals)
print(f"Q: 2 has residue degree {ctx.f_q} and ord_q(2) = {ctx.ord_q_of_2}")

for value in (Fraction(1, 2), Fraction(2), Fraction(-8), Fraction(3)):
    elem = rationals.rational(value)
    if is_S_unit(ctx, elem):
        print(f"  {value}: S-unit with ord_q = {ord_q(ctx, elem)}")
    else:
        print(f"  {value}: not an S-unit")

# The three rational solutions of lam + mu = 1 in S-units, with m = 1 each.
sols = [make_solution(ctx, rationals.rational(v)) for v in (Fraction(1, 2), 2, -1)]
for sol in sols:
    print(f"  solution ({sol.lam}, {sol.mu}): profile {sol.profile()}, m = {sol.m}")

# Normalization: (1/2, 1/2) has both valuations negative and maps to the
# integral solution (2, -1); a positive-mu solution is swapped; integral
# solutions stay put.  m is preserved exactly in every case.
for sol in sols:
    out = simplify_solution(ctx, sol)
    print(f"  simplify ({sol.lam}, {sol.mu}) -> ({out.lam}, {out.mu}), m {sol.m} -> {out.m}")

# The bound checks the Fermat deduction needs: over Q the route is inert,
# m <= 4 holds and every ord_q(lam mu) is 1 mod 3.
fs = check_FS_conditions(ctx, sols)
vb = check_valbound_lemma(ctx, sols)
print(f"inert-route conditions: passed={fs.passed} (bound {fs.bound})")
print(f"strict bound m < {vb.bound}: passed={vb.passed}")

# In a field where 2 is totally ramified the thresholds scale with ord_q(2).
ram = NumberField.from_minpoly([6, -10, 0, 1])
rctx = sunit_context(ram)
print(f"\n{ram}: ord_q(2) = {rctx.ord_q_of_2}, "
      f"ramified-route threshold 4*ord = {4 * rctx.ord_q_of_2}, "
      f"strict bound 2*ord = {2 * rctx.ord_q_of_2}")
