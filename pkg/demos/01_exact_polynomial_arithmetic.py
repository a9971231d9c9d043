"""Exact integer polynomials: arithmetic, factorization over prime fields,
irreducibility certificates, and real-root counting.

Run:  python demos/01_exact_polynomial_arithmetic.py
"""

from unitgate import IntPoly, count_real_roots, factor_mod_p, is_irreducible_over_Q

f = IntPoly((-3, 9, -6, 1))  # x^3 - 6x^2 + 9x - 3, the running cubic example
print(f"f = {f}")
print(f"f squared = {f * f}")

q, r = divmod(IntPoly((1, -3, 0, 1)), IntPoly((-2, 1)))
print(f"(x^3 - 3x + 1) / (x - 2): quotient {q}, remainder {r}")

# Factorization over small prime fields.  Over F_3 the cubic collapses to a
# perfect cube, the first hint that 3 is totally ramified in its field.
for p in (2, 3, 5):
    fac = factor_mod_p(f, p)
    parts = " * ".join(
        f"({g.lift()})^{e}" if e > 1 else f"({g.lift()})" for g, e in fac.factors
    )
    print(f"f mod {p} = {parts}")

# Irreducibility over Q comes with a certificate naming the method.
for poly in (f, IntPoly((-1, 0, 1)), IntPoly((4, 0, 0, 0, 1))):
    rep = is_irreducible_over_Q(poly)
    extra = f", witness {rep.witness}" if rep.witness else ""
    print(f"{poly}: {rep.status} via {rep.method}{extra}")

# Sturm's theorem counts real roots exactly; all three roots of f are real,
# so its field is totally real.
for poly in (IntPoly((1, 0, 1)), IntPoly((-2, 0, 1)), f):
    print(f"{poly} has {count_real_roots(poly)} distinct real roots")
