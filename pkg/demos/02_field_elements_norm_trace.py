"""Number field elements: exact arithmetic, characteristic polynomials,
norms, traces, and the algebraic-integer test.

Run:  python demos/02_field_elements_norm_trace.py
"""

from fractions import Fraction

from unitgate import NumberField, char_poly, is_algebraic_integer, norm, trace

field = NumberField.from_minpoly([-3, 9, -6, 1])
print(f"F = {field}, degree {field.degree}, disc of presentation {field.disc_f}, "
      f"totally real: {field.totally_real}")

t = field.theta()
lam = 2 - t
mu = -1 + t
print(f"lam = {lam}, mu = {mu}, lam + mu = {lam + mu}")

cp = char_poly(lam)
print(f"charpoly(lam) coefficients (constant first): {[str(c) for c in cp.coeffs]}")
print(f"norm(lam) = {cp.norm}, trace(lam) = {cp.trace}")
print(f"norm(mu) = {norm(mu)} -> both components of the solution are units")

# Exact division works through the extended gcd with the minimal polynomial.
print(f"1/lam = {lam.inverse()}")
print(f"lam * (1/lam) = {lam * lam.inverse()}")

# The norm is multiplicative and the trace additive, exactly.
a = field.element([1, 2, -1])
b = field.element([0, 3, 1])
assert norm(a * b) == norm(a) * norm(b)
assert trace(a + b) == trace(a) + trace(b)
print(f"norm(a*b) = {norm(a * b)} = norm(a)*norm(b) = {norm(a)} * {norm(b)}")

# Integrality is read off the characteristic polynomial; (1+sqrt5)/2 is the
# classic element that is integral without living in Z[sqrt5].
golden = NumberField.from_minpoly([-5, 0, 1]).element([Fraction(1, 2), Fraction(1, 2)])
print(f"(1+sqrt5)/2 integral: {is_algebraic_integer(golden)}")
print(f"1/2 integral: {is_algebraic_integer(field.rational(Fraction(1, 2)))}")
