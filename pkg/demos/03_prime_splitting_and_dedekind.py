"""How rational primes split: shapes read off the minimal polynomial mod p,
with the Dedekind criterion guarding the reading.

Run:  python demos/03_prime_splitting_and_dedekind.py
"""

from unitgate import (
    IntPoly,
    NumberField,
    dedekind_p_maximal,
    degree_one_residues,
    splitting_shape,
)

cubic = NumberField.from_minpoly([-3, 9, -6, 1])
print(f"F = {cubic}")
for p in (2, 3, 5, 7):
    shape = splitting_shape(cubic, p)
    print(f"  {p}: {shape.classification}, (e, f) pairs {[(e, f) for e, f, _ in shape.pairs]}")

# 3 is totally ramified: the unique prime above 3 has a single residue class
# per degree-one factor, here the triple root 0 of f mod 3.
print(f"degree-one residues of 3: {degree_one_residues(cubic, 3)}")

# x^3 - 10x + 6 shows full splitting at 3: f = x(x-1)(x+1) mod 3.
split3 = NumberField.from_minpoly([6, -10, 0, 1])
print(f"\nF = {split3}: 3 is {splitting_shape(split3, 3).classification}, "
      f"residues {degree_one_residues(split3, 3)}")

# The guard: when Z[t] is not p-maximal the shape is not read off at all.
# x^3 - x^2 - 2x - 8 is the classic field where 2 divides the index of every
# monogenic order, so the shape of 2 is reported indeterminate.
print(f"\nDedekind test for x^2 - 5 at 2: {dedekind_p_maximal(IntPoly((-5, 0, 1)), 2)}"
      "  (the ring of integers is Z[(1+sqrt5)/2])")
dedekind = NumberField.from_minpoly([-8, -2, -1, 1])
shape = splitting_shape(dedekind, 2)
print(f"x^3 - x^2 - 2x - 8 at 2: {shape.classification} (p-maximal: {shape.p_maximal})")
