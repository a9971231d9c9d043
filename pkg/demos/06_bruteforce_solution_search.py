"""The brute-force oracle: bounded-height enumeration of unit-equation and
S-unit-equation solutions, with the six-fold symmetry orbit structure.

Run:  python demos/06_bruteforce_solution_search.py   (about 10 s)
"""

from unitgate import (
    NumberField,
    SearchConfig,
    enumerate_sunit_solutions,
    enumerate_unit_solutions,
    sunit_context,
)

# Q: units are +-1, so the unit equation has no solutions at any height.
rationals = NumberField.from_minpoly([0, 1])
print(f"Q unit solutions at height 8: {len(enumerate_unit_solutions(rationals, SearchConfig(8)))}")

# The S-unit equation over Q has exactly three solutions.
ctx = sunit_context(rationals)
sols = enumerate_sunit_solutions(rationals, ctx, SearchConfig(4, denom_exp_max=3))
print("Q S-unit solutions:", [(str(s.lam), str(s.mu)) for s in sols.solutions])
print("  one orbit under the six symmetries:", sols.orbits)

# The field of cube roots of unity carries the classic unit solution
# ((1+sqrt-3)/2, (1-sqrt-3)/2) = (1 + t, -t).
omega = NumberField.from_minpoly([1, 1, 1])
sols = enumerate_unit_solutions(omega, SearchConfig(2))
print(f"\n{omega}: {[(str(s.lam), str(s.mu)) for s in sols.solutions]}")

# The cubic with 3 totally ramified has 18 unit solutions; their coordinates
# reach 91, so a height-100 box exhibits all of them, in 3 orbits of 6.
cubic = NumberField.from_minpoly([-3, 9, -6, 1])
sols = enumerate_unit_solutions(cubic, SearchConfig(100))
print(f"\n{cubic}: {len(sols.solutions)} unit solutions at height 100")
print(f"  orbit sizes: {[len(o) for o in sols.orbits]}")
print(f"  largest coordinate: "
      f"{max(abs(int(c)) for s in sols.solutions for c in s.lam.coords)}")
biggest = max(sols.solutions, key=lambda s: max(abs(int(c)) for c in s.lam.coords))
print(f"  extreme solution: lam = {biggest.lam}")
