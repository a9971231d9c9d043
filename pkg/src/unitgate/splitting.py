"""Splitting shapes of rational primes, read off the factorization of the
minimal polynomial mod p.  Reading the shape off that factorization is only
legitimate when the presentation order Z[t] is p-maximal, which the Dedekind
criterion decides; otherwise the shape is reported as indeterminate rather
than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactmath import IntPoly, ResiduePoly, factor_mod_p, is_prime
from .numberfield import NumberField

INERT = "inert"
TOTALLY_RAMIFIED = "totally_ramified"
TOTALLY_SPLIT = "totally_split"
OTHER = "other"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class SplittingShape:
    """Multiset of (ramification index, residue degree) for the primes above
    p, each with the generator polynomial of its residue extension.

    For a degree-1 field all of inert / totally ramified / totally split
    coincide; the structural predicates below are the reliable interface and
    the single classification tag is only a display summary.
    """

    p: int
    degree: int
    pairs: tuple[tuple[int, int, ResiduePoly], ...]
    classification: str
    p_maximal: bool

    @property
    def is_determinate(self) -> bool:
        return self.p_maximal

    @property
    def ef_sum(self) -> int:
        return sum(e * f for e, f, _ in self.pairs)

    @property
    def is_inert(self) -> bool:
        return self.p_maximal and len(self.pairs) == 1 and self.pairs[0][0] == 1

    @property
    def is_totally_ramified(self) -> bool:
        return self.p_maximal and len(self.pairs) == 1 and self.pairs[0][1] == 1

    @property
    def is_totally_split(self) -> bool:
        return (
            self.p_maximal
            and len(self.pairs) == self.degree
            and all(e == 1 and f == 1 for e, f, _ in self.pairs)
        )

    @property
    def is_unramified(self) -> bool:
        return self.p_maximal and all(e == 1 for e, f, _ in self.pairs)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "classification": self.classification,
            "p_maximal": self.p_maximal,
            "pairs": [[e, f] for e, f, _ in self.pairs],
        }


def _classify(pairs, n: int) -> str:
    if n == 1:
        return TOTALLY_SPLIT
    if len(pairs) == 1:
        e, f, _ = pairs[0]
        if e == n:
            return TOTALLY_RAMIFIED
        if f == n:
            return INERT
        return OTHER
    if len(pairs) == n and all(e == 1 and f == 1 for e, f, _ in pairs):
        return TOTALLY_SPLIT
    return OTHER


def eisenstein_at(f: IntPoly, p: int) -> bool:
    """Eisenstein criterion: p divides every non-leading coefficient and p^2
    does not divide the constant term.  Forces total ramification and
    p-maximality of Z[t]."""
    if not f.is_monic or f.degree < 1:
        return False
    if any(c % p for c in f.coeffs[:-1]):
        return False
    return f.constant % (p * p) != 0


def dedekind_p_maximal(f: IntPoly, p: int, seed: int | None = None) -> bool:
    """Dedekind criterion: with fbar = prod g_i^{e_i}, g = prod g_i and
    h = fbar/g lifted monically, Z[t] is p-maximal iff
    gcd((g*h - f)/p, g, h) = 1 over F_p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not f.is_monic or f.degree < 1:
        raise ValueError("Dedekind criterion needs a monic polynomial of degree >= 1")
    if eisenstein_at(f, p):
        return True
    fac = factor_mod_p(f, p, seed=seed)
    gbar = ResiduePoly(p, (1,))
    for g_i, _ in fac.factors:
        gbar = gbar * g_i
    fbar = f.reduce_mod(p)
    hbar = fbar // gbar
    g_lift = gbar.lift()
    h_lift = hbar.lift()
    diff = g_lift * h_lift - f
    t_coeffs = []
    for c in diff.coeffs:
        if c % p:
            raise ArithmeticError("lift product not congruent to f mod p")
        t_coeffs.append(c // p)
    tbar = IntPoly(tuple(t_coeffs)).reduce_mod(p)
    d = tbar.gcd(gbar.gcd(hbar))
    return d.degree == 0


def splitting_shape(field: NumberField, p: int, seed: int | None = None) -> SplittingShape:
    """Shape of p in the field: (e_i, f_i) pairs when Z[t] is p-maximal,
    indeterminate otherwise.  Results are memoized per field."""
    cache = field._shape_cache
    if p in cache:
        return cache[p]
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    f = field.minpoly
    n = field.degree
    if eisenstein_at(f, p):
        gen = ResiduePoly(p, (0, 1))
        pairs = ((n, 1, gen),)
        shape = SplittingShape(p, n, pairs, _classify(pairs, n), True)
    elif not dedekind_p_maximal(f, p, seed=seed):
        shape = SplittingShape(p, n, (), INDETERMINATE, False)
    else:
        fac = factor_mod_p(f, p, seed=seed)
        pairs = tuple(
            sorted(
                ((e, g.degree, g) for g, e in fac.factors),
                key=lambda t: (t[1], t[0], t[2].coeffs),
            )
        )
        shape = SplittingShape(p, n, pairs, _classify(pairs, n), True)
    cache[p] = shape
    return shape


def degree_one_residues(field: NumberField, p: int) -> tuple[int, ...]:
    """The residues a_i in [0, p) with t = a_i mod each degree-one prime
    above p: one per linear factor (x - a_i) of the minimal polynomial mod p.
    Reducing an element g(t) modulo that prime is evaluating g(a_i) mod p."""
    shape = splitting_shape(field, p)
    if not shape.p_maximal:
        raise ValueError(f"shape of {p} is indeterminate (Z[t] not {p}-maximal)")
    residues = []
    for e, f, gen in shape.pairs:
        if f == 1:
            # gen = x + c, root is -c mod p
            residues.append((-gen.coeffs[0]) % p)
    return tuple(sorted(residues))
