"""Brute-force bounded-height enumeration of unit-equation and
S-unit-equation solutions over the presentation order: the independent
oracle that every certificate is cross-checked against.

The hot path avoids building field elements: for fixed higher coordinates
(c1..c_{n-1}) with R = sum c_i P_i, the norm of c0 + c1 t + ... is
q(c0) where q(x) = det(xI + R), and the norm of 1 - lam (or 2^k - lam up to
the 2-power denominator) is (-1)^n q(c0 - 2^k).  One interpolated integer
polynomial per outer tuple then answers every inner candidate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import HypothesisError
from .exactmath import bareiss_det, interpolate_int_poly
from .numberfield import FieldElement, NumberField
from .sunit import SUnitContext, SUnitSolution, make_solution


@dataclass(frozen=True)
class SearchConfig:
    """height bounds the absolute value of integral coordinates;
    denom_exp_max bounds k in lam = w / 2^k (None picks 4*ord_q(2) + 1, one
    beyond the Fermat-deduction threshold so violations stay visible)."""

    height: int
    denom_exp_max: int | None = None
    report_orbits: bool = True

    def __post_init__(self):
        if self.height < 1:
            raise ValueError("height must be >= 1")
        if self.denom_exp_max is not None and self.denom_exp_max < 0:
            raise ValueError("denom_exp_max must be >= 0")


@dataclass(frozen=True)
class SolutionSet:
    solutions: tuple[SUnitSolution, ...]
    orbits: tuple[tuple[int, ...], ...] | None = None

    def __len__(self) -> int:
        return len(self.solutions)

    def lam_coords(self) -> set[tuple[Fraction, ...]]:
        return {sol.lam.coords for sol in self.solutions}

    def to_json(self) -> dict:
        out = {"count": len(self.solutions), "solutions": [s.to_json() for s in self.solutions]}
        if self.orbits is not None:
            out["orbits"] = [list(o) for o in self.orbits]
        return out


def _norm_form(field: NumberField, outer: tuple[int, ...]) -> tuple[int, ...]:
    """Integer coefficients of q(x) = det(xI + R), R = sum outer[i-1] P_i."""
    n = field.degree
    mats = field._mult_mats
    r = [[0] * n for _ in range(n)]
    for idx, w in enumerate(outer, start=1):
        if w:
            mat = mats[idx]
            for i in range(n):
                row = mat[i]
                ri = r[i]
                for j in range(n):
                    ri[j] += w * row[j]
    values = []
    for t in range(n + 1):
        m = [[(t if i == j else 0) + r[i][j] for j in range(n)] for i in range(n)]
        values.append(bareiss_det(m))
    return interpolate_int_poly(values)


def _eval_int(coeffs: tuple[int, ...], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _is_pow2(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def _sorted_set(field: NumberField, sols: list[SUnitSolution], report_orbits: bool) -> SolutionSet:
    sols.sort(key=lambda s: s.lam.coords)
    sset = SolutionSet(tuple(sols))
    if report_orbits:
        sset = SolutionSet(sset.solutions, orbit_partition(sset))
    return sset


def enumerate_unit_solutions(field: NumberField, cfg: SearchConfig) -> SolutionSet:
    """All lam in Z[t] with coordinates bounded by the height such that lam
    and mu = 1 - lam both have norm +-1; deterministic lexicographic order."""
    h = cfg.height
    n = field.degree
    sign = (-1) ** n
    found: list[SUnitSolution] = []
    rng = range(-h, h + 1)
    for outer in product(rng, repeat=n - 1):
        q = _norm_form(field, outer)
        vals = [_eval_int(q, t) for t in range(-h - 1, h + 1)]
        off = h + 1
        for c0 in rng:
            if abs(vals[c0 + off]) == 1 and abs(sign * vals[c0 - 1 + off]) == 1:
                lam = field.element((c0,) + outer)
                found.append(make_solution(None, lam))
    return _sorted_set(field, found, cfg.report_orbits)


def enumerate_sunit_solutions(
    field: NumberField, ctx: SUnitContext, cfg: SearchConfig
) -> SolutionSet:
    """All lam = w / 2^k with integral w of bounded height and 0 <= k <=
    denom_exp_max such that lam and 1 - lam are S-units.  Candidates are
    enumerated with k minimal (w not all even when k > 0), so each solution
    appears once."""
    if ctx.field != field:
        raise HypothesisError("context belongs to a different field")
    h = cfg.height
    n = field.degree
    kmax = cfg.denom_exp_max
    if kmax is None:
        kmax = 4 * ctx.ord_q_of_2 + 1
    sign = (-1) ** n
    found: list[SUnitSolution] = []
    rng = range(-h, h + 1)
    for outer in product(rng, repeat=n - 1):
        q = _norm_form(field, outer)
        outer_all_even = all(c % 2 == 0 for c in outer)
        memo: dict[int, int] = {}

        def qat(x: int) -> int:
            v = memo.get(x)
            if v is None:
                v = _eval_int(q, x)
                memo[x] = v
            return v

        for c0 in rng:
            n_lam = qat(c0)
            if n_lam == 0:
                continue
            if not _is_pow2(abs(n_lam)):
                continue
            for k in range(kmax + 1):
                if k > 0 and outer_all_even and c0 % 2 == 0:
                    continue  # non-minimal representation of w' = w/2, k' = k-1
                n_mu = sign * qat(c0 - (1 << k))
                if n_mu == 0 or not _is_pow2(abs(n_mu)):
                    continue
                denom = Fraction(1, 1 << k)
                lam = field.element(tuple(c * denom for c in (c0,) + outer))
                found.append(make_solution(ctx, lam))
    return _sorted_set(field, found, cfg.report_orbits)


def symmetry_images(lam: FieldElement, mu: FieldElement) -> list[tuple[FieldElement, FieldElement]]:
    """The six transforms of the solution symmetry group (isomorphic to S3):
    (lam, mu), (mu, lam), (1/lam, -mu/lam), (-mu/lam, 1/lam),
    (1/mu, -lam/mu), (-lam/mu, 1/mu)."""
    a = 1 / lam
    b = -mu / lam
    c = 1 / mu
    d = -lam / mu
    return [(lam, mu), (mu, lam), (a, b), (b, a), (c, d), (d, c)]


def orbit_partition(sols: SolutionSet) -> tuple[tuple[int, ...], ...]:
    """Group solutions into orbits under the six symmetries; only images
    present in the set are connected, so sizes divide 6 whenever the set is
    closed under the action (true once the height captures the full orbit)."""
    index = {sol.lam.coords: i for i, sol in enumerate(sols.solutions)}
    parent = list(range(len(sols.solutions)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    for i, sol in enumerate(sols.solutions):
        for im_lam, _ in symmetry_images(sol.lam, sol.mu):
            j = index.get(im_lam.coords)
            if j is not None:
                union(i, j)
    groups: dict[int, list[int]] = {}
    for i in range(len(sols.solutions)):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(sorted(g)) for _, g in sorted(groups.items()))


def within_bounds(field: NumberField, elem: FieldElement, cfg: SearchConfig, kmax: int) -> bool:
    """Whether an element is representable inside the search box: written
    w / 2^k with k minimal, k <= kmax and all |w_i| <= height."""
    denoms = [c.denominator for c in elem.coords]
    if any(d & (d - 1) for d in denoms):
        return False
    k = max(d.bit_length() - 1 for d in denoms)
    if k > kmax:
        return False
    scale = 1 << k
    return all(abs(c * scale) <= cfg.height for c in elem.coords)
