"""Number fields Q[x]/(f) for monic irreducible f, with exact element
arithmetic, characteristic polynomials, norms and traces.

Elements are stored by their coordinates over the power basis 1, t, ..,
t^(n-1) of the presentation order Z[t] and its fraction field.  The maximal
order is never computed; where a statement needs it, callers verify
p-maximality through the splitting module first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .exactmath import (
    IntPoly,
    IrreducibilityReport,
    bareiss_det,
    count_real_roots,
    interpolate_int_poly,
    is_irreducible_over_Q,
    qpoly_ext_gcd,
)


@dataclass(frozen=True)
class NumberField:
    """A field Q[x]/(minpoly) with minpoly monic and certified irreducible."""

    minpoly: IntPoly
    degree: int
    disc_f: int
    totally_real: bool

    @classmethod
    def from_minpoly(cls, poly) -> "NumberField":
        f = poly if isinstance(poly, IntPoly) else IntPoly.from_coeffs(poly)
        if f.degree < 1:
            raise ValueError("defining polynomial must have degree >= 1")
        if not f.is_monic:
            raise ValueError("defining polynomial must be monic")
        report: IrreducibilityReport = is_irreducible_over_Q(f)
        if report.status == "certified_reducible":
            raise ValueError(f"reducible polynomial: {f} has factor {report.witness}")
        if report.status != "certified_irreducible":
            raise ValueError(f"irreducibility of {f} could not be certified ({report.method})")
        n = f.degree
        disc = f.discriminant()
        treal = count_real_roots(f) == n
        return cls(f, n, disc, treal)

    # -- cached structure ----------------------------------------------------

    @cached_property
    def _power_table(self) -> tuple[tuple[int, ...], ...]:
        """Coordinates of t^k for k = 0 .. 2n-2 (minpoly is monic, so these
        stay integral)."""
        n = self.degree
        f = self.minpoly.coeffs
        table = []
        for k in range(n):
            table.append(tuple(1 if i == k else 0 for i in range(n)))
        for k in range(n, 2 * n - 1):
            prev = table[k - 1]
            shifted = [0] + list(prev)
            carry = shifted.pop()
            if carry:
                for i in range(n):
                    shifted[i] -= carry * f[i]
            table.append(tuple(shifted))
        return tuple(table)

    @cached_property
    def _mult_mats(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """P_i with column c equal to the coordinates of t^(i+c); the
        multiplication matrix of sum(w_i t^i) is sum(w_i P_i)."""
        n = self.degree
        table = self._power_table
        mats = []
        for i in range(n):
            mats.append(tuple(tuple(table[i + c][r] for c in range(n)) for r in range(n)))
        return tuple(mats)

    @cached_property
    def _shape_cache(self) -> dict:
        # per-prime splitting results, filled by the splitting module
        return {}

    # -- element constructors --------------------------------------------------

    def element(self, coords: Iterable) -> "FieldElement":
        cs = tuple(Fraction(c) for c in coords)
        if len(cs) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(cs)}")
        return FieldElement(self, cs)

    def rational(self, value) -> "FieldElement":
        return self.element([Fraction(value)] + [Fraction(0)] * (self.degree - 1))

    def zero(self) -> "FieldElement":
        return self.rational(0)

    def one(self) -> "FieldElement":
        return self.rational(1)

    def theta(self) -> "FieldElement":
        """The distinguished root of the defining polynomial."""
        if self.degree == 1:
            return self.rational(-self.minpoly.constant)
        return self.element([0, 1] + [0] * (self.degree - 2))

    # -- exact multiplication/charpoly kernels ---------------------------------

    def reduce_power_coords(self, conv: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Reduce coordinates in powers t^0..t^(2n-2) to the power basis."""
        n = self.degree
        table = self._power_table
        out = [Fraction(c) for c in conv[:n]] + [Fraction(0)] * max(0, n - len(conv))
        for k in range(n, len(conv)):
            c = conv[k]
            if c:
                row = table[k]
                for r in range(n):
                    if row[r]:
                        out[r] += c * row[r]
        return tuple(out)

    def mult_matrix_int(self, coords: Sequence[int]) -> list[list[int]]:
        n = self.degree
        mats = self._mult_mats
        out = [[0] * n for _ in range(n)]
        for i, w in enumerate(coords):
            if w:
                mat = mats[i]
                for r in range(n):
                    row = mat[r]
                    orow = out[r]
                    for c in range(n):
                        orow[c] += w * row[c]
        return out

    def charpoly_int_coords(self, coords: Sequence[int]) -> tuple[int, ...]:
        """Characteristic polynomial (little-endian, monic) of the
        multiplication map of an element with integer coordinates, via exact
        determinants of xI - M at x = 0..n and interpolation."""
        n = self.degree
        m = self.mult_matrix_int(coords)
        values = []
        for t in range(n + 1):
            shifted = [
                [(t if r == c else 0) - m[r][c] for c in range(n)] for r in range(n)
            ]
            values.append(bareiss_det(shifted))
        chi = interpolate_int_poly(values)
        if chi[-1] != 1:
            raise ArithmeticError("characteristic polynomial not monic")
        return chi

    def norm_int_coords(self, coords: Sequence[int]) -> int:
        return bareiss_det(self.mult_matrix_int(coords))

    def __str__(self) -> str:
        return f"Q[x]/({self.minpoly})"


@dataclass(frozen=True)
class FieldElement:
    """c0 + c1 t + ... + c_{n-1} t^{n-1} with exact rational coordinates."""

    field: NumberField
    coords: tuple[Fraction, ...]

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("element is not rational")
        return self.coords[0]

    @property
    def has_integer_coords(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def height(self) -> int:
        """Max absolute value of coordinate numerators and denominators."""
        h = 0
        for c in self.coords:
            h = max(h, abs(c.numerator), c.denominator)
        return h

    def _check(self, other: "FieldElement"):
        if self.field != other.field:
            raise ValueError("elements of different fields")

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        raise TypeError(f"cannot coerce {other!r} into {self.field}")

    def __add__(self, other) -> "FieldElement":
        o = self._coerce(other)
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other) -> "FieldElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "FieldElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "FieldElement":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return FieldElement(self.field, tuple(c * q for c in self.coords))
        o = self._coerce(other)
        a, b = self.coords, o.coords
        n = self.field.degree
        conv = [Fraction(0)] * (2 * n - 1)
        for i, ac in enumerate(a):
            if ac:
                for j, bc in enumerate(b):
                    if bc:
                        conv[i + j] += ac * bc
        return FieldElement(self.field, self.field.reduce_power_coords(conv))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        g, u, _ = qpoly_ext_gcd(list(self.coords), self.field.minpoly.to_fractions())
        if len(g) != 1:
            raise ArithmeticError("element shares a factor with the minimal polynomial")
        inv = self.field.reduce_power_coords([Fraction(c) for c in u])
        return FieldElement(self.field, inv)

    def __truediv__(self, other) -> "FieldElement":
        o = self._coerce(other)
        return self * o.inverse()

    def __rtruediv__(self, other) -> "FieldElement":
        return self._coerce(other) / self

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        acc = self.field.one()
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class CharPolyResult:
    """Monic degree-n characteristic polynomial with the norm and trace read
    off its coefficients: norm = (-1)^n c_0, trace = -c_{n-1}."""

    coeffs: tuple[Fraction, ...]  # little-endian, length n+1, monic
    norm: Fraction
    trace: Fraction

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_intpoly(self) -> IntPoly:
        if not self.is_integral:
            raise ValueError("characteristic polynomial has non-integer coefficients")
        return IntPoly(tuple(int(c) for c in self.coeffs))

    def denominator_support(self) -> set[int]:
        """Prime factors appearing in coefficient denominators."""
        primes: set[int] = set()
        for c in self.coeffs:
            d = c.denominator
            q = 2
            while q * q <= d:
                if d % q == 0:
                    primes.add(q)
                    while d % q == 0:
                        d //= q
                q += 1
            if d > 1:
                primes.add(d)
        return primes


def char_poly(elem: FieldElement) -> CharPolyResult:
    """Characteristic polynomial of the multiplication-by-elem map on the
    field as a Q-vector space (determinant of xI - M, exact)."""
    field = elem.field
    n = field.degree
    denom = 1
    for c in elem.coords:
        denom = denom * c.denominator // math.gcd(denom, c.denominator)
    scaled = [int(c * denom) for c in elem.coords]
    chi_scaled = field.charpoly_int_coords(scaled)
    coeffs = tuple(Fraction(chi_scaled[j], denom ** (n - j)) for j in range(n + 1))
    norm = Fraction((-1) ** n) * coeffs[0]
    trace = -coeffs[n - 1]
    return CharPolyResult(coeffs, norm, trace)


def norm(elem: FieldElement) -> Fraction:
    field = elem.field
    denom = 1
    for c in elem.coords:
        denom = denom * c.denominator // math.gcd(denom, c.denominator)
    scaled = [int(c * denom) for c in elem.coords]
    return Fraction(field.norm_int_coords(scaled), denom ** field.degree)


def trace(elem: FieldElement) -> Fraction:
    # trace of the multiplication matrix, directly
    field = elem.field
    mats = field._mult_mats
    t = Fraction(0)
    for i, w in enumerate(elem.coords):
        if w:
            t += w * sum(mats[i][r][r] for r in range(field.degree))
    return t


def is_algebraic_integer(elem: FieldElement) -> bool:
    """True iff the characteristic polynomial has integer coefficients.
    Integer coordinates are a fast sufficient case (Z[t] is a subring of the
    ring of integers)."""
    if elem.has_integer_coords:
        return True
    return char_poly(elem).is_integral


def evaluate_charpoly_at(cp: CharPolyResult, elem: FieldElement) -> FieldElement:
    """Horner evaluation of the characteristic polynomial at a field element
    (Cayley-Hamilton makes this zero at the element itself)."""
    acc = elem.field.zero()
    for c in reversed(cp.coeffs):
        acc = acc * elem + elem.field.rational(c)
    return acc
