"""Exact arithmetic substrate: dense integer polynomials, polynomial algebra
over prime fields (including full factorization), irreducibility certificates
over Q, and Sturm-sequence real-root counting.

Everything is exact: plain ints and fractions.Fraction, no floats anywhere.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

# Seed for the randomized equal-degree splitting step.  Factor lists are
# canonically sorted, so the seed never changes results, only the internal
# splitting order; it exists so runs are bit-for-bit reproducible.
DEFAULT_FACTOR_SEED = 0x5EED
_factor_seed = DEFAULT_FACTOR_SEED


def set_default_seed(seed: int) -> None:
    global _factor_seed
    _factor_seed = int(seed)


def get_default_seed() -> int:
    return _factor_seed


# ---------------------------------------------------------------------------
# primes

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_upto(bound: int) -> list[int]:
    """All primes <= bound by sieve."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, f in enumerate(sieve) if f]


# ---------------------------------------------------------------------------
# integer linear algebra helpers (used for resultants and charpolys)


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        (a, b), (c, d) = rows
        return a * d - b * c
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


@lru_cache(maxsize=None)
def _vandermonde_inverse_scaled(n: int) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Inverse of the Vandermonde matrix at nodes 0..n, as (A, d) with
    inverse = A/d and A integral.  Solving V c = v then costs only integer
    work: c_j = sum(A[j][t] v[t]) / d."""
    size = n + 1
    aug = [
        [Fraction(t**j) for j in range(size)]
        + [Fraction(1 if c == t else 0) for c in range(size)]
        for t in range(size)
    ]
    for col in range(size):
        piv = next(r for r in range(col, size) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    inv_rows = [row[size:] for row in aug]
    denom = 1
    for row in inv_rows:
        for x in row:
            denom = denom * x.denominator // math.gcd(denom, x.denominator)
    scaled = tuple(
        tuple(int(x * denom) for x in row) for row in inv_rows
    )
    return scaled, denom


def interpolate_int_poly(values: Sequence[int]) -> tuple[int, ...]:
    """Coefficients (little-endian) of the integer polynomial of degree < len
    taking the given values at 0, 1, ..., len-1."""
    n = len(values) - 1
    a, d = _vandermonde_inverse_scaled(n)
    out = []
    for j in range(n + 1):
        s = sum(a[j][t] * values[t] for t in range(n + 1))
        if s % d != 0:
            raise ArithmeticError("interpolation values are not from an integer polynomial")
        out.append(s // d)
    return tuple(out)


# ---------------------------------------------------------------------------
# rational polynomial helpers (lists of Fractions, little-endian)


def _qtrim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def qpoly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]):
    """Quotient and remainder in Q[x]."""
    b = _qtrim(list(b))
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = _qtrim(list(a))
    q = [Fraction(0)] * max(len(r) - len(b) + 1, 0)
    lead = b[-1]
    while len(r) >= len(b):
        f = r[-1] / lead
        k = len(r) - len(b)
        q[k] = f
        for i, bc in enumerate(b):
            r[i + k] -= f * bc
        _qtrim(r)
    return q, r


def qpoly_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    """Monic gcd in Q[x] (constant 1 for coprime inputs)."""
    x = _qtrim(list(a))
    y = _qtrim(list(b))
    while y:
        _, r = qpoly_divmod(x, y)
        x, y = y, r
    if not x:
        return []
    lead = x[-1]
    return [c / lead for c in x]


def qpoly_ext_gcd(a: Sequence[Fraction], b: Sequence[Fraction]):
    """Extended gcd in Q[x]: returns (g, u, v) with u a + v b = g, g monic."""
    r0, r1 = _qtrim(list(a)), _qtrim(list(b))
    u0, u1 = [Fraction(1)], []
    v0, v1 = [], [Fraction(1)]

    def sub_mul(x, q, y):
        prod = [Fraction(0)] * (len(q) + len(y) - 1) if q and y else []
        for i, qc in enumerate(q):
            if qc:
                for j, yc in enumerate(y):
                    prod[i + j] += qc * yc
        out = list(x) + [Fraction(0)] * max(0, len(prod) - len(x))
        for i, pc in enumerate(prod):
            out[i] -= pc
        return _qtrim(out)

    while r1:
        q, r = qpoly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, sub_mul(u0, q, u1)
        v0, v1 = v1, sub_mul(v0, q, v1)
    if not r0:
        raise ZeroDivisionError("ext gcd of zero polynomials")
    lead = r0[-1]
    g = [c / lead for c in r0]
    u = [c / lead for c in u0]
    v = [c / lead for c in v0]
    return g, u, v


# ---------------------------------------------------------------------------
# integer polynomials


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial; coeffs[i] is the coefficient of x^i.
    Canonical form strips trailing zeros, so the zero polynomial is ()."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(v) for v in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "IntPoly":
        return cls(tuple(coeffs))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(tuple(out))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        result = IntPoly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "IntPoly"):
        """Exact long division; every leading-coefficient step must divide
        (always the case for a monic divisor or a true factor)."""
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        d = other.degree
        if self.degree < d:
            return IntPoly(()), self
        num = list(self.coeffs)
        lead = other.leading
        q = [0] * (self.degree - d + 1)
        for i in range(len(q) - 1, -1, -1):
            c = num[i + d]
            if c == 0:
                continue
            if c % lead:
                raise ValueError("non-exact division; divisor must be monic or divide exactly")
            f = c // lead
            q[i] = f
            for j, bc in enumerate(other.coeffs):
                num[i + j] -= f * bc
        return IntPoly(tuple(q)), IntPoly(tuple(num[:d]))

    def __floordiv__(self, other: "IntPoly") -> "IntPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "IntPoly") -> "IntPoly":
        return divmod(self, other)[1]

    # -- calculus / evaluation ----------------------------------------------

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "IntPoly") -> "IntPoly":
        acc = IntPoly(())
        for c in reversed(self.coeffs):
            acc = acc * other + IntPoly((c,))
        return acc

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def l2_bound(self) -> int:
        """Integer upper bound for the 2-norm of the coefficient vector."""
        return math.isqrt(sum(c * c for c in self.coeffs)) + 1

    # -- resultants ----------------------------------------------------------

    def resultant(self, other: "IntPoly") -> int:
        """Res(self, other) via the Sylvester matrix (exact integer det)."""
        m, n = self.degree, other.degree
        if m < 0 or n < 0:
            return 0
        if m == 0:
            return self.coeffs[0] ** n
        if n == 0:
            return other.coeffs[0] ** m
        size = m + n
        rows = []
        a = list(reversed(self.coeffs))  # leading first
        b = list(reversed(other.coeffs))
        for i in range(n):
            rows.append([0] * i + a + [0] * (size - m - 1 - i))
        for i in range(m):
            rows.append([0] * i + b + [0] * (size - n - 1 - i))
        return bareiss_det(rows)

    def discriminant(self) -> int:
        """(-1)^{n(n-1)/2} Res(f, f') / lc(f)."""
        n = self.degree
        if n <= 0:
            raise ValueError("discriminant needs degree >= 1")
        if n == 1:
            return 1
        a = self.coeffs
        if n == 2:
            c0, c1, c2 = a
            return c1 * c1 - 4 * c2 * c0
        if n == 3 and a[3] == 1:
            c0, b, aa = a[0], a[1], a[2]
            # monic x^3 + aa x^2 + b x + c0
            return (
                18 * aa * b * c0
                - 4 * aa**3 * c0
                + aa * aa * b * b
                - 4 * b**3
                - 27 * c0 * c0
            )
        r = self.resultant(self.derivative())
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        val = sign * r
        if val % self.leading:
            raise ArithmeticError("discriminant division not exact")
        return val // self.leading

    # -- conversions ----------------------------------------------------------

    def reduce_mod(self, p: int) -> "ResiduePoly":
        return ResiduePoly(p, tuple(c % p for c in self.coeffs))

    def to_fractions(self) -> list[Fraction]:
        return [Fraction(c) for c in self.coeffs]

    def squarefree_part(self) -> "IntPoly":
        """self / gcd(self, self'), primitive with the sign of self."""
        g = poly_gcd(self, self.derivative())
        if g.degree <= 0:
            return self
        return self // g

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                body = xs if mag == 1 else f"{mag}*{xs}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


X = IntPoly((0, 1))


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd in Z[x], positive leading coefficient."""
    if a.is_zero and b.is_zero:
        return IntPoly(())
    g = qpoly_gcd(a.to_fractions(), b.to_fractions())
    if not g:
        return IntPoly(())
    denom = 1
    for c in g:
        denom = denom * c.denominator // math.gcd(denom, c.denominator)
    ints = [int(c * denom) for c in g]
    cont = 0
    for c in ints:
        cont = math.gcd(cont, c)
    ints = [c // cont for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return IntPoly(tuple(ints))


# ---------------------------------------------------------------------------
# polynomials over F_p


@dataclass(frozen=True)
class ResiduePoly:
    """Dense polynomial over F_p, coefficients reduced into [0, p)."""

    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        p = self.modulus
        c = tuple(int(v) % p for v in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_coeffs(cls, p: int, coeffs: Iterable[int]) -> "ResiduePoly":
        return cls(p, tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def is_one(self) -> bool:
        return self.coeffs == (1,)

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def _check(self, other: "ResiduePoly"):
        if self.modulus != other.modulus:
            raise ValueError("mismatched moduli")

    def __add__(self, other: "ResiduePoly") -> "ResiduePoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ResiduePoly(self.modulus, tuple(out))

    def __neg__(self) -> "ResiduePoly":
        return ResiduePoly(self.modulus, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "ResiduePoly") -> "ResiduePoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ResiduePoly(self.modulus, tuple(c * other for c in self.coeffs))
        self._check(other)
        if self.is_zero or other.is_zero:
            return ResiduePoly(self.modulus, ())
        p = self.modulus
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + a * b) % p
        return ResiduePoly(p, tuple(out))

    __rmul__ = __mul__

    def __divmod__(self, other: "ResiduePoly"):
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        p = self.modulus
        d = other.degree
        if self.degree < d:
            return ResiduePoly(p, ()), self
        inv_lead = pow(other.leading, -1, p)
        num = list(self.coeffs)
        q = [0] * (self.degree - d + 1)
        for i in range(len(q) - 1, -1, -1):
            c = num[i + d] % p
            if c == 0:
                continue
            f = c * inv_lead % p
            q[i] = f
            for j, bc in enumerate(other.coeffs):
                num[i + j] = (num[i + j] - f * bc) % p
        return ResiduePoly(p, tuple(q)), ResiduePoly(p, tuple(num[:d]))

    def __floordiv__(self, other: "ResiduePoly") -> "ResiduePoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "ResiduePoly") -> "ResiduePoly":
        return divmod(self, other)[1]

    def monic(self) -> "ResiduePoly":
        if self.is_zero or self.leading == 1:
            return self
        inv = pow(self.leading, -1, self.modulus)
        return self * inv

    def gcd(self, other: "ResiduePoly") -> "ResiduePoly":
        self._check(other)
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def pow_mod(self, e: int, mod: "ResiduePoly") -> "ResiduePoly":
        result = ResiduePoly(self.modulus, (1,))
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def derivative(self) -> "ResiduePoly":
        return ResiduePoly(self.modulus, tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def evaluate(self, a: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % self.modulus
        return acc

    def lift(self) -> IntPoly:
        """Lift with coefficients in [0, p)."""
        return IntPoly(self.coeffs)

    def __str__(self) -> str:
        return f"{self.lift()} (mod {self.modulus})"


# ---------------------------------------------------------------------------
# factorization over F_p


@dataclass(frozen=True)
class FactorizationModP:
    """Complete factorization over F_p: unit * prod(g_i ^ e_i)."""

    modulus: int
    factors: tuple[tuple[ResiduePoly, int], ...]
    unit: int

    def product(self) -> ResiduePoly:
        acc = ResiduePoly(self.modulus, (self.unit,))
        for g, e in self.factors:
            for _ in range(e):
                acc = acc * g
        return acc

    def ef_pairs(self) -> tuple[tuple[int, int], ...]:
        """(multiplicity, degree) per factor."""
        return tuple((e, g.degree) for g, e in self.factors)


def _pth_root(h: ResiduePoly) -> ResiduePoly:
    """p-th root of a polynomial in F_p[x^p] (coefficientwise, a^p = a)."""
    p = h.modulus
    out = []
    for i, c in enumerate(h.coeffs):
        if i % p == 0:
            out.append(c)
        elif c:
            raise ArithmeticError("not a polynomial in x^p")
    return ResiduePoly(p, tuple(out))


def _squarefree_decomposition(h: ResiduePoly) -> list[tuple[ResiduePoly, int]]:
    """Yun-style squarefree decomposition adapted to characteristic p."""
    p = h.modulus
    out: list[tuple[ResiduePoly, int]] = []
    if h.degree < 1:
        return out
    d = h.derivative()
    if d.is_zero:
        for g, m in _squarefree_decomposition(_pth_root(h)):
            out.append((g, m * p))
        return out
    c = h.gcd(d)
    w = h // c
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        fac = w // y
        if fac.degree > 0:
            out.append((fac, i))
        w = y
        c = c // y
        i += 1
    if c.degree > 0:
        for g, m in _squarefree_decomposition(_pth_root(c)):
            out.append((g, m * p))
    return out


def _distinct_degree(g: ResiduePoly) -> list[tuple[ResiduePoly, int]]:
    """Split a monic squarefree polynomial into products of irreducibles of
    the same degree: returns (product, degree) pairs."""
    p = g.modulus
    out = []
    x = ResiduePoly(p, (0, 1))
    rem = g
    h = x % rem
    d = 0
    while rem.degree > 0 and rem.degree >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(p, rem)
        gd = (h - x).gcd(rem)
        if gd.degree > 0:
            out.append((gd, d))
            rem = rem // gd
            h = h % rem
    if rem.degree > 0:
        out.append((rem, rem.degree))
    return out


def _equal_degree(g: ResiduePoly, d: int, rng: random.Random) -> list[ResiduePoly]:
    """Cantor-Zassenhaus split of a product of degree-d irreducibles."""
    p = g.modulus
    out: list[ResiduePoly] = []
    stack = [g]
    one = ResiduePoly(p, (1,))
    while stack:
        cur = stack.pop()
        if cur.degree == d:
            out.append(cur.monic())
            continue
        while True:
            r = ResiduePoly(p, tuple(rng.randrange(p) for _ in range(cur.degree)))
            if r.degree < 1:
                continue
            if p == 2:
                # trace map over F_{2^d}
                t = r % cur
                acc = t
                for _ in range(d - 1):
                    t = (t * t) % cur
                    acc = acc + t
                w = acc
            else:
                w = r.pow_mod((p**d - 1) // 2, cur) - one
            h = w.gcd(cur)
            if 0 < h.degree < cur.degree:
                stack.append(h)
                stack.append(cur // h)
                break
    return out


def factor_mod_p(f: IntPoly, p: int, seed: int | None = None) -> FactorizationModP:
    """Complete factorization of f mod p into monic irreducibles over F_p
    (squarefree decomposition + distinct-degree + Cantor-Zassenhaus)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    fbar = f.reduce_mod(p)
    if fbar.is_zero:
        raise ValueError("polynomial vanishes mod p")
    unit = fbar.leading
    h = fbar.monic()
    rng = random.Random(_factor_seed if seed is None else seed)
    factors: list[tuple[ResiduePoly, int]] = []
    for part, mult in _squarefree_decomposition(h):
        for prod, d in _distinct_degree(part.monic()):
            for irr in _equal_degree(prod, d, rng):
                factors.append((irr, mult))
    factors.sort(key=lambda ge: (ge[0].degree, ge[0].coeffs, ge[1]))
    return FactorizationModP(p, tuple(factors), unit)


# ---------------------------------------------------------------------------
# irreducibility over Q


@dataclass(frozen=True)
class IrreducibilityReport:
    status: str  # "certified_irreducible" | "certified_reducible" | "unknown"
    method: str
    witness: IntPoly | None = None

    @property
    def certified_irreducible(self) -> bool:
        return self.status == "certified_irreducible"


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return sorted(out)


def eisenstein_prime(f: IntPoly) -> int | None:
    """A prime witnessing the Eisenstein criterion for monic f, if any."""
    g = 0
    for c in f.coeffs[:-1]:
        g = math.gcd(g, c)
    if g <= 1:
        return None
    c0 = f.constant
    m = g
    d = 2
    while d * d <= m:
        if m % d == 0:
            if c0 % (d * d):
                return d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1 and c0 % (m * m):
        return m
    return None


def is_irreducible_over_Q(
    f: IntPoly, probe_bound: int = 100, search_limit: int = 500_000
) -> IrreducibilityReport:
    """Certified irreducibility test for a monic integer polynomial.

    Order of attack: repeated-factor check, rational roots (complete for
    degree <= 3), Eisenstein, irreducibility mod a prime not dividing the
    discriminant, and finally an exhaustive factor search inside the
    Mignotte coefficient bound.  Returns "unknown" only when the bounded
    search would exceed search_limit candidates.
    """
    if not f.is_monic:
        raise ValueError("irreducibility test requires a monic polynomial")
    n = f.degree
    if n < 1:
        raise ValueError("degree must be >= 1")
    if n == 1:
        return IrreducibilityReport("certified_irreducible", "degree-1")

    rep = poly_gcd(f, f.derivative())
    if rep.degree >= 1:
        return IrreducibilityReport("certified_reducible", "repeated-factor", rep)

    if f.constant == 0:
        return IrreducibilityReport("certified_reducible", "rational-root", X)
    for d in _divisors(f.constant):
        for r in (d, -d):
            if f.evaluate(r) == 0:
                return IrreducibilityReport(
                    "certified_reducible", "rational-root", IntPoly((-r, 1))
                )
    if n <= 3:
        # a monic cubic/quadratic over Z factors only with a linear part
        return IrreducibilityReport("certified_irreducible", "rational-root-exhaustion")

    p_eis = eisenstein_prime(f)
    if p_eis is not None:
        return IrreducibilityReport("certified_irreducible", f"eisenstein@{p_eis}")

    disc = f.discriminant()
    for p in primes_upto(probe_bound):
        if disc % p == 0:
            continue
        fac = factor_mod_p(f, p)
        if len(fac.factors) == 1 and fac.factors[0][1] == 1:
            return IrreducibilityReport("certified_irreducible", f"probe-mod-{p}")

    # bounded factor search: any factorization of monic f has a monic factor
    # of degree k <= n/2 whose coefficients obey the Mignotte bound
    l2 = f.l2_bound()
    for k in range(2, n // 2 + 1):
        bounds = [math.comb(k, j) * l2 for j in range(k)]
        total = 1
        for b in bounds:
            total *= 2 * b + 1
            if total > search_limit:
                return IrreducibilityReport("unknown", "factor-search-overflow")
        def _search(idx: int, acc: list[int]):
            if idx == k:
                g = IntPoly(tuple(acc) + (1,))
                try:
                    q, r = divmod(f, g)
                except ValueError:
                    return None
                if r.is_zero and q.degree >= 1:
                    return g
                return None
            for c in range(-bounds[idx], bounds[idx] + 1):
                hit = _search(idx + 1, acc + [c])
                if hit is not None:
                    return hit
            return None
        witness = _search(0, [])
        if witness is not None:
            return IrreducibilityReport("certified_reducible", "bounded-factor-search", witness)
    return IrreducibilityReport("certified_irreducible", "bounded-factor-search")


# ---------------------------------------------------------------------------
# real roots (Sturm)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Iterable[int]) -> int:
    seq = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(seq, seq[1:]) if a != b)


def count_real_roots(f: IntPoly) -> int:
    """Number of distinct real roots, by Sturm's theorem on the squarefree
    part (so repeated roots are counted once)."""
    if f.is_zero:
        raise ValueError("zero polynomial")
    if f.degree == 0:
        return 0
    g = f.squarefree_part()
    chain: list[list[Fraction]] = [g.to_fractions(), g.derivative().to_fractions()]
    while _qtrim(chain[-1]):
        _, r = qpoly_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    chain = [c for c in chain if c]
    at_plus = [_sign(c[-1]) for c in chain]
    at_minus = [_sign(c[-1]) * (-1 if (len(c) - 1) % 2 else 1) for c in chain]
    return _variations(at_minus) - _variations(at_plus)
