"""
Stage 1 - exact arithmetic in Q and in cyclotomic fields Q(zeta_N).

Responsibility: every coefficient of every hyperplane, point and matrix in
this package is a CycloNum.  Elements live in the power basis
1, z, ..., z^(phi(N)-1) reduced modulo the N-th cyclotomic polynomial and are
stored as integer numerators over one positive common denominator, so the
zero test and equality are structural.

Literal syntax
--------------
Rationals are written "p" or "p/q"; cyclotomic elements as polynomials in
``z`` for a declared order, e.g. ``"1/2 - 3z^2"`` with ``field_order = 7``.
Non-integer coefficients of a power of z are written ``"1/2*z^3"``.

Public API
----------
Rat                               alias of fractions.Fraction
CycloNum                          immutable element of Q(zeta_N)
cyclotomic_polynomial(N)          integer coefficients, lowest degree first
euler_phi(N)                      degree of Q(zeta_N) over Q
zeta(N, k)                        zeta_N ** k
embed(a, M)                       image under zeta_N -> zeta_M^(M/N)
sum_roots(m, J)                   exact sum of zeta_m^j over the multiset J
nonvanishing_guaranteed(m, size)  subset sums of that size can never vanish
vanishing_subsets(m, size)        exhaustive search for vanishing subset sums
parse_cyclo(text, order)          literal syntax -> CycloNum
"""
from __future__ import annotations

import cmath
import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rat = Fraction
Scalar = Union[int, Fraction]


# ---------------------------------------------------------------------------
# Integer polynomials (lowest degree first)
# ---------------------------------------------------------------------------

def _divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % p for p in range(2, math.isqrt(n) + 1))


def _divmod_monic(poly: Sequence[int], divisor: Sequence[int]) -> tuple[list[int], list[int]]:
    """Long division by a monic integer polynomial; the remainder has len(divisor)-1 slots."""
    deg = len(divisor) - 1
    rem = list(poly)
    if len(rem) <= deg:
        return [0], rem + [0] * (deg - len(rem))
    quot = [0] * (len(rem) - deg)
    for shift in range(len(rem) - 1 - deg, -1, -1):
        coeff = rem[shift + deg]
        if coeff:
            quot[shift] = coeff
            for k, c in enumerate(divisor):
                rem[shift + k] -= coeff * c
    return quot, rem[:deg]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> tuple[int, ...]:
    """Phi_N by dividing x^N - 1 by Phi_k for every proper divisor k of N."""
    if order < 1:
        raise ValueError(f"cyclotomic order must be positive, got {order}")
    poly = [-1] + [0] * (order - 1) + [1]
    for k in _divisors(order)[:-1]:
        poly, rem = _divmod_monic(poly, cyclotomic_polynomial(k))
        if any(rem):
            raise ArithmeticError(f"x^{order} - 1 is not divisible by Phi_{k}")
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def euler_phi(order: int) -> int:
    return len(cyclotomic_polynomial(order)) - 1


# ---------------------------------------------------------------------------
# Rational polynomials, used only by the inverse
# ---------------------------------------------------------------------------

def _trim(poly: list[Fraction]) -> list[Fraction]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _fdivmod(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(num)
    deg = len(den) - 1
    lead = den[-1]
    if len(rem) <= deg:
        return [], _trim(rem)
    quot = [Fraction(0)] * (len(rem) - deg)
    for shift in range(len(rem) - 1 - deg, -1, -1):
        coeff = rem[shift + deg] / lead
        if coeff:
            quot[shift] = coeff
            for k, c in enumerate(den):
                rem[shift + k] -= coeff * c
    return _trim(quot), _trim(rem[:deg])


def _fmul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _fsub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    size = max(len(a), len(b))
    out = [
        (a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(size)
    ]
    return _trim([Fraction(c) for c in out])


# ---------------------------------------------------------------------------
# CycloNum
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True, eq=False)
class CycloNum:
    """
    Exact element of Q(zeta_N) in canonical form.

    ``num`` has exactly phi(N) integer entries (power basis coefficients
    times ``den``); ``den`` is positive and coprime to the numerators.
    Build values through the class constructors or module helpers, never by
    filling the fields directly.
    """

    order: int
    num: tuple[int, ...]
    den: int = 1

    # -- construction ------------------------------------------------------

    @staticmethod
    def _make(order: int, poly: Sequence[int], den: int) -> "CycloNum":
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        phi = euler_phi(order)
        if len(poly) > phi:
            _, rem = _divmod_monic(poly, cyclotomic_polynomial(order))
        else:
            rem = list(poly) + [0] * (phi - len(poly))
        if den < 0:
            rem = [-c for c in rem]
            den = -den
        g = math.gcd(den, *rem)
        if g > 1:
            rem = [c // g for c in rem]
            den //= g
        return CycloNum(order, tuple(rem), den)

    @classmethod
    def from_coeffs(cls, order: int, coeffs: Iterable[Scalar]) -> "CycloNum":
        """Element sum_k coeffs[k] * z^k; any number of coefficients, reduced on entry."""
        values = [Fraction(c) for c in coeffs]
        den = math.lcm(*(v.denominator for v in values)) if values else 1
        return cls._make(order, [v.numerator * (den // v.denominator) for v in values], den)

    @classmethod
    def rational(cls, order: int, value: Scalar) -> "CycloNum":
        value = Fraction(value)
        return cls._make(order, [value.numerator], value.denominator)

    @classmethod
    def zero(cls, order: int) -> "CycloNum":
        return cls._make(order, [0], 1)

    @classmethod
    def one(cls, order: int) -> "CycloNum":
        return cls._make(order, [1], 1)

    # -- inspection --------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def to_complex(self) -> complex:
        """Floating point value with zeta_N = exp(2 pi i / N); read-only helper for tracking."""
        total = 0j
        for k, c in enumerate(self.num):
            if c:
                total += (c / self.den) * cmath.rect(1.0, 2.0 * math.pi * k / self.order)
        return total

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other: object) -> "CycloNum":
        if isinstance(other, CycloNum):
            if other.order != self.order:
                raise ValueError(
                    f"cyclotomic orders differ ({self.order} vs {other.order}); "
                    "embed both operands into a common order first"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.rational(self.order, other)
        return NotImplemented

    def __add__(self, other: object) -> "CycloNum":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        poly = [a * o.den + b * self.den for a, b in zip(self.num, o.num)]
        return CycloNum._make(self.order, poly, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "CycloNum":
        return CycloNum(self.order, tuple(-c for c in self.num), self.den)

    def __sub__(self, other: object) -> "CycloNum":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "CycloNum":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "CycloNum":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        conv = [0] * (2 * len(self.num) - 1)
        for i, a in enumerate(self.num):
            if a:
                for j, b in enumerate(o.num):
                    if b:
                        conv[i + j] += a * b
        return CycloNum._make(self.order, conv, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise ZeroDivisionError(f"inverse of zero in Q(zeta_{self.order})")
        if len(self.num) == 1:
            return CycloNum._make(self.order, [self.den], self.num[0])
        # extended Euclid in Q[x]: r_k = s_k * a (mod Phi_N)
        r0 = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        r1 = _trim([Fraction(c, self.den) for c in self.num])
        s0: list[Fraction] = []
        s1 = [Fraction(1)]
        while r1:
            quot, rem = _fdivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _fsub(s0, _fmul(quot, s1))
        if len(r0) != 1:
            raise ArithmeticError(f"{self} shares a factor with Phi_{self.order}")
        return CycloNum.from_coeffs(self.order, [c / r0[0] for c in s0])

    def __truediv__(self, other: object) -> "CycloNum":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "CycloNum":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "CycloNum":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = CycloNum.one(self.order)
        k = abs(exponent)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "CycloNum":
        """Galois image under zeta_N -> zeta_N^(-1)."""
        poly = [0] * self.order
        for k, c in enumerate(self.num):
            poly[(-k) % self.order] += c
        return CycloNum._make(self.order, poly, self.den)

    def embed(self, target_order: int) -> "CycloNum":
        if target_order < 1 or target_order % self.order:
            raise ValueError(
                f"cannot embed Q(zeta_{self.order}) into Q(zeta_{target_order}): "
                f"{self.order} does not divide {target_order}"
            )
        step = target_order // self.order
        poly = [0] * ((len(self.num) - 1) * step + 1)
        for k, c in enumerate(self.num):
            poly[k * step] = c
        return CycloNum._make(target_order, poly, self.den)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        if not isinstance(other, CycloNum):
            return NotImplemented
        if other.order != self.order:
            raise ValueError(
                f"cannot compare elements of Q(zeta_{self.order}) and Q(zeta_{other.order})"
            )
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.order, self.num, self.den))

    # -- text --------------------------------------------------------------

    def __str__(self) -> str:
        terms: list[tuple[bool, str]] = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "z" if k == 1 else f"z^{k}"
                if mag == 1:
                    body = power
                elif mag.denominator == 1:
                    body = f"{mag}{power}"
                else:
                    body = f"{mag}*{power}"
            terms.append((c < 0, body))
        if not terms:
            return "0"
        negative, body = terms[0]
        out = ("-" if negative else "") + body
        for negative, body in terms[1:]:
            out += (" - " if negative else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"CycloNum({str(self)!r}, order={self.order})"


# ---------------------------------------------------------------------------
# Module helpers
# ---------------------------------------------------------------------------

def zeta(order: int, k: int = 1) -> CycloNum:
    poly = [0] * order
    poly[k % order] = 1
    return CycloNum._make(order, poly, 1)


def embed(a: Union[CycloNum, Scalar], target_order: int) -> CycloNum:
    if isinstance(a, CycloNum):
        return a.embed(target_order)
    return CycloNum.rational(target_order, a)


def sum_roots(m: int, residues: Iterable[int]) -> CycloNum:
    """Exact sum of zeta_m^j for j in the multiset ``residues``."""
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    counts = [0] * m
    for j in residues:
        if not isinstance(j, int) or isinstance(j, bool):
            raise ValueError(f"residues must be integers, got {j!r}")
        counts[j % m] += 1
    return CycloNum._make(m, counts, 1)


def nonvanishing_guaranteed(m: int, size: int) -> bool:
    """True when no sum of ``size`` distinct m-th roots of unity can vanish."""
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    if size < 0:
        raise ValueError(f"size must be non-negative, got {size}")
    return math.gcd(size, m) == 1 and (_is_prime(m) or size <= 4)


def vanishing_subsets(m: int, size: int) -> list[tuple[int, ...]]:
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    if not 0 <= size <= m:
        raise ValueError(f"size must lie in [0, {m}], got {size}")
    return [
        subset
        for subset in itertools.combinations(range(m), size)
        if sum_roots(m, subset).is_zero()
    ]


_TOKEN = re.compile(r"[+-]?[^+-]+")
_TERM = re.compile(r"^(?P<coef>\d+(?:/\d+)?)?(?P<star>\*)?(?P<z>z(?:\^(?P<exp>\d+))?)?$")


def parse_cyclo(text: str, order: int) -> CycloNum:
    source = text.replace(" ", "")
    if not source:
        raise ValueError("empty coefficient literal")
    tokens = _TOKEN.findall(source)
    if "".join(tokens) != source:
        raise ValueError(f"malformed coefficient literal {text!r}")
    poly: dict[int, Fraction] = {}
    for token in tokens:
        sign = -1 if token[0] == "-" else 1
        body = token.lstrip("+-")
        match = _TERM.match(body)
        if not match or not body:
            raise ValueError(f"malformed term {token!r} in {text!r}")
        coef, star, z, exp = match.group("coef", "star", "z", "exp")
        if coef is None and z is None:
            raise ValueError(f"malformed term {token!r} in {text!r}")
        if star and (coef is None or z is None):
            raise ValueError(f"misplaced '*' in {text!r}")
        if z and order == 1:
            raise ValueError(f"'z' is undefined for field_order = 1 in {text!r}")
        power = int(exp) if exp else (1 if z else 0)
        value = Fraction(coef) if coef else Fraction(1)
        poly[power] = poly.get(power, Fraction(0)) + sign * value
    size = max(poly) + 1
    return CycloNum.from_coeffs(order, [poly.get(k, 0) for k in range(size)])
