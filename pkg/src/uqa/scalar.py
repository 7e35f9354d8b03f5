"""Exact arithmetic in the rational function field Q(q).

A nonzero value is stored as ``q**e * num / den`` where ``num`` and ``den``
are integer polynomials with nonzero constant term, coprime over Q[q],
jointly primitive, and ``den`` has positive leading coefficient.  Under these
rules every element has exactly one representation, so equality is a plain
structural comparison.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from flint import fmpz_poly

__all__ = [
    "Scalar",
    "normalize",
    "q_integer",
    "q_binomial",
    "evaluate_at",
    "ZERO",
    "ONE",
    "Q",
]

_ONE_POLY = fmpz_poly([1])
_ZERO_POLY = fmpz_poly([])


def _strip_q(p: fmpz_poly) -> tuple[int, fmpz_poly]:
    """Split p = q**k * p' with p'(0) != 0."""
    coeffs = p.coeffs()
    k = 0
    while coeffs[k] == 0:
        k += 1
    if k == 0:
        return 0, p
    return k, fmpz_poly(coeffs[k:])


def _content(p: fmpz_poly) -> int:
    c = 0
    for a in p.coeffs():
        c = gcd(c, int(a))
    return c


def _to_poly(p) -> tuple[fmpz_poly, int]:
    """Integer polynomial and the integer it was scaled by."""
    if isinstance(p, fmpz_poly):
        return p, 1
    if isinstance(p, int):
        return fmpz_poly([p]), 1
    coeffs = [Fraction(c) for c in p]
    den = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return fmpz_poly([int(c * den) for c in coeffs]), den


class Scalar:
    """An element of Q(q) in canonical form.  Immutable."""

    __slots__ = ("exp", "num", "den", "_hash")

    def __init__(self, exp: int, num: fmpz_poly, den: fmpz_poly):
        # trusted constructor: callers pass canonical data
        self.exp = exp
        self.num = num
        self.den = den
        self._hash = None

    # construction ---------------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> "Scalar":
        return _int_scalar(n)

    @classmethod
    def from_fraction(cls, x) -> "Scalar":
        x = Fraction(x)
        if x == 0:
            return ZERO
        return _canonical(0, fmpz_poly([x.numerator]), fmpz_poly([x.denominator]))

    @classmethod
    def q_power(cls, k: int) -> "Scalar":
        return _q_power(k)

    @classmethod
    def laurent(cls, coeffs: dict[int, int]) -> "Scalar":
        """Build sum c_k q**k from an exponent -> integer coefficient map."""
        coeffs = {k: c for k, c in coeffs.items() if c}
        if not coeffs:
            return ZERO
        lo = min(coeffs)
        hi = max(coeffs)
        poly = fmpz_poly([coeffs.get(lo + i, 0) for i in range(hi - lo + 1)])
        return _canonical(lo, poly, _ONE_POLY)

    # predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_one(self) -> bool:
        return self.exp == 0 and self.num == _ONE_POLY and self.den == _ONE_POLY

    def is_laurent(self) -> bool:
        return self.den == _ONE_POLY

    def is_unit_monomial(self) -> bool:
        """True for c * q**k with integer c."""
        return self.den == _ONE_POLY and self.num.degree() == 0

    # arithmetic -----------------------------------------------------------

    def __add__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        e = min(self.exp, other.exp)
        a = self.num * _shift(self.exp - e)
        b = other.num * _shift(other.exp - e)
        if self.den == _ONE_POLY and other.den == _ONE_POLY:
            n = a + b
            if n.is_zero():
                return ZERO
            k, n = _strip_q(n)
            return Scalar(e + k, n, _ONE_POLY)
        if self.den == other.den:
            return _canonical(e, a + b, self.den)
        return _canonical(e, a * other.den + b * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        if self.num.is_zero():
            return self
        return Scalar(self.exp, -self.num, self.den)

    def __sub__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        e = self.exp + other.exp
        if self.den == _ONE_POLY and other.den == _ONE_POLY:
            return Scalar(e, self.num * other.num, _ONE_POLY)
        if self.den == _ONE_POLY and self.num.degree() == 0 and _is_unit(self.num):
            return Scalar(e, self.num * other.num, other.den)
        if other.den == _ONE_POLY and other.num.degree() == 0 and _is_unit(other.num):
            return Scalar(e, self.num * other.num, self.den)
        return _canonical(e, self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return _canonical(-self.exp, self.den, self.num)

    def __truediv__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = _int_scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.exp == other.exp and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (self.exp, tuple(int(c) for c in self.num.coeffs()),
                 tuple(int(c) for c in self.den.coeffs()))
            )
        return self._hash

    # evaluation / text ----------------------------------------------------

    def evaluate(self, q0) -> Fraction:
        return evaluate_at(self, q0)

    def to_text(self) -> str:
        return format_scalar(self)

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r})"

    def as_tuple(self) -> tuple:
        """Structural data: (unit_exponent, numerator coeffs, denominator coeffs)."""
        return (
            self.exp,
            tuple(int(c) for c in self.num.coeffs()),
            tuple(int(c) for c in self.den.coeffs()),
        )


def _is_unit(p: fmpz_poly) -> bool:
    c = p[0]
    return c == 1 or c == -1


@lru_cache(maxsize=None)
def _shift(k: int) -> fmpz_poly:
    return fmpz_poly([0] * k + [1])


def _canonical(exp: int, num: fmpz_poly, den: fmpz_poly) -> Scalar:
    if den.is_zero():
        raise ZeroDivisionError("zero denominator in Q(q)")
    if num.is_zero():
        return ZERO
    kn, num = _strip_q(num)
    kd, den = _strip_q(den)
    exp += kn - kd
    if den.degree() > 0 and num.degree() > 0:
        g = num.gcd(den)
        if g.degree() > 0:
            num = num // g
            den = den // g
    c = gcd(_content(num), _content(den))
    if den.coeffs()[-1] < 0:
        c = -c
    if c != 1:
        num = fmpz_poly([int(a) // c for a in num.coeffs()])
        den = fmpz_poly([int(a) // c for a in den.coeffs()])
    return Scalar(exp, num, den)


def normalize(num, den=1) -> Scalar:
    """Canonical form of num/den.

    ``num`` and ``den`` are polynomials in q given as ascending coefficient
    sequences (integers or fractions), ``fmpz_poly`` values, or integers.
    """
    n, scale_n = _to_poly(num)
    d, scale_d = _to_poly(den)
    if d.is_zero():
        raise ZeroDivisionError("normalize: zero denominator polynomial")
    # num/scale_n over den/scale_d
    return _canonical(0, n * scale_d, d * scale_n)


@lru_cache(maxsize=4096)
def _int_scalar(n: int) -> Scalar:
    if n == 0:
        return Scalar(0, _ZERO_POLY, _ONE_POLY)
    return Scalar(0, fmpz_poly([n]), _ONE_POLY)


@lru_cache(maxsize=4096)
def _q_power(k: int) -> Scalar:
    return Scalar(k, _ONE_POLY, _ONE_POLY)


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return _int_scalar(x)
    if isinstance(x, Fraction):
        return Scalar.from_fraction(x)
    return NotImplemented


ZERO = _int_scalar(0)
ONE = _int_scalar(1)
Q = _q_power(1)


@lru_cache(maxsize=None)
def q_integer(n: int, d: int = 1) -> Scalar:
    """[n]_{q^d} = (q^{nd} - q^{-nd}) / (q^d - q^{-d})."""
    if d <= 0:
        raise ValueError("q_integer: d must be positive")
    if n == 0:
        return ZERO
    sign = 1 if n > 0 else -1
    n = abs(n)
    return Scalar.laurent({d * (n - 1 - 2 * k): sign for k in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int, d: int = 1) -> Scalar:
    out = ONE
    for k in range(1, n + 1):
        out = out * q_integer(k, d)
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int, d: int = 1) -> Scalar:
    if k < 0 or k > n:
        return ZERO
    return q_factorial(n, d) / (q_factorial(k, d) * q_factorial(n - k, d))


def evaluate_at(s: Scalar, q0) -> Fraction:
    """Value of s at q = q0 (a nonzero rational)."""
    q0 = Fraction(q0)
    if q0 == 0:
        raise ZeroDivisionError("evaluate_at: q0 must be nonzero")
    if s.num.is_zero():
        return Fraction(0)
    den = _horner(s.den, q0)
    if den == 0:
        raise ZeroDivisionError(f"evaluate_at: pole at q = {q0}")
    return q0 ** s.exp * _horner(s.num, q0) / den


def _horner(p: fmpz_poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs()):
        acc = acc * x + int(c)
    return acc


# text ---------------------------------------------------------------------


def _laurent_text(exp: int, p: fmpz_poly) -> str:
    parts = []
    coeffs = [int(c) for c in p.coeffs()]
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        k = exp + i
        if k == 0:
            body = str(abs(c))
        else:
            qk = "q" if k == 1 else f"q^{k}"
            body = qk if abs(c) == 1 else f"{abs(c)}*{qk}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def format_scalar(s: Scalar) -> str:
    if s.num.is_zero():
        return "0"
    top = _laurent_text(s.exp, s.num)
    if s.den == _ONE_POLY:
        return top
    return f"({top})/({_laurent_text(0, s.den)})"
