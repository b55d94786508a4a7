"""Exact arithmetic foundations: the quadratic field Q(sqrt3), canonical
symbolic constants with Gamma normalization, and an mpmath-backed
arbitrary-precision float layer.

Rationals are plain ``fractions.Fraction`` throughout; every operation in
this module is pure and all values are immutable after construction.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, isqrt

import mpmath

DEFAULT_DPS = 200

RationalLike = "int | Fraction"


class GammaPoleError(ValueError):
    """Gamma evaluated at a non-positive integer."""


class SymbolicConstantError(ValueError):
    """Numeric evaluation requested for a symbolic-only constant."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


# ---------------------------------------------------------------------------
# arbitrary-precision float layer
# ---------------------------------------------------------------------------

def rational_to_float(q, dps: int = DEFAULT_DPS) -> mpmath.mpf:
    """Round an exact rational once to ``dps`` decimal digits."""
    q = _as_fraction(q)
    with mpmath.workdps(dps):
        return mpmath.mpf(q.numerator) / q.denominator


def const_pi(dps: int = DEFAULT_DPS) -> mpmath.mpf:
    with mpmath.workdps(dps):
        return +mpmath.pi


def const_sqrt2(dps: int = DEFAULT_DPS) -> mpmath.mpf:
    with mpmath.workdps(dps):
        return mpmath.sqrt(2)


def const_sqrt3(dps: int = DEFAULT_DPS) -> mpmath.mpf:
    with mpmath.workdps(dps):
        return mpmath.sqrt(3)


def const_sqrt6(dps: int = DEFAULT_DPS) -> mpmath.mpf:
    with mpmath.workdps(dps):
        return mpmath.sqrt(6)


# ---------------------------------------------------------------------------
# Q(sqrt3)
# ---------------------------------------------------------------------------

class QF3:
    """Element a + b*sqrt(3) of Q(sqrt3) with exact Fraction components."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0) -> None:
        object.__setattr__(self, "a", _as_fraction(a))
        object.__setattr__(self, "b", _as_fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("QF3 values are immutable")

    @classmethod
    def _coerce(cls, x) -> "QF3 | None":
        if isinstance(x, QF3):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QF3(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QF3(-self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QF3(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QF3(o.a - self.a, o.b - self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QF3(self.a * o.a + 3 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self) -> "QF3":
        return QF3(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 3 * self.b * self.b

    def inverse(self) -> "QF3":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt3)")
        return QF3(self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = QF3(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def to_float(self, dps: int = DEFAULT_DPS) -> mpmath.mpf:
        with mpmath.workdps(dps + 10):
            val = (mpmath.mpf(self.a.numerator) / self.a.denominator
                   + mpmath.sqrt(3) * self.b.numerator / self.b.denominator)
        with mpmath.workdps(dps):
            return +val

    def as_dict(self) -> dict:
        return {"a": str(self.a), "b": str(self.b)}

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}√3"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}√3"

    def __repr__(self) -> str:
        return f"QF3({self.a!r}, {self.b!r})"


SQRT3 = QF3(0, 1)


# ---------------------------------------------------------------------------
# canonical symbolic constants
# ---------------------------------------------------------------------------

class SymConst:
    """Canonical constant coeff * sqrt2^rad2 * sqrt3^rad3 * pi^(pi_half/2) / Gamma(gamma_arg).

    The constructor normalizes: arbitrary integer radical exponents are
    reduced to {0, 1}, and the Gamma argument is moved into (-1, 1] by the
    functional equation, with integer and half-integer Gammas absorbed into
    ``coeff`` and ``pi_half``.  Equality is field-by-field on the canonical
    form.
    """

    __slots__ = ("coeff", "rad2", "rad3", "pi_half", "gamma_arg")

    def __init__(self, coeff, rad2: int = 0, rad3: int = 0,
                 pi_half: int = 0, gamma_arg=None) -> None:
        coeff = _as_fraction(coeff)
        gamma_arg = None if gamma_arg is None else _as_fraction(gamma_arg)

        if gamma_arg is not None:
            if gamma_arg.denominator == 1 and gamma_arg <= 0:
                raise GammaPoleError(f"Gamma({gamma_arg}) is a pole")
            while gamma_arg > 1:
                coeff /= gamma_arg - 1
                gamma_arg -= 1
            while gamma_arg <= -1:
                coeff *= gamma_arg
                gamma_arg += 1
            if gamma_arg == 1:
                gamma_arg = None
            elif gamma_arg == Fraction(1, 2):
                pi_half -= 1
                gamma_arg = None
            elif gamma_arg == Fraction(-1, 2):
                coeff *= Fraction(-1, 2)
                pi_half -= 1
                gamma_arg = None

        q2, rad2 = divmod(rad2, 2)
        q3, rad3 = divmod(rad3, 2)
        coeff *= Fraction(2) ** q2 * Fraction(3) ** q3

        if coeff == 0:
            rad2 = rad3 = pi_half = 0
            gamma_arg = None

        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "rad2", rad2)
        object.__setattr__(self, "rad3", rad3)
        object.__setattr__(self, "pi_half", pi_half)
        object.__setattr__(self, "gamma_arg", gamma_arg)

    def __setattr__(self, name, value):
        raise AttributeError("SymConst values are immutable")

    def normalized(self) -> "SymConst":
        """Re-run normalization (idempotence check hook)."""
        return SymConst(self.coeff, self.rad2, self.rad3, self.pi_half,
                        self.gamma_arg)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymConst):
            return NotImplemented
        return (self.coeff == other.coeff and self.rad2 == other.rad2
                and self.rad3 == other.rad3 and self.pi_half == other.pi_half
                and self.gamma_arg == other.gamma_arg)

    def __hash__(self) -> int:
        return hash((self.coeff, self.rad2, self.rad3, self.pi_half,
                     self.gamma_arg))

    def to_float(self, dps: int = DEFAULT_DPS) -> mpmath.mpf:
        if self.gamma_arg is not None:
            raise SymbolicConstantError(
                f"symbolic-only constant: Gamma({self.gamma_arg}) is not "
                "evaluated numerically")
        with mpmath.workdps(dps + 10):
            val = mpmath.mpf(self.coeff.numerator) / self.coeff.denominator
            if self.rad2:
                val *= mpmath.sqrt(2)
            if self.rad3:
                val *= mpmath.sqrt(3)
            if self.pi_half:
                val *= mpmath.pi ** (mpmath.mpf(self.pi_half) / 2)
        with mpmath.workdps(dps):
            return +val

    def as_dict(self) -> dict:
        return {
            "coeff": str(self.coeff),
            "rad2": self.rad2,
            "rad3": self.rad3,
            "piHalf": self.pi_half,
            "gammaArg": None if self.gamma_arg is None else str(self.gamma_arg),
        }

    def _pi_tokens(self, half: int) -> str:
        whole, rem = divmod(half, 2)
        out = ""
        if whole == 1:
            out += "π"
        elif whole > 1:
            out += f"π^{whole}"
        if rem:
            out += "√π"
        return out

    def __str__(self) -> str:
        if self.coeff == 0:
            return "0"
        num = self.coeff.numerator
        den = self.coeff.denominator
        sign = "-" if num < 0 else ""
        num = abs(num)

        if self.rad2 and self.rad3:
            rad = "√6"
        elif self.rad2:
            rad = "√2"
        elif self.rad3:
            rad = "√3"
        else:
            rad = ""

        num_str = rad + (self._pi_tokens(self.pi_half) if self.pi_half > 0 else "")
        if num != 1 or not num_str:
            num_str = str(num) + num_str

        den_tokens = []
        if den != 1:
            den_tokens.append(str(den))
        if self.pi_half < 0:
            den_tokens.append(self._pi_tokens(-self.pi_half))
        if self.gamma_arg is not None:
            den_tokens.append(f"Γ({self.gamma_arg})")
        if not den_tokens:
            return sign + num_str
        den_str = "".join(den_tokens)
        if len(den_tokens) > 1:
            den_str = f"({den_str})"
        return f"{sign}{num_str}/{den_str}"

    def __repr__(self) -> str:
        return (f"SymConst({self.coeff!r}, rad2={self.rad2}, rad3={self.rad3},"
                f" pi_half={self.pi_half}, gamma_arg={self.gamma_arg!r})")


def gamma_half_integer(q) -> SymConst:
    """Exact Gamma(q) for q = m + 1/2 or a positive integer, as a SymConst.

    Half-integer values use Gamma(m + 1/2) = (2m)!/(4^m m!) * sqrt(pi);
    negative half-integers go through the functional equation.
    """
    q = _as_fraction(q)
    if q.denominator == 1:
        if q <= 0:
            raise GammaPoleError(f"Gamma({q}) is a pole")
        return SymConst(factorial(q.numerator - 1))
    if q.denominator != 2:
        raise ValueError(f"Gamma({q}) is not integer or half-integer")
    coeff = Fraction(1)
    while q > Fraction(1, 2):
        q -= 1
        coeff *= q
    while q < Fraction(1, 2):
        coeff /= q
        q += 1
    return SymConst(coeff, pi_half=1)


def sqrt_fraction(q) -> "Fraction | None":
    """Exact square root of a rational, or None if it is not a square."""
    q = _as_fraction(q)
    if q < 0:
        return None
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None
