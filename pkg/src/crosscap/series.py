"""Truncated Laurent/power series over an exact coefficient field.

Coefficients are ``fractions.Fraction`` or :class:`~crosscap.exactnum.QF3`
(anything with exact +, -, *, / and a zero test works).  A series knows its
coefficients for exponents in ``[low, order]`` and tracks the truncation
order pessimistically: addition keeps ``min`` of the known orders, and the
product of f and g is known through ``min(f.order + g.low, g.order + f.low)``.
"""

from __future__ import annotations

from fractions import Fraction

from .exactnum import QF3, sqrt_fraction


class SeriesError(ValueError):
    pass


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, QF3))


def _field_inverse(x):
    if isinstance(x, QF3):
        return x.inverse()
    return 1 / Fraction(x)


class Series:
    """Exact series  sum_{e=low}^{order} c_e * t^e  with truncation tracking."""

    __slots__ = ("low", "coeffs", "zero")

    def __init__(self, coeffs, low: int = 0, zero=Fraction(0)) -> None:
        coeffs = list(coeffs)
        # strip known-zero leading terms so the leading coefficient is nonzero
        while coeffs and not coeffs[0]:
            coeffs.pop(0)
            low += 1
        self.low = low
        self.coeffs = coeffs
        self.zero = zero

    @classmethod
    def from_terms(cls, terms: dict, order: int, zero=Fraction(0)) -> "Series":
        """Exact polynomial given by ``terms``, declared known through ``order``."""
        if terms and order < max(terms):
            raise SeriesError("declared order below a given term")
        if not terms:
            return cls([], order + 1, zero)
        low = min(terms)
        coeffs = [terms.get(e, zero) for e in range(low, order + 1)]
        return cls(coeffs, low, zero)

    @property
    def order(self) -> int:
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, e: int):
        """Coefficient of t^e; raises beyond the known order."""
        if e > self.order:
            raise SeriesError(f"coefficient {e} beyond truncation order {self.order}")
        if e < self.low:
            return self.zero
        return self.coeffs[e - self.low]

    def coefficients(self, lo: int, hi: int) -> list:
        return [self.coefficient(e) for e in range(lo, hi + 1)]

    def truncate(self, order: int) -> "Series":
        if order >= self.order:
            return self
        return Series(self.coeffs[: order - self.low + 1], self.low, self.zero)

    def shift(self, k: int) -> "Series":
        """Multiply by t^k."""
        return Series(self.coeffs, self.low + k, self.zero)

    def _scalar_series(self, c) -> "Series":
        return Series.from_terms({0: c}, self.order, self.zero)

    def __add__(self, other):
        if _is_scalar(other):
            other = self._scalar_series(other)
        if not isinstance(other, Series):
            return NotImplemented
        lo = min(self.low, other.low)
        hi = min(self.order, other.order)
        if lo > hi:
            return Series([], hi + 1, self.zero)
        coeffs = [self.coefficient(e) + other.coefficient(e) for e in range(lo, hi + 1)]
        return Series(coeffs, lo, self.zero)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.low, self.zero)

    def __sub__(self, other):
        if _is_scalar(other):
            other = self._scalar_series(other)
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            return Series([c * other for c in self.coeffs], self.low, self.zero)
        if not isinstance(other, Series):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Series([], min(self.order, other.order) + 1, self.zero)
        low = self.low + other.low
        order = min(self.order + other.low, other.order + self.low)
        coeffs = []
        for e in range(low, order + 1):
            acc = self.zero
            for i in range(self.low, min(self.order, e - other.low) + 1):
                acc = acc + self.coeffs[i - self.low] * other.coefficient(e - i)
            coeffs.append(acc)
        return Series(coeffs, low, self.zero)

    __rmul__ = __mul__

    def inverse(self) -> "Series":
        if self.is_zero():
            raise ZeroDivisionError("inverse of a zero series")
        inv_lead = _field_inverse(self.coeffs[0])
        out = [inv_lead]
        for m in range(1, len(self.coeffs)):
            acc = self.zero
            for i in range(1, m + 1):
                acc = acc + self.coeffs[i] * out[m - i]
            out.append(-inv_lead * acc)
        return Series(out, -self.low, self.zero)

    def __truediv__(self, other):
        if _is_scalar(other):
            return self * _field_inverse(other)
        if not isinstance(other, Series):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def sqrt(self) -> "Series":
        """Square root, branch with positive leading coefficient.

        Requires an even leading exponent and a leading coefficient that is
        the square of a rational.
        """
        if self.is_zero():
            raise SeriesError("sqrt of a zero-to-order series")
        if self.low % 2:
            raise SeriesError("sqrt needs an even leading exponent")
        lead = self.coeffs[0]
        if isinstance(lead, QF3):
            root = sqrt_fraction(lead.a) if lead.b == 0 else None
            root = None if root is None else QF3(root)
        else:
            root = sqrt_fraction(lead)
        if not root:
            raise SeriesError("leading coefficient is not a rational square")
        half = _field_inverse(root + root)
        out = [root]
        for m in range(1, len(self.coeffs)):
            acc = self.coeffs[m]
            for i in range(1, m):
                acc = acc - out[i] * out[m - i]
            out.append(half * acc)
        return Series(out, self.low // 2, self.zero)

    def __eq__(self, other) -> bool:
        """Coefficient equality over the common known exponent range."""
        if not isinstance(other, Series):
            return NotImplemented
        lo = min(self.low, other.low)
        hi = min(self.order, other.order)
        return all(self.coefficient(e) == other.coefficient(e) for e in range(lo, hi + 1))

    def __str__(self) -> str:
        if self.is_zero():
            return f"O(t^{self.order + 1})"
        parts = [f"({c})t^{e}" for e, c in enumerate(self.coeffs, start=self.low) if c]
        return " + ".join(parts) + f" + O(t^{self.order + 1})"

    def __repr__(self) -> str:
        return f"Series({self.coeffs!r}, low={self.low})"
