"""Richardson transforms of the Stokes-probing sequences.

The probe sequences are

    s_n = 2 pi (A/2)^n v_n / Gamma(n)          ->  sqrt6        (= -i S')
    r_n = n (s_n / sqrt6 - 1)                  ->  -1/5         (= nu_1 A / 2)

and the N-th Richardson transform is

    s^(N)_n = sum_{k=0}^{N} s_{n+k} (n+k)^N (-1)^(k+N) / (k! (N-k)!)

with binomial weights computed exactly and rounded once.  The back
propagating Stokes constant is estimated from the k = 2 row of the
multi-instanton table after subtracting the forward contribution.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import mpmath

from .exactnum import DEFAULT_DPS, QF3, rational_to_float
from .asymptotics import HALF_ACTION, AsymParams
from .sequences import v_seq
from .transseries import vk_table

_GUARD = 10


class PrecisionWarning(UserWarning):
    """Fewer than 30 guard digits left after the transform's cancellation."""


@dataclass(frozen=True)
class FloatSeq:
    """Indexed run of equal-precision values: entry i holds index start + i."""

    start: int
    values: tuple
    dps: int

    def __getitem__(self, n: int) -> mpmath.mpf:
        if n < self.start or n > self.last:
            raise IndexError(f"index {n} outside [{self.start}, {self.last}]")
        return self.values[n - self.start]

    @property
    def last(self) -> int:
        return self.start + len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class RichardsonResult:
    order: int
    index: int
    value: mpmath.mpf
    transformed: FloatSeq


def _s_exact_core(n_max: int) -> list:
    """(A/2)^n v_n / Gamma(n) for n = 1..n_max, exact in Q(sqrt3)."""
    v = v_seq(n_max)
    out = []
    power = QF3(1)
    fact = 1
    for n in range(1, n_max + 1):
        power = power * HALF_ACTION
        if n > 1:
            fact *= n - 1
        out.append(power * v[n] * Fraction(1, fact))
    return out


def s_seq(n_max: int, dps: int = DEFAULT_DPS) -> FloatSeq:
    """s_1 .. s_{n_max} at dps digits; the exact core feeds one rounding."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    core = _s_exact_core(n_max)
    vals = []
    with mpmath.workdps(dps + _GUARD):
        two_pi = 2 * mpmath.pi
        raw = [two_pi * c.to_float(dps + _GUARD) for c in core]
    with mpmath.workdps(dps):
        vals = tuple(+x for x in raw)
    return FloatSeq(1, vals, dps)


def r_seq(n_max: int, dps: int = DEFAULT_DPS) -> FloatSeq:
    """r_1 .. r_{n_max} at dps digits, r_n = n (s_n / sqrt6 - 1)."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    core = _s_exact_core(n_max)
    with mpmath.workdps(dps + _GUARD):
        pi_over_sqrt6 = 2 * mpmath.pi / mpmath.sqrt(6)
        raw = [n * (pi_over_sqrt6 * c.to_float(dps + _GUARD) - 1)
               for n, c in enumerate(core, start=1)]
    with mpmath.workdps(dps):
        vals = tuple(+x for x in raw)
    return FloatSeq(1, vals, dps)


def richardson(seq: FloatSeq, order: int, n: int) -> RichardsonResult:
    """Order-``order`` transform of ``seq`` evaluated at index ``n``.

    Returns the transformed prefix seq.start .. n as well; requires data
    through n + order.  Warns when the weight cancellation leaves fewer
    than 30 guard digits at precision seq.dps.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if n < seq.start or n + order > seq.last:
        raise ValueError(
            f"transform at n={n} needs entries {n}..{n + order}, "
            f"sequence covers {seq.start}..{seq.last}")
    kfact = [factorial(k) * factorial(order - k) for k in range(order + 1)]
    cancel = sum(Fraction((n + k) ** order, kf) for k, kf in enumerate(kfact))
    guard = seq.dps - len(str(int(cancel)))
    if guard < 30:
        warnings.warn(
            f"only {guard} guard digits at dps={seq.dps} for order "
            f"{order} at n={n}", PrecisionWarning, stacklevel=2)
    out = []
    with mpmath.workdps(seq.dps + _GUARD):
        for j in range(seq.start, n + 1):
            acc = mpmath.mpf(0)
            for k in range(order + 1):
                w = Fraction((j + k) ** order * (-1) ** (k + order), kfact[k])
                acc += rational_to_float(w, seq.dps + _GUARD) * seq[j + k]
            out.append(acc)
    with mpmath.workdps(seq.dps):
        vals = tuple(+x for x in out)
    transformed = FloatSeq(seq.start, vals, seq.dps)
    return RichardsonResult(order, n, transformed[n], transformed)


def matched_digits(value: mpmath.mpf, target: mpmath.mpf, dps: int) -> int:
    """Largest k with |value/target - 1| < 0.5 * 10^(1-k), capped at dps."""
    with mpmath.workdps(dps):
        rel = abs(mpmath.mpf(value) / mpmath.mpf(target) - 1)
        if rel == 0:
            return dps
        k = int(mpmath.floor(1 - mpmath.log10(2 * rel)))
    return max(0, min(k, dps))


@dataclass(frozen=True)
class StokesEstimate:
    value: mpmath.mpf
    target: mpmath.mpf
    digits: int
    transform: RichardsonResult


def _back_sequence(n_max: int, order: int, dps: int) -> FloatSeq:
    """(-1)^n w_n with w_n = 2 pi lam^n v_{n,2}/Gamma(n) minus the forward
    (S') part of its expansion, truncated at min(n//2, table width)."""
    top = n_max + order
    table = vk_table(top, 3)
    row2, row3 = table.row(2), table.row(3)
    width = top // 2
    lam_pow_3 = []  # v_{l,3} lam^l, exact
    power = QF3(1)
    for l in range(width + 1):
        lam_pow_3.append(row3[l] * power)
        power = power * HALF_ACTION
    vals = []
    with mpmath.workdps(dps + _GUARD):
        two_pi = 2 * mpmath.pi
        three_sqrt6 = 3 * mpmath.sqrt(6)
        power = QF3(1)
        fact = 1
        for n in range(1, top + 1):
            power = power * HALF_ACTION
            if n > 1:
                fact *= n - 1
            lead = two_pi * (power * row2[n] * Fraction(1, fact)).to_float(dps + _GUARD)
            cut = min(n // 2, width, n - 1)
            brace = QF3(0)
            prod = Fraction(1)
            for l in range(cut + 1):
                if l:
                    prod *= n - l
                brace = brace + lam_pow_3[l] / prod
            w = lead - three_sqrt6 * brace.to_float(dps + _GUARD)
            vals.append(w if n % 2 == 0 else -w)
    with mpmath.workdps(dps):
        vals = tuple(+x for x in vals)
    return FloatSeq(1, vals, dps)


def estimate_stokes(which: str, n_max: int = 250, order: int = 30,
                    dps: int = DEFAULT_DPS) -> StokesEstimate:
    """Estimate a Stokes constant by Richardson extrapolation.

    ``which`` is "sprime" (limit -i S' = sqrt6, from the s-sequence) or
    "sminus1" (limit -i S_-1 = -sqrt6/12, from the k = 2 table row).
    """
    if which == "sprime":
        seq = s_seq(n_max + order, dps)
        with mpmath.workdps(dps):
            target = mpmath.sqrt(6)
    elif which == "sminus1":
        seq = _back_sequence(n_max, order, dps)
        with mpmath.workdps(dps):
            target = -mpmath.sqrt(6) / 12
    else:
        raise ValueError("which must be 'sprime' or 'sminus1'")
    result = richardson(seq, order, n_max)
    return StokesEstimate(result.value, target,
                          matched_digits(result.value, target, dps), result)


def convergence_rows(which: str, n_max: int = 250, orders: tuple = (0, 1, 5),
                     dps: int = DEFAULT_DPS) -> list[tuple]:
    """(n, transform values per order) rows behind the convergence plots."""
    builder = {"s": s_seq, "r": r_seq}[which]
    seq = builder(n_max + max(orders), dps)
    columns = [richardson(seq, N, n_max).transformed for N in orders]
    return [(n, *(col[n] for col in columns)) for n in range(1, n_max + 1)]
