"""The two core coefficient sequences and the map-counting constants.

``u_seq`` solves  u_n = (25(n-1)^2 - 1)/48 * u_{n-1} - 1/2 sum u_k u_{n-k}
with u_0 = 1; ``v_seq`` solves the coupled first-order recursion

    v_n = (1/(2*sqrt3)) * (-3 u_{n/2} + (5n-6)/2 * v_{n-1} + sum v_k v_{n-k})

with v_0 = -sqrt3 and u at a non-integer index read as 0.  From these the
orientable-surface constants t_g, the non-orientable constants p_g, and the
psi-class intersection numbers are exact one-liners.

Both builders cache: asking for N after M < N reuses the first M+1 entries.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .exactnum import QF3, SymConst

_HALF_INV_SQRT3 = QF3(0, 2).inverse()  # 1/(2*sqrt3)


def extend_u(values: list[Fraction], n: int) -> None:
    """Grow a u-recursion table in place through index n."""
    if not values:
        values.append(Fraction(1))
    for m in range(len(values), n + 1):
        acc = Fraction(0)
        for k in range(1, m):
            acc += values[k] * values[m - k]
        values.append(Fraction(25 * (m - 1) ** 2 - 1, 48) * values[m - 1]
                      - acc / 2)


def extend_v(values: list[QF3], u_values: list[Fraction], n: int) -> None:
    """Grow a v-recursion table in place through index n.

    ``u_values`` must cover indices up to n//2.
    """
    if not values:
        values.append(QF3(0, -1))
    for m in range(len(values), n + 1):
        acc = QF3(0)
        for k in range(1, m):
            acc = acc + values[k] * values[m - k]
        u_term = QF3(-3 * u_values[m // 2]) if m % 2 == 0 else QF3(0)
        values.append(_HALF_INV_SQRT3
                      * (u_term + Fraction(5 * m - 6, 2) * values[m - 1] + acc))


_U: list[Fraction] = []
_V: list[QF3] = []


def u_seq(n: int) -> list[Fraction]:
    """u_0 .. u_n, exact."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if len(_U) <= n:
        extend_u(_U, n)
    return _U[: n + 1]


def v_seq(n: int) -> list[QF3]:
    """v_0 .. v_n, exact elements of Q(sqrt3)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if len(_V) <= n:
        u_seq(n // 2)
        extend_v(_V, _U, n)
    return _V[: n + 1]


def t_of_g(g: int) -> SymConst:
    """Orientable-surface constant t_g = -u_g / (2^(g-2) Gamma((5g-1)/2))."""
    if g < 0:
        raise ValueError("g must be non-negative")
    u_g = u_seq(g)[g]
    return SymConst(-u_g * Fraction(2) ** (2 - g),
                    gamma_arg=Fraction(5 * g - 1, 2))


def p_of_g(twog: int) -> SymConst:
    """Non-orientable constant p_g for g = twog/2 (twog a positive integer).

    p_{(n+1)/2} = v_n / (2^((n-3)/2) Gamma((5n-1)/4)) with n = twog - 1.
    Quarter-integer Gamma arguments (half-integer g) stay symbolic.
    """
    if twog < 1:
        raise ValueError("twog must be positive")
    n = twog - 1
    v_n = v_seq(n)[n]
    if v_n.a != 0 and v_n.b != 0:
        raise ValueError(f"v_{n} breaks the parity structure")
    rational, rad3 = (v_n.a, 0) if v_n.b == 0 else (v_n.b, 1)
    return SymConst(rational, rad2=3 - n, rad3=rad3,
                    gamma_arg=Fraction(5 * n - 1, 4))


def intersection_number(g: int) -> Fraction:
    """<sigma_2^(3g-3)>_g = (3g-3)! * (-4^g / ((5g-5)(5g-3))) * u_g, g >= 2."""
    if g < 2:
        raise ValueError("defined for g >= 2 (the 5g-5 factor vanishes at g = 1)")
    u_g = u_seq(g)[g]
    return factorial(3 * g - 3) * Fraction(-(4 ** g), (5 * g - 5) * (5 * g - 3)) * u_g
