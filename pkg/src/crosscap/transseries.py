"""One-instanton coefficients, the multi-instanton table, and its
two-series factorization.

``mu_seq`` and ``nu_seq`` solve the linearized recursions attached to the
u- and v-sequences.  ``vk_table`` holds the full table v_{n,k}: row 0 is
the v-sequence, row 1 is nu (normalization v_{0,1} = 1), and rows k >= 2
follow

    v_{n+1,k} = -(1/(sqrt3 (k-1))) * { 5n/4 v_{n,k}
                + sum_{l=2}^{n+1} v_{n+1-l,k} v_l
                + 1/2 sum_{i=1}^{k-1} sum_{l=0}^{n+1} v_{l,i} v_{n+1-l,k-i} }

seeded by the closed form v_{0,k} = (-1)^(k-1) (2 sqrt3)^(1-k).

``vpm_series`` recovers the two formal power series v_plus, v_minus with

    vhat_k = (-1)^(k-1) v_plus^(k-1) v_minus^k (1 - v_plus vhat_0),  k >= 1,

where vhat_0 = sum_{n>=2} v_n x^-n and vhat_k = sum_{n>=0} v_{n,k} x^-n,
by solving the k = 1 and k = 2 identities order by order.
"""

from __future__ import annotations

from fractions import Fraction

from .exactnum import QF3
from .sequences import u_seq, v_seq
from .series import Series

_TWO_SQRT3 = QF3(0, 2)
_QZERO = QF3(0)


class TransseriesError(ValueError):
    """Order-by-order solve hit an unsolvable order."""

    def __init__(self, order: int, message: str) -> None:
        super().__init__(f"order {order}: {message}")
        self.order = order


def extend_mu(values: list[QF3], u_values: list[Fraction], n: int) -> None:
    """Grow a mu-recursion table in place through index n.

    ``u_values`` must cover indices up to (n+1)//2.
    """
    if not values:
        values.append(QF3(1))
    for l in range(len(values), n + 1):
        acc = _QZERO
        for k in range(l):
            idx2 = l - k + 1  # twice the u-index; odd means u vanishes
            if idx2 % 2 == 0:
                acc = acc + values[k] * u_values[idx2 // 2]
        inner = (Fraction(192, 25) * acc
                 - (Fraction(l) - Fraction(9, 10))
                 * (Fraction(l) - Fraction(1, 10)) * values[l - 1])
        values.append(QF3(0, 16 * l).inverse() * 5 * inner)


def extend_nu(values: list[QF3], v_values: list[QF3], n: int) -> None:
    """Grow a nu-recursion table in place through index n.

    ``v_values`` must cover indices up to n+1.
    """
    if not values:
        values.append(QF3(1))
    for m in range(len(values), n + 1):
        acc = _QZERO
        for k in range(m):
            acc = acc + v_values[m + 1 - k] * values[k]
        values.append(Fraction(-4, 5 * m) * acc)


_MU: list[QF3] = []
_NU: list[QF3] = []


def mu_seq(n: int) -> list[QF3]:
    """mu_0 .. mu_n, the u-sector one-instanton coefficients."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if len(_MU) <= n:
        extend_mu(_MU, u_seq((n + 1) // 2), n)
    return _MU[: n + 1]


def nu_seq(n: int) -> list[QF3]:
    """nu_0 .. nu_n, the v-sector one-instanton coefficients."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if len(_NU) <= n:
        extend_nu(_NU, v_seq(n + 1), n)
    return _NU[: n + 1]


def seed_v0k(k: int) -> QF3:
    """Closed form v_{0,k} = (-1)^(k-1) (2 sqrt3)^(1-k), k >= 1."""
    if k < 1:
        raise ValueError("k must be positive")
    return (_TWO_SQRT3 ** (1 - k)) * ((-1) ** (k - 1))


class VkTable:
    """Immutable view of the table v_{n,k}, 0 <= n <= max_index, 0 <= k <= max_sector."""

    def __init__(self, rows: list[list[QF3]]) -> None:
        self._rows = rows

    @property
    def max_index(self) -> int:
        return len(self._rows[0]) - 1

    @property
    def max_sector(self) -> int:
        return len(self._rows) - 1

    def value(self, n: int, k: int) -> QF3:
        return self._rows[k][n]

    def row(self, k: int) -> list[QF3]:
        return list(self._rows[k])


_VK_EXTRA: list[list[QF3]] = []  # rows k >= 2, entry 0 is row k=2


def _extend_vk_row(k: int, row: list[QF3], v: list[QF3],
                   lower: list[list[QF3]], n_max: int) -> None:
    if not row:
        row.append(seed_v0k(k))
    scale = QF3(0, -(k - 1)).inverse()  # -1/(sqrt3 (k-1))
    for n in range(len(row) - 1, n_max):
        acc = Fraction(5 * n, 4) * row[n]
        for l in range(2, n + 2):
            acc = acc + row[n + 1 - l] * v[l]
        dbl = _QZERO
        for i in range(1, k):
            left, right = lower[i], lower[k - i]
            for l in range(n + 2):
                dbl = dbl + left[l] * right[n + 1 - l]
        row.append(scale * (acc + dbl * Fraction(1, 2)))


def vk_table(n_max: int, k_max: int) -> VkTable:
    """Exact table of v_{n,k} for n <= n_max, k <= k_max."""
    if n_max < 0 or k_max < 0:
        raise ValueError("table bounds must be non-negative")
    v = v_seq(n_max)
    rows: list[list[QF3]] = [v]
    if k_max >= 1:
        rows.append(nu_seq(n_max))
    for k in range(2, k_max + 1):
        if len(_VK_EXTRA) < k - 1:
            _VK_EXTRA.append([])
        row = _VK_EXTRA[k - 2]
        if len(row) <= n_max:
            _extend_vk_row(k, row, v, rows, n_max)
        rows.append(row[: n_max + 1])
    return VkTable(rows)


def vpm_series(order: int) -> tuple[Series, Series]:
    """The factorization pair (v_plus, v_minus) through x^-order.

    Solved order by order from the k = 1 and k = 2 identities; the k >= 3
    rows are then determined and serve as independent checks.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    table = vk_table(order, 2)
    v = v_seq(order)
    nu = table.row(1)
    row2 = table.row(2)
    if not nu[0]:
        raise TransseriesError(0, "v_{0,1} vanishes; normalization broken")

    v0 = [v[n] if n >= 2 else _QZERO for n in range(order + 1)]
    plus: list[QF3] = []
    minus: list[QF3] = []

    def conv(xs, ys, m):
        acc = _QZERO
        for i in range(m + 1):
            acc = acc + xs[i] * ys[m - i]
        return acc

    for n in range(order + 1):
        # (v_plus * vhat_0)_j needs plus[0 .. j-2] only
        pv0 = [_QZERO if j < 2 else conv(plus + [_QZERO, _QZERO], v0, j)
               for j in range(n + 1)]
        m_n = nu[n]
        for j in range(2, n + 1):
            m_n = m_n + pv0[j] * minus[n - j]
        minus.append(m_n)

        p_tmp = plus + [_QZERO]
        m2 = [conv(minus, minus, j) for j in range(n + 1)]
        g = [QF3(1) if j == 0 else -(_QZERO if j < 2 else conv(p_tmp, v0, j))
             for j in range(n + 1)]
        m2g = [conv(m2, g, j) for j in range(n + 1)]
        if not m2g[0]:
            raise TransseriesError(n, "leading coefficient of v_minus^2 vanished")
        rest = conv(p_tmp, m2g, n)
        plus.append((-row2[n] - rest) / m2g[0])

    zero = _QZERO
    return (Series(plus, 0, zero), Series(minus, 0, zero))
