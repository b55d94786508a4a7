from fractions import Fraction

import pytest

from crosscap.asymptotics import INSTANTON_ACTION
from crosscap.exactnum import QF3, SQRT3
from crosscap.sequences import u_seq, v_seq
from crosscap.transseries import (TransseriesError, mu_seq, nu_seq, seed_v0k,
                                  vk_table, vpm_series)


def over_sqrt3(num, den):
    """num / (den sqrt3) as an exact QF3 element."""
    return QF3(0, Fraction(num, 3 * den))


class TestMuSeq:
    def test_first_values(self):
        mu = mu_seq(1)
        assert mu[0] == QF3(1)
        assert mu[1] == over_sqrt3(-5, 64)          # -(5/192) sqrt3

    def test_mu1_times_action(self):
        assert mu_seq(1)[1] * INSTANTON_ACTION == QF3(Fraction(-1, 8))

    def test_linearized_u_equation(self):
        # coefficient expansion of u1'' = 12 u u1 with the exponential
        # prefactor differentiated through; independent of the recursion
        L = 40
        mu = mu_seq(L)
        u = u_seq((L + 2) // 2)

        def u_at(j):  # u at half-index j/2, zero unless j is even
            return u[j // 2] if j % 2 == 0 else Fraction(0)

        factor = INSTANTON_ACTION * Fraction(25, 8)
        for m in range(1, L + 1):
            lhs = factor * (m - 1) * mu[m - 1]
            if m >= 2:
                lhs = lhs + (Fraction(19, 8) - Fraction(5 * m, 4)) \
                    * (Fraction(11, 8) - Fraction(5 * m, 4)) * mu[m - 2]
            rhs = QF3(0)
            for n in range(m):
                rhs = rhs + 12 * u_at(m - n) * mu[n]
            assert lhs == rhs, m


class TestNuSeq:
    def test_first_values(self):
        nu = nu_seq(2)
        assert nu[0] == QF3(1)
        assert nu[1] == over_sqrt3(-1, 4)           # -1/(4 sqrt3)
        assert nu[2] == QF3(Fraction(-3, 32))

    def test_half_nu1_action_is_minus_one_fifth(self):
        assert nu_seq(1)[1] * INSTANTON_ACTION * Fraction(1, 2) \
            == QF3(Fraction(-1, 5))

    def test_linearized_v_equation(self):
        # v1' = v v1 expanded with the exponential prefactor: for every m,
        # [m>=1] (6-5m)/4 nu_{m-1} - sqrt3 nu_m = sum_{k<=m} v_k nu_{m-k}
        L = 40
        nu = nu_seq(L)
        v = v_seq(L)
        for m in range(L + 1):
            lhs = -SQRT3 * nu[m]
            if m >= 1:
                lhs = lhs + Fraction(6 - 5 * m, 4) * nu[m - 1]
            rhs = QF3(0)
            for k in range(m + 1):
                rhs = rhs + v[k] * nu[m - k]
            assert lhs == rhs, m


class TestVkTable:
    def test_seed_examples(self):
        assert seed_v0k(2) == over_sqrt3(-1, 2)     # -(1/6) sqrt3
        assert seed_v0k(5) == QF3(Fraction(1, 144))

    def test_row_one_is_nu(self):
        table = vk_table(25, 3)
        assert table.row(1) == nu_seq(25)

    def test_row_zero_is_v(self):
        table = vk_table(25, 3)
        assert table.row(0) == v_seq(25)

    def test_ode_identity_rows(self):
        # rows k >= 2 must satisfy, at every order m,
        # [m>=1](6-5m)/4 v_{m-1,k} - sqrt3 k v_{m,k}
        #   = sum_j v_j v_{m-j,k} + 1/2 sum_{i=1}^{k-1} sum_l v_{l,i} v_{m-l,k-i}
        table = vk_table(15, 4)
        v = v_seq(15)
        for k in range(2, 5):
            for m in range(16):
                lhs = -SQRT3 * k * table.value(m, k)
                if m >= 1:
                    lhs = lhs + Fraction(6 - 5 * m, 4) * table.value(m - 1, k)
                rhs = QF3(0)
                for j in range(m + 1):
                    rhs = rhs + v[j] * table.value(m - j, k)
                dbl = QF3(0)
                for i in range(1, k):
                    for l in range(m + 1):
                        dbl = dbl + table.value(l, i) * table.value(m - l, k - i)
                rhs = rhs + dbl * Fraction(1, 2)
                assert lhs == rhs, (k, m)

    def test_cache_extension_consistent(self):
        small = vk_table(8, 3)
        large = vk_table(16, 3)
        for k in range(4):
            assert large.row(k)[:9] == small.row(k)


class TestVpm:
    # known closed coefficients through x^-5
    EXPECTED_PLUS = [over_sqrt3(1, 2), QF3(0), over_sqrt3(5, 192),
                     QF3(Fraction(-25, 1152)), over_sqrt3(3149, 36864),
                     QF3(Fraction(-15995, 110592))]
    EXPECTED_MINUS = [QF3(1), over_sqrt3(-1, 4), QF3(Fraction(-1, 24)),
                      over_sqrt3(-1459, 11520), QF3(Fraction(-5429, 34560)),
                      over_sqrt3(-114343, 138240)]

    def test_known_coefficients(self):
        plus, minus = vpm_series(5)
        for e in range(6):
            assert plus.coefficient(e) == self.EXPECTED_PLUS[e], e
            assert minus.coefficient(e) == self.EXPECTED_MINUS[e], e

    def test_seed_consistency(self):
        plus, minus = vpm_series(1)
        assert plus.coefficient(0) == over_sqrt3(1, 2)
        assert minus.coefficient(0) == QF3(1)

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_factorization_identity(self, k):
        # vhat_k = (-1)^(k-1) v_plus^(k-1) v_minus^k (1 - v_plus vhat_0)
        order = 10
        plus, minus = vpm_series(order)
        table = vk_table(order, k)
        v = v_seq(order)

        def conv(xs, ys, m):
            return sum((xs[i] * ys[m - i] for i in range(m + 1)), QF3(0))

        def series_pow(xs, p):
            out = [QF3(1)] + [QF3(0)] * order
            for _ in range(p):
                out = [conv(out, xs, m) for m in range(order + 1)]
            return out

        p = [plus.coefficient(e) for e in range(order + 1)]
        m_ = [minus.coefficient(e) for e in range(order + 1)]
        v0 = [v[n] if n >= 2 else QF3(0) for n in range(order + 1)]
        pv0 = [conv(p, v0, j) for j in range(order + 1)]
        g = [QF3(1) - pv0[0]] + [-pv0[j] for j in range(1, order + 1)]
        rhs = [conv(series_pow(p, k - 1), series_pow(m_, k), j)
               for j in range(order + 1)]
        rhs = [conv(rhs, g, j) * (-1) ** (k - 1) for j in range(order + 1)]
        for n in range(order + 1):
            assert table.value(n, k) == rhs[n], n
