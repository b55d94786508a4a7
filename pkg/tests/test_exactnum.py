import random
from fractions import Fraction

import mpmath
import pytest

from crosscap.exactnum import (QF3, SQRT3, GammaPoleError, SymbolicConstantError,
                               SymConst, const_sqrt2, const_sqrt3, const_sqrt6,
                               gamma_half_integer, rational_to_float)


class TestQF3:
    def test_conjugate_pair_norm(self):
        assert (QF3(1, 1)) * (QF3(1, -1)) == QF3(-2)

    def test_sqrt3_squares(self):
        assert (-SQRT3) * (-SQRT3) == QF3(3)

    def test_rationalization(self):
        assert 1 / QF3(0, 2) == QF3(0, Fraction(1, 6))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            QF3(1) / QF3(0)

    def test_div_roundtrip(self):
        rng = random.Random(7)
        for _ in range(200):
            x = QF3(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                    Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
            y = QF3(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                    Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
            if not y:
                continue
            assert (x / y) * y == x

    def test_pow(self):
        two_sqrt3 = QF3(0, 2)
        assert two_sqrt3 ** 2 == QF3(12)
        assert two_sqrt3 ** -1 == QF3(0, Fraction(1, 6))
        assert two_sqrt3 ** 0 == QF3(1)

    def test_mixed_scalars(self):
        assert QF3(0, 1) * Fraction(1, 2) == QF3(0, Fraction(1, 2))
        assert 2 + QF3(0, 1) == QF3(2, 1)

    def test_str(self):
        assert str(QF3(0, -1)) == "-1√3"
        assert str(QF3(Fraction(1, 4))) == "1/4"
        assert str(QF3(0, Fraction(5, 48))) == "5/48√3"
        assert str(QF3(Fraction(1, 2), Fraction(-5, 48))) == "1/2-5/48√3"

    def test_as_dict(self):
        assert QF3(Fraction(1, 4), Fraction(-2, 3)).as_dict() == {"a": "1/4", "b": "-2/3"}

    def test_float_value(self):
        val = QF3(1, 1).to_float(50)
        with mpmath.workdps(50):
            assert abs(val - (1 + mpmath.sqrt(3))) < mpmath.mpf(10) ** -48


class TestSymConst:
    def test_gamma_seven_halves_in_denominator(self):
        # Gamma(7/2) = (15/8) sqrt(pi)
        c = SymConst(1, gamma_arg=Fraction(7, 2))
        assert c == SymConst(Fraction(8, 15), pi_half=-1)
        assert c.coeff == Fraction(8, 15)
        assert c.pi_half == -1
        assert c.gamma_arg is None

    def test_t2_shape(self):
        # -u_2 / (2^0 Gamma(9/2)) with u_2 = -49/4608
        c = SymConst(Fraction(49, 4608), gamma_arg=Fraction(9, 2))
        assert c == SymConst(Fraction(7, 4320), pi_half=-1)

    def test_negative_quarter_kept_symbolic(self):
        c = SymConst(-2, rad2=1, rad3=1, gamma_arg=Fraction(-1, 4))
        assert (c.coeff, c.rad2, c.rad3, c.pi_half) == (Fraction(-2), 1, 1, 0)
        assert c.gamma_arg == Fraction(-1, 4)

    def test_radical_merging(self):
        # sqrt2^3 = 2 sqrt2, sqrt3^-1 = sqrt3/3
        c = SymConst(1, rad2=3, rad3=-1)
        assert (c.coeff, c.rad2, c.rad3) == (Fraction(2, 3), 1, 1)

    def test_normalize_idempotent(self):
        rng = random.Random(11)
        for _ in range(100):
            c = SymConst(Fraction(rng.randint(-40, 40) or 1, rng.randint(1, 40)),
                         rad2=rng.randint(-3, 3), rad3=rng.randint(-3, 3),
                         pi_half=rng.randint(-3, 3),
                         gamma_arg=Fraction(rng.randint(-30, 30) * 2 + 1, 4))
            assert c.normalized() == c

    @pytest.mark.parametrize("k", range(26))
    def test_half_integer_gamma_closed_form(self, k):
        # Gamma(k + 1/2) = (2k-1)!! sqrt(pi) / 2^k, checked up to 51/2
        val = gamma_half_integer(Fraction(2 * k + 1, 2))
        dfact = 1
        for odd in range(1, 2 * k, 2):
            dfact *= odd
        assert val == SymConst(Fraction(dfact, 2 ** k), pi_half=1)

    def test_gamma_pole(self):
        with pytest.raises(GammaPoleError):
            SymConst(1, gamma_arg=0)
        with pytest.raises(GammaPoleError):
            SymConst(1, gamma_arg=-3)
        with pytest.raises(GammaPoleError):
            gamma_half_integer(0)

    def test_to_float_plain(self):
        val = SymConst(Fraction(1, 24)).to_float(50)
        assert mpmath.nstr(val, 10) == "0.04166666667"

    def test_to_float_with_pi(self):
        # 7/(4320 sqrt(pi)); reference digits from an independent evaluation
        # of (49/4608)/Gamma(9/2)
        c = SymConst(Fraction(7, 4320), pi_half=-1)
        val = c.to_float(30)
        with mpmath.workdps(40):
            ref = mpmath.mpf("0.0009141960844523828723695731853994")
            assert abs(val - ref) < mpmath.mpf("1e-32")

    def test_to_float_symbolic_only(self):
        c = SymConst(-2, rad2=1, rad3=1, gamma_arg=Fraction(-1, 4))
        with pytest.raises(SymbolicConstantError):
            c.to_float(30)

    def test_str_forms(self):
        assert str(SymConst(Fraction(1, 24))) == "1/24"
        assert str(SymConst(Fraction(7, 4320), pi_half=-1)) == "7/(4320√π)"
        assert str(SymConst(2, pi_half=-1)) == "2/√π"
        assert str(SymConst(-2, rad2=1, rad3=1, gamma_arg=Fraction(-1, 4))) \
            == "-2√6/Γ(-1/4)"

    def test_as_dict(self):
        d = SymConst(Fraction(-5, 3), rad2=1, rad3=1,
                     gamma_arg=Fraction(3, 4)).as_dict()
        assert d == {"coeff": "-5/3", "rad2": 1, "rad3": 1, "piHalf": 0,
                     "gammaArg": "3/4"}


class TestFloatLayer:
    @pytest.mark.parametrize("dps", [50, 100, 200])
    def test_sqrt2_times_sqrt3_is_sqrt6(self, dps):
        with mpmath.workdps(dps):
            lhs = const_sqrt2(dps) * const_sqrt3(dps)
            assert abs(lhs - const_sqrt6(dps)) < mpmath.mpf(10) ** (2 - dps)

    def test_rational_rounding(self):
        big = Fraction(10 ** 80 + 1, 3)
        val = rational_to_float(big, 40)
        with mpmath.workdps(45):
            ref = mpmath.mpf(10 ** 80 + 1) / 3
            assert abs(val / ref - 1) < mpmath.mpf(10) ** -39
