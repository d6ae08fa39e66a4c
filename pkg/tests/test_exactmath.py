import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qfidelity.exactmath import (
    LN2,
    LogReal,
    binomial,
    entropy_H,
    entropy_H2,
    entropy_T,
    gaussian_binomial,
    inverse_entropy,
    krawtchouk,
    lr_add,
    lr_from_count,
    lr_from_ratio,
    lr_mul,
    lr_sum,
)


def pascal(n, m):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[m] if 0 <= m <= n else 0


def subspace_count(n, k):
    """Distinct k-dimensional subspaces of GF(2)^n, by spanning every k-subset."""
    seen = set()
    for gens in itertools.combinations(range(1, 2**n), k):
        words = {0}
        for g in gens:
            words |= {w ^ g for w in words}
        if len(words) == 2**k:
            seen.add(frozenset(words))
    return len(seen)


class TestBinomial:
    def test_small(self):
        assert binomial(5, 2) == 10
        assert all(binomial(n, 0) == 1 for n in range(20))

    def test_pascal_cross_check(self):
        assert binomial(50, 4) == pascal(50, 4) == 230300

    def test_out_of_range_is_zero(self):
        assert binomial(3, 4) == 0
        assert binomial(3, -1) == 0


class TestGaussianBinomial:
    def test_examples(self):
        assert gaussian_binomial(7, 0) == 1
        assert gaussian_binomial(3, 1) == 7
        assert gaussian_binomial(4, 2) == 35

    @pytest.mark.parametrize("n", range(0, 6))
    def test_matches_subspace_enumeration(self, n):
        for k in range(n + 1):
            assert gaussian_binomial(n, k) == subspace_count(n, k)

    def test_symmetry(self):
        for n in range(21):
            for k in range(n + 1):
                assert gaussian_binomial(n, k) == gaussian_binomial(n, n - k)

    def test_negative_arguments_vanish(self):
        assert gaussian_binomial(-1, 0) == 0
        assert gaussian_binomial(3, -1) == 0
        assert gaussian_binomial(3, 4) == 0


class TestKrawtchouk:
    def test_examples(self):
        assert all(krawtchouk(4, n, 0, i) == 1 for n in range(6) for i in range(n + 1))
        assert krawtchouk(4, 3, 1, 1) == 5
        assert krawtchouk(2, 2, 1, 1) == 0

    @pytest.mark.parametrize("n", range(0, 13))
    def test_orthogonality(self, n):
        for r in range(n + 1):
            for s in range(n + 1):
                total = sum(binomial(n, j) * 3**j * krawtchouk(4, n, r, j) * krawtchouk(4, n, s, j) for j in range(n + 1))
                assert total == (4**n * binomial(n, r) * 3**r if r == s else 0)

    @pytest.mark.parametrize("n", range(0, 13))
    def test_generating_function_sums(self, n):
        for r in range(n + 1):
            assert sum(binomial(n, j) * krawtchouk(4, n, r, j) for j in range(n + 1)) == 2**n * binomial(n, r)
            assert sum(binomial(n, j) * 3**j * krawtchouk(4, n, r, j) for j in range(n + 1)) == (4**n if r == 0 else 0)


class TestEntropy:
    def test_examples(self):
        assert entropy_H(0) == 0
        assert entropy_H(0.75) == pytest.approx(1.0, abs=1e-15)
        assert entropy_H(0.01) == pytest.approx(0.048322, abs=1e-6)

    def test_related_forms(self):
        x, y = 0.2, 0.3
        expected = x * math.log(3, 4) - x * math.log(y, 4) - (1 - x) * math.log(1 - y, 4)
        assert entropy_T(x, y) == pytest.approx(expected, rel=1e-14)
        assert entropy_H2(0.5) == pytest.approx(1.0, abs=1e-15)
        assert entropy_T(0.3, 0.3) == pytest.approx(entropy_H(0.3), rel=1e-15)

    def test_domain(self):
        with pytest.raises(ValueError):
            entropy_H(1.5)
        with pytest.raises(ValueError):
            entropy_H(-0.1)

    def test_inverse_examples(self):
        assert inverse_entropy("H", 1) == pytest.approx(0.75, abs=1e-12)
        assert inverse_entropy("H", 0) == 0
        assert inverse_entropy("H2", 0.25) == pytest.approx(0.0417, abs=5e-4)
        assert entropy_H2(inverse_entropy("H2", 0.25)) == pytest.approx(0.25, abs=1e-10)

    def test_inverse_range(self):
        with pytest.raises(ValueError):
            inverse_entropy("H", 1.2)
        with pytest.raises(ValueError):
            inverse_entropy("H2", 1.1)

    def test_round_trip_grid(self):
        for i in range(100):
            x = 0.75 * (i + 0.5) / 100
            assert inverse_entropy("H", entropy_H(x)) == pytest.approx(x, abs=1e-10)
            x2 = 0.5 * (i + 0.5) / 100
            assert inverse_entropy("H2", entropy_H2(x2)) == pytest.approx(x2, abs=1e-10)


class TestLogReal:
    def test_additive_identity(self):
        x = LogReal.from_float(-2.5)
        assert lr_add(x, LogReal.zero()) == x
        assert lr_add(LogReal.zero(), x) == x

    def test_power_of_two(self):
        assert lr_from_count(2**100).log_magnitude == pytest.approx(100 * LN2, abs=1e-12)

    def test_large_count_relative_error(self):
        x = 3**5000 + 17
        expected = 5000 * math.log(3)
        assert lr_from_count(x).log_magnitude == pytest.approx(expected, rel=1e-14)

    def test_probability_product_at_large_n(self):
        n, m, p = 3000, 1500, 0.01
        v = lr_mul(LogReal(1, m * math.log(p / 3)), LogReal(1, (n - m) * math.log1p(-p)))
        assert v.sign == 1 and math.isfinite(v.log_magnitude)
        # small-n agreement with exact rationals
        n, m = 12, 5
        pf = Fraction(1, 100)
        exact = (pf / 3) ** m * (1 - pf) ** (n - m)
        lr = lr_mul(LogReal(1, m * math.log(p / 3)), LogReal(1, (n - m) * math.log1p(-p)))
        assert math.exp(lr.log_magnitude) == pytest.approx(float(exact), rel=1e-13)

    def test_signed_cancellation(self):
        a, b = LogReal.from_float(5.0), LogReal.from_float(-3.0)
        assert float(lr_add(a, b)) == pytest.approx(2.0, rel=1e-15)
        assert lr_add(a, -a).is_zero()

    def test_ratio(self):
        assert float(lr_from_ratio(Fraction(-3, 8))) == pytest.approx(-0.375, rel=1e-15)
        assert lr_from_ratio(0).is_zero()

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.floats(min_value=-1e6, max_value=1e6, allow_nan=False), min_size=1, max_size=8))
    def test_sum_matches_float_sum(self, xs):
        total = float(lr_sum(LogReal.from_float(x) for x in xs))
        assert total == pytest.approx(math.fsum(xs), rel=1e-9, abs=1e-6 * max(1.0, max(abs(x) for x in xs)))

    @given(st.floats(min_value=-1e3, max_value=1e3, allow_nan=False), st.floats(min_value=-1e3, max_value=1e3, allow_nan=False))
    def test_mul_matches_float(self, x, y):
        assert float(lr_mul(LogReal.from_float(x), LogReal.from_float(y))) == pytest.approx(x * y, rel=1e-12, abs=1e-300)
