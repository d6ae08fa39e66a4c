import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qfidelity.codes import EnumeratorPair, WeightDistribution, enumerator_pair, exact_infidelity_bound, five_qubit_code
from qfidelity.ensembles import EnsembleSpec, average_enumerators, expurgate
from qfidelity.exactmath import binomial, inverse_entropy
from qfidelity.finite_bounds import (
    DifferenceSource,
    NProfile,
    css_pairing,
    css_variant,
    fidelity_bound,
    g_count,
    gv_distance_css,
    gv_distance_stabilizer,
    max_rate_for_target,
    n_count,
    n_count_direct,
    reform_bound,
)
from qfidelity.oracle import brute_force_g

F = Fraction


class TestGCount:
    def test_examples(self):
        assert g_count(3, 1, 2) == 2
        assert g_count(2, 1, 1) == 3
        assert all(g_count(6, m, w) == 0 for m in range(4) for w in range(2 * m + 1, 7))

    def test_matches_brute_force(self):
        for n in range(1, 5):
            for m in range(n + 1):
                for w in range(n + 1):
                    assert g_count(n, m, w) == brute_force_g(n, m, w)

    def test_zero_word(self):
        # every weight-m vector is as close to 0 as to itself
        assert all(g_count(7, m, 0) == binomial(7, m) * 3**m for m in range(8))


class TestNCount:
    def test_equal_enumerators_give_zero(self):
        dist = WeightDistribution(4, (1, 0, 6, 0, 9))
        pair = EnumeratorPair(dist, dist, 4, 0)
        assert all(n_count(pair, m) == 0 for m in range(1, 5))

    def test_five_qubit_weight_one(self):
        assert n_count(enumerator_pair(five_qubit_code()), 1) == 0

    def test_stabilizer_ten_four(self):
        spec = EnsembleSpec("stabilizer", 10, 4)
        assert n_count(spec, 2) == F(38335680, 13981) == n_count_direct(spec, 2)

    @pytest.mark.parametrize(
        "spec",
        [
            EnsembleSpec("stabilizer", 12, 5),
            EnsembleSpec("linear_stabilizer", 12, 4),
            EnsembleSpec("css", 12, k1=3, k2=8),
            EnsembleSpec("stabilizer", 12, 2, expurgation={1, 2}),
        ],
    )
    def test_fast_formula_matches_double_sum(self, spec):
        for m in range(1, spec.n + 1):
            assert n_count(spec, m) == n_count_direct(spec, m)

    def test_table_path_matches_form_path(self):
        pair = average_enumerators(EnsembleSpec("css", 9, k1=2, k2=6))
        table = DifferenceSource(9, 4, table=pair.differences())
        for m in range(1, 10):
            assert n_count(pair, m) == n_count(table, m)

    def test_float_profile_matches_exact(self):
        spec = EnsembleSpec("stabilizer", 160, 80, expurgation={1, 2, 3})
        exact = NProfile(spec)
        approx = NProfile(spec, exact_limit=0)
        assert np.array_equal(exact.use_n, approx.use_n)
        mask = np.isfinite(exact.log_n)
        assert np.allclose(exact.log_n[mask], approx.log_n[mask], rtol=0, atol=1e-10)


class TestFidelityBound:
    def test_p_zero(self):
        assert fidelity_bound(EnsembleSpec("stabilizer", 20, 8), 0.0).value == 0.0

    def test_trivial_min(self):
        # B = 2^(2n) at weight n only: N(m) >= C(n,m)3^m for all m
        n = 4
        b = WeightDistribution(n, tuple([1] + [binomial(n, j) * 3**j * 10 for j in range(1, n + 1)]))
        bp = WeightDistribution(n, tuple([1] + [0] * n))
        pair = EnumeratorPair(b, bp, n, n)
        for p in (0.01, 0.2):
            assert fidelity_bound(pair, p).value == pytest.approx(1 - (1 - p) ** n, rel=1e-12)

    def test_five_qubit_sandwich(self):
        s = five_qubit_code()
        pair = enumerator_pair(s)
        for p in np.geomspace(1e-5, 1e-1, 20):
            closed = sum(binomial(5, m) * p**m * (1 - p) ** (5 - m) for m in range(2, 6))
            bound = fidelity_bound(pair, p).value
            assert bound == pytest.approx(closed, rel=1e-12)
            assert bound >= exact_infidelity_bound(s, p)

    @settings(max_examples=40, deadline=None)
    @given(st.floats(min_value=1e-6, max_value=0.7), st.floats(min_value=1e-6, max_value=0.7))
    def test_monotone_in_p_and_in_unit_interval(self, p, q):
        spec = EnsembleSpec("stabilizer", 30, 10)
        prof = NProfile(spec)
        a, b = sorted((p, q))
        va = fidelity_bound(spec, a, profile=prof).value
        vb = fidelity_bound(spec, b, profile=prof).value
        assert 0 <= va <= vb * (1 + 1e-12) <= 1 + 1e-12

    def test_breakdown_sums_to_total(self):
        spec = EnsembleSpec("css", 40, k1=10, k2=30)
        ev = fidelity_bound(spec, 1e-3, breakdown=True)
        total = math.fsum(float(t) for t in ev.per_weight_terms.values())
        assert total == pytest.approx(ev.value, rel=1e-12)

    def test_expurgation_input_kinds_agree(self):
        spec = EnsembleSpec("stabilizer", 50, 22, expurgation={1, 2, 3, 4})
        res = expurgate(average_enumerators(spec.unexpurgated()), {1, 2, 3, 4})
        assert fidelity_bound(spec, 1e-3).log4 == pytest.approx(fidelity_bound(res, 1e-3).log4, abs=1e-12)

    def test_large_n_no_underflow(self):
        ev = fidelity_bound(EnsembleSpec("stabilizer", 3000, 1500), 0.01)
        assert ev.infidelity_bound.sign == 1
        assert math.isfinite(ev.log4) and ev.log4 < -100

    def test_bad_p(self):
        with pytest.raises(ValueError):
            fidelity_bound(EnsembleSpec("stabilizer", 5, 1), 1.5)


class TestReform:
    def test_p_zero(self):
        _, total = reform_bound(EnsembleSpec("stabilizer", 20, 8), 0.0)
        assert total.is_zero()

    def test_fifty_twenty_two_profile(self):
        br, total = reform_bound(EnsembleSpec("stabilizer", 50, 22), 1e-4)
        assert br.m0 == 5
        top = sorted(range(1, len(br.Tw)), key=lambda w: br.Tw[w].log_magnitude, reverse=True)[:2]
        assert set(top) == {2, 4}

    @pytest.mark.parametrize("p", [1e-4, 1e-3, 1e-2])
    def test_reform_total_at_least_bound(self, p):
        spec = EnsembleSpec("stabilizer", 50, 22)
        _, total = reform_bound(spec, p)
        assert total.log4 >= fidelity_bound(spec, p).log4 - 1e-12

    def test_debug_tail_is_smaller(self):
        br, _ = reform_bound(EnsembleSpec("stabilizer", 50, 22), 1e-3, debug=True)
        assert br.tail_printed.log_magnitude <= br.tail.log_magnitude


class TestGv:
    def test_stabilizer(self):
        assert gv_distance_stabilizer(50, 22) == 6
        with pytest.raises(ValueError):
            gv_distance_stabilizer(50, 21)

    def test_stabilizer_by_hand(self):
        lhs = 2 ** (50 - 22 + 2) - 1
        side = lambda d: 3 * sum(3 ** (i - 1) * binomial(50, i) for i in range(1, d))
        assert lhs > side(6) and not lhs > side(7)

    def test_css(self):
        assert gv_distance_css(3, 1, 2) == 1
        assert gv_distance_css(400, 100, 300) / 400 == pytest.approx(inverse_entropy("H2", 0.25), abs=0.01)


class TestRateSearch:
    def test_trivial_targets(self):
        assert max_rate_for_target(20, "stab", 0.01, 1.0).rate == 1.0
        assert max_rate_for_target(20, "stab", 0.0, 1e-6).rate == 1.0

    def test_infeasible_flag(self):
        r = max_rate_for_target(10, "stab", 0.3, 1e-9)
        assert not r.feasible and r.rate == 0.0

    def test_small_search_is_tight(self):
        r = max_rate_for_target(60, "stab", 0.01, 1e-4)
        assert r.feasible and r.monotone
        assert fidelity_bound(EnsembleSpec("stabilizer", 60, r.k), 0.01).value <= 1e-4
        assert fidelity_bound(EnsembleSpec("stabilizer", 60, r.k + 1), 0.01).value > 1e-4

    def test_pairings(self):
        assert css_pairing(10, 7, "balanced") == 3
        assert css_pairing(10, 7, "unbalanced") == 1
        assert css_pairing(10, 4, "balanced") is None
        assert css_variant(100, 50, "balanced") == (25, 75)
        assert css_variant(100, 50, "unbalanced") == (17, 67)
        assert css_variant(100, 50, "mirrored") == (33, 83)
