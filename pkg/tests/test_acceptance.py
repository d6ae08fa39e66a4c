"""Acceptance criteria 1-10, each timed from cold caches.

Every criterion records one PASS/FAIL line; the lines are printed at the end
of the pytest run (see conftest.py) or when this file is run directly.
"""

import math
import sys
import time
from fractions import Fraction

import numpy as np
from qfidelity import asymptotics as asy
from qfidelity import codes, ensembles, exactmath, finite_bounds
from qfidelity.codes import enumerator_pair, exact_infidelity_bound, five_qubit_code, macwilliams
from qfidelity.ensembles import EnsembleSpec, average_enumerators, expurgate
from qfidelity.exactmath import binomial
from qfidelity.finite_bounds import NProfile, css_variant, fidelity_bound, gv_distance_stabilizer, max_rate_for_target
from qfidelity.oracle import run_all

RESULTS: dict[int, str] = {}


def _clear_caches():
    for mod in (codes, ensembles, exactmath, finite_bounds, asy):
        for obj in vars(mod).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()


class Check:
    """Collects named sub-checks and the wall time of one criterion."""

    def __init__(self, number, limit):
        self.number = number
        self.limit = limit
        self.parts = []
        _clear_caches()
        self.start = time.perf_counter()

    def add(self, name, ok, detail=""):
        self.parts.append((name, bool(ok), detail))

    def finish(self):
        elapsed = time.perf_counter() - self.start
        self.add("runtime", elapsed < self.limit, f"{elapsed:.2f}s < {self.limit}s")
        ok = all(p[1] for p in self.parts)
        failed = [f"{n} ({d})" for n, good, d in self.parts if not good]
        summary = "; ".join(f"{n}: {d}" for n, _, d in self.parts if d)
        line = f"criterion {self.number:2d} {'PASS' if ok else 'FAIL'}  {summary}"
        if failed:
            line += "  | failed: " + ", ".join(failed)
        RESULTS[self.number] = line
        assert ok, line


def test_criterion_01_fifty_twenty_two_differences():
    c = Check(1, 1.0)
    pair = average_enumerators(EnsembleSpec("stabilizer", 50, 22))
    d = pair.differences()
    assert all(isinstance(x, Fraction) for x in d)
    targets = {1: (5.6e-7, 0.05), 2: (4.1e-5, 0.10), 3: (2.0e-3, 0.10), 4: (6.9e-2, 0.03)}
    for j, (want, tol) in targets.items():
        got = float(d[j])
        c.add(f"D_{j}", abs(got - want) <= tol * want, f"D_{j}={got:.4g}")
    c.finish()


def test_criterion_02_expurgation_beta():
    c = Check(2, 1.0)
    res = expurgate(average_enumerators(EnsembleSpec("stabilizer", 50, 22)), {1, 2, 3, 4})
    beta, inv = float(res.beta), float(res.inverse_beta)
    c.add("beta", 0.9284 <= beta <= 0.9290, f"beta={beta:.6f}")
    c.add("1/beta", 1.0765 <= inv <= 1.0772, f"1/beta={inv:.6f}")
    c.finish()


def test_criterion_03_gv_distance():
    c = Check(3, 1.0)
    d = gv_distance_stabilizer(50, 22)
    c.add("d_GV", d == 6 and d >= 5, f"d={d}")
    c.finish()


def test_criterion_04_oracle_equivalence():
    c = Check(4, 60.0)
    reports = run_all(max_code_n=4, max_g_n=6)
    kinds = {}
    for r in reports:
        key = r.check.split("[")[0]
        kinds.setdefault(key, [0, 0])
        kinds[key][0] += 1
        kinds[key][1] += r.match
    for need in ("self_orthogonal_count", "containment_count", "css_pair_count", "css_class_count",
                 "css_average_B", "css_average_Bperp", "g_count"):
        assert need in kinds, need
    bad = [r for r in reports if not r.match]
    c.add("reports", not bad, f"{len(reports) - len(bad)}/{len(reports)} exact matches")
    c.finish()


def test_criterion_05_five_qubit_sandwich():
    c = Check(5, 5.0)
    s = five_qubit_code()
    pair = enumerator_pair(s)
    worst_rel = 0.0
    sandwich = True
    for p in np.geomspace(1e-5, 1e-1, 20):
        p = float(p)
        closed = math.fsum(binomial(5, m) * p**m * (1 - p) ** (5 - m) for m in range(2, 6))
        exact = exact_infidelity_bound(s, p)
        bound = fidelity_bound(pair, p).value
        worst_rel = max(worst_rel, abs(exact - closed) / closed)
        sandwich &= bound >= exact
    c.add("exact == 1-(1-p)^5-5p(1-p)^4", worst_rel <= 1e-12, f"max rel dev {worst_rel:.3g}")
    c.add("bound >= exact", sandwich, "holds on all 20 p" if sandwich else "violated")
    c.finish()


def _valid_specs(max_n):
    for n in range(1, max_n + 1):
        for k in range(n + 1):
            yield EnsembleSpec("stabilizer", n, k)
            if (n - k) % 2 == 0:
                yield EnsembleSpec("linear_stabilizer", n, k)
        for k2 in range(n + 1):
            for k1 in range(k2 + 1):
                yield EnsembleSpec("css", n, k1=k1, k2=k2)


def test_criterion_06_macwilliams_consistency():
    c = Check(6, 30.0)
    count = bad = 0
    for spec in _valid_specs(12):
        pair = average_enumerators(spec)
        n, k = spec.n, spec.quantum_k
        ok = (
            macwilliams(pair.Bperp, 2 ** (n - k), 4) == pair.B
            and pair.B.total() == 2 ** (n + k)
            and pair.Bperp.total() == 2 ** (n - k)
        )
        count += 1
        bad += not ok
    c.add("specs", bad == 0, f"{count - bad}/{count} ensembles exact")
    c.finish()


def test_criterion_07_exponent_agreement():
    c = Check(7, 60.0)
    worst = 0.0
    for p in (1e-3, 1e-2):
        for i in range(1, 18):
            R = round(0.05 * i, 2)
            e = asy.error_exponent(asy.ExponentSpec("stabilizer", p, R=R))
            worst = max(worst, abs(e - asy.explicit_stabilizer_exponent(R, p)))
    c.add("max |E_numeric - E_explicit|", worst <= 1e-4, f"{worst:.2e}")
    c.finish()


def test_criterion_08_capacity():
    c = Check(8, 120.0)
    closed = asy.capacity_lower("stabilizer", 0.01, method="closed")
    numeric = asy.capacity_lower("stabilizer", 0.01, method="numeric", tol=1e-5)
    c.add("closed", abs(closed - 0.9034) <= 1e-4, f"closed={closed:.6f}")
    c.add("numeric", abs(numeric - 0.9034) <= 1e-4, f"numeric={numeric:.6f}")
    grid = [float(p) for p in np.geomspace(1e-4, 0.18, 20)]
    curve = [asy.capacity_lower("stabilizer", p, method="closed") for p in grid]
    coarse = [asy.capacity_lower("stabilizer", p, method="numeric", tol=2e-3) for p in grid]
    mono = all(b <= a for a, b in zip(curve, curve[1:]))
    mono_num = all(b <= a + 2e-3 for a, b in zip(coarse, coarse[1:]))
    c.add("monotone", mono and mono_num, "nonincreasing on 20-point grid (closed and numeric)")
    c.finish()


def test_criterion_09_orderings():
    c = Check(9, 60.0)
    specs = {
        name: EnsembleSpec("css", 100, k1=k1, k2=k2)
        for name in ("balanced", "unbalanced")
        for k1, k2 in [css_variant(100, 50, name)]
    }
    specs["stabilizer"] = EnsembleSpec("stabilizer", 100, 50)
    profiles = {k: NProfile(s) for k, s in specs.items()}
    ordered = True
    for p in np.geomspace(1e-4, 1e-1, 31):
        v = {k: fidelity_bound(s, float(p), profile=profiles[k]).log4 for k, s in specs.items()}
        ordered &= v["stabilizer"] <= v["balanced"] <= v["unbalanced"]
    c.add("(a) stab <= balanced <= unbalanced", ordered, "31-point grid")

    plain = EnsembleSpec("stabilizer", 50, 22)
    ex = EnsembleSpec("stabilizer", 50, 22, expurgation={1, 2, 3, 4})
    low = fidelity_bound(ex, 1e-4).value / fidelity_bound(plain, 1e-4).value
    high = fidelity_bound(ex, 1e-2).value / fidelity_bound(plain, 1e-2).value
    c.add("(b) expurgated < plain at 1e-4", low < 1, f"ratio {low:.4g}")
    c.add("(b) within 1% at 1e-2", abs(high - 1) <= 0.01, f"ratio {high:.4f}")
    c.finish()


def test_criterion_10_performance():
    c = Check(10, 60.0)
    t0 = time.perf_counter()
    ev = fidelity_bound(EnsembleSpec("stabilizer", 3000, 1500), 0.01)
    t_bound = time.perf_counter() - t0
    finite = ev.infidelity_bound.sign == 1 and math.isfinite(ev.log4)
    c.add("bound n=3000 k=1500", finite and t_bound < 30, f"log4={ev.log4:.3f} in {t_bound:.2f}s")
    r = max_rate_for_target(3000, "stabilizer", 0.01, 1e-4)
    c.add("rate at n=3000", r.feasible and abs(r.rate - 0.9034) <= 0.05, f"rate={r.rate:.4f} (k={r.k})")
    c.finish()


def report_lines():
    return [RESULTS[k] for k in sorted(RESULTS)]


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted((n, f) for n, f in globals().items() if n.startswith("test_criterion_")):
        try:
            fn()
        except AssertionError:
            failed += 1
    print("\n".join(report_lines()))
    sys.exit(1 if failed else 0)
