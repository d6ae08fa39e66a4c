"""Exhaustive small-instance checks for every closed-form count.

Each check returns :class:`EnumerationReport` records comparing the closed
form ("expected") with brute force ("observed").
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .codes import (
    BinaryCode,
    CapExceededError,
    Gf4AdditiveCode,
    StandardArray,
    WeightDistribution,
    enumerator_pair,
    css_stabilizer,
    hermitian_dual,
    in_span,
    pack_gf4,
    rref,
    span,
)
from .ensembles import (
    EnsembleSpec,
    VECTOR_CLASSES,
    average_enumerators,
    containment_count,
    css_count_triple,
    self_orthogonal_count,
    vector_class_count,
    vector_class_size,
)
from .exactmath import binomial, gaussian_binomial
from .finite_bounds import fidelity_bound, g_count, n_count

CODE_CAP_N = 4
G_CAP_N = 6
ARRAY_CAP = 1 << 20


@dataclass(frozen=True)
class EnumerationReport:
    check: str
    params: dict
    expected: object
    observed: object
    match: bool

    def as_json(self) -> dict:
        d = asdict(self)
        for key in ("expected", "observed"):
            v = d[key]
            if isinstance(v, Fraction):
                d[key] = f"{v.numerator}/{v.denominator}"
            elif isinstance(v, (list, tuple)):
                d[key] = [f"{x.numerator}/{x.denominator}" if isinstance(x, Fraction) else x for x in v]
        return d


def _report(check: str, params: dict, expected, observed) -> EnumerationReport:
    return EnumerationReport(check, params, expected, observed, expected == observed)


def _cap(n: int, limit: int) -> None:
    if n > limit:
        raise CapExceededError(f"exhaustive enumeration is capped at n <= {limit}, got n={n}")


# ---------------------------------------------------------------------------
# self-orthogonal codes


def _swap(x: int, n: int) -> int:
    return (x >> n) | ((x & ((1 << n) - 1)) << n)


def self_orthogonal_codes(n: int, t: int) -> list[tuple[int, ...]]:
    """Canonical generator tuples of every self-orthogonal code of size 2^t.

    Built level by level: each code of size 2^s is extended by every vector of
    its trace dual outside it, and duplicates are merged by canonical form.
    """
    _cap(n, CODE_CAP_N)
    if not 0 <= t <= n:
        raise ValueError(f"need 0 <= t <= n, got n={n}, t={t}")
    level = {()}
    for _ in range(t):
        nxt = set()
        for gens in level:
            dual = hermitian_dual(Gf4AdditiveCode(n, gens))
            for v in span(dual.generators):
                v = int(v)
                if not in_span(gens, v):
                    nxt.add(tuple(rref(gens + (v,))))
        level = nxt
    return sorted(level)


def enumerate_self_orthogonal(n: int, t: int):
    """(codes, reports) for size-2^t self-orthogonal codes of length n."""
    codes = self_orthogonal_codes(n, t)
    reports = [_report("self_orthogonal_count", {"n": n, "t": t}, self_orthogonal_count(n, t), len(codes))]
    if t >= 1:
        tally = np.zeros(1 << (2 * n), dtype=np.int64)
        for gens in codes:
            tally[span(gens).astype(np.int64)] += 1
        counts = set(int(c) for c in tally[1:])
        observed = counts.pop() if len(counts) == 1 else sorted(counts | {-1})
        reports.append(_report("containment_count", {"n": n, "t": t}, containment_count(n, t), observed))
    return codes, reports


def _average(pairs: list) -> tuple[WeightDistribution, WeightDistribution]:
    n = pairs[0].n
    size = len(pairs)
    b = [sum((p.B[j] for p in pairs), Fraction(0)) / size for j in range(n + 1)]
    bp = [sum((p.Bperp[j] for p in pairs), Fraction(0)) / size for j in range(n + 1)]
    return WeightDistribution(n, tuple(b)), WeightDistribution(n, tuple(bp))


def verify_stabilizer_average(n: int, k: int) -> list[EnumerationReport]:
    codes = self_orthogonal_codes(n, n - k)
    pairs = [enumerator_pair(Gf4AdditiveCode(n, g)) for g in codes]
    b, bp = _average(pairs)
    avg = average_enumerators(EnsembleSpec("stabilizer", n, k))
    params = {"n": n, "k": k}
    return [
        _report("stabilizer_average_B", params, list(avg.B), list(b)),
        _report("stabilizer_average_Bperp", params, list(avg.Bperp), list(bp)),
    ]


def _omega_times(x: int, n: int) -> int:
    # w (a + w b) = b + w (a + b)
    mask = (1 << n) - 1
    a, b = x & mask, x >> n
    return b | ((a ^ b) << n)


def verify_linear_stabilizer_average(n: int, k: int) -> list[EnumerationReport]:
    """Average over the GF(4)-linear members of the stabilizer ensemble."""
    if (n - k) % 2:
        raise ValueError("linear stabilizer codes need n - k even")
    codes = [
        g for g in self_orthogonal_codes(n, n - k)
        if all(in_span(g, _omega_times(v, n)) for v in g)
    ]
    pairs = [enumerator_pair(Gf4AdditiveCode(n, g)) for g in codes]
    b, bp = _average(pairs)
    avg = average_enumerators(EnsembleSpec("linear_stabilizer", n, k))
    params = {"n": n, "k": k, "codes": len(codes)}
    return [
        _report("linear_stabilizer_average_B", params, list(avg.B), list(b)),
        _report("linear_stabilizer_average_Bperp", params, list(avg.Bperp), list(bp)),
    ]


# ---------------------------------------------------------------------------
# CSS pairs


def binary_subspaces(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-dimensional subspaces of GF(2)^n as canonical bases."""
    _cap(n, 8)
    level = {()}
    for _ in range(k):
        nxt = set()
        for gens in level:
            for v in range(1, 1 << n):
                if not in_span(gens, v):
                    nxt.add(tuple(rref(gens + (v,))))
        level = nxt
    return sorted(level)


def css_pairs(n: int, k1: int, k2: int) -> list[tuple[BinaryCode, BinaryCode]]:
    _cap(n, CODE_CAP_N)
    if not 0 <= k1 <= k2 <= n:
        raise ValueError(f"need 0 <= k1 <= k2 <= n, got ({n}, {k1}, {k2})")
    small = binary_subspaces(n, k1)
    out = []
    for g2 in binary_subspaces(n, k2):
        for g1 in small:
            if all(in_span(g2, v) for v in g1):
                out.append((BinaryCode(n, g1), BinaryCode(n, g2)))
    return out


def _vector_class(a: int, b: int) -> str | None:
    if a == 0 and b == 0:
        return None
    if b == 0:
        return "x_only"
    if a == 0:
        return "z_only"
    common = (a & b).bit_count()
    if common == 0:
        return "disjoint"
    return "overlap_even" if common % 2 == 0 else "overlap_odd"


def enumerate_css_pairs(n: int, k1: int, k2: int):
    """(pairs, reports): pair count, per-class containment, class sizes, averages."""
    pairs = css_pairs(n, k1, k2)
    params = {"n": n, "k1": k1, "k2": k2}
    reports = [_report("css_pair_count", params, css_count_triple(n, k1, k2).c1, len(pairs))]

    stabs = [css_stabilizer(c1, c2) for c1, c2 in pairs]
    tally = np.zeros(1 << (2 * n), dtype=np.int64)
    for s in stabs:
        tally[span(s.generators).astype(np.int64)] += 1
    seen: dict = {c: set() for c in VECTOR_CLASSES}
    census = {c: 0 for c in VECTOR_CLASSES}
    mask = (1 << n) - 1
    for x in range(1, 1 << (2 * n)):
        cls = _vector_class(x & mask, x >> n)
        census[cls] += 1
        seen[cls].add(int(tally[x]))
    for cls in VECTOR_CLASSES:
        obs = seen[cls]
        observed = next(iter(obs)) if len(obs) == 1 else sorted(obs)
        if not obs:
            observed = None
        expected = vector_class_count(n, k1, k2, cls) if obs else None
        reports.append(_report(f"css_class_count[{cls}]", params, expected, observed))
        reports.append(_report(f"css_class_size[{cls}]", {"n": n}, vector_class_size(n, cls), census[cls]))

    b, bp = _average([enumerator_pair(s) for s in stabs])
    avg = average_enumerators(EnsembleSpec("css", n, k1=k1, k2=k2))
    reports.append(_report("css_average_B", params, list(avg.B), list(b)))
    reports.append(_report("css_average_Bperp", params, list(avg.Bperp), list(bp)))
    return pairs, reports


# ---------------------------------------------------------------------------
# G(m, w)


def brute_force_g(n: int, m: int, w: int, codeword: Sequence[int] | None = None) -> int:
    """Weight-m vectors x with d(x, c) <= m, counted over all of GF(4)^n.

    ``codeword`` is a symbol list (0..3); by default the first w coordinates
    are 1 and the rest 0.
    """
    _cap(n, G_CAP_N)
    if codeword is None:
        codeword = [1] * w + [0] * (n - w)
    if len(codeword) != n:
        raise ValueError("codeword length must equal n")
    c = pack_gf4(codeword)
    x = np.arange(4**n, dtype=np.int64)
    mask = (1 << n) - 1
    wt = np.bitwise_count((x | (x >> n)) & mask)
    y = x ^ c
    dist = np.bitwise_count((y | (y >> n)) & mask)
    return int(np.count_nonzero((wt == m) & (dist <= m)))


def verify_g_counts(n: int, extra_words: int = 2, seed: int = 0) -> list[EnumerationReport]:
    """G(m, w) against brute force for all m, w, with a few alternative words."""
    rng = np.random.default_rng(seed)
    reports = []
    for w in range(n + 1):
        words = [None]
        for _ in range(extra_words if w else 0):
            pos = rng.permutation(n)[:w]
            word = [0] * n
            for i in pos:
                word[i] = int(rng.integers(1, 4))
            words.append(word)
        for m in range(n + 1):
            observed = {brute_force_g(n, m, w, c) for c in words}
            obs = observed.pop() if len(observed) == 1 else sorted(observed | {-1})
            reports.append(_report("g_count", {"n": n, "m": m, "w": w}, g_count(n, m, w), obs))
    return reports


# ---------------------------------------------------------------------------
# fidelity bound on concrete codes


@dataclass(frozen=True)
class FidelityCheck:
    p: float
    exact: float
    bound: float
    holds: bool


def verify_fidelity_bound_on_code(stabilizer: Gf4AdditiveCode, p_grid: Iterable[float], rel_tol: float = 1e-12):
    """Check exact infidelity <= union bound for each p, and per-weight counts.

    Returns (fidelity_checks, weight_reports).  A weight report "matches" when
    the uncorrectable count does not exceed min{C(n,m)3^m, N(m)}.
    """
    n = stabilizer.n
    if 4**n > ARRAY_CAP:
        raise CapExceededError(f"standard array capped at 4^n <= 2^20, got n={n}")
    arr = StandardArray(stabilizer, cap=ARRAY_CAP)
    pair = enumerator_pair(stabilizer)
    checks = []
    for p in p_grid:
        exact = arr.infidelity_bound(p)
        bound = fidelity_bound(pair, p).value
        checks.append(FidelityCheck(p, exact, bound, exact <= bound * (1 + rel_tol)))
    weights = []
    for m in range(1, n + 1):
        limit = min(Fraction(binomial(n, m) * 3**m), n_count(pair, m))
        u = arr.uncorrectable[m]
        weights.append(EnumerationReport("uncorrectable_le_union", {"n": n, "m": m}, limit, u, u <= limit))
    return checks, weights


# ---------------------------------------------------------------------------
# everything


def gaussian_binomial_reports(max_n: int = 5) -> list[EnumerationReport]:
    return [
        _report("gaussian_binomial", {"n": n, "k": k}, gaussian_binomial(n, k), len(binary_subspaces(n, k)))
        for n in range(max_n + 1)
        for k in range(n + 1)
    ]


def run_all(max_code_n: int = CODE_CAP_N, max_g_n: int = G_CAP_N) -> list[EnumerationReport]:
    """Every oracle check on its capped range, in a fixed order."""
    out = gaussian_binomial_reports(min(max_code_n + 1, 5))
    for n in range(1, max_code_n + 1):
        for t in range(n + 1):
            out.extend(enumerate_self_orthogonal(n, t)[1])
        for k in range(n + 1):
            out.extend(verify_stabilizer_average(n, k))
            if (n - k) % 2 == 0:
                out.extend(verify_linear_stabilizer_average(n, k))
        for k2 in range(n + 1):
            for k1 in range(k2 + 1):
                out.extend(enumerate_css_pairs(n, k1, k2)[1])
    for n in range(1, max_g_n + 1):
        out.extend(verify_g_counts(n))
    return out
