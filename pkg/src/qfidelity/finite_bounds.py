"""Finite-length fidelity bounds, Gilbert-Varshamov distances and rate search.

The union bound on 1 - F for a code (or an ensemble average) with enumerator
differences D_w = B_w - Bperp_w is

    sum_m (p/3)^m (1-p)^(n-m) min{ C(n,m) 3^m, N(m) },
    N(m) = sum_w D_w G(m, w),

where G(m, w) counts weight-m vectors at least as close to a fixed weight-w
word as to zero.  Everything up to the min is exact; the per-m terms are then
summed as LogReals.

Ensembles carry a closed form D_w = C(n,w) sum_lam c_lam lam^w.  Summing that
against G gives

    sum_w C(n,w) lam^w G(m,w) = C(n,m) [ sum_a C(m,a) lam^a (3+2lam)^(m-a) P_m(a) - 3^m ],
    P_m(a) = sum_{b <= a} C(n-m, b) lam^b,

which costs O(n) per m instead of O(n^2).  For large n and positive lam the
table is evaluated in the log domain; any min decision that is not clear by a
wide float margin is redone exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Union

import numpy as np
from scipy.special import gammaln, logsumexp as np_logsumexp

from .codes import EnumeratorPair
from .ensembles import (
    EnsembleSpec,
    ExpurgationResult,
    closed_forms,
    normalize_family,
)
from .exactmath import LogReal, binomial, logsumexp, lr_from_count, lr_from_ratio

EXACT_N_LIMIT = 200  # largest n for which every N(m) is computed exactly
DECISION_MARGIN = 1e-8  # natural-log gap that lets a float decide a min


# ---------------------------------------------------------------------------
# G(m, w)


def g_count(n: int, m: int, w: int) -> int:
    """Weight-m vectors x with d(x, c) <= m for a fixed word c of weight w."""
    if not (0 <= m <= n and 0 <= w <= n):
        raise ValueError(f"need 0 <= m, w <= n; got n={n}, m={m}, w={w}")
    total = 0
    for t in range(0, min(m, w) + 1):
        inner = 0
        for h in range(-(-(w - t) // 2), m - t + 1):
            inner += binomial(w - t, h) * binomial(n - w, m - t - h) * 3 ** (m - t - h)
        total += binomial(w, t) * 2**t * inner
    return total


def _m_lambda_exact(n: int, lam: int, m: int) -> int:
    """sum_{w >= 1} C(n, w) lam^w G(m, w)."""
    if m == 0:
        return 0
    mu = 3 + 2 * lam
    rest = n - m
    total = 0
    prefix = 0
    lam_a = 1
    mu_pow = [1] * (m + 1)
    for i in range(1, m + 1):
        mu_pow[i] = mu_pow[i - 1] * mu
    c_ma = 1
    for a in range(m + 1):
        if a <= rest:
            prefix += binomial(rest, a) * lam_a
        total += c_ma * lam_a * mu_pow[m - a] * prefix
        lam_a *= lam
        c_ma = c_ma * (m - a) // (a + 1)
    return binomial(n, m) * (total - 3**m)


@lru_cache(maxsize=16)
def _m_lambda_exact_table(n: int, lam: int) -> tuple[int, ...]:
    return tuple(_m_lambda_exact(n, lam, m) for m in range(n + 1))


@lru_cache(maxsize=16)
def _m_lambda_log_table(n: int, lam: int) -> np.ndarray:
    """Natural log of _m_lambda_exact for all m (lam > 0); -inf at m = 0."""
    if lam <= 0:
        raise ValueError("log table needs lam > 0")
    lf = gammaln(np.arange(n + 2, dtype=float) + 1.0)  # log i!
    llam = math.log(lam)
    lmu = math.log(3 + 2 * lam)
    l3 = math.log(3.0)
    out = np.full(n + 1, -np.inf)
    for m in range(1, n + 1):
        rest = n - m
        b = np.arange(min(m, rest) + 1)
        lp = np.logaddexp.accumulate(lf[rest] - lf[b] - lf[rest - b] + b * llam)
        a = np.arange(m + 1)
        terms = lf[m] - lf[a] - lf[m - a] + a * llam + (m - a) * lmu + lp[np.minimum(a, rest)]
        s = float(np_logsumexp(terms))
        out[m] = lf[n] - lf[m] - lf[rest] + s + math.log1p(-math.exp(m * l3 - s))
    return out


@lru_cache(maxsize=256)
def _log_g_column(n: int, w: int) -> np.ndarray:
    """Natural log of G(m, w) for m = 0..n (float, for the removed-weight correction)."""
    lf = gammaln(np.arange(n + 2, dtype=float) + 1.0)
    m = np.arange(n + 1)
    l2, l3 = math.log(2.0), math.log(3.0)
    out = np.full(n + 1, -np.inf)
    for t in range(w + 1):
        for h in range(-(-(w - t) // 2), w - t + 1):
            r = m - t - h  # nonzero positions outside the support of the word
            ok = (r >= 0) & (r <= n - w)
            rr = np.where(ok, r, 0)
            base = lf[w] - lf[t] - lf[w - t] + t * l2 + lf[w - t] - lf[h] - lf[w - t - h]
            term = np.where(ok, base + lf[n - w] - lf[rr] - lf[n - w - rr] + rr * l3, -np.inf)
            out = np.logaddexp(out, term)
    return out


def _log_count_table(n: int) -> np.ndarray:
    """log(C(n, m) 3^m) for m = 0..n."""
    lf = gammaln(np.arange(n + 1, dtype=float) + 1.0)
    m = np.arange(n + 1)
    return lf[n] - lf[m] - lf[n - m] + m * math.log(3.0)


# ---------------------------------------------------------------------------
# difference sources


@dataclass(frozen=True)
class DifferenceSource:
    """Enumerator differences feeding the bounds.

    Either ``form`` (lam -> coefficient, for the closed form of D_w) or
    ``table`` (exact D_w for w = 0..n) is set.  ``scale`` multiplies every
    difference and weights in ``removed`` count as zero.
    """

    n: int
    k: int
    form: dict | None = None
    table: tuple | None = None
    scale: Fraction = Fraction(1)
    removed: frozenset = field(default_factory=frozenset)

    def raw(self, w: int) -> Fraction:
        if w == 0:
            return Fraction(0)
        if self.table is not None:
            return Fraction(self.table[w])
        c = binomial(self.n, w)
        return sum((coef * c * lam**w for lam, coef in self.form.items()), Fraction(0))

    def diff(self, w: int) -> Fraction:
        if w in self.removed:
            return Fraction(0)
        return self.scale * self.raw(w)

    def d_min(self) -> int | None:
        for w in range(1, self.n + 1):
            if self.diff(w) > 0:
                return w
        return None


Source = Union[EnumeratorPair, ExpurgationResult, EnsembleSpec, DifferenceSource]


def _expurgation_scale(n: int, raw, removed: frozenset) -> Fraction:
    mass = Fraction(0)
    for j in sorted(removed):
        d = raw(j)
        if d >= 1:
            raise ValueError(f"cannot expurgate weight {j}: difference {d} >= 1")
        mass += d
    if mass >= 1:
        raise ValueError(f"expurgation leaves beta = {1 - mass} <= 0")
    return 1 / (1 - mass)


def as_source(obj: Source) -> DifferenceSource:
    if isinstance(obj, DifferenceSource):
        return obj
    if isinstance(obj, EnsembleSpec):
        bf, pf = closed_forms(obj)
        form = dict(bf)
        for lam, c in pf.items():
            form[lam] = form.get(lam, 0) - c
        form = {lam: Fraction(c) for lam, c in form.items() if c}
        src = DifferenceSource(obj.n, obj.quantum_k, form=form)
        if obj.expurgation:
            scale = _expurgation_scale(obj.n, src.raw, obj.expurgation)
            src = DifferenceSource(obj.n, obj.quantum_k, form=form, scale=scale, removed=obj.expurgation)
        return src
    if isinstance(obj, EnumeratorPair):
        form = obj.difference_form()
        if form is not None:
            return DifferenceSource(obj.n, obj.k, form=form)
        return DifferenceSource(obj.n, obj.k, table=obj.differences())
    if isinstance(obj, ExpurgationResult):
        base = as_source(obj.pair)
        return DifferenceSource(base.n, base.k, base.form, base.table, 1 / obj.beta, obj.removed)
    raise TypeError(f"cannot build a difference source from {type(obj).__name__}")


# ---------------------------------------------------------------------------
# N(m)


def n_count(source: Source, m: int) -> Fraction:
    """Exact N(m) = sum_w D_w G(m, w)."""
    src = as_source(source)
    n = src.n
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    if src.form is None:
        return sum((src.diff(w) * g_count(n, m, w) for w in range(1, min(2 * m, n) + 1)), Fraction(0))
    total = sum((coef * _m_lambda_exact(n, lam, m) for lam, coef in src.form.items()), Fraction(0))
    for w in src.removed:
        if w <= 2 * m:
            total -= src.raw(w) * g_count(n, m, w)
    return src.scale * total


def n_count_direct(source: Source, m: int) -> Fraction:
    """N(m) by the plain double sum over w, for cross-checking."""
    src = as_source(source)
    n = src.n
    return sum((src.diff(w) * g_count(n, m, w) for w in range(1, min(2 * m, n) + 1)), Fraction(0))


class NProfile:
    """N(m) for all m, plus which side of each min{C(n,m)3^m, N(m)} wins.

    ``log_n[m]`` is the natural log of N(m) (-inf when zero) and
    ``use_n[m]`` is True when N(m) < C(n,m) 3^m.
    """

    def __init__(self, source: Source, exact_limit: int = EXACT_N_LIMIT):
        src = as_source(source)
        self.source = src
        n = self.n = src.n
        self.log_count = _log_count_table(n)
        self.exact_decisions = 0
        form = src.form
        if form is None or n <= exact_limit or any(lam <= 0 for lam in form):
            self._fill_exact()
        else:
            self._fill_float()

    def _fill_exact(self) -> None:
        src, n = self.source, self.n
        self.log_n = np.full(n + 1, -np.inf)
        self.use_n = np.zeros(n + 1, dtype=bool)
        self.use_n[0] = True
        if src.form is not None and n <= EXACT_N_LIMIT:
            tables = {lam: _m_lambda_exact_table(n, lam) for lam in src.form}
        else:
            tables = None
        for m in range(1, n + 1):
            if tables is not None:
                val = sum((c * tables[lam][m] for lam, c in src.form.items()), Fraction(0))
                for w in src.removed:
                    if w <= 2 * m:
                        val -= src.raw(w) * g_count(n, m, w)
                val *= src.scale
            else:
                val = n_count(src, m)
            self.log_n[m] = lr_from_ratio(val).log_magnitude if val > 0 else -np.inf
            self.use_n[m] = val < binomial(n, m) * 3**m
            self.exact_decisions += 1

    def _fill_float(self) -> None:
        src, n = self.source, self.n
        pos = np.full(n + 1, -np.inf)
        neg = np.full(n + 1, -np.inf)
        for lam, c in src.form.items():
            lc = lr_from_ratio(c)
            col = lc.log_magnitude + _m_lambda_log_table(n, lam)
            if lc.sign > 0:
                pos = np.logaddexp(pos, col)
            else:
                neg = np.logaddexp(neg, col)
        for w in src.removed:
            d = src.raw(w)
            if d == 0:
                continue
            col = lr_from_ratio(abs(d)).log_magnitude + _log_g_column(n, w)
            if d > 0:
                neg = np.logaddexp(neg, col)
            else:
                pos = np.logaddexp(pos, col)
        with np.errstate(invalid="ignore", divide="ignore"):
            ratio = np.exp(neg - pos)
            log_n = pos + np.log1p(-np.minimum(ratio, 0.5))
        log_n += lr_from_ratio(src.scale).log_magnitude
        # heavy cancellation or a near tie: settle those m exactly
        unsure = (ratio > 0.5) | (np.abs(log_n - self.log_count) <= DECISION_MARGIN)
        unsure[0] = False
        use_n = log_n < self.log_count
        use_n[0] = True
        for m in np.nonzero(unsure)[0]:
            m = int(m)
            val = n_count(src, m)
            log_n[m] = lr_from_ratio(val).log_magnitude if val > 0 else -np.inf
            use_n[m] = val < binomial(n, m) * 3**m
            self.exact_decisions += 1
        log_n[0] = -np.inf
        self.log_n = log_n
        self.use_n = use_n

    def m0(self) -> int:
        """Smallest m >= 1 with N(m) >= C(n, m) 3^m, or n + 1."""
        idx = np.nonzero(~self.use_n[1:])[0]
        return int(idx[0]) + 1 if len(idx) else self.n + 1

    def chosen_log(self) -> np.ndarray:
        return np.where(self.use_n, self.log_n, self.log_count)


# ---------------------------------------------------------------------------
# bounds


def _log_pi(n: int, p: float) -> np.ndarray:
    """log of (p/3)^m (1-p)^(n-m) for m = 0..n."""
    m = np.arange(n + 1)
    with np.errstate(divide="ignore", invalid="ignore"):
        lp = np.where(m > 0, m * math.log(p / 3) if p > 0 else -np.inf, 0.0)
        lq = np.where(n - m > 0, (n - m) * math.log1p(-p) if p < 1 else -np.inf, 0.0)
    return lp + lq


def _check_p(p: float) -> None:
    if not 0.0 <= p <= 1.0 or math.isnan(p):
        raise ValueError(f"p must lie in [0, 1], got {p!r}")


@dataclass(frozen=True)
class BoundEvaluation:
    p: float
    infidelity_bound: LogReal
    per_weight_terms: dict | None = None
    start: int = 1

    @property
    def value(self) -> float:
        return float(self.infidelity_bound)

    @property
    def log4(self) -> float:
        return self.infidelity_bound.log4


def fidelity_bound(source: Source, p: float, profile: NProfile | None = None, breakdown: bool = False) -> BoundEvaluation:
    """Union bound on 1 - F at channel error probability p."""
    _check_p(p)
    prof = profile or NProfile(source)
    n = prof.n
    dmin = prof.source.d_min()
    start = 1 if dmin is None else -(-dmin // 2)
    logs = _log_pi(n, p)[start:] + prof.chosen_log()[start:]
    finite = logs[np.isfinite(logs)]
    total = LogReal(1, logsumexp(finite.tolist())) if len(finite) else LogReal.zero()
    terms = None
    if breakdown:
        terms = {m: LogReal(1, float(v)) for m, v in enumerate(logs, start)}
    return BoundEvaluation(p, total, terms, start)


@dataclass(frozen=True)
class ReformBreakdown:
    m0: int
    Tw: tuple  # LogReal indexed by w = 0..n
    tail: LogReal
    tail_printed: LogReal | None = None  # (p/3)^l tail, debug only


def reform_bound(source: Source, p: float, profile: NProfile | None = None, debug: bool = False):
    """The bound regrouped by codeword weight below the crossover m0.

    Returns (ReformBreakdown, total) with total = sum_w T_w + tail, where
    T_w = D_w sum_{m < m0} G(m, w) (p/3)^m (1-p)^(n-m) and the tail is
    sum_{l >= m0} C(n, l) p^l (1-p)^(n-l).
    """
    _check_p(p)
    prof = profile or NProfile(source)
    src, n = prof.source, prof.n
    m0 = prof.m0()
    lpi = _log_pi(n, p)
    tw = [LogReal.zero()] * (n + 1)
    for w in range(1, min(2 * (m0 - 1), n) + 1):
        d = src.diff(w)
        if d == 0:
            continue
        logs = [lr_from_count(g).log_magnitude + lpi[m] for m in range(-(-w // 2), m0) if (g := g_count(n, m, w))]
        logs = [v for v in logs if v > -math.inf]
        if logs:
            tw[w] = lr_from_ratio(d) * LogReal(1, logsumexp(logs))
    lc = _log_count_table(n)
    tail_logs = [lc[l] + lpi[l] for l in range(m0, n + 1)]
    tail = LogReal(1, logsumexp([v for v in tail_logs if v > -math.inf]))
    printed = None
    if debug:
        l3 = math.log(3.0)
        printed = LogReal(1, logsumexp([v - l * l3 for l, v in zip(range(m0, n + 1), tail_logs) if v > -math.inf]))
    total = LogReal.zero()
    for t in tw:
        total = total + t
    total = total + tail
    return ReformBreakdown(m0, tuple(tw), tail, printed), total


# ---------------------------------------------------------------------------
# Gilbert-Varshamov distances


def gv_distance_stabilizer(n: int, k: int) -> int:
    """Largest d with (2^(n-k+2) - 1)/3 > sum_{i=1}^{d-1} 3^(i-1) C(n, i)."""
    if not n > k >= 2:
        raise ValueError(f"need n > k >= 2, got n={n}, k={k}")
    if (n - k) % 2:
        raise ValueError(f"need n = k (mod 2), got n={n}, k={k}")
    lhs = 2 ** (n - k + 2) - 1
    acc = 0
    d = 1
    while d < n:
        nxt = acc + 3 ** (d - 1) * binomial(n, d)
        if lhs <= 3 * nxt:
            break
        acc = nxt
        d += 1
    return d


def gv_distance_css(n: int, k1: int, k2: int) -> int:
    """Largest d with 1 - sum_{j < d} (B_j - Bperp_j) > 0 for the CSS averages."""
    src = as_source(EnsembleSpec("css", n, k1=k1, k2=k2))
    acc = Fraction(0)
    d = 1
    while d <= n:
        acc += src.diff(d)
        if acc >= 1:
            break
        d += 1
    return min(d, n)


# ---------------------------------------------------------------------------
# rate search


@dataclass(frozen=True)
class RateSearchResult:
    n: int
    family: str
    k: int
    k1: int | None
    k2: int | None
    rate: float
    bound: float | None  # log4 of the bound at the chosen code
    feasible: bool
    monotone: bool
    scanned: tuple  # (k, log4 bound) in scan order


def css_pairing(n: int, k2: int, constraint: str) -> int | None:
    """k1 for a given k2 under a named CSS rate pairing (None if invalid).

    balanced: k1 = n - k2.  unbalanced: k1 = floor((n - k2)/2), the finite
    version of R1 = (1 - R2)/2.
    """
    if constraint == "balanced":
        k1 = n - k2
    elif constraint == "unbalanced":
        k1 = (n - k2) // 2
    else:
        raise ValueError(f"unknown css constraint {constraint!r}; expected balanced or unbalanced")
    return k1 if 0 <= k1 <= k2 else None


def css_variant(n: int, k: int, variant: str) -> tuple[int, int]:
    """(k1, k2) with k2 - k1 = k for a named CSS pairing at fixed quantum k.

    balanced: k1 = n - k2.  unbalanced: k1 = round((n - k)/3), which solves
    k1 = (n - k2)/2 to the nearest integer.  mirrored: the dual pairing
    (n - k2, n - k1) of the unbalanced one.
    """
    if variant == "balanced":
        if (n - k) % 2:
            raise ValueError(f"balanced CSS needs n - k even, got n={n}, k={k}")
        k1 = (n - k) // 2
    elif variant in ("unbalanced", "mirrored"):
        k1 = int(math.floor((n - k) / 3 + 0.5))
        if variant == "mirrored":
            k1 = n - (k1 + k)
    else:
        raise ValueError(f"unknown css variant {variant!r}")
    k2 = k1 + k
    if not 0 <= k1 <= k2 <= n:
        raise ValueError(f"no {variant} CSS pairing for n={n}, k={k}")
    return k1, k2


def _candidates(n: int, family: str, constraint: str):
    # k = 0 is excluded: B = Bperp there, so its bound is 0 but it encodes nothing
    if family == "stabilizer":
        for k in range(n, 0, -1):
            yield EnsembleSpec(family, n, k)
    elif family == "linear_stabilizer":
        for k in range(n, 0, -2):
            yield EnsembleSpec(family, n, k)
    else:
        for k2 in range(n, -1, -1):
            k1 = css_pairing(n, k2, constraint)
            if k1 is not None and k2 > k1:
                yield EnsembleSpec(family, n, k1=k1, k2=k2)


def max_rate_for_target(
    n: int,
    family: str,
    p: float,
    target: float,
    constraint: str = "balanced",
    expurgate_auto: bool = False,
) -> RateSearchResult:
    """Largest rate whose ensemble bound at p is at most ``target``.

    Scans k downward from n and stops at the first success; the bound values
    seen on the way are checked for monotonicity rather than assumed.
    """
    family = normalize_family(family)
    _check_p(p)
    if not target > 0:
        raise ValueError(f"target must be positive, got {target}")
    log_target = math.log(target) / math.log(4.0) if target < 1 else math.inf
    scanned = []
    for spec in _candidates(n, family, constraint):
        if expurgate_auto:
            spec = _with_auto_expurgation(spec)
        val = fidelity_bound(spec, p).log4
        scanned.append((spec.quantum_k, val))
        if val <= log_target:
            break
    else:
        spec = None
    mono = all(b <= a + 1e-12 for (_, a), (_, b) in zip(scanned, scanned[1:]))
    if spec is None:
        return RateSearchResult(n, family, 0, None, None, 0.0, None, False, mono, tuple(scanned))
    k = spec.quantum_k
    return RateSearchResult(n, family, k, spec.k1, spec.k2, k / n, val, True, mono, tuple(scanned))


def auto_expurgation(spec: EnsembleSpec) -> frozenset:
    """Largest prefix {1..d-1} whose differences are each < 1 and keep beta > 0."""
    src = as_source(spec.unexpurgated())
    mass = Fraction(0)
    chosen = []
    for j in range(1, spec.n + 1):
        d = src.raw(j)
        if d >= 1 or mass + d >= 1:
            break
        mass += d
        chosen.append(j)
    return frozenset(chosen)


def _with_auto_expurgation(spec: EnsembleSpec) -> EnsembleSpec:
    return EnsembleSpec(spec.family, spec.n, spec.k, spec.k1, spec.k2, auto_expurgation(spec))
