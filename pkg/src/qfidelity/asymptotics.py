"""Asymptotic exponents: enumerator growth rates, GV distances, the G(m, w)
exponent kernel, error exponents and capacity lower bounds.

All exponents are base-4 logarithms divided by n.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Sequence

from scipy.optimize import brentq

from .exactmath import LOG4_3, LN4, entropy_H, entropy_T, inverse_entropy

EPS = 1e-9  # inset used for open intervals
GRID_STEP = 0.01  # coarse pre-scan step before golden-section refinement
ARG_TOL = 1e-10


def _H(x: float) -> float:
    # entropy_H without the argument checks, for inner loops
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return LOG4_3
    return (x * (math.log(3.0) - math.log(x)) - (1.0 - x) * math.log1p(-x)) / LN4


def _check_open_unit(name: str, x: float) -> None:
    if not 0.0 < x < 1.0:
        raise ValueError(f"{name} must lie in (0, 1), got {x!r}")


# ---------------------------------------------------------------------------
# golden section


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_max(f: Callable[[float], float], lo: float, hi: float, tol: float = ARG_TOL) -> tuple[float, float]:
    """Maximize a unimodal f on [lo, hi]; returns (argmax, max)."""
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    best = max((fc, c), (fd, d), (f(lo), lo), (f(hi), hi))
    return best[1], best[0]


def grid_golden_max(f: Callable[[float], float], lo: float, hi: float, step: float = GRID_STEP, tol: float = ARG_TOL):
    """Coarse grid pre-scan, then golden section around the best grid point."""
    if hi <= lo:
        return lo, f(lo)
    count = max(2, int(math.ceil((hi - lo) / step)))
    xs = [lo + (hi - lo) * i / count for i in range(count + 1)]
    vals = [f(x) for x in xs]
    i = max(range(len(xs)), key=vals.__getitem__)
    a, b = xs[max(i - 1, 0)], xs[min(i + 1, count)]
    x, v = golden_max(f, a, b, tol)
    if vals[i] > v:
        return xs[i], vals[i]
    return x, v


# ---------------------------------------------------------------------------
# rates and GV distances


def _rates(family: str, R=None, R1=None, R2=None):
    if family in ("stab", "stabilizer", "linear_stabilizer", "lin-stab"):
        if R is None or not 0.0 <= R <= 1.0:
            raise ValueError(f"stabilizer rate R must lie in [0, 1], got {R!r}")
        return "stabilizer", R, None, None
    if family == "css":
        if R1 is None or R2 is None or not 0.0 <= R1 <= R2 <= 1.0:
            raise ValueError(f"css rates need 0 <= R1 <= R2 <= 1, got R1={R1!r}, R2={R2!r}")
        return "css", R2 - R1, R1, R2
    raise ValueError(f"unknown family {family!r}")


def css_rates(R: float, constraint: str = "balanced") -> tuple[float, float]:
    """(R1, R2) giving quantum rate R under a named pairing."""
    if constraint == "balanced":
        return (1.0 - R) / 2.0, (1.0 + R) / 2.0
    if constraint == "unbalanced":  # R1 = (1 - R2)/2
        return (1.0 - R) / 3.0, (2.0 * R + 1.0) / 3.0
    raise ValueError(f"unknown css constraint {constraint!r}")


def delta_gv(family: str, R=None, R1=None, R2=None) -> float:
    """Relative GV distance of the (expurgated) ensemble."""
    fam, R, R1, R2 = _rates(family, R, R1, R2)
    if fam == "stabilizer":
        return inverse_entropy("H", (1.0 - R) / 2.0)
    return inverse_entropy("H2", min(R1, 1.0 - R2))


def delta_gv_css_balanced(R: float) -> float:
    return inverse_entropy("H2", (1.0 - R) / 2.0)


# ---------------------------------------------------------------------------
# enumerator exponents


def _css_terms(x: float, R1: float, R2: float) -> float:
    return max((R1 - 1.0) / 2.0, -R2 / 2.0, x * LOG4_3 + (R1 - 1.0 - R2) / 2.0)


def b_exponent(family: str, which: str, x: float, R=None, R1=None, R2=None) -> float:
    """Limit of (1/n) log4 of the average B_{xn} ('primal') or Bperp_{xn} ('dual')."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"relative weight must lie in [0, 1], got {x!r}")
    if which not in ("primal", "dual"):
        raise ValueError(f"which must be 'primal' or 'dual', got {which!r}")
    fam, R, R1, R2 = _rates(family, R, R1, R2)
    if fam == "stabilizer":
        return entropy_H(x) + ((R - 1.0) / 2.0 if which == "primal" else -(R + 1.0) / 2.0)
    base = entropy_H(x) - x * LOG4_3
    if which == "dual":
        return base + _css_terms(x, R1, R2)
    return base + _css_terms(x, R2, R1)


def _expurgated_branches(fam: str, R: float, R1, R2) -> list[Callable[[float], float]]:
    """Concave pieces whose max is the expurgated difference exponent."""
    if fam == "stabilizer":
        c = (R - 1.0) / 2.0
        return [lambda w: _H(w) + c]
    consts = [(R2 - 1.0) / 2.0, -R1 / 2.0]
    out = [lambda w, c=c: _H(w) - w * LOG4_3 + c for c in consts]
    c3 = (R2 - 1.0 - R1) / 2.0
    out.append(lambda w: _H(w) + c3)
    return out


# ---------------------------------------------------------------------------
# G(m, w) exponent kernel


def h_term_exponent(mu: float, omega: float, tau: float, eta: float) -> float:
    """Exponent of C(w-t, h) C(n-w, m-t-h) 3^(m-t-h) at relative (mu, omega, tau, eta)."""
    span = omega - tau
    return span * _H(eta / span) - eta * LOG4_3 + (1.0 - omega) * _H((mu - tau - eta) / (1.0 - omega))


def eta_roots(mu: float, omega: float, tau: float) -> tuple[float, float]:
    """Stationary points of h_term_exponent in eta (unconstrained)."""
    a = omega / 2 - tau / 4 + mu / 2 - 0.75
    b = (
        4 * omega**2 - 12 * omega * tau + 16 * omega * mu - 12 * omega
        + 9 * tau**2 - 12 * tau * mu + 6 * tau + 4 * mu**2 - 12 * mu + 9
    )
    r = math.sqrt(b) / 4
    return a + r, a - r


def eta_star(mu: float, omega: float, tau: float) -> float:
    """Maximizer of the h-term over h >= (w - t)/2, the lower end of the range."""
    return (omega - tau) / 2.0


def tau_range(mu: float, omega: float) -> tuple[float, float]:
    return max(0.0, 2.0 * mu + omega - 2.0), min(omega, 2.0 * mu - omega)


def _kappa(mu: float, omega: float, tau: float) -> float:
    return (2.0 * mu - tau - omega) / (2.0 * (1.0 - omega))


def tau_objective(mu: float, omega: float, tau: float) -> float:
    return omega * _H(tau / omega) - tau * LOG4_3 + omega / 2.0 + (1.0 - omega) * _H(_kappa(mu, omega, tau))


def _tau_slope(mu: float, omega: float, tau: float) -> float:
    k = _kappa(mu, omega, tau)
    if tau <= 0.0:
        left = math.inf
    elif omega - tau <= 0.0:
        left = -math.inf
    else:
        left = math.log((omega - tau) / tau)
    if k <= 0.0:
        right = math.inf
    elif k >= 1.0:
        right = -math.inf
    else:
        right = math.log(3.0 * (1.0 - k) / k)
    return (left - 0.5 * right) / LN4


def _kernel_args(mu: float, omega: float) -> tuple[float, float]:
    if not 0.0 < mu < 1.0:
        raise ValueError(f"mu must lie in (0, 1), got {mu!r}")
    if not 0.0 < omega <= 1.0 or omega >= 2.0 * mu:
        raise ValueError(f"need 0 < omega < 2 mu and omega <= 1, got mu={mu!r}, omega={omega!r}")
    return mu, min(omega, 1.0 - EPS)


def tau_star(mu: float, omega: float) -> float:
    """Maximizer of tau_objective over the admissible range (concave, so the slope root)."""
    mu, omega = _kernel_args(mu, omega)
    lo, hi = tau_range(mu, omega)
    if hi < lo:
        raise ValueError(f"empty tau range at mu={mu}, omega={omega}")
    width = hi - lo
    if width <= 1e-14:
        return lo
    a, b = lo + width * 1e-13, hi - width * 1e-13
    sa, sb = _tau_slope(mu, omega, a), _tau_slope(mu, omega, b)
    if sa <= 0.0:
        return lo
    if sb >= 0.0:
        return hi
    return brentq(lambda t: _tau_slope(mu, omega, t), a, b, xtol=1e-15, rtol=1e-15)


def f_kernel(mu: float, omega: float) -> float:
    """Exponent of G(mu n, omega n)."""
    mu, omega = _kernel_args(mu, omega)
    return tau_objective(mu, omega, tau_star(mu, omega))


def tau_star_closed_form(mu: float, omega: float) -> float | None:
    """Cubic-root formula for the stationary tau; None when no branch is real and admissible."""
    m, w = mu, omega
    a = (
        672 * m * w**2 + 192 * w * m**2 - 720 * w * m - 80 * w**3 - 396 * w**2
        + 432 * w + 512 * m**3 - 1152 * m**2 + 864 * m - 216
    )
    b = (
        24 * m * w**3 + 528 * m**2 * w**2 - 147 * w**4 - 144 * m * w**2 + 72 * w**3 - 12 * w**6
        + 136 * w**5 + 192 * w**4 * m**2 - 112 * w**5 * m - 96 * w**3 * m**2 - 48 * w**4 * m
        - 640 * w**2 * m**3 + 256 * w**2 * m**4
    )
    c = -w * m / 9 - 7 * w**2 / 36 + w / 3 - 4 * m**2 / 9 + 2 * m / 3 - 0.25
    base = (a + 36 * cmath.sqrt(b)) ** (1.0 / 3.0)
    lo, hi = tau_range(m, w)
    for k in range(3):
        u = base * cmath.exp(2j * math.pi * k / 3)
        if u == 0:
            continue
        t = u / 12 - 12 * c / u + w / 3 + 2 * m / 3 - 0.5
        if abs(t.imag) < 1e-9 and lo - 1e-12 <= t.real <= hi + 1e-12:
            return t.real
    return None


# ---------------------------------------------------------------------------
# error exponents


@dataclass(frozen=True)
class ExponentSpec:
    family: str
    p: float
    R: float | None = None
    R1: float | None = None
    R2: float | None = None

    def __post_init__(self) -> None:
        fam, R, R1, R2 = _rates(self.family, self.R, self.R1, self.R2)
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "R", R)
        if not 0.0 < self.p < 0.75:
            raise ValueError(f"p must lie in (0, 3/4), got {self.p!r}")

    @classmethod
    def css(cls, R: float, p: float, constraint: str = "balanced") -> "ExponentSpec":
        R1, R2 = css_rates(R, constraint)
        return cls("css", p, R1=R1, R2=R2)


def _inner_max(mu: float, delta: float, branches, step: float) -> float:
    lo, hi = delta + EPS, min(2.0 * mu, 1.0) - EPS
    if hi <= lo:
        return -math.inf
    best = -math.inf
    for b in branches:
        _, v = grid_golden_max(lambda w: b(w) + f_kernel(mu, w), lo, hi, step)
        best = max(best, v)
    return best


def error_exponent(spec: ExponentSpec, step: float = GRID_STEP) -> float:
    """Lower bound on the reliability function of the expurgated ensemble."""
    p = spec.p
    delta = delta_gv(spec.family, spec.R, spec.R1, spec.R2)
    branches = _expurgated_branches(spec.family, spec.R, spec.R1, spec.R2)
    lp, lq = math.log(p / 3.0) / LN4, math.log1p(-p) / LN4

    def outer(mu: float) -> float:
        inner = _inner_max(mu, delta, branches, step)
        return mu * lp + (1.0 - mu) * lq + min(_H(mu), inner)

    _, v = grid_golden_max(outer, delta / 2.0 + EPS, 1.0 - EPS, step)
    return max(0.0, -v)


def capacity_closed_form(p: float) -> float:
    return 1.0 - 2.0 * entropy_H(p)


def alpha_expurgated(p: float) -> float:
    return math.sqrt(4.0 / 3.0 * p * (1.0 - p)) + 2.0 * p / 3.0


def _raw_critical_rates(p: float) -> tuple[float, float]:
    s = math.sqrt(3.0 * p)
    r_cr = 1.0 - 2.0 * entropy_H(s / (s + math.sqrt(1.0 - p)))
    a = alpha_expurgated(p)
    r_min = 1.0 - 2.0 * entropy_H(3.0 * a / (1.0 + 3.0 * a))
    return r_min, r_cr


def critical_rates(p: float) -> tuple[float, float]:
    """(R_min, R_cr) separating the three branches of the explicit exponent, clamped at 0."""
    r_min, r_cr = _raw_critical_rates(p)
    return max(0.0, r_min), max(0.0, r_cr)


def explicit_stabilizer_exponent(R: float, p: float) -> float:
    """Piecewise closed form of the stabilizer error exponent."""
    if not 0.0 < p < 0.75:
        raise ValueError(f"p must lie in (0, 3/4), got {p!r}")
    if not 0.0 <= R <= 1.0:
        raise ValueError(f"R must lie in [0, 1], got {R!r}")
    cap = capacity_closed_form(p)
    if R >= cap:
        return 0.0
    r = (R + 1.0) / 2.0
    # unclamped thresholds: a negative R_min means the expurgated branch is empty
    r_min, r_cr = _raw_critical_rates(p)
    if R <= r_min:
        return -delta_gv("stabilizer", R) * math.log(alpha_expurgated(p)) / LN4
    if R <= r_cr:
        return 1.0 - math.log(1.0 + 2.0 * p + math.sqrt(12.0 * p * (1.0 - p))) / LN4 - r
    return max(0.0, entropy_T(delta_gv("stabilizer", R), p) - 1.0 + r)


def explicit_branches(R: float, p: float) -> tuple[float, float, float]:
    """All three branch values at R, for continuity checks."""
    r = (R + 1.0) / 2.0
    d = delta_gv("stabilizer", R)
    return (
        -d * math.log(alpha_expurgated(p)) / LN4,
        1.0 - math.log(1.0 + 2.0 * p + math.sqrt(12.0 * p * (1.0 - p))) / LN4 - r,
        entropy_T(d, p) - 1.0 + r,
    )


@dataclass(frozen=True)
class ExponentCurve:
    family: str
    p: float
    constraint: str | None
    points: tuple  # (R, E)


def exponent_curve(family: str, p: float, rates: Sequence[float], constraint: str = "balanced",
                   method: str = "numeric") -> ExponentCurve:
    pts = []
    for R in rates:
        if family in ("stab", "stabilizer"):
            E = explicit_stabilizer_exponent(R, p) if method == "explicit" else error_exponent(ExponentSpec("stabilizer", p, R=R))
        else:
            E = error_exponent(ExponentSpec.css(R, p, constraint))
        pts.append((R, E))
    fam = "stabilizer" if family in ("stab", "stabilizer") else "css"
    return ExponentCurve(fam, p, constraint if fam == "css" else None, tuple(pts))


def capacity_lower(family: str, p: float, constraint: str = "balanced", method: str = "numeric",
                   tol: float = 1e-6, threshold: float = 1e-10) -> float:
    """Largest quantum rate with a positive error exponent.

    For the stabilizer family ``method='closed'`` returns 1 - 2H(p); the
    numeric method bisects on the predicate E(R, p) > threshold.
    """
    if not 0.0 < p < 0.75:
        raise ValueError(f"p must lie in (0, 3/4), got {p!r}")
    stab = family in ("stab", "stabilizer", "linear_stabilizer", "lin-stab")
    if stab and method == "closed":
        return max(0.0, capacity_closed_form(p))
    if method not in ("closed", "numeric"):
        raise ValueError(f"unknown method {method!r}")
    if not stab and method == "closed":
        raise ValueError("css capacity has no closed form; use method='numeric'")

    def positive(R: float) -> bool:
        spec = ExponentSpec("stabilizer", p, R=R) if stab else ExponentSpec.css(R, p, constraint)
        return error_exponent(spec) > threshold

    lo, hi = 0.0, 1.0
    if not positive(lo):
        return 0.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if positive(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
