"""Exact combinatorics, entropy functions and log-domain reals.

Counts are plain Python ints and exact averages are ``fractions.Fraction``;
both are arbitrary precision, so nothing here ever rounds until a value is
explicitly converted to a :class:`LogReal` or a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Count = int
Ratio = Fraction

LN2 = math.log(2.0)
LN4 = math.log(4.0)
LOG4_3 = math.log(3.0) / LN4

# ---------------------------------------------------------------------------
# integer combinatorics


def binomial(n: int, m: int) -> int:
    """C(n, m), zero outside 0 <= m <= n."""
    if n < 0 or m < 0 or m > n:
        return 0
    return math.comb(n, m)


def gaussian_binomial(n: int, k: int) -> int:
    """Base-2 Gaussian binomial [n, k]; zero when k < 0 or k > n.

    Built up as [n, j+1] = [n, j] (2^(n-j) - 1) / (2^(j+1) - 1); every
    partial product is itself a Gaussian binomial, so each division is exact.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for j in range(k):
        out, r = divmod(out * ((1 << (n - j)) - 1), (1 << (j + 1)) - 1)
        assert r == 0, (n, k)
    return out


def krawtchouk(q: int, n: int, j: int, i: int) -> int:
    """Krawtchouk polynomial K_j(i) for alphabet size ``q`` and length ``n``."""
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if not (0 <= j <= n and 0 <= i <= n):
        raise ValueError(f"need 0 <= j, i <= n; got n={n}, j={j}, i={i}")
    total = 0
    for t in range(j + 1):
        total += (-q) ** t * (q - 1) ** (j - t) * binomial(n - t, j - t) * binomial(i, t)
    return total


@lru_cache(maxsize=64)
def krawtchouk_matrix(q: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Rows j, columns i of K_j(i), built from the generating function.

    (1 + (q-1)z)^(n-i) (1-z)^i = sum_j K_j(i) z^j, which is much cheaper than
    the defining sum when the whole table is needed.
    """
    cols = []
    for i in range(n + 1):
        a = [binomial(n - i, r) * (q - 1) ** r for r in range(n - i + 1)]
        b = [(-1) ** r * binomial(i, r) for r in range(i + 1)]
        prod = [0] * (n + 1)
        for x, ax in enumerate(a):
            if ax:
                for y, by in enumerate(b):
                    prod[x + y] += ax * by
        cols.append(prod)
    return tuple(tuple(cols[i][j] for i in range(n + 1)) for j in range(n + 1))


# ---------------------------------------------------------------------------
# entropies (base 4 unless noted)


def _xlogy(x: float, y: float) -> float:
    if x == 0.0:
        return 0.0
    return x * math.log(y)


def _check_unit(name: str, x: float) -> None:
    if not (0.0 <= x <= 1.0) or math.isnan(x):
        raise ValueError(f"{name} must lie in [0, 1], got {x!r}")


def entropy_T(x: float, y: float) -> float:
    """T(x, y) = x log4 3 - x log4 y - (1 - x) log4 (1 - y)."""
    _check_unit("x", x)
    _check_unit("y", y)
    if (y == 0.0 and x > 0.0) or (y == 1.0 and x < 1.0):
        raise ValueError(f"T({x}, {y}) diverges")
    return x * LOG4_3 - (_xlogy(x, y) + _xlogy(1.0 - x, 1.0 - y)) / LN4


def entropy_H(x: float) -> float:
    """Quaternary-style entropy H(x) = T(x, x); H(3/4) = 1."""
    _check_unit("x", x)
    return x * LOG4_3 - (_xlogy(x, x) + _xlogy(1.0 - x, 1.0 - x)) / LN4


def entropy_H2(x: float) -> float:
    """Binary entropy in bits."""
    _check_unit("x", x)
    return -(_xlogy(x, x) + _xlogy(1.0 - x, 1.0 - x)) / LN2


_BRANCH = {"H": (entropy_H, 0.75, 1.0), "H2": (entropy_H2, 0.5, 1.0)}


def inverse_entropy(which: str, y: float, tol: float = 1e-12) -> float:
    """Inverse of H or H2 on its increasing branch, by bisection.

    The branch is [0, 3/4] for H and [0, 1/2] for H2.
    """
    try:
        f, hi, ymax = _BRANCH[which]
    except KeyError:
        raise ValueError(f"unknown entropy {which!r}; expected 'H' or 'H2'") from None
    if not (0.0 <= y <= ymax) or math.isnan(y):
        raise ValueError(f"{which}^-1 argument must lie in [0, {ymax}], got {y!r}")
    if y == 0.0:
        return 0.0
    if y == ymax:
        return hi
    lo = 0.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if f(mid) < y:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# signed log-domain reals


@dataclass(frozen=True)
class LogReal:
    """A real number stored as sign and natural-log magnitude."""

    sign: int
    log_magnitude: float

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign}")
        if self.sign == 0 and self.log_magnitude != -math.inf:
            object.__setattr__(self, "log_magnitude", -math.inf)
        if self.sign != 0 and self.log_magnitude == -math.inf:
            object.__setattr__(self, "sign", 0)

    @classmethod
    def zero(cls) -> "LogReal":
        return cls(0, -math.inf)

    @classmethod
    def from_float(cls, x: float) -> "LogReal":
        if x == 0.0:
            return cls.zero()
        return cls(1 if x > 0 else -1, math.log(abs(x)))

    @classmethod
    def from_log4(cls, sign: int, log4: float) -> "LogReal":
        return cls(sign, log4 * LN4 if sign else -math.inf)

    @property
    def log4(self) -> float:
        """Base-4 exponent of the magnitude."""
        return self.log_magnitude / LN4

    def is_zero(self) -> bool:
        return self.sign == 0

    def __float__(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_magnitude)

    def __neg__(self) -> "LogReal":
        return LogReal(-self.sign, self.log_magnitude)

    def __add__(self, other: "LogReal") -> "LogReal":
        return lr_add(self, other)

    def __mul__(self, other: "LogReal") -> "LogReal":
        return lr_mul(self, other)

    def __repr__(self) -> str:
        if self.sign == 0:
            return "LogReal(0)"
        return f"LogReal({'-' if self.sign < 0 else ''}4^{self.log4:.6g})"


def lr_add(x: LogReal, y: LogReal) -> LogReal:
    if x.sign == 0:
        return y
    if y.sign == 0:
        return x
    if x.log_magnitude < y.log_magnitude:
        x, y = y, x
    d = y.log_magnitude - x.log_magnitude
    if x.sign == y.sign:
        return LogReal(x.sign, x.log_magnitude + math.log1p(math.exp(d)))
    if d == 0.0:
        return LogReal.zero()
    return LogReal(x.sign, x.log_magnitude + math.log1p(-math.exp(d)))


def lr_mul(x: LogReal, y: LogReal) -> LogReal:
    if x.sign == 0 or y.sign == 0:
        return LogReal.zero()
    return LogReal(x.sign * y.sign, x.log_magnitude + y.log_magnitude)


def lr_sum(terms: Iterable[LogReal]) -> LogReal:
    """Sum many LogReals, pooling same-sign terms before cancelling."""
    pos: list[float] = []
    neg: list[float] = []
    for t in terms:
        if t.sign > 0:
            pos.append(t.log_magnitude)
        elif t.sign < 0:
            neg.append(t.log_magnitude)
    return lr_add(LogReal(1, logsumexp(pos)), LogReal(-1, logsumexp(neg)))


def logsumexp(logs: list[float]) -> float:
    if not logs:
        return -math.inf
    top = max(logs)
    if top == -math.inf:
        return top
    return top + math.log(math.fsum(math.exp(v - top) for v in logs))


def _log_int(x: int) -> float:
    # split off low bits so the float conversion never overflows
    bl = x.bit_length()
    if bl <= 1000:
        return math.log(x)
    shift = bl - 64
    return math.log(x >> shift) + shift * LN2


def lr_from_count(x: int) -> LogReal:
    if x == 0:
        return LogReal.zero()
    return LogReal(1 if x > 0 else -1, _log_int(abs(x)))


def lr_from_ratio(x: Union[Fraction, int]) -> LogReal:
    x = Fraction(x)
    if x == 0:
        return LogReal.zero()
    return LogReal(1 if x > 0 else -1, _log_int(abs(x.numerator)) - _log_int(x.denominator))
