"""Average quantum enumerators of random stabilizer, linear stabilizer and CSS codes.

Every average is an exact rational.  Besides the full tables, each
:class:`EnumeratorPair` built here carries a closed form: for j >= 1

    X_j = C(n, j) * sum_lam coef_lam * lam**j

with lam in {1, 3, -3}.  The bound routines use it to evaluate sums over
weights without materialising quadratic-size tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .codes import EnumeratorPair, WeightDistribution
from .exactmath import binomial, gaussian_binomial as gb

FAMILIES = ("stabilizer", "linear_stabilizer", "css")
_ALIASES = {
    "stab": "stabilizer",
    "stabilizer": "stabilizer",
    "lin-stab": "linear_stabilizer",
    "lin_stab": "linear_stabilizer",
    "linear_stabilizer": "linear_stabilizer",
    "css": "css",
}


def normalize_family(name: str) -> str:
    try:
        return _ALIASES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; expected one of stab, lin-stab, css") from None


@dataclass(frozen=True)
class EnsembleSpec:
    family: str
    n: int
    k: int | None = None
    k1: int | None = None
    k2: int | None = None
    expurgation: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", normalize_family(self.family))
        object.__setattr__(self, "expurgation", frozenset(self.expurgation))
        n = self.n
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        if self.family == "css":
            if self.k1 is None or self.k2 is None:
                raise ValueError("css ensembles need k1 and k2")
            if not 0 <= self.k1 <= self.k2 <= n:
                raise ValueError(f"need 0 <= k1 <= k2 <= n, got k1={self.k1}, k2={self.k2}, n={n}")
        else:
            if self.k is None:
                raise ValueError(f"{self.family} ensembles need k")
            if not 0 <= self.k <= n:
                raise ValueError(f"need 0 <= k <= n, got k={self.k}, n={n}")
            if self.family == "linear_stabilizer" and (n - self.k) % 2:
                raise ValueError(f"linear stabilizer codes need n - k even, got n={n}, k={self.k}")
        if any(not 1 <= j <= n for j in self.expurgation):
            raise ValueError(f"expurgation weights must lie in 1..{n}")

    @property
    def quantum_k(self) -> int:
        return self.k2 - self.k1 if self.family == "css" else self.k

    def unexpurgated(self) -> "EnsembleSpec":
        return EnsembleSpec(self.family, self.n, self.k, self.k1, self.k2)


# ---------------------------------------------------------------------------
# self-orthogonal code counts


def self_orthogonal_count(n: int, t: int) -> int:
    """Number of self-orthogonal additive codes of size 2^t in GF(4)^n."""
    if not 0 <= t <= n:
        raise ValueError(f"need 0 <= t <= n, got n={n}, t={t}")
    num = den = 1
    for r in range(t):
        num *= 4 ** (n - r) - 1
        den *= 2 ** (r + 1) - 1
    q, rem = divmod(num, den)
    assert rem == 0
    return q


def containment_count(n: int, t: int) -> int:
    """Number of those codes that contain a given nonzero vector (t >= 1)."""
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got n={n}, t={t}")
    num = den = 1
    for r in range(1, t):
        num *= 4 ** (n - r) - 1
        den *= 2**r - 1
    q, rem = divmod(num, den)
    assert rem == 0
    return q


# ---------------------------------------------------------------------------
# CSS pair counting


@dataclass(frozen=True)
class CssCountTriple:
    c1: int  # number of pairs C1 <= C2
    c2: int  # pairs containing a fixed (a|0) plus pairs containing a fixed (0|b)
    c3: int  # pairs containing a fixed (a|b), a, b nonzero with a.b = 0


VECTOR_CLASSES = ("x_only", "z_only", "overlap_even", "overlap_odd", "disjoint")


def vector_class_count(n: int, k1: int, k2: int, cls: str) -> int:
    """Number of CSS pairs whose C^perp contains a fixed vector of the class.

    x_only: (a|0), a != 0.  z_only: (0|b), b != 0.  For a, b both nonzero:
    disjoint supports, overlapping supports with an even number of common
    ones (overlap_even), or an odd number (overlap_odd, never contained).
    """
    if not 0 <= k1 <= k2 <= n:
        raise ValueError(f"need 0 <= k1 <= k2 <= n, got ({n}, {k1}, {k2})")
    if cls == "x_only":
        # a in C1, then any C2 above C1
        return gb(n - 1, k1 - 1) * gb(n - k1, k2 - k1)
    if cls == "z_only":
        # C2 inside the hyperplane b^perp
        return gb(n - 1, k2) * gb(k2, k1)
    if cls in ("overlap_even", "disjoint"):
        # a in C1 <= C2 <= b^perp
        return gb(n - 2, k2 - 1) * gb(k2 - 1, k1 - 1)
    if cls == "overlap_odd":
        return 0
    raise ValueError(f"unknown vector class {cls!r}; expected one of {', '.join(VECTOR_CLASSES)}")


def vector_class_size(n: int, cls: str) -> int:
    """Number of vectors (a|b) in the class."""
    if cls in ("x_only", "z_only"):
        return 2**n - 1
    if cls == "disjoint":
        return 3**n - 2 ** (n + 1) + 1
    if cls == "overlap_even":
        return (4**n + 2**n) // 2 - 3**n
    if cls == "overlap_odd":
        return (4**n - 2**n) // 2
    raise ValueError(f"unknown vector class {cls!r}")


def css_count_triple(n: int, k1: int, k2: int) -> CssCountTriple:
    return CssCountTriple(
        gb(n, k2) * gb(k2, k1),
        vector_class_count(n, k1, k2, "x_only") + vector_class_count(n, k1, k2, "z_only"),
        vector_class_count(n, k1, k2, "overlap_even"),
    )


def css_ratios(n: int, k1: int, k2: int) -> tuple[Fraction, Fraction, Fraction]:
    """(x_only, z_only, overlap_even) counts divided by c1, in lowest terms.

    The Gaussian binomials cancel down to a few factors of the form 2^i - 1,
    which keeps these cheap at large n where c1 itself has millions of bits.
    """
    if not 0 <= k1 <= k2 <= n:
        raise ValueError(f"need 0 <= k1 <= k2 <= n, got ({n}, {k1}, {k2})")
    full = 2**n - 1
    x = Fraction(2**k1 - 1, full)
    z = Fraction(2 ** (n - k2) - 1, full)
    both = Fraction(0) if n < 2 else Fraction((2**k1 - 1) * (2 ** (n - k2) - 1), (2 ** (n - 1) - 1) * full)
    return x, z, both


# ---------------------------------------------------------------------------
# averages


def linear_stabilizer_alpha(n: int, k: int) -> Fraction:
    """Probability that a fixed nonzero even-type vector lies in a random C^perp."""
    if (n - k) % 2:
        raise ValueError(f"linear stabilizer codes need n - k even, got n={n}, k={k}")
    if k == n:
        return Fraction(0)
    return Fraction(2 ** (n - k) - 1, (4**n + (-2) ** n) // 2 - 1)


def _from_form(n: int, form: dict) -> WeightDistribution:
    counts = [Fraction(1)]
    for j in range(1, n + 1):
        c = binomial(n, j)
        counts.append(sum((Fraction(coef) * c * lam**j for lam, coef in form.items()), Fraction(0)))
    return WeightDistribution(n, tuple(counts))


def closed_forms(spec: EnsembleSpec) -> tuple[dict, dict]:
    """(B_form, Bperp_form) maps lam -> coefficient for the ensemble averages."""
    n = spec.n
    if spec.family == "stabilizer":
        k = spec.k
        total = 4**n - 1
        return {3: Fraction(2 ** (n + k) - 1, total)}, {3: Fraction(2 ** (n - k) - 1, total)}
    if spec.family == "linear_stabilizer":
        k = spec.k
        a = linear_stabilizer_alpha(n, k)
        half = a / 2
        scale = Fraction(1, 2 ** (n - k))
        bf = {3: (1 - a) * scale, -3: half * (-2) ** n * scale}
        return {lam: c for lam, c in bf.items() if c}, {3: half, -3: half}
    x, z, both = css_ratios(n, spec.k1, spec.k2)
    mixed = x + z - Fraction(3, 2) * both
    scale = Fraction(1, 2 ** (n - spec.quantum_k))
    pf = {1: mixed, 3: both / 2}
    bf = {1: 2**n * mixed * scale, 3: (1 - x - z + both) * scale}
    drop = lambda f: {lam: c for lam, c in f.items() if c}
    return drop(bf), drop(pf)


def average_enumerators(spec: EnsembleSpec) -> EnumeratorPair:
    """Exact average (B, Bperp) over the ensemble (expurgation set ignored)."""
    bf, pf = closed_forms(spec)
    n = spec.n
    return EnumeratorPair(_from_form(n, bf), _from_form(n, pf), n, spec.quantum_k, (bf, pf))


def difference_at(pair: EnumeratorPair, j: int) -> Fraction:
    """B_j - Bperp_j, using the closed form when the pair carries one."""
    if j == 0:
        return Fraction(0)
    form = pair.difference_form()
    if form is None:
        return pair.B[j] - pair.Bperp[j]
    c = binomial(pair.n, j)
    return sum((coef * c * lam**j for lam, coef in form.items()), Fraction(0))


# ---------------------------------------------------------------------------
# expurgation


@dataclass(frozen=True)
class ExpurgationResult:
    """Enumerator differences of the expurgated sub-ensemble.

    ``scaled_differences[j]`` is the upper bound (1/beta)(B_j - Bperp_j) for
    j outside I and 0 for j in I.
    """

    beta: Fraction
    scaled_differences: tuple[Fraction, ...]
    pair: EnumeratorPair
    removed: frozenset

    @property
    def n(self) -> int:
        return self.pair.n

    @property
    def k(self) -> int:
        return self.pair.k

    @property
    def inverse_beta(self) -> Fraction:
        return 1 / self.beta


def expurgate(pair: EnumeratorPair, removed: Iterable[int] = ()) -> ExpurgationResult:
    removed = frozenset(removed)
    n = pair.n
    if any(not 1 <= j <= n for j in removed):
        raise ValueError(f"expurgation weights must lie in 1..{n}")
    mass = Fraction(0)
    for j in sorted(removed):
        d = difference_at(pair, j)
        if d >= 1:
            raise ValueError(f"cannot expurgate weight {j}: B_{j} - Bperp_{j} = {d} >= 1")
        mass += d
    beta = 1 - mass
    if beta <= 0:
        raise ValueError(f"expurgation leaves beta = {beta} <= 0")
    diffs = tuple(
        Fraction(0) if (j in removed or j == 0) else difference_at(pair, j) / beta for j in range(n + 1)
    )
    return ExpurgationResult(beta, diffs, pair, removed)


def auto_expurgation_set(pair: EnumeratorPair) -> frozenset:
    """Largest prefix {1..d-1} whose differences are each < 1 and keep beta > 0."""
    mass = Fraction(0)
    chosen = []
    for j in range(1, pair.n + 1):
        d = difference_at(pair, j)
        if d >= 1 or mass + d >= 1:
            break
        mass += d
        chosen.append(j)
    return frozenset(chosen)


def ensemble_source(spec: EnsembleSpec):
    """The pair, or its expurgation when the EnsembleSpec names removed weights."""
    pair = average_enumerators(spec)
    if spec.expurgation:
        return expurgate(pair, spec.expurgation)
    return pair
