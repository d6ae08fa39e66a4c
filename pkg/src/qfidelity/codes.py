"""Small concrete codes: binary codes, additive GF(4) codes and stabilizer codes.

Vectors are Python ints used as bit masks.  A binary vector of length n has
coordinate i in bit i.  A GF(4) vector v = a + w*b is packed symplectically as
``a | (b << n)``; the trace inner product is then the symplectic form
a.b' + a'.b (mod 2) and the Hamming weight is popcount(a | b).

GF(4) symbols are written 0, 1, 2, 3 for 0, 1, w, w^2 (so symbol = a + 2b),
or as the characters '0', '1', 'w', 'W' in text files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence, Union

import numpy as np

from .exactmath import krawtchouk_matrix

MAX_ENUMERATION = 1 << 24

SYMBOL_CHARS = "01wW"


class CapExceededError(RuntimeError):
    """An exhaustive computation would exceed its hard size cap."""


# ---------------------------------------------------------------------------
# GF(2) linear algebra on int rows


def rref(rows: Iterable[int]) -> list[int]:
    """Reduced row echelon form; rows returned by decreasing leading bit."""
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            # clear the new pivot from the existing rows
            top = 1 << (r.bit_length() - 1)
            basis = [b ^ r if b & top else b for b in basis]
            basis.append(r)
    basis.sort(reverse=True)
    return basis


def in_span(basis: Sequence[int], v: int) -> bool:
    """Membership test against a basis already in :func:`rref` form."""
    for b in basis:
        v = min(v, v ^ b)
    return v == 0


def nullspace(rows: Sequence[int], nbits: int) -> list[int]:
    """Basis of {x : popcount(x & r) even for every r}."""
    red = rref(rows)
    pivots = {r.bit_length() - 1: r for r in red}
    free = [i for i in range(nbits) if i not in pivots]
    out = []
    for f in free:
        x = 1 << f
        for p, r in pivots.items():
            if (r >> f) & 1:
                x |= 1 << p
        out.append(x)
    return rref(out)


def _parity(x: int) -> int:
    return x.bit_count() & 1


def span(basis: Sequence[int]) -> np.ndarray:
    """All 2^len(basis) combinations, as a uint64 array (Gray-code order)."""
    if len(basis) > 24:
        raise CapExceededError(f"span of {len(basis)} generators exceeds 2^24 vectors")
    out = np.zeros(1, dtype=np.uint64)
    for g in basis:
        out = np.concatenate([out, out ^ np.uint64(g)])
    return out


# ---------------------------------------------------------------------------
# GF(4) symbols and the trace product


# (a + bw)(c + dw) = (ac + bd) + (ad + bc + bd)w
def _gf4_mul(x: int, y: int) -> int:
    a, b = x & 1, x >> 1
    c, d = y & 1, y >> 1
    return ((a & c) ^ (b & d)) | (((a & d) ^ (b & c) ^ (b & d)) << 1)


def _gf4_conj(x: int) -> int:
    # conj(a + bw) = a + b w^2 = (a + b) + bw
    a, b = x & 1, x >> 1
    return (a ^ b) | (b << 1)


def _symbols(v: Union[str, Sequence[int]]) -> list[int]:
    if isinstance(v, str):
        try:
            return [SYMBOL_CHARS.index(c) for c in v]
        except ValueError:
            raise ValueError(f"invalid GF(4) symbol in {v!r}") from None
    out = [int(s) for s in v]
    if any(s not in (0, 1, 2, 3) for s in out):
        raise ValueError(f"GF(4) symbols must be 0..3, got {v!r}")
    return out


def trace_inner_product(u: Union[str, Sequence[int]], v: Union[str, Sequence[int]]) -> int:
    """Tr(sum u_i conj(v_i)) computed with GF(4) field arithmetic."""
    u, v = _symbols(u), _symbols(v)
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} != {len(v)}")
    acc = 0
    for x, y in zip(u, v):
        acc ^= _gf4_mul(x, _gf4_conj(y))
    return acc >> 1  # Tr(a + bw) = b


def pack_gf4(v: Union[str, Sequence[int]]) -> int:
    s = _symbols(v)
    n = len(s)
    a = sum((x & 1) << i for i, x in enumerate(s))
    b = sum((x >> 1) << i for i, x in enumerate(s))
    return a | (b << n)


def unpack_gf4(x: int, n: int) -> str:
    return "".join(SYMBOL_CHARS[((x >> i) & 1) | (((x >> (n + i)) & 1) << 1)] for i in range(n))


def symplectic_product(x: int, y: int, n: int) -> int:
    return _parity(x & _swap(y, n))


def _swap(x: int, n: int) -> int:
    mask = (1 << n) - 1
    return (x >> n) | ((x & mask) << n)


def gf4_weight(x: int, n: int) -> int:
    return ((x | (x >> n)) & ((1 << n) - 1)).bit_count()


# ---------------------------------------------------------------------------
# code types


@dataclass(frozen=True)
class BinaryCode:
    """Binary linear [n, k] code kept in reduced row echelon form."""

    n: int
    generator: tuple[int, ...]

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[int]) -> "BinaryCode":
        rows = list(rows)
        if any(r >> n for r in rows):
            raise ValueError(f"row wider than n={n}")
        return cls(n, tuple(rref(rows)))

    @classmethod
    def full(cls, n: int) -> "BinaryCode":
        return cls.from_rows(n, [1 << i for i in range(n)])

    @property
    def k(self) -> int:
        return len(self.generator)

    @property
    def size(self) -> int:
        return 1 << self.k

    def __contains__(self, v: int) -> bool:
        return in_span(self.generator, v)

    def codewords(self) -> np.ndarray:
        return span(self.generator)


@dataclass(frozen=True)
class Gf4AdditiveCode:
    """Additive code over GF(4) with symplectic binary generators (a | b)."""

    n: int
    generators: tuple[int, ...]

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[int]) -> "Gf4AdditiveCode":
        rows = list(rows)
        if any(r >> (2 * n) for r in rows):
            raise ValueError(f"row wider than 2n={2 * n}")
        return cls(n, tuple(rref(rows)))

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> "Gf4AdditiveCode":
        rows = list(rows)
        n = len(rows[0]) if rows else 0
        if any(len(r) != n for r in rows):
            raise ValueError("ragged GF(4) rows")
        return cls.from_rows(n, [pack_gf4(r) for r in rows])

    @classmethod
    def zero(cls, n: int) -> "Gf4AdditiveCode":
        return cls(n, ())

    @property
    def dimension(self) -> int:
        """Number of independent GF(2) generators (log2 of the size)."""
        return len(self.generators)

    @property
    def size(self) -> int:
        return 1 << self.dimension

    def __contains__(self, v: int) -> bool:
        return in_span(self.generators, v)

    def codewords(self) -> np.ndarray:
        return span(self.generators)

    def is_self_orthogonal(self) -> bool:
        g = self.generators
        return all(symplectic_product(x, y, self.n) == 0 for i, x in enumerate(g) for y in g[i:])

    def rows(self) -> list[str]:
        return [unpack_gf4(g, self.n) for g in self.generators]


def hermitian_dual(code: Gf4AdditiveCode) -> Gf4AdditiveCode:
    """Trace-Hermitian dual; |C| |C^perp| = 4^n."""
    n = code.n
    return Gf4AdditiveCode(n, tuple(nullspace([_swap(g, n) for g in code.generators], 2 * n)))


def euclidean_dual(code: BinaryCode) -> BinaryCode:
    return BinaryCode(code.n, tuple(nullspace(code.generator, code.n)))


def css_stabilizer(c1: BinaryCode, c2: BinaryCode) -> Gf4AdditiveCode:
    """The stabilizer code C^perp with binary generator [G_C1 0; 0 G_C2perp].

    C1 occupies the a (X) half and C2^perp the b (Z) half.  The quantum code
    has k = k2 - k1.
    """
    if c1.n != c2.n:
        raise ValueError(f"length mismatch: {c1.n} != {c2.n}")
    n = c1.n
    for i, g in enumerate(c1.generator):
        if g not in c2:
            bits = "".join(str((g >> j) & 1) for j in range(n))
            raise ValueError(f"C1 generator {i} ({bits}) is not in C2")
    rows = list(c1.generator) + [h << n for h in euclidean_dual(c2).generator]
    return Gf4AdditiveCode.from_rows(n, rows)


# ---------------------------------------------------------------------------
# text format


def parse_rows(text: str) -> tuple[str, list[str]]:
    """Parse a matrix file; returns ('binary' | 'gf4', rows).

    One row per line, characters {0,1} (binary) or {0,1,w,W}; blank lines and
    '#' comments are ignored; ragged rows are rejected.
    """
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        bad = set(line) - set(SYMBOL_CHARS)
        if bad:
            raise ValueError(f"line {lineno}: invalid characters {''.join(sorted(bad))!r}")
        rows.append(line)
    if not rows:
        raise ValueError("no rows found")
    if len({len(r) for r in rows}) != 1:
        raise ValueError("ragged rows: all rows must have the same length")
    kind = "gf4" if any(c in "wW" for r in rows for c in r) else "binary"
    return kind, rows


def read_code_file(path: Union[str, Path], kind: str | None = None):
    """Load a BinaryCode or Gf4AdditiveCode from a matrix file.

    ``kind`` forces 'binary' or 'gf4'; by default a file of pure 0/1 rows is
    read as binary.
    """
    detected, rows = parse_rows(Path(path).read_text())
    kind = kind or detected
    if kind == "gf4":
        return Gf4AdditiveCode.from_strings(rows)
    if detected == "gf4":
        raise ValueError("GF(4) symbols in a binary code file")
    n = len(rows[0])
    return BinaryCode.from_rows(n, [int(r[::-1], 2) for r in rows])


# ---------------------------------------------------------------------------
# weight distributions


@dataclass(frozen=True)
class WeightDistribution:
    """Weight counts (exact rationals) indexed 0..n."""

    n: int
    counts: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.n + 1:
            raise ValueError(f"need n+1={self.n + 1} counts, got {len(self.counts)}")
        object.__setattr__(self, "counts", tuple(Fraction(c) for c in self.counts))

    def __getitem__(self, j: int) -> Fraction:
        return self.counts[j]

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def total(self) -> Fraction:
        return sum(self.counts, Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.counts)


def _counts_from_words(words: np.ndarray, n: int, gf4: bool) -> list[int]:
    mask = np.uint64((1 << n) - 1)
    if gf4:
        support = (words | (words >> np.uint64(n))) & mask
    else:
        support = words
    wt = np.bitwise_count(support)
    return [int(c) for c in np.bincount(wt, minlength=n + 1)]


def weight_enumerator(code: Union[BinaryCode, Gf4AdditiveCode]) -> WeightDistribution:
    """Exact weight distribution, via the smaller of code and dual."""
    gf4 = isinstance(code, Gf4AdditiveCode)
    dim = code.dimension if gf4 else code.k
    if dim <= 24:
        return WeightDistribution(code.n, tuple(_counts_from_words(code.codewords(), code.n, gf4)))
    dual = hermitian_dual(code) if gf4 else euclidean_dual(code)
    ddim = dual.dimension if gf4 else dual.k
    if ddim > 24:
        raise CapExceededError(f"code and dual both exceed 2^24 words (n={code.n})")
    inner = weight_enumerator(dual)
    return macwilliams(inner, 1 << ddim, 4 if gf4 else 2)


def macwilliams(dist: WeightDistribution, code_size: int, q: int) -> WeightDistribution:
    """A_j^perp = (1/|C|) sum_i A_i K_j(i)."""
    if q not in (2, 4):
        raise ValueError(f"q must be 2 or 4, got {q}")
    n = dist.n
    K = krawtchouk_matrix(q, n)
    size = Fraction(code_size)
    out = []
    for j in range(n + 1):
        row = K[j]
        out.append(sum((dist[i] * row[i] for i in range(n + 1) if dist[i]), Fraction(0)) / size)
    return WeightDistribution(n, tuple(out))


@dataclass(frozen=True)
class EnumeratorPair:
    """Quantum enumerators (B, B^perp) of a code or an ensemble average.

    ``closed_form`` optionally records (B_form, Bperp_form) where each form
    maps a base lam to a coefficient so that X_j = C(n, j) * sum coef * lam^j
    for j >= 1.  Bound routines use it to avoid quadratic-size tables.
    """

    B: WeightDistribution
    Bperp: WeightDistribution
    n: int
    k: int
    closed_form: tuple[dict, dict] | None = field(default=None, compare=False)

    def differences(self) -> tuple[Fraction, ...]:
        return tuple(b - bp for b, bp in zip(self.B, self.Bperp))

    def difference_form(self) -> dict | None:
        if self.closed_form is None:
            return None
        bf, pf = self.closed_form
        out = dict(bf)
        for lam, c in pf.items():
            out[lam] = out.get(lam, 0) - c
        return {lam: Fraction(c) for lam, c in out.items() if c != 0}

    def check(self) -> None:
        """Raise ValueError if a structural invariant fails."""
        n, k = self.n, self.k
        if self.B[0] != 1 or self.Bperp[0] != 1:
            raise ValueError("B_0 and Bperp_0 must equal 1")
        if any(b < bp for b, bp in zip(self.B, self.Bperp)):
            raise ValueError("B_j < Bperp_j for some j")
        if self.B.total() != 2 ** (n + k) or self.Bperp.total() != 2 ** (n - k):
            raise ValueError("enumerator sums do not match 2^(n+k), 2^(n-k)")
        if macwilliams(self.Bperp, 2 ** (n - k), 4) != self.B:
            raise ValueError("B is not the MacWilliams transform of Bperp")

    def minimum_distance(self) -> int | None:
        """Smallest j with B_j > Bperp_j (None when B = Bperp)."""
        for j, (b, bp) in enumerate(zip(self.B, self.Bperp)):
            if b > bp:
                return j
        return None


def enumerator_pair(stabilizer: Gf4AdditiveCode) -> EnumeratorPair:
    """True enumerators of the stabilizer code whose C^perp is ``stabilizer``."""
    if not stabilizer.is_self_orthogonal():
        raise ValueError("generators are not self-orthogonal under the trace product")
    n = stabilizer.n
    bp = weight_enumerator(stabilizer)
    b = weight_enumerator(hermitian_dual(stabilizer))
    return EnumeratorPair(b, bp, n, n - stabilizer.dimension)


def brute_force_distance(stabilizer: Gf4AdditiveCode) -> int | None:
    """Minimum weight over C \\ C^perp by exhaustive search."""
    n = stabilizer.n
    inner = set(int(x) for x in stabilizer.codewords())
    best = None
    for x in hermitian_dual(stabilizer).codewords():
        x = int(x)
        if x in inner:
            continue
        w = gf4_weight(x, n)
        if best is None or w < best:
            best = w
    return best


# ---------------------------------------------------------------------------
# standard array


class StandardArray:
    """Syndrome table of a stabilizer code with minimum-weight leading cosets.

    Rows are the cosets of C; in each row the leader is the lexicographically
    smallest minimum-weight vector (symbol order 0 < 1 < w < w^2, first
    coordinate most significant) and the leading C^perp-coset is the one that
    contains it.  The correctable set J is the union of the leading cosets.
    """

    def __init__(self, stabilizer: Gf4AdditiveCode, cap: int = MAX_ENUMERATION):
        n = stabilizer.n
        if 4**n > cap:
            raise CapExceededError(f"standard array needs 4^{n} vectors, cap is {cap}")
        if not stabilizer.is_self_orthogonal():
            raise ValueError("generators are not self-orthogonal under the trace product")
        self.code = stabilizer
        self.n = n
        dtype = np.uint32 if 2 * n <= 32 else np.uint64
        x = np.arange(4**n, dtype=dtype)
        mask = dtype((1 << n) - 1)

        syndrome = np.zeros(x.shape, dtype=np.int64)
        for i, g in enumerate(stabilizer.generators):
            bit = np.bitwise_count(x & dtype(_swap(g, n))) & 1
            syndrome |= bit.astype(np.int64) << i
        weight = np.bitwise_count((x | (x >> dtype(n))) & mask).astype(np.int64)

        key = np.zeros(x.shape, dtype=np.int64)
        for i in range(n):
            sym = ((x >> dtype(i)) & 1).astype(np.int64) + 2 * ((x >> dtype(n + i)) & 1).astype(np.int64)
            key = key * 4 + sym

        order = np.lexsort((key, weight, syndrome))
        first = np.unique(syndrome[order], return_index=True)[1]
        self.leaders = x[order[first]]  # indexed by syndrome

        diff = x ^ self.leaders[syndrome]
        in_j = np.ones(x.shape, dtype=bool)
        for h in hermitian_dual(stabilizer).generators:
            in_j &= (np.bitwise_count(diff & dtype(_swap(h, n))) & 1) == 0
        self._weight = weight
        self._in_j = in_j
        self.uncorrectable = tuple(
            int(c) for c in np.bincount(weight[~in_j], minlength=n + 1)
        )

    def leader_weights(self) -> list[int]:
        n = self.n
        return [gf4_weight(int(v), n) for v in self.leaders]

    def correctable_count(self) -> int:
        return int(self._in_j.sum())

    def infidelity_bound(self, p: float) -> float:
        """Sum of Pr(E_x) over x outside J, summed by weight without cancellation."""
        n = self.n
        return math.fsum(
            u * (p / 3) ** m * (1 - p) ** (n - m) for m, u in enumerate(self.uncorrectable) if u
        )


def exact_infidelity_bound(stabilizer: Gf4AdditiveCode, p: float) -> float:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    return StandardArray(stabilizer).infidelity_bound(p)


def uncorrectable_count_by_weight(stabilizer: Gf4AdditiveCode, m: int) -> int:
    arr = StandardArray(stabilizer)
    if not 0 <= m <= arr.n:
        return 0
    return arr.uncorrectable[m]


# ---------------------------------------------------------------------------
# named small codes used by tests and the verify command


def five_qubit_code() -> Gf4AdditiveCode:
    """The [[5,1,3]] perfect code: cyclic shifts of XZZXI."""
    return Gf4AdditiveCode.from_strings(["1ww10", "01ww1", "101ww", "w101w"])


def hamming_7_4() -> BinaryCode:
    rows = ["1000110", "0100101", "0010011", "0001111"]
    return BinaryCode.from_rows(7, [int(r[::-1], 2) for r in rows])


def steane_code() -> Gf4AdditiveCode:
    ham = hamming_7_4()
    return css_stabilizer(euclidean_dual(ham), ham)
