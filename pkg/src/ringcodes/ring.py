"""Exact arithmetic in the ring R_k = Z_m[v1, ..., vk] with vi^2 = vi.

An element is a vector of 2^k residues mod m indexed by subset bitmask:
position U (bit i-1 set iff vi divides the monomial) holds the coefficient
of v_U = prod_{i in U} vi, with v_empty = 1.  Multiplication is
subset-union convolution, since v_U * v_W = v_{U union W}.

Evaluating an element at a 0/1 assignment of the vi sums the coefficients
of the monomials supported inside the assignment, so the subset zeta
transform of the coefficient vector lists all 2^k evaluations at once.
That transform realizes the splitting R_k ~ Z_m x ... x Z_m (2^k factors),
which is what `is_unit` and the unit count u(m)^(2^k) rest on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

#: Default cap for operations that materialize a whole ring power R_k^n.
DEFAULT_GUARD = 1 << 24


class GuardExceeded(RuntimeError):
    """An operation refused to materialize an enumeration above the cap."""


def ensure_enumerable(count: int, guard: int | None, what: str) -> None:
    cap = DEFAULT_GUARD if guard is None else guard
    if count > cap:
        raise GuardExceeded(f"{what} would enumerate {count} items (cap {cap})")


# ---------------------------------------------------------------------------
# subset transforms (bitmask butterflies)
# ---------------------------------------------------------------------------

def subset_zeta(coeffs: Sequence[int], m: int) -> tuple[int, ...]:
    """Zeta transform: out[T] = sum_{S subseteq T} coeffs[S] mod m."""
    out = list(coeffs)
    n = len(out)
    bit = 1
    while bit < n:
        for mask in range(n):
            if mask & bit:
                out[mask] = (out[mask] + out[mask ^ bit]) % m
        bit <<= 1
    return tuple(out)


def subset_moebius(values: Sequence[int], m: int) -> tuple[int, ...]:
    """Inverse of `subset_zeta`: out[S] = sum_{T subseteq S} (-1)^|S\\T| values[T]."""
    out = list(values)
    n = len(out)
    bit = 1
    while bit < n:
        for mask in range(n):
            if mask & bit:
                out[mask] = (out[mask] - out[mask ^ bit]) % m
        bit <<= 1
    return tuple(out)


# ---------------------------------------------------------------------------
# ring specification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RingSpec:
    """The ring Z_m[v1..vk]; m >= 2, k >= 0 (k = 0 is the base ring Z_m)."""

    m: int
    k: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"base modulus must be >= 2, got {self.m}")
        if self.k < 0:
            raise ValueError(f"number of generators must be >= 0, got {self.k}")
        if self.k > 20:
            raise ValueError(f"k={self.k} is far beyond the desk-scale contract")

    @property
    def ncoeffs(self) -> int:
        """Number of coefficient positions, 2^k."""
        return 1 << self.k

    def cardinality(self) -> int:
        """|R_k| = m^(2^k).  Exact (arbitrary precision)."""
        return self.m ** self.ncoeffs

    # ---- element constructors ----

    def element(self, coeffs: Sequence[int]) -> RkElement:
        if len(coeffs) != self.ncoeffs:
            raise ValueError(
                f"expected {self.ncoeffs} coefficients for k={self.k}, got {len(coeffs)}"
            )
        return RkElement(self, tuple(c % self.m for c in coeffs))

    def zero(self) -> RkElement:
        return RkElement(self, (0,) * self.ncoeffs)

    def one(self) -> RkElement:
        return self.scalar(1)

    def scalar(self, c: int) -> RkElement:
        coeffs = [0] * self.ncoeffs
        coeffs[0] = c % self.m
        return RkElement(self, tuple(coeffs))

    def gen(self, i: int) -> RkElement:
        """The generator v_i, 1 <= i <= k."""
        if not 1 <= i <= self.k:
            raise ValueError(f"generator index must be in 1..{self.k}, got {i}")
        coeffs = [0] * self.ncoeffs
        coeffs[1 << (i - 1)] = 1
        return RkElement(self, tuple(coeffs))

    def monomial(self, mask: int, c: int = 1) -> RkElement:
        """c * v_U for the subset U given as a bitmask."""
        if not 0 <= mask < self.ncoeffs:
            raise ValueError(f"monomial mask {mask} out of range for k={self.k}")
        coeffs = [0] * self.ncoeffs
        coeffs[mask] = c % self.m
        return RkElement(self, tuple(coeffs))

    def from_index(self, idx: int) -> RkElement:
        """Inverse of `RkElement.index`; decodes base-m digits, first coeff
        most significant, so index order equals lexicographic coefficient order."""
        coeffs = []
        for _ in range(self.ncoeffs):
            coeffs.append(idx % self.m)
            idx //= self.m
        return RkElement(self, tuple(reversed(coeffs)))

    def elements(self, guard: int | None = None) -> Iterator[RkElement]:
        """All ring elements in canonical (lexicographic) order."""
        ensure_enumerable(self.cardinality(), guard, f"ring {self}")
        for coeffs in product(range(self.m), repeat=self.ncoeffs):
            yield RkElement(self, coeffs)

    def __repr__(self) -> str:
        if self.k == 0:
            return f"Z{self.m}"
        gens = ",".join(f"v{i}" for i in range(1, self.k + 1)) if self.k > 1 else "v"
        return f"Z{self.m}[{gens}]"


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

def _check_same_ring(a: RkElement, b: RkElement) -> None:
    if a.ring != b.ring:
        raise ValueError(f"ring mismatch: {a.ring} vs {b.ring}")


class RkElement:
    """Immutable element of R_k; `coeffs[U]` is the coefficient of v_U."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: RingSpec, coeffs: tuple[int, ...]):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("RkElement is immutable")

    # ---- arithmetic ----

    def __add__(self, other: RkElement) -> RkElement:
        _check_same_ring(self, other)
        m = self.ring.m
        return RkElement(
            self.ring, tuple((x + y) % m for x, y in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: RkElement) -> RkElement:
        _check_same_ring(self, other)
        m = self.ring.m
        return RkElement(
            self.ring, tuple((x - y) % m for x, y in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> RkElement:
        m = self.ring.m
        return RkElement(self.ring, tuple((-x) % m for x in self.coeffs))

    def __mul__(self, other: RkElement | int) -> RkElement:
        if isinstance(other, int):
            m = self.ring.m
            return RkElement(self.ring, tuple((x * other) % m for x in self.coeffs))
        _check_same_ring(self, other)
        m = self.ring.m
        out = [0] * self.ring.ncoeffs
        for u, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for w, y in enumerate(other.coeffs):
                if y:
                    out[u | w] = (out[u | w] + x * y) % m
        return RkElement(self.ring, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> RkElement:
        if e < 0:
            raise ValueError("negative powers are not supported")
        acc = self.ring.one()
        for _ in range(e):
            acc = acc * self
        return acc

    # ---- structure ----

    def psi_coords(self) -> tuple[int, ...]:
        """Coordinates in the product splitting (the subset zeta transform)."""
        return subset_zeta(self.coeffs, self.ring.m)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_unit(self) -> bool:
        """Unit iff every product-splitting coordinate is invertible mod m."""
        m = self.ring.m
        return all(math.gcd(c, m) == 1 for c in self.psi_coords())

    def index(self) -> int:
        """Canonical index: coefficient list read as base-m digits."""
        idx = 0
        for c in self.coeffs:
            idx = idx * self.ring.m + c
        return idx

    # ---- comparisons / hashing ----

    def __eq__(self, other) -> bool:
        if isinstance(other, RkElement):
            return self.ring == other.ring and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def __lt__(self, other: RkElement) -> bool:
        _check_same_ring(self, other)
        return self.coeffs < other.coeffs

    # ---- display ----

    def __repr__(self) -> str:
        terms = []
        for mask, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if mask == 0:
                terms.append(str(c))
                continue
            if self.ring.k == 1:
                mono = "v"
            else:
                mono = "*".join(
                    f"v{i + 1}" for i in range(self.ring.k) if (mask >> i) & 1
                )
            terms.append(mono if c == 1 else f"{c}{mono}" if self.ring.k == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# unit enumeration
# ---------------------------------------------------------------------------

def units(ring: RingSpec, guard: int | None = None) -> list[RkElement]:
    """All units of R_k, by exhaustive scan; |units| = u(m)^(2^k)."""
    return [a for a in ring.elements(guard) if a.is_unit()]


def count_units_base(m: int) -> int:
    """u(m) = number of invertible residues mod m."""
    return sum(1 for x in range(m) if math.gcd(x, m) == 1)


# ---------------------------------------------------------------------------
# vectors (words) over R_k: plain tuples of RkElement
# ---------------------------------------------------------------------------

RkVector = tuple[RkElement, ...]


def check_vector(w: Sequence[RkElement]) -> RingSpec:
    """Validate that all entries share one ring; returns it."""
    if not w:
        raise ValueError("empty vector has no ring")
    ring = w[0].ring
    for a in w[1:]:
        if a.ring != ring:
            raise ValueError(f"ring mismatch inside vector: {a.ring} vs {ring}")
    return ring


def zero_vector(ring: RingSpec, n: int) -> RkVector:
    return (ring.zero(),) * n


def vec_add(u: RkVector, w: RkVector) -> RkVector:
    return tuple(a + b for a, b in zip(u, w, strict=True))


def vec_scale(c: RkElement, w: RkVector) -> RkVector:
    return tuple(c * a for a in w)


def vec_inner(u: RkVector, w: RkVector) -> RkElement:
    """Euclidean inner product sum_i u_i * w_i."""
    if len(u) != len(w):
        raise ValueError(f"length mismatch: {len(u)} vs {len(w)}")
    acc = u[0].ring.zero()
    for a, b in zip(u, w):
        acc = acc + a * b
    return acc


def parse_vector(ring: RingSpec, symbols: Sequence[Sequence[int]]) -> RkVector:
    """Vector from the JSON wire format: a list of coefficient lists."""
    return tuple(ring.element(cs) for cs in symbols)


def vector_coeffs(w: RkVector) -> list[list[int]]:
    """Inverse of `parse_vector`."""
    return [list(a.coeffs) for a in w]
