"""Linear codes over R_k: spans, duals, components, weights.

A code is stored extensionally: the full codeword set in a canonical
order (lexicographic on coefficient lists), with the generating set kept
for provenance when the code came from a span.  Every theorem this
package checks is a statement about the codeword set, and at desk scale
the set fits comfortably in memory; guards refuse anything bigger.

Duals are computed by exhaustive scan of the ambient space.  The scan
runs on splitting coordinates: a word is orthogonal to another exactly
when, at every splitting position, the plain Z_m inner product of their
coordinate rows vanishes, so the whole scan is a handful of integer
matrix products mod m.  The Hermitian product conjugates the right
argument by the all-generator flip, which on splitting coordinates pairs
each position with its complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product as iproduct
from typing import Iterable, Iterator, Sequence

import numpy as np

from .gray import psi, psi_inv, psi_vec, psi_vec_inv
from .ring import (
    GuardExceeded,
    RingSpec,
    RkElement,
    RkVector,
    check_vector,
    ensure_enumerable,
    parse_vector,
    vec_scale,
    vector_coeffs,
    zero_vector,
)

_SCAN_CHUNK = 1 << 16


def _flat(w: RkVector) -> tuple[int, ...]:
    return tuple(c for a in w for c in a.coeffs)


def _unflat(ring: RingSpec, n: int, flat: Sequence[int]) -> RkVector:
    size = ring.ncoeffs
    return tuple(
        RkElement(ring, tuple(flat[s * size : (s + 1) * size])) for s in range(n)
    )


class LinearCode:
    """A linear code over R_k, materialized as its codeword set."""

    def __init__(
        self,
        ring: RingSpec,
        n: int,
        words: Sequence[RkVector],
        generators: tuple[RkVector, ...] | None = None,
    ):
        if n < 1:
            raise ValueError(f"length must be >= 1, got {n}")
        self.ring = ring
        self.n = n
        self.words: tuple[RkVector, ...] = tuple(sorted(words, key=_flat))
        self.wordset = frozenset(self.words)
        self.generators = generators
        if len(self.wordset) != len(self.words):
            raise ValueError("duplicate codewords")
        if zero_vector(ring, n) not in self.wordset:
            raise ValueError("a linear code must contain the zero word")

    # ---- construction ----

    @classmethod
    def span(
        cls,
        ring: RingSpec,
        n: int,
        generators: Iterable[Sequence[RkElement] | RkVector],
        guard: int | None = None,
    ) -> LinearCode:
        """Smallest linear code containing the generators.

        Saturation: fold each generator's full scalar-multiple set into the
        running closure by set addition (each R*g is an additive subgroup,
        so the fold lands exactly on the module span).
        """
        gens: list[RkVector] = []
        for g in generators:
            w = tuple(g)
            if len(w) != n:
                raise ValueError(f"generator length {len(w)} != n {n}")
            if w and check_vector(w) != ring:
                raise ValueError(f"generator ring {w[0].ring} != {ring}")
            gens.append(w)
        card = ring.cardinality()
        ensure_enumerable(card ** max(len(gens), 1), guard, "span closure bound")

        m = ring.m
        width = n * ring.ncoeffs
        closure = np.zeros((1, width), dtype=np.int64)
        scalars = list(ring.elements(guard))
        for g in gens:
            multiples = np.array(
                [_flat(vec_scale(lam, g)) for lam in scalars], dtype=np.int64
            )
            ensure_enumerable(closure.shape[0] * len(multiples), guard, "span closure")
            summed = (closure[:, None, :] + multiples[None, :, :]) % m
            closure = np.unique(summed.reshape(-1, width), axis=0)
        words = [_unflat(ring, n, row) for row in closure.tolist()]
        return cls(ring, n, words, generators=tuple(gens))

    @classmethod
    def from_json(cls, obj: dict, guard: int | None = None) -> LinearCode:
        """Build from {"m":4, "k":1, "n":4, "generators":[[[1,0],[0,1],[1,1],[3,0]]]}."""
        ring = RingSpec(obj["m"], obj["k"])
        gens = [parse_vector(ring, g) for g in obj["generators"]]
        return cls.span(ring, obj["n"], gens, guard=guard)

    def to_json(self) -> dict:
        gens = self.generators if self.generators is not None else self.words
        return {
            "m": self.ring.m,
            "k": self.ring.k,
            "n": self.n,
            "generators": [vector_coeffs(g) for g in gens],
        }

    # ---- basic queries ----

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[RkVector]:
        return iter(self.words)

    def __contains__(self, w: RkVector) -> bool:
        return w in self.wordset

    def __eq__(self, other) -> bool:
        if isinstance(other, LinearCode):
            return (
                self.ring == other.ring
                and self.n == other.n
                and self.wordset == other.wordset
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, self.n, self.wordset))

    def __repr__(self) -> str:
        return f"LinearCode({self.ring}, n={self.n}, size={len(self)})"

    # ---- cached coordinate matrices ----

    @cached_property
    def psi_matrix(self) -> np.ndarray:
        """Splitting coordinates of every codeword, component-major columns."""
        return np.array(
            [psi_vec(w, "component_major") for w in self.words], dtype=np.int64
        )

    @cached_property
    def psi_interleaved_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(psi_vec(w, "interleaved") for w in self.words)


# ---------------------------------------------------------------------------
# duals
# ---------------------------------------------------------------------------

def _ambient_psi_chunk(ring: RingSpec, n: int, start: int, stop: int) -> np.ndarray:
    """Rows start..stop of the full ambient space in splitting coordinates.

    psi is onto Z_m^(2^k), so the ambient is every base-m digit vector of
    width n * 2^k; row index encodes the digits most-significant first.
    """
    width = n * ring.ncoeffs
    idx = np.arange(start, stop, dtype=np.int64)
    cols = []
    for c in range(width):
        shift = ring.m ** (width - 1 - c)
        cols.append((idx // shift) % ring.m)
    return np.stack(cols, axis=1)


def _dual_scan(C: LinearCode, hermitian: bool, guard: int | None) -> LinearCode:
    ring, n = C.ring, C.n
    total = ring.cardinality() ** n
    ensure_enumerable(total, guard, f"dual scan of {ring}^{n}")

    if C.generators is not None and C.generators:
        test_words = list(C.generators)
    else:
        test_words = list(C.words)
    G = np.array(
        [psi_vec(w, "component_major") for w in test_words], dtype=np.int64
    )
    size, m = ring.ncoeffs, ring.m
    full = size - 1

    words: list[RkVector] = []
    for start in range(0, total, _SCAN_CHUNK):
        A = _ambient_psi_chunk(ring, n, start, min(start + _SCAN_CHUNK, total))
        keep = np.ones(A.shape[0], dtype=bool)
        for i in range(size):
            j = (full ^ i) if hermitian else i
            Ai = A[:, i * n : (i + 1) * n]
            Gj = G[:, j * n : (j + 1) * n]
            keep &= ~np.any((Ai @ Gj.T) % m, axis=1)
        for row in A[keep].tolist():
            words.append(psi_vec_inv(ring, n, row, "component_major"))
    return LinearCode(ring, n, words, generators=None)


def euclidean_dual(C: LinearCode, guard: int | None = None) -> LinearCode:
    """All words orthogonal to C under the plain inner product."""
    return _dual_scan(C, hermitian=False, guard=guard)


def hermitian_dual(C: LinearCode, guard: int | None = None) -> LinearCode:
    """All words orthogonal to C under the flip-conjugated inner product."""
    return _dual_scan(C, hermitian=True, guard=guard)


def is_self_dual(C: LinearCode, guard: int | None = None) -> bool:
    return C == euclidean_dual(C, guard=guard)


def is_hermitian_self_dual(C: LinearCode, guard: int | None = None) -> bool:
    return C == hermitian_dual(C, guard=guard)


def hermitian_selfdual_construct(
    ring: RingSpec, n: int, i: int = 1, guard: int | None = None
) -> LinearCode:
    """The n-fold product of the length-1 code generated by v_i.

    v_i * (1 - v_i) = 0 makes the product Hermitian self-orthogonal, and a
    size count makes it self-dual; the result is certified before return.
    """
    if ring.k == 0:
        raise ValueError("construction needs at least one generator (k >= 1)")
    vi = ring.gen(i)
    gens = []
    for s in range(n):
        w = [ring.zero()] * n
        w[s] = vi
        gens.append(tuple(w))
    C = LinearCode.span(ring, n, gens, guard=guard)
    if not is_hermitian_self_dual(C, guard=guard):
        raise RuntimeError("construction failed Hermitian self-duality certification")
    return C


# ---------------------------------------------------------------------------
# component decomposition
# ---------------------------------------------------------------------------

ComponentCodes = list[LinearCode]


def decompose(C: LinearCode) -> ComponentCodes:
    """Cut C into its 2^k splitting-component codes over Z_m.

    Component i is the set of i-th coordinate rows across codewords.  For a
    linear input the splitting image is exactly the product of the
    components; the size check enforces that and rejects non-linear input.
    """
    base = RingSpec(C.ring.m, 0)
    n = C.n
    comps: ComponentCodes = []
    total = 1
    for i in range(C.ring.ncoeffs):
        rows = {tuple(r) for r in C.psi_matrix[:, i * n : (i + 1) * n].tolist()}
        words = [tuple(RkElement(base, (c,)) for c in row) for row in rows]
        comp = LinearCode(base, n, words, generators=None)
        total *= len(comp)
        comps.append(comp)
    if total != len(C):
        raise ValueError(
            f"splitting image is not a full product ({total} != {len(C)}); "
            "input is not a linear code"
        )
    return comps


def compose(components: Sequence[LinearCode], guard: int | None = None) -> LinearCode:
    """Inverse of `decompose`: the code whose splitting image is the product."""
    if not components:
        raise ValueError("need at least one component")
    size = len(components)
    if size & (size - 1):
        raise ValueError(f"number of components must be a power of two, got {size}")
    k = size.bit_length() - 1
    m = components[0].ring.m
    n = components[0].n
    for comp in components:
        if comp.ring != RingSpec(m, 0):
            raise ValueError(f"component ring {comp.ring} is not Z{m}")
        if comp.n != n:
            raise ValueError("component length mismatch")
    ring = RingSpec(m, k)
    count = 1
    for comp in components:
        count *= len(comp)
    ensure_enumerable(count, guard, "component product")

    words = []
    for rows in iproduct(*(comp.words for comp in components)):
        word = tuple(
            psi_inv(ring, [rows[i][s].coeffs[0] for i in range(size)])
            for s in range(n)
        )
        words.append(word)
    return LinearCode(ring, n, words, generators=None)


# ---------------------------------------------------------------------------
# weights and distances
# ---------------------------------------------------------------------------

def lee_weight_element(a: RkElement) -> int:
    """Sum of min(x, m-x) over the splitting coordinates."""
    m = a.ring.m
    return sum(min(c, m - c) for c in psi(a))


def lee_weight(w: RkVector) -> int:
    return sum(lee_weight_element(a) for a in w)


def hamming_weight(w: RkVector) -> int:
    return sum(1 for a in w if not a.is_zero())


def _min_weight(C: LinearCode, weight) -> int:
    best = None
    for w in C.words:
        if all(a.is_zero() for a in w):
            continue
        wt = weight(w)
        if best is None or wt < best:
            best = wt
    if best is None:
        raise ValueError("no nonzero codeword")
    return best


def hamming_distance(C: LinearCode) -> int:
    return _min_weight(C, hamming_weight)


def lee_distance(C: LinearCode) -> int:
    return _min_weight(C, lee_weight)
