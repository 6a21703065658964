"""Ring automorphisms of R_k and the coordinate maps they induce.

Two families generate everything we need:

  * flips: v_i -> 1 - v_i for each i in a flip set S (an involution), and
  * index permutations: v_j -> v_pi(j) for a permutation pi of {1..k}
    that is a bijection between two equal-size subsets and the identity
    elsewhere (the base-ring automorphism is the identity, the only
    automorphism Z_m has).

A spec stores one of each and applies them in the fixed order
flip-after-permute; arbitrary compositions are chained specs.

On product-splitting coordinates both act as pure position permutations:
a flip by S sends position T to T xor S (evaluating at the complemented
assignment), a permutation relabels positions by pi.  `induced_map`
recovers that permutation from one-hot probes and fails loudly if the
conjugated map is anything but a position permutation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from .ring import RingSpec, RkElement, subset_moebius


def apply_theta(flip_mask: int, a: RkElement) -> RkElement:
    """Substitute v_i <- 1 - v_i for every i in the flip set (bitmask).

    Per index the coefficient rewrite is v_U -> v_{U minus i} - v_U for
    i in U; the order of indices does not matter since the flips commute.
    """
    ring = a.ring
    if not 0 <= flip_mask < ring.ncoeffs:
        raise ValueError(f"flip set {flip_mask:#x} out of range for k={ring.k}")
    m = ring.m
    coeffs = list(a.coeffs)
    bit = 1
    while bit < ring.ncoeffs:
        if flip_mask & bit:
            for mask in range(ring.ncoeffs):
                if mask & bit:
                    c = coeffs[mask]
                    if c:
                        coeffs[mask ^ bit] = (coeffs[mask ^ bit] + c) % m
                        coeffs[mask] = (-c) % m
        bit <<= 1
    return RkElement(ring, tuple(coeffs))


def perm_mask(perm: tuple[int, ...], mask: int) -> int:
    """Image of a subset bitmask under a permutation of {1..k}."""
    out = 0
    for i in range(len(perm)):
        if (mask >> i) & 1:
            out |= 1 << (perm[i] - 1)
    return out


def apply_phi(perm: tuple[int, ...], a: RkElement) -> RkElement:
    """Relabel generators: the coefficient of v_U moves to v_{perm(U)}."""
    ring = a.ring
    if len(perm) != ring.k:
        raise ValueError(f"permutation has {len(perm)} entries, expected k={ring.k}")
    coeffs = [0] * ring.ncoeffs
    for mask, c in enumerate(a.coeffs):
        coeffs[perm_mask(perm, mask)] = c
    return RkElement(ring, tuple(coeffs))


def order_of_perm(perm: tuple[int, ...]) -> int:
    """Least t >= 1 with perm^t = identity (lcm of cycle lengths)."""
    seen = [False] * len(perm)
    order = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            length += 1
        order = lcm(order, length)
    return order


@dataclass(frozen=True)
class AutomorphismSpec:
    """A flip set plus an index permutation, applied as flip o permute.

    `perm` is the 1-based image list; entries moved by `perm` form the
    bijection between the two subsets in the definition, everything else
    must be fixed.  The base automorphism is the identity.
    """

    k: int
    flip_mask: int = 0
    perm: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        perm = self.perm if self.perm else tuple(range(1, self.k + 1))
        object.__setattr__(self, "perm", perm)
        if len(perm) != self.k:
            raise ValueError(f"permutation length {len(perm)} != k {self.k}")
        if sorted(perm) != list(range(1, self.k + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{self.k}")
        if not 0 <= self.flip_mask < (1 << self.k):
            raise ValueError(f"flip set {self.flip_mask:#x} out of range for k={self.k}")

    @classmethod
    def identity(cls, k: int) -> AutomorphismSpec:
        return cls(k=k)

    @classmethod
    def from_json(cls, k: int, obj: dict) -> AutomorphismSpec:
        """Parse {"flip": [1], "perm": [2, 1]} (both keys optional)."""
        flip_mask = 0
        for i in obj.get("flip", []):
            if not 1 <= i <= k:
                raise ValueError(f"flip index {i} out of range 1..{k}")
            flip_mask |= 1 << (i - 1)
        perm = tuple(obj.get("perm", range(1, k + 1)))
        return cls(k=k, flip_mask=flip_mask, perm=perm)

    def to_json(self) -> dict:
        return {
            "flip": [i + 1 for i in range(self.k) if (self.flip_mask >> i) & 1],
            "perm": list(self.perm),
        }

    @property
    def is_identity(self) -> bool:
        return self.flip_mask == 0 and all(p == i + 1 for i, p in enumerate(self.perm))

    def __call__(self, a: RkElement) -> RkElement:
        return self.apply(a)

    def apply(self, a: RkElement) -> RkElement:
        if a.ring.k != self.k:
            raise ValueError(f"element lives in k={a.ring.k}, spec has k={self.k}")
        return apply_theta(self.flip_mask, apply_phi(self.perm, a))

    def apply_word(self, w: tuple[RkElement, ...]) -> tuple[RkElement, ...]:
        return tuple(self.apply(a) for a in w)


def hermitian_conjugation(k: int) -> AutomorphismSpec:
    """The conjugation used by the Hermitian product: flip every generator."""
    return AutomorphismSpec(k=k, flip_mask=(1 << k) - 1)


# ---------------------------------------------------------------------------
# induced position maps on product-splitting coordinates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InducedCoordinateMap:
    """Position permutation rho with psi(theta(a)) = rho applied to psi(a).

    `dst[p]` is where the value at position p lands.
    """

    dst: tuple[int, ...]

    def __call__(self, y: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * len(y)
        for p, val in enumerate(y):
            out[self.dst[p]] = val
        return tuple(out)

    def compose(self, other: InducedCoordinateMap) -> InducedCoordinateMap:
        """self after other (matches function composition order)."""
        return InducedCoordinateMap(tuple(self.dst[d] for d in other.dst))

    def power(self, e: int) -> InducedCoordinateMap:
        acc = InducedCoordinateMap(tuple(range(len(self.dst))))
        for _ in range(e):
            acc = self.compose(acc)
        return acc

    def order(self) -> int:
        perm1 = tuple(d + 1 for d in self.dst)
        return order_of_perm(perm1)


def induced_map(spec: AutomorphismSpec, ring: RingSpec) -> InducedCoordinateMap:
    """Conjugate the spec through the splitting: psi o spec o psi^{-1}.

    Probed on the m * 2^k one-hot coordinate vectors; raises if any probe
    lands on anything but the same scalar at a single position, which
    would mean the conjugate is not a pure position permutation (a bug,
    given the base automorphism is the identity).
    """
    if ring.k != spec.k:
        raise ValueError(f"ring has k={ring.k}, spec has k={spec.k}")
    size = ring.ncoeffs
    dst: list[int] = [-1] * size
    for p in range(size):
        for c in range(1, ring.m):
            probe = [0] * size
            probe[p] = c
            a = RkElement(ring, subset_moebius(probe, ring.m))
            image = spec.apply(a).psi_coords()
            hits = [q for q, val in enumerate(image) if val]
            if len(hits) != 1 or image[hits[0]] != c:
                raise RuntimeError(
                    f"conjugation of {spec} is not a position permutation "
                    f"(probe {c}@{p} -> {image})"
                )
            if dst[p] == -1:
                dst[p] = hits[0]
            elif dst[p] != hits[0]:
                raise RuntimeError(
                    f"conjugation of {spec} moves position {p} inconsistently"
                )
    if sorted(dst) != list(range(size)):
        raise RuntimeError(f"conjugation of {spec} is not a bijection: {dst}")
    return InducedCoordinateMap(tuple(dst))
