"""The two Gray maps out of R_k = Z_m[v1..vk].

The first is the splitting map psi: it sends an element to its 2^k
product coordinates (the subset zeta transform of the coefficients,
position T listing the evaluation with v_i = 1 for i in T).  psi is a
ring isomorphism onto Z_m^(2^k) with coordinatewise operations, and its
inverse is subset Moebius inversion.

For words, two coordinate orderings of the same data are supported:

  * ``interleaved``: psi(a_1) | psi(a_2) | ... | psi(a_n), the word map
    in its raw per-symbol form; the skew-shift characterizations read
    a d-symbol rotation as a plain rotation by d * 2^k here.
  * ``component_major``: for each splitting position i, the n values of
    coordinate i across all symbols, concatenated.  This is the layout
    used when a code is cut into its 2^k component codes over Z_m, and
    matches the displayed matrices (row per position).

The two differ by one fixed permutation, see `layout_permutation`.

The second map phi_j expands one level of the tower:
R_j = R_{j-1} + R_{j-1} v_j, and

    phi(a1 + a2 v_j) = (a1, b_1 a1 + b'_1 a2, ..., b_{l-1} a1 + b'_{l-1} a2)

for chosen b_i, b'_i in R_{j-1} with the last b' a unit (which makes the
map injective and R_{j-1}-linear).  Word extension is block-major: block
r holds output coordinate r of every symbol, in symbol order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .ring import (
    RingSpec,
    RkElement,
    RkVector,
    check_vector,
    subset_moebius,
    subset_zeta,
)

Layout = Literal["interleaved", "component_major"]

PsiImage = tuple[int, ...]


# ---------------------------------------------------------------------------
# psi and friends
# ---------------------------------------------------------------------------

def psi(a: RkElement) -> PsiImage:
    """Splitting coordinates of an element (subset zeta transform)."""
    return subset_zeta(a.coeffs, a.ring.m)


def psi_inv(ring: RingSpec, y: Sequence[int]) -> RkElement:
    """Inverse of `psi` (subset Moebius inversion)."""
    if len(y) != ring.ncoeffs:
        raise ValueError(f"expected {ring.ncoeffs} coordinates, got {len(y)}")
    return RkElement(ring, subset_moebius([c % ring.m for c in y], ring.m))


def psi_vec(w: RkVector, layout: Layout = "component_major") -> tuple[int, ...]:
    """Word image under psi in the requested coordinate ordering."""
    ring = check_vector(w)
    images = [psi(a) for a in w]
    if layout == "interleaved":
        return tuple(c for img in images for c in img)
    if layout == "component_major":
        return tuple(img[i] for i in range(ring.ncoeffs) for img in images)
    raise ValueError(f"unknown layout {layout!r}")


def psi_vec_inv(
    ring: RingSpec, n: int, y: Sequence[int], layout: Layout = "component_major"
) -> RkVector:
    """Word with the given psi image."""
    size = ring.ncoeffs
    if len(y) != n * size:
        raise ValueError(f"expected {n * size} coordinates, got {len(y)}")
    if layout == "interleaved":
        return tuple(psi_inv(ring, y[s * size : (s + 1) * size]) for s in range(n))
    if layout == "component_major":
        return tuple(psi_inv(ring, y[s::n]) for s in range(n))
    raise ValueError(f"unknown layout {layout!r}")


def psi_rows(w: RkVector) -> list[tuple[int, ...]]:
    """The displayed matrix form: row i is splitting coordinate i of each symbol."""
    ring = check_vector(w)
    images = [psi(a) for a in w]
    return [tuple(img[i] for img in images) for i in range(ring.ncoeffs)]


def layout_permutation(n: int, k: int) -> tuple[int, ...]:
    """perm with interleaved[j] = component_major[perm[j]] for all words."""
    size = 1 << k
    return tuple(i * n + s for s in range(n) for i in range(size))


# ---------------------------------------------------------------------------
# the expansion maps phi_j
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PhiSpec:
    """Coefficients of one expansion level j: R_j -> R_{j-1}^l.

    beta and beta_prime hold l-1 elements of R_{j-1}; the last entry of
    beta_prime must be a unit (the injectivity hinge).
    """

    level: int
    beta: tuple[RkElement, ...]
    beta_prime: tuple[RkElement, ...]

    def __post_init__(self) -> None:
        if self.level < 1:
            raise ValueError(f"level must be >= 1, got {self.level}")
        if len(self.beta) != len(self.beta_prime):
            raise ValueError("beta and beta_prime must have equal length")
        if not self.beta:
            raise ValueError("expansion length must be at least 2")
        low = RingSpec(self.beta[0].ring.m, self.level - 1)
        for b in (*self.beta, *self.beta_prime):
            if b.ring != low:
                raise ValueError(f"coefficient {b!r} not in {low}")
        if not self.beta_prime[-1].is_unit():
            raise ValueError(
                f"last beta_prime entry {self.beta_prime[-1]!r} must be a unit"
            )

    @property
    def l(self) -> int:
        return len(self.beta) + 1

    @property
    def domain(self) -> RingSpec:
        return RingSpec(self.beta[0].ring.m, self.level)

    @property
    def codomain(self) -> RingSpec:
        return self.beta[0].ring

    @classmethod
    def from_json(cls, m: int, level: int, obj: dict) -> PhiSpec:
        """Parse {"l": 3, "beta": [[0], [1]], "beta_prime": [[1], [1]]}."""
        low = RingSpec(m, level - 1)
        beta = tuple(low.element(cs) for cs in obj["beta"])
        beta_prime = tuple(low.element(cs) for cs in obj["beta_prime"])
        spec = cls(level=level, beta=beta, beta_prime=beta_prime)
        if "l" in obj and obj["l"] != spec.l:
            raise ValueError(f"l={obj['l']} inconsistent with {len(beta)} coefficients")
        return spec

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "beta": [list(b.coeffs) for b in self.beta],
            "beta_prime": [list(b.coeffs) for b in self.beta_prime],
        }


def split_top(a: RkElement) -> tuple[RkElement, RkElement]:
    """Write a = a1 + a2 v_j (j = a.ring.k) with a1, a2 one level down."""
    ring = a.ring
    if ring.k < 1:
        raise ValueError("cannot split an element of the base ring")
    low = RingSpec(ring.m, ring.k - 1)
    half = low.ncoeffs
    return (
        RkElement(low, a.coeffs[:half]),
        RkElement(low, a.coeffs[half:]),
    )


def phi(spec: PhiSpec, a: RkElement) -> RkVector:
    """Expansion of one symbol: length-l vector over R_{j-1}."""
    if a.ring != spec.domain:
        raise ValueError(f"element lives in {a.ring}, spec expects {spec.domain}")
    a1, a2 = split_top(a)
    return (a1, *(b * a1 + bp * a2 for b, bp in zip(spec.beta, spec.beta_prime)))


def phi_vec(spec: PhiSpec, w: RkVector) -> RkVector:
    """Word expansion in block-major order (block r = coordinate r of each symbol)."""
    images = [phi(spec, a) for a in w]
    return tuple(img[r] for r in range(spec.l) for img in images)


def phi_chain(specs: Sequence[PhiSpec], w: RkVector) -> RkVector:
    """Apply `phi_vec` level by level, from level k all the way down to 1.

    `specs` must cover levels k, k-1, ..., 1 in that order (k = 0 means no
    specs and the word is returned unchanged).
    """
    if not specs:
        return w
    ring = check_vector(w)
    expected = list(range(ring.k, 0, -1))
    got = [s.level for s in specs]
    if got != expected:
        raise ValueError(f"specs cover levels {got}, expected {expected}")
    for spec in specs:
        w = phi_vec(spec, w)
    return w
