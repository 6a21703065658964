"""Weight enumerators and MacWilliams identities, verified exactly.

The generating character used throughout is chi(x) = xi^x with xi a fixed
primitive m-th root of unity, extended to R_k as the product over the
splitting coordinates: chi_rk(a) = xi^(sum of splitting coordinates).
This is multiplicative over addition, which both Wood-style duality and
the symmetrized-row lemma need.

Identity verification never touches floating point.  Both sides of a
MacWilliams identity are evaluated at a fixed panel of assignments
X_b <- y^(h(b)), one injective exponent map h per panel point, and the
resulting univariate polynomials are compared coefficient by
coefficient.  Internally a polynomial in y carries coefficients in the
group-ring lift Z[x]/(x^m - 1) (an int array of shape (deg_y + 1, m)),
where multiplying by a character value xi^e is a cyclic shift of the
x-axis; the x-axis is reduced mod Phi_m at the very end, which is the
quotient onto Z[xi] where the identity actually lives.  Comparing
|C| * lhs against the transform side avoids any division.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .codes import LinearCode, euclidean_dual, hamming_weight, hermitian_dual
from .cyclotomic import CyclotomicInt, _power_table
from .gray import psi, psi_vec
from .ring import GuardExceeded, RingSpec, RkElement, RkVector

#: Largest ring for which the full character table is materialized.
DEFAULT_TABLE_CAP = 256


# ---------------------------------------------------------------------------
# characters
# ---------------------------------------------------------------------------

def chi(m: int, x: int) -> CyclotomicInt:
    """The base generating character: x -> xi^x."""
    return CyclotomicInt.root_power(m, x)


def chi_exponent(a: RkElement) -> int:
    """Exponent of chi_rk(a): the sum of the splitting coordinates mod m."""
    return sum(psi(a)) % a.ring.m


def chi_rk(a: RkElement) -> CyclotomicInt:
    """Product character of R_k: xi^(sum of splitting coordinates)."""
    return CyclotomicInt.root_power(a.ring.m, chi_exponent(a))


def character_sum_check(C: LinearCode, u: RkVector) -> CyclotomicInt:
    """sum_{c in C} chi_rk(u . c); equals |C| when u is in the dual, else 0.

    The exponent of a term is the plain Z_m dot product of the splitting
    coordinate vectors of u and c, so the whole sum is one matrix-vector
    product and a histogram.
    """
    if len(u) != C.n:
        raise ValueError(f"length mismatch: {len(u)} vs {C.n}")
    m = C.ring.m
    uvec = np.array(psi_vec(u, "component_major"), dtype=np.int64)
    exps = (C.psi_matrix @ uvec) % m
    counts = np.bincount(exps, minlength=m)
    return CyclotomicInt.from_lift(m, counts.tolist())


# ---------------------------------------------------------------------------
# Hamming weight enumerator
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HammingWE:
    """Coefficients A_0..A_n of the Hamming weight enumerator."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.n + 1:
            raise ValueError("need exactly n+1 coefficients")

    @property
    def total(self) -> int:
        return sum(self.counts)


def hamming_we(C: LinearCode) -> HammingWE:
    counts = [0] * (C.n + 1)
    for w in C.words:
        counts[hamming_weight(w)] += 1
    return HammingWE(C.n, tuple(counts))


def macwilliams_hamming(W: HammingWE, code_size: int, q: int) -> HammingWE:
    """The dual enumerator: substitute (X + (q-1)Y, X - Y), divide by |C|.

    Expansion is exact binomial arithmetic; a non-integral coefficient
    means the input was not the enumerator of a linear code of size
    `code_size` over an alphabet of size `q`.
    """
    n = W.n
    out = [0] * (n + 1)
    for j, count in enumerate(W.counts):
        if count == 0:
            continue
        # (X + (q-1)Y)^(n-j) * (X - Y)^j, coefficient of X^(n-w) Y^w
        for a in range(n - j + 1):
            ca = math.comb(n - j, a) * (q - 1) ** a
            for b in range(j + 1):
                cb = math.comb(j, b) * (-1) ** b
                out[a + b] += count * ca * cb
    final = []
    for w, value in enumerate(out):
        quot, rem = divmod(value, code_size)
        if rem:
            raise ValueError(
                f"transform coefficient A_{w} = {value} is not divisible by {code_size}"
            )
        final.append(quot)
    return HammingWE(n, tuple(final))


# ---------------------------------------------------------------------------
# complete and symmetrized weight enumerators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CompleteWE:
    """Map from composition vectors (counts per ring element, canonical
    element order) to the number of codewords with that composition."""

    ring: RingSpec
    n: int
    counts: dict[tuple[int, ...], int]

    def to_json(self) -> dict:
        return {",".join(map(str, k)): v for k, v in sorted(self.counts.items())}


@dataclass(frozen=True)
class SymmetrizedWE:
    """Like `CompleteWE` but per unit-equivalence class (class reps listed)."""

    ring: RingSpec
    n: int
    reps: tuple[RkElement, ...]
    counts: dict[tuple[int, ...], int]

    def to_json(self) -> dict:
        return {
            "reps": [list(r.coeffs) for r in self.reps],
            "counts": {",".join(map(str, k)): v for k, v in sorted(self.counts.items())},
        }


def _element_count(ring: RingSpec, cap: int | None) -> int:
    q = ring.cardinality()
    limit = DEFAULT_TABLE_CAP if cap is None else cap
    if q > limit:
        raise GuardExceeded(f"ring has {q} elements; table cap is {limit}")
    return q


def cwe(C: LinearCode, table_cap: int | None = None) -> CompleteWE:
    q = _element_count(C.ring, table_cap)
    counts: dict[tuple[int, ...], int] = {}
    for w in C.words:
        comp = [0] * q
        for a in w:
            comp[a.index()] += 1
        key = tuple(comp)
        counts[key] = counts.get(key, 0) + 1
    return CompleteWE(C.ring, C.n, counts)


def unit_classes(
    ring: RingSpec, G: Sequence[RkElement], table_cap: int | None = None
) -> tuple[list[RkElement], dict[int, int]]:
    """Orbit partition of R_k under multiplication by the unit subgroup G.

    Returns the lexicographically least representative of each class (in
    index order) and the map element-index -> representative position.
    Raises if G is not a subgroup of the units (1 in G, closed under
    multiplication; inverses then come for free in a finite group).
    """
    q = _element_count(ring, table_cap)
    gset = set(G)
    if ring.one() not in gset:
        raise ValueError("G must contain 1")
    for u in gset:
        if u.ring != ring:
            raise ValueError(f"unit {u!r} not in {ring}")
        if not u.is_unit():
            raise ValueError(f"{u!r} is not a unit")
        for w in gset:
            if u * w not in gset:
                raise ValueError(f"G is not closed under multiplication: {u!r}*{w!r}")
    reps: list[RkElement] = []
    class_of: dict[int, int] = {}
    for a in ring.elements():
        idx = a.index()
        if idx in class_of:
            continue
        pos = len(reps)
        reps.append(a)
        for u in gset:
            class_of[(u * a).index()] = pos
    assert len(class_of) == q
    return reps, class_of


def swe(
    C: LinearCode, G: Sequence[RkElement], table_cap: int | None = None
) -> SymmetrizedWE:
    reps, class_of = unit_classes(C.ring, G, table_cap)
    counts: dict[tuple[int, ...], int] = {}
    for w in C.words:
        comp = [0] * len(reps)
        for a in w:
            comp[class_of[a.index()]] += 1
        key = tuple(comp)
        counts[key] = counts.get(key, 0) + 1
    return SymmetrizedWE(C.ring, C.n, tuple(reps), counts)


# ---------------------------------------------------------------------------
# character tables
# ---------------------------------------------------------------------------

def _psi_matrix_all(ring: RingSpec) -> np.ndarray:
    """Splitting coordinates of every ring element, canonical order."""
    return np.array([psi(a) for a in ring.elements()], dtype=np.int64)

def _exp_t(ring: RingSpec) -> np.ndarray:
    """expT[i, j] with T[i, j] = xi^expT[i, j]: dot products of splitting rows."""
    P = _psi_matrix_all(ring)
    return (P @ P.T) % ring.m


def _exp_th(ring: RingSpec) -> np.ndarray:
    """Same for the Hermitian table; the all-generator flip mirrors the
    splitting coordinates (position complement), so conjugation reverses
    the column blocks."""
    P = _psi_matrix_all(ring)
    return (P @ P[:, ::-1].T) % ring.m


@dataclass(frozen=True)
class CharacterTable:
    """The matrices T[a, b] = chi(a*b) and T_H[a, b] = chi(a * conj(b))."""

    ring: RingSpec
    elements: tuple[RkElement, ...]
    T: tuple[tuple[CyclotomicInt, ...], ...]
    T_H: tuple[tuple[CyclotomicInt, ...], ...]

    def export(self) -> dict:
        return {
            "elements": [list(a.coeffs) for a in self.elements],
            "T": [[list(c.coeffs) for c in row] for row in self.T],
            "T_H": [[list(c.coeffs) for c in row] for row in self.T_H],
        }


def character_table(ring: RingSpec, table_cap: int | None = None) -> CharacterTable:
    _element_count(ring, table_cap)
    m = ring.m
    expT = _exp_t(ring)
    expTH = _exp_th(ring)
    if not np.array_equal(expT, expT.T):
        raise RuntimeError("character table is not symmetric (bug)")
    if np.any(expT[0]):
        raise RuntimeError("row of 0 is not all-ones (bug)")
    to_cyc = lambda M: tuple(
        tuple(CyclotomicInt.root_power(m, int(e)) for e in row) for row in M
    )
    return CharacterTable(
        ring, tuple(ring.elements()), to_cyc(expT), to_cyc(expTH)
    )


def s_matrix(
    ring: RingSpec, G: Sequence[RkElement], table_cap: int | None = None
) -> tuple[list[RkElement], list[list[CyclotomicInt]]]:
    """The symmetrized table S[a, b] = sum_{g ~ b} T[a, g] over class reps.

    Built for every row first; rows at equivalent indices must coincide
    (they do for a multiplicative character), which is asserted before
    quotienting down to representatives.
    """
    reps, class_of, S_full = _s_matrix_lift(ring, G, table_cap)
    rep_rows = [S_full[r.index()] for r in reps]
    return list(reps), [
        [CyclotomicInt.from_lift(ring.m, vec.tolist()) for vec in row]
        for row in rep_rows
    ]


def _s_matrix_lift(
    ring: RingSpec, G: Sequence[RkElement], table_cap: int | None = None
) -> tuple[list[RkElement], dict[int, int], np.ndarray]:
    """S rows for all alpha as lift vectors, shape (q, t, m), plus classes."""
    q = _element_count(ring, table_cap)
    m = ring.m
    reps, class_of = unit_classes(ring, G, table_cap)
    t = len(reps)
    expT = _exp_t(ring)
    S_full = np.zeros((q, t, m), dtype=np.int64)
    rows = np.arange(q)
    for g in range(q):
        S_full[rows, class_of[g], expT[:, g]] += 1
    for idx in range(q):
        rep_idx = reps[class_of[idx]].index()
        if not np.array_equal(S_full[idx], S_full[rep_idx]):
            raise RuntimeError(
                f"row-equality lemma failed between indices {idx} and {rep_idx}"
            )
    return reps, class_of, S_full


# ---------------------------------------------------------------------------
# the evaluation panel
# ---------------------------------------------------------------------------

def _panel_maps(q: int) -> list[list[int]]:
    """Fixed injective exponent maps h for the panel points X_b <- y^h(b).

    Injectivity keeps distinct alphabet letters at distinct exponents; the
    four maps (identity, reversal, an affine shuffle, integer squares) give
    four independent exact evaluations of the polynomial identity, with
    univariate degree at most n * (q-1)^2.
    """
    a = 2
    while math.gcd(a, q) != 1:
        a += 1
    return [
        list(range(q)),
        list(range(q - 1, -1, -1)),
        [(a * i + 1) % q for i in range(q)],
        [i * i for i in range(q)],
    ]


def _unit_poly(m: int) -> np.ndarray:
    P = np.zeros((1, m), dtype=np.int64)
    P[0, 0] = 1
    return P


def _mul_char_form(P: np.ndarray, terms: list[tuple[int, int]], m: int) -> np.ndarray:
    """P(y) times sum_t y^h_t x^e_t (each coefficient a single root power)."""
    ly = P.shape[0]
    hmax = max(h for h, _ in terms)
    R = np.zeros((ly + hmax, m), dtype=np.int64)
    rolls: dict[int, np.ndarray] = {}
    for h, e in terms:
        if e not in rolls:
            rolls[e] = np.roll(P, e, axis=1) if e else P
        R[h : h + ly] += rolls[e]
    return R


def _mul_lift_form(P: np.ndarray, rows: list[tuple[int, np.ndarray]], m: int) -> np.ndarray:
    """P(y) times sum_t y^h_t L_t(x) for general lift coefficients L_t."""
    ly = P.shape[0]
    hmax = max(h for h, _ in rows)
    R = np.zeros((ly + hmax, m), dtype=np.int64)
    rolls = [np.roll(P, e, axis=1) if e else P for e in range(m)]
    for h, vec in rows:
        for e in range(m):
            c = int(vec[e])
            if c:
                R[h : h + ly] += c * rolls[e]
    return R


def _transform_eval(
    counts: dict[tuple[int, ...], int],
    factors: list,
    multiply,
    m: int,
) -> np.ndarray:
    """sum over compositions of count * prod_b factor_b^(n_b), with the
    products shared along a prefix tree over the letters."""
    cache: dict[tuple[int, ...], np.ndarray] = {(): _unit_poly(m)}

    def prod(letters: tuple[int, ...]) -> np.ndarray:
        hit = cache.get(letters)
        if hit is None:
            hit = multiply(prod(letters[:-1]), factors[letters[-1]], m)
            cache[letters] = hit
        return hit

    total = np.zeros((1, m), dtype=np.int64)
    for comp, count in counts.items():
        letters = tuple(b for b, nb in enumerate(comp) for _ in range(nb))
        P = prod(letters)
        if P.shape[0] > total.shape[0]:
            total = np.pad(total, ((0, P.shape[0] - total.shape[0]), (0, 0)))
        total[: P.shape[0]] += count * P
    return total


def _plain_eval(counts: dict[tuple[int, ...], int], h: list[int], m: int) -> np.ndarray:
    """The enumerator itself under the panel assignment (integer coefficients)."""
    exps = {sum(n * h[b] for b, n in enumerate(comp)): 0 for comp in counts}
    for comp, count in counts.items():
        exps[sum(n * h[b] for b, n in enumerate(comp))] += count
    out = np.zeros((max(exps) + 1 if exps else 1, m), dtype=np.int64)
    for e, c in exps.items():
        out[e, 0] = c
    return out


def _reduce_mod_phi(arr: np.ndarray, m: int) -> np.ndarray:
    table = np.array(_power_table(m), dtype=np.int64)
    reduced = arr @ table
    # strip trailing zero rows so heights compare cleanly
    nz = np.nonzero(np.any(reduced, axis=1))[0]
    return reduced[: nz[-1] + 1] if nz.size else reduced[:0]


def _sides_match(rhs: np.ndarray, lhs: np.ndarray, scale: int, m: int) -> bool:
    return np.array_equal(_reduce_mod_phi(rhs, m), _reduce_mod_phi(scale * lhs, m))


# ---------------------------------------------------------------------------
# MacWilliams verification
# ---------------------------------------------------------------------------

def verify_cwe_macwilliams(
    C: LinearCode, guard: int | None = None, table_cap: int | None = None
) -> bool:
    """Check cwe_{C-dual} = (1/|C|) cwe_C(T . X) for both the Euclidean and
    Hermitian duals, at every panel point.  True only if all points agree."""
    ring = C.ring
    q = _element_count(ring, table_cap)
    m = ring.m
    lhs_euclid = cwe(euclidean_dual(C, guard), table_cap).counts
    lhs_herm = cwe(hermitian_dual(C, guard), table_cap).counts
    rhs_base = cwe(C, table_cap).counts
    for exp_mat, lhs_counts in ((_exp_t(ring), lhs_euclid), (_exp_th(ring), lhs_herm)):
        for h in _panel_maps(q):
            factors = [
                [(h[beta], int(exp_mat[b, beta])) for beta in range(q)]
                for b in range(q)
            ]
            rhs = _transform_eval(rhs_base, factors, _mul_char_form, m)
            lhs = _plain_eval(lhs_counts, h, m)
            if not _sides_match(rhs, lhs, len(C), m):
                return False
    return True


def verify_swe_macwilliams(
    C: LinearCode,
    G: Sequence[RkElement],
    guard: int | None = None,
    table_cap: int | None = None,
) -> bool:
    """Check swe_{C-dual} = (1/|C|) swe_C(S . Y) at every panel point."""
    ring = C.ring
    m = ring.m
    reps, class_of, S_full = _s_matrix_lift(ring, G, table_cap)
    t = len(reps)
    rhs_base = swe(C, G, table_cap).counts
    lhs_counts = swe(euclidean_dual(C, guard), G, table_cap).counts
    for h in _panel_maps(t):
        factors = [
            [(h[b], S_full[rep.index()][b]) for b in range(t)] for rep in reps
        ]
        rhs = _transform_eval(rhs_base, factors, _mul_lift_form, m)
        lhs = _plain_eval(lhs_counts, h, m)
        if not _sides_match(rhs, lhs, len(C), m):
            return False
    return True
