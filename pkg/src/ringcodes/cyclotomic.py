"""Exact integers in the cyclotomic ring Z[x]/Phi_m(x).

The class of x is a fixed primitive m-th root of unity, so character
values and their sums live here with no floating point anywhere.  Phi_m
is found by dividing x^m - 1 by Phi_d for every proper divisor d | m
(the divisions are exact over Z since every divisor is monic).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence


def _poly_divmod(num: list[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Quotient and remainder for a monic denominator, exact over Z."""
    num = list(num)
    deg_d = len(den) - 1
    if den[-1] != 1:
        raise ValueError("denominator must be monic")
    quot = [0] * max(len(num) - deg_d, 0)
    for i in range(len(num) - 1, deg_d - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quot[i - deg_d] = c
        for j, d in enumerate(den):
            num[i - deg_d + j] -= c * d
    while num and num[-1] == 0:
        num.pop()
    return quot, num


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first; degree is phi(m)."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if m == 1:
        return (-1, 1)
    num = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            quot, rem = _poly_divmod(num, cyclotomic_poly(d))
            if rem:
                raise RuntimeError(f"inexact cyclotomic division at m={m}, d={d}")
            num = quot
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """x^j mod Phi_m for j = 0..m-1, as coefficient tuples of length deg."""
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(m):
        rows.append(tuple(cur))
        cur = [0] + cur  # multiply by x
        if len(cur) > deg:
            lead = cur.pop()
            if lead:
                for j in range(deg):
                    cur[j] -= lead * phi[j]
        cur += [0] * (deg - len(cur))
    return tuple(rows)


def _reduce(m: int, coeffs: Sequence[int]) -> tuple[int, ...]:
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    _, rem = _poly_divmod(list(coeffs), phi)
    rem += [0] * (deg - len(rem))
    return tuple(rem)


class CyclotomicInt:
    """An element of Z[x]/Phi_m(x) with integer coefficients."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Sequence[int]):
        deg = len(cyclotomic_poly(m)) - 1
        cs = list(coeffs)
        if len(cs) > deg:
            cs = list(_reduce(m, cs))
        cs += [0] * (deg - len(cs))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicInt is immutable")

    # ---- constructors ----

    @classmethod
    def zero(cls, m: int) -> CyclotomicInt:
        return cls(m, ())

    @classmethod
    def integer(cls, m: int, c: int) -> CyclotomicInt:
        return cls(m, (c,))

    @classmethod
    def root_power(cls, m: int, e: int) -> CyclotomicInt:
        """xi^e for the fixed primitive m-th root xi (the class of x)."""
        return cls(m, _power_table(m)[e % m])

    @classmethod
    def from_lift(cls, m: int, lift: Sequence[int]) -> CyclotomicInt:
        """Reduce a length-m vector of x^j coefficients (j mod m) mod Phi_m."""
        table = _power_table(m)
        deg = len(table[0])
        out = [0] * deg
        for j, c in enumerate(lift):
            if c:
                row = table[j % m]
                for t in range(deg):
                    out[t] += c * row[t]
        return cls(m, out)

    # ---- arithmetic ----

    def _coerce(self, other) -> CyclotomicInt | None:
        if isinstance(other, CyclotomicInt):
            if other.m != self.m:
                raise ValueError(f"cyclotomic order mismatch: {self.m} vs {other.m}")
            return other
        if isinstance(other, int):
            return CyclotomicInt.integer(self.m, other)
        return None

    def __add__(self, other) -> CyclotomicInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicInt(self.m, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __sub__(self, other) -> CyclotomicInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicInt(self.m, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __neg__(self) -> CyclotomicInt:
        return CyclotomicInt(self.m, [-a for a in self.coeffs])

    def __mul__(self, other) -> CyclotomicInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = [0] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    prod[i + j] += a * b
        return CyclotomicInt(self.m, prod)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def as_int(self) -> int:
        """The value as a plain integer; raises if not rational-integral."""
        if any(c != 0 for c in self.coeffs[1:]):
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    # ---- comparisons / display ----

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CyclotomicInt.integer(self.m, other)
        if isinstance(other, CyclotomicInt):
            return self.m == other.m and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.m, self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                mono = "z" if e == 1 else f"z^{e}"
                terms.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}{mono}")
        body = "+".join(terms).replace("+-", "-") if terms else "0"
        return f"Cyc{self.m}({body})"
