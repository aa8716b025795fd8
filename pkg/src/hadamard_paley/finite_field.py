"""Exact arithmetic in GF(p^r) for odd primes p.

Elements are polynomials over Z_p reduced modulo a fixed monic irreducible
polynomial.  A polynomial c_0 + c_1 x + ... + c_{r-1} x^{r-1} is identified
with the integer index c_0 + c_1 p + ... + c_{r-1} p^{r-1}, so index 0 is the
additive zero, index 1 is the unit, and for r = 1 the indices coincide with
the residues 0..p-1.

Polynomials are coefficient tuples, constant term first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import CapacityError, ParameterError

MAX_FIELD_ORDER = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, r) with q = p**r and p prime, or None if q is not a prime power."""
    if q < 2:
        return None
    factors = prime_factors(q)
    if len(factors) != 1:
        return None
    p = factors[0]
    r = 0
    while q > 1:
        q //= p
        r += 1
    return p, r


# -- polynomial helpers over Z_p (lists, constant term first) ---------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _poly_mod(a, m, p):
    a = _trim(list(a))
    inv_lead = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * c) % p
        _trim(a)
    return a


def _poly_mulmod(a, b, m, p):
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _poly_mod(prod, m, p)


def _poly_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _x_pow_p_power(m, p, e):
    """x^(p^e) reduced mod m, by e successive p-th powerings."""
    cur = _poly_mod([0, 1], m, p)
    for _ in range(e):
        result = [1]
        base = cur
        k = p
        while k:
            if k & 1:
                result = _poly_mulmod(result, base, m, p)
            base = _poly_mulmod(base, base, m, p)
            k >>= 1
        cur = result
    return cur


def is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Rabin's irreducibility test for a monic polynomial over Z_p."""
    m = _trim(list(poly))
    r = len(m) - 1
    if r < 1:
        return False
    if r == 1:
        return True
    x = [0, 1]
    if _poly_sub(_x_pow_p_power(m, p, r), x, p):
        return False
    for d in prime_factors(r):
        g = _poly_gcd(m, _poly_sub(_x_pow_p_power(m, p, r // d), x, p), p)
        if len(g) > 1:
            return False
    return True


def smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree r over Z_p.

    Candidates are compared on (c_0, c_1, ..., c_{r-1}), constant term first.
    """
    for low in itertools.product(range(p), repeat=r):
        poly = (*low, 1)
        if is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {r} over Z_{p}")


@dataclass(frozen=True)
class FieldTable:
    """A fully materialized GF(p^r).

    ``elements[i]`` is the coefficient tuple (length r, constant first) of the
    element with index i; ``chi[i]`` is the extended quadratic character.
    """

    p: int
    r: int
    q: int
    modulus: tuple[int, ...]
    elements: tuple[tuple[int, ...], ...] = field(repr=False)
    chi: tuple[int, ...] = field(repr=False)

    @cached_property
    def digits(self) -> np.ndarray:
        """(q, r) array of coefficient vectors; read-only."""
        arr = np.array(self.elements, dtype=np.int64).reshape(self.q, self.r)
        arr.flags.writeable = False
        return arr

    @cached_property
    def _place(self) -> np.ndarray:
        return self.p ** np.arange(self.r, dtype=np.int64)

    def _check(self, *idx: int) -> None:
        for a in idx:
            if not 0 <= a < self.q:
                raise ParameterError(f"element index {a} out of range for GF({self.q})")

    def index_of(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.r:
            raise ParameterError(f"coefficient vector longer than degree {self.r}")
        return sum((c % self.p) * self.p**t for t, c in enumerate(coeffs))

    def add(self, a: int, b: int) -> int:
        self._check(a, b)
        return self.index_of(x + y for x, y in zip(self.elements[a], self.elements[b]))

    def neg(self, a: int) -> int:
        self._check(a)
        return self.index_of(-x for x in self.elements[a])

    def sub(self, a: int, b: int) -> int:
        """Index of elements[a] - elements[b]."""
        self._check(a, b)
        return self.index_of(x - y for x, y in zip(self.elements[a], self.elements[b]))

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        prod = _poly_mulmod(list(self.elements[a]), list(self.elements[b]), list(self.modulus), self.p)
        return self.index_of(prod)

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.q - 2)

    def chi_of_difference(self, i: int, j: int) -> int:
        """chi(elements[j] - elements[i])."""
        return self.chi[self.sub(j, i)]

    def difference_indices(self) -> np.ndarray:
        """(q, q) array whose (i, j) entry is the index of elements[j] - elements[i]."""
        d = self.digits
        diff = (d[None, :, :] - d[:, None, :]) % self.p
        return diff @ self._place


def make_field(p: int, r: int = 1) -> FieldTable:
    """Build GF(p^r) for an odd prime p."""
    if not isinstance(p, int) or not is_prime(p):
        raise ParameterError(f"p must be a prime, got p={p!r}")
    if p == 2:
        raise ParameterError("p must be odd, got p=2")
    if not isinstance(r, int) or r < 1:
        raise ParameterError(f"r must be a positive integer, got r={r!r}")
    q = p**r
    if q > MAX_FIELD_ORDER:
        raise CapacityError(f"field order {p}^{r} exceeds cap {MAX_FIELD_ORDER}")

    modulus = smallest_irreducible(p, r)
    elements = tuple(
        tuple((i // p**t) % p for t in range(r)) for i in range(q)
    )
    half = (q - 1) // 2
    # placeholder chi so the arithmetic methods can be used to compute the real one
    F = FieldTable(p, r, q, modulus, elements, (0,) * q)
    chi = [0] * q
    for a in range(1, q):
        e = F.pow(a, half)
        if e == 1:
            chi[a] = 1
        elif e == p - 1:
            chi[a] = -1
        else:
            raise AssertionError(f"Euler criterion left the prime subfield at index {a}")
    return FieldTable(p, r, q, modulus, elements, tuple(chi))


def chi_by_squares(F: FieldTable) -> tuple[int, ...]:
    """Quadratic character by enumerating all squares; slower cross-check of ``F.chi``."""
    squares = {F.mul(a, a) for a in range(1, F.q)}
    return tuple(0 if a == 0 else (1 if a in squares else -1) for a in range(F.q))
