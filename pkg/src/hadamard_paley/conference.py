"""Jacobsthal conference matrices and the twin-prime ±1 circulant."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .finite_field import FieldTable, is_prime
from .sign_matrix import SignMatrix


def jacobsthal(F: FieldTable) -> SignMatrix:
    """Q[i, j] = chi(elements[j] - elements[i]) over the field F."""
    chi = np.array(F.chi, dtype=np.int8)
    return chi[F.difference_indices()]


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, via Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@dataclass(frozen=True)
class TwinPrimeDiffSet:
    p: int
    q: int
    residues: frozenset[int]

    @property
    def modulus(self) -> int:
        return self.p * self.q

    def difference_counts(self) -> list[int]:
        """counts[d] = number of ordered pairs (a, b) of members with a - b ≡ d (mod pq)."""
        v = self.modulus
        counts = [0] * v
        for a in self.residues:
            for b in self.residues:
                counts[(a - b) % v] += 1
        return counts


def _check_twin(p: int, q: int) -> None:
    if not (isinstance(p, int) and is_prime(p) and p > 2):
        raise ParameterError(f"p must be an odd prime, got p={p!r}")
    if q != p + 2:
        raise ParameterError(f"q must equal p + 2 for twin primes, got p={p}, q={q}")
    if not is_prime(q):
        raise ParameterError(f"q={q} is not prime, so ({p}, {q}) are not twin primes")


def twin_prime_diffset(p: int, q: int | None = None) -> TwinPrimeDiffSet:
    """The Stanton-Sprott (pq, (pq-1)/2, (pq-3)/4) difference set in Z_pq.

    Members are the x with (x/p)(x/q) = 1, together with every multiple of q.
    """
    if q is None:
        q = p + 2
    _check_twin(p, q)
    v = p * q
    members = {x for x in range(v) if legendre(x, p) * legendre(x, q) == 1}
    members.update(range(0, v, q))
    return TwinPrimeDiffSet(p, q, frozenset(members))


def twin_prime_pm(p: int, q: int | None = None) -> SignMatrix:
    """Circulant R[i, j] = +1 iff (j - i) mod pq is in the difference set, else -1.

    R R^T = (pq + 1) I - J and every row and column sums to -1.
    """
    D = twin_prime_diffset(p, q)
    v = D.modulus
    first = np.full(v, -1, dtype=np.int8)
    first[sorted(D.residues)] = 1
    shifts = (np.arange(v)[None, :] - np.arange(v)[:, None]) % v
    return first[shifts]
