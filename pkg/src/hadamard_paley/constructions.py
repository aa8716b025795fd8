"""Hadamard matrix constructions.

Baselines: Sylvester, classical Paley I and II, Kronecker products.
Extended constructions: ``ext_paley1`` (order n(q+1) from any Hadamard seed of
order n, q ≡ 3 mod 4), ``ext_paley2`` (order 2^(k+1)(q+1), q ≡ 1 mod 4) and
``twin_prime_construction`` (order n(pq+1) for twin primes p, q = p + 2).

Every constructor checks K K^T = (order) I on its own output before
returning and raises ``VerificationError`` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .conference import jacobsthal, twin_prime_pm
from .errors import CapacityError, ParameterError, VerificationError
from .finite_field import FieldTable, is_prime, make_field, prime_power
from .sign_matrix import (
    H1,
    H2,
    SignMatrix,
    block2x2,
    build_E,
    build_Eprime,
    gram,
    identity,
    is_hadamard,
    kron,
    ones,
)

METHODS = ("sylvester", "paley1", "paley2", "ext_paley1", "ext_paley2", "twin_prime", "kronecker")

MAX_SYLVESTER_EXPONENT = 20
MAX_SEED_ORDER = 256

# order-2 exchange matrix and S = R2 H2 R2
R2 = np.array([[0, 1], [1, 0]], dtype=np.int8)
S = (R2.astype(np.int64) @ H2 @ R2).astype(np.int8)


def check_gadgets() -> None:
    """Confirm S S^T = 2I and that S H2^T is skew-symmetric."""
    SH = S.astype(np.int64) @ H2.T
    if not np.array_equal(gram(S), 2 * np.eye(2, dtype=np.int64)):
        raise VerificationError("S S^T != 2I")
    if not np.array_equal(SH.T, -SH):
        raise VerificationError("S H2^T is not skew-symmetric")


check_gadgets()


@lru_cache(maxsize=None)
def _field(q: int) -> FieldTable:
    pp = prime_power(q)
    if pp is None or pp[0] == 2:
        raise ParameterError(f"q={q} is not an odd prime power")
    return make_field(*pp)


def _field_with_residue(q: int, residue: int) -> FieldTable:
    if not isinstance(q, (int, np.integer)):
        raise ParameterError(f"q must be an integer, got {q!r}")
    F = _field(int(q))
    if q % 4 != residue:
        raise ParameterError(f"q ≡ {residue} (mod 4) required, got q={q}")
    return F


def _seed(H, name="seed") -> SignMatrix:
    if not is_hadamard(H):
        raise ParameterError(f"{name} is not a Hadamard matrix")
    return np.asarray(H, dtype=np.int8)


def _verify_blocks(K: SignMatrix, n: int, label: str) -> SignMatrix:
    """Check K K^T = (order) I block by block, naming the failing identity."""
    order = K.shape[0]
    G = gram(K)
    top, off, bottom = G[:n, :n], G[:n, n:], G[n:, n:]
    if not np.array_equal(top, order * np.eye(n, dtype=np.int64)):
        raise VerificationError(f"{label}: top-left block H H^T + E'E'^T != {order} I")
    if np.any(off):
        raise VerificationError(f"{label}: off-diagonal block H E^T + E'A^T != 0")
    if not np.array_equal(bottom, order * np.eye(order - n, dtype=np.int64)):
        raise VerificationError(f"{label}: bottom-right block A A^T + E E^T != {order} I")
    return K


def _verify(H: SignMatrix, label: str) -> SignMatrix:
    if not is_hadamard(H):
        raise VerificationError(f"{label}: output failed H H^T = nI")
    return H


def sylvester(m: int) -> SignMatrix:
    """Sylvester matrix of order 2^m, built as H2 ⊗ H_{2^(m-1)}."""
    if m < 0:
        raise ParameterError(f"m must be non-negative, got m={m}")
    if m > MAX_SYLVESTER_EXPONENT:
        raise CapacityError(f"sylvester order 2^{m} exceeds cap 2^{MAX_SYLVESTER_EXPONENT}")
    H = H1
    for _ in range(m):
        H = kron(H2, H)
    return _verify(H, f"sylvester({m})")


def paley1(q: int) -> SignMatrix:
    """Paley I matrix of order q + 1 for q ≡ 3 (mod 4), in bordered form

        [[-1, 1^T], [1, Q + I]]

    i.e. I + C with C = [[0, 1^T], [-1, Q]] and its first column negated.
    This is the n = 1 case of ``ext_paley1``.
    """
    Q = jacobsthal(_field_with_residue(q, 3))
    H = block2x2(-H1, ones(1, q), ones(q, 1), Q + identity(q))
    return _verify(H, f"paley1({q})")


def paley2(q: int) -> SignMatrix:
    """Paley II matrix of order 2(q + 1) for q ≡ 1 (mod 4): C ⊗ H2 + I ⊗ (-S)."""
    Q = jacobsthal(_field_with_residue(q, 1))
    C = block2x2(np.zeros((1, 1), dtype=np.int8), ones(1, q), ones(q, 1), Q)
    H = kron(C, H2) + kron(identity(q + 1), -S)
    return _verify(H.astype(np.int8), f"paley2({q})")


def ext_paley1(q: int, H) -> SignMatrix:
    """Order n(q+1) for q ≡ 3 (mod 4): K = [[-H, E'], [E, (Q + I) ⊗ H]]."""
    F = _field_with_residue(q, 3)
    H = _seed(H)
    n = H.shape[0]
    Q = jacobsthal(F)
    A = kron(Q + identity(q), H)
    K = block2x2(-H, build_Eprime(H, q), build_E(H, q), A)
    return _verify_blocks(K, n, f"ext_paley1({q}, n={n})")


def ext_paley2(q: int, k: int = 0, sign: int = 1) -> SignMatrix:
    """Order 2^(k+1)(q+1) for q ≡ 1 (mod 4).

    A = [Q ⊗ (sign·S) + I ⊗ H2] ⊗ H_{2^k}, seed H2 ⊗ H_{2^k},
    K = [[-seed, E'], [E, A]].
    """
    F = _field_with_residue(q, 1)
    if k < 0:
        raise ParameterError(f"k must be non-negative, got k={k}")
    if sign not in (1, -1):
        raise ParameterError(f"sign must be +1 or -1, got sign={sign}")
    Q = jacobsthal(F)
    Hk = sylvester(k)
    core = kron(Q, sign * S) + kron(identity(q), H2)
    A = kron(core.astype(np.int8), Hk)
    Hn = kron(H2, Hk)
    n = Hn.shape[0]
    K = block2x2(-Hn, build_Eprime(Hn, q), build_E(Hn, q), A)
    return _verify_blocks(K, n, f"ext_paley2({q}, k={k}, sign={sign})")


def twin_prime_construction(p: int, q: int, H=H1) -> SignMatrix:
    """Order n(pq+1) for twin primes: K = [[H, E'], [E, R ⊗ H]]."""
    R = twin_prime_pm(p, q)
    H = _seed(H)
    n = H.shape[0]
    v = p * q
    K = block2x2(H, build_Eprime(H, v), build_E(H, v), kron(R, H))
    return _verify_blocks(K, n, f"twin_prime({p}, {q}, n={n})")


def kronecker(A, B) -> SignMatrix:
    return _verify(kron(_seed(A, "left factor"), _seed(B, "right factor")), "kronecker")


# -- recipes ----------------------------------------------------------------

_PARAM_NAMES = {
    "sylvester": ("m",),
    "paley1": ("q",),
    "paley2": ("q",),
    "ext_paley1": ("q",),
    "ext_paley2": ("q", "k", "sign"),
    "twin_prime": ("p", "q"),
    "kronecker": (),
}
_SEED_COUNT = {"ext_paley1": 1, "twin_prime": 1, "kronecker": 2}


@dataclass(frozen=True)
class Recipe:
    """A replayable description of how a matrix is built."""

    method: str
    params: tuple[int, ...] = ()
    seeds: tuple["Recipe", ...] = field(default=())

    def __post_init__(self):
        if self.method not in METHODS:
            raise ParameterError(f"unknown method {self.method!r}")
        if len(self.params) != len(_PARAM_NAMES[self.method]):
            raise ParameterError(f"{self.method} takes params {_PARAM_NAMES[self.method]}")
        if len(self.seeds) != _SEED_COUNT.get(self.method, 0):
            raise ParameterError(f"{self.method} takes {_SEED_COUNT.get(self.method, 0)} seed recipe(s)")

    @property
    def named_params(self) -> dict[str, int]:
        return dict(zip(_PARAM_NAMES[self.method], self.params))

    @property
    def order(self) -> int:
        P = self.named_params
        m = self.method
        if m == "sylvester":
            return 2 ** P["m"]
        if m == "paley1":
            return P["q"] + 1
        if m == "paley2":
            return 2 * (P["q"] + 1)
        if m == "ext_paley1":
            return self.seeds[0].order * (P["q"] + 1)
        if m == "ext_paley2":
            return 2 ** (P["k"] + 1) * (P["q"] + 1)
        if m == "twin_prime":
            return self.seeds[0].order * (P["p"] * P["q"] + 1)
        return self.seeds[0].order * self.seeds[1].order

    @property
    def depth(self) -> int:
        return 1 + max((s.depth for s in self.seeds), default=0)

    def build(self) -> SignMatrix:
        P = self.named_params
        m = self.method
        if m == "sylvester":
            return sylvester(P["m"])
        if m == "paley1":
            return paley1(P["q"])
        if m == "paley2":
            return paley2(P["q"])
        if m == "ext_paley2":
            return ext_paley2(P["q"], P["k"], P["sign"])
        seeds = [s.build() for s in self.seeds]
        if m == "ext_paley1":
            return ext_paley1(P["q"], seeds[0])
        if m == "twin_prime":
            return twin_prime_construction(P["p"], P["q"], seeds[0])
        return kronecker(*seeds)

    def sort_key(self) -> tuple:
        return (self.method, self.params, tuple(s.sort_key() for s in self.seeds))

    def __str__(self) -> str:
        parts = [self.method.replace("_", "-")]
        for name, value in self.named_params.items():
            parts.append(f"{name}={value:+d}" if name == "sign" else f"{name}={value}")
        if self.method in ("ext_paley1", "twin_prime"):
            parts.append(f"n={self.seeds[0].order}")
        parts.extend(f"seed=({s})" for s in self.seeds)
        return " ".join(parts)


def sylvester_recipe(m: int) -> Recipe:
    return Recipe("sylvester", (m,))


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def _odd_prime_power_with_residue(q: int, residue: int) -> bool:
    pp = prime_power(q)
    return pp is not None and pp[0] != 2 and q % 4 == residue


def _seedless_recipes(n: int) -> list[Recipe]:
    out = []
    if _is_power_of_two(n):
        out.append(sylvester_recipe(n.bit_length() - 1))
    if _odd_prime_power_with_residue(n - 1, 3):
        out.append(Recipe("paley1", (n - 1,)))
    if n % 2 == 0 and _odd_prime_power_with_residue(n // 2 - 1, 1):
        out.append(Recipe("paley2", (n // 2 - 1,)))
    k = 0
    while n % 2 ** (k + 1) == 0:
        q = n // 2 ** (k + 1) - 1
        if _odd_prime_power_with_residue(q, 1):
            out.extend(Recipe("ext_paley2", (q, k, s)) for s in (-1, 1))
        k += 1
    return out


def _twin_lower(v: int) -> int | None:
    """p such that v = p(p+2) with p, p+2 odd primes, else None."""
    # p(p+2) = (p+1)^2 - 1
    s = int(round((v + 1) ** 0.5))
    if s * s != v + 1:
        return None
    p = s - 1
    return p if p > 2 and is_prime(p) and is_prime(p + 2) else None


def plan_order(N: int) -> list[Recipe]:
    """All recipes of nesting depth ≤ 2 (seed order ≤ 256) whose output has order N.

    Seeds are drawn from the seedless methods (Sylvester, Paley I/II,
    ext_paley2).  Results are sorted by method name, then parameters.
    """
    if N in (1, 2):
        return [sylvester_recipe(N - 1)]
    if N < 4 or N % 4:
        raise ParameterError(f"N must be 1, 2 or a positive multiple of 4, got N={N}")
    found = list(_seedless_recipes(N))
    divisors = [n for n in range(1, min(N, MAX_SEED_ORDER) + 1) if N % n == 0]
    for n in divisors:
        seeds = _seedless_recipes(n)
        q = N // n - 1
        if _odd_prime_power_with_residue(q, 3):
            found.extend(Recipe("ext_paley1", (q,), (s,)) for s in seeds)
        p = _twin_lower(q)
        if p is not None:
            found.extend(Recipe("twin_prime", (p, p + 2), (s,)) for s in seeds)
        other = N // n
        if 2 <= n <= other and other <= MAX_SEED_ORDER:
            for a in seeds:
                found.extend(Recipe("kronecker", (), (a, b)) for b in _seedless_recipes(other))
    return sorted(set(found), key=Recipe.sort_key)
