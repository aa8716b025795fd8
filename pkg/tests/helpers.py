"""Shared fixtures-by-function and independent oracles for the test suite."""

from functools import lru_cache

import numpy as np

from hadamard_paley.finite_field import make_field, prime_power


def _odd_prime_powers(limit):
    out = []
    for q in range(3, limit + 1):
        pp = prime_power(q)
        if pp is not None and pp[0] != 2:
            out.append(q)
    return out


ODD_PRIME_POWERS_TO_343 = _odd_prime_powers(343)


@lru_cache(maxsize=None)
def field_of(q):
    return make_field(*prime_power(q))


def addition_indices(F):
    """plus[c, b] = index of elements[b] + elements[c], from the coefficient tuples."""
    d = np.array(F.elements, dtype=np.int64)
    place = F.p ** np.arange(F.r)
    return ((d[:, None, :] + d[None, :, :]) % F.p) @ place


def kron_by_definition(A, B):
    """Entry-by-entry Kronecker product: block (i, j) is A[i, j] * B."""
    A, B = np.asarray(A), np.asarray(B)
    (ar, ac), (br, bc) = A.shape, B.shape
    out = np.zeros((ar * br, ac * bc), dtype=np.int64)
    for i in range(ar):
        for j in range(ac):
            for k in range(br):
                for l in range(bc):
                    out[i * br + k, j * bc + l] = A[i, j] * B[k, l]
    return out


def gram_by_loops(M):
    """M M^T by explicit dot products over Python ints."""
    rows = [[int(x) for x in r] for r in np.asarray(M)]
    return [[sum(a * b for a, b in zip(r, s)) for s in rows] for r in rows]


def random_equivalent(H, rng):
    """Apply a random signed row permutation and signed column permutation."""
    n = H.shape[0]
    rows, cols = rng.permutation(n), rng.permutation(n)
    a = rng.choice([-1, 1], size=n)
    b = rng.choice([-1, 1], size=n)
    return (a[:, None] * H[np.ix_(rows, cols)] * b[None, :]).astype(np.int8)


def random_negations(H, rng):
    n = H.shape[0]
    a = rng.choice([-1, 1], size=n)
    b = rng.choice([-1, 1], size=n)
    return (a[:, None] * H * b[None, :]).astype(np.int8)
