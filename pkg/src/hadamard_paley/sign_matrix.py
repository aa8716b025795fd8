"""Dense {-1, 0, +1} matrices and their exact verification.

A sign matrix is a 2-D ``numpy`` array of dtype int8.  Every product is
accumulated in int64, so all checks are exact integer identities.

Kronecker products use the left-major convention of ``numpy.kron``: the left
factor indexes blocks, so row ``(i_A, i_B)`` of ``A ⊗ B`` is ``i_A * B.rows + i_B``.
"""

from __future__ import annotations

import numpy as np

from .errors import CapacityError, ContractError, ParameterError

SignMatrix = np.ndarray

MAX_ORDER = 1 << 20

H1 = np.array([[1]], dtype=np.int8)
H2 = np.array([[1, 1], [1, -1]], dtype=np.int8)


def as_sign_matrix(M) -> SignMatrix:
    """Coerce to a 2-D int8 array, rejecting entries outside {-1, 0, 1}."""
    arr = np.asarray(M)
    if arr.ndim != 2 or 0 in arr.shape:
        raise ParameterError(f"expected a non-empty 2-D matrix, got shape {arr.shape}")
    if not np.isin(arr, (-1, 0, 1)).all():
        raise ParameterError("matrix entries must lie in {-1, 0, 1}")
    return arr.astype(np.int8, copy=False)


def _gram_pm(M: np.ndarray) -> np.ndarray:
    """Gram matrix of a ±1 matrix from packed sign bits.

    For ±1 rows r, s of length m: r·s = m - 2 * popcount(bits(r) XOR bits(s)).
    """
    n, m = M.shape
    bits = np.packbits(M < 0, axis=1)
    pad = (-bits.shape[1]) % 8
    if pad:
        bits = np.pad(bits, ((0, 0), (0, pad)))
    P = np.ascontiguousarray(bits).view(np.uint64)
    w = P.shape[1]
    chunk = max(1, (1 << 22) // (n * w))
    G = np.empty((n, n), dtype=np.int64)
    for i in range(0, n, chunk):
        diff = np.bitwise_count(P[i : i + chunk, None, :] ^ P[None, :, :])
        G[i : i + chunk] = m - 2 * diff.sum(axis=2, dtype=np.int64)
    return G


def gram(M: SignMatrix) -> np.ndarray:
    """M @ M.T, exact in int64."""
    M = np.asarray(M)
    if M.size and np.isin(M, (-1, 1)).all():
        return _gram_pm(M)
    W = M.astype(np.int64)
    return W @ W.T


def identity(n: int) -> SignMatrix:
    return np.eye(n, dtype=np.int8)


def ones(rows: int, cols: int) -> SignMatrix:
    return np.ones((rows, cols), dtype=np.int8)


def kron(A: SignMatrix, B: SignMatrix) -> SignMatrix:
    A, B = as_sign_matrix(A), as_sign_matrix(B)
    rows, cols = A.shape[0] * B.shape[0], A.shape[1] * B.shape[1]
    if max(rows, cols) > MAX_ORDER:
        raise CapacityError(f"Kronecker product of size {rows}x{cols} exceeds cap {MAX_ORDER}")
    return np.kron(A, B).astype(np.int8)


def is_hadamard(M) -> bool:
    """True iff M is square, zero-free and M M^T = n I exactly."""
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        return False
    if not np.isin(M, (-1, 1)).all():
        return False
    n = M.shape[0]
    return bool(np.array_equal(gram(M), n * np.eye(n, dtype=np.int64)))


def is_conference(M) -> bool:
    """True iff M is square with zero diagonal, ±1 elsewhere, and M M^T = qI - J."""
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        return False
    q = M.shape[0]
    off = ~np.eye(q, dtype=bool)
    if np.any(np.diag(M) != 0) or not np.isin(M[off], (-1, 1)).all():
        return False
    target = q * np.eye(q, dtype=np.int64) - np.ones((q, q), dtype=np.int64)
    return bool(np.array_equal(gram(M), target))


def require_hadamard(H, name: str = "H") -> SignMatrix:
    if not is_hadamard(H):
        raise ContractError(f"{name} is not a Hadamard matrix")
    return as_sign_matrix(H)


def build_E(H: SignMatrix, q: int) -> SignMatrix:
    """q stacked copies of H, shape (nq, n); E E^T = n (J_q ⊗ I_n)."""
    H = require_hadamard(H)
    return kron(ones(q, 1), H)


def build_Eprime(H: SignMatrix, q: int) -> SignMatrix:
    """q side-by-side copies of H, shape (n, nq); E' E'^T = nq I_n."""
    H = require_hadamard(H)
    return kron(ones(1, q), H)


def block2x2(TL, TR, BL, BR) -> SignMatrix:
    pairs = [
        ("TL", TL, "TR", TR, 0),
        ("BL", BL, "BR", BR, 0),
        ("TL", TL, "BL", BL, 1),
        ("TR", TR, "BR", BR, 1),
    ]
    for a_name, a, b_name, b, axis in pairs:
        if a.shape[axis] != b.shape[axis]:
            what = "row" if axis == 0 else "column"
            raise ParameterError(
                f"{what} count mismatch between {a_name} {a.shape} and {b_name} {b.shape}"
            )
    return np.block([[TL, TR], [BL, BR]]).astype(np.int8)
