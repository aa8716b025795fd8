"""Normalization, sign spectra and equivalence testing for Hadamard matrices.

Two Hadamard matrices are equivalent when one can be turned into the other
by permuting and negating rows and columns.  Sign spectra of strictly
normalized matrices give a cheap screen: different spectrum sets prove the
computed invariants differ, equal sets prove nothing.  ``brute_equivalent``
is the exact (exponential) test for small orders.

The sorting pass of strict normalization alone depends on the input's row
and column order.  By default it starts from a canonical signed permutation
of the input, found with nauty on the usual 4n-vertex graph, so equivalent
inputs give the same strictly normalized matrix.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
import pynauty

from .errors import ContractError, ParameterError
from .sign_matrix import SignMatrix, is_hadamard

DEFAULT_BUDGET = 10**7


class Verdict(str, enum.Enum):
    EQUIVALENT = "equivalent"
    INEQUIVALENT = "inequivalent"
    BUDGET_EXHAUSTED = "budget-exhausted"


class ScreenVerdict(str, enum.Enum):
    POSSIBLY_ISOMORPHIC = "possibly-isomorphic"
    SPECTRA_DIFFER = "spectra-differ"


@dataclass(frozen=True)
class SignSpectrum:
    row_changes: tuple[int, ...]
    col_changes: tuple[int, ...]

    def as_set(self) -> tuple[tuple[int, ...], ...]:
        """The unordered pair {row sequence, column sequence}, as a sorted tuple."""
        return tuple(sorted((self.row_changes, self.col_changes)))


@dataclass(frozen=True)
class EquivalenceReport:
    spectra_equal: bool
    verdict: ScreenVerdict
    spectra: tuple[SignSpectrum, SignSpectrum]


def _require_hadamard(H, name="H") -> np.ndarray:
    if not is_hadamard(H):
        raise ContractError(f"{name} is not a Hadamard matrix")
    return np.asarray(H, dtype=np.int8)


def sign_changes(v) -> int:
    """Number of adjacent positions in a ±1 sequence that differ in sign."""
    v = np.asarray(v)
    if v.ndim != 1 or v.size == 0:
        raise ParameterError("expected a non-empty 1-D sequence")
    if not np.isin(v, (-1, 1)).all():
        raise ParameterError("sequence entries must be ±1")
    return int(np.count_nonzero(v[1:] != v[:-1]))


def normalize(H) -> SignMatrix:
    """Negate columns, then rows, so the first row and column are all +1."""
    H = _require_hadamard(H).copy()
    H[:, H[0] < 0] *= -1
    H[H[:, 0] < 0, :] *= -1
    return H


def _sorted_tail(bits: np.ndarray) -> np.ndarray:
    """Permutation sorting rows 1.. of a 0/1 matrix lexicographically (row 0 stays)."""
    tail = bits[1:]
    # lexsort uses its last key as the primary one
    order = np.lexsort(tail.T[::-1])
    return np.concatenate(([0], order + 1))


def _canonical_order(vertices: list[int], base: int) -> tuple[np.ndarray, np.ndarray]:
    """Line indices in order of first appearance, with +1 if the + copy came first."""
    seen, idx, sgn = set(), [], []
    for v in vertices:
        k, minus = divmod(v - base, 2)
        if k not in seen:
            seen.add(k)
            idx.append(k)
            sgn.append(-1 if minus else 1)
    return np.array(idx), np.array(sgn, dtype=np.int8)


def canonical_form(H) -> SignMatrix:
    """A signed row/column permutation of H that depends only on its equivalence class.

    Row i becomes vertices 2i (+) and 2i+1 (-), column j becomes 2n+2j and
    2n+2j+1; r+ is joined to c+ where H[i, j] = +1 and to c- where it is -1
    (r- the other way round), and each +/- pair is joined.  Colour-preserving
    isomorphisms of this graph are exactly the equivalences, so nauty's
    canonical labelling yields a canonical matrix.
    """
    H = _require_hadamard(H)
    n = H.shape[0]
    cols_plus = 2 * n + 2 * np.arange(n)
    adj = {}
    for i in range(n):
        plus_side = np.where(H[i] > 0, cols_plus, cols_plus + 1)
        adj[2 * i] = [2 * i + 1] + plus_side.tolist()
        adj[2 * i + 1] = (plus_side ^ 1).tolist()
    for j in range(n):
        adj[2 * n + 2 * j] = [2 * n + 2 * j + 1]
    g = pynauty.Graph(
        4 * n,
        adjacency_dict=adj,
        vertex_coloring=[set(range(2 * n)), set(range(2 * n, 4 * n))],
    )
    lab = pynauty.canon_label(g)
    rows, rsign = _canonical_order([v for v in lab if v < 2 * n], 0)
    cols, csign = _canonical_order([v for v in lab if v >= 2 * n], 2 * n)
    return (rsign[:, None] * H[np.ix_(rows, cols)] * csign[None, :]).astype(np.int8)


def strict_normalize(H, canonical: bool = True) -> SignMatrix:
    """Normalize, then alternately sort columns and rows 2..n until stable.

    Entries are read as bits (+1 -> 0, -1 -> 1); columns are ordered by their
    top-down bit strings, rows by their left-right bit strings.  This pushes
    +1 entries toward the top-left without moving the first row or column.
    With ``canonical`` (the default) the input is first replaced by its
    ``canonical_form``, which makes the result an invariant of the class;
    otherwise ties follow the input order.
    """
    M = normalize(canonical_form(H) if canonical else H)
    n = M.shape[0]
    for _ in range(4 * n * n + 4):
        col_perm = _sorted_tail((M < 0).T)
        M2 = M[:, col_perm]
        row_perm = _sorted_tail(M2 < 0)
        M2 = M2[row_perm]
        if np.array_equal(M2, M):
            return M
        M = M2
    raise AssertionError("strict normalization did not reach a fixed point")


def sign_spectrum(H) -> SignSpectrum:
    """Sign changes of every row and column of H, as given (no normalization)."""
    H = _require_hadamard(H)
    changes = H[:, 1:] != H[:, :-1]
    rows = tuple(int(x) for x in changes.sum(axis=1))
    cchanges = H[1:, :] != H[:-1, :]
    cols = tuple(int(x) for x in cchanges.sum(axis=0))
    return SignSpectrum(rows, cols)


def compare_spectra(H1, H2) -> EquivalenceReport:
    H1 = _require_hadamard(H1, "H1")
    H2 = _require_hadamard(H2, "H2")
    if H1.shape != H2.shape:
        raise ParameterError(f"order mismatch: {H1.shape[0]} vs {H2.shape[0]}")
    s1 = sign_spectrum(strict_normalize(H1))
    s2 = sign_spectrum(strict_normalize(H2))
    equal = s1.as_set() == s2.as_set()
    verdict = ScreenVerdict.POSSIBLY_ISOMORPHIC if equal else ScreenVerdict.SPECTRA_DIFFER
    return EquivalenceReport(equal, verdict, (s1, s2))


class _Budget(Exception):
    pass


def _normalize_at(H: np.ndarray, r: int, c: int) -> np.ndarray:
    """Move row r and column c to the front and make them all +1."""
    n = H.shape[0]
    rows = [r] + [i for i in range(n) if i != r]
    cols = [c] + [j for j in range(n) if j != c]
    M = H[np.ix_(rows, cols)].astype(np.int8)
    M[:, M[0] < 0] *= -1
    M[M[:, 0] < 0, :] *= -1
    return M


def _row_permutation_exists(M: np.ndarray, N: np.ndarray, counter: list[int], budget: int) -> bool:
    """Backtrack over row bijections N-row t -> M-row, refining a column partition.

    Both matrices are normalized with row 0 and column 0 pinned.  Columns 1..
    of M and of N carry aligned cell labels (cell k of M must map onto cell k
    of N); the next M row is admissible only if it splits every cell into the
    same numbers of -1 and +1 entries as the target N row does.  When all rows
    are placed, matching cell sizes give the column bijection.
    """
    n = M.shape[0]
    Mb = (M[:, 1:] < 0).astype(np.int64)
    Nb = (N[:, 1:] < 0).astype(np.int64)
    used = np.zeros(n, dtype=bool)
    used[0] = True

    def extend(t: int, lab_m: np.ndarray, lab_n: np.ndarray, cells: int) -> bool:
        if t == n:
            return True
        onehot_m = np.eye(cells, dtype=np.int64)[lab_m]
        target = Nb[t] @ np.eye(cells, dtype=np.int64)[lab_n]
        splits = Mb @ onehot_m
        candidates = np.flatnonzero(~used & (splits == target).all(axis=1))
        counter[0] += int((~used).sum())
        if counter[0] > budget:
            raise _Budget
        new_n = 2 * lab_n + Nb[t]
        values = np.unique(new_n)
        lab_n2 = np.searchsorted(values, new_n)
        for s in candidates:
            lab_m2 = np.searchsorted(values, 2 * lab_m + Mb[s])
            used[s] = True
            if extend(t + 1, lab_m2, lab_n2, len(values)):
                return True
            used[s] = False
        return False

    zeros = np.zeros(n - 1, dtype=np.int64)
    return extend(1, zeros, zeros, 1)


def brute_equivalent(H1, H2, budget: int = DEFAULT_BUDGET) -> Verdict:
    """Exact equivalence test by backtracking; intended for orders ≤ 12.

    Every choice of (row, column) of H1 to align with H2's first row and
    column is tried; once both are normalized at the aligned position, any
    remaining equivalence is a pure permutation fixing row 0 and column 0.
    """
    H1 = _require_hadamard(H1, "H1")
    H2 = _require_hadamard(H2, "H2")
    if H1.shape != H2.shape:
        raise ParameterError(f"order mismatch: {H1.shape[0]} vs {H2.shape[0]}")
    n = H1.shape[0]
    N = _normalize_at(H2, 0, 0)
    counter = [0]
    try:
        for r in range(n):
            for c in range(n):
                M = _normalize_at(H1, r, c)
                if _row_permutation_exists(M, N, counter, budget):
                    return Verdict.EQUIVALENT
    except _Budget:
        return Verdict.BUDGET_EXHAUSTED
    return Verdict.INEQUIVALENT
