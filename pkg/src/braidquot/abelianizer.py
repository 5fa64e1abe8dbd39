"""Relation matrices, Smith normal form and abelian invariants.

All arithmetic is on Python ints held in ``dtype=object`` arrays, so entries
never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .words import Presentation, exponent_sum


@dataclass(frozen=True)
class AbelianInvariants:
    """``Z^free_rank + Z_t1 + ... + Z_tk`` with ``t1 | t2 | ... | tk``."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(t) for t in self.torsion))
        if self.free_rank < 0:
            raise ValueError("free_rank must be non-negative")
        for t in self.torsion:
            if t < 2:
                raise ValueError(f"torsion coefficients must be >= 2, got {self.torsion}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def torsion_order(self) -> int:
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = [f"Z_{t}" for t in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) or "1"


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form."""

    D: np.ndarray
    U: np.ndarray
    V: np.ndarray

    @property
    def diagonal(self) -> list[int]:
        return [int(self.D[i, i]) for i in range(min(self.D.shape))]


def integer_matrix(rows, ncols: int | None = None) -> np.ndarray:
    rows = [[int(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    out = np.zeros((len(rows), ncols), dtype=object)
    for i, r in enumerate(rows):
        if len(r) != ncols:
            raise ValueError("ragged matrix")
        out[i, :] = r
    return out


def identity(n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def relation_matrix(p: Presentation) -> np.ndarray:
    """Exponent-sum matrix: one row per relator, one column per generator."""
    return integer_matrix(
        [[exponent_sum(r, g) for g in range(1, p.rank + 1)] for r in p.relators], p.rank)


def _pivot(A: np.ndarray, t: int) -> tuple[int, int] | None:
    # minimal nonzero |a|, ties by lowest row then column
    best = None
    m, n = A.shape
    for i in range(t, m):
        for j in range(t, n):
            a = A[i, j]
            if a and (best is None or abs(a) < best[0]):
                best = (abs(a), i, j)
    return None if best is None else best[1:]


def smith_normal_form(A) -> SmithDecomposition:
    A = np.array(A, dtype=object)
    if A.ndim != 2:
        raise ValueError("expected a 2-d integer matrix")
    A = np.vectorize(int, otypes=[object])(A) if A.size else A.copy()
    m, n = A.shape
    U, V = identity(m), identity(n)

    def swap_rows(i, j):
        if i != j:
            A[[i, j]] = A[[j, i]]
            U[[i, j]] = U[[j, i]]

    def swap_cols(i, j):
        if i != j:
            A[:, [i, j]] = A[:, [j, i]]
            V[:, [i, j]] = V[:, [j, i]]

    for t in range(min(m, n)):
        piv = _pivot(A, t)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            p = A[t, t]
            for i in range(t + 1, m):
                if A[i, t]:
                    q = A[i, t] // p
                    A[i] -= q * A[t]
                    U[i] -= q * U[t]
            for j in range(t + 1, n):
                if A[t, j]:
                    q = A[t, j] // p
                    A[:, j] -= q * A[:, t]
                    V[:, j] -= q * V[:, t]
            # remainders left in the pivot row/column become the next pivot
            best = None
            for i in range(t + 1, m):
                if A[i, t] and (best is None or abs(A[i, t]) < best[0]):
                    best = (abs(A[i, t]), i, t)
            for j in range(t + 1, n):
                if A[t, j] and (best is None or abs(A[t, j]) < best[0]):
                    best = (abs(A[t, j]), t, j)
            if best is not None:
                swap_rows(t, best[1])
                swap_cols(t, best[2])
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i, j] % p), None)
            if bad is None:
                break
            A[t] += A[bad[0]]
            U[t] += U[bad[0]]
        if A[t, t] < 0:
            A[t] = -A[t]
            U[t] = -U[t]
    return SmithDecomposition(A, U, V)


def invariants_from_diagonal(diagonal, ngens: int) -> AbelianInvariants:
    nonzero = [int(d) for d in diagonal if d]
    return AbelianInvariants(ngens - len(nonzero), tuple(d for d in nonzero if d > 1))


def abelian_invariants(p: Presentation) -> AbelianInvariants:
    M = relation_matrix(p)
    if M.shape[0] == 0:
        return AbelianInvariants(p.rank)
    return invariants_from_diagonal(smith_normal_form(M).diagonal, p.rank)


def certify_infinite(p: Presentation) -> bool:
    """True proves ``p`` presents an infinite group; False proves nothing."""
    return abelian_invariants(p).free_rank > 0


def integer_det(M) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = [[int(x) for x in row] for row in np.asarray(M, dtype=object).tolist()]
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[-1][-1] if n else 1


def is_smith_form(D) -> bool:
    D = np.asarray(D, dtype=object)
    m, n = D.shape
    for i in range(m):
        for j in range(n):
            if i != j and D[i, j]:
                return False
    diag = [D[i, i] for i in range(min(m, n))]
    if any(d < 0 for d in diag):
        return False
    # d_i | d_{i+1}, zeros trailing
    return all((b % a == 0) if a else b == 0 for a, b in zip(diag, diag[1:]))
