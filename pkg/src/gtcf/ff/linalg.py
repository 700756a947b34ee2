"""Linear algebra over F_p (numpy) and over an arbitrary field (element lists)."""

from __future__ import annotations

from typing import Any, Optional, Sequence

import numpy as np

from .field import Field


def rref_mod_p(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    R = np.array(M, dtype=np.int64) % p
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = (R[r] * pow(int(R[r, c]), -1, p)) % p
        others = np.nonzero(R[:, c])[0]
        for j in others:
            if j != r:
                R[j] = (R[j] - R[j, c] * R[r]) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank_mod_p(M: np.ndarray, p: int) -> int:
    if np.size(M) == 0:
        return 0
    return len(rref_mod_p(M, p)[1])


def solve_mod_p(A: np.ndarray, b: Sequence[int], p: int) -> Optional[np.ndarray]:
    """One solution of ``A x = b`` over F_p, or None."""
    A = np.array(A, dtype=np.int64)
    rows, cols = A.shape
    aug = np.concatenate([A, np.array(b, dtype=np.int64).reshape(rows, 1)], axis=1)
    R, pivots = rref_mod_p(aug, p)
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for r, c in enumerate(pivots):
        x[c] = R[r, cols]
    return x


# generic elimination; rows are lists of field elements


def rref(F: Field, M: Sequence[Sequence[Any]]) -> tuple[list[list[Any]], list[int]]:
    R = [list(row) for row in M]
    if not R:
        return R, []
    rows, cols = len(R), len(R[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        i = next((i for i in range(r, rows) if not F.is_zero(R[i][c])), None)
        if i is None:
            continue
        R[r], R[i] = R[i], R[r]
        inv = F.inv(R[r][c])
        R[r] = [F.mul(inv, v) for v in R[r]]
        for j in range(rows):
            if j != r and not F.is_zero(R[j][c]):
                f = R[j][c]
                R[j] = [F.sub(a, F.mul(f, b)) for a, b in zip(R[j], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(F: Field, M: Sequence[Sequence[Any]]) -> int:
    return len(rref(F, M)[1])


def nullspace(F: Field, M: Sequence[Sequence[Any]], cols: Optional[int] = None) -> list[list[Any]]:
    if not M:
        n = cols or 0
        return [[F.one if i == j else F.zero for i in range(n)] for j in range(n)]
    R, pivots = rref(F, M)
    n = len(R[0])
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        v = [F.zero] * n
        v[free] = F.one
        for r, c in enumerate(pivots):
            v[c] = F.neg(R[r][free])
        basis.append(v)
    return basis


def solve(F: Field, A: Sequence[Sequence[Any]], b: Sequence[Any]) -> Optional[list[Any]]:
    if not A:
        return []
    cols = len(A[0])
    R, pivots = rref(F, [list(row) + [bi] for row, bi in zip(A, b)])
    if cols in pivots:
        return None
    x = [F.zero] * cols
    for r, c in enumerate(pivots):
        x[c] = R[r][cols]
    return x


def transpose(A: Sequence[Sequence[Any]]) -> list[list[Any]]:
    return [list(col) for col in zip(*A)]
