"""Row reduction, kernels and orbit spinning over a finite field.

Vectors are tuples of encoded field elements.  Prime fields go through numpy
(int64 is exact here: p < 2^31 keeps every product below 2^62); extension
fields use the generic field operations.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .fields import FieldContext

Vector = tuple[int, ...]
Mat = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Echelon:
    """A subspace of F^ncols given by its reduced row-echelon basis."""

    field: FieldContext
    ncols: int
    rows: Mat
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence[int]) -> Vector:
        """Remainder of v modulo the subspace; zero in every pivot column."""
        F = self.field
        if F.f == 1:
            p = F.p
            w = [c % p for c in v]
            for row, c in zip(self.rows, self.pivots):
                t = w[c]
                if t:
                    w = [(a - t * b) % p for a, b in zip(w, row)]
            return tuple(w)
        w = list(v)
        for row, c in zip(self.rows, self.pivots):
            t = w[c]
            if t:
                w = [F.sub(a, F.mul(t, b)) for a, b in zip(w, row)]
        return tuple(w)

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def contains_space(self, other: Echelon) -> bool:
        return all(self.contains(row) for row in other.rows)


def _rref_numpy(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    A = A % p
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        col = A[:, c].copy()
        col[r] = 0
        if col.any():
            A = (A - np.outer(col, A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _rref_generic(rows: list[list[int]], F: FieldContext, ncols: int) -> tuple[list[list[int]], list[int]]:
    A = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(A):
            break
        i = next((k for k in range(r, len(A)) if A[k][c]), None)
        if i is None:
            continue
        A[r], A[i] = A[i], A[r]
        inv = F.inv(A[r][c])
        A[r] = [F.mul(inv, a) for a in A[r]]
        for k in range(len(A)):
            if k != r and A[k][c]:
                t = A[k][c]
                A[k] = [F.sub(a, F.mul(t, b)) for a, b in zip(A[k], A[r])]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rref(rows: Iterable[Sequence[int]], F: FieldContext, ncols: int) -> Echelon:
    rows = [tuple(r) for r in rows]
    if not rows:
        return Echelon(F, ncols, (), ())
    if F.f == 1:
        A, piv = _rref_numpy(np.array(rows, dtype=np.int64).reshape(len(rows), ncols), F.p)
        out = tuple(tuple(int(x) for x in row) for row in A)
    else:
        A, piv = _rref_generic(rows, F, ncols)
        out = tuple(tuple(row) for row in A)
    return Echelon(F, ncols, out, tuple(piv))


def mat_vec(M: Mat, v: Sequence[int], F: FieldContext) -> Vector:
    if F.f == 1:
        return tuple(sum(a * b for a, b in zip(row, v)) % F.p for row in M)
    out = []
    for row in M:
        acc = 0
        for a, b in zip(row, v):
            if a and b:
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return tuple(out)


def mat_mul(A: Mat, B: Mat, F: FieldContext) -> Mat:
    if F.f == 1:
        C = np.array(A, dtype=np.int64) @ np.array(B, dtype=np.int64) % F.p
        return tuple(tuple(int(x) for x in row) for row in C)
    cols = list(zip(*B))
    return tuple(tuple(mat_vec((col,), row, F)[0] for col in cols) for row in A)


def identity(n: int) -> Mat:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def kernel(M: Mat, F: FieldContext, ncols: int) -> Echelon:
    """Null space {v : M v = 0} as an echelon basis."""
    E = rref(M, F, ncols)
    free = [c for c in range(ncols) if c not in E.pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for row, pc in zip(E.rows, E.pivots):
            v[pc] = F.neg(row[fc])
        basis.append(v)
    return rref(basis, F, ncols)


def spin(vectors: Iterable[Sequence[int]], mats: Sequence[Mat], F: FieldContext, ncols: int) -> Echelon:
    """Smallest subspace containing ``vectors`` and stable under every matrix in ``mats``.

    Only newly found directions are pushed through the generators on each
    round, so each basis vector is multiplied by each generator once.
    """
    E = rref(vectors, F, ncols)
    frontier = list(E.rows)
    if F.f == 1:
        p = F.p
        gens = [np.array(M, dtype=np.int64) for M in mats]
    while frontier:
        if F.f == 1:
            X = np.array(frontier, dtype=np.int64)
            images = np.vstack([X @ G.T % p for G in gens])
            if E.rank:
                B = np.array(E.rows, dtype=np.int64)
                images = (images - images[:, list(E.pivots)] @ B) % p
            images = [tuple(int(x) for x in row) for row in images if row.any()]
        else:
            images = []
            for v in frontier:
                for M in mats:
                    w = E.reduce(mat_vec(M, v, F))
                    if any(w):
                        images.append(w)
        new = rref(images, F, ncols)
        if not new.rank:
            break
        frontier = list(new.rows)
        E = rref(list(E.rows) + frontier, F, ncols)
    return E


def is_stable(E: Echelon, mats: Sequence[Mat]) -> bool:
    return all(E.contains(mat_vec(M, v, E.field)) for M in mats for v in E.rows)
