"""Exact and modular determinants of dense integer matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .numtheory import is_prime

__all__ = ["IntMatrix", "det_bareiss", "det_mod_prime", "det_mod", "det_cofactor"]

# int64 products of two residues stay exact below this bound.
_NUMPY_PRIME_LIMIT = 1 << 31


@dataclass(frozen=True)
class IntMatrix:
    """Square integer matrix, stored as a tuple of row tuples.

    ``index_origin`` only records whether the mathematical labels of rows
    and columns start at 0 or 1; storage is always 0-based.
    """

    entries: tuple[tuple[int, ...], ...]
    index_origin: int = 0

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        dim = len(rows)
        if dim == 0:
            raise ValueError("matrix must have at least one row")
        if any(len(row) != dim for row in rows):
            raise ValueError("matrix must be square")
        if self.index_origin not in (0, 1):
            raise ValueError("index_origin must be 0 or 1")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], index_origin: int = 0) -> IntMatrix:
        return cls(tuple(tuple(r) for r in rows), index_origin)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(zip(*self.entries)), self.index_origin)

    def swap_rows(self, i: int, j: int) -> IntMatrix:
        rows = list(self.entries)
        rows[i], rows[j] = rows[j], rows[i]
        return IntMatrix(tuple(rows), self.index_origin)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def _rows(M) -> list[list[int]]:
    if isinstance(M, IntMatrix):
        return M.tolist()
    return IntMatrix.from_rows(M).tolist()


def det_bareiss(M) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Pivots on the first nonzero entry at or below the diagonal. Every
    division is checked to be exact.
    """
    a = _rows(M)
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = a[k]
        piv = pk[k]
        tail = pk[k + 1:]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            if aik:
                vals = [piv * x - aik * y for x, y in zip(ai[k + 1:], tail)]
            else:
                vals = [piv * x for x in ai[k + 1:]]
            if prev != 1:
                out = []
                for v in vals:
                    q, r = divmod(v, prev)
                    if r:
                        raise ArithmeticError("inexact division in Bareiss elimination")
                    out.append(q)
                vals = out
            a[i] = [0] * (k + 1) + vals
        prev = piv
    return sign * a[n - 1][n - 1]


def det_mod_prime(M, p: int) -> int:
    """Determinant mod a prime p by Gaussian elimination over GF(p)."""
    if p < 2 or not is_prime(p):
        raise ValueError(f"det_mod_prime needs a prime modulus, got {p}")
    rows = [[x % p for x in row] for row in _rows(M)]
    if p < _NUMPY_PRIME_LIMIT:
        return _det_mod_prime_numpy(rows, p)
    return _det_mod_prime_python(rows, p)


def _det_mod_prime_numpy(rows, p):
    a = np.array(rows, dtype=np.int64)
    n = a.shape[0]
    det = 1
    for k in range(n):
        nz = np.flatnonzero(a[k:, k])
        if nz.size == 0:
            return 0
        r = k + int(nz[0])
        if r != k:
            a[[k, r]] = a[[r, k]]
            det = -det
        piv = int(a[k, k])
        det = det * piv % p
        f = a[k + 1:, k] * pow(piv, -1, p) % p
        a[k + 1:, k:] = (a[k + 1:, k:] - np.outer(f, a[k, k:]) % p) % p
    return det % p


def _det_mod_prime_python(a, p):
    n = len(a)
    det = 1
    for k in range(n):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    det = -det
                    break
            else:
                return 0
        pk = a[k]
        piv = pk[k]
        det = det * piv % p
        inv = pow(piv, -1, p)
        tail = pk[k + 1:]
        for i in range(k + 1, n):
            ai = a[i]
            if ai[k]:
                f = ai[k] * inv % p
                ai[k + 1:] = [(x - f * y) % p for x, y in zip(ai[k + 1:], tail)]
    return det % p


def det_mod(M, m: int) -> int:
    """Determinant reduced mod any m >= 1, via the exact integer determinant."""
    if m < 1:
        raise ValueError("modulus must be positive")
    return det_bareiss(M) % m


def det_cofactor(M) -> int:
    """Laplace expansion along the first row. Exponential; an oracle for small matrices."""
    a = _rows(M)

    def rec(rows):
        if len(rows) == 1:
            return rows[0][0]
        total = 0
        for j, v in enumerate(rows[0]):
            if v:
                minor = [r[:j] + r[j + 1:] for r in rows[1:]]
                total += (-1) ** j * v * rec(minor)
        return total

    return rec(a)
