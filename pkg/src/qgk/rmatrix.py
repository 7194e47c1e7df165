"""R-matrices over Q[q, 1/q]: construction, Yang-Baxter and inverse checks.

Pair indices flatten as ``(a, i) -> a * n + i`` (0-based), so the Kronecker
product of an n x n and an n x n matrix is the ordinary ``numpy.kron``.
Symbolic matrices are stored sparsely as ``{row: {col: LaurentQ}}``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .scalar import LaurentQ, ONE, Q, check_point


def flat(a: int, i: int, n: int) -> int:
    return a * n + i


def unflat(k: int, n: int):
    return divmod(k, n)


def _sp_mul(A: dict, B: dict) -> dict:
    out = {}
    for r, row in A.items():
        acc = {}
        for k, a in row.items():
            brow = B.get(k)
            if not brow:
                continue
            for c, b in brow.items():
                v = acc.get(c)
                acc[c] = a * b if v is None else v + a * b
        acc = {c: v for c, v in acc.items() if v}
        if acc:
            out[r] = acc
    return out


class RMatrix:
    """An n^2 x n^2 matrix with Laurent polynomial entries."""

    def __init__(self, n: int, entries=None):
        if n < 1:
            raise ValueError("dimension must be positive")
        self.n = n
        size = n * n
        rows = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < size and 0 <= c < size):
                raise IndexError(f"entry ({r}, {c}) outside {size}x{size}")
            v = LaurentQ.coerce(v)
            if v:
                rows.setdefault(r, {})[c] = v
        self._rows = rows

    @property
    def size(self) -> int:
        return self.n * self.n

    @classmethod
    def identity(cls, n: int) -> RMatrix:
        return cls(n, {(k, k): ONE for k in range(n * n)})

    def entries(self) -> dict:
        return {(r, c): v for r, row in self._rows.items() for c, v in row.items()}

    def __getitem__(self, rc) -> LaurentQ:
        r, c = rc
        return self._rows.get(r, {}).get(c, LaurentQ())

    def entry(self, a, i, b, k) -> LaurentQ:
        """Entry R_{(a,i),(b,k)} with 1-based pair indices."""
        n = self.n
        return self[flat(a - 1, i - 1, n), flat(b - 1, k - 1, n)]

    def with_entry(self, r: int, c: int, value) -> RMatrix:
        e = self.entries()
        e[(r, c)] = LaurentQ.coerce(value)
        return RMatrix(self.n, e)

    def __eq__(self, other):
        return isinstance(other, RMatrix) and self.n == other.n and self._rows == other._rows

    __hash__ = None

    def __matmul__(self, other: RMatrix) -> RMatrix:
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        out = RMatrix(self.n)
        out._rows = _sp_mul(self._rows, other._rows)
        return out

    def bar(self) -> RMatrix:
        return RMatrix(self.n, {k: v.bar() for k, v in self.entries().items()})

    def transpose(self) -> RMatrix:
        return RMatrix(self.n, {(c, r): v for (r, c), v in self.entries().items()})

    def is_identity(self) -> bool:
        return self == RMatrix.identity(self.n)

    def dense(self) -> list:
        size = self.size
        return [[self[r, c] for c in range(size)] for r in range(size)]

    def at_one(self) -> np.ndarray:
        """Exact specialisation q = 1 as an object array of Fractions."""
        size = self.size
        out = np.zeros((size, size), dtype=object)
        for (r, c), v in self.entries().items():
            out[r, c] = v.subs_one()
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entries": [[r, c, v.to_json()] for (r, c), v in sorted(self.entries().items())],
        }

    @classmethod
    def from_json(cls, obj) -> RMatrix:
        return cls(obj["n"], {(r, c): LaurentQ.from_json(v) for r, c, v in obj["entries"]})

    def __repr__(self):
        return f"RMatrix(n={self.n}, nnz={len(self.entries())})"


def standard_sln_rmatrix(N: int) -> RMatrix:
    """The SL_N R-matrix: q on (ii,ii), 1 on (ij,ij) for i != j, q - 1/q on ((j,i),(i,j)) for i > j.

    ``t_i^j`` is the coordinate dual to the endomorphism sending x_i to x_j,
    i.e. to the matrix unit with a 1 in row j, column i.
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    c = Q - Q**-1
    e = {}
    for i in range(N):
        for j in range(N):
            k = flat(i, j, N)
            e[(k, k)] = Q if i == j else ONE
    for i in range(N):
        for j in range(i):
            e[(flat(j, i, N), flat(i, j, N))] = c
    return RMatrix(N, e)


def standard_sln_rmatrix_numeric(N: int, z) -> np.ndarray:
    """Same matrix built directly from a complex value of q."""
    z = check_point(z)
    size = N * N
    R = np.zeros((size, size), dtype=complex)
    for i in range(N):
        for j in range(N):
            k = flat(i, j, N)
            R[k, k] = z if i == j else 1.0
    for i in range(N):
        for j in range(i):
            R[flat(j, i, N), flat(i, j, N)] = z - 1 / z
    return R


def leg_embedding(R: RMatrix, legs: tuple) -> dict:
    """Sparse rows of R acting on legs (a, b) of the triple tensor power."""
    n = R.n
    a, b = legs
    spectator = ({0, 1, 2} - {a, b}).pop()
    out = {}
    for (r, c), v in R.entries().items():
        r1, r2 = unflat(r, n)
        c1, c2 = unflat(c, n)
        for x in range(n):
            ri = [0, 0, 0]
            ci = [0, 0, 0]
            ri[a], ri[b], ri[spectator] = r1, r2, x
            ci[a], ci[b], ci[spectator] = c1, c2, x
            row = (ri[0] * n + ri[1]) * n + ri[2]
            col = (ci[0] * n + ci[1]) * n + ci[2]
            out.setdefault(row, {})[col] = v
    return out


@dataclass
class QYBEResult:
    holds: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.holds


def qybe_check(R: RMatrix) -> QYBEResult:
    """Exact test of R12 R13 R23 == R23 R13 R12."""
    R12 = leg_embedding(R, (0, 1))
    R13 = leg_embedding(R, (0, 2))
    R23 = leg_embedding(R, (1, 2))
    left = _sp_mul(_sp_mul(R12, R13), R23)
    right = _sp_mul(_sp_mul(R23, R13), R12)
    if left == right:
        return QYBEResult(True)
    for r in sorted(set(left) | set(right)):
        lrow, rrow = left.get(r, {}), right.get(r, {})
        for c in sorted(set(lrow) | set(rrow)):
            lv, rv = lrow.get(c, LaurentQ()), rrow.get(c, LaurentQ())
            if lv != rv:
                return QYBEResult(False, (r, c, lv, rv))
    return QYBEResult(False)


def inverse_law_check(R: RMatrix) -> bool:
    """True iff R(q) R(1/q) is exactly the identity."""
    return (R @ R.bar()).is_identity()


def eval_rmatrix(R: RMatrix, z) -> np.ndarray:
    z = check_point(z)
    out = np.zeros((R.size, R.size), dtype=complex)
    for (r, c), v in R.entries().items():
        out[r, c] = v.eval(z)
    return out


def numeric_qybe_residual(Rz: np.ndarray, n: int) -> float:
    """Max-abs entry of R12 R13 R23 - R23 R13 R12 for a numeric R."""
    Rs = sp.csr_matrix(Rz)
    eye = sp.identity(n, dtype=complex, format="csr")
    R12 = sp.kron(Rs, eye, format="csr")
    R23 = sp.kron(eye, Rs, format="csr")
    P23 = sp.kron(eye, swap_matrix(n, sparse=True), format="csr")
    R13 = P23 @ R12 @ P23
    diff = R12 @ R13 @ R23 - R23 @ R13 @ R12
    return float(abs(diff).max()) if diff.nnz else 0.0


def swap_matrix(n: int, sparse: bool = False):
    """Flip of V (x) V: e_a (x) e_b -> e_b (x) e_a."""
    rows = [flat(b, a, n) for a in range(n) for b in range(n)]
    cols = [flat(a, b, n) for a in range(n) for b in range(n)]
    P = sp.csr_matrix((np.ones(n * n), (rows, cols)), shape=(n * n, n * n))
    return P if sparse else P.toarray()
