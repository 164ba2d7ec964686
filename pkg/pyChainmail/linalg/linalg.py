"""
Copyright (c) 2026 pyChainmail contributors

Exact integer linear algebra for linking matrices: determinant, signature,
Smith normal form and affine systems over GF(2). No floating point is used
anywhere; integer matrices are numpy arrays of dtype=object so that entries
are arbitrary-precision Python ints.

This work is licensed under the GNU General Public License v3.0 or later.
You should have received a copy of the license along with this work. If not,
see <https://www.gnu.org/licenses/>.
"""


import logging
import math
from collections import namedtuple

import numpy as np
from sympy import Matrix, QQ, ZZ
from sympy.matrices.normalforms import smith_normal_form as _sympy_smith_normal_form
from sympy.polys.matrices import DomainMatrix

from ..utils import ChainmailError, format_matrix, gray_code_flips


logger = logging.getLogger(__name__)


SnfDiagonal = namedtuple('SnfDiagonal', ['factors'])
Gf2AffineSolutionSet = namedtuple('Gf2AffineSolutionSet', ['particular', 'kernel_basis'])


def as_int_array(M):
    if isinstance(M, SymmetricIntMatrix):
        return M.entries
    arr = np.array(M, dtype=object)
    if arr.size == 0:
        return np.zeros((arr.shape[0] if arr.ndim == 2 else 0, arr.shape[1] if arr.ndim == 2 else 0), dtype=object)
    if arr.ndim != 2:
        raise ChainmailError("expected a two-dimensional integer matrix")
    return np.vectorize(int, otypes=[object])(arr)


class SymmetricIntMatrix:
    """Immutable exact integer symmetric matrix."""

    def __init__(self, rows):
        entries = as_int_array(rows) if not isinstance(rows, SymmetricIntMatrix) else rows.entries
        if entries.shape[0] != entries.shape[1]:
            raise ChainmailError(f"matrix is not square: shape {entries.shape}")
        if not np.array_equal(entries, entries.T):
            raise ChainmailError("matrix is not symmetric")
        entries = entries.copy()
        entries.setflags(write=False)
        self.entries = entries

    @property
    def n(self):
        return self.entries.shape[0]

    def rows(self):
        return tuple(tuple(int(x) for x in row) for row in self.entries)

    def diagonal(self):
        return tuple(int(self.entries[i, i]) for i in range(self.n))

    def principal_submatrix(self, indices):
        indices = list(indices)
        return SymmetricIntMatrix(self.entries[np.ix_(indices, indices)] if indices else np.zeros((0, 0), dtype=object))

    def direct_sum(self, other):
        n, m = self.n, other.n
        out = np.zeros((n + m, n + m), dtype=object)
        out[:n, :n] = self.entries
        out[n:, n:] = other.entries
        return SymmetricIntMatrix(out)

    def congruent(self, U):
        U = as_int_array(U)
        return SymmetricIntMatrix(U.T.dot(self.entries).dot(U))

    def quadratic_form(self, x):
        x = np.array(x, dtype=object)
        if self.n == 0:
            return 0
        return int(x.dot(self.entries).dot(x))

    def __neg__(self):
        return SymmetricIntMatrix(-self.entries)

    def __eq__(self, other):
        return isinstance(other, SymmetricIntMatrix) and self.rows() == other.rows()

    def __hash__(self):
        return hash(self.rows())

    def __repr__(self):
        return f"SymmetricIntMatrix({format_matrix(self.rows())})"

    def __str__(self):
        return format_matrix(self.rows())


def determinant(M):
    arr = as_int_array(M)
    n = arr.shape[0]
    if arr.shape[1] != n:
        raise ChainmailError("determinant of a non-square matrix")
    if n == 0:
        return 1
    dM = DomainMatrix([[ZZ(int(x)) for x in row] for row in arr], (n, n), ZZ)
    return int(dM.det())


def signature(M):
    """
    Number of positive minus number of negative eigenvalues, computed by
    congruence diagonalisation over the rationals. Nonzero diagonal pivots are
    taken in declaration order; when the remaining block has a zero diagonal a
    hyperbolic 2x2 block [[0, a], [a, 0]] is split off, contributing 0.
    """
    A = [[QQ(int(x)) for x in row] for row in as_int_array(M)]
    sig = 0
    while A:
        n = len(A)
        i = next((k for k in range(n) if A[k][k] != 0), None)
        if i is not None:
            p = A[i][i]
            sig += 1 if p > 0 else -1
            rest = [k for k in range(n) if k != i]
            A = [[A[r][c] - A[r][i] * A[i][c] / p for c in rest] for r in rest]
            continue
        pair = next(((r, c) for r in range(n) for c in range(r + 1, n) if A[r][c] != 0), None)
        if pair is None:
            break
        i, j = pair
        a = A[i][j]
        logger.debug("signature: hyperbolic block at (%d, %d)", i, j)
        rest = [k for k in range(n) if k not in (i, j)]
        A = [[A[r][c] - (A[r][i] * A[j][c] + A[r][j] * A[i][c]) / a for c in rest] for r in rest]
    return sig


def _divisibility_chain(diagonal):
    d = list(diagonal)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = math.gcd(d[i], d[j])
            d[i], d[j] = g, (d[i] * d[j] // g if g else 0)
    return tuple(d)


def smith_normal_form(M, ncols=None):
    """
    Invariant factors d_1 | d_2 | ... of an integer matrix, one per column;
    zeros (free summands) come last.
    """
    arr = as_int_array(M)
    m = arr.shape[0]
    if ncols is None:
        ncols = arr.shape[1] if arr.ndim == 2 else 0
    if m == 0 or ncols == 0 or not any(int(x) != 0 for x in arr.flat):
        return SnfDiagonal((0,) * ncols)
    D = _sympy_smith_normal_form(Matrix([[int(x) for x in row] for row in arr]), domain=ZZ)
    diagonal = [abs(int(D[i, i])) for i in range(min(m, ncols))]
    diagonal += [0] * (ncols - len(diagonal))
    return SnfDiagonal(_divisibility_chain(diagonal))


def group_order(snf):
    if any(d == 0 for d in snf.factors):
        return 0
    return math.prod(snf.factors)


def format_group(snf):
    free = sum(1 for d in snf.factors if d == 0)
    parts = []
    if free:
        parts.append("Z" if free == 1 else f"Z^{free}")
    parts += [f"Z/{d}" for d in snf.factors if d > 1]
    return " + ".join(parts) if parts else "0"


def _to_gf2(arr):
    return np.array([[int(x) % 2 for x in row] for row in arr], dtype=np.uint8).reshape(arr.shape)


def _gf2_row_reduce(mat):
    """Reduced row echelon form over GF(2); returns (matrix, pivot columns)."""
    mat = mat.copy()
    m, n = mat.shape
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        pivot = next((r for r in range(row, m) if mat[r, col] == 1), None)
        if pivot is None:
            continue
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
        for r in range(m):
            if r != row and mat[r, col] == 1:
                mat[r, :] ^= mat[row, :]
        pivots.append(col)
        row += 1
    return mat, pivots


def rank_gf2(M):
    arr = as_int_array(M)
    if arr.size == 0:
        return 0
    return len(_gf2_row_reduce(_to_gf2(arr))[1])


def corank_gf2(M):
    return as_int_array(M).shape[1] - rank_gf2(M)


def solve_affine_gf2(M, b):
    """
    All solutions of M x = b over GF(2), as a particular solution plus a kernel
    basis. The particular solution sets every free variable to 0; the kernel
    basis has one vector per free column, in column order. `particular` is
    None when the system is inconsistent.
    """
    arr = as_int_array(M)
    m = arr.shape[0]
    n = arr.shape[1] if arr.ndim == 2 else 0
    b = [int(x) % 2 for x in b]
    if len(b) != m:
        raise ChainmailError(f"right-hand side has length {len(b)}, expected {m}")
    if n == 0:
        return Gf2AffineSolutionSet(() if not any(b) else None, ())

    augmented = np.concatenate([_to_gf2(arr), np.array(b, dtype=np.uint8).reshape(-1, 1)], axis=1)
    reduced, pivots = _gf2_row_reduce(augmented)
    if n in pivots:
        return Gf2AffineSolutionSet(None, ())

    pivot_rows = dict(enumerate(pivots))
    particular = np.zeros(n, dtype=np.uint8)
    for r, col in pivot_rows.items():
        particular[col] = reduced[r, n]

    free_cols = [c for c in range(n) if c not in pivots]
    kernel = []
    for free in free_cols:
        vec = np.zeros(n, dtype=np.uint8)
        vec[free] = 1
        for r, col in pivot_rows.items():
            if reduced[r, free] == 1:
                vec[col] = 1
        kernel.append(tuple(int(x) for x in vec))

    logger.debug("GF(2) solve: rank %d, kernel dimension %d", len(pivots), len(kernel))
    return Gf2AffineSolutionSet(tuple(int(x) for x in particular), tuple(kernel))


def enumerate_gf2_solutions(solutions):
    """Particular solution first, then Gray-code order over the kernel basis."""
    if solutions.particular is None:
        return
    current = np.array(solutions.particular, dtype=np.uint8)
    yield tuple(int(x) for x in current)
    basis = [np.array(v, dtype=np.uint8) for v in solutions.kernel_basis]
    for flip in gray_code_flips(len(basis)):
        current = current ^ basis[flip]
        yield tuple(int(x) for x in current)
