"""Dense matrices over GF(q) as numpy int arrays of field elements.

Row vectors act on the right: v -> v M.  Everything is exact table
arithmetic; matrices are tiny (n <= 8) so clarity wins over speed, except
for the bulk ``act_rows`` used to build permutation actions.
"""
from __future__ import annotations

import numpy as np

from ..errors import SingularMatrix
from . import poly as P
from .field import GF, ExtField


def identity(F: GF, n):
    return np.eye(n, dtype=np.int64)


def as_matrix(rows):
    return np.asarray(rows, dtype=np.int64)


def key(M):
    """Hashable form of a matrix."""
    return M.tobytes()


def act_rows(F: GF, V, M):
    """Rows of V times M, for a whole batch of row vectors at once."""
    V = np.asarray(V, dtype=np.int64)
    n = M.shape[0]
    out = np.zeros((V.shape[0], M.shape[1]), dtype=np.int64)
    for i in range(n):
        out = F.add[out, F.mul[V[:, i][:, None], M[i][None, :]]]
    return out


def mat_mul(F: GF, A, B):
    return act_rows(F, A, B)


def mat_add(F: GF, A, B):
    return F.add[A, B]


def mat_sub(F: GF, A, B):
    return F.sub[A, B]


def scalar_mul(F: GF, c, A):
    return F.mul[c, A]


def mat_pow(F: GF, A, e):
    R = identity(F, A.shape[0])
    while e:
        if e & 1:
            R = mat_mul(F, R, A)
        A = mat_mul(F, A, A)
        e >>= 1
    return R


def _rref(F: GF, A):
    """Row echelon reduction; returns (reduced matrix, pivot columns)."""
    A = np.array(A, dtype=np.int64, copy=True)
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = F.mul[int(F.inv[A[r, c]]), A[r]]
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] = F.sub[A[i], F.mul[int(A[i, c]), A[r]]]
        pivots.append(c)
        r += 1
    return A, pivots


def rref(F: GF, A):
    R, piv = _rref(F, A)
    return R[:len(piv)], piv


def rank(F: GF, A):
    return len(_rref(F, A)[1])


def kernel_dim(F: GF, A):
    """Dimension of the left null space {v : v A = 0} (= right, for square A)."""
    return A.shape[0] - rank(F, A)


def det(F: GF, A):
    A = np.array(A, dtype=np.int64, copy=True)
    n = A.shape[0]
    d = 1
    for c in range(n):
        nz = np.nonzero(A[c:, c])[0]
        if nz.size == 0:
            return 0
        piv = c + int(nz[0])
        if piv != c:
            A[[c, piv]] = A[[piv, c]]
            d = int(F.neg[d])
        d = int(F.mul[d, A[c, c]])
        inv = int(F.inv[A[c, c]])
        for i in range(c + 1, n):
            if A[i, c]:
                A[i] = F.sub[A[i], F.mul[int(F.mul[A[i, c], inv]), A[c]]]
    return d


def mat_inv(F: GF, A):
    n = A.shape[0]
    aug = np.concatenate([A, identity(F, n)], axis=1)
    R, piv = _rref(F, aug)
    if piv[:n] != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return R[:, n:]


def is_invertible(F: GF, A):
    return rank(F, A) == A.shape[0]


# characteristic polynomial and eigenspaces --------------------------------

def charpoly(F: GF, A):
    """det(tI - A) via the division-free Berkowitz algorithm (low degree first)."""
    A = [[int(x) for x in row] for row in A]
    n = len(A)
    vec = [1]  # coefficients high degree first, of the running polynomial
    add, mul, neg = F.add, F.mul, F.neg
    for r in range(n):
        # Toeplitz column built from the leading r x r block
        a = A[r][r]
        R = A[r][:r]            # row r, columns < r
        C = [A[i][r] for i in range(r)]   # column r, rows < r
        M = [row[:r] for row in A[:r]]
        col = [1, int(neg[a])]
        v = C
        for _ in range(r):
            s = 0
            for x, y in zip(R, v):
                s = int(add[s, mul[x, y]])
            col.append(int(neg[s]))
            v = [_dot(F, M[i], v) for i in range(r)]
        # multiply the Toeplitz matrix T (size (r+2) x (r+1)) by vec
        new = []
        for i in range(r + 2):
            s = 0
            for j in range(len(vec)):
                k = i - j
                if 0 <= k < len(col):
                    s = int(add[s, mul[col[k], vec[j]]])
            new.append(s)
        vec = new
    return P.trim(list(reversed(vec)))


def _dot(F, row, v):
    s = 0
    for x, y in zip(row, v):
        s = int(F.add[s, F.mul[x, y]])
    return s


def _generic_rank(K, rows):
    rows = [list(r) for r in rows]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if not K.is_zero(rows[i][c])), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = K.inv(rows[r][c])
        rows[r] = [K.mul(inv, x) for x in rows[r]]
        for i in range(n_rows):
            if i != r and not K.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [K.sub(x, K.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == n_rows:
            break
    return r


def eigenspace_dim(F: GF, A, f):
    """Dimension of the eigenspace of a root of the irreducible f, computed
    over GF(q)[t]/(f) by elimination on A - tI."""
    f = P.monic(F, f)
    K = ExtField(F, f)
    lam = K.gen()
    n = A.shape[0]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            e = K.embed(A[i, j])
            if i == j:
                e = K.sub(e, lam)
            row.append(e)
        rows.append(row)
    return n - _generic_rank(K, rows)


def eigenspace_dim_via_kernel(F: GF, A, f):
    """Same quantity by a second route: dim_GF(q) ker f(A) / deg f."""
    n = A.shape[0]
    acc = np.zeros((n, n), dtype=np.int64)
    for c in reversed(P.monic(F, f)):          # Horner in A
        acc = mat_mul(F, acc, A)
        acc = F.add[acc, F.mul[c, identity(F, n)]]
    dim = kernel_dim(F, acc)
    d = len(f) - 1
    if dim % d:
        raise AssertionError("kernel of f(A) must split into equal Galois pieces")
    return dim // d


def eigen_data(F: GF, A):
    """List of (irreducible factor of the characteristic polynomial, eigenspace dim)."""
    return [(f, eigenspace_dim(F, A, f)) for f in P.irreducible_factors(F, charpoly(F, A))]


def nu(F: GF, A, projective=True):
    """Codimension of the largest eigenspace over the algebraic closure.

    With ``projective`` the minimum is also taken over all nonzero scalar
    multiples of A (the value on the image in PGL); eigenspace dimensions are
    unchanged by scaling, which the property tests confirm.
    """
    if not is_invertible(F, A):
        raise SingularMatrix("nu is defined for invertible matrices")
    n = A.shape[0]

    def one(M):
        return n - max(d for _, d in eigen_data(F, M))

    if not projective:
        return one(A)
    return min(one(F.mul[c, A]) for c in range(1, F.q))


def fixed_space_dim(F: GF, A):
    """dim ker(A - I): the number d with q^d fixed vectors."""
    return kernel_dim(F, F.sub[A, identity(F, A.shape[0])])
