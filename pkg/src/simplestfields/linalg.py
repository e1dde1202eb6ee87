"""Exact integer and rational matrix utilities.

Matrices are plain lists of row lists.  The Hermite normal form used
throughout is row-style and lower-triangular: output row i has its pivot
(positive) at column i for full-rank square lattices, entries below a pivot
are reduced into [0, pivot).  With this normalization the first row of an
order lattice is always den * (1, 0, ..., 0), and row i corresponds to a
basis polynomial of degree exactly i.
"""

from fractions import Fraction
from math import lcm

from ._kernels import hnf_rows


def mat_shape(m) -> tuple[int, int]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if any(len(r) != cols for r in m):
        raise ValueError("ragged matrix")
    return rows, cols


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    ra, ca = mat_shape(a)
    rb, cb = mat_shape(b)
    if ca != rb:
        raise ValueError("shape mismatch")
    return [[sum(a[i][k] * b[k][j] for k in range(ca)) for j in range(cb)] for i in range(ra)]


def hnf(m: list[list[int]]) -> list[list[int]]:
    """Hermite normal form of a full-row-rank integer matrix (row lattice basis)."""
    rows, cols = mat_shape(m)
    out = hnf_rows(m, cols)
    if len(out) != rows:
        raise ValueError("matrix is not of full row rank")
    return out


def hnf_lattice(rows: list[list[int]], cols: int) -> list[list[int]]:
    """HNF basis (nonzero rows only) of the lattice spanned by possibly redundant rows."""
    return hnf_rows(rows, cols)


def bareiss_det(m: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix by fraction-free elimination."""
    n, cols = mat_shape(m)
    if n != cols:
        raise ValueError("determinant of non-square matrix")
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def left_kernel_mod_p(m: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {y : y @ m == 0 (mod p)} for prime p, vectors with entries in [0, p)."""
    rows, cols = mat_shape(m)
    # augment with the identity to track row operations
    a = [[x % p for x in m[i]] + [1 if j == i else 0 for j in range(rows)] for i in range(rows)]
    width = cols + rows
    pivot_rows: list[int] = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if a[i][c]:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(a[i][j] - f * a[r][j]) % p for j in range(width)]
        pivot_rows.append(r)
        r += 1
    return [row[cols:] for row in a[r:]]


def rat_matrix_inverse(m: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse of a nonsingular rational matrix.

    Rows are scaled to integers, then a fraction-free Bareiss-Jordan
    (Montante) elimination runs on the augmented matrix: every intermediate
    entry stays integral and the single division by the determinant happens
    at the end.  Raises ValueError on singular input.
    """
    n, cols = mat_shape(m)
    if n != cols:
        raise ValueError("inverse of non-square matrix")
    scale = []
    aug = []
    for i, row in enumerate(m):
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        scale.append(den)
        aug.append([int(Fraction(x) * den) for x in row] + [1 if j == i else 0 for j in range(n)])
    width = 2 * n
    prev = 1
    for k in range(n):
        if aug[k][k] == 0:
            for i in range(k + 1, n):
                if aug[i][k]:
                    aug[k], aug[i] = aug[i], aug[k]
                    break
            else:
                raise ValueError("singular matrix")
        piv = aug[k][k]
        for i in range(n):
            if i == k:
                continue
            f = aug[i][k]
            for j in range(width):
                q, r = divmod(aug[i][j] * piv - f * aug[k][j], prev)
                if r:
                    raise ArithmeticError("non-exact division in fraction-free elimination")
                aug[i][j] = q
        prev = piv
    # after the elimination the left block is (final pivot) * I
    inv_scaled = [[Fraction(aug[i][n + j], aug[i][i]) for j in range(n)] for i in range(n)]
    # original = diag(1/scale) @ scaled, so inverse = inv(scaled) @ diag(scale)
    return [[inv_scaled[i][j] * scale[j] for j in range(n)] for i in range(n)]
