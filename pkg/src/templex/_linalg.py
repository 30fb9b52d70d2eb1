"""Exact linear algebra: integer lattices via normal forms, and GF(p).

The integer routines wrap sympy's Smith/Hermite normal forms and speak
sympy ``Matrix``; callers convert to and from plain tuples at the
boundary.  The GF(p) routines are a small hand-rolled Gaussian
elimination over ``list[list[int]]`` with entries reduced mod p, since
shapes here are tiny and explicit pivoting keeps everything deterministic.
"""

from __future__ import annotations

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import hermite_normal_form, smith_normal_decomp


# -- integers ----------------------------------------------------------------


def snf(A: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Smith decomposition (S, U, V) with S = U A V, U and V unimodular.

    The diagonal of S is a divisibility chain d_1 | d_2 | ...
    """
    S, U, V = smith_normal_decomp(A, ZZ)
    diag = [abs(S[i, i]) for i in range(min(S.shape)) if S[i, i] != 0]
    for a, b in zip(diag, diag[1:]):
        if b % a:
            raise ArithmeticError(f"Smith diagonal {diag} is not a divisor chain")
    return S, U, V


def int_kernel(A: Matrix) -> Matrix:
    """A basis (as columns) of the integer kernel {x : A x = 0}.

    >>> int_kernel(Matrix([[2, -1]])).shape
    (2, 1)
    """
    m, n = A.shape
    S, _, V = snf(A)
    free = [j for j in range(n) if j >= min(m, n) or S[j, j] == 0]
    return V[:, free]


def int_solve(A: Matrix, b: Matrix) -> Matrix | None:
    """One integer solution x of A x = b, or None when none exists.

    >>> int_solve(Matrix([[2, 0], [0, 3]]), Matrix([4, 9]))
    Matrix([
    [2],
    [3]])
    """
    m, n = A.shape
    S, U, V = snf(A)
    c = U @ b
    y = [0] * n
    for i in range(m):
        s = S[i, i] if i < min(m, n) else 0
        if s != 0:
            if c[i] % s:
                return None
            y[i] = c[i] // s
        elif c[i] != 0:
            return None
    return V @ Matrix(n, 1, y) if n else Matrix(n, 1, [])


def int_solve_mod(A: Matrix, b: Matrix, moduli: list[int]) -> Matrix | None:
    """One solution of the congruence system A x = b (mod moduli).

    Row i is an equation over Z when moduli[i] == 0, a congruence mod
    moduli[i] > 0 otherwise.

    >>> int_solve_mod(Matrix([[2]]), Matrix([1]), [0]) is None
    True
    >>> x = int_solve_mod(Matrix([[2]]), Matrix([1]), [3])
    >>> (2 * x[0]) % 3
    1
    """
    m, n = A.shape
    if len(moduli) != m:
        raise ValueError("one modulus per row required")
    slack = [i for i in range(m) if moduli[i] > 0]
    D = Matrix.zeros(m, len(slack))
    for col, i in enumerate(slack):
        D[i, col] = moduli[i]
    x = int_solve(A.row_join(D), b)
    if x is None:
        return None
    return x[:n, :] if n else Matrix(0, 1, [])


def lattice_basis(G: Matrix) -> Matrix:
    """A basis (as columns) of the lattice generated by the columns of G."""
    if G.rows == 0:
        return Matrix(0, 0, [])
    return hermite_normal_form(G)


# -- GF(p) -------------------------------------------------------------------


def p_rref(rows: list[list[int]], ncols: int, p: int) -> tuple[list[list[int]], list[int]]:
    """Row-reduce a matrix mod p; returns (reduced rows, pivot columns)."""
    R = [[x % p for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(R)) if R[i][c]), None)
        if pivot is None:
            continue
        R[r], R[pivot] = R[pivot], R[r]
        inv = pow(R[r][c], -1, p)
        R[r] = [(x * inv) % p for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c]:
                factor = R[i][c]
                R[i] = [(x - factor * y) % p for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R[:r], pivots


def p_rank(rows: list[list[int]], ncols: int, p: int) -> int:
    return len(p_rref(rows, ncols, p)[1])


def p_kernel(rows: list[list[int]], ncols: int, p: int) -> list[list[int]]:
    """A basis (as columns, returned as lists) of the kernel mod p."""
    R, pivots = p_rref(rows, ncols, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-R[r][f]) % p
        basis.append(v)
    return basis


def p_solve_many(
    rows: list[list[int]], rhs: list[list[int]], ncols: int, p: int
) -> list[list[int]] | None:
    """Solve A X = B mod p columnwise; B given as rows, X returned as rows.

    Returns None when some column is unsolvable.  Free variables are 0.
    """
    nrhs = len(rhs[0]) if rhs else 0
    aug = [list(row) + list(b) for row, b in zip(rows, rhs)]
    R, pivots = p_rref(aug, ncols + nrhs, p)
    if any(c >= ncols for c in pivots):
        return None
    X = [[0] * nrhs for _ in range(ncols)]
    for r, c in enumerate(pivots):
        for k in range(nrhs):
            X[c][k] = R[r][ncols + k]
    return X


def p_inv(rows: list[list[int]], p: int) -> list[list[int]] | None:
    """The inverse of a square matrix mod p, or None if singular."""
    n = len(rows)
    eye = [[int(i == j) for j in range(n)] for i in range(n)]
    X = p_solve_many(rows, eye, n, p)
    if X is None or len(p_rref(rows, n, p)[1]) < n:
        return None
    return X
