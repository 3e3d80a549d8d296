"""Column Hermite and Smith normal forms with unimodular witnesses,
plus the exact linear-algebra routines built on them.

All elimination happens on mutable row-lists with the witness matrices
updated by the same elementary operations, so the defining identities
(M*U = H and Q*M*V = S) hold exactly at every step.  Every 2x2
combination block used has determinant one, hence witnesses are always
unimodular by construction.

Conventions for the column Hermite form H of an n x m matrix:
  * zero columns come last;
  * the pivot of a nonzero column is its lowest nonzero entry;
  * pivot rows strictly increase from left to right;
  * pivots are canonical associates (positive / monic);
  * entries to the right of a pivot in its row are reduced modulo it.

Smith form invariant factors are canonical associates forming a
divisibility chain; they match the quotients of gcds of k x k minors,
which the test suite checks against an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NoSolutionError, SingularMatrixError, HypothesisError
from .matrices import ExactMatrix
from .rings import FractionField


@dataclass(frozen=True)
class SmithDecomposition:
    """Q*M*V = S with Q, V unimodular and S = diag(invariant factors)."""

    Q: ExactMatrix
    S: ExactMatrix
    V: ExactMatrix
    invariant_factors: tuple

    @property
    def rank(self):
        return len(self.invariant_factors)


@dataclass(frozen=True)
class McMillanForm:
    """Diagonal reduction of a nonsingular matrix T over the fraction
    field: T = V1^-1 * diag(betas[i]/alphas[i]) * V2 with V1, V2
    unimodular over the base ring, alphas a descending and betas an
    ascending divisibility chain, and alphas[i] coprime to betas[i]."""

    alphas: tuple
    betas: tuple
    V1: ExactMatrix
    V2: ExactMatrix


# ---------------------------------------------------------------------------
# in-place elementary operations
#
# Each helper applies the same operation to every matrix in `mats`, so a
# worked matrix and its witness stay synchronized.


def _swap_rows(mats, i1, i2):
    for m in mats:
        m[i1], m[i2] = m[i2], m[i1]


def _swap_cols(mats, j1, j2):
    for m in mats:
        for row in m:
            row[j1], row[j2] = row[j2], row[j1]


def _scale_row(ring, mats, i, u):
    for m in mats:
        m[i] = [ring.mul(u, x) for x in m[i]]


def _scale_col(ring, mats, j, u):
    for m in mats:
        for row in m:
            row[j] = ring.mul(u, row[j])


def _add_row_multiple(ring, mats, dst, src, c):
    zero = ring.is_zero
    for m in mats:
        m[dst] = [
            x if zero(y) else ring.add(x, ring.mul(c, y))
            for x, y in zip(m[dst], m[src])
        ]


def _add_col_multiple(ring, mats, dst, src, c):
    zero = ring.is_zero
    for m in mats:
        for row in m:
            y = row[src]
            if not zero(y):
                row[dst] = ring.add(row[dst], ring.mul(c, y))


def _shrink_col(ring, work, mats, j):
    # unit rescaling to keep entry representations small (no-op over
    # the integers); applied to every synchronized matrix, so witness
    # identities and unimodularity are preserved
    u = ring.shrink_unit(row[j] for row in work)
    if u is not None:
        _scale_col(ring, mats, j, u)


def _shrink_row(ring, work, mats, i):
    u = ring.shrink_unit(work[i])
    if u is not None:
        _scale_row(ring, mats, i, u)


def _col_gcd_step(ring, work, mats, i, jc, jk):
    """Unimodular 2-column operation leaving gcd(work[i][jc], work[i][jk])
    at (i, jc) and zero at (i, jk).

    Runs Euclid's algorithm on the two columns: every update subtracts a
    single quotient multiple, so only small quotients ever multiply a
    column.  Bezout cofactors (whose coefficients are determinant-sized
    over polynomial rings) never touch the matrix.  The value left at
    (i, jc) is an associate of the gcd; callers normalize pivots later.
    """
    a, b = work[i][jc], work[i][jk]
    if ring.is_zero(b):
        return
    if not ring.is_zero(a) and ring.divides(a, b):
        _add_col_multiple(ring, mats, jk, jc, ring.neg(ring.exact_div(b, a)))
        _shrink_col(ring, work, mats, jk)
        return
    while True:
        a, b = work[i][jc], work[i][jk]
        if ring.is_zero(b):
            break
        if not ring.is_zero(a):
            q, _ = ring.divmod(a, b)
            if not ring.is_zero(q):
                # rescaling by the quotient's denominator keeps the
                # column update fraction-free (u*col - (u*q)*col')
                u = ring.shrink_unit((q,))
                if u is not None:
                    _scale_col(ring, mats, jc, u)
                    q = ring.mul(u, q)
                _add_col_multiple(ring, mats, jc, jk, ring.neg(q))
                _shrink_col(ring, work, mats, jc)
        _swap_cols(mats, jc, jk)


def _row_gcd_step(ring, work, mats, j, ic, ik):
    """Row counterpart of _col_gcd_step acting on column j."""
    a, b = work[ic][j], work[ik][j]
    if ring.is_zero(b):
        return
    if not ring.is_zero(a) and ring.divides(a, b):
        _add_row_multiple(ring, mats, ik, ic, ring.neg(ring.exact_div(b, a)))
        _shrink_row(ring, work, mats, ik)
        return
    while True:
        a, b = work[ic][j], work[ik][j]
        if ring.is_zero(b):
            break
        if not ring.is_zero(a):
            q, _ = ring.divmod(a, b)
            if not ring.is_zero(q):
                u = ring.shrink_unit((q,))
                if u is not None:
                    _scale_row(ring, mats, ic, u)
                    q = ring.mul(u, q)
                _add_row_multiple(ring, mats, ic, ik, ring.neg(q))
                _shrink_row(ring, work, mats, ic)
        _swap_rows(mats, ic, ik)


# ---------------------------------------------------------------------------
# Hermite normal form


# Matrices are immutable and hashable, so the two workhorse reductions are
# memoized: module-level code repeatedly re-reduces the same basis matrix
# (membership tests, closure, purity checks).
@lru_cache(maxsize=512)
def hnf(M: ExactMatrix):
    """Column Hermite normal form.

    Returns (H, U) with U unimodular m x m and M @ U = H in the column
    echelon shape described in the module docstring.
    """
    ring = M.ring
    n, m = M.rows, M.cols
    A = M.to_lists()
    U = ExactMatrix.identity(ring, m).to_lists()
    cols = [A, U]
    c = m - 1
    for i in range(n - 1, -1, -1):
        if c < 0:
            break
        for k in range(c):
            if not ring.is_zero(A[i][k]):
                _col_gcd_step(ring, A, cols, i, c, k)
        if ring.is_zero(A[i][c]):
            continue
        u, _ = ring.normalize_unit(A[i][c])
        if u != ring.one:
            _scale_col(ring, cols, c, ring.unit_inverse(u))
        for k in range(c + 1, m):
            q, _ = ring.divmod(A[i][k], A[i][c])
            if not ring.is_zero(q):
                _add_col_multiple(ring, cols, k, c, ring.neg(q))
        c -= 1
    nz = c + 1  # columns 0..c never received a pivot and are zero
    if 0 < nz < m:
        order = list(range(nz, m)) + list(range(nz))
        for mat in cols:
            for row in mat:
                row[:] = [row[j] for j in order]
    H = ExactMatrix(ring, n, m, A)
    return H, ExactMatrix(ring, m, m, U)


def hnf_pivots(H: ExactMatrix):
    """Pivot positions [(row, col), ...] of a matrix already in column
    Hermite form; the pivot of a column is its lowest nonzero entry."""
    ring = H.ring
    pivots = []
    for j in range(H.cols):
        prow = None
        for i in range(H.rows - 1, -1, -1):
            if not ring.is_zero(H[i, j]):
                prow = i
                break
        if prow is None:
            break
        pivots.append((prow, j))
    return pivots


def rank(M: ExactMatrix) -> int:
    return len(hnf_pivots(hnf(M)[0]))


# ---------------------------------------------------------------------------
# Smith normal form


def _find_pivot(ring, A, k, n, m):
    best = None
    where = None
    for i in range(k, n):
        for j in range(k, m):
            e = A[i][j]
            if not ring.is_zero(e):
                s = ring.pivot_size(e)
                if best is None or s < best:
                    best, where = s, (i, j)
    return where


def _clear_pivot(ring, A, rows_mats, cols_mats, k, n, m):
    """Zero out row k and column k past the diagonal, leaving the gcd of
    the affected entries at (k, k)."""
    guard = 0
    while True:
        guard += 1
        if guard > 10000:
            raise AssertionError("pivot clearing did not converge")
        for i in range(k + 1, n):
            if not ring.is_zero(A[i][k]):
                _row_gcd_step(ring, A, rows_mats, k, k, i)
        col_clean = True
        for j in range(k + 1, m):
            if not ring.is_zero(A[k][j]):
                _col_gcd_step(ring, A, cols_mats, k, k, j)
                col_clean = False
        if col_clean:
            return
        # column operations may have refilled column k; re-check
        if all(ring.is_zero(A[i][k]) for i in range(k + 1, n)):
            return


@lru_cache(maxsize=512)
def snf(M: ExactMatrix) -> SmithDecomposition:
    """Smith normal form with witnesses: Q @ M @ V = S."""
    ring = M.ring
    n, m = M.rows, M.cols
    A = M.to_lists()
    Q = ExactMatrix.identity(ring, n).to_lists()
    V = ExactMatrix.identity(ring, m).to_lists()
    rows_mats = [A, Q]
    cols_mats = [A, V]

    r = 0
    for k in range(min(n, m)):
        where = _find_pivot(ring, A, k, n, m)
        if where is None:
            break
        if where[0] != k:
            _swap_rows(rows_mats, k, where[0])
        if where[1] != k:
            _swap_cols(cols_mats, k, where[1])
        _clear_pivot(ring, A, rows_mats, cols_mats, k, n, m)
        r += 1

    # repair the divisibility chain d_k | d_{k+1}
    guard = 0
    while True:
        guard += 1
        if guard > 10000:
            raise AssertionError("divisibility repair did not converge")
        stable = True
        for i in range(r - 1):
            if not ring.divides(A[i][i], A[i + 1][i + 1]):
                _add_row_multiple(ring, rows_mats, i, i + 1, ring.one)
                _clear_pivot(ring, A, rows_mats, cols_mats, i, n, m)
                stable = False
        if stable:
            break

    for i in range(r):
        u, d = ring.normalize_unit(A[i][i])
        if u != ring.one:
            _scale_row(ring, rows_mats, i, ring.unit_inverse(u))
            A[i][i] = d

    factors = tuple(A[i][i] for i in range(r))
    return SmithDecomposition(
        Q=ExactMatrix(ring, n, n, Q),
        S=ExactMatrix(ring, n, m, A),
        V=ExactMatrix(ring, m, m, V),
        invariant_factors=factors,
    )


# ---------------------------------------------------------------------------
# determinants and unimodularity


def determinant(M: ExactMatrix):
    """Fraction-free (Bareiss) determinant; exact in any integral domain."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    ring = M.ring
    n = M.rows
    if n == 0:
        return ring.one
    A = M.to_lists()
    negate = False
    prev = ring.one
    for k in range(n - 1):
        if ring.is_zero(A[k][k]):
            for i in range(k + 1, n):
                if not ring.is_zero(A[i][k]):
                    A[k], A[i] = A[i], A[k]
                    negate = not negate
                    break
            else:
                return ring.zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = ring.sub(
                    ring.mul(A[k][k], A[i][j]), ring.mul(A[i][k], A[k][j])
                )
                A[i][j] = ring.exact_div(num, prev)
            A[i][k] = ring.zero
        prev = A[k][k]
    det = A[n - 1][n - 1]
    return ring.neg(det) if negate else det


def is_unimodular(M: ExactMatrix) -> bool:
    if M.rows != M.cols:
        return False
    return M.ring.is_unit(determinant(M))


# ---------------------------------------------------------------------------
# kernels and exact solving


def kernel_basis(M: ExactMatrix) -> ExactMatrix:
    """Basis of {x : M x = 0} as columns; the span is pure because the
    basis consists of columns of a unimodular matrix."""
    H, U = hnf(M)
    r = len(hnf_pivots(H))
    return U.take_cols(range(r, M.cols))


def solve_exact(M: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    """Solve M @ X = B over the ring; raises NoSolutionError when any
    column of B is outside the column span of M."""
    if M.ring != B.ring:
        raise ValueError("ring mismatch in solve_exact")
    if M.rows != B.rows:
        raise ValueError("row mismatch in solve_exact")
    ring = M.ring
    H, U = hnf(M)
    pivots = hnf_pivots(H)
    r = len(pivots)
    cols_out = []
    for b_idx in range(B.cols):
        res = [B[i, b_idx] for i in range(B.rows)]
        x = [ring.zero] * M.cols
        # pivot rows strictly increase with the column index, and a pivot
        # has only zeros to its left in its row, so walking pivots from the
        # last one backwards forces each coefficient in turn
        for j in range(r - 1, -1, -1):
            prow, pcol = pivots[j]
            if ring.is_zero(res[prow]):
                continue
            try:
                coeff = ring.exact_div(res[prow], H[prow, pcol])
            except ValueError:
                raise NoSolutionError(
                    f"no solution over {ring.tag}: column {b_idx}"
                ) from None
            x[pcol] = coeff
            for i in range(prow + 1):
                res[i] = ring.sub(res[i], ring.mul(coeff, H[i, pcol]))
        if any(not ring.is_zero(v) for v in res):
            raise NoSolutionError(f"no solution over {ring.tag}: column {b_idx}")
        cols_out.append(x)
    X = ExactMatrix(ring, B.cols, M.cols, cols_out).transpose()
    return U @ X


def inverse_unimodular(M: ExactMatrix) -> ExactMatrix:
    if M.rows != M.cols:
        raise ValueError("only square matrices can be unimodular")
    try:
        return solve_exact(M, ExactMatrix.identity(M.ring, M.rows))
    except NoSolutionError:
        raise ValueError("matrix is not unimodular over the ring") from None


def complete_to_unimodular(X: ExactMatrix) -> ExactMatrix:
    """Columns C such that [X | C] is unimodular.

    Requires the columns of X to be independent and their span to be
    pure (a direct summand); raises HypothesisError otherwise.
    """
    n, m = X.rows, X.cols
    dec = snf(X)
    if dec.rank < m:
        raise HypothesisError("columns are not linearly independent")
    ring = X.ring
    if any(not ring.is_unit(f) for f in dec.invariant_factors):
        raise HypothesisError("span is not pure, cannot extend to a basis")
    # X = Q^-1 [[I],[0]] V^-1, so the trailing columns of Q^-1 complete it
    q_inv = inverse_unimodular(dec.Q)
    return q_inv.take_cols(range(m, n))


# ---------------------------------------------------------------------------
# fraction-field routines


def solve_in_field(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    """Solve A @ X = B for square nonsingular A over a field."""
    ring = A.ring
    if not hasattr(ring, "invert"):
        raise TypeError("solve_in_field needs a field of scalars")
    if A.rows != A.cols:
        raise ValueError("solve_in_field expects a square matrix")
    if A.rows != B.rows or A.ring != B.ring:
        raise ValueError("shape or ring mismatch in solve_in_field")
    n = A.rows
    W = A.to_lists()
    R = B.to_lists()
    for k in range(n):
        p = None
        for i in range(k, n):
            if not ring.is_zero(W[i][k]):
                p = i
                break
        if p is None:
            raise SingularMatrixError("matrix is singular")
        if p != k:
            W[k], W[p] = W[p], W[k]
            R[k], R[p] = R[p], R[k]
        inv = ring.invert(W[k][k])
        W[k] = [ring.mul(inv, x) for x in W[k]]
        R[k] = [ring.mul(inv, x) for x in R[k]]
        for i in range(n):
            if i != k and not ring.is_zero(W[i][k]):
                c = W[i][k]
                W[i] = [ring.sub(x, ring.mul(c, y)) for x, y in zip(W[i], W[k])]
                R[i] = [ring.sub(x, ring.mul(c, y)) for x, y in zip(R[i], R[k])]
    return ExactMatrix(ring, n, B.cols, R)


def smith_mcmillan(T: ExactMatrix) -> McMillanForm:
    """Diagonalize a square nonsingular matrix over the fraction field
    of a PID by unimodular matrices over the base ring.

    Clears denominators with d = lcm of all entry denominators, takes
    the Smith form of the resulting base-ring matrix N = d*T, and scales
    back: with s the invariant factors of N, alpha = d/gcd(s, d) and
    beta = s/gcd(s, d) give T = V1^-1 diag(beta/alpha) V2.
    """
    field = T.ring
    if not isinstance(field, FractionField):
        raise TypeError("smith_mcmillan expects a matrix over a fraction field")
    if T.rows != T.cols:
        raise ValueError("smith_mcmillan expects a square matrix")
    base = field.base
    d = base.one
    for row in T.entries:
        for e in row:
            d = base.lcm(d, e.den)
    N = T.map_entries(
        lambda e: base.mul(e.num, base.exact_div(d, e.den)), ring=base
    )
    dec = snf(N)
    if dec.rank < T.rows:
        raise SingularMatrixError("matrix is singular over the fraction field")
    alphas = []
    betas = []
    for s in dec.invariant_factors:
        g = base.gcd(s, d)
        alphas.append(base.exact_div(d, g))
        betas.append(base.exact_div(s, g))
    return McMillanForm(
        alphas=tuple(alphas),
        betas=tuple(betas),
        V1=dec.Q,
        V2=inverse_unimodular(dec.V),
    )


def left_coprime_factorization(T: ExactMatrix):
    """Write T = X1^-1 @ X2 with X1 = diag(alphas) @ V1 and
    X2 = diag(betas) @ V2 over the base ring; the diagonal chains are
    coprime position by position."""
    mc = smith_mcmillan(T)
    base = T.ring.base
    x1 = ExactMatrix.diagonal(base, mc.alphas) @ mc.V1
    x2 = ExactMatrix.diagonal(base, mc.betas) @ mc.V2
    return x1, x2
