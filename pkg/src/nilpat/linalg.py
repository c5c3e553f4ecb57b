"""Exact characteristic polynomials, adjugates, determinants and indices."""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import NonSquare, SingularMatrix, DimMismatch
from .matrix import RatMatrix, mat_mul
from .poly import PolyMatrix, UniPoly


def _square(A):
    if not A.is_square:
        raise NonSquare(f"expected a square matrix, got {A.rows}x{A.cols}")
    return A.rows


def faddeev_leverrier(A):
    """Run the Faddeev-LeVerrier recurrence on ``A``.

    Returns ``(coeffs, aux)`` where ``coeffs = [1, c1, ..., cn]`` gives
    ``det(xI - A) = x^n + c1 x^(n-1) + ... + cn`` and ``aux = [M0, ..., M(n-1)]``
    satisfies ``adj(xI - A) = sum_t M_t x^(n-1-t)``.

    Recurrence: ``M0 = I``; ``c_k = -tr(A M_(k-1)) / k``;
    ``M_k = A M_(k-1) + c_k I``.
    """
    n = _square(A)
    eye = RatMatrix.identity(n)
    coeffs = [Fraction(1)]
    aux = [eye]
    M = eye
    for k in range(1, n + 1):
        AM = mat_mul(A, M)
        c = -AM.trace() / k
        coeffs.append(c)
        if k < n:
            M = AM + eye.scale(c)
            aux.append(M)
        # at k == n, AM + c I is the zero matrix (Cayley-Hamilton)
    return coeffs, aux


def char_poly(A):
    """``det(xI - A)`` as a monic :class:`UniPoly`."""
    coeffs, _ = faddeev_leverrier(A)
    return UniPoly(reversed(coeffs))


def adjugate_xI_minus(A):
    """``adj(xI - A)`` as a :class:`PolyMatrix`; entries have degree <= n-1."""
    _, aux = faddeev_leverrier(A)
    # aux[t] multiplies x^(n-1-t); from_coefficients wants low degree first
    return PolyMatrix.from_coefficients(aux[::-1])


def char_poly_and_adjugate(A):
    coeffs, aux = faddeev_leverrier(A)
    return UniPoly(reversed(coeffs)), PolyMatrix.from_coefficients(aux[::-1])


@dataclass(frozen=True)
class IndexResult:
    """Outcome of the nilpotency test.

    ``witness_power`` is ``A^(index-1)`` when nilpotent (the last nonzero
    power; the identity when ``A == 0``) and ``A^n`` otherwise.
    """

    nilpotent: bool
    index: int | None
    witness_power: RatMatrix
    order: int

    @property
    def full_index(self):
        return self.nilpotent and self.index == self.order


def nilpotent_index(A):
    """Index of nilpotency of ``A`` from its powers ``A, A^2, ..., A^n``.

    No power above ``n`` is formed: by Cayley-Hamilton a nilpotent matrix of
    order ``n`` already satisfies ``A^n = 0``.
    """
    n = _square(A)
    prev = RatMatrix.identity(n)
    P = A
    for t in range(1, n + 1):
        if P.is_zero():
            return IndexResult(True, t, prev, n)
        if t < n:
            prev, P = P, mat_mul(P, A)
    return IndexResult(False, None, P, n)


def det(A):
    """Exact determinant by fraction-free (Bareiss) elimination.

    Rows are first scaled to integers; every division in the elimination is
    then exact integer division.
    """
    n = _square(A)
    scale = Fraction(1)
    grid = []
    for row in A:
        d = lcm(*(x.denominator for x in row))
        scale *= d
        grid.append([int(x * d) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if grid[k][k] == 0:
            for r in range(k + 1, n):
                if grid[r][k]:
                    grid[k], grid[r] = grid[r], grid[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = grid[k][k]
        rk = grid[k]
        for i in range(k + 1, n):
            ri = grid[i]
            a = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - a * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return Fraction(sign * grid[n - 1][n - 1]) / scale


def _echelon(grid, ncols):
    """In-place Gauss-Jordan on a list-of-lists of Fractions; returns pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(grid)) if grid[i][c]), None)
        if p is None:
            continue
        grid[r], grid[p] = grid[p], grid[r]
        inv = 1 / grid[r][c]
        grid[r] = [x * inv for x in grid[r]]
        for i in range(len(grid)):
            if i != r and grid[i][c]:
                f = grid[i][c]
                grid[i] = [x - f * y for x, y in zip(grid[i], grid[r])]
        pivots.append(c)
        r += 1
        if r == len(grid):
            break
    return pivots


def rank(A):
    return len(_echelon([list(r) for r in A], A.cols))


def solve(A, b):
    """Solve ``A x = b`` exactly for square nonsingular ``A``; ``b`` is a sequence."""
    n = _square(A)
    b = list(b)
    if len(b) != n:
        raise DimMismatch("right-hand side length differs from matrix order")
    grid = [list(r) + [Fraction(v)] for r, v in zip(A, b)]
    pivots = _echelon(grid, n)
    if len(pivots) < n:
        raise SingularMatrix("system matrix is singular")
    return [grid[i][n] for i in range(n)]
