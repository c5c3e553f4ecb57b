"""The A_m and C_m constructions, stars, tridiagonals, and closed-form powers.

Pattern-level and matrix-level builders share one block-layout routine per
construction, so a matrix built from blocks always conforms to the pattern
built from the blocks' patterns.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadDiagonals, BadT, BlockOrderMismatch, MTooSmall, NotFullIndex
from .linalg import char_poly, nilpotent_index, solve
from .matrix import RatMatrix, mat_mul, to_rat
from .patterns import (
    Cell,
    Kind,
    Pattern,
    star_pattern,
    tridiagonal_pattern,
)
from .poly import UniPoly

__all__ = [
    "AmSpec",
    "CmSpec",
    "PowerClosedForm",
    "build_Am_pattern",
    "build_Am_matrix",
    "Am_power_closed_form",
    "build_Cm_pattern",
    "build_Cm_matrix",
    "Cm_power_closed_form",
    "star_pattern",
    "tridiagonal_pattern",
    "solve_star_nilpotent",
    "star_matrix",
    "T5P",
    "T5P_PERMUTATION",
]


def _grid(block):
    return [list(r) for r in (block.cells if isinstance(block, Pattern) else block)]


def _am_layout(blocks, zero, top, left_first, left_rest):
    """Assemble the A_m block layout over an arbitrary cell type.

    Row 1 carries ``top`` at the head of each block column, column 1 carries
    ``left_first`` beside block 1 and ``left_rest`` beside the others, and the
    blocks sit on the diagonal.
    """
    s = len(blocks[0])
    m = len(blocks)
    n = m * s + 1
    grid = [[zero] * n for _ in range(n)]
    for k, blk in enumerate(blocks):
        head = 1 + k * s
        grid[0][head] = top
        grid[head][0] = left_first if k == 0 else left_rest
        for i in range(s):
            for j in range(s):
                grid[head + i][head + j] = blk[i][j]
    return grid


def _cm_layout(m, block, zero, corner_top, corner_first, corner_rest):
    """Assemble the C_m block layout: ``block`` on the diagonal, a single
    corner entry in the (1,1) position of blocks in block row/column 1."""
    s = len(block)
    n = m * s
    grid = [[zero] * n for _ in range(n)]
    for k in range(m):
        off = k * s
        for i in range(s):
            for j in range(s):
                grid[off + i][off + j] = block[i][j]
        if k:
            grid[0][off] = corner_top
            grid[off][0] = corner_first if k == 1 else corner_rest
    return grid


def _check_square_blocks(blocks):
    s = blocks[0].order if isinstance(blocks[0], RatMatrix) else blocks[0].n
    for b in blocks:
        order = b.order if isinstance(b, RatMatrix) else b.n
        if order != s:
            raise BlockOrderMismatch(f"blocks have orders {s} and {order}")
    return s


@dataclass(frozen=True)
class AmSpec:
    m: int
    block: object  # RatMatrix or Pattern

    def __post_init__(self):
        if self.m < 2:
            raise MTooSmall(f"A_m needs m >= 2, got {self.m}")

    @property
    def s(self):
        return self.block.n if isinstance(self.block, Pattern) else self.block.order

    @property
    def n(self):
        return self.m * self.s + 1

    def build(self):
        if isinstance(self.block, Pattern):
            return build_Am_pattern(self.block, self.m)
        return build_Am_matrix([self.block] * self.m)


@dataclass(frozen=True)
class CmSpec:
    m: int
    block: object

    def __post_init__(self):
        if self.m < 3 and not isinstance(self.block, Pattern):
            raise MTooSmall(f"C_m matrices need m >= 3, got {self.m}")
        if self.m < 2:
            raise MTooSmall(f"C_m patterns need m >= 2, got {self.m}")

    @property
    def s(self):
        return self.block.n if isinstance(self.block, Pattern) else self.block.order

    @property
    def n(self):
        return self.m * self.s

    def build(self):
        if isinstance(self.block, Pattern):
            return build_Cm_pattern(self.block, self.m)
        return build_Cm_matrix(self.block, self.m)


def build_Am_pattern(N, m):
    """The pattern A_m(N) of order ``m*s + 1``.

    For a sign pattern the border follows the matrix realization: ``+`` on
    row 1, ``-`` beside the first block (``a = 1 - m < 0``), ``+`` elsewhere.
    """
    if m < 2:
        raise MTooSmall(f"A_m needs m >= 2, got {m}")
    blocks = [_grid(N)] * m
    if N.kind == Kind.SIGN:
        grid = _am_layout(blocks, Cell.ZERO, Cell.PLUS, Cell.MINUS, Cell.PLUS)
    else:
        grid = _am_layout(blocks, Cell.ZERO, Cell.STAR, Cell.STAR, Cell.STAR)
    return Pattern(tuple(map(tuple, grid)), N.kind)


def build_Am_matrix(blocks):
    """A_m(N_1, ..., N_m) for the given square blocks (``m = len(blocks)``).

    Pass ``[N] * m`` for the equal-block matrix A_m(N).
    """
    blocks = list(blocks)
    m = len(blocks)
    if m < 2:
        raise MTooSmall(f"A_m needs m >= 2 blocks, got {m}")
    _check_square_blocks(blocks)
    one = Fraction(1)
    grid = _am_layout([_grid(b) for b in blocks], Fraction(0), one, Fraction(1 - m), one)
    return RatMatrix(grid)


def build_Cm_pattern(N, m):
    """The pattern C_m(N) of order ``m*s``.  ``m = 2`` (double stars) is allowed
    for zero-nonzero patterns; sign patterns need ``m >= 3`` so the corner
    sign ``a = 2 - m`` is defined."""
    if N.kind == Kind.SIGN:
        if m < 3:
            raise MTooSmall(f"sign C_m patterns need m >= 3, got {m}")
        grid = _cm_layout(m, _grid(N), Cell.ZERO, Cell.PLUS, Cell.MINUS, Cell.PLUS)
    else:
        if m < 2:
            raise MTooSmall(f"C_m patterns need m >= 2, got {m}")
        grid = _cm_layout(m, _grid(N), Cell.ZERO, Cell.STAR, Cell.STAR, Cell.STAR)
    return Pattern(tuple(map(tuple, grid)), N.kind)


def build_Cm_matrix(N, m):
    if m < 3:
        raise MTooSmall(f"C_m matrices need m >= 3, got {m}")
    N.order  # raises on non-square input
    one = Fraction(1)
    return RatMatrix(_cm_layout(m, _grid(N), Fraction(0), one, Fraction(2 - m), one))


# -- closed-form powers -----------------------------------------------------

@dataclass(frozen=True)
class PowerClosedForm:
    """Blocks of a closed-form power together with the assembled matrix.

    For A_m: ``blocks`` holds ``W`` (W_t), ``B`` (B_t), ``f`` and ``g``.
    For C_m: ``W_next`` (W_(t+1)), ``K`` (K_t) and ``R`` (R_t).
    """

    t: int
    blocks: dict
    assembled: RatMatrix


def _unit_corner(s):
    return RatMatrix.zeros(s).replace(0, 0, 1)


def _place(grid, M, r0, c0, factor=1):
    for i in range(M.rows):
        for j in range(M.cols):
            grid[r0 + i][c0 + j] += factor * M[i, j]


def Am_power_closed_form(N, m, t):
    """A_m(N)^t assembled from its block formula.

    ``W_1 = 0`` and ``W_(t+1) = L N^(t-1) + N W_t`` with ``L = e e^T``;
    ``f_t`` repeats ``e^T N^(t-1)``, ``g_t`` stacks ``a N^(t-1) e`` over copies
    of ``N^(t-1) e`` (``a = 1 - m``), and
    ``B_t = -m [W_t ... W_t; 0] + [W_t]_(all blocks) + diag(N^t)``.
    """
    if m < 2:
        raise MTooSmall(f"A_m needs m >= 2, got {m}")
    if t < 1:
        raise BadT(f"t must be >= 1, got {t}")
    s = N.order
    L = _unit_corner(s)
    W = RatMatrix.zeros(s)
    Np = RatMatrix.identity(s)  # N^(step-1)
    for _ in range(1, t):
        W = mat_mul(L, Np) + mat_mul(N, W)
        Np = mat_mul(Np, N)
    Nt = mat_mul(Np, N)
    a = Fraction(1 - m)

    n = m * s + 1
    grid = [[Fraction(0)] * n for _ in range(n)]
    f = Np.row(0)  # e^T N^(t-1)
    g = Np.column(0)  # N^(t-1) e
    for k in range(m):
        off = 1 + k * s
        for j in range(s):
            grid[0][off + j] = f[j]
            grid[off + j][0] = (a if k == 0 else 1) * g[j]
        for kk in range(m):
            _place(grid, W, off, 1 + kk * s, (1 - m) if k == 0 else 1)
        _place(grid, Nt, off, off)
    A_t = RatMatrix(grid)
    B = A_t.block(1, 1, n - 1, n - 1)
    blocks = {
        "W": W,
        "B": B,
        "f": RatMatrix([A_t.row(0)[1:]]),
        "g": RatMatrix([[x] for x in A_t.column(0)[1:]]),
    }
    return PowerClosedForm(t, blocks, A_t)


def Cm_power_closed_form(N, m, t):
    """C_m(N)^t assembled from its block formula.

    Recurrences: ``W_0 = W_1 = 0``, ``W_(t+2) = N W_(t+1) + L N^t``;
    ``R_1 = R_2 = 0``, ``R_(t+1) = N (L W_t + R_t)``; ``K_t = L W_t + R_t``.
    Then ``C^t = diag(N^t) + [[0, W_(t+1) ...], [a W_(t+1), a K_t ...],
    [W_(t+1), K_t ...], ...]`` with ``a = 2 - m``.
    """
    if m < 3:
        raise MTooSmall(f"C_m matrices need m >= 3, got {m}")
    if t < 1:
        raise BadT(f"t must be >= 1, got {t}")
    s = N.order
    L = _unit_corner(s)
    zero = RatMatrix.zeros(s)
    # state at step u: W_u, W_(u+1), R_u, N^u
    W_cur, W_next, R, Nu = zero, L, zero, N  # u = 1
    for _ in range(1, t):
        K = mat_mul(L, W_cur) + R
        W_cur, W_next = W_next, mat_mul(N, W_next) + mat_mul(L, Nu)
        R = mat_mul(N, K)
        Nu = mat_mul(Nu, N)
    K = mat_mul(L, W_cur) + R
    a = Fraction(2 - m)

    n = m * s
    grid = [[Fraction(0)] * n for _ in range(n)]
    for bi in range(m):
        _place(grid, Nu, bi * s, bi * s)
        for bj in range(m):
            if bi == 0 and bj == 0:
                continue
            M = W_next if (bi == 0 or bj == 0) else K
            _place(grid, M, bi * s, bj * s, a if bi == 1 else 1)
    blocks = {"W_next": W_next, "K": K, "R": R}
    return PowerClosedForm(t, blocks, RatMatrix(grid))


# -- nilpotent star realizations --------------------------------------------

def star_matrix(diagonals, first_column):
    """Star matrix with first row ``(0, 1, ..., 1)``, the given diagonal on
    positions 2..s and the given first column below the corner."""
    d = [to_rat(x) for x in diagonals]
    c = [to_rat(x) for x in first_column]
    s = len(d) + 1
    grid = [[Fraction(0)] * s for _ in range(s)]
    for k in range(1, s):
        grid[0][k] = Fraction(1)
        grid[k][k] = d[k - 1]
        grid[k][0] = c[k - 1]
    return RatMatrix(grid)


def solve_star_nilpotent(diagonals):
    """The nilpotent star matrix with the given trailing diagonal.

    With first row ``(0, 1, ..., 1)``, ``det(xI - Z) = x prod(x - d_j) -
    sum_j c_j prod_(i != j)(x - d_i)``.  Matching this against ``x^s`` gives a
    square linear system in the first-column entries ``c_j``, solved exactly.
    The result is checked to be nilpotent of full index before it is returned.
    """
    d = [to_rat(x) for x in diagonals]
    if len(d) < 2:
        raise BadDiagonals("need at least two diagonal entries (s >= 3)")
    if any(x == 0 for x in d):
        raise BadDiagonals("diagonal entries must be nonzero")
    if len(set(d)) != len(d):
        raise BadDiagonals("diagonal entries must be distinct")
    if sum(d) != 0:
        raise BadDiagonals("diagonal entries must sum to zero")
    s = len(d) + 1
    x = UniPoly.x()
    # row r of the system: coefficient of x^r, r = 0..s-2
    cofactors = []
    for j in range(len(d)):
        p = UniPoly((1,))
        for i, di in enumerate(d):
            if i != j:
                p = p * (x - di)
        cofactors.append(p)
    full = x
    for di in d:
        full = full * (x - di)
    rhs = full - UniPoly.monomial(s)
    system = RatMatrix([[cofactors[j].coeff(r) for j in range(len(d))] for r in range(s - 1)])
    c = solve(system, [rhs.coeff(r) for r in range(s - 1)])
    Z = star_matrix(d, c)
    if char_poly(Z) != UniPoly.monomial(s):
        raise NotFullIndex("solved star matrix is not nilpotent")
    if not nilpotent_index(Z).full_index:
        raise NotFullIndex("solved star matrix does not have full index")
    return Z


# T_5 conjugated by the transposition (1 3), as drawn for A_4(T_5^P)
T5P_PERMUTATION = (3, 2, 1, 4, 5)
T5P = Pattern.from_rows(
    [
        "0*0*0",
        "*0*00",
        "0**00",
        "*000*",
        "000**",
    ]
)
