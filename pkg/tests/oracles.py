"""Independent reference computations used only by the tests.

Nothing here calls the Faddeev-LeVerrier code, the closed-form power
routines, or the adjugate-based Jacobian.  Matrices are plain lists of lists
of Fractions.
"""

import random
from fractions import Fraction
from itertools import permutations

from nilpat import RatMatrix, UniPoly


def as_lists(A):
    return [list(r) for r in A]


def naive_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    return [[sum((A[i][t] * B[t][j] for t in range(k)), Fraction(0)) for j in range(m)]
            for i in range(n)]


def naive_pow(A, t):
    n = len(A)
    out = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(t):
        out = naive_mul(out, A)
    return out


def _perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def leibniz_det(M, zero, one):
    """Determinant by the permutation expansion over any commutative ring."""
    n = len(M)
    total = zero
    for p in permutations(range(n)):
        term = one
        for i in range(n):
            term = term * M[i][p[i]]
        total = total + term if _perm_sign(p) > 0 else total - term
    return total


def laplace_det(M, zero, one):
    """Determinant by cofactor expansion along the first row."""
    n = len(M)
    if n == 0:
        return one
    if n == 1:
        return M[0][0]
    total = zero
    for j in range(n):
        if M[0][j] == zero:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * laplace_det(minor, zero, one)
        total = total + term if j % 2 == 0 else total - term
    return total


def char_matrix(A):
    n = len(A)
    return [[UniPoly((-A[i][j], 1 if i == j else 0)) for j in range(n)] for i in range(n)]


def cofactor_char_poly(A):
    return laplace_det(char_matrix(as_lists(A)), UniPoly(), UniPoly((1,)))


def cofactor_adjugate(A):
    """adj(xI - A) entry-wise from cofactors: adj[i][j] = (-1)^(i+j) M_(j,i)."""
    X = char_matrix(as_lists(A))
    n = len(X)
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:i] + row[i + 1:] for k, row in enumerate(X) if k != j]
            c = laplace_det(minor, UniPoly(), UniPoly((1,)))
            adj[i][j] = c if (i + j) % 2 == 0 else -c
    return adj


def cofactor_det(A):
    return laplace_det(as_lists(A), Fraction(0), Fraction(1))


def gauss_det(M):
    """Plain Gaussian elimination over the rationals."""
    a = [list(r) for r in M]
    n = len(a)
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return d


def interpolated_char_poly(A):
    """det(xI - A) from its values at x = 0..n by Lagrange interpolation."""
    M = as_lists(A)
    n = len(M)
    xs = list(range(n + 1))
    ys = [gauss_det([[Fraction(int(i == j)) * x - M[i][j] for j in range(n)] for i in range(n)])
          for x in xs]
    total = UniPoly()
    for k, xk in enumerate(xs):
        term = UniPoly((ys[k],))
        for i, xi in enumerate(xs):
            if i != k:
                term = term * UniPoly((Fraction(-xi, xk - xi), Fraction(1, xk - xi)))
        total = total + term
    return total


def char_coeffs(A):
    """[f_1, ..., f_n] of det(xI - A) = x^n + f_1 x^(n-1) + ... + f_n."""
    p = interpolated_char_poly(A)
    n = len(as_lists(A))
    return [p.coeff(n - r) for r in range(1, n + 1)]


def perturbation_jacobian(N, positions):
    """J'[r][k] = f_r(N + E_(i_k j_k)) - f_r(N).

    Exact because det(xI - X) is affine in any single entry of X.
    """
    base = char_coeffs(N)
    cols = []
    for i, j in positions:
        bumped = N.replace(i - 1, j - 1, N[i - 1, j - 1] + 1)
        cols.append([a - b for a, b in zip(char_coeffs(bumped), base)])
    n = len(positions)
    return RatMatrix([[cols[k][r] for k in range(n)] for r in range(n)])


def lagrange_star_column(d):
    """First column c_j = -d_j^s / prod_(i != j)(d_j - d_i) of a nilpotent star."""
    s = len(d) + 1
    out = []
    for j, dj in enumerate(d):
        den = Fraction(1)
        for i, di in enumerate(d):
            if i != j:
                den *= dj - di
        out.append(-Fraction(dj) ** s / den)
    return out


def w_double_sum(N, t):
    """W_t = sum_(i=0)^(t-2) N^i L N^(t-2-i), L = e e^T; W_1 = 0."""
    s = N.order
    A = as_lists(N)
    L = [[Fraction(int(i == 0 and j == 0)) for j in range(s)] for i in range(s)]
    total = [[Fraction(0)] * s for _ in range(s)]
    for i in range(t - 1):
        term = naive_mul(naive_mul(naive_pow(A, i), L), naive_pow(A, t - 2 - i))
        total = [[a + b for a, b in zip(r, q)] for r, q in zip(total, term)]
    return RatMatrix(total)


def r_double_sum(N, t):
    """R_t = sum_i sum_j N^(j+1) L N^(t-3-j-i) L N^i for t >= 3; zero below."""
    s = N.order
    A = as_lists(N)
    L = [[Fraction(int(i == 0 and j == 0)) for j in range(s)] for i in range(s)]
    total = [[Fraction(0)] * s for _ in range(s)]
    for i in range(t - 2):
        for j in range(t - 2 - i):
            term = naive_mul(
                naive_mul(naive_mul(naive_mul(naive_pow(A, j + 1), L), naive_pow(A, t - 3 - j - i)), L),
                naive_pow(A, i),
            )
            total = [[a + b for a, b in zip(r, q)] for r, q in zip(total, term)]
    return RatMatrix(total)


def random_rational_matrix(rng, n, span=6, dens=(1, 2, 3, 4)):
    return RatMatrix([[Fraction(rng.randint(-span, span), rng.choice(dens)) for _ in range(n)]
                      for _ in range(n)])


def random_star_diagonals(rng, s, lo=-9, hi=9):
    """Distinct, nonzero, trace-zero diagonal of length s-1."""
    while True:
        d = rng.sample([v for v in range(lo, hi + 1) if v], s - 2)
        last = -sum(d)
        if last and last not in d:
            return [Fraction(v) for v in d] + [Fraction(last)]


def random_similarity(rng, n):
    """A random unimodular-ish integer matrix and its exact inverse."""
    while True:
        S = RatMatrix([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        if cofactor_det(S) != 0:
            break
    inv = _inverse(as_lists(S))
    return S, RatMatrix(inv)


def _inverse(A):
    n = len(A)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(A)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c])
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [r[n:] for r in aug]


def seeded(seed):
    return random.Random(seed)
