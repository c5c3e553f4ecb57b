"""Univariate polynomials with rational coefficients, and matrices of them."""

from fractions import Fraction

from .errors import DimMismatch
from .matrix import RatMatrix, format_rat, to_rat


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class UniPoly:
    """Polynomial ``c0 + c1 x + ... + cd x^d`` stored low degree first.

    Trailing zeros are trimmed, so the zero polynomial has ``coeffs == ()``
    and ``degree == -1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(to_rat(c) for c in coeffs)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree, c=1):
        return cls([0] * degree + [c])

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def coeff_vector(self, length):
        """Coefficients of ``x^(length-1)`` down to ``x^0``."""
        if self.degree >= length:
            raise DimMismatch(f"degree {self.degree} does not fit in {length} coefficients")
        return [self.coeff(k) for k in range(length - 1, -1, -1)]

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((to_rat(other),))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _lift(self, other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly((other,))

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = UniPoly((1,))
        for _ in range(k):
            result = result * self
        return result

    def __repr__(self):
        return f"UniPoly({str(self)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = format_rat(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{format_rat(mag)}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


class PolyMatrix:
    """Square matrix with :class:`UniPoly` entries (0-based indexing)."""

    __slots__ = ("_rows", "n")

    def __init__(self, rows):
        grid = tuple(tuple(p if isinstance(p, UniPoly) else UniPoly((p,)) for p in r) for r in rows)
        if any(len(r) != len(grid) for r in grid):
            raise DimMismatch("polynomial matrix must be square")
        self._rows = grid
        self.n = len(grid)

    @classmethod
    def from_coefficients(cls, mats):
        """Build ``sum_k mats[k] * x^k`` from constant matrices (low degree first)."""
        n = mats[0].order
        return cls([[UniPoly(M[i, j] for M in mats) for j in range(n)] for i in range(n)])

    @classmethod
    def x_minus(cls, A):
        """The characteristic matrix ``xI - A``."""
        n = A.order
        return cls([[UniPoly((-A[i, j], 1 if i == j else 0)) for j in range(n)] for i in range(n)])

    @classmethod
    def scalar(cls, n, p):
        return cls([[p if i == j else UniPoly() for j in range(n)] for i in range(n)])

    def __getitem__(self, key):
        i, j = key
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __matmul__(self, other):
        if self.n != other.n:
            raise DimMismatch("order mismatch")
        n = self.n
        return PolyMatrix(
            [[sum((self._rows[i][k] * other._rows[k][j] for k in range(n)), UniPoly())
              for j in range(n)] for i in range(n)]
        )

    def max_degree(self):
        return max(p.degree for r in self._rows for p in r)

    def evaluate(self, x):
        return RatMatrix([[p(x) for p in r] for r in self._rows])

    def coefficient_matrix(self, k):
        return RatMatrix([[p.coeff(k) for p in r] for r in self._rows])

    def __repr__(self):
        return "PolyMatrix([" + "; ".join(", ".join(str(p) for p in r) for r in self._rows) + "])"
