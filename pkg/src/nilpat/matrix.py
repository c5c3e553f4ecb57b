"""Dense matrices of exact rationals, and the ``.mat`` text format.

Entries are :class:`fractions.Fraction`, which already keeps every value in
lowest terms with a positive denominator.  Matrices are immutable; all
arithmetic returns new objects.
"""

from fractions import Fraction
from numbers import Rational

from .errors import DimMismatch, NonSquare, ParseError

Rat = Fraction


def to_rat(value):
    """Coerce ``value`` to a Fraction, refusing floats.

    Floats are rejected because a binary float rarely denotes the rational the
    caller had in mind; pass ``Fraction('1/3')`` or the string ``'1/3'``.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational number: {value!r}") from exc
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rat(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class RatMatrix:
    """An immutable ``rows x cols`` matrix over the rationals.

    Indexing is 0-based: ``A[i, j]``.  Reports elsewhere convert to the
    1-based ``(i, j)`` convention.
    """

    __slots__ = ("_rows", "rows", "cols")

    def __init__(self, rows):
        grid = tuple(tuple(to_rat(x) for x in row) for row in rows)
        if not grid or not grid[0]:
            raise DimMismatch("matrix must have at least one row and column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise DimMismatch("ragged rows")
        self._rows = grid
        self.rows = len(grid)
        self.cols = width

    @classmethod
    def _wrap(cls, grid):
        # trusted constructor: grid is already a tuple of tuples of Fraction
        obj = cls.__new__(cls)
        obj._rows = grid
        obj.rows = len(grid)
        obj.cols = len(grid[0])
        return obj

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        z = Fraction(0)
        return cls._wrap(tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n):
        one, z = Fraction(1), Fraction(0)
        return cls._wrap(tuple(tuple(one if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def diag(cls, values):
        vals = [to_rat(v) for v in values]
        n = len(vals)
        z = Fraction(0)
        return cls._wrap(tuple(tuple(vals[i] if i == j else z for j in range(n)) for i in range(n)))

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self):
        return self.rows == self.cols

    @property
    def order(self):
        if not self.is_square:
            raise NonSquare(f"{self.rows}x{self.cols} matrix has no order")
        return self.rows

    def __getitem__(self, key):
        i, j = key
        return self._rows[i][j]

    def row(self, i):
        return self._rows[i]

    def column(self, j):
        return tuple(r[j] for r in self._rows)

    def tolist(self):
        return [list(r) for r in self._rows]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = "; ".join(" ".join(format_rat(x) for x in r) for r in self._rows)
        return f"RatMatrix([{body}])"

    def __str__(self):
        return render_matrix(self).rstrip("\n")

    def is_zero(self):
        return not any(x for r in self._rows for x in r)

    @property
    def T(self):
        return RatMatrix._wrap(tuple(zip(*self._rows)))

    def trace(self):
        return sum((self._rows[i][i] for i in range(self.order)), Fraction(0))

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return RatMatrix._wrap(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows))
        )

    def __sub__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return RatMatrix._wrap(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows))
        )

    def __neg__(self):
        return RatMatrix._wrap(tuple(tuple(-a for a in r) for r in self._rows))

    def scale(self, c):
        c = to_rat(c)
        return RatMatrix._wrap(tuple(tuple(c * a for a in r) for r in self._rows))

    def __mul__(self, c):
        if isinstance(c, RatMatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return mat_mul(self, other)

    def __pow__(self, t):
        return mat_pow(self, t)

    def replace(self, i, j, value):
        """Copy with entry ``(i, j)`` (0-based) set to ``value``."""
        grid = [list(r) for r in self._rows]
        grid[i][j] = to_rat(value)
        return RatMatrix._wrap(tuple(tuple(r) for r in grid))

    def block(self, r0, c0, rows, cols):
        return RatMatrix._wrap(tuple(r[c0:c0 + cols] for r in self._rows[r0:r0 + rows]))

    def nonzero_cells(self):
        """0-based coordinates of nonzero entries, row-major."""
        return [(i, j) for i, r in enumerate(self._rows) for j, x in enumerate(r) if x]


def mat_mul(A, B):
    if A.cols != B.rows:
        raise DimMismatch(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    bt = tuple(zip(*B._rows))
    z = Fraction(0)
    out = []
    for r in A._rows:
        nz = [(k, a) for k, a in enumerate(r) if a]
        out.append(tuple(sum((a * col[k] for k, a in nz), z) for col in bt))
    return RatMatrix._wrap(tuple(out))


def mat_pow(A, t):
    if t < 0:
        raise ValueError("negative powers are not supported")
    n = A.order
    result = RatMatrix.identity(n)
    for _ in range(t):
        result = mat_mul(result, A)
    return result


def block_diag(*blocks):
    n = sum(b.order for b in blocks)
    grid = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.order):
            for j in range(b.order):
                grid[off + i][off + j] = b[i, j]
        off += b.order
    return RatMatrix(grid)


# -- ".mat" text format ------------------------------------------------------

def _strip_comments(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_matrix(text):
    """Parse the ``.mat`` format: one row per line, entries ``int`` or ``p/q``.

    Rows may also be separated by ``;`` so one-liners work on the command line.
    """
    rows = []
    for line in _strip_comments(text):
        for chunk in line.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            row = []
            for tok in chunk.split():
                if "." in tok or "e" in tok.lower():
                    raise ParseError(f"decimal literals are not exact: {tok!r}")
                q = to_rat(tok)
                row.append(q)
            rows.append(row)
    if not rows:
        raise ParseError("empty matrix")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ParseError("rows have different lengths")
    return RatMatrix(rows)


def render_matrix(A):
    return "".join(" ".join(format_rat(x) for x in row) + "\n" for row in A)
