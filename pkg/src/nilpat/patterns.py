"""Zero-nonzero and sign patterns, their graphs, and tree classification.

A pattern is an ``n x n`` grid of :class:`Cell` values.  Zero-nonzero
patterns use ``0`` and ``*``; sign patterns use ``0``, ``+`` and ``-``.
Everything here accepts both kinds.
"""

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .errors import (
    BadToken,
    KindMismatch,
    MixedKinds,
    NonSquare,
    NotSymmetric,
    OrderMismatch,
    OrderTooSmall,
    ParseError,
)


class Cell(str, Enum):
    ZERO = "0"
    STAR = "*"
    PLUS = "+"
    MINUS = "-"

    def __bool__(self):
        return self is not Cell.ZERO


class Kind(str, Enum):
    ZERO_NONZERO = "zero-nonzero"
    SIGN = "sign"


_SIGN_CELLS = {Cell.PLUS, Cell.MINUS}


@dataclass(frozen=True)
class Pattern:
    cells: tuple  # tuple of row tuples of Cell
    kind: Kind = Kind.ZERO_NONZERO

    def __post_init__(self):
        cells = tuple(tuple(Cell(c) for c in row) for row in self.cells)
        n = len(cells)
        if n == 0 or any(len(r) != n for r in cells):
            raise NonSquare("pattern grid must be square of order >= 1")
        used = {c for r in cells for c in r}
        if self.kind == Kind.ZERO_NONZERO and used & _SIGN_CELLS:
            raise MixedKinds("zero-nonzero pattern contains +/- cells")
        if self.kind == Kind.SIGN and Cell.STAR in used:
            raise MixedKinds("sign pattern contains * cells")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_rows(cls, rows):
        """Build from rows of tokens, inferring the kind."""
        cells = tuple(tuple(Cell(c) for c in r) for r in rows)
        used = {c for r in cells for c in r}
        kind = Kind.SIGN if used & _SIGN_CELLS else Kind.ZERO_NONZERO
        return cls(cells, kind)

    @classmethod
    def from_support(cls, cells_nonzero, n):
        """Zero-nonzero pattern with a star at each 0-based ``(i, j)`` given."""
        grid = [[Cell.ZERO] * n for _ in range(n)]
        for i, j in cells_nonzero:
            grid[i][j] = Cell.STAR
        return cls(tuple(map(tuple, grid)))

    @property
    def n(self):
        return len(self.cells)

    def __getitem__(self, key):
        i, j = key
        return self.cells[i][j]

    def nonzero_cells(self):
        """0-based coordinates of nonzero cells in row-major order."""
        return [(i, j) for i, r in enumerate(self.cells) for j, c in enumerate(r) if c]

    def support(self):
        """The zero-nonzero pattern underlying this one."""
        return Pattern.from_support(self.nonzero_cells(), self.n)

    @property
    def T(self):
        return Pattern(tuple(zip(*self.cells)), self.kind)

    def __str__(self):
        return render_pattern(self).rstrip("\n")


def _tokenize(text):
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0]
        for chunk in line.split(";"):
            toks = chunk.split()
            if toks:
                rows.append(toks)
    return rows


def parse_pattern(text):
    rows = _tokenize(text)
    if not rows:
        raise ParseError("empty pattern")
    cells = []
    for toks in rows:
        row = []
        for tok in toks:
            try:
                row.append(Cell(tok))
            except ValueError:
                raise BadToken(f"unexpected token {tok!r}; use 0, *, + or -") from None
        cells.append(row)
    n = len(cells)
    if any(len(r) != n for r in cells):
        raise NonSquare(f"{n} rows but row lengths {[len(r) for r in cells]}")
    used = {c for r in cells for c in r}
    if Cell.STAR in used and used & _SIGN_CELLS:
        raise MixedKinds("cannot mix * with + or -")
    return Pattern.from_rows(cells)


def render_pattern(P):
    """Canonical ``.pat`` text: single spaces, LF line endings, no comments."""
    return "".join(" ".join(c.value for c in row) + "\n" for row in P.cells)


def _sign(x):
    return (x > 0) - (x < 0)


def conforms(A, P):
    """True iff ``A`` is a realization of ``P`` (nonzero exactly on the stars;
    for sign patterns, with the stated signs)."""
    if A.shape != (P.n, P.n):
        raise OrderMismatch(f"matrix is {A.rows}x{A.cols}, pattern has order {P.n}")
    for i in range(P.n):
        for j in range(P.n):
            c, a = P[i, j], A[i, j]
            if c is Cell.ZERO:
                if a:
                    return False
            elif c is Cell.STAR:
                if not a:
                    return False
            elif _sign(a) != (1 if c is Cell.PLUS else -1):
                return False
    return True


def pattern_of(A, sign=False):
    """The (sign) pattern of a matrix's nonzero entries."""
    n = A.order
    if not sign:
        return Pattern.from_support(A.nonzero_cells(), n)
    grid = tuple(
        tuple(Cell.ZERO if not A[i, j] else (Cell.PLUS if A[i, j] > 0 else Cell.MINUS)
              for j in range(n))
        for i in range(n)
    )
    return Pattern(grid, Kind.SIGN)


def is_superpattern(B, A):
    """True iff every nonzero cell of ``A`` is nonzero (with equal sign) in ``B``."""
    if B.n != A.n:
        raise OrderMismatch(f"orders {B.n} and {A.n} differ")
    if B.kind != A.kind:
        raise KindMismatch(f"cannot compare {B.kind.value} with {A.kind.value} pattern")
    return all(B[i, j] == A[i, j] for i, j in A.nonzero_cells())


def is_symmetric(P):
    return P.cells == P.T.cells


# -- graphs -----------------------------------------------------------------

@dataclass(frozen=True)
class PatternGraph:
    """Simple graph of a symmetric pattern; vertices are 1-based."""

    n: int
    edges: frozenset  # frozensets {i, j}
    loops: frozenset

    def neighbors(self, v):
        return sorted(next(iter(e - {v})) for e in self.edges if v in e)

    def degree(self, v):
        return sum(1 for e in self.edges if v in e)

    def relabel(self, mapping):
        """Image of the graph under ``v -> mapping[v]`` (dict or callable)."""
        f = mapping if callable(mapping) else mapping.__getitem__
        return PatternGraph(
            self.n,
            frozenset(frozenset(f(v) for v in e) for e in self.edges),
            frozenset(f(v) for v in self.loops),
        )


def graph_of(P):
    if not is_symmetric(P):
        raise NotSymmetric("the graph is only defined for symmetric patterns")
    edges = set()
    loops = set()
    for i, j in P.nonzero_cells():
        if i == j:
            loops.add(i + 1)
        elif i < j:
            edges.add(frozenset((i + 1, j + 1)))
    return PatternGraph(P.n, frozenset(edges), frozenset(loops))


class TreeKind(str, Enum):
    NOT_TREE = "not a tree"
    TREE = "tree"
    BALANCED = "balanced tree"


@dataclass(frozen=True)
class TreeClass:
    kind: TreeKind
    root: int | None = None  # 1-based witness root when balanced


def _adjacency(G):
    adj = {v: [] for v in range(1, G.n + 1)}
    for e in G.edges:
        a, b = tuple(e)
        adj[a].append(b)
        adj[b].append(a)
    return adj


def _distances(adj, root):
    dist = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def classify_tree(G):
    adj = _adjacency(G)
    if len(G.edges) != G.n - 1 or len(_distances(adj, 1)) != G.n:
        return TreeClass(TreeKind.NOT_TREE)
    for r in range(1, G.n + 1):
        if len(adj[r]) < 2:
            continue
        level_degree = {}
        ok = True
        for v, d in _distances(adj, r).items():
            if level_degree.setdefault(d, len(adj[v])) != len(adj[v]):
                ok = False
                break
        if ok:
            return TreeClass(TreeKind.BALANCED, r)
    return TreeClass(TreeKind.TREE)


def _leaves(G):
    adj = _adjacency(G)
    return {v for v, nb in adj.items() if len(nb) == 1}


def is_balanced_tree_pattern(P):
    G = graph_of(P)
    if classify_tree(G).kind is not TreeKind.BALANCED:
        return False
    return set(G.loops) == _leaves(G)


# -- named patterns and recognizers ----------------------------------------

def star_pattern(s):
    """``Z_s``: zero (1,1) entry, full first row and column, loops on 2..s."""
    if s < 3:
        raise OrderTooSmall(f"star patterns need s >= 3, got {s}")
    cells = [[Cell.ZERO] * s for _ in range(s)]
    for k in range(1, s):
        cells[0][k] = cells[k][0] = cells[k][k] = Cell.STAR
    return Pattern(tuple(map(tuple, cells)))


def tridiagonal_pattern(n):
    """``T_n``: the path pattern with loops only at its two ends."""
    if n < 2:
        raise OrderTooSmall(f"tridiagonal patterns need n >= 2, got {n}")
    cells = [[Cell.ZERO] * n for _ in range(n)]
    for k in range(n - 1):
        cells[k][k + 1] = cells[k + 1][k] = Cell.STAR
    cells[0][0] = cells[n - 1][n - 1] = Cell.STAR
    return Pattern(tuple(map(tuple, cells)))


def _split_am(Q):
    """Blocks ``(m, N)`` if ``Q`` has the literal A_m(N) layout, else None.

    Tries every factorization ``n - 1 = m*s`` with ``m >= 2``, smallest block
    first.  ``Q`` must be zero-nonzero.
    """
    n = Q.n
    for s in range(1, n):
        if (n - 1) % s:
            continue
        m = (n - 1) // s
        if m < 2:
            continue
        heads = {1 + k * s for k in range(m)}
        if Q[0, 0] or any(bool(Q[0, j]) != (j in heads) for j in range(1, n)):
            continue
        if any(bool(Q[i, 0]) != (i in heads) for i in range(1, n)):
            continue
        block = tuple(tuple(Q[1 + i, 1 + j] for j in range(s)) for i in range(s))
        good = all(
            Q[1 + i, 1 + j] == (block[i % s][j % s] if i // s == j // s else Cell.ZERO)
            for i in range(n - 1)
            for j in range(n - 1)
        )
        if good:
            return m, Pattern(block)
    return None


def is_recursive_star(P):
    """Recursive star test against the literal block layout (root at 1).

    Sign patterns are judged by their support.
    """
    Q = P.support() if P.kind == Kind.SIGN else P
    if Q.n >= 3 and Q == star_pattern(Q.n):
        return True
    split = _split_am(Q)
    if split is None:
        return False
    return is_recursive_star(split[1])


# -- permutations -----------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    """Permutation matrix ``P`` with ``P[i, map[i]] = 1`` (1-based ``map``)."""

    map: tuple

    def __post_init__(self):
        m = tuple(int(v) for v in self.map)
        if sorted(m) != list(range(1, len(m) + 1)):
            raise ValueError(f"not a permutation of 1..{len(m)}: {m}")
        object.__setattr__(self, "map", m)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_matrix(cls, rows):
        return cls(tuple(list(r).index(1) + 1 for r in rows))

    @property
    def n(self):
        return len(self.map)

    def inverse(self):
        inv = [0] * self.n
        for i, v in enumerate(self.map, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))


def permute(P, perm):
    """``P A P^T``: entry ``(i, j)`` of the result is ``A[map(i), map(j)]``."""
    if perm.n != P.n:
        raise OrderMismatch(f"permutation of {perm.n} applied to order {P.n}")
    m = [v - 1 for v in perm.map]
    return Pattern(tuple(tuple(P[m[i], m[j]] for j in range(P.n)) for i in range(P.n)), P.kind)
