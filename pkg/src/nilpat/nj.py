"""The Nilpotent-Jacobian method with exact arithmetic.

Given a nilpotent realization ``N`` of a pattern and ``n`` of its nonzero
entries promoted to variables, the Jacobian of the characteristic-polynomial
coefficients with respect to those variables, evaluated at ``N``, has as its
k-th column the negated coefficients of ``[adj(xI - N)]_(j_k, i_k)``.  So one
Faddeev-LeVerrier pass yields every candidate column, and each selection costs
a single determinant.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .errors import (
    BadCap,
    BadSelection,
    FullIndexViolation,
    NotConformant,
    NotNilpotent,
    ParseError,
    TooFewNonzeros,
)
from .linalg import IndexResult, adjugate_xI_minus, det, nilpotent_index, rank
from .matrix import RatMatrix, format_rat, parse_matrix, render_matrix
from .constructions import build_Am_pattern, star_pattern
from .patterns import conforms


@dataclass(frozen=True)
class VariableSelection:
    """Ordered cells promoted to variables; 1-based ``(row, col)`` pairs."""

    positions: tuple

    def __post_init__(self):
        pos = tuple((int(i), int(j)) for i, j in self.positions)
        if len(set(pos)) != len(pos):
            raise BadSelection("selected positions must be distinct")
        object.__setattr__(self, "positions", pos)

    def __len__(self):
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions)

    @classmethod
    def from_flat(cls, values):
        """From ``i1, j1, i2, j2, ...`` as accepted by ``--vars``."""
        try:
            values = [int(v) for v in values]
        except ValueError:
            raise BadSelection(f"indices must be integers: {values}") from None
        if len(values) % 2:
            raise BadSelection("an odd number of indices was given")
        return cls(tuple(zip(values[::2], values[1::2])))

    def validate(self, N):
        n = N.order
        if len(self.positions) != n:
            raise BadSelection(f"need exactly {n} variables, got {len(self.positions)}")
        for i, j in self.positions:
            if not (1 <= i <= n and 1 <= j <= n):
                raise BadSelection(f"position ({i},{j}) is outside a {n}x{n} matrix")
            if not N[i - 1, j - 1]:
                raise BadSelection(f"position ({i},{j}) is a zero entry")


class Verdict(str, Enum):
    SAP_CERTIFIED = "SAPCertified"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class NJReport:
    N: RatMatrix
    selection: VariableSelection
    jprime: RatMatrix
    det_jprime: Fraction
    index_of_N: IndexResult
    verdict: Verdict

    @property
    def certified(self):
        return self.verdict is Verdict.SAP_CERTIFIED

    def to_text(self):
        return render_certificate(self)


@dataclass(frozen=True)
class Exhausted:
    """No certifying selection among the first ``tried`` candidates."""

    tried: int
    complete: bool  # every n-subset was examined


def default_selection(N, P):
    """Selection used when the caller names none.

    With exactly ``n`` nonzero cells all are selected.  A pattern laid out
    literally as A_2(Z_s) gets :func:`star_pair_selection`.  Anything else
    gets the first ``n`` nonzero cells in row-major order; use
    :func:`nj_search_selection` to look further.
    """
    if not conforms(N, P):
        raise NotConformant("matrix is not a realization of the pattern")
    cells = P.nonzero_cells()
    n = P.n
    if len(cells) < n:
        raise TooFewNonzeros(f"pattern has {len(cells)} nonzero cells, need {n}")
    if len(cells) > n:
        s = _star_pair_order(P)
        if s is not None:
            return star_pair_selection(s)
    return VariableSelection(tuple((i + 1, j + 1) for i, j in cells[:n]))


def _star_pair_order(P):
    """``s`` if the support of ``P`` is exactly A_2(Z_s), else None."""
    n = P.n
    if n < 7 or n % 2 == 0:
        return None
    s = (n - 1) // 2
    if P.support() == build_Am_pattern(star_pattern(s), 2):
        return s
    return None


def star_pair_selection(s):
    """Variables of the A_2(Z_s) realizations used with the NJ method.

    In order: the ``a`` entry beside block 1, the first column of block 1
    below its corner, the diagonal of block 1 below its corner, then the
    first two entries of block 2's second row.  ``2s + 1`` cells in all.
    """
    if s < 3:
        raise BadSelection(f"star blocks need s >= 3, got {s}")
    pos = [(2, 1)]
    pos += [(2 + r, 2) for r in range(1, s)]
    pos += [(2 + r, 2 + r) for r in range(1, s)]
    h = s + 2
    pos += [(h + 1, h), (h + 1, h + 1)]
    return VariableSelection(tuple(pos))


def _jacobian_columns(adj, n, cells):
    """Map each 1-based cell ``(i, j)`` to column ``-coeffs(adj[j, i])``."""
    cols = {}
    for i, j in cells:
        p = adj[j - 1, i - 1]
        cols[(i, j)] = [-c for c in p.coeff_vector(n)]
    return cols


def _assemble(cols, positions):
    n = len(positions)
    return RatMatrix([[cols[pos][r] for pos in positions] for r in range(n)])


def jacobian_prime(N, sel):
    """J' with ``J'[r, k] = d f_(r+1) / d x_k`` at the entries of ``N``.

    Column ``k`` is the negated coefficient vector of
    ``[adj(xI - N)]_(j_k, i_k)`` from ``x^(n-1)`` down to ``x^0``.
    """
    sel.validate(N)
    n = N.order
    cols = _jacobian_columns(adjugate_xI_minus(N), n, sel.positions)
    return _assemble(cols, sel.positions)


def polynomials_independent(N, sel):
    """Whether the selected adjugate entries are linearly independent in P_(n-1)."""
    sel.validate(N)
    n = N.order
    adj = adjugate_xI_minus(N)
    coeffs = RatMatrix(
        [[adj[j - 1, i - 1].coeff(r) for (i, j) in sel.positions] for r in range(n)]
    )
    return rank(coeffs) == n


def _require_nilpotent(N, P):
    if not conforms(N, P):
        raise NotConformant("matrix is not a realization of the pattern")
    idx = nilpotent_index(N)
    if not idx.nilpotent:
        n = N.order
        raise NotNilpotent(f"matrix is not nilpotent: N^{n} != 0 (order {n})", n)
    return idx


def _report(N, sel, J, idx):
    d = det(J)
    verdict = Verdict.SAP_CERTIFIED if d != 0 else Verdict.INCONCLUSIVE
    if verdict is Verdict.SAP_CERTIFIED and idx.index != N.order:
        raise FullIndexViolation(
            f"nonsingular J' at a nilpotent matrix of index {idx.index} < {N.order}"
        )
    return NJReport(N, sel, J, d, idx, verdict)


def nj_certificate(N, P, sel):
    """Run the method at one selection and return the report.

    A nonzero ``det(J')`` certifies that every superpattern of ``P`` is
    spectrally arbitrary; ``Inconclusive`` says nothing either way.
    """
    idx = _require_nilpotent(N, P)
    return _report(N, sel, jacobian_prime(N, sel), idx)


def full_index_precheck(N):
    """True iff ``N`` is nilpotent of index exactly its order."""
    return nilpotent_index(N).full_index


def nj_search_selection(N, P, cap, first=None):
    """First certifying selection in row-major lexicographic subset order.

    Examines at most ``cap`` n-subsets of the nonzero cells.  ``first``, if
    given, is tried before the enumeration and counts against ``cap``.
    Returns :class:`Exhausted` when none certifies, which is always the case
    for a matrix of index below ``n``.
    """
    if cap < 1:
        raise BadCap(f"cap must be >= 1, got {cap}")
    idx = _require_nilpotent(N, P)
    n = N.order
    cells = [(i + 1, j + 1) for i, j in N.nonzero_cells()]
    if len(cells) < n:
        raise TooFewNonzeros(f"matrix has {len(cells)} nonzero entries, need {n}")
    cols = _jacobian_columns(adjugate_xI_minus(N), n, cells)
    tried = 0
    if first is not None:
        first.validate(N)
        tried = 1
        report = _report(N, first, _assemble(cols, first.positions), idx)
        if report.certified:
            return report
    for subset in combinations(cells, n):
        if first is not None and subset == first.positions:
            continue
        if tried >= cap:
            return Exhausted(tried, False)
        tried += 1
        J = _assemble(cols, subset)
        report = _report(N, VariableSelection(subset), J, idx)
        if report.certified:
            return report
    return Exhausted(tried, True)


# -- certificate text ------------------------------------------------------

def render_certificate(report):
    sel = " ".join(f"{i},{j}" for i, j in report.selection.positions)
    idx = report.index_of_N
    lines = [
        "# Nilpotent-Jacobian certificate",
        f"order: {report.N.order}",
        "N:",
        render_matrix(report.N).rstrip("\n"),
        f"selection: {sel}",
        "jprime:",
        render_matrix(report.jprime).rstrip("\n"),
        f"det_jprime: {format_rat(report.det_jprime)}",
        f"index: {idx.index if idx.nilpotent else 'not nilpotent'}",
        f"verdict: {report.verdict.value}",
    ]
    return "\n".join(lines) + "\n"


def parse_certificate(text):
    """Read a certificate back into its claimed fields (nothing is recomputed)."""
    lines = text.splitlines()
    fields = {}
    k = 0
    while k < len(lines):
        line = lines[k]
        k += 1
        if not line.strip() or line.startswith("#"):
            continue
        key, _, rest = line.partition(":")
        rest = rest.strip()
        if key in ("N", "jprime"):
            n = int(fields["order"])
            fields[key] = parse_matrix("\n".join(lines[k:k + n]))
            k += n
        else:
            fields[key] = rest
    try:
        sel = VariableSelection(tuple(tuple(map(int, p.split(","))) for p in fields["selection"].split()))
        return {
            "N": fields["N"],
            "selection": sel,
            "jprime": fields["jprime"],
            "det_jprime": Fraction(fields["det_jprime"]),
            "index": fields["index"],
            "verdict": Verdict(fields["verdict"]),
        }
    except (KeyError, ValueError) as exc:
        raise ParseError(f"malformed certificate: {exc}") from exc


def recheck_certificate(text):
    """Independently recompute a certificate's claims; True iff all hold."""
    claim = parse_certificate(text)
    N = claim["N"]
    idx = nilpotent_index(N)
    if not idx.nilpotent or str(idx.index) != claim["index"]:
        return False
    J = jacobian_prime(N, claim["selection"])
    if J != claim["jprime"] or det(J) != claim["det_jprime"]:
        return False
    certified = claim["det_jprime"] != 0
    return certified == (claim["verdict"] is Verdict.SAP_CERTIFIED)
