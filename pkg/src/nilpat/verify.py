"""Self-contained reproduction of the published examples and identities.

Every matrix used here is embedded below; nothing is read from disk.  Each
check yields one :class:`CheckResult`; :func:`run_checks` never raises
for a failed check, it reports it.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .constructions import (
    T5P,
    T5P_PERMUTATION,
    Am_power_closed_form,
    Cm_power_closed_form,
    build_Am_matrix,
    build_Am_pattern,
    build_Cm_matrix,
    solve_star_nilpotent,
    star_pattern,
    tridiagonal_pattern,
)
from .errors import FullIndexViolation, NilpatError
from .linalg import adjugate_xI_minus, char_poly, nilpotent_index
from .matrix import RatMatrix, block_diag, mat_mul, mat_pow, parse_matrix
from .nj import (
    Exhausted,
    VariableSelection,
    jacobian_prime,
    nj_certificate,
    nj_search_selection,
    star_pair_selection,
)
from .patterns import (
    Permutation,
    is_balanced_tree_pattern,
    is_recursive_star,
    pattern_of,
    permute,
)
from .poly import PolyMatrix, UniPoly

FIXTURES = {
    "Z3": {"Z": "0 1 1; -1/2 1 0; -1/2 0 -1", "diag": ["1", "-1"]},
    "Z4": {"Z": "0 1 1 1; 1/4 1 0 0; -16/5 0 2 0; -81/20 0 0 -3", "diag": ["1", "2", "-3"]},
    "Z5": {
        "Z": "0 1 1 1 1; -1/14 1 0 0 0; 4 0 2 0 0; -27/2 0 0 3 0; -108/7 0 0 0 -6",
        "diag": ["1", "2", "3", "-6"],
    },
    # worked 3x3 example: N, the selection (2,1), (2,2), (3,1), and J'
    "worked": {
        "N": "0 1 1; -1/2 1 0; -1/2 0 -1",
        "sel": ((2, 1), (2, 2), (3, 1)),
        "jprime": "0 -1 0; -1 -1 -1; -1 -1/2 1",
    },
}

# adj(xI - N) for the worked example, entry (i, j) as coefficients low degree first
WORKED_ADJUGATE = (
    (("-1", "0", "1"), ("1", "1"), ("-1", "1")),
    (("-1/2", "-1/2"), ("1/2", "1", "1"), ("-1/2",)),
    (("1/2", "-1/2"), ("-1/2",), ("1/2", "-1", "1")),
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self):
        tail = f" ({self.detail})" if self.detail else ""
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}{tail}"


class _Monitor:
    """Counts certification runs and full-index violations."""

    def __init__(self):
        self.runs = 0
        self.certified = 0
        self.violations = 0

    def certify(self, N, sel):
        self.runs += 1
        try:
            report = nj_certificate(N, pattern_of(N), sel)
        except FullIndexViolation:
            self.violations += 1
            return None
        if report.certified:
            self.certified += 1
            if report.index_of_N.index != N.order:
                self.violations += 1
        return report


def _worked_adjugate():
    return PolyMatrix([[UniPoly(Fraction(c) for c in e) for e in row] for row in WORKED_ADJUGATE])


def _example_checks(fixtures, monitor):
    for name in ("Z3", "Z4", "Z5"):
        fx = fixtures[name]
        try:
            Z = parse_matrix(fx["Z"])
            s = Z.order
            zi = nilpotent_index(Z)
            ok_z = char_poly(Z) == UniPoly.monomial(s) and zi.full_index
            yield CheckResult(f"{name}: Z nilpotent of full index {s}", ok_z,
                              "" if ok_z else f"char poly {char_poly(Z)}")
            solved = solve_star_nilpotent(fx["diag"])
            yield CheckResult(f"{name}: Z solved from its diagonal", solved == Z)
            N = build_Am_matrix([Z, Z])
            ni = nilpotent_index(N)
            ok_n = ni.nilpotent and ni.index == 2 * s + 1
            yield CheckResult(f"{name}: A_2(Z) has index {2 * s + 1}", ok_n,
                              f"index {ni.index}" if ni.nilpotent else "not nilpotent")
            report = monitor.certify(N, star_pair_selection(s)) if ok_n else None
            ok_j = report is not None and report.certified
            yield CheckResult(f"{name}: det(J') != 0", ok_j,
                              f"det = {report.det_jprime}" if report else "not certified")
        except NilpatError as exc:
            yield CheckResult(f"{name}: evaluation", False, str(exc))


def _worked_checks(fixtures):
    fx = fixtures["worked"]
    N = parse_matrix(fx["N"])
    yield CheckResult("worked example: adj(xI - N) matches display",
                      adjugate_xI_minus(N) == _worked_adjugate())
    J = jacobian_prime(N, VariableSelection(fx["sel"]))
    yield CheckResult("worked example: J' matches display", J == parse_matrix(fx["jprime"]))


def _closed_form_checks(fixtures):
    bad_a = bad_c = cases = 0
    for name in ("Z3", "Z4", "Z5"):
        Z = parse_matrix(fixtures[name]["Z"])
        k = nilpotent_index(Z).index or Z.order
        for m in (2, 3):
            A = build_Am_matrix([Z] * m)
            P = A
            for t in range(1, 2 * k + 3):
                cases += 1
                if Am_power_closed_form(Z, m, t).assembled != P:
                    bad_a += 1
                P = mat_mul(P, A)
        for m in (3, 4):
            C = build_Cm_matrix(Z, m)
            P = C
            for t in range(1, 3 * k + 2):
                cases += 1
                if Cm_power_closed_form(Z, m, t).assembled != P:
                    bad_c += 1
                P = mat_mul(P, C)
    yield CheckResult("closed-form powers of A_m(N) equal direct powers", bad_a == 0,
                      f"{bad_a} mismatches")
    yield CheckResult("closed-form powers of C_m(N) equal direct powers", bad_c == 0,
                      f"{bad_c} mismatches of {cases} cases")


def _c_index_checks(fixtures):
    ok = True
    for name in ("Z3", "Z4", "Z5"):
        Z = parse_matrix(fixtures[name]["Z"])
        k = nilpotent_index(Z).index or Z.order
        for m in (3, 4):
            ok &= mat_pow(build_Cm_matrix(Z, m), 3 * k).is_zero()
    yield CheckResult("C_m(N)^(3k) = 0", ok)


def _random_stars(rng, s, count):
    """Distinct nonzero trace-zero diagonals for star blocks of order ``s``."""
    seen = set()
    out = []
    while len(out) < count:
        d = rng.sample([v for v in range(-9, 10) if v], s - 2)
        last = -sum(d)
        diag = tuple(d) + (last,)
        if last == 0 or last in d or diag in seen:
            continue
        seen.add(diag)
        out.append(diag)
    return out


def _allowindex_checks(rng):
    bad = 0
    count = 0
    for s in (3, 4, 5, 6):
        for diag in _random_stars(rng, s, 5):
            Z = solve_star_nilpotent(diag)
            Zk = mat_pow(Z, s - 1)
            count += 1
            rows_ok = all(any(r) for r in Zk)
            cols_ok = all(any(Zk.column(j)) for j in range(s))
            idx = nilpotent_index(build_Am_matrix([Z, Z])).index
            if not (rows_ok and cols_ok and idx == 2 * s + 1):
                bad += 1
    yield CheckResult("star blocks: Z^(s-1) rows/columns nonzero, A_2(Z) full index",
                      bad == 0, f"{count} stars, {bad} failures")


def _identity_checks(rng):
    bad = 0
    for _ in range(30):
        s = rng.randint(2, 4)
        m = rng.randint(2, 4)
        N = RatMatrix([[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(s)]
                       for _ in range(s)])
        if char_poly(build_Am_matrix([N] * m)) != UniPoly.x() * char_poly(N) ** m:
            bad += 1
    yield CheckResult("char poly of A_m(N) equals x * p_N(x)^m", bad == 0, f"{bad} failures")


def _pattern_checks():
    T5 = tridiagonal_pattern(5)
    yield CheckResult("T_5^P = P T_5 P^T", permute(T5, Permutation(T5P_PERMUTATION)) == T5P)
    yield CheckResult("A_4(A_3(Z_3)) is a recursive star pattern",
                      is_recursive_star(build_Am_pattern(build_Am_pattern(star_pattern(3), 3), 4)))
    yield CheckResult("A_4(T_5^P) is not a recursive star but is a balanced tree pattern",
                      not is_recursive_star(build_Am_pattern(T5P, 4))
                      and is_balanced_tree_pattern(build_Am_pattern(T5P, 4)))


def _outer(u, v):
    """Rank-one ``u v^T``; nilpotent of index 2 when ``v . u = 0``."""
    return RatMatrix([[a * b for b in v] for a in u])


def _monitor_checks(rng, monitor):
    for s in (3, 4, 5):
        for diag in _random_stars(rng, s, 4):
            Z = solve_star_nilpotent(diag)
            monitor.certify(build_Am_matrix([Z, Z]), star_pair_selection(s))
    # non-full-index nilpotents never certify under exhaustive search
    J2 = RatMatrix([[0, 1], [0, 0]])
    Z3 = parse_matrix(FIXTURES["Z3"]["Z"])
    cases = [
        _outer((1, 2, 3), (1, 1, -1)),
        _outer((1, 1, 1, 1), (1, 2, -1, -2)),
        block_diag(Z3, RatMatrix([[0]])),
        block_diag(Z3, J2),
    ]
    never = True
    for N in cases:
        result = nj_search_selection(N, pattern_of(N), cap=10**6)
        never &= isinstance(result, Exhausted) and result.complete
    yield CheckResult("non-full-index nilpotents never certify", never, f"{len(cases)} matrices")
    yield CheckResult(
        "certified => full index",
        monitor.violations == 0 and monitor.certified > 0,
        f"{monitor.runs} runs, {monitor.certified} certified, {monitor.violations} violations",
    )


def run_checks(fixtures=None, seed=20090101):
    """Run every check and return the list of results in a fixed order."""
    fixtures = FIXTURES if fixtures is None else fixtures
    rng = random.Random(seed)
    monitor = _Monitor()
    results = []
    for group in (
        lambda: _example_checks(fixtures, monitor),
        lambda: _worked_checks(fixtures),
        lambda: _closed_form_checks(fixtures),
        lambda: _c_index_checks(fixtures),
        lambda: _allowindex_checks(rng),
        lambda: _identity_checks(rng),
        _pattern_checks,
        lambda: _monitor_checks(rng, monitor),
    ):
        try:
            results.extend(group())
        except NilpatError as exc:
            results.append(CheckResult("check group aborted", False, str(exc)))
    return results
