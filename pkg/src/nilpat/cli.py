"""Command-line interface.

Exit codes: 0 success / certified, 2 inconclusive, 1 error.
"""

import argparse
import os
import sys
import tempfile
from pathlib import Path

from .descriptors import evaluate, load_file
from .errors import NilpatError
from .linalg import nilpotent_index
from .matrix import RatMatrix, render_matrix
from .nj import (
    Exhausted,
    VariableSelection,
    default_selection,
    nj_certificate,
    nj_search_selection,
)
from .patterns import (
    TreeKind,
    classify_tree,
    graph_of,
    is_balanced_tree_pattern,
    is_recursive_star,
    is_symmetric,
    pattern_of,
    render_pattern,
)
from .verify import run_checks

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2


def atomic_write(path, text):
    """Write ``text`` to ``path`` via a temporary file and rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read_pattern(path):
    obj = load_file(path)
    if isinstance(obj, RatMatrix):
        return pattern_of(obj)
    return obj


def _read_matrix(path):
    obj = load_file(path)
    if not isinstance(obj, RatMatrix):
        raise NilpatError(f"{path} is not a matrix file (.mat)")
    return obj


def analyze_report(P):
    lines = [f"order: {P.n}", f"kind: {P.kind.value}"]
    sym = is_symmetric(P)
    lines.append(f"symmetric: {'yes' if sym else 'no'}")
    if not sym:
        lines.append("graph: n/a (not symmetric)")
    else:
        G = graph_of(P)
        loops = ",".join(str(v) for v in sorted(G.loops)) or "none"
        lines.append(f"graph: {G.n} vertices, {len(G.edges)} edges, loops at {loops}")
        tc = classify_tree(G)
        root = f", root = {tc.root}" if tc.kind is TreeKind.BALANCED else ""
        lines.append(f"tree: {tc.kind.value}{root}")
        if is_balanced_tree_pattern(P):
            lines.append(f"balanced tree pattern, root = {tc.root}")
        else:
            lines.append("not a balanced tree pattern")
    lines.append("recursive star pattern" if is_recursive_star(P) else "not a recursive star pattern")
    return "\n".join(lines) + "\n"


def cmd_analyze(args):
    sys.stdout.write(analyze_report(_read_pattern(args.pattern)))
    return EXIT_OK


def cmd_construct(args):
    obj = evaluate(args.descriptor)
    is_matrix = isinstance(obj, RatMatrix)
    order = obj.order if is_matrix else obj.n
    fmt = args.format or ("mat" if is_matrix else "pat")
    if fmt == "mat" and not is_matrix:
        raise NilpatError("descriptor yields a pattern; --format mat needs a matrix")
    pattern = pattern_of(obj) if is_matrix else obj
    if args.out is None:
        sys.stdout.write(f"# order {order}\n")
        sys.stdout.write(render_matrix(obj) if fmt == "mat" else render_pattern(pattern))
        return EXIT_OK
    out = Path(args.out)
    written = []
    if fmt == "mat":
        mat_path = out if out.suffix == ".mat" else out.with_suffix(".mat")
        atomic_write(mat_path, render_matrix(obj))
        written.append(mat_path)
        pat_path = mat_path.with_suffix(".pat")
    else:
        pat_path = out if out.suffix == ".pat" else out.with_suffix(".pat")
    atomic_write(pat_path, render_pattern(pattern))
    written.append(pat_path)
    print(f"order {order}: wrote {', '.join(str(p) for p in written)}")
    return EXIT_OK


def cmd_index(args):
    A = _read_matrix(args.matrix)
    res = nilpotent_index(A)
    if res.nilpotent:
        full = " (full index)" if res.full_index else ""
        print(f"nilpotent: yes\nindex: {res.index}{full}\norder: {res.order}")
        return EXIT_OK
    print(f"nilpotent: no (A^{res.order} != 0)\norder: {res.order}")
    return EXIT_OK


def cmd_nj(args):
    N = _read_matrix(args.matrix)
    P = _read_pattern(args.pattern) if args.pattern else pattern_of(N)
    if args.search is not None:
        first = VariableSelection.from_flat(args.vars.split(",")) if args.vars else None
        result = nj_search_selection(N, P, args.search, first=first)
        if isinstance(result, Exhausted):
            done = "all subsets" if result.complete else f"cap reached after {result.tried}"
            print(f"verdict: Inconclusive (no certifying selection; {done})")
            return EXIT_INCONCLUSIVE
        report = result
    else:
        if args.vars:
            sel = VariableSelection.from_flat(args.vars.split(","))
        else:
            sel = default_selection(N, P)
        report = nj_certificate(N, P, sel)
    text = report.to_text()
    if args.out:
        atomic_write(args.out, text)
    sys.stdout.write(text)
    return EXIT_OK if report.certified else EXIT_INCONCLUSIVE


def cmd_verify(args):
    results = run_checks()
    for r in results:
        print(r.line())
    failed = sum(not r.ok for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_ERROR


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nilpat",
        description="Potentially nilpotent patterns and the Nilpotent-Jacobian method.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("analyze", help="classify a pattern file")
    p.add_argument("pattern", help=".pat file (a .mat file is read by its support)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="build a pattern or matrix from a descriptor")
    p.add_argument("descriptor", help="e.g. am:m=2,block=starnil:d=1,-1")
    p.add_argument("--out", help="output path; a matrix also gets a .pat beside it")
    p.add_argument("--format", choices=("pat", "mat"))
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("index", help="nilpotency and index of a matrix")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("nj", help="run the Nilpotent-Jacobian method")
    p.add_argument("matrix", help=".mat file with the nilpotent realization")
    p.add_argument("pattern", nargs="?", help=".pat file (defaults to the matrix's pattern)")
    p.add_argument("--vars", help="1-based i1,j1,...,in,jn (with --search: tried first)")
    p.add_argument("--search", type=int, metavar="CAP", help="search up to CAP selections")
    p.add_argument("--out", help="write the certificate here")
    p.set_defaults(func=cmd_nj)

    p = sub.add_parser("verify-paper", help="reproduce the published examples")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NilpatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
