"""Construction descriptors used on the command line.

Grammar::

    am:m=<int>,block=<block>      A_m of the block (pattern or matrix)
    cm:m=<int>,block=<block>      C_m of the block
    star:s=<int>                  Z_s
    tridiag:n=<int>               T_n
    starnil:d=<q1>,<q2>,...       nilpotent star matrix with that diagonal
    perm:p=<i1>,...,block=<block> P B P^T for a pattern block

``<block>`` is a nested descriptor, a path to a ``.pat``/``.mat`` file, or a
builtin name (``T5P``, ``Z<s>``, ``T<n>``).  ``block`` and list-valued keys
swallow the rest of the string, so nesting needs no brackets.
"""

import os
from pathlib import Path

from .constructions import (
    T5P,
    build_Am_matrix,
    build_Am_pattern,
    build_Cm_matrix,
    build_Cm_pattern,
    solve_star_nilpotent,
    star_pattern,
    tridiagonal_pattern,
)
from .errors import DescriptorError, NilpatError
from .matrix import RatMatrix, parse_matrix
from .patterns import Pattern, Permutation, parse_pattern, permute

DEFAULT_MAX_ORDER = 64
_GREEDY = {"block", "d"}


def max_order():
    raw = os.environ.get("NILPAT_MAX_ORDER", "")
    try:
        return int(raw) if raw.strip() else DEFAULT_MAX_ORDER
    except ValueError:
        raise DescriptorError(f"NILPAT_MAX_ORDER is not an integer: {raw!r}") from None


def check_order(n):
    limit = max_order()
    if n > limit:
        raise DescriptorError(f"order {n} exceeds NILPAT_MAX_ORDER={limit}")


def _params(body):
    out = {}
    rest = body
    while rest:
        key, eq, tail = rest.partition("=")
        key = key.strip()
        if not eq or not key:
            raise DescriptorError(f"expected key=value in {body!r}")
        if key in _GREEDY:
            out[key] = tail
            break
        if key == "p":
            # a permutation list runs up to the block it applies to
            value, sep, rest = tail.partition(",block=")
            out["p"] = value
            rest = "block=" + rest if sep else ""
            continue
        value, _, rest = tail.partition(",")
        out[key] = value
    return out


def _int(params, key, kind):
    try:
        return int(params[key])
    except KeyError:
        raise DescriptorError(f"{kind}: missing {key}=") from None
    except ValueError:
        raise DescriptorError(f"{kind}: {key} must be an integer") from None


def load_block(text):
    text = text.strip()
    if ":" in text and not Path(text).is_file():
        return evaluate(text)
    path = Path(text)
    if path.suffix in (".pat", ".mat") or path.is_file():
        return load_file(path)
    if text == "T5P":
        return T5P
    if text[:1] in ("Z", "T") and text[1:].isdigit():
        k = int(text[1:])
        return star_pattern(k) if text[0] == "Z" else tridiagonal_pattern(k)
    raise DescriptorError(f"unknown block {text!r}")


def load_file(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DescriptorError(f"cannot read {path}: {exc}") from exc
    obj = parse_matrix(text) if path.suffix == ".mat" else parse_pattern(text)
    check_order(obj.rows if isinstance(obj, RatMatrix) else obj.n)
    return obj


def _order(obj):
    return obj.order if isinstance(obj, RatMatrix) else obj.n


def evaluate(descriptor):
    """Evaluate a descriptor to a :class:`Pattern` or :class:`RatMatrix`."""
    kind, colon, body = descriptor.strip().partition(":")
    if not colon:
        raise DescriptorError(f"not a descriptor: {descriptor!r}")
    params = _params(body)
    try:
        if kind == "star":
            s = _int(params, "s", kind)
            check_order(s)
            return star_pattern(s)
        if kind == "tridiag":
            n = _int(params, "n", kind)
            check_order(n)
            return tridiagonal_pattern(n)
        if kind == "starnil":
            if "d" not in params:
                raise DescriptorError("starnil: missing d=")
            d = [tok for tok in params["d"].split(",") if tok.strip()]
            check_order(len(d) + 1)
            return solve_star_nilpotent(d)
        if kind in ("am", "cm"):
            m = _int(params, "m", kind)
            if "block" not in params:
                raise DescriptorError(f"{kind}: missing block=")
            block = load_block(params["block"])
            s = _order(block)
            check_order(m * s + 1 if kind == "am" else m * s)
            if kind == "am":
                if isinstance(block, Pattern):
                    return build_Am_pattern(block, m)
                return build_Am_matrix([block] * m)
            if isinstance(block, Pattern):
                return build_Cm_pattern(block, m)
            return build_Cm_matrix(block, m)
        if kind == "perm":
            if "p" not in params or "block" not in params:
                raise DescriptorError("perm: needs p=... and block=")
            block = load_block(params["block"])
            if not isinstance(block, Pattern):
                raise DescriptorError("perm: block must be a pattern")
            perm = Permutation(tuple(int(v) for v in params["p"].split(",")))
            return permute(block, perm)
    except NilpatError:
        raise
    except ValueError as exc:
        raise DescriptorError(f"{kind}: {exc}") from exc
    raise DescriptorError(f"unknown construction {kind!r}")
