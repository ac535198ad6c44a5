"""Command line entry point: ``noc <command> ...``.

Exit status: 0 success, 1 a verification failed, 2 bad parameters,
3 malformed input file.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

import mpmath

from . import bounds, construct, count, search, verify
from .config import EnumerationCapExceeded
from .tables import TABLES, table_rows
from .words import Bipartition, Code, CodeFormatError, dumps_code, format_word, loads_code, parse_q_header, parse_word

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BAD_FILE = 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# Input helpers
# ---------------------------------------------------------------------------

def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CodeFormatError(f"cannot read {path}: {exc}") from None


def read_code(path: str) -> Code:
    return loads_code(_read_text(path))


def read_profile(path: str) -> count.CodeSizeProfile:
    """Profile file: ``q=<int>`` header, then one ``<length> <count>`` pair per line."""
    lines = []
    for raw in _read_text(path).splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise CodeFormatError("empty profile file (missing 'q=' header)")
    q = parse_q_header(lines[0])
    sizes: dict[int, int] = {}
    for line in lines[1:]:
        parts = line.replace(",", " ").replace(":", " ").split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise CodeFormatError(f"expected '<length> <count>', got {line!r}")
        length, size = int(parts[0]), int(parts[1])
        if length in sizes:
            raise CodeFormatError(f"length {length} listed twice")
        sizes[length] = size
    try:
        return count.CodeSizeProfile(q, sizes)
    except ValueError as exc:
        raise CodeFormatError(str(exc)) from None


def read_code_blocks(path: str, q: int) -> set[tuple[int, ...]]:
    """Forbidden-block file: same layout as a code file, but length-1 blocks are allowed."""
    lines = [ln.split("#", 1)[0].strip() for ln in _read_text(path).splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise CodeFormatError("empty block file (missing 'q=' header)")
    if parse_q_header(lines[0]) != q:
        raise CodeFormatError(f"block file alphabet does not match q={q}")
    blocks = {parse_word(ln, q) for ln in lines[1:]}
    if len({len(b) for b in blocks}) > 1:
        raise CodeFormatError("forbidden blocks must share one length")
    return blocks


def _symbols(text: str) -> frozenset[int]:
    try:
        return frozenset(int(s) for s in text.split(",") if s.strip())
    except ValueError:
        raise UsageError(f"bad symbol list {text!r}") from None


def _bipartition(args: argparse.Namespace) -> Bipartition:
    if args.i is not None or args.j is not None:
        if args.isize is not None:
            raise UsageError("give either --i/--j or --isize, not both")
        if args.i is None:
            raise UsageError("--j needs --i")
        I = _symbols(args.i)
        J = _symbols(args.j) if args.j is not None else frozenset(range(args.q)) - I
        bp = Bipartition(I, J)
        if args.q is not None and bp.q != args.q:
            raise UsageError(f"bipartition covers Z_{bp.q}, but --q {args.q}")
        return bp
    if args.q is None:
        raise UsageError("--q is required")
    return Bipartition.canonical(args.q, 1 if args.isize is None else args.isize)


def _sizes(args: argparse.Namespace) -> tuple[int, int]:
    if args.q is None:
        raise UsageError("--q is required")
    isize = 1 if args.isize is None else args.isize
    if not 1 <= isize <= args.q - 1:
        raise UsageError(f"--isize must lie in 1..{args.q - 1}")
    return isize, args.q - isize


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"missing required option(s): {', '.join(missing)}")


def _write_atomic(path: str, text: str) -> None:
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=f".{target.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit_json(command: str, params: dict[str, Any], values: dict[str, Any]) -> None:
    print(json.dumps({"command": command, "params": params, "values": values}, indent=2))


def _fraction_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_construct(args: argparse.Namespace) -> int:
    kind = args.kind
    params: dict[str, Any] = {"n": args.n, "k": args.k}
    if kind == "i":
        _require(args, "n", "q", "k")
        code = construct.construction_I(args.n, args.q, args.k)
        params["q"] = args.q
    elif kind == "ii":
        _require(args, "n", "k")
        if args.q not in (None, 2):
            raise UsageError("construction ii is binary (q=2)")
        code = construct.construction_II(args.n, args.k)
        params["q"] = 2
    else:
        _require(args, "n")
        bp = _bipartition(args)
        params.update(q=bp.q, I=sorted(bp.I), J=sorted(bp.J))
        if kind == "ia":
            if args.c is not None:
                blocks = read_code_blocks(args.c, bp.q)
                k = len(next(iter(blocks))) if blocks else (args.k or 1)
                forbidden = construct.ForbiddenSet(k, frozenset(blocks))
            else:
                forbidden = construct.ForbiddenSet.power(bp.I, args.k or 1)
            params["k"] = forbidden.k
            code = construct.construction_IA(args.n, bp, forbidden)
        elif kind == "i-prime":
            _require(args, "k")
            code = construct.construction_I_prime(args.n, bp, args.k)
        else:
            _require(args, "k")
            code = construct.construction_II_prime(args.n, bp, args.k)

    text = dumps_code(code)
    echo = f"construction {kind}: " + " ".join(f"{k}={v}" for k, v in params.items()) + f" size={len(code)}"
    if args.out:
        _write_atomic(args.out, text)
        print(echo)
    else:
        sys.stdout.write(text)
        print(echo, file=sys.stderr)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    code = read_code(args.infile)
    ok = True
    witness = verify.find_overlap(code)
    if witness is None:
        print(f"non-overlapping: yes ({len(code)} words, q={code.q})")
    else:
        ok = False
        print("non-overlapping: no")
        print(f"witness: kind={witness.kind} u={format_word(witness.u, code.q)} "
              f"v={format_word(witness.v, code.q)} overlap={format_word(witness.overlap, code.q)}")
    if args.expandable and ok:
        x = verify.find_expansion(code)
        if x is None:
            print("non-expandable: yes")
        else:
            ok = False
            print("non-expandable: no")
            print(f"expansion: {format_word(x, code.q)}")
    return EXIT_OK if ok else EXIT_FAILED


def _profile_from_args(args: argparse.Namespace) -> count.CodeSizeProfile:
    if (args.profile is None) == (args.code is None):
        raise UsageError("give exactly one of --profile or --code")
    if args.profile is not None:
        return read_profile(args.profile)
    code = read_code(args.code)
    if not args.assume_valid:
        witness = verify.find_overlap(code)
        if witness is not None:
            raise UsageError(f"code is overlapping ({witness.kind} overlap "
                             f"{format_word(witness.overlap, code.q)}); pass --assume-valid to skip this check")
    return count.CodeSizeProfile.of(code)


def cmd_count(args: argparse.Namespace) -> int:
    what = args.what
    params: dict[str, Any]
    values: dict[str, Any]
    if what in ("u", "s", "r", "v", "vcal"):
        _require(args, "q", "k", "n")
        isize, jsize = _sizes(args)
        fn = {"u": count.u_count, "s": count.s_count, "r": count.r_count,
              "v": count.v_count, "vcal": count.vcal_count}[what]
        params = {"q": args.q, "isize": isize, "k": args.k, "n": args.n}
        value = fn(isize, jsize, args.k, args.n)
        values = {"value": value}
        text = str(value)
    elif what == "b":
        _require(args, "m")
        profile = _profile_from_args(args)
        params = {"q": profile.q, "profile": {str(i): s for i, s in profile.sizes.items()}, "m": args.m}
        value = count.b_count_recurrence(profile, args.m)
        values = {"value": value}
        text = str(value)
    elif what == "epsilon":
        _require(args, "k")
        res = count.epsilon_k(args.k, args.tol)
        params = {"k": args.k, "tolerance": args.tol}
        values = {"epsilon": mpmath.nstr(res.epsilon, 20), "y0": mpmath.nstr(res.y0, 20)}
        text = f"epsilon={values['epsilon']}\ny0={values['y0']}"
    else:
        _require(args, "q", "k")
        rate = count.growth_rate(args.q, args.k, args.family)
        params = {"q": args.q, "k": args.k, "family": args.family}
        values = {"value": mpmath.nstr(rate, 20)}
        text = values["value"]
    if args.json:
        _emit_json(f"count {what}", params, values)
    else:
        print(text)
    return EXIT_OK


def cmd_bound(args: argparse.Namespace) -> int:
    what = args.what
    _require(args, "n")
    params: dict[str, Any] = {"n": args.n}
    argmin = None
    if what in ("lev", "chee"):
        _require(args, "q")
        params["q"] = args.q
        bv = (bounds.levenshtein_bound if what == "lev" else bounds.chee_bound)(args.n, args.q)
    else:
        profile = _profile_from_args(args)
        params.update(q=profile.q, profile={str(i): s for i, s in profile.sizes.items()})
        if what == "recursive":
            _require(args, "m")
            params["m"] = args.m
            bv = bounds.recursive_bound(profile, args.n, args.m)
        else:
            bv, argmin = bounds.recursive_bound_min(profile, args.n)
    values: dict[str, Any] = {
        "exact": _fraction_text(bv.exact),
        "integer_bound": bv.integer_bound,
        "strict": bv.strict,
    }
    if what == "recursive-min":
        values["argmin_m"] = argmin
    if args.json:
        _emit_json(f"bound {what}", params, values)
    else:
        print(f"exact={values['exact']}")
        print(f"integer_bound={values['integer_bound']}")
        print(f"strict={'yes' if bv.strict else 'no'}")
        if argmin is not None:
            print(f"argmin_m={argmin}")
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    res = search.max_code_exhaustive(args.n, args.q, node_limit=args.node_limit)
    if args.out:
        _write_atomic(args.out, dumps_code(res.witness))
    values = {
        "max_size": res.max_size,
        "complete": res.complete,
        "nodes_explored": res.nodes_explored,
        "witness": [format_word(w, res.q) for w in res.witness],
    }
    if args.json:
        _emit_json("search", {"n": args.n, "q": args.q, "node_limit": args.node_limit}, values)
    else:
        print(res.max_size)
        if not res.complete:
            print(f"node limit reached after {res.nodes_explored} nodes: lower bound only", file=sys.stderr)
    return EXIT_OK


def render_table(table_id: int, fmt: str) -> str:
    spec = TABLES[table_id]
    rows = table_rows(table_id)
    if fmt == "json":
        return json.dumps({
            "command": "tables",
            "params": {"table": table_id, "q": spec.q},
            "values": [dict(zip(spec.header, r)) for r in rows],
        }, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(spec.header)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_tables(args: argparse.Namespace) -> int:
    ids = list(TABLES) if args.table is None else [args.table]
    if len(ids) > 1 and args.out:
        raise UsageError("--out needs a single --table")
    for tid in ids:
        text = render_table(tid, args.format)
        if args.out:
            _write_atomic(args.out, text)
        else:
            if len(ids) > 1:
                print(f"# table {tid} (q={TABLES[tid].q})")
            sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _add_bipartition(p: argparse.ArgumentParser) -> None:
    p.add_argument("--i", help="comma-separated symbols of I")
    p.add_argument("--j", help="comma-separated symbols of J (default: the rest of Z_q)")
    p.add_argument("--isize", type=int, help="use I = {0..isize-1}, J = the rest")


def _add_profile(p: argparse.ArgumentParser) -> None:
    p.add_argument("--profile", help="profile file: 'q=<int>' then '<length> <count>' lines")
    p.add_argument("--code", help="code file; its length profile is used")
    p.add_argument("--assume-valid", action="store_true", help="skip the non-overlap check of --code")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="noc", description="q-ary non-overlapping codes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code")
    p.add_argument("kind", choices=["i", "ia", "i-prime", "ii", "ii-prime"])
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int)
    _add_bipartition(p)
    p.add_argument("--c", help="forbidden-block file for construction ia (default: I^k)")
    p.add_argument("--out", help="write the code here instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check the non-overlapping property")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--expandable", action="store_true", help="also test non-expandability")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="exact cardinalities and growth constants")
    p.add_argument("what", choices=["u", "s", "r", "v", "vcal", "b", "epsilon", "rate"])
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--isize", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--family", choices=["fixed", "variable"], default="fixed")
    _add_profile(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bound", help="upper bounds")
    p.add_argument("what", choices=["lev", "chee", "recursive", "recursive-min"])
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--m", type=int)
    _add_profile(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("search", help="exhaustive maximum code search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--node-limit", type=int)
    p.add_argument("--out", help="write the witness code here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("tables", help="reference tables of code sizes")
    p.add_argument("--table", type=int, choices=sorted(TABLES))
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CodeFormatError as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return EXIT_BAD_FILE
    except (UsageError, EnumerationCapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
