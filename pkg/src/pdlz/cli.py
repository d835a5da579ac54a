"""Command-line interface: ``pdlz gen|factorize|verify|ratio|search``.

Exit status: 0 success / all checks pass, 1 a check failed or the search found a
string with z'/z > 2, 2 usage or guard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from pdlz import theory
from pdlz.config import WORKERS_ENV
from pdlz.errors import DomainError, ResourceLimitError, StructuralError
from pdlz.factor import ENGINES, factorize, render_pipes
from pdlz.lab import cross_check_engines, max_ratio_search, ratio_table, verify_lemmas, verify_structure
from pdlz.seqgen import pd_doubling

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _k_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            a, b = int(lo), int(hi)
        else:
            a = b = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected K or A..B, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _out(text: str) -> None:
    sys.stdout.write(text + "\n")


# --- gen --------------------------------------------------------------------


def cmd_gen(args) -> int:
    seq = pd_doubling(args.k).seq
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(seq)
    else:
        sys.stdout.buffer.write(seq)
        sys.stdout.flush()
    return EXIT_OK


# --- factorize --------------------------------------------------------------


def _read_input(args) -> bytes:
    if args.pd is not None:
        return pd_doubling(args.pd).seq
    if args.text is not None:
        return args.text.encode("latin-1")
    try:
        with open(args.input, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from None
    if args.strip_newline and data.endswith(b"\n"):
        data = data[:-1]
    return data


def cmd_factorize(args) -> int:
    w = _read_input(args)
    f = factorize(w, args.algo, args.engine)
    if args.format == "json":
        _out(f.to_json())
    elif args.format == "pipes":
        _out(render_pipes(f, w))
    elif args.format == "tsv":
        rows = ["index\tstart\tlen\tsrc_kind\tsrc_value\thas_sentinel\ttext"]
        for i, p in enumerate(f.phrases):
            src = "" if p.src.value is None else str(p.src.value)
            text = w[p.start : p.end].decode("latin-1")
            rows.append(f"{i}\t{p.start}\t{p.length}\t{p.src.kind.value}\t{src}\t{str(p.has_sentinel).lower()}\t{text}")
        _out("\n".join(rows))
    else:
        lines = [f"{f.scheme.value} ({args.engine}): {f.count} phrases over {len(w)} bytes (1-based positions)"]
        for i, p in enumerate(f.phrases, 1):
            src = p.src.kind.value
            if p.src.value is not None:
                src += f" {p.src.value + 1}"
            text = w[p.start : p.end].decode("latin-1")
            if len(text) > 60:
                text = text[:57] + "..."
            lines.append(f"{i:>4}  [{p.start + 1}..{p.end}]  len={p.length}  src={src}  {text}")
        _out("\n".join(lines))
    return EXIT_OK


# --- verify -----------------------------------------------------------------


def _emit_report(rep, fmt: str) -> None:
    if fmt == "json":
        _out(rep.to_json())
    elif fmt == "tsv":
        _out(rep.to_tsv())
    else:
        _out(rep.to_text())


def cmd_verify(args) -> int:
    if args.kind == "lemmas":
        lo, hi = args.k or (0, 12)
        rep = verify_lemmas(lo, hi)
    elif args.kind == "structure":
        lo, hi = args.k or (5, 16)
        if lo < theory.KSTAR_1:
            raise UsageError(f"structure checks need k >= {theory.KSTAR_1}, got {lo}")
        rep = verify_structure(lo, hi, args.engine)
    else:
        rep = cross_check_engines(args.max_len, args.trials, args.max_random_len, args.seed)
    _emit_report(rep, args.format)
    return EXIT_OK if rep.ok else EXIT_FAIL


# --- ratio ------------------------------------------------------------------


def cmd_ratio(args) -> int:
    lo, hi = args.k
    if lo < theory.KSTAR_1:
        raise UsageError(f"ratio tables start at k = {theory.KSTAR_1}, got {lo}")
    rows = ratio_table(lo, hi, args.source, args.engine)
    if args.format == "json":
        doc = {
            "source": args.source,
            "rows": [
                {"k": k, "z": z, "z_prime": zp, "ratio": _frac(r), "ratio_decimal": float(r)} for k, z, zp, r in rows
            ],
        }
        _out(json.dumps(doc))
    else:
        sep = "\t" if args.format == "tsv" else "  "
        out = [sep.join(["k", "z", "z_prime", "ratio", "ratio_decimal"])]
        for k, z, zp, r in rows:
            out.append(sep.join([str(k), str(z), str(zp), _frac(r), f"{float(r):.6f}"]))
        _out("\n".join(out))
    return EXIT_OK


def _frac(r: Fraction) -> str:
    return f"{r.numerator}/{r.denominator}"


# --- search -----------------------------------------------------------------


def cmd_search(args) -> int:
    res = max_ratio_search(args.max_len, args.engine, args.workers)
    if args.format == "json":
        _out(json.dumps(res.to_dict()))
    elif args.format == "tsv":
        out = ["z\tz_prime\tcount"]
        out += [f"{z}\t{zp}\t{c}" for (z, zp), c in res.histogram.items()]
        _out("\n".join(out))
    else:
        out = [
            f"strings (first letter 'a'): {res.n_strings}, lengths 1..{res.max_len}, engine {res.engine}",
            f"max z'/z = {_frac(res.best_ratio)} ({float(res.best_ratio):.6f})",
            f"witnesses ({len(res.witnesses)}):",
        ]
        out += [f"  {w['string']}  z={w['z']} z'={w['z_prime']}" for w in res.witnesses[:20]]
        if len(res.witnesses) > 20:
            out.append(f"  ... {len(res.witnesses) - 20} more")
        _out("\n".join(out))
    if not res.conjecture_holds:
        sys.stderr.write("!!! COUNTEREXAMPLE: z'/z > 2 or z' < z found\n")
        sys.stderr.write(json.dumps({"witnesses": list(res.witnesses[:5]), "dominance": list(res.dominance_violations[:5])}) + "\n")
        return EXIT_FAIL
    return EXIT_OK


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pdlz", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write the period-doubling sequence S_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("factorize", help="factorize a file, a literal, or S_k")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="read raw bytes from a file")
    src.add_argument("--text", help="literal input string")
    src.add_argument("--pd", type=int, metavar="K", help="use S_K")
    p.add_argument("--algo", choices=["lz77", "lzend", "cfact"], default="lzend")
    p.add_argument("--engine", choices=ENGINES, default="indexed")
    p.add_argument("--format", choices=["json", "tsv", "pipes", "text"], default="pipes")
    p.add_argument("--strip-newline", action="store_true", help="drop one trailing newline from --input")
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("verify", help="run a verification harness")
    p.add_argument("--kind", choices=["lemmas", "structure", "engines"], required=True)
    p.add_argument("--k", type=_k_range, help="k range A..B")
    p.add_argument("--engine", choices=ENGINES, default="indexed")
    p.add_argument("--format", choices=["json", "tsv", "text"], default="text")
    p.add_argument("--max-len", type=int, default=14, help="engines: exhaustive length bound")
    p.add_argument("--trials", type=int, default=1000, help="engines: random strings")
    p.add_argument("--max-random-len", type=int, default=2000, help="engines: random string length bound")
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ratio", help="tabulate z, z' and z'/z for S_k")
    p.add_argument("--k", type=_k_range, required=True)
    p.add_argument("--source", choices=["theory", "measured"], default="theory")
    p.add_argument("--engine", choices=ENGINES, default="indexed")
    p.add_argument("--format", choices=["json", "tsv", "text"], default="text")
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("search", help="exhaustive max z'/z search over binary strings")
    p.add_argument("--max-len", type=int, default=16)
    p.add_argument("--engine", choices=ENGINES, default="naive")
    p.add_argument("--format", choices=["json", "tsv", "text"], default="text")
    p.add_argument(
        "--workers", type=int, default=None, help=f"worker processes (default: ${WORKERS_ENV} or CPU count)"
    )
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, ResourceLimitError, StructuralError) as exc:
        sys.stderr.write(f"pdlz {args.command}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
