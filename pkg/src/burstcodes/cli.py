"""Command-line front end.

Exit codes: 0 success, 1 usage error or refusal, 2 verification
counterexample, 3 decode failure.  Reports are JSON, tables CSV, codebooks
the text format of ``codebook``.  BURSTCODES_BUDGET raises or lowers the
exhaustive enumeration limit.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from pathlib import Path

from . import analysis, code_general, code_tt, syncomp
from .channel import BallDump, BurstPattern, apply
from .codebook import Codebook
from .seqcore import bits, from_int, to_str

OK, USAGE, COUNTEREXAMPLE, DECODE_FAIL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _word(s: str, n: int | None = None) -> tuple:
    try:
        x = bits(s)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if n is not None and len(x) != n:
        raise UsageError(f"word has length {len(x)}, expected {n}")
    return x


# ball ------------------------------------------------------------------------

def cmd_ball(args) -> int:
    x = _word(args.x, args.n)
    model = args.model.upper()
    if model == "DS" and args.variant not in ("definition", "partition"):
        raise UsageError("the DS model has no variants")
    variant = args.variant if model == "DI" else "definition"
    out = analysis.outputs(int(to_str(x), 2), len(x), args.m, args.t1, args.t2, model, variant)
    ny = len(x) - args.m * (args.t1 - args.t2 if model == "DI" else args.t1)
    dump = BallDump(len(x), args.m, args.t1, args.t2, model, variant,
                    [from_int(y, ny) for y in out])
    sys.stdout.write(dump.dumps())
    return OK


# verify ----------------------------------------------------------------------

def _lemma4_report(n: int, t: int):
    from .seqcore import all_words
    checked = 0
    for x in all_words(n):
        bad = code_tt.lemma4_violations(x, t)
        checked += 1
        if bad:
            i, b, changed = bad[0]
            return analysis.Report("lemma4", {"n": n, "t": t}, False, {"words": checked},
                                   [to_str(x), f"burst at {i} block {to_str(b)} changes symbols {changed}"])
    return analysis.Report("lemma4", {"n": n, "t": t}, True, {"words": checked})


def cmd_verify(args) -> int:
    th, n, t1, t2 = args.theorem, args.n, args.t1, args.t2
    if th in ("1", "2", "bounds") and args.variant not in analysis.VARIANTS:
        raise UsageError(f"unknown variant {args.variant!r}")
    try:
        if th == "1":
            rep = analysis.verify_thm1(n, t1, t2, args.variant)
        elif th == "2":
            rep = analysis.verify_thm2(n, t1, t2, args.variant)
        elif th == "eq7":
            rep = analysis.verify_eq7(n, t1, t2)
        elif th == "bounds":
            rep = analysis.verify_bounds(n, t1, t2, args.variant)
        elif th == "lemma4":
            if n > analysis.exhaustive_limit():
                raise analysis.BudgetExceeded(f"n={n} exceeds exhaustive budget")
            rep = _lemma4_report(n, args.t if args.t is not None else t1)
        else:  # obs2
            res = code_general.obs2_sweep(n, t1, t2)
            ex = res["example"]
            rep = analysis.Report("obs2", {"n": n, "t1": t1, "t2": t2}, res["violations"] == 0,
                                  {"checked": res["checked"], "violations": res["violations"]},
                                  None if ex is None else [to_str(ex["x"]), f"burst at {ex['i']}",
                                                           to_str(ex["block"])])
    except analysis.BudgetExceeded as e:
        _emit({"check": th, "refused": str(e)})
        return USAGE
    except ValueError as e:
        if "budget" in str(e):
            _emit({"check": th, "refused": str(e)})
            return USAGE
        raise UsageError(str(e)) from None
    print(rep.to_json())
    return OK if rep.passed else COUNTEREXAMPLE


# tables ------------------------------------------------------------------------

def cmd_bounds(args) -> int:
    try:
        rep = analysis.bounds(args.n, args.t1, args.t2)
    except ValueError as e:
        raise UsageError(str(e)) from None
    body = {"n": str(args.n), "t1": str(args.t1), "t2": str(args.t2), **rep.to_dict()}
    body["ball_closed_form"] = str(analysis.ball_size_closed_form(args.n, args.t1, args.t2))
    _emit(body)
    return OK


TABLE_COLUMNS = ("row", "n", "t1", "t2", "t_prime", "di", "di_log2", "paper_di",
                 "ds", "ds_log2", "paper_ds")


def complexity_csv() -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(TABLE_COLUMNS)
    for r in syncomp.table1_rows():
        vals = []
        for k in TABLE_COLUMNS:
            v = r[k]
            vals.append(f"{v:.3f}" if isinstance(v, float) else str(v))
        wr.writerow(vals)
    return buf.getvalue()


def cmd_complexity_table(args) -> int:
    if args.format == "json":
        rows = [{k: (round(v, 3) if isinstance(v, float) else str(v)) for k, v in r.items()}
                for r in syncomp.table1_rows()]
        _emit(rows)
    else:
        sys.stdout.write(complexity_csv())
    return OK


# build / encode / decode ----------------------------------------------------------

def _side_path(book: Path) -> Path:
    return book.with_name(book.name + ".side.json")


def cmd_build(args) -> int:
    out = Path(args.out)
    if args.kind == "tt":
        code = code_tt.build_code_tt(args.n, args.t)
        book = code_tt.enumerate_code(code)
        out.write_text(book.dumps())
        _emit({"codebook": str(out), "size": str(len(book)), **{k: str(v) for k, v in code.meta().items()}})
        return OK
    try:
        book, side = code_general.encode_general(args.n, args.t1, args.t2, args.d,
                                                 rho1=args.rho1, rho2=args.rho2)
    except ValueError as e:
        raise UsageError(str(e)) from None
    out.write_text(book.dumps())
    _side_path(out).write_text(side.to_json() + "\n")
    _emit({"codebook": str(out), "side_info": str(_side_path(out)), "size": str(len(book)),
           **{k: str(v) for k, v in side.params.meta().items()}})
    return OK


def _load(path: str) -> Codebook:
    try:
        return Codebook.loads(Path(path).read_text())
    except (OSError, ValueError) as e:
        raise UsageError(f"cannot read codebook {path}: {e}") from None


def cmd_encode(args) -> int:
    book = _load(args.codebook)
    try:
        print(to_str(book.encode(args.msg)))
    except IndexError as e:
        raise UsageError(str(e)) from None
    return OK


def _decoder(book: Codebook, side_file):
    kind = book.meta.get("construction")
    if kind == "tt":
        n, t = book.meta["n"], book.meta["t"]
        code = code_tt.build_code_tt(n, t, book.meta["u"] if isinstance(book.meta["u"], tuple)
                                     else (book.meta["u"],))

        def dec(y):
            x = code_tt.decode_tt(y, code)
            if x is None:
                raise code_general.DecodeError(code_general.UNDECODABLE, "coset decoder failed")
            return x
        return dec, t, t
    if kind == "general":
        try:
            side = code_general.SideInfo.from_json(Path(side_file).read_text())
        except (OSError, ValueError, KeyError) as e:
            raise UsageError(f"cannot read side info {side_file}: {e}") from None
        return (lambda y: code_general.decode_general(y, side)), side.params.t1, side.params.t2
    raise UsageError(f"unknown construction {kind!r}")


def cmd_decode(args) -> int:
    book = _load(args.codebook)
    dec, _, _ = _decoder(book, args.side or _side_path(Path(args.codebook)))
    y = _word(args.y)
    try:
        x = dec(y)
    except code_general.DecodeError as e:
        _emit({"error": e.reason, "detail": str(e)})
        return DECODE_FAIL
    print(to_str(x))
    return OK


def _random_pattern(rng: random.Random, x, t1: int, t2: int):
    """A uniformly drawn legal two-burst (t1,t2)-DI pattern on x (None if none)."""
    pats = list(code_general.two_burst_patterns(x, t1, t2))
    return rng.choice(pats) if pats else None


def cmd_roundtrip(args) -> int:
    book = _load(args.codebook)
    dec, t1, t2 = _decoder(book, args.side or _side_path(Path(args.codebook)))
    rng = random.Random(args.seed)
    trials = failures = 0
    first = None
    for _ in range(args.samples):
        if not len(book):
            break
        x = book.words[rng.randrange(len(book))]
        pat = _random_pattern(rng, x, t1, t2)
        if pat is None:
            continue
        (q1, b1), (q2, b2) = pat
        y = apply(x, BurstPattern.of((q1, t1, b1), (q2, t1, b2)))
        trials += 1
        try:
            ok = dec(y) == x
        except code_general.DecodeError:
            ok = False
        if not ok:
            failures += 1
            first = first or [to_str(x), to_str(y)]
    _emit({"seed": str(args.seed), "trials": str(trials), "failures": str(failures),
           "counterexample": first})
    return OK if failures == 0 else DECODE_FAIL


# parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="burstcodes", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("ball", help="print the error ball of a word")
    b.add_argument("--x", required=True)
    b.add_argument("--n", type=int)
    b.add_argument("--m", type=int, default=2)
    b.add_argument("--t1", type=int, required=True)
    b.add_argument("--t2", type=int, required=True)
    b.add_argument("--model", choices=("di", "ds", "DI", "DS"), default="di")
    b.add_argument("--variant", default="partition", choices=analysis.VARIANTS)
    b.set_defaults(func=cmd_ball)

    v = sub.add_parser("verify", help="run an exhaustive check")
    v.add_argument("--theorem", required=True, choices=("1", "2", "eq7", "obs2", "lemma4", "bounds"))
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--t1", type=int, default=2)
    v.add_argument("--t2", type=int, default=1)
    v.add_argument("--t", type=int, help="burst length for lemma4 (default t1)")
    v.add_argument("--variant", default="definition")
    v.set_defaults(func=cmd_verify)

    bd = sub.add_parser("bounds", help="lower and upper code size bounds")
    bd.add_argument("--n", type=int, required=True)
    bd.add_argument("--t1", type=int, required=True)
    bd.add_argument("--t2", type=int, required=True)
    bd.set_defaults(func=cmd_bounds)

    ct = sub.add_parser("complexity-table", help="neighbourhood sizes for the comparison grid")
    ct.add_argument("--format", choices=("csv", "json"), default="csv")
    ct.set_defaults(func=cmd_complexity_table)

    bu = sub.add_parser("build", help="build a codebook file")
    bu.add_argument("kind", choices=("tt", "general"))
    bu.add_argument("--n", type=int, required=True)
    bu.add_argument("--t", type=int, default=2)
    bu.add_argument("--t1", type=int, default=3)
    bu.add_argument("--t2", type=int, default=1)
    bu.add_argument("--d", type=float, default=1.5)
    bu.add_argument("--rho1", type=int, default=4)
    bu.add_argument("--rho2", type=int, default=6)
    bu.add_argument("--out", required=True)
    bu.set_defaults(func=cmd_build)

    e = sub.add_parser("encode", help="message index to codeword")
    e.add_argument("--codebook", required=True)
    e.add_argument("--msg", type=int, required=True)
    e.set_defaults(func=cmd_encode)

    d = sub.add_parser("decode", help="decode a corrupted word")
    d.add_argument("--codebook", required=True)
    d.add_argument("--side")
    d.add_argument("--y", required=True)
    d.set_defaults(func=cmd_decode)

    r = sub.add_parser("roundtrip", help="sampled corrupt-and-decode check")
    r.add_argument("--codebook", required=True)
    r.add_argument("--side")
    r.add_argument("--samples", type=int, default=200)
    r.add_argument("--seed", type=int, default=0)
    r.set_defaults(func=cmd_roundtrip)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.func(args)
    except UsageError as e:
        print(f"burstcodes: error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
