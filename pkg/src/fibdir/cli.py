"""Command-line front end: ``fibdir <command> ...`` (also ``python -m fibdir``).

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 computation
error (an error object is written to stdout).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import mpmath

from . import config
from .errors import ConfigError, FibdirError
from .golden import GoldenNum
from .sequences import SeqId, delta_exact, seq_term
from .verification.report import SCHEMA_VERSION, fmt_num
from .zeckendorf import ZeckWord, zeck_decode, zeck_encode

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2, 3
SUITE_CHOICES = ("arithmetic", "sequences", "sets", "functional_equations", "residues",
                 "theorem2", "poles", "zeta_relation", "k_limits", "continuation", "all")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    S = argparse.SUPPRESS
    p.add_argument("--precision", type=int, default=S, help="working precision in bits")
    p.add_argument("--terms", type=int, default=S, help="summation cutoff N")
    p.add_argument("--tol", type=float, default=S, help="target absolute tolerance")
    p.add_argument("--threads", type=int, default=S, help="worker threads for bulk sums")
    p.add_argument("--output", choices=("text", "json", "csv"), default=S)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = _Parser(prog="fibdir", parents=[common],
                 description="Zeckendorf sequences and their Dirichlet series.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    z = sub.add_parser("zeck", parents=[common], help="Zeckendorf codec")
    zsub = z.add_subparsers(dest="action", required=True, parser_class=_Parser)
    e = zsub.add_parser("encode", parents=[common])
    e.add_argument("n", type=int)
    d = zsub.add_parser("decode", parents=[common])
    d.add_argument("word")

    s = sub.add_parser("seq", parents=[common], help="emit sequence terms")
    s.add_argument("id", choices=[x.value for x in SeqId])
    s.add_argument("--from", dest="start", type=int, default=1)
    s.add_argument("--to", dest="stop", type=int, default=20)

    dl = sub.add_parser("delta", parents=[common], help="exact delta(n) and delta'(n)")
    dl.add_argument("n", type=int)
    dl.add_argument("--float", dest="as_float", action="store_true")

    se = sub.add_parser("series", parents=[common], help="evaluate Dirichlet series")
    ssub = se.add_subparsers(dest="action", required=True, parser_class=_Parser)
    ev = ssub.add_parser("eval", parents=[common])
    ev.add_argument("name", choices=["F", "G", "H", "I", "J", "P", "Q", "K"])
    ev.add_argument("--re", dest="re", required=True)
    ev.add_argument("--im", dest="im", default="0")
    ev.add_argument("--k-variant", type=int, choices=[0, 1, 2, 3], default=3)
    ev.add_argument("--a", default="1", help="GoldenNum, e.g. 'beta' or '0,1'")
    ev.add_argument("--b", default="2/5,1/5", help="GoldenNum, default beta/sqrt5 = (2+beta)/5")
    ev.add_argument("--base", type=float, default=2.0, help="direct-summation threshold for Re(s)")
    rs = ssub.add_parser("residue", parents=[common])
    rs.add_argument("name", choices=["F", "G", "H", "I", "J"])
    rs.add_argument("--at", default="1", help="lattice point, real part only or 're,im'")
    rs.add_argument("--eps", type=float, default=1e-3)

    po = sub.add_parser("poles", parents=[common], help="zeros of 1 - 2 beta^-s + beta^-3s")
    po.add_argument("--k-min", type=int, default=-3)
    po.add_argument("--k-max", type=int, default=3)

    ve = sub.add_parser("verify", parents=[common], help="run an identity suite")
    ve.add_argument("--suite", required=True, choices=SUITE_CHOICES)
    ve.add_argument("--n-max", type=int, default=None)

    cc = sub.add_parser("crosscheck", parents=[common], help="compare against a b-file")
    cc.add_argument("--bfile", required=True)
    cc.add_argument("--seq", required=True, choices=[x.value for x in SeqId])
    cc.add_argument("--coding", default=None, help="value map, e.g. '1:0,2:1,3:2'")
    cc.add_argument("--limit", type=int, default=None)
    cc.add_argument("--offset", type=int, default=None)
    return ap


# -- rendering ---------------------------------------------------------------------------

def _config_echo(settings, output: str) -> dict:
    return {"precision_bits": settings.precision_bits, "terms": settings.terms,
            "tol": repr(settings.tol), "threads": settings.threads, "output": output}


def _emit(out, fmt: str, command: str, cfg: dict, rows: list[dict], text_lines: list[str]):
    if fmt == "json":
        payload = {"schema_version": SCHEMA_VERSION, "command": command, "config": cfg,
                   "result": rows}
        out.write(json.dumps(payload, indent=2) + "\n")
    elif fmt == "csv":
        keys: list[str] = []
        for r in rows:
            keys += [k for k in r if k not in keys]
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: r.get(k, "") for k in keys})
        out.write(buf.getvalue())
    else:
        out.write("\n".join(text_lines) + "\n")


def _complex_arg(re_text: str, im_text: str):
    try:
        return mpmath.mpc(mpmath.mpf(re_text), mpmath.mpf(im_text))
    except (ValueError, TypeError):
        raise ConfigError(f"cannot read s = {re_text} + {im_text}i") from None


def _eval_row(res, digits: int) -> dict:
    d = res.as_dict(digits)
    return {"re": d["value"]["re"], "im": d["value"]["im"], "error_bound": d["error_bound"],
            "terms_used": d["terms_used"], "method": d["method"],
            "truncation_m": d["truncation_m"]}


# -- commands ----------------------------------------------------------------------------

def _cmd_zeck(args, settings):
    if args.action == "encode":
        w = zeck_encode(args.n)
        return [{"n": args.n, "word": str(w)}], [str(w)]
    w = ZeckWord.parse(args.word)
    n = zeck_decode(w)
    return [{"word": args.word, "n": n}], [str(n)]


def _cmd_seq(args, settings):
    if args.start < 1 or args.stop < args.start:
        raise ConfigError("need 1 <= --from <= --to")
    rows, lines = [], []
    for n in range(args.start, args.stop + 1):
        v = seq_term(args.id, n)
        rows.append({"n": n, "value": v})
        lines.append(f"{n} {v}")
    return rows, lines


def _cmd_delta(args, settings):
    pair = delta_exact(args.n)
    row = {"n": args.n}
    lines = []
    for key, val in (("delta", pair.delta), ("delta_prime", pair.delta_prime)):
        x, y = val.as_pair()
        row[f"{key}_x"], row[f"{key}_y"] = x, y
        line = f"{key} = {val}"
        if args.as_float:
            prec = settings.precision_bits
            f = val.to_mpf(prec)
            digits = int(prec * 0.30103)
            bound = mpmath.mpf(2) ** -(prec - 1) * abs(f)
            row[f"{key}_float"] = mpmath.nstr(f, digits)
            row[f"{key}_error_bound"] = mpmath.nstr(bound, 3)
            line += f"  ~ {mpmath.nstr(f, digits)} +- {mpmath.nstr(bound, 3)}"
        lines.append(line)
    return [row], lines


def _cmd_series(args, settings):
    from .dirichlet import k_eval, p_eval, q_eval, residue_at, series_value
    from .dirichlet.numerics import as_complex

    digits = int(settings.precision_bits * 0.30103)
    if args.action == "residue":
        parts = args.at.split(",")
        s0 = _complex_arg(parts[0], parts[1] if len(parts) > 1 else "0")
        r = residue_at(args.name, s0, eps=args.eps, prec=settings.precision_bits)
        # Richardson over (eps, eps/2) leaves an O(eps^2) remainder
        bound = mpmath.mpf(args.eps) ** 2 * 10
        r = as_complex(r)
        row = {"series": args.name, "at": str(args.at), "re": mpmath.nstr(r.real, 12),
               "im": mpmath.nstr(r.imag, 12), "error_bound": mpmath.nstr(bound, 3),
               "method": "residue_richardson"}
        line = f"residue {args.name} at {args.at}: {fmt_num(r, 12)} +- {mpmath.nstr(bound, 3)}"
        return [row], [line]

    s = _complex_arg(args.re, args.im)
    tol = settings.tol
    if args.name == "P":
        res = p_eval(s, tol=tol, N=settings.terms, prec=settings.precision_bits)
    elif args.name == "Q":
        res = q_eval(s, tol=tol, N=settings.terms, prec=settings.precision_bits)
    elif args.name == "K":
        res = k_eval(args.k_variant, GoldenNum.parse(args.a), GoldenNum.parse(args.b), s,
                     tol=tol, N=settings.terms, prec=settings.precision_bits)
    else:
        res = series_value(args.name, s, tol=tol, base=args.base, N=settings.terms,
                           prec=settings.precision_bits)
    row = {"series": args.name, "s_re": args.re, "s_im": args.im, **_eval_row(res, digits)}
    line = (f"{args.name}({args.re}{'+' if not args.im.startswith('-') else ''}{args.im}i) = "
            f"{fmt_num(mpmath.mpc(res.value), digits)} +- {mpmath.nstr(res.error_bound, 3)}"
            f"  [method={res.method} terms={res.terms_used} m={res.truncation_m}]")
    return [row], [line]


def _cmd_poles(args, settings):
    from .dirichlet import pole_zeros

    pts = pole_zeros(args.k_min, args.k_max, prec=settings.precision_bits)
    rows, lines = [], []
    for p in pts:
        re, im = mpmath.nstr(p.s.real, 30), mpmath.nstr(p.s.imag, 30)
        res = mpmath.nstr(p.residual, 3)
        rows.append({"line": p.line, "k": p.k, "re": re, "im": im, "residual": res})
        lines.append(f"{p.line:<9} k={p.k:+d}  s = {fmt_num(mpmath.mpc(p.s), 30)}  |D(s)| = {res}")
    return rows, lines


def _cmd_verify(args, settings, fmt, out):
    from .verification.suites import SUITES, run_suite

    names = [n for n in SUITES] if args.suite == "all" else [args.suite]
    failed = False
    docs = []
    for name in names:
        rep = run_suite(name, n_max=args.n_max, precision_bits=settings.precision_bits,
                        terms=None if args.terms_default else settings.terms,
                        tol=None if args.tol_default else settings.tol)
        failed |= not rep.ok
        docs.append(rep)
    cfg = _config_echo(settings, fmt)
    if fmt == "json":
        payload = [dict(r.to_dict(), config=cfg) for r in docs]
        out.write(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2) + "\n")
    elif fmt == "csv":
        for i, r in enumerate(docs):
            text = r.to_csv()
            out.write(text if i == 0 else text.split("\n", 1)[1])
    else:
        out.write("\n".join(r.to_text() for r in docs) + "\n")
    return EXIT_VERIFY if failed else EXIT_OK


def _cmd_crosscheck(args, settings, fmt, out):
    from .verification.crosscheck import bfile_crosscheck

    rep = bfile_crosscheck(args.bfile, args.seq, coding=args.coding, limit=args.limit,
                           offset=args.offset)
    if fmt == "json":
        out.write(json.dumps(dict(rep.to_dict(), config=_config_echo(settings, fmt)), indent=2) + "\n")
    elif fmt == "csv":
        out.write(rep.to_csv())
    else:
        out.write(rep.to_text() + "\n")
        for e in rep.entries:
            for k, v in e.detail.items():
                out.write(f"    {k}: {v}\n")
    return rep.exit_code()


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    fmt = getattr(args, "output", "text")
    args.terms_default = not hasattr(args, "terms")
    args.tol_default = not hasattr(args, "tol")
    try:
        with config.override(precision_bits=getattr(args, "precision", None),
                             terms=getattr(args, "terms", None),
                             tol=getattr(args, "tol", None),
                             threads=getattr(args, "threads", None)) as settings:
            with mpmath.workprec(settings.precision_bits):
                if args.command == "verify":
                    return _cmd_verify(args, settings, fmt, out)
                if args.command == "crosscheck":
                    return _cmd_crosscheck(args, settings, fmt, out)
                handler = {"zeck": _cmd_zeck, "seq": _cmd_seq, "delta": _cmd_delta,
                           "series": _cmd_series, "poles": _cmd_poles}[args.command]
                rows, lines = handler(args, settings)
                command = " ".join(filter(None, [args.command, getattr(args, "action", None)]))
                _emit(out, fmt, command, _config_echo(settings, fmt), rows, lines)
                return EXIT_OK
    except (FibdirError, ValueError, ArithmeticError, OSError) as exc:
        err = exc.to_dict() if isinstance(exc, FibdirError) else {
            "error": type(exc).__name__, "message": str(exc)}
        out.write(json.dumps(err) + "\n")
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
