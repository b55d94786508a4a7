"""Command-line front end.

One subcommand per deliverable: exact sequence prefixes (``seq``), the
multi-instanton table (``transseries``), the factorization pair (``vpm``),
asymptotic-vs-exact comparisons (``asym``), Richardson transforms
(``richardson``), Stokes-constant estimates (``stokes``), quadrangulation
counts (``quad``), intersection numbers (``intersect``), and the
convergence-plot data (``plotdata``).

Exact values render as strings, never as floats, unless ``--float P`` is
given.  Output is deterministic for fixed arguments.  The environment
variable CROSSCAP_PREC overrides the default working precision (200).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import mpmath

from . import __version__
from .exactnum import DEFAULT_DPS, SymbolicConstantError, rational_to_float
from .sequences import intersection_number, p_of_g, t_of_g, u_seq, v_seq
from .transseries import mu_seq, nu_seq, vk_table, vpm_series
from .asymptotics import asym_u, asym_v, asym_vk, relative_error
from .extrapolation import estimate_stokes, r_seq, richardson, s_seq, convergence_rows
from .specgeom import quadrangulation_counts

MIN_DPS = 30


def _default_dps() -> int:
    raw = os.environ.get("CROSSCAP_PREC")
    if raw is None:
        return DEFAULT_DPS
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_DPS


def _nstr(x, dps: int) -> str:
    return mpmath.nstr(x, dps, strip_zeros=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crosscap",
        description="exact map-counting sequences and their asymptotics")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"),
                        default="table")
    common.add_argument("--output", metavar="PATH", default=None)
    common.add_argument("--prec", type=int, default=None,
                        help="working precision in decimal digits "
                             f"(default {_default_dps()}, min {MIN_DPS})")

    p = sub.add_parser("seq", parents=[common],
                       help="exact sequence prefix")
    p.add_argument("name", choices=("u", "v", "t", "p", "mu", "nu"))
    p.add_argument("--n", type=int, required=True,
                   help="last index (for p: twice the surface type)")
    p.add_argument("--float", dest="float_dps", type=int, metavar="P",
                   default=None, help="also render values at P digits")

    p = sub.add_parser("transseries", parents=[common],
                       help="multi-instanton table v[n,k]")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("vpm", parents=[common],
                       help="factorization series v_plus / v_minus")
    p.add_argument("--order", type=int, required=True)

    p = sub.add_parser("asym", parents=[common],
                       help="asymptotic value vs exact")
    p.add_argument("name", choices=("u", "v", "vk"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trunc", type=int, required=True)
    p.add_argument("--k", type=int, default=None,
                   help="sector (vk only)")

    p = sub.add_parser("richardson", parents=[common],
                       help="Richardson transform of the s or r sequence")
    p.add_argument("--target", choices=("s", "r"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=int, required=True)

    p = sub.add_parser("stokes", parents=[common],
                       help="Stokes constant estimate with digit match")
    p.add_argument("--which", choices=("sprime", "sminus1"), required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--order", type=int, default=None)

    p = sub.add_parser("quad", parents=[common],
                       help="rooted quadrangulation counts of RP^2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--plain", action="store_true",
                   help="one integer per line")

    p = sub.add_parser("intersect", parents=[common],
                       help="psi-class intersection number")
    p.add_argument("--g", type=int, required=True)

    p = sub.add_parser("plotdata", parents=[common],
                       help="convergence-plot data (CSV)")
    p.add_argument("name", choices=("unorquot", "firstcorr"))
    p.add_argument("--nmax", type=int, default=250)

    return parser


def _emit(args, values, rows, header, lines, precision=None, params=None):
    fmt = getattr(args, "format", "table")
    if fmt == "json":
        doc = {"command": args.command, "params": params or {},
               "precision": precision, "values": values}
        text = json.dumps(doc, ensure_ascii=False) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        text = buf.getvalue()
    else:
        if precision is not None:
            lines = [f"# precision: {precision}"] + lines
        text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_seq(args, dps: int) -> None:
    name, n = args.name, args.n
    if n < 0 or (name == "p" and n < 1):
        raise ValueError("--n out of range")
    fdps = args.float_dps
    if name == "u":
        pairs = list(enumerate(u_seq(n)))
    elif name == "v":
        pairs = list(enumerate(v_seq(n)))
    elif name == "mu":
        pairs = list(enumerate(mu_seq(n)))
    elif name == "nu":
        pairs = list(enumerate(nu_seq(n)))
    elif name == "t":
        pairs = [(g, t_of_g(g)) for g in range(n + 1)]
    else:
        pairs = [(twog, p_of_g(twog)) for twog in range(1, n + 1)]

    def flt(x) -> str:
        try:
            return _nstr(x.to_float(fdps) if hasattr(x, "to_float")
                         else rational_to_float(x, fdps), fdps)
        except SymbolicConstantError:
            return ""

    values = [str(x) for _, x in pairs]
    params = {"name": name, "n": n}
    if fdps:
        rows = [(i, str(x), flt(x)) for i, x in pairs]
        header = ["index", "exact", f"float[dps={fdps}]"]
        lines = [f"{i}\t{s}\t{f}" for (i, s, f) in rows]
        _emit(args, {"exact": values, "floats": [r[2] for r in rows]},
              rows, header, lines, precision=fdps, params=params)
    else:
        rows = [(i, str(x)) for i, x in pairs]
        _emit(args, values, rows, ["index", "exact"],
              [f"{i}\t{s}" for (i, s) in rows], params=params)


def _cmd_transseries(args, dps: int) -> None:
    if args.k < 0 or args.n < 0:
        raise ValueError("--k and --n must be non-negative")
    table = vk_table(args.n, args.k)
    rows = [(k, n, str(table.value(n, k)))
            for k in range(args.k + 1) for n in range(args.n + 1)]
    values = [[str(x) for x in table.row(k)] for k in range(args.k + 1)]
    lines = [f"k={k}\t" + "\t".join(row) for k, row in enumerate(values)]
    _emit(args, values, rows, ["k", "n", "exact"], lines,
          params={"k": args.k, "n": args.n})


def _cmd_vpm(args, dps: int) -> None:
    plus, minus = vpm_series(args.order)
    p_coeffs = [str(plus.coefficient(e)) for e in range(args.order + 1)]
    m_coeffs = [str(minus.coefficient(e)) for e in range(args.order + 1)]
    rows = [("plus", e, c) for e, c in enumerate(p_coeffs)]
    rows += [("minus", e, c) for e, c in enumerate(m_coeffs)]
    lines = ["v_plus:\t" + "\t".join(p_coeffs),
             "v_minus:\t" + "\t".join(m_coeffs)]
    _emit(args, {"plus": p_coeffs, "minus": m_coeffs}, rows,
          ["series", "exponent", "exact"], lines,
          params={"order": args.order})


def _cmd_asym(args, dps: int) -> None:
    n, L = args.n, args.trunc
    if args.name == "u":
        approx = asym_u(n, L, dps)
        exact = u_seq(n)[n]
    elif args.name == "v":
        approx = asym_v(n, L, dps)
        exact = v_seq(n)[n]
    else:
        if args.k is None:
            raise ValueError("asym vk needs --k")
        approx = asym_vk(args.k, n, L, dps)
        exact = vk_table(n, args.k).value(n, args.k)
    err = relative_error(approx, exact, dps)
    row = (n, L, str(exact), _nstr(approx, dps), _nstr(err, 10))
    lines = [f"exact\t{row[2]}", f"asym\t{row[3]}", f"rel_error\t{row[4]}"]
    _emit(args, {"exact": row[2], "asym": row[3], "rel_error": row[4]},
          [row],
          ["n", "trunc", "exact", f"asym[dps={dps}]", "rel_error"], lines,
          precision=dps,
          params={"name": args.name, "n": n, "trunc": L, "k": args.k})


def _cmd_richardson(args, dps: int) -> None:
    builder = s_seq if args.target == "s" else r_seq
    seq = builder(args.n + args.order, dps)
    result = richardson(seq, args.order, args.n)
    text = _nstr(result.value, dps)
    _emit(args, [text], [(args.n, args.order, text)],
          ["n", "order", f"value[dps={dps}]"], [text], precision=dps,
          params={"target": args.target, "n": args.n, "order": args.order})


def _cmd_stokes(args, dps: int) -> None:
    n = args.n if args.n is not None else (250 if args.which == "sprime" else 100)
    order = args.order if args.order is not None else (30 if args.which == "sprime" else 10)
    est = estimate_stokes(args.which, n, order, dps)
    target_name = "sqrt(6)" if args.which == "sprime" else "-sqrt(6)/12"
    value = _nstr(est.value, dps)
    lines = [f"estimate\t{value}",
             f"matched {est.digits} digits of {target_name}"]
    _emit(args, {"estimate": value, "matched_digits": est.digits,
                 "target": target_name},
          [(args.which, n, order, value, est.digits)],
          ["which", "n", "order", f"estimate[dps={dps}]", "matched_digits"],
          lines,
          precision=dps,
          params={"which": args.which, "n": n, "order": order})


def _cmd_quad(args, dps: int) -> None:
    if args.n < 1:
        raise ValueError("--n must be >= 1")
    counts = quadrangulation_counts(args.n)
    rows = list(enumerate(counts, start=1))
    if args.plain:
        lines = [str(c) for c in counts]
    else:
        lines = [" ".join(str(c) for c in counts)]
    _emit(args, counts, rows, ["n", "count"], lines,
          params={"n": args.n})


def _cmd_intersect(args, dps: int) -> None:
    value = intersection_number(args.g)
    _emit(args, [str(value)], [(args.g, str(value))], ["g", "exact"],
          [str(value)], params={"g": args.g})


def _cmd_plotdata(args, dps: int) -> None:
    which = "s" if args.name == "unorquot" else "r"
    orders = (0, 1, 5)
    rows = convergence_rows(which, args.nmax, orders, dps)
    header = ["n"] + [f"{which}{N}[dps={dps}]" for N in orders]
    out_rows = [(n, *(_nstr(x, dps) for x in vals))
                for (n, *vals) in rows]
    values = [[r[0], *r[1:]] for r in out_rows]
    lines = ["\t".join(str(c) for c in row) for row in out_rows]
    _emit(args, values, out_rows, header, lines, precision=dps,
          params={"name": args.name, "nmax": args.nmax})


_HANDLERS = {
    "seq": _cmd_seq,
    "transseries": _cmd_transseries,
    "vpm": _cmd_vpm,
    "asym": _cmd_asym,
    "richardson": _cmd_richardson,
    "stokes": _cmd_stokes,
    "quad": _cmd_quad,
    "intersect": _cmd_intersect,
    "plotdata": _cmd_plotdata,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    dps = args.prec if args.prec is not None else _default_dps()
    if dps < MIN_DPS:
        sys.stderr.write(f"crosscap: precision must be at least {MIN_DPS}\n")
        return 2
    fdps = getattr(args, "float_dps", None)
    if fdps is not None and fdps < MIN_DPS:
        sys.stderr.write(f"crosscap: precision must be at least {MIN_DPS}\n")
        return 2
    try:
        _HANDLERS[args.command](args, dps)
    except Exception as exc:
        sys.stderr.write(f"crosscap: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
