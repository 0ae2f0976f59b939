"""Command-line entry point.

Exit codes: 0 success, 1 parse or usage error, 2 input not symmetric,
3 round-trip verification failed. Results go to stdout, diagnostics to
stderr.
"""

import argparse
import sys

from symdecomp.decomp import (
    build_system,
    compose_truncated,
    decompose,
    decompose_truncated,
)
from symdecomp.io import export_records, format_poly, parse_poly, records_to_text
from symdecomp.oracle import oracle_decompose, verify_roundtrip
from symdecomp.poly import NotSymmetric, Polynomial, compose_with_sigma, symmetry_witness

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_SYMMETRIC = 2
EXIT_VERIFY = 3


class _Usage(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def _build_parser():
    parser = _ArgumentParser(
        prog="symdecomp",
        description="Write symmetric polynomials in terms of elementary symmetric polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, reads_input=True):
        p.add_argument("--vars", "-n", type=int, required=True, dest="n",
                       help="number of variables")
        if reads_input:
            p.add_argument("--input", "-i", help="read the polynomial from a file instead of stdin")
        return p

    dec = common(sub.add_parser("decompose", help="print g with f = g(sigma)"))
    dec.add_argument("--oracle", action="store_true",
                     help="use the brute-force linear solve instead")
    dec.add_argument("--closed-form-n2", action="store_true",
                     help="use the two-variable closed-form coefficients")
    dec.add_argument("--check", action="store_true",
                     help="verify g(sigma) == f before printing")
    dec.add_argument("--records", action="store_true",
                     help="print coefficient records instead of a formula")

    comp = common(sub.add_parser("compose", help="print g(sigma(x)) for g in y variables"))
    comp.add_argument("--records", action="store_true")

    common(sub.add_parser("check-symmetric", help="test whether f is symmetric"))

    sysp = common(sub.add_parser("system", help="print the linear system of one degree"),
                  reads_input=False)
    sysp.add_argument("--degree", "-d", type=int, required=True)
    sysp.add_argument("--input", "-i",
                      help="optional polynomial file; adds its coefficients as a last column")
    sysp.add_argument("--closed-form-n2", action="store_true")

    td = common(sub.add_parser("truncate-decompose",
                               help="decompose a series truncated at a total degree"))
    td.add_argument("--max-degree", "-D", type=int, required=True)
    td.add_argument("--closed-form-n2", action="store_true")
    td.add_argument("--check", action="store_true")
    td.add_argument("--records", action="store_true")

    tc = common(sub.add_parser("truncate-compose",
                               help="compose g with sigma and truncate at a total degree"))
    tc.add_argument("--max-degree", "-D", type=int, required=True)
    tc.add_argument("--records", action="store_true")
    return parser


def _read_input(args, stdin):
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            return fh.read()
    return stdin.read()


def _emit(p, var, records, grading, out):
    if records:
        out.write(records_to_text(export_records(p, grading)))
    else:
        out.write(format_poly(p, var) + "\n")


def format_system(system, with_rhs=False):
    """Plain-text table of a degree system with exponent labels."""
    def label(nu):
        return " ".join(str(e) for e in nu)

    row_labels = [label(r) for r in system.rows]
    col_labels = [label(c) for c in system.cols]
    body = [[str(x) for x in row] for row in system.matrix]
    if with_rhs:
        col_labels.append("f")
        for cells, value in zip(body, system.rhs):
            cells.append(str(value))
    widths = [max([len(col_labels[j])] + [len(cells[j]) for cells in body])
              for j in range(len(col_labels))]
    head_w = max(len("nu \\ lambda"), *(len(s) for s in row_labels))
    lines = ["nu \\ lambda".ljust(head_w) + " | "
             + "  ".join(s.rjust(w) for s, w in zip(col_labels, widths))]
    for lab, cells in zip(row_labels, body):
        lines.append(lab.ljust(head_w) + " | "
                     + "  ".join(s.rjust(w) for s, w in zip(cells, widths)))
    return "\n".join(lines) + "\n"


def _run(args, stdin, out, err):
    n = args.n
    if n < 1:
        raise _Usage("--vars must be at least 1")
    if getattr(args, "closed_form_n2", False) and n != 2:
        raise _Usage("--closed-form-n2 requires --vars 2")
    for name in ("degree", "max_degree"):
        if getattr(args, name, 0) < 0:
            raise _Usage(f"--{name.replace('_', '-')} must be nonnegative")

    if args.command == "system":
        if args.degree < 1:
            raise _Usage("--degree must be at least 1")
        f = parse_poly(_read_input(args, stdin), n) if args.input else Polynomial.zero(n)
        if args.input:
            witness = symmetry_witness(f)
            if witness is not None:
                raise NotSymmetric(*witness)
        system = build_system(n, args.degree, f, args.closed_form_n2)
        out.write(f"degree {args.degree}, {n} variables\n")
        out.write(format_system(system, with_rhs=bool(args.input)))
        return EXIT_OK

    text = _read_input(args, stdin)

    if args.command == "check-symmetric":
        witness = symmetry_witness(parse_poly(text, n))
        if witness is None:
            out.write("symmetric\n")
            return EXIT_OK
        (i, j), nu = witness
        out.write(f"asym: swap({i},{j}) at ({','.join(map(str, nu))})\n")
        return EXIT_NOT_SYMMETRIC

    if args.command == "compose":
        g = parse_poly(text, n, var="y")
        _emit(compose_with_sigma(g, n), "x", args.records, "degree", out)
        return EXIT_OK

    if args.command == "truncate-compose":
        g = parse_poly(text, n, var="y")
        _emit(compose_truncated(g, n, args.max_degree), "x", args.records, "degree", out)
        return EXIT_OK

    f = parse_poly(text, n)
    if args.command == "decompose":
        if args.oracle:
            g = oracle_decompose(f)
        else:
            g = decompose(f, closed_form_n2=args.closed_form_n2)
    else:  # truncate-decompose
        g = decompose_truncated(f, args.max_degree, closed_form_n2=args.closed_form_n2)
    if args.check:
        if args.command == "decompose":
            ok = verify_roundtrip(f, g)
        else:
            ok = compose_truncated(g, n, args.max_degree) == f
        if not ok:
            err.write("verification failed: g(sigma(x)) does not reproduce the input\n")
            return EXIT_VERIFY
    _emit(g, "y", args.records, "weight", out)
    return EXIT_OK


def main(argv=None, stdin=None, stdout=None, stderr=None):
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        return _run(args, stdin, out, err)
    except _Usage as exc:
        err.write(f"symdecomp: error: {exc}\n")
        return EXIT_USAGE
    except NotSymmetric as exc:
        err.write(f"symdecomp: {exc}\n")
        return EXIT_NOT_SYMMETRIC
    except (ValueError, ZeroDivisionError, OSError) as exc:
        err.write(f"symdecomp: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
