"""Command-line front end.

Subcommands:

* ``gen``       build a family matrix (matrixmarket, csv, json, or text)
* ``det``       exact or floating determinant of a family matrix
* ``charpoly``  characteristic polynomial
* ``spectrum``  closed-form eigenvalues
* ``verify``    run identity certifications over a range of sizes
* ``bench``     time the determinant kernels (CSV output)

Exit codes: 0 success, 1 verification failure, 2 usage error.  Modes:
``symbolic`` ignores --params and uses indeterminates, ``rational``
parses parameters as exact fractions like ``3/2``, ``numeric`` (the
default for matrix commands) parses them as floats.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .bench import METHODS, BenchConsistencyError, run_bench
from .closed_forms import Spectrum, spectrum_for
from .exact_arith import MultiPoly, QuadExt
from .families import (FAMILY_ARITY, ParameterCountMismatch, build_params,
                       matrix_for, report_family, split_family_tag,
                       symbolic_params)
from .tridiag import Tridiagonal
from .verify import reports_to_json, run_suite

MATRIX_FAMILIES = ("clement", "j", "m", "mpm")
VERIFY_FAMILIES = ("all", "clement", "j", "m", "mpm", "substitution")


class UsageError(Exception):
    pass


# -- value formatting ---------------------------------------------------

def format_number(value) -> str:
    if isinstance(value, complex):
        return str(value)
    value = float(value)
    if value == int(value) and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def fraction_decimal(q: Fraction) -> str:
    """Exact decimal string; defined only for denominators 2^a * 5^b."""
    den = q.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        raise UsageError(f"{q} has no exact decimal form; "
                         "gen --format matrixmarket needs numeric mode for such values")
    k = max(twos, fives)
    digits = str(abs(q.numerator) * 10 ** k // q.denominator).rjust(k + 1, "0")
    sign = "-" if q.numerator < 0 else ""
    return sign + digits if k == 0 else f"{sign}{digits[:-k]}.{digits[-k:]}"


def value_str(value, mode: str) -> str:
    if mode == "numeric":
        return format_number(value)
    return str(value)


def quadext_str(value: QuadExt, mode: str) -> str:
    p = value_str(value.rational_part, mode)
    if value.radical_part == 0:
        return p
    q = value_str(value.radical_part, mode)
    d = value_str(value.discriminant, mode)
    return f"{p} + {q}*sqrt({d})"


def float_poly_str(coeffs: list[float]) -> str:
    parts = []
    for degree in range(len(coeffs) - 1, -1, -1):
        c = coeffs[degree]
        if c == 0 and degree != 0 and any(coeffs):
            continue
        mono = "" if degree == 0 else ("lam" if degree == 1 else f"lam^{degree}")
        text = format_number(abs(c)) if not mono or abs(c) != 1 else ""
        piece = text + ("*" if text and mono else "") + mono
        if not parts:
            parts.append(("-" if c < 0 else "") + piece)
        else:
            parts.append(("- " if c < 0 else "+ ") + piece)
    return " ".join(parts) if parts else "0"


# -- matrix output ------------------------------------------------------

def write_matrix_market(matrix: Tridiagonal, stream, mode: str) -> None:
    """Coordinate real general format, 1-based indices, zeros omitted."""
    if mode == "symbolic":
        raise UsageError("matrixmarket output requires rational or numeric mode")

    def render(v) -> str:
        if mode == "numeric":
            return format_number(v)
        return fraction_decimal(Fraction(v))

    order = matrix.order
    entries = []
    for i in range(order):
        if i > 0 and not (matrix.subdiag[i - 1] == 0):
            entries.append((i + 1, i, render(matrix.subdiag[i - 1])))
        if not (matrix.diag[i] == 0):
            entries.append((i + 1, i + 1, render(matrix.diag[i])))
        if i < order - 1 and not (matrix.superdiag[i] == 0):
            entries.append((i + 1, i + 2, render(matrix.superdiag[i])))
    stream.write("%%MatrixMarket matrix coordinate real general\n")
    stream.write(f"{order} {order} {len(entries)}\n")
    for i, j, text in entries:
        stream.write(f"{i} {j} {text}\n")


# -- argument plumbing --------------------------------------------------

def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def parse_params(text: str | None, mode: str) -> list:
    if text is None or text.strip() == "":
        return []
    pieces = [p.strip() for p in text.split(",")]
    try:
        if mode == "numeric":
            return [float(p) for p in pieces]
        return [Fraction(p) for p in pieces]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse --params {text!r} in {mode} mode: {exc}")


def _build_instance(args):
    kind, sign = split_family_tag(args.family, args.sign)
    if args.mode == "symbolic":
        params = symbolic_params(kind, args.n, sign)
    else:
        params = build_params(kind, args.n, parse_params(args.params, args.mode), sign)
    return kind, sign, params


def _open_sink(args):
    if args.out:
        return open(args.out, "w", newline="")
    return None  # stdout


def _matrix_payload(matrix: Tridiagonal, mode: str):
    if mode == "numeric":
        convert = lambda v: float(v)
    else:
        convert = lambda v: value_str(v, mode)
    return {
        "diag": [convert(v) for v in matrix.diag],
        "superdiag": [convert(v) for v in matrix.superdiag],
        "subdiag": [convert(v) for v in matrix.subdiag],
    }


# -- subcommand handlers -------------------------------------------------

def _cmd_gen(args, out) -> int:
    kind, sign, params = _build_instance(args)
    matrix = matrix_for(params)
    if args.format == "matrixmarket":
        write_matrix_market(matrix, out, args.mode)
    elif args.format == "json":
        payload = {"family": report_family(kind, sign), "n": args.n,
                   "order": matrix.order, "mode": args.mode}
        payload.update(_matrix_payload(matrix, args.mode))
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out)
        for row in matrix.to_dense():
            writer.writerow([value_str(v, args.mode) for v in row])
    else:
        for row in matrix.to_dense():
            out.write("[" + ", ".join(value_str(v, args.mode) for v in row) + "]\n")
    return 0


def _cmd_det(args, out) -> int:
    kind, sign, params = _build_instance(args)
    matrix = matrix_for(params)
    value = matrix.det()
    text = value_str(value, args.mode)
    if args.format == "json":
        payload = {"family": report_family(kind, sign), "n": args.n, "mode": args.mode,
                   "det": float(value) if args.mode == "numeric" else text}
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        csv.writer(out).writerow([text])
    else:
        out.write(text + "\n")
    return 0


def _cmd_charpoly(args, out) -> int:
    kind, sign, params = _build_instance(args)
    matrix = matrix_for(params)
    if args.mode == "numeric":
        coeffs = matrix.charpoly_float()
        if args.format == "json":
            json.dump({"family": report_family(kind, sign), "n": args.n,
                       "mode": args.mode, "coefficients_ascending": coeffs}, out, indent=2)
            out.write("\n")
        elif args.format == "csv":
            writer = csv.writer(out)
            writer.writerow(["degree", "coefficient"])
            for degree, c in enumerate(coeffs):
                writer.writerow([degree, format_number(c)])
        else:
            out.write(float_poly_str(coeffs) + "\n")
        return 0

    poly = matrix.charpoly()
    if args.format == "json":
        coeffs = {("1" if not any(mono) else "*".join(
            f"{name}^{e}" if e > 1 else name
            for name, e in zip(poly.variables, mono) if e)): str(c)
            for mono, c in sorted(poly.terms.items(), reverse=True)}
        json.dump({"family": report_family(kind, sign), "n": args.n, "mode": args.mode,
                   "charpoly": str(poly), "coefficients": coeffs}, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out)
        writer.writerow(["monomial", "coefficient"])
        for mono, c in sorted(poly.terms.items(), reverse=True):
            name = "*".join(f"{v}^{e}" if e > 1 else v
                            for v, e in zip(poly.variables, mono) if e) or "1"
            writer.writerow([name, str(c)])
    else:
        out.write(str(poly) + "\n")
    return 0


def _cmd_spectrum(args, out) -> int:
    kind, sign, params = _build_instance(args)
    spectrum = spectrum_for(params)
    if args.mode == "numeric":
        values = spectrum.numeric_values()
        rendered = [format_number(v) for v in values]
    else:
        rendered = [quadext_str(e, args.mode) for e in spectrum.eigenvalues]
    if args.format == "json":
        payload = {"family": report_family(kind, sign), "n": args.n, "mode": args.mode,
                   "center": value_str(spectrum.center, args.mode),
                   "discriminant": value_str(spectrum.step_discriminant, args.mode),
                   "eigenvalues": rendered}
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out)
        for text in rendered:
            writer.writerow([text])
    else:
        for text in rendered:
            out.write(text + "\n")
    return 0


def _cmd_verify(args, out) -> int:
    if args.n is not None:
        n_values = [args.n]
    else:
        n_values = list(range(args.n_max + 1))
    threads = _thread_count()
    reports = run_suite(args.family, n_values, mode=args.mode, sign=args.sign,
                        seed=args.seed, threads=threads)
    if args.format == "json":
        out.write(reports_to_json(reports) + "\n")
    elif args.format == "csv":
        writer = csv.writer(out)
        writer.writerow(["family", "n", "mode", "passed", "witness", "elapsed_ms"])
        for r in reports:
            writer.writerow([r.family, r.n, r.mode, str(r.passed).lower(),
                             r.witness or "", f"{r.elapsed_ms:.3f}"])
    else:
        for r in reports:
            status = "passed" if r.passed else "FAILED"
            line = f"{r.family:>12}  n={r.n:<3} {r.mode:<8} {status} ({r.elapsed_ms:.1f} ms)"
            if r.witness:
                line += f"  [{r.witness}]"
            out.write(line + "\n")
    return 0 if all(r.passed for r in reports) else 1


def _cmd_bench(args, out) -> int:
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    try:
        n_values = [int(p) for p in args.n_list.split(",") if p.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --n-list: {exc}")
    if args.repetitions < 1:
        raise UsageError("--repetitions must be at least 1")
    for family in families:
        if family not in MATRIX_FAMILIES:
            raise UsageError(f"unknown family {family!r}")
    for method in methods:
        if method not in METHODS:
            raise UsageError(f"unknown method {method!r}; choose from {METHODS}")
    if "cofactor_dense" in methods and any(n + 1 > 12 for n in n_values):
        raise UsageError("cofactor_dense refuses matrices of order > 12")

    rows = run_bench(families, n_values, args.repetitions, methods)
    writer = csv.writer(out)
    writer.writerow(["family", "n", "method", "nanoseconds"])
    for row in rows:
        writer.writerow([row.family, row.n, row.method, row.nanoseconds])
    return 0


def _thread_count() -> int:
    raw = os.environ.get("SK_SPECTRA_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# -- parser ---------------------------------------------------------------

def _add_common(sub, default_mode: str = "numeric"):
    sub.add_argument("--family", required=True, choices=MATRIX_FAMILIES)
    sub.add_argument("--n", required=True, type=_nonneg_int,
                     help="band length; the matrix is (n+1) x (n+1)")
    sub.add_argument("--params", default=None,
                     help="comma-separated values; fractions like 3/2 in rational "
                          "mode, floats in numeric mode (ignored in symbolic mode)")
    sub.add_argument("--sign", choices=("plus", "minus"), default="plus",
                     help="sign variant for the mpm family")
    sub.add_argument("--mode", choices=("symbolic", "rational", "numeric"),
                     default=default_mode)
    sub.add_argument("--format", choices=("matrixmarket", "csv", "json", "text"),
                     default="text")
    sub.add_argument("--out", default=None, help="output file (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sk-spectra",
        description="Exact determinants, spectra, and per-size certification "
                    "for Clement-type tridiagonal matrix families.")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    gen = subs.add_parser("gen", help="emit a family matrix")
    _add_common(gen)
    gen.set_defaults(handler=_cmd_gen)

    det = subs.add_parser("det", help="determinant of a family matrix")
    _add_common(det)
    det.set_defaults(handler=_cmd_det)

    charpoly = subs.add_parser("charpoly", help="characteristic polynomial")
    _add_common(charpoly)
    charpoly.set_defaults(handler=_cmd_charpoly)

    spectrum = subs.add_parser("spectrum", help="closed-form eigenvalues")
    _add_common(spectrum)
    spectrum.set_defaults(handler=_cmd_spectrum)

    verify = subs.add_parser("verify", help="run identity certifications")
    verify.add_argument("--family", choices=VERIFY_FAMILIES, default="all")
    verify.add_argument("--n", type=_nonneg_int, default=None,
                        help="check a single size")
    verify.add_argument("--n-max", type=_nonneg_int, default=30,
                        help="check every size 0..n-max (default 30)")
    verify.add_argument("--sign", choices=("plus", "minus"), default=None,
                        help="restrict mpm checks to one sign")
    verify.add_argument("--mode", choices=("symbolic", "rational", "numeric"),
                        default="symbolic")
    verify.add_argument("--seed", type=int, default=0,
                        help="seed for rational/numeric parameter draws")
    verify.add_argument("--format", choices=("csv", "json", "text"), default="text")
    verify.add_argument("--out", default=None)
    verify.set_defaults(handler=_cmd_verify)

    bench = subs.add_parser("bench", help="time the determinant kernels")
    bench.add_argument("--families", default="clement",
                       help="comma-separated family tags (default clement)")
    bench.add_argument("--n-list", default="1000,10000,100000,1000000")
    bench.add_argument("--repetitions", type=int, default=5)
    bench.add_argument("--methods", default="closed_form_det,continuant_det",
                       help=f"comma-separated subset of {METHODS}")
    bench.add_argument("--out", default=None)
    bench.set_defaults(handler=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    sink = None
    try:
        sink = _open_sink(args)
        out = sink if sink is not None else sys.stdout
        return args.handler(args, out)
    except (UsageError, ParameterCountMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BenchConsistencyError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    finally:
        if sink is not None:
            sink.close()


if __name__ == "__main__":
    raise SystemExit(main())
