"""Command-line front end.

Exit codes: 0 success or Valid (a ``false`` answer to a yes/no question is
still a success), 1 hypothesis failure or Invalid, 2 parse or usage error.
The text syntax of every argument is documented in ``docs/formats.md`` and
in :mod:`cubiccert.syntax`.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import certificates as cert
from .errors import CertError, ParseError
from .quadforms import is_anisotropic, pfister_represents
from .realtopo import component_report
from .syntax import format_cubic, parse_cubic, parse_field, parse_form, parse_monomial, parse_pfister

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cubiccert", description="Build and check non-rationality certificates for cubic hypersurfaces.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("certificate", help="build a certificate")
    c.add_argument("method", choices=cert.METHODS)
    c.add_argument("--field", help="tower, e.g. 'Fq(7)[[l1]][[l2]]' (k for fibered and quadric-pair)")
    c.add_argument("--a", help="coefficient a (diagonal methods)")
    c.add_argument("--n", type=int, help="chain length (diagonal) or number of squares (real)")
    c.add_argument("--phi", help="Pfister form '<<a1,...>>' (fibered)")
    c.add_argument("--rho", help="element rho (fibered)")
    c.add_argument("--m", type=int, help="dimension of q (fibered)")
    c.add_argument("--q", help="subform '<...>' of phi (fibered; default: first m entries)")
    c.add_argument("--lexp", type=int, help="form dimension is 2^lexp (quadric-pair)")
    c.add_argument("--json", action="store_true", help="print the certificate JSON")

    v = sub.add_parser("verify", help="verify a certificate JSON file")
    v.add_argument("file")
    v.add_argument("--json", action="store_true")

    q = sub.add_parser("quadform", help="quadratic form questions")
    q.add_argument("question", choices=["anisotropic"])
    q.add_argument("--field", required=True)
    q.add_argument("--form", required=True)
    q.add_argument("--json", action="store_true")

    pf = sub.add_parser("pfister", help="Pfister form questions")
    pf.add_argument("question", choices=["represents"])
    pf.add_argument("--field", required=True)
    pf.add_argument("--phi", required=True)
    pf.add_argument("--rho", required=True)
    pf.add_argument("--json", action="store_true")

    s = sub.add_parser("survey", help="ambient dimensions reached by each method")
    s.add_argument("--base", choices=["complex", "padic"], required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--json", action="store_true")

    r = sub.add_parser("real-components", help="components of sum x_i^2 * v = f(u, v)")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--f", required=True)
    r.add_argument("--json", action="store_true")
    return p


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise _Usage(f"certificate {args.method} needs {', '.join(missing)}")


class _Usage(Exception):
    pass


def _certificate(args: argparse.Namespace) -> cert.ObstructionCertificate:
    m = args.method
    if m in (cert.DIAGONAL, cert.DIAGONAL_PADIC):
        _require(args, "field", "a", "n")
        F = parse_field(args.field)
        build = cert.build_diagonal_certificate if m == cert.DIAGONAL else cert.build_diagonal_padic_certificate
        return build(F, parse_monomial(args.a, F), args.n)
    if m == cert.FIBERED:
        _require(args, "field", "phi", "rho", "m")
        k = parse_field(args.field)
        q = parse_form(args.q, k) if args.q is not None else None
        return cert.build_fibered_quadric_witness(k, parse_pfister(args.phi, k), parse_monomial(args.rho, k), args.m, q)
    if m == cert.QUADRIC_PAIR:
        _require(args, "field", "lexp")
        return cert.build_quadric_pair_witness(parse_field(args.field), args.lexp)
    _require(args, "n")
    return cert.build_real_witness(args.n)


def _summary(c: cert.ObstructionCertificate) -> str:
    lines = [
        f"method     : {c.method}",
        f"field      : {c.field}",
        f"N          : {c.N}",
        f"equation   : {c.equation}",
    ]
    lines += [f"check      : {x.name} = {json.dumps(x.result)}" for x in c.checks]
    lines += [f"axiom      : {a.name}" for a in c.axioms]
    lines.append(f"conclusion : {c.conclusion}")
    return "\n".join(lines) + "\n"


def _emit(out, as_json: bool, doc: dict, text: str) -> None:
    out.write(cert.dumps(doc) if as_json else text)


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args, out)
    except ParseError as exc:
        err.write(f"parse error: {exc.diagnostic()}\n")
        return EXIT_USAGE
    except _Usage as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except CertError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_FAIL


def _dispatch(args: argparse.Namespace, out) -> int:
    if args.command == "certificate":
        c = _certificate(args)
        _emit(out, args.json, c.to_dict(), _summary(c))
        return EXIT_OK
    if args.command == "verify":
        try:
            with open(args.file, encoding="utf-8") as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise _Usage(f"cannot read {args.file}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.doc, exc.pos) from None
        verdict = cert.verify_certificate(doc)
        _emit(out, args.json, {"valid": verdict.valid, "reason": verdict.reason}, f"{verdict}\n")
        return EXIT_OK if verdict else EXIT_FAIL
    if args.command == "quadform":
        F = parse_field(args.field)
        answer = is_anisotropic(parse_form(args.form, F))
        _emit(out, args.json, {"field": str(F), "form": args.form, "anisotropic": answer}, f"{str(answer).lower()}\n")
        return EXIT_OK
    if args.command == "pfister":
        F = parse_field(args.field)
        answer = pfister_represents(parse_pfister(args.phi, F), parse_monomial(args.rho, F))
        doc = {"field": str(F), "phi": args.phi, "rho": args.rho, "represents": answer}
        _emit(out, args.json, doc, f"{str(answer).lower()}\n")
        return EXIT_OK
    if args.command == "survey":
        table = cert.survey(args.base, args.n)
        _emit(out, args.json, table.to_dict(), table.render())
        return EXIT_OK
    report = component_report(args.n, parse_cubic(args.f))
    intervals = [[cert._root_text(a), None if b is None else cert._root_text(b)] for a, b in report.intervals]
    doc = {"n": report.n, "f": format_cubic(report.f), "components": report.count, "intervals": intervals}
    text = f"{report.count}\n" + "".join(f"  f >= 0 on [{a}, {'+oo' if b is None else b}]\n" for a, b in intervals)
    _emit(out, args.json, doc, text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
