"""Command-line driver.

Exit codes: 0 success, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import sys

from . import census
from .cmap import is_reflexible, quotient_by_vertex_power, regularity_degree, trace_invariants
from .ffield import build_field, format_poly, frobenius_orbit, minimal_polynomial, parse_poly
from .groupmap import (
    CoverSpec,
    build_central_cover,
    central_cover_solutions,
    cover_face_exponent,
    cover_invariants_closed_form,
    dipole_count,
    dipole_map,
    dipole_params,
    dipole_solutions,
    quotient_check,
)
from .paley import (
    AdmissiblePair,
    build_paley_map,
    closed_form_invariants,
    galois_orbit_info,
    is_reflexible_closed_form,
    iso_classes,
    paley_spec,
)

EXIT_USAGE = 1
EXIT_VERIFY = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _pair(args) -> AdmissiblePair:
    try:
        build_field(args.p, args.e)
        return AdmissiblePair(args.p ** args.e, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _fmt_inv(inv) -> str:
    petrie = "" if inv.petrie_length is None else f" petrie={inv.petrie_length}"
    return (f"V={inv.vertices} E={inv.edges} F={inv.faces} type={{{inv.type_m},{inv.type_n}}} "
            f"genus={inv.genus}{petrie}")


def cmd_census(args) -> int:
    try:
        records = census.run_census(args.max_q, args.max_genus)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    text = census.emit(records, args.format, args.out)
    if args.out is None:
        sys.stdout.write(text)
    bad = [r for r in records if not r.checks_passed]
    for r in bad:
        print(f"check failed: q={r.q} n={r.n} minpoly={r.s_minpoly}", file=sys.stderr)
    return EXIT_VERIFY if bad else 0


def cmd_map(args) -> int:
    pair = _pair(args)
    try:
        spec = paley_spec(pair.q, pair.n, parse_poly(args.s) if args.s else None)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    M = build_paley_map(spec)
    traced = trace_invariants(M)
    closed = closed_form_invariants(pair)
    F = pair.field
    print(f"M_{pair.q}(s) with s = {format_poly(F.coefficients(spec.s))}, "
          f"minimal polynomial {format_poly(spec.s_minpoly)}")
    print(f"traced:      {_fmt_inv(traced)}")
    print(f"closed form: {_fmt_inv(closed)}")
    refl = is_reflexible(M)
    print(f"reflexible: {str(refl).lower()} (closed form {str(is_reflexible_closed_form(pair)).lower()})")
    print(f"|Aut+| = {regularity_degree(M)}")
    if args.dump_map:
        sys.stdout.write(M.dumps())
    ok = not traced.mismatches(closed) and refl == is_reflexible_closed_form(pair)
    return 0 if ok else EXIT_VERIFY


def cmd_verify(args) -> int:
    pair = _pair(args)
    try:
        report = census.verify_pair(pair.q, pair.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(report)
    return 0 if report.passed else EXIT_VERIFY


def cmd_dipole(args) -> int:
    if args.k < 1:
        raise UsageError("k must be positive")
    us = dipole_solutions(args.k) if args.u is None else [args.u % args.k]
    if args.u is not None and us[0] not in dipole_solutions(args.k):
        raise UsageError(f"u = {args.u} does not satisfy u^2 = 1 mod {args.k}")
    print(f"k={args.k}: {dipole_count(args.k)} dipole maps")
    status = 0
    for u in us:
        traced = trace_invariants(dipole_map(args.k, u), petrie=False)
        closed = dipole_params(args.k, u)
        ok = not traced.mismatches(closed)
        status = status or (0 if ok else EXIT_VERIFY)
        print(f"D_{args.k}({u}): {_fmt_inv(traced)} {'ok' if ok else 'MISMATCH'}")
    return status


def cmd_cover(args) -> int:
    pair = _pair(args)
    closed = closed_form_invariants(pair)
    sols = central_cover_solutions(pair.q, pair.n, closed.type_m, args.k)
    print(f"q + f i = 0 mod {args.k} with f = {closed.faces}: solutions i = {sols}")
    if pair.p > 2 and args.k % 2 == 0:
        print("no split cover: k must be odd when p > 2")
        return 0
    status = 0
    for spec in iso_classes(pair):
        cspec = CoverSpec(spec, args.k)
        cover = build_central_cover(spec, args.k)
        i = cover_face_exponent(cspec)
        traced = trace_invariants(cover, petrie=False)
        expect = cover_invariants_closed_form(pair.q, closed.type_m, pair.n, args.k, i)
        quot = quotient_check(cover, build_paley_map(spec), args.k)
        ok = not traced.mismatches(expect) and quot and i in sols
        status = status or (0 if ok else EXIT_VERIFY)
        print(f"base minpoly {format_poly(spec.s_minpoly)}: i = {i}, {_fmt_inv(traced)}, "
              f"quotient {'ok' if quot else 'FAILED'}, {'ok' if ok else 'MISMATCH'}")
    return status


def cmd_orbit(args) -> int:
    pair = _pair(args)
    info = galois_orbit_info(pair)
    F = pair.field
    print(f"q={pair.q} n={pair.n}: orbit size {info.orbit_size}, field degree {info.field_degree}")
    print(f"field of definition: {info.field_description}")
    print(f"<p mod n> = {{{','.join(map(str, info.residues))}}}")
    for spec in iso_classes(pair):
        orbit = ", ".join(format_poly(F.coefficients(a)) for a in frobenius_orbit(F, spec.s))
        print(f"minpoly {format_poly(minimal_polynomial(F, spec.s))}: generators [{orbit}]")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="paleymaps", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("census", help="emit the census of maps within bounds")
    c.add_argument("--max-q", type=int, required=True)
    c.add_argument("--max-genus", type=int, required=True)
    c.add_argument("--format", choices=["csv", "json"], default="csv")
    c.add_argument("--out", default=None, help="output path (default: stdout)")
    c.set_defaults(func=cmd_census)

    def field_args(sp):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--e", type=int, default=1)
        sp.add_argument("--n", type=int, required=True)

    m = sub.add_parser("map", help="build one map M_q(s) and compare invariants")
    field_args(m)
    m.add_argument("--s", default=None, help="generator as coefficients, constant term first")
    m.add_argument("--dump-map", action="store_true")
    m.set_defaults(func=cmd_map)

    v = sub.add_parser("verify", help="count maps with group AGL_1^(n)(q) by brute force")
    field_args(v)
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("dipole", help="dipole maps D_k(u)")
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--u", type=int, default=None)
    d.set_defaults(func=cmd_dipole)

    cv = sub.add_parser("cover", help="central cyclic k-sheeted covers")
    field_args(cv)
    cv.add_argument("--k", type=int, required=True)
    cv.set_defaults(func=cmd_cover)

    o = sub.add_parser("orbit", help="Galois orbit and field of definition")
    field_args(o)
    o.set_defaults(func=cmd_orbit)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help, or a usage error already reported
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"paleymaps: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"paleymaps: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
