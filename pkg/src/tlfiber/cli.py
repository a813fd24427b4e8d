"""Command line entry point.

One executable, one subcommand per pipeline stage: classification,
equivalence, canonical forms, class enumeration, diagram evaluation,
relation checking, the unitary invariant, and presentation emission.
JSON in, JSON out (stdout), diagnostics on stderr, deterministic bytes
for fixed inputs. Exit codes: 0 success or decided-true, 1 decided-false
(equiv and compare commands), 2 malformed input, 3 mathematical failure
(singular form, inadmissible data, parity obstruction, irrational
spectrum in exact mode).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import jsonio, scalars
from .classify import (
    admissible,
    canonical_form,
    enumerate_classes,
    equivalent_forms,
    theta,
)
from .diagrams import verify_relations
from .errors import InputError, MathError
from .fiber import BilinearForm, dimension_of, evaluate
from .hopf import present, relation_span, star_structure
from .matrices import DEFAULT_TOL, Tolerance, jordan_multiplicities
from .scalars import Field
from .unitary import canonical_phi, spectral_invariant, unitarily_equivalent

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_MATH = 3

_NUMERIC_ONLY = ("unitary-classify", "unitary-canonical", "unitary-equiv")


def _read_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as err:
        raise InputError("cannot read %s: %s" % (path, err)) from err
    except json.JSONDecodeError as err:
        raise InputError("%s is not JSON: %s" % (path, err)) from err


def _emit(obj, out_path: str | None = None) -> None:
    text = json.dumps(obj)
    if out_path:
        try:
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        except OSError as err:
            raise InputError("cannot write %s: %s" % (out_path, err)) from err
    print(text)


def _tolerance(args) -> Tolerance:
    return Tolerance(rank_threshold=args.rank_threshold,
                     cluster_radius=args.cluster_radius)


def _load_matrix(path: str, mode: str):
    m = jsonio.matrix_from_json(_read_json(path))
    return m.embed(Field.COMPLEX) if mode == "numeric" else m


def _load_form(path: str, mode: str) -> BilinearForm:
    return BilinearForm(_load_matrix(path, mode))


def _parse_scalar(text: str, mode: str):
    try:
        if mode == "numeric":
            return float(Fraction(text)) if "/" in text else float(text)
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise InputError("cannot parse scalar %r: %s" % (text, err)) from err


def _parse_real(text: str) -> float:
    try:
        return float(Fraction(text)) if "/" in text else float(text)
    except (ValueError, ZeroDivisionError) as err:
        raise InputError("cannot parse real %r: %s" % (text, err)) from err


def _split_list(text: str, what: str) -> list:
    items = [piece.strip() for piece in text.split(",")]
    if not items or any(not piece for piece in items):
        raise InputError("%s must be a comma-separated list, got %r"
                         % (what, text))
    return items


def _cmd_classify(args) -> int:
    b = _load_form(args.form, args.mode)
    tol = _tolerance(args)
    mu = jordan_multiplicities(theta(b.matrix, tol), tol)
    _emit({
        "d": scalars.scalar_to_json(dimension_of(b), b.field),
        "mu": jsonio.multiplicity_to_json(mu),
        "admissible": admissible(mu),
    })
    return EXIT_OK


def _cmd_equiv(args) -> int:
    tol = _tolerance(args)
    e1 = _load_matrix(args.a, args.mode)
    e2 = _load_matrix(args.b, args.mode)
    same = equivalent_forms(e1, e2, tol)
    _emit({"equivalent": same})
    return EXIT_OK if same else EXIT_FALSE


def _cmd_canonical(args) -> int:
    mu = jsonio.multiplicity_from_json(_read_json(args.mu))
    e = canonical_form(mu)
    _emit(jsonio.matrix_to_json(e), args.out)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    d = _parse_scalar(args.d, args.mode)
    domain = [_parse_scalar(piece, args.mode)
              for piece in _split_list(args.domain, "--domain")]
    classes = enumerate_classes(d, args.n, domain)
    _emit({"classes": [jsonio.multiplicity_to_json(mu) for mu in classes]})
    return EXIT_OK


def _cmd_eval_diagram(args) -> int:
    if (args.diagram is None) == (args.word is None):
        raise InputError("pass exactly one of --diagram or --word")
    b = _load_form(args.form, args.mode)
    if args.diagram is not None:
        f = jsonio.diagram_from_json(_read_json(args.diagram))
    else:
        f = jsonio.word_from_json(_read_json(args.word))
    _emit(jsonio.tensor_map_to_json(evaluate(b, f)), args.out)
    return EXIT_OK


def _cmd_tl_check(args) -> int:
    count = verify_relations(args.n)
    _emit({"n": args.n, "relations_checked": count, "ok": True})
    return EXIT_OK


def _cmd_unitary_classify(args) -> int:
    phi = _load_matrix(args.phi, "numeric")
    inv = spectral_invariant(phi, _parse_real(args.d))
    _emit(jsonio.invariant_to_json(inv))
    return EXIT_OK


def _cmd_unitary_canonical(args) -> int:
    values = tuple(_parse_real(piece)
                   for piece in _split_list(args.values, "--values"))
    if args.sign not in (1, -1):
        raise InputError("--sign must be 1 or -1, got %r" % (args.sign,))
    phi = canonical_phi(values, args.sign)
    _emit(jsonio.matrix_to_json(phi), args.out)
    return EXIT_OK


def _cmd_unitary_equiv(args) -> int:
    tol = _tolerance(args)
    phi1 = _load_matrix(args.a, "numeric")
    phi2 = _load_matrix(args.b, "numeric")
    same = unitarily_equivalent(phi1, phi2, _parse_real(args.d), tol)
    _emit({"equivalent": same})
    return EXIT_OK if same else EXIT_FALSE


def _cmd_hopf_present(args) -> int:
    if (args.star_h is None) != (args.star_sign is None):
        raise InputError("--star-h and --star-sign come together")
    b = _load_form(args.form, args.mode)
    star = None
    if args.star_h is not None:
        h = _parse_scalar(args.star_h, args.mode)
        star = star_structure(h, args.star_sign)
    _emit(jsonio.presentation_to_json(present(b, star)), args.out)
    return EXIT_OK


def _cmd_hopf_compare(args) -> int:
    tol = _tolerance(args)
    p1 = jsonio.presentation_from_json(_read_json(args.a))
    p2 = jsonio.presentation_from_json(_read_json(args.b))
    equal = (p1.n == p2.n
             and relation_span(p1.relations, tol).equals(
                 relation_span(p2.relations, tol)))
    _emit({"equal": equal})
    return EXIT_OK if equal else EXIT_FALSE


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("exact", "numeric"), default=None,
                        help="scalar field: exact rationals or complex floats")
    common.add_argument("--rank-threshold", type=float,
                        default=DEFAULT_TOL.rank_threshold)
    common.add_argument("--cluster-radius", type=float,
                        default=DEFAULT_TOL.cluster_radius)

    parser = argparse.ArgumentParser(
        prog="tlfiber",
        description="Classify fiber functors: bilinear forms, diagram "
                    "evaluation, unitary invariants, Hopf presentations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common],
                       help="conjugation invariant of a form")
    p.add_argument("--form", required=True)
    p.set_defaults(run=_cmd_classify)

    p = sub.add_parser("equiv", parents=[common],
                       help="decide whether two forms are equivalent")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(run=_cmd_equiv)

    p = sub.add_parser("canonical", parents=[common],
                       help="canonical form realizing a multiplicity function")
    p.add_argument("--mu", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(run=_cmd_canonical)

    p = sub.add_parser("enumerate", parents=[common],
                       help="equivalence classes for a loop value and domain")
    p.add_argument("--d", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--domain", required=True)
    p.set_defaults(run=_cmd_enumerate)

    p = sub.add_parser("eval-diagram", parents=[common],
                       help="evaluate a diagram or word against a form")
    p.add_argument("--form", required=True)
    p.add_argument("--diagram", default=None)
    p.add_argument("--word", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(run=_cmd_eval_diagram)

    p = sub.add_parser("tl-check", parents=[common],
                       help="verify the diagram-level relations up to n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(run=_cmd_tl_check)

    p = sub.add_parser("unitary-classify", parents=[common],
                       help="spectral invariant of a compact-set member")
    p.add_argument("--phi", required=True)
    p.add_argument("--d", required=True)
    p.set_defaults(run=_cmd_unitary_classify)

    p = sub.add_parser("unitary-canonical", parents=[common],
                       help="canonical member with a given eigenvalue list")
    p.add_argument("--values", required=True)
    p.add_argument("--sign", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(run=_cmd_unitary_canonical)

    p = sub.add_parser("unitary-equiv", parents=[common],
                       help="decide unitary equivalence of two members")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--d", required=True)
    p.set_defaults(run=_cmd_unitary_equiv)

    p = sub.add_parser("hopf-present", parents=[common],
                       help="emit the quadratic presentation of a form")
    p.add_argument("--form", required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--star-h", default=None)
    p.add_argument("--star-sign", type=int, default=None)
    p.set_defaults(run=_cmd_hopf_present)

    p = sub.add_parser("hopf-compare", parents=[common],
                       help="compare the relation spans of two presentations")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(run=_cmd_hopf_compare)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command in _NUMERIC_ONLY:
        if args.mode == "exact":
            print("%s runs in the approximate field; --mode exact is not "
                  "available" % args.command, file=sys.stderr)
            return EXIT_INPUT
        args.mode = "numeric"
    elif args.mode is None:
        args.mode = "exact"
    try:
        return args.run(args)
    except InputError as err:
        print("input error: %s" % err, file=sys.stderr)
        return EXIT_INPUT
    except MathError as err:
        print("%s: %s" % (type(err).__name__, err), file=sys.stderr)
        return EXIT_MATH


def entry() -> None:
    sys.exit(run())


if __name__ == "__main__":
    entry()
