"""Command-line entry point: ``brauer-workbench <verb> ...``.

Exit status is 0 on success, 2 on invalid input and 1 when a search
budget runs out (a "witness search exhausted" result is never reported
as Division).
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys

from . import brauer, grouplat, lattice, procyclic, quaternion
from .exactnum import INPUT_BOUND, as_rational
from .fields import RationalField, describe, parse_descriptor
from .finfield import (DEFAULT_MAX_BITS, FiniteField, Poly, SizeCapExceeded, norm_image,
                       parse_field)

SEED_ENV = "BRAUER_WORKBENCH_SEED"


class Exhausted(Exception):
    pass


# -- argument types ---------------------------------------------------------


def _descriptor(text):
    try:
        return parse_descriptor(text, max_bits=64)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _finite_field(text):
    try:
        return parse_field(text, max_bits=64)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational(text, name):
    try:
        r = as_rational(text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ValueError(f"argument {name}: {exc}") from None
    if abs(r.numerator) > INPUT_BOUND or r.denominator > INPUT_BOUND:
        raise ValueError(f"argument {name}: {text} exceeds the input bound 10^12")
    return r


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _coords(text):
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("a quaternion needs four comma separated coordinates")
    return parts


# -- helpers ----------------------------------------------------------------


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    if env is None or env == "":
        return 0
    try:
        return int(env)
    except ValueError:
        raise ValueError(f"{SEED_ENV} must be an integer, got {env!r}") from None


def _element(base, text, name):
    """Coordinate text: an integer or rational, or '#code' for a finite field element."""
    if isinstance(base, RationalField):
        return _rational(text, name)
    try:
        if text.startswith("#"):
            code = int(text[1:])
            if not 0 <= code < base.order:
                raise ValueError(f"element code {code} out of range")
            return base.element(code)
        r = _rational(text, name)
        return base(r.numerator) / base(r.denominator)
    except ZeroDivisionError:
        raise ValueError(f"argument {name}: denominator vanishes in {describe(base)}") from None
    except ValueError as exc:
        msg = str(exc)
        raise ValueError(msg if msg.startswith("argument") else f"argument {name}: {msg}") from None


def _algebra(args):
    base = args.base
    if not isinstance(base, (RationalField, FiniteField)):
        raise ValueError(f"argument --base: quaternion algebras need Q or GF(q), not {describe(base)}")
    if isinstance(base, FiniteField) and base.p == 2:
        raise ValueError("argument --base: characteristic 2 is not supported")
    if args.a is None or args.b is None:
        raise ValueError("arguments -a and -b are required")
    a, b = _element(base, args.a, "-a"), _element(base, args.b, "-b")
    for name, v in (("-a", a), ("-b", b)):
        if v == 0:
            raise ValueError(f"argument {name}: must be nonzero")
    return quaternion.QuaternionAlgebra(base, a, b)


def _emit(obj, as_json: bool, out):
    if as_json:
        out.write(json.dumps(obj, separators=(",", ":")) + "\n")
        return
    for key, value in obj.items():
        if isinstance(value, (list, tuple)):
            value = " | ".join(json.dumps(v, separators=(",", ":")) if not isinstance(v, str) else v
                               for v in value)
        elif isinstance(value, (dict, bool)) or value is None:
            value = json.dumps(value, separators=(",", ":"))
        out.write(f"{key}: {value}\n")


# -- verbs ------------------------------------------------------------------


def cmd_quat_classify(args):
    A = _algebra(args)
    try:
        verdict = quaternion.classify(A, max_height=args.max_height)
    except quaternion.SearchExhausted as exc:
        raise Exhausted(str(exc)) from None
    return verdict.to_json()


def cmd_quat_eval(args):
    if args.op == "zero-witness":
        F = args.base
        if not isinstance(F, FiniteField):
            raise ValueError("argument --base: the zero-norm witness needs a finite field")
        if args.m is None or args.b is None:
            raise ValueError("arguments --m and -b are required for --op zero-witness")
        u = quaternion.zero_norm_witness(F, _element(F, args.m, "--m"), _element(F, args.b, "-b"))
        return {"algebra": [str(u.algebra.a), str(u.algebra.b)],
                "witness": [str(c) for c in u.coords], "norm": str(quaternion.norm(u))}
    A = _algebra(args)
    if args.u is None:
        raise ValueError("argument --u is required")
    u = A(*(_element(A.base, c, "--u") for c in args.u))
    if args.op == "norm":
        return {"norm": str(quaternion.norm(u))}
    if args.op == "conj":
        return {"result": [str(c) for c in u.conjugate().coords]}
    if args.op == "inv":
        try:
            w = quaternion.inverse(u)
        except quaternion.ZeroNormError:
            raise ValueError("argument --u: element has norm 0 (zero divisor candidate)") from None
        return {"result": [str(c) for c in w.coords]}
    if args.v is None:
        raise ValueError("argument --v is required for --op mul")
    v = A(*(_element(A.base, c, "--v") for c in args.v))
    w = quaternion.multiply(u, v)
    return {"result": [str(c) for c in w.coords], "norm": str(quaternion.norm(w))}


def _subfield_pair(args):
    L, K = args.L, args.K
    if L.p != K.p or L.n % K.n:
        raise ValueError(f"argument --K: {describe(K)} is not a subfield of {describe(L)}")
    if L.order > 1 << 16:
        raise ValueError(f"argument --L: |{describe(L)}| exceeds the exhaustive bound 2^16")
    return L, K


def cmd_brauer_cyclic(args):
    L, K = _subfield_pair(args)
    return brauer.relative_brauer_cyclic(L, K).to_json()


def cmd_brauer_realclosed(args):
    return brauer.realclosed_brauer().to_json()


def cmd_brauer_surjective(args):
    return brauer.norm_surjective_degree_p(args.p).to_json()


def cmd_brauer_quadratic_norm(args):
    reps = brauer.quadratic_norm_check(args.q)
    return {"q": str(args.q), "levels": [
        {"extension": r.extension, "surjective": r.surjective} for r in reps]}


def _build_tower(args):
    bits = args.max_ambient
    seed = _seed(args)
    if args.kind == "artin-schreier":
        if args.p is None:
            raise ValueError("argument --p is required for artin-schreier towers")
        alpha = 1 if args.alpha is None else args.alpha
        return lattice.build_artin_schreier_tower(args.p, args.depth, alpha, bits, seed)
    if args.kind == "kummer":
        if args.q is None or args.p is None:
            raise ValueError("arguments --q and --p are required for kummer towers")
        return lattice.build_kummer_tower(args.q, args.p, args.depth, args.alpha, bits, seed)
    if args.q is None:
        raise ValueError("argument --q is required for quadratic towers")
    return lattice.build_quadratic_tower(args.q, args.depth, bits, seed)


def cmd_tower_build(args):
    return _build_tower(args).to_json()


def cmd_tower_verify(args):
    if args.report:
        try:
            with open(args.report) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ValueError(f"argument --report: {exc}") from None
        rep = lattice.TowerReport.from_json(data)
    else:
        if args.kind is None:
            raise ValueError("give --report or --kind with builder arguments")
        rep = _build_tower(args)
    ok = lattice.verify_linear_lattice(rep, args.degree_bound)
    return {"base": repr(rep.base), "degree_bound": str(args.degree_bound), "linear": ok}


def cmd_tower_fourth(args):
    table = lattice.fourth_power_check(args.q)
    return {"q": str(args.q), "all_fourth_powers": True,
            "roots": {str(a): str(x) for a, x in sorted(table.items())}}


def cmd_anticlosure(args):
    return procyclic.anticlosure(args.field).to_json()


def cmd_mgroup(args):
    if args.fixture:
        try:
            G = grouplat.load_fixture(args.fixture)
        except (OSError, json.JSONDecodeError) as exc:
            raise ValueError(f"argument --fixture: {exc}") from None
    elif args.group:
        try:
            G = grouplat.named_group(args.group)
        except ValueError as exc:
            raise ValueError(f"argument --group: {exc}") from None
    else:
        raise ValueError("give --group NAME or --fixture FILE")
    if G.order == 1:
        raise ValueError("argument --group: the trivial group has no maximal subgroup")
    lat = grouplat.subgroups(G)
    cyc, gen = grouplat.is_cyclic(G)
    return {"name": G.name, "order": str(G.order), "subgroups": str(len(lat.subgroups)),
            "maximal": [[str(e) for e in lat.members(i)] for i in lat.maximal],
            "is_m_group": len(lat.maximal) == 1, "is_cyclic": cyc,
            "generator": None if gen is None else str(gen)}


def cmd_factor_degrees(args):
    K = args.field
    if not isinstance(K, procyclic.ProcyclicField):
        raise ValueError("argument --field: factor-degrees needs a PC(q;p) descriptor")
    try:
        f = Poly.parse(K.base, args.poly)
    except ValueError as exc:
        raise ValueError(f"argument --poly: {exc}") from None
    degs = procyclic.factor_degrees_over_K(f, K, _seed(args), args.max_ambient)
    return {"field": repr(K), "poly": str(f), "degrees": [str(d) for d in degs]}


def cmd_sqrt_check(args):
    alpha = brauer.sqrt_formula(args.c, args.d)
    res = brauer.sqrt_formula_check(args.c, args.d)
    return {"alpha": [repr(alpha.real), repr(alpha.imag)], "residual": repr(res),
            "within_tolerance": res <= brauer.sqrt_tolerance(args.c, args.d)}


def cmd_norm_image(args):
    L, K = _subfield_pair(args)
    return {"extension": f"{describe(L)}/{describe(K)}",
            "image": [str(x) for x in sorted(norm_image(L, K))]}


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    common.add_argument("--seed", type=_positive, default=None,
                        help=f"search-order seed (default ${SEED_ENV} or 0)")
    common.add_argument("--max-height", type=_positive, default=quaternion.DEFAULT_MAX_HEIGHT,
                        help="height budget for witness search over Q")
    common.add_argument("--max-ambient", type=_positive, default=DEFAULT_MAX_BITS,
                        help="field size cap in bits (default 24)")

    parser = argparse.ArgumentParser(prog="brauer-workbench",
                                     description="Exact computations with quaternion algebras, "
                                                 "norm cokernels and extension towers.")
    verbs = parser.add_subparsers(dest="verb", metavar="VERB")
    verbs.required = True

    def leaf(sub, name, func, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        p.set_defaults(func=func)
        return p

    quat = verbs.add_parser("quat", help="quaternion algebras").add_subparsers(dest="action")
    quat.required = True
    for name, func in (("classify", cmd_quat_classify), ("eval", cmd_quat_eval)):
        p = leaf(quat, name, func)
        p.add_argument("--base", type=_descriptor, required=True, help="Q or GF(q), q odd")
        p.add_argument("-a", type=str, help="i^2")
        p.add_argument("-b", type=str, help="j^2")
        if name == "eval":
            p.add_argument("--op", choices=["norm", "mul", "inv", "conj", "zero-witness"], required=True)
            p.add_argument("--u", type=_coords, help="t,x,y,z")
            p.add_argument("--v", type=_coords, help="t,x,y,z (for mul)")
            p.add_argument("--m", type=str, help="m for the zero-norm witness")

    br = verbs.add_parser("brauer", help="relative Brauer groups").add_subparsers(dest="action")
    br.required = True
    p = leaf(br, "cyclic", cmd_brauer_cyclic)
    p.add_argument("--L", type=_finite_field, required=True)
    p.add_argument("--K", type=_finite_field, required=True)
    leaf(br, "realclosed", cmd_brauer_realclosed)
    p = leaf(br, "surjective", cmd_brauer_surjective)
    p.add_argument("--p", type=_positive, required=True)
    p = leaf(br, "quadratic-norm", cmd_brauer_quadratic_norm)
    p.add_argument("--q", type=_positive, required=True)

    tw = verbs.add_parser("tower", help="linear towers over PC(q;p)").add_subparsers(dest="action")
    tw.required = True
    for name, func in (("build", cmd_tower_build), ("verify", cmd_tower_verify)):
        p = leaf(tw, name, func)
        p.add_argument("--kind", choices=["artin-schreier", "kummer", "quadratic"],
                       required=(name == "build"))
        p.add_argument("--q", type=_positive)
        p.add_argument("--p", type=_positive)
        p.add_argument("--depth", type=_positive, default=1)
        p.add_argument("--alpha", type=_positive, help="override the seed element (code)")
        if name == "verify":
            p.add_argument("--report", help="TowerReport JSON file")
            p.add_argument("--degree-bound", type=_positive, default=1)
    p = leaf(tw, "fourth-power", cmd_tower_fourth)
    p.add_argument("--q", type=_positive, required=True)

    p = leaf(verbs, "anticlosure", cmd_anticlosure)
    p.add_argument("--field", type=_descriptor, required=True)

    mg = verbs.add_parser("mgroup", help="M-group test").add_subparsers(dest="action")
    mg.required = True
    p = leaf(mg, "check", cmd_mgroup)
    p.add_argument("--group", help="C4, C2xC2, S3, D4, Q8, A4, ...")
    p.add_argument("--fixture", help="JSON fixture file")

    p = leaf(verbs, "factor-degrees", cmd_factor_degrees)
    p.add_argument("--field", type=_descriptor, required=True, help="PC(q;p)")
    p.add_argument("--poly", required=True, help="ascending coefficients, e.g. 1,0,1")

    p = leaf(verbs, "sqrt-check", cmd_sqrt_check)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--d", type=float, required=True)

    p = leaf(verbs, "norm-image", cmd_norm_image)
    p.add_argument("--L", type=_finite_field, required=True)
    p.add_argument("--K", type=_finite_field, required=True)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except Exhausted as exc:
        err.write(f"{parser.prog}: {exc}\n")
        return 1
    except SizeCapExceeded as exc:
        err.write(f"{parser.prog}: budget exhausted: {exc} (raise --max-ambient)\n")
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        err.write(f"{parser.prog}: error: {exc}\n")
        return 2
    _emit(result, args.json, out)
    return 0


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
