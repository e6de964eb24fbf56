"""Command-line front end.

Every subcommand writes one canonical JSON document (sorted keys) to
stdout and a short human summary to stderr.  Exit status: 0 on success,
2 for malformed input, 3 for domain errors.

Classes are given as ``n:c0,c1,...,cn`` (coefficient of [P^0] first) or
as a JSON object ``{"ambient": n, "coeffs": [...]}``, optionally with
``"dim"`` and ``"signed"`` keys.  Input classes are unsigned ``c_Ma``
unless ``--signed`` is passed.
"""

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import __version__
from .chow_core import ChowClass, check_support, poly_of_class, ranks_of, signed, smooth_hypersurface_class
from .cones import (
    cone_class,
    cone_class_general,
    pullback_class,
    vertex_euler_obstruction,
    vertex_term,
)
from .conormal_ed import TRANSVERSALITY_CAVEAT, conormal_of, ed_degree
from .dual_variety import dual_defect_degree, dual_report_signed, hypersurface_ranks, mt_dual_degree
from .duality import even_dim_self_dual_check, is_self_dual, self_dual_family
from .errors import CMError, InvalidInput, ZeroClass
from .plucker_singular import (
    HypersurfaceSing,
    PlaneCurveSing,
    curve_ed_degree,
    hypcons_check,
    piene_isolated_class,
    plane_curve_class,
    plane_curve_dual,
    self_dual_rho_budget,
    self_dual_surface_class,
    teissier_dual_degree,
)


@dataclass(frozen=True)
class ClassSpec:
    cls: ChowClass
    dim: Optional[int] = None
    signed: bool = False

    @property
    def ambient(self):
        return self.cls.ambient

    @property
    def coeffs(self):
        return self.cls.coeffs


_TEXT_CLASS = re.compile(r"^(\d+):(-?\d+(?:,-?\d+)*)$")
_JSON_KEYS = {"ambient", "coeffs", "dim", "signed"}


def _strict_int(v, what):
    if isinstance(v, bool) or not isinstance(v, int):
        raise InvalidInput("%s must be an integer" % what)
    return v


def parse_class(text: str) -> ClassSpec:
    if not isinstance(text, str):
        raise InvalidInput("class specification must be text")
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except ValueError as exc:
            raise InvalidInput("invalid JSON class: %s" % exc) from None
        if not isinstance(obj, dict) or not {"ambient", "coeffs"} <= obj.keys():
            raise InvalidInput('JSON class needs "ambient" and "coeffs"')
        extra = set(obj) - _JSON_KEYS
        if extra:
            raise InvalidInput("unknown keys in JSON class: %s" % ", ".join(sorted(extra)))
        n = _strict_int(obj["ambient"], "ambient")
        coeffs = obj["coeffs"]
        if not isinstance(coeffs, list):
            raise InvalidInput("coeffs must be a list")
        coeffs = [_strict_int(c, "coefficient") for c in coeffs]
        dim = obj.get("dim")
        if dim is not None:
            dim = _strict_int(dim, "dim")
        is_signed = obj.get("signed", False)
        if not isinstance(is_signed, bool):
            raise InvalidInput("signed must be a boolean")
    else:
        compact = re.sub(r"\s+", "", stripped)
        m = _TEXT_CLASS.match(compact)
        if not m:
            raise InvalidInput("class must look like n:c0,c1,...,cn, got %r" % text)
        n = int(m.group(1))
        coeffs = [int(c) for c in m.group(2).split(",")]
        dim, is_signed = None, False
    if len(coeffs) != n + 1:
        raise InvalidInput("a class in P^%d needs %d coefficients, got %d" % (n, n + 1, len(coeffs)))
    if dim is not None and not 0 <= dim <= n:
        raise InvalidInput("dim must lie in 0..%d" % n)
    return ClassSpec(ChowClass(n, tuple(coeffs)), dim, is_signed)


# ---- JSON encoding ---------------------------------------------------------


def _rat(x):
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def _cls(c, dim=None, is_signed=None):
    out = {"ambient": c.ambient, "coeffs": list(c.coeffs)}
    if dim is not None:
        out["dim"] = dim
    if is_signed:
        out["signed"] = True
    return out


def _hpoly(c):
    return list(poly_of_class(c).poly_coeffs)


def _class_block(c, dim=None, is_signed=False):
    """Class plus its H-polynomial, in the convention given."""
    return {"class": _cls(c, dim, is_signed), "h_poly": _hpoly(c), "text": str(c)}


# ---- argument plumbing -----------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(message)

    def exit(self, status=0, message=None):
        # --help / --version
        if message:
            sys.stderr.write(message)
        raise _EarlyExit(status)


class _EarlyExit(Exception):
    def __init__(self, status):
        self.status = status


def _class_arg(text):
    try:
        return parse_class(text)
    except InvalidInput as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pair(sep):
    def conv(text):
        parts = text.split(sep)
        if len(parts) != 2:
            raise argparse.ArgumentTypeError("expected A%sB, got %r" % (sep, text))
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise argparse.ArgumentTypeError("expected integers in %r" % text) from None

    return conv


def _resolve(spec, args):
    """Return ``(unsigned_class, dim, signed_class)`` for a ClassSpec plus CLI flags."""
    c = spec.cls
    dim = args.dim if getattr(args, "dim", None) is not None else spec.dim
    is_signed = spec.signed or getattr(args, "signed", False)
    if dim is None:
        if c.is_zero:
            raise ZeroClass("cannot infer the dimension of the zero class")
        dim = c.top_dimension
    check_support(c, dim)
    if is_signed:
        return signed(c, dim), dim, c
    return c, dim, signed(c, dim)


def _add_class_opts(p, dim=True, want_signed=True):
    p.add_argument("--class", dest="cls", type=_class_arg, required=True, metavar="SPEC")
    if dim:
        p.add_argument("--dim", type=int, help="dimension of V (default: top nonzero degree)")
    if want_signed:
        p.add_argument("--signed", action="store_true", help="input is the signed class")


# ---- subcommands -----------------------------------------------------------


def cmd_dual(args):
    unsigned, dim, s = _resolve(args.cls, args)
    rep = dual_report_signed(s)
    dual_unsigned = signed(rep.dual_class_signed, rep.dual_dim)
    result = {
        "input": _cls(unsigned, dim),
        "dual_signed": _class_block(rep.dual_class_signed, is_signed=True),
        "dual": _cls(dual_unsigned, rep.dual_dim),
        "dual_dim": rep.dual_dim,
        "defect": rep.defect,
        "dual_degree": rep.dual_degree,
        "dual_degree_signed": rep.dual_degree_signed,
    }
    summary = "dual: dim %d, degree %d (defect %d); c^-_Ma = %s" % (
        rep.dual_dim, rep.dual_degree, rep.defect, poly_of_class(rep.dual_class_signed)
    )
    return result, summary


def cmd_ranks(args):
    unsigned, dim, s = _resolve(args.cls, args)
    ranks = ranks_of(s).ranks
    return {"input": _cls(unsigned, dim), "ranks": list(ranks)}, "ranks: %s" % (list(ranks),)


def cmd_conormal(args):
    unsigned, dim, _ = _resolve(args.cls, args)
    cyc = conormal_of(unsigned, dim)
    n = cyc.ambient
    terms = [
        {"H": n - k, "h": k + 1, "coeff": d} for k, d in enumerate(cyc.bidegrees)
    ]
    result = {"input": _cls(unsigned, dim), "bidegrees": list(cyc.bidegrees), "terms": terms}
    return result, "conormal bidegrees: %s" % (list(cyc.bidegrees),)


def cmd_ed(args):
    unsigned, dim, _ = _resolve(args.cls, args)
    value = ed_degree(unsigned, dim)
    result = {
        "input": _cls(unsigned, dim),
        "ed_degree": value,
        "polar_degrees": list(conormal_of(unsigned, dim).bidegrees),
        "assumption": TRANSVERSALITY_CAVEAT,
    }
    return result, "ED degree: %d (%s)" % (value, TRANSVERSALITY_CAVEAT)


def cmd_dual_variety(args):
    unsigned, dim, _ = _resolve(args.cls, args)
    rep = dual_defect_degree(unsigned, dim)
    mt = mt_dual_degree(unsigned, dim, rep.dual_codim)
    result = {
        "input": _cls(unsigned, dim),
        "defect": rep.defect,
        "dual_codim": rep.dual_codim,
        "dual_dim": rep.dual_dim,
        "dual_degree": rep.dual_degree,
        "dual_degree_signed": rep.dual_degree_signed,
        "dual_signed": _class_block(rep.dual_class_signed, is_signed=True),
        "mt_cross_check": {"value": mt, "agrees": mt == rep.dual_degree_signed},
    }
    summary = "defect %d, dual codim %d, dual degree %d; MT cross-check %d" % (
        rep.defect, rep.dual_codim, rep.dual_degree, mt
    )
    return result, summary


def cmd_cone(args):
    base = args.cls.cls
    if args.general:
        if args.r is None:
            raise InvalidInput("--general needs --r")
        v = cone_class_general(base, args.r)
        dim = v.top_dimension
        mode = {"form": "general", "r": args.r, "vertex_dim": args.r - 2}
    else:
        if args.to is None:
            raise InvalidInput("cone needs --to n (or --general --r r)")
        m = base.ambient if args.frm is None else args.frm
        if m != base.ambient:
            raise InvalidInput("--from %d does not match the class ambient P^%d" % (m, base.ambient))
        v = cone_class(base, args.to)
        dim = v.top_dimension
        mode = {"form": "complementary", "from": m, "to": args.to, "vertex_dim": args.to - m - 1}
    eu = vertex_euler_obstruction(base)
    result = {
        "base": _cls(base),
        "cone": _cls(v, dim if dim >= 0 else None),
        "cone_h_poly": _hpoly(v),
        "vertex_euler_obstruction": eu,
        "mode": mode,
    }
    return result, "cone: %s; Eu at vertex = %d" % (v, eu)


def cmd_euler_vertex(args):
    base = args.cls.cls
    dim = args.dim if args.dim is not None else args.cls.dim
    eu = vertex_euler_obstruction(base, dim)
    result = {"base": _cls(base), "euler_obstruction": eu, "vertex_term": vertex_term(base)}
    return result, "vertex Euler obstruction: %d" % eu


def cmd_pullback(args):
    base = args.cls.cls
    if args.frm is not None and args.frm != base.ambient:
        raise InvalidInput("--from %d does not match the class ambient P^%d" % (args.frm, base.ambient))
    out = pullback_class(base, args.to)
    return {"base": _cls(base), "pullback": _cls(out), "h_poly": _hpoly(out)}, "pullback: %s" % out


def cmd_hypersurface(args):
    c = smooth_hypersurface_class(args.n, args.d)
    sing = -1 if args.sing_dim is None else args.sing_dim
    partial = hypersurface_ranks(args.n, args.d, sing)
    result = {
        "smooth_class": _cls(c, args.n - 1),
        "sing_dim": sing,
        "ranks": list(partial.values),
        "known": list(partial.known),
    }
    return result, "smooth c_Ma: %s; forced ranks %s" % (c, list(partial.values))


def cmd_plucker_curve(args):
    sings = [PlaneCurveSing(m, mu) for m, mu in args.sing]
    d = args.d
    c = plane_curve_class(d, sings)
    R = sum(s.rho for s in sings)
    dual = plane_curve_dual(d, R)
    result = {
        "d": d,
        "rho_sum": R,
        "class_signed": _class_block(c, is_signed=True),
        "class": _cls(-c, 1),
        "dual_signed": _class_block(dual.dual_class_signed, is_signed=True),
        "dual_degree": dual.dual_degree,
        "dual_rho_sum": dual.dual_rho_sum,
        "ed_degree": curve_ed_degree(d, R),
        "assumption": TRANSVERSALITY_CAVEAT,
    }
    summary = "deg C^vee = %d, sum rho^vee = %d, ED degree %d" % (
        dual.dual_degree, dual.dual_rho_sum, result["ed_degree"]
    )
    return result, summary


def cmd_plucker_hypersurface(args):
    sings = [HypersurfaceSing(mu, muh) for mu, muh in args.sing]
    c = piene_isolated_class(args.n, args.d, sings)
    teissier = teissier_dual_degree(args.n, args.d, sings)
    result = {
        "class": _cls(c, args.n - 1),
        "teissier_dual_degree": teissier,
    }
    try:
        rep = dual_defect_degree(c, args.n - 1)
        result["defect"] = rep.defect
        result["dual_degree_signed"] = rep.dual_degree_signed
    except ZeroClass:
        result["defect"] = None
    return result, "c_Ma = %s; Teissier deg X^vee = %d" % (c, teissier)


def cmd_sd_check(args):
    unsigned, dim, s = _resolve(args.cls, args)
    result = {"input": _cls(unsigned, dim), "self_dual_class": is_self_dual(s)}
    if unsigned.ambient % 2 == 0:
        result["even_ambient_constraint"] = even_dim_self_dual_check(s, dim)
    return result, "Chern-Mather class %s self-dual" % ("is" if result["self_dual_class"] else "is not")


def cmd_sd_solve(args):
    n = args.n
    fixed = dict(args.fix or [])
    if len(fixed) != len(args.fix or []):
        raise InvalidInput("an index was fixed twice")
    dim = args.dim
    if dim is None:
        nonzero = [j for j, v in fixed.items() if v]
        dim = max(nonzero) if nonzero else 0
    sign = 1 if args.signed or dim % 2 == 0 else -1
    fam = self_dual_family(n, {j: sign * v for j, v in fixed.items()})
    # report in the input convention
    conv = lambda vec: [_rat(sign * x) for x in vec]
    result = {
        "n": n,
        "dim": dim,
        "convention": "signed" if args.signed else "unsigned",
        "fixed": {str(j): v for j, v in sorted(fixed.items())},
        "parameters": list(fam.parameters),
        "particular": conv(fam.particular),
        "basis": [conv(b) for b in fam.basis],
        "has_integer_points": fam.has_integer_points,
    }
    if fam.has_integer_points:
        result["integer_particular"] = [sign * x for x in fam.integer_particular]
        result["integer_basis"] = [[sign * x for x in b] for b in fam.integer_basis]
    summary = "%d-parameter family (free coefficients %s)" % (fam.dimension, list(fam.parameters))
    return result, summary


def cmd_sd_surface(args):
    e = "isolated" if args.isolated else args.e
    if e is None:
        raise InvalidInput("give --e E or --isolated")
    c = self_dual_surface_class(args.d, e)
    result = {"class": _cls(c, 2), "ed_degree": ed_degree(c, 2), "self_dual_class": is_self_dual(c)}
    return result, "c_Ma = %s" % c


def cmd_sd_budget(args):
    b = self_dual_rho_budget(args.d)
    result = {"rho_sum": b.rho_sum, "node_count": _rat(b.node_count), "parity_ok": b.parity_ok}
    return result, "sum rho = %d, nodes = %s%s" % (
        b.rho_sum, b.node_count, "" if b.parity_ok else " (not an integer: no nodal example)"
    )


def cmd_sd_hypcons(args):
    v = hypcons_check(args.n, args.d, args.sing_dim)
    result = {
        "feasible": v.feasible,
        "closed_form_feasible": v.closed_form_feasible,
        "solver_feasible": v.solver_feasible,
        "threshold": _rat(v.threshold),
        "reason": v.reason,
    }
    return result, "%s: %s" % ("feasible" if v.feasible else "infeasible", v.reason)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--json", action=argparse.BooleanOptionalAction, default=argparse.SUPPRESS)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)

    parser = _Parser(prog="cmdual", description="Chern-Mather classes under projective duality.")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument("--json", action=argparse.BooleanOptionalAction, default=True)
    parser.add_argument("--quiet", action="store_true", default=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        p.set_defaults(func=func)
        return p

    for name, func in [("dual", cmd_dual), ("ranks", cmd_ranks), ("conormal", cmd_conormal),
                       ("ed", cmd_ed), ("dual-variety", cmd_dual_variety)]:
        _add_class_opts(add(name, func))

    p = add("cone", cmd_cone)
    _add_class_opts(p, dim=False, want_signed=False)
    p.add_argument("--from", dest="frm", type=int)
    p.add_argument("--to", type=int)
    p.add_argument("--general", action="store_true")
    p.add_argument("--r", type=int)

    p = add("euler-vertex", cmd_euler_vertex)
    _add_class_opts(p, want_signed=False)

    p = add("pullback", cmd_pullback)
    _add_class_opts(p, dim=False, want_signed=False)
    p.add_argument("--from", dest="frm", type=int)
    p.add_argument("--to", type=int, required=True)

    p = add("hypersurface", cmd_hypersurface)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--sing-dim", type=int)

    plucker = sub.add_parser("plucker").add_subparsers(dest="kind", required=True, parser_class=_Parser)
    p = plucker.add_parser("curve", parents=[common])
    p.set_defaults(func=cmd_plucker_curve)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--sing", type=_pair(":"), action="append", default=[], metavar="M:MU")
    p = plucker.add_parser("hypersurface", parents=[common])
    p.set_defaults(func=cmd_plucker_hypersurface)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--sing", type=_pair(":"), action="append", default=[], metavar="MU:MUH")

    sd = sub.add_parser("self-dual").add_subparsers(dest="kind", required=True, parser_class=_Parser)
    p = sd.add_parser("check", parents=[common])
    p.set_defaults(func=cmd_sd_check)
    _add_class_opts(p)
    p = sd.add_parser("solve", parents=[common])
    p.set_defaults(func=cmd_sd_solve)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--fix", type=_pair("="), action="append", metavar="J=VALUE")
    p.add_argument("--dim", type=int)
    p.add_argument("--signed", action="store_true")
    p = sd.add_parser("surface", parents=[common])
    p.set_defaults(func=cmd_sd_surface)
    p.add_argument("--d", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--e", type=int)
    g.add_argument("--isolated", action="store_true")
    p = sd.add_parser("budget", parents=[common])
    p.set_defaults(func=cmd_sd_budget)
    p.add_argument("--d", type=int, required=True)
    p = sd.add_parser("hypcons", parents=[common])
    p.set_defaults(func=cmd_sd_hypcons)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--sing-dim", type=int, required=True)
    return parser


def _dump(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def run(argv, stderr=None):
    """Execute one command; returns ``(exit_code, stdout_text)``."""
    stderr = sys.stderr if stderr is None else stderr
    argv = list(argv)
    quiet = "--quiet" in argv
    as_json = "--no-json" not in argv
    try:
        args = build_parser().parse_args(argv)
        quiet, as_json = args.quiet, args.json
        result, summary = args.func(args)
    except _EarlyExit as exc:
        return exc.status, ""
    except CMError as exc:
        doc = {"error": {"code": exc.code, "message": str(exc)}}
        if not quiet:
            stderr.write("error [%s]: %s\n" % (exc.code, exc))
        return exc.exit_code, _dump(doc) if as_json else ""
    command = argv_command(args)
    if not as_json:
        return 0, summary + "\n"
    if not quiet:
        stderr.write(summary + "\n")
    return 0, _dump({"command": command, "result": result})


def argv_command(args):
    kind = getattr(args, "kind", None)
    return args.command if kind is None else "%s %s" % (args.command, kind)


def main(argv=None):
    code, out = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
