"""Command line interface (`qjalg`): evaluation, queries, expansion, verify.

Exit codes: 0 on success, 1 when an evaluation fails or a verification
check fails, 2 for usage errors (including expression syntax errors, which
are reported with a byte offset on standard error).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .calculus import Bracket, bracket
from .dimensions import DimFamily, dim_closed
from .forms import Algebra, InconsistencyError, QJForm, ScaledJForm, member
from .parser import EvalError, ParseError, parse_and_evaluate
from .series import DEFAULT_QPREC, DEFAULT_UMAX, BigradedSeries, PrecisionError, expand
from .verify import SUITE_NAMES, run_suites

_ALGEBRAS = {a.value.lower(): a for a in Algebra}
_FAMILIES = {f.value.lower(): f for f in DimFamily}
_BRACKETS = {"rc": Bracket.RC_TAU, "rcd": Bracket.RC_D, "tv": Bracket.TV}


def _coeff_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def _form_json(f: QJForm) -> list[dict]:
    return [{"exponents": list(e), "coeff": _coeff_str(c)} for e, c in f.terms()]


def _scaled_json(s: ScaledJForm) -> dict:
    return {"c_power": s.c_power, "form": _form_json(s.form)}


def _series_json(s: BigradedSeries) -> dict:
    return {
        "weight": s.weight,
        "q_prec": s.q_prec,
        "u_val": s.u_val,
        "u_max": s.u_max,
        "coeffs": [{"q": m, "u": n, "coeff": _coeff_str(c)} for (m, n), c in s.items()],
    }


def _emit(args: argparse.Namespace, result, text: str, ok: bool = True, errors: list[str] | None = None) -> int:
    errors = errors or []
    if args.json:
        print(json.dumps({"ok": ok, "result": result, "errors": errors}, indent=None))
    else:
        if text:
            print(text)
        for err in errors:
            print(f"error: {err}", file=sys.stderr)
    return 0 if ok else 1


def _eval_expression(text: str) -> QJForm | ScaledJForm:
    return parse_and_evaluate(text)


def _require_plain_form(value: QJForm | ScaledJForm, command: str) -> QJForm:
    if isinstance(value, ScaledJForm):
        raise EvalError(f"{command} expects a plain form; q(...) carries a power of 2*i*pi")
    return value


def _cmd_eval(args) -> int:
    value = _eval_expression(args.expr)
    if isinstance(value, ScaledJForm):
        return _emit(args, _scaled_json(value), str(value))
    return _emit(args, _form_json(value), str(value))


def _cmd_weight(args) -> int:
    form = _require_plain_form(_eval_expression(args.expr), "weight")
    comps = form.weight_components()
    if not comps:
        raise EvalError("the zero form has no weight")
    weights = [w for w, _ in comps]
    return _emit(args, weights, ", ".join(str(w) for w in weights))


def _cmd_depth(args) -> int:
    form = _require_plain_form(_eval_expression(args.expr), "depth")
    profile = form.depth()
    return _emit(args, {"s1": profile.s1, "s2": profile.s2}, f"({profile.s1}, {profile.s2})")


def _cmd_member(args) -> int:
    algebra = _ALGEBRAS.get(args.algebra.lower())
    if algebra is None:
        raise EvalError(f"unknown algebra {args.algebra!r}; choose from {', '.join(a.value for a in Algebra)}")
    form = _require_plain_form(_eval_expression(args.expr), "member")
    verdict = member(form, algebra)
    return _emit(args, verdict, "true" if verdict else "false")


def _parse_family(name: str) -> DimFamily:
    family = _FAMILIES.get(name.lower())
    if family is None:
        raise EvalError(f"unknown family {name!r}; choose from {', '.join(f.value for f in DimFamily)}")
    return family


def _cmd_dim(args) -> int:
    parts = args.parts
    if parts and parts[0].lower() == "table":
        if len(parts) != 3:
            raise EvalError("usage: dim table FAMILY KMAX")
        family = _parse_family(parts[1])
        kmax = _parse_int(parts[2], "KMAX")
        values = [dim_closed(family, k) for k in range(kmax + 1)]
        text = "\n".join(f"{k}\t{v}" for k, v in enumerate(values))
        return _emit(args, values, text)
    if len(parts) != 2:
        raise EvalError("usage: dim FAMILY K  |  dim table FAMILY KMAX")
    family = _parse_family(parts[0])
    k = _parse_int(parts[1], "K")
    value = dim_closed(family, k)
    return _emit(args, value, str(value))


def _parse_int(text: str, role: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise EvalError(f"{role} must be an integer, got {text!r}") from None
    if value < 0:
        raise EvalError(f"{role} must be nonnegative")
    return value


def _cmd_expand(args) -> int:
    form = _require_plain_form(_eval_expression(args.expr), "expand")
    series = expand(form, args.qprec, args.umax)
    lines = [f"weight {series.weight}, q_prec {series.q_prec}, u in [{series.u_val}, {series.u_max}]"]
    for (m, n), c in series.items():
        lines.append(f"q^{m} u^{n}\t{c}")
    return _emit(args, _series_json(series), "\n".join(lines))


def _cmd_bracket(args) -> int:
    tag = _BRACKETS.get(args.kind.lower())
    if tag is None:
        raise EvalError(f"unknown bracket kind {args.kind!r}; choose rc, rcd or tv")
    f = _require_plain_form(_eval_expression(args.f), "bracket")
    g = _require_plain_form(_eval_expression(args.g), "bracket")
    value = bracket(tag, f, g, args.n)
    return _emit(args, _form_json(value), str(value))


def _cmd_verify(args) -> int:
    results = run_suites([args.suite], seed=args.seed, quick=args.quick)
    lines: list[str] = []
    failures: list[str] = []
    suites_json = {}
    for suite, checks in results.items():
        passed = sum(1 for c in checks if c.ok)
        failed = len(checks) - passed
        suites_json[suite] = {
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks],
            "passed": passed,
            "failed": failed,
        }
        for c in checks:
            mark = "PASS" if c.ok else "FAIL"
            detail = f": {c.detail}" if c.detail else ""
            lines.append(f"{mark}  {suite}/{c.name}{detail}")
            if not c.ok:
                failures.append(f"{suite}/{c.name}")
        lines.append(f"suite {suite}: {passed} passed, {failed} failed")
    ok = not failures
    lines.append("all checks passed" if ok else f"{len(failures)} check(s) failed")
    return _emit(args, {"suites": suites_json}, "\n".join(lines), ok=ok, errors=failures)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qjalg",
        description="Exact computer algebra for index-zero singular quasi-Jacobi forms.",
    )
    parser.add_argument("--json", action="store_true", help="emit a JSON envelope instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression to canonical form")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("weight", help="weights of the components of an expression")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_weight)

    p = sub.add_parser("depth", help="depth profile (s1, s2) of an expression")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_depth)

    p = sub.add_parser("member", help="membership in one of the six subalgebras")
    p.add_argument("algebra", metavar="ALG")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("dim", help="dimension queries: dim FAMILY K | dim table FAMILY KMAX")
    p.add_argument("parts", nargs="+", metavar="ARG")
    p.set_defaults(func=_cmd_dim)

    default_qprec = int(os.environ.get("QJALG_QPREC", DEFAULT_QPREC))
    default_umax = int(os.environ.get("QJALG_UMAX", DEFAULT_UMAX))
    p = sub.add_parser("expand", help="bigraded series expansion of a homogeneous form")
    p.add_argument("expr")
    p.add_argument("--qprec", type=int, default=default_qprec)
    p.add_argument("--umax", type=int, default=default_umax)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("bracket", help="bracket {rc|rcd|tv} EXPR EXPR N")
    p.add_argument("kind")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_bracket)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", nargs="?", default="all", choices=SUITE_NAMES)
    p.add_argument("--seed", type=int, default=20240801)
    p.add_argument("--quick", action="store_true", help="smaller randomized batteries")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return 2
    except (EvalError, PrecisionError, InconsistencyError, ValueError, ArithmeticError) as exc:
        if args.json:
            print(json.dumps({"ok": False, "result": None, "errors": [str(exc)]}))
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
