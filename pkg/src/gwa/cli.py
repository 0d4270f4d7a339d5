"""Command-line front end.

Exit codes: 0 decided (either answer), 2 usage error, 3 unsupported input,
4 parse error.  ``--json`` prints one object with keys ``command``,
``inputs``, ``verdict`` and, when present, ``witness``, ``checks``,
``reason``.
"""

import argparse
import json
import sys

from . import autgroup, canonical, iso, morita, smith
from .core import multiply, normality_witness
from .errors import (Inapplicable, InvalidArgument, ParseError, SemanticError,
                     StructuralError, Unsupported)
from .exactpoly import Fraction, LaurentPoly, Poly
from .parsing import (SMITH_KINDS, parse_algebra_spec, parse_element_expr,
                      parse_roots, print_algebra_spec, to_presentation, to_smith)

EXIT_OK, EXIT_USAGE, EXIT_UNSUPPORTED, EXIT_PARSE = 0, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- JSON helpers -------------------------------------------------------------

def scalar(value):
    """Int when integral, ``"p/q"`` otherwise; algebraic values as descriptors."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, iso.AlgebraicScalar):
        root = f"any root of X^{value.g} = {value.beta}"
        if value.coefficient == 1 and value.exponent == 1:
            return root
        power = "theta" if value.exponent == 1 else f"theta^{value.exponent}"
        return f"{value.coefficient}*{power}, theta = {root}"
    if isinstance(value, (Poly, LaurentPoly)):
        return str(value)
    return str(value)


def witness_dict(w):
    if w is None:
        return None
    if isinstance(w, iso.ClassicalShift):
        return {"rho": scalar(w.rho), "epsilon": w.epsilon, "alpha": scalar(w.alpha)}
    if isinstance(w, iso.QuantumScale):
        return {"rho": scalar(w.rho), "alpha": scalar(w.alpha)}
    if isinstance(w, iso.LaurentScale):
        return {"rho": scalar(w.rho), "alpha": scalar(w.alpha), "m": w.m,
                "epsilon": w.epsilon}
    if isinstance(w, iso.MonomialDegree):
        return {"n": w.n, "rho": scalar(w.rho)}
    if isinstance(w, smith.SmithWitness):
        return {"rho": scalar(w.rho), "beta": scalar(w.beta), "alpha": scalar(w.alpha)}
    if isinstance(w, morita.MoritaWitness):
        return {"tau": list(w.tau), "m": list(w.m)}
    raise TypeError(f"no JSON form for {type(w).__name__}")


def _checks(checks):
    return [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks]


class Result:
    def __init__(self, verdict, witness=None, checks=None, reason=None, text=None):
        self.verdict = verdict
        self.witness = witness
        self.checks = checks
        self.reason = reason
        self.text = text

    def payload(self, command, inputs):
        out = {"command": command, "inputs": inputs, "verdict": self.verdict}
        for key in ("witness", "checks", "reason"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        return out

    def human(self):
        lines = [self.verdict]
        if self.witness:
            for k, v in self.witness.items():
                lines.append(f"  {k} = {v}")
        for c in self.checks or ():
            lines.append(f"  [{'pass' if c['passed'] else 'FAIL'}] {c['name']}: {c['detail']}")
        if self.reason:
            lines.append(f"  reason: {self.reason}")
        if self.text:
            lines.append(self.text)
        return "\n".join(lines)


# -- commands -----------------------------------------------------------------

def _mode(name):
    return iso.FieldMode(name)


def cmd_canon(args):
    spec = parse_algebra_spec(args.spec)
    if spec.kind in SMITH_KINDS:
        S = to_smith(spec)
        return Result("Smith", {"q": scalar(S.q), "f": str(S.f), "a": str(S.a),
                                "degenerate": S.degenerate})
    A = to_presentation(spec)
    c = canonical.canonicalize_presentation(A)
    w = {"a": str(c.a), "q": scalar(c.q), "scale": scalar(c.scale), "shift": scalar(c.shift)}
    if c.variant is not canonical.Variant.COMMUTATIVE or A.is_laurent:
        f = canonical.fraction_field_class(c)
        w["fraction_field"] = str(f)
        w["E"] = f.e_value.value
        g = f.g_description
        w["G"] = g if isinstance(g, str) else f"CyclicGeneratedBy({f.q})"
    return Result(c.variant.value, w)


def _iso_verdict(ok):
    return "isomorphic" if ok else "not isomorphic"


def cmd_iso(args):
    s1, s2 = parse_algebra_spec(args.spec1), parse_algebra_spec(args.spec2)
    mode = _mode(args.mode)
    if s1.kind in SMITH_KINDS and s2.kind in SMITH_KINDS:
        w = smith.smith_iso(to_smith(s1), to_smith(s2), mode)
        return Result(_iso_verdict(w is not None), witness_dict(w))
    if (s1.kind in SMITH_KINDS) != (s2.kind in SMITH_KINDS):
        raise Unsupported("cannot compare a Smith algebra with a GWA presentation")
    res = iso.decide_isomorphism(to_presentation(s1), to_presentation(s2), mode)
    checks = None
    if res.verified is not None:
        checks = [{"name": "generator map relations", "passed": bool(res.verified),
                   "detail": "xh, yh, xy, yx relations checked on the composed map"}]
    return Result(_iso_verdict(res.isomorphic), witness_dict(res.witness), checks,
                  res.reason or None)


def _quantum_canonical(spec):
    A = to_presentation(spec)
    if A.is_laurent:
        raise Unsupported("automorphism groups are computed for k[h] presentations only")
    c = canonical.canonicalize_presentation(A)
    if c.variant is not canonical.Variant.QUANTUM:
        raise Unsupported("automorphism groups are computed for quantum presentations only")
    A.require_quantum("the automorphism group")
    return A, c


def cmd_aut(args):
    _, c = _quantum_canonical(parse_algebra_spec(args.spec))
    d = autgroup.aut_descriptor(c.a)
    return Result(d.structure, {"p": d.p, "i0": d.i0, "structure": d.structure})


def cmd_mul(args):
    A = to_presentation(parse_algebra_spec(args.spec))
    u, v = parse_element_expr(args.expr1, A), parse_element_expr(args.expr2, A)
    prod = multiply(A, u, v)
    comps = {str(d): str(p) for d, p in sorted(prod.components.items())}
    return Result(str(prod), {"components": comps})


def cmd_normal(args):
    A = to_presentation(parse_algebra_spec(args.spec))
    u = parse_element_expr(args.expr, A)
    v = normality_witness(A, u)
    if v.normal:
        return Result("normal", {k: str(w) for k, w in v.conjugators.items()})
    return Result("not normal", reason=v.refutation)


def cmd_simple(args):
    A = to_presentation(parse_algebra_spec(args.spec))
    if A.is_laurent:
        cert = morita.is_simple_quantum(A.a, A.q)
    else:
        c = canonical.canonicalize_presentation(A)
        if c.variant is canonical.Variant.QUANTUM:
            return Result("not simple", reason="h is normal and generates a proper ideal")
        if c.variant is canonical.Variant.COMMUTATIVE:
            raise Unsupported("commutative presentations are not covered")
        cert = morita.is_simple_classical(c.a)
    w = None if cert.m is None else {"m": cert.m}
    return Result("simple" if cert.simple else "not simple", w, reason=cert.reason)


def cmd_morita(args):
    P1 = to_presentation(parse_algebra_spec(args.spec1))
    P2 = to_presentation(parse_algebra_spec(args.spec2))
    r = morita.morita_report(P1, P2)
    return Result(r.verdict.value, None, _checks(r.checks), r.reason)


def cmd_smith_iso(args):
    S1 = to_smith(parse_algebra_spec(args.spec1))
    S2 = to_smith(parse_algebra_spec(args.spec2))
    w = smith.smith_iso(S1, S2, _mode(args.mode))
    return Result(_iso_verdict(w is not None), witness_dict(w))


def cmd_oracle(args):
    r1, r2 = parse_roots(args.roots1), parse_roots(args.roots2)
    ok = iso.root_condition_oracle(r1, r2)
    w = iso.iso_classical(Poly.from_roots(r1), Poly.from_roots(r2)) if r1 and r2 else None
    return Result(_iso_verdict(ok), witness_dict(w) if ok else None)


COMMANDS = {
    "canon": (cmd_canon, ("spec",)),
    "iso": (cmd_iso, ("spec1", "spec2")),
    "aut": (cmd_aut, ("spec",)),
    "mul": (cmd_mul, ("spec", "expr1", "expr2")),
    "normal": (cmd_normal, ("spec", "expr")),
    "simple": (cmd_simple, ("spec",)),
    "morita": (cmd_morita, ("spec1", "spec2")),
    "smith-iso": (cmd_smith_iso, ("spec1", "spec2")),
    "oracle": (cmd_oracle, ("roots1", "roots2")),
}


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit a JSON object")
    parser = _Parser(prog="gwa", description="Exact computations in degree-one GWAs.")
    parser.add_argument("--json", action="store_true", default=False, help="emit a JSON object")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, positionals) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common])
        for pos in positionals:
            p.add_argument(pos)
        if name in ("iso", "smith-iso"):
            p.add_argument("--mode", choices=[m.value for m in iso.FieldMode],
                           default=iso.FieldMode.OVER_CLOSURE.value)
    return parser


def _inputs(args):
    out = []
    for pos in COMMANDS[args.command][1]:
        raw = getattr(args, pos)
        if pos.startswith("spec"):
            try:
                raw = print_algebra_spec(parse_algebra_spec(raw))
            except (ParseError, SemanticError):
                pass
        out.append(raw)
    if getattr(args, "mode", None):
        out.append(f"--mode={args.mode}")
    return out


_EXIT = (
    ((ParseError, SemanticError), EXIT_PARSE),
    ((Unsupported, Inapplicable), EXIT_UNSUPPORTED),
    ((InvalidArgument, StructuralError), EXIT_USAGE),
)


def run_command(argv, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:   # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    handler = COMMANDS[args.command][0]
    inputs = _inputs(args)
    try:
        result, code = handler(args), EXIT_OK
    except tuple(e for group, _ in _EXIT for e in group) as exc:
        code = next(c for group, c in _EXIT if isinstance(exc, group))
        result = Result("error", reason=f"{type(exc).__name__}: {exc}")
    if args.json:
        out.write(json.dumps(result.payload(args.command, inputs), indent=2) + "\n")
    elif code == EXIT_OK:
        out.write(result.human() + "\n")
    else:
        err.write(f"error: {result.reason}\n")
    return code


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
