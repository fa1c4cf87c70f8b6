"""Command-line interface.

Subcommands: invariants, minimise, level, construct, convert, oracle.
Model files are JSON documents {"kind": ..., "coeffs": [...]} with decimal
string coefficients (integers or rationals) in the documented index order.

Exit codes: 0 success, 2 parse error, 3 kind mismatch or unsupported
operation for the kind, 4 singular model, 5 factorisation failure.
Reports go to stdout, diagnostics to stderr.  The environment variable
G1MIN_PRIME_BOUND caps the residue searches.
"""

import argparse
import json
import sys

from .construct import (
    construct_22, construct_cube, convert_2to3, convert_3to2, critical_model,
    enumerate_minimal_weights, oracle_minimality_22, symmetric_minimal_weights,
)
from .exactnum import LocalContext
from .invariants import (
    cube_invariants, cubic_invariants, discriminant, form22_invariants,
    hypercube_invariants, quartic_invariants,
)
from .minimise import FactorizationError, minimise, minimise_global
from .models import group_element_to_dict, model_from_dict, model_to_dict
from .weierstrass import level

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_KIND = 3
EXIT_SINGULAR = 4
EXIT_FACTOR = 5


class _CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _load_model(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise _CliError(EXIT_PARSE, f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise _CliError(EXIT_PARSE, f"invalid JSON in {path}: {e}")
    try:
        return model_from_dict(doc)
    except (ValueError, TypeError, ArithmeticError) as e:
        raise _CliError(EXIT_PARSE, f"bad model file {path}: {e}")


def _emit(doc, args, text_lines):
    if getattr(args, "json", False):
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _write_model(m, args, meta=None):
    doc = model_to_dict(m, meta)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
        print(f"wrote {out}", file=sys.stderr)
    else:
        print(json.dumps(doc, indent=2))


def _prime_context(args):
    p = getattr(args, "prime", None)
    if p is None:
        raise _CliError(EXIT_PARSE, "--prime is required")
    try:
        return LocalContext(p)
    except ValueError as e:
        raise _CliError(EXIT_PARSE, str(e))


def cmd_invariants(args):
    m = _load_model(args.model)
    doc = {"kind": m.kind}
    lines = [f"kind: {m.kind}"]
    if m.kind == "quartic":
        i_inv, j_inv, disc = quartic_invariants(m)
        doc.update(I=str(i_inv), J=str(j_inv), Delta=str(disc))
        lines += [f"I = {i_inv}", f"J = {j_inv}", f"Delta = {disc}"]
    elif m.kind == "cubic":
        c4, c6, disc = cubic_invariants(m)
        doc.update(c4=str(c4), c6=str(c6), Delta=str(disc))
        lines += [f"c4 = {c4}", f"c6 = {c6}", f"Delta = {disc}"]
    elif m.kind in ("form22", "cube"):
        inv = form22_invariants(m) if m.kind == "form22" else cube_invariants(m)
        doc.update(
            c4=str(inv.c4), c6=str(inv.c6), Delta=str(inv.disc),
            a_invariants=[str(a) for a in inv.a_invariants],
            xi=str(inv.xi), eta=str(inv.eta), u=str(inv.u), v=str(inv.v),
        )
        a1, a2, a3, a4, a6 = inv.a_invariants
        lines += [
            f"c4 = {inv.c4}", f"c6 = {inv.c6}", f"Delta = {inv.disc}",
            f"curve: y^2 + {a1} xy + {a3} y = x^3 + {a2} x^2 + {a4} x + {a6}",
            f"point: ({inv.xi}, {inv.eta})",
            f"u = {inv.u}", f"v = {inv.v}",
        ]
    else:  # hypercube
        hi = hypercube_invariants(m)
        doc.update(c4=str(hi.c4), c6=str(hi.c6), Delta=str(hi.disc))
        doc["points"] = [[str(x), str(y)] for x, y in hi.points_on_common_model]
        lines += [f"c4 = {hi.c4}", f"c6 = {hi.c6}", f"Delta = {hi.disc}"]
        for n, (x, y) in enumerate(hi.points_on_common_model, 1):
            lines.append(f"P{n} = ({x}, {y}) on y^2 = x^3 - 27 c4 x - 54 c6")
    _emit(doc, args, lines)
    return EXIT_OK


def _step_doc(step):
    return {
        "label": step.label,
        "vDeltaBefore": step.v_disc_before,
        "vDeltaAfter": step.v_disc_after,
        "detail": [str(x) for x in step.detail],
    }


def cmd_minimise(args):
    m = _load_model(args.model)
    if m.kind == "cubic":
        raise _CliError(EXIT_KIND, "ternary cubics are carried along, not minimised directly")
    if discriminant(m) == 0:
        raise _CliError(EXIT_SINGULAR, "singular model")
    if args.global_:
        try:
            rep = minimise_global(m)
        except FactorizationError as e:
            raise _CliError(EXIT_FACTOR, str(e))
        doc = {
            "mode": "global",
            "primes": list(rep.primes),
            "model": model_to_dict(rep.model),
            "transformation": group_element_to_dict(rep.transformation),
            "steps": {str(p): [_step_doc(s) for s in r.steps] for p, r in rep.local_reports},
        }
        lines = [f"reduced at primes: {', '.join(map(str, rep.primes)) or '(none)'}"]
        for p, r in rep.local_reports:
            lines.append(f"p = {p}: v(Delta) {r.v_disc_initial} -> {r.v_disc_final}"
                         f" in {len(r.steps)} steps")
        lines.append(f"final Delta = {discriminant(rep.model)}")
        final_model = rep.model
    else:
        ctx = _prime_context(args)
        rep = minimise(m, ctx)
        doc = {
            "mode": "local",
            "prime": ctx.p,
            "vDeltaInitial": rep.v_disc_initial,
            "vDeltaFinal": rep.v_disc_final,
            "alreadyMinimal": rep.input_was_minimal,
            "model": model_to_dict(rep.model),
            "transformation": group_element_to_dict(rep.transformation),
            "steps": [_step_doc(s) for s in rep.steps],
        }
        if rep.input_was_minimal:
            lines = [f"already minimal at p = {ctx.p} (v(Delta) = {rep.v_disc_initial})"]
        else:
            lines = [
                f"v(Delta): {rep.v_disc_initial} -> {rep.v_disc_final} at p = {ctx.p}",
                "steps: " + ", ".join(s.label for s in rep.steps),
            ]
        final_model = rep.model
    _emit(doc, args, lines)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(model_to_dict(final_model), fh, indent=2)
            fh.write("\n")
        print(f"wrote {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_level(args):
    m = _load_model(args.model)
    if m.kind not in ("form22", "cube", "hypercube"):
        raise _CliError(EXIT_KIND, f"level is not defined for kind {m.kind}")
    ctx = _prime_context(args)
    try:
        rep = level(m, ctx)
    except ValueError as e:
        raise _CliError(EXIT_SINGULAR, str(e))
    doc = {"vDelta": rep.v_disc, "vDeltaMin": rep.v_disc_min,
           "kappa": rep.kappa, "level": rep.level}
    _emit(doc, args, [
        f"v(Delta) = {rep.v_disc}",
        f"v(Delta_min of Jacobian) = {rep.v_disc_min}",
        f"kappa = {rep.kappa}",
        f"level = {rep.level}",
    ])
    return EXIT_OK


def cmd_construct(args):
    if args.critical:
        ctx = _prime_context(args)
        try:
            m = critical_model(args.critical, ctx, args.seed)
        except ValueError as e:
            raise _CliError(EXIT_PARSE, str(e))
        _write_model(m, args, meta={"critical": args.critical, "prime": ctx.p,
                                    "seed": args.seed})
        return EXIT_OK
    if not args.curve:
        raise _CliError(EXIT_PARSE, "either --curve or --critical is required")
    try:
        a1, a2, a3, a4 = (int(x) for x in args.curve.split(","))
    except ValueError:
        raise _CliError(EXIT_PARSE, "--curve expects four comma-separated integers")
    try:
        m = construct_22(a1, a2, a3, a4) if args.type == "22" else construct_cube(a1, a2, a3, a4)
    except ValueError as e:
        raise _CliError(EXIT_SINGULAR, str(e))
    _write_model(m, args, meta={"curve": [a1, a2, a3, a4, 0]})
    return EXIT_OK


def cmd_convert(args):
    m = _load_model(args.model)
    try:
        if args.direction == "2to3":
            if m.kind != "form22":
                raise _CliError(EXIT_KIND, f"2to3 needs a form22 model, got {m.kind}")
            out = convert_2to3(m)
        else:
            if m.kind != "cube":
                raise _CliError(EXIT_KIND, f"3to2 needs a cube model, got {m.kind}")
            out = convert_3to2(m)
    except ValueError as e:
        raise _CliError(EXIT_KIND, str(e))
    _write_model(out, args)
    return EXIT_OK


def cmd_oracle(args):
    if args.what == "weights":
        weights = enumerate_minimal_weights()
        symmetric = symmetric_minimal_weights()
        if args.count_only:
            print(f"{len(weights)} minimal, {len(symmetric)} after symmetry")
            return EXIT_OK
        doc = {
            "minimal": [{"entries": list(w.entries), "s": w.s} for w in weights],
            "symmetric": [{"entries": list(w.entries), "s": w.s} for w in symmetric],
        }
        lines = [f"{len(weights)} minimal weight classes (s <= 10); "
                 f"{len(symmetric)} after the symmetry filter:"]
        for w in symmetric:
            e = w.entries
            lines.append(f"  ({e[0]},{e[1]}; {e[2]},{e[3]}; {e[4]},{e[5]})  s = {w.s}")
        _emit(doc, args, lines)
        return EXIT_OK
    # min22
    m = _load_model(args.model)
    if m.kind != "form22":
        raise _CliError(EXIT_KIND, f"the minimality oracle works on form22 models, got {m.kind}")
    ctx = _prime_context(args)
    try:
        verdict = oracle_minimality_22(m, ctx, depth=args.depth)
    except ValueError as e:
        code = EXIT_SINGULAR if "singular" in str(e) else EXIT_PARSE
        raise _CliError(code, str(e))
    _emit({"minimal": verdict, "prime": ctx.p}, args,
          [f"{'minimal' if verdict else 'not minimal'} at p = {ctx.p} (exhaustive search)"])
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(
        prog="g1min",
        description="Exact minimisation of genus-one models ((2,2)-forms, cubes, hypercubes).",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="invariants of a model file")
    p_inv.add_argument("model")
    p_inv.add_argument("--json", action="store_true")
    p_inv.set_defaults(fn=cmd_invariants)

    p_min = sub.add_parser("minimise", help="minimise at a prime or globally")
    p_min.add_argument("model")
    p_min.add_argument("--prime", type=int)
    p_min.add_argument("--global", dest="global_", action="store_true")
    p_min.add_argument("--json", action="store_true")
    p_min.add_argument("--out", help="write the minimal model to this file")
    p_min.set_defaults(fn=cmd_minimise)

    p_lvl = sub.add_parser("level", help="level decomposition at a prime")
    p_lvl.add_argument("model")
    p_lvl.add_argument("--prime", type=int, required=True)
    p_lvl.add_argument("--json", action="store_true")
    p_lvl.set_defaults(fn=cmd_level)

    p_con = sub.add_parser("construct",
                           help="level-zero model from a marked curve, or a critical model")
    p_con.add_argument("--curve", help="a1,a2,a3,a4 of y^2+a1xy+a3y=x^3+a2x^2+a4x")
    p_con.add_argument("--type", choices=("22", "cube"), default="22")
    p_con.add_argument("--critical", choices=("form22", "cube", "hypercube"),
                       help="sample a minimal positive-level model instead")
    p_con.add_argument("--prime", type=int, help="prime for --critical (>= 5)")
    p_con.add_argument("--seed", type=int, default=0)
    p_con.add_argument("--out")
    p_con.set_defaults(fn=cmd_construct)

    p_cv = sub.add_parser("convert", help="degree conversions preserving the discriminant")
    p_cv.add_argument("direction", choices=("2to3", "3to2"))
    p_cv.add_argument("model")
    p_cv.add_argument("--out")
    p_cv.set_defaults(fn=cmd_convert)

    p_or = sub.add_parser("oracle", help="independent combinatorial/brute-force checks")
    orsub = p_or.add_subparsers(dest="what", required=True)
    p_w = orsub.add_parser("weights", help="census of minimal admissible weights")
    p_w.add_argument("--count-only", action="store_true")
    p_w.add_argument("--json", action="store_true")
    p_w.set_defaults(fn=cmd_oracle)
    p_m22 = orsub.add_parser("min22", help="exhaustive (2,2) minimality check")
    p_m22.add_argument("model")
    p_m22.add_argument("--prime", type=int, required=True)
    p_m22.add_argument("--depth", type=int, default=2)
    p_m22.add_argument("--json", action="store_true")
    p_m22.set_defaults(fn=cmd_oracle)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except _CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except ValueError as e:
        msg = str(e)
        code = EXIT_SINGULAR if "singular" in msg else EXIT_PARSE
        print(f"error: {msg}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
