"""Command-line front end.

Subcommands: compute, finite-n, formula, apply-op, pieri, eval, norm,
schur, conjectures, verify.  Partitions are comma-separated part lists
(omit the flag for the empty partition); k and p0 take exact rationals
like -1/2.  Exit codes: 0 success, 1 verification failure, 2 usage error,
3 singular parameter."""

import argparse
import json
import sys
from fractions import Fraction

from .rational import rat, SingularParameter, \
    PoleAtSpecialization, IdenticallySingular, DivisionByZero
from .laurent import parse_element
from .partitions import normalize_partition, size, \
    add_box_candidates, remove_box_candidates
from .operators import cms_L, stable_H, NotPositivePart
from .closed_forms import eigenvalue_e, evaluation_value, norm_value, \
    duality_constant, phi_infinity, pieri_V, pieri_U
from .jack import construct, rational_mode_construct
from .finite_n import jack_laurent_poly_N, phi_N_map, torus_form
from .schur import jacobi_trudy_S, schur_limit
from .conjectures import run_all
from .verify import run_suite, SUITES

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_SINGULAR = 3


class UsageError(Exception):
    pass


def _partition(text):
    if not text:
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
        return normalize_partition(parts)
    except ValueError as exc:
        raise UsageError("bad partition %r: %s" % (text, exc))


def _sequence(text):
    try:
        chi = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError("bad integer sequence %r" % text)
    if any(chi[i] < chi[i + 1] for i in range(len(chi) - 1)):
        raise UsageError("sequence %r is not non-increasing" % (text,))
    return chi


def _fraction(text, flag):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError("%s wants an exact rational, got %r" % (flag, text))


def _alpha(args):
    return (_partition(args.lam), _partition(args.mu))


def _alpha_json(alpha):
    return [list(alpha[0]), list(alpha[1])]


def _emit(args, payload, text):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)
    return EXIT_OK


# -- subcommand handlers ---------------------------------------------------------


def _cmd_compute(args):
    alpha = _alpha(args)
    if (args.k is None) != (args.p0 is None):
        raise UsageError("rational mode requires both --k and --p0")
    if args.k is not None:
        k0 = _fraction(args.k, "--k")
        p00 = _fraction(args.p0, "--p0")
        f = rational_mode_construct(alpha, k0, p00)
        payload = {"alpha": _alpha_json(alpha), "mode": "rational",
                   "k": str(k0), "p0": str(p00),
                   "terms": f.to_json_terms()}
        return _emit(args, payload, str(f))
    jf = construct(alpha)
    e1 = rat(size(alpha[0]) - size(alpha[1]))
    payload = {"alpha": _alpha_json(alpha), "mode": "symbolic",
               "terms": jf.f.to_json_terms(),
               "eigenvalues": {"1": str(e1), "2": str(jf.eigenvalue2)},
               "provenance": [list(b) for b in jf.provenance]}
    return _emit(args, payload, str(jf))


def _cmd_finite_n(args):
    chi = _sequence(args.chi)
    if len(chi) != args.N:
        raise UsageError("--chi needs exactly N=%d entries" % args.N)
    k0 = _fraction(args.k, "--k") if args.k is not None else None
    p = jack_laurent_poly_N(chi, args.N, k0)
    payload = {"chi": list(chi), "N": args.N,
               "k": str(k0) if k0 is not None else None,
               "terms": [{"exponents": list(key), "coeff": str(c)}
                         for key, c in p.sorted_terms()]}
    return _emit(args, payload, str(p))


_FORMULAS = ("eigenvalue", "evaluation", "norm", "duality", "phi-infinity")


def _cmd_formula(args):
    alpha = _alpha(args)
    if args.name == "eigenvalue":
        val = eigenvalue_e(alpha)
    elif args.name == "evaluation":
        val = evaluation_value(alpha)
    elif args.name == "norm":
        val = norm_value(alpha)
    elif args.name == "duality":
        val = duality_constant(alpha)
    else:
        val = phi_infinity(alpha[0]) * phi_infinity(alpha[1])
    payload = {"alpha": _alpha_json(alpha), "name": args.name,
               "value": str(val)}
    return _emit(args, payload, str(val))


def _cmd_apply_op(args):
    op = args.op.upper()
    if len(op) < 2 or op[0] not in "LH" or not op[1:].isdigit():
        raise UsageError("--op wants L<r> or H<r>, got %r" % args.op)
    r = int(op[1:])
    if r < 1:
        raise UsageError("operator order must be positive")
    try:
        f = parse_element(args.expr)
    except ValueError as exc:
        raise UsageError("cannot parse expression: %s" % exc)
    try:
        out = cms_L(r, f) if op[0] == "L" else stable_H(r, f)
    except NotPositivePart as exc:
        raise UsageError(str(exc))
    payload = {"op": op, "input": str(f), "terms": out.to_json_terms()}
    return _emit(args, payload, str(out))


def _cmd_pieri(args):
    alpha = _alpha(args)
    lam, mu = alpha
    vrows = [(box, pieri_V(box, alpha)) for box in add_box_candidates(lam)]
    urows = [(box, pieri_U(box, alpha))
             for box in remove_box_candidates(mu)]
    payload = {"alpha": _alpha_json(alpha),
               "V": [{"box": list(b), "coeff": str(v)} for b, v in vrows],
               "U": [{"box": list(b), "coeff": str(u)} for b, u in urows]}
    lines = ["p1 * P[%s; %s]:" % (",".join(map(str, lam)) or "0",
                                  ",".join(map(str, mu)) or "0")]
    for b, v in vrows:
        lines.append("  add box %s to lam:    %s" % (b, v))
    for b, u in urows:
        lines.append("  drop box %s from mu:  %s" % (b, u))
    return _emit(args, payload, "\n".join(lines))


def _cmd_eval(args):
    alpha = _alpha(args)
    val = evaluation_value(alpha)
    status = None
    if args.check:
        got = construct(alpha).f.evaluate_eps()
        status = "pass" if got == val else "fail"
    payload = {"alpha": _alpha_json(alpha), "value": str(val)}
    if status:
        payload["check"] = status
    code = _emit(args, payload,
                 str(val) + ("" if status is None else "  [check: %s]"
                             % status))
    return EXIT_VERIFY if status == "fail" else code


def _cmd_norm(args):
    alpha = _alpha(args)
    val = norm_value(alpha)
    status = None
    if args.check:
        N, k0 = 4, Fraction(-1)
        f = phi_N_map(construct(alpha).f, N)
        got = torus_form(f, f, k0, N)
        want = val.specialize(k0, N)
        status = "pass" if got == want else "fail"
    payload = {"alpha": _alpha_json(alpha), "value": str(val)}
    if status:
        payload["check"] = status
    code = _emit(args, payload,
                 str(val) + ("" if status is None else "  [check: %s]"
                             % status))
    return EXIT_VERIFY if status == "fail" else code


def _cmd_schur(args):
    alpha = _alpha(args)
    det = jacobi_trudy_S(*alpha)
    status = None
    if args.check:
        status = "pass" if schur_limit(construct(alpha).f) == det else "fail"
    payload = {"alpha": _alpha_json(alpha), "terms": det.to_json_terms()}
    if status:
        payload["check"] = status
    code = _emit(args, payload,
                 str(det) + ("" if status is None else "  [check: %s]"
                             % status))
    return EXIT_VERIFY if status == "fail" else code


def _cmd_conjectures(args):
    report = run_all(args.max_size)
    blob = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(blob + "\n")
        print("wrote %s" % args.out)
    else:
        print(blob)
    return EXIT_OK


def _cmd_verify(args):
    report = run_suite(args.suite, args.max_size)
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for row in report["checks"]:
            print("%-4s %s" % (row["status"], row["id"]))
        print("suite %s: %s (%d checks)"
              % (report["suite"], report["status"], len(report["checks"])))
    return EXIT_OK if report["status"] == "pass" else EXIT_VERIFY


# -- parser ------------------------------------------------------------------------


def build_parser():
    top = argparse.ArgumentParser(
        prog="jacklaurent",
        description="Exact two-parameter symmetric-function calculator "
                    "with Laurent (negative) power sums.")
    sub = top.add_subparsers(dest="command", required=True)

    def add_common(p, mu=True):
        p.add_argument("--lambda", dest="lam", default="",
                       help="comma-separated partition, e.g. 2,1")
        if mu:
            p.add_argument("--mu", dest="mu", default="",
                           help="comma-separated partition")
        p.add_argument("--format", choices=("text", "json"),
                       default="text")

    p = sub.add_parser("compute", help="construct P_{lambda,mu}")
    add_common(p)
    p.add_argument("--k", help="exact rational; with --p0 for rational mode")
    p.add_argument("--p0", help="exact rational")
    p.set_defaults(fn=_cmd_compute)

    p = sub.add_parser("finite-n", help="N-variable eigenpolynomial")
    p.add_argument("--chi", required=True,
                   help="non-increasing integers, e.g. 1,0,-1")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--k", help="exact rational coupling (default symbolic)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_cmd_finite_n)

    p = sub.add_parser("formula", help="closed-form scalar for a label")
    p.add_argument("--name", choices=_FORMULAS, required=True)
    add_common(p)
    p.set_defaults(fn=_cmd_formula)

    p = sub.add_parser("apply-op", help="apply an integral of the "
                                        "hierarchy to an expression")
    p.add_argument("--op", required=True, help="L<r> or H<r>, e.g. L2")
    p.add_argument("--expr", required=True,
                   help="element, e.g. 'p1*p-1 - 2'")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_cmd_apply_op)

    p = sub.add_parser("pieri", help="transition coefficients for p1 * P")
    add_common(p)
    p.set_defaults(fn=_cmd_pieri)

    p = sub.add_parser("eval", help="evaluation homomorphism value")
    add_common(p)
    p.add_argument("--check", action="store_true",
                   help="recompute through the constructed function")
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("norm", help="quadratic norm of P_{lambda,mu}")
    add_common(p)
    p.add_argument("--check", action="store_true",
                   help="cross-check against the N=4 torus integral at "
                        "k=-1")
    p.set_defaults(fn=_cmd_norm)

    p = sub.add_parser("schur", help="Schur-Laurent determinant")
    add_common(p)
    p.add_argument("--check", action="store_true",
                   help="compare with the k=-1 limit of P")
    p.set_defaults(fn=_cmd_schur)

    p = sub.add_parser("conjectures", help="report-only conjecture sweeps")
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--out", help="write the JSON report here")
    p.set_defaults(fn=_cmd_conjectures)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_cmd_verify)
    return top


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (SingularParameter, PoleAtSpecialization, IdenticallySingular,
            DivisionByZero) as exc:
        print("singular parameter: %s" % exc, file=sys.stderr)
        return EXIT_SINGULAR


if __name__ == "__main__":
    sys.exit(main())
