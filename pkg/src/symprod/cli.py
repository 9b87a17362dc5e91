"""Command-line front end.

Exit status: 0 for a definitive answer, 2 when a decision is Undecided,
1 for bad input.  ``--json`` prints exactly one JSON document.
"""
from __future__ import annotations

import argparse
import sys
import warnings

from . import io
from .curves import (
    CurveProfile,
    brill_noether_rho,
    generic_gonality,
    generic_min_degree,
)
from .errors import AdvisoryWarning, SymprodError
from .irrationality import deg_gonality, degirr_interval
from .linalg import format_rational, parse_rational
from .nefcone import default_gonality_constant, search_min_ratio, verify_tau_certificate
from .projective import plucker
from .special_position import (
    Undecided,
    check_span_bound,
    decide,
    ffield_census,
    gen_fixture,
    reduce_mod,
)

EXIT_OK, EXIT_INPUT, EXIT_UNDECIDED = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _rational(text):
    try:
        return parse_rational(text)
    except SymprodError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _curve_class(text):
    name = text.replace("-", "_")
    if name not in ("very_general", "hyperelliptic", "non_hyperelliptic", "arbitrary"):
        raise argparse.ArgumentTypeError(f"unknown curve class {text!r}")
    return name


def _emit(args, payload: dict, lines=None):
    if args.json:
        sys.stdout.write(io.dumps(payload))
    else:
        for line in lines if lines is not None else (f"{k}: {v}" for k, v in payload.items()):
            print(line)


def _profile(args) -> CurveProfile:
    delta = {m: v for m, v in ((1, args.delta1), (2, args.delta2), (3, args.delta3)) if v is not None}
    return CurveProfile(args.genus, args.curve_class, args.gonality, delta,
                        getattr(args, "elliptic_cover_degree", None))


def cmd_specpos_decide(args):
    c = io.load_config(args.config)
    cert = decide(c, args.trials, args.seed)
    payload = io.certificate_to_json(cert)
    lines = [f"verdict: {cert.verdict}"]
    if cert.verdict == "not_special":
        lines.append(f"excluded index: {cert.excluded_index}")
        lines += ["witness rows:"] + [f"  {r}" for r in payload["witness"]["rows"]]
    elif cert.verdict == "special":
        lines += ["dependencies:"] + [f"  {r}" for r in payload["dependencies"]]
    else:
        lines.append(f"trials used: {cert.trials_used}")
    _emit(args, payload, lines)
    return EXIT_UNDECIDED if isinstance(cert, Undecided) else EXIT_OK


def cmd_specpos_span(args):
    c = io.load_config(args.config)
    res = check_span_bound(c)
    _emit(args, {"span_dim": res.span_dim, "bound": res.bound,
                 "applicable": res.applicable, "ok": res.ok})
    return EXIT_OK


def cmd_specpos_oracle(args):
    c = io.load_config(args.config)
    if args.prime is not None:
        c = reduce_mod(c, args.prime)
    special, count = ffield_census(c)
    _emit(args, {"prime": c.field.p, "special": special, "planes_checked": count})
    return EXIT_OK


def emit_fixture(family: str, params: dict, path=None):
    """Build a fixture and, if ``path`` is given, write it as configuration JSON."""
    c = gen_fixture(family, **params)
    if path is not None:
        io.save_config(c, path)
    return c


def cmd_fixture(args):
    params = {}
    if args.family in ("pencil", "random_skew", "triangle") and args.n is not None:
        params["n"] = args.n
    if args.family != "triangle":
        if args.d is None:
            raise SymprodError(f"--d is required for {args.family}")
        params["d"] = args.d
    if args.family == "random_skew":
        params["seed"] = args.seed
    if args.t is not None:
        params["ts"] = args.t
    c = emit_fixture(args.family, params, args.out)
    if not args.out:
        sys.stdout.write(io.dumps(io.config_to_json(c)))
    elif not args.json:
        print(f"wrote {args.out}")
    return EXIT_OK


def cmd_plucker(args):
    c = io.load_config(args.config)
    vecs = [io.plucker_to_json(plucker(s)) for s in c.subspaces]
    lines = [f"subsets: {vecs[0]['subsets']}"] + [f"p(l{i}): {v['coords']}" for i, v in enumerate(vecs)]
    _emit(args, {"plucker": vecs}, lines)
    return EXIT_OK


def cmd_bn(args):
    payload = {"genus": args.genus, "r": args.r, "generic_min_degree": generic_min_degree(args.genus, args.r)}
    if args.d is not None:
        payload["d"] = args.d
        payload["rho"] = brill_noether_rho(args.genus, args.r, args.d)
    _emit(args, payload)
    return EXIT_OK


def cmd_gonality(args):
    p = _profile(args)
    _emit(args, {"genus": p.genus, "class": p.curve_class, "gonality": p.known_gonality,
                 "generic_gonality": generic_gonality(p.genus)})
    return EXIT_OK


def cmd_degirr(args):
    res = degirr_interval(_profile(args))
    _emit(args, io.interval_to_json(res))
    return EXIT_OK


def cmd_dego(args):
    res = deg_gonality(_profile(args), args.k)
    _emit(args, io.interval_to_json(res))
    return EXIT_OK


def _report_lines(r):
    A, B, C = r.quadratic
    return [
        f"valid: {r.valid}",
        f"ratio: {format_rational(r.ratio)}",
        f"L^2={r.l_squared}",
        f"f(m) = {A}m^2 {B:+d}m {C:+d}",
        f"discriminant: {r.discriminant}",
        f"failed check: {r.failed_check}",
    ] + (["advisory: gonality constant not proved for this genus"] if r.advisory else [])


def _constant(args):
    if args.c is not None:
        return args.c
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", AdvisoryWarning)
        return default_gonality_constant(args.g)


def cmd_nefcone_verify(args):
    r = verify_tau_certificate(args.g, args.a, args.b, args.tau_prev, _constant(args))
    _emit(args, io.cert_report_to_json(r), _report_lines(r))
    return EXIT_OK


def cmd_nefcone_search(args):
    a, b, r = search_min_ratio(args.g, _constant(args), args.tau_prev, args.b_max)
    payload = {"a": str(a), "b": str(b), "report": io.cert_report_to_json(r)}
    _emit(args, payload, [f"best: {a}/{b}"] + _report_lines(r))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised paths")

    parser = _Parser(prog="symprod", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=fn)
        return p

    p = add("specpos-decide", cmd_specpos_decide, "decide special position")
    p.add_argument("--config", required=True)
    p.add_argument("--trials", type=int, default=200)

    p = add("specpos-span", cmd_specpos_span, "span dimension against the bound")
    p.add_argument("--config", required=True)

    p = add("specpos-oracle", cmd_specpos_oracle, "exhaustive check over GF(p)")
    p.add_argument("--config", required=True)
    p.add_argument("--prime", type=int)

    p = add("fixture", cmd_fixture, "write a fixture configuration")
    p.add_argument("--family", required=True,
                   choices=["pencil", "quadric_ruling", "scroll", "triangle", "random_skew"])
    p.add_argument("--d", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=_rational, nargs="+")
    p.add_argument("--out")

    p = add("plucker", cmd_plucker, "Plücker coordinates of each subspace")
    p.add_argument("--config", required=True)

    p = add("bn", cmd_bn, "Brill-Noether number and generic minimal degree")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int)

    for name, fn, help in (("gonality", cmd_gonality, "gonality of a curve profile"),
                           ("degirr", cmd_degirr, "degree of irrationality of C^(2)"),
                           ("dego", cmd_dego, "degree of gonality of C^(k)")):
        p = add(name, fn, help)
        p.add_argument("--genus", type=int, required=True)
        p.add_argument("--class", dest="curve_class", type=_curve_class, default="very_general")
        p.add_argument("--gonality", type=int)
        p.add_argument("--delta1", type=int)
        p.add_argument("--delta2", type=int)
        p.add_argument("--delta3", type=int)
        if name == "degirr":
            p.add_argument("--elliptic-cover-degree", type=int)
        if name == "dego":
            p.add_argument("--k", type=int, default=2)

    for name, fn in (("nefcone-verify", cmd_nefcone_verify), ("nefcone-search", cmd_nefcone_search)):
        p = add(name, fn, "verify a slope certificate" if name.endswith("verify")
                else "search for the best slope certificate")
        p.add_argument("--g", type=int, required=True)
        p.add_argument("--tau-prev", type=_rational, required=True)
        p.add_argument("--c", type=int)
        if name == "nefcone-verify":
            p.add_argument("--a", type=int, required=True)
            p.add_argument("--b", type=int, required=True)
        else:
            p.add_argument("--b-max", type=int, required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SymprodError, OSError) as exc:
        print(f"symprod {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
