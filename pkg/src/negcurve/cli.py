"""Command-line interface: ``negcurve <subcommand> [flags]`` prints sorted JSON."""

from __future__ import annotations

import argparse
import json
import sys

from . import families, hc, intersection, tilde, wps
from .geometry import polygon_to_json, parse_rational
from .linalg import QQ, FieldSpec

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE = 0, 1, 2


def _rational(text):
    return parse_rational(text)


def _field(text):
    return FieldSpec.parse(text)


def _primes(text):
    return [int(tok) for tok in text.replace(",", " ").split()]


def _params(args) -> families.FamilyParams:
    if getattr(args, "example", False):
        return wps.example_parameters(args.family, args.m)
    return families.FamilyParams(args.family, args.m, args.alpha, args.beta)


def cmd_xi(args) -> dict:
    report = families.verify_xi(args.family, args.m, args.field)
    out = report.to_json()
    out["terms"] = out.pop("poly")
    return out


def cmd_triangle(args) -> dict:
    p = _params(args)
    D = families.delta(p)
    out = {
        "family": p.family,
        "m": p.m,
        "alpha": str(p.alpha),
        "beta": str(p.beta),
        "delta0": polygon_to_json(families.delta0(p.family, p.m)),
        "delta": polygon_to_json(D),
        "c_squared": str(intersection.c_self_intersection(p)),
        "negativity": intersection.negativity_status(p).value,
    }
    if not D.is_degenerate:
        out["delta_prime"] = polygon_to_json(families.delta_prime(p))
        out["delta_double_prime"] = polygon_to_json(families.delta_double_prime(p))
        out["lambda"] = str(intersection.lambda_factor(p))
    return out


def cmd_classify(args) -> dict:
    p = _params(args)
    verdict = hc.mds_classify(p)
    out = {"family": p.family, "m": p.m, "alpha": str(p.alpha), "beta": str(p.beta)}
    out.update(verdict.to_json())
    if verdict.variant == "MDS":
        out["witness_report"] = hc.mds_witness_verify(p).to_json()
    return out


def cmd_hc(args) -> dict:
    p = _params(args)
    out = {
        "family": p.family,
        "m": p.m,
        "alpha": str(p.alpha),
        "beta": str(p.beta),
        "exact": hc.hc_exact_test(args.l, p, args.field).to_json(),
        "vertex": hc.hc_vertex_test(args.l, p, args.field).to_json(),
    }
    if args.primes is not None:
        out["cross_char"] = hc.cross_char_check(args.l, p, args.primes).to_json()
    return out


def cmd_wps(args) -> dict:
    data = wps.fan_of_family(_params(args))
    out = data.to_json()
    out["well_formed"] = list(wps.well_formed(data.weights))
    return out


def cmd_tilde(args) -> dict:
    data = tilde.tilde_triangle(args.family, args.m)
    cert = tilde.tilde_negativity_certificate(args.family, args.m)
    out = cert.to_json()
    out.update(
        {
            "triangle": polygon_to_json(data.triangle),
            "pivot_slope": str(data.pivot_slope),
            "tilde_slope": str(data.tilde_slope),
            "q_point": list(data.q_point),
            "excluded_points": [list(pt) for pt in sorted(data.excluded_points)],
            "prepivot_edge_points": [list(pt) for pt in tilde.prepivot_edge_points(args.family, args.m)],
        }
    )
    return out


def cmd_charp(args) -> dict:
    if args.field.is_rational:
        raise ValueError("charp-search needs --field fp:<prime>")
    p = _params(args)
    outcome = hc.charp_witness_search(p, args.field.characteristic, args.l)
    out = outcome.to_json()
    if outcome.l:
        out["recheck"] = hc.hc_exact_test(outcome.degree, p, args.field).to_json()
    return out


def cmd_scan(args) -> dict:
    nodes = hc.scan_grid(args.family, args.m, args.step)
    return {
        "family": args.family,
        "m": args.m,
        "step": str(args.step),
        "threshold": str(intersection.negativity_threshold(args.family, args.m)),
        "nodes": [nd.to_json() for nd in nodes],
    }


COMMANDS = {
    "xi": cmd_xi,
    "triangle": cmd_triangle,
    "classify": cmd_classify,
    "hc": cmd_hc,
    "wps": cmd_wps,
    "tilde": cmd_tilde,
    "charp-search": cmd_charp,
    "scan": cmd_scan,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="negcurve", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--family", type=int, required=True, choices=(1, 2))
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--out", default=None, help="write JSON here instead of standard output")
        if name in ("triangle", "classify", "hc", "wps", "charp-search"):
            sp.add_argument("--alpha", type=_rational, default=parse_rational(0))
            sp.add_argument("--beta", type=_rational, default=parse_rational(0))
            sp.add_argument("--example", action="store_true", help="use the closed-form example parameters")
        if name in ("xi", "hc", "charp-search"):
            sp.add_argument("--field", type=_field, default=QQ, help="q or fp:<prime>")
        if name == "hc":
            sp.add_argument("--l", type=int, default=1)
            sp.add_argument("--primes", type=_primes, default=None, nargs="?", const="")
        if name == "charp-search":
            sp.add_argument("--l", type=int, default=3, help="largest exponent l to try")
        if name == "scan":
            sp.add_argument("--step", type=_rational, required=True)
    return parser


def _emit(doc: dict, path: str | None):
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "primes", None) == []:
        args.primes = list(hc.default_primes())
    try:
        doc = COMMANDS[args.command](args)
    except AssertionError as exc:
        print(f"negcurve: internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, ArithmeticError) as exc:
        print(f"negcurve: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(doc, args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
