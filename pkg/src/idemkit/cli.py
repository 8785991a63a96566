"""Command-line surface: integrals, hulls, barycenters, conversions, and the
law suites.

Document flags accept either a path to a JSON file or inline JSON (anything
starting with '{' or '[').  Exit codes: 0 success, 1 law or computation
failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .capacities import (
    PossibilityProfile,
    capacity_from_profile,
    maxplus_integral,
    possibility_integral,
)
from .convexity import barycenter, combine, hull_member
from .documents import (
    capacity_from_doc,
    density_from_doc,
    density_to_doc,
    dump_json,
    function_from_doc,
    generators_from_doc,
    load_json,
    possibility_from_doc,
    possibility_to_doc,
    space_from_doc,
    weights_from_doc,
)
from .isomorphism import density_exp, density_log
from .laws import SUITES, run_all, run_suite
from .measures import MaxTimesDensity
from .semiring import format_score

DENSITY_KINDS = ("maxplus", "maxtimes", "possibility")


def _load_doc(arg: str):
    text = arg.lstrip()
    if text.startswith("{") or text.startswith("["):
        return json.loads(arg)
    return load_json(arg)


def _weights_arg(arg: str):
    doc = _load_doc(arg)
    if isinstance(doc, list):
        doc = {"weights": doc}
    return weights_from_doc(doc)


def _format_point(point) -> str:
    return "[" + ",".join(format_score(float(v)) for v in point) + "]"


def cmd_integrate(args) -> int:
    space = space_from_doc(_load_doc(args.space))
    cdoc = _load_doc(args.capacity)
    kind = cdoc.get("kind") if isinstance(cdoc, dict) else None
    profile = None
    if kind == "possibility":
        profile = possibility_from_doc(cdoc, space)
        cap = capacity_from_profile(profile)
    elif kind == "capacity":
        cap = capacity_from_doc(cdoc, space)
    else:
        raise ValueError(f"capacity document must have kind 'capacity' or 'possibility', got {kind!r}")
    phi = function_from_doc(_load_doc(args.function), space)
    value = maxplus_integral(cap, phi)
    print(format_score(value))
    if args.both:
        if profile is None:
            raise ValueError("--both applies to possibility documents only")
        pointwise = possibility_integral(profile, phi)
        print(f"pointwise {format_score(pointwise)}")
        print(f"diff {format_score(abs(value - pointwise))}")
    return 0


def cmd_hull_member(args) -> int:
    gens = generators_from_doc(_load_doc(args.generators))
    point = _load_doc(args.point)
    print("true" if hull_member(point, gens) else "false")
    return 0


def cmd_hull_combine(args) -> int:
    gens = generators_from_doc(_load_doc(args.generators))
    weights = _weights_arg(args.weights)
    print(_format_point(combine(gens, weights)))
    return 0


def cmd_barycenter(args) -> int:
    gens = generators_from_doc(_load_doc(args.generators))
    weights = _weights_arg(args.density)
    print(_format_point(barycenter(gens, weights)))
    return 0


def _convert_value(src: str, dst: str, doc):
    # a possibility profile and a max-times density carry identical data, so
    # everything routes through the max-times form
    if src == "possibility":
        profile = possibility_from_doc(doc)
        times = MaxTimesDensity(profile.space, profile.singletons)
    else:
        dens = density_from_doc(doc)
        got = "maxtimes" if isinstance(dens, MaxTimesDensity) else "maxplus"
        if got != src:
            raise ValueError(f"input document has kind {got!r}, not {src!r}")
        if src == "maxplus":
            if dst == "maxplus":
                return density_to_doc(dens)
            times = density_exp(dens)
        else:
            times = dens
    if dst == "maxplus":
        return density_to_doc(density_log(times))
    if dst == "maxtimes":
        return density_to_doc(times)
    return possibility_to_doc(PossibilityProfile(times.space, times.weights))


def cmd_convert(args) -> int:
    doc = _load_doc(args.input)
    out = _convert_value(args.src, args.dst, doc)
    text = dump_json(out, args.output)
    if args.output is None:
        print(text)
    return 0


def cmd_laws(args) -> int:
    if args.list:
        for spec in SUITES.values():
            print(f"{spec.name}: {spec.law}")
        return 0
    if args.suite == "all":
        reports = run_all(args.trials, args.seed, args.max_space, args.mutate)
    else:
        reports = [run_suite(args.suite, args.trials, args.seed, args.max_space, args.mutate)]
    for report in reports:
        status = "ok" if report.ok else "FAIL"
        print(
            f"{report.suite}: {status} trials={report.trials} "
            f"failures={len(report.failures)} seed={report.seed} "
            f"elapsed={report.elapsed:.2f}s"
        )
        for failure in report.failures[:5]:
            print(f"  trial {failure.trial}: {failure.description}")
            print(f"  witness: {json.dumps(failure.witness, sort_keys=True)}")
        if len(report.failures) > 5:
            print(f"  ... {len(report.failures) - 5} more failures")
    if args.json:
        dump_json({"reports": [r.to_doc() for r in reports]}, args.json)
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idemkit",
        description="max-plus measures, fuzzy integrals, and tropical hulls on finite spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("integrate", help="max-plus integral of a function against a capacity")
    p.add_argument("--space", required=True, help="space document (path or inline JSON)")
    p.add_argument("--capacity", required=True, help="capacity or possibility document")
    p.add_argument("--function", required=True, help="function document")
    p.add_argument(
        "--both",
        action="store_true",
        help="also print the pointwise singleton form and the absolute difference "
        "(possibility input only)",
    )
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("hull", help="tropical hull membership and combinations")
    hull_sub = p.add_subparsers(dest="hull_command", required=True)
    m = hull_sub.add_parser("member", help="is a point in the generated hull?")
    m.add_argument("--generators", required=True, help="points document")
    m.add_argument("--point", required=True, help="coordinate array (path or inline JSON)")
    m.set_defaults(func=cmd_hull_member)
    c = hull_sub.add_parser("combine", help="max-plus combination of the generators")
    c.add_argument("--generators", required=True, help="points document")
    c.add_argument("--weights", required=True, help="weights document or array")
    c.set_defaults(func=cmd_hull_combine)

    p = sub.add_parser("barycenter", help="idempotent barycenter of a weight density")
    p.add_argument("--generators", required=True, help="points document")
    p.add_argument("--density", required=True, help="weights document or array, peak 0")
    p.set_defaults(func=cmd_barycenter)

    p = sub.add_parser("laws", help="run randomized law suites")
    p.add_argument("--suite", default="all", choices=list(SUITES) + ["all"])
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-space", type=int, default=5, dest="max_space")
    p.add_argument("--json", metavar="PATH", help="write the machine-readable report here")
    p.add_argument(
        "--mutate",
        choices=["drop-weight"],
        help="corrupt the multiplication to demonstrate the harness catches it "
        "(effective in the unit and assoc suites)",
    )
    p.add_argument("--list", action="store_true", help="list suites and the laws they check")
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("convert", help="convert between density and possibility documents")
    p.add_argument("--from", required=True, dest="src", choices=DENSITY_KINDS)
    p.add_argument("--to", required=True, dest="dst", choices=DENSITY_KINDS)
    p.add_argument("--input", required=True, help="document to convert (path or inline JSON)")
    p.add_argument("--output", help="write here instead of stdout")
    p.set_defaults(func=cmd_convert)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
