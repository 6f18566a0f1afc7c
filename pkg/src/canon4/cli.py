"""Command-line surface: the "run the whole catalogue" entry point.

Subcommands mirror the library modules.  All structured output is JSON
with sorted keys and no timestamps, so identical inputs and seeds give
byte-identical bytes.  Scheme and cubic payloads travel as small JSON
files; ``parse_scheme`` and ``emit_scheme`` round-trip them exactly.
"""

import argparse
import json
import re
import sys
from fractions import Fraction

from . import divisors, lattices
from .chow import chow_form
from .corpus import parse_point, report_json, run_corpus, summarize
from .correspond import (
    CubicThreefold,
    chordal_detect,
    classify_cubic_point,
    correspondence_check,
    cubic_to_curve,
    curve_to_cubic,
)
from .scanning import curve_singular_points
from .scheme import TwoThreeScheme
from .singclass import classify_scheme, plane_component_test
from .stability import (
    allcock_verdict,
    destabilize_search,
    git_verdict,
    torus_weight_min,
    zero_weight_oneps,
)


def _dump(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def emit_scheme(scheme, points=()):
    """Canonical file form of a scheme: exact strings, sorted keys."""
    return _dump(
        {
            "f": str(scheme.f),
            "points": [[str(c) for c in pt] for pt in points],
            "q": str(scheme.q),
        }
    )


def parse_scheme(path):
    """Read a scheme file; returns the scheme and its candidate points."""
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    scheme = TwoThreeScheme.parse(obj["q"], obj["f"])
    points = [parse_point(pt) for pt in obj.get("points", ())]
    return scheme, points


def emit_cubic(cubic, points=()):
    return _dump(
        {
            "F": str(cubic.F),
            "marked": None
            if cubic.marked is None
            else [str(c) for c in cubic.marked],
            "points": [[str(c) for c in pt] for pt in points],
        }
    )


def parse_cubic(path):
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    marked = obj.get("marked")
    cubic = CubicThreefold.parse(obj["F"], marked and [Fraction(c) for c in marked])
    points = [parse_point(pt) for pt in obj.get("points", ())]
    return cubic, points, obj


def _auto_plane_tests(scheme, analysis):
    tests = {}
    for i, rec in enumerate(analysis.records):
        t = rec.sing_type
        deep_smooth = t.kind == "A" and t.k >= 6 and rec.location == "quadric_smooth_point"
        deep_vertex = t.kind == "A" and t.k >= 4 and rec.location == "quadric_vertex"
        if deep_smooth or deep_vertex:
            tests[i] = plane_component_test(scheme, rec).verdict
    return tests


def _primes_arg(text):
    return tuple(int(p) for p in text.split(",") if p)


# ----------------------------------------------------------------------
# subcommand bodies


def _cmd_sing_classify(args):
    scheme, points = parse_scheme(args.scheme)
    primes = _primes_arg(args.prime) if args.prime else (101, 103)
    analysis = classify_scheme(scheme, points, order=args.jet, primes=primes)
    sys.stdout.write(_dump(analysis.to_wire()))
    return 0


def _cmd_sing_scan(args):
    scheme, _ = parse_scheme(args.scheme)
    pts = sorted(curve_singular_points(scheme, args.prime))
    sys.stdout.write(
        _dump(
            {
                "count": len(pts),
                "points": [list(map(int, pt)) for pt in pts],
                "prime": args.prime,
            }
        )
    )
    return 0


def _cmd_corr_to_cubic(args):
    scheme, points = parse_scheme(args.scheme)
    X = curve_to_cubic(scheme)
    sys.stdout.write(emit_cubic(X))
    return 0


def _cmd_corr_from_cubic(args):
    cubic, _, _ = parse_cubic(args.cubic)
    point = parse_point(args.point.split(",")) if args.point else None
    scheme = cubic_to_curve(cubic, point)
    sys.stdout.write(emit_scheme(scheme))
    return 0


def _cmd_corr_check(args):
    scheme, points = parse_scheme(args.scheme)
    rep = correspondence_check(scheme, points=points, primes=_primes_arg(args.primes))
    sys.stdout.write(_dump(rep.to_wire()))
    return 0


def _cmd_stab_verdict(args):
    scheme, points = parse_scheme(args.scheme)
    analysis = classify_scheme(scheme, points, order=12)
    ribbon = chordal_detect(scheme)
    verdict = git_verdict(
        analysis,
        ribbon=ribbon,
        plane_tests=_auto_plane_tests(scheme, analysis) or None,
    )
    out = verdict.to_wire()
    out["types"] = analysis.type_labels
    out["quadric_rank"] = analysis.quadric_rank
    sys.stdout.write(_dump(out))
    return 0


def _cmd_stab_cubic(args):
    cubic, points, raw = parse_cubic(args.cubic)
    types = [classify_cubic_point(cubic, pt).sing_type for pt in points]
    flags = raw.get("plane_flags")
    if flags is not None:
        flags = {int(k): v for k, v in flags.items()}
    verdict = allcock_verdict(
        types,
        chordal=bool(raw.get("chordal", False)),
        nonisolated=bool(raw.get("nonisolated", False)),
        plane_flags=flags,
    )
    out = verdict.to_wire()
    out["types"] = sorted(t.label for t in types)
    zws = zero_weight_oneps(cubic.F)
    out["zero_weights"] = [
        list(z.weights) for z in zws if torus_weight_min(cubic.F, z) == 0
    ]
    sys.stdout.write(_dump(out))
    return 0


def _cmd_stab_destabilize(args):
    cubic, _, _ = parse_cubic(args.cubic)
    cert = destabilize_search(cubic.F, seed=args.seed, random_frames=args.frames)
    sys.stdout.write(_dump(None if cert is None else cert.to_wire()))
    return 0


def _cmd_stab_chowform(args):
    scheme, _ = parse_scheme(args.scheme)
    R = chow_form(scheme)
    out = R.to_wire()
    out["degree"] = R.degree
    sys.stdout.write(_dump(out))
    return 0


def _cmd_lat_roots(args):
    lat = lattices.make_lattice(args.expr)
    system = lattices.root_system(lat)
    sys.stdout.write(
        _dump(
            {
                "count": system.count,
                "expr": args.expr,
                "system": system.label,
            }
        )
    )
    return 0


def _cmd_lat_disc(args):
    lat = lattices.make_lattice(args.expr)
    sys.stdout.write(
        _dump(
            {
                "expr": args.expr,
                "invariant_factors": list(lattices.discriminant_group(lat)),
            }
        )
    )
    return 0


def _cmd_lat_cusps(args):
    sys.stdout.write(
        _dump(
            [
                {
                    "case": c.case,
                    "ambient": c.ambient,
                    "label": c.label,
                    "hyperelliptic": c.hyperelliptic,
                }
                for c in lattices.cusp_invariants()
            ]
        )
    )
    return 0


def _cmd_lat_borcherds(args):
    sys.stdout.write(
        _dump(
            [
                {
                    "name": r.name,
                    "perp": r.perp_label,
                    "vanishing_order": r.vanishing_order,
                    "catalogued_order": r.catalogued_order,
                    "ramification": r.ramification,
                    "coefficient": str(r.coefficient),
                    "flagged": r.flagged,
                }
                for r in lattices.borcherds_orders()
            ]
        )
    )
    return 0


def _cmd_lat_heegner(args):
    sys.stdout.write(
        _dump(
            [
                {
                    "name": t.name,
                    "complement": t.complement_label,
                    "root_count": t.root_count,
                    "contains_base": t.contains_base,
                }
                for t in lattices.heegner_types()
            ]
        )
    )
    return 0


_CLASS_RE = re.compile(r"([+-]?[0-9/]*)\s*(l|d|e|h)")
_BASIS_OF = {"l": "lambda-delta", "d": "lambda-delta", "e": "eta-h", "h": "eta-h"}
_SLOT_OF = {"l": 0, "d": 1, "e": 0, "h": 1}


def parse_class(text):
    """Read "9l-1d" or "3e+2h" into (coeffs, basis)."""
    found = _CLASS_RE.findall(text.replace(" ", ""))
    if not found:
        raise ValueError(f"cannot read a divisor class from {text!r}")
    bases = {_BASIS_OF[letter] for _, letter in found}
    if len(bases) != 1:
        raise ValueError("mixed basis letters in class expression")
    coeffs = [Fraction(0), Fraction(0)]
    for num, letter in found:
        if num in ("", "+"):
            num = "1"
        elif num == "-":
            num = "-1"
        coeffs[_SLOT_OF[letter]] += Fraction(num)
    return tuple(coeffs), bases.pop()


def _cmd_div_constants(args):
    consts = divisors.pe_constants()
    out = {}
    for k, v in consts.items():
        if isinstance(v, divisors.PEClass):
            out[k] = {"eta": str(v.c_eta), "h": str(v.c_h)}
        else:
            out[k] = [str(x) for x in v]
    sys.stdout.write(_dump(out))
    return 0


def _cmd_div_convert(args):
    coeffs, basis = parse_class(args.cls)
    converted = divisors.convert(coeffs, basis, args.to)
    sys.stdout.write(
        _dump(
            {
                "class": args.cls,
                "from": basis,
                "to": args.to,
                "coeffs": [str(c) for c in converted],
            }
        )
    )
    return 0


_PENCIL_NAMES = {
    "quadric": "fixed_cubic_pencil_of_quadrics",
    "cubic": "fixed_quadric_pencil_of_cubics",
}


def _cmd_div_pencil(args):
    config = _PENCIL_NAMES.get(args.config, args.config)
    count = divisors.pencil_singular_count(config)
    sys.stdout.write(_dump({"config": config, "singular_members": count}))
    return 0


def _cmd_div_alpha(args):
    cls = tuple(int(c) for c in args.cls.split(","))
    alpha = divisors.hassett_keel_alpha(cls)
    sys.stdout.write(
        _dump({"class": list(cls), "alpha": None if alpha is None else str(alpha)})
    )
    return 0


def _cmd_corpus_run(args):
    reports = run_corpus(filter=args.filter, seed=args.seed)
    payload = report_json(reports, seed=args.seed, filter=args.filter)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(payload)
    sys.stdout.write(payload)
    counts = summarize(reports)
    if counts["fail"]:
        return 1
    if counts["flagged"]:
        return 2
    return 0


# ----------------------------------------------------------------------
# wiring


def build_parser():
    top = argparse.ArgumentParser(
        prog="canon4",
        description="exact invariant-theory toolkit for (2,3) space curves",
    )
    sub = top.add_subparsers(dest="module", required=True)

    sing = sub.add_parser("sing", help="singularity classification").add_subparsers(
        dest="command", required=True
    )
    p = sing.add_parser("classify", help="classify candidate singular points")
    p.add_argument("--scheme", required=True)
    p.add_argument("--prime", help="comma-separated scan primes", default="")
    p.add_argument("--jet", type=int, default=12)
    p.set_defaults(fn=_cmd_sing_classify)
    p = sing.add_parser("scan", help="enumerate singular points mod p")
    p.add_argument("--scheme", required=True)
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(fn=_cmd_sing_scan)

    corr = sub.add_parser("corr", help="curve/threefold correspondence").add_subparsers(
        dest="command", required=True
    )
    p = corr.add_parser("to-cubic", help="associated cubic threefold")
    p.add_argument("--scheme", required=True)
    p.set_defaults(fn=_cmd_corr_to_cubic)
    p = corr.add_parser("from-cubic", help="curve of a marked double point")
    p.add_argument("--cubic", required=True)
    p.add_argument("--point", default="")
    p.set_defaults(fn=_cmd_corr_from_cubic)
    p = corr.add_parser("check", help="two-way dictionary check")
    p.add_argument("--scheme", required=True)
    p.add_argument("--primes", default="101,103")
    p.set_defaults(fn=_cmd_corr_check)

    stab = sub.add_parser("stab", help="stability verdicts").add_subparsers(
        dest="command", required=True
    )
    p = stab.add_parser("verdict", help="verdict for a curve")
    p.add_argument("--scheme", required=True)
    p.set_defaults(fn=_cmd_stab_verdict)
    p = stab.add_parser("cubic", help="verdict for a cubic threefold")
    p.add_argument("--cubic", required=True)
    p.set_defaults(fn=_cmd_stab_cubic)
    p = stab.add_parser("destabilize", help="search for a destabilizing torus")
    p.add_argument("--cubic", required=True)
    p.add_argument("--frames", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_stab_destabilize)
    p = stab.add_parser("chowform", help="Chow form of the cycle")
    p.add_argument("--scheme", required=True)
    p.set_defaults(fn=_cmd_stab_chowform)

    lat = sub.add_parser("lat", help="lattice bookkeeping").add_subparsers(
        dest="command", required=True
    )
    p = lat.add_parser("roots", help="root system of a lattice expression")
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_lat_roots)
    p = lat.add_parser("disc", help="discriminant group")
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_lat_disc)
    p = lat.add_parser("cusps", help="cusp classification")
    p.set_defaults(fn=_cmd_lat_cusps)
    p = lat.add_parser("borcherds", help="vanishing orders and coefficients")
    p.set_defaults(fn=_cmd_lat_borcherds)
    p = lat.add_parser("heegner", help="hyperplane types")
    p.set_defaults(fn=_cmd_lat_heegner)

    div = sub.add_parser("div", help="divisor-class arithmetic").add_subparsers(
        dest="command", required=True
    )
    p = div.add_parser("constants", help="named classes")
    p.set_defaults(fn=_cmd_div_constants)
    p = div.add_parser("convert", help="change of basis")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--to", required=True, choices=["eta-h", "lambda-delta"])
    p.set_defaults(fn=_cmd_div_convert)
    p = div.add_parser("pencil", help="singular members of a Lefschetz pencil")
    p.add_argument("--config", required=True)
    p.set_defaults(fn=_cmd_div_pencil)
    p = div.add_parser("alpha", help="log-canonical slope of a test class")
    p.add_argument("--class", dest="cls", required=True)
    p.set_defaults(fn=_cmd_div_alpha)

    corpus_p = sub.add_parser("corpus", help="catalogued checks").add_subparsers(
        dest="command", required=True
    )
    p = corpus_p.add_parser("run", help="recompute every catalogued expectation")
    p.add_argument("--filter", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", default=None)
    p.set_defaults(fn=_cmd_corpus_run)

    return top


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (OSError, ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
