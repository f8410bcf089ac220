"""Command line front end.

    pwinternitz cut --sides 8,8,1
    pwinternitz wline --x 1 --y 4
    pwinternitz sweep --sides 5,4,3 --samples 3600 --out profile.csv
    pwinternitz scan --resolution 400 --margin 1e-3 --out scan.csv
    pwinternitz polygon --file poly.json
    pwinternitz neumann --file poly.json --starts 8 --seed 1
    pwinternitz verify --quick

Results go to standard output as JSON with 12 significant digits.  Usage
errors exit with status 2, computation errors with status 1 and a JSON error
object on standard error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import __version__
from .closed_form import (
    CLAIMED_INFIMUM, min_cut_at_point, min_cut_centroid, upper_bound_margin,
    vertex_cuts_centroid,
)
from .convex_poly import (
    is_centrally_symmetric, load_polygon, neumann_search, poly_centroid, poly_min_fraction,
)
from .errors import GapDetected, GeometryError
from .oracle import DEFAULT_SAMPLES, range_interval, sweep_min_area, sweep_min_perimeter
from .shape_scan import scan_region
from .triangle import centroid, embed, make_triangle
from .wline import lagrange_oracle, wline_extreme

SEED_ENV = "PWINTERNITZ_SEED"


def _floats(n):
    def parse(text):
        try:
            vals = [float(v) for v in text.split(",")]
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected {n} comma-separated numbers, got {text!r}")
        if len(vals) != n:
            raise argparse.ArgumentTypeError(f"expected {n} comma-separated numbers, got {text!r}")
        return vals
    return parse


def _round(obj):
    if isinstance(obj, (float, np.floating)):
        return float(f"{float(obj):.12g}")
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _round(obj.tolist())
    if isinstance(obj, np.integer):
        return int(obj)
    return obj


def _emit(obj):
    print(json.dumps(_round(obj), indent=2))


def _triangle_header(t):
    return {
        "sides": {"a": t.a, "b": t.b, "c": t.c},
        "input_order": list(t.original),
        "perimeter": t.perimeter,
        "near_degenerate": t.near_degenerate,
    }


def cmd_cut(args):
    t = make_triangle(*args.sides)
    e = embed(t)
    out = _triangle_header(t)
    if args.point is None:
        res = min_cut_centroid(t)
        out["point"] = list(centroid(e))
        out["vertex_cuts"] = vertex_cuts_centroid(t).as_dict()
        out["upper_bound_margin"] = upper_bound_margin(t)
        discrepancies = []
        if res.m < CLAIMED_INFIMUM:
            discrepancies.append({
                "status": "DISCREPANCY",
                "claim": "centroid cut fraction lies in (3/10, 4/9] for every triangle",
                "measured_m": res.m,
                "claimed_lower_bound": CLAIMED_INFIMUM,
            })
        out["discrepancies"] = discrepancies
    else:
        res = min_cut_at_point(e, args.point)
        out["point"] = list(args.point)
    out.update(res.as_dict())
    _emit(out)
    return 0


def cmd_wline(args):
    sol = wline_extreme(args.x, args.y)
    s, t = lagrange_oracle(args.x, args.y)
    _emit({"x": args.x, "y": args.y, "s": sol.s, "t": sol.t, "cut": sol.cut,
           "oracle": {"s": s, "t": t, "cut": s + t}})
    return 0


def _write_csv(path, writer):
    with open(path, "w", newline="") as fh:
        writer(fh)


def cmd_sweep(args):
    t = make_triangle(*args.sides)
    e = embed(t)
    P = centroid(e) if args.point is None else np.asarray(args.point, dtype=float)
    sweep = sweep_min_area if args.area else sweep_min_perimeter
    prof = sweep(e, P, args.samples)
    if args.out:
        _write_csv(args.out, prof.to_csv)
    out = _triangle_header(t)
    out["point"] = list(P)
    out.update(prof.summary())
    try:
        out["range"] = list(range_interval(prof))
    except GapDetected as exc:
        out["range_error"] = str(exc)
    _emit(out)
    return 0


def cmd_scan(args):
    rep = scan_region(args.resolution, args.margin, seed=args.seed)
    if args.out:
        _write_csv(args.out, rep.to_csv)
    summary = rep.summary()
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(_round(summary), fh, indent=2)
    below = summary.pop("below_claimed_bound")
    summary["below_claimed_bound_sample"] = below[:10]
    _emit(summary)
    return 0


def cmd_polygon(args):
    p = load_polygon(args.file)
    G = poly_centroid(p, args.centroid)
    P = G if args.point is None else np.asarray(args.point, dtype=float)
    prof = poly_min_fraction(p, P, args.samples)
    if args.out:
        _write_csv(args.out, prof.to_csv)
    out = {
        "vertices": [list(v) for v in p.vertices],
        "perimeter": p.perimeter, "area": p.area,
        "centroid": list(G), "centroid_kind": args.centroid,
        "center_of_symmetry": is_centrally_symmetric(p),
        "point": list(P),
    }
    out.update(prof.summary())
    _emit(out)
    return 0


def cmd_neumann(args):
    p = load_polygon(args.file)
    res = neumann_search(p, n=args.samples, starts=args.starts, seed=args.seed)
    _emit(res.as_dict())
    return 0


def cmd_verify(args):
    from .verify import run_verify

    rep = run_verify(seed=args.seed, quick=args.quick)
    print(rep.render())
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(_round(rep.as_dict()), fh, indent=2, default=str)
    return 1 if rep.failed else 0


def build_parser() -> argparse.ArgumentParser:
    default_seed = int(os.environ.get(SEED_ENV, "0"))
    parser = argparse.ArgumentParser(
        prog="pwinternitz",
        description="Minimal perimeter cuts through a point of triangles and convex polygons.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cut", help="closed-form minimal cut (centroid by default)")
    p.add_argument("--sides", type=_floats(3), required=True, metavar="a,b,c")
    p.add_argument("--point", type=_floats(2), metavar="x,y",
                   help="interior point in the canonical embedding B=(0,0), C=(a,0)")
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("wline", help="W-line of an angle through oblique coordinates (x, y)")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.set_defaults(func=cmd_wline)

    p = sub.add_parser("sweep", help="oracle sweep over all lines through a point")
    p.add_argument("--sides", type=_floats(3), required=True, metavar="a,b,c")
    p.add_argument("--point", type=_floats(2), metavar="x,y")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--area", action="store_true", help="sweep area fractions instead of perimeter")
    p.add_argument("--out", help="CSV profile path")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("scan", help="grid scan of normalized triangle shapes")
    p.add_argument("--resolution", type=int, default=400)
    p.add_argument("--margin", type=float, default=1e-3)
    p.add_argument("--seed", type=int, default=default_seed)
    p.add_argument("--out", help="CSV grid path")
    p.add_argument("--json", help="write the full JSON summary here")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("polygon", help="minimal perimeter fraction for a convex polygon")
    p.add_argument("--file", required=True, help='JSON file {"vertices": [[x, y], ...]}')
    p.add_argument("--point", type=_floats(2), metavar="x,y")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--centroid", choices=("area", "perimeter"), default="area")
    p.add_argument("--out", help="CSV profile path")
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("neumann", help="search for the point maximizing the worst fraction")
    p.add_argument("--file", required=True)
    p.add_argument("--starts", type=int, default=5)
    p.add_argument("--seed", type=int, default=default_seed)
    p.add_argument("--samples", type=int, default=360)
    p.set_defaults(func=cmd_neumann)

    p = sub.add_parser("verify", help="run the verification report")
    p.add_argument("--seed", type=int, default=default_seed)
    p.add_argument("--quick", action="store_true")
    p.add_argument("--json", help="write the report as JSON here")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GeometryError, ValueError, OSError, KeyError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(err), file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
