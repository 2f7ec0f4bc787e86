"""Command-line front end: computation, verification sweeps, lattice
counting, and figure data.

Exit codes: 0 success, 2 parse error, 3 domain/orientation error,
4 hypotheses failed, 5 bound violated.  All randomized sweeps take an
explicit seed (default 0) and log it in their output, so identical
invocations produce byte-identical JSON/CSV.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import compare as cmp
from .curve import (
    ConvexityError,
    OrientationError,
    affine_arclength,
    area_function,
    constant_curvature_curve,
    reconstruct_from_curvature,
)
from .kfuncs import DomainError, Interval, abar, ck, sk
from .lattice import (
    ConicArc,
    Lattice,
    LinearConstraint,
    bound_general,
    bound_rigid,
    bound_sharp,
    bound_three_points,
    bound_two_points,
    enumerate_near_curve,
    enumerate_on_arc,
    m_of_curve,
)
from .odekernel import (
    SolverError,
    compare_solutions,
    lagrange_kernel,
    oscillator_op,
    third_order_op,
)
from .sharp_instances import (
    circle_instance,
    hyperbola_general_instance,
    hyperbola_zxz_instance,
    parabola_instance,
)
from .specfiles import SpecError, curve_bbox, load_curve_spec, load_lattice_spec

OK, PARSE, DOMAIN, HYPOTHESES, VIOLATED = 0, 2, 3, 4, 5

SCHEMA = 1


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _json_payload(payload: dict, out: str | None) -> None:
    payload = {"schema": SCHEMA, **payload}
    _emit(json.dumps(payload, sort_keys=True, indent=2), out)


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _exit_from_reports(reports) -> int:
    verdicts = {r.verdict for r in reports}
    if any(v == "violated" for v in verdicts):
        return VIOLATED
    if any(v == "hypotheses-failed" for v in verdicts):
        return HYPOTHESES
    return OK


# ----------------------------------------------------------------- commands


def cmd_arclength(args) -> int:
    spec = load_curve_spec(args.curve)
    if spec.raw is not None:
        raw, t0, t1 = spec.raw
        lam = affine_arclength(raw, t0, t1)
    else:
        lam = spec.curve.domain.length
    print(lam)
    if args.out:
        ss = np.linspace(spec.curve.domain.lo, spec.curve.domain.hi, args.samples)
        rows = [[repr(float(s)), repr(float(s - spec.curve.domain.lo))] for s in ss]
        _emit(_csv_text(["s", "arclength_from_start"], rows), args.out)
    return OK


def cmd_curvature(args) -> int:
    spec = load_curve_spec(args.curve)
    c = spec.curve
    where = args.at if args.at is not None else 0.5 * (c.domain.lo + c.domain.hi)
    if where not in c.domain:
        raise DomainError(f"evaluation point {where} outside domain")
    print(c.curvature(where))
    if args.out:
        ss = np.linspace(c.domain.lo, c.domain.hi, args.samples)
        rows = [[repr(float(s)), repr(float(c.curvature(s)))] for s in ss]
        _emit(_csv_text(["s", "kappa"], rows), args.out)
    return OK


def cmd_area(args) -> int:
    spec = load_curve_spec(args.curve)
    c = spec.curve
    base = args.base if args.base is not None else c.domain.lo
    apex = tuple(args.apex) if args.apex else None
    area = area_function(c, base, apex)
    print(area(c.domain.hi))
    if args.out:
        ss = np.linspace(c.domain.lo, c.domain.hi, args.samples)
        rows = [[repr(float(s)), repr(float(area(s)))] for s in ss]
        _emit(_csv_text(["s", "area"], rows), args.out)
    return OK


def cmd_kernel(args) -> int:
    interval = Interval(args.lo, args.hi)
    k = args.k
    if args.family == "second":
        op = oscillator_op(k, interval)
        closed = lambda s, r: sk(k, s - r)
    else:
        op = third_order_op(k, interval)
        closed = lambda s, r: ((1.0 - ck(k, s - r)) / k if k != 0.0
                               else (s - r) ** 2 / 2.0)
    kernel = lagrange_kernel(op)
    grid = np.linspace(args.lo, args.hi, args.grid)
    rows, worst = [], 0.0
    for i, r in enumerate(grid[:-1]):
        col = kernel.column(float(r))
        for s in grid[i + 1:]:
            va, vb = col(float(s)), closed(float(s), float(r))
            worst = max(worst, abs(va - vb))
            rows.append([repr(float(s)), repr(float(r)), repr(va), repr(vb)])
    print(worst)
    if args.out:
        _emit(_csv_text(["s", "r", "kernel", "closed_form"], rows), args.out)
    return OK


def cmd_bounds(args) -> int:
    lower, upper = cmp.area_bounds(args.k0, args.k1, args.L)
    payload = {
        "inputs": {"k0": args.k0, "k1": args.k1, "L": args.L},
        "area_sandwich": {"lower": lower, "upper": upper},
        "triangle_arc_bound": cmp.triangle_bound_arc(args.k0, args.L),
    }
    try:
        payload["triangle_rect_bound"] = cmp.triangle_bound_rect(args.k0, args.L)
    except DomainError as exc:
        payload["triangle_rect_bound"] = None
        payload["triangle_rect_note"] = str(exc)
    _json_payload(payload, args.out)
    return OK


# ------------------------------------------------------------ verify sweeps


def _random_band_curvature(rng, k0, k1):
    a = rng.uniform(k0, k1, size=2)
    w = rng.uniform(0.5, 2.0)
    lo, hi = min(a), max(a)
    mid, amp = 0.5 * (lo + hi), 0.5 * (hi - lo)

    def kap(s, mid=mid, amp=amp, w=w):
        return mid + amp * math.sin(w * s)

    return kap


def _verify_thm23(args, rng):
    from .curve import area_ode_residual
    reports = []
    for _ in range(args.trials):
        kap = _random_band_curvature(rng, -2.0, 1.0)
        curve = reconstruct_from_curvature(kap, Interval(0.0, args.L))
        res = area_ode_residual(curve, area_function(curve, 0.0))
        reports.append(cmp.BoundReport(theorem="thm2.3", lhs=res, rhs=0.0,
                                       slack=args.tol or 1e-5))
    return reports


def _verify_thm34(args, rng):
    reports = []
    interval = Interval(0.0, args.L)
    cap = (math.pi / args.L) ** 2
    if args.k1 > 0.0 and args.k1 > cap * (1 + 1e-12):
        rep = cmp.BoundReport(theorem="thm3.4")
        rep.hypotheses.append(cmp.Hypothesis(
            "k1-within-sturm-range", False,
            f"k1 = {args.k1} exceeds (pi/L)^2 = {cap}"))
        return [rep]
    for _ in range(args.trials):
        kbar = _random_band_curvature(rng, args.k0, args.k1)
        gap = rng.uniform(0.0, 1.5)
        kap = lambda s, kb=kbar, g=gap: kb(s) - g
        reports.append(compare_solutions(kap, kbar, 3, 1, 0.5, (0.0, 0.0, 0.0),
                                         interval, tol=args.tol or 1e-7,
                                         positivity_grid_n=31))
    return reports


def _verify_thm41(args, rng):
    reports = []
    cap = (math.pi / args.L) ** 2
    for trial in range(args.trials):
        case = trial % 3
        if case == 0:      # constant reference
            kbar_val = rng.uniform(args.k0, args.k1)
            kbar = lambda s, v=kbar_val: v
            kap = _random_band_curvature(rng, args.k0, kbar_val)
        elif case == 1:    # nonpositive reference
            kbar = _random_band_curvature(rng, min(args.k0, -0.01), 0.0)
            kbar_ref = kbar
            kbar = lambda s, f=kbar_ref: min(0.0, f(s))
            kap = lambda s, f=kbar, g=rng.uniform(0.0, 1.0): f(s) - g
        else:              # bounded positive reference
            k1 = min(args.k1, 0.9 * cap) if args.k1 > 0 else 0.5 * cap
            kbar = _random_band_curvature(rng, 0.0, k1)
            kap = lambda s, f=kbar, g=rng.uniform(0.0, 1.0): f(s) - g
        curve = reconstruct_from_curvature(kap, Interval(0.0, args.L))
        reports.append(cmp.area_compare(curve, kbar, args.L,
                                        tol=args.tol or 1e-7,
                                        positivity_grid_n=41))
    return reports


def _verify_cor42(args, rng):
    reports = []
    lo_b, hi_b = abar(args.k1, args.L), abar(args.k0, args.L)
    for _ in range(args.trials):
        kap = _random_band_curvature(rng, args.k0, args.k1)
        curve = reconstruct_from_curvature(kap, Interval(0.0, args.L))
        val = area_function(curve, 0.0)(args.L)
        worst = max(lo_b - val, val - hi_b)
        reports.append(cmp.BoundReport(
            theorem="cor4.2", lhs=worst, rhs=0.0,
            slack=1e-7 * max(1.0, hi_b),
            notes=f"area {val} in [{lo_b}, {hi_b}]"))
    return reports


def _verify_thm56(args, rng):
    reports = []
    if args.constant is not None:
        k = args.constant
        curve = constant_curvature_curve(k, Interval(-args.L, args.L))
        reports.append(cmp.coord_bounds_check(curve, 0.0, k, k, args.L,
                                              tol=args.tol or 1e-7))
        return reports
    for _ in range(args.trials):
        kap = _random_band_curvature(rng, args.k0, args.k1)
        curve = reconstruct_from_curvature(kap, Interval(-args.L, args.L))
        reports.append(cmp.coord_bounds_check(curve, 0.0, args.k0, args.k1,
                                              args.L, tol=args.tol or 1e-7))
    return reports


def _verify_triangles(args, rng, kind):
    reports = []
    for _ in range(args.trials):
        kap = _random_band_curvature(rng, args.k0, min(args.k1, 0.0))
        curve = reconstruct_from_curvature(kap, Interval(0.0, args.L))
        params = np.sort(rng.uniform(0.0, args.L, size=3))
        if params[0] + 1e-9 >= params[1] or params[1] + 1e-9 >= params[2]:
            continue
        reports.append(cmp.verify_triangle_bound(curve, tuple(params), kind,
                                                 tol=args.tol or 1e-7))
    return reports


VERIFY_REGISTRY = {
    "thm2.3": _verify_thm23,
    "thm3.4": _verify_thm34,
    "thm4.1": _verify_thm41,
    "cor4.2": _verify_cor42,
    "thm5.6": _verify_thm56,
    "prop4.3": lambda a, r: _verify_triangles(a, r, "arc"),
    "thm5.8": lambda a, r: _verify_triangles(a, r, "rect"),
}


def cmd_verify(args) -> int:
    if args.theorem not in VERIFY_REGISTRY:
        print(f"unknown theorem id {args.theorem!r}; known: "
              f"{sorted(VERIFY_REGISTRY)}", file=sys.stderr)
        return PARSE
    rng = np.random.default_rng(args.seed)
    reports = VERIFY_REGISTRY[args.theorem](args, rng)
    for i, rep in enumerate(reports):
        line = f"{args.theorem} trial {i}: {rep.verdict}"
        if rep.equality:
            line += " (equality)"
        print(line)
    if args.format == "csv":
        rows = [[i, args.theorem, r.verdict, repr(r.lhs), repr(r.rhs),
                 int(r.equality)] for i, r in enumerate(reports)]
        _emit(_csv_text(["trial", "theorem", "verdict", "lhs", "rhs",
                         "equality"], rows), args.out)
    else:
        payload = {
            "theorem": args.theorem,
            "seed": args.seed,
            "trials": len(reports),
            "reports": [r.to_dict() for r in reports],
        }
        _json_payload(payload, args.out)
    return _exit_from_reports(reports)


# ------------------------------------------------------------------- count


def _window_constraints(args) -> tuple[LinearConstraint, ...]:
    cons = []
    if args.xmin is not None:
        cons.append(LinearConstraint.make(1, 0, -Fraction(args.xmin)))
    if args.xmax is not None:
        cons.append(LinearConstraint.make(-1, 0, Fraction(args.xmax)))
    if args.ymin is not None:
        cons.append(LinearConstraint.make(0, 1, -Fraction(args.ymin)))
    if args.ymax is not None:
        cons.append(LinearConstraint.make(0, -1, Fraction(args.ymax)))
    return tuple(cons)


def _on_arc(curve, p, tol: float = 1e-6) -> tuple[bool, float]:
    """Float check that an (exact) conic point lies on the parameterized
    arc; returns its parameter."""
    from scipy.optimize import minimize_scalar
    px, py = float(p[0]), float(p[1])

    def dist2(s: float) -> float:
        q = curve.point(s)
        return (q[0] - px) ** 2 + (q[1] - py) ** 2

    ss = np.linspace(curve.domain.lo, curve.domain.hi, 1024)
    d2 = [dist2(float(s)) for s in ss]
    i = int(np.argmin(d2))
    step = curve.domain.length / 1023
    lo = max(curve.domain.lo, ss[i] - 2 * step)
    hi = min(curve.domain.hi, ss[i] + 2 * step)
    res = minimize_scalar(dist2, bounds=(lo, hi), method="bounded",
                          options={"xatol": 1e-13})
    # the bounded minimizer stays strictly interior, so re-check the
    # bracket endpoints for minima at the arc ends
    best_s, best_d2 = float(res.x), float(res.fun)
    for cand in (lo, hi, float(ss[i])):
        d = dist2(cand)
        if d < best_d2:
            best_s, best_d2 = cand, d
    return math.sqrt(max(best_d2, 0.0)) <= tol, best_s


def cmd_count(args) -> int:
    spec = load_curve_spec(args.curve)
    lat = load_lattice_spec(args.lattice)
    curve = spec.curve

    warning = None
    if spec.exact:
        bbox = curve_bbox(curve)
        arc = ConicArc(conic=spec.conic, constraints=_window_constraints(args),
                       bbox=bbox)
        candidates = enumerate_on_arc(arc, lat)
        coords, positions, params = [], [], []
        for co, po in zip(candidates.coords, candidates.positions):
            ok, s = _on_arc(curve, po)
            if ok:
                coords.append(co)
                positions.append(po)
                params.append(s)
        order = sorted(range(len(coords)), key=lambda i: params[i])
        from .lattice import LatticePointSet
        points = LatticePointSet([coords[i] for i in order],
                                 [positions[i] for i in order],
                                 [params[i] for i in order])
    else:
        warning = ("no exact membership test for this curve type; "
                   "using 1e-9 proximity membership")
        points = enumerate_near_curve(curve, lat, tol=args.tol or 1e-9)

    grid = np.linspace(curve.domain.lo, curve.domain.hi, 201)
    kv = [curve.curvature(s) for s in grid]
    k0, k1 = min(kv), max(kv)
    lam = curve.domain.length
    cell = float(lat.cell_area)
    multiplier = args.multiplier or m_of_curve(lat, points.positions)

    theorem = args.theorem
    if theorem == "auto":
        try:
            cert = bound_rigid(k0, k1, lam, multiplier, cell)
            theorem = "rigid_lat"
        except ValueError:
            cert = bound_sharp(k0, k1, lam, multiplier, cell)
            theorem = "sharp_lat"
    elif theorem == "sharp_lat":
        cert = bound_sharp(k0, k1, lam, multiplier, cell)
    elif theorem == "rigid_lat":
        cert = bound_rigid(k0, k1, lam, multiplier, cell)
    elif theorem == "2pts1":
        cert = bound_two_points(k0, lam, multiplier, cell)
    elif theorem == "2pts2":
        cert = bound_three_points(k0, k1, lam, multiplier, cell)
    else:
        cert = bound_general(k0, lam, multiplier, cell)

    count = len(points)
    payload = {
        "certificate": cert.to_dict(),
        "count": count,
        "points": [[m, n, float(x), float(y)] for (m, n), (x, y) in
                   zip(points.coords, points.positions)],
        "exact_membership": points.exact,
        "sharp": cert.bound is not None and count == cert.bound,
    }
    if warning:
        payload["warning"] = warning
    if args.format == "csv":
        rows = [[m, n, repr(float(x)), repr(float(y))]
                for (m, n), (x, y) in zip(points.coords, points.positions)]
        _emit(_csv_text(["m", "n", "x", "y"], rows), None)
    else:
        _json_payload(payload, None)
    summary = f"bound {cert.bound} count {count}"
    if payload["sharp"]:
        summary += " SHARP"
    print(summary)
    if args.out:
        rows = [[m, n, repr(float(x)), repr(float(y)), repr(float(s))]
                for (m, n), (x, y), s in
                zip(points.coords, points.positions, points.params)]
        _emit(_csv_text(["m", "n", "x", "y", "param"], rows), args.out)
    if cert.bound is None or not cert.conclusive:
        return HYPOTHESES
    if count > cert.bound:
        return VIOLATED
    return OK


# ------------------------------------------------------------------ figures


def _figure_rows(figure: str) -> list[list]:
    rows = []

    def add_curve(series, curve, n=200):
        for s in np.linspace(curve.domain.lo, curve.domain.hi, n):
            p = curve.point(s)
            rows.append([series, repr(float(s)), repr(float(p[0])),
                         repr(float(p[1])), 0])

    def add_marks(series, pts, params=None):
        for i, p in enumerate(pts):
            s = params[i] if params else i
            rows.append([series, repr(float(s)), repr(float(p[0])),
                         repr(float(p[1])), 1])

    if figure == "fig1":
        steep = constant_curvature_curve(0.0, Interval(0.0, 2.0))
        flat = constant_curvature_curve(-1.0, Interval(0.0, 2.0))
        add_curve("reference", steep)
        add_curve("comparison", flat)
        add_marks("secant", [steep.point(0.0), steep.point(2.0)])
        add_marks("secant_comparison", [flat.point(0.0), flat.point(2.0)])
    elif figure == "fig5":
        k0, L = -1.0, 1.0
        c = constant_curvature_curve(k0, Interval(-L, L))
        add_curve("conic", c)
        add_marks("triangle", [c.point(-L), c.point(0.0), c.point(L)],
                  [-L, 0.0, L])
    elif figure == "fig6":
        c = constant_curvature_curve(1.0, Interval(-1.2, 1.2))
        add_curve("curve", c)
        from .curve import adapted_frame, graphing_parameter_set
        fr = adapted_frame(c, 0.0)
        add_marks("frame_origin", [fr.origin])
        add_marks("frame_tangent", [fr.origin + fr.tangent])
        add_marks("frame_normal", [fr.origin + fr.normal])
        gset = graphing_parameter_set(c, 0.0)
        add_marks("graphing_param_endpoints",
                  [c.point(gset.lo), c.point(gset.hi)], [gset.lo, gset.hi])
    elif figure == "fig7":
        inst = hyperbola_zxz_instance(1)
        add_curve("hyperbola", inst.curve)
        pts = inst.enumerate()
        add_marks("lattice_points", pts.positions_float(), pts.params)
    elif figure == "fig8":
        inst = circle_instance(1.0)
        add_curve("circle", inst.curve)
        for config in inst.configs:
            add_marks(config.name, inst.plane_points(config, 4))
    else:
        raise SpecError(f"unknown figure id {figure!r}")
    return rows


def cmd_figures(args) -> int:
    rows = _figure_rows(args.figure)
    _emit(_csv_text(["series", "s", "x", "y", "marker"], rows), args.out)
    return OK


# ----------------------------------------------------------------- examples


def cmd_examples(args) -> int:
    name = args.name
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    if name == "parabola":
        inst = parabola_instance(m0=args.m0, rigid=args.rigid)
    elif name == "hyperbola":
        inst = hyperbola_zxz_instance(args.m0, rigid=args.rigid)
    elif name == "hyperbola-general":
        lat = Lattice.make((0, 0), (2, 0), (0, 4))
        inst = hyperbola_general_instance(lat, args.m0, rigid=args.rigid)
    elif name == "circle":
        inst = circle_instance(1.0)
        spec = {
            "type": "conic",
            "coeffs": ["1", "0", "1", "0", "0", "-1"],
            "seed": ["1", "0"],
            "domain": ["0", repr(inst.lam_full)],
        }
        (outdir / "circle-curve.json").write_text(
            json.dumps(spec, sort_keys=True, indent=2))
        payload = {"instance": "circle", "configs": [
            {"name": c.name, "theta": c.theta, "trace": c.trace}
            for c in inst.configs]}
        _json_payload(payload, args.out)
        return OK
    else:
        print(f"unknown example {name!r}", file=sys.stderr)
        return PARSE

    curve_path = outdir / f"{name}-curve.json"
    lattice_path = outdir / f"{name}-lattice.json"
    curve_path.write_text(json.dumps(inst.to_curve_spec(), sort_keys=True, indent=2))
    lattice_path.write_text(json.dumps(inst.to_lattice_spec(), sort_keys=True, indent=2))
    payload = {
        "instance": name,
        "m0": args.m0,
        "rigid": args.rigid,
        "theorem": inst.theorem,
        "expected_bound": inst.expected_bound,
        "expected_count": len(inst.expected_coords),
        "curve_spec": str(curve_path),
        "lattice_spec": str(lattice_path),
    }
    _json_payload(payload, args.out)
    return OK


# -------------------------------------------------------------------- main


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="affinecurves",
                                description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, samples=True):
        sp.add_argument("--tol", type=float, default=None)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--out", default=None)
        if samples:
            sp.add_argument("--samples", type=int, default=65)

    sp = sub.add_parser("arclength", help="affine arc length of a curve spec")
    sp.add_argument("curve")
    common(sp)
    sp.set_defaults(fn=cmd_arclength)

    sp = sub.add_parser("curvature", help="affine curvature of a curve spec")
    sp.add_argument("curve")
    sp.add_argument("--at", type=float, default=None)
    common(sp)
    sp.set_defaults(fn=cmd_curvature)

    sp = sub.add_parser("area", help="swept area function of a curve spec")
    sp.add_argument("curve")
    sp.add_argument("--base", type=float, default=None)
    sp.add_argument("--apex", type=float, nargs=2, default=None)
    common(sp)
    sp.set_defaults(fn=cmd_area)

    sp = sub.add_parser("kernel", help="Lagrange kernel vs closed form")
    sp.add_argument("--family", choices=("second", "third"), default="third")
    sp.add_argument("--k", type=float, required=True)
    sp.add_argument("--lo", type=float, default=0.0)
    sp.add_argument("--hi", type=float, default=1.0)
    sp.add_argument("--grid", type=int, default=11)
    common(sp, samples=False)
    sp.set_defaults(fn=cmd_kernel)

    sp = sub.add_parser("bounds", help="area sandwich and triangle bounds")
    sp.add_argument("--k0", type=float, required=True)
    sp.add_argument("--k1", type=float, required=True)
    sp.add_argument("--L", type=float, required=True)
    common(sp, samples=False)
    sp.set_defaults(fn=cmd_bounds)

    sp = sub.add_parser("verify", help="randomized verification sweeps")
    sp.add_argument("theorem")
    sp.add_argument("--k0", type=float, default=-1.0)
    sp.add_argument("--k1", type=float, default=0.0)
    sp.add_argument("--L", type=float, default=2.0)
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--constant", type=float, default=None)
    common(sp, samples=False)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("count", help="lattice points on an arc vs bound")
    sp.add_argument("curve")
    sp.add_argument("lattice")
    sp.add_argument("--theorem", default="auto",
                    choices=("auto", "2pts1", "low_aff_bd", "2pts2",
                             "sharp_lat", "rigid_lat"))
    sp.add_argument("--multiplier", type=int, default=None)
    for name in ("xmin", "xmax", "ymin", "ymax"):
        sp.add_argument(f"--{name}", default=None)
    common(sp, samples=False)
    sp.set_defaults(fn=cmd_count)

    sp = sub.add_parser("figures", help="CSV data for the figures")
    sp.add_argument("figure", choices=("fig1", "fig5", "fig6", "fig7", "fig8"))
    common(sp, samples=False)
    sp.set_defaults(fn=cmd_figures)

    sp = sub.add_parser("examples", help="export sharp instances as spec files")
    sp.add_argument("name",
                    choices=("parabola", "hyperbola", "hyperbola-general",
                             "circle"))
    sp.add_argument("--m0", type=int, default=1)
    sp.add_argument("--rigid", action="store_true")
    sp.add_argument("--outdir", default=".")
    common(sp, samples=False)
    sp.set_defaults(fn=cmd_examples)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return PARSE if exc.code not in (0, None) else OK
    try:
        return args.fn(args)
    except SpecError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return PARSE
    except (DomainError, OrientationError, ConvexityError, SolverError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
