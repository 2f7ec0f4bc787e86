"""Exact lattice arithmetic, enumeration on conic arcs, and counting bounds.

Membership decisions, triangle multipliers, and orbit verification all run
on Fractions (exact for integer and decimal-string inputs); floating point
only enters through arc-length parameters and the profile functions used
by the bound formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Sequence

from .conics import Conic, RationalLike, frac
from .kfuncs import DomainError, abar, fk, gk, hk
from .reports import Hypothesis

Vec2 = tuple[Fraction, Fraction]

SPACING_TOL = 1e-9
EQ_BOUNDARY_RTOL = 1e-12
INT_RATIO_TOL = 1e-9


def _vec2(x: RationalLike, y: RationalLike) -> Vec2:
    return (frac(x), frac(y))


def _wedge(v: Vec2, w: Vec2) -> Fraction:
    return v[0] * w[1] - v[1] * w[0]


def _sub(v: Vec2, w: Vec2) -> Vec2:
    return (v[0] - w[0], v[1] - w[1])


def triangle_area_exact(p1: Vec2, p2: Vec2, p3: Vec2) -> Fraction:
    return abs(_wedge(_sub(p2, p1), _sub(p3, p1))) / 2


@dataclass(frozen=True)
class Lattice:
    """Origin v0 plus all integer combinations of the generators v1, v2."""

    v0: Vec2
    v1: Vec2
    v2: Vec2

    def __post_init__(self) -> None:
        if _wedge(self.v1, self.v2) == 0:
            raise ValueError("lattice generators are dependent")

    @classmethod
    def make(cls, v0, v1, v2) -> "Lattice":
        return cls(_vec2(*v0), _vec2(*v1), _vec2(*v2))

    @classmethod
    def standard(cls) -> "Lattice":
        return cls.make((0, 0), (1, 0), (0, 1))

    @property
    def cell_area(self) -> Fraction:
        return abs(_wedge(self.v1, self.v2))

    def point(self, m: int, n: int) -> Vec2:
        return (self.v0[0] + m * self.v1[0] + n * self.v2[0],
                self.v0[1] + m * self.v1[1] + n * self.v2[1])

    def coords_of(self, p: Vec2) -> Vec2:
        """Exact (m, n) with p = v0 + m v1 + n v2 (rational, not necessarily
        integral)."""
        q = _sub((frac(p[0]), frac(p[1])), self.v0)
        det = _wedge(self.v1, self.v2)
        m = _wedge(q, self.v2) / det
        n = _wedge(self.v1, q) / det
        return (m, n)

    def __contains__(self, p) -> bool:
        m, n = self.coords_of(p)
        return m.denominator == 1 and n.denominator == 1


def fundamental_area(lat: Lattice) -> Fraction:
    """|v1 wedge v2|, exact for exact generators."""
    return lat.cell_area


def triangle_multiplier(lat: Lattice, p1, p2, p3) -> int:
    """The integer m with Area = m/2 * cell area, via exact lattice coordinates.

    Returns 0 for collinear points (degenerate)."""
    coords = []
    for p in (p1, p2, p3):
        m, n = lat.coords_of(p)
        if m.denominator != 1 or n.denominator != 1:
            raise ValueError(f"{p} is not a lattice point")
        coords.append((int(m), int(n)))
    (m1, n1), (m2, n2), (m3, n3) = coords
    return abs((m2 - m1) * (n3 - n1) - (n2 - n1) * (m3 - m1))


def m_of_curve(lat: Lattice, points: Sequence) -> int:
    """Smallest triangle multiplier over all triples of the given lattice
    points on the curve: a certificate for the area-quantization integer
    restricted to the points actually found.  Fewer than three points give
    the conservative default 1."""
    if len(points) < 3:
        return 1
    best: int | None = None
    for a, b, c in combinations(points, 3):
        mult = triangle_multiplier(lat, a, b, c)
        if mult == 0:
            raise ValueError(f"collinear lattice points {a}, {b}, {c} on a convex arc")
        best = mult if best is None else min(best, mult)
    return int(best)


def parity_multiplier_bound(a: int, b: int, c: int, r: int) -> int:
    """Analytic lower bound for the multiplier on a x^2 + b xy + c y^2 = r:
    2 when a, c, r are odd and b is even (mod-2 argument), else 1."""
    if a % 2 == 1 and c % 2 == 1 and r % 2 == 1 and b % 2 == 0:
        return 2
    return 1


@dataclass(frozen=True)
class LinearConstraint:
    """g1 x + g2 y + g0 >= 0 with exact coefficients."""

    g1: Fraction
    g2: Fraction
    g0: Fraction

    @classmethod
    def make(cls, g1, g2, g0) -> "LinearConstraint":
        return cls(frac(g1), frac(g2), frac(g0))

    def satisfied(self, x: Fraction, y: Fraction) -> bool:
        return self.g1 * x + self.g2 * y + self.g0 >= 0

    def substituted(self, t: list[list[Fraction]]) -> "LinearConstraint":
        g = (self.g1, self.g2, self.g0)
        new = tuple(sum(g[i] * t[i][j] for i in range(3)) for j in range(3))
        return LinearConstraint(new[0], new[1], new[2])


@dataclass(frozen=True)
class ConicArc:
    """Arc of an exact conic cut out by linear inequalities.

    `frame` says whether the conic/constraints/bbox live in plane
    coordinates or directly in the lattice's (m, n) coordinates; `param_of`
    maps a plane point to its arc-length parameter for ordering."""

    conic: Conic
    constraints: tuple[LinearConstraint, ...]
    bbox: tuple[float, float, float, float]  # (xmin, xmax, ymin, ymax)
    frame: str = "plane"
    param_of: Callable[[float, float], float] | None = None


@dataclass
class LatticePointSet:
    """Enumerated lattice points on an arc, ordered by arc parameter."""

    coords: list[tuple[int, int]]
    positions: list[Vec2]
    params: list[float]
    exact: bool = True

    def __len__(self) -> int:
        return len(self.coords)

    def positions_float(self) -> list[tuple[float, float]]:
        return [(float(x), float(y)) for x, y in self.positions]


def _lattice_substitution(lat: Lattice) -> list[list[Fraction]]:
    """Homogeneous matrix of (m, n) -> v0 + m v1 + n v2."""
    return [
        [lat.v1[0], lat.v2[0], lat.v0[0]],
        [lat.v1[1], lat.v2[1], lat.v0[1]],
        [Fraction(0), Fraction(0), Fraction(1)],
    ]


def conic_in_lattice_coords(conic: Conic, lat: Lattice) -> Conic:
    """Exact conic satisfied by the lattice coordinates of points of the
    plane conic."""
    return conic.substituted(_lattice_substitution(lat))


def plane_conic_from_lattice_frame(conic: Conic, lat: Lattice) -> Conic:
    """Exact plane conic whose lattice-coordinate form is the given conic."""
    det = _wedge(lat.v1, lat.v2)
    v0, v1, v2 = lat.v0, lat.v1, lat.v2
    inv = [
        [v2[1] / det, -v2[0] / det, (v2[0] * v0[1] - v2[1] * v0[0]) / det],
        [-v1[1] / det, v1[0] / det, (v1[1] * v0[0] - v1[0] * v0[1]) / det],
        [Fraction(0), Fraction(0), Fraction(1)],
    ]
    return conic.substituted(inv)


def _rational_isqrt(d: Fraction) -> Fraction | None:
    if d < 0:
        return None
    p, q = d.numerator, d.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp != p or rq * rq != q:
        return None
    return Fraction(rp, rq)


def _integer_roots_quadratic(a: Fraction, b: Fraction, c: Fraction) -> list[int]:
    """Integer solutions of a n^2 + b n + c = 0 (exact)."""
    if a == 0:
        if b == 0:
            return []
        n = -c / b
        return [int(n)] if n.denominator == 1 else []
    disc = b * b - 4 * a * c
    root = _rational_isqrt(disc)
    if root is None:
        return []
    out = []
    for sign in (1, -1):
        n = (-b + sign * root) / (2 * a)
        if n.denominator == 1:
            out.append(int(n))
    return sorted(set(out))


def enumerate_on_arc(arc: ConicArc, lat: Lattice) -> LatticePointSet:
    """Complete enumeration of lattice points on the arc.

    Works column-by-column in lattice coordinates: for each integer m in
    the scan range the conic restricts to a quadratic in n, solved exactly;
    constraints are then tested with rational arithmetic.
    """
    if arc.frame == "lattice":
        conic_mn = arc.conic
        constraints_mn = arc.constraints
        to_plane = None
    else:
        sub = _lattice_substitution(lat)
        conic_mn = arc.conic.substituted(sub)
        constraints_mn = tuple(g.substituted(sub) for g in arc.constraints)
        to_plane = sub

    m_lo, m_hi = _m_scan_range(arc, lat)
    found: list[tuple[int, int]] = []
    a2 = conic_mn.c
    for m in range(m_lo, m_hi + 1):
        mf = Fraction(m)
        b1 = conic_mn.b * mf + conic_mn.e
        c0 = conic_mn.a * mf * mf + conic_mn.d * mf + conic_mn.f
        for n in _integer_roots_quadratic(a2, b1, c0):
            if all(g.satisfied(mf, Fraction(n)) for g in constraints_mn):
                found.append((m, n))

    positions = [lat.point(m, n) for m, n in found]
    if arc.param_of is not None:
        params = [arc.param_of(float(x), float(y)) for x, y in positions]
    else:
        params = [float(i) for i in range(len(found))]
    order = sorted(range(len(found)), key=lambda i: params[i])
    return LatticePointSet(
        coords=[found[i] for i in order],
        positions=[positions[i] for i in order],
        params=[params[i] for i in order],
    )


def enumerate_near_curve(curve, lat: Lattice, tol: float = 1e-9,
                         samples: int = 2048) -> LatticePointSet:
    """Float fallback when no exact membership test exists: lattice points
    within distance tol of the curve, located by dense sampling plus local
    refinement.  The result is flagged inexact."""
    from scipy.optimize import minimize_scalar

    ss = [curve.domain.lo + i * curve.domain.length / (samples - 1)
          for i in range(samples)]
    pts = [curve.point(s) for s in ss]
    xmin = min(p[0] for p in pts) - 0.5
    xmax = max(p[0] for p in pts) + 0.5
    ymin = min(p[1] for p in pts) - 0.5
    ymax = max(p[1] for p in pts) + 0.5

    corners = [(xmin, ymin), (xmin, ymax), (xmax, ymin), (xmax, ymax)]
    mns = [lat.coords_of((Fraction(x), Fraction(y))) for x, y in corners]
    m_range = range(math.floor(min(m for m, _ in mns)) - 1,
                    math.ceil(max(m for m, _ in mns)) + 2)
    n_range = range(math.floor(min(n for _, n in mns)) - 1,
                    math.ceil(max(n for _, n in mns)) + 2)

    step = curve.domain.length / (samples - 1)
    max_gap = max(math.hypot(a[0] - b[0], a[1] - b[1])
                  for a, b in zip(pts, pts[1:]))
    reach2 = (tol + max_gap) ** 2
    found: list[tuple[tuple[int, int], Vec2, float]] = []
    for m in m_range:
        for n in n_range:
            p = lat.point(m, n)
            px, py = float(p[0]), float(p[1])
            if not (xmin <= px <= xmax and ymin <= py <= ymax):
                continue
            d2 = [(q[0] - px) ** 2 + (q[1] - py) ** 2 for q in pts]
            i = min(range(len(d2)), key=d2.__getitem__)
            if d2[i] > reach2:
                continue
            lo = max(curve.domain.lo, ss[i] - 2 * step)
            hi = min(curve.domain.hi, ss[i] + 2 * step)

            def dist2(s, px=px, py=py):
                q = curve.point(s)
                return (q[0] - px) ** 2 + (q[1] - py) ** 2

            res = minimize_scalar(dist2, bounds=(lo, hi), method="bounded",
                                  options={"xatol": 1e-13})
            # bounded minimizers stay interior; re-check the arc ends
            best_s, best_d2 = float(res.x), float(res.fun)
            for cand in (lo, hi, ss[i]):
                d = dist2(cand)
                if d < best_d2:
                    best_s, best_d2 = cand, d
            if math.sqrt(max(best_d2, 0.0)) <= tol:
                found.append(((m, n), p, best_s))

    found.sort(key=lambda item: item[2])
    return LatticePointSet(coords=[f[0] for f in found],
                           positions=[f[1] for f in found],
                           params=[f[2] for f in found],
                           exact=False)


def _m_scan_range(arc: ConicArc, lat: Lattice) -> tuple[int, int]:
    xmin, xmax, ymin, ymax = arc.bbox
    if arc.frame == "lattice":
        return math.floor(xmin) - 1, math.ceil(xmax) + 1
    corners = [(xmin, ymin), (xmin, ymax), (xmax, ymin), (xmax, ymax)]
    ms = []
    for x, y in corners:
        m, _ = lat.coords_of((Fraction(x), Fraction(y)))
        ms.append(m)
    return math.floor(min(ms)) - 1, math.ceil(max(ms)) + 1


@dataclass
class CountBoundCertificate:
    """A counting theorem instantiated on concrete inputs.

    `bound` is None when a hypothesis fails and the theorem is silent."""

    theorem: str
    inputs: dict[str, Any]
    intermediates: dict[str, Any] = field(default_factory=dict)
    hypotheses: list[Hypothesis] = field(default_factory=list)
    bound: int | None = None
    notes: str = ""

    @property
    def conclusive(self) -> bool:
        return self.bound is not None and all(h.ok for h in self.hypotheses)

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "inputs": self.inputs,
            "intermediates": self.intermediates,
            "hypotheses": [h.to_dict() for h in self.hypotheses],
            "bound": self.bound,
            "notes": self.notes,
        }


def _inputs(k0, lam, multiplier, cell_area, k1=None) -> dict:
    out = {"k0": k0, "lam": lam, "multiplier": multiplier,
           "cell_area": float(cell_area)}
    if k1 is not None:
        out["k1"] = k1
    return out


def bound_two_points(k0: float, lam: float, multiplier: int,
                     cell_area: float) -> CountBoundCertificate:
    """At most two lattice points when the arc's area profile stays within
    half a (multiplier-scaled) fundamental cell."""
    target = multiplier * float(cell_area) / 2.0
    value = abar(k0, lam)
    ok = value <= target * (1.0 + EQ_BOUNDARY_RTOL)
    cert = CountBoundCertificate(
        theorem="2pts1",
        inputs=_inputs(k0, lam, multiplier, cell_area),
        intermediates={"area_profile": value, "half_cell": target},
        hypotheses=[Hypothesis("area-profile-within-half-cell", ok,
                               f"abar(k0, lam) = {value:.6g} vs {target:.6g}")],
        bound=2 if ok else None,
    )
    if not ok:
        cert.notes = "no conclusion: area profile exceeds half cell"
    return cert


def bound_general(k0: float, lam: float, multiplier: int,
                  cell_area: float) -> CountBoundCertificate:
    """Subdivision bound 2 ceil(lam / F) with F the area-profile inverse at
    half the scaled cell.  Sub-arc convexity at that length is a caller
    assumption recorded in the notes."""
    target = multiplier * float(cell_area) / 2.0
    unit = fk(k0, target)
    ratio = lam / unit
    m = max(1, math.ceil(ratio - INT_RATIO_TOL))
    return CountBoundCertificate(
        theorem="low_aff_bd",
        inputs=_inputs(k0, lam, multiplier, cell_area),
        intermediates={"subdivision_length": unit, "pieces": m},
        hypotheses=[],
        bound=2 * m,
        notes="assumes every sub-arc of the subdivision length is convex",
    )


def bound_three_points(k0: float, k1: float, lam: float, multiplier: int,
                       cell_area: float) -> CountBoundCertificate:
    """At most three lattice points from the rectangle bound at half length."""
    if k0 > k1:
        raise ValueError(f"need k0 <= k1, got {k0} > {k1}")
    target = multiplier * float(cell_area) / 2.0
    hyps = []
    cap = (math.pi / lam) ** 2
    hyps.append(Hypothesis("k1-within-sturm-range", k1 <= cap * (1 + 1e-12),
                           f"k1 = {k1}, cap = {cap}"))
    try:
        value = hk(k0, lam / 2.0)
        ok = value <= target * (1.0 + EQ_BOUNDARY_RTOL)
        hyps.append(Hypothesis("rect-profile-within-half-cell", ok,
                               f"hk(k0, lam/2) = {value:.6g} vs {target:.6g}"))
    except DomainError as exc:
        value = math.nan
        ok = False
        hyps.append(Hypothesis("rect-profile-within-half-cell", False, str(exc)))
    cert = CountBoundCertificate(
        theorem="2pts2",
        inputs=_inputs(k0, lam, multiplier, cell_area, k1),
        intermediates={"rect_profile": value, "half_cell": target},
        hypotheses=hyps,
        bound=3 if all(h.ok for h in hyps) else None,
    )
    if ok and abs(value - target) <= 1e-10 * max(1.0, target):
        cert.notes = ("rigidity boundary: three points force constant "
                      "curvature k0 with points at endpoints and midpoint")
    return cert


def _sharp_setup(k0: float, k1: float, multiplier: int, cell_area: float):
    target = multiplier * float(cell_area) / 2.0
    spacing = gk(k0, target)
    hyps = []
    if k1 > 0.0:
        cap = (math.pi / (2.0 * spacing)) ** 2
        hyps.append(Hypothesis("k1-within-sturm-range", k1 <= cap * (1 + 1e-12),
                               f"k1 = {k1}, cap = {cap}"))
    return target, spacing, hyps


def bound_sharp(k0: float, k1: float, lam: float, multiplier: int,
                cell_area: float) -> CountBoundCertificate:
    """2m + 2 with m = floor(lam / 2L) and L the rectangle-profile inverse."""
    if k0 > k1:
        raise ValueError(f"need k0 <= k1, got {k0} > {k1}")
    target, spacing, hyps = _sharp_setup(k0, k1, multiplier, cell_area)
    m = math.floor(lam / (2.0 * spacing) + INT_RATIO_TOL)
    return CountBoundCertificate(
        theorem="sharp_lat",
        inputs=_inputs(k0, lam, multiplier, cell_area, k1),
        intermediates={"L": spacing, "m": m, "half_cell": target},
        hypotheses=hyps,
        bound=2 * m + 2 if all(h.ok for h in hyps) else None,
    )


def bound_rigid(k0: float, k1: float, lam: float, multiplier: int,
                cell_area: float) -> CountBoundCertificate:
    """2m + 1 for open arcs whose length is an exact even multiple of L.

    Raises ValueError when lam/(2L) is not an integer; use bound_sharp then.
    """
    if k0 > k1:
        raise ValueError(f"need k0 <= k1, got {k0} > {k1}")
    target, spacing, hyps = _sharp_setup(k0, k1, multiplier, cell_area)
    ratio = lam / (2.0 * spacing)
    m = round(ratio)
    if abs(ratio - m) > INT_RATIO_TOL:
        raise ValueError(
            f"lam/(2L) = {ratio} is not an integer (to {INT_RATIO_TOL}); "
            "the floor-based bound applies instead")
    return CountBoundCertificate(
        theorem="rigid_lat",
        inputs=_inputs(k0, lam, multiplier, cell_area, k1),
        intermediates={"L": spacing, "m": m, "half_cell": target},
        hypotheses=hyps,
        bound=2 * m + 1 if all(h.ok for h in hyps) else None,
        notes=("equality forces constant curvature k0, spacing L between "
               "consecutive points, and lattice endpoints"),
    )


def lattice_equal(lat_a: Lattice, lat_b: Lattice) -> bool:
    """Exact set equality: each origin lies in the other lattice and each
    generator pair is an integral combination of the other."""

    def absorbed(target: Lattice, other: Lattice) -> bool:
        if other.v0 not in target:
            return False
        det = _wedge(target.v1, target.v2)
        for v in (other.v1, other.v2):
            m = _wedge(v, target.v2) / det
            n = _wedge(target.v1, v) / det
            if m.denominator != 1 or n.denominator != 1:
                return False
        return True

    return absorbed(lat_a, lat_b) and absorbed(lat_b, lat_a)


@dataclass(frozen=True)
class AffineMap:
    """v -> M v + b with exact entries."""

    m11: Fraction
    m12: Fraction
    m21: Fraction
    m22: Fraction
    b1: Fraction
    b2: Fraction

    @classmethod
    def make(cls, matrix, offset=(0, 0)) -> "AffineMap":
        (a, b), (c, d) = matrix
        return cls(frac(a), frac(b), frac(c), frac(d), frac(offset[0]), frac(offset[1]))

    @classmethod
    def from_three_points(cls, src: Sequence, dst: Sequence) -> "AffineMap":
        """The unique affine map with src[i] -> dst[i], solved exactly."""
        s = [_vec2(*p) for p in src]
        t = [_vec2(*p) for p in dst]
        u1, u2 = _sub(s[1], s[0]), _sub(s[2], s[0])
        w1, w2 = _sub(t[1], t[0]), _sub(t[2], t[0])
        det = _wedge(u1, u2)
        if det == 0:
            raise ValueError("source points are collinear")
        # M [u1 u2] = [w1 w2]
        m11 = (w1[0] * u2[1] - w2[0] * u1[1]) / det
        m12 = (w2[0] * u1[0] - w1[0] * u2[0]) / det
        m21 = (w1[1] * u2[1] - w2[1] * u1[1]) / det
        m22 = (w2[1] * u1[0] - w1[1] * u2[0]) / det
        b1 = t[0][0] - (m11 * s[0][0] + m12 * s[0][1])
        b2 = t[0][1] - (m21 * s[0][0] + m22 * s[0][1])
        return cls(m11, m12, m21, m22, b1, b2)

    @property
    def det(self) -> Fraction:
        return self.m11 * self.m22 - self.m12 * self.m21

    def __call__(self, p) -> Vec2:
        x, y = frac(p[0]), frac(p[1])
        return (self.m11 * x + self.m12 * y + self.b1,
                self.m21 * x + self.m22 * y + self.b2)

    def linear(self, v) -> Vec2:
        x, y = frac(v[0]), frac(v[1])
        return (self.m11 * x + self.m12 * y, self.m21 * x + self.m22 * y)


def motion_preserves_lattice(motion: AffineMap, lat: Lattice,
                             p1, p2, p3) -> bool:
    """Certify that a special affine motion preserves the lattice.

    Requires det = 1, lattice images of the three sample points, and the
    image triangle spanning exactly half a fundamental cell; generator
    images are direct-checked as well.
    """
    if motion.det != 1:
        return False
    pts = [_vec2(*p) for p in (p1, p2, p3)]
    if any(p not in lat for p in pts):
        return False
    images = [motion(p) for p in pts]
    if any(q not in lat for q in images):
        return False
    if triangle_area_exact(*images) != lat.cell_area / 2:
        return False
    det = _wedge(lat.v1, lat.v2)
    for v in (motion.linear(lat.v1), motion.linear(lat.v2)):
        m = _wedge(v, lat.v2) / det
        n = _wedge(lat.v1, v) / det
        if m.denominator != 1 or n.denominator != 1:
            return False
    return True


def equal_spaced_orbit(conic: Conic, k0: float, lat: Lattice,
                       points: Sequence, params: Sequence[float],
                       count: int) -> tuple[LatticePointSet, AffineMap]:
    """Extend four equally spaced lattice points on a constant-curvature
    conic to a full orbit under the translation-along-the-curve motion.

    The motion is solved exactly from the three correspondences
    p_j -> p_{j+1}; every orbit point is verified to lie in the lattice and
    on the conic by exact arithmetic, and the profile identity
    hk(k0, L) = cell/2 is checked to 1e-10.
    """
    if len(points) != 4 or len(params) != 4:
        raise ValueError("need exactly four seed points with parameters")
    pts = [_vec2(*p) for p in points]
    if len({tuple(p) for p in pts}) != 4:
        raise ValueError("seed points must be distinct")
    for p in pts:
        if conic(p[0], p[1]) != 0:
            raise ValueError(f"seed {p} is not on the conic")
        if p not in lat:
            raise ValueError(f"seed {p} is not a lattice point")

    spacings = [params[i + 1] - params[i] for i in range(3)]
    spacing = spacings[0]
    if any(abs(d - spacing) > SPACING_TOL for d in spacings):
        raise ValueError(f"seed points not equally spaced: {spacings}")

    if triangle_area_exact(pts[1], pts[2], pts[3]) != lat.cell_area / 2:
        raise ValueError("Area of the last three seeds must equal half the cell")

    profile = hk(k0, spacing)
    if abs(profile - float(lat.cell_area) / 2.0) > 1e-10 * max(1.0, profile):
        raise ValueError(
            f"profile identity fails: hk(k0, L) = {profile} vs cell/2 = "
            f"{float(lat.cell_area) / 2.0}")

    motion = AffineMap.from_three_points(pts[:3], pts[1:])
    if motion.det != 1:
        raise ValueError(f"curve motion has determinant {motion.det} != 1")
    if not motion_preserves_lattice(motion, lat, *pts[:3]):
        raise ValueError("curve motion does not preserve the lattice")

    orbit = list(pts)
    current = pts[-1]
    while len(orbit) < count:
        current = motion(current)
        if conic(current[0], current[1]) != 0:
            raise ValueError(f"orbit point {current} left the conic")
        if current not in lat:
            raise ValueError(f"orbit point {current} left the lattice")
        orbit.append(current)
    orbit = orbit[:count]

    coords = []
    for p in orbit:
        m, n = lat.coords_of(p)
        coords.append((int(m), int(n)))
    orbit_params = [params[0] + i * spacing for i in range(len(orbit))]
    return (LatticePointSet(coords=coords, positions=orbit,
                            params=orbit_params), motion)
