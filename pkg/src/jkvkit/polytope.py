"""Origin-vs-weight-polytope tests over exact rationals.

Everything here is phrased in terms of a finite set of integer weights:
whether the origin lies in the relative interior of their convex hull,
the minimal face containing the origin, and uniformly-positive
(destabilizing) cocharacters.  All answers carry certificates that are
re-verified by direct arithmetic before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .intlinalg import IntVec, pairing, primitive
from .lp import INFEASIBLE, OPTIMAL, solve_lp


@dataclass(frozen=True)
class WeightSet:
    rank: int
    points: tuple[IntVec, ...]

    def __post_init__(self):
        pts = tuple(tuple(int(x) for x in p) for p in self.points)
        if any(len(p) != self.rank for p in pts):
            raise ValueError("weight rank mismatch")
        if len(set(pts)) != len(pts):
            raise ValueError("weights must be pairwise distinct")
        object.__setattr__(self, "points", pts)

    def sorted_points(self) -> tuple[IntVec, ...]:
        return tuple(sorted(self.points))


@dataclass
class FaceCertificate:
    """A face of conv(points) with 0 in its relative interior.

    supporter vanishes exactly on the face within the set and is >= 1
    outside it; barycentric is an all-positive representation of 0 over
    the face points, summing to 1.
    """

    face: tuple[IntVec, ...]
    supporter: IntVec
    barycentric: dict[IntVec, Fraction] = field(default_factory=dict)


@dataclass
class RelintResult:
    inside: bool
    barycentric: dict[IntVec, Fraction] | None
    separator: IntVec | None


def clear_to_primitive(vec) -> IntVec:
    """Scale a rational vector by a positive rational into primitive integers."""
    fracs = [Fraction(x) for x in vec]
    mult = lcm(*[f.denominator for f in fracs]) if fracs else 1
    ints = [int(f * mult) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def _barycentric_lp(points):
    """Maximize the minimum coefficient among convex combinations of
    `points` hitting the origin.  Returns (status, eps, coeffs)."""
    m = len(points)
    rank = len(points[0])
    cons = []
    for k in range(rank):
        cons.append(([Fraction(p[k]) for p in points] + [Fraction(0)], "=", 0))
    cons.append(([Fraction(1)] * m + [Fraction(0)], "=", 1))
    for i in range(m):
        row = [Fraction(0)] * (m + 1)
        row[i] = Fraction(1)
        row[m] = Fraction(-1)
        cons.append((row, ">=", 0))
    objective = [Fraction(0)] * m + [Fraction(1)]
    res = solve_lp(m + 1, cons, objective, maximize=True, nonneg=[True] * m + [False])
    if res.status != OPTIMAL:
        return res.status, None, None
    return OPTIMAL, res.value, res.x[:m]


def find_functional(zero_on, pos_on, uniform=False):
    """Find an integer functional vanishing on zero_on and positive on pos_on.

    With uniform=True it must be >= 1 on every point of pos_on; otherwise it
    must be >= 0 on pos_on with total >= 1 (positive somewhere).  Returns a
    primitive integer vector or None.
    """
    pts = list(zero_on) + list(pos_on)
    if not pts:
        return ()
    rank = len(pts[0])
    cons = []
    for p in zero_on:
        cons.append(([Fraction(x) for x in p], "=", 0))
    if uniform:
        for p in pos_on:
            cons.append(([Fraction(x) for x in p], ">=", 1))
    else:
        for p in pos_on:
            cons.append(([Fraction(x) for x in p], ">=", 0))
        total = [Fraction(sum(p[k] for p in pos_on)) for k in range(rank)]
        cons.append((total, ">=", 1))
    res = solve_lp(rank, cons, [Fraction(0)] * rank, maximize=True)
    if res.status == INFEASIBLE:
        return None
    assert res.status == OPTIMAL
    return primitive(clear_to_primitive(res.x))


@lru_cache(maxsize=200_000)
def _relint_cached(rank: int, points: tuple[IntVec, ...]):
    if not points:
        return True, {}, None
    status, eps, coeffs = _barycentric_lp(points)
    if status == INFEASIBLE:
        lam = find_functional((), points, uniform=True)
        assert lam is not None, "separation must exist when 0 is outside the hull"
        assert all(pairing(lam, p) >= 1 for p in points)
        return False, None, lam
    assert status == OPTIMAL
    if eps > 0:
        bary = dict(zip(points, coeffs))
        _check_barycentric(points, bary)
        return True, bary, None
    lam = find_functional((), points, uniform=False)
    assert lam is not None, "a supporting functional must exist on the boundary"
    assert all(pairing(lam, p) >= 0 for p in points)
    assert any(pairing(lam, p) > 0 for p in points)
    return False, None, lam


def _check_barycentric(points, bary):
    rank = len(points[0])
    assert sum(bary.values()) == 1
    assert all(c > 0 for c in bary.values())
    for k in range(rank):
        assert sum(c * p[k] for p, c in bary.items()) == 0


def origin_in_relint(ws: WeightSet) -> RelintResult:
    """Is 0 in the relative interior of conv(points)?

    True comes with an all-positive barycentric representation of 0 over the
    full set; false with a cocharacter that is >= 0 on the set and positive
    somewhere (strictly separating when 0 is outside the hull entirely).
    """
    inside, bary, sep = _relint_cached(ws.rank, ws.sorted_points())
    return RelintResult(inside, dict(bary) if bary is not None else None, sep)


@lru_cache(maxsize=200_000)
def _minimal_face_cached(rank: int, points: tuple[IntVec, ...]):
    if not points:
        return FaceCertificate(face=(), supporter=(0,) * rank, barycentric={})
    status, eps, _ = _barycentric_lp(points)
    if status == INFEASIBLE:
        return None
    face = list(points)
    while True:
        lam = find_functional((), face, uniform=False)
        if lam is None:
            break
        face = [p for p in face if pairing(lam, p) == 0]
        assert face, "the origin stays in the hull of the kernel points"
    outside = [p for p in points if p not in set(face)]
    if outside:
        supporter = find_functional(face, outside, uniform=True)
        assert supporter is not None, "polytope faces are exposed"
    else:
        supporter = (0,) * rank
    status, eps, coeffs = _barycentric_lp(face)
    assert status == OPTIMAL and eps > 0
    bary = dict(zip(tuple(face), coeffs))
    _check_barycentric(face, bary)
    assert all(pairing(supporter, p) == 0 for p in face)
    assert all(pairing(supporter, p) >= 1 for p in outside)
    return FaceCertificate(face=tuple(sorted(face)), supporter=supporter, barycentric=bary)


def minimal_face_origin(ws: WeightSet) -> FaceCertificate | None:
    """The unique face of conv(points) whose relative interior contains 0.

    None when 0 is outside the hull (the caller should then ask for a
    destabilizer).  The supporter vanishes exactly on the face within the
    set and is >= 1 on the rest.
    """
    cert = _minimal_face_cached(ws.rank, ws.sorted_points())
    if cert is None:
        return None
    return FaceCertificate(cert.face, cert.supporter, dict(cert.barycentric))


def destabilizer(ws: WeightSet) -> IntVec | None:
    """Primitive integer cocharacter pairing >= 1 with every point, if any.

    The empty set is destabilized by the zero cocharacter.
    """
    if not ws.points:
        return (0,) * ws.rank
    lam = find_functional((), ws.sorted_points(), uniform=True)
    if lam is None:
        return None
    assert all(pairing(lam, p) >= 1 for p in ws.points)
    return lam
