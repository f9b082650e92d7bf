"""Short Weierstrass curves y^2 = x^3 + ax + b over prime fields F_p, p > 3.

Point enumeration is brute force over x, so curves are capped at a desk-scale
prime bound. The group structure Z/n1 x Z/n2 (n1 | n2, n1 | p-1) is computed
by scanning for a generator pair and labelling every point by its (a, b)
coordinates with respect to that pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from .errors import (
    CurveTooLarge,
    InternalInconsistency,
    PointNotOnCurve,
    SingularCurve,
)
from .exact import factorize, inv_mod, is_prime
from .groups import AbelianGroup, GroupElement

# Affine point (x, y); None is the point at infinity.
CurvePoint = tuple[int, int] | None

DEFAULT_MAX_P = 10_000


@dataclass(frozen=True)
class Curve:
    """Nonsingular curve y^2 = x^3 + ax + b over F_p."""

    p: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.p <= 3 or not is_prime(self.p):
            raise ValueError(f"p must be a prime greater than 3, got {self.p}")
        object.__setattr__(self, "a", self.a % self.p)
        object.__setattr__(self, "b", self.b % self.p)
        if (4 * self.a**3 + 27 * self.b**2) % self.p == 0:
            raise SingularCurve(f"4a^3 + 27b^2 = 0 mod {self.p}: curve is singular")

    def contains_point(self, point: CurvePoint) -> bool:
        if point is None:
            return True
        x, y = point
        return (y * y - (x**3 + self.a * x + self.b)) % self.p == 0

    def require_point(self, point: CurvePoint) -> None:
        if not self.contains_point(point):
            raise PointNotOnCurve(f"{point} is not on y^2 = x^3 + {self.a}x + {self.b} over F_{self.p}")

    def neg(self, point: CurvePoint) -> CurvePoint:
        if point is None:
            return None
        x, y = point
        return (x, -y % self.p)

    def add(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        """Chord-tangent addition; the point at infinity is the identity."""
        if P is None:
            return Q
        if Q is None:
            return P
        p = self.p
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2 and (y1 + y2) % p == 0:
            return None
        if P == Q:
            slope = (3 * x1 * x1 + self.a) * inv_mod(2 * y1, p) % p
        else:
            slope = (y2 - y1) * inv_mod(x2 - x1, p) % p
        x3 = (slope * slope - x1 - x2) % p
        y3 = (slope * (x1 - x3) - y1) % p
        return (x3, y3)

    def mul(self, k: int, point: CurvePoint) -> CurvePoint:
        """Scalar multiple k*point by double-and-add."""
        if k < 0:
            return self.mul(-k, self.neg(point))
        result: CurvePoint = None
        addend = point
        while k:
            if k & 1:
                result = self.add(result, addend)
            addend = self.add(addend, addend)
            k >>= 1
        return result

    def points(self, max_p: int = DEFAULT_MAX_P) -> list[CurvePoint]:
        """All rational points, infinity first then affine points sorted.

        Raises CurveTooLarge when p exceeds max_p; the point count is checked
        against the Hasse bound |N - p - 1| <= 2*sqrt(p).
        """
        p = self.p
        if p > max_p:
            raise CurveTooLarge(f"p = {p} exceeds the enumeration bound {max_p}")
        roots: dict[int, list[int]] = {}
        for y in range(p):
            roots.setdefault(y * y % p, []).append(y)
        pts: list[CurvePoint] = [None]
        for x in range(p):
            rhs = (x**3 + self.a * x + self.b) % p
            for y in roots.get(rhs, ()):
                pts.append((x, y))
        count = len(pts)
        if (count - p - 1) ** 2 > 4 * p:
            raise InternalInconsistency(f"point count {count} violates the Hasse bound for p = {p}")
        return pts


@dataclass(frozen=True, eq=False)
class CurveGroup:
    """A subgroup of E(F_p) with an explicit isomorphism onto Z/n1 x Z/n2.

    ``points[i]`` is the point labelled by structure.element_at(i), so the
    point at infinity sits at index 0.
    """

    curve: Curve
    structure: AbelianGroup
    points: tuple[CurvePoint, ...]
    generators: tuple[CurvePoint, CurvePoint]
    _labels: dict[CurvePoint, GroupElement] = field(repr=False)

    @property
    def order(self) -> int:
        return self.structure.order

    def label(self, point: CurvePoint) -> GroupElement:
        try:
            return self._labels[point]
        except KeyError:
            raise PointNotOnCurve(f"{point} is not in this subgroup") from None

    def point_at(self, element: GroupElement) -> CurvePoint:
        return self.points[self.structure.element_index(self.structure.reduce(element))]


def point_order(curve: Curve, point: CurvePoint, group_order: int) -> int:
    """Order of a point, given the order of a group containing it."""
    o = group_order
    for q in factorize(group_order):
        while o % q == 0 and curve.mul(o // q, point) is None:
            o //= q
    return o


def group_structure(points: list[CurvePoint], curve: Curve) -> CurveGroup:
    """Structure (n1, n2) with n1 | n2 of the group formed by the points.

    The generator pair is found by scanning: g2 of maximal order n2 first,
    then g1 of order n1 = N/n2 whose span meets the span of g2 trivially.
    The scan order is fixed (infinity first, affine points sorted) so the
    result does not depend on the order of the input list.
    """
    pts = set(points)
    if None not in pts:
        raise PointNotOnCurve("the point list must contain the identity (point at infinity)")
    for pt in pts:
        curve.require_point(pt)
    count = len(pts)
    ordered = [None] + sorted(pt for pt in pts if pt is not None)

    orders = {pt: point_order(curve, pt, count) for pt in ordered}
    n2 = 1
    for o in orders.values():
        n2 = lcm(n2, o)
    if count % n2 != 0:
        raise InternalInconsistency("group exponent does not divide the group order")
    n1 = count // n2

    g2 = next((pt for pt in ordered if orders[pt] == n2), None)
    if g2 is None and n2 > 1:
        raise InternalInconsistency("no point realizes the group exponent")
    span_g2 = _cyclic_span(curve, g2, n2)
    if len(span_g2) != n2:
        raise InternalInconsistency("generator span smaller than its order")

    g1: CurvePoint = None
    if n1 > 1:
        for candidate in ordered:
            if orders[candidate] != n1:
                continue
            if _span_meets_trivially(curve, candidate, n1, span_g2):
                g1 = candidate
                break
        else:
            raise InternalInconsistency("no complementary generator found")

    structure = AbelianGroup(n1, n2)
    labels: dict[CurvePoint, GroupElement] = {}
    indexed: list[CurvePoint] = []
    row_start: CurvePoint = None
    for a in range(n1):
        pt = row_start
        for b in range(n2):
            labels[pt] = (a, b)
            indexed.append(pt)
            pt = curve.add(pt, g2)
        row_start = curve.add(row_start, g1)
    if len(labels) != count or set(indexed) != pts:
        raise InternalInconsistency("generator pair does not label the group bijectively")
    if n1 > 1 and (curve.p - 1) % n1 != 0:
        raise InternalInconsistency(f"n1 = {n1} does not divide p - 1 = {curve.p - 1}")
    return CurveGroup(curve, structure, tuple(indexed), (g1, g2), labels)


def curve_group(curve: Curve, max_p: int = DEFAULT_MAX_P) -> CurveGroup:
    """Full rational-point group of the curve with its structure."""
    return group_structure(curve.points(max_p), curve)


def subgroup(cg: CurveGroup, gens: list[CurvePoint]) -> CurveGroup:
    """Subgroup generated by the given points, with its own canonical labelling."""
    members = set(cg.points)
    for g in gens:
        if g not in members:
            raise PointNotOnCurve(f"{g} is not in the ambient group")
    closure = {None}
    frontier = [None]
    while frontier:
        base = frontier.pop()
        for g in gens:
            nxt = cg.curve.add(base, g)
            if nxt not in closure:
                closure.add(nxt)
                frontier.append(nxt)
    return group_structure(list(closure), cg.curve)


def _cyclic_span(curve: Curve, point: CurvePoint, order: int) -> set[CurvePoint]:
    span = set()
    acc: CurvePoint = None
    for _ in range(order):
        span.add(acc)
        acc = curve.add(acc, point)
    return span


def _span_meets_trivially(curve: Curve, point: CurvePoint, order: int, other_span: set[CurvePoint]) -> bool:
    acc = point
    for _ in range(order - 1):
        if acc in other_span:
            return False
        acc = curve.add(acc, point)
    return True
