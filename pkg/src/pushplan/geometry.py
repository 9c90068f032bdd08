"""Planar vector and shape-overlap primitives shared by the engine and the reasoner.

Vectors are plain ``(x, y)`` float tuples; the hot paths unpack them into
scalars, so nothing here allocates beyond small tuples.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

Vec2 = tuple[float, float]

TWO_PI = 2.0 * math.pi


def normalize_angle(a: float) -> float:
    """Wrap an angle into [-pi, pi). Values already in range pass through unchanged."""
    if -math.pi <= a < math.pi:
        return a
    a = math.fmod(a + math.pi, TWO_PI)
    if a < 0.0:
        a += TWO_PI
    return a - math.pi


def rotate(v: Vec2, angle: float) -> Vec2:
    c = math.cos(angle)
    s = math.sin(angle)
    return (c * v[0] - s * v[1], s * v[0] + c * v[1])


def dot(a: Vec2, b: Vec2) -> float:
    return a[0] * b[0] + a[1] * b[1]


def cross(a: Vec2, b: Vec2) -> float:
    return a[0] * b[1] - a[1] * b[0]


def perp(v: Vec2) -> Vec2:
    return (-v[1], v[0])


def length(v: Vec2) -> float:
    return math.hypot(v[0], v[1])


def unit(v: Vec2) -> Vec2:
    n = math.hypot(v[0], v[1])
    if n == 0.0:
        raise ValueError("cannot normalize a zero vector")
    return (v[0] / n, v[1] / n)


def dist(a: Vec2, b: Vec2) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


@dataclass(frozen=True)
class Aabb:
    """Axis-aligned box given by its lower-left and upper-right corners."""

    lo: Vec2
    hi: Vec2

    def contains_point(self, p: Vec2) -> bool:
        return self.lo[0] <= p[0] <= self.hi[0] and self.lo[1] <= p[1] <= self.hi[1]

    @property
    def center(self) -> Vec2:
        return (0.5 * (self.lo[0] + self.hi[0]), 0.5 * (self.lo[1] + self.hi[1]))

    @property
    def size(self) -> Vec2:
        return (self.hi[0] - self.lo[0], self.hi[1] - self.lo[1])


@dataclass(frozen=True)
class OrientedBox:
    """Rectangle with center, half extents and rotation, in world coordinates."""

    center: Vec2
    half: Vec2
    angle: float

    def axes(self) -> tuple[Vec2, Vec2]:
        c = math.cos(self.angle)
        s = math.sin(self.angle)
        return (c, s), (-s, c)

    def corners(self) -> tuple[Vec2, Vec2, Vec2, Vec2]:
        (ux, uy), (vx, vy) = self.axes()
        hx, hy = self.half
        cx, cy = self.center
        ex, ey = ux * hx, uy * hx
        fx, fy = vx * hy, vy * hy
        return (
            (cx + ex + fx, cy + ey + fy),
            (cx - ex + fx, cy - ey + fy),
            (cx - ex - fx, cy - ey - fy),
            (cx + ex - fx, cy + ey - fy),
        )

    def contains_point(self, p: Vec2) -> bool:
        dx = p[0] - self.center[0]
        dy = p[1] - self.center[1]
        (ux, uy), (vx, vy) = self.axes()
        return abs(dx * ux + dy * uy) <= self.half[0] and abs(dx * vx + dy * vy) <= self.half[1]

    def closest_point(self, p: Vec2) -> Vec2:
        """Closest point of the box (including interior) to p."""
        dx = p[0] - self.center[0]
        dy = p[1] - self.center[1]
        (ux, uy), (vx, vy) = self.axes()
        lx = max(-self.half[0], min(self.half[0], dx * ux + dy * uy))
        ly = max(-self.half[1], min(self.half[1], dx * vx + dy * vy))
        return (self.center[0] + lx * ux + ly * vx, self.center[1] + lx * uy + ly * vy)


def obb_obb_margin(a: OrientedBox, b: OrientedBox) -> float:
    """Signed SAT margin: positive overlap depth, negative a lower bound on separation.

    The boxes overlap iff the returned value is > 0.
    """
    margin = math.inf
    ca, cb = a.center, b.center
    d = (cb[0] - ca[0], cb[1] - ca[1])
    axes_a = a.axes()
    axes_b = b.axes()
    for ax in (*axes_a, *axes_b):
        ra = a.half[0] * abs(dot(ax, axes_a[0])) + a.half[1] * abs(dot(ax, axes_a[1]))
        rb = b.half[0] * abs(dot(ax, axes_b[0])) + b.half[1] * abs(dot(ax, axes_b[1]))
        overlap = ra + rb - abs(dot(ax, d))
        if overlap < margin:
            margin = overlap
    return margin


def obb_obb_overlap(a: OrientedBox, b: OrientedBox) -> bool:
    return obb_obb_margin(a, b) > 0.0


def circle_obb_margin(center: Vec2, radius: float, box: OrientedBox) -> float:
    """Signed margin for circle vs box: radius minus distance to the box surface.

    Positive means overlap. For centers inside the box the margin is the radius
    plus the interior depth, still positive.
    """
    dx = center[0] - box.center[0]
    dy = center[1] - box.center[1]
    (ux, uy), (vx, vy) = box.axes()
    lx = dx * ux + dy * uy
    ly = dx * vx + dy * vy
    qx = abs(lx) - box.half[0]
    qy = abs(ly) - box.half[1]
    if qx <= 0.0 and qy <= 0.0:
        # center inside: distance to surface is -max(qx, qy)
        return radius - max(qx, qy)
    ox = max(qx, 0.0)
    oy = max(qy, 0.0)
    return radius - math.hypot(ox, oy)


def circle_obb_overlap(center: Vec2, radius: float, box: OrientedBox) -> bool:
    return circle_obb_margin(center, radius, box) > 0.0


def circle_circle_margin(c1: Vec2, r1: float, c2: Vec2, r2: float) -> float:
    return (r1 + r2) - dist(c1, c2)


def obb_inside_aabb(box: OrientedBox, bounds: Aabb) -> bool:
    return all(bounds.contains_point(c) for c in box.corners())
