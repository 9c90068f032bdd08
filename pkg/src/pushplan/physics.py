"""Deterministic planar rigid-body engine used as the planner's state propagator.

The world is top-down planar: no gravity, a linear velocity damping term stands
in for ground drag. Integration is semi-implicit Euler at a fixed step, contacts
are resolved with a sequential-impulse solver (accumulated normal impulses with
restitution, Coulomb friction, Baumgarte penetration bias). Three body kinds:

* fixed bodies: infinite mass, never move, act as static colliders;
* free-manipulatable bodies: ordinary dynamic bodies;
* constraint-oriented bodies: dynamic, but their velocity is projected onto a
  body-frame axis after every solve and they never rotate, so lateral contact
  forces produce no motion.

Everything is deterministic: bodies are iterated in declaration order, contact
pairs in index order, and no step consults any global state.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

from .errors import (
    BadControlError,
    BadMassError,
    DuplicateIdError,
    PushPlanError,
    RobotCountError,
    StateMismatchError,
)
from .geometry import OrientedBox, Vec2, cross, dot, normalize_angle, rotate

FIXED_MASS = math.inf

CATEGORY_FIXED = "fixed"
CATEGORY_FREE = "free_manipulatable"
CATEGORY_CONSTRAINED = "constraint_oriented"
CATEGORIES = (CATEGORY_FIXED, CATEGORY_FREE, CATEGORY_CONSTRAINED)


# ---------------------------------------------------------------------------
# shapes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Circle:
    radius: float

    def __post_init__(self):
        if not (self.radius > 0.0):
            raise PushPlanError(f"circle radius must be positive, got {self.radius}")


@dataclass(frozen=True)
class Box:
    half_extents: Vec2

    def __post_init__(self):
        hx, hy = self.half_extents
        if not (hx > 0.0 and hy > 0.0):
            raise PushPlanError(f"box half extents must be positive, got {self.half_extents}")


Shape = Circle | Box


def shape_inertia(shape: Shape, mass: float) -> float:
    """Moment of inertia about the center of mass. Circle: m r^2 / 2, box: m (w^2+h^2) / 12."""
    if isinstance(shape, Circle):
        return 0.5 * mass * shape.radius * shape.radius
    hx, hy = shape.half_extents
    return mass * ((2 * hx) ** 2 + (2 * hy) ** 2) / 12.0


# ---------------------------------------------------------------------------
# body definitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoxRegion:
    """Axis-aligned box in the owning body's frame: center offset plus half extents."""

    offset: Vec2
    half: Vec2


@dataclass(frozen=True)
class Part:
    """A pushable part of a constrained body and the region the robot must occupy.

    push_direction is the body-frame sense in which pushing this part moves the
    body; it must be parallel to the owning constraint's allowed axis.
    """

    name: str
    push_direction: Vec2
    region: BoxRegion


@dataclass(frozen=True)
class ManipulationConstraint:
    """Restricts a body's translation to a body-frame axis (both senses)."""

    allowed_axis: Vec2
    parts: tuple[Part, ...]

    def __post_init__(self):
        n = math.hypot(*self.allowed_axis)
        if abs(n - 1.0) > 1e-12:
            raise PushPlanError(f"allowed_axis must be unit length, |axis| = {n}")
        if not self.parts:
            raise PushPlanError("constraint needs at least one part")
        for part in self.parts:
            if abs(cross(part.push_direction, self.allowed_axis)) > 1e-9:
                raise PushPlanError(
                    f"part {part.name!r}: push_direction must be parallel to the allowed axis"
                )


@dataclass(frozen=True)
class BodyState:
    """Kinematic state of one body. Orientation is kept normalized to [-pi, pi)."""

    position: Vec2
    orientation: float
    linear_velocity: Vec2 = (0.0, 0.0)
    angular_velocity: float = 0.0
    constraint_ref: str | None = None


@dataclass
class RigidBody:
    """Declaration of one body: geometry, mass properties, category and start state.

    Fixed bodies use the infinite-mass sentinel for both mass and inertia.
    If inertia is omitted for a dynamic body it is derived from the shape.
    """

    id: str
    shape: Shape
    category: str
    mass: float = FIXED_MASS
    inertia: float | None = None
    is_robot: bool = False
    constraint: ManipulationConstraint | None = None
    state: BodyState = field(default_factory=lambda: BodyState((0.0, 0.0), 0.0))

    def __post_init__(self):
        if self.category not in CATEGORIES:
            raise PushPlanError(f"body {self.id!r}: unknown category {self.category!r}")
        if self.category == CATEGORY_FIXED:
            if not math.isinf(self.mass):
                raise BadMassError(f"body {self.id!r}: fixed bodies take the infinite-mass sentinel")
            self.inertia = FIXED_MASS
        else:
            if not (math.isfinite(self.mass) and self.mass > 0.0):
                raise BadMassError(f"body {self.id!r}: mass must be positive, got {self.mass}")
            if self.inertia is None:
                self.inertia = shape_inertia(self.shape, self.mass)
        if (self.category == CATEGORY_CONSTRAINED) != (self.constraint is not None):
            raise PushPlanError(
                f"body {self.id!r}: constraint-oriented bodies carry a constraint, others none"
            )
        ref = self.id if self.constraint is not None else None
        self.state = replace(
            self.state,
            orientation=normalize_angle(self.state.orientation),
            constraint_ref=ref,
        )


@dataclass(frozen=True)
class PhysicsParams:
    dt: float = 0.01
    solver_iters: int = 8
    restitution: float = 0.0
    friction: float = 0.5
    damping: float = 0.1
    baumgarte: float = 0.2
    slop: float = 1e-3


@dataclass
class ContactEvent:
    """One contact point between two bodies; normal points from body_a to body_b."""

    body_a: str
    body_b: str
    point: Vec2
    normal: Vec2
    penetration: float
    applied_impulse: float = 0.0


@dataclass(frozen=True)
class WorldState:
    """States of all bodies, in scene declaration order, plus simulation time."""

    ids: tuple[str, ...]
    body_states: tuple[BodyState, ...]
    time: float

    def state_of(self, body_id: str) -> BodyState:
        return self.body_states[self.ids.index(body_id)]

    def robot_position(self, robot_id: str) -> Vec2:
        return self.state_of(robot_id).position


# ---------------------------------------------------------------------------
# runtime world
# ---------------------------------------------------------------------------

class _Body:
    """Mutable per-body simulation record (flattened for the hot loop)."""

    __slots__ = (
        "id", "idx", "is_robot", "fixed", "constrained",
        "is_circle", "radius", "hx", "hy",
        "inv_m", "inv_i", "axis",
        "px", "py", "angle", "vx", "vy", "w",
    )

    def __init__(self, defn: RigidBody, idx: int):
        self.id = defn.id
        self.idx = idx
        self.is_robot = defn.is_robot
        self.fixed = defn.category == CATEGORY_FIXED
        self.constrained = defn.category == CATEGORY_CONSTRAINED
        if isinstance(defn.shape, Circle):
            self.is_circle = True
            self.radius = defn.shape.radius
            self.hx = self.hy = defn.shape.radius
        else:
            self.is_circle = False
            self.radius = 0.0
            self.hx, self.hy = defn.shape.half_extents
        self.inv_m = 0.0 if self.fixed else 1.0 / defn.mass
        # constrained bodies never rotate; fixed bodies never move
        self.inv_i = 0.0 if (self.fixed or self.constrained) else 1.0 / defn.inertia
        self.axis = defn.constraint.allowed_axis if defn.constraint else None
        st = defn.state
        self.px, self.py = st.position
        self.angle = st.orientation
        self.vx, self.vy = st.linear_velocity
        self.w = st.angular_velocity

    def clone(self) -> "_Body":
        other = object.__new__(_Body)
        for name in _Body.__slots__:
            setattr(other, name, getattr(self, name))
        return other

    def aabb(self) -> tuple[float, float, float, float]:
        if self.is_circle:
            r = self.radius
            return self.px - r, self.py - r, self.px + r, self.py + r
        c = math.cos(self.angle)
        s = math.sin(self.angle)
        ex = abs(c) * self.hx + abs(s) * self.hy
        ey = abs(s) * self.hx + abs(c) * self.hy
        return self.px - ex, self.py - ey, self.px + ex, self.py + ey


class World:
    """All bodies plus physics parameters. Stepping mutates the world in place;
    use :meth:`copy` to branch and :meth:`snapshot`/:meth:`load_state` to move
    states between worlds of the same scene."""

    def __init__(self, bodies: list[RigidBody], params: PhysicsParams):
        self.params = params
        self.defs = list(bodies)
        self.time = 0.0
        self._bodies = [_Body(b, i) for i, b in enumerate(bodies)]
        self._ids = tuple(b.id for b in bodies)
        robots = [i for i, b in enumerate(bodies) if b.is_robot]
        self._robot_idx = robots[0] if robots else -1

    # -- introspection ------------------------------------------------------

    @property
    def ids(self) -> tuple[str, ...]:
        return self._ids

    @property
    def robot_id(self) -> str:
        return self._ids[self._robot_idx]

    def body_def(self, body_id: str) -> RigidBody:
        return self.defs[self._ids.index(body_id)]

    def body_state(self, body_id: str) -> BodyState:
        return self._state_of(self._bodies[self._ids.index(body_id)])

    def _state_of(self, b: _Body) -> BodyState:
        return BodyState(
            position=(b.px, b.py),
            orientation=b.angle,
            linear_velocity=(b.vx, b.vy),
            angular_velocity=b.w,
            constraint_ref=b.id if b.constrained else None,
        )

    def snapshot(self) -> WorldState:
        return WorldState(
            ids=self._ids,
            body_states=tuple(self._state_of(b) for b in self._bodies),
            time=self.time,
        )

    def load_state(self, state: WorldState) -> None:
        if state.ids != self._ids:
            raise StateMismatchError(f"state ids {state.ids} do not match world ids {self._ids}")
        for b, st in zip(self._bodies, state.body_states):
            b.px, b.py = st.position
            b.angle = st.orientation
            b.vx, b.vy = st.linear_velocity
            b.w = st.angular_velocity
        self.time = state.time

    def copy(self) -> "World":
        other = object.__new__(World)
        other.params = self.params
        other.defs = self.defs
        other.time = self.time
        other._bodies = [b.clone() for b in self._bodies]
        other._ids = self._ids
        other._robot_idx = self._robot_idx
        return other


def make_world(bodies: list[RigidBody], params: PhysicsParams | None = None) -> World:
    """Validate body declarations and build a world. Bodies keep declaration order."""
    seen: set[str] = set()
    for b in bodies:
        if b.id in seen:
            raise DuplicateIdError(f"duplicate body id {b.id!r}")
        seen.add(b.id)
    robots = [b for b in bodies if b.is_robot]
    if len(robots) != 1:
        raise RobotCountError(f"expected exactly one robot body, found {len(robots)}")
    if robots[0].category == CATEGORY_FIXED:
        raise PushPlanError("the robot cannot be a fixed body")
    return World(bodies, params or PhysicsParams())


# ---------------------------------------------------------------------------
# contact detection
# ---------------------------------------------------------------------------

def _circle_circle(a: _Body, b: _Body, out: list[ContactEvent]) -> None:
    dx = b.px - a.px
    dy = b.py - a.py
    rsum = a.radius + b.radius
    d2 = dx * dx + dy * dy
    if d2 >= rsum * rsum:
        return
    d = math.sqrt(d2)
    if d > 1e-12:
        nx, ny = dx / d, dy / d
    else:
        nx, ny = 1.0, 0.0
    pen = rsum - d
    # contact point midway through the overlap band
    px = a.px + nx * (a.radius - 0.5 * pen)
    py = a.py + ny * (a.radius - 0.5 * pen)
    out.append(ContactEvent(a.id, b.id, (px, py), (nx, ny), pen))


def _circle_box(circle: _Body, box: _Body, flip: bool, out: list[ContactEvent]) -> None:
    # work in the box frame
    c = math.cos(box.angle)
    s = math.sin(box.angle)
    dx = circle.px - box.px
    dy = circle.py - box.py
    lx = dx * c + dy * s
    ly = -dx * s + dy * c
    cx = max(-box.hx, min(box.hx, lx))
    cy = max(-box.hy, min(box.hy, ly))
    if cx == lx and cy == ly:
        # center inside the box: push out along the shallower local axis
        qx = box.hx - abs(lx)
        qy = box.hy - abs(ly)
        if qx < qy:
            cx = box.hx if lx > 0 else -box.hx
        else:
            cy = box.hy if ly > 0 else -box.hy
        ex = lx - cx
        ey = ly - cy
        dist = -math.hypot(ex, ey)  # negative: center is inside
        # push the circle out through the nearest face
        nlx, nly = (ex / dist, ey / dist) if dist != 0.0 else (1.0, 0.0)
    else:
        ex = lx - cx
        ey = ly - cy
        dist = math.hypot(ex, ey)
        if dist >= circle.radius:
            return
        nlx, nly = ex / dist, ey / dist
    pen = circle.radius - dist
    # back to world frame; normal points from box toward circle
    nwx = nlx * c - nly * s
    nwy = nlx * s + nly * c
    pwx = box.px + cx * c - cy * s
    pwy = box.py + cx * s + cy * c
    if flip:
        # (a, b) = (circle, box): normal must point circle -> box
        out.append(ContactEvent(circle.id, box.id, (pwx, pwy), (-nwx, -nwy), pen))
    else:
        out.append(ContactEvent(box.id, circle.id, (pwx, pwy), (nwx, nwy), pen))


def _box_axes(b: _Body) -> tuple[Vec2, Vec2]:
    c = math.cos(b.angle)
    s = math.sin(b.angle)
    return (c, s), (-s, c)


def _box_box(a: _Body, b: _Body, out: list[ContactEvent]) -> None:
    """SAT with reference-face clipping; emits up to two contact points."""
    ua, va = _box_axes(a)
    ub, vb = _box_axes(b)
    d = (b.px - a.px, b.py - a.py)
    best_pen = math.inf
    best_axis: Vec2 = (0.0, 0.0)
    best_owner = 0  # 0: face of a, 1: face of b
    for owner, axis, own_extent in ((0, ua, a.hx), (0, va, a.hy), (1, ub, b.hx), (1, vb, b.hy)):
        if owner == 0:
            ra = own_extent
            rb = b.hx * abs(dot(axis, ub)) + b.hy * abs(dot(axis, vb))
        else:
            ra = a.hx * abs(dot(axis, ua)) + a.hy * abs(dot(axis, va))
            rb = own_extent
        sep = abs(dot(axis, d))
        pen = ra + rb - sep
        if pen <= 0.0:
            return
        if pen < best_pen:
            best_pen = pen
            best_axis = axis
            best_owner = owner

    # orient the reference normal from the reference box toward the other box
    ref, inc = (a, b) if best_owner == 0 else (b, a)
    n = best_axis
    dir_sign = dot(n, (inc.px - ref.px, inc.py - ref.py))
    if dir_sign < 0.0:
        n = (-n[0], -n[1])

    # incident face: the face of inc most anti-parallel to n
    uinc, vinc = _box_axes(inc)
    candidates = (
        (uinc, inc.hx, vinc, inc.hy),
        ((-uinc[0], -uinc[1]), inc.hx, vinc, inc.hy),
        (vinc, inc.hy, uinc, inc.hx),
        ((-vinc[0], -vinc[1]), inc.hy, uinc, inc.hx),
    )
    face_n, face_h, face_t, face_th = min(candidates, key=lambda cand: dot(cand[0], n))
    fc = (inc.px + face_n[0] * face_h, inc.py + face_n[1] * face_h)
    p1 = (fc[0] + face_t[0] * face_th, fc[1] + face_t[1] * face_th)
    p2 = (fc[0] - face_t[0] * face_th, fc[1] - face_t[1] * face_th)

    # clip the incident edge to the side planes of the reference face
    uref, vref = _box_axes(ref)
    tangent, t_extent = (vref, ref.hy) if abs(dot(n, uref)) > abs(dot(n, vref)) else (uref, ref.hx)
    ref_center = (ref.px, ref.py)
    for side in (tangent, (-tangent[0], -tangent[1])):
        d1 = dot(side, (p1[0] - ref_center[0], p1[1] - ref_center[1])) - t_extent
        d2 = dot(side, (p2[0] - ref_center[0], p2[1] - ref_center[1])) - t_extent
        if d1 > 0.0 and d2 > 0.0:
            return
        if d1 > 0.0:
            t = d1 / (d1 - d2)
            p1 = (p1[0] + (p2[0] - p1[0]) * t, p1[1] + (p2[1] - p1[1]) * t)
        elif d2 > 0.0:
            t = d2 / (d2 - d1)
            p2 = (p2[0] + (p1[0] - p2[0]) * t, p2[1] + (p1[1] - p2[1]) * t)

    ref_face_offset = dot(n, ref_center) + (ref.hx if abs(dot(n, uref)) > abs(dot(n, vref)) else ref.hy)
    flip = ref is b  # event normal must run a -> b
    ev_n = (-n[0], -n[1]) if flip else n
    for p in (p1, p2):
        sep = dot(n, p) - ref_face_offset
        if sep <= 0.0:
            out.append(ContactEvent(a.id, b.id, p, ev_n, -sep))


def detect_contacts(world: World) -> list[ContactEvent]:
    """All overlapping body pairs, in (declaration index) pair order."""
    bodies = world._bodies
    n = len(bodies)
    out: list[ContactEvent] = []
    boxes = [b.aabb() for b in bodies]
    for i in range(n):
        bi = bodies[i]
        xi0, yi0, xi1, yi1 = boxes[i]
        for j in range(i + 1, n):
            bj = bodies[j]
            xj0, yj0, xj1, yj1 = boxes[j]
            if xi1 < xj0 or xj1 < xi0 or yi1 < yj0 or yj1 < yi0:
                continue
            if bi.is_circle and bj.is_circle:
                _circle_circle(bi, bj, out)
            elif bi.is_circle:
                _circle_box(bi, bj, True, out)
            elif bj.is_circle:
                _circle_box(bj, bi, False, out)
            else:
                _box_box(bi, bj, out)
    return out


# ---------------------------------------------------------------------------
# contact resolution
# ---------------------------------------------------------------------------

def enforce_motion_constraint(state: BodyState, constraint: ManipulationConstraint) -> BodyState:
    """Project the world-frame velocity onto the rotated allowed axis; stop rotation."""
    axis = rotate(constraint.allowed_axis, state.orientation)
    speed = dot(state.linear_velocity, axis)
    return replace(
        state,
        linear_velocity=(speed * axis[0], speed * axis[1]),
        angular_velocity=0.0,
    )


def _project_constrained(world: World) -> None:
    for b in world._bodies:
        if b.constrained:
            c = math.cos(b.angle)
            s = math.sin(b.angle)
            ax = c * b.axis[0] - s * b.axis[1]
            ay = s * b.axis[0] + c * b.axis[1]
            speed = b.vx * ax + b.vy * ay
            b.vx = speed * ax
            b.vy = speed * ay
            b.w = 0.0


def resolve_contacts(world: World, contacts: list[ContactEvent]) -> World:
    """Sequential-impulse solve over the given contacts, then constraint projection.

    Mutates and returns the world; fills each event's applied_impulse with the
    accumulated normal impulse.
    """
    params = world.params
    bodies = world._bodies
    index = {b.id: b for b in bodies}
    inv_dt = 1.0 / params.dt
    mu = params.friction
    rows = []
    for ev in contacts:
        a = index[ev.body_a]
        b = index[ev.body_b]
        if a.inv_m == 0.0 and b.inv_m == 0.0:
            continue
        nx, ny = ev.normal
        tx, ty = -ny, nx
        px, py = ev.point
        rax, ray = px - a.px, py - a.py
        rbx, rby = px - b.px, py - b.py
        ran = rax * ny - ray * nx
        rbn = rbx * ny - rby * nx
        kn = a.inv_m + b.inv_m + a.inv_i * ran * ran + b.inv_i * rbn * rbn
        rat = rax * ty - ray * tx
        rbt = rbx * ty - rby * tx
        kt = a.inv_m + b.inv_m + a.inv_i * rat * rat + b.inv_i * rbt * rbt
        # relative velocity of b w.r.t. a at the contact point
        rvx = (b.vx - b.w * rby) - (a.vx - a.w * ray)
        rvy = (b.vy + b.w * rbx) - (a.vy + a.w * rax)
        vn0 = rvx * nx + rvy * ny
        bias = params.restitution * max(0.0, -vn0)
        bias += params.baumgarte * inv_dt * max(0.0, ev.penetration - params.slop)
        rows.append([ev, a, b, nx, ny, rax, ray, rbx, rby, kn, kt, bias, 0.0, 0.0])

    for _ in range(params.solver_iters):
        for row in rows:
            ev, a, b, nx, ny, rax, ray, rbx, rby, kn, kt, bias, jn, jt = row
            # normal impulse, accumulated and clamped nonnegative
            rvx = (b.vx - b.w * rby) - (a.vx - a.w * ray)
            rvy = (b.vy + b.w * rbx) - (a.vy + a.w * rax)
            vn = rvx * nx + rvy * ny
            dj = -(vn - bias) / kn
            jn_new = jn + dj
            if jn_new < 0.0:
                jn_new = 0.0
            dj = jn_new - jn
            row[12] = jn_new
            jn = jn_new
            if dj != 0.0:
                ix, iy = dj * nx, dj * ny
                a.vx -= ix * a.inv_m
                a.vy -= iy * a.inv_m
                a.w -= a.inv_i * (rax * iy - ray * ix)
                b.vx += ix * b.inv_m
                b.vy += iy * b.inv_m
                b.w += b.inv_i * (rbx * iy - rby * ix)
            if mu == 0.0 or kt == 0.0:
                continue
            # Coulomb friction along the tangent, clamped by mu * jn
            tx, ty = -ny, nx
            rvx = (b.vx - b.w * rby) - (a.vx - a.w * ray)
            rvy = (b.vy + b.w * rbx) - (a.vy + a.w * rax)
            vt = rvx * tx + rvy * ty
            djt = -vt / kt
            max_t = mu * jn
            jt_new = jt + djt
            if jt_new > max_t:
                jt_new = max_t
            elif jt_new < -max_t:
                jt_new = -max_t
            djt = jt_new - jt
            row[13] = jt_new
            if djt != 0.0:
                ix, iy = djt * tx, djt * ty
                a.vx -= ix * a.inv_m
                a.vy -= iy * a.inv_m
                a.w -= a.inv_i * (rax * iy - ray * ix)
                b.vx += ix * b.inv_m
                b.vy += iy * b.inv_m
                b.w += b.inv_i * (rbx * iy - rby * ix)

    for row in rows:
        row[0].applied_impulse = row[12]
    _project_constrained(world)
    return world


# ---------------------------------------------------------------------------
# stepping
# ---------------------------------------------------------------------------

def step(world: World, robot_force: Vec2, dt: float) -> tuple[World, list[ContactEvent]]:
    """Advance the world by one fixed step under a force on the robot.

    Order: robot force, linear damping, contact detection, impulse solve,
    constraint projection, position integration. Fixed bodies are never touched.
    """
    params = world.params
    if dt != params.dt:
        raise PushPlanError(f"variable stepping not supported: dt {dt} != params.dt {params.dt}")
    fx, fy = robot_force
    if not (math.isfinite(fx) and math.isfinite(fy)):
        raise BadControlError(f"non-finite force {robot_force}")

    bodies = world._bodies
    robot = bodies[world._robot_idx]
    robot.vx += fx * robot.inv_m * dt
    robot.vy += fy * robot.inv_m * dt

    damp = 1.0 - params.damping * dt
    for b in bodies:
        if not b.fixed:
            b.vx *= damp
            b.vy *= damp

    contacts = detect_contacts(world)
    if contacts:
        resolve_contacts(world, contacts)
    _project_constrained(world)

    for b in bodies:
        if not b.fixed:
            b.px += b.vx * dt
            b.py += b.vy * dt
            if b.w != 0.0:
                b.angle = normalize_angle(b.angle + b.w * dt)
    world.time += dt
    return world, contacts


def region_world_box(body: RigidBody, part: Part) -> OrientedBox:
    """World-frame oriented box of a part's manipulation region at the body's pose."""
    if body.constraint is None:
        raise PushPlanError(f"body {body.id!r} has no manipulation constraint")
    if part not in body.constraint.parts:
        raise PushPlanError(f"part {part.name!r} is not owned by body {body.id!r}")
    return region_box_at(body.state.position, body.state.orientation, part.region)


def region_box_at(position: Vec2, orientation: float, region: BoxRegion) -> OrientedBox:
    """Region box transformed by an arbitrary pose (used on per-step states)."""
    off = rotate(region.offset, orientation)
    return OrientedBox(
        center=(position[0] + off[0], position[1] + off[1]),
        half=region.half,
        angle=orientation,
    )
