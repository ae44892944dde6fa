"""3D primitives: vectors, box/sphere colliders, ray and sweep queries.

All queries are exact analytic tests on axis-aligned boxes and spheres.
Boundaries are inclusive: a point on a collider surface is inside it, and
two colliders that merely touch overlap with zero penetration depth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

UNIT_NORM_EPS = 1e-9


@dataclass(frozen=True, slots=True)
class Vec3:
    x: float
    y: float
    z: float

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def scaled(self, s: float) -> "Vec3":
        return Vec3(self.x * s, self.y * s, self.z * s)

    def dot(self, other: "Vec3") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def norm(self) -> float:
        return math.sqrt(self.dot(self))

    def distance_to(self, other: "Vec3") -> float:
        return (self - other).norm()

    def normalized(self) -> "Vec3":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return self.scaled(1.0 / n)

    def is_finite(self) -> bool:
        return math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.z)

    def to_list(self) -> list[float]:
        return [float(self.x), float(self.y), float(self.z)]

    @classmethod
    def from_seq(cls, seq: Sequence[float]) -> "Vec3":
        if len(seq) != 3:
            raise ValueError(f"expected 3 components, got {len(seq)}")
        return cls(float(seq[0]), float(seq[1]), float(seq[2]))


@dataclass(frozen=True, slots=True)
class Box:
    """Axis-aligned box given by its min and max corners."""

    min: Vec3
    max: Vec3

    @property
    def center(self) -> Vec3:
        return Vec3(
            (self.min.x + self.max.x) / 2.0,
            (self.min.y + self.max.y) / 2.0,
            (self.min.z + self.max.z) / 2.0,
        )

    @property
    def half_extent(self) -> Vec3:
        return Vec3(
            (self.max.x - self.min.x) / 2.0,
            (self.max.y - self.min.y) / 2.0,
            (self.max.z - self.min.z) / 2.0,
        )

    def contains(self, p: Vec3) -> bool:
        return (
            self.min.x <= p.x <= self.max.x
            and self.min.y <= p.y <= self.max.y
            and self.min.z <= p.z <= self.max.z
        )

    def translated(self, d: Vec3) -> "Box":
        return Box(self.min + d, self.max + d)

    def inflated(self, r: float) -> "Box":
        pad = Vec3(r, r, r)
        return Box(self.min - pad, self.max + pad)

    def clamp(self, p: Vec3) -> Vec3:
        return Vec3(
            min(max(p.x, self.min.x), self.max.x),
            min(max(p.y, self.min.y), self.max.y),
            min(max(p.z, self.min.z), self.max.z),
        )


@dataclass(frozen=True, slots=True)
class Sphere:
    center: Vec3
    radius: float

    def contains(self, p: Vec3) -> bool:
        return self.center.distance_to(p) <= self.radius

    def translated(self, d: Vec3) -> "Sphere":
        return Sphere(self.center + d, self.radius)


Collider = Union[Box, Sphere]


def collider_center(c: Collider) -> Vec3:
    return c.center if isinstance(c, Box) else c.center


def bounding_radius(c: Collider) -> float:
    """Radius of the smallest origin-centered sphere enclosing the collider."""
    if isinstance(c, Sphere):
        return c.radius
    return c.half_extent.norm()


def point_in_collider(p: Vec3, c: Collider) -> bool:
    return c.contains(p)


def assert_unit(direction: Vec3) -> None:
    if abs(direction.norm() - 1.0) > UNIT_NORM_EPS:
        raise ValueError(f"direction must have unit norm, got |d|={direction.norm()!r}")


def ray_sphere(origin: Vec3, direction: Vec3, sphere: Sphere) -> Optional[float]:
    """Smallest t >= 0 with origin + t*direction on the sphere, or None.

    An origin inside the sphere reports a hit at distance 0.
    """
    oc = origin - sphere.center
    c = oc.dot(oc) - sphere.radius * sphere.radius
    if c <= 0.0:
        return 0.0
    b = oc.dot(direction)
    disc = b * b - c
    if disc < 0.0:
        return None
    t = -b - math.sqrt(disc)
    if t < 0.0:
        return None
    return t


def ray_box(origin: Vec3, direction: Vec3, box: Box) -> Optional[float]:
    """Slab test. Smallest t >= 0 entering the box, 0 if origin inside."""
    tmin = -math.inf
    tmax = math.inf
    for o, d, lo, hi in (
        (origin.x, direction.x, box.min.x, box.max.x),
        (origin.y, direction.y, box.min.y, box.max.y),
        (origin.z, direction.z, box.min.z, box.max.z),
    ):
        if d == 0.0:
            if o < lo or o > hi:
                return None
            continue
        t1 = (lo - o) / d
        t2 = (hi - o) / d
        if t1 > t2:
            t1, t2 = t2, t1
        tmin = max(tmin, t1)
        tmax = min(tmax, t2)
        if tmin > tmax:
            return None
    if tmax < 0.0:
        return None
    return max(tmin, 0.0)


def ray_collider(origin: Vec3, direction: Vec3, c: Collider) -> Optional[float]:
    if isinstance(c, Sphere):
        return ray_sphere(origin, direction, c)
    return ray_box(origin, direction, c)


def closest_point_on_collider(c: Collider, p: Vec3) -> Vec3:
    if isinstance(c, Box):
        return c.clamp(p)
    if c.center.distance_to(p) <= c.radius:
        return p
    return c.center + (p - c.center).normalized().scaled(c.radius)


def sphere_overlaps_collider(center: Vec3, radius: float, c: Collider) -> bool:
    """Exact probe-sphere vs collider intersection, boundary inclusive."""
    if isinstance(c, Sphere):
        return center.distance_to(c.center) <= radius + c.radius
    return c.clamp(center).distance_to(center) <= radius


def penetration_depth(a: Collider, b: Collider) -> float:
    """Depth of overlap between two colliders; <= 0 means separated or touching."""
    if isinstance(a, Sphere) and isinstance(b, Sphere):
        return (a.radius + b.radius) - a.center.distance_to(b.center)
    if isinstance(a, Sphere) and isinstance(b, Box):
        return a.radius - b.clamp(a.center).distance_to(a.center)
    if isinstance(a, Box) and isinstance(b, Sphere):
        return penetration_depth(b, a)
    assert isinstance(a, Box) and isinstance(b, Box)
    depth = math.inf
    for lo_a, hi_a, lo_b, hi_b in (
        (a.min.x, a.max.x, b.min.x, b.max.x),
        (a.min.y, a.max.y, b.min.y, b.max.y),
        (a.min.z, a.max.z, b.min.z, b.max.z),
    ):
        overlap = min(hi_a, hi_b) - max(lo_a, lo_b)
        depth = min(depth, overlap)
    return depth


def surface_point(c: Collider, direction: Vec3) -> Vec3:
    """Point on the collider surface reached from its center along direction."""
    assert_unit(direction)
    if isinstance(c, Sphere):
        return c.center + direction.scaled(c.radius)
    half = c.half_extent
    t = math.inf
    for d, h in ((direction.x, half.x), (direction.y, half.y), (direction.z, half.z)):
        if d != 0.0:
            t = min(t, h / abs(d))
    if not math.isfinite(t):
        raise ValueError("degenerate box has no surface along that direction")
    return c.center + direction.scaled(t)


def escape_point(c: Collider, toward: Vec3, clearance: float) -> Vec3:
    """Nearest point just outside the collider, biased toward ``toward``."""
    center = collider_center(c)
    offset = toward - center
    direction = offset.normalized() if offset.norm() > 0.0 else Vec3(1.0, 0.0, 0.0)
    return surface_point(c, direction) + direction.scaled(clearance)


def sweep_sphere(
    start: Vec3,
    end: Vec3,
    radius: float,
    obstacles: Iterable[tuple[str, Collider]],
) -> Optional[tuple[float, str]]:
    """First contact of a sphere swept along [start, end] against obstacles.

    Returns (t, obstacle_id) with t in [0, 1] along the segment, or None.
    Box obstacles are inflated by the sphere radius, which is conservative
    near corners. Ties break toward the lexicographically smallest id.
    """
    delta = end - start
    length = delta.norm()
    if length == 0.0:
        best: Optional[tuple[float, str]] = None
        for oid, c in obstacles:
            if sphere_overlaps_collider(start, radius, c):
                if best is None or oid < best[1]:
                    best = (0.0, oid)
        return best
    direction = delta.scaled(1.0 / length)
    best = None
    for oid, c in obstacles:
        if isinstance(c, Sphere):
            t = ray_sphere(start, direction, Sphere(c.center, c.radius + radius))
        else:
            t = ray_box(start, direction, c.inflated(radius))
        if t is None or t > length:
            continue
        frac = t / length
        if best is None or frac < best[0] or (frac == best[0] and oid < best[1]):
            best = (frac, oid)
    return best
