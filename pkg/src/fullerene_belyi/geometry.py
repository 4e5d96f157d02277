"""Numeric layer: complex roots of the barrel vertex polynomial, inverse
stereographic projection onto the unit sphere, and the metric report for the
distinguished pentagonal face.

Roots come from Aberth-Ehrlich simultaneous iteration followed by Newton
polishing; every returned root satisfies |p(root)| <= tol * scale(root)
where scale(z) = sum |c_i| |z|^i is the evaluation-magnitude norm of the
polynomial at the root (the natural backward-error yardstick).  Ordering is
by (modulus, argument), so runs are deterministic.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import cache

from .exact import UniPoly, is_squarefree

ROOT_TOL = 1e-12
_MAX_ABERTH_ITERS = 200
_MAX_POLISH_ITERS = 40


class RootFindingError(RuntimeError):
    pass


class GeometryError(ValueError):
    pass


@dataclass(frozen=True)
class ComplexPoint:
    re: float
    im: float

    @staticmethod
    def of(z: complex) -> "ComplexPoint":
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise GeometryError("non-finite complex point")
        return ComplexPoint(z.real, z.imag)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)


@dataclass(frozen=True)
class SpherePoint:
    x: float
    y: float
    z: float

    def sphere_residual(self) -> float:
        return abs(self.x * self.x + self.y * self.y + self.z * self.z - 1.0)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class Plane:
    """p*X + q*Y + r*Z = 1."""

    p: float
    q: float
    r: float

    def residual_at(self, pt: SpherePoint) -> float:
        return abs(self.p * pt.x + self.q * pt.y + self.r * pt.z - 1.0)

    def unit_normal(self) -> tuple[float, float, float]:
        n = math.sqrt(self.p ** 2 + self.q ** 2 + self.r ** 2)
        return (self.p / n, self.q / n, self.r / n)


def residual_scale(p: UniPoly, z: complex) -> float:
    """sum |c_i| |z|^i: the magnitude against which |p(z)| is judged."""
    az = abs(z)
    total = 0.0
    power = 1.0
    for c in p.coeffs:
        total += abs(complex(c)) * power
        power *= az
    return total


def _eval_with_derivative(coeffs: list[complex], z: complex) -> tuple[complex, complex]:
    v = 0j
    d = 0j
    for c in reversed(coeffs):
        d = d * z + v
        v = v * z + c
    return v, d


def poly_roots(p: UniPoly, tol: float = ROOT_TOL) -> list[complex]:
    """All deg(p) roots of a squarefree polynomial, Newton-polished to
    |p(root)| <= tol * scale(root), ordered by (modulus, argument)."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if p.is_zero or p.degree < 1:
        raise ValueError("root finding needs a nonconstant polynomial")
    if not is_squarefree(p):
        raise ValueError("root finding requires a squarefree polynomial")
    coeffs = [complex(c) for c in p.coeffs]
    n = len(coeffs) - 1

    # Cauchy bound initial circle, slightly irrational angle step so that
    # symmetric polynomials do not trap the iteration on a symmetry axis
    lead = abs(coeffs[-1])
    radius = 1.0 + max(abs(c) for c in coeffs[:-1]) / lead
    roots = [radius * cmath.exp(2j * math.pi * (k / n) + 0.4j)
             for k in range(n)]

    for _ in range(_MAX_ABERTH_ITERS):
        biggest = 0.0
        new_roots = list(roots)
        for i, zi in enumerate(roots):
            v, d = _eval_with_derivative(coeffs, zi)
            if v == 0:
                continue
            repulsion = sum(1.0 / (zi - zj) for j, zj in enumerate(roots)
                            if j != i)
            denom = d - v * repulsion
            if denom == 0:
                denom = d if d != 0 else 1e-30
            step = v / denom
            new_roots[i] = zi - step
            biggest = max(biggest, abs(step))
        roots = new_roots
        if biggest < 1e-14 * radius:
            break
    else:
        raise RootFindingError("Aberth iteration did not settle")

    polished = []
    for z in roots:
        for _ in range(_MAX_POLISH_ITERS):
            v, d = _eval_with_derivative(coeffs, z)
            if abs(v) <= 1e-16 * residual_scale(p, z) or d == 0:
                break
            step = v / d
            if abs(step) <= 1e-17 * max(1.0, abs(z)):
                break
            z = z - step
        polished.append(z)

    for z in polished:
        v, _ = _eval_with_derivative(coeffs, z)
        if abs(v) > tol * residual_scale(p, z):
            raise RootFindingError(
                f"root {z} has residual {abs(v):.3e} above tolerance")
    polished.sort(key=lambda z: (abs(z), _principal_arg(z)))
    return polished


def _principal_arg(z: complex) -> float:
    a = cmath.phase(z)
    return a + 2 * math.pi if a < 0 else a


# ---------------------------------------------------------------------------
# Barrel vertices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BarrelVertices:
    """The 24 vertices of the two-hexagon fullerene on the complex line.

    Labels follow the ring structure: A1..A6 and A7..A12 sit at arguments
    k*pi/3 on circles of radius r1 < r2; A13..A18 and A19..A24 at
    pi/6 + k*pi/3 on radii r3 < r4, with r1*r4 = r2*r3 = 1.
    """

    points: dict[str, complex]
    radii: tuple[float, float, float, float]

    def __getitem__(self, label: str) -> complex:
        return self.points[label]


def barrel_vertex_polynomial() -> UniPoly:
    """z^24 + 228 z^18 + 494 z^12 - 228 z^6 + 1, taken from the degree-72
    preset rather than typed in."""
    from .moebius import build_beta72

    (factor, exponent), = build_beta72().zero_factors
    if exponent != 3 or factor.degree != 24:
        raise AssertionError("unexpected degree-72 vertex factor")
    return factor


_RING_TOL = 1e-9


@cache
def barrel_vertices() -> BarrelVertices:
    """Roots of the vertex polynomial, checked against the ring structure
    and labeled A1..A24."""
    v = barrel_vertex_polynomial()
    roots = poly_roots(v, 1e-10)
    if len(roots) != 24:
        raise GeometryError("expected 24 vertices")

    moduli = sorted(abs(z) for z in roots)
    rings = [moduli[0:6], moduli[6:12], moduli[12:18], moduli[18:24]]
    radii = []
    for ring in rings:
        if ring[-1] - ring[0] > _RING_TOL:
            raise GeometryError("vertex moduli do not cluster into rings")
        radii.append(math.fsum(ring) / 6.0)
    r1, r2, r3, r4 = radii
    if not (abs(r1 * r4 - 1.0) <= _RING_TOL and abs(r2 * r3 - 1.0) <= _RING_TOL):
        raise GeometryError("ring radii do not pair into reciprocals")

    def expected(k: int) -> tuple[float, float]:
        # (radius, argument) for label A_k
        if k <= 6:
            return r1, math.pi * (k - 1) / 3.0
        if k <= 12:
            return r2, math.pi * (k - 7) / 3.0
        if k <= 18:
            return r3, math.pi / 6.0 + math.pi * (k - 13) / 3.0
        return r4, math.pi / 6.0 + math.pi * (k - 19) / 3.0

    points = {}
    taken = [False] * 24
    for k in range(1, 25):
        r, theta = expected(k)
        target = r * cmath.exp(1j * theta)
        best, best_dist = None, math.inf
        for i, z in enumerate(roots):
            if taken[i]:
                continue
            dist = abs(z - target)
            if dist < best_dist:
                best, best_dist = i, dist
        if best is None or best_dist > _RING_TOL:
            raise GeometryError(
                f"no root matches the expected position of A{k}")
        taken[best] = True
        points[f"A{k}"] = roots[best]
    return BarrelVertices(points=points, radii=(r1, r2, r3, r4))


# ---------------------------------------------------------------------------
# Sphere geometry
# ---------------------------------------------------------------------------


def inverse_stereographic(point: complex | ComplexPoint) -> SpherePoint:
    """x + iy -> (2x, 2y, x^2+y^2-1) / (x^2+y^2+1) on the unit sphere."""
    z = complex(point)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise GeometryError("cannot project a non-finite point")
    x, y = z.real, z.imag
    denom = x * x + y * y + 1.0
    return SpherePoint(2.0 * x / denom, 2.0 * y / denom,
                       (x * x + y * y - 1.0) / denom)


def _sub(a: SpherePoint, b: SpherePoint) -> tuple[float, float, float]:
    return (a.x - b.x, a.y - b.y, a.z - b.z)


def _dot(u, v) -> float:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _norm(u) -> float:
    return math.sqrt(_dot(u, u))


def plane_through(p1: SpherePoint, p2: SpherePoint, p3: SpherePoint) -> Plane:
    """The plane p*X + q*Y + r*Z = 1 through three points (it must not pass
    through the origin, and the points must not be collinear)."""
    rows = [p1.as_tuple(), p2.as_tuple(), p3.as_tuple()]

    def det3(m) -> float:
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))

    d = det3(rows)
    size = max(_norm(r) for r in rows)
    if abs(d) <= 1e-12 * size ** 3:
        raise GeometryError("degenerate point configuration for a plane")
    coeffs = []
    for col in range(3):
        m = [list(r) for r in rows]
        for i in range(3):
            m[i][col] = 1.0
        coeffs.append(det3(m) / d)
    plane = Plane(*coeffs)
    worst = max(plane.residual_at(SpherePoint(*r)) for r in rows)
    if worst > 1e-9:
        raise GeometryError(f"plane fit residual {worst:.3e} too large")
    return plane


def interior_angle_deg(at: SpherePoint, toward_a: SpherePoint,
                       toward_b: SpherePoint) -> float:
    """Angle at `at` between the chords toward the two neighbors, degrees."""
    u = _sub(toward_a, at)
    v = _sub(toward_b, at)
    c = _dot(u, v) / (_norm(u) * _norm(v))
    c = max(-1.0, min(1.0, c))
    return math.degrees(math.acos(c))


PENTAGON_CYCLE = ("A1", "A7", "A13", "A8", "A2")


@dataclass(frozen=True)
class FaceGeometryReport:
    """Metric data of one pentagonal face, walked in cycle order."""

    labels: tuple[str, ...]
    points: dict[str, SpherePoint]
    edge_lengths: tuple[float, ...]        # edge i joins labels[i], labels[i+1]
    interior_angles: tuple[float, ...]     # angle i sits at labels[i]
    plane_quad: Plane                      # through v0, v4, v1 (contains v3 too)
    plane_cap: Plane                       # through v1, v2, v3
    quad_coplanarity_residual: float       # v3 against plane_quad
    dihedral_deg: float

    def edges(self) -> list[tuple[str, str, float]]:
        n = len(self.labels)
        return [(self.labels[i], self.labels[(i + 1) % n], self.edge_lengths[i])
                for i in range(n)]

    def angles(self) -> list[tuple[str, float]]:
        return list(zip(self.labels, self.interior_angles))

    def to_report(self) -> dict:
        return {
            "cycle": list(self.labels),
            "vertices": {
                lab: [pt.x, pt.y, pt.z] for lab, pt in self.points.items()},
            "edges": [
                {"from": a, "to": b, "length": length}
                for a, b, length in self.edges()],
            "angles": [
                {"at": lab, "degrees": ang} for lab, ang in self.angles()],
            "plane_quad": [self.plane_quad.p, self.plane_quad.q, self.plane_quad.r],
            "plane_cap": [self.plane_cap.p, self.plane_cap.q, self.plane_cap.r],
            "quad_coplanarity_residual": self.quad_coplanarity_residual,
            "dihedral_degrees": self.dihedral_deg,
        }


def face_geometry(labels: tuple[str, ...] = PENTAGON_CYCLE) -> FaceGeometryReport:
    """Euclidean report for a pentagonal face given by five vertex labels in
    cycle order.  The default is the distinguished face spanning both
    vertex rings of the barrel."""
    if len(labels) != 5:
        raise GeometryError("a pentagonal face needs exactly five labels")
    verts = barrel_vertices()
    try:
        pts = {lab: inverse_stereographic(verts[lab]) for lab in labels}
    except KeyError as missing:
        raise GeometryError(f"unknown vertex label {missing}") from None

    seq = [pts[lab] for lab in labels]
    lengths = tuple(
        _norm(_sub(seq[(i + 1) % 5], seq[i])) for i in range(5))
    angles = tuple(
        interior_angle_deg(seq[i], seq[(i - 1) % 5], seq[(i + 1) % 5])
        for i in range(5))

    plane_quad = plane_through(seq[0], seq[4], seq[1])
    plane_cap = plane_through(seq[1], seq[2], seq[3])
    quad_res = plane_quad.residual_at(seq[3])
    n1 = plane_quad.unit_normal()
    n2 = plane_cap.unit_normal()
    c = max(-1.0, min(1.0, _dot(n1, n2)))
    dihedral = math.degrees(math.acos(c))

    return FaceGeometryReport(
        labels=tuple(labels), points=pts, edge_lengths=lengths,
        interior_angles=angles, plane_quad=plane_quad, plane_cap=plane_cap,
        quad_coplanarity_residual=quad_res, dihedral_deg=dihedral)
