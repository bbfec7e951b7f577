"""Constant-curvature manifolds: coordinates, embeddings, distances.

Supports the three model spaces used throughout the library: the
hyperboloid (upper sheet of [x, x] = R^2 in Minkowski space, curvature
-1/R^2), the hypersphere ((x, x) = R^2 in Euclidean space, curvature
+1/R^2) and flat Euclidean space.  Points are described either in
standard geodesic polar coordinates (radial coordinate plus d-1 angles
theta_{d-1}, ..., theta_2, phi) or by their ambient coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError, OffManifoldError, RangeError
from .specfun import _cgamma

HYPERBOLOID = "hyperboloid"
HYPERSPHERE = "hypersphere"
EUCLIDEAN = "euclidean"

_KINDS = (HYPERBOLOID, HYPERSPHERE, EUCLIDEAN)


@dataclass(frozen=True)
class ManifoldSpec:
    """Which model space, its dimension and its radius of curvature.

    The radius is ignored (fixed to 1) for the Euclidean case.
    """

    kind: str
    d: int
    R: float = 1.0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise DomainError(f"kind must be one of {_KINDS}")
        if self.d < 1:
            raise DomainError("dimension must be >= 1")
        if self.kind == EUCLIDEAN:
            object.__setattr__(self, "R", 1.0)
        elif not self.R > 0:
            raise DomainError("radius R must be positive")

    @property
    def mu(self) -> float:
        """The order d/2 - 1 carried by every radial special function."""
        return 0.5 * self.d - 1.0


@dataclass(frozen=True)
class GeodesicPolarPoint:
    """Radial coordinate plus angles (theta_{d-1}, ..., theta_2, phi).

    The radial coordinate is r in [0, inf) on the hyperboloid, the
    colatitude theta in [0, pi] on the hypersphere, r >= 0 in flat
    space.  ``angles`` has length d - 1; its last entry is the
    azimuthal phi in [0, 2 pi), all earlier entries lie in [0, pi].
    """

    radial: float
    angles: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "angles", tuple(float(a) for a in self.angles))

    @property
    def d(self) -> int:
        return len(self.angles) + 1


@dataclass(frozen=True)
class AmbientPoint:
    """Point in the ambient (d+1)-space (or R^d for the flat case)."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(float(c) for c in self.coords))


def minkowski_form(a: AmbientPoint, b: AmbientPoint) -> float:
    """[x, y] = x0 y0 - x1 y1 - ... - xd yd."""
    x, y = a.coords, b.coords
    return x[0] * y[0] - sum(u * v for u, v in zip(x[1:], y[1:]))


def euclidean_form(a: AmbientPoint, b: AmbientPoint) -> float:
    return sum(u * v for u, v in zip(a.coords, b.coords))


def _unit_vector(angles) -> list:
    """Unit vector on S^{d-1} from (theta_{d-1}, ..., theta_2, phi)."""
    if len(angles) == 0:
        return [1.0]
    if len(angles) == 1:
        return [math.cos(angles[0]), math.sin(angles[0])]
    th = angles[0]
    rest = _unit_vector(angles[1:])
    return [math.cos(th)] + [math.sin(th) * c for c in rest]


def _validate_angles(p: GeodesicPolarPoint):
    for a in p.angles[:-1]:
        if not 0.0 <= a <= math.pi:
            raise RangeError("polar angles must lie in [0, pi]")
    if p.angles:
        if not 0.0 <= p.angles[-1] < 2.0 * math.pi:
            raise RangeError("azimuthal angle must lie in [0, 2 pi)")


def embed(m: ManifoldSpec, p: GeodesicPolarPoint) -> AmbientPoint:
    """Ambient coordinates of a geodesic polar point.

    Hyperboloid: x = R (cosh r, sinh r * n), hypersphere:
    x = R (cos theta, sin theta * n), Euclidean: x = r * n, with n the
    unit vector built from the angles.
    """
    if p.d != m.d:
        raise RangeError(f"point has dimension {p.d}, manifold {m.d}")
    _validate_angles(p)
    n = _unit_vector(list(p.angles))
    if m.kind == HYPERBOLOID:
        if p.radial < 0:
            raise RangeError("hyperboloid radial coordinate must be >= 0")
        sh = math.sinh(p.radial)
        return AmbientPoint([m.R * math.cosh(p.radial)] + [m.R * sh * c for c in n])
    if m.kind == HYPERSPHERE:
        if not 0.0 <= p.radial <= math.pi:
            raise RangeError("hypersphere colatitude must lie in [0, pi]")
        st = math.sin(p.radial)
        return AmbientPoint([m.R * math.cos(p.radial)] + [m.R * st * c for c in n])
    if p.radial < 0:
        raise RangeError("euclidean radius must be >= 0")
    return AmbientPoint([p.radial * c for c in n])


def _check_on_manifold(m: ManifoldSpec, a: AmbientPoint):
    if m.kind == HYPERBOLOID:
        form = minkowski_form(a, a)
        scale = max(m.R ** 2, max(c * c for c in a.coords))
        if abs(form - m.R ** 2) > 1e-9 * scale or a.coords[0] <= 0:
            raise OffManifoldError("point not on the hyperboloid sheet")
    elif m.kind == HYPERSPHERE:
        form = euclidean_form(a, a)
        if abs(form - m.R ** 2) > 1e-9 * m.R ** 2:
            raise OffManifoldError("point not on the hypersphere")


def geodesic_distance(m: ManifoldSpec, a: AmbientPoint, b: AmbientPoint) -> float:
    """Geodesic distance between two ambient points of the manifold.

    R acosh([x, x']/R^2) on the hyperboloid, R acos((x, x')/R^2) on the
    hypersphere, the Euclidean norm in flat space.  The normalized form
    argument is clamped within 1e-12 slack to absorb roundoff.
    """
    if m.kind == EUCLIDEAN:
        return math.sqrt(sum((u - v) ** 2
                             for u, v in zip(a.coords, b.coords)))
    _check_on_manifold(m, a)
    _check_on_manifold(m, b)
    if m.kind == HYPERBOLOID:
        w = minkowski_form(a, b) / m.R ** 2
        if w < 1.0:
            if w < 1.0 - 1e-12 * max(1.0, abs(w)):
                raise OffManifoldError("hyperboloid form argument < 1")
            w = 1.0
        # acosh via the log form, stable for w near 1
        return m.R * math.log(w + math.sqrt(w - 1.0) * math.sqrt(w + 1.0))
    w = euclidean_form(a, b) / m.R ** 2
    w = min(1.0, max(-1.0, w))
    return m.R * math.acos(w)


def separation_angle(p: GeodesicPolarPoint, q: GeodesicPolarPoint) -> float:
    """cos(gamma) between the angular parts of two polar points.

    Evaluated by the nested product/sum formula (equivalently the dot
    product of the embedded unit vectors); clamped to [-1, 1].
    """
    if p.d != q.d:
        raise RangeError("points must share a dimension")
    cg = 1.0
    if p.angles:
        # recursive spherical law of cosines down to cos(phi - phi')
        cg = math.cos(p.angles[-1] - q.angles[-1])
        for th, thp in zip(reversed(p.angles[:-1]), reversed(q.angles[:-1])):
            cg = (math.cos(th) * math.cos(thp)
                  + math.sin(th) * math.sin(thp) * cg)
    return min(1.0, max(-1.0, cg))


def sphere_surface_measure(d: int, R: float) -> float:
    """Surface measure of S_R^{d-1}: 2 pi^{d/2} R^{d-1} / Gamma(d/2)."""
    if d < 1:
        raise DomainError("dimension must be >= 1")
    if R <= 0:
        raise DomainError("radius must be positive")
    return 2.0 * math.pi ** (0.5 * d) * R ** (d - 1) / _cgamma(0.5 * d).real


def radial_volume_weight(m: ManifoldSpec, radial: float) -> float:
    """Radial factor of the invariant volume measure.

    R^d sinh^{d-1} r (hyperboloid), R^d sin^{d-1} theta (hypersphere),
    r^{d-1} (Euclidean).
    """
    if m.kind == HYPERBOLOID:
        if radial < 0:
            raise RangeError("radial must be >= 0")
        return m.R ** m.d * math.sinh(radial) ** (m.d - 1)
    if m.kind == HYPERSPHERE:
        if not 0.0 <= radial <= math.pi:
            raise RangeError("colatitude must lie in [0, pi]")
        return m.R ** m.d * math.sin(radial) ** (m.d - 1)
    if radial < 0:
        raise RangeError("radius must be >= 0")
    return radial ** (m.d - 1)


def composite_hyperbolic(r: float, rp: float, cos_gamma: float) -> float:
    """Two-point composite cosh(rho) = cosh r cosh r' - sinh r sinh r' cos(gamma),
    returned as rho."""
    w = math.cosh(r) * math.cosh(rp) - math.sinh(r) * math.sinh(rp) * cos_gamma
    w = max(1.0, w)
    return math.log(w + math.sqrt(w - 1.0) * math.sqrt(w + 1.0))


def composite_spherical(th: float, thp: float, cos_gamma: float) -> float:
    """Two-point composite cos(Theta) = cos th cos th' + sin th sin th' cos(gamma),
    returned as Theta."""
    w = math.cos(th) * math.cos(thp) + math.sin(th) * math.sin(thp) * cos_gamma
    return math.acos(min(1.0, max(-1.0, w)))
