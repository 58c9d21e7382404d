"""Geometries, point pairs, and the hyperbolic separation variable.

Every kernel in this package is a two-point function on a static
spacetime whose spatial section is flat space, a cone, a wedge bounded
by reflecting walls, or the infinite-sheeted covering of the punctured
plane.  Points are given in cylindrical coordinates (r, theta, z), and
the Euclidean time offset t > 0 doubles as the ultraviolet cutoff.

The separation of two points enters every formula through a single
hyperbolic variable u >= 0 defined by

    cosh u = (r^2 + r'^2 + t^2 + (z - z')^2) / (2 r r')

which is computed here in a cancellation-free half-angle form.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace


def _require_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class PointPair:
    """Two points in cylindrical coordinates plus a Euclidean time offset.

    The primed point is (rp, thetap, zp).  The offset t is the Euclidean
    time separation; it must be nonnegative, and a strictly positive t
    regulates coincident spatial points.
    """

    t: float
    r: float
    rp: float
    theta: float = 0.0
    thetap: float = 0.0
    z: float = 0.0
    zp: float = 0.0

    def __post_init__(self) -> None:
        for name in ("t", "r", "rp", "theta", "thetap", "z", "zp"):
            _require_finite(name, getattr(self, name))
        if self.t < 0:
            raise ValueError(f"t must be >= 0, got {self.t!r}")
        if self.r <= 0 or self.rp <= 0:
            raise ValueError(
                f"radii must be positive, got r={self.r!r}, rp={self.rp!r}"
            )

    @property
    def dtheta(self) -> float:
        return self.theta - self.thetap

    def swapped(self) -> "PointPair":
        """The same pair with primed and unprimed points exchanged."""
        return replace(
            self,
            r=self.rp, rp=self.r,
            theta=self.thetap, thetap=self.theta,
            z=self.zp, zp=self.z,
        )

    def scaled(self, factor: float) -> "PointPair":
        """Dilate every length by ``factor`` (angles are untouched)."""
        if factor <= 0:
            raise ValueError(f"scale factor must be positive, got {factor!r}")
        return replace(
            self,
            t=self.t * factor,
            r=self.r * factor, rp=self.rp * factor,
            z=self.z * factor, zp=self.zp * factor,
        )

    def is_coincident(self) -> bool:
        return (
            self.t == 0.0
            and self.r == self.rp
            and self.theta == self.thetap
            and self.z == self.zp
        )


class BoundaryCondition(enum.Enum):
    """Reflecting wall type for wedge geometries."""

    DIRICHLET = "dirichlet"
    NEUMANN = "neumann"

    @property
    def image_sign(self) -> int:
        """Sign of the reflected image term: -1 Dirichlet, +1 Neumann."""
        return -1 if self is BoundaryCondition.DIRICHLET else +1


@dataclass(frozen=True)
class Minkowski:
    """Unbounded flat space."""


@dataclass(frozen=True)
class Cone:
    """Flat cone: the plane with total angle ``theta1`` glued at r = 0.

    ``theta1`` = 2*pi is ordinary flat space; ``theta1`` < 2*pi has a
    deficit (an idealized cosmic string), ``theta1`` > 2*pi a surplus.
    """

    theta1: float

    def __post_init__(self) -> None:
        _require_finite("theta1", self.theta1)
        if self.theta1 <= 0:
            raise ValueError(f"theta1 must be positive, got {self.theta1!r}")

    @property
    def order(self) -> float:
        """Fourier order 2*pi/theta1 of the angular mode sum."""
        return 2.0 * math.pi / self.theta1


@dataclass(frozen=True)
class Dowker:
    """Infinite-sheeted covering of the punctured plane.

    The limit theta1 -> infinity of the cone, with the angle ranging
    over the whole real line.  No periodicity in theta remains.
    """


@dataclass(frozen=True)
class Wedge:
    """Wedge 0 <= theta <= theta0 bounded by two reflecting half-planes."""

    theta0: float
    bc: BoundaryCondition = BoundaryCondition.DIRICHLET

    def __post_init__(self) -> None:
        _require_finite("theta0", self.theta0)
        if self.theta0 <= 0:
            raise ValueError(f"theta0 must be positive, got {self.theta0!r}")
        if not isinstance(self.bc, BoundaryCondition):
            raise TypeError(f"bc must be a BoundaryCondition, got {self.bc!r}")


@dataclass(frozen=True)
class PeriodicLine:
    """Flat space with one Cartesian direction compactified to a circle."""

    period: float

    def __post_init__(self) -> None:
        _require_finite("period", self.period)
        if self.period <= 0:
            raise ValueError(f"period must be positive, got {self.period!r}")


Geometry = Minkowski | Cone | Dowker | Wedge | PeriodicLine


@dataclass(frozen=True)
class Coupling:
    """Curvature coupling of the scalar field.

    The stress tensor depends on the coupling only through the
    combination ``beta = xi - 1/4``, which multiplies a single block of
    radial derivatives.  ``beta`` is stored; ``xi`` is derived.
    """

    beta: float

    def __post_init__(self) -> None:
        _require_finite("beta", self.beta)

    @property
    def xi(self) -> float:
        return self.beta + 0.25

    @classmethod
    def minimal(cls) -> "Coupling":
        """xi = 0."""
        return cls(beta=-0.25)

    @classmethod
    def conformal(cls) -> "Coupling":
        """xi = 1/6, the trace-free choice in four dimensions."""
        return cls(beta=1.0 / 6.0 - 0.25)

    @classmethod
    def quarter(cls) -> "Coupling":
        """xi = 1/4, the choice that kills the radial-derivative block."""
        return cls(beta=0.0)

    @classmethod
    def from_xi(cls, xi: float) -> "Coupling":
        return cls(beta=xi - 0.25)

    @classmethod
    def from_name(cls, name: str) -> "Coupling":
        try:
            return {
                "minimal": cls.minimal,
                "conformal": cls.conformal,
                "quarter": cls.quarter,
            }[name.lower()]()
        except KeyError:
            raise ValueError(
                f"unknown coupling name {name!r}; "
                "expected minimal, conformal, or quarter"
            ) from None


@dataclass(frozen=True)
class UVariable:
    """The hyperbolic separation u together with its cosh and sinh.

    cosh u and sinh u are computed from the same intermediate as u
    itself, so the three fields are mutually consistent to roundoff
    even when u is tiny.
    """

    u: float
    cosh_u: float
    sinh_u: float


def u_of_pair(pair: PointPair) -> UVariable:
    """Hyperbolic separation of a point pair.

    Uses the half-angle form u = 2 asinh(sqrt(q)) with
    q = ((r - r')^2 + (z - z')^2 + t^2) / (4 r r'), which stays accurate
    for nearly coincident points where cosh u - 1 underflows.
    """
    q = ((pair.r - pair.rp) ** 2 + (pair.z - pair.zp) ** 2 + pair.t**2) / (
        4.0 * pair.r * pair.rp
    )
    return UVariable(
        u=2.0 * math.asinh(math.sqrt(q)),
        cosh_u=1.0 + 2.0 * q,
        sinh_u=2.0 * math.sqrt(q * (1.0 + q)),
    )


@dataclass(frozen=True)
class UConsistencyReport:
    """Cross-check of four textbook expressions for u on one pair."""

    values: dict[str, float]
    max_abs_diff: float
    max_rel_diff: float


def u_consistency(pair: PointPair) -> UConsistencyReport:
    """Evaluate four algebraically equal forms of u and compare them.

    The forms are evaluated exactly as written, without rearrangement,
    so the spread measures how much the naive expressions lose to
    cancellation relative to one another.  The pair must be separated:
    two of the forms are singular expressions at u = 0.
    """
    if pair.is_coincident():
        raise ValueError("u_consistency requires a separated pair")
    r, rp = pair.r, pair.rp
    zeta_sq = pair.t**2 + (pair.z - pair.zp) ** 2

    r1 = math.sqrt((r - rp) ** 2 + zeta_sq)
    r2 = math.sqrt((r + rp) ** 2 + zeta_sq)
    s = r * r + rp * rp + zeta_sq

    values = {
        "half_angle": u_of_pair(pair).u,
        "log_ratio": -math.log((r2 - r1) / (r2 + r1)),
        "acosh": math.acosh(s / (2.0 * r * rp)),
        "asinh": math.asinh(math.sqrt(s * s - 4.0 * r * r * rp * rp) / (2.0 * r * rp)),
    }
    vals = list(values.values())
    max_abs = max(abs(a - b) for a in vals for b in vals)
    scale = max(abs(v) for v in vals)
    return UConsistencyReport(
        values=values,
        max_abs_diff=max_abs,
        max_rel_diff=max_abs / scale if scale > 0 else 0.0,
    )
