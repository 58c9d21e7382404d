"""Cylinder kernels on flat space, cones, wedges, and related geometries.

The central object is the cylinder kernel tbar(t; x, x'), minus twice
the Euclidean two-point function of a massless scalar field with the
two points split by Euclidean time t > 0.  Second derivatives of tbar
at small t give the regularized stress tensor; its t -> 0 divergence
is the universal flat-space one, so differences of kernels have smooth
coincidence limits.

All closed forms depend on the spatial points through the hyperbolic
separation u of `geometry.u_of_pair` and on the angular offset.  The
kernel expressions are written against the dispatch functions in
`jets`, so the same code evaluates plain floats and second-order jets.
Branches are chosen by magnitude (through `jets.value_of`) to keep
every regime cancellation free:

  * u below _SMALL_U with a*u small: power series for the ratios
    sinh(a*u)/sinh(u) and u/sinh(u), whose direct evaluation loses
    derivative accuracy near coincidence;
  * a*u above _EXP_FORM_MIN_X: exponential form of the angular factor,
    which would otherwise overflow;
  * u above _LARGE_U: exponential form of 1/sinh(u).

Angular denominators are always the half-angle form
2 sinh^2(x/2) + 2 sin^2(y/2), which cannot cancel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import integrate, special

from . import jets
from .errors import ConvergenceError, DomainError, SingularPointError
from .geometry import (
    BoundaryCondition,
    Cone,
    Dowker,
    Minkowski,
    PeriodicLine,
    PointPair,
    UVariable,
    Wedge,
    u_of_pair,
)
from .jets import value_of

# Branch thresholds.  The series window additionally requires a*u small
# so that the truncated series stays accurate for very sharp cones.
_SMALL_U = 1e-4
_SMALL_AU = 0.05
_EXP_FORM_MIN_X = 30.0
_LARGE_U = 350.0

_TWO_PI_SQ = 2.0 * math.pi**2


def _separation(t, r, rp, z, zp):
    """Quarter squared chordal distance q and the separation u = 2 asinh(sqrt(q))."""
    q = ((r - rp) ** 2 + (z - zp) ** 2 + t * t) / (4.0 * r * rp)
    return q, 2.0 * jets.asinh(jets.sqrt(q))


def _inv_sinh_u(q, u):
    # sinh(u) = 2 sqrt(q (1 + q)) exactly; exponential form avoids overflow.
    if value_of(u) > _LARGE_U:
        em = jets.exp(-u)
        return 2.0 * em / (1.0 - em * em)
    return 1.0 / (2.0 * jets.sqrt(q * (1.0 + q)))


def _angular_factor(x, y):
    """sinh(x) / (cosh(x) - cos(y)), stable at small and large x."""
    if value_of(x) > _EXP_FORM_MIN_X:
        em = jets.exp(-x)
        return (1.0 - em * em) / (1.0 - 2.0 * em * jets.cos(y) + em * em)
    return jets.sinh(x) / (2.0 * jets.sinh(0.5 * x) ** 2 + 2.0 * jets.sin(0.5 * y) ** 2)


def _sinh_ratio_series(u, a):
    # sinh(a u)/sinh(u) through u^4; truncation is O((a u)^6 / 5040).
    u2 = u * u
    return a * (
        1.0
        + (a * a - 1.0) / 6.0 * u2
        + (a**4 / 120.0 - a * a / 36.0 + 7.0 / 360.0) * (u2 * u2)
    )


def _u_over_sinh(q, u):
    if value_of(u) < _SMALL_U:
        u2 = u * u
        return 1.0 - u2 / 6.0 + 7.0 / 360.0 * (u2 * u2)
    return u * _inv_sinh_u(q, u)


def _mink_term(t, r, rp, dth, z, zp):
    # Squared chordal distance, grouped so nothing cancels.
    d = (r - rp) ** 2 + t * t + (z - zp) ** 2 + 4.0 * r * rp * jets.sin(0.5 * dth) ** 2
    return -1.0 / (_TWO_PI_SQ * d)


def _cone_term(t, r, rp, dth, z, zp, theta1):
    a = 2.0 * math.pi / theta1
    q, u = _separation(t, r, rp, z, zp)
    uval = value_of(u)
    pref = -1.0 / (2.0 * math.pi * theta1 * r * rp)
    if uval < _SMALL_U and a * uval < _SMALL_AU:
        num = _sinh_ratio_series(u, a)
        den = 2.0 * jets.sinh(0.5 * a * u) ** 2 + 2.0 * jets.sin(0.5 * a * dth) ** 2
        return pref * num / den
    return pref * _inv_sinh_u(q, u) * _angular_factor(a * u, a * dth)


def _dowker_term(t, r, rp, dth, z, zp):
    q, u = _separation(t, r, rp, z, zp)
    return -_u_over_sinh(q, u) / (_TWO_PI_SQ * r * rp * (u * u + dth * dth))


def _wedge_term(t, r, rp, theta, thetap, z, zp, theta0, sign):
    doubled = 2.0 * theta0
    return (
        _cone_term(t, r, rp, theta - thetap, z, zp, doubled)
        + sign * _cone_term(t, r, rp, theta + thetap, z, zp, doubled)
        - _mink_term(t, r, rp, theta - thetap, z, zp)
    )


def minkowski_expr(t, r, rp, theta, thetap, z, zp):
    """Flat-space kernel as an expression over the seven coordinates."""
    return _mink_term(t, r, rp, theta - thetap, z, zp)


def cone_expr(theta1: float):
    """Expression for the cone kernel at total angle ``theta1``."""
    Cone(theta1)  # validate
    def expr(t, r, rp, theta, thetap, z, zp):
        return _cone_term(t, r, rp, theta - thetap, z, zp, theta1)
    return expr


def dowker_expr(t, r, rp, theta, thetap, z, zp):
    """Kernel expression on the infinite-sheeted covering."""
    return _dowker_term(t, r, rp, theta - thetap, z, zp)


def wedge_renormalized_expr(theta0: float, sign: int):
    """Expression for the wedge kernel with the flat part removed.

    Built from the kernel of the doubled cone (total angle 2 theta0)
    by reflection, minus the flat kernel, so its coincidence limit is
    finite everywhere strictly inside the wedge.
    """
    Wedge(theta0)  # validate
    if sign not in (-1, +1):
        raise ValueError(f"sign must be -1 or +1, got {sign!r}")
    def expr(t, r, rp, theta, thetap, z, zp):
        return _wedge_term(t, r, rp, theta, thetap, z, zp, theta0, sign)
    return expr


def kernel_expr(geometry):
    """Kernel expression f(t, r, rp, theta, thetap, z, zp) for a geometry.

    For the wedge this is the renormalized kernel (reflection series
    minus the flat part); for the other cylindrical geometries it is
    the full kernel.  The periodically identified line is not a
    cylindrical geometry and has no expression in these coordinates.
    """
    match geometry:
        case Minkowski():
            return minkowski_expr
        case Cone(theta1=theta1):
            return cone_expr(theta1)
        case Dowker():
            return dowker_expr
        case Wedge(theta0=theta0, bc=bc):
            return wedge_renormalized_expr(theta0, bc.image_sign)
        case PeriodicLine():
            raise DomainError(
                "the periodic line has no kernel expression in cylindrical "
                "coordinates; use tbar_periodic_line"
            )
        case _:
            raise TypeError(f"not a geometry: {geometry!r}")


def _coords(pair: PointPair) -> dict:
    return {
        "t": pair.t, "r": pair.r, "rp": pair.rp,
        "theta": pair.theta, "thetap": pair.thetap,
        "z": pair.z, "zp": pair.zp,
    }


def tbar_minkowski(pair: PointPair) -> float:
    """Flat-space cylinder kernel, -1/(2 pi^2 d^2) at squared distance d^2."""
    try:
        return minkowski_expr(**_coords(pair))
    except ZeroDivisionError:
        raise SingularPointError("coincident points with t = 0") from None


def tbar_cone(pair: PointPair, theta1: float) -> float:
    """Cylinder kernel on the cone of total angle ``theta1``."""
    try:
        return cone_expr(theta1)(**_coords(pair))
    except ZeroDivisionError:
        raise SingularPointError(
            "pair sits on a singularity of the cone kernel"
        ) from None


def tbar_dowker(pair: PointPair) -> float:
    """Cylinder kernel on the infinite-sheeted covering of the punctured plane.

    The angular offset is not reduced modulo anything; sheets are
    distinguished by the full difference theta - thetap.
    """
    try:
        return dowker_expr(**_coords(pair))
    except ZeroDivisionError:
        raise SingularPointError("coincident points with t = 0") from None


def tbar_wedge_renormalized(
    pair: PointPair,
    theta0: float,
    bc: BoundaryCondition = BoundaryCondition.DIRICHLET,
) -> float:
    """Wedge kernel with the flat part removed.

    Both angles must lie in the closed interval [0, theta0]; boundary
    values are allowed (for Dirichlet walls the full kernel, this plus
    the flat kernel, vanishes there).
    """
    Wedge(theta0, bc)  # validate
    for name, ang in (("theta", pair.theta), ("thetap", pair.thetap)):
        if not 0.0 <= ang <= theta0:
            raise DomainError(
                f"{name}={ang!r} outside the wedge [0, {theta0!r}]"
            )
    try:
        return wedge_renormalized_expr(theta0, bc.image_sign)(**_coords(pair))
    except ZeroDivisionError:
        raise SingularPointError(
            "pair sits on a singularity of the wedge kernel"
        ) from None


# ---------------------------------------------------------------------------
# Image sums with Euler-Maclaurin tails.


@dataclass(frozen=True)
class ImageSum:
    """Result of a truncated image sum.

    ``value`` includes ``tail_correction`` when a tail was requested;
    ``tail_correction`` is then the amount that was added for the
    discarded images, and zero otherwise.
    """

    value: float
    tail_correction: float


def _lorentzian_lattice_tail(
    amplitude: float, width: float, offset: float, spacing: float, m_start: int
) -> float:
    """Euler-Maclaurin tail of sum_n -amplitude / (width^2 + (offset + n spacing)^2).

    Covers both lattice directions, n >= m_start and n <= -m_start.
    Keeps the integral, half the boundary term, and the first
    derivative correction; the next correction is smaller by roughly
    (spacing / (spacing * m_start))^2 / 60 and is dropped.
    """
    a, b, d, lam = amplitude, width, offset, spacing
    w = d + m_start * lam
    v = d - m_start * lam
    fw = -a / (b * b + w * w)
    fv = -a / (b * b + v * v)
    dfw = 2.0 * a * lam * w / (b * b + w * w) ** 2
    dfv = -2.0 * a * lam * v / (b * b + v * v) ** 2
    int_plus = -(a / (b * lam)) * (0.5 * math.pi - math.atan(w / b))
    int_minus = -(a / (b * lam)) * (0.5 * math.pi + math.atan(v / b))
    return (int_plus + 0.5 * fw - dfw / 12.0) + (int_minus + 0.5 * fv - dfv / 12.0)


def _u_over_sinh_float(uv: UVariable) -> float:
    if uv.u < _SMALL_U:
        u2 = uv.u * uv.u
        return 1.0 - u2 / 6.0 + 7.0 / 360.0 * (u2 * u2)
    return uv.u / uv.sinh_u


def tbar_cone_via_images(
    pair: PointPair,
    theta1: float,
    n_images: int = 1000,
    include_tail: bool = True,
) -> ImageSum:
    """Cone kernel as a sum of infinite-sheet kernels over shifted angles.

    Sums the closed-form kernel of the infinite-sheeted covering at
    angular offsets dtheta + n*theta1 for |n| <= n_images, plus an
    Euler-Maclaurin estimate of the discarded tail.  Agrees with
    `tbar_cone` to the tail accuracy; used as an independent check.
    """
    Cone(theta1)  # validate
    if n_images < 1:
        raise ValueError(f"n_images must be >= 1, got {n_images!r}")
    uv = u_of_pair(pair)
    if uv.u == 0.0:
        raise SingularPointError("coincident points with t = 0")
    amp = _u_over_sinh_float(uv) / (_TWO_PI_SQ * pair.r * pair.rp)
    dth = pair.dtheta
    u_sq = uv.u * uv.u
    total = 0.0
    for n in range(-n_images, n_images + 1):
        ang = dth + n * theta1
        total += -amp / (u_sq + ang * ang)
    tail = 0.0
    if include_tail:
        tail = _lorentzian_lattice_tail(amp, uv.u, dth, theta1, n_images + 1)
    return ImageSum(value=total + tail, tail_correction=tail)


@dataclass(frozen=True)
class CartesianSeparation:
    """Separation of two points in Cartesian coordinates plus the cutoff t."""

    t: float
    dx: float
    dy: float = 0.0
    dz: float = 0.0

    def __post_init__(self) -> None:
        for name in ("t", "dx", "dy", "dz"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v!r}")
        if self.t < 0:
            raise ValueError(f"t must be >= 0, got {self.t!r}")


def _transverse_distance(sep: CartesianSeparation) -> float:
    a = math.sqrt(sep.t**2 + sep.dy**2 + sep.dz**2)
    if a == 0.0:
        raise DomainError(
            "periodic line kernel needs a transverse offset or a cutoff t > 0"
        )
    return a


def tbar_periodic_line(
    sep: CartesianSeparation,
    period: float,
    n_images: int = 1000,
    include_tail: bool = True,
) -> ImageSum:
    """Kernel with x identified modulo ``period``, as a flat image sum."""
    PeriodicLine(period)  # validate
    if n_images < 1:
        raise ValueError(f"n_images must be >= 1, got {n_images!r}")
    a = _transverse_distance(sep)
    a_sq = a * a
    amp = 1.0 / _TWO_PI_SQ
    total = 0.0
    for n in range(-n_images, n_images + 1):
        dx = sep.dx + n * period
        total += -amp / (a_sq + dx * dx)
    tail = 0.0
    if include_tail:
        tail = _lorentzian_lattice_tail(amp, a, sep.dx, period, n_images + 1)
    return ImageSum(value=total + tail, tail_correction=tail)


def tbar_periodic_line_closed(sep: CartesianSeparation, period: float) -> float:
    """Closed form of the periodic-line kernel.

    Equals -(1/(2 pi a L)) sinh(2 pi a/L) / (cosh(2 pi a/L) - cos(2 pi dx/L))
    with a the transverse distance (cutoff included) and L the period;
    the image sum above converges to this.
    """
    PeriodicLine(period)  # validate
    a = _transverse_distance(sep)
    x = 2.0 * math.pi * a / period
    y = 2.0 * math.pi * sep.dx / period
    return -_angular_factor(x, y) / (2.0 * math.pi * a * period)


# ---------------------------------------------------------------------------
# Angular mode sum with Bessel quadrature.


@dataclass(frozen=True)
class QuadratureControls:
    """Termination controls for the radial mode quadrature."""

    abs_tol: float = 1e-12
    max_panels: int = 8000


def _quad(f, lo, hi, *, epsabs=1e-13, epsrel=1e-11, limit=300):
    out = integrate.quad(f, lo, hi, full_output=1, epsabs=epsabs, epsrel=epsrel,
                         limit=limit)
    return out[0]


def mode_integral(
    nu: float, r: float, rp: float, zeta: float,
    controls: QuadratureControls | None = None,
) -> float:
    """Radial integral of one angular mode.

    integral_0^inf  w J_nu(w r) J_nu(w rp) K_0(w zeta) dw,

    which has the closed value exp(-nu u) / (2 r rp sinh u).  Done
    panel by panel with panel width 4 pi/(r + rp + zeta) so each
    panel holds at most a couple of Bessel oscillations.  The loop
    stops once the analytic bound (W/zeta) K_1(W zeta) on the
    remaining tail (using |J_nu| <= 1) drops below ``abs_tol``.
    """
    if nu < 0 or r <= 0 or rp <= 0:
        raise DomainError("mode_integral needs nu >= 0 and positive radii")
    if zeta <= 0:
        raise DomainError("mode_integral needs zeta > 0 for convergence")
    c = controls or QuadratureControls()
    width = 4.0 * math.pi / (r + rp + zeta)

    def f(w):
        return w * special.jv(nu, w * r) * special.jv(nu, w * rp) * special.kv(0, w * zeta)

    total = 0.0
    omega = 0.0
    panels = 0
    while True:
        total += _quad(f, omega, omega + width, epsabs=0.01 * c.abs_tol)
        omega += width
        panels += 1
        if (omega / zeta) * special.kv(1, omega * zeta) < c.abs_tol:
            return total
        if panels >= c.max_panels:
            raise ConvergenceError(
                f"mode_integral did not meet abs_tol={c.abs_tol!r} "
                f"within {c.max_panels} panels"
            )


def tbar_modesum_4d(
    pair: PointPair,
    theta1: float,
    *,
    n_terms: int | None = None,
    controls: QuadratureControls | None = None,
) -> float:
    """Cone kernel summed mode by mode, each mode a Bessel quadrature.

    Slow but structurally independent of the closed form.  Requires a
    separation zeta = sqrt(t^2 + (z - z')^2) > 0 (the quadratures do
    not converge on the purely radial section) and a hyperbolic
    separation u >= 0.05 (the number of contributing modes grows like
    theta1/u).  Terms decay like exp(-2 pi n u / theta1).
    """
    Cone(theta1)  # validate
    zeta = math.hypot(pair.t, pair.z - pair.zp)
    if zeta <= 0.0:
        raise DomainError("mode sum needs t > 0 or a z offset")
    uv = u_of_pair(pair)
    if uv.u < 0.05:
        raise DomainError(
            f"mode sum needs u >= 0.05, got u={uv.u!r}; "
            "use the closed form near coincidence"
        )
    a = 2.0 * math.pi / theta1
    decay = a * uv.u
    i0 = mode_integral(0.0, pair.r, pair.rp, zeta, controls)
    if n_terms is None:
        # Geometric tail below 1e-10 of the leading mode.
        n_terms = math.ceil(
            (math.log(1e10) - math.log(-math.expm1(-decay))) / decay
        ) + 1
    dth = pair.dtheta
    total = i0
    cutoff = 1e-10 * abs(i0)
    for n in range(1, n_terms + 1):
        mode = mode_integral(a * n, pair.r, pair.rp, zeta, controls)
        total += 2.0 * math.cos(a * n * dth) * mode
        if 2.0 * mode * math.exp(-decay) / -math.expm1(-decay) < cutoff:
            break
    return -total / (math.pi * theta1)


# ---------------------------------------------------------------------------
# Three-dimensional reduction (no z direction).


def _3d_singular_part(t: float, r: float, rp: float):
    q0 = ((r - rp) ** 2 + t * t) / (4.0 * r * rp)
    if q0 == 0.0:
        raise SingularPointError("coincident points with t = 0")
    return q0, 2.0 * math.asinh(math.sqrt(q0))


def _sinhc_half_sq(v: float) -> float:
    # sinh(v^2/2) / v^2 with its v -> 0 limit.
    if v <= 1e-8:
        return 0.5
    return math.sinh(0.5 * v * v) / (v * v)


def tbar_3d(t: float, r: float, rp: float, dtheta: float, theta1: float) -> float:
    """Cylinder kernel of the cone with no translational direction.

    Equals the z' integral of the four-dimensional kernel and is
    computed as a one-dimensional integral over u from its minimum u0,
    with the substitution u = u0 + v^2 to remove the inverse square
    root at the lower endpoint.  At theta1 = 2 pi this reduces to
    -1/(2 pi d) with d the chordal distance in the plane.
    """
    Cone(theta1)  # validate
    if r <= 0 or rp <= 0:
        raise DomainError("radii must be positive")
    if t < 0:
        raise DomainError("t must be >= 0")
    q0, u0 = _3d_singular_part(t, r, rp)
    a = 2.0 * math.pi / theta1

    def f(v):
        w = 0.5 * v * v
        sc = _sinhc_half_sq(v)
        g = _angular_factor(a * (u0 + v * v), a * dtheta)
        return 2.0 * g / math.sqrt(2.0 * math.sinh(u0 + w) * sc)

    upper = math.sqrt(80.0)
    val = _quad(f, 0.0, 1.0) + _quad(f, 1.0, upper)
    return -val / (math.pi * theta1 * math.sqrt(2.0 * r * rp))


def tbar_3d_theta_average(t: float, r: float, rp: float, theta1: float) -> float:
    """Angular average of `tbar_3d` over one full cone period.

    The average has a closed form in terms of the Legendre function of
    the second kind of degree -1/2, evaluated here through the same
    endpoint-regularized integral used by `tbar_3d`.
    """
    Cone(theta1)  # validate
    if r <= 0 or rp <= 0:
        raise DomainError("radii must be positive")
    if t < 0:
        raise DomainError("t must be >= 0")
    q0, u0 = _3d_singular_part(t, r, rp)

    def f(v):
        w = 0.5 * v * v
        return 1.0 / math.sqrt(math.sinh(u0 + w) * _sinhc_half_sq(v))

    upper = math.sqrt(80.0)
    q = _quad(f, 0.0, 1.0) + _quad(f, 1.0, upper)
    return -q / (math.pi * theta1 * math.sqrt(r * rp))


# Direct textbook variants of the flat kernel, kept for cross checks.

def _tbar_minkowski_cartesian(pair: PointPair) -> float:
    dx = pair.r * math.cos(pair.theta) - pair.rp * math.cos(pair.thetap)
    dy = pair.r * math.sin(pair.theta) - pair.rp * math.sin(pair.thetap)
    dz = pair.z - pair.zp
    return -1.0 / (_TWO_PI_SQ * (pair.t**2 + dx * dx + dy * dy + dz * dz))


def _tbar_minkowski_hyperbolic(pair: PointPair) -> float:
    uv = u_of_pair(pair)
    return -1.0 / (
        2.0 * _TWO_PI_SQ * pair.r * pair.rp * (uv.cosh_u - math.cos(pair.dtheta))
    )
