"""Second-order forward-mode differentiation on a fixed coordinate set.

The stress tensor needs values, gradients, and full Hessians of the
two-point kernels with respect to the seven coordinates of a point
pair.  A `Jet2` carries (value, gradient, Hessian) through arithmetic
and the handful of elementary functions the kernels use.  Kernel
expressions are written once against the dispatch functions below,
which pass plain floats through to `math`, so the same code path
produces values and derivatives.

Hessians are stored as full symmetric (m, m) arrays.  Every operation
builds symmetric updates as ``cross + cross.T``, so symmetry is exact
in floating point, not merely approximate.

Branching on the magnitude of a jet must go through `value_of`; jets
deliberately do not define ordering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

# Coordinate order shared with the stress assembly.  Slot k of every
# gradient and Hessian refers to COORDS[k].
COORDS = ("t", "r", "rp", "theta", "thetap", "z", "zp")
IT, IR, IRP, ITHETA, ITHETAP, IZ, IZP = range(len(COORDS))


@dataclass(frozen=True, eq=False)
class Jet2:
    """Value, gradient, and Hessian of one scalar quantity."""

    value: float
    grad: np.ndarray
    hess: np.ndarray

    @classmethod
    def constant(cls, value: float, m: int) -> "Jet2":
        return cls(float(value), np.zeros(m), np.zeros((m, m)))

    @classmethod
    def variable(cls, value: float, index: int, m: int) -> "Jet2":
        grad = np.zeros(m)
        grad[index] = 1.0
        return cls(float(value), grad, np.zeros((m, m)))

    def _compose(self, f0: float, f1: float, f2: float) -> "Jet2":
        """Chain rule for an outer function with derivatives f1, f2 at self."""
        outer = np.outer(self.grad, self.grad)
        return Jet2(f0, f1 * self.grad, f1 * self.hess + f2 * outer)

    def _promote(self, other) -> "Jet2 | None":
        if isinstance(other, Jet2):
            return other
        if isinstance(other, (int, float)):
            return Jet2.constant(other, self.grad.shape[0])
        return None

    def __add__(self, other) -> "Jet2":
        o = self._promote(other)
        if o is None:
            return NotImplemented
        return Jet2(self.value + o.value, self.grad + o.grad, self.hess + o.hess)

    __radd__ = __add__

    def __neg__(self) -> "Jet2":
        return Jet2(-self.value, -self.grad, -self.hess)

    def __sub__(self, other) -> "Jet2":
        o = self._promote(other)
        if o is None:
            return NotImplemented
        return Jet2(self.value - o.value, self.grad - o.grad, self.hess - o.hess)

    def __rsub__(self, other) -> "Jet2":
        o = self._promote(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> "Jet2":
        o = self._promote(other)
        if o is None:
            return NotImplemented
        cross = np.outer(self.grad, o.grad)
        return Jet2(
            self.value * o.value,
            self.value * o.grad + o.value * self.grad,
            self.value * o.hess + o.value * self.hess + cross + cross.T,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Jet2":
        o = self._promote(other)
        if o is None:
            return NotImplemented
        val = self.value / o.value
        grad = (self.grad - val * o.grad) / o.value
        cross = np.outer(grad, o.grad)
        hess = (self.hess - val * o.hess - cross - cross.T) / o.value
        return Jet2(val, grad, hess)

    def __rtruediv__(self, other) -> "Jet2":
        o = self._promote(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n) -> "Jet2":
        v = self.value
        if isinstance(n, int):
            # Valid at v = 0 for n >= 2 (0.0 ** 0 == 1.0 covers f2 there).
            return self._compose(
                v**n, n * v ** (n - 1), n * (n - 1) * v ** (n - 2)
            )
        if v <= 0.0:
            raise DomainError(f"jet ** {n!r} requires a positive base, got {v!r}")
        return self._compose(
            v**n, n * v ** (n - 1.0), n * (n - 1.0) * v ** (n - 2.0)
        )


def value_of(x) -> float:
    """Plain float value of a jet or number; use this for branching."""
    return x.value if isinstance(x, Jet2) else float(x)


def exp(x):
    if isinstance(x, Jet2):
        e = math.exp(x.value)
        return x._compose(e, e, e)
    return math.exp(x)


def log(x):
    if isinstance(x, Jet2):
        v = x.value
        if v <= 0.0:
            raise DomainError(f"log of a jet requires a positive value, got {v!r}")
        return x._compose(math.log(v), 1.0 / v, -1.0 / (v * v))
    return math.log(x)


def sqrt(x):
    if isinstance(x, Jet2):
        v = x.value
        if v <= 0.0:
            raise DomainError(
                f"sqrt of a jet requires a positive value, got {v!r}"
            )
        s = math.sqrt(v)
        return x._compose(s, 0.5 / s, -0.25 / (s * v))
    return math.sqrt(x)


def sinh(x):
    if isinstance(x, Jet2):
        s, c = math.sinh(x.value), math.cosh(x.value)
        return x._compose(s, c, s)
    return math.sinh(x)


def cosh(x):
    if isinstance(x, Jet2):
        s, c = math.sinh(x.value), math.cosh(x.value)
        return x._compose(c, s, c)
    return math.cosh(x)


def asinh(x):
    if isinstance(x, Jet2):
        v = x.value
        w = math.sqrt(1.0 + v * v)
        return x._compose(math.asinh(v), 1.0 / w, -v / w**3)
    return math.asinh(x)


def sin(x):
    if isinstance(x, Jet2):
        s, c = math.sin(x.value), math.cos(x.value)
        return x._compose(s, c, -s)
    return math.sin(x)


def cos(x):
    if isinstance(x, Jet2):
        s, c = math.sin(x.value), math.cos(x.value)
        return x._compose(c, -s, -c)
    return math.cos(x)


def atan(x):
    if isinstance(x, Jet2):
        v = x.value
        d = 1.0 + v * v
        return x._compose(math.atan(v), 1.0 / d, -2.0 * v / (d * d))
    return math.atan(x)


def lift(pair, active: tuple[str, ...] = COORDS) -> dict:
    """Turn a point pair into a dict of jets keyed by coordinate name.

    Coordinates in ``active`` become independent variables in the slot
    order of ``active``; the rest become constants.  The pair is read
    by attribute name, so anything with t, r, rp, theta, thetap, z, zp
    attributes works.
    """
    m = len(active)
    out = {}
    for name in COORDS:
        val = float(getattr(pair, name))
        if name in active:
            out[name] = Jet2.variable(val, active.index(name), m)
        else:
            out[name] = Jet2.constant(val, m)
    return out
