"""Geometry of the elliptic condenser.

The condenser is the segment [-1, 1] together with the confocal ellipses
around it.  Everything here is phrased in the mapped coordinate w: the
exterior conformal map sends the complement of the segment onto the outside
of a circle, the segment itself corresponds to modulus R and the outer
ellipse boundary to modulus 1.  The basis polynomials take the closed form
w^n + R^{2n} w^{-n} in that coordinate, which makes norms and level sets
one-liners.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class EllipticCondenser:
    """Interior level parameter R in (0,1); rho = 1/R is the ellipse parameter."""

    R: float
    rho: float = field(init=False)

    def __post_init__(self) -> None:
        if not 0.0 < self.R < 1.0:
            raise ValueError(f"condenser parameter must lie in (0,1), got {self.R}")
        object.__setattr__(self, "rho", 1.0 / self.R)


def zhukovskii(w: complex) -> complex:
    """Averaging map (w + 1/w)/2; collapses the unit circle onto [-1, 1]."""
    if w == 0:
        raise ValueError("zhukovskii is undefined at w = 0")
    return (w + 1.0 / w) / 2.0


def exterior_map(z: complex) -> complex:
    """Inverse of ``zhukovskii`` with image modulus >= 1.

    Solves w^2 - 2zw + 1 = 0 and returns the root of modulus >= 1.  The two
    roots are reciprocal, so the product of their moduli is 1; picking the
    larger one is stable if computed as z + sqrt(z-1)sqrt(z+1) with the sign
    chosen to avoid cancellation.  On the segment itself both roots have
    modulus 1; the tie goes to the root with nonnegative imaginary part, so
    arguments land in [0, pi].
    """
    z = complex(z)
    # sqrt(z^2 - 1) via the two-factor form keeps accuracy near the branch
    # points +-1 where z*z - 1 cancels.
    s = cmath.sqrt(z - 1.0) * cmath.sqrt(z + 1.0)
    w1 = z + s
    w2 = z - s
    a1, a2 = abs(w1), abs(w2)
    if math.isclose(a1, a2, rel_tol=1e-13):
        # z on the segment: both roots unimodular, conjugate pair.
        return w1 if w1.imag >= 0 else w2
    w = w1 if a1 > a2 else w2
    # Reciprocal-root cleanup: if the larger root still came out below 1 by
    # rounding, renormalizing through the other root costs nothing.
    if abs(w) < 1.0:
        w = 1.0 / (w2 if w is w1 else w1)
    return w


def faber_eval(n: int, w: complex, R: float) -> complex:
    """Basis element at index n in mapped coordinates: w^n + R^{2n} w^{-n}.

    Index 0 is the constant 1 (not 2: the series puts weight 1 on a_0).
    """
    if n < 0:
        raise ValueError("basis index must be nonnegative")
    if n == 0:
        return 1.0 + 0.0j
    if w == 0:
        raise ValueError("basis element undefined at w = 0 for n >= 1")
    return w**n + (R ** (2 * n)) * w ** (-n)


def faber_sup_norm(n: int, r: float, R: float) -> float:
    """Sup of |w^n + R^{2n} w^{-n}| over the circle |w| = r.

    The maximum is attained at w = r (positive real axis): both terms align
    in phase there, giving r^n + R^{2n} r^{-n}.  At r = R this is 2R^n, the
    norm on the segment itself.
    """
    if n == 0:
        return 1.0
    if n < 0:
        raise ValueError("basis index must be nonnegative")
    if not R <= r <= 1.0:
        raise ValueError(f"level parameter r={r} outside [R, 1] = [{R}, 1]")
    return r**n + (R ** (2 * n)) * r ** (-n)


def boundary_point(theta: float, r: float, cond: EllipticCondenser) -> complex:
    """Point of the level curve of parameter r at angle theta, in the plane.

    The level circle |w| = r is rescaled by 1/R and pushed through the
    averaging map; r = R gives cos(theta) on the segment, r = 1 the outer
    ellipse with semi-axes (rho +- 1/rho)/2.
    """
    if r < cond.R:
        raise ValueError(f"level parameter r={r} below the segment level R={cond.R}")
    u = (r / cond.R) * cmath.exp(1j * theta)
    return zhukovskii(u)


def eccentricity(rho: float) -> float:
    """Eccentricity 2*rho/(1+rho^2) of the confocal ellipse of parameter rho."""
    if rho < 1.0:
        raise ValueError("ellipse parameter must be >= 1")
    return 2.0 * rho / (1.0 + rho * rho)
