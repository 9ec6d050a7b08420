"""Defining series and solvers for the two critical condenser levels.

Two series in R decide everything: the all-coefficients-real case uses
sum 4R^n/(1+R^{2n}) and the general case the parity-split variant with
1-R^{2n} under the odd terms.  Both are strictly increasing from 0 and blow
up at R = 1, so each crosses 1 at a single level; below that level the
coefficient-majorant sum of every unit-bounded function stays below 1 on the
segment, above it the extremal families push past 1.  The solvers bisect on
the series with rigorous truncation-tail accounting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coefficients import FaberSeries, boundary_values
from .condenser import faber_sup_norm

TRUNCATION_CAP = 10_000
SOLVER_TOL_FLOOR = 1e-14
KINDS = ("real_coefficients", "general")


class DivergenceError(ValueError):
    """Series parameter at or beyond the unit radius of convergence."""


def _series_eval(R: float, tol: float, parity_split: bool):
    """(value, truncation order, tail bound) with tail bound < tol/2.

    Terms are 4R^n/(1 +- R^{2n}); each is below 4R^n/(1-R^2) in the split
    case and 4R^n outright otherwise, giving geometric tail bounds
    4R^{N+1}/((1-R)(1-R^2)) resp. 4R^{N+1}/(1-R).  Summation is compensated.
    The cap on N is never reached for R <= 0.5; past it the achieved tail
    bound is reported as-is.
    """
    if R >= 1.0:
        raise DivergenceError(f"series diverges for R >= 1, got R={R}")
    if R < 0.0:
        raise ValueError(f"series parameter must be nonnegative, got R={R}")
    if R == 0.0:
        return 0.0, 0, 0.0
    terms = []
    Rn = 1.0
    n = 0
    tail = math.inf
    while n < TRUNCATION_CAP:
        n += 1
        Rn *= R
        R2n = Rn * Rn
        denom = (1.0 - R2n) if (parity_split and n % 2 == 1) else (1.0 + R2n)
        terms.append(4.0 * Rn / denom)
        tail = 4.0 * Rn * R / (1.0 - R)
        if parity_split:
            tail /= 1.0 - R * R
        if tail < tol / 2.0:
            break
    return math.fsum(terms), n, tail


def series_real(R: float, tol: float = 1e-12) -> float:
    """sum_{n>=1} 4R^n/(1+R^{2n}), truncated with tail bound below tol."""
    return _series_eval(R, tol, parity_split=False)[0]


def series_general(R: float, tol: float = 1e-12) -> float:
    """Parity-split series: even terms 4R^n/(1+R^{2n}), odd 4R^n/(1-R^{2n})."""
    return _series_eval(R, tol, parity_split=True)[0]


@dataclass(frozen=True)
class RadiusSolution:
    kind: str
    value: float
    bracket_lo: float
    bracket_hi: float
    truncation_order: int
    tail_bound: float
    residual: float

    def to_jsonable(self) -> dict:
        return {
            "kind": self.kind,
            "value": self.value,
            "bracket": [self.bracket_lo, self.bracket_hi],
            "truncation_order": self.truncation_order,
            "tail_bound": self.tail_bound,
            "residual": self.residual,
        }


def solve_radius(kind: str = "real_coefficients", tol: float = 1e-12) -> RadiusSolution:
    """Bisect the defining series against 1.

    The series is strictly increasing in R (every term is), so plain
    bisection from the bracket [1e-6, 0.5] converges; success requires both
    bracket width and residual below tol.  Series evaluations carry tail
    bounds below tol/4 so the residual is meaningful at the tol scale.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if tol < SOLVER_TOL_FLOOR:
        raise ValueError(f"tolerance below solver floor {SOLVER_TOL_FLOOR}")
    parity = kind == "general"

    def residual_at(R: float) -> float:
        return _series_eval(R, tol / 2.0, parity)[0] - 1.0

    lo, hi = 1e-6, 0.5
    f_lo, f_hi = residual_at(lo), residual_at(hi)
    if not (f_lo < 0.0 < f_hi):
        raise RuntimeError("initial bracket does not straddle the root")
    mid, f_mid = lo, f_lo
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        f_mid = residual_at(mid)
        if f_mid < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < tol and abs(f_mid) < tol:
            break
    else:
        raise RuntimeError("bisection failed to converge within 200 iterations")
    _, order, tail = _series_eval(mid, tol / 2.0, parity)
    return RadiusSolution(
        kind=kind,
        value=mid,
        bracket_lo=lo,
        bracket_hi=hi,
        truncation_order=order,
        tail_bound=tail,
        residual=f_mid,
    )


def rho_from_R(R: float) -> float:
    """Ellipse parameter 1/R from the interior level; inverse of R_from_rho."""
    if not 0.0 < R < 1.0:
        raise ValueError(f"interior level must lie in (0,1), got {R}")
    return 1.0 / R


def R_from_rho(rho: float) -> float:
    if not rho > 1.0:
        raise ValueError(f"ellipse parameter must exceed 1, got {rho}")
    return 1.0 / rho


def bohr_sum(s: FaberSeries, r: float) -> float:
    """|a_0| + sum |a_n| * (sup of basis element n on level r)."""
    if not s.R <= r <= 1.0:
        raise ValueError(f"level r={r} outside [R, 1] = [{s.R}, 1]")
    parts = [abs(complex(s.coeffs[0]))]
    parts += [
        abs(complex(s.coeffs[n])) * faber_sup_norm(n, r, s.R)
        for n in range(1, s.degree + 1)
    ]
    return math.fsum(parts)


@dataclass(frozen=True)
class BohrDecision:
    majorant_sum: float  # bohr_sum at the inner level r = R
    holds: bool


def bohr_decision(s: FaberSeries) -> BohrDecision:
    """Does the coefficient-majorant sum stay within 1 for some level?

    The sum is increasing in r, so "exists r in [R,1] with sum <= 1" is
    decided at r = R, where each basis sup-norm is smallest (2R^n).  The
    caller certifies |f| <= 1 on the ellipse (see certify_unit_bound).
    """
    value = bohr_sum(s, s.R)
    return BohrDecision(majorant_sum=value, holds=value <= 1.0)


def certify_unit_bound(s: FaberSeries, samples: int = 8192) -> bool:
    """Sampling certificate that |f| < 1 on the closed ellipse.

    Max modulus on the boundary grid, confirmed on a doubled grid — the same
    pattern as the positivity certificate (|f| attains its max on the
    boundary).
    """
    m1 = float(abs(boundary_values(s, samples)).max())
    m2 = float(abs(boundary_values(s, 2 * samples)).max())
    return max(m1, m2) < 1.0
