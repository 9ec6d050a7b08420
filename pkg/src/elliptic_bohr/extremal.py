"""Extremal families on the ellipse and the optimality side of the story.

Two one-parameter families of unit-bounded functions — ``phi1`` with all
coefficients real, ``phi2`` with the alternating quarter-turn phases that
defeat real-coefficient sharpenings — push their coefficient-majorant sums
arbitrarily close to (and, past the critical level, beyond) the unit bound
as the parameter r approaches 1.  Everything here is built from lacunary
resummation: each family is a double series over the basis index n and a
binomial-weight index j, and summing n first in closed geometric form turns
the r -> 1 evaluations (hopeless term-by-term at r = 1 - 2^-16) into a few
dozen exactly-summed geometric pieces with an explicit j-tail bound.

The module also houses the optimality witness: the limiting necessary
condition for a unit coefficient-majorant bound, evaluated on a descending
grid shrinking to the inner level, whose infimum reproduces the defining
series of the radius module and flips sign exactly at the critical level.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, ClassVar

import numpy as np

from .coefficients import HypothesisError, InequalityEntry, InequalityReport
from .radius import KINDS, series_general, series_real

FAMILIES = ("phi1", "phi2")
FAMILY_KIND = {"phi1": "real_coefficients", "phi2": "general"}
#: Boundary point each family's argmax analysis distinguishes; the partial-sum
#: boundedness check only makes sense when the argmax stays away from it.
FAMILY_SPECIAL_POINT = {"phi1": 1.0 + 0.0j, "phi2": 1.0j}

ARGMAX_GRID_POINTS = 4096
ARGMAX_ANGLE_TOL = 1e-12
FINAL_ASYMPTOTIC_THRESHOLD = 1e-4
BOUNDEDNESS_CAP_FACTOR = 10.0
BOUNDEDNESS_GATE_DISTANCE = 0.1
WITNESS_GRID_DEPTH = 40
_J_CAP = 4096
_N_CAP = 200_000


def _geom(q):
    """sum_{n>=1} q^n."""
    return q / (1.0 - q)


def _geom_even(q):
    """sum over even n>=2 of q^n."""
    return q * q / (1.0 - q * q)


def _geom_odd(q):
    """sum over odd n>=1 of q^n."""
    return q / (1.0 - q * q)


def _resummed(term: Callable[[int], object], R: float, tol: float):
    """Sum term(j) over j with a uniform geometric-in-R^2 tail bound.

    Every series in this module has j-th term bounded by
    4(j+1)R^{2j}/(1-R^2) once j >= 1 (at most four geometric atoms whose
    arguments all have modulus <= R^{2j}, binomial weight at most j+1), so
    the remainder past J is <= 4(J+2)R^{2(J+1)}/(1-R^2)^3.  The j = 0 term,
    which carries the 1/(1-r) blow-up, is always summed exactly.
    """
    shrink = (1.0 - R * R) ** 3
    total = 0.0
    for j in range(_J_CAP):
        total = total + term(j)
        tail = 4.0 * (j + 2) * R ** (2 * (j + 1)) / shrink
        if tail < tol:
            return total
    raise RuntimeError("resummation did not reach tolerance within the j cap")


def _require_window(r: float, R: float) -> None:
    if not 0.0 <= R < 1.0:
        raise HypothesisError(f"inner level must lie in [0,1), got R={R}")
    if not R < r < 1.0:
        raise HypothesisError(f"parameter r={r} outside the window ({R}, 1)")


def _require_outside(z, R: float) -> None:
    if not np.all(np.abs(z) > R):
        raise HypothesisError(f"evaluation point inside the inner level R={R}")


def gamma_factor(r: float, R: float, tol: float = 1e-12) -> float:
    """Normalizer of the real-coefficient family.

    sum_{n>=1} (r^n + R^{2n} r^-n) / (1 + R^{2n}), resummed over the
    expansion 1/(1+q) = sum_j (-q)^j into geometric pieces.  Behaves like
    r/(1-r) as r -> 1; the excess over that pole is the quantity the
    asymptotics check watches.
    """
    _require_window(r, R)

    def term(j):
        q = R ** (2 * j)
        return (-1.0) ** j * (_geom(q * r) + _geom(q * R * R / r))

    return _resummed(term, R, tol)


def theta_factor(r: float, R: float, tol: float = 1e-12) -> float:
    """Normalizer of the general family (parity-split weights).

    Even terms (r^n + R^{2n} r^-n)/(1 + R^{2n}), odd terms
    (r^n - R^{2n} r^-n)/(1 - R^{2n}); same r/(1-r) pole as gamma_factor.
    """
    _require_window(r, R)

    def term(j):
        q = R ** (2 * j)
        sgn = (-1.0) ** j
        even = sgn * (_geom_even(q * r) + _geom_even(q * R * R / r))
        odd = _geom_odd(q * r) - _geom_odd(q * R * R / r)
        return even + odd

    return _resummed(term, R, tol)


def phi1_core(r: float, z, R: float, tol: float = 1e-12):
    """Coefficient series of the real family at z (scalar or array).

    sum_{n>=1} (r^n + R^{2n} r^-n)/(1+R^{2n})^2 * (z^n + R^{2n} z^-n),
    resummed with 1/(1+q)^2 = sum_j (-1)^j (j+1) q^j.  Equals gamma_factor
    at z = 1 (telescoping across j, not term-by-term).
    """
    _require_window(r, R)
    _require_outside(z, R)
    R2 = R * R

    def term(j):
        q = R ** (2 * j)
        w = (-1.0) ** j * (j + 1)
        v1 = q * r * z
        v2 = q * R2 * r / z
        v3 = q * R2 * z / r
        v4 = q * R2 * R2 / (r * z)
        return w * (_geom(v1) + _geom(v2) + _geom(v3) + _geom(v4))

    return _resummed(term, R, tol)


def phi2_core(r: float, z, R: float, tol: float = 1e-12):
    """Coefficient series of the general family at z (scalar or array).

    Even basis indices enter with weight (r^n + R^{2n}r^-n)/(1+R^{2n})^2 and
    phase i^n, odd ones are subtracted with weight
    (r^n - R^{2n}r^-n)/(1-R^{2n})^2 and phase i^n.  Equals theta_factor at
    z = i, again by telescoping.
    """
    _require_window(r, R)
    _require_outside(z, R)
    R2 = R * R

    def term(j):
        q = R ** (2 * j)
        u1 = 1j * q * r * z
        u2 = 1j * q * R2 * r / z
        u3 = 1j * q * R2 * z / r
        u4 = 1j * q * R2 * R2 / (r * z)
        even = (-1.0) ** j * (
            _geom_even(u1) + _geom_even(u2) + _geom_even(u3) + _geom_even(u4)
        )
        odd = _geom_odd(u1) + _geom_odd(u2) - _geom_odd(u3) - _geom_odd(u4)
        return (j + 1) * (even - odd)

    return _resummed(term, R, tol)


def phi1_eval(r: float, z, R: float, tol: float = 1e-12):
    """Value of the real-coefficient family: -r + (1+r)/gamma * core."""
    return -r + (1.0 + r) * phi1_core(r, z, R, tol) / gamma_factor(r, R, tol)


def phi2_eval(r: float, z, R: float, tol: float = 1e-12):
    """Value of the general family: -r + (1+r)/theta * core."""
    return -r + (1.0 + r) * phi2_core(r, z, R, tol) / theta_factor(r, R, tol)


_FAMILY_EVAL = {"phi1": phi1_eval, "phi2": phi2_eval}
_FAMILY_CORE = {"phi1": phi1_core, "phi2": phi2_core}
_FAMILY_NORMALIZER = {"phi1": gamma_factor, "phi2": theta_factor}


def weighted_coefficient_sum(family: str, r: float, R: float, tol: float = 1e-12) -> float:
    """sum over n of |n-th coefficient weight| * (basis sup-norm at level R).

    The family's n-th coefficient (before the (1+r)/normalizer prefactor)
    has modulus (r^n + R^{2n}r^-n)/(1+R^{2n})^2 or, at odd indices of the
    general family, (r^n - R^{2n}r^-n)/(1-R^{2n})^2; the basis sup-norm at
    the inner level is 2R^n.  Resummed like the cores.
    """
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")
    _require_window(r, R)
    R2 = R * R

    if family == "phi1":

        def term(j):
            q = R ** (2 * j)
            w = (-1.0) ** j * (j + 1)
            return 2.0 * w * (_geom(q * r * R) + _geom(q * R2 * R / r))

    else:

        def term(j):
            q = R ** (2 * j)
            even = (-1.0) ** j * (_geom_even(q * r * R) + _geom_even(q * R2 * R / r))
            odd = _geom_odd(q * r * R) - _geom_odd(q * R2 * R / r)
            return 2.0 * (j + 1) * (even + odd)

    return _resummed(term, R, tol)


def _golden_max(g: Callable[[float], float], a: float, b: float, tol: float) -> float:
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    gc, gd = g(c), g(d)
    while b - a > tol:
        if gc < gd:
            a, c, gc = c, d, gd
            d = a + inv_phi * (b - a)
            gd = g(d)
        else:
            b, d, gd = d, c, gc
            c = b - inv_phi * (b - a)
            gc = g(c)
    return 0.5 * (a + b)


def argmax_on_circle(family: str, r: float, R: float, tol: float = 1e-12) -> complex:
    """Unit-circle point maximizing |family(r, .)|.

    Grid scan (4096 points, first maximum wins, so ties resolve to the
    smallest nonnegative argument) followed by golden-section refinement of
    the angle to 1e-12; the refined point is kept only if it genuinely
    improves on the grid value.
    """
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")
    _require_window(r, R)
    evaluate = _FAMILY_EVAL[family]
    thetas = np.linspace(0.0, 2.0 * math.pi, ARGMAX_GRID_POINTS, endpoint=False)
    values = np.abs(evaluate(r, np.exp(1j * thetas), R, tol))
    best = int(np.argmax(values))
    theta0 = float(thetas[best])
    grid_value = float(values[best])
    spacing = 2.0 * math.pi / ARGMAX_GRID_POINTS

    def magnitude(theta: float) -> float:
        return abs(evaluate(r, cmath.exp(1j * theta), R, tol))

    refined = _golden_max(magnitude, theta0 - spacing, theta0 + spacing, ARGMAX_ANGLE_TOL)
    if magnitude(refined) <= grid_value * (1.0 + 1e-14):
        refined = theta0
    return cmath.exp(1j * (refined % (2.0 * math.pi)))


@dataclass(frozen=True)
class TraceStep:
    k: int
    r_k: float
    z_k: complex
    sup_value: float
    metric: float
    alpha_or_beta: float
    bohr_sum_normalized: float


@dataclass(frozen=True)
class ExtremalTrace:
    """Per-step record of a family's approach to the unit bound as r -> 1."""

    family: str
    R: float
    steps: tuple

    CSV_COLUMNS: ClassVar[tuple] = (
        "k",
        "r_k",
        "re_zk",
        "im_zk",
        "sup_value",
        "metric",
        "alpha_or_beta",
        "bohr_sum_normalized",
    )

    def csv_rows(self):
        return [
            (
                s.k,
                s.r_k,
                s.z_k.real,
                s.z_k.imag,
                s.sup_value,
                s.metric,
                s.alpha_or_beta,
                s.bohr_sum_normalized,
            )
            for s in self.steps
        ]

    def to_jsonable(self) -> dict:
        return {
            "family": self.family,
            "R": self.R,
            "steps": [
                dict(zip(self.CSV_COLUMNS, row, strict=True)) for row in self.csv_rows()
            ],
        }


def _alpha_or_beta(family: str, r: float, z: complex, R: float, tol: float) -> float:
    """Excess of the core's real part over its inner-level-free analog.

    For phi1 the comparison series is sum r^n z^n = rz/(1-rz); for phi2 it
    is the alternating sum of (i r z)^n, i.e. the geometric series of
    -i r z.  Both excesses vanish as r -> 1 when the argmax stays away from
    the family's special point.
    """
    core = _FAMILY_CORE[family](r, z, R, tol)
    if family == "phi1":
        comparison = _geom(r * z)
    else:
        comparison = _geom(-1j * r * z)
    return float((core - comparison).real)


def extremal_trace(
    family: str,
    R: float,
    k_min: int = 4,
    k_max: int = 16,
    tol: float = 1e-12,
) -> ExtremalTrace:
    """Trace the family along r_k = 1 - 2^-k, k = k_min..k_max.

    Each step records the circle argmax z_k, the sup there, the normalized
    square-excess (sup^2 - 1)/(1 - r_k) that must sink to 0, the excess
    alpha/beta of the core over its comparison series, and the family's
    coefficient-majorant sum at the inner level normalized by the sup.
    """
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")
    if not 1 <= k_min <= k_max:
        raise ValueError(f"need 1 <= k_min <= k_max, got {k_min}..{k_max}")
    if not 0.0 <= R < 1.0 - 2.0 ** (-k_min):
        raise HypothesisError(
            f"inner level R={R} must stay below the first trace level 1-2^-{k_min}"
        )
    evaluate = _FAMILY_EVAL[family]
    normalizer = _FAMILY_NORMALIZER[family]
    steps = []
    for k in range(k_min, k_max + 1):
        r = 1.0 - 2.0 ** (-k)
        z = argmax_on_circle(family, r, R, tol)
        sup = abs(evaluate(r, z, R, tol))
        metric = (sup * sup - 1.0) / (1.0 - r)
        excess = _alpha_or_beta(family, r, z, R, tol)
        majorant = r + (1.0 + r) * weighted_coefficient_sum(family, r, R, tol) / normalizer(
            r, R, tol
        )
        steps.append(
            TraceStep(
                k=k,
                r_k=r,
                z_k=z,
                sup_value=sup,
                metric=metric,
                alpha_or_beta=excess,
                bohr_sum_normalized=majorant / sup,
            )
        )
    return ExtremalTrace(family=family, R=R, steps=tuple(steps))


def check_normalizer_asymptotics(
    R: float,
    k_min: int = 4,
    k_max: int = 16,
    tol: float = 1e-12,
) -> InequalityReport:
    """Numerically exhibit the limits behind the extremal construction.

    Four sequences must sink in magnitude along r_k = 1 - 2^-k: the
    normalizer excesses eps1 = gamma - r/(1-r) and eps2 = theta - r/(1-r),
    and the per-family core excesses alpha_k, beta_k at the traced argmax.
    Entries demand stepwise non-increase plus a final value below 1e-4, and
    — when the argmax stays away from the family's special point — that the
    core magnitude never exceeds 10x its maximum over the first four steps.
    """
    if not 0.0 <= R < 1.0 - 2.0 ** (-k_min):
        raise HypothesisError(
            f"inner level R={R} must stay below the first trace level 1-2^-{k_min}"
        )
    entries = []
    levels = [1.0 - 2.0 ** (-k) for k in range(k_min, k_max + 1)]

    for factor in (gamma_factor, theta_factor):
        excesses = [abs(factor(r, R, tol) - r / (1.0 - r)) for r in levels]
        for i in range(1, len(excesses)):
            entries.append(
                InequalityEntry(n=k_min + i, lhs=excesses[i], rhs=excesses[i - 1])
            )
        entries.append(
            InequalityEntry(n=k_max, lhs=excesses[-1], rhs=FINAL_ASYMPTOTIC_THRESHOLD)
        )

    for family in FAMILIES:
        trace = extremal_trace(family, R, k_min=k_min, k_max=k_max, tol=tol)
        excesses = [abs(s.alpha_or_beta) for s in trace.steps]
        for i in range(1, len(excesses)):
            entries.append(
                InequalityEntry(n=k_min + i, lhs=excesses[i], rhs=excesses[i - 1])
            )
        entries.append(
            InequalityEntry(n=k_max, lhs=excesses[-1], rhs=FINAL_ASYMPTOTIC_THRESHOLD)
        )
        special = FAMILY_SPECIAL_POINT[family]
        if abs(trace.steps[-1].z_k - special) > BOUNDEDNESS_GATE_DISTANCE:
            cores = [
                abs(_FAMILY_CORE[family](s.r_k, s.z_k, R, tol)) for s in trace.steps
            ]
            cap = BOUNDEDNESS_CAP_FACTOR * max(cores[: min(4, len(cores))])
            for i, magnitude in enumerate(cores):
                entries.append(InequalityEntry(n=k_min + i, lhs=magnitude, rhs=cap))

    return InequalityReport(family="normalizer_asymptotics", R=R, entries=tuple(entries))


@dataclass(frozen=True)
class OptimalityWitness:
    kind: str
    R: float
    infimum: float
    series_value: float
    witnessed_failure: bool

    def to_jsonable(self) -> dict:
        return {
            "kind": self.kind,
            "R": self.R,
            "infimum": self.infimum,
            "series_value": self.series_value,
            "witnessed_failure": self.witnessed_failure,
        }


def _limit_candidate(kind: str, r1: float, R: float, tol: float) -> float:
    """Left side of the limiting necessary condition at evaluation level r1.

    sum over n of 2(r1^n + R^{2n} r1^-n) / (1 + R^{2n}), with the odd-index
    denominators flipped to 1 - R^{2n} for the general kind.  Summed
    directly: r1 stays at or below (1+R)/2 on the witness grid, so the
    terms decay geometrically; tail after N is below
    4 r1^{N+1} / ((1-r1)(1-R^2)).
    """
    terms = []
    r1n = 1.0
    qn = 1.0
    q = R * R / r1
    R2n = 1.0
    R2 = R * R
    for n in range(1, _N_CAP):
        r1n *= r1
        qn *= q
        R2n *= R2
        denom = (1.0 - R2n) if (kind == "general" and n % 2 == 1) else (1.0 + R2n)
        terms.append(2.0 * (r1n + qn) / denom)
        tail = 4.0 * r1n * r1 / ((1.0 - r1) * (1.0 - R2))
        if tail < tol / 2.0:
            return math.fsum(terms)
    raise RuntimeError("witness series did not reach tolerance within the term cap")


def optimality_witness(kind: str, R: float, tol: float = 1e-12) -> OptimalityWitness:
    """Decide whether the unit majorant bound already fails at this level.

    The limiting condition is evaluated on the descending grid
    r1 = R + (1-R) 2^-j, j = 1..40 (the left side diverges at r1 = 1 and is
    increasing in r1, so the grid hugs the infimum, attained as r1 -> R,
    where the left side becomes the defining series of the radius module).
    A strict excess over 1 at the infimum witnesses failure of the bound.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if not 0.0 < R < 1.0:
        raise HypothesisError(f"inner level must lie in (0,1), got R={R}")
    infimum = math.inf
    for j in range(1, WITNESS_GRID_DEPTH + 1):
        r1 = R + (1.0 - R) * 2.0 ** (-j)
        infimum = min(infimum, _limit_candidate(kind, r1, R, tol))
    series = series_real(R, tol) if kind == "real_coefficients" else series_general(R, tol)
    if abs(infimum - series) > 2.0 * max(tol, 1e-12):
        raise RuntimeError(
            "witness infimum disagrees with the defining series: "
            f"{infimum!r} vs {series!r}"
        )
    return OptimalityWitness(
        kind=kind,
        R=R,
        infimum=infimum,
        series_value=series,
        witnessed_failure=infimum > 1.0 + tol,
    )
