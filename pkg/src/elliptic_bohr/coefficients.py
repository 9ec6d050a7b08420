"""Coefficient extraction and the inequality checkers.

A truncated series in the mapped basis is a vector of complex coefficients
a_0..a_N attached to a condenser parameter R; on the outer boundary (|w| = 1)
it is a trigonometric polynomial, so coefficients come back exactly from an
FFT of equispaced boundary samples.  The checkers implement the family of
mean-dominated coefficient bounds that hold whenever the series has
nonnegative real part on the closed ellipse: each checker returns an
InequalityReport with one (lhs, rhs, slack) row per index, and the report
holds when every slack is above a small relative noise floor.

Conventions shared by all checkers:

* the hypothesis is re(f) >= 0 on the ellipse with re(a_0) > 0; callers are
  expected to certify it (the generator here does);
* every checker first rotates the series by the phase of a_0 so that a_0 is
  real and positive — the bounds are stated against re(a_0) and the rotation
  is the usual normalization;
* slack tolerance: an entry counts as holding when
  slack >= -tolerance_scale * max(1, |rhs|).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

SLACK_TOL_SCALE = 1e-10
# Largest R for which the paired/majorant bounds below are established.
PAIR_REGIME_R_MAX = 0.2053
# Largest R for which the envelope-derivative bounds are established.
ENVELOPE_REGIME_R_MAX = 0.5
# Largest R for which the pair-objective maximizer sits past the interval end.
OBJECTIVE_REGIME_R_MAX = 1.0 / math.sqrt(5.0)


class HypothesisError(ValueError):
    """Input violates a stated hypothesis (e.g. nonpositive mean)."""


class RegimeError(HypothesisError):
    """Parameter outside the regime in which an inequality is established."""


@dataclass(frozen=True)
class FaberSeries:
    """Finite series a_0 + sum_n a_n (w^n + R^{2n} w^{-n}).

    ``coeffs`` holds a_0..a_N.  R = 0 is allowed and reduces everything to
    the classical power-series case on the disc.
    """

    R: float
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        if not 0.0 <= self.R < 1.0:
            raise ValueError(f"condenser parameter must lie in [0,1), got {self.R}")
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=complex))
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must be a nonempty 1-d sequence")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        c = c.copy()
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1


@dataclass(frozen=True)
class QuadratureGrid:
    """Equispaced angles 2*pi*j/M with M a power of two (so grids nest on doubling)."""

    node_count: int

    def __post_init__(self) -> None:
        M = self.node_count
        if M < 4 or (M & (M - 1)) != 0:
            raise ValueError(f"node count must be a power of two >= 4, got {M}")

    @property
    def nodes(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.node_count) / self.node_count

    def doubled(self) -> "QuadratureGrid":
        return QuadratureGrid(2 * self.node_count)

    @classmethod
    def default_for(cls, n_max: int) -> "QuadratureGrid":
        M = max(256, 8 * n_max)
        return cls(1 << (M - 1).bit_length())


@dataclass(frozen=True)
class InequalityEntry:
    n: int
    lhs: float
    rhs: float

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    def holds(self, tolerance_scale: float = SLACK_TOL_SCALE) -> bool:
        rhs_scale = abs(self.rhs) if math.isfinite(self.rhs) else 1.0
        return self.slack >= -tolerance_scale * max(1.0, rhs_scale)


@dataclass(frozen=True)
class InequalityReport:
    family: str
    R: float
    entries: tuple
    tolerance_scale: float = SLACK_TOL_SCALE

    @property
    def all_hold(self) -> bool:
        return all(e.holds(self.tolerance_scale) for e in self.entries)

    @property
    def min_slack(self) -> float:
        return min((e.slack for e in self.entries), default=math.inf)

    def to_jsonable(self) -> dict:
        return {
            "family": self.family,
            "R": self.R,
            "entries": [
                {"n": e.n, "lhs": e.lhs, "rhs": e.rhs, "slack": e.slack}
                for e in self.entries
            ],
            "all_hold": self.all_hold,
            "min_slack": self.min_slack,
        }


# ---------------------------------------------------------------------------
# evaluation / extraction / generation


def eval_series(s: FaberSeries, w):
    """Evaluate the finite series at w (scalar or array); w != 0 unless constant."""
    w_arr = np.asarray(w, dtype=complex)
    scalar = w_arr.ndim == 0
    w_arr = np.atleast_1d(w_arr)
    if s.degree >= 1 and np.any(w_arr == 0):
        raise ValueError("series with nonconstant part is undefined at w = 0")
    out = np.full(w_arr.shape, s.coeffs[0], dtype=complex)
    if s.degree >= 1:
        pos = np.ones_like(w_arr)
        neg = np.ones_like(w_arr)
        refl = (s.R * s.R) / w_arr  # (R^2/w)^n carries the reflected part
        for n in range(1, s.degree + 1):
            pos = pos * w_arr
            neg = neg * refl
            out += s.coeffs[n] * (pos + neg)
    return out[()] if not scalar else out[0]


def boundary_values(s: FaberSeries, M: int) -> np.ndarray:
    """Values of the series on the M-point boundary grid (|w| = 1), via inverse FFT.

    On the unit circle the series is the trigonometric polynomial with
    spectrum c_0 = a_0, c_n = a_n, c_{-n} = a_n R^{2n}, so an inverse FFT of
    the wrapped spectrum gives all M samples in O(M log M).
    """
    if M <= 2 * s.degree:
        raise ValueError("grid too coarse: need M > 2*degree to keep frequencies apart")
    c = np.zeros(M, dtype=complex)
    c[0] = s.coeffs[0]
    for n in range(1, s.degree + 1):
        c[n] += s.coeffs[n]
        c[M - n] += s.coeffs[n] * s.R ** (2 * n)
    return np.fft.ifft(c) * M


def extract_coefficients(f, n_max: int, R: float, grid: QuadratureGrid | None = None) -> FaberSeries:
    """Recover a_0..a_{n_max} from boundary samples of f.

    f is evaluated on |w| = 1 (vectorized if possible).  The positive
    frequencies of the sample FFT are the coefficients: the reflected part
    of each basis element lives at frequency M-n and cannot alias onto
    n <= n_max under the grid guard M >= 4*n_max.  Exact (to rounding) for
    inputs that are finite series of degree <= n_max.
    """
    if grid is None:
        grid = QuadratureGrid.default_for(n_max)
    M = grid.node_count
    if M < 4 * n_max:
        raise ValueError(f"grid too coarse for aliasing guard: M={M} < 4*n_max={4 * n_max}")
    w = np.exp(1j * grid.nodes)
    try:
        vals = np.asarray(f(w), dtype=complex)
        if vals.shape != w.shape:
            raise TypeError
    except (TypeError, ValueError):
        vals = np.array([f(wj) for wj in w], dtype=complex)
    spectrum = np.fft.fft(vals) / M
    return FaberSeries(R=R, coeffs=spectrum[: n_max + 1])


def generate_positive_real_part(
    seed, R: float, n_max: int = 64, real_coefficients: bool = False
) -> FaberSeries:
    """Random finite series with re(f) > 0 on the closed ellipse, certified.

    Draws decaying random coefficients, then shifts the constant term so the
    sampled boundary minimum of the real part equals a positive margin
    delta = 0.01*(1+|m|).  The real part is harmonic, so a boundary minimum
    certificate covers the interior; the certificate is re-checked on a
    doubled grid (accept at >= delta/2) and the draw is retried with halved
    amplitude on failure, at most 5 times.
    """
    rng = np.random.default_rng(seed)
    for attempt in range(5):
        amp = 0.5**attempt
        decay = rng.uniform(0.35, 0.75)
        n = np.arange(1, n_max + 1)
        mags = amp * rng.uniform(0.0, 1.0, n_max) * decay**n
        if real_coefficients:
            signs = rng.choice([-1.0, 1.0], n_max)
            tail = mags * signs + 0j
            a0 = complex(1.0 + rng.uniform(-0.2, 0.2))
        else:
            phases = rng.uniform(0.0, 2.0 * np.pi, n_max)
            tail = mags * np.exp(1j * phases)
            a0 = complex(1.0 + rng.uniform(-0.2, 0.2), rng.uniform(-0.3, 0.3))
        s = FaberSeries(R=R, coeffs=np.concatenate(([a0], tail)))
        m = float(boundary_values(s, 8192).real.min())
        delta = 0.01 * (1.0 + abs(m))
        shifted = np.array(s.coeffs, dtype=complex)
        shifted[0] = shifted[0] - m + delta
        s = FaberSeries(R=R, coeffs=shifted)
        if float(boundary_values(s, 16384).real.min()) >= delta / 2.0:
            return s
    raise RuntimeError("positivity certification failed after 5 retries")


# ---------------------------------------------------------------------------
# inequality checkers


def _prepare(s: FaberSeries) -> FaberSeries:
    """Gate the hypothesis re(a_0) > 0, then rotate so a_0 is real positive."""
    a0 = complex(s.coeffs[0])
    if not a0.real > 0.0:
        raise HypothesisError(
            f"mean coefficient must have positive real part, got {a0}"
        )
    rotated = np.asarray(s.coeffs) * (abs(a0) / a0)
    rotated[0] = abs(a0)  # exact realness, no residual imaginary dust
    return FaberSeries(R=s.R, coeffs=rotated)


def check_caratheodory(s: FaberSeries) -> InequalityReport:
    """Mean-dominated bounds on each coefficient, modulus and real-part forms.

    For every n: (1+R^{2n})^2 re(a_n)^2 + (1-R^{2n})^2 im(a_n)^2 <= 4 re(a_0)^2
    (the squared-modulus form), and |re(a_n)| <= 2 re(a_0)/(1+R^{2n}).
    Entries list the modulus form for n = 1..N first, then the real-part form.
    """
    s = _prepare(s)
    a0 = s.coeffs[0].real
    R = s.R
    modulus, real_part = [], []
    for n in range(1, s.degree + 1):
        an = s.coeffs[n]
        q = R ** (2 * n)
        lhs_mod = (1 + q) ** 2 * an.real**2 + (1 - q) ** 2 * an.imag**2
        modulus.append(InequalityEntry(n=n, lhs=lhs_mod, rhs=4.0 * a0 * a0))
        real_part.append(InequalityEntry(n=n, lhs=abs(an.real), rhs=2.0 * a0 / (1 + q)))
    return InequalityReport(family="caratheodory", R=R, entries=tuple(modulus + real_part))


def check_modulus_coupling(s: FaberSeries) -> InequalityReport:
    """|a_n| bounded through the even coefficient a_{2n}:

    |a_n| <= 2 sqrt(1+R^{4n})/(1-R^{4n}) * sqrt(re(a_0) - R^{2n} re(a_{2n})) * sqrt(re(a_0)).

    A negative radicand re(a_0) - R^{2n} re(a_{2n}) cannot occur under the
    positivity hypothesis; if it does, the entry is flagged with rhs = -inf
    (the certificate upstream must have failed).
    """
    s = _prepare(s)
    a0 = s.coeffs[0].real
    R = s.R
    entries = []
    for n in range(1, s.degree // 2 + 1):
        q4 = R ** (4 * n)
        rad = a0 - R ** (2 * n) * s.coeffs[2 * n].real
        if rad < 0.0:
            entries.append(InequalityEntry(n=n, lhs=abs(s.coeffs[n]), rhs=-math.inf))
            continue
        rhs = 2.0 * math.sqrt(1 + q4) / (1 - q4) * math.sqrt(rad) * math.sqrt(a0)
        entries.append(InequalityEntry(n=n, lhs=abs(s.coeffs[n]), rhs=rhs))
    return InequalityReport(family="modulus_coupling", R=R, entries=tuple(entries))


def check_even_modulus(s: FaberSeries) -> InequalityReport:
    """Self-referential bound on even coefficients:

    |a_{2n}| <= 2/(1-R^{4n}) * sqrt(re(a_0)^2 - R^{4n} re(a_{2n})^2).
    """
    s = _prepare(s)
    a0 = s.coeffs[0].real
    R = s.R
    entries = []
    for n in range(1, s.degree // 2 + 1):
        q4 = R ** (4 * n)
        rad = a0 * a0 - q4 * s.coeffs[2 * n].real ** 2
        if rad < 0.0:
            entries.append(InequalityEntry(n=n, lhs=abs(s.coeffs[2 * n]), rhs=-math.inf))
            continue
        rhs = 2.0 / (1 - q4) * math.sqrt(rad)
        entries.append(InequalityEntry(n=n, lhs=abs(s.coeffs[2 * n]), rhs=rhs))
    return InequalityReport(family="even_modulus", R=R, entries=tuple(entries))


def check_weighted_pair(s: FaberSeries) -> InequalityReport:
    """Joint bound on the weighted pair |a_n| R^n + |a_{2n}| R^{2n}:

    <= 2 re(a_0) R^n/(1-R^{2n}) + 2 re(a_0) R^{2n}/(1+R^{4n}),

    established for R <= 0.2053 (RegimeError above).  Sharper than adding
    per-coefficient bounds: the second denominator is 1+R^{4n}, not 1-R^{4n}.
    """
    if s.R > PAIR_REGIME_R_MAX:
        raise RegimeError(
            f"weighted pair bound requires R <= {PAIR_REGIME_R_MAX}, got R={s.R}"
        )
    s = _prepare(s)
    a0 = s.coeffs[0].real
    R = s.R
    entries = []
    for n in range(1, s.degree // 2 + 1):
        Rn, R2n = R**n, R ** (2 * n)
        lhs = abs(s.coeffs[n]) * Rn + abs(s.coeffs[2 * n]) * R2n
        rhs = 2.0 * a0 * Rn / (1 - R2n) + 2.0 * a0 * R2n / (1 + R2n * R2n)
        entries.append(InequalityEntry(n=n, lhs=lhs, rhs=rhs))
    return InequalityReport(family="weighted_pair", R=R, entries=tuple(entries))


def weighted_pair_naive_rhs(a0: float, R: float, n: int) -> float:
    """Right side obtained by just adding the two individual coefficient bounds."""
    Rn, R2n = R**n, R ** (2 * n)
    return 2.0 * a0 * Rn / (1 - R2n) + 2.0 * a0 * R2n / (1 - R2n * R2n)


def check_real_part_recursion(s: FaberSeries) -> InequalityReport:
    """Recursion tying re(a_{2n})^2 to the next even level:

    re(a_{2n})^2 <= 4 a_0 (1+R^{8n})/(1+R^{4n})^4 * (a_0 + R^{4n} re(a_{4n})),

    with a_0 real positive after rotation.
    """
    s = _prepare(s)
    a0 = s.coeffs[0].real
    R = s.R
    entries = []
    for n in range(1, s.degree // 4 + 1):
        q4 = R ** (4 * n)
        lhs = s.coeffs[2 * n].real ** 2
        rhs = 4.0 * a0 * (1 + q4 * q4) / (1 + q4) ** 4 * (a0 + q4 * s.coeffs[4 * n].real)
        entries.append(InequalityEntry(n=n, lhs=lhs, rhs=rhs))
    return InequalityReport(family="real_part_recursion", R=R, entries=tuple(entries))


def check_majorant(s: FaberSeries) -> InequalityReport:
    """Whole-series majorant: sum R^n |a_n| <= the parity-split mean bound.

    RHS = sum_{even} 2 R^n a_0/(1+R^{2n}) + sum_{odd} 2 R^n a_0/(1-R^{2n}),
    truncated at the series degree plus an analytic tail bound
    2 a_0 R^{N+1}/((1-R)(1-R^2)) so the comparison stays sound (the true
    right side only exceeds the truncated one).  Regime R <= 0.2053.  Single
    entry, indexed 0.
    """
    if s.R > PAIR_REGIME_R_MAX:
        raise RegimeError(
            f"majorant bound requires R <= {PAIR_REGIME_R_MAX}, got R={s.R}"
        )
    s = _prepare(s)
    a0 = s.coeffs[0].real
    R = s.R
    N = s.degree
    lhs = math.fsum(R**n * abs(s.coeffs[n]) for n in range(1, N + 1))
    rhs_terms = []
    for n in range(1, N + 1):
        q = R ** (2 * n)
        rhs_terms.append(2.0 * a0 * R**n / (1 + q if n % 2 == 0 else 1 - q))
    tail = 2.0 * a0 * R ** (N + 1) / ((1 - R) * (1 - R * R)) if R > 0 else 0.0
    rhs = math.fsum(rhs_terms) + tail
    entry = InequalityEntry(n=0, lhs=lhs, rhs=rhs)
    return InequalityReport(family="majorant", R=R, entries=(entry,))


def check_real_sharpening(s: FaberSeries) -> InequalityReport:
    """Sharper per-coefficient bound available when every coefficient is real:

    |a_n| <= 2 re(a_0)/(1+R^{2n}).

    Requires an all-real series (small imaginary dust from quadrature is
    tolerated below 1e-12 relative).
    """
    scale = float(np.abs(s.coeffs).max()) or 1.0
    if float(np.abs(s.coeffs.imag).max()) > 1e-12 * max(1.0, scale):
        raise HypothesisError("sharpened bound needs an all-real coefficient series")
    s = _prepare(s)
    a0 = s.coeffs[0].real
    R = s.R
    entries = [
        InequalityEntry(
            n=n, lhs=abs(s.coeffs[n]), rhs=2.0 * a0 / (1 + R ** (2 * n))
        )
        for n in range(1, s.degree + 1)
    ]
    return InequalityReport(family="real_sharpening", R=R, entries=tuple(entries))


CHECK_FAMILIES = {
    "caratheodory": check_caratheodory,
    "modulus_coupling": check_modulus_coupling,
    "even_modulus": check_even_modulus,
    "weighted_pair": check_weighted_pair,
    "real_part_recursion": check_real_part_recursion,
    "majorant": check_majorant,
    "real_sharpening": check_real_sharpening,
}

# Families every positive-real-part series must pass (the campaign default).
DEFAULT_FAMILIES = (
    "caratheodory",
    "modulus_coupling",
    "even_modulus",
    "weighted_pair",
    "real_part_recursion",
    "majorant",
)


# ---------------------------------------------------------------------------
# the pair objective and its closed-form maximizer


def pair_objective(x: float, a0: float, R: float, n: int) -> float:
    """G(x) = sqrt(a0 (1+R^{4n}) (a0 + R^{2n} x)) + R^n sqrt(a0^2 - R^{4n} x^2).

    The x that bounds the weighted pair: first term majorizes |a_n| R^n via
    the coupling bound, second |a_{2n}| R^{2n} via the even-modulus bound,
    with x standing for re(a_{2n}).
    """
    q2, q4 = R ** (2 * n), R ** (4 * n)
    first = max(a0 * (1 + q4) * (a0 + q2 * x), 0.0)
    second = max(a0 * a0 - q4 * x * x, 0.0)
    return math.sqrt(first) + R**n * math.sqrt(second)


@dataclass(frozen=True)
class PairObjectiveMax:
    x_star: float
    value: float
    x2: float  # closed-form interior critical point (>= x_star in regime)
    x1: float  # the other quadratic root, always negative


def maximize_pair_objective(a0: float, R: float, n: int) -> PairObjectiveMax:
    """Maximize the pair objective over [0, 2 a0/(1+R^{4n})].

    The derivative vanishes where 4R^{6n} x^2 + a0 R^{2n} A x - a0^2 A = 0
    with A = 1+R^{4n}; the positive root in stable form is

        x2 = 2 a0 sqrt(A) / (R^{2n} (sqrt(A + 16 R^{2n}) + sqrt(A))),

    and for R <= 1/sqrt(5) it lies at or past the right endpoint, so the
    objective is increasing on the whole interval and the maximizer is the
    endpoint itself.
    """
    if a0 <= 0:
        raise HypothesisError(f"mean must be positive, got {a0}")
    if n < 1:
        raise ValueError("index must be >= 1")
    if not 0.0 < R <= OBJECTIVE_REGIME_R_MAX:
        raise RegimeError(
            f"endpoint maximization requires 0 < R <= 1/sqrt(5), got R={R}"
        )
    q2 = R ** (2 * n)
    A = 1.0 + q2 * q2
    x2 = 2.0 * a0 * math.sqrt(A) / (q2 * (math.sqrt(A + 16.0 * q2) + math.sqrt(A)))
    x1 = -a0 * math.sqrt(A) * (math.sqrt(A + 16.0 * q2) + math.sqrt(A)) / (8.0 * q2 * q2)
    x_star = 2.0 * a0 / A
    return PairObjectiveMax(
        x_star=x_star, value=pair_objective(x_star, a0, R, n), x2=x2, x1=x1
    )


# ---------------------------------------------------------------------------
# envelope functions for the even-coefficient recursion, and their slopes


def _cap(u: float, n: int, R: float, a0: float) -> float:
    """Largest modulus an index-4n coefficient can have given re = u."""
    q8 = R ** (8 * n)
    return 2.0 * math.sqrt(max(a0 * a0 - q8 * u * u, 0.0)) / (1 - q8)


def _floor(v: float, n: int, R: float, a0: float) -> float:
    """Smallest re(a_{4n}) compatible with re(a_{2n}) = v under the recursion."""
    q4, q8 = R ** (4 * n), R ** (8 * n)
    return (v * v * (1 + q4) ** 4 / (4.0 * a0 * (1 + q8)) - a0) / q4


def _floor_inv(y: float, n: int, R: float, a0: float) -> float:
    """Nonnegative v with _floor(v) = y (the floor map is increasing on v >= 0)."""
    q4, q8 = R ** (4 * n), R ** (8 * n)
    return 2.0 * math.sqrt(max(a0 * (1 + q8) * (a0 + q4 * y), 0.0)) / (1 + q4) ** 2


def envelope_domain_end(n: int, R: float, a0: float) -> float:
    """Right end 2 a0/(1+R^{4n}) of the admissible re(a_{2n}) interval."""
    return 2.0 * a0 / (1 + R ** (4 * n))


def envelope_junction(n: int, R: float, a0: float) -> float:
    """Where the floor map crosses zero: 2 a0 sqrt(1+R^{8n})/(1+R^{4n})^2."""
    q4, q8 = R ** (4 * n), R ** (8 * n)
    return 2.0 * a0 * math.sqrt(1 + q8) / (1 + q4) ** 2


def envelope(t: float, n: int, R: float, a0: float) -> float:
    """Worst-case cap on |a_{4n}| as a function of t = re(a_{2n}).

    Below the junction the floor is vacuous (negative), so the cap saturates
    at its unconstrained maximum 2 a0/(1-R^{8n}); above it the floor binds
    and the cap is evaluated there.  C^1 because the cap has zero slope at
    zero argument.
    """
    v = _floor(t, n, R, a0)
    return _cap(max(v, 0.0), n, R, a0)


def envelope_chain(t: float, n0: int, k: int, R: float, a0: float) -> float:
    """Composed cap after k doublings: floors at levels n0, 2n0, .., 2^k n0, then cap."""
    v = t
    for j in range(k + 1):
        v = _floor(v, n0 * 2**j, R, a0)
    return _cap(v, n0 * 2**k, R, a0)


def envelope_chain_junction(n0: int, k: int, R: float, a0: float) -> float:
    """Start of the composed chain's domain: preimage of 0 through all floors."""
    y = 0.0
    for j in range(k, -1, -1):
        y = _floor_inv(y, n0 * 2**j, R, a0)
    return y


def envelope_chain_tail(n0: int, R: float) -> tuple[float, float]:
    """(converged sum of 2^{k+3} R^{n0 2^{k+3}}, its closed bound 16 R^{8 n0})."""
    total = 0.0
    for k in range(64):
        term = 2.0 ** (k + 3) * R ** (n0 * 2.0 ** (k + 3))
        total += term
        if term < 1e-300:
            break
    return total, 16.0 * R ** (8 * n0)


def weighted_bound(x: float, n: int, R: float, a0: float) -> float:
    """(2R^n/(1-R^{4n})) times the pair objective: the bound on the weighted pair."""
    return 2.0 * R**n / (1 - R ** (4 * n)) * pair_objective(x, a0, R, n)


def _central_slopes(func, lo: float, hi: float, npts: int, h: float) -> np.ndarray:
    """Central difference slopes on an interior grid; flat-in-float reads as 0."""
    xs = np.linspace(lo + h, hi - h, npts)
    out = np.empty(npts)
    for i, x in enumerate(xs):
        xp, xm = x + h, x - h
        dx = xp - xm
        out[i] = (func(xp) - func(xm)) / dx if dx != 0.0 else 0.0
    return out


def _one_sided_slope(func, x: float, h: float, direction: int) -> float:
    x1 = x + direction * h
    dx = x1 - x
    return (func(x1) - func(x)) / dx if dx != 0.0 else 0.0


FD_GRID_POINTS = 512
FD_STEP_FRACTION = 1e-6
ENVELOPE_TOL = 1e-7
JUNCTION_C1_TOL = 1e-5


def check_envelope_derivatives(n0: int, k_max: int, R: float, a0: float = 1.0) -> InequalityReport:
    """Finite-difference verification of the envelope slope bounds.

    Per level n = n0 * 2^j: the junction is C^1 (one-sided slopes agree
    within 1e-5) and R^{4n} * envelope' >= -8 R^{8n} on both branches; per
    chain depth k: R^{2^{k+2} n0} * chain' >= -2^{k+3} R^{n0 (2^{k+2}+4)}
    (the telescoped product of the per-level endpoint slopes; equals the
    single-level allowance at k = 0); the doubling-series tail of chain
    allowances stays below 16 R^{8 n0}; and the weighted-pair bound has
    slope >= R^{3n}/4 on its whole interval.  Entries hold with tolerance
    1e-7 (relative to each rhs).
    """
    if not 0.0 < R <= ENVELOPE_REGIME_R_MAX:
        raise RegimeError(f"envelope bounds require 0 < R <= 0.5, got R={R}")
    if n0 < 1 or n0 % 2 == 0:
        raise ValueError(f"chain base index must be odd and positive, got {n0}")
    if a0 <= 0:
        raise HypothesisError(f"mean must be positive, got {a0}")
    entries = []

    for j in range(k_max + 1):
        n = n0 * 2**j
        x0 = envelope_domain_end(n, R, a0)
        x1 = envelope_junction(n, R, a0)
        q4, q8 = R ** (4 * n), R ** (8 * n)
        allowance = 8.0 * q8

        def phi(t, n=n):
            return envelope(t, n, R, a0)

        # junction smoothness, one-sided from each branch
        h = FD_STEP_FRACTION * max(x0 - x1, x1)
        if h > 0.0:
            left = _one_sided_slope(phi, x1, h, -1)
            right = _one_sided_slope(phi, x1, h, +1)
            entries.append(InequalityEntry(n=n, lhs=abs(left - right), rhs=JUNCTION_C1_TOL))
        # flat branch [0, x1]: slope identically 0, bound holds by sign
        h_flat = FD_STEP_FRACTION * x1
        slopes = _central_slopes(phi, 0.0, x1, FD_GRID_POINTS, h_flat)
        entries.append(InequalityEntry(n=n, lhs=float((-q4 * slopes).max()), rhs=allowance))
        # active branch [x1, x0]; may be empty to rounding for large n
        if x0 > x1:
            h_act = FD_STEP_FRACTION * (x0 - x1)
            slopes = _central_slopes(phi, x1, x0, FD_GRID_POINTS, h_act)
            entries.append(
                InequalityEntry(n=n, lhs=float((-q4 * slopes).max()), rhs=allowance)
            )

        # weighted-pair bound slope, full interval [0, x0]
        def fbound(x, n=n):
            return weighted_bound(x, n, R, a0)

        h_f = FD_STEP_FRACTION * x0
        slopes = _central_slopes(fbound, 0.0, x0, FD_GRID_POINTS, h_f)
        entries.append(
            InequalityEntry(n=n, lhs=R ** (3 * n) / 4.0, rhs=float(slopes.min()))
        )

    # Chain slopes.  The worst case is the product of the endpoint slopes:
    # the top cap-floor pair contributes 8 R^{8 m} with m = 2^k n0 (its own
    # single-level allowance) and each lower floor at level 2^j n0 at most
    # 2 R^{-4 * 2^j n0}; telescoping the product gives the allowance
    # 2^{k+3} R^{n0 (2^{k+2} + 4)}, which reduces to 8 R^{8 n0} at k = 0 and
    # whose sum over k is still below the 16 R^{8 n0} total allowance.
    for k in range(k_max + 1):
        lo = envelope_chain_junction(n0, k, R, a0)
        hi = envelope_domain_end(n0, R, a0)
        prefactor = R ** (n0 * 2.0 ** (k + 2))
        allowance = 2.0 ** (k + 3) * R ** (n0 * (2.0 ** (k + 2) + 4.0))

        def chain(t, k=k):
            return envelope_chain(t, n0, k, R, a0)

        if hi > lo:
            h_c = FD_STEP_FRACTION * (hi - lo)
            slopes = _central_slopes(chain, lo, hi, FD_GRID_POINTS, h_c)
            entries.append(
                InequalityEntry(n=k, lhs=float((-prefactor * slopes).max()), rhs=allowance)
            )

    tail, bound = envelope_chain_tail(n0, R)
    entries.append(InequalityEntry(n=n0, lhs=tail, rhs=bound))

    return InequalityReport(
        family="envelope_derivatives",
        R=R,
        entries=tuple(entries),
        tolerance_scale=ENVELOPE_TOL,
    )
