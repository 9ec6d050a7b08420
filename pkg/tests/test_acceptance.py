"""Acceptance gate: the nine headline guarantees, one test per line.

Run ``pytest -v tests/test_acceptance.py`` for a one-line pass/fail verdict
per criterion; each test also prints the measured numbers so a captured log
doubles as a report.  Criterion 3 contains a deliberate red assertion: one
of the two reference eccentricities in circulation is internally
inconsistent with its own axis ratio (details in the assertion message),
and this suite refuses to mask that.
"""

import math
import time

import numpy as np

from elliptic_bohr import (
    CHECK_FAMILIES,
    FaberSeries,
    QuadratureGrid,
    check_normalizer_asymptotics,
    eccentricity,
    envelope_chain_tail,
    eval_series,
    extract_coefficients,
    extremal_trace,
    generate_positive_real_part,
    maximize_pair_objective,
    optimality_witness,
    pair_objective,
    phi1_eval,
    phi2_eval,
    solve_radius,
)
from elliptic_bohr.coefficients import check_envelope_derivatives, envelope_domain_end

REAL_LEVEL_REFERENCE = 0.205328678165046
CAMPAIGN_LEVELS = (0.05, 0.10, 0.15, 0.20)
CAMPAIGN_SIZE = 1000
SIX_FAMILIES = (
    "caratheodory",
    "modulus_coupling",
    "even_modulus",
    "weighted_pair",
    "real_part_recursion",
    "majorant",
)


def _failing_entries(report):
    return [
        (e.n, e.lhs, e.rhs, e.slack)
        for e in report.entries
        if not e.holds(report.tolerance_scale)
    ]


def test_acceptance_01_real_critical_level_value():
    t0 = time.perf_counter()
    sol = solve_radius("real_coefficients", tol=1e-12)
    elapsed = time.perf_counter() - t0
    err = abs(sol.value - REAL_LEVEL_REFERENCE)
    assert err <= 1e-9, f"solved {sol.value!r}, off reference by {err:.3e}"
    assert elapsed < 1.0, f"solver took {elapsed:.3f} s"
    print(
        f"[PASS] real-coefficient critical level {sol.value:.15f} "
        f"(|diff from reference| {err:.2e}, {elapsed * 1e3:.2f} ms)"
    )


def _fixed_truncation_general_root(n_terms=4000, tol=1e-12):
    """Second, independent truncation strategy: hard cutoff + numpy terms."""
    n = np.arange(1, n_terms + 1, dtype=float)

    def level_sum(R):
        q = R**n
        q2 = q * q
        denom = np.where(n % 2 == 1, 1.0 - q2, 1.0 + q2)
        return math.fsum(4.0 * q / denom)

    lo, hi = 1e-6, 0.5
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if level_sum(mid) < 1.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def test_acceptance_02_general_critical_level_bracket():
    t0 = time.perf_counter()
    sol = solve_radius("general", tol=1e-12)
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0, f"solver took {elapsed:.3f} s"
    assert 0.19 < sol.bracket_lo and sol.bracket_hi < 0.20, (
        f"bracket [{sol.bracket_lo}, {sol.bracket_hi}] not inside (0.19, 0.20)"
    )
    alt = _fixed_truncation_general_root()
    assert abs(sol.value - alt) <= 1e-10, (
        f"adaptive-tail root {sol.value!r} vs fixed-cutoff root {alt!r}"
    )
    real_level = solve_radius("real_coefficients").value
    assert sol.value < real_level
    print(
        f"[PASS] general critical level {sol.value:.15f} in "
        f"({sol.bracket_lo:.15f}, {sol.bracket_hi:.15f}); independent "
        f"truncation agrees to {abs(sol.value - alt):.2e}; below the "
        f"real-coefficient level by {real_level - sol.value:.6f}"
    )


def test_acceptance_03_axis_ratios_and_eccentricities():
    general_level = solve_radius("general").value
    ratio = 1.0 / general_level
    assert ratio < 5.1284 < 5.1573
    print(f"[PASS] solved axis ratio {ratio:.6f} < 5.1284 < 5.1573")

    ecc_a = eccentricity(5.1284)
    assert abs(ecc_a - 0.3757) <= 5e-5
    print(f"[PASS] eccentricity(5.1284) = {ecc_a:.7f} = 0.3757 within 5e-5")

    ecc_b = eccentricity(5.1573)
    # Deliberately red: 2*5.1573/(1 + 5.1573^2) = 0.3737480, not 0.373814.
    # The quoted pair (5.1573, 0.373814) is internally inconsistent: an
    # eccentricity of 0.373814 corresponds to an axis ratio of 5.15629.
    # One of the two published numbers has to be a typo; we refuse to relax
    # the tolerance to hide that, so this assertion fails by design.
    assert abs(ecc_b - 0.373814) <= 5e-6, (
        f"eccentricity(5.1573) = {ecc_b:.7f}, which misses the quoted "
        f"0.373814 by {abs(ecc_b - 0.373814):.2e} (tolerance 5e-6).  The "
        f"quoted eccentricity corresponds to axis ratio 5.15629, not 5.1573; "
        f"the two reference numbers contradict each other and no correct "
        f"implementation can satisfy both."
    )


def test_acceptance_04_coefficient_inequality_campaign():
    t0 = time.perf_counter()
    worst = {}
    for R in CAMPAIGN_LEVELS:
        mins = {fam: math.inf for fam in SIX_FAMILIES}
        real_min = math.inf
        for i in range(CAMPAIGN_SIZE):
            series = generate_positive_real_part([7, i, 0], R)
            for fam in SIX_FAMILIES:
                rep = CHECK_FAMILIES[fam](series)
                mins[fam] = min(mins[fam], rep.min_slack)
            real_series = generate_positive_real_part(
                [7, i, 1], R, real_coefficients=True
            )
            rep = CHECK_FAMILIES["real_sharpening"](real_series)
            real_min = min(real_min, rep.min_slack)
        for fam in SIX_FAMILIES:
            assert mins[fam] >= -1e-10, (
                f"family {fam} at R={R}: min slack {mins[fam]:.3e}"
            )
        assert real_min >= -1e-10, f"real sharpening at R={R}: {real_min:.3e}"
        worst[R] = (min(mins.values()), real_min)
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0, f"campaign took {elapsed:.1f} s"
    for R, (six_min, real_min) in worst.items():
        print(
            f"[PASS] R={R:.2f}: {CAMPAIGN_SIZE} series x 6 families, "
            f"min slack {six_min:.3e}; real-coefficient sharpening "
            f"min slack {real_min:.3e}"
        )
    print(f"[PASS] campaign finished in {elapsed:.1f} s (< 60 s)")


def test_acceptance_05_envelope_derivative_and_tail_bounds():
    # odd bases 1,3,5,7 with doublings cover every index n <= 8
    for R in (0.1, 0.2):
        for n0, k_max in ((1, 3), (3, 1), (5, 0), (7, 0)):
            rep = check_envelope_derivatives(n0, k_max, R)
            bad = _failing_entries(rep)
            assert not bad, f"R={R}, base {n0}: failing entries {bad}"
        print(f"[PASS] slope bounds at R={R}: all levels n <= 8 hold (512-pt FD)")
    for n0 in (1, 3, 5):
        for R in np.linspace(0.05, 0.5, 10):
            total, bound = envelope_chain_tail(n0, float(R))
            assert total <= bound * (1 + 1e-12), (
                f"tail sum {total!r} exceeds closed bound {bound!r} "
                f"at n0={n0}, R={R}"
            )
    print("[PASS] doubling-tail sums below 16 R^(8 n0) for n0 in {1,3,5}, R <= 0.5")


def test_acceptance_06_pair_objective_critical_point():
    worst_fd = 0.0
    for a0 in (0.5, 1.0, 2.0):
        for R in (0.05, 0.1, 0.2, 0.3, 0.4, 1 / math.sqrt(5)):
            for n in range(1, 11):
                m = maximize_pair_objective(a0, R, n)
                h = 1e-5 * max(1.0, a0)
                fd = (
                    pair_objective(m.x2 + h, a0, R, n)
                    - pair_objective(m.x2 - h, a0, R, n)
                ) / (2 * h)
                worst_fd = max(worst_fd, abs(fd))
                assert abs(fd) <= 1e-9, (
                    f"a0={a0}, R={R}, n={n}: derivative {fd:.2e} at x2"
                )
                end = envelope_domain_end(n, R, a0)
                assert m.x2 >= end * (1 - 1e-12), (
                    f"a0={a0}, R={R}, n={n}: x2={m.x2!r} below domain end {end!r}"
                )
    print(
        f"[PASS] closed-form critical point zeroes the objective derivative "
        f"(worst |FD| {worst_fd:.2e} <= 1e-9) and clears the domain end, "
        f"n <= 10, R <= 5^(-1/2)"
    )


def test_acceptance_07_extraction_round_trip():
    rng = np.random.default_rng(2024)
    R = 0.2
    coeffs = rng.standard_normal(17) + 1j * rng.standard_normal(17)
    coeffs[0] = 2.0 + 0.1j
    series = FaberSeries(R=R, coeffs=coeffs)

    def f(w):
        return eval_series(series, w)

    grid = QuadratureGrid.default_for(16)
    out1 = extract_coefficients(f, 16, R, grid=grid)
    err1 = float(np.max(np.abs(out1.coeffs - coeffs)))
    assert err1 < 1e-12, f"round-trip error {err1:.3e}"
    out2 = extract_coefficients(f, 16, R, grid=grid.doubled())
    err2 = float(np.max(np.abs(out2.coeffs - out1.coeffs)))
    assert err2 < 1e-12, f"grid-doubling drift {err2:.3e}"
    print(
        f"[PASS] degree-16 extraction round-trip error {err1:.2e}, "
        f"grid-doubling drift {err2:.2e} (both < 1e-12)"
    )


def test_acceptance_08_extremal_traces_and_asymptotics():
    for R in (0.1, 0.2):
        for family in ("phi1", "phi2"):
            trace = extremal_trace(family, R, k_min=4, k_max=16)
            first, last = trace.steps[0], trace.steps[-1]
            assert abs(last.metric) < abs(first.metric), (
                f"{family}, R={R}: metric went {first.metric:.3e} -> "
                f"{last.metric:.3e}"
            )
            assert abs(last.metric) < 0.1
            eval_fn = phi1_eval if family == "phi1" else phi2_eval
            special = 1.0 + 0.0j if family == "phi1" else 1.0j
            for step in (first, last):
                unit = eval_fn(step.r_k, special, R)
                assert abs(unit - 1.0) <= 1e-10, (
                    f"{family}, R={R}, r={step.r_k}: value at the defining "
                    f"point is {unit!r}"
                )
            print(
                f"[PASS] {family} at R={R}: |metric| {abs(first.metric):.3e} -> "
                f"{abs(last.metric):.3e} (< 0.1), defining-point identity "
                f"within 1e-10"
            )
        rep = check_normalizer_asymptotics(R, k_min=4, k_max=16)
        bad = _failing_entries(rep)
        assert not bad, f"R={R}: asymptotics entries failing: {bad}"
        print(
            f"[PASS] R={R}: normalizer errors and trace gaps decrease "
            f"step-by-step and end below 1e-4 ({len(rep.entries)} entries)"
        )


def test_acceptance_09_optimality_witness_flip():
    for kind in ("real_coefficients", "general"):
        root = solve_radius(kind).value
        center = round(root, 3)
        grid = [center + i * 1e-3 for i in range(-3, 4)]
        verdicts = [
            optimality_witness(kind, R).witnessed_failure for R in grid
        ]
        flips = [i for i in range(1, len(grid)) if verdicts[i] != verdicts[i - 1]]
        assert len(flips) == 1, (
            f"{kind}: verdicts {verdicts} on grid {grid} flip "
            f"{len(flips)} times"
        )
        lo, hi = grid[flips[0] - 1], grid[flips[0]]
        assert not verdicts[flips[0] - 1] and verdicts[flips[0]]
        assert lo < root <= hi + 1e-12, (
            f"{kind}: witness flips on ({lo}, {hi}] but solver root is {root}"
        )
        print(
            f"[PASS] {kind}: witness verdict flips on ({lo:.3f}, {hi:.3f}], "
            f"bracketing the solved level {root:.9f} within one 1e-3 step"
        )
