"""Shared high-precision oracles for the test suite.

The critical levels are re-derived here with mpmath (40 decimal digits,
secant root-finding on a 400-term partial sum) so the float64 solvers in the
package are checked against an independent implementation, not against
themselves.
"""

from __future__ import annotations

import mpmath as mp
import pytest


def mp_defining_series(R, parity_split: bool, terms: int = 400):
    R = mp.mpf(R)
    total = mp.mpf(0)
    for n in range(1, terms + 1):
        R2n = R ** (2 * n)
        denom = (1 - R2n) if (parity_split and n % 2 == 1) else (1 + R2n)
        total += 4 * R**n / denom
    return total


@pytest.fixture(scope="session")
def oracle_levels():
    """High-precision roots of the two defining series, as float64."""
    with mp.workdps(40):
        real = mp.findroot(lambda R: mp_defining_series(R, False) - 1, mp.mpf("0.2"))
        general = mp.findroot(lambda R: mp_defining_series(R, True) - 1, mp.mpf("0.19"))
        return {"real_coefficients": float(real), "general": float(general)}
