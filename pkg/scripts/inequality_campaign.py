#!/usr/bin/env python3
"""Random-series campaign over the coefficient inequality families.

Draws positive-real-part series on the condenser exterior and runs every
requested inequality family on each, reporting the minimum slack seen per
family (negative slack beyond tolerance would be a counterexample).  The
regime-restricted families (weighted_pair, majorant) are skipped
automatically when R is outside their window.
"""

import argparse
import math

from elliptic_bohr import CHECK_FAMILIES, RegimeError, generate_positive_real_part


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--R", type=float, nargs="+",
                        default=[0.05, 0.10, 0.15, 0.20])
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--n-max", type=int, default=64)
    parser.add_argument("--families", nargs="+",
                        default=[f for f in CHECK_FAMILIES if f != "real_sharpening"])
    args = parser.parse_args()

    for fam in args.families:
        if fam not in CHECK_FAMILIES:
            parser.error(f"unknown family {fam!r}; known: {sorted(CHECK_FAMILIES)}")

    for R in args.R:
        mins = {fam: math.inf for fam in args.families}
        skipped = set()
        for i in range(args.count):
            series = generate_positive_real_part([args.seed, i, 0], R, args.n_max)
            real_series = None
            for fam in args.families:
                if fam in skipped:
                    continue
                if fam == "real_sharpening":
                    # this family only makes sense on real-coefficient draws
                    if real_series is None:
                        real_series = generate_positive_real_part(
                            [args.seed, i, 1], R, args.n_max,
                            real_coefficients=True)
                    target = real_series
                else:
                    target = series
                try:
                    report = CHECK_FAMILIES[fam](target)
                except RegimeError:
                    skipped.add(fam)
                    continue
                mins[fam] = min(mins[fam], report.min_slack)
        print(f"R = {R}  ({args.count} series, degree {args.n_max})")
        for fam in args.families:
            if fam in skipped:
                print(f"  {fam:<20} outside regime, skipped")
            else:
                print(f"  {fam:<20} min slack {mins[fam]:+.3e}")


if __name__ == "__main__":
    main()
