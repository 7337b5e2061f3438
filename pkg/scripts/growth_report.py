#!/usr/bin/env python3
"""Report the growth structure of a floor-m sequence.

Prints the glue-length records, the smoothed (ruler-aligned) records with
their split values, the block-length growth constant epsilon, the record
growth constant lambda, and the closed-form cross-checks inside their
exactness regions.

Usage:
    python3 scripts/growth_report.py --m 1 --sigma-len 1024
"""

import argparse

from curlseq import (
    beta_closed_form,
    beta_region_max,
    build_length_table,
    glue_lengths_via_promotion,
    growth_constants,
    records,
    rho_closed_form,
    rho_region_max,
    smooth_to_ruler,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--m", type=int, default=1)
    parser.add_argument("--sigma-len", type=int, default=1024)
    args = parser.parse_args()
    m, n = args.m, args.sigma_len

    sigma = glue_lengths_via_promotion(m, n)
    print(f"glue-length records of level {m} (value @ first index), sigma range {n}:")
    for j, (value, index) in enumerate(records(sigma)):
        print(f"  j={j:2d}  {value:>10d} @ {index}")

    fit = smooth_to_ruler(m, sigma)
    print(f"smoothed records rho: {fit.rho}")
    print(f"split values: {sorted(set(v for _i, v in fit.splits))}")
    print(f"mismatches: {len(fit.mismatches)}")

    g = growth_constants(m, 30)
    print(f"epsilon (block growth, n=30): {g.epsilon:.8f}")
    print(f"lambda  (record growth, last computed): {g.lam:.6f}")

    table = build_length_table(m, beta_region_max(m))
    ok_beta = all(
        beta_closed_form(m, k) == table.beta(k) for k in range(1, beta_region_max(m) + 1)
    )
    print(f"beta closed form exact on 1..{beta_region_max(m)}: {ok_beta}")
    j_max = min(len(fit.rho) - 1, rho_region_max(m))
    ok_rho = all(rho_closed_form(m, j) == fit.rho[j] for j in range(j_max + 1))
    print(f"rho closed form matches smoothed records on 0..{j_max}: {ok_rho}")


if __name__ == "__main__":
    main()
