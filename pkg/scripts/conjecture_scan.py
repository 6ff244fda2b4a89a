#!/usr/bin/env python3
"""Scan straightening coefficients for values other than 0 and +/-1.

Exhaustive up to --max-size, randomized sampling at size 8.  Observed so
far: every nonzero coefficient is a unit; this script reports, it does not
assert.
"""
import argparse
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from altperm.blockperm import all_perms, alt_basis, ascending_perms
from altperm.straighten import NormalFormTable, normal_form


def scan_exhaustive(size):
    I = tuple(range(1, size + 1))
    table = NormalFormTable(I)
    checked = nonzero = 0
    witnesses = []
    for x in ascending_perms(I):
        vec = table.lookup(x)
        for alpha in alt_basis(I):
            value = vec.coeff(alpha)
            checked += 1
            if value:
                nonzero += 1
                if value not in (1, -1):
                    witnesses.append((str(alpha), str(x), str(value)))
    return checked, nonzero, witnesses


def scan_random(size, trials, seed):
    rng = random.Random(seed)
    I = tuple(range(1, size + 1))
    table = NormalFormTable(I)
    checked = nonzero = 0
    witnesses = []
    for _ in range(trials):
        entries = list(I)
        rng.shuffle(entries)
        from altperm.blockperm import BlockPerm

        vec = normal_form(BlockPerm(tuple(entries)), table=table)
        for alpha, value in vec.items():
            checked += 1
            if value:
                nonzero += 1
                if value not in (1, -1):
                    witnesses.append((str(alpha), str(entries), str(value)))
    return checked, nonzero, witnesses


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-size", type=int, default=6)
    parser.add_argument("--trials", type=int, default=500, help="random draws at size 8")
    parser.add_argument("--seed", type=int, default=20240801)
    args = parser.parse_args()

    any_witness = False
    for size in range(2, args.max_size + 1, 2):
        checked, nonzero, witnesses = scan_exhaustive(size)
        print(f"size {size}: {checked} coefficients, {nonzero} nonzero, "
              f"{len(witnesses)} non-unit")
        any_witness |= bool(witnesses)
        for w in witnesses[:10]:
            print("  witness:", w)
    if args.trials > 0:
        checked, nonzero, witnesses = scan_random(8, args.trials, args.seed)
        print(f"size 8 (random x{args.trials}): {checked} coefficients, "
              f"{nonzero} nonzero, {len(witnesses)} non-unit")
        any_witness |= bool(witnesses)
        for w in witnesses[:10]:
            print("  witness:", w)
    print("conclusion:", "non-unit coefficients found" if any_witness
          else "every nonzero coefficient is a unit")


if __name__ == "__main__":
    main()
