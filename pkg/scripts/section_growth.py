#!/usr/bin/env python3
"""Tabulate section-space dimensions on SL2 quasi-map spaces.

For each degree d the space is a projective space P^{2d+1}, so the m-twist
must have C(2d+1+m, m) sections; the table prints both numbers side by side
as a quick end-to-end sanity sweep of the Pieri/section pipeline.

Usage: python3 scripts/section_growth.py [--max-degree D] [--max-twist M]
"""

import argparse
import math
import time
from dataclasses import dataclass

from silc.pieri import h0_dimension
from silc.rootdata import root_datum
from silc.weylgroup import weyl_group


@dataclass(frozen=True)
class SweepConfig:
    max_degree: int = 3
    max_twist: int = 4


def run(cfg: SweepConfig):
    datum = root_datum("A", 1)
    wg = weyl_group(datum)
    e = wg.identity
    print(f"{'d':>3} {'m':>3} {'h0':>8} {'binomial':>8}  status")
    start = time.monotonic()
    for d in range(1, cfg.max_degree + 1):
        v = wg.element([1], (d,))
        for m in range(1, cfg.max_twist + 1):
            got = h0_dimension(datum, v, e, (m,))
            want = math.comb(2 * d + 1 + m, m)
            status = "ok" if got == want else "MISMATCH"
            print(f"{d:>3} {m:>3} {got:>8} {want:>8}  {status}")
    print(f"total {time.monotonic() - start:.2f}s")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-degree", type=int, default=3)
    parser.add_argument("--max-twist", type=int, default=4)
    args = parser.parse_args()
    run(SweepConfig(max_degree=args.max_degree, max_twist=args.max_twist))


if __name__ == "__main__":
    main()
