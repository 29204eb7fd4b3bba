#!/usr/bin/env python3
"""Annihilation sweep: assemble W_{ij}^k over the shifted-sheet grid and
report the zero/nonzero status of every graded block.

Example:
    python scripts/run_theorem.py --n 3 --r 1,1,1 --max-boxes 4 --seed 1
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from qtoroidal.action import Representation
from qtoroidal.scalars import random_specialization
from qtoroidal.walgebra import WSpec, check_annihilation, sharpness_witness


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--r", default=None)
    ap.add_argument("--max-boxes", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--k-above", type=int, default=3,
                    help="test k = r_j + 1 .. r_j + this")
    args = ap.parse_args()
    n = args.n
    r_vec = tuple(int(x) for x in (args.r or ",".join(["1"] * n)).split(","))
    spec = random_specialization(args.seed, n, r_vec, args.max_boxes)
    rep = Representation(spec)
    failures = 0
    t0 = time.monotonic()
    for i in range(1 - n, 2 * n + 1):
        for j in range(1 - n, 2 * n + 1):
            if abs(i - j) > n:
                continue
            for k in range(spec.rbar(j) + 1, spec.rbar(j) + 1 + args.k_above):
                out = check_annihilation(rep, WSpec(i, j, k, args.max_boxes))
                nz = sum(b["nonzero"] for b in out["blocks"])
                print(f"W[{i:>3},{j:>3}]^{k}: {out['status']} "
                      f"(nonzero entries: {nz})")
                failures += out["status"] != "PASS"
    for i in range(1, n + 1):
        w = sharpness_witness(rep, i)
        print(f"boundary W[{i},{i}]^{spec.rbar(i)} vacuum entry "
              f"{w['witness']['vacuum_entry']} ({w['status']})")
        failures += w["status"] != "PASS"
    print(f"# done in {time.monotonic() - t0:.1f}s, "
          f"{failures} failures", file=sys.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
