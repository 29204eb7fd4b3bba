#!/usr/bin/env python3
"""Run the full exact verification suite for one configuration.

Example:
    python scripts/run_verify.py --n 2 --r 2,1 --max-boxes 4 --mode-range 4 \
        --seeds 1,2,3 --out report.json
"""

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from qtoroidal.verify import run_full_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--r", default=None)
    ap.add_argument("--max-boxes", type=int, default=3)
    ap.add_argument("--mode-range", type=int, default=2)
    ap.add_argument("--seeds", default="1,2,3")
    ap.add_argument("--samples", type=int, default=3)
    ap.add_argument("--allow-n1", action="store_true")
    ap.add_argument("--out", default=None)
    args = ap.parse_args()
    r_vec = tuple(int(x) for x in (args.r or ",".join(["1"] * args.n)).split(","))
    seeds = [int(x) for x in args.seeds.split(",")]
    report = run_full_suite(args.n, r_vec, args.max_boxes, args.mode_range,
                            seeds, samples=args.samples,
                            allow_n1=args.allow_n1)
    payload = json.dumps(report.to_json_dict(), sort_keys=True, indent=1)
    if args.out:
        Path(args.out).write_text(payload + "\n")
    else:
        print(payload)
    slowest = sorted(report.checks, key=lambda c: -c.seconds)[:5]
    for c in slowest:
        print(f"# slow: {c.name} {c.parameters} {c.seconds:.2f}s",
              file=sys.stderr)
    n_fail = sum(c.status != "PASS" for c in report.checks)
    print(f"# {len(report.checks)} checks, {n_fail} not passing",
          file=sys.stderr)
    return 0 if report.all_pass or args.n == 1 else 1


if __name__ == "__main__":
    sys.exit(main())
