#!/usr/bin/env python3
"""Recorded experiment: does the tableau-restricted kernel sum of the
multi-box operators equal the full symmetrization of the kernel over all
color-consistent labelings of the skew boxes?

The operator matrix elements sum the kernel

    M(chi) * prod_{a<b} zeta(chi_b/chi_a) / prod_a (1 - q^2 chi_a/chi_{a+1})

over standard tableaux only.  The symmetrized-kernel picture would instead
sum over every labeling of the skew boxes with the interval labels (color
classes matching); for that to agree, each non-tableau labeling must
contribute zero through a zeta numerator zero, without its denominators
vanishing first.  This script evaluates both sums on every skew pair with
one repeated residue (interval length n+1) inside a small window and records
agreement, a nonzero discrepancy, or a pole-blocked labeling (a 0/0 term
that plain evaluation cannot decide).  Nothing here is asserted by the test
suite; the output is the record.
"""

import argparse
import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from qtoroidal.action import Representation
from qtoroidal.colored import ColoredWeight, sheet_twist, zeta
from qtoroidal.partitions import (box_color, box_weight, canonical_id,
                                  enumerate_syt)
from qtoroidal.scalars import ONE, ZERO, random_specialization


def kernel_for_labeling(rep, labeling, i, j):
    """(value, status): the kernel at one labeling, or None when a
    denominator vanishes ('pole')."""
    spec = rep.spec
    chi = {a: box_weight(spec, b) * sheet_twist(spec, box_color(spec, b), a)
           for a, b in labeling.items()}
    val = ONE
    for a in range(i, j - 1):
        den = 1 - spec.q ** 2 * chi[a] / chi[a + 1]
        if den == 0:
            return None, "pole"
        val /= den
    for a in range(i, j):
        for b in range(a + 1, j):
            val *= zeta(spec, ColoredWeight(b, chi[b]),
                        ColoredWeight(a, chi[a]), rep.convention)
    return val * chi[i], "ok"  # monomial M = z_i


def all_labelings(spec, skew, i, j):
    import itertools
    for perm in itertools.permutations(skew):
        labeling = dict(zip(range(i, j), perm))
        if all((box_color(spec, b) - a) % spec.n == 0
               for a, b in labeling.items()):
            yield labeling


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--r", default=None)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--max-boxes", type=int, default=4)
    args = ap.parse_args()
    n = args.n
    r_vec = tuple(int(x) for x in (args.r or ",".join(["1"] * n)).split(","))
    spec = random_specialization(args.seed, n, r_vec, args.max_boxes)
    rep = Representation(spec)
    length = n + 1  # shortest interval with a repeated residue
    outcomes = Counter()
    examples = {}
    for d in rep.degrees(args.max_boxes - length):
        for mu in rep.fixed_points(d):
            for i in range(1, n + 1):
                chains = {}
                from qtoroidal.action import _forward_chains
                for lam, binding in _forward_chains(spec, mu, i, i + length):
                    chains.setdefault(lam, []).append(dict(binding))
                for lam, bindings in chains.items():
                    skew = [b for b in lam.boxes() if b not in mu.boxes()]
                    tableau_sum = ZERO
                    for binding in bindings:
                        v, _ = kernel_for_labeling(rep, binding, i, i + length)
                        tableau_sum += v
                    full_sum = ZERO
                    blocked = False
                    for labeling in all_labelings(spec, skew, i, i + length):
                        v, status = kernel_for_labeling(rep, labeling, i,
                                                        i + length)
                        if status == "pole":
                            blocked = True
                            break
                        full_sum += v
                    if blocked:
                        outcomes["pole_blocked"] += 1
                        examples.setdefault("pole_blocked",
                                            (canonical_id(mu),
                                             canonical_id(lam), i))
                    elif full_sum == tableau_sum:
                        outcomes["agree"] += 1
                    else:
                        outcomes["disagree"] += 1
                        examples.setdefault("disagree",
                                            (canonical_id(mu),
                                             canonical_id(lam), i,
                                             str(full_sum - tableau_sum)))
    print(f"n={n} r={r_vec} seed={args.seed} window={args.max_boxes} "
          f"interval length {length}, kernel monomial z_i:")
    for key, count in sorted(outcomes.items()):
        line = f"  {key}: {count}"
        if key in examples:
            line += f"   e.g. {examples[key]}"
        print(line)
    if not outcomes:
        print("  (no skew pairs of this shape in the window)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
