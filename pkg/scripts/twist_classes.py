"""Compare spin twists by surface classes with twists by arbitrary mod-2 kernel vectors.

Twisting by the reduction of an integral kernel vector of B (a closed
orientable surface) keeps the Rochlin invariant mod 8.  An arbitrary mod-2
kernel vector can fail, as RP^3 already shows.
"""
from __future__ import annotations

import argparse
import random

from clasperkit.corpus import random_presentation
from clasperkit.intlin import solve_mod2_affine
from clasperkit.spin import SpinPresentation, r8_pair, spin_structures, surface_classes, twist


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=400)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    stats = {"surface": [0, 0], "mod2": [0, 0]}
    for _ in range(args.count):
        p = random_presentation(rng, max_strands=4, max_length=8, kernel_bias=0.5)
        B = p.linking_matrix
        mod2 = solve_mod2_affine(B, [0] * B.rows).kernel
        surf = surface_classes(p)
        for c in spin_structures(p):
            s = SpinPresentation(p, c)
            for kind, basis in (("surface", surf), ("mod2", mod2)):
                for k in basis:
                    stats[kind][0] += 1
                    stats[kind][1] += r8_pair(twist(s, k), s) != 0
    for kind, (n, bad) in stats.items():
        print(f"{kind:8s} twists: {n} checked, {bad} change R mod 8")


if __name__ == "__main__":
    main()
