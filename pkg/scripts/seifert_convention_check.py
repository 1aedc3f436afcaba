"""Cross-check Bennequin Seifert matrices against the reduced Burau representation.

For random braids that use every generator, compares the Alexander polynomial
det(tV - V^T) with the Burau formula at t = 2 and t = 3 (up to units), and
prints torus knot signatures.
"""
from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from oracles import burau_alexander, seifert_alexander, strip_prime  # noqa: E402

from clasperkit import braidlink as bl  # noqa: E402
from clasperkit.corpus import random_word  # noqa: E402
from clasperkit.intlin import IntMatrix, signature  # noqa: E402


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--count", type=int, default=400)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    mismatches = 0
    for _ in range(args.count):
        n = rng.randint(2, 5)
        while True:
            w = random_word(rng, n, rng.randint(n - 1, 12))
            if {abs(x) for x in w} >= set(range(1, n)):
                break
        V = bl.seifert_matrix(bl.FramedBraidLink(n, w, (0,) * len(bl._cycles(n, w)))).tolist()
        for t in (2, 3):
            if strip_prime(seifert_alexander(V, t), t) != strip_prime(burau_alexander(n, w, t), t):
                mismatches += 1
                print("mismatch", n, w)
                break
    print(f"Alexander polynomial mismatches: {mismatches}/{args.count}")
    for p, q in ((2, 3), (2, 5), (3, 4), (3, 5), (4, 5)):
        V = bl.seifert_matrix(bl.FramedBraidLink(p, tuple(list(range(1, p)) * q), (0,)))
        S = IntMatrix.from_rows([[V[i, j] + V[j, i] for j in range(V.cols)] for i in range(V.rows)], cols=V.cols)
        print(f"signature of T({p},{q}) from a positive braid: {signature(S)}")


if __name__ == "__main__":
    main()
