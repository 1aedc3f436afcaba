"""Write the curated corpus of .cmf manifests (default: ./corpus)."""
from __future__ import annotations

import argparse
from pathlib import Path

from clasperkit import manifest as mf
from clasperkit.corpus import curated


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "corpus"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, (p, spin, notes) in curated().items():
        m = mf.from_presentation(p, spin, notes)
        m.validate()
        mf.dump(m, out / f"{name}.cmf")
        print(f"{name}.cmf")


if __name__ == "__main__":
    main()
