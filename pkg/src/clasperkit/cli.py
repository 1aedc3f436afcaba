"""``clasperkit`` command line.

Exit codes: 0 yes/ok, 1 no (or a failed property), 2 parse error,
3 validation error, 4 undecided.
"""
from __future__ import annotations

import argparse
import sys

from . import manifest as mf
from .clasper import CorrespondenceViolation, InvalidSpec, corresponding_spin, insert_clasper, parse_spec
from .decide import invariant_report, y_equivalent, y_equivalent_spin
from .pairing import DEFAULT_2TORSION_CAP, Outcome
from .suites import run_all

EXIT_OK, EXIT_NO, EXIT_PARSE, EXIT_VALIDATION, EXIT_UNDECIDED = 0, 1, 2, 3, 4

_VERDICT_EXIT = {Outcome.YES: EXIT_OK, Outcome.NO: EXIT_NO, Outcome.UNDECIDED: EXIT_UNDECIDED}


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(path: str, need_spin: bool = False):
    """Returns (manifest, presentation, spin presentation or None)."""
    try:
        m = mf.load(path)
    except mf.ManifestParseError as e:
        raise _Fail(EXIT_PARSE, f"{path}: {e}") from None
    try:
        p = m.presentation()
        s = m.spin_presentation() if m.spin is not None else None
    except mf.ManifestValidationError as e:
        raise _Fail(EXIT_VALIDATION, f"{path}: {e}") from None
    if need_spin and s is None:
        raise _Fail(EXIT_VALIDATION, f"{path}: spin: missing (required by --spin)")
    return m, p, s


def cmd_invariants(args) -> int:
    _, p, _ = _load(args.path)
    for line in invariant_report(p).lines():
        print(line)
    return EXIT_OK


def cmd_compare(args) -> int:
    _, p, s = _load(args.a, need_spin=args.spin)
    _, q, t = _load(args.b, need_spin=args.spin)
    verdict = y_equivalent_spin(s, t, args.cap_2torsion) if args.spin else y_equivalent(p, q, args.cap_2torsion)
    print(verdict)
    return _VERDICT_EXIT[verdict.outcome]


def cmd_surger(args) -> int:
    m, p, s = _load(args.input)
    if not p.has_diagram:
        raise _Fail(EXIT_VALIDATION, f"{args.input}: word: clasper surgery needs a diagram manifest")
    try:
        spec = parse_spec(args.spec)
        result = insert_clasper(p, spec)
    except InvalidSpec as e:
        raise _Fail(EXIT_VALIDATION, f"spec: {e}") from None
    spin = None
    if s is not None:
        try:
            spin = corresponding_spin(s.char, result)
        except CorrespondenceViolation as e:
            raise _Fail(EXIT_VALIDATION, f"spin: {e}") from None
    notes = f"Y-clasper surgery ({spec}) on {m.label or args.input}"
    mf.dump(mf.from_presentation(result.presentation, spin, notes, label=m.label), args.output)
    for old, new in enumerate(result.index_map):
        print(f"old {old} -> {new}")
    for k in range(3):
        print(f"inner{k + 1} -> {result.inner[k]}")
    for k in range(3):
        print(f"leaf{k + 1} -> {result.leaves[k]}")
    print(f"wrote {args.output}")
    return EXIT_OK


def cmd_proptest(args) -> int:
    template = "corrupt" if args.corrupt_template else "standard"
    results = run_all(args.seed, args.count, template)
    width = max(len(r.name) for r in results)
    print(f"{'property':<{width}}  passed/total")
    for r in results:
        mark = "ok" if r.ok else "FAIL"
        print(f"{r.name:<{width}}  {r.passed}/{r.total}  {mark}")
    failures = [r for r in results if not r.ok]
    for r in failures:
        print(f"first failure in {r.name}: {r.first_failure}")
    print(f"seed={args.seed} count={args.count} template={template}: "
          + ("all properties pass" if not failures else f"{len(failures)} properties failed"))
    return EXIT_NO if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clasperkit", description="Y-equivalence invariants of surgery presentations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="print H1, torsion pairing, spin structures and Rochlin invariants")
    p.add_argument("path")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("compare", help="decide Y-equivalence of two manifests")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--spin", action="store_true", help="compare as spin manifolds (both manifests need spin)")
    p.add_argument("--cap-2torsion", type=int, default=DEFAULT_2TORSION_CAP, metavar="N",
                   help="largest 2-primary group order searched exhaustively")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("surger", help="Y-clasper surgery on a diagram manifest")
    p.add_argument("input")
    p.add_argument("spec", help="e.g. 'site=0; leaf1=1-1@f=0; leaf2=empty; leaf3=empty'")
    p.add_argument("output")
    p.set_defaults(func=cmd_surger)

    p = sub.add_parser("proptest", help="run the randomized invariance suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--corrupt-template", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_proptest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:  # argparse usage errors are parse errors
        return EXIT_OK if e.code == 0 else EXIT_PARSE
    try:
        return args.func(args)
    except _Fail as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
