"""Y-equivalence decisions for closed manifolds, plain and spin, and invariant reports."""
from __future__ import annotations

from dataclasses import dataclass, field

from .intlin import IntMatrix
from .pairing import (
    DEFAULT_2TORSION_CAP,
    FiniteAbelianGroup,
    Outcome,
    TorsionPairing,
    h1,
    normal_form_summary,
    pairing_isomorphic,
    primary_part,
    torsion_pairing,
)
from .spin import (
    NeedsDiagram,
    SizeCap,
    SpinPresentation,
    SurgeryPresentation,
    r8_pair,
    rochlin,
    spin_structures,
)

OBSTRUCTION_GROUP = "first homology"
OBSTRUCTION_PAIRING = "torsion linking pairing"
OBSTRUCTION_ROCHLIN = "rochlin mod 8"


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    obstruction: str | None = None
    details: dict = field(default_factory=dict, compare=False)

    def __str__(self) -> str:
        if self.outcome is Outcome.NO:
            return f"No (obstruction: {self.obstruction})"
        if self.outcome is Outcome.UNDECIDED:
            return f"Undecided ({self.obstruction})"
        return "Yes"


def y_equivalent(p: SurgeryPresentation, q: SurgeryPresentation, cap_2torsion: int = DEFAULT_2TORSION_CAP) -> Verdict:
    """Y-equivalent iff H_1 agree and the torsion linking pairings are isometric."""
    gp, gq = h1(p), h1(q)
    details = {"h1": (str(gp), str(gq))}
    if gp != gq:
        return Verdict(Outcome.NO, OBSTRUCTION_GROUP, details)
    tp, tq = torsion_pairing(p), torsion_pairing(q)
    details["pairing"] = (str(tp), str(tq))
    res = pairing_isomorphic(tp, tq, cap_2torsion)
    if res is Outcome.NO:
        return Verdict(Outcome.NO, OBSTRUCTION_PAIRING, details)
    if res is Outcome.UNDECIDED:
        order = primary_part(tp, 2).group_order
        return Verdict(Outcome.UNDECIDED, f"2-torsion of order {order} beyond cap {cap_2torsion}", details)
    return Verdict(Outcome.YES, None, details)


def y_equivalent_spin(a: SpinPresentation, b: SpinPresentation, cap_2torsion: int = DEFAULT_2TORSION_CAP) -> Verdict:
    """Spin version: the unspin criterion plus Rochlin invariants congruent mod 8."""
    base = y_equivalent(a.presentation, b.presentation, cap_2torsion)
    details = dict(base.details)
    ra, rb = rochlin(a), rochlin(b)
    details["rochlin"] = (ra, rb)
    if base.outcome is Outcome.NO:
        return Verdict(Outcome.NO, base.obstruction, details)
    if r8_pair(a, b) != 0:
        return Verdict(Outcome.NO, OBSTRUCTION_ROCHLIN, details)
    return Verdict(base.outcome, base.obstruction, details)


@dataclass
class InvariantReport:
    label: str
    linking_matrix: IntMatrix
    h1: FiniteAbelianGroup
    pairing: TorsionPairing
    pairing_summary: dict
    spin_count: int
    rochlin: dict[tuple[int, ...], int | None]
    spins_capped: bool = False

    def lines(self) -> list[str]:
        out = []
        if self.label:
            out.append(f"label: {self.label}")
        out.append(f"linking matrix: {self.linking_matrix.tolist()}")
        out.append(f"H1: {self.h1}")
        out.append(f"pairing: {self.pairing}")
        for p, data in self.pairing_summary.items():
            out.append(f"pairing at {p}: {data}")
        out.append(f"spins: {self.spin_count}" + (" (enumeration capped)" if self.spins_capped else ""))
        for c, r in self.rochlin.items():
            value = "n/a (needs diagram)" if r is None else f"{r} (mod 16)"
            out.append(f"spin {list(c)} rochlin: {value}")
        return out


def invariant_report(p: SurgeryPresentation, spin_cap: int = 12) -> InvariantReport:
    B = p.linking_matrix
    tp = torsion_pairing(p)
    group = h1(p)
    try:
        spins = spin_structures(p, cap=spin_cap)
        capped = False
    except SizeCap:
        spins, capped = [], True
    values: dict[tuple[int, ...], int | None] = {}
    for c in spins:
        try:
            values[c] = rochlin(SpinPresentation(p, c))
        except NeedsDiagram:
            values[c] = None
    count = 2 ** (group.rank + sum(1 for d in group.factors if d % 2 == 0))
    return InvariantReport(
        label=p.label,
        linking_matrix=B,
        h1=group,
        pairing=tp,
        pairing_summary=normal_form_summary(tp),
        spin_count=count,
        rochlin=values,
        spins_capped=capped,
    )
