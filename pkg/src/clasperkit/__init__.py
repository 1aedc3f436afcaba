"""Y-equivalence invariants of closed 3-manifolds given by framed surgery presentations."""
from __future__ import annotations

from .braidlink import FramedBraidLink, arf, linking_matrix, seifert_matrix
from .clasper import ClasperSpec, corresponding_spin, insert_clasper, insert_claspers, parse_spec
from .decide import Verdict, invariant_report, y_equivalent, y_equivalent_spin
from .intlin import IntMatrix, signature, smith_normal_form
from .pairing import FiniteAbelianGroup, Outcome, TorsionPairing, h1, pairing_isomorphic, torsion_pairing
from .spin import SpinPresentation, SurgeryPresentation, r8_pair, rochlin, spin_structures, twist

__version__ = "0.1.0"

__all__ = [
    "ClasperSpec",
    "FiniteAbelianGroup",
    "FramedBraidLink",
    "IntMatrix",
    "Outcome",
    "SpinPresentation",
    "SurgeryPresentation",
    "TorsionPairing",
    "Verdict",
    "arf",
    "corresponding_spin",
    "h1",
    "insert_clasper",
    "insert_claspers",
    "invariant_report",
    "linking_matrix",
    "pairing_isomorphic",
    "parse_spec",
    "r8_pair",
    "rochlin",
    "seifert_matrix",
    "signature",
    "smith_normal_form",
    "spin_structures",
    "torsion_pairing",
    "twist",
    "y_equivalent",
    "y_equivalent_spin",
]
