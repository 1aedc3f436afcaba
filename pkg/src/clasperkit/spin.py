"""Surgery presentations, spin structures as characteristic sublinks, Rochlin invariants."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from . import braidlink
from .braidlink import FramedBraidLink
from .intlin import (
    IntMatrix,
    as_matrix,
    integer_kernel,
    signature,
    solve_mod2_affine,
    span_mod2,
)

DEFAULT_SPIN_CAP = 20


class SizeCap(ValueError):
    pass


class NotAKernelElement(ValueError):
    pass


class NotCharacteristic(ValueError):
    pass


class NeedsDiagram(ValueError):
    pass


@dataclass(frozen=True)
class SurgeryPresentation:
    """A closed 3-manifold as surgery on a framed link in S^3.

    Exactly one of ``link`` (diagram form) or ``matrix`` (linking matrix only)
    is set.
    """

    link: FramedBraidLink | None = None
    matrix: IntMatrix | None = None
    label: str = ""

    def __post_init__(self):
        if (self.link is None) == (self.matrix is None):
            raise ValueError("give exactly one of link or matrix")
        if self.matrix is not None:
            m = as_matrix(self.matrix)
            if not m.is_symmetric():
                raise ValueError("linking matrix must be symmetric")
            object.__setattr__(self, "matrix", m)

    @classmethod
    def diagram(cls, strands: int, word: Sequence[int], framings: Sequence[int], label: str = ""):
        return cls(link=FramedBraidLink(strands, tuple(word), tuple(framings)), label=label)

    @classmethod
    def from_matrix(cls, rows, label: str = ""):
        return cls(matrix=as_matrix(rows), label=label)

    @property
    def has_diagram(self) -> bool:
        return self.link is not None

    @property
    def linking_matrix(self) -> IntMatrix:
        if self.link is not None:
            return braidlink.linking_matrix(self.link)
        return self.matrix

    @property
    def num_components(self) -> int:
        return self.linking_matrix.rows


def is_characteristic(B: IntMatrix, c: Sequence[int]) -> bool:
    return all((x - d) % 2 == 0 for x, d in zip(B.apply(list(c)), B.diag()))


@dataclass(frozen=True)
class SpinPresentation:
    presentation: SurgeryPresentation
    char: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) & 1 for x in self.char)
        object.__setattr__(self, "char", c)
        B = self.presentation.linking_matrix
        if len(c) != B.rows:
            raise NotCharacteristic(f"spin vector has length {len(c)}, expected {B.rows}")
        if not is_characteristic(B, c):
            raise NotCharacteristic(f"{list(c)} is not characteristic")


def spin_structures(p: SurgeryPresentation, cap: int = DEFAULT_SPIN_CAP) -> list[tuple[int, ...]]:
    """All characteristic vectors C with B C = diag(B) mod 2."""
    B = p.linking_matrix
    sol = solve_mod2_affine(B, [d & 1 for d in B.diag()])
    # symmetric forms always have a characteristic vector
    assert sol.consistent
    if len(sol.kernel) > cap:
        raise SizeCap(f"{2 ** len(sol.kernel)} spin structures exceed the cap 2^{cap}")
    out = []
    for coeffs in product((0, 1), repeat=len(sol.kernel)):
        x = list(sol.particular)
        for c, k in zip(coeffs, sol.kernel):
            if c:
                x = [(a + b) & 1 for a, b in zip(x, k)]
        out.append(tuple(x))
    return out


def surface_classes(p: SurgeryPresentation) -> list[list[int]]:
    """Mod-2 basis of the twists coming from closed orientable surfaces.

    These are the reductions of integer kernel vectors of B (classes in
    H_2(M; Z)).  When H_1 has 2-torsion this is a proper subspace of the
    mod-2 kernel.
    """
    return span_mod2([[x & 1 for x in v] for v in integer_kernel(p.linking_matrix)])


def twist(s: SpinPresentation, kappa: Sequence[int]) -> SpinPresentation:
    B = s.presentation.linking_matrix
    if len(kappa) != B.rows or any(x % 2 for x in B.apply([k & 1 for k in kappa])):
        raise NotAKernelElement(f"{list(kappa)} is not in the mod-2 kernel")
    return SpinPresentation(s.presentation, tuple((a + b) & 1 for a, b in zip(s.char, kappa)))


def char_square(B: IntMatrix, c: Sequence[int]) -> int:
    """C.C including the framing terms on the diagonal."""
    idx = [i for i, x in enumerate(c) if x]
    return sum(B[i, j] for i in idx for j in idx)


def rochlin(s: SpinPresentation) -> int:
    """Rochlin invariant mod 16: sigma(B) - C.C + 8 Arf(C)."""
    p = s.presentation
    B = p.linking_matrix
    if any(s.char):
        if not p.has_diagram:
            raise NeedsDiagram("Arf of a nonempty characteristic sublink needs a diagram")
        a = braidlink.arf(p.link, s.char)
    else:
        a = 0
    return (signature(B) - char_square(B, s.char) + 8 * a) % 16


def r8_pair(a: SpinPresentation, b: SpinPresentation) -> int:
    return (rochlin(a) - rochlin(b)) % 8
