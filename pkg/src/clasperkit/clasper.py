"""Y-clasper surgery on braid-closure presentations.

Surgery along a Y-clasper is surgery along a six-component framed link: three
0-framed inner components forming Borromean rings, and three leaves, leaf i
clasping inner component i once and encircling a bundle of existing strands.

Template used here (n old strands): inner components on new strands n+1..n+3,
leaves on n+4..n+6.  At the chosen site we splice

  * the Borromean word (s_{n+1} s_{n+2}^{-1})^3 on the inner strands;
  * for each leaf, a lasso around its inner strand, then a lasso around its
    range of old strands.

A lasso around positions a..b from position P is C L C^{-1} where
C = s_{P-1}^{-1} ... s_{b+1}^{-1} drags the leaf under everything in between
and L = s_b ... s_a s_a ... s_b loops once around the bundle.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .braidlink import FramedBraidLink, component_of_strand, positions_over_time
from .intlin import IntMatrix, as_matrix, nullity_mod2
from .spin import SurgeryPresentation, is_characteristic

NUM_NEW = 6


class InvalidSpec(ValueError):
    pass


class CorrespondenceViolation(RuntimeError):
    pass


@dataclass(frozen=True)
class ClasperSpec:
    """Insertion site, three leaf ranges (None = trivial leaf) and leaf framings."""

    site: int
    leaves: tuple[tuple[int, int] | None, tuple[int, int] | None, tuple[int, int] | None] = (None, None, None)
    framings: tuple[int, int, int] = (0, 0, 0)

    def __post_init__(self):
        if len(self.leaves) != 3 or len(self.framings) != 3:
            raise InvalidSpec("a Y-clasper has exactly three leaves")
        leaves = tuple(None if r is None else (int(r[0]), int(r[1])) for r in self.leaves)
        object.__setattr__(self, "leaves", leaves)
        object.__setattr__(self, "framings", tuple(int(f) for f in self.framings))

    def validate(self, strands: int, word_length: int) -> None:
        if not 0 <= self.site <= word_length:
            raise InvalidSpec(f"site {self.site} outside 0..{word_length}")
        for k, r in enumerate(self.leaves, 1):
            if r is None:
                continue
            a, b = r
            if not 1 <= a <= b <= strands:
                raise InvalidSpec(f"leaf{k} range {a}-{b} outside 1..{strands}")
        for i in range(3):
            for j in range(i + 1, 3):
                ri, rj = self.leaves[i], self.leaves[j]
                if ri and rj and not (ri[1] < rj[0] or rj[1] < ri[0]):
                    raise InvalidSpec(f"leaf{i + 1} and leaf{j + 1} ranges overlap")

    @property
    def is_trivial(self) -> bool:
        """A 0-framed leaf encircling nothing makes the surgery do nothing."""
        return any(r is None and f == 0 for r, f in zip(self.leaves, self.framings))

    def __str__(self) -> str:
        parts = [f"site={self.site}"]
        for k, (r, f) in enumerate(zip(self.leaves, self.framings), 1):
            if r is None:
                parts.append(f"leaf{k}=empty" + (f"@f={f}" if f else ""))
            else:
                parts.append(f"leaf{k}={r[0]}-{r[1]}@f={f}")
        return "; ".join(parts)


_LEAF_RE = re.compile(r"^(?:(?P<empty>empty)|(?P<a>\d+)-(?P<b>\d+))(?:@f=(?P<f>[+-]?\d+))?$")


def parse_spec(text: str) -> ClasperSpec:
    """Parse ``site=<int>; leaf1=<a>-<b>@f=<int>; leaf2=...; leaf3=...``."""
    fields = {}
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise InvalidSpec(f"expected key=value, got {part!r}")
        key, value = part.split("=", 1)
        key = key.strip()
        if key in fields:
            raise InvalidSpec(f"duplicate field {key}")
        fields[key] = value.strip()
    unknown = set(fields) - {"site", "leaf1", "leaf2", "leaf3"}
    if unknown:
        raise InvalidSpec(f"unknown fields {sorted(unknown)}")
    try:
        site = int(fields.get("site", "0"))
    except ValueError:
        raise InvalidSpec(f"site must be an integer, got {fields['site']!r}") from None
    leaves, framings = [], []
    for k in (1, 2, 3):
        m = _LEAF_RE.match(fields.get(f"leaf{k}", "empty"))
        if not m:
            raise InvalidSpec(f"cannot parse leaf{k}: {fields[f'leaf{k}']!r}")
        leaves.append(None if m["empty"] else (int(m["a"]), int(m["b"])))
        framings.append(int(m["f"]) if m["f"] else 0)
    return ClasperSpec(site, tuple(leaves), tuple(framings))


def _lasso(position: int, lo: int, hi: int) -> list[int]:
    drag = [-m for m in range(position - 1, hi, -1)]
    loop = list(range(hi, lo - 1, -1)) + list(range(lo, hi + 1))
    return drag + loop + [-x for x in reversed(drag)]


def template_word(strands: int, spec: ClasperSpec, template: str = "standard") -> list[int]:
    n = strands
    if template == "standard":
        core = [n + 1, -(n + 2)] * 3
    elif template == "corrupt":
        # negative control: a full twist instead of the Borromean rings
        core = [n + 1, n + 2] * 3
    else:
        raise ValueError(f"unknown template {template!r}")
    word = list(core)
    for i in range(3):
        leaf = n + 4 + i
        word += _lasso(leaf, n + 1 + i, n + 1 + i)
    for i, r in enumerate(spec.leaves):
        if r is not None:
            word += _lasso(n + 4 + i, r[0], r[1])
    return word


@dataclass(frozen=True)
class ClasperSurgeryResult:
    presentation: SurgeryPresentation
    index_map: tuple[int, ...]
    inner: tuple[int, int, int]
    leaves: tuple[int, int, int]
    leaf_vectors: tuple[tuple[int, ...], ...]
    spec: ClasperSpec
    old_matrix: IntMatrix


def leaf_vectors(link: FramedBraidLink, spec: ClasperSpec) -> list[list[int]]:
    """Linking of each leaf with each old component: strands of it inside the range."""
    comp = component_of_strand(link)
    at_site = positions_over_time(link.strands, link.word)[spec.site] if link.strands else []
    out = []
    for r in spec.leaves:
        v = [0] * link.num_components
        if r is not None:
            for pos in range(r[0], r[1] + 1):
                v[comp[at_site[pos - 1]]] += 1
        out.append(v)
    return out


def insert_clasper(p: SurgeryPresentation, spec: ClasperSpec, template: str = "standard") -> ClasperSurgeryResult:
    if not p.has_diagram:
        raise InvalidSpec("clasper insertion needs a diagram presentation")
    link = p.link
    spec.validate(link.strands, len(link.word))
    n = link.strands
    word = list(link.word[:spec.site]) + template_word(n, spec, template) + list(link.word[spec.site:])
    framings = link.framings + (0, 0, 0) + spec.framings
    new_link = FramedBraidLink(n + NUM_NEW, tuple(word), framings)
    c = link.num_components
    result = ClasperSurgeryResult(
        presentation=SurgeryPresentation(link=new_link, label=p.label),
        index_map=tuple(range(c)),
        inner=(c, c + 1, c + 2),
        leaves=(c + 3, c + 4, c + 5),
        leaf_vectors=tuple(tuple(v) for v in leaf_vectors(link, spec)),
        spec=spec,
        old_matrix=p.linking_matrix,
    )
    return result


def insert_claspers(p: SurgeryPresentation, specs: Sequence[ClasperSpec], template: str = "standard") -> list[ClasperSurgeryResult]:
    """Surgery along disjoint claspers, applied one after another.

    Each spec refers to the strands and word of the previous result.
    """
    results = []
    for spec in specs:
        r = insert_clasper(p, spec, template)
        results.append(r)
        p = r.presentation
    return results


def predicted_block_matrix(B, spec: ClasperSpec, vectors: Sequence[Sequence[int]]) -> IntMatrix:
    """Linking matrix after surgery, ordered (old, inner_1..3, leaf_1..3)."""
    B = as_matrix(B)
    c = B.rows
    size = c + NUM_NEW
    M = [[0] * size for _ in range(size)]
    for i in range(c):
        for j in range(c):
            M[i][j] = B[i, j]
    for k in range(3):
        inner, leaf = c + k, c + 3 + k
        M[inner][leaf] = M[leaf][inner] = 1
        M[leaf][leaf] = spec.framings[k]
        for j in range(c):
            M[leaf][j] = M[j][leaf] = vectors[k][j]
    return IntMatrix.from_rows(M, cols=size)


def corresponding_spin(char: Sequence[int], result: ClasperSurgeryResult) -> tuple[int, ...]:
    """The unique characteristic vector on the result that restricts to ``char``.

    Old coordinates are kept, leaves get 0, and inner component k gets
    f_k + a_k . C mod 2.
    """
    char = [int(x) & 1 for x in char]
    B_new = result.presentation.linking_matrix
    c = len(char)
    new = [0] * B_new.rows
    for old, idx in enumerate(result.index_map):
        new[idx] = char[old]
    for k in range(3):
        a = result.leaf_vectors[k]
        new[result.inner[k]] = (result.spec.framings[k] + sum(x * y for x, y in zip(a, char))) & 1
    if not is_characteristic(result.old_matrix, char):
        raise ValueError(f"{char} is not characteristic for the original presentation")
    if not is_characteristic(B_new, new):
        raise CorrespondenceViolation(f"{new} is not characteristic after surgery")
    # uniqueness: no nonzero mod-2 kernel vector of B_new supported on new components
    new_cols = [j for j in range(B_new.rows) if j >= c]
    sub = IntMatrix.from_rows([[B_new[i, j] for j in new_cols] for i in range(B_new.rows)], cols=len(new_cols))
    if nullity_mod2(sub):
        raise CorrespondenceViolation("extension of the spin structure is not unique")
    return tuple(new)


def corresponding_spin_iterated(char: Sequence[int], results: Sequence[ClasperSurgeryResult]) -> tuple[int, ...]:
    for r in results:
        char = corresponding_spin(char, r)
    return tuple(char)
