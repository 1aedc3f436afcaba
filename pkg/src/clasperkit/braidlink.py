"""Framed links presented as braid closures.

Conventions: letter ``+k`` is the generator sigma_k swapping positions k and
k+1 as a *positive* crossing, ``-k`` its inverse.  With this convention the
closure of sigma_1^2 is the positive Hopf link (linking number +1).
Strand labels are the positions at the top of the braid (1-based).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .intlin import IntMatrix, determinant


class DisconnectedSurface(ValueError):
    pass


class ArfUndefined(ValueError):
    """The sublink is not proper, so its Arf invariant does not exist."""


@dataclass(frozen=True)
class FramedBraidLink:
    strands: int
    word: tuple[int, ...] = ()
    framings: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(x) for x in self.word))
        object.__setattr__(self, "framings", tuple(int(x) for x in self.framings))
        if self.strands < 0:
            raise ValueError("negative strand count")
        for letter in self.word:
            if letter == 0 or abs(letter) >= self.strands:
                raise ValueError(f"letter {letter} invalid on {self.strands} strands")
        ncomp = len(_cycles(self.strands, self.word))
        if len(self.framings) != ncomp:
            raise ValueError(f"{len(self.framings)} framings for {ncomp} components")

    @property
    def num_components(self) -> int:
        return len(self.framings)

    @property
    def is_empty(self) -> bool:
        return self.strands == 0



def positions_over_time(strands: int, word: Sequence[int]) -> list[list[int]]:
    """``result[t][p-1]`` is the strand label at position p after t letters."""
    pos = list(range(1, strands + 1))
    history = [pos[:]]
    for letter in word:
        k = abs(letter)
        pos[k - 1], pos[k] = pos[k], pos[k - 1]
        history.append(pos[:])
    return history


@lru_cache(maxsize=4096)
def _cycles(strands: int, word: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    end = positions_over_time(strands, word)[-1]
    # strand starting at position s ends at position perm[s]; closure feeds it back to top position perm[s]
    perm = {label: p + 1 for p, label in enumerate(end)}
    seen, cycles = set(), []
    for s in range(1, strands + 1):
        if s in seen:
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x]
        cycles.append(tuple(sorted(cyc)))
    return tuple(cycles)


EMPTY_LINK = FramedBraidLink(0, (), ())


def components(link: FramedBraidLink) -> list[tuple[int, ...]]:
    """Strand sets of the closure components, ordered by smallest strand."""
    return list(_cycles(link.strands, link.word))


def component_of_strand(link: FramedBraidLink) -> dict[int, int]:
    return {s: c for c, cyc in enumerate(components(link)) for s in cyc}


def crossing_components(link: FramedBraidLink) -> list[tuple[int, int, int]]:
    """(component at position k, component at position k+1, sign) for every letter."""
    comp = component_of_strand(link)
    hist = positions_over_time(link.strands, link.word)
    out = []
    for t, letter in enumerate(link.word):
        k = abs(letter)
        out.append((comp[hist[t][k - 1]], comp[hist[t][k]], 1 if letter > 0 else -1))
    return out


def linking_matrix(link: FramedBraidLink) -> IntMatrix:
    c = link.num_components
    twice = [[0] * c for _ in range(c)]
    for a, b, sign in crossing_components(link):
        if a != b:
            twice[a][b] += sign
            twice[b][a] += sign
    rows = [[link.framings[i] if i == j else twice[i][j] // 2 for j in range(c)] for i in range(c)]
    return IntMatrix.from_rows(rows, cols=c)


def sublink(link: FramedBraidLink, mask: Sequence[int]) -> FramedBraidLink:
    """Sub-braid on the strands of the selected components.

    ``mask`` is a 0/1 vector over components.  An all-zero mask gives
    ``EMPTY_LINK``.
    """
    if len(mask) != link.num_components:
        raise ValueError("mask length differs from component count")
    keep_comp = {i for i, m in enumerate(mask) if m % 2}
    if not keep_comp:
        return EMPTY_LINK
    comp = component_of_strand(link)
    kept = [s for s in range(1, link.strands + 1) if comp[s] in keep_comp]
    hist = positions_over_time(link.strands, link.word)
    word = []
    for t, letter in enumerate(link.word):
        k = abs(letter)
        left, right = hist[t][k - 1], hist[t][k]
        if comp[left] in keep_comp and comp[right] in keep_comp:
            # both survive, so they are adjacent among survivors
            new_k = sum(1 for s in hist[t][:k] if comp[s] in keep_comp)
            word.append(new_k if letter > 0 else -new_k)
    framings = tuple(link.framings[i] for i in sorted(keep_comp))
    return FramedBraidLink(len(kept), tuple(word), framings)


def stabilize(link: FramedBraidLink, sign: int = 1) -> FramedBraidLink:
    """Markov stabilisation: add strand n+1 and the letter +-n."""
    n = link.strands
    if n == 0:
        raise ValueError("cannot stabilise the empty link")
    return FramedBraidLink(n + 1, link.word + (sign * n,), link.framings)


def add_split_unknot(link: FramedBraidLink, framing: int) -> FramedBraidLink:
    """Append a split unknot on a new rightmost strand with no crossings."""
    return FramedBraidLink(link.strands + 1, link.word, link.framings + (framing,))


# --------------------------------------------------------------------------
# Seifert matrices of Bennequin surfaces


def _band_loops(word: Sequence[int], strands: int) -> list[tuple[int, int, int]]:
    """Loops (generator index, first band time, second band time) for consecutive bands."""
    loops = []
    for k in range(1, strands):
        times = [t for t, x in enumerate(word) if abs(x) == k]
        loops.extend((k, a, b) for a, b in zip(times, times[1:]))
    return loops


def _bennequin_seifert(strands: int, word: Sequence[int]) -> list[list[int]]:
    sign = [1 if x > 0 else -1 for x in word]
    loops = _band_loops(word, strands)
    n = len(loops)
    V = [[0] * n for _ in range(n)]
    for i, (k, p, q) in enumerate(loops):
        V[i][i] = -(sign[p] + sign[q]) // 2
        for j, (k2, r, s) in enumerate(loops):
            if j == i:
                continue
            if k2 == k and r == q:
                # consecutive loops sharing band q
                if sign[q] > 0:
                    V[i][j] = 1
                else:
                    V[j][i] = -1
            elif k2 == k + 1:
                # loops on neighbouring indices link only when their bands interleave
                if p < r < q < s:
                    V[i][j] = 1
                elif r < p < s < q:
                    V[i][j] = -1
    return V


def is_surface_connected(link: FramedBraidLink) -> bool:
    used = {abs(x) for x in link.word}
    return all(k in used for k in range(1, link.strands))


def seifert_matrix(link: FramedBraidLink) -> IntMatrix:
    """Seifert matrix of the Bennequin surface in the band-loop basis.

    Size is (bands - strands + 1).  Raises DisconnectedSurface when some
    adjacent strand pair is never joined by a band.
    """
    if link.strands == 0:
        return IntMatrix.zeros(0)
    if not is_surface_connected(link):
        raise DisconnectedSurface("Bennequin surface is disconnected")
    V = _bennequin_seifert(link.strands, link.word)
    return IntMatrix.from_rows(V, cols=len(V))


def split_blocks(link: FramedBraidLink) -> list[FramedBraidLink]:
    """Split a braid at generator indices that never occur.

    Each block is a braid on a contiguous range of positions; framings are
    dropped (set to 0) since only the link type matters here.
    """
    used = {abs(x) for x in link.word}
    cuts = [k for k in range(1, link.strands) if k not in used]
    bounds = [0, *cuts, link.strands]
    blocks = []
    for lo, hi in zip(bounds, bounds[1:]):
        word = tuple((abs(x) - lo) * (1 if x > 0 else -1) for x in link.word if lo < abs(x) < hi)
        ncomp = len(_cycles(hi - lo, word))
        blocks.append(FramedBraidLink(hi - lo, word, (0,) * ncomp))
    return blocks


def connected_seifert_matrix(link: FramedBraidLink) -> IntMatrix:
    """Seifert matrix of a connected surface even for split braid diagrams.

    The Bennequin surfaces of the blocks are joined by tubes; each tube adds a
    meridian class that links nothing, i.e. a zero row and column.
    """
    if link.strands == 0:
        return IntMatrix.zeros(0)
    blocks = split_blocks(link)
    mats = [_bennequin_seifert(b.strands, b.word) for b in blocks]
    size = sum(len(m) for m in mats) + len(blocks) - 1
    out = [[0] * size for _ in range(size)]
    offset = 0
    for m in mats:
        for i, row in enumerate(m):
            out[offset + i][offset:offset + len(row)] = row
        offset += len(m) + 1
    return IntMatrix.from_rows(out, cols=size)


def alexander_at_minus_one(V) -> int:
    """det(V + V^T); the empty matrix gives 1."""
    if not isinstance(V, IntMatrix):
        V = IntMatrix.from_rows(V)
    S = IntMatrix(V.rows, V.cols, tuple(V[i, j] + V[j, i] for i in range(V.rows) for j in range(V.cols)))
    return determinant(S)


# --------------------------------------------------------------------------
# Arf invariants


def arf_of_seifert(V: IntMatrix) -> int:
    """Arf invariant of q(x) = x^T V x mod 2 on the quotient by the radical.

    Raises ArfUndefined when q is nonzero on the radical of V + V^T mod 2.
    """
    n = V.rows
    # symmetric bilinear form b(x, y) = x^T (V + V^T) y mod 2, rows as bitmasks
    brow = [sum((((V[i, j] + V[j, i]) & 1) << j) for j in range(n)) for i in range(n)]

    def q(x: int) -> int:
        tot = 0
        for i in range(n):
            if (x >> i) & 1:
                for j in range(n):
                    if (x >> j) & 1:
                        tot += V[i, j]
        return tot & 1

    def b(x: int, y: int) -> int:
        tot = 0
        for i in range(n):
            if (x >> i) & 1:
                tot ^= bin(brow[i] & y).count("1") & 1
        return tot

    basis = [1 << i for i in range(n)]
    arf = 0
    radical = []
    while basis:
        e = basis.pop()
        partner = next((f for f in basis if b(e, f)), None)
        if partner is None:
            radical.append(e)
            continue
        basis.remove(partner)
        f = partner
        arf ^= q(e) & q(f)
        # project the rest onto the orthogonal complement of <e, f>
        basis = [x ^ (e if b(x, f) else 0) ^ (f if b(x, e) else 0) for x in basis]
    # radical vectors are orthogonal to the symplectic part; q is additive on them
    for r in radical:
        if q(r):
            raise ArfUndefined("quadratic form does not vanish on the radical")
    return arf


@lru_cache(maxsize=65536)
def _arf_cached(link: FramedBraidLink, mask: tuple[int, ...]) -> int:
    sub = sublink(link, mask)
    if sub.is_empty:
        return 0
    return arf_of_seifert(connected_seifert_matrix(sub))


def arf(link: FramedBraidLink, mask: Sequence[int] | None = None) -> int:
    """Arf invariant of the sublink selected by ``mask`` (all components by default)."""
    if mask is None:
        mask = (1,) * link.num_components
    return _arf_cached(link, tuple(int(m) & 1 for m in mask))
