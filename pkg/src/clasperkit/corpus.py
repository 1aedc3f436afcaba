"""Random presentation generators and the curated example corpus."""
from __future__ import annotations

import random

from .braidlink import FramedBraidLink, _cycles, linking_matrix
from .clasper import ClasperSpec
from .intlin import IntMatrix
from .spin import SurgeryPresentation, spin_structures

E8_MATRIX = [
    [-2, 1, 0, 0, 0, 0, 0, 0],
    [1, -2, 1, 0, 0, 0, 0, 0],
    [0, 1, -2, 1, 0, 0, 0, 1],
    [0, 0, 1, -2, 1, 0, 0, 0],
    [0, 0, 0, 1, -2, 1, 0, 0],
    [0, 0, 0, 0, 1, -2, 1, 0],
    [0, 0, 0, 0, 0, 1, -2, 0],
    [0, 0, 1, 0, 0, 0, 0, -2],
]


def random_word(rng: random.Random, strands: int, length: int) -> tuple[int, ...]:
    if strands < 2:
        return ()
    return tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length))


def random_link(
    rng: random.Random,
    max_strands: int = 4,
    max_length: int = 8,
    framing_range: int = 3,
    kernel_bias: float = 0.0,
) -> FramedBraidLink:
    """Random framed braid closure.

    With probability ``kernel_bias`` the framings are chosen so that the all-ones
    vector lies in the integer kernel (b_1 > 0), occasionally perturbed by an
    even amount.
    """
    n = rng.randint(1, max_strands)
    word = random_word(rng, n, rng.randint(0, max_length))
    nc = len(_cycles(n, word))
    if rng.random() < kernel_bias:
        B = linking_matrix(FramedBraidLink(n, word, (0,) * nc))
        framings = [-sum(B[i, j] for j in range(nc) if j != i) for i in range(nc)]
        if rng.random() < 0.3:
            framings[rng.randrange(nc)] += 2 * rng.choice((1, -1))
    else:
        framings = [rng.randint(-framing_range, framing_range) for _ in range(nc)]
    return FramedBraidLink(n, word, tuple(framings))


def random_presentation(rng: random.Random, **kw) -> SurgeryPresentation:
    return SurgeryPresentation(link=random_link(rng, **kw))


def random_knot(rng: random.Random, max_strands: int = 4, max_length: int = 12) -> FramedBraidLink:
    """Random braid whose closure has one component (rejection sampling)."""
    while True:
        n = rng.randint(1, max_strands)
        word = random_word(rng, n, rng.randint(0, max_length))
        if len(_cycles(n, word)) == 1:
            return FramedBraidLink(n, word, (0,))


def random_spec(rng: random.Random, link: FramedBraidLink, framing_range: int = 2) -> ClasperSpec:
    avail = list(range(1, link.strands + 1))
    leaves = []
    for _ in range(3):
        if avail and rng.random() < 0.6:
            a = rng.choice(avail)
            b = a
            while b + 1 in avail and rng.random() < 0.5:
                b += 1
            leaves.append((a, b))
            avail = [x for x in avail if x < a or x > b]
        else:
            leaves.append(None)
    framings = tuple(rng.randint(-framing_range, framing_range) for _ in range(3))
    return ClasperSpec(rng.randint(0, len(link.word)), tuple(leaves), framings)


def random_symmetric(rng: random.Random, n: int, bound: int = 5) -> IntMatrix:
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randint(-bound, bound)
    return IntMatrix.from_rows(rows, cols=n)


def random_unimodular(rng: random.Random, n: int, steps: int = 6) -> IntMatrix:
    """Product of random elementary row operations, swaps and sign flips."""
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        if n == 0:
            break
        i, j = rng.randrange(n), rng.randrange(n)
        kind = rng.random()
        if i != j and kind < 0.7:
            q = rng.choice((-2, -1, 1, 2))
            U[i] = [a + q * b for a, b in zip(U[i], U[j])]
        elif i != j and kind < 0.85:
            U[i], U[j] = U[j], U[i]
        else:
            U[i] = [-a for a in U[i]]
    return IntMatrix.from_rows(U, cols=n)


def curated() -> dict[str, tuple[SurgeryPresentation, tuple[int, ...], str]]:
    """name -> (presentation, spin vector, notes); spin defaults to the first characteristic vector."""
    D = SurgeryPresentation.diagram
    M = SurgeryPresentation.from_matrix
    entries = {
        "s3": (D(0, [], []), None, "the 3-sphere, empty surgery link"),
        "unknot_plus1": (D(1, [], [1]), None, "+1 surgery on the unknot is S^3"),
        "unknot_minus1": (D(1, [], [-1]), None, "-1 surgery on the unknot is S^3"),
        "lens_3_1": (D(1, [], [3]), None, "L(3,1)"),
        "lens_5_1": (D(1, [], [5]), None, "L(5,1), pairing -1/5"),
        "lens_7_1": (D(1, [], [7]), None, "L(7,1), pairing -1/7"),
        "lens_7_neg": (D(1, [], [-7]), None, "-7 surgery on the unknot, pairing 1/7"),
        "lens_3_chain": (D(2, [1, 1], [2, 2]), None, "two-component chain, framings 2 2, order 3"),
        "lens_5_chain": (D(2, [1, 1], [2, 3]), None, "two-component chain, framings 2 3, order 5"),
        "lens_7_chain": (D(2, [1, 1], [2, 4]), None, "two-component chain, framings 2 4, pairing class of -1/7"),
        "lens_7_chain_disc2": (D(2, [1, 1], [-4, -2]), None, "two-component chain, framings -4 -2, pairing class of 2/7"),
        "hopf_2_3": (D(2, [1, 1], [2, 3]), None, "Hopf link with framings 2 and 3"),
        "poincare_trefoil": (D(2, [-1, -1, -1], [1]), None, "+1 surgery on the left trefoil"),
        "poincare_e8": (M(E8_MATRIX), None, "negative definite E8 plumbing, matrix only"),
        "borromean_torus": (D(3, [1, -2, 1, -2, 1, -2], [0, 0, 0]), (0, 0, 0), "0-surgery on the Borromean rings, the 3-torus"),
        "s1xs2_even": (D(1, [], [0]), (0,), "S^1 x S^2 with spin structure C = [0]"),
        "s1xs2_odd": (D(1, [], [0]), (1,), "S^1 x S^2 with spin structure C = [1]"),
    }
    out = {}
    for name, (p, spin, notes) in entries.items():
        p = SurgeryPresentation(link=p.link, matrix=p.matrix, label=name)
        out[name] = (p, spin if spin is not None else spin_structures(p)[0], notes)
    return out
