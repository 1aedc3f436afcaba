"""Randomized invariance properties, runnable from the CLI and scripts.

Every property is a function ``check(rng, template) -> None`` that raises
AssertionError (or any other exception) on failure.  Case i of property
``name`` under seed s uses ``random.Random(f"{s}:{name}:{i}")`` so results do
not depend on the order in which cases are run.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import braidlink, corpus
from .braidlink import FramedBraidLink
from .clasper import corresponding_spin, insert_clasper, predicted_block_matrix
from .intlin import (
    IntMatrix,
    block_diag,
    determinant,
    nullity_mod2,
    signature,
    smith_normal_form,
    solve_mod2_affine,
)
from .pairing import (
    Outcome,
    h1,
    pairing_brute_force_isomorphic,
    pairing_isomorphic,
    torsion_pairing,
)
from .spin import (
    SpinPresentation,
    SurgeryPresentation,
    rochlin,
    spin_structures,
    surface_classes,
    twist,
)


def check_snf(rng, template):
    m, n = rng.randint(0, 8), rng.randint(0, 8)
    A = IntMatrix.from_rows([[rng.randint(-99, 99) for _ in range(n)] for _ in range(m)], cols=n)
    U, D, V = smith_normal_form(A)
    assert U @ A @ V == D
    assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1
    d = D.diag()
    assert all(D[i, j] == 0 for i in range(m) for j in range(n) if i != j)
    assert all(x >= 0 for x in d)
    nz = [x for x in d if x]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


def check_signature(rng, template):
    S1 = corpus.random_symmetric(rng, rng.randint(0, 6))
    S2 = corpus.random_symmetric(rng, rng.randint(0, 6))
    assert signature(-S1) == -signature(S1)
    assert signature(block_diag(S1, S2)) == signature(S1) + signature(S2)


def check_characteristic_exists(rng, template):
    B = corpus.random_symmetric(rng, rng.randint(0, 8), bound=9)
    assert solve_mod2_affine(B, [d & 1 for d in B.diag()]).consistent


def check_spin_count(rng, template):
    B = corpus.random_symmetric(rng, rng.randint(0, 8), bound=4)
    p = SurgeryPresentation(matrix=B)
    assert len(spin_structures(p)) == 2 ** nullity_mod2(B)


def _rewrite(rng, word: list[int]) -> list[int]:
    """Apply one random braid relation somewhere in the word, if possible."""
    for _ in range(20):
        if len(word) < 2:
            return word
        i = rng.randrange(len(word) - 1)
        a, b = word[i], word[i + 1]
        if abs(abs(a) - abs(b)) >= 2:
            return word[:i] + [b, a] + word[i + 2:]
        if i + 2 < len(word):
            c = word[i + 2]
            if a == c and abs(abs(a) - abs(b)) == 1 and (a > 0) == (b > 0):
                return word[:i] + [b, a, b] + word[i + 3:]
        if rng.random() < 0.2:
            k = rng.choice(word)
            return word[:i] + [k, -k] + word[i:]
    return word


def check_linking_braid_relations(rng, template):
    n = rng.randint(3, 5)
    word = list(corpus.random_word(rng, n, rng.randint(0, 10)))
    # seed a braid-relation pattern so rewrites are possible
    k, s = rng.randint(1, n - 2), rng.choice((1, -1))
    pos = rng.randint(0, len(word))
    word = word[:pos] + [s * k, s * (k + 1), s * k] + word[pos:]
    nc = len(braidlink._cycles(n, tuple(word)))
    framings = tuple(rng.randint(-3, 3) for _ in range(nc))
    rewritten = word
    for _ in range(6):
        rewritten = _rewrite(rng, rewritten)
    base = FramedBraidLink(n, tuple(word), framings)
    other = FramedBraidLink(n, tuple(rewritten), framings)
    assert braidlink.components(base) == braidlink.components(other)
    assert braidlink.linking_matrix(base) == braidlink.linking_matrix(other)


def check_arf_oracle(rng, template):
    knot = corpus.random_knot(rng, max_strands=4, max_length=12)
    a = braidlink.arf(knot)
    det = braidlink.alexander_at_minus_one(braidlink.connected_seifert_matrix(knot))
    assert (a == 0) == (abs(det) % 8 in (1, 7))


def check_markov(rng, template):
    link = corpus.random_link(rng, max_strands=4, max_length=8)
    if link.strands == 0:
        return
    st = braidlink.stabilize(link, rng.choice((1, -1)))
    assert braidlink.linking_matrix(st) == braidlink.linking_matrix(link)
    for c in spin_structures(SurgeryPresentation(link=link)):
        assert braidlink.arf(st, c) == braidlink.arf(link, c)


def check_characteristic_proper(rng, template):
    p = corpus.random_presentation(rng, max_strands=4, max_length=8, kernel_bias=0.3)
    for c in spin_structures(p):
        braidlink.arf(p.link, c)  # raises ArfUndefined for improper sublinks


def _odd_det_matrix(rng, target=None):
    while True:
        B = corpus.random_symmetric(rng, rng.randint(1, 3), bound=6)
        d = abs(determinant(B))
        if d % 2 == 1 and d <= 200 and (target is None or d == target):
            return B


def check_pairing_vs_brute_force(rng, template):
    A = _odd_det_matrix(rng)
    d = abs(determinant(A))
    B = _odd_det_matrix(rng, d) if d <= 25 else A
    ta = torsion_pairing(SurgeryPresentation(matrix=A))
    tb = torsion_pairing(SurgeryPresentation(matrix=B))
    assert pairing_isomorphic(ta, tb) == pairing_brute_force_isomorphic(ta, tb)


def check_congruence(rng, template):
    B = corpus.random_symmetric(rng, rng.randint(1, 4), bound=5)
    U = corpus.random_unimodular(rng, B.rows)
    p, q = SurgeryPresentation(matrix=B), SurgeryPresentation(matrix=U.T @ B @ U)
    assert h1(p) == h1(q)
    assert pairing_isomorphic(torsion_pairing(p), torsion_pairing(q)) in (Outcome.YES, Outcome.UNDECIDED)


def check_stabilization(rng, template):
    link = corpus.random_link(rng, max_strands=4, max_length=8)
    eps = rng.choice((1, -1))
    p = SurgeryPresentation(link=link)
    q = SurgeryPresentation(link=braidlink.add_split_unknot(link, eps))
    assert q.linking_matrix == block_diag(p.linking_matrix, [[eps]])
    assert h1(p) == h1(q)
    assert pairing_isomorphic(torsion_pairing(p), torsion_pairing(q)) in (Outcome.YES, Outcome.UNDECIDED)
    for c in spin_structures(p):
        assert rochlin(SpinPresentation(p, c)) == rochlin(SpinPresentation(q, c + (1,)))


def _surgery_case(rng, template):
    p = corpus.random_presentation(rng, max_strands=4, max_length=7, kernel_bias=0.2)
    spec = corpus.random_spec(rng, p.link)
    return p, spec, insert_clasper(p, spec, template)


def check_clasper_structural(rng, template):
    p, spec, res = _surgery_case(rng, template)
    assert res.presentation.linking_matrix == predicted_block_matrix(p.linking_matrix, spec, res.leaf_vectors)


def check_pairing_invariance(rng, template):
    p, spec, res = _surgery_case(rng, template)
    q = res.presentation
    assert h1(p) == h1(q)
    assert pairing_isomorphic(torsion_pairing(p), torsion_pairing(q)) in (Outcome.YES, Outcome.UNDECIDED)


def check_rochlin_mod8(rng, template):
    p, spec, res = _surgery_case(rng, template)
    for c in spin_structures(p):
        c2 = corresponding_spin(c, res)
        r1 = rochlin(SpinPresentation(p, c))
        r2 = rochlin(SpinPresentation(res.presentation, c2))
        assert (r1 - r2) % 8 == 0
        if spec.is_trivial:
            assert r1 == r2


def check_twist(rng, template):
    p = corpus.random_presentation(rng, max_strands=4, max_length=8, kernel_bias=0.7)
    spins = spin_structures(p)
    s = SpinPresentation(p, rng.choice(spins))
    classes = surface_classes(p)
    kappa = [0] * p.num_components
    for k in classes:
        if rng.random() < 0.5:
            kappa = [(a + b) & 1 for a, b in zip(kappa, k)]
    assert (rochlin(twist(s, kappa)) - rochlin(s)) % 8 == 0


PROPERTIES: dict[str, Callable] = {
    "snf_invariants": check_snf,
    "signature_additivity": check_signature,
    "characteristic_exists": check_characteristic_exists,
    "spin_count": check_spin_count,
    "linking_braid_relations": check_linking_braid_relations,
    "arf_vs_determinant": check_arf_oracle,
    "markov_stabilization": check_markov,
    "characteristic_proper": check_characteristic_proper,
    "pairing_vs_brute_force": check_pairing_vs_brute_force,
    "congruence_invariance": check_congruence,
    "stabilization_invariance": check_stabilization,
    "clasper_structural": check_clasper_structural,
    "pairing_invariance": check_pairing_invariance,
    "rochlin_mod8_invariance": check_rochlin_mod8,
    "spin_twist_invariance": check_twist,
}


@dataclass
class PropertyResult:
    name: str
    passed: int
    total: int
    first_failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.passed == self.total


def run_property(name: str, seed: int, count: int, template: str = "standard") -> PropertyResult:
    check = PROPERTIES[name]
    passed, failure = 0, None
    for i in range(count):
        rng = random.Random(f"{seed}:{name}:{i}")
        try:
            check(rng, template)
            passed += 1
        except Exception as e:  # any exception is a failed case
            if failure is None:
                failure = f"case {i}: {type(e).__name__}" + (f": {e}" if str(e) else "")
    return PropertyResult(name, passed, count, failure)


def run_all(seed: int, count: int, template: str = "standard", names=None) -> list[PropertyResult]:
    return [run_property(n, seed, count, template) for n in (names or PROPERTIES)]
