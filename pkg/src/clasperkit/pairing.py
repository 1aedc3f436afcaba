"""First homology and torsion linking pairings of surgery presentations.

Sign convention: the pairing is presented by -B^{-1}, so the lens space
L(p, 1) given by a p-framed unknot has lambda(g, g) = -1/p.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm, prod
from typing import Sequence

from .intlin import IntMatrix, as_matrix, rational_inverse, smith_normal_form
from .spin import SurgeryPresentation

DEFAULT_2TORSION_CAP = 2 ** 8
BRUTE_FORCE_CAP = 10 ** 4


class Outcome(enum.Enum):
    YES = "Yes"
    NO = "No"
    UNDECIDED = "Undecided"

    def __str__(self) -> str:
        return self.value


class DegeneratePairing(ValueError):
    pass


class SizeCap(ValueError):
    pass


def mod1(x) -> Fraction:
    """Normalise a rational into [0, 1), i.e. an element of Q/Z."""
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Z^rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... and each d_i >= 2."""

    factors: tuple[int, ...] = ()
    rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(d) for d in self.factors))
        for d in self.factors:
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
        for a, b in zip(self.factors, self.factors[1:]):
            if b % a:
                raise ValueError(f"{a} does not divide {b}")

    @property
    def torsion_order(self) -> int:
        return prod(self.factors)

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.factors]
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        return " + ".join(parts) if parts else "0"


def invariant_factors_of_orders(orders: Sequence[int]) -> tuple[int, ...]:
    """Invariant factors of a product of cyclic groups of the given orders."""
    D = IntMatrix.diagonal(list(orders))
    return tuple(d for d in smith_normal_form(D).diagonal if d > 1)


def h1(p: SurgeryPresentation) -> FiniteAbelianGroup:
    B = p.linking_matrix
    diag = smith_normal_form(B).diagonal
    diag += [0] * (B.rows - len(diag))
    return FiniteAbelianGroup(tuple(d for d in diag if d > 1), sum(1 for d in diag if d == 0))


@dataclass(frozen=True)
class TorsionPairing:
    """Symmetric Q/Z-valued pairing on generators of the given orders."""

    orders: tuple[int, ...]
    gram: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        orders = tuple(int(o) for o in self.orders)
        gram = tuple(tuple(mod1(x) for x in row) for row in self.gram)
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "gram", gram)
        k = len(orders)
        if len(gram) != k or any(len(r) != k for r in gram):
            raise ValueError("gram matrix shape does not match generator count")
        for o in orders:
            if o < 2:
                raise ValueError("generator orders must exceed 1")
        for i in range(k):
            for j in range(k):
                if gram[i][j] != gram[j][i]:
                    raise ValueError("pairing is not symmetric")
                if mod1(orders[i] * gram[i][j]) != 0:
                    raise ValueError(f"order {orders[i]} does not kill lambda(g{i}, g{j})")

    @classmethod
    def diagonal(cls, values: Sequence, orders: Sequence[int] | None = None) -> TorsionPairing:
        vals = [Fraction(v) for v in values]
        if orders is None:
            orders = [v.denominator for v in vals]
        k = len(vals)
        return cls(tuple(orders), tuple(tuple(vals[i] if i == j else Fraction(0) for j in range(k)) for i in range(k)))

    @property
    def size(self) -> int:
        return len(self.orders)

    @property
    def group_order(self) -> int:
        return prod(self.orders)

    @property
    def exponent(self) -> int:
        return lcm(*self.orders) if self.orders else 1

    def integer_gram(self) -> list[list[int]]:
        """N * lambda(g_i, g_j) as integers mod N, N the exponent."""
        N = self.exponent
        return [[int(x * N) % N for x in row] for row in self.gram]

    def _basis(self):
        return [tuple(int(i == j) for j in range(self.size)) for i in range(self.size)]

    def value(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        return mod1(sum(a * b * self.gram[i][j] for i, a in enumerate(x) for j, b in enumerate(y)))

    def group(self) -> FiniteAbelianGroup:
        return FiniteAbelianGroup(invariant_factors_of_orders(self.orders))

    def is_nondegenerate(self, brute_force_cap: int = BRUTE_FORCE_CAP) -> bool:
        """Injectivity of the adjoint x -> lambda(x, -).

        Small groups are checked element by element; larger ones by counting
        the image of the adjoint through a Smith form.
        """
        if not self.orders:
            return True
        if self.group_order <= brute_force_cap:
            return all(
                any(self.value(x, e) for e in self._basis())
                for x in _elements(self.orders)
                if any(x)
            )
        N, k = self.exponent, self.size
        M = self.integer_gram()
        stacked = M + [[N if i == j else 0 for j in range(k)] for i in range(k)]
        lattice_index = prod(smith_normal_form(stacked).diagonal)
        image = N ** k // lattice_index
        return image == self.group_order

    def __str__(self) -> str:
        if not self.orders:
            return "[]"
        if all(self.gram[i][j] == 0 for i in range(self.size) for j in range(self.size) if i != j):
            return "[" + ", ".join(_signed_str(self.gram[i][i]) for i in range(self.size)) + "]"
        return "[" + "; ".join(", ".join(str(x) for x in row) for row in self.gram) + "]"


def _signed_str(x: Fraction) -> str:
    # print the representative in (-1/2, 1/2]
    y = x - 1 if x > Fraction(1, 2) else x
    return str(y)


def _integer_inverse(U: IntMatrix) -> list[list[int]]:
    inv = rational_inverse(U)
    return [[int(x) for x in row] for row in inv]


def torsion_pairing(p: SurgeryPresentation) -> TorsionPairing:
    """Torsion linking pairing on the Smith-form generators of coker B.

    With ``U B V = D``, generator i is ``g_i = U^{-1} e_i`` and
    ``B (V e_i) = d_i g_i``, so lambda(g_i, g_j) = -(V e_i) . g_j / d_i.
    This also works when B is singular, since V e_i stays in the torsion
    complement of the kernel.
    """
    B = p.linking_matrix
    n = B.rows
    if n == 0:
        return TorsionPairing((), ())
    U, D, V = smith_normal_form(B)
    Uinv = _integer_inverse(U)
    tors = [i for i, d in enumerate(D.diag()) if d > 1]
    gens = {i: [Uinv[r][i] for r in range(n)] for i in tors}
    lifts = {i: [V[r, i] for r in range(n)] for i in tors}
    gram = tuple(
        tuple(
            mod1(Fraction(-sum(a * b for a, b in zip(lifts[i], gens[j])), D[i, i]))
            for j in tors
        )
        for i in tors
    )
    return TorsionPairing(tuple(D[i, i] for i in tors), gram)


def linking_pairing_from_inverse(B) -> list[list[Fraction]]:
    """-B^{-1} mod 1 on the standard basis (nonsingular B); an independent route."""
    inv = rational_inverse(as_matrix(B))
    return [[mod1(-x) for x in row] for row in inv]


# --------------------------------------------------------------------------
# primary decomposition


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def primes_of(pairing: TorsionPairing) -> list[int]:
    return _prime_factors(pairing.group_order) if pairing.orders else []


def primary_part(pairing: TorsionPairing, p: int) -> TorsionPairing:
    """Restriction to the p-primary subgroup, generated by m_i g_i with o_i = p^e m_i."""
    orders, mults = [], []
    for i, o in enumerate(pairing.orders):
        pe = 1
        while o % p == 0:
            o //= p
            pe *= p
        if pe > 1:
            orders.append(pe)
            mults.append((i, o))
    gram = tuple(
        tuple(mi * mj * pairing.gram[i][j] for j, mj in mults) for i, mi in mults
    )
    return TorsionPairing(tuple(orders), gram)


def legendre(a: int, p: int) -> int:
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def odd_jordan_decomposition(pairing: TorsionPairing, p: int) -> list[tuple[int, int]]:
    """Diagonalise the p-primary part (p odd) by symmetric elimination mod p^K.

    Returns pivots ``(s, u)``: a cyclic summand of order p^s with
    lambda = u / p^s, u a unit (returned mod p^s).
    """
    if p == 2:
        raise ValueError("odd primes only")
    part = primary_part(pairing, p)
    if not part.orders:
        return []
    N = part.exponent
    K = 0
    while p ** K < N:
        K += 1
    mod = p ** K
    G = [[int(x * mod) % mod for x in row] for row in part.gram]

    def val(x: int) -> int:
        x %= mod
        if x == 0:
            return K
        v = 0
        while x % p == 0:
            x //= p
            v += 1
        return v

    pivots = []
    idx = list(range(len(G)))
    while idx:
        best = min(((val(G[i][j]), i != j, i, j) for i in idx for j in idx), default=None)
        v, offdiag, i, j = best
        if v == K:
            break  # remaining generators pair trivially with everything
        if offdiag and val(G[i][i]) > v:
            # h_i <- h_i + h_j; p odd so the new diagonal has valuation v
            new_ii = (G[i][i] + 2 * G[i][j] + G[j][j]) % mod
            for r in idx:
                if r != i:
                    G[i][r] = G[r][i] = (G[i][r] + G[j][r]) % mod
            G[i][i] = new_ii
        piv = G[i][i]
        assert val(piv) == v
        s = K - v
        smod = p ** s
        u = (piv // p ** v) % smod
        uinv = pow(u, -1, smod)
        rest = [r for r in idx if r != i]
        c = {r: ((G[r][i] // p ** v) * uinv) % smod for r in rest}
        newG = {}
        for r in rest:
            for t in rest:
                newG[r, t] = (G[r][t] - c[r] * G[i][t] - c[t] * G[r][i] + c[r] * c[t] * piv) % mod
        for (r, t), x in newG.items():
            G[r][t] = x
        pivots.append((s, u))
        idx = rest
    return sorted(pivots)


def odd_invariants(pairing: TorsionPairing, p: int) -> dict[int, tuple[int, int]]:
    """{s: (rank, Legendre class of the block discriminant)} for the p-part, p odd."""
    blocks: dict[int, list[int]] = {}
    for s, u in odd_jordan_decomposition(pairing, p):
        blocks.setdefault(s, []).append(u)
    return {s: (len(us), legendre(prod(us), p)) for s, us in sorted(blocks.items())}


# --------------------------------------------------------------------------
# isomorphism


def _elements(orders: Sequence[int]):
    def rec(i):
        if i == len(orders):
            yield ()
            return
        for c in range(orders[i]):
            for rest in rec(i + 1):
                yield (c,) + rest
    return list(rec(0))


def _find_isometry(a: TorsionPairing, b: TorsionPairing) -> list[tuple[int, ...]] | None:
    """Backtracking search for images of a's generators in b preserving the pairing.

    Any pairing-preserving homomorphism out of a nondegenerate pairing is
    injective, so for groups of equal order a hit is an isomorphism.
    """
    N = lcm(a.exponent, b.exponent)
    Ga = [[int(x * N) % N for x in row] for row in a.gram]
    Gb = [[int(x * N) % N for x in row] for row in b.gram]
    elems = _elements(b.orders)

    def pair_b(x, y):
        return sum(x[i] * y[j] * Gb[i][j] for i in range(len(x)) if x[i] for j in range(len(y)) if y[j]) % N

    def order_divides(x, o):
        return all((o * xi) % oi == 0 for xi, oi in zip(x, b.orders))

    candidates = []
    for i, o in enumerate(a.orders):
        candidates.append([x for x in elems if order_divides(x, o) and pair_b(x, x) == Ga[i][i]])

    images: list[tuple[int, ...]] = []

    def rec(i):
        if i == a.size:
            return True
        for x in candidates[i]:
            if all(pair_b(x, images[j]) == Ga[i][j] for j in range(i)):
                images.append(x)
                if rec(i + 1):
                    return True
                images.pop()
        return False

    return list(images) if rec(0) else None


def pairing_brute_force_isomorphic(a: TorsionPairing, b: TorsionPairing, cap: int = BRUTE_FORCE_CAP) -> Outcome:
    """Exhaustive search over generator images; the ground truth for small groups."""
    if max(a.group_order, b.group_order) > cap:
        raise SizeCap(f"group order exceeds {cap}")
    if a.group_order != b.group_order:
        return Outcome.NO
    if a.group_order == 1:
        return Outcome.YES
    if not (a.is_nondegenerate() and b.is_nondegenerate()):
        raise DegeneratePairing("brute force needs nondegenerate pairings")
    return Outcome.YES if _find_isometry(a, b) is not None else Outcome.NO


def pairing_isomorphic(
    a: TorsionPairing, b: TorsionPairing, cap_2torsion: int = DEFAULT_2TORSION_CAP
) -> Outcome:
    """Decide isometry: complete for odd torsion, capped search on the 2-part."""
    for x in (a, b):
        if not x.is_nondegenerate():
            raise DegeneratePairing("pairing is degenerate")
    if a.group() != b.group():
        return Outcome.NO
    for p in primes_of(a):
        if p == 2:
            continue
        if odd_invariants(a, p) != odd_invariants(b, p):
            return Outcome.NO
    a2, b2 = primary_part(a, 2), primary_part(b, 2)
    if a2.group_order == 1:
        return Outcome.YES
    if a2.group_order > cap_2torsion:
        return Outcome.UNDECIDED
    return Outcome.YES if _find_isometry(a2, b2) is not None else Outcome.NO


def normal_form_summary(pairing: TorsionPairing) -> dict:
    """Per-prime data: odd primes give {p^s: (rank, discriminant class)}."""
    out: dict = {}
    for p in primes_of(pairing):
        if p == 2:
            part = primary_part(pairing, 2)
            out[2] = {"orders": list(part.orders), "gram": [[str(x) for x in r] for r in part.gram]}
        else:
            out[p] = {p ** s: v for s, v in odd_invariants(pairing, p).items()}
    return out
