"""Independent reference computations used only by the tests.

None of these share code with the package: determinantal divisors for Smith
forms, Descartes' rule on the characteristic polynomial for signatures, the
reduced Burau representation for Alexander polynomials, and quadratic-residue
enumeration for cyclic linking forms.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd


def det_fraction(M) -> Fraction:
    M = [[Fraction(x) for x in r] for r in M]
    n, d = len(M), Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            d = -d
        d *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return d


def determinantal_invariant_factors(A) -> list[int]:
    """Nonzero Smith diagonal from gcds of k x k minors."""
    m = len(A)
    n = len(A[0]) if m else 0
    divisors = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                g = gcd(g, int(det_fraction([[A[i][j] for j in cols] for i in rows])))
        if g == 0:
            break
        divisors.append(g)
    return [divisors[k] // divisors[k - 1] for k in range(1, len(divisors))]


def charpoly(S) -> list[Fraction]:
    """Coefficients c_n..c_0 of det(tI - S), Faddeev-LeVerrier."""
    n = len(S)
    S = [[Fraction(x) for x in r] for r in S]
    coeffs = [Fraction(1)]
    M = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        M = [[sum(S[i][l] * M[l][j] for l in range(n)) + (coeffs[-1] if i == j else 0) for j in range(n)] for i in range(n)]
        SM = [[sum(S[i][l] * M[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        coeffs.append(-sum(SM[i][i] for i in range(n)) / k)
    return coeffs


def signature_descartes(S) -> int:
    """Positive minus negative eigenvalues of a symmetric matrix.

    The characteristic polynomial is real-rooted, so Descartes' rule of signs
    counts positive roots exactly; apply it to p(t) and p(-t).
    """
    n = len(S)
    c = charpoly(S)
    while c and c[-1] == 0:
        c.pop()

    def changes(seq):
        s = [x for x in seq if x != 0]
        return sum(1 for a, b in zip(s, s[1:]) if (a > 0) != (b > 0))

    pos = changes(c)
    deg = len(c) - 1
    neg = changes([x * (-1) ** (deg - i) for i, x in enumerate(c)])
    assert deg <= n
    return pos - neg


def _mat_mul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def _inverse(G):
    m = len(G)
    A = [list(r) + [Fraction(int(a == b)) for b in range(m)] for a, r in enumerate(G)]
    for c in range(m):
        p = next(r for r in range(c, m) if A[r][c] != 0)
        A[c], A[p] = A[p], A[c]
        pv = A[c][c]
        A[c] = [x / pv for x in A[c]]
        for r in range(m):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return [r[m:] for r in A]


def burau_alexander(strands: int, word, t) -> Fraction:
    """Alexander polynomial at t of a braid closure, from the reduced Burau matrix.

    Defined up to units +-t^k, so compare after stripping powers of t.
    """
    m = strands - 1
    if m == 0:
        return Fraction(1)
    t = Fraction(t)
    P = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    for x in word:
        i0 = abs(x) - 1
        G = [[Fraction(int(a == b)) for b in range(m)] for a in range(m)]
        G[i0][i0] = -t
        if i0 > 0:
            G[i0][i0 - 1] = t
        if i0 + 1 < m:
            G[i0][i0 + 1] = Fraction(1)
        if x < 0:
            G = _inverse(G)
        P = _mat_mul(P, G)
    I_P = [[int(i == j) - P[i][j] for j in range(m)] for i in range(m)]
    return det_fraction(I_P) * (1 - t) / (1 - t ** strands)


def strip_prime(x: Fraction, p: int) -> Fraction:
    x = abs(x)
    if x == 0:
        return x
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
    while den % p == 0:
        den //= p
    return Fraction(num, den)


def seifert_alexander(V, t) -> Fraction:
    n = len(V)
    return det_fraction([[t * V[i][j] - V[j][i] for j in range(n)] for i in range(n)])


def cyclic_forms_isometric(a: int, b: int, p: int) -> bool:
    """<a/p> and <b/p> on Z/p are isometric iff a = u^2 b mod p for a unit u."""
    return any((u * u * b - a) % p == 0 for u in range(1, p))
