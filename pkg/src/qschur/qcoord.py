"""The quantum matrix bialgebra A_q(n) with q = v^2.

Monomials ``c^A`` are labelled by n x n nonnegative integer matrices, stored
as flat row-major tuples (``MatIndex``).  The normal order of the factors is
column-major: ``c11^a11 c21^a21 ... cn1^an1 c12^a12 ... cnn^ann``.

Products are normalized by inserting one generator at a time at the right
end of a normal monomial (``CoordAlgebra.rmul``).  Each insertion moves the
generator left past larger factors using the defining relations

    c_ij c_il = c_il c_ij
    c_ij c_rs = q c_rs c_ij                         (i > r, j <= s)
    c_ij c_rs = (q - 1) c_rj c_is + c_rs c_ij       (i > r, j > s)

rewritten so that the smaller factor (in column-major order) ends up on the
left.  ``rewrite_word`` is an independent word-rewriting engine that applies
the same swaps at randomly chosen positions; it is used as a confluence
witness.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from math import comb, isqrt

from .exactnum import ONE, LaurentPoly, vpow

DEFAULT_DEGREE_CAP = 12

Q = vpow(2)
QINV = vpow(-2)
ONE_MINUS_QINV = ONE - QINV


# MatIndex helpers -------------------------------------------------------

def mat(rows):
    """Flat MatIndex from a list of rows."""
    return tuple(int(x) for row in rows for x in row)


def size_of(A):
    n = isqrt(len(A))
    if n * n != len(A):
        raise ValueError("MatIndex length is not a square")
    return n


def rows_of(A, n=None):
    n = n or size_of(A)
    return [list(A[i * n:(i + 1) * n]) for i in range(n)]


def unit(n, i, j):
    """E_ij with 1-based indices."""
    A = [0] * (n * n)
    A[(i - 1) * n + (j - 1)] = 1
    return tuple(A)


def diag(lam):
    n = len(lam)
    A = [0] * (n * n)
    for i, x in enumerate(lam):
        A[i * n + i] = x
    return tuple(A)


def madd(A, B):
    return tuple(a + b for a, b in zip(A, B))


def sigma(A):
    return sum(A)


def row_sums(A, n=None):
    n = n or size_of(A)
    return tuple(sum(A[i * n:(i + 1) * n]) for i in range(n))


def col_sums(A, n=None):
    n = n or size_of(A)
    return tuple(sum(A[i * n + j] for i in range(n)) for j in range(n))


def offdiag(A, n=None):
    n = n or size_of(A)
    return tuple(0 if i == j else A[i * n + j] for i in range(n) for j in range(n))


def diagonal(A, n=None):
    n = n or size_of(A)
    return tuple(A[i * n + i] for i in range(n))


def compositions(r, parts):
    """All tuples of ``parts`` nonnegative integers summing to ``r``, sorted."""
    if parts == 0:
        return [()] if r == 0 else []
    out = []
    for bars in itertools.combinations(range(r + parts - 1), parts - 1):
        prev = -1
        comp = []
        for b in bars:
            comp.append(b - prev - 1)
            prev = b
        comp.append(r + parts - 1 - prev - 1)
        out.append(tuple(comp))
    return sorted(out)


@lru_cache(maxsize=None)
def xi(n, r):
    """Xi(n, r): all n x n matrices with entry sum r, sorted."""
    return tuple(compositions(r, n * n))


def xi_count(n, r):
    return comb(r + n * n - 1, n * n - 1)


def d_value(A, n=None):
    """The exponent d_A with [A] = v^(-d_A) xi_A.

    d_A = -sum_{i<s, j>t} a_ij a_st + sum_{i} sum_{j>t} a_ij a_it
    """
    n = n or size_of(A)
    a = rows_of(A, n)
    d = 0
    for i in range(n):
        for j in range(n):
            if not a[i][j]:
                continue
            for t in range(j):
                d += a[i][j] * a[i][t]
                for s in range(i + 1, n):
                    d -= a[i][j] * a[s][t]
    return d


def render(A, n=None):
    return rows_of(A, n)


# Coordinate algebra --------------------------------------------------------

def _acc(target, key, coeff):
    s = target.get(key)
    s = coeff if s is None else s + coeff
    if s:
        target[key] = s
    else:
        target.pop(key, None)


class CoordAlgebra:
    """Normal forms and coproducts in A_q(n), with memo tables.

    Generators are addressed by flat 0-based index ``g = i*n + j``.  The
    caches only grow and never change existing entries.
    """

    def __init__(self, n, degree_cap=DEFAULT_DEGREE_CAP):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.degree_cap = degree_cap
        self.zero = (0,) * (n * n)
        # column-major position of each generator
        self.pos = [(g % n) * n + g // n for g in range(n * n)]
        self._rmul = {}
        self._coprod = {}

    # generator bookkeeping
    def gen(self, i, j):
        """Flat index of c_ij, 1-based."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"generator c{i}{j} out of range for n={self.n}")
        return (i - 1) * self.n + (j - 1)

    def last_factor(self, A):
        best, bp = None, -1
        for g, a in enumerate(A):
            if a and self.pos[g] > bp:
                best, bp = g, self.pos[g]
        return best

    def factor_sequence(self, A):
        """Flat generator indices of c^A in normal order."""
        order = sorted(range(self.n * self.n), key=lambda g: self.pos[g])
        seq = []
        for g in order:
            seq.extend([g] * A[g])
        return seq

    def swap(self, x, y):
        """Rewrite ``c_x c_y`` with ``c_x`` after ``c_y`` in normal order.

        Returns a list of ``(coeff, (first, second))`` whose words are in
        normal order.
        """
        n = self.n
        a, b = divmod(x, n)
        c, d = divmod(y, n)
        if b == d:  # same column, a > c
            return [(Q, (y, x))]
        # b > d
        if a == c:
            return [(ONE, (y, x))]
        if a < c:
            return [(QINV, (y, x))]
        return [(ONE, (y, x)), (ONE_MINUS_QINV, (a * n + d, c * n + b))]

    def rmul(self, A, g):
        """Normal form of ``c^A * c_g`` as ``{MatIndex: LaurentPoly}``."""
        key = (A, g)
        hit = self._rmul.get(key)
        if hit is not None:
            return hit
        x = self.last_factor(A)
        if x is None or self.pos[x] <= self.pos[g]:
            B = list(A)
            B[g] += 1
            res = {tuple(B): ONE}
        else:
            Ap = list(A)
            Ap[x] -= 1
            Ap = tuple(Ap)
            res = {}
            for coeff, (u, w) in self.swap(x, g):
                for M, c1 in self.rmul(Ap, u).items():
                    c1 = coeff * c1
                    for N, c2 in self.rmul(M, w).items():
                        _acc(res, N, c1 * c2)
        self._rmul[key] = res
        return res

    def mul_poly_gen(self, poly, g):
        out = {}
        for A, c in poly.items():
            for B, d in self.rmul(A, g).items():
                _acc(out, B, c * d)
        return out

    def normalize(self, word, coeff=ONE):
        """Normal form of ``coeff * c_{w1} c_{w2} ...``; word of 1-based pairs."""
        if len(word) > self.degree_cap:
            raise ValueError(f"word length {len(word)} exceeds cap {self.degree_cap}")
        poly = {self.zero: coeff}
        for (i, j) in word:
            poly = self.mul_poly_gen(poly, self.gen(i, j))
        return poly

    def mul(self, p1, p2):
        """Product of two coordinate polynomials."""
        out = {}
        for B, d in p2.items():
            seq = self.factor_sequence(B)
            for A, c in p1.items():
                part = {A: c * d}
                for g in seq:
                    part = self.mul_poly_gen(part, g)
                for C, e in part.items():
                    _acc(out, C, e)
        return out

    def monomial(self, A):
        return {tuple(A): ONE}

    def coproduct(self, A):
        """Delta(c^A) as ``{(A1, A2): LaurentPoly}``.

        Computed multiplicatively: Delta(c^A) = Delta(c^(A - E_x)) Delta(c_x)
        with ``x`` the last normal-order factor of ``A``.
        """
        A = tuple(A)
        hit = self._coprod.get(A)
        if hit is not None:
            return hit
        if sum(A) > self.degree_cap:
            raise ValueError(f"degree {sum(A)} exceeds cap {self.degree_cap}")
        x = self.last_factor(A)
        if x is None:
            res = {(self.zero, self.zero): ONE}
        else:
            n = self.n
            i, j = divmod(x, n)
            prev = list(A)
            prev[x] -= 1
            res = {}
            for (L, R), c in self.coproduct(tuple(prev)).items():
                for t in range(n):
                    left = self.rmul(L, i * n + t)
                    right = self.rmul(R, t * n + j)
                    for L2, c1 in left.items():
                        c1 = c * c1
                        for R2, c2 in right.items():
                            _acc(res, (L2, R2), c1 * c2)
        self._coprod[A] = res
        return res

    def coproduct_poly(self, poly):
        out = {}
        for A, c in poly.items():
            for key, d in self.coproduct(A).items():
                _acc(out, key, c * d)
        return out

    def counit(self, A):
        """epsilon(c^A): 1 if A is diagonal, else 0."""
        n = self.n
        return int(all(A[i * n + j] == 0 for i in range(n) for j in range(n) if i != j))

    def qdet(self):
        """Quantum determinant sum_pi (-1)^l(pi) c_{1,1pi} ... c_{n,npi}."""
        n = self.n
        out = {}
        for perm in itertools.permutations(range(1, n + 1)):
            inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
            word = [(i + 1, perm[i]) for i in range(n)]
            for A, c in self.normalize(word, ONE if inv % 2 == 0 else -ONE).items():
                _acc(out, A, c)
        return out

    # independent rewriting engine
    def rewrite_word(self, word, coeff=ONE, rng=None, budget=100000):
        """Normalize by rewriting adjacent inversions in random order."""
        rng = rng or random.Random(0)
        pending = {tuple(self.gen(i, j) for i, j in word): coeff}
        done = {}
        steps = 0
        while pending:
            w, c = pending.popitem()
            if not c:
                continue
            bad = [k for k in range(len(w) - 1) if self.pos[w[k]] > self.pos[w[k + 1]]]
            if not bad:
                A = [0] * (self.n * self.n)
                for g in w:
                    A[g] += 1
                _acc(done, tuple(A), c)
                continue
            steps += 1
            if steps > budget:
                raise RuntimeError("rewrite step budget exhausted")
            k = rng.choice(bad)
            for d, (u, v) in self.swap(w[k], w[k + 1]):
                nw = w[:k] + (u, v) + w[k + 2:]
                _acc(pending, nw, c * d)
        return done


@lru_cache(maxsize=None)
def coord_algebra(n):
    """Shared ``CoordAlgebra`` for ``n``; its caches are append-only."""
    return CoordAlgebra(n)


def normalize(word, coeff=ONE, n=None):
    """Normal form of a word of 1-based generator pairs ``(i, j)``."""
    if n is None:
        n = max([max(i, j) for i, j in word], default=1)
    return coord_algebra(n).normalize(list(word), coeff)


def coproduct(A):
    return coord_algebra(size_of(A)).coproduct(tuple(A))


def qdet(n):
    return coord_algebra(n).qdet()


def project_h1(poly, ideal, l, lprime):
    """Image of a coordinate polynomial in the quotient by J, I or I-tilde.

    Monomials with an off-diagonal exponent >= l are killed.  Diagonal
    exponents are reduced mod l' (``"Itilde"``), mod l (``"I"``) or kept
    (``"J"``).  Keys of the result are reduced matrices (flat tuples).
    """
    if ideal not in ("J", "I", "Itilde"):
        raise ValueError(f"unknown ideal {ideal!r}")
    mod = {"J": None, "I": l, "Itilde": lprime}[ideal]
    out = {}
    for A, c in poly.items():
        red = reduce_label(A, l, mod)
        if red is not None:
            _acc(out, red, c)
    return out


def reduce_label(A, l, mod):
    n = size_of(A)
    red = list(A)
    for i in range(n):
        for j in range(n):
            k = i * n + j
            if i != j:
                if A[k] >= l:
                    return None
            elif mod is not None:
                red[k] = A[k] % mod
    return tuple(red)


def project_tensor_h1(tensor, ideal, l, lprime):
    mod = {"J": None, "I": l, "Itilde": lprime}[ideal]
    out = {}
    for (A, B), c in tensor.items():
        ra = reduce_label(A, l, mod)
        rb = reduce_label(B, l, mod)
        if ra is not None and rb is not None:
            _acc(out, (ra, rb), c)
    return out


def as_laurent(x):
    return x if isinstance(x, LaurentPoly) else LaurentPoly(x)
