"""q-Schur algebras U(n, r) as duals of the degree-r part of A_q(n).

The basis ``xi_A`` (A in Xi(n, r)) is dual to the monomial basis ``c^A``.
The structure constant of ``xi_A xi_B`` on ``xi_C`` is the coefficient of
``c^A (x) c^B`` in ``Delta(c^C)``; the leg order is fixed once by a
self-check (see ``pairing_convention``).

Everything is first computed over Z[v, v^-1]; an algebra over a field is
obtained by specializing the generic table.
"""

from __future__ import annotations

import json
from functools import lru_cache

from .exactnum import LAURENT, FieldSpec, LaurentPoly, gauss_binom, qfact, qint
from .linalg import axpy
from .qcoord import (
    col_sums,
    compositions,
    coord_algebra,
    d_value,
    diag,
    madd,
    rows_of,
    row_sums,
    unit,
    xi,
)


class AlgElement:
    """Sparse element of a ``SchurAlgebra`` in the ``xi_A`` basis."""

    __slots__ = ("alg", "vec")

    def __init__(self, alg, vec=None):
        self.alg = alg
        self.vec = {k: x for k, x in (vec or {}).items() if x}

    def _check(self, other):
        if not isinstance(other, AlgElement):
            return False
        if other.alg is not self.alg:
            raise ValueError("elements live in different ambient algebras")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return AlgElement(self.alg, axpy(dict(self.vec), 1, other.vec))

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return AlgElement(self.alg, axpy(dict(self.vec), -1, other.vec))

    def __neg__(self):
        return AlgElement(self.alg, {k: -x for k, x in self.vec.items()})

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            self._check(other)
            return AlgElement(self.alg, self.alg.mult_vec(self.vec, other.vec))
        c = self.alg.ring.convert(other)
        return AlgElement(self.alg, {k: c * x for k, x in self.vec.items()})

    def __rmul__(self, other):
        c = self.alg.ring.convert(other)
        return AlgElement(self.alg, {k: c * x for k, x in self.vec.items()})

    def __pow__(self, k):
        out = self.alg.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.vec
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.alg is other.alg and self.vec == other.vec

    def __hash__(self):
        return hash(frozenset(self.vec.items()))

    def __bool__(self):
        return bool(self.vec)

    def coeff(self, A):
        return self.vec.get(tuple(A), self.alg.ring.zero())

    def support(self):
        return sorted(self.vec)

    def __repr__(self):
        terms = ", ".join(f"{rows_of(A, self.alg.n)}: {x}" for A, x in sorted(self.vec.items()))
        return f"AlgElement({{{terms}}})"


def _coproduct_table(n, r, swap_legs):
    ca = coord_algebra(n)
    table = {}
    for C in xi(n, r):
        for (L, R), c in ca.coproduct(C).items():
            A, B = (R, L) if swap_legs else (L, R)
            table.setdefault(A, {}).setdefault(B, {})[C] = c
    return table


@lru_cache(maxsize=None)
def generic_table(n, r, swap_legs=None):
    if swap_legs is None:
        swap_legs = pairing_convention() == "swapped"
    return _coproduct_table(n, r, swap_legs)


def _convention_passes(swap_legs):
    alg = SchurAlgebra(2, 2, LAURENT, table=_coproduct_table(2, 2, swap_legs))
    ks = [alg.k_lambda(lam) for lam in compositions(2, 2)]
    for a in ks:
        for b in ks:
            want = a if a == b else alg.zero()
            if a * b != want:
                return False
    e, f = alg.e(1), alg.f(1)
    return e * f - f * e == alg.qg3_rhs(1)


@lru_cache(maxsize=None)
def pairing_convention():
    """``"standard"``: (xi_A xi_B)(c) = (xi_A (x) xi_B)(Delta c), else ``"swapped"``.

    The idempotent law for the k_lambda and the commutator relation between
    e_1 and f_1 in U(2,2) are tested for both leg orders; exactly one must
    pass.
    """
    std = _convention_passes(False)
    swp = _convention_passes(True)
    if std == swp:
        raise RuntimeError(f"pairing self-check inconclusive: standard={std}, swapped={swp}")
    return "standard" if std else "swapped"


class SchurAlgebra:
    """U(n, r) over ``ring`` (``LAURENT`` or a ``FieldSpec``)."""

    def __init__(self, n, r, ring=LAURENT, table=None):
        if n < 1 or r < 0:
            raise ValueError("need n >= 1 and r >= 0")
        self.n = n
        self.r = r
        self.ring = ring
        self.basis = xi(n, r)
        self.index = {A: i for i, A in enumerate(self.basis)}
        self.ro = {A: row_sums(A, n) for A in self.basis}
        self.co = {A: col_sums(A, n) for A in self.basis}
        self.weights = tuple(compositions(r, n))
        self._table = table

    def __repr__(self):
        return f"SchurAlgebra(n={self.n}, r={self.r}, ring={self.ring!r})"

    @property
    def generic(self):
        if self.ring == LAURENT:
            return self
        return schur_algebra(self.n, self.r)

    @property
    def table(self):
        if self._table is None:
            if self.ring == LAURENT:
                self._table = generic_table(self.n, self.r)
            else:
                conv = self.ring.from_laurent
                self._table = {
                    A: {B: {C: conv(c) for C, c in col.items() if conv(c)} for B, col in row.items()}
                    for A, row in self.generic.table.items()
                }
        return self._table

    def dim(self):
        return len(self.basis)

    # products
    def mult_vec(self, x, y):
        table = self.table
        by_ro = {}
        for B, b in y.items():
            by_ro.setdefault(self.ro[B], []).append((B, b))
        out = {}
        for A, a in x.items():
            bucket = by_ro.get(self.co[A])
            if not bucket:
                continue
            row = table.get(A)
            if not row:
                continue
            for B, b in bucket:
                col = row.get(B)
                if col:
                    axpy(out, a * b, col)
        return out

    def mult(self, a, b):
        return a * b

    def element(self, vec):
        return AlgElement(self, {tuple(k): self.ring.convert(x) for k, x in vec.items()})

    def specialize(self, field):
        """The same algebra over ``field`` (shared instance)."""
        return schur_algebra(self.n, self.r, field)

    def specialize_element(self, x):
        if x.alg.ring != LAURENT:
            raise ValueError("only generic elements can be specialized")
        conv = self.ring.from_laurent
        return AlgElement(self, {A: conv(c) for A, c in x.vec.items()})

    # named elements
    def zero(self):
        return AlgElement(self, {})

    def xi(self, A):
        A = tuple(A)
        if sum(A) != self.r or len(A) != self.n * self.n:
            raise ValueError("label does not lie in Xi(n, r)")
        return AlgElement(self, {A: self.ring.one()})

    def bracket(self, A):
        """[A] = v^(-d_A) xi_A."""
        A = tuple(A)
        if sum(A) != self.r or len(A) != self.n * self.n:
            raise ValueError("label does not lie in Xi(n, r)")
        return AlgElement(self, {A: self.ring.vpow(-d_value(A, self.n))})

    def k_lambda(self, lam):
        lam = tuple(lam)
        if len(lam) != self.n or sum(lam) != self.r or min(lam, default=0) < 0:
            raise ValueError(f"{lam} is not in Lambda(n, r)")
        return AlgElement(self, {diag(lam): self.ring.one()})

    def one(self):
        return AlgElement(self, {diag(lam): self.ring.one() for lam in self.weights})

    def diagonal_element(self, func):
        """sum_lambda func(lambda) k_lambda; ``func`` returns ring scalars or ints."""
        vec = {}
        for lam in self.weights:
            c = self.ring.convert(func(lam))
            if c:
                vec[diag(lam)] = c
        return AlgElement(self, vec)

    def _check_i(self, i):
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"index {i} out of range 1..{self.n - 1}")

    def _check_j(self, j):
        if not 1 <= j <= self.n:
            raise ValueError(f"index {j} out of range 1..{self.n}")

    def _offdiag_sum(self, i, j):
        out = {}
        if self.r == 0:
            return AlgElement(self, out)
        E = unit(self.n, i, j)
        for D in compositions(self.r - 1, self.n):
            A = madd(E, diag(D))
            out[A] = self.ring.vpow(-d_value(A, self.n))
        return AlgElement(self, out)

    def e(self, i):
        self._check_i(i)
        return self._offdiag_sum(i, i + 1)

    def f(self, i):
        self._check_i(i)
        return self._offdiag_sum(i + 1, i)

    def k(self, j, power=1):
        self._check_j(j)
        return self.diagonal_element(lambda lam: self.ring.vpow(power * lam[j - 1]))

    def kinv(self, j):
        return self.k(j, -1)

    def ktilde(self, i, power=1):
        self._check_i(i)
        return self.diagonal_element(lambda lam: self.ring.vpow(power * (lam[i - 1] - lam[i])))

    def generator(self, kind, i):
        table = {"e": self.e, "f": self.f, "k": self.k, "kinv": self.kinv,
                 "ktilde": self.ktilde, "ktilde_inv": lambda j: self.ktilde(j, -1)}
        if kind not in table:
            raise ValueError(f"unknown generator kind {kind!r}")
        return table[kind](i)

    def qg3_rhs(self, i):
        """(k~_i - k~_i^-1)/(v - v^-1) = sum_lambda [lambda_i - lambda_{i+1}] k_lambda."""
        return self.diagonal_element(lambda lam: self.ring.from_laurent(qint(lam[i - 1] - lam[i])))

    def divided_power(self, kind, i, N):
        """g^(N) = g^N / [N]! for g in {e_i, f_i}, divided exactly over Z[v, v^-1]."""
        if kind not in ("e", "f"):
            raise ValueError("divided powers are defined for e and f")
        if N < 0:
            raise ValueError("N must be nonnegative")
        if self.ring != LAURENT:
            return self.specialize_element(self.generic.divided_power(kind, i, N))
        g = self.generator(kind, i)
        power = self.one()
        for _ in range(N):
            power = power * g
        den = qfact(N)
        return AlgElement(self, {A: c.divmod_exact(den) for A, c in power.vec.items()})

    def binom_op(self, i, c, t, inverse=False):
        """[k~_i; c over t] = sum_lambda [lambda_i - lambda_{i+1} + c over t] k_lambda.

        With ``inverse`` the operator for k~_i^-1, whose eigenvalue on k_lambda
        uses -(lambda_i - lambda_{i+1}).
        """
        self._check_i(i)
        s = -1 if inverse else 1
        return self.diagonal_element(
            lambda lam: self.ring.from_laurent(gauss_binom(s * (lam[i - 1] - lam[i]) + c, t)))

    # serialization
    def to_json(self):
        def coeff_json(c):
            return c.to_json()
        entries = []
        for A, row in sorted(self.table.items()):
            for B, col in sorted(row.items()):
                for C, c in sorted(col.items()):
                    entries.append({"left": rows_of(A, self.n), "right": rows_of(B, self.n),
                                    "out": rows_of(C, self.n), "coeff": coeff_json(c)})
        return {
            "n": self.n,
            "r": self.r,
            "lprime": self.ring.lprime,
            "basis": [rows_of(A, self.n) for A in self.basis],
            "structconst": entries,
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


def _flat(rows):
    return tuple(x for row in rows for x in row)


def load_json(data):
    """Rebuild a generic ``SchurAlgebra`` from ``SchurAlgebra.to_json`` output."""
    if isinstance(data, str):
        data = json.loads(data)
    if data.get("lprime") is not None:
        raise ValueError("only generic (Laurent) dumps can be loaded")
    table = {}
    for ent in data["structconst"]:
        A, B, C = _flat(ent["left"]), _flat(ent["right"]), _flat(ent["out"])
        table.setdefault(A, {}).setdefault(B, {})[C] = LaurentPoly.from_json(ent["coeff"])
    alg = SchurAlgebra(data["n"], data["r"], LAURENT, table=table)
    if [list(map(list, rows_of(A, alg.n))) for A in alg.basis] != data["basis"]:
        raise ValueError("basis listing does not match Xi(n, r)")
    return alg


def schur_algebra(n, r, ring=LAURENT):
    """Shared U(n, r) over ``ring``; tables fill lazily and are then frozen."""
    return _shared_algebra(int(n), int(r), ring)


@lru_cache(maxsize=None)
def _shared_algebra(n, r, ring):
    return SchurAlgebra(n, r, ring)


def field(lprime, kind="cyclotomic", p=None):
    if kind == "cyclotomic" and p is None:
        from .exactnum import cyclotomic_field
        return cyclotomic_field(lprime)
    return FieldSpec(lprime, kind, p)


def verify_higher_dp_identity(n, r, N, M, i, j, transposed=False):
    """Check the divided-power identity for F_i^(N) F_j^(M) in U_Z(n, r).

    With ``transposed`` the mirrored identity for F_j^(M) F_i^(N) is checked.
    Requires |i - j| = 1 (Cartan entry -1) and N > M >= 0.
    """
    if not N > M >= 0:
        raise ValueError("need N > M >= 0")
    if abs(i - j) != 1:
        raise ValueError("i and j must be adjacent")
    alg = schur_algebra(n, r)

    def F(a, k):
        return alg.divided_power("f", a, k)

    Fj = F(j, M)
    lhs = Fj * F(i, N) if transposed else F(i, N) * Fj
    rhs = alg.zero()
    for s in range(N - M, N + 1):
        coeff = gauss_binom(s - 1, N - M - 1) * (-1) ** (s + N - M)
        if not coeff:
            continue
        if transposed:
            term = F(i, s) * Fj * F(i, N - s)
        else:
            term = F(i, N - s) * Fj * F(i, s)
        rhs = rhs + term * coeff
    return lhs == rhs


def check_qg_relations(alg):
    """Return the list of failed relations among e_i, f_i, k~_i in ``alg``."""
    n = alg.n
    fails = []
    one = alg.one()
    E = {i: alg.e(i) for i in range(1, n)}
    F = {i: alg.f(i) for i in range(1, n)}
    K = {i: alg.ktilde(i) for i in range(1, n)}
    Ki = {i: alg.ktilde(i, -1) for i in range(1, n)}
    vp = alg.ring.vpow

    def a(i, j):
        return 2 if i == j else (-1 if abs(i - j) == 1 else 0)

    for i in range(1, n):
        if K[i] * Ki[i] != one:
            fails.append(f"QG1 K{i}K{i}^-1")
        for j in range(1, n):
            if K[i] * K[j] != K[j] * K[i]:
                fails.append(f"QG1 K{i}K{j}")
            if K[i] * E[j] != E[j] * K[i] * vp(a(i, j)):
                fails.append(f"QG2 K{i}E{j}")
            if K[i] * F[j] != F[j] * K[i] * vp(-a(i, j)):
                fails.append(f"QG2 K{i}F{j}")
            rhs = alg.qg3_rhs(i) if i == j else alg.zero()
            if E[i] * F[j] - F[j] * E[i] != rhs:
                fails.append(f"QG3 E{i}F{j}")
            if a(i, j) == 0 and i != j:
                if E[i] * E[j] != E[j] * E[i]:
                    fails.append(f"QG4 E{i}E{j}")
                if F[i] * F[j] != F[j] * F[i]:
                    fails.append(f"QG4 F{i}F{j}")
            if a(i, j) == -1:
                two = vp(1) + vp(-1)
                for X, tag in ((E, "QG5"), (F, "QG6")):
                    ser = X[i] * X[i] * X[j] - X[i] * X[j] * X[i] * two + X[j] * X[i] * X[i]
                    if ser:
                        fails.append(f"{tag} {i}{j}")
    return fails
