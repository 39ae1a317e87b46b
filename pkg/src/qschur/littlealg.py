"""Little, infinitesimal and related subalgebras of U_k(n, r).

Every subalgebra is a ``SubalgebraBasis``: an echelonized spanning set of
sparse vectors in the ``xi_A`` coordinates of the ambient specialized
q-Schur algebra.  Bases built here are homogeneous for a weight grading
(``A -> (row weight, column weight)``, possibly reduced mod m), which is
the Peirce decomposition with respect to the idempotents ``k_lambda`` or
``p_lambda-bar`` and keeps products and linear algebra blockwise.
"""

from __future__ import annotations

from .exactnum import FieldSpec, cyclotomic_field
from .linalg import Echelon, axpy
from .qcoord import compositions, d_value, diag, madd
from .schuralg import AlgElement, schur_algebra
from .weightcomb import bar, derived_l, little_index, little_labels, residues


def exact_grading(alg):
    ro, co = alg.ro, alg.co
    return lambda A: (ro[A], co[A])


def mod_grading(alg, m):
    ro, co = alg.ro, alg.co
    return lambda A: (bar(ro[A], m), bar(co[A], m))


def _field_of(f):
    if isinstance(f, FieldSpec):
        return f
    return cyclotomic_field(int(f))


class SubalgebraBasis:
    """Echelonized spanning set of a subspace of an ambient ``SchurAlgebra``.

    ``grading`` maps ambient labels to (left, right) weight keys; when given,
    every stored row lies in a single graded piece.
    """

    def __init__(self, ambient, vectors, kind, grading=None, names=None, unit=None):
        self.ambient = ambient
        self.kind = kind
        self.grading = grading
        self.names = dict(names or {})
        self.ech = Echelon()
        for v in vectors:
            self.ech.add(v.vec if isinstance(v, AlgElement) else v)
        self._finish()
        self._unit = unit
        self._struct = None

    def _finish(self):
        self.pivots = self.ech.pivots()
        self.pos = {p: i for i, p in enumerate(self.pivots)}
        self.rows = [self.ech.rows[p] for p in self.pivots]
        if self.grading is not None:
            self.labels = []
            for row in self.rows:
                keys = {self.grading(A) for A in row}
                if len(keys) != 1:
                    raise ValueError("basis row is not homogeneous for the grading")
                self.labels.append(keys.pop())
        else:
            self.labels = [(None, None)] * len(self.rows)

    def __repr__(self):
        return f"SubalgebraBasis(kind={self.kind!r}, dim={self.dim()}, ambient={self.ambient!r})"

    @property
    def field(self):
        return self.ambient.ring

    def dim(self):
        return len(self.rows)

    def element(self, i):
        return AlgElement(self.ambient, self.rows[i])

    def elements(self):
        return [self.element(i) for i in range(self.dim())]

    def contains(self, x):
        vec = x.vec if isinstance(x, AlgElement) else x
        return self.ech.contains(vec)

    def coords(self, x, check=True):
        """Coordinates of ``x`` as ``{row index: scalar}``."""
        vec = x.vec if isinstance(x, AlgElement) else x
        return {self.pos[p]: c for p, c in self.ech.coords(vec, check).items()}

    def from_coords(self, coords):
        out = {}
        for i, c in coords.items():
            axpy(out, c, self.rows[i])
        return out

    def contains_all(self, other):
        return all(self.contains(v) for v in other.rows)

    def same_span(self, other):
        return self.dim() == other.dim() and self.contains_all(other)

    def unit(self):
        return self._unit if self._unit is not None else self.ambient.one()

    def blocks(self):
        out = {}
        for i, lab in enumerate(self.labels):
            out.setdefault(lab, []).append(i)
        return out

    def compatible(self, i, j):
        if self.grading is None:
            return True
        return self.labels[i][1] == self.labels[j][0]

    def product_vec(self, x, y):
        return self.ambient.mult_vec(x, y)

    def structure(self):
        """Structure constants ``{(i, j): {k: c}}`` in the row basis."""
        if self._struct is None:
            blocks = self.blocks()
            by_left = {}
            for lab, idx in blocks.items():
                by_left.setdefault(lab[0], []).extend(idx)
            st = {}
            for i in range(self.dim()):
                right = self.labels[i][1]
                partners = by_left.get(right, []) if self.grading else range(self.dim())
                for j in partners:
                    prod = self.ambient.mult_vec(self.rows[i], self.rows[j])
                    if prod:
                        st[(i, j)] = self.coords(prod)
            self._struct = st
        return self._struct

    def is_closed(self):
        try:
            self.structure()
        except ValueError:
            return False
        return True


def _named_sum(alg, A_off, lb, m, twist):
    """sum over mu in Lambda(n, r - sigma(A)) with mu = lb mod m of [A + diag mu]."""
    n, r = alg.n, alg.r
    rest = r - sum(A_off)
    vec = {}
    for mu in compositions(rest, n):
        if bar(mu, m) != lb:
            continue
        A = madd(A_off, diag(mu))
        vec[A] = alg.ring.vpow(-d_value(A, n)) if twist else alg.ring.one()
    return vec


def little_basis(n, r, f):
    """The little q-Schur algebra as the span of the elements [[A + diag(lb), r]]."""
    f = _field_of(f)
    alg = schur_algebra(n, r, f)
    names = {}
    vecs = []
    for A_off, lb in little_index(n, r, f.l, f.lprime):
        vec = _named_sum(alg, A_off, lb, f.lprime, twist=True)
        names[(A_off, lb)] = AlgElement(alg, vec)
        vecs.append(vec)
    return SubalgebraBasis(alg, vecs, "little", mod_grading(alg, f.lprime), names)


def double_bracket(alg, A_off, lb):
    """[[A + diag(lb), r]] for off-diagonal ``A_off`` and residue ``lb`` mod l'."""
    return AlgElement(alg, _named_sum(alg, tuple(A_off), tuple(lb), alg.ring.lprime, twist=True))


def u1_basis(n, r, f):
    """u_k(n, r)_1: sums of xi_{A + diag mu} over residue classes mod l."""
    f = _field_of(f)
    alg = schur_algebra(n, r, f)
    names = {}
    vecs = []
    for A_off, lb in little_index(n, r, f.l, f.l):
        vec = _named_sum(alg, A_off, lb, f.l, twist=False)
        names[(A_off, lb)] = AlgElement(alg, vec)
        vecs.append(vec)
    return SubalgebraBasis(alg, vecs, "u1", mod_grading(alg, f.l), names)


def infinitesimal_basis(n, r, f):
    """s_k(n, r): the span of [A] with off-diagonal entries < l."""
    f = _field_of(f)
    alg = schur_algebra(n, r, f)
    vecs = [alg.bracket(A).vec for A in little_labels(n, r, f.l)]
    return SubalgebraBasis(alg, vecs, "infinitesimal", exact_grading(alg))


def full_basis(n, r, f):
    """U_k(n, r) itself, in the xi basis."""
    f = _field_of(f)
    alg = schur_algebra(n, r, f)
    return SubalgebraBasis(alg, [{A: f.one()} for A in alg.basis], "schur", exact_grading(alg))


def p_lambda_bar(alg, lb):
    """Sum of k_mu over mu in Lambda(n, r) with mu = lb mod l' (zero if none)."""
    m = alg.ring.lprime
    lb = tuple(x % m for x in lb)
    vec = {diag(mu): alg.ring.one() for mu in alg.weights if bar(mu, m) == lb}
    return AlgElement(alg, vec)


def little_zero_basis(n, r, f):
    f = _field_of(f)
    alg = schur_algebra(n, r, f)
    vecs = [p_lambda_bar(alg, lb).vec for lb in residues(n, r, f.lprime)]
    return SubalgebraBasis(alg, vecs, "littleZero", mod_grading(alg, f.lprime))


def full_zero_basis(n, r, f):
    f = _field_of(f)
    alg = schur_algebra(n, r, f)
    vecs = [alg.k_lambda(lam).vec for lam in alg.weights]
    return SubalgebraBasis(alg, vecs, "fullZero", exact_grading(alg))


def little_generators(alg):
    gens = []
    for i in range(1, alg.n):
        gens += [alg.e(i), alg.f(i)]
    for j in range(1, alg.n + 1):
        gens += [alg.k(j), alg.kinv(j)]
    return gens


def _is_diagonal(alg, x):
    n = alg.n
    return all(A == diag(tuple(A[i * n + i] for i in range(n))) for A in x.vec)


def _closure(alg, gens, start, grading=None):
    ech = Echelon()
    queue = []
    for v in start:
        if ech.add(v) is not None:
            queue.append(v)
    if grading is not None:
        gens_by_right = {}
        for g in gens:
            for A in g:
                gens_by_right.setdefault(grading(A)[1], [])
            key = grading(next(iter(g)))[1]
            gens_by_right[key].append(g)
    while queue:
        b = queue.pop()
        if grading is not None:
            left = grading(next(iter(b)))[0]
            cands = gens_by_right.get(left, [])
        else:
            cands = gens
        for g in cands:
            w = alg.mult_vec(g, b)
            if w and ech.add(w) is not None:
                queue.append(w)
    return ech


def generated_subalgebra(gens, grading=None, idempotents=None, kind="generated"):
    """Smallest unital subalgebra containing ``gens``.

    If ``idempotents`` (a complete orthogonal family whose members match the
    graded pieces of ``grading``) is given, it is first checked that they lie
    in the subalgebra generated by the diagonal generators; the closure is
    then carried out on graded components.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator to fix the ambient algebra")
    alg = gens[0].alg
    one = alg.one().vec
    if grading is not None and idempotents is not None:
        diag_gens = [g.vec for g in gens if _is_diagonal(alg, g)]
        zero_part = _closure(alg, diag_gens, [one])
        if all(zero_part.contains(p.vec) for p in idempotents):
            comps = []
            for g in gens:
                pieces = {}
                for A, x in g.vec.items():
                    pieces.setdefault(grading(A), {})[A] = x
                comps.extend(pieces.values())
            start = [p.vec for p in idempotents if p.vec]
            ech = _closure(alg, comps, start, grading)
            return SubalgebraBasis(alg, ech.basis(), kind, grading)
    ech = _closure(alg, [g.vec for g in gens], [one])
    return SubalgebraBasis(alg, ech.basis(), kind, None)


def generated_little(n, r, f):
    """The subalgebra generated by e_i, f_i, k_j^{+-1} inside U_k(n, r)."""
    f = _field_of(f)
    alg = schur_algebra(n, r, f)
    idem = [p_lambda_bar(alg, lb) for lb in residues(n, r, f.lprime)]
    return generated_subalgebra(little_generators(alg), mod_grading(alg, f.lprime), idem,
                                kind="generated")


def corner(e, S):
    """The corner algebra e S e, with unit e."""
    alg = S.ambient
    if e * e != e:
        raise ValueError("corner needs an idempotent")
    if not S.contains(e):
        raise ValueError("idempotent does not lie in the subalgebra")
    vecs = []
    for row in S.rows:
        w = alg.mult_vec(alg.mult_vec(e.vec, row), e.vec)
        if w:
            vecs.append(w)
    return SubalgebraBasis(alg, vecs, "corner", S.grading, unit=e)


def omega_idempotent(alg, S=None):
    """k_omega for omega = (1^r, 0^(n-r)); requires n >= r."""
    if alg.n < alg.r:
        raise ValueError("k_omega needs n >= r")
    omega = tuple([1] * alg.r + [0] * (alg.n - alg.r))
    return alg.k_lambda(omega)


def two_row_idempotent(alg):
    """e = sum over lb in Lambda-bar(2, r)_{l'} of [[diag(lb, 0, ..., 0), r]]."""
    m = alg.ring.lprime
    out = alg.zero()
    for lb in residues(2, alg.r, m):
        full = tuple(lb) + (0,) * (alg.n - 2)
        out = out + p_lambda_bar(alg, full)
    return out


def sandwich_check(n, r, f):
    """Dimensions of u_1, the little algebra and s, with the inclusions."""
    f = _field_of(f)
    u1 = u1_basis(n, r, f)
    lit = little_basis(n, r, f)
    inf = infinitesimal_basis(n, r, f)
    return {
        "dim_u1": u1.dim(),
        "dim_little": lit.dim(),
        "dim_infinitesimal": inf.dim(),
        "u1_in_little": lit.contains_all(u1),
        "little_in_infinitesimal": inf.contains_all(lit),
        "u1_equals_little": lit.same_span(u1),
    }


def triangular_check(n, r, f):
    """Whether span(u^- u^0 u^+) equals the little algebra."""
    f = _field_of(f)
    alg = schur_algebra(n, r, f)
    lit = little_basis(n, r, f)
    minus = generated_subalgebra([alg.f(i) for i in range(1, n)] or [alg.one()])
    plus = generated_subalgebra([alg.e(i) for i in range(1, n)] or [alg.one()])
    zero = little_zero_basis(n, r, f)
    ech = Echelon()
    for x in minus.rows:
        for y in zero.rows:
            xy = alg.mult_vec(x, y)
            if not xy:
                continue
            for z in plus.rows:
                w = alg.mult_vec(xy, z)
                if w:
                    ech.add(w)
    span = SubalgebraBasis(alg, ech.basis(), "triangular")
    return span.same_span(lit)


def little_dims(n, r, lprime):
    f = _field_of(lprime)
    l = derived_l(f.lprime)
    from .weightcomb import pr_count
    return {
        "n": n,
        "r": r,
        "lprime": f.lprime,
        "dim_u1": pr_count(n, r, l, l),
        "dim_little": pr_count(n, r, l, f.lprime),
        "dim_infinitesimal": len(little_labels(n, r, l)),
        "dim_little_zero": len(residues(n, r, f.lprime)),
    }


def two_row_corner_check(r, lprime):
    """Compare e little(3, r) e with little(2, r) under [[A + diag lb]] -> [[A' + diag(lb, 0)]].

    Reports both dimensions and, when they agree, whether the padding map is a
    multiplicative bijection onto the corner.
    """
    from .linalg import solve
    f = _field_of(lprime)
    S3 = little_basis(3, r, f)
    alg3 = S3.ambient
    C = corner(two_row_idempotent(alg3), S3)
    L2 = little_basis(2, r, f)
    alg2 = L2.ambient
    keys = sorted(L2.names)

    def pad(A_off, lb):
        a, b, c, d = A_off
        return (a, b, 0, c, d, 0, 0, 0, 0), tuple(lb) + (0,)

    images = [double_bracket(alg3, *pad(*k)).vec for k in keys]
    out = {"r": r, "lprime": f.lprime, "dim_corner": C.dim(), "dim_two_row": L2.dim()}
    if C.dim() != L2.dim():
        out["isomorphic_by_padding"] = False
        return out
    onto = all(C.contains(v) for v in images) and len(Echelon(images)) == C.dim()
    src = [L2.names[k].vec for k in keys]
    mult_ok = onto
    for i in range(len(keys)) if onto else ():
        for j in range(len(keys)):
            coords = solve(src, alg2.mult_vec(src[i], src[j]))
            lhs = {}
            for t, c in coords.items():
                axpy(lhs, c, images[t])
            if lhs != alg3.mult_vec(images[i], images[j]):
                mult_ok = False
                break
        if not mult_ok:
            break
    out["isomorphic_by_padding"] = mult_ok
    return out
