"""Transfer maps between q-Schur algebras and between little q-Schur algebras.

Both maps are built on the coordinate side: a linear form xi on A_q(n, s) is
sent to c -> xi(m c), where m is the quantum determinant (for psi) or
c_11^l' (for rho).  The results are then checked against the expected
images of generators and basis elements.
"""

from __future__ import annotations

from .linalg import Echelon, axpy
from .littlealg import _field_of, double_bracket, little_basis, p_lambda_bar
from .qcoord import coord_algebra, unit
from .schuralg import AlgElement, schur_algebra
from .weightcomb import derived_l, little_index, residues


class TransferMap:
    """A linear map between ambient q-Schur algebras, stored on xi-basis labels.

    ``matrix[C]`` is the image of xi_C as a sparse vector over the target labels.
    """

    def __init__(self, kind, source, target, matrix):
        self.kind = kind
        self.source = source
        self.target = target
        self.matrix = matrix

    def __repr__(self):
        return f"TransferMap({self.kind}: {self.source!r} -> {self.target!r})"

    def apply_vec(self, vec):
        out = {}
        for C, x in vec.items():
            img = self.matrix.get(C)
            if img:
                axpy(out, x, img)
        return out

    def __call__(self, x):
        return AlgElement(self.target, self.apply_vec(x.vec))

    def rank_on(self, vectors):
        return len(Echelon([w for w in (self.apply_vec(v) for v in vectors) if w]))

    def is_multiplicative_on(self, vectors):
        mult_s = self.source.mult_vec
        mult_t = self.target.mult_vec
        images = [self.apply_vec(v) for v in vectors]
        for x, fx in zip(vectors, images):
            for y, fy in zip(vectors, images):
                if self.apply_vec(mult_s(x, y)) != mult_t(fx, fy):
                    return False
        return True


def _dual_of_left_mult(n, r, shift, factor, ring):
    """Matrix of xi -> (c -> xi(factor * c)) from U(n, r + shift) to U(n, r)."""
    A_q = coord_algebra(n)
    src = schur_algebra(n, r + shift, ring)
    tgt = schur_algebra(n, r, ring)
    conv = ring.from_laurent
    matrix = {}
    for A in tgt.basis:
        for C, c in A_q.mul(factor, A_q.monomial(A)).items():
            x = conv(c)
            if x:
                matrix.setdefault(C, {})[A] = x
    return TransferMap(None, src, tgt, matrix)


def _height(lam):
    n = len(lam)
    return sum((n - 1 - i) * x for i, x in enumerate(lam))


def psi_matrix(n, r, ring, twist=True):
    """Dual of D_q-multiplication, followed by conjugation with t = sum v^-a(lam) k_lam.

    The raw dual sends e_i to v e_i and f_i to v^-1 f_i; conjugating by t, with
    a(lam) = sum_i (n - i) lam_i, removes these scalars (xi_A picks up
    v^(a(co A) - a(ro A))).  ``twist=False`` returns the raw dual.
    """
    A_q = coord_algebra(n)
    m = _dual_of_left_mult(n, r, n, A_q.qdet(), ring)
    m.kind = "psi"
    if twist:
        tgt = m.target
        for col in m.matrix.values():
            for A in col:
                col[A] = col[A] * ring.vpow(_height(tgt.co[A]) - _height(tgt.ro[A]))
    return m


def build_psi(n, r, f=None):
    """psi: U(n, r + n) -> U(n, r), dual to multiplication by the quantum determinant.

    With ``f`` omitted the map is built over Z[v, v^-1].
    """
    from .exactnum import LAURENT
    ring = LAURENT if f is None else _field_of(f)
    return psi_matrix(n, r, ring)


def build_rho_coordinate(n, r, lprime):
    """The U-level map xi -> (c -> xi(c_11^l' c)), from U(n, r + l') to U(n, r)."""
    f = _field_of(lprime)
    A_q = coord_algebra(n)
    factor = A_q.normalize([(1, 1)] * f.lprime)
    m = _dual_of_left_mult(n, r, f.lprime, factor, f)
    m.kind = "rho"
    return m


def build_rho(n, r, lprime):
    """rho: little(n, r + l') -> little(n, r), with source and target bases."""
    f = _field_of(lprime)
    m = build_rho_coordinate(n, r, f.lprime)
    m.source_basis = little_basis(n, r + f.lprime, f)
    m.target_basis = little_basis(n, r, f)
    return m


def rho_displayed(n, r, lprime):
    """The basis action [[A + diag(lb), r + l']] -> [[A + diag(lb), r]] or 0."""
    f = _field_of(lprime)
    src = schur_algebra(n, r + f.lprime, f)
    tgt = schur_algebra(n, r, f)
    out = []
    for A_off, lb in little_index(n, r + f.lprime, f.l, f.lprime):
        x = double_bracket(src, A_off, lb)
        rest = r - sum(A_off)
        if rest >= 0 and lb in residues(n, rest, f.lprime):
            y = double_bracket(tgt, A_off, lb)
        else:
            y = tgt.zero()
        out.append(((A_off, lb), x, y))
    return out


def rho_report(n, r, lprime):
    """Checks on rho: displayed action, generators, unit, homomorphism, surjectivity."""
    f = _field_of(lprime)
    rho = build_rho(n, r, f.lprime)
    src, tgt = rho.source, rho.target
    displayed = all(rho(x) == y for _, x, y in rho_displayed(n, r, f.lprime))
    gens = []
    for i in range(1, n):
        gens += [(src.e(i), tgt.e(i)), (src.f(i), tgt.f(i))]
    for j in range(1, n + 1):
        gens += [(src.k(j), tgt.k(j)), (src.kinv(j), tgt.kinv(j))]
    generators = all(rho(a) == b for a, b in gens)
    p_images = all(
        rho(p_lambda_bar(src, lb)) == (p_lambda_bar(tgt, lb) if lb in residues(n, r, f.lprime)
                                        else tgt.zero())
        for lb in residues(n, r + f.lprime, f.lprime))
    unital = rho(src.one()) == tgt.one()
    rank = rho.rank_on(rho.source_basis.rows)
    return {
        "n": n, "r": r, "lprime": f.lprime,
        "dim_source": rho.source_basis.dim(),
        "dim_target": rho.target_basis.dim(),
        "image_rank": rank,
        "surjective": rank == rho.target_basis.dim(),
        "bijective": rank == rho.target_basis.dim() == rho.source_basis.dim(),
        "displayed_action": displayed,
        "generators": generators,
        "p_images": p_images,
        "unital": unital,
    }


def rho_is_homomorphism(n, r, lprime):
    rho = build_rho(n, r, lprime)
    return rho.is_multiplicative_on(rho.source_basis.rows)


def psi_report(n, r, lprime=None):
    """Checks on psi; generic when ``lprime`` is None, else specialized."""
    psi = build_psi(n, r, lprime)
    src, tgt = psi.source, psi.target
    ring = tgt.ring
    gens = []
    for i in range(1, n):
        gens += [(src.e(i), tgt.e(i)), (src.f(i), tgt.f(i))]
    k_images = []
    for j in range(1, n + 1):
        # K_j goes to v K_j generically (eps K_j after specializing)
        k_images.append(psi(src.k(j)) == tgt.k(j) * ring.vpow(1))
    out = {
        "n": n, "r": r, "lprime": lprime,
        "e_f_images": all(psi(a) == b for a, b in gens),
        "k_images": all(k_images),
        "unital": psi(src.one()) == tgt.one(),
    }
    if lprime is not None:
        out["surjective"] = psi.rank_on([{A: ring.one()} for A in src.basis]) == tgt.dim()
        f = ring
        L_src = little_basis(n, r + n, f)
        L_tgt = little_basis(n, r, f)
        out["little_to_little"] = all(L_tgt.contains(psi.apply_vec(v)) for v in L_src.rows)
    return out


def psi_is_homomorphism(n, r, lprime=None):
    psi = build_psi(n, r, lprime)
    one = psi.source.ring.one()
    return psi.is_multiplicative_on([{A: one} for A in psi.source.basis])


def qdet_properties(n):
    """Whether D_q is group-like and satisfies D_q c_ij = q^(j-i) c_ij D_q."""
    from .exactnum import vpow
    A_q = coord_algebra(n)
    D = A_q.qdet()
    delta = A_q.coproduct_poly(D)
    expect = {}
    for A, a in D.items():
        for B, b in D.items():
            c = a * b
            if c:
                expect[(A, B)] = c
    skew = True
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            g = A_q.monomial(unit(n, i, j))
            rhs = {C: c * vpow(2 * (j - i)) for C, c in A_q.mul(g, D).items()}
            if A_q.mul(D, g) != rhs:
                skew = False
    return {"group_like": delta == expect, "skew_central": skew}


def stabilization_check(n, r, lprime):
    """dim little(n, r) vs little(n, r + l'), rho bijectivity and the predicted bound."""
    f = _field_of(lprime)
    l = derived_l(f.lprime)
    rep = rho_report(n, r, f.lprime)
    bound = (l - 1) * (n * n - n) + (n - 1) * (f.lprime - 1)
    lam_bound = (n - 1) * (f.lprime - 1)
    return {
        "n": n, "r": r, "lprime": f.lprime,
        "dim_r": rep["dim_target"],
        "dim_r_plus": rep["dim_source"],
        "rho_bijective": rep["bijective"],
        "bound": bound,
        "predicted_equal": r >= bound,
        "residues_stable_at_bound": (residues(n, lam_bound, f.lprime)
                                     == residues(n, lam_bound + f.lprime, f.lprime)),
    }
