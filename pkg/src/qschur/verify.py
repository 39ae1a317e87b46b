"""Acceptance checks shared by the command line and the test suite.

Every check returns a ``CheckResult``.  ``failures`` lists the cells that
disagreed with the expected value, so a failed run prints a readable diff.
"""

from __future__ import annotations

import functools
import time
from dataclasses import dataclass, field

from .appendixalg import ktilde_relation, little_zero_image, verify_integral_surjectivity
from .exactnum import gauss_binom, qfact, vpow
from .littlealg import (corner, generated_little, little_basis, little_dims, omega_idempotent,
                        sandwich_check)
from .repanalysis import (algebra, blocks, cartan, cyclic_hw_module, ext_quiver,
                          grothendieck_kernel_check, loewy_layers, primitive_idempotents,
                          projective_decomposition, projective_dims, radical, simples,
                          weyl_comparison)
from .schuralg import verify_higher_dp_identity
from .transfermaps import (psi_is_homomorphism, psi_report, qdet_properties, rho_is_homomorphism,
                           rho_report)
from .weightcomb import (bar, derived_l, dominant, little_block_n2, pr_count, residues,
                         restricted, semisimple_predicate, simple_index_set)


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    def expect(self, cond, what):
        if not cond:
            self.passed = False
            self.failures.append(what)
        return cond

    def line(self):
        return f"{'PASS' if self.passed else 'FAIL'} {self.name} ({self.seconds:.1f}s)"

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "failures": list(self.failures),
                "details": self.details, "seconds": round(self.seconds, 3)}


def _timed(name):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            res = CheckResult(name)
            fn(res, *args, **kwargs)
            res.seconds = time.perf_counter() - start
            return res
        run.check_name = name
        return run
    return wrap


DIM_GRID = [(2, r) for r in range(0, 7)] + [(3, r) for r in range(0, 5)]
DIM_LPRIMES = (3, 4, 5, 6)


@_timed("dimension")
def check_dimensions(res, grid=DIM_GRID, lprimes=DIM_LPRIMES):
    """Spanning-set rank = #pr(Xi(n, r)_1) = dim of the generated subalgebra."""
    for n, r in grid:
        for lp in lprimes:
            l = derived_l(lp)
            rank = little_basis(n, r, lp).dim()
            count = pr_count(n, r, l, lp)
            gen = generated_little(n, r, lp).dim()
            res.expect(rank == count == gen, f"(n={n}, r={r}, l'={lp}): rank {rank}, "
                       f"#pr {count}, generated {gen}")
    res.expect(little_basis(2, 3, 3).dim() == 17, "dim little(2,3) at l'=3 is not 17")
    res.expect(little_basis(2, 2, 4).dim() == 8, "dim little(2,2) at l'=4 is not 8")


@_timed("sandwich")
def check_sandwich(res, grid=DIM_GRID, lprimes=DIM_LPRIMES):
    """u_1 in little in s everywhere; equality u_1 = little for odd l', strict somewhere for even."""
    equal_even = []
    for n in sorted({n for n, _ in grid}):
        for lp in lprimes:
            strict_cells = []
            for m, r in grid:
                if m != n:
                    continue
                rep = sandwich_check(n, r, lp)
                res.expect(rep["u1_in_little"] and rep["little_in_infinitesimal"],
                           f"inclusion fails at (n={n}, r={r}, l'={lp})")
                if rep["u1_equals_little"]:
                    if lp % 2 == 0:
                        equal_even.append([n, r, lp])
                else:
                    strict_cells.append(r)
            if lp % 2:
                res.expect(not strict_cells, f"odd l'={lp}, n={n}: u_1 != little at r={strict_cells}")
            else:
                res.expect(bool(strict_cells), f"even l'={lp}, n={n}: u_1 = little on the whole grid")
    rep = sandwich_check(2, 2, 4)
    res.expect((rep["dim_u1"], rep["dim_little"]) == (7, 8),
               f"(2,2,l'=4): expected 7 < 8, got {rep['dim_u1']} vs {rep['dim_little']}")
    res.details["even_lprime_equal_cells"] = equal_even


CLASS_GRID = [(n, r, lp) for n in (2, 3) for r in range(0, 5) for lp in (3, 4, 5)]


@_timed("classification")
def check_classification(res, grid=CLASS_GRID):
    """Simple labels of the little algebra equal the index set X-bar_1(l, r)_{l'}."""
    for n, r, lp in grid:
        S = algebra("little", n, r, lp)
        labels = sorted(s.label for s in simples(S))
        expect = sorted(simple_index_set(n, r, derived_l(lp), lp))
        res.expect(labels == expect, f"(n={n}, r={r}, l'={lp}): {labels} vs {expect}")
    dims = sorted(s.dim for s in simples(algebra("little", 2, 3, 3)))
    res.expect(dims == [1, 2], f"(2,3,3): simple dims {dims}")


SS_GRID = [(2, r, lp) for lp in (3, 4, 5, 7) for r in range(0, 8)] + [(3, 2, 3), (3, 3, 3)]


@_timed("semisimplicity")
def check_semisimplicity(res, grid=SS_GRID):
    """rad = 0 exactly when l > r or l = n = 2 with r >= 3 odd."""
    for n, r, lp in grid:
        rad = radical(algebra("little", n, r, lp)).dim()
        pred = semisimple_predicate(n, r, derived_l(lp))
        res.expect((rad == 0) == pred, f"(n={n}, r={r}, l'={lp}): rad dim {rad}, predicted "
                   f"{'semisimple' if pred else 'not semisimple'}")


def predicted_blocks_n2(r, lprime):
    """Block classes predicted from the dot orbits of dominant lifts."""
    parent = {}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for lam in dominant(2, r):
        orbit = little_block_n2(lam, r, lprime)
        for mu in orbit:
            parent.setdefault(mu, mu)
        for mu in orbit[1:]:
            a, b = find(orbit[0]), find(mu)
            if a != b:
                parent[b] = a
    groups = {}
    for mu in parent:
        groups.setdefault(find(mu), []).append(mu)
    return sorted(sorted(g) for g in groups.values())


@_timed("blocks")
def check_blocks(res, rs=range(0, 7), lprime=3):
    """Block partitions of little(2, r) against the dot-orbit prediction."""
    for r in rs:
        got = sorted(sorted(c) for c in blocks(algebra("little", 2, r, lprime)).classes)
        pred = predicted_blocks_n2(r, lprime)
        res.expect(got == pred, f"r={r}: blocks {got} vs predicted {pred}")
        res.details[f"r={r}"] = got
    got = sorted(sorted(c) for c in blocks(algebra("little", 2, 3, lprime)).classes)
    res.expect([(0, 0), (2, 1)] in got, "r=3: no block {(0,0), (2,1)}")


@_timed("projective-ext")
def check_projectives(res):
    """Loewy structure, Ext quiver and projective bookkeeping for little(2, 3) at l'=3."""
    S = algebra("little", 2, 3, 3)
    sims = simples(S)
    E = primitive_idempotents(S)
    idx = {s.label: i for i, s in enumerate(sims)}
    lam, mu = (0, 0), (2, 1)
    layers = {lab: loewy_layers(S, E[i]) for lab, i in idx.items()}
    res.expect(layers[mu] == [{mu: 1}, {lam: 2}, {mu: 1}], f"p(mu) layers {layers[mu]}")
    res.expect(layers[lam] == [{lam: 1}, {mu: 2}], f"p(lambda) layers {layers[lam]}")
    Q = ext_quiver(S)
    res.expect(Q[idx[lam]][idx[mu]] == 2 and Q[idx[mu]][idx[lam]] == 2, f"Ext quiver {Q}")
    res.expect(Q[idx[lam]][idx[lam]] == 0 and Q[idx[mu]][idx[mu]] == 0, f"Ext quiver {Q}")
    pd = projective_dims(S)
    total = sum(s.dim * d for s, d in zip(sims, pd))
    res.expect(total == S.dim() == 17, f"sum dim L * dim P = {total}, dim = {S.dim()}")
    res.expect(sorted(zip([s.dim for s in sims], pd)) == [(1, 5), (2, 6)],
               f"(dim L, dim P) = {list(zip([s.dim for s in sims], pd))}")
    res.expect(cartan(S) == [[1, 2], [2, 2]], f"Cartan {cartan(S)}")
    U = algebra("schur", 2, 3, 3)
    alg = U.ambient
    res.expect(projective_decomposition(alg.k_lambda((2, 1)), U) == {mu: 1},
               "U(2,3) k_(2,1) is not P(2,1)")
    res.expect(projective_decomposition(alg.k_lambda((3, 0)), U) == {lam: 1},
               "U(2,3) k_(3,0) is not P(3,0)")
    res.details["loewy"] = {str(k): [{str(a): b for a, b in d.items()} for d in v]
                            for k, v in layers.items()}


WEYL_GRID = [(2, r, lp) for r in range(0, 5) for lp in (3, 4)]


@_timed("weyl")
def check_weyl(res, grid=WEYL_GRID):
    """The l'=4 example and V = V', L = L' for restricted weights."""
    ex = weyl_comparison(2, 2, (2, 0), 4)
    got = (ex["dim_V"], ex["dim_Vprime"], ex["dim_head_V"], ex["dim_head_Vprime"])
    res.expect(got == (3, 2, 2, 1), f"example (2,2,(2,0),l'=4): V, V', head V, head V' = {got}")
    for n, r, lp in grid:
        for lam in restricted(n, derived_l(lp), r):
            rep = weyl_comparison(n, r, lam, lp)
            res.expect(rep["V_equals_Vprime"] and rep["L_equals_Lprime"],
                       f"(n={n}, r={r}, l'={lp}, lambda={lam}): {rep}")
            hw = cyclic_hw_module(algebra("little", n, r, lp), lam)
            res.expect(hw.dim() > 0, f"baby Weyl module at {lam} is zero")


@_timed("transfer")
def check_transfer(res):
    """rho and psi on generators and bases, plus the stabilization example."""
    for r in range(0, 5):
        for lp in (3, 4):
            rep = rho_report(2, r, lp)
            for key in ("surjective", "displayed_action", "generators", "p_images", "unital"):
                res.expect(rep[key], f"rho (2, r={r}, l'={lp}): {key} fails")
            res.expect(rho_is_homomorphism(2, r, lp), f"rho (2, r={r}, l'={lp}) not multiplicative")
    for r in range(0, 4):
        rep = psi_report(2, r)
        res.expect(rep["e_f_images"] and rep["k_images"] and rep["unital"],
                   f"psi generic (2, r={r}): {rep}")
        res.expect(psi_is_homomorphism(2, r), f"psi generic (2, r={r}) not multiplicative")
    for r in range(0, 3):
        rep = psi_report(2, r, 3)
        res.expect(all(rep[k] for k in ("e_f_images", "k_images", "unital", "surjective",
                                         "little_to_little")), f"psi at l'=3 (2, r={r}): {rep}")
    rep = psi_report(3, 0, 3)
    res.expect(rep["e_f_images"] and rep["k_images"], f"psi (3, 0, l'=3): {rep}")
    for n in (2, 3):
        props = qdet_properties(n)
        res.expect(props["group_like"] and props["skew_central"], f"D_q (n={n}): {props}")
    stab = rho_report(2, 6, 3)
    res.expect(stab["dim_source"] == stab["dim_target"] and stab["bijective"],
               f"(2, 6 -> 9, l'=3): {stab['dim_target']} vs {stab['dim_source']}")
    low = rho_report(2, 2, 3)
    res.expect(low["dim_source"] != low["dim_target"],
               f"(2, 2, l'=3): dims {low['dim_target']} = {low['dim_source']}")
    res.details["stabilization"] = [stab["dim_target"], stab["dim_source"]]
    res.details["r=2"] = [low["dim_target"], low["dim_source"]]


@_timed("baby-schur")
def check_baby_schur(res):
    """k_omega kills exactly L(0,0,0) at n = r = l' = 3; corners have dimension r!."""
    rep = grothendieck_kernel_check(3, 3, 3)
    res.expect(rep["ok"], f"kernel prediction fails: {rep['simples']}")
    killed = sorted(tuple(row["label"]) for row in rep["simples"] if row["killed"])
    alive = sorted(tuple(row["label"]) for row in rep["simples"] if not row["killed"])
    res.expect(killed == [(0, 0, 0)], f"killed labels {killed}")
    res.expect(alive == [(1, 1, 1), (2, 1, 0)], f"surviving labels {alive}")
    for n, fact in ((2, 2), (3, 6)):
        S = algebra("little", n, n, 3)
        d = corner(omega_idempotent(S.ambient), S).dim()
        res.expect(d == fact, f"corner dim at n = r = {n}: {d}")


@_timed("appendix")
def check_appendix(res):
    """Integral certificates for k_lambda and the zero-part image dimensions."""
    for n in (1, 2, 3):
        for r in range(0, 5):
            res.expect(verify_integral_surjectivity(n, r), f"certificates fail at (n={n}, r={r})")
    for n, r in ((2, 3), (3, 2)):
        res.expect(verify_integral_surjectivity(n, r, via_algebra=True),
                   f"algebra evaluation fails at (n={n}, r={r})")
    a = little_zero_image(2, 3, 3)
    res.expect(a["equal"], f"(n, l') = (2, 3), r = 3: {a}")
    b = little_zero_image(3, 3, 4)
    res.expect(b["equal"], f"(n, l') = (3, 4), r = 3: {b}")
    c = little_zero_image(3, 4, 3)
    res.expect((c["dim_generated"], c["dim_little_zero"]) == (3, 9),
               f"(n, l') = (3, 3), r = 4: {c}")
    res.expect(ktilde_relation(4, 3), "k~_2 = eps^-r k~_1 fails at r = 4")


def binomial_identities(bound=12):
    """Failures of Pascal, bar symmetry and the factorial formula for |c| <= bound."""
    bad = []
    for c in range(-bound, bound + 1):
        for t in range(0, bound + 1):
            g = gauss_binom(c, t)
            if g.bar() != g:
                bad.append(f"bar symmetry at ({c}, {t})")
            if t >= 1:
                lhs = gauss_binom(c + 1, t)
                if lhs != vpow(-t) * g + vpow(c + 1 - t) * gauss_binom(c, t - 1):
                    bad.append(f"Pascal (first form) at ({c}, {t})")
                if lhs != vpow(t) * g + vpow(t - c - 1) * gauss_binom(c, t - 1):
                    bad.append(f"Pascal (second form) at ({c}, {t})")
            if 0 <= t <= c and g * qfact(t) * qfact(c - t) != qfact(c):
                bad.append(f"factorial formula at ({c}, {t})")
            if 0 <= c < t and g:
                bad.append(f"vanishing at ({c}, {t})")
    return bad


def divided_power_identities():
    bad = []
    for i, j in ((1, 2), (2, 1)):
        for transposed in (False, True):
            if not verify_higher_dp_identity(3, 3, 2, 1, i, j, transposed):
                bad.append(f"N=2, M=1, i={i}, j={j}, transposed={transposed}")
    return bad


@_timed("identities")
def check_identities(res, bound=12):
    """Higher divided-power identities in U_Z(3, 3) and Gaussian binomial invariants."""
    for msg in divided_power_identities():
        res.expect(False, f"divided-power identity: {msg}")
    for msg in binomial_identities(bound):
        res.expect(False, msg)


@_timed("binomials")
def check_binomials(res, bound=12):
    """Gaussian binomial invariants alone (the combinatorics suite)."""
    for msg in binomial_identities(bound):
        res.expect(False, msg)


@_timed("index-sets")
def check_index_sets(res):
    """Little index counts and simple index sets on small grids."""
    for n, r in ((2, 3), (2, 4), (3, 3)):
        for lp in (3, 4, 5):
            d = little_dims(n, r, lp)
            res.expect(d["dim_u1"] <= d["dim_little"] <= d["dim_infinitesimal"],
                       f"(n={n}, r={r}, l'={lp}): {d}")
            l = derived_l(lp)
            idx = simple_index_set(n, r, l, lp)
            res.expect(set(idx) <= set(residues(n, r, lp)),
                       f"(n={n}, r={r}, l'={lp}): index set not inside Lambda-bar(n, r)")
            if lp % 2:
                dom = sorted({bar(m, lp) for m in dominant(n, r)})
                res.expect(idx == dom, f"(n={n}, r={r}, l'={lp}): {idx} vs Lambda-bar^+ {dom}")


@_timed("divided-powers")
def check_divided_powers(res):
    for msg in divided_power_identities():
        res.expect(False, msg)


ACCEPTANCE = [
    check_dimensions, check_sandwich, check_classification, check_semisimplicity,
    check_blocks, check_projectives, check_weyl, check_transfer, check_baby_schur,
    check_appendix, check_identities,
]

SUITES = {
    "combinatorics": [check_binomials, check_index_sets],
    "schur-core": [check_divided_powers],
    "little": [check_dimensions, check_sandwich],
    "representation": [check_classification, check_semisimplicity, check_blocks,
                       check_projectives, check_weyl, check_baby_schur],
    "transfer": [check_transfer],
    "appendix": [check_appendix],
    "all": ACCEPTANCE,
}


def run_suite(name):
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return [check() for check in SUITES[name]]
