"""Index-set combinatorics for weights and residues.

Weights are integer tuples; residues are tuples reduced mod ``m`` (``l`` or
``l'``).  All enumerations are exact and returned sorted.
"""

from __future__ import annotations

import itertools

from .qcoord import compositions, offdiag, xi


def bar(lam, m):
    return tuple(x % m for x in lam)


def derived_l(lprime):
    return lprime if lprime % 2 else lprime // 2


def compositions_set(n, r):
    """Lambda(n, r)."""
    return compositions(r, n) if r >= 0 else []


def dominant(n, r):
    """Lambda^+(n, r): weakly decreasing compositions."""
    return [lam for lam in compositions_set(n, r)
            if all(lam[i] >= lam[i + 1] for i in range(n - 1))]


def is_restricted(lam, l):
    """0 <= lam_i - lam_{i+1} < l for all i, with lam_{n+1} = 0."""
    ext = tuple(lam) + (0,)
    return all(0 <= ext[i] - ext[i + 1] < l for i in range(len(lam)))


def restricted(n, l, r=None):
    """X_1 (optionally only the part of degree r)."""
    out = []
    for lam in itertools.product(range(n * (l - 1) + 1), repeat=n):
        if is_restricted(lam, l) and (r is None or sum(lam) == r):
            out.append(lam)
    return sorted(out)


def restricted_shifted(n, l, r):
    """X_1(l, r) = (X_1 + l N^n) with entry sum r, via lam = mu + l nu."""
    out = set()
    for s in range(r // l + 1):
        for nu in compositions(s, n):
            rest = r - l * s
            for mu in restricted(n, l, rest):
                out.add(tuple(m + l * v for m, v in zip(mu, nu)))
    return sorted(out)


def enumerate_weights(kind, n, r=None, l=None):
    if kind == "Lambda":
        return compositions_set(n, r)
    if kind == "Lambda+":
        return dominant(n, r)
    if kind == "X1":
        return restricted(n, l, r)
    if kind == "X1(l,r)":
        return restricted_shifted(n, l, r)
    raise ValueError(f"unknown weight set {kind!r}")


def bar_set(weights, m):
    return sorted({bar(lam, m) for lam in weights})


def residues(n, r, m):
    """Lambda-bar(n, r)_m."""
    if r < 0:
        return []
    return bar_set(compositions_set(n, r), m)


def simple_index_set(n, r, l, lprime):
    """X-bar_1(l, r)_{l'}."""
    if r < 0:
        return []
    return bar_set(restricted_shifted(n, l, r), lprime)


def recursion_check(n, r, l):
    """X-bar_1(l,r)_l = X-bar_1(l,r-l)_l  U  {bar(lam) : lam in X_1, sigma = r}."""
    if l % 2 == 0:
        raise ValueError("the recursion is stated for odd l' = l")
    lhs = set(simple_index_set(n, r, l, l))
    rhs = set(simple_index_set(n, r - l, l, l)) if r >= l else set()
    rhs |= {bar(lam, l) for lam in restricted(n, l, r)}
    return lhs == rhs


def dot_action_s2(lam):
    """The nontrivial element of S_2 acting by w.lam = w(lam + rho) - rho, rho = (1, 0)."""
    a, b = lam
    return (b - 1, a + 1)


def little_block_n2(lam, r, l):
    """Residues of the dot orbit of ``lam`` that lie in Lambda-bar^+(2, r)_l."""
    if len(lam) != 2:
        raise ValueError("the block formula is for n = 2")
    if l % 2 == 0:
        raise ValueError("the block formula needs odd l' = l")
    orbit = {tuple(lam), dot_action_s2(lam)}
    allowed = set(bar_set(dominant(2, r), l))
    return sorted(mu for mu in {bar(m, l) for m in orbit} if mu in allowed)


def semisimple_predicate(n, r, l):
    return l > r or (l == n == 2 and r >= 3 and r % 2 == 1)


def finite_type_predicate(n, r, l, lprime=None):
    if lprime is not None and lprime % 2 == 0:
        raise ValueError("the finite-type criterion is stated for odd l' only")
    return l > r


# matrices

def little_labels(n, r, l):
    """Xi(n, r)_1: matrices whose off-diagonal entries are all < l."""
    return [A for A in xi(n, r) if max(offdiag(A, n), default=0) < l]


def pr(A, n, m):
    """Reduce the diagonal of ``A`` mod ``m``; off-diagonal part kept."""
    out = list(A)
    for i in range(n):
        out[i * n + i] %= m
    return tuple(out)


def pr_count(n, r, l, m):
    """#pr(Xi(n, r)_1) with diagonals reduced mod m."""
    return len({pr(A, n, m) for A in little_labels(n, r, l)})


def little_index(n, r, l, m):
    """Pairs (off-diagonal A, residue class) indexing the little-type basis.

    ``A`` runs over off-diagonal matrices with entries < l and sum <= r; the
    residue runs over Lambda-bar(n, r - sigma(A))_m.
    """
    out = []
    for s in range(r + 1):
        for A in xi(n, s):
            if any(A[i * n + i] for i in range(n)):
                continue
            if max(A, default=0) >= l:
                continue
            for lb in residues(n, r - s, m):
                out.append((A, lb))
    return out
