"""Integral generation of the zero part of U(n, r) by quantum binomials in k~_i.

``construct_klambda`` writes each idempotent k_lambda as an explicit
expression in the operators [k~_i^{+-1}; c over t] with Z[v, v^-1]
coefficients, following a downward induction on the strata
X_i = {mu : max_j (mu_j - mu_{j+1}) = i}.  Every intermediate expression is
evaluated and compared with its intended value as it is produced.
"""

from __future__ import annotations

from math import gcd

from .exactnum import LAURENT, ONE, ZERO, gauss_binom
from .littlealg import _field_of, generated_subalgebra
from .qcoord import compositions
from .schuralg import schur_algebra
from .weightcomb import residues


class DiagonalElement:
    """An element of the zero part of U(n, r), as its values on the k_lambda."""

    __slots__ = ("weights", "values")

    def __init__(self, weights, values):
        self.weights = weights
        self.values = values

    @classmethod
    def constant(cls, weights, c=ONE):
        return cls(weights, {lam: c for lam in weights} if c else {})

    @classmethod
    def indicator(cls, weights, subset):
        return cls(weights, {lam: ONE for lam in subset})

    def get(self, lam):
        return self.values.get(lam, ZERO)

    def _combine(self, other, op):
        out = {}
        for lam in self.weights:
            c = op(self.get(lam), other.get(lam))
            if c:
                out[lam] = c
        return DiagonalElement(self.weights, out)

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def __mul__(self, other):
        if isinstance(other, DiagonalElement):
            return self._combine(other, lambda a, b: a * b)
        return DiagonalElement(self.weights, {k: x * other for k, x in self.values.items()
                                              if x * other})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, DiagonalElement) and self.values == other.values

    def __repr__(self):
        return f"DiagonalElement({self.values})"


def binom_values(weights, i, c, t, inverse=False):
    """[k~_i^{+-1}; c over t] on k_mu is [+-(mu_i - mu_{i+1}) + c over t]."""
    s = -1 if inverse else 1
    vals = {}
    for mu in weights:
        x = gauss_binom(s * (mu[i - 1] - mu[i]) + c, t)
        if x:
            vals[mu] = x
    return DiagonalElement(weights, vals)


# expression trees: tuples headed by an operator name

def e_binom(i, c, t, inverse=False):
    return ("binom", i, c, t, inverse)


def e_ref(name):
    return ("ref", name)


def e_sum(terms):
    return ("sum", tuple(terms))


def e_mul(factors):
    return ("mul", tuple(factors))


def e_scale(c, expr):
    return ("scale", c, expr)


def e_neg(expr):
    return e_scale(-ONE, expr)


def render(expr):
    """Parenthesized prefix syntax for an expression tree."""
    head = expr[0]
    if head == "binom":
        _, i, c, t, inv = expr
        sup = "^-1" if inv else ""
        return f"[kt{i}{sup};{c}/{t}]"
    if head == "ref":
        return _render_name(expr[1])
    if head == "one":
        return "1"
    if head == "scale":
        return f"(* {{{expr[1]}}} {render(expr[2])})"
    if head == "sum":
        return "(+ " + " ".join(render(e) for e in expr[1]) + ")"
    if head == "mul":
        return "(. " + " ".join(render(e) for e in expr[1]) + ")"
    raise ValueError(f"unknown node {head!r}")


def _render_name(name):
    kind = name[0]
    if kind == "k":
        return "k" + str(tuple(name[1])).replace(" ", "")
    return kind + str(tuple(name[1:])).replace(" ", "")


class CertificateStore:
    """Named expressions, each certified to evaluate to a stated diagonal element."""

    def __init__(self, n, r):
        self.n = n
        self.r = r
        self.weights = tuple(compositions(r, n))
        self.exprs = {}
        self.order = []
        self._values = {}

    def evaluate(self, expr):
        head = expr[0]
        W = self.weights
        if head == "binom":
            _, i, c, t, inv = expr
            return binom_values(W, i, c, t, inv)
        if head == "ref":
            return self._values[expr[1]]
        if head == "one":
            return DiagonalElement.constant(W)
        if head == "scale":
            return self.evaluate(expr[2]) * expr[1]
        if head == "sum":
            acc = DiagonalElement(W, {})
            for e in expr[1]:
                acc = acc + self.evaluate(e)
            return acc
        if head == "mul":
            acc = DiagonalElement.constant(W)
            for e in expr[1]:
                acc = acc * self.evaluate(e)
            return acc
        raise ValueError(f"unknown node {head!r}")

    def certify(self, name, expr, support):
        """Store ``expr`` under ``name`` after checking it equals sum_{mu in support} k_mu."""
        value = self.evaluate(expr)
        target = DiagonalElement.indicator(self.weights, support)
        if value != target:
            raise ArithmeticError(f"certificate {_render_name(name)} does not evaluate as claimed")
        self.exprs[name] = expr
        self.order.append(name)
        self._values[name] = value
        return value

    def recheck(self):
        """Re-evaluate every stored expression from scratch."""
        fresh = CertificateStore(self.n, self.r)
        for name in self.order:
            fresh._values[name] = fresh.evaluate(self.exprs[name])
            if fresh._values[name] != self._values[name]:
                return False
        return True


class KLambdaCertificate:
    """An expression for k_lambda, valid relative to the store it came from."""

    def __init__(self, lam, expr, store):
        self.lam = lam
        self.expr = expr
        self.store = store

    def __repr__(self):
        return f"KLambdaCertificate({self.lam}: {render(self.expr)})"

    def render(self):
        return render(self.expr)

    def verify(self):
        value = self.store.evaluate(self.expr)
        return value == DiagonalElement.indicator(self.store.weights, [self.lam])

    def dependencies(self):
        """Every stored name reachable from the expression (transitively)."""
        seen = []

        def walk(e):
            if e[0] == "ref":
                if e[1] not in seen:
                    seen.append(e[1])
                    walk(self.store.exprs[e[1]])
            elif e[0] in ("sum", "mul"):
                for x in e[1]:
                    walk(x)
            elif e[0] == "scale":
                walk(e[2])

        walk(self.expr)
        return seen


def stratum(mu):
    return max(mu[j] - mu[j + 1] for j in range(len(mu) - 1))


def strata(n, r):
    """{i: X_i} over -r <= i <= r (empty strata omitted)."""
    out = {}
    for mu in compositions(r, n):
        out.setdefault(stratum(mu), []).append(mu)
    return out


def _build(n, r):
    store = CertificateStore(n, r)
    W = store.weights
    if n == 1:
        store.certify(("k", W[0]), ("one",), [W[0]])
        return store
    X = strata(n, r)
    done = set()

    def cert_k(mu, expr):
        store.certify(("k", mu), expr, [mu])
        done.add(mu)

    # top stratum: [k~_i; r over 2r] = k_{r e_i}
    for i in range(1, n):
        mu = tuple(r if j == i - 1 else 0 for j in range(n))
        if r > 0:
            cert_k(mu, e_binom(i, r, 2 * r))
    last = tuple([0] * (n - 1) + [r])
    if r > 0 and stratum(last) == -r:
        cert_k(last, e_binom(n - 1, r, 2 * r, inverse=True))
    if r == 0:
        cert_k(W[0], ("one",))
        return store

    for k in sorted(X, reverse=True):
        for lam in sorted(X[k], reverse=True):
            if lam in done:
                continue
            i0 = next(j for j in range(1, n) if lam[j - 1] - lam[j] == k)
            Z = [nu for nu in X[k] if nu[i0 - 1] - nu[i0] == k]
            zname = ("Z", k, i0)
            if zname not in store.exprs:
                terms = [e_binom(i0, r, k + r)]
                for j in X:
                    if j <= k:
                        continue
                    for mu in X[j]:
                        c = gauss_binom(mu[i0 - 1] - mu[i0] + r, k + r)
                        if c:
                            terms.append(e_scale(-c, e_ref(("k", mu))))
                store.certify(zname, e_sum(terms), Z)
            others = [i for i in range(1, n) if i != i0]
            if not others:
                cert_k(lam, e_ref(zname))
                continue
            factors = []
            for i in others:
                levels = sorted({nu[i - 1] - nu[i] for nu in Z}, reverse=True)
                want = lam[i - 1] - lam[i]
                for idx, s in enumerate(levels):
                    yname = ("Y", k, i0, i, s)
                    if yname not in store.exprs:
                        inner = [e_binom(i, r, s + r)]
                        for s2 in levels[:idx]:
                            c = gauss_binom(s2 + r, s + r)
                            if c:
                                inner.append(e_scale(-c, e_ref(("Y", k, i0, i, s2))))
                        expr = e_mul([e_ref(zname), e_sum(inner)])
                        Y = [nu for nu in Z if nu[i - 1] - nu[i] == s]
                        store.certify(yname, expr, Y)
                    if s == want:
                        break
                factors.append(e_ref(("Y", k, i0, i, want)))
            cert_k(lam, e_mul(factors))
    missing = set(W) - done
    if missing:
        raise ArithmeticError(f"no certificate for {sorted(missing)}")
    return store


_STORES = {}


def certificate_store(n, r):
    key = (n, r)
    if key not in _STORES:
        _STORES[key] = _build(n, r)
    return _STORES[key]


def construct_klambda(n, r, lam):
    """Certificate expressing k_lambda through quantum binomials in k~_i^{+-1}."""
    lam = tuple(lam)
    if len(lam) != n or sum(lam) != r or min(lam, default=0) < 0:
        raise ValueError(f"{lam} is not in Lambda({n}, {r})")
    store = certificate_store(n, r)
    return KLambdaCertificate(lam, store.exprs[("k", lam)], store)


def evaluate_in_algebra(cert):
    """Evaluate a certificate by multiplying actual elements of U(n, r) over Z[v, v^-1]."""
    store = cert.store
    alg = schur_algebra(store.n, store.r, LAURENT)
    memo = {}

    def ev(e):
        head = e[0]
        if head == "binom":
            _, i, c, t, inv = e
            return alg.binom_op(i, c, t, inverse=inv)
        if head == "ref":
            if e[1] not in memo:
                memo[e[1]] = ev(store.exprs[e[1]])
            return memo[e[1]]
        if head == "one":
            return alg.one()
        if head == "scale":
            return ev(e[2]) * e[1]
        if head == "sum":
            acc = alg.zero()
            for x in e[1]:
                acc = acc + ev(x)
            return acc
        if head == "mul":
            acc = alg.one()
            for x in e[1]:
                acc = acc * ev(x)
            return acc
        raise ValueError(f"unknown node {head!r}")

    return ev(cert.expr)


def verify_integral_surjectivity(n, r, via_algebra=False):
    """True iff every k_lambda of U(n, r) gets a verified certificate."""
    try:
        store = certificate_store(n, r)
    except ArithmeticError:
        return False
    for lam in store.weights:
        cert = construct_klambda(n, r, lam)
        if not cert.verify():
            return False
        if via_algebra:
            alg = schur_algebra(n, r, LAURENT)
            if evaluate_in_algebra(cert) != alg.k_lambda(lam):
                return False
    return store.recheck()


def little_zero_image(n, r, lprime):
    """Dimension of the algebra generated by the k~_i^{+-1} in the little zero part."""
    f = _field_of(lprime)
    alg = schur_algebra(n, r, f)
    gens = []
    for i in range(1, n):
        gens += [alg.ktilde(i), alg.ktilde(i, -1)]
    if gens:
        dim = generated_subalgebra(gens).dim()
    else:
        dim = 1
    return {
        "n": n, "r": r, "lprime": f.lprime,
        "gcd": gcd(n, f.lprime),
        "dim_generated": dim,
        "dim_little_zero": len(residues(n, r, f.lprime)),
        "equal": dim == len(residues(n, r, f.lprime)),
    }


def ktilde_relation(r, lprime=3):
    """k~_2 == eps^-r k~_1 in U_k(3, r)."""
    f = _field_of(lprime)
    alg = schur_algebra(3, r, f)
    return alg.ktilde(2) == alg.ktilde(1) * f.eps(-r)


def certificate_lines(n, r, lam=None):
    """Rendered certificates with their verdicts, for the command line."""
    store = certificate_store(n, r)
    targets = [tuple(lam)] if lam is not None else list(store.weights)
    out = []
    for mu in targets:
        cert = construct_klambda(n, r, mu)
        deps = [nm for nm in cert.dependencies() if nm[0] != "k" or nm[1] != mu]
        out.append({
            "lambda": list(mu),
            "expression": cert.render(),
            "definitions": {_render_name(nm): render(store.exprs[nm]) for nm in deps},
            "verified": cert.verify(),
        })
    return out


__all__ = [
    "DiagonalElement", "KLambdaCertificate", "CertificateStore", "binom_values",
    "construct_klambda", "verify_integral_surjectivity", "little_zero_image",
    "ktilde_relation", "certificate_lines", "evaluate_in_algebra", "strata", "render",
]
