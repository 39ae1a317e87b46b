"""Exact coefficient domains and quantum combinatorics.

Three scalar families are used throughout the package:

* ``LaurentPoly``: integer Laurent polynomials in ``v``, the generic ring
  over which every structure constant is first computed;
* ``CycloScalar``: elements of Q(eps) for a primitive ``l'``-th root of
  unity ``eps``, stored as rational coefficient vectors reduced modulo the
  cyclotomic polynomial;
* ``PrimeScalar``: residues modulo a prime ``p`` with ``l' | p - 1``,
  where ``eps`` is an element of multiplicative order ``l'``.

A ``FieldSpec`` bundles the choice of ``l'`` and backend and converts
Laurent polynomials into field elements by ``v -> eps``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


class LaurentPoly:
    """Sparse integer Laurent polynomial in ``v``.

    Stored as a mapping exponent -> nonzero integer coefficient.  Instances
    are treated as immutable.
    """

    __slots__ = ("_t", "_h")

    def __init__(self, terms=None):
        if terms is None:
            self._t = {}
        elif isinstance(terms, int):
            self._t = {0: terms} if terms else {}
        else:
            self._t = {e: c for e, c in dict(terms).items() if c}
        self._h = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._t = terms
        obj._h = None
        return obj

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls._raw({exp: coeff} if coeff else {})

    @property
    def terms(self):
        return dict(self._t)

    def items(self):
        return sorted(self._t.items())

    def is_zero(self):
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._t == other._t
        if isinstance(other, int):
            return self._t == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash(frozenset(self._t.items()))
        return self._h

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._t:
            return self
        if not self._t:
            return other
        t = dict(self._t)
        for e, c in other._t.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            else:
                del t[e]
        return LaurentPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: c * other for e, c in self._t.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return LaurentPoly._raw({})
        if len(a) == 1 and len(b) == 1:
            (e1, c1), = a.items()
            (e2, c2), = b.items()
            return LaurentPoly._raw({e1 + e2: c1 * c2})
        t = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                t[e] = t.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if len(self._t) == 1:
                (e, c), = self._t.items()
                if c in (1, -1):
                    return LaurentPoly._raw({-e * (-k): c ** (-k)})
            raise ValueError("only monomial units can be inverted")
        out = LaurentPoly(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def bar(self):
        """The involution ``v -> v^-1``."""
        return LaurentPoly._raw({-e: c for e, c in self._t.items()})

    def shift(self, k):
        return LaurentPoly._raw({e + k: c for e, c in self._t.items()})

    def min_exp(self):
        return min(self._t)

    def max_exp(self):
        return max(self._t)

    def divmod_exact(self, other):
        """Return ``self / other``; raise ``ArithmeticError`` if not exact."""
        if not other._t:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self._t:
            return LaurentPoly._raw({})
        dlo, dhi = other.min_exp(), other.max_exp()
        lead = other._t[dhi]
        rem = dict(self._t)
        quot = {}
        while rem:
            hi = max(rem)
            if hi - dhi < min(rem) - dlo:
                break
            c, m = divmod(rem[hi], lead)
            if m:
                raise ArithmeticError("inexact Laurent division")
            sh = hi - dhi
            quot[sh] = c
            for e, d in other._t.items():
                s = rem.get(e + sh, 0) - c * d
                if s:
                    rem[e + sh] = s
                else:
                    rem.pop(e + sh, None)
        if rem:
            raise ArithmeticError("inexact Laurent division")
        return LaurentPoly._raw(quot)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        return self.divmod_exact(other)

    def evaluate(self, power):
        """Sum of ``c * power(e)`` over the terms; ``power`` maps exponents."""
        return sum((c * power(e) for e, c in self._t.items()), start=0)

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for e, c in sorted(self._t.items()):
            if e == 0:
                mono = str(abs(c))
            else:
                var = "v" if e == 1 else f"v^{e}"
                mono = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(("-" if c < 0 else "") + mono)
            else:
                parts.append(("- " if c < 0 else "+ ") + mono)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def to_json(self):
        return {str(e): c for e, c in sorted(self._t.items())}

    @classmethod
    def from_json(cls, data):
        return cls({int(e): int(c) for e, c in data.items()})


V = LaurentPoly.monomial(1)
ONE = LaurentPoly(1)
ZERO = LaurentPoly()


def vpow(k):
    return LaurentPoly.monomial(k)


@lru_cache(maxsize=None)
def qint(c):
    """Balanced quantum integer ``(v^c - v^-c)/(v - v^-1)``."""
    if c == 0:
        return ZERO
    sign = 1 if c > 0 else -1
    c = abs(c)
    return LaurentPoly({c - 1 - 2 * k: sign for k in range(c)})


@lru_cache(maxsize=None)
def qfact(t):
    if t < 0:
        raise ValueError("quantum factorial of a negative integer")
    out = ONE
    for s in range(1, t + 1):
        out = out * qint(s)
    return out


@lru_cache(maxsize=None)
def gauss_binom(c, t):
    """Gaussian binomial from the product formula, with exact division.

    Every partial product is itself a Gaussian binomial, so dividing one
    factor at a time never leaves the Laurent ring.
    """
    if t < 0:
        raise ValueError("lower index must be nonnegative")
    out = ONE
    for s in range(1, t + 1):
        num = vpow(c - s + 1) - vpow(-c + s - 1)
        den = vpow(s) - vpow(-s)
        out = (out * num).divmod_exact(den)
    return out


def _phi(m):
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


@lru_cache(maxsize=None)
def cyclotomic_poly(m):
    """Integer coefficients (ascending) of the ``m``-th cyclotomic polynomial."""
    # x^m - 1 divided by all Phi_d for proper divisors d of m
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divexact(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _poly_divexact(a, b):
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        out[i] = c
        for j, bj in enumerate(b):
            a[i + j] -= c * bj
    assert not any(a), "cyclotomic division left a remainder"
    return out


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class CycloScalar:
    """Element of Q(eps), eps a primitive ``l'``-th root of unity.

    ``c`` holds the coefficients of ``1, eps, ..., eps^(phi-1)``; entries
    are ints or Fractions, so equality is coefficient equality.
    """

    __slots__ = ("f", "c")

    def __init__(self, field, coeffs):
        self.f = field
        self.c = coeffs

    def __bool__(self):
        return any(self.c)

    def is_zero(self):
        return not any(self.c)

    def _coerce(self, other):
        if isinstance(other, CycloScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return self.f.from_int(other)
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloScalar(self.f, tuple(_norm(a + b) for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar(self.f, tuple(-a for a in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloScalar(self.f, tuple(_norm(a - b) for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloScalar(self.f, tuple(_norm(a * other) for a in self.c))
        if not isinstance(other, CycloScalar):
            return NotImplemented
        return self.f._mul(self, other)

    __rmul__ = __mul__

    def inverse(self):
        return self.f._inv(self)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloScalar(self.f, tuple(_norm(Fraction(a) / other) for a in self.c))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.f.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def rational(self):
        """The value as a rational number if it lies in Q, else ``None``."""
        if any(self.c[1:]):
            return None
        return self.c[0]

    def __str__(self):
        return "[" + ", ".join(str(a) for a in self.c) + "]"

    __repr__ = __str__

    def to_json(self):
        return [str(a) for a in self.c]


class PrimeScalar:
    """Residue modulo the prime of a prime-kind ``FieldSpec``."""

    __slots__ = ("f", "x")

    def __init__(self, field, x):
        self.f = field
        self.x = x % field.p

    def __bool__(self):
        return self.x != 0

    def is_zero(self):
        return self.x == 0

    def _val(self, other):
        if isinstance(other, PrimeScalar):
            return other.x
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            p = self.f.p
            return other.numerator * pow(other.denominator, -1, p)
        return None

    def __eq__(self, other):
        o = self._val(other)
        if o is None:
            return NotImplemented
        return (self.x - o) % self.f.p == 0

    def __hash__(self):
        return hash(self.x)

    def __add__(self, other):
        o = self._val(other)
        if o is None:
            return NotImplemented
        return PrimeScalar(self.f, self.x + o)

    __radd__ = __add__

    def __neg__(self):
        return PrimeScalar(self.f, -self.x)

    def __sub__(self, other):
        o = self._val(other)
        if o is None:
            return NotImplemented
        return PrimeScalar(self.f, self.x - o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._val(other)
        if o is None:
            return NotImplemented
        return PrimeScalar(self.f, self.x * o)

    __rmul__ = __mul__

    def inverse(self):
        if not self.x:
            raise ZeroDivisionError("inverse of zero")
        return PrimeScalar(self.f, pow(self.x, -1, self.f.p))

    def __truediv__(self, other):
        o = self._val(other)
        return self * PrimeScalar(self.f, o).inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return PrimeScalar(self.f, pow(self.x, k, self.f.p))

    def rational(self):
        return None

    def __str__(self):
        return f"{self.x} mod {self.f.p}"

    __repr__ = __str__

    def to_json(self):
        return self.x


def _is_prime(p):
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


class FieldSpec:
    """A field containing a primitive ``l'``-th root of unity ``eps``.

    ``kind`` is ``"cyclotomic"`` (characteristic 0, exact Q(eps)) or
    ``"prime"`` (GF(p) with ``l' | p - 1``).  ``l`` is the order of
    ``q = eps^2``.
    """

    def __init__(self, lprime, kind="cyclotomic", p=None, root=None):
        if lprime < 3:
            raise ValueError("l' must be at least 3")
        if kind not in ("cyclotomic", "prime"):
            raise ValueError(f"unknown field kind {kind!r}")
        self.lprime = lprime
        self.kind = kind
        self.l = lprime if lprime % 2 else lprime // 2
        self._spec_cache = {}
        if kind == "cyclotomic":
            self.phi = _phi(lprime)
            poly = cyclotomic_poly(lprime)
            d = self.phi
            # reduction table: eps^k for 0 <= k <= 2d-2 in the power basis
            red = []
            for k in range(2 * d - 1):
                if k < d:
                    vec = [0] * d
                    vec[k] = 1
                else:
                    prev = red[k - 1]
                    top = prev[-1]
                    vec = [0] + prev[:-1]
                    for j in range(d):
                        vec[j] -= top * poly[j]
                red.append(vec)
            self._red = [tuple(r) for r in red]
            self._pows = [self._from_vec(self._eps_vec(m)) for m in range(lprime)]
        else:
            if p is None:
                p = lprime + 1
                while not _is_prime(p):
                    p += lprime
            if not _is_prime(p) or (p - 1) % lprime:
                raise ValueError("prime kind needs a prime p with l' | p-1")
            self.p = p
            if root is None:
                root = next(g for g in range(2, p) if self._order(g) == lprime)
            elif self._order(root % p) != lprime:
                raise ValueError("chosen root does not have order l'")
            self.root = root % p
            self._pows = [PrimeScalar(self, pow(self.root, m, p)) for m in range(lprime)]

    def _order(self, g):
        x, k = g, 1
        while x != 1:
            x = x * g % self.p
            k += 1
        return k

    def _eps_vec(self, m):
        m %= self.lprime
        vec = [0] * self.phi
        if m < len(self._red):
            for j, a in enumerate(self._red[m]):
                vec[j] += a
            return vec
        # eps^m with m >= 2phi-1: multiply down
        cur = [0] * self.phi
        cur[0] = 1
        step = self._red[1]
        for _ in range(m):
            cur = self._mulvec(cur, list(step))
        return cur

    def _mulvec(self, a, b):
        d = self.phi
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            ck = prod[k]
            if ck:
                for j, r in enumerate(self._red[k]):
                    if r:
                        out[j] += ck * r
        return out

    def _from_vec(self, vec):
        return CycloScalar(self, tuple(_norm(a) for a in vec))

    def _mul(self, x, y):
        return self._from_vec(self._mulvec(x.c, y.c))

    def _inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        d = self.phi
        # solve M z = e0 where M is multiplication by x in the power basis
        cols = [self._mulvec(list(x.c), [1 if j == k else 0 for j in range(d)]) for k in range(d)]
        mat = [[Fraction(cols[k][i]) for k in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
        for col in range(d):
            piv = next(i for i in range(col, d) if mat[i][col])
            mat[col], mat[piv] = mat[piv], mat[col]
            pv = mat[col][col]
            mat[col] = [a / pv for a in mat[col]]
            for i in range(d):
                if i != col and mat[i][col]:
                    fac = mat[i][col]
                    mat[i] = [a - fac * b for a, b in zip(mat[i], mat[col])]
        return self._from_vec([mat[i][d] for i in range(d)])

    @property
    def characteristic(self):
        return 0 if self.kind == "cyclotomic" else self.p

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, a):
        if self.kind == "prime":
            if isinstance(a, Fraction):
                return PrimeScalar(self, a.numerator * pow(a.denominator, -1, self.p))
            return PrimeScalar(self, a)
        return CycloScalar(self, (_norm(a),) + (0,) * (self.phi - 1))

    def eps(self, m=1):
        return self._pows[m % self.lprime]

    vpow = eps

    def from_laurent(self, x):
        hit = self._spec_cache.get(x)
        if hit is not None:
            return hit
        if self.kind == "prime":
            s = sum(c * self._pows[e % self.lprime].x for e, c in x._t.items())
            val = PrimeScalar(self, s)
        else:
            acc = [0] * self.phi
            for e, c in x._t.items():
                for j, a in enumerate(self._pows[e % self.lprime].c):
                    if a:
                        acc[j] += c * a
            val = self._from_vec(acc)
        self._spec_cache[x] = val
        return val

    def convert(self, x):
        if isinstance(x, LaurentPoly):
            return self.from_laurent(x)
        if isinstance(x, (int, Fraction)):
            return self.from_int(x)
        return x

    def __eq__(self, other):
        return (isinstance(other, FieldSpec) and self.key() == other.key())

    def __hash__(self):
        return hash(self.key())

    def key(self):
        if self.kind == "cyclotomic":
            return ("cyclotomic", self.lprime)
        return ("prime", self.lprime, self.p, self.root)

    def __repr__(self):
        if self.kind == "cyclotomic":
            return f"FieldSpec(lprime={self.lprime})"
        return f"FieldSpec(lprime={self.lprime}, kind='prime', p={self.p}, root={self.root})"


class LaurentRing:
    """The generic coefficient ring Z[v, v^-1], with the FieldSpec interface."""

    kind = "laurent"
    lprime = None
    characteristic = 0

    def zero(self):
        return ZERO

    def one(self):
        return ONE

    def from_int(self, a):
        return LaurentPoly(a)

    def vpow(self, k):
        return vpow(k)

    def from_laurent(self, x):
        return x

    def convert(self, x):
        if isinstance(x, int):
            return LaurentPoly(x)
        return x

    def key(self):
        return ("laurent",)

    def __eq__(self, other):
        return isinstance(other, LaurentRing)

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "LaurentRing()"


LAURENT = LaurentRing()


@lru_cache(maxsize=None)
def cyclotomic_field(lprime):
    """Shared cyclotomic ``FieldSpec`` instance for ``l'``."""
    return FieldSpec(lprime)


def specialize(x, f):
    """Image of a Laurent polynomial (or int) under ``v -> eps``."""
    return f.convert(x)


def eps_log(x, f):
    """Return ``m`` in ``0..l'-1`` with ``x == eps^m``, or ``None``."""
    for m in range(f.lprime):
        if f.eps(m) == x:
            return m
    return None
