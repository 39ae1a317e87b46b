"""Sparse exact linear algebra over the scalar types of ``exactnum``.

Vectors are plain dicts ``key -> scalar`` without zero entries.  Keys of a
single vector space must be mutually comparable, since pivots are chosen as
the smallest key of a row.
"""

from __future__ import annotations

from fractions import Fraction


def axpy(target, coeff, vec):
    """In place ``target += coeff * vec``."""
    for k, x in vec.items():
        s = target.get(k)
        s = coeff * x if s is None else s + coeff * x
        if s:
            target[k] = s
        else:
            target.pop(k, None)
    return target


def div(a, b):
    """a / b, exact for plain integers."""
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def scale(vec, coeff):
    if not coeff:
        return {}
    return {k: coeff * x for k, x in vec.items()}


def add(u, v):
    return axpy(dict(u), 1, v)


def sub(u, v):
    return axpy(dict(u), -1, v)


class Echelon:
    """Reduced row echelon form of a growing set of sparse vectors.

    Every stored row has coefficient 1 at its pivot (its smallest key) and
    zero at the pivots of all other rows, so the coordinates of a vector
    lying in the span are read off at the pivots.
    """

    def __init__(self, vectors=()):
        self.rows = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def basis(self):
        return [self.rows[p] for p in sorted(self.rows)]

    def reduce(self, vec):
        vec = dict(vec)
        for p in [k for k in vec if k in self.rows]:
            c = vec.get(p)
            if c:
                axpy(vec, -c, self.rows[p])
        return vec

    def add(self, vec):
        """Insert ``vec``; return the new pivot or ``None`` if dependent."""
        vec = self.reduce(vec)
        if not vec:
            return None
        p = min(vec)
        lead = vec[p]
        if lead == 1:
            inv = None
        elif isinstance(lead, int):
            inv = Fraction(1, lead)
        else:
            inv = 1 / lead
        if inv is not None:
            vec = {k: x * inv for k, x in vec.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                axpy(row, -c, vec)
        self.rows[p] = vec
        return p

    def contains(self, vec):
        return not self.reduce(vec)

    def coords(self, vec, check=True):
        """Coordinates ``{pivot: coeff}`` of a vector in the span."""
        out = {p: vec[p] for p in vec if p in self.rows}
        if check:
            rest = dict(vec)
            for p, c in out.items():
                axpy(rest, -c, self.rows[p])
            if rest:
                raise ValueError("vector is not in the span")
        return out

    def contains_all(self, other):
        return all(self.contains(v) for v in other.rows.values())

    def same_span(self, other):
        return len(self) == len(other) and self.contains_all(other)


def rank(vectors):
    return len(Echelon(vectors))


def kernel(vectors):
    """Basis of ``{c : sum_i c[i] * vectors[i] == 0}`` as dicts ``i -> coeff``."""
    ech = Echelon()
    for i, v in enumerate(vectors):
        aug = {(0, k): x for k, x in v.items()}
        aug[(1, i)] = 1
        ech.add(aug)
    out = []
    for p, row in ech.rows.items():
        if p[0] == 1:
            out.append({k[1]: x for k, x in row.items()})
    return sorted(out, key=lambda d: min(d))


def solve(vectors, target):
    """Some ``c`` with ``sum_i c[i] * vectors[i] == target``, or ``None``."""
    ech = Echelon()
    for i, v in enumerate(vectors):
        aug = {(0, k): x for k, x in v.items()}
        aug[(1, i)] = 1
        ech.add(aug)
    rest = {(0, k): x for k, x in target.items()}
    combo = {}
    for p in sorted(k for k in rest if k in ech.rows):
        c = rest.get(p)
        if c:
            row = ech.rows[p]
            axpy(rest, -c, row)
    if any(k[0] == 0 for k in rest):
        return None
    # rest now holds -(combination) on the augmented keys
    for k, x in rest.items():
        combo[k[1]] = -x
    return combo


def matrix_rank(rows):
    """Rank of a dense matrix given as a list of lists."""
    return rank([{j: x for j, x in enumerate(row) if x} for row in rows])
