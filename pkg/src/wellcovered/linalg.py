"""Exact rational linear algebra on sparse vectors.

Vectors are ``dict[int, Fraction]`` holding only nonzero entries. Everything
here is exact; there are no tolerances.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

SparseVector = dict[int, Fraction]


def sparse(values: Mapping[int, object] | Iterable[object]) -> SparseVector:
    """Build a sparse vector from a mapping or a dense sequence."""
    items = values.items() if isinstance(values, Mapping) else enumerate(values)
    out = {}
    for i, x in items:
        q = Fraction(x)
        if q:
            out[int(i)] = q
    return out


def dense(vec: Mapping[int, Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * n
    for i, x in vec.items():
        out[i] = x
    return out


def _axpy(y: SparseVector, a: Fraction, x: Mapping[int, Fraction]) -> None:
    """In place ``y += a * x``, dropping entries that cancel."""
    for i, xi in x.items():
        v = y.get(i, 0) + a * xi
        if v:
            y[i] = v
        else:
            y.pop(i, None)


def _integral(vec: Mapping[int, object]) -> dict[int, int]:
    """Primitive integer multiple of ``vec`` (entries coprime, zeros dropped)."""
    if all(type(x) is int for x in vec.values()):
        return _primitive({i: x for i, x in vec.items() if x})
    vals = {i: Fraction(x) for i, x in vec.items() if x}
    if not vals:
        return {}
    den = 1
    for q in vals.values():
        den = den * q.denominator // gcd(den, q.denominator)
    out = {i: int(q * den) for i, q in vals.items()}
    return _primitive(out)


def _primitive(vec: dict[int, int]) -> dict[int, int]:
    g = 0
    for x in vec.values():
        g = gcd(g, x)
        if g == 1:
            return vec
    return {i: x // g for i, x in vec.items()} if g > 1 else vec


class Echelon:
    """Incrementally built echelon form of a row space, keyed by pivot coordinate.

    Rows are stored fraction-free as primitive integer vectors whose pivot
    (smallest coordinate) is positive, and are kept fully reduced against one
    another: every row is zero at every other row's pivot.
    """

    def __init__(self):
        self._rows: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def _reduce_int(self, vec: dict[int, int]) -> dict[int, int]:
        out = dict(vec)
        # Stored rows vanish on each other's pivots, so eliminating one pivot
        # never creates an entry at another; the pivot list can be fixed up front.
        for p in sorted(k for k in out if k in self._rows):
            c = out.get(p)
            if not c:
                continue
            row = self._rows[p]
            a = row[p]
            h = gcd(a, c)
            a, c = a // h, c // h
            if a != 1:
                out = {i: a * x for i, x in out.items()}
            for i, x in row.items():
                y = out.get(i, 0) - c * x
                if y:
                    out[i] = y
                else:
                    out.pop(i, None)
            out = _primitive(out)
        return out

    def add(self, vec: Mapping[int, object]) -> bool:
        """Insert ``vec``; return False if it was already in the span."""
        r = self._reduce_int(_integral(vec))
        if not r:
            return False
        p = min(r)
        if r[p] < 0:
            r = {i: -x for i, x in r.items()}
        for q, row in list(self._rows.items()):
            c = row.get(p)
            if c:
                a = r[p]
                h = gcd(a, c)
                a, c = a // h, c // h
                new = {i: a * x for i, x in row.items()}
                for i, x in r.items():
                    y = new.get(i, 0) - c * x
                    if y:
                        new[i] = y
                    else:
                        new.pop(i, None)
                new = _primitive(new)
                if new[q] < 0:
                    new = {i: -x for i, x in new.items()}
                self._rows[q] = new
        self._rows[p] = r
        return True

    def contains(self, vec: Mapping[int, object]) -> bool:
        return not self._reduce_int(_integral(vec))

    def rows(self) -> list[SparseVector]:
        """Reduced row echelon form: each row scaled to 1 at its pivot."""
        out = []
        for p in self.pivots:
            row = self._rows[p]
            a = row[p]
            out.append({i: Fraction(x, a) for i, x in row.items()})
        return out

    def reduce(self, vec: Mapping[int, object]) -> SparseVector:
        """Exact remainder of ``vec`` after eliminating every stored pivot."""
        out = {i: Fraction(x) for i, x in vec.items() if x}
        for p, row in zip(self.pivots, self.rows()):
            c = out.get(p)
            if c:
                _axpy(out, -c, row)
        return out

    def nullspace(self, n: int) -> list[SparseVector]:
        """Basis of ``{x : r . x = 0 for every stored row r}`` over ``n`` coordinates.

        One vector per free coordinate ``f``: 1 at ``f``, minus the reduced
        rows' ``f`` entries at their pivots.
        """
        reduced = dict(zip(self.pivots, self.rows()))
        basis = []
        for f in range(n):
            if f in reduced:
                continue
            vec = {f: Fraction(1)}
            for p, row in reduced.items():
                c = row.get(f)
                if c:
                    vec[p] = -c
            basis.append(vec)
        return basis


def rank(vectors: Iterable[Mapping[int, Fraction]]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def reduced_echelon(vectors: Iterable[Mapping[int, Fraction]]) -> list[SparseVector]:
    """Unique reduced echelon basis of the span, ordered by pivot."""
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rows()


def dot(a: Mapping[int, Fraction], b: Mapping[int, Fraction]) -> Fraction:
    if len(b) < len(a):
        a, b = b, a
    return sum((x * b[i] for i, x in a.items() if i in b), Fraction(0))


def format_rational(q: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)
