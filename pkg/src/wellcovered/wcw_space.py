"""Weight functions, bases of weight-function spaces, and the exhaustive oracle.

A weight function on ``g`` is a length-``n`` vector of rationals. ``WCW(G)``
is the space of weight functions under which all maximal independent sets of
``G`` have equal total weight; :func:`wcw_bruteforce` computes it directly
as a nullspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import InvalidArgument
from .graph import Graph, simplicial_vertices
from .independence import DEFAULT_CAP, extend_to_maximal, maximal_independent_sets
from .linalg import (
    Echelon,
    SparseVector,
    dense,
    format_rational,
    parse_rational,
    reduced_echelon,
    sparse,
)

Label = Hashable


@dataclass(frozen=True)
class WeightBasis:
    """Linearly independent weight functions spanning a subspace.

    Columns are stored sparsely (vertex -> nonzero value). Each column
    carries a label: the vertex whose weight is its free variable, or a
    string tag for columns not anchored at a single vertex.
    """

    n: int
    columns: tuple[SparseVector, ...] = ()
    labels: tuple[Label, ...] = ()

    def __post_init__(self):
        if len(self.columns) != len(self.labels):
            raise InvalidArgument("one label per column is required")
        for col in self.columns:
            if any(not 0 <= i < self.n for i in col):
                raise InvalidArgument("column entry outside 0..n-1")

    @property
    def dimension(self) -> int:
        return len(self.columns)

    def column(self, j: int) -> list[Fraction]:
        return dense(self.columns[j], self.n)

    def matrix(self) -> list[list[Fraction]]:
        """Dense ``n x k`` matrix, row per vertex."""
        cols = [self.column(j) for j in range(self.dimension)]
        return [[c[v] for c in cols] for v in range(self.n)]

    def canonical(self) -> "WeightBasis":
        """Reduced column echelon form; pivots in increasing vertex order.

        Two bases span the same space iff their canonical forms are equal.
        """
        cols = reduced_echelon(self.columns)
        return WeightBasis(self.n, tuple(cols), tuple(min(c) for c in cols))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dimension": self.dimension,
            "labels": [_label_json(lab) for lab in self.labels],
            "columns": [[format_rational(x) for x in self.column(j)] for j in range(self.dimension)],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "WeightBasis":
        n = int(data["n"])
        cols = []
        for raw in data["columns"]:
            if len(raw) != n:
                raise InvalidArgument(f"column of length {len(raw)} for n={n}")
            cols.append(sparse(parse_rational(str(x)) for x in raw))
        labels = tuple(data.get("labels", range(len(cols))))
        basis = cls(n, tuple(cols), labels)
        if "dimension" in data and int(data["dimension"]) != basis.dimension:
            raise InvalidArgument("dimension field does not match column count")
        return basis


def _label_json(label):
    return label if isinstance(label, (int, str)) else str(label)


def weight_of(w: Sequence | Mapping[int, object], s: Iterable[int]) -> Fraction:
    """Total weight of the vertex set ``s``."""
    if isinstance(w, Mapping):
        return sum((Fraction(w.get(v, 0)) for v in s), Fraction(0))
    return sum((Fraction(w[v]) for v in s), Fraction(0))


def wcdim_of(basis: WeightBasis) -> int:
    return basis.dimension


def _as_vector(w, n: int) -> SparseVector:
    if isinstance(w, Mapping):
        vec = sparse(w)
        if any(not 0 <= i < n for i in vec):
            raise InvalidArgument("weight function has entries outside 0..n-1")
        return vec
    w = list(w)
    if len(w) != n:
        raise InvalidArgument(f"weight function has length {len(w)}, expected {n}")
    return sparse(w)


def span_contains(basis: WeightBasis, w) -> bool:
    """True iff ``w`` (dense sequence or sparse mapping) lies in the span of ``basis``."""
    vec = _as_vector(w, basis.n)
    ech = Echelon()
    for col in basis.columns:
        ech.add(col)
    return ech.contains(vec)


def span_equal(a: WeightBasis, b: WeightBasis) -> bool:
    if a.n != b.n:
        raise InvalidArgument(f"bases live on different vertex counts ({a.n} vs {b.n})")
    ea, eb = Echelon(), Echelon()
    for col in a.columns:
        ea.add(col)
    for col in b.columns:
        eb.add(col)
    return ea.rank == eb.rank and all(ea.contains(c) for c in b.columns)


def mis_constraint_rows(sets: Sequence[Sequence[int]]) -> list[dict[int, int]]:
    """Integer rows ``1_{I_j} - 1_{I_0}`` for ``j >= 1``, zero rows dropped."""
    if not sets:
        return []
    base = set(sets[0])
    rows = []
    for s in sets[1:]:
        s = set(s)
        row = {v: 1 for v in s - base}
        row.update({v: -1 for v in base - s})
        if row:
            rows.append(row)
    return rows


def wcw_bruteforce(g: Graph, cap: int = DEFAULT_CAP) -> WeightBasis:
    """``WCW(G)`` from all maximal independent sets, in canonical form.

    Raises :class:`~wellcovered.errors.ResourceLimit` when there are more
    than ``cap`` maximal independent sets.
    """
    sets = maximal_independent_sets(g, cap)
    ech = Echelon()
    for row in mis_constraint_rows(sets):
        ech.add(row)
    cols = reduced_echelon(ech.nullspace(g.n))
    return WeightBasis(g.n, tuple(cols), tuple(min(c) for c in cols))


def simplicial_subspace(g: Graph) -> WeightBasis:
    """The subspace of ``WCW(G)`` generated from simplicial vertices.

    With ``A`` a maximal independent set of the simplicial vertices, each
    ``a`` in ``A`` gives a column that is 1 at ``a`` and at every neighbor
    of ``a``, and 0 elsewhere: any other vertex ``v`` gets ``w(N(v) & A)``.
    """
    simplicial = simplicial_vertices(g)
    anchors = sorted(extend_to_maximal(g, (), simplicial))
    cols = []
    for a in anchors:
        col = {a: Fraction(1)}
        for v in g.adj[a]:
            col[v] = Fraction(1)
        cols.append(col)
    return WeightBasis(g.n, tuple(cols), tuple(anchors))
