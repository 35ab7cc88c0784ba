"""Local structure around each vertex, used for graphs without 5-cycles.

For a vertex ``v``:

* ``L(G)`` (:func:`boundary_vertices`) holds the vertices of degree 1 and the
  degree-2 vertices lying on a triangle;
* ``D(v)`` (:func:`private_set`) is the set of neighbors of ``v`` that have no
  neighbor at distance exactly 2 from ``v``;
* ``M(v)`` (:func:`representative_mis`) is a maximal independent set of ``G[D(v)]``.

In a ``C5``-free graph, any weight function under which the graph is
well-covered satisfies ``w(v) = w(M(v))`` whenever ``v`` is outside ``L(G)`` and
``D(v)`` is non-empty; :func:`necessary_constraints_c5` emits those equations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidArgument, PreconditionViolation
from .graph import Graph, contains_cycle
from .independence import extend_to_maximal
from .linalg import SparseVector, dot, sparse


def _vertex(g: Graph, v: int) -> None:
    if not (isinstance(v, int) and 0 <= v < g.n):
        raise InvalidArgument(f"vertex {v!r} not in graph with n={g.n}")


def is_boundary(g: Graph, v: int) -> bool:
    d = g.degree(v)
    if d == 2:
        a, b = g.neighbors(v)
        return g.has_edge(a, b)
    # Isolated vertices are included: they are simplicial, and the algorithms
    # downstream rely on L(G) coinciding with the simplicial vertices.
    return d <= 1


def boundary_vertices(g: Graph) -> frozenset[int]:
    """``L(G)``."""
    return frozenset(v for v in g.vertices if is_boundary(g, v))


def second_layer(g: Graph, v: int) -> frozenset[int]:
    """``N_2(v)``, computed locally without a full search."""
    near = g.adj[v] | {v}
    out = set()
    for u in g.adj[v]:
        out.update(g.adj[u])
    return frozenset(out - near)


def private_set(g: Graph, v: int) -> frozenset[int]:
    """``D(v)``: neighbors of ``v`` with no neighbor at distance 2 from ``v``."""
    _vertex(g, v)
    far = second_layer(g, v)
    return frozenset(u for u in g.adj[v] if g.adj[u].isdisjoint(far))


def representative_mis(g: Graph, v: int) -> frozenset[int]:
    """``M(v)``, chosen greedily by smallest id."""
    return extend_to_maximal(g, (), private_set(g, v))


@dataclass(frozen=True)
class ConstraintRow:
    """The homogeneous linear equation ``sum(coeffs[v] * w(v)) = 0``.

    ``source`` is the vertex the equation was derived for, when there is one.
    """

    coeffs: SparseVector
    source: int | None = None

    def evaluate(self, w) -> Fraction:
        vec = sparse(w)
        return dot(self.coeffs, vec)

    def satisfied_by(self, w) -> bool:
        return self.evaluate(w) == 0


@dataclass(frozen=True)
class StructuralProfile:
    boundary: frozenset[int]
    private: tuple[frozenset[int], ...]
    representative: tuple[frozenset[int], ...]


def structural_profile(g: Graph) -> StructuralProfile:
    private = tuple(private_set(g, v) for v in g.vertices)
    return StructuralProfile(
        boundary_vertices(g),
        private,
        tuple(extend_to_maximal(g, (), d) for d in private),
    )


def necessary_constraints_c5(g: Graph, check: bool = True) -> list[ConstraintRow]:
    """Rows ``w(v) - w(M(v)) = 0`` for each ``v`` outside ``L(G)`` with ``D(v)`` non-empty.

    With ``check`` (the default) a graph containing ``C5`` is rejected.
    """
    if check and contains_cycle(g, 5):
        raise PreconditionViolation("graph contains a cycle of length 5", cycle_length=5)
    rows = []
    for v in g.vertices:
        if is_boundary(g, v):
            continue
        rep = representative_mis(g, v)
        if not rep:
            continue
        coeffs = {v: Fraction(1)}
        coeffs.update((u, Fraction(-1)) for u in rep)
        rows.append(ConstraintRow(coeffs, v))
    return rows
