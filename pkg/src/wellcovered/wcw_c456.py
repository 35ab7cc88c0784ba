"""Polynomial computation of ``WCW(G)`` for graphs without 4-, 5- and 6-cycles.

Each connected component ``C`` is handled on its own and the results are
combined as a direct sum. This is valid because the maximal independent sets
of a disjoint union are exactly the unions of per-component maximal
independent sets.

* ``C`` isomorphic to ``C7`` or ``T10``: the constant functions on ``C``.
* otherwise, with ``L`` the boundary vertices of ``C`` and ``L`` empty: the
  zero space.
* otherwise pick a maximal independent set ``S`` of ``G[L]``. Every ``s`` in
  ``S`` is a free variable. Another boundary vertex ``l`` takes
  ``w(N(l) & S)``, and a vertex ``v`` outside ``L`` takes ``w(M(v))``.

All steps are local except the class check, so the running time is
dominated by the cycle scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .c5_structure import boundary_vertices, private_set, representative_mis
from .errors import PreconditionViolation
from .graph import Graph, connected_components, forbidden_cycles, induced_subgraph
from .isomorphism import is_isomorphic_reference
from .wcw_space import WeightBasis

FORBIDDEN = (4, 5, 6)

EXCEPTIONAL_C7 = "exceptional-C7"
EXCEPTIONAL_T10 = "exceptional-T10"
BOUNDARY_NONEMPTY = "boundary-nonempty"
BOUNDARY_EMPTY_ZERO = "boundary-empty-zero"


@dataclass(frozen=True)
class ComponentReport:
    vertices: tuple[int, ...]
    tag: str
    free_labels: tuple


@dataclass(frozen=True)
class Wcc456Report:
    basis: WeightBasis
    components: tuple[ComponentReport, ...]

    @property
    def dimension(self) -> int:
        return self.basis.dimension

    @property
    def free_labels(self) -> tuple:
        return self.basis.labels

    def to_json(self) -> dict:
        return {
            "class_check": True,
            "components": [
                {"vertices": list(c.vertices), "tag": c.tag, "free_labels": list(c.free_labels)}
                for c in self.components
            ],
            "basis": self.basis.to_json(),
        }


def require_c456(g: Graph) -> None:
    bad = forbidden_cycles(g, FORBIDDEN)
    if bad:
        k = min(bad)
        raise PreconditionViolation(
            f"graph contains a cycle of length {k}; "
            "the fast algorithm needs a graph without cycles of length 4, 5 and 6",
            cycle_length=k,
        )


def _exceptional_tag(g: Graph, comp: frozenset[int]) -> str | None:
    if len(comp) not in (7, 10):
        return None
    sub, _ = induced_subgraph(g, comp)
    if is_isomorphic_reference(sub, "C7"):
        return EXCEPTIONAL_C7
    if is_isomorphic_reference(sub, "T10"):
        return EXCEPTIONAL_T10
    return None


def _boundary_columns(
    g: Graph, comp: frozenset[int], boundary: frozenset[int]
) -> tuple[list[int], list[dict[int, Fraction]]]:
    local_l = sorted(comp & boundary)
    anchors = []
    blocked = set()
    for v in local_l:
        if v not in blocked:
            anchors.append(v)
            blocked.add(v)
            blocked.update(g.adj[v])
    columns = {s: {s: Fraction(1)} for s in anchors}
    # Columns in which each boundary vertex is nonzero.
    support = {s: (s,) for s in anchors}
    anchor_set = set(anchors)
    for l in local_l:
        if l in anchor_set:
            continue
        support[l] = tuple(sorted(g.adj[l] & anchor_set))
        for s in support[l]:
            columns[s][l] = Fraction(1)
    for v in sorted(comp - boundary):
        for u in representative_mis(g, v):
            # M(v) lies inside L, so u already has its values.
            for s in support[u]:
                col = columns[s]
                col[v] = col.get(v, 0) + col[u]
    return anchors, [columns[s] for s in anchors]


def wcw_c456(g: Graph, check: bool = True) -> Wcc456Report:
    """``WCW(G)`` for a graph without cycles of length 4, 5 and 6.

    Raises :class:`PreconditionViolation` naming the smallest offending cycle
    length when ``check`` is set and the graph is out of class.
    """
    if check:
        require_c456(g)
    boundary = boundary_vertices(g)
    columns: list[dict[int, Fraction]] = []
    labels: list = []
    reports = []
    for idx, comp in enumerate(connected_components(g)):
        tag = _exceptional_tag(g, comp)
        if tag is not None:
            label = f"component:{idx}"
            columns.append({v: Fraction(1) for v in comp})
            labels.append(label)
            free = (label,)
        elif not comp & boundary:
            tag, free = BOUNDARY_EMPTY_ZERO, ()
        else:
            tag = BOUNDARY_NONEMPTY
            anchors, cols = _boundary_columns(g, comp, boundary)
            columns.extend(cols)
            labels.extend(anchors)
            free = tuple(anchors)
        reports.append(ComponentReport(tuple(sorted(comp)), tag, free))
    basis = WeightBasis(g.n, tuple(columns), tuple(labels))
    return Wcc456Report(basis, tuple(reports))


def _private_shape_ok(g: Graph, v: int) -> bool:
    # D(v) must induce exactly one K1 or one K2.
    d = private_set(g, v)
    if len(d) == 1:
        return True
    if len(d) == 2:
        a, b = d
        return g.has_edge(a, b)
    return False


def is_well_covered_c456(g: Graph, check: bool = True) -> bool:
    """Well-coveredness for graphs without cycles of length 4, 5 and 6."""
    if check:
        require_c456(g)
    boundary = boundary_vertices(g)
    for comp in connected_components(g):
        if not comp & boundary:
            if _exceptional_tag(g, comp) is None:
                return False
            continue
        if not all(_private_shape_ok(g, v) for v in comp - boundary):
            return False
    return True
