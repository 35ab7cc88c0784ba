"""Choose between the polynomial algorithms and the exhaustive oracles.

``method`` is one of ``"auto"``, ``"fast"`` or ``"oracle"``. ``auto`` uses the
fast route when the graph is in the class the route is proven for, falls
back to the oracle on graphs of at most :data:`ORACLE_AUTO_LIMIT` vertices,
and otherwise raises :class:`PreconditionViolation`. Answers are never
produced by a route that is not known to be exact for the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import recognition
from .errors import InvalidArgument, PreconditionViolation
from .graph import Graph, forbidden_cycles
from .independence import DEFAULT_CAP, is_well_covered_bruteforce
from .wcw_c456 import FORBIDDEN, Wcc456Report, is_well_covered_c456, wcw_c456
from .wcw_space import WeightBasis, wcw_bruteforce

METHODS = ("auto", "fast", "oracle")
ORACLE_AUTO_LIMIT = 30


@dataclass(frozen=True)
class WcwResult:
    basis: WeightBasis
    method: str
    report: Wcc456Report | None = None


def _route(g: Graph, method: str, lengths: tuple[int, ...], check: bool) -> str:
    if method not in METHODS:
        raise InvalidArgument(f"method must be one of {', '.join(METHODS)}, got {method!r}")
    if method == "oracle":
        return "oracle"
    if method == "fast" and not check:
        return "fast"
    bad = forbidden_cycles(g, lengths)
    if not bad:
        return "fast"
    k = min(bad)
    if method == "auto" and g.n <= ORACLE_AUTO_LIMIT:
        return "oracle"
    raise PreconditionViolation(
        f"graph contains a cycle of length {k}; the fast route needs a graph "
        f"without cycles of length {', '.join(map(str, lengths))}",
        cycle_length=k,
    )


def compute_wcw(
    g: Graph, method: str = "auto", cap: int = DEFAULT_CAP, check: bool = True
) -> WcwResult:
    route = _route(g, method, FORBIDDEN, check)
    if route == "fast":
        report = wcw_c456(g, check=False)
        return WcwResult(report.basis, "fast", report)
    return WcwResult(wcw_bruteforce(g, cap), "oracle")


def well_covered(
    g: Graph, method: str = "auto", cap: int = DEFAULT_CAP, check: bool = True
) -> tuple[bool, str]:
    route = _route(g, method, FORBIDDEN, check)
    if route == "fast":
        return is_well_covered_c456(g, check=False), "fast"
    return is_well_covered_bruteforce(g, cap), "oracle"


def relating(
    g: Graph, x: int, y: int, method: str = "auto", cap: int = DEFAULT_CAP, check: bool = True
) -> tuple[recognition.RecognitionResult, str]:
    route = _route(g, method, recognition.RELATING_CLASS, check)
    if route == "fast":
        return recognition.is_relating_edge(g, x, y, check=False), "fast"
    return recognition.oracle_is_relating(g, x, y, cap), "oracle"


def generating(
    g: Graph,
    pair: recognition.BipartitePair,
    method: str = "auto",
    cap: int = DEFAULT_CAP,
    check: bool = True,
) -> tuple[recognition.RecognitionResult, str]:
    pair.validate(g)
    route = _route(g, method, recognition.GENERATING_CLASS, check)
    if route == "fast":
        return recognition.is_generating(g, pair, check=False), "fast"
    return recognition.oracle_is_generating(g, pair, cap=cap), "oracle"
