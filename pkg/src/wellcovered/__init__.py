"""Weight-function spaces of well-covered graphs.

Exact computation of ``WCW(G)``, the space of vertex weightings under which
every maximal independent set of ``G`` has the same weight, together with
recognizers for relating edges and generating subgraphs. Polynomial routes
cover graphs without certain short cycles; exhaustive oracles cover any
small graph and are used to check the fast routes.
"""

from .errors import InvalidArgument, PreconditionViolation, ResourceLimit, WellCoveredError
from .graph import (
    Graph,
    closed_layer,
    connected_components,
    contains_cycle,
    cycle_lengths,
    distance_layer,
    dominates,
    in_class,
    induced_subgraph,
    is_simplicial,
    simplicial_vertices,
)
from .independence import (
    enumerate_maximal_independent_sets,
    extend_to_maximal,
    is_independent,
    is_well_covered_bruteforce,
)
from .isomorphism import is_isomorphic_reference
from .wcw_space import (
    WeightBasis,
    simplicial_subspace,
    span_contains,
    span_equal,
    wcdim_of,
    wcw_bruteforce,
    weight_of,
)
from .c5_structure import (
    ConstraintRow,
    boundary_vertices,
    necessary_constraints_c5,
    private_set,
    representative_mis,
)
from .recognition import (
    BipartitePair,
    RecognitionResult,
    exclusive_boundary,
    is_generating,
    is_relating_edge,
    oracle_is_generating,
    oracle_is_relating,
    validate_witness,
)
from .wcw_c456 import Wcc456Report, is_well_covered_c456, wcw_c456
from .estimator import WCWSpace

__version__ = "0.1.0"
