"""Stability of graph C*-algebras, decided from finite graph presentations."""
from .certificates import (
    ComparisonCertificate,
    Reach,
    Split,
    find_witness_set,
    find_witness_single,
    verify_certificate,
)
from .errors import (
    CaseIIUnsupported,
    EnumerationBoundError,
    GraphError,
    PreconditionError,
    UnknownVertexError,
    ValidationError,
)
from .graph import (
    OMEGA,
    HeadVertex,
    PresentedGraph,
    in_degree,
    is_left_infinite,
    is_singular,
    left_set_description,
    out_degree,
    reaches,
    sources,
    validate,
    vertices_on_loops,
)
from .hereditary import (
    ALL,
    VertexSet,
    breaking_vertices,
    enumerate_saturated_hereditary,
    hereditary_closure,
    is_hereditary,
    is_saturated,
    quotient_graph,
    saturate,
)
from .stability import (
    NOT_STABLE,
    STABLE,
    StabilityReport,
    condition_k,
    is_stable,
    is_stable_via_T,
    left_infinite_criterion,
)
from .stabilize import add_head, stabilize_graph, stabilize_minimal
from .traces import (
    INFINITE,
    GraphTrace,
    TraceVerdict,
    is_graph_trace,
    nonzero_bounded_trace,
    pushforward_trace,
    trace_norm,
    trace_space_dimension,
    zero_set,
)

__version__ = "0.1.0"
