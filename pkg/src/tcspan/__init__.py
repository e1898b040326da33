"""tcspan: transitive-closure spanner workbench.

Library and CLI implementing exact oracles, LP-relaxation and landmark
approximation algorithms, structural spanner constructions, hard-instance
generators, and the 2-TC-spanner-based monotonicity tester.
"""

from .graph import (
    Digraph,
    ReachMatrix,
    SpannerResult,
    VerifyResult,
    all_pairs_distances,
    condense_scc,
    line_digraph,
    transitive_closure,
    transitive_closure_graph,
    transitive_reduction,
    verify_spanner,
)

__all__ = [
    "Digraph",
    "ReachMatrix",
    "SpannerResult",
    "VerifyResult",
    "all_pairs_distances",
    "condense_scc",
    "line_digraph",
    "transitive_closure",
    "transitive_closure_graph",
    "transitive_reduction",
    "verify_spanner",
]

__version__ = "0.1.0"
