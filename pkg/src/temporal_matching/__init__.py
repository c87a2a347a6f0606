"""Temporal matchings in link streams.

A link stream records which vertex pairs interact at which discrete
instants.  This package models such streams, enumerates gamma-edges (blocks
of gamma consecutive interactions of one pair), and computes gamma-matchings
-- sets of gamma-edges that pairwise share no (instant, vertex) --
with a greedy 2-approximation, a solution-size kernelization, and an exact
branch-and-bound solver.  It also ships delta-compression for cleaning raw
time stamps, a 3-CNF hardness-instance builder, a particle-based random
stream generator, text formats, and a measurement pipeline with a CLI.
"""

from .approx import bottom_vertices, greedy_matching
from .compress import delta_compress
from .core import (
    GammaEdge,
    GammaMatching,
    LinkStream,
    TemporalVertex,
    TimedEdge,
    ValidationReport,
    enumerate_gamma_edges,
    independent,
    validate_matching,
    validate_stream,
)
from .exact import (
    BudgetExceededError,
    ExactResult,
    exact_decision,
    exact_maximum,
)
from .generator import GeneratorConfig, ParticleState, generate
from .kernel import (
    KernelOutcome,
    KernelVerdict,
    kernel_gamma_edge_ratio,
    kernelize,
    prune_candidates,
)
from .pipeline import (
    ExperimentRecord,
    PipelineResult,
    approx_quality_ratio,
    run_pipeline,
    sweep,
    write_records_csv,
)
from .reduction import (
    CnfFormula,
    ReductionInstance,
    assignment_to_matching,
    parse_dimacs,
    reduce_formula,
)
from .stream_io import (
    StreamParseError,
    parse_matching,
    parse_stream,
    parse_stream_text,
    serialize_matching,
    serialize_stream,
    stream_to_text,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CnfFormula",
    "ExactResult",
    "ExperimentRecord",
    "GammaEdge",
    "GammaMatching",
    "GeneratorConfig",
    "KernelOutcome",
    "KernelVerdict",
    "LinkStream",
    "ParticleState",
    "PipelineResult",
    "ReductionInstance",
    "StreamParseError",
    "TemporalVertex",
    "TimedEdge",
    "ValidationReport",
    "approx_quality_ratio",
    "assignment_to_matching",
    "bottom_vertices",
    "delta_compress",
    "enumerate_gamma_edges",
    "exact_decision",
    "exact_maximum",
    "generate",
    "greedy_matching",
    "independent",
    "kernel_gamma_edge_ratio",
    "kernelize",
    "parse_dimacs",
    "parse_matching",
    "parse_stream",
    "parse_stream_text",
    "prune_candidates",
    "reduce_formula",
    "run_pipeline",
    "serialize_matching",
    "serialize_stream",
    "stream_to_text",
    "sweep",
    "validate_matching",
    "validate_stream",
    "write_records_csv",
]
