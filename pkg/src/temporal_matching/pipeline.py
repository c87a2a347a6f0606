"""Experiment harness: compression -> enumeration -> greedy -> kernel.

Each run of the pipeline yields one :class:`ExperimentRecord` with the
instance counts, the greedy matching size, the kernel sizes, and wall-clock
timings -- the quantities behind the desk-scale measurement tables.  Sweeps
evaluate a grid of (delta, gamma) cells and write schema-stable CSV whose
rows are deterministically ordered, so reruns differ only in the timing
columns.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Iterable, Sequence

from .approx import greedy_matching
from .compress import delta_compress
from .core import GammaMatching, LinkStream, enumerate_gamma_edges
from .kernel import KernelVerdict, kernelize, prune_candidates

__all__ = [
    "ExperimentRecord",
    "PipelineResult",
    "run_pipeline",
    "approx_quality_ratio",
    "sweep",
    "write_records_csv",
    "CSV_COLUMNS",
]


@dataclass(frozen=True)
class ExperimentRecord:
    dataset: str
    delta: int | None
    gamma: int
    vertex_count: int
    horizon: int
    edge_count: int
    gamma_edge_count: int
    greedy_size: int
    k: int
    mode: str  # "prune" or a kernel verdict value
    kernel_edge_count: int | None
    kernel_gamma_edge_count: int | None
    pool_size: int | None
    kernel_edge_ratio: float | None
    kernel_gamma_edge_ratio: float | None
    approx_ratio: float | None
    approx_seconds: float
    kernel_seconds: float
    total_seconds: float


CSV_COLUMNS = tuple(f.name for f in fields(ExperimentRecord))


@dataclass(frozen=True)
class PipelineResult:
    record: ExperimentRecord
    stream: LinkStream  # the stream the algorithms ran on (post-compression)
    matching: GammaMatching
    kernel: LinkStream | None


def approx_quality_ratio(record: ExperimentRecord) -> float | None:
    """Greedy size over kernel gamma-edge count: the lower bound against
    the naive upper bound.  1.0 certifies the greedy result optimal.
    Undefined (None) when the kernel has no gamma-edges."""
    if not record.kernel_gamma_edge_count:
        return None
    return record.greedy_size / record.kernel_gamma_edge_count


def run_pipeline(
    stream: LinkStream,
    gamma: int,
    delta: int | None = None,
    k: int | None = None,
    prune_only: bool = True,
    dataset: str = "",
) -> PipelineResult:
    """Run the full measurement pipeline on one instance.

    ``delta`` (optional) compresses first.  ``k`` defaults to the greedy
    matching size.  With ``prune_only`` (the default, used for ratio
    measurements) the pruned stream is built unconditionally; otherwise the
    kernelization driver may answer directly and leave the kernel columns
    empty.
    """
    started = time.perf_counter()
    working = delta_compress(stream, delta) if delta is not None else stream

    t0 = time.perf_counter()
    gamma_edge_count = len(enumerate_gamma_edges(working, gamma))
    matching = greedy_matching(working, gamma)
    approx_seconds = time.perf_counter() - t0

    if k is None:
        k = max(1, len(matching))

    kernel = None
    pool_size = None
    t0 = time.perf_counter()
    if prune_only:
        kernel, pool = prune_candidates(working, gamma, k, matching)
        pool_size = len(pool)
        mode = "prune"
    else:
        outcome = kernelize(working, gamma, k, matching)
        mode = outcome.verdict.value
        if outcome.verdict is KernelVerdict.KERNEL:
            kernel = outcome.kernel
            pool_size = len(outcome.pool)
    kernel_seconds = time.perf_counter() - t0

    if kernel is not None:
        kernel_edge_count = kernel.edge_count
        kernel_gamma_edge_count = len(enumerate_gamma_edges(kernel, gamma))
        kernel_edge_ratio = (
            kernel_edge_count / working.edge_count if working.edge_count else 1.0
        )
        kernel_gamma_edge_ratio = (
            kernel_gamma_edge_count / gamma_edge_count if gamma_edge_count else 1.0
        )
    else:
        kernel_edge_count = None
        kernel_gamma_edge_count = None
        kernel_edge_ratio = None
        kernel_gamma_edge_ratio = None

    record = ExperimentRecord(
        dataset=dataset,
        delta=delta,
        gamma=gamma,
        vertex_count=working.vertex_count,
        horizon=working.horizon,
        edge_count=working.edge_count,
        gamma_edge_count=gamma_edge_count,
        greedy_size=len(matching),
        k=k,
        mode=mode,
        kernel_edge_count=kernel_edge_count,
        kernel_gamma_edge_count=kernel_gamma_edge_count,
        pool_size=pool_size,
        kernel_edge_ratio=kernel_edge_ratio,
        kernel_gamma_edge_ratio=kernel_gamma_edge_ratio,
        approx_ratio=None,
        approx_seconds=approx_seconds,
        kernel_seconds=kernel_seconds,
        total_seconds=time.perf_counter() - started,
    )
    record = _with_approx_ratio(record)
    return PipelineResult(record=record, stream=working, matching=matching, kernel=kernel)


def _with_approx_ratio(record: ExperimentRecord) -> ExperimentRecord:
    from dataclasses import replace

    return replace(record, approx_ratio=approx_quality_ratio(record))


def sweep(
    stream: LinkStream,
    gammas: Sequence[int],
    deltas: Sequence[int | None] = (None,),
    k: int | None = None,
    prune_only: bool = True,
    dataset: str = "",
) -> list[ExperimentRecord]:
    """Pipeline over the (delta, gamma) grid, rows sorted by the grid."""
    records = []
    for delta in deltas:
        for gamma in gammas:
            result = run_pipeline(
                stream, gamma, delta=delta, k=k, prune_only=prune_only, dataset=dataset
            )
            records.append(result.record)
    records.sort(key=lambda r: (r.dataset, r.delta if r.delta is not None else -1, r.gamma))
    return records


def write_records_csv(records: Iterable[ExperimentRecord], target: str | Path) -> None:
    with open(target, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(CSV_COLUMNS)
        for record in records:
            writer.writerow(
                ["" if getattr(record, col) is None else getattr(record, col) for col in CSV_COLUMNS]
            )
