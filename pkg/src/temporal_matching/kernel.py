"""Solution-size kernelization for gamma-matching.

Deciding whether a stream admits a gamma-matching of size k can be reduced,
in polynomial time, to the same question on a pruned stream with at most
2*(k-1)*(2k-1)*gamma^2 timed edges.  The pruning exploits the greedy
matching: every gamma-edge of the stream contains one of its bottom
temporal vertices, so only gamma-edges anchored there can matter, and per
anchor (t', u) at most 2k-1 of them need to be kept -- any size-k matching
using a discarded candidate can swap it for a kept one, because its other
k-1 members block at most 2k-2 partner vertices.

The driver first runs the greedy scan: size >= k answers yes outright,
size < k/2 answers no (greedy is half-optimal), and otherwise the pruned
equivalent instance is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .approx import bottom_vertices, greedy_matching
from .core import (
    GammaEdge,
    GammaMatching,
    LinkStream,
    enumerate_gamma_edges,
)

__all__ = [
    "KernelVerdict",
    "KernelOutcome",
    "kernelize",
    "prune_candidates",
    "kernel_gamma_edge_ratio",
]


class KernelVerdict(Enum):
    SOLUTION_FOUND = "solution_found"
    NO_SOLUTION = "no_solution"
    KERNEL = "kernel"


@dataclass(frozen=True)
class KernelOutcome:
    """Result of :func:`kernelize`.

    ``matching`` always carries the greedy matching; with verdict
    SOLUTION_FOUND it is the size >= k witness.  ``kernel`` and ``pool``
    (the retained gamma-edge candidates) are set only for verdict KERNEL.
    """

    verdict: KernelVerdict
    gamma: int
    k: int
    matching: GammaMatching
    kernel: LinkStream | None = None
    pool: tuple[GammaEdge, ...] | None = None

    @property
    def greedy_size(self) -> int:
        return len(self.matching)


def prune_candidates(
    stream: LinkStream,
    gamma: int,
    k: int,
    matching: GammaMatching | None = None,
) -> tuple[LinkStream, tuple[GammaEdge, ...]]:
    """Build the pruned stream and its retained candidate pool.

    For every bottom temporal vertex (t, u) of the (given or freshly
    computed) greedy matching and every feasible start t' in
    [max(t_min, t - gamma + 1), t], the gamma-edges of the stream starting
    at t' and incident to u are collected; if more than 2k-1 exist, the one
    belonging to the matching (if any) plus those with the smallest partner
    vertices are kept.  The pruned stream keeps T and V and exactly the
    timed edges covered by some retained candidate.

    This runs unconditionally (no greedy-size short-circuit), which is the
    mode used for measuring pruning ratios with k set to the greedy size.
    """
    if gamma < 1:
        raise ValueError(f"gamma must be >= 1, got {gamma}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if matching is None:
        matching = greedy_matching(stream, gamma)

    partners: dict[tuple[int, str], list[str]] = {}
    for edge in enumerate_gamma_edges(stream, gamma):
        partners.setdefault((edge.start, edge.u), []).append(edge.v)
        partners.setdefault((edge.start, edge.v), []).append(edge.u)
    # Merged u-side and v-side inserts break the canonical partner order.
    for candidates in partners.values():
        candidates.sort()

    # At most one member of a matching can be anchored at a given
    # (start, endpoint): two such members would share a temporal vertex.
    member_partner: dict[tuple[int, str], str] = {}
    for edge in matching:
        member_partner[(edge.start, edge.u)] = edge.v
        member_partner[(edge.start, edge.v)] = edge.u

    keep_limit = 2 * k - 1
    pool: set[GammaEdge] = set()
    for t, u in sorted(bottom_vertices(matching)):
        for start in range(max(stream.t_min, t - gamma + 1), t + 1):
            anchored = partners.get((start, u))
            if not anchored:
                continue
            kept = anchored[:keep_limit]
            mate = member_partner.get((start, u))
            if mate is not None and mate not in kept:
                kept = kept[: keep_limit - 1] + [mate]
            pool.update(GammaEdge(start, u, w, gamma) for w in kept)

    pruned_edges = {e for candidate in pool for e in candidate.timed_edges()}
    kernel = LinkStream(
        pruned_edges, vertices=stream.vertices, time_interval=stream.time_interval
    )
    return kernel, tuple(sorted(pool))


def kernelize(
    stream: LinkStream,
    gamma: int,
    k: int,
    matching: GammaMatching | None = None,
) -> KernelOutcome:
    """Answer or shrink the instance (stream, k).

    Runs the greedy matching (unless one is supplied) and returns
    SOLUTION_FOUND when it already has size >= k, NO_SOLUTION when its size
    is below k/2 (no size-k matching can exist), and otherwise a KERNEL
    outcome whose pruned stream admits a gamma-matching of size k iff the
    input does, with at most 2*(k-1)*(2k-1)*gamma^2 timed edges.
    """
    if gamma < 1:
        raise ValueError(f"gamma must be >= 1, got {gamma}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if matching is None:
        matching = greedy_matching(stream, gamma)
    size = len(matching)
    if size >= k:
        return KernelOutcome(KernelVerdict.SOLUTION_FOUND, gamma, k, matching)
    if 2 * size < k:
        return KernelOutcome(KernelVerdict.NO_SOLUTION, gamma, k, matching)
    kernel, pool = prune_candidates(stream, gamma, k, matching)
    return KernelOutcome(
        KernelVerdict.KERNEL, gamma, k, matching, kernel=kernel, pool=pool
    )


def kernel_gamma_edge_ratio(
    input_stream: LinkStream, kernel_stream: LinkStream, gamma: int
) -> float:
    """Fraction of the input's gamma-edges surviving in the kernel.

    Defined as 1.0 when the input has no gamma-edges at all.
    """
    total = len(enumerate_gamma_edges(input_stream, gamma))
    if total == 0:
        return 1.0
    return len(enumerate_gamma_edges(kernel_stream, gamma)) / total
