"""Exact maximum gamma-matching by branch and bound.

Finding a maximum gamma-matching is NP-hard once gamma > 1, so this solver
is meant for small instances: correctness oracles, kernel equivalence
checks, and satisfiability targets of hardness instances.  Candidates (the
stream's gamma-edges) are explored by take-or-skip decisions in canonical
order with the greedy matching as initial incumbent.  Three devices keep
the tree small while preserving exactness:

* admissible bounds: a subtree gains at most as many members as candidates
  remain, and at most floor(free cells / (2*gamma)) where the free cells
  are the (vertex, instant) cells still coverable by remaining candidates;
* component decomposition: candidates that share no cell with each other
  split into independent subproblems whose optima add up -- this is what
  makes the clause/variable structure of hardness instances tractable;
* an optional target size at which the search stops early (decision mode).

Search order, results, and node counts are deterministic.  The node budget
turns runaway searches into a loud BudgetExceededError, never a silently
truncated answer.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

from .approx import greedy_matching
from .core import GammaEdge, GammaMatching, LinkStream, enumerate_gamma_edges

__all__ = [
    "ExactResult",
    "BudgetExceededError",
    "DEFAULT_NODE_BUDGET",
    "exact_maximum",
    "exact_decision",
]

DEFAULT_NODE_BUDGET = 10**7


class BudgetExceededError(RuntimeError):
    """Raised when the search exhausts its node budget before finishing."""

    def __init__(self, node_budget: int, explored_nodes: int):
        super().__init__(f"exact search exceeded its budget of {node_budget} nodes")
        self.node_budget = node_budget
        self.explored_nodes = explored_nodes


@dataclass(frozen=True)
class ExactResult:
    """A provably maximum gamma-matching plus search diagnostics."""

    optimum: int
    witness: GammaMatching
    explored_nodes: int


def _footprints(stream: LinkStream, candidates: list[GammaEdge]) -> list[int]:
    """Bit mask per candidate over (vertex, instant) cells."""
    index = stream.vertex_index
    horizon = stream.horizon
    t_min = stream.t_min
    masks = []
    for edge in candidates:
        mask = 0
        for base in (index[edge.u] * horizon, index[edge.v] * horizon):
            for t in edge.times:
                mask |= 1 << (base + t - t_min)
        masks.append(mask)
    return masks


class _Search:
    """Take-or-skip DFS over candidate bit sets.

    ``solve`` returns (size, pick) where pick lists candidate indices, or
    (floor, None) when nothing beats the floor.  When the running size
    reaches ``target`` the current pick is returned immediately.
    """

    __slots__ = (
        "masks",
        "adj",
        "closed",
        "cells_per_member",
        "gamma",
        "horizon",
        "row_count",
        "row_mask",
        "node_budget",
        "nodes",
        "exact_memo",
        "bound_memo",
    )

    def __init__(
        self,
        masks: list[int],
        gamma: int,
        horizon: int,
        row_count: int,
        node_budget: int | None,
    ):
        self.masks = masks
        n = len(masks)
        adj = [0] * n
        for i in range(n):
            mask_i = masks[i]
            for j in range(i + 1, n):
                if mask_i & masks[j]:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        self.adj = adj
        self.closed = [a | (1 << i) for i, a in enumerate(adj)]
        self.cells_per_member = 2 * gamma
        self.gamma = gamma
        self.horizon = horizon
        self.row_count = row_count
        self.row_mask = (1 << horizon) - 1
        self.node_budget = node_budget
        self.nodes = 0
        # Transpositions: different take orders reach the same live set.
        self.exact_memo: dict[int, tuple[int, list[int]]] = {}
        self.bound_memo: dict[int, int] = {}

    def _components(self, live: int) -> list[int]:
        comps = []
        rest = live
        adj = self.adj
        while rest:
            comp = rest & -rest
            frontier = comp
            while frontier:
                reach = 0
                f = frontier
                while f:
                    low = f & -f
                    reach |= adj[low.bit_length() - 1]
                    f ^= low
                frontier = reach & rest & ~comp
                comp |= frontier
            comps.append(comp)
            rest ^= comp
        return comps

    def _union(self, group: int) -> int:
        union = 0
        masks = self.masks
        while group:
            low = group & -group
            union |= masks[low.bit_length() - 1]
            group ^= low
        return union

    def _row_bound(self, union: int) -> int:
        # Each member occupies gamma cells in each of two vertex rows, so
        # the per-row slack (free cells mod gamma) is unusable.  This is
        # what cuts off misaligned block placements early.
        slots = 0
        gamma = self.gamma
        row_mask = self.row_mask
        horizon = self.horizon
        while union:
            slots += (union & row_mask).bit_count() // gamma
            union >>= horizon
        return slots // 2

    def _bound(self, group: int) -> int:
        union = self._union(group)
        return min(
            group.bit_count(),
            union.bit_count() // self.cells_per_member,
            self._row_bound(union),
        )

    def solve(self, live: int, floor: int, target: float) -> tuple[int, list[int] | None]:
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise BudgetExceededError(self.node_budget, self.nodes)
        if target <= 0:
            return 0, []
        if live == 0:
            return (0, []) if floor < 0 else (floor, None)
        known = self.exact_memo.get(live)
        if known is not None:
            size, pick = known
            return (size, pick) if size > floor else (floor, None)
        known_bound = self.bound_memo.get(live)
        if known_bound is not None and known_bound <= floor:
            return floor, None

        size, pick, is_exact = self._explore(live, floor, target)
        if pick is None:
            # every prune path certifies max(live) <= floor
            if known_bound is None or floor < known_bound:
                self.bound_memo[live] = floor
        elif is_exact:
            self.exact_memo[live] = (size, pick)
        return size, pick

    def _explore(
        self, live: int, floor: int, target: float
    ) -> tuple[int, list[int] | None, bool]:
        """Uncached solve.  The third flag is False only for early target
        exits, whose possibly sub-maximum results always propagate straight
        to the root and so never pollute the memo."""
        comps = self._components(live)
        if len(comps) > 1:
            bounds = [self._bound(comp) for comp in comps]
            remaining = sum(bounds)
            total = 0
            combined: list[int] = []
            for comp, bound in zip(comps, bounds):
                remaining -= bound
                if total + bound + remaining <= floor:
                    return floor, None, True
                # the component must beat this for the sum to beat floor
                comp_floor = floor - total - remaining
                size, pick = self.solve(comp, comp_floor, target - total)
                if pick is None:
                    return floor, None, True
                total += size
                combined.extend(pick)
                if total >= target:
                    return total, combined, False
            if total <= floor:
                return floor, None, True
            return total, combined, True

        # Connected: branch on each candidate as the next take, ascending.
        indices = []
        rest = live
        while rest:
            low = rest & -rest
            indices.append(low.bit_length() - 1)
            rest ^= low
        count = len(indices)
        suffix_union = [0] * (count + 1)
        for p in range(count - 1, -1, -1):
            suffix_union[p] = suffix_union[p + 1] | self.masks[indices[p]]
        if self._row_bound(suffix_union[0]) <= floor:
            return floor, None, True

        best = floor
        best_pick: list[int] | None = None
        for p, j in enumerate(indices):
            gain = min(
                count - p, suffix_union[p].bit_count() // self.cells_per_member
            )
            if gain <= best:
                break  # later suffixes only shrink
            if self._row_bound(suffix_union[p]) <= best:
                break  # also monotone in p
            child = live & ~self.closed[j] & (-1 << (j + 1))
            size, pick = self.solve(child, best - 1, target - 1)
            if pick is not None and size + 1 > best:
                best = size + 1
                best_pick = pick + [j]
                if best >= target:
                    return best, best_pick, False
        return best, best_pick, True


def _solve_stream(
    stream: LinkStream,
    gamma: int,
    node_budget: int | None,
    target: float,
) -> tuple[int, list[GammaEdge] | None, int]:
    """Shared driver: greedy incumbent, then the branch-and-bound."""
    candidates = enumerate_gamma_edges(stream, gamma)
    incumbent = greedy_matching(stream, gamma)
    if len(incumbent) >= target:
        return len(incumbent), list(incumbent), 0
    search = _Search(
        _footprints(stream, candidates),
        gamma,
        stream.horizon,
        stream.vertex_count,
        node_budget,
    )
    live = (1 << len(candidates)) - 1
    floor = len(incumbent)
    if target is not math.inf:
        floor = int(target) - 1
    # Depth grows with the matching size (one frame per take, plus
    # interleaved component splits), not with the candidate count.
    depth_cap = 4 * min(
        len(candidates), (stream.vertex_count * stream.horizon) // (2 * gamma) + 1
    ) + 100
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, depth_cap))
    try:
        size, pick = search.solve(live, floor, target)
    finally:
        sys.setrecursionlimit(old_limit)
    if pick is None:
        if target is not math.inf:
            return size, None, search.nodes
        return len(incumbent), list(incumbent), search.nodes
    return size, [candidates[j] for j in pick], search.nodes


def exact_maximum(
    stream: LinkStream,
    gamma: int,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
) -> ExactResult:
    """Compute a maximum gamma-matching of the stream.

    Raises :class:`BudgetExceededError` if the search explores more than
    ``node_budget`` nodes; pass ``None`` for an unbounded search.
    """
    if gamma < 1:
        raise ValueError(f"gamma must be >= 1, got {gamma}")
    size, pick, nodes = _solve_stream(stream, gamma, node_budget, math.inf)
    assert pick is not None
    return ExactResult(optimum=size, witness=GammaMatching(pick), explored_nodes=nodes)


def exact_decision(
    stream: LinkStream,
    gamma: int,
    k: int,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
) -> bool:
    """Decide whether a gamma-matching of size >= k exists.

    Exits as soon as a size-k matching is assembled and prunes branches
    that provably stay below k.  k = 0 is always true; k beyond the
    temporal-vertex counting bound |V| * |T| // (2 * gamma) is false
    without search.
    """
    if gamma < 1:
        raise ValueError(f"gamma must be >= 1, got {gamma}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k == 0:
        return True
    if k > (stream.vertex_count * stream.horizon) // (2 * gamma):
        return False
    size, pick, _ = _solve_stream(stream, gamma, node_budget, k)
    return pick is not None and size >= k
