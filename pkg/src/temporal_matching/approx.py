"""Greedy maximal gamma-matching (a 2-approximation) and bottom vertices.

The greedy scan processes the stream's gamma-edges in canonical order and
accepts a candidate whenever none of its 2*gamma temporal vertices is
occupied by an already accepted member.  Only accepted members occupy
temporal vertices: letting rejected candidates occupy them too would allow
one rejection to shadow a later candidate that is independent of the whole
matching, losing both maximality and the factor-two guarantee.

The result is maximal, hence at least half the size of a maximum
gamma-matching, and every gamma-edge of the stream contains a bottom
temporal vertex of the result -- the hook the kernelization builds on.
Runtime is O(n*|T| + m) up to the gamma factor hidden in the scan.
"""

from __future__ import annotations

from .core import GammaEdge, GammaMatching, LinkStream, TemporalVertex, enumerate_gamma_edges

__all__ = ["greedy_matching", "bottom_vertices", "DENSE_CELL_LIMIT"]

#: Above this many (vertex, instant) cells the occupancy map falls back to a
#: sparse set instead of a flat byte table.
DENSE_CELL_LIMIT = 10**8


class _Occupancy:
    """Marks temporal vertices of accepted gamma-edges.

    Dense mode indexes a flat bytearray by vertex index and time offset;
    sparse mode keeps a set of (time, vertex) pairs.
    """

    def __init__(self, stream: LinkStream, cell_limit: int = DENSE_CELL_LIMIT):
        cells = stream.vertex_count * stream.horizon
        self._dense = 0 < cells <= cell_limit
        if self._dense:
            self._table = bytearray(cells)
            self._index = stream.vertex_index
            self._t_min = stream.t_min
            self._horizon = stream.horizon
        else:
            self._seen: set[tuple[int, str]] = set()

    def all_free(self, edge: GammaEdge) -> bool:
        if self._dense:
            table, horizon = self._table, self._horizon
            base_u = self._index[edge.u] * horizon - self._t_min
            base_v = self._index[edge.v] * horizon - self._t_min
            return not any(
                table[base_u + t] or table[base_v + t] for t in edge.times
            )
        seen = self._seen
        return not any(
            (t, w) in seen for t in edge.times for w in (edge.u, edge.v)
        )

    def mark(self, edge: GammaEdge) -> None:
        if self._dense:
            table, horizon = self._table, self._horizon
            base_u = self._index[edge.u] * horizon - self._t_min
            base_v = self._index[edge.v] * horizon - self._t_min
            for t in edge.times:
                table[base_u + t] = 1
                table[base_v + t] = 1
        else:
            self._seen.update((t, w) for t in edge.times for w in (edge.u, edge.v))


def greedy_matching(
    stream: LinkStream, gamma: int, cell_limit: int = DENSE_CELL_LIMIT
) -> GammaMatching:
    """Build a maximal gamma-matching by a deterministic greedy scan.

    Candidates are taken in canonical order; a candidate joins the matching
    iff all of its temporal vertices are still free, and then occupies them.
    The output is a valid gamma-matching of ``stream`` whose size is at
    least half the maximum.
    """
    if gamma < 1:
        raise ValueError(f"gamma must be >= 1, got {gamma}")
    occupancy = _Occupancy(stream, cell_limit)
    members = []
    for edge in enumerate_gamma_edges(stream, gamma):
        if occupancy.all_free(edge):
            members.append(edge)
            occupancy.mark(edge)
    return GammaMatching(members)


def bottom_vertices(matching: GammaMatching) -> frozenset[TemporalVertex]:
    """Last-instant temporal vertices of each member.

    For Gamma_gamma(t, u, v) these are (t + gamma - 1, u) and
    (t + gamma - 1, v); the set has exactly 2 * len(matching) elements.
    """
    return frozenset(
        TemporalVertex(edge.end, w) for edge in matching for w in (edge.u, edge.v)
    )
