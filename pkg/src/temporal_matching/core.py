"""Link stream data model: timed edges, gamma-edges, and temporal matchings.

A link stream is a triple (T, V, E): an inclusive integer time interval, a
finite vertex set, and a set of timed edges (t, {u, v}) -- undirected,
loopless, at most one edge per vertex pair per instant.  For an integer
gamma >= 1 the gamma-edge between u and v starting at t bundles the gamma
consecutive timed edges (t', {u, v}) for t' in [t, t + gamma - 1].  A
temporal vertex is a pair (t, u); two gamma-edges are independent when no
temporal vertex is contained in both.  A gamma-matching is a set of pairwise
independent gamma-edges whose timed edges all belong to the stream.

Vertex identifiers are opaque strings.  The canonical order used everywhere
(enumeration, greedy scans, tie-breaking) is lexicographic on
(start time, smaller endpoint, larger endpoint), which refines the required
"earlier start first" ordering and makes every algorithm deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "TimedEdge",
    "TemporalVertex",
    "LinkStream",
    "GammaEdge",
    "GammaMatching",
    "ValidationReport",
    "validate_stream",
    "validate_matching",
    "independent",
    "enumerate_gamma_edges",
]

#: A timed edge, stored as (t, u, v) with u < v.
TimedEdge = tuple[int, str, str]


class TemporalVertex(NamedTuple):
    """Vertex ``vertex`` considered at instant ``time``."""

    time: int
    vertex: str


def _normalize(t: int, u: str, v: str) -> TimedEdge:
    return (t, u, v) if u <= v else (t, v, u)


@dataclass(frozen=True, init=False)
class LinkStream:
    """Immutable link stream (T, V, E).

    The constructor normalizes its input (endpoint order, de-duplication,
    derived vertex set / time interval) but deliberately does not reject
    invariant violations such as self-loops, out-of-interval times, or
    endpoints missing from an explicit vertex set: run
    :func:`validate_stream` to obtain a report.  All algorithms in this
    package assume a valid stream.

    Instances are safe to share between concurrent readers.
    """

    time_interval: tuple[int, int]
    vertices: frozenset[str]
    edges: frozenset[TimedEdge]

    def __init__(
        self,
        edges: Iterable[tuple[int, str, str]],
        vertices: Iterable[str] | None = None,
        time_interval: tuple[int, int] | None = None,
    ):
        normalized = frozenset(_normalize(int(t), u, v) for t, u, v in edges)
        if time_interval is None:
            if not normalized:
                raise ValueError("an empty edge set requires an explicit time_interval")
            times = [t for t, _, _ in normalized]
            interval = (min(times), max(times))
        else:
            interval = (int(time_interval[0]), int(time_interval[1]))
            if interval[0] > interval[1]:
                raise ValueError(f"empty time interval {interval}")
        if vertices is None:
            vertex_set = frozenset(w for _, u, v in normalized for w in (u, v))
        else:
            vertex_set = frozenset(vertices)
        object.__setattr__(self, "time_interval", interval)
        object.__setattr__(self, "vertices", vertex_set)
        object.__setattr__(self, "edges", normalized)

    @property
    def t_min(self) -> int:
        return self.time_interval[0]

    @property
    def t_max(self) -> int:
        return self.time_interval[1]

    @property
    def horizon(self) -> int:
        """Number of time instants |T|."""
        return self.t_max - self.t_min + 1

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def vertex_order(self) -> tuple[str, ...]:
        """Vertices in canonical (sorted) order."""
        return tuple(sorted(self.vertices))

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        """Dense integer index of each vertex, following canonical order."""
        return {u: i for i, u in enumerate(self.vertex_order)}

    @cached_property
    def _pair_times(self) -> dict[tuple[str, str], tuple[int, ...]]:
        by_pair: dict[tuple[str, str], list[int]] = {}
        for t, u, v in self.edges:
            by_pair.setdefault((u, v), []).append(t)
        return {pair: tuple(sorted(ts)) for pair, ts in by_pair.items()}

    def has_edge(self, t: int, u: str, v: str) -> bool:
        return _normalize(t, u, v) in self.edges

    def times_of_pair(self, u: str, v: str) -> tuple[int, ...]:
        """Sorted instants at which the pair {u, v} is linked."""
        key = (u, v) if u <= v else (v, u)
        return self._pair_times.get(key, ())

    def sorted_edges(self) -> list[TimedEdge]:
        return sorted(self.edges)

    def __repr__(self) -> str:  # keep huge streams printable
        return (
            f"LinkStream(T=[{self.t_min},{self.t_max}], "
            f"|V|={self.vertex_count}, |E|={self.edge_count})"
        )


@dataclass(frozen=True, order=True)
class GammaEdge:
    """Block of ``gamma`` consecutive timed edges between ``u`` and ``v``.

    Represents {(t', {u, v}) | t' in [start, start + gamma - 1]}.  The value
    may be constructed independently of any stream; :meth:`exists_in` tells
    whether all constituent timed edges are present.  Dataclass ordering is
    the canonical order.
    """

    start: int
    u: str
    v: str
    gamma: int

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError(f"gamma-edge endpoints must differ, got {self.u!r} twice")
        if self.gamma < 1:
            raise ValueError(f"gamma must be >= 1, got {self.gamma}")
        if self.u > self.v:
            u, v = self.u, self.v
            object.__setattr__(self, "u", v)
            object.__setattr__(self, "v", u)

    @property
    def end(self) -> int:
        """Last instant covered, start + gamma - 1."""
        return self.start + self.gamma - 1

    @property
    def times(self) -> range:
        return range(self.start, self.start + self.gamma)

    def timed_edges(self) -> tuple[TimedEdge, ...]:
        return tuple((t, self.u, self.v) for t in self.times)

    def temporal_vertices(self) -> frozenset[TemporalVertex]:
        """The 2*gamma temporal vertices contained in this gamma-edge."""
        return frozenset(
            TemporalVertex(t, w) for t in self.times for w in (self.u, self.v)
        )

    def exists_in(self, stream: LinkStream) -> bool:
        return all(e in stream.edges for e in self.timed_edges())

    def incident_to(self, vertex: str) -> bool:
        return vertex == self.u or vertex == self.v

    def partner_of(self, vertex: str) -> str:
        if vertex == self.u:
            return self.v
        if vertex == self.v:
            return self.u
        raise ValueError(f"{vertex!r} is not an endpoint of {self}")

    def __str__(self) -> str:
        return f"Gamma_{self.gamma}({self.start},{self.u},{self.v})"


def independent(e1: GammaEdge, e2: GammaEdge) -> bool:
    """True iff the two gamma-edges share no temporal vertex.

    They share one exactly when their time windows overlap and they have a
    common endpoint.  Both arguments must carry the same gamma.
    """
    if e1.gamma != e2.gamma:
        raise ValueError(f"gamma mismatch: {e1.gamma} vs {e2.gamma}")
    windows_overlap = max(e1.start, e2.start) <= min(e1.end, e2.end)
    share_endpoint = e1.u in (e2.u, e2.v) or e1.v in (e2.u, e2.v)
    return not (windows_overlap and share_endpoint)


@dataclass(frozen=True, init=False)
class GammaMatching:
    """A set of gamma-edges, all with the same gamma.

    Construction enforces only the uniform-gamma requirement; use
    :func:`validate_matching` to check pairwise independence and membership
    in a stream.  Iteration is in canonical order.
    """

    members: frozenset[GammaEdge]

    def __init__(self, members: Iterable[GammaEdge] = ()):
        member_set = frozenset(members)
        gammas = {e.gamma for e in member_set}
        if len(gammas) > 1:
            raise ValueError(f"mixed gamma values in matching: {sorted(gammas)}")
        object.__setattr__(self, "members", member_set)

    @property
    def gamma(self) -> int | None:
        """The common gamma, or None for the empty matching."""
        for e in self.members:
            return e.gamma
        return None

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[GammaEdge]:
        return iter(sorted(self.members))

    def __contains__(self, edge: GammaEdge) -> bool:
        return edge in self.members


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a validation pass: ok iff no violations were found."""

    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_stream(stream: LinkStream) -> ValidationReport:
    """Check the link stream invariants, reporting each offending edge.

    Violations are data, not failures: streams carrying bad edges are
    constructible so that this report can name them.
    """
    violations = []
    t_min, t_max = stream.time_interval
    for t, u, v in stream.sorted_edges():
        if not t_min <= t <= t_max:
            violations.append(
                f"time out of interval: edge ({t},{{{u},{v}}}) outside [{t_min},{t_max}]"
            )
        if u == v:
            violations.append(f"self-loop: edge ({t},{{{u},{v}}})")
        for w in (u, v):
            if w not in stream.vertices:
                violations.append(
                    f"unknown endpoint: edge ({t},{{{u},{v}}}) uses {w!r} not in vertex set"
                )
    return ValidationReport(tuple(violations))


def validate_matching(stream: LinkStream, matching: GammaMatching) -> ValidationReport:
    """Check that every member exists in the stream and no two members
    share a temporal vertex."""
    violations = []
    owner: dict[TemporalVertex, GammaEdge] = {}
    for edge in matching:
        missing = [e for e in edge.timed_edges() if e not in stream.edges]
        if missing:
            t, u, v = missing[0]
            violations.append(
                f"gamma-edge not in stream: {edge} misses timed edge ({t},{{{u},{v}}})"
            )
        for tv in sorted(edge.temporal_vertices()):
            if tv in owner:
                violations.append(
                    f"shared temporal vertex ({tv.time},{tv.vertex}) "
                    f"between {owner[tv]} and {edge}"
                )
            else:
                owner[tv] = edge
    return ValidationReport(tuple(violations))


def enumerate_gamma_edges(stream: LinkStream, gamma: int) -> list[GammaEdge]:
    """All gamma-edges existing in the stream, in canonical order.

    A gamma-edge Gamma_gamma(t, u, v) exists when the pair {u, v} is linked
    at every instant of [t, t + gamma - 1].  Runs of consecutive instants
    per pair are scanned once, so the cost is O(m log m) and the output
    size is at most m.
    """
    if gamma < 1:
        raise ValueError(f"gamma must be >= 1, got {gamma}")
    found: list[GammaEdge] = []
    for (u, v), times in stream._pair_times.items():
        run_start = prev = times[0]
        for t in times[1:]:
            if t != prev + 1:
                for s in range(run_start, prev - gamma + 2):
                    found.append(GammaEdge(s, u, v, gamma))
                run_start = t
            prev = t
        for s in range(run_start, prev - gamma + 2):
            found.append(GammaEdge(s, u, v, gamma))
    found.sort()
    return found
