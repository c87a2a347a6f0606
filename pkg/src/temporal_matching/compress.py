"""Data cleaning by time-compression.

Raw recordings often time-stamp events far more finely than the interaction
they witness, leaving no room for gamma-edges.  Delta-compression rescales
the time axis by an integer delta, merging all activity of a vertex pair
inside one length-delta bucket into a single timed edge.
"""

from __future__ import annotations

from .core import LinkStream

__all__ = ["delta_compress"]


def delta_compress(stream: LinkStream, delta: int) -> LinkStream:
    """Compress the time axis of a link stream by the factor ``delta``.

    The result keeps the vertex set unchanged, maps the interval
    [t_min, t_max] to [t_min // delta, t_max // delta], and contains the
    timed edge (t, {u, v}) exactly when some original instant t' with
    delta*t <= t' < delta*(t+1) carries {u, v}.  Bucket boundaries are
    anchored at absolute time 0 (floor division), independent of t_min.

    Requires 1 < delta < |T|.  The number of output edges is at most |E|
    but is NOT monotone in delta: a coarser delta can split activity over
    more buckets than a finer one.
    """
    delta = int(delta)
    if not 1 < delta < stream.horizon:
        raise ValueError(
            f"delta must satisfy 1 < delta < |T| = {stream.horizon}, got {delta}"
        )
    compressed = {(t // delta, u, v) for t, u, v in stream.edges}
    return LinkStream(
        compressed,
        vertices=stream.vertices,
        time_interval=(stream.t_min // delta, stream.t_max // delta),
    )
