"""Shared test helpers: independent oracles and random instance factories.

The oracles deliberately avoid the library's algorithmic paths: enumeration
scans every (start, pair) window directly, the maximum-matching oracle
searches all independent subsets using temporal-vertex sets, satisfiability
is decided by truth table, and compression follows the bucket definition
literally.
"""

from __future__ import annotations

import itertools
import random

from temporal_matching import CnfFormula, GammaEdge, GeneratorConfig, LinkStream, generate


# --- independent oracles -------------------------------------------------

def oracle_enumerate(stream: LinkStream, gamma: int) -> list[tuple[int, str, str]]:
    """Every (start, u, v) whose full window of edges is present, by direct scan."""
    pairs = sorted({(u, v) for _, u, v in stream.edges})
    out = []
    for start in range(stream.t_min, stream.t_max - gamma + 2):
        for u, v in pairs:
            if all(stream.has_edge(t, u, v) for t in range(start, start + gamma)):
                out.append((start, u, v))
    return sorted(out)


def _window_cells(start: int, u: str, v: str, gamma: int) -> frozenset:
    return frozenset((t, w) for t in range(start, start + gamma) for w in (u, v))


def oracle_maximum(stream: LinkStream, gamma: int) -> int:
    """Maximum gamma-matching size by exhaustive independent-subset search."""
    windows = oracle_enumerate(stream, gamma)
    cells = [_window_cells(s, u, v, gamma) for s, u, v in windows]
    best = 0

    def grow(i: int, used: frozenset, size: int) -> None:
        nonlocal best
        best = max(best, size)
        for j in range(i, len(cells)):
            if not (cells[j] & used):
                grow(j + 1, used | cells[j], size + 1)

    grow(0, frozenset(), 0)
    return best


def oracle_compress(stream: LinkStream, delta: int) -> set[tuple[int, str, str]]:
    """The bucket definition evaluated literally over all (t, pair)."""
    pairs = sorted({(u, v) for _, u, v in stream.edges})
    lo, hi = stream.t_min // delta, stream.t_max // delta
    out = set()
    for t in range(lo, hi + 1):
        for u, v in pairs:
            if any(
                stream.has_edge(tp, u, v)
                for tp in range(delta * t, delta * (t + 1))
            ):
                out.add((t, u, v))
    return out


def oracle_satisfiable(formula: CnfFormula) -> bool:
    """Truth-table satisfiability check."""
    n = formula.variable_count
    for bits in itertools.product([False, True], repeat=n):
        if all(
            any((lit > 0) == bits[abs(lit) - 1] for lit in clause)
            for clause in formula.clauses
        ):
            return True
    return False


def is_maximal(stream: LinkStream, gamma: int, members: list[GammaEdge]) -> bool:
    """No remaining gamma-edge of the stream is independent of all members."""
    taken = set()
    for e in members:
        taken |= e.temporal_vertices()
    for start, u, v in oracle_enumerate(stream, gamma):
        edge = GammaEdge(start, u, v, gamma)
        if edge not in members and not (edge.temporal_vertices() & taken):
            return False
    return True


# --- instance factories ---------------------------------------------------

VERTEX_POOL = "abcdefgh"


def random_stream(rng: random.Random, max_vertices: int = 8, max_horizon: int = 12) -> LinkStream:
    """Small random stream with per-pair persistence so longer gammas occur."""
    n = rng.randint(2, max_vertices)
    horizon = rng.randint(2, max_horizon)
    vertices = list(VERTEX_POOL[:n])
    p_on = rng.uniform(0.1, 0.5)
    p_stay = rng.uniform(0.5, 0.95)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            active = False
            for t in range(horizon):
                active = rng.random() < (p_stay if active else p_on)
                if active:
                    edges.append((t, vertices[i], vertices[j]))
    return LinkStream(edges, vertices=vertices, time_interval=(0, horizon - 1))


def particle_stream(seed: int, groups: int = 6, duration: int = 10) -> LinkStream:
    """Desk-scale instance from the particle generator."""
    config = GeneratorConfig(
        groups=groups,
        particles=3 * groups,
        radius=18.0,
        friction=0.7,
        wind=6.0,
        max_speed=10.0,
        width=100.0,
        height=100.0,
        duration=duration,
        seed=seed,
    )
    return generate(config)


def random_formula(rng: random.Random, max_vars: int = 4, max_clauses: int = 3) -> CnfFormula:
    n = rng.randint(1, max_vars)
    m = rng.randint(1, max_clauses)
    clauses = []
    for _ in range(m):
        size = rng.randint(1, min(3, n))
        chosen = rng.sample(range(1, n + 1), size)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in chosen))
    return CnfFormula(n, clauses)


def random_maximal_matching(stream: LinkStream, gamma: int, rng: random.Random):
    """A valid maximal matching built in random order (not the greedy one)."""
    candidates = [GammaEdge(s, u, v, gamma) for s, u, v in oracle_enumerate(stream, gamma)]
    rng.shuffle(candidates)
    picked = []
    used = set()
    for edge in candidates:
        cells = edge.temporal_vertices()
        if not (cells & used):
            picked.append(edge)
            used |= cells
    return picked
