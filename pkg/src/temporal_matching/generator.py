"""Random link streams from groups of drifting 2D particles.

Particles live in a rectangular arena and move under inertia damped by
friction, a random per-step velocity kick (wind), a hard speed cap, and
elastic reflection at the walls.  Particles are split round-robin into
groups; at every instant two groups are linked when any two of their
particles lie strictly closer than the shared communication radius.  The
union of these per-instant contact graphs over the run is the generated
link stream.

Generation is deterministic per seed (PCG64).  Growing the radius, the
particle count, or the speed cap all densify the output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np
from scipy.spatial import cKDTree

from .core import LinkStream, TimedEdge

__all__ = ["GeneratorConfig", "ParticleState", "initial_state", "step", "edges_at", "generate"]

RNG_ALGORITHM = "numpy-pcg64"


@dataclass(frozen=True)
class GeneratorConfig:
    groups: int = 100
    particles: int = 650
    radius: float = 40.0
    friction: float = 0.75
    wind: float = 8.0
    max_speed: float = 18.0
    width: float = 1000.0
    height: float = 1000.0
    duration: int = 200
    seed: int = 0

    def __post_init__(self):
        if self.groups < 1 or self.particles < 1:
            raise ValueError("need at least one group and one particle")
        if self.radius <= 0 or self.width <= 0 or self.height <= 0:
            raise ValueError("radius and arena dimensions must be positive")
        if not 0.0 <= self.friction <= 1.0:
            raise ValueError(f"friction must lie in [0, 1], got {self.friction}")
        if self.wind < 0 or self.max_speed < 0:
            raise ValueError("wind and max_speed must be non-negative")
        if self.duration < 1:
            raise ValueError(f"duration must be >= 1, got {self.duration}")

    def group_name(self, index: int) -> str:
        return f"P{index + 1}"

    def metadata(self) -> dict[str, Any]:
        """Reproducibility record for a JSON sidecar."""
        return {
            "groups": self.groups,
            "particles": self.particles,
            "radius": self.radius,
            "friction": self.friction,
            "wind": self.wind,
            "max_speed": self.max_speed,
            "width": self.width,
            "height": self.height,
            "duration": self.duration,
            "seed": self.seed,
            "rng": RNG_ALGORITHM,
        }


@dataclass
class ParticleState:
    positions: np.ndarray  # (particles, 2)
    velocities: np.ndarray  # (particles, 2)
    groups: np.ndarray  # (particles,) group index per particle


def initial_state(config: GeneratorConfig, rng: np.random.Generator) -> ParticleState:
    """Uniform random positions, zero velocities, round-robin groups."""
    positions = rng.random((config.particles, 2)) * np.array(
        [config.width, config.height]
    )
    velocities = np.zeros((config.particles, 2))
    groups = np.arange(config.particles) % config.groups
    return ParticleState(positions, velocities, groups)


def _reflect(positions: np.ndarray, velocities: np.ndarray, size: float, axis: int) -> None:
    # Folding modulo 2*size handles arbitrarily large overshoot; landing in
    # the upper half of the period means an odd number of wall bounces.
    period = 2.0 * size
    folded = np.mod(positions[:, axis], period)
    bounced = folded > size
    folded[bounced] = period - folded[bounced]
    positions[:, axis] = folded
    velocities[bounced, axis] = -velocities[bounced, axis]


def step(
    state: ParticleState, config: GeneratorConfig, rng: np.random.Generator
) -> ParticleState:
    """Advance every particle by one time unit.

    New velocity = friction * old velocity + a random kick of magnitude at
    most ``wind`` (uniform over the disk), truncated to ``max_speed``; the
    position moves by the new velocity and reflects off the arena walls.
    """
    count = len(state.positions)
    kick_radius = config.wind * np.sqrt(rng.random(count))
    kick_angle = 2.0 * np.pi * rng.random(count)
    kick = kick_radius[:, None] * np.column_stack(
        (np.cos(kick_angle), np.sin(kick_angle))
    )
    velocities = config.friction * state.velocities + kick
    speeds = np.linalg.norm(velocities, axis=1)
    over = speeds > config.max_speed
    if over.any():
        velocities[over] *= (config.max_speed / speeds[over])[:, None]
    positions = state.positions + velocities
    _reflect(positions, velocities, config.width, axis=0)
    _reflect(positions, velocities, config.height, axis=1)
    return ParticleState(positions, velocities, state.groups)


def edges_at(state: ParticleState, config: GeneratorConfig, t: int) -> set[TimedEdge]:
    """Timed edges between groups with particles strictly within radius."""
    tree = cKDTree(state.positions)
    close = tree.query_pairs(config.radius, output_type="ndarray")
    contacts: set[TimedEdge] = set()
    radius_sq = config.radius * config.radius
    for a, b in close:
        ga, gb = int(state.groups[a]), int(state.groups[b])
        if ga == gb:
            continue
        diff = state.positions[a] - state.positions[b]
        if diff @ diff >= radius_sq:  # query_pairs is inclusive, contact is strict
            continue
        u, v = config.group_name(ga), config.group_name(gb)
        contacts.add((t, u, v) if u <= v else (t, v, u))
    return contacts


def generate(config: GeneratorConfig) -> LinkStream:
    """Run the simulation and collect the union of per-instant contacts.

    The stream's vertices are the group names (isolated groups included)
    and its interval is [0, duration - 1].
    """
    rng = np.random.default_rng(config.seed)
    state = initial_state(config, rng)
    edges: set[TimedEdge] = set()
    for t in range(config.duration):
        edges |= edges_at(state, config, t)
        if t + 1 < config.duration:
            state = step(state, config, rng)
    vertices = [config.group_name(i) for i in range(config.groups)]
    return LinkStream(edges, vertices=vertices, time_interval=(0, config.duration - 1))
