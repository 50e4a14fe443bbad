from __future__ import annotations

import importlib.resources
import random

import pytest

from rtp import TemporalGraph, parse_temporal_graph, random_temporal_graph

FIG1_TEXT = importlib.resources.files("rtp").joinpath("data/fig1.tel").read_text()


@pytest.fixture(scope="session")
def fig1() -> TemporalGraph:
    return parse_temporal_graph(FIG1_TEXT)


# fig1 vertex ids by alias
S, A, B, C, D, E, Z = range(7)


def random_instances(seed: int, count: int, *, max_vertices=8, max_lifetime=6,
                     deltas=(1, 2, 3), max_k=6):
    """Seeded stream of (graph, s, z, delta, k) query instances."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        nv = rng.randint(2, max_vertices)
        tau = rng.randint(1, max_lifetime)
        density = rng.choice([0.5, 1.0, 1.5, 2.5, 3.5])
        g = random_temporal_graph(nv, tau, density, rng.getrandbits(64))
        s = rng.randrange(nv)
        z = rng.randrange(nv)
        if s == z:
            continue
        out.append((g, s, z, rng.choice(deltas), rng.randint(1, max_k)))
    return out
