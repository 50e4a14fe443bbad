"""Seeded random temporal-graph instances."""

from __future__ import annotations

import math
import random

from .temporal_graph import TemporalGraph


def _poisson(rng: random.Random, mean: float) -> int:
    if mean <= 0:
        return 0
    limit = math.exp(-mean)
    k = 0
    p = 1.0
    while True:
        p *= rng.random()
        if p <= limit:
            return k
        k += 1


def _unrank_pair(index: int, n: int) -> tuple[int, int]:
    # index into the lexicographic list of pairs (u, v), u < v
    u = 0
    remaining = index
    row = n - 1
    while remaining >= row:
        remaining -= row
        u += 1
        row -= 1
    return (u, u + 1 + remaining)


def random_temporal_graph(vertices: int, lifetime: int, edges_per_layer: float,
                          seed: int) -> TemporalGraph:
    """A graph whose layer sizes are Poisson-distributed around
    edges_per_layer, edges drawn uniformly without replacement.

    Reproducible: the same arguments always produce the same graph.
    """
    if vertices < 2:
        raise ValueError("need at least 2 vertices")
    if lifetime < 1:
        raise ValueError("lifetime must be at least 1")
    if edges_per_layer < 0:
        raise ValueError("edges_per_layer must be non-negative")
    rng = random.Random(seed)
    max_edges = vertices * (vertices - 1) // 2
    layers = []
    for _ in range(lifetime):
        count = min(_poisson(rng, edges_per_layer), max_edges)
        picks = rng.sample(range(max_edges), count)
        layers.append([_unrank_pair(i, vertices) for i in sorted(picks)])
    return TemporalGraph(vertices, lifetime, layers)
