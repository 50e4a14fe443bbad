"""Corridor subgraphs between two vertex appearances.

Each dynamic-programming hop searches for a short restless path inside a
window of the distance/time plane: appearances whose distance-to-target
lies strictly between the two corner appearances' distances and whose time
lies in the corners' time span. The subgraph keeps edges interior to that
window, departure edges leaving the lower corner at exactly its time, and
arrival edges entering the upper corner within its waiting window.

The source-side variant has no lower corner: it admits every reachable
appearance farther from the target than the upper corner.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .distances import INF, DistanceTable
from .temporal_graph import TemporalGraph, TimeEdge, VertexAppearance


@dataclass(frozen=True)
class AreaSpec:
    """Corner pair for one corridor; lower is None for the source side."""

    upper: VertexAppearance
    lower: VertexAppearance | None
    delta: int

    def __post_init__(self):
        if self.delta < 1:
            raise ValueError("delta must be at least 1")
        if self.lower is not None:
            if self.lower.v == self.upper.v:
                raise ValueError("corner vertices must differ")
            if self.lower.t > self.upper.t:
                raise ValueError("lower corner must not be later than upper corner")


def area_spec(dt: DistanceTable, lower: VertexAppearance | None,
              upper: VertexAppearance, delta: int) -> AreaSpec:
    """Build an AreaSpec, checking the corner distances against dt.

    The lower corner must be strictly farther from the target than the
    upper corner.
    """
    spec = AreaSpec(upper=upper, lower=lower, delta=delta)
    if lower is not None:
        d_lower = dt.entries.get(lower)
        d_upper = dt.entries.get(upper)
        if d_lower is None or d_upper is None:
            raise ValueError("corner appearances must be non-isolated")
        if not d_upper < d_lower:
            raise ValueError(
                f"lower corner distance {d_lower} must exceed upper corner distance {d_upper}")
    return spec


def a_set(dt: DistanceTable, spec: AreaSpec) -> frozenset[VertexAppearance]:
    """Appearances strictly inside the corridor's distance/time window.

    With a lower corner: distance in the open interval between the two
    corner distances, time within [lower.t, upper.t]. Without one:
    finite distance strictly above the upper corner's, time at most
    upper.t.
    """
    d_upper = dt.entries[spec.upper]
    t_hi = spec.upper.t
    if spec.lower is None:
        return frozenset(
            app for app, d in dt.entries.items()
            if d_upper < d < INF and app.t <= t_hi)
    d_lower = dt.entries[spec.lower]
    t_lo = spec.lower.t
    return frozenset(
        app for app, d in dt.entries.items()
        if d_upper < d < d_lower and t_lo <= app.t <= t_hi)


@dataclass(frozen=True)
class AreaGraph:
    """Materialized corridor: retained time-edges plus their endpoints.

    Vertex ids are the parent graph's, so subpaths found inside lift back
    without translation. ``time_edges`` keeps canonical order.
    """

    spec: AreaSpec
    time_edges: tuple[TimeEdge, ...]
    vertices: frozenset[int]
    parent: TemporalGraph = field(repr=False)

    def to_temporal_graph(self) -> TemporalGraph:
        return TemporalGraph.from_time_edges(
            self.parent.vertex_count, self.parent.lifetime,
            self.time_edges, self.parent.aliases)


def area_graph(g: TemporalGraph, dt: DistanceTable, spec: AreaSpec) -> AreaGraph:
    """Materialize the corridor's time-edge set for one spec.

    Kept edges are the union of three clauses: both endpoints in the
    window; edges leaving the lower corner vertex at exactly the lower
    time with the other endpoint in the window; edges entering the upper
    corner vertex no earlier than upper.t - delta whose other endpoint is
    in the window or is the lower corner itself. A direct lower-to-upper
    edge therefore qualifies when it sits at the lower time inside the
    arrival window.
    """
    inside = a_set(dt, spec)
    b, t_up = spec.upper
    lower = spec.lower
    kept: list[TimeEdge] = []
    for edge in g.time_edges:
        ua = VertexAppearance(edge.u, edge.t)
        va = VertexAppearance(edge.v, edge.t)
        if ua in inside and va in inside:
            kept.append(edge)
            continue
        if (lower is not None and edge.t == lower.t and edge.touches(lower.v)
                and VertexAppearance(edge.other(lower.v), edge.t) in inside):
            kept.append(edge)
            continue
        if edge.touches(b) and edge.t >= t_up - spec.delta:
            other = VertexAppearance(edge.other(b), edge.t)
            if other in inside or (lower is not None and other == lower):
                kept.append(edge)
    vertices = frozenset(v for e in kept for v in e.pair)
    return AreaGraph(spec=spec, time_edges=tuple(kept), vertices=vertices, parent=g)
