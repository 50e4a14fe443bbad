"""Independent brute-force re-implementations used as test oracles.

Everything here works straight from the definitions by naive enumeration
over raw (u, v, t) triples, sharing no code path with the library.
"""

from __future__ import annotations

INF = float("inf")


def edge_triples(g) -> list[tuple[int, int, int]]:
    return [(e.u, e.v, e.t) for e in g.time_edges]


def check_restless_sequence(triples, edge_set, s, z, delta) -> bool:
    """Walk the three defining conditions over a candidate step sequence."""
    if not triples:
        return False
    for u, v, t in triples:
        if (u, v, t) not in edge_set and (v, u, t) not in edge_set:
            return False
    cur = s
    seen = [s]
    for u, v, t in triples:
        if cur == u:
            cur = v
        elif cur == v:
            cur = u
        else:
            return False
        seen.append(cur)
    if cur != z or len(set(seen)) != len(seen):
        return False
    times = [t for _, _, t in triples]
    for a, b in zip(times, times[1:]):
        if not (a <= b <= a + delta):
            return False
    return True


def restless_path_lengths(triples, s, z, delta, max_len) -> set[int]:
    """Every exact length <= max_len achieved by some restless s-z path."""
    found: set[int] = set()

    def go(cur, last_t, visited, depth):
        if cur == z and depth >= 1:
            found.add(depth)
            return
        if depth >= max_len:
            return
        for u, v, t in triples:
            if cur == u:
                nxt = v
            elif cur == v:
                nxt = u
            else:
                continue
            if last_t is not None and not (last_t <= t <= last_t + delta):
                continue
            if nxt in visited:
                continue
            go(nxt, t, visited | {nxt}, depth + 1)

    go(s, None, frozenset({s}), 0)
    return found


def shortest_restless_path(triples, s, z, delta, max_len):
    lengths = restless_path_lengths(triples, s, z, delta, max_len)
    return min(lengths) if lengths else None


def enumerate_restless_paths(triples, s, z, delta, max_len):
    """Yield each restless s-z path with at most max_len steps."""
    out: list[tuple[tuple[int, int, int], ...]] = []

    def go(cur, last_t, visited, steps):
        if cur == z and steps:
            out.append(tuple(steps))
            return
        if len(steps) >= max_len:
            return
        for u, v, t in triples:
            if cur == u:
                nxt = v
            elif cur == v:
                nxt = u
            else:
                continue
            if last_t is not None and not (last_t <= t <= last_t + delta):
                continue
            if nxt in visited:
                continue
            steps.append((u, v, t))
            go(nxt, t, visited | {nxt}, steps)
            steps.pop()

    go(s, None, frozenset({s}), [])
    return out


def temporal_distance(triples, v, t_from, z, max_len):
    """Shortest plain temporal v-z path departing no earlier than t_from."""
    if v == z:
        return 0
    best = [INF]

    def go(cur, last_t, visited, depth):
        if depth >= best[0] or depth >= max_len:
            return
        for u, w, t in triples:
            if cur == u:
                nxt = w
            elif cur == w:
                nxt = u
            else:
                continue
            if t < (t_from if last_t is None else last_t):
                continue
            if nxt in visited:
                continue
            if nxt == z:
                best[0] = min(best[0], depth + 1)
                continue
            go(nxt, t, visited | {nxt}, depth + 1)

    go(v, None, frozenset({v}), 0)
    return best[0]


def restless_walk_min(triples, s, z, delta, cap):
    """Shortest restless s-z walk by breadth-first search over
    (vertex, last stamp) states; revisits allowed."""
    if s == z:
        return 0
    frontier = {(s, None)}
    seen = set(frontier)
    hops = 0
    while frontier and hops < cap:
        hops += 1
        nxt = set()
        for cur, last_t in frontier:
            for u, v, t in triples:
                if cur == u:
                    other = v
                elif cur == v:
                    other = u
                else:
                    continue
                if last_t is not None and not (last_t <= t <= last_t + delta):
                    continue
                if other == z:
                    return hops
                state = (other, t)
                if state not in seen:
                    seen.add(state)
                    nxt.add(state)
        frontier = nxt
    return INF


def static_min(triples, s, z):
    """Hop distance in the flattened graph by breadth-first search."""
    if s == z:
        return 0
    adj: dict[int, set[int]] = {}
    for u, v, _ in triples:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    seen = {s}
    frontier = [s]
    hops = 0
    while frontier:
        hops += 1
        nxt = []
        for v in frontier:
            for w in adj.get(v, ()):
                if w == z:
                    return hops
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return INF
