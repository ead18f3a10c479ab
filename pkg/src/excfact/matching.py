"""Maximum matchings and matching-extension tests on general graphs.

The maximum-matching routine is an augmenting-path search with blossom
contraction.  Everything is deterministic: vertices are scanned in
increasing order and augmenting paths are taken first-found over sorted
adjacency lists, so repeated runs return identical matchings.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache

from .errors import ParameterError, PreconditionError
from .graphs import Edge, Matching, SimpleGraph


def _try_augment(root: int, adj: list[list[int]], match: list[int]) -> bool:
    """Grow an alternating tree from ``root``; flip one augmenting path if found."""
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # odd cycle: contract the blossom up to the common base
                cur = _common_base(v, to, base, parent, match)
                marks = [False] * n
                _mark_blossom_path(v, cur, to, marks, base, parent, match)
                _mark_blossom_path(to, cur, v, marks, base, parent, match)
                for i in range(n):
                    if marks[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    _flip_path(to, parent, match)
                    return True
                used[match[to]] = True
                queue.append(match[to])
    return False


def _common_base(a: int, b: int, base, parent, match) -> int:
    seen = [False] * len(base)
    v = a
    while True:
        v = base[v]
        seen[v] = True
        if match[v] == -1:
            break
        v = base[parent[match[v]]]
    v = b
    while True:
        v = base[v]
        if seen[v]:
            return v
        v = base[parent[match[v]]]


def _mark_blossom_path(v: int, b: int, child: int, marks, base, parent, match) -> None:
    while base[v] != b:
        marks[base[v]] = True
        marks[base[match[v]]] = True
        parent[v] = child
        child = match[v]
        v = parent[match[v]]


def _flip_path(v: int, parent, match) -> None:
    while v != -1:
        pv = parent[v]
        nxt = match[pv]
        match[v] = pv
        match[pv] = v
        v = nxt


def _max_matching_pairs(n: int, adj: list[list[int]]) -> list[Edge]:
    match = [-1] * n
    for v in range(n):  # cheap deterministic greedy seed
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break
    for v in range(n):
        if match[v] == -1:
            _try_augment(v, adj, match)
    return [(v, match[v]) for v in range(n) if match[v] > v]


@lru_cache(maxsize=None)
def maximum_matching(g: SimpleGraph) -> Matching:
    """A maximum-cardinality matching of ``g`` (deterministic for a fixed input)."""
    return Matching(frozenset(_max_matching_pairs(g.vertex_count, g.adjacency())))


@lru_cache(maxsize=None)
def _forced_value(g: SimpleGraph, forced_edges: frozenset[Edge]) -> int:
    banned = {v for e in forced_edges for v in e}
    adj = [
        [] if v in banned else [u for u in neighbours if u not in banned]
        for v, neighbours in enumerate(g.adjacency())
    ]
    return len(forced_edges) + len(_max_matching_pairs(g.vertex_count, adj))


def _require_submatching(g: SimpleGraph, forced: Matching) -> None:
    if not forced.edges <= g.edges:
        raise PreconditionError("forced edges must all belong to the graph")


def max_matching_with_forced(g: SimpleGraph, forced: Matching) -> int:
    """Largest size of a matching of ``g`` containing every edge of ``forced``."""
    _require_submatching(g, forced)
    return _forced_value(g, forced.edges)


def extends_to_lm_matching(g: SimpleGraph, n: Matching, l: int, m: int) -> bool:
    """Whether ``n`` is contained in some matching of size between l and m."""
    if l > m:
        raise ParameterError(f"invalid size window [{l}, {m}]")
    _require_submatching(g, n)
    return len(n) <= m and _forced_value(g, n.edges) >= l


def extend_to_lm_matching(g: SimpleGraph, n: Matching, l: int, m: int) -> Matching | None:
    """A concrete matching of size ``max(l, |n|)`` containing ``n``, or None.

    The extension is a maximum matching of the graph with the endpoints of
    ``n`` removed; it is then truncated by repeatedly dropping the
    lexicographically largest non-forced edge, so results are reproducible.
    """
    if l > m:
        raise ParameterError(f"invalid size window [{l}, {m}]")
    _require_submatching(g, n)
    if len(n) > m:
        return None
    banned = n.vertices()
    adj = [
        [] if v in banned else [u for u in neighbours if u not in banned]
        for v, neighbours in enumerate(g.adjacency())
    ]
    extra = sorted(_max_matching_pairs(g.vertex_count, adj))
    target = max(l, len(n))
    if len(n) + len(extra) < target:
        return None
    return Matching(n.edges | frozenset(extra[: target - len(n)]))


@lru_cache(maxsize=None)
def _min_edge_extension(g: SimpleGraph) -> int:
    return min(_forced_value(g, frozenset({e})) for e in g.sorted_edges())


def is_lm_coverable(g: SimpleGraph, l: int) -> bool:
    """Whether every edge of ``g`` lies in a matching of size at least ``l``."""
    if l < 1:
        raise ParameterError("l must be at least 1")
    if not g.edges:
        return True
    return _min_edge_extension(g) >= l
