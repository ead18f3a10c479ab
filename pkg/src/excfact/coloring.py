"""Proper edge colourings: exact chromatic index, k-colouring search, and
class-size equalization.

A colouring of a multigraph is represented by its colour classes: a tuple of
``k`` edge-pair sets.  Each class must be a matching, and a pair with
multiplicity ``t`` in the host must appear in exactly ``t`` distinct classes
(parallel instances always receive distinct colours), so instance identity
never needs to be tracked.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import ceil

from .budget import check_budget
from .errors import ParameterError, PreconditionError
from .graphs import Edge, Multigraph, SimpleGraph, underlying_simple
from .matching import maximum_matching


@dataclass(frozen=True)
class EdgeColoring:
    host: Multigraph
    classes: tuple[frozenset[Edge], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "classes", tuple(frozenset(c) for c in self.classes))
        counts: Counter[Edge] = Counter()
        support = self.host.support()
        for cls in self.classes:
            seen: set[int] = set()
            for u, v in cls:
                if (u, v) not in support:
                    raise PreconditionError(f"colour class uses non-edge ({u}, {v})")
                if u in seen or v in seen:
                    raise PreconditionError("a colour class must be a matching")
                seen.add(u)
                seen.add(v)
                counts[(u, v)] += 1
        if counts != Counter(self.host.multiplicities()):
            raise PreconditionError("class membership counts do not match edge multiplicities")

    @property
    def k(self) -> int:
        return len(self.classes)

    def class_sizes(self) -> list[int]:
        return [len(c) for c in self.classes]


def coloring_to_json(c: EdgeColoring) -> dict:
    return {"k": c.k, "classes": [[list(e) for e in sorted(cls)] for cls in c.classes]}


def find_k_edge_coloring(h: Multigraph, k: int) -> EdgeColoring | None:
    """First (lexicographically smallest) proper k-edge colouring, or None.

    Edge instances are coloured in sorted order, lowest feasible colour
    first.  Two symmetry breaks keep the search small without changing the
    first solution found: colours are introduced in increasing order, and
    parallel instances receive increasing colours.
    """
    if k < 0:
        return None
    instances = h.instances()
    if not instances:
        return EdgeColoring(h, tuple(frozenset() for _ in range(k)))
    if k == 0 or h.max_degree() > k:
        return None
    # every class is a matching of the underlying simple graph, so k of them
    # hold at most k * nu instances; this settles dense infeasible cases fast
    if k * len(maximum_matching(underlying_simple(h))) < len(instances):
        return None
    masks = [0] * h.vertex_count
    assign = [0] * len(instances)

    def backtrack(i: int, used: int) -> bool:
        check_budget()
        if i == len(instances):
            return True
        u, v = instances[i]
        lo = assign[i - 1] + 1 if i and instances[i - 1] == instances[i] else 1
        for c in range(lo, min(k, used + 1) + 1):
            bit = 1 << c
            if (masks[u] | masks[v]) & bit:
                continue
            masks[u] |= bit
            masks[v] |= bit
            assign[i] = c
            if backtrack(i + 1, max(used, c)):
                return True
            masks[u] ^= bit
            masks[v] ^= bit
        assign[i] = 0
        return False

    if not backtrack(0, 0):
        return None
    classes: list[set[Edge]] = [set() for _ in range(k)]
    for colour, e in zip(assign, instances):
        classes[colour - 1].add(e)
    return EdgeColoring(h, tuple(frozenset(cls) for cls in classes))


@lru_cache(maxsize=None)
def chromatic_index(g: SimpleGraph) -> int:
    """Exact chromatic index of a simple graph (0 for edgeless graphs).

    Only the maximum degree and one more colour ever need testing, so a
    failed search at max_degree settles the answer.
    """
    if not g.edges:
        return 0
    d = g.max_degree()
    if find_k_edge_coloring(Multigraph.from_simple(g), d) is not None:
        return d
    return d + 1


def _path_components(a_edges: set[Edge], b_edges: set[Edge]):
    """Path components of the union of two disjoint matchings.

    Yields ``(edges_in_a, edges_in_b)`` per path; cycle components are
    balanced and therefore irrelevant to rebalancing, so they are skipped.
    """
    incident: dict[int, list[tuple[int, Edge, bool]]] = {}
    for is_a, edges in ((True, a_edges), (False, b_edges)):
        for u, v in edges:
            incident.setdefault(u, []).append((v, (u, v), is_a))
            incident.setdefault(v, []).append((u, (u, v), is_a))
    visited: set[Edge] = set()
    for start in sorted(v for v, inc in incident.items() if len(inc) == 1):
        (next_vertex, first_edge, first_is_a), = incident[start]
        if first_edge in visited:
            continue
        comp_a: set[Edge] = set()
        comp_b: set[Edge] = set()
        edge, vertex, is_a = first_edge, next_vertex, first_is_a
        while True:
            visited.add(edge)
            (comp_a if is_a else comp_b).add(edge)
            step = [item for item in incident[vertex] if item[1] != edge]
            if not step:
                break
            vertex, edge, is_a = step[0]
        yield comp_a, comp_b


def equalize(c: EdgeColoring, trace: list[int] | None = None) -> EdgeColoring:
    """Rebalance a valid colouring until all class sizes differ by at most one.

    While some class exceeds another by two or more, the union of the two
    classes (paths and even cycles) contains a path with a surplus of
    larger-class edges; swapping the two colours along that path moves one
    edge across.  Choices are deterministic: the most unbalanced pair of
    classes with smallest colour indices, then the lexicographically
    smallest qualifying path.  If ``trace`` is given, the sum of squared
    class sizes is appended after every swap (it strictly decreases).
    """
    classes = [set(cls) for cls in c.classes]
    if len(classes) <= 1:
        return c
    while True:
        sizes = [len(cls) for cls in classes]
        hi, lo = max(sizes), min(sizes)
        if hi - lo <= 1:
            break
        a = sizes.index(hi)
        b = sizes.index(lo)
        common = classes[a] & classes[b]
        candidates = []
        for comp_a, comp_b in _path_components(classes[a] - common, classes[b] - common):
            if len(comp_a) == len(comp_b) + 1:
                candidates.append((tuple(sorted(comp_a | comp_b)), comp_a, comp_b))
        # imbalance >= 2 while cycles and balanced paths contribute zero
        # surplus, so a surplus path must exist
        assert candidates, "no rebalancing path found in an unbalanced colouring"
        _, comp_a, comp_b = min(candidates)
        classes[a] = (classes[a] - comp_a) | comp_b
        classes[b] = (classes[b] - comp_b) | comp_a
        if trace is not None:
            trace.append(sum(len(cls) ** 2 for cls in classes))
    result = EdgeColoring(c.host, tuple(frozenset(cls) for cls in classes))
    total = c.host.edge_count
    k = len(classes)
    assert all(total // k <= s <= ceil(total / k) for s in result.class_sizes())
    return result


def equalized_k_coloring(h: Multigraph, k: int) -> EdgeColoring | None:
    found = find_k_edge_coloring(h, k)
    return None if found is None else equalize(found)


def optimal_m_bounded_coloring(g: SimpleGraph, m: int) -> EdgeColoring:
    """Edge colouring with the fewest colours subject to class sizes <= m.

    ``max(chromatic_index(g), ceil(|E|/m))`` colours are always enough: the
    equalized colouring with that many colours has classes of size at most
    ``ceil(|E|/k) <= m``, and fewer colours are impossible.
    """
    if m < 1:
        raise ParameterError("m must be at least 1")
    if not g.edges:
        raise ParameterError("graph has no edges")
    k = max(chromatic_index(g), ceil(g.edge_count / m))
    colouring = equalized_k_coloring(Multigraph.from_simple(g), k)
    assert colouring is not None and max(colouring.class_sizes()) <= m
    return colouring
