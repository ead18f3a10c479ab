"""Independent brute-force ground truth for the main computations.

Nothing here shares search code with the main modules: matchings are
enumerated by explicit subset recursion, the minimum cover is an exact
branch-and-bound over that enumeration, the chromatic index is recomputed
as a vertex colouring of the line graph, and the maximum matching size is a
bitmask dynamic program over vertex subsets.  Agreement with the main path
is therefore evidence, not tautology.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import ceil

from . import excessive as _excessive
from .budget import check_budget
from .coloring import chromatic_index
from .errors import EnumerationCapError
from .excessive import INFINITY, IndexResult, RULE_NOT_COVERABLE, RULE_SEARCH, verify_covering
from .graphs import Covering, Edge, Matching, SimpleGraph, encode_graph6


def all_matchings(g: SimpleGraph, l: int, m: int, cap: int = 1_000_000) -> list[Matching]:
    """Every matching of ``g`` with size in [l, m], in canonical order.

    Aborts with :class:`EnumerationCapError` once more than ``cap`` matchings
    have been produced; the caller owns the combinatorial-blowup risk.
    """
    edges = g.sorted_edges()
    found: list[tuple[Edge, ...]] = []

    def extend(start: int, chosen: list[Edge], used: set[int]) -> None:
        if l <= len(chosen) <= m:
            found.append(tuple(chosen))
            if len(found) > cap:
                raise EnumerationCapError(f"more than {cap} matchings")
        if len(chosen) == m:
            return
        for idx in range(start, len(edges)):
            u, v = edges[idx]
            if u in used or v in used:
                continue
            chosen.append((u, v))
            used.update((u, v))
            extend(idx + 1, chosen, used)
            chosen.pop()
            used.difference_update((u, v))

    extend(0, [], set())
    return [Matching(frozenset(t)) for t in sorted(found)]


def matching_count_by_deletion(g: SimpleGraph) -> int:
    """Number of matchings (including the empty one) via edge deletion/contraction."""

    def count(edges: tuple[Edge, ...]) -> int:
        if not edges:
            return 1
        (u, v), rest = edges[0], edges[1:]
        without = count(rest)
        shrunk = tuple(e for e in rest if u not in e and v not in e)
        return without + count(shrunk)

    return count(tuple(g.sorted_edges()))


def max_matching_size_bruteforce(g: SimpleGraph) -> int:
    """Maximum matching size by dynamic programming over vertex subsets."""
    n = g.vertex_count
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    @lru_cache(maxsize=None)
    def best(active: int) -> int:
        live = active
        while live:
            v = (live & -live).bit_length() - 1
            if adj[v] & active:
                break
            live &= live - 1
        else:
            return 0
        rest = active & ~(1 << v)
        result = best(rest)  # leave v unmatched
        partners = adj[v] & active
        while partners:
            u = (partners & -partners).bit_length() - 1
            result = max(result, 1 + best(rest & ~(1 << u)))
            partners &= partners - 1
        return result

    return best((1 << n) - 1)


def min_cover_bruteforce(g: SimpleGraph, l: int, m: int) -> IndexResult:
    """Exact minimum [l,m]-cover by branch and bound over all [l,m]-matchings.

    Branches on the uncovered edge contained in the fewest candidate
    matchings; prunes with chosen + ceil(uncovered / m) against the best
    cover found so far.
    """
    edges = g.sorted_edges()
    if not edges:
        return IndexResult(0, Covering(()), RULE_SEARCH)
    index_of = {e: i for i, e in enumerate(edges)}
    candidates = all_matchings(g, l, m)
    masks = []
    for matching in candidates:
        mask = 0
        for e in matching.edges:
            mask |= 1 << index_of[e]
        masks.append(mask)
    containing: list[list[int]] = [[] for _ in edges]
    for idx, mask in enumerate(masks):
        for bit in range(len(edges)):
            if (mask >> bit) & 1:
                containing[bit].append(idx)
    if any(not lst for lst in containing):
        return IndexResult(INFINITY, None, RULE_NOT_COVERABLE)

    full = (1 << len(edges)) - 1

    # greedy cover gives the initial upper bound
    greedy: list[int] = []
    covered = 0
    while covered != full:
        pick = max(range(len(masks)), key=lambda i: (bin(masks[i] & ~covered).count("1"), -i))
        greedy.append(pick)
        covered |= masks[pick]
    best_choice = list(greedy)
    best_size = len(greedy)

    def branch(covered: int, chosen: list[int]) -> None:
        nonlocal best_choice, best_size
        check_budget()
        if covered == full:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_choice = list(chosen)
            return
        uncovered = full & ~covered
        if len(chosen) + ceil(bin(uncovered).count("1") / m) >= best_size:
            return
        target = min(
            (bit for bit in range(len(edges)) if (uncovered >> bit) & 1),
            key=lambda bit: (len(containing[bit]), bit),
        )
        for idx in containing[target]:
            chosen.append(idx)
            branch(covered | masks[idx], chosen)
            chosen.pop()

    branch(0, [])
    witness = Covering(tuple(candidates[i] for i in best_choice))
    assert verify_covering(g, witness, l, m)
    return IndexResult(best_size, witness, RULE_SEARCH)


def chromatic_index_bruteforce(g: SimpleGraph) -> int:
    """Exact chromatic index via vertex colouring of the line graph.

    Colours are tried from the maximum degree upward with no further
    shortcut, keeping this route independent of the main implementation.
    """
    edges = g.sorted_edges()
    if not edges:
        return 0
    neighbours: list[list[int]] = [[] for _ in edges]
    for i, j in combinations(range(len(edges)), 2):
        if set(edges[i]) & set(edges[j]):
            neighbours[i].append(j)
            neighbours[j].append(i)
    order = list(range(len(edges)))[::-1]
    colour = [0] * len(edges)

    def colourable(pos: int, k: int) -> bool:
        check_budget()
        if pos == len(order):
            return True
        item = order[pos]
        forbidden = {colour[other] for other in neighbours[item] if colour[other]}
        for c in range(1, k + 1):
            if c in forbidden:
                continue
            colour[item] = c
            if colourable(pos + 1, k):
                return True
            colour[item] = 0
            if c > max((colour[o] for o in order[:pos]), default=0):
                break  # higher fresh colours are symmetric
        return False

    k = g.max_degree()
    while True:
        colour[:] = [0] * len(edges)
        if colourable(0, k):
            return k
        k += 1


def enumerate_labeled_graphs(n: int):
    """All 2^C(n,2) labeled graphs on n vertices, in subset order."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        edges = frozenset(pairs[i] for i in range(len(pairs)) if (bits >> i) & 1)
        yield SimpleGraph(n, edges)


def random_graph(rng: random.Random, n: int) -> SimpleGraph:
    p = rng.random()
    edges = frozenset(pair for pair in combinations(range(n), 2) if rng.random() < p)
    return SimpleGraph(n, edges)


@dataclass(frozen=True)
class SweepConfig:
    max_vertices: int = 5
    max_m: int = 5
    seed: int = 0
    samples_per_size: int = 40  # for vertex counts above the exhaustive limit

    exhaustive_limit: int = 5


def _sweep_graphs(config: SweepConfig):
    rng = random.Random(config.seed)
    for n in range(0, min(config.max_vertices, config.exhaustive_limit) + 1):
        yield from enumerate_labeled_graphs(n)
    for n in range(config.exhaustive_limit + 1, config.max_vertices + 1):
        for _ in range(config.samples_per_size):
            yield random_graph(rng, n)


def _plain(v):
    return "infinity" if isinstance(v, float) and math.isinf(v) else v


def _record(g6: str, l: int, m: int, main, oracle, check: str) -> dict:
    return {"graph6": g6, "l": l, "m": m, "main": _plain(main), "oracle": _plain(oracle), "check": check}


def small_graph_sweep(config: SweepConfig) -> list[dict]:
    """Compare the closed form, the two-branch algorithm, the pairwise
    reduction, and the brute-force minimum cover on every graph in scope.

    Returns one record per disagreement (expected: none).
    """
    records: list[dict] = []
    for g in _sweep_graphs(config):
        g6 = encode_graph6(g)
        for l in range(1, config.max_m + 1):
            for m in range(l, config.max_m + 1):
                reference = min_cover_bruteforce(g, l, m)
                main = _excessive.excessive_lm_index(g, l, m)
                if main.value != reference.value:
                    records.append(_record(g6, l, m, main.value, reference.value, "formula"))
                elif main.finite and not verify_covering(g, main.witness, l, m):
                    records.append(_record(g6, l, m, "invalid witness", reference.value, "witness"))
                algo = _excessive.exc_algorithm(g, l, m)
                if algo.value != reference.value:
                    records.append(_record(g6, l, m, algo.value, reference.value, "exc"))
                elif algo.finite and not verify_covering(g, algo.witness, l, m):
                    records.append(_record(g6, l, m, "invalid witness", reference.value, "witness"))
                if l < m:
                    paired = _excessive.lm_index_via_pairs(g, l, m)
                    if paired != reference.value:
                        records.append(_record(g6, l, m, paired, reference.value, "pairs"))
    return records


def find_incoherence_example(
    max_vertices: int = 8, chi: int = 3, low: int = 2, high: int = 3, target: int = 4
) -> SimpleGraph | None:
    """Search for the smallest graph witnessing strict incoherence.

    Looks for a graph with chromatic index ``chi`` whose [low,high]-index is
    ``chi`` while both fixed-size indices at ``low`` and ``high`` equal
    ``target`` > ``chi``.  The edge count is pinned by the requirement
    low < |E|/chi < high, which keeps the enumeration manageable.
    """
    for n in range(4, max_vertices + 1):
        pairs = list(combinations(range(n), 2))
        for edge_total in range(low * chi + 1, high * chi):
            for combo in combinations(pairs, edge_total):
                g = SimpleGraph(n, frozenset(combo))
                if g.max_degree() > chi or min(g.degree(v) for v in range(n)) == 0:
                    continue
                if chromatic_index(g) != chi:
                    continue
                if _excessive.excessive_m_index(g, high).value != target:
                    continue
                if _excessive.excessive_m_index(g, low).value != target:
                    continue
                if _excessive.excessive_lm_index(g, low, high).value != chi:
                    continue
                return g
    return None
