"""Excessive [l,m]-indices: the closed-form evaluation, the two-branch
algorithmic route, and covering verification.

An excessive [l,m]-factorization is a minimum-cardinality multiset of
matchings, each of size between l and m, whose union is the whole edge set.
The index (number of matchings, or infinity when no covering exists) is
computed from the chromatic index and the ratio |E|/chi', falling back to an
exact bounded-colouring search only in the regime the closed form does not
cover.  Every finite result carries a witness covering, and every witness is
verified before it is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from math import ceil

from .budget import check_budget
from .coloring import EdgeColoring, chromatic_index, equalize, find_k_edge_coloring, optimal_m_bounded_coloring
from .errors import ParameterError
from .graphs import (
    Covering,
    Edge,
    Matching,
    Multigraph,
    SimpleGraph,
    covering_induced_by_coloring,
    covering_to_json,
)
from .matching import extend_to_lm_matching, is_lm_coverable, _forced_value

INFINITY = math.inf

RULE_FORMULA_CEIL = "FORMULA_CEIL"
RULE_FORMULA_CHI = "FORMULA_CHI"
RULE_FORMULA_EXC_L = "FORMULA_EXC_L"
RULE_LEMMA_CF = "LEMMA_CF"
RULE_SEARCH = "SEARCH"
RULE_NOT_COVERABLE = "NOT_COVERABLE"
_RULES = frozenset(
    {RULE_FORMULA_CEIL, RULE_FORMULA_CHI, RULE_FORMULA_EXC_L, RULE_LEMMA_CF, RULE_SEARCH, RULE_NOT_COVERABLE}
)


@dataclass(frozen=True)
class IndexResult:
    """An index value plus the witness covering and the rule that produced it."""

    value: int | float
    witness: Covering | None
    rule: str

    def __post_init__(self) -> None:
        if self.rule not in _RULES:
            raise ValueError(f"unknown rule tag {self.rule!r}")
        infinite = math.isinf(self.value)
        if infinite != (self.witness is None) or infinite != (self.rule == RULE_NOT_COVERABLE):
            raise ValueError("infinite value, absent witness, and NOT_COVERABLE must coincide")
        if not infinite and len(self.witness) != self.value:
            raise ValueError("witness cardinality must equal the index value")

    @property
    def finite(self) -> bool:
        return not math.isinf(self.value)


def covering_violations(g: SimpleGraph, c: Covering, l: int, m: int) -> list[str]:
    """Diagnostics for why ``c`` fails to be an [l,m]-covering of ``g`` (empty if valid)."""
    if l > m:
        raise ParameterError(f"invalid size window [{l}, {m}]")
    problems: list[str] = []
    covered: set[Edge] = set()
    for idx, matching in enumerate(c.matchings):
        stray = matching.edges - g.edges
        if stray:
            problems.append(f"matching {idx} uses non-edges {sorted(stray)}")
        if not l <= len(matching) <= m:
            problems.append(f"matching {idx} has size {len(matching)} outside [{l}, {m}]")
        covered |= matching.edges & g.edges
    missing = g.edges - covered
    if missing:
        problems.append(f"edges not covered: {sorted(missing)}")
    return problems


def verify_covering(g: SimpleGraph, c: Covering, l: int, m: int) -> bool:
    return not covering_violations(g, c, l, m)


@lru_cache(maxsize=None)
def _equalized_chromatic_coloring(g: SimpleGraph) -> EdgeColoring:
    colouring = find_k_edge_coloring(Multigraph.from_simple(g), chromatic_index(g))
    assert colouring is not None
    return equalize(colouring)


def _ceil_witness(g: SimpleGraph, m: int) -> Covering:
    """A covering by ``ceil(|E|/m)`` matchings of size exactly m.

    Valid whenever ``|E| >= m * chi'``.  Take an equalized chromatic-index
    colouring (all classes have at least m edges then), duplicate the
    ``t = k*m - |E|`` lexicographically smallest edges of its first class as
    parallel instances, and give them a fresh colour: ``t > 0`` forces
    ``k > chi'`` so a colour is free.  Equalizing the padded colouring makes
    every class size exactly ``k*m / k = m``; projecting the classes back
    onto the graph yields the covering.
    """
    edge_total = g.edge_count
    chi = chromatic_index(g)
    assert edge_total >= m * chi and edge_total > 0
    k = ceil(edge_total / m)
    t = k * m - edge_total
    psi = _equalized_chromatic_coloring(g)
    if t == 0:
        host = Multigraph.from_simple(g)
        classes = psi.classes + tuple(frozenset() for _ in range(k - chi))
    else:
        assert k > chi, "padding is only ever needed when a fresh colour exists"
        donor = sorted(psi.classes[0])
        assert len(donor) >= m > t
        duplicated = donor[:t]
        counts = {e: 1 for e in g.edges}
        for e in duplicated:
            counts[e] = 2
        host = Multigraph(g.vertex_count, counts)
        classes = psi.classes + (frozenset(duplicated),) + tuple(
            frozenset() for _ in range(k - chi - 1)
        )
    balanced = equalize(EdgeColoring(host, classes))
    assert all(size == m for size in balanced.class_sizes())
    return covering_induced_by_coloring(g, host, balanced)


def _extendable_coloring_search(g: SimpleGraph, k: int, m: int) -> tuple[frozenset[Edge], ...] | None:
    """A k-edge colouring whose classes have size <= m and each extend to an
    [m]-matching, found by deterministic backtracking, or None."""
    edges = g.sorted_edges()
    total = len(edges)
    if k * m < total or k < chromatic_index(g):
        return None
    masks = [0] * g.vertex_count
    classes: list[set[Edge]] = [set() for _ in range(k)]
    sizes = [0] * k
    assign = [0] * total

    def backtrack(i: int, used: int, capacity: int) -> bool:
        check_budget()
        if i == total:
            return True
        if capacity < total - i:  # not enough free class slots left
            return False
        u, v = edges[i]
        for c in range(1, min(k, used + 1) + 1):
            bit = 1 << c
            if (masks[u] | masks[v]) & bit or sizes[c - 1] == m:
                continue
            cls = classes[c - 1]
            cls.add((u, v))
            if _forced_value(g, frozenset(cls)) >= m:
                masks[u] |= bit
                masks[v] |= bit
                sizes[c - 1] += 1
                assign[i] = c
                if backtrack(i + 1, max(used, c), capacity - 1):
                    return True
                masks[u] ^= bit
                masks[v] ^= bit
                sizes[c - 1] -= 1
            cls.remove((u, v))
        return False

    if not backtrack(0, 0, k * m):
        return None
    return tuple(frozenset(cls) for cls in classes)


def _search_m_index(g: SimpleGraph, m: int) -> tuple[int, Covering]:
    """Smallest k admitting a colouring whose classes extend to [m]-matchings.

    ``|E|`` colours always suffice for a coverable graph (single edges
    extend), so the increasing search terminates.
    """
    start = max(chromatic_index(g), ceil(g.edge_count / m))
    for k in range(start, g.edge_count + 1):
        classes = _extendable_coloring_search(g, k, m)
        if classes is not None:
            extended = []
            for cls in classes:
                matching = extend_to_lm_matching(g, Matching(cls), m, m)
                assert matching is not None
                extended.append(matching)
            return k, Covering(tuple(extended))
    raise AssertionError("no covering found for a coverable graph")


@lru_cache(maxsize=None)
def excessive_m_index(g: SimpleGraph, m: int) -> IndexResult:
    """Minimum number of size-m matchings covering the edge set, with witness."""
    if m < 1:
        raise ParameterError("m must be at least 1")
    if not g.edges:
        return IndexResult(0, Covering(()), RULE_LEMMA_CF)
    if not is_lm_coverable(g, m):
        return IndexResult(INFINITY, None, RULE_NOT_COVERABLE)
    if g.edge_count >= m * chromatic_index(g):
        result = IndexResult(ceil(g.edge_count / m), _ceil_witness(g, m), RULE_LEMMA_CF)
    else:
        value, witness = _search_m_index(g, m)
        result = IndexResult(value, witness, RULE_SEARCH)
    assert verify_covering(g, result.witness, m, m)
    return result


@lru_cache(maxsize=None)
def excessive_lm_index(g: SimpleGraph, l: int, m: int) -> IndexResult:
    """Excessive [l,m]-index via the closed form on the ratio |E|/chi'.

    The ratio is compared with l and m by cross-multiplication, never in
    floating point.  At the boundary ratios two branches overlap; both are
    evaluated and must agree.
    """
    if l < 1 or l > m:
        raise ParameterError(f"invalid size window [{l}, {m}]")
    if not g.edges:
        return IndexResult(0, Covering(()), RULE_FORMULA_CEIL)
    if not is_lm_coverable(g, l):
        return IndexResult(INFINITY, None, RULE_NOT_COVERABLE)
    edge_total = g.edge_count
    chi = chromatic_index(g)
    if edge_total >= m * chi:
        base = excessive_m_index(g, m)
        value = ceil(edge_total / m)
        assert base.value == value
        if edge_total == m * chi:  # overlap with the chromatic-index branch
            assert value == chi
        result = IndexResult(value, base.witness, RULE_FORMULA_CEIL)
    elif l * chi <= edge_total:
        psi = _equalized_chromatic_coloring(g)
        witness = covering_induced_by_coloring(g, Multigraph.from_simple(g), psi)
        if edge_total == l * chi:  # overlap with the fixed-size branch
            assert excessive_m_index(g, l).value == chi
        result = IndexResult(chi, witness, RULE_FORMULA_CHI)
    else:
        base = excessive_m_index(g, l)
        result = IndexResult(base.value, base.witness, RULE_FORMULA_EXC_L)
    assert verify_covering(g, result.witness, l, m)
    return result


def exc_algorithm(g: SimpleGraph, l: int, m: int) -> IndexResult:
    """Two-branch computation of the [l,m]-index.

    Compare the optimal numbers of colours for 1..l-bounded and 1..m-bounded
    colourings.  If the m-bounded one is strictly smaller, equalizing an
    optimal m-bounded colouring yields a covering whose sizes already land in
    [l, m]; otherwise the answer equals the excessive [l]-index.  This path
    deliberately shares no case analysis with :func:`excessive_lm_index`, so
    agreement between the two is meaningful cross-validation.
    """
    if l < 1 or l > m:
        raise ParameterError(f"invalid size window [{l}, {m}]")
    if not g.edges:
        return IndexResult(0, Covering(()), RULE_FORMULA_CEIL)
    edge_total = g.edge_count
    chi = chromatic_index(g)
    bounded_l = max(chi, ceil(edge_total / l))
    bounded_m = max(chi, ceil(edge_total / m))
    if bounded_m < bounded_l:
        balanced = equalize(optimal_m_bounded_coloring(g, m))
        witness = covering_induced_by_coloring(g, Multigraph.from_simple(g), balanced)
        rule = RULE_FORMULA_CEIL if ceil(edge_total / m) > chi else RULE_FORMULA_CHI
        result = IndexResult(bounded_m, witness, rule)
        assert verify_covering(g, witness, l, m)
        return result
    base = excessive_m_index(g, l)
    if not base.finite:
        return IndexResult(INFINITY, None, RULE_NOT_COVERABLE)
    result = IndexResult(base.value, base.witness, RULE_FORMULA_EXC_L)
    assert verify_covering(g, result.witness, l, m)
    return result


def lm_index_via_pairs(g: SimpleGraph, l: int, m: int) -> int | float:
    """The [l,m]-index as the minimum of the [i,i+1]-indices, l <= i < m."""
    if l >= m:
        raise ParameterError("this reduction requires l < m")
    return min(excessive_lm_index(g, i, i + 1).value for i in range(l, m))


def index_result_to_json(
    g: SimpleGraph, l: int, m: int, result: IndexResult, include_witness: bool = True
) -> dict:
    """JSON form: value / rule / witness / self-checks."""
    if result.finite:
        lower = max(chromatic_index(g), ceil(g.edge_count / m)) if g.edges else 0
        checks = {
            "lower_bound": result.value >= lower,
            "verified": verify_covering(g, result.witness, l, m),
        }
        value: int | str = int(result.value)
        witness = covering_to_json(result.witness) if include_witness else None
    else:
        checks = {"lower_bound": True, "verified": True}
        value = "infinity"
        witness = None
    return {"value": value, "rule": result.rule, "witness": witness, "checks": checks}
