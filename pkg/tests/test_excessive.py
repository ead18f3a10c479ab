"""The index computations: closed form, two-branch algorithm, verification."""

from __future__ import annotations

import math

import pytest

from excfact import (
    Covering,
    INFINITY,
    Matching,
    ParameterError,
    SimpleGraph,
    chromatic_index,
    exc_algorithm,
    excessive_lm_index,
    excessive_m_index,
    is_lm_coverable,
    lm_index_via_pairs,
    verify_covering,
)
from excfact.excessive import (
    RULE_FORMULA_CHI,
    RULE_FORMULA_EXC_L,
    RULE_LEMMA_CF,
    RULE_NOT_COVERABLE,
    RULE_SEARCH,
    IndexResult,
    index_result_to_json,
)
from excfact.families import cycle, empty, star
from excfact.oracle import enumerate_labeled_graphs, min_cover_bruteforce


def _small_graphs(max_vertices):
    for n in range(max_vertices + 1):
        yield from enumerate_labeled_graphs(n)


def test_verify_covering_window():
    g = cycle(4)
    partition = Covering(
        (Matching(frozenset({(0, 1), (2, 3)})), Matching(frozenset({(1, 2), (0, 3)})))
    )
    assert verify_covering(g, partition, 2, 2)
    assert not verify_covering(g, partition, 3, 3)
    assert not verify_covering(g, Covering(partition.matchings[:1]), 1, 2)  # misses edges
    with pytest.raises(ParameterError):
        verify_covering(g, partition, 2, 1)


def test_index_result_consistency_checks():
    with pytest.raises(ValueError):
        IndexResult(INFINITY, Covering(()), RULE_NOT_COVERABLE)
    with pytest.raises(ValueError):
        IndexResult(2, Covering(()), RULE_SEARCH)
    with pytest.raises(ValueError):
        IndexResult(1, Covering((Matching(frozenset({(0, 1)})),)), "BOGUS")


def test_m_index_petersen_values(petersen_graph):
    assert excessive_m_index(petersen_graph, 3).value == 5  # 15/3 >= chi'
    assert excessive_m_index(petersen_graph, 3).rule == RULE_LEMMA_CF
    assert min_cover_bruteforce(petersen_graph, 3, 3).value == 5
    four = excessive_m_index(petersen_graph, 4)
    assert four.value == 4 and four.rule == RULE_SEARCH
    five = excessive_m_index(petersen_graph, 5)
    assert five.value == 5 and five.rule == RULE_SEARCH
    assert min_cover_bruteforce(petersen_graph, 5, 5).value == 5


def test_m_index_star_not_coverable():
    result = excessive_m_index(star(3), 2)
    assert math.isinf(result.value)
    assert result.rule == RULE_NOT_COVERABLE and result.witness is None


def test_m_index_edgeless():
    result = excessive_m_index(empty(3), 2)
    assert result.value == 0 and len(result.witness) == 0


def test_m_index_witnesses_have_exact_size(petersen_graph):
    for m in (3, 4, 5):
        result = excessive_m_index(petersen_graph, m)
        assert verify_covering(petersen_graph, result.witness, m, m)
        assert len(result.witness) == result.value


def test_m_index_matches_oracle_small():
    for g in _small_graphs(4):
        for m in range(1, 5):
            assert excessive_m_index(g, m).value == min_cover_bruteforce(g, m, m).value


def test_lm_index_petersen(petersen_graph):
    result = excessive_lm_index(petersen_graph, 4, 5)
    assert result.value == 4
    # 15/4 falls below l = 4, so the fixed-size branch applies
    assert result.rule == RULE_FORMULA_EXC_L
    assert verify_covering(petersen_graph, result.witness, 4, 5)
    assert all(len(m) in (4, 5) for m in result.witness)
    middle = excessive_lm_index(petersen_graph, 3, 5)
    assert middle.value == 4 and middle.rule == RULE_FORMULA_CHI


def test_lm_index_equals_m_index_on_diagonal(petersen_graph):
    for g in list(_small_graphs(4)) + [petersen_graph]:
        for m in range(1, 5):
            assert excessive_lm_index(g, m, m).value == excessive_m_index(g, m).value


def test_lm_index_parameter_errors():
    with pytest.raises(ParameterError):
        excessive_lm_index(cycle(4), 0, 2)
    with pytest.raises(ParameterError):
        excessive_lm_index(cycle(4), 3, 2)


def test_lm_index_matches_oracle_small():
    for g in _small_graphs(4):
        for l in range(1, 5):
            for m in range(l, 5):
                main = excessive_lm_index(g, l, m)
                assert main.value == min_cover_bruteforce(g, l, m).value
                if main.finite:
                    assert verify_covering(g, main.witness, l, m)


def test_exc_algorithm_matches_formula_small(petersen_graph):
    for g in _small_graphs(4):
        for l in range(1, 5):
            for m in range(l, 5):
                left = exc_algorithm(g, l, m)
                right = excessive_lm_index(g, l, m)
                assert left.value == right.value
                if left.finite:
                    assert verify_covering(g, left.witness, l, m)
    result = exc_algorithm(petersen_graph, 4, 5)
    assert result.value == 4 and verify_covering(petersen_graph, result.witness, 4, 5)


def test_exc_algorithm_infinite_branch():
    # both bounded colour counts collapse to 3, then the size-2 index is infinite
    result = exc_algorithm(star(3), 2, 3)
    assert math.isinf(result.value) and result.rule == RULE_NOT_COVERABLE


def test_pairwise_reduction(petersen_graph):
    assert lm_index_via_pairs(petersen_graph, 3, 5) == 4
    single = SimpleGraph(2, frozenset({(0, 1)}))
    assert lm_index_via_pairs(single, 1, 2) == 1
    with pytest.raises(ParameterError):
        lm_index_via_pairs(single, 2, 2)
    for g in _small_graphs(4):
        for l in range(1, 4):
            for m in range(l + 1, 5):
                assert lm_index_via_pairs(g, l, m) == excessive_lm_index(g, l, m).value


def test_lower_bound_and_finiteness_properties():
    for g in _small_graphs(4):
        chi = chromatic_index(g)
        for l in range(1, 5):
            for m in range(l, 5):
                result = excessive_lm_index(g, l, m)
                assert result.finite == is_lm_coverable(g, l)
                if result.finite and g.edges:
                    assert result.value >= max(chi, -(-g.edge_count // m))


def test_window_monotonicity():
    for g in _small_graphs(4):
        values = {
            (l, m): excessive_lm_index(g, l, m).value
            for l in range(1, 5)
            for m in range(l, 5)
        }
        for (l, m), v in values.items():
            for (l2, m2), v2 in values.items():
                if l2 <= l and m <= m2:
                    assert v2 <= v  # wider window never increases the index


def test_upper_bound_versus_fixed_sizes():
    for g in _small_graphs(4):
        for l in range(1, 5):
            for m in range(l, 5):
                best_fixed = min(excessive_m_index(g, i).value for i in range(l, m + 1))
                assert excessive_lm_index(g, l, m).value <= best_fixed


def test_high_ratio_regime_collapses_to_fixed_size():
    # above |E|/chi', widening by one is free and the fixed-size index is monotone
    for g in _small_graphs(4):
        if not g.edges:
            continue
        chi = chromatic_index(g)
        for i in range(1, 6):
            if i * chi < g.edge_count:
                continue
            assert excessive_lm_index(g, i, i + 1).value == excessive_m_index(g, i).value
            assert excessive_m_index(g, i + 1).value >= excessive_m_index(g, i).value


def test_unbounded_above_window(petersen_graph):
    # m = |E| is an exact stand-in for an unbounded upper size (clamped to
    # keep the window nonempty when the graph has fewer than l edges)
    for g in list(_small_graphs(4)) + [petersen_graph]:
        if not g.edges:
            continue
        chi = chromatic_index(g)
        for l in range(1, 5):
            result = excessive_lm_index(g, l, max(l, g.edge_count))
            if g.edge_count >= l * chi:
                assert result.value == chi
            else:
                assert result.value == excessive_m_index(g, l).value


def test_boundary_ratios_agree():
    # |E| = m * chi' on C4 with m = 2: ceiling and chromatic branches coincide
    g = cycle(4)
    assert excessive_lm_index(g, 1, 2).value == 2 == chromatic_index(g)
    # |E| = l * chi' on C6 with l = 3: chromatic and fixed-size branches coincide
    h = cycle(6)
    result = excessive_lm_index(h, 3, 4)
    assert result.value == 2 == excessive_m_index(h, 3).value


def test_result_json_shape(petersen_graph):
    result = excessive_lm_index(petersen_graph, 4, 5)
    blob = index_result_to_json(petersen_graph, 4, 5, result)
    assert blob["value"] == 4 and blob["rule"] == RULE_FORMULA_EXC_L
    assert blob["checks"] == {"lower_bound": True, "verified": True}
    assert len(blob["witness"]["matchings"]) == 4
    hidden = index_result_to_json(petersen_graph, 4, 5, result, include_witness=False)
    assert hidden["witness"] is None and hidden["checks"]["verified"]
    infinite = excessive_lm_index(star(3), 2, 2)
    blob = index_result_to_json(star(3), 2, 2, infinite)
    assert blob["value"] == "infinity" and blob["witness"] is None
