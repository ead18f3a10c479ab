"""Compatibility and coherence analyses.

A graph is [l,m]-compatible when its excessive [l,m]-index attains the
universal lower bound max(chi', ceil(|E|/m)); it is [l,m]-coherent when the
index equals the best achievable with a single fixed matching size in
[l, m].  Both notions reduce to threshold functions of l and m, which these
report builders tabulate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import ceil

from .coloring import chromatic_index
from .errors import ParameterError
from .excessive import excessive_lm_index, excessive_m_index
from .graphs import SimpleGraph
from .matching import maximum_matching


@dataclass(frozen=True)
class CompatibilityReport:
    com: int
    f_table: dict[int, int] = field(default_factory=dict)
    edgeless: bool = False


@dataclass(frozen=True)
class CoherenceReport:
    l: int
    m: int
    coherent: bool
    lhs: int | float
    rhs: int | float
    characterization_holds: bool


def is_lm_compatible(g: SimpleGraph, l: int, m: int) -> bool:
    """Whether the [l,m]-index equals max(chi', ceil(|E|/m)); never true when infinite."""
    if l < 1 or l > m:
        raise ParameterError(f"invalid size window [{l}, {m}]")
    result = excessive_lm_index(g, l, m)
    if not result.finite:
        return False
    return result.value == max(chromatic_index(g), ceil(g.edge_count / m))


def compatibility_index(g: SimpleGraph) -> int:
    """Largest m for which the excessive [m]-index attains its lower bound.

    Single-size compatibility holds on an initial interval 1..com, so a scan
    up to the maximum matching size (beyond which indices are infinite)
    finds it.  Edgeless graphs get the conventional value 0.
    """
    if not g.edges:
        return 0
    best = 0
    for m in range(1, len(maximum_matching(g)) + 1):
        if is_lm_compatible(g, m, m):
            best = m
    return best


def compatibility_function(g: SimpleGraph, m: int) -> int:
    """Largest l <= m such that the graph is [l,m]-compatible.

    Always at least 1: with l = 1 the index is exactly the lower bound.
    """
    if m < 1:
        raise ParameterError("m must be at least 1")
    if not g.edges:
        raise ParameterError("graph has no edges")
    for l in range(m, 0, -1):
        if is_lm_compatible(g, l, m):
            return l
    raise AssertionError("unreachable: [1,m]-compatibility always holds")


def compatibility_report(g: SimpleGraph, max_m: int) -> CompatibilityReport:
    if max_m < 1:
        raise ParameterError("max_m must be at least 1")
    if not g.edges:
        return CompatibilityReport(com=0, f_table={}, edgeless=True)
    table = {m: compatibility_function(g, m) for m in range(1, max_m + 1)}
    return CompatibilityReport(com=compatibility_index(g), f_table=table)


def coherence_report(g: SimpleGraph, l: int, m: int) -> CoherenceReport:
    """Compare the [l,m]-index with the best fixed-size index over [l, m].

    The report also evaluates the incoherence test (the ratio |E|/chi' lies
    strictly between l and m, and the index at size ceil(|E|/chi') exceeds
    chi') and asserts that it agrees with the definition-level comparison.
    """
    if l < 1 or l > m:
        raise ParameterError(f"invalid size window [{l}, {m}]")
    lhs = excessive_lm_index(g, l, m).value
    rhs = min(excessive_m_index(g, i).value for i in range(l, m + 1))
    coherent = lhs == rhs
    if g.edges:
        chi = chromatic_index(g)
        edge_total = g.edge_count
        if l * chi < edge_total < m * chi:
            k = ceil(edge_total / chi)
            characterization = excessive_m_index(g, k).value > chi
        else:
            characterization = False
    else:
        characterization = False
    assert coherent == (not characterization), "incoherence test disagrees with definition"
    return CoherenceReport(
        l=l, m=m, coherent=coherent, lhs=lhs, rhs=rhs, characterization_holds=characterization
    )


def _json_value(v: int | float) -> int | str:
    return "infinity" if math.isinf(v) else int(v)


def compatibility_report_to_json(report: CompatibilityReport) -> dict:
    return {
        "com": report.com,
        "f_table": {str(m): f for m, f in sorted(report.f_table.items())},
        "edgeless": report.edgeless,
    }


def coherence_report_to_json(report: CoherenceReport) -> dict:
    return {
        "l": report.l,
        "m": report.m,
        "coherent": report.coherent,
        "lhs": _json_value(report.lhs),
        "rhs": _json_value(report.rhs),
        "characterization_holds": report.characterization_holds,
    }


def f_table_csv(report: CompatibilityReport) -> str:
    lines = ["m,f"]
    lines.extend(f"{m},{f}" for m, f in sorted(report.f_table.items()))
    return "\n".join(lines) + "\n"
