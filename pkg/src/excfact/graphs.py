"""Graphs, multigraphs, matchings, and coverings.

Vertices are 0-indexed integers and an edge is stored as the pair
``(min(u, v), max(u, v))``, so edge sets have canonical, order-independent
semantics.  Every type here is immutable and hashable, which makes the whole
library safe to memoise and to share between threads.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Iterator, Mapping

from .errors import CoveringError, FormatError, PreconditionError, StructuralError

if TYPE_CHECKING:
    from .coloring import EdgeColoring

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise PreconditionError(f"loop edge at vertex {u}")
    if u < 0 or v < 0:
        raise PreconditionError(f"negative vertex in edge ({u}, {v})")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """Finite undirected graph without loops or parallel edges."""

    vertex_count: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise PreconditionError("vertex_count must be nonnegative")
        canonical = frozenset(normalize_edge(u, v) for u, v in self.edges)
        object.__setattr__(self, "edges", canonical)
        for _, v in canonical:
            if v >= self.vertex_count:
                raise PreconditionError(
                    f"edge endpoint {v} outside vertex range 0..{self.vertex_count - 1}"
                )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def max_degree(self) -> int:
        counts = Counter()
        for u, v in self.edges:
            counts[u] += 1
            counts[v] += 1
        return max(counts.values(), default=0)

    def adjacency(self) -> list[list[int]]:
        """Sorted adjacency lists (index = vertex)."""
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for entry in adj:
            entry.sort()
        return adj


@dataclass(frozen=True)
class Multigraph:
    """Loopless graph with positive integer edge multiplicities.

    ``edges`` is accepted as a mapping ``pair -> multiplicity`` or an
    iterable of ``(pair, multiplicity)`` items and is stored canonically as
    a sorted tuple.
    """

    vertex_count: int
    edges: tuple[tuple[Edge, int], ...] = ()

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise PreconditionError("vertex_count must be nonnegative")
        items: Iterable[tuple[Edge, int]]
        if isinstance(self.edges, Mapping):
            items = self.edges.items()
        else:
            items = self.edges
        counts: Counter[Edge] = Counter()
        for (u, v), mult in items:
            if not isinstance(mult, int) or mult < 1:
                raise PreconditionError(f"multiplicity of ({u}, {v}) must be a positive integer")
            counts[normalize_edge(u, v)] += mult
        for _, v in counts:
            if v >= self.vertex_count:
                raise PreconditionError(
                    f"edge endpoint {v} outside vertex range 0..{self.vertex_count - 1}"
                )
        object.__setattr__(self, "edges", tuple(sorted(counts.items())))

    @classmethod
    def from_simple(cls, g: SimpleGraph) -> "Multigraph":
        return cls(g.vertex_count, {e: 1 for e in g.edges})

    @classmethod
    def from_instances(cls, vertex_count: int, instances: Iterable[Edge]) -> "Multigraph":
        counts = Counter(normalize_edge(u, v) for u, v in instances)
        return cls(vertex_count, dict(counts))

    def multiplicities(self) -> dict[Edge, int]:
        return dict(self.edges)

    def multiplicity(self, e: Edge) -> int:
        return self.multiplicities().get(normalize_edge(*e), 0)

    def support(self) -> frozenset[Edge]:
        return frozenset(e for e, _ in self.edges)

    def instances(self) -> list[Edge]:
        """Every edge instance, parallel copies adjacent, in sorted order."""
        out: list[Edge] = []
        for e, mult in self.edges:
            out.extend([e] * mult)
        return out

    @property
    def edge_count(self) -> int:
        """Number of edges counted with multiplicity."""
        return sum(mult for _, mult in self.edges)

    def degree(self, v: int) -> int:
        return sum(mult for (a, b), mult in self.edges if v in (a, b))

    def max_degree(self) -> int:
        counts: Counter[int] = Counter()
        for (u, v), mult in self.edges:
            counts[u] += mult
            counts[v] += mult
        return max(counts.values(), default=0)


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges."""

    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        canonical = frozenset(normalize_edge(u, v) for u, v in self.edges)
        object.__setattr__(self, "edges", canonical)
        seen: set[int] = set()
        for u, v in canonical:
            if u in seen or v in seen:
                raise PreconditionError("edges of a matching must be vertex-disjoint")
            seen.add(u)
            seen.add(v)

    def __len__(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)


@dataclass(frozen=True, eq=False)
class Covering:
    """An ordered multiset of matchings.

    Repeats are allowed and meaningful, so equality compares the multiset of
    matchings rather than the stored order.
    """

    matchings: tuple[Matching, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "matchings", tuple(self.matchings))

    def __len__(self) -> int:
        return len(self.matchings)

    def __iter__(self) -> Iterator[Matching]:
        return iter(self.matchings)

    def canonical(self) -> tuple[tuple[Edge, ...], ...]:
        return tuple(sorted(tuple(m.sorted_edges()) for m in self.matchings))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Covering):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def edge_support(self) -> frozenset[Edge]:
        return frozenset(e for m in self.matchings for e in m.edges)

    def total_size(self) -> int:
        """Sum of matching sizes (edge instances counted with repetition)."""
        return sum(len(m) for m in self.matchings)


# ---------------------------------------------------------------------------
# text formats


def parse_edge_list(text: str) -> SimpleGraph:
    """Parse the ``u v`` per-line edge format.

    An optional ``n <vertex_count>`` header fixes the vertex count; blank
    lines and ``#`` comments are ignored; duplicate edge lines collapse.
    """
    header: int | None = None
    pairs: set[Edge] = set()
    max_seen = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if header is not None:
                raise FormatError(f"line {lineno}: duplicate vertex-count header")
            if len(tokens) != 2:
                raise FormatError(f"line {lineno}: header must be 'n <vertex_count>'")
            try:
                header = int(tokens[1])
            except ValueError:
                raise FormatError(f"line {lineno}: bad vertex count {tokens[1]!r}") from None
            if header < 0:
                raise FormatError(f"line {lineno}: negative vertex count")
            continue
        if len(tokens) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer token in {line!r}") from None
        if u < 0 or v < 0:
            raise FormatError(f"line {lineno}: negative vertex in {line!r}")
        if u == v:
            raise FormatError(f"line {lineno}: loop edge at vertex {u}")
        pairs.add(normalize_edge(u, v))
        max_seen = max(max_seen, u, v)
    n = header if header is not None else max_seen + 1
    if max_seen >= n:
        raise FormatError(f"edge endpoint {max_seen} exceeds declared vertex count {n}")
    return SimpleGraph(n, frozenset(pairs))


def format_edge_list(g: SimpleGraph) -> str:
    lines = [f"n {g.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


# graph6: printable characters 63..126 carry 6 bits each; the vertex count
# comes first, then the upper triangle of the adjacency matrix column by
# column, zero-padded to a multiple of 6 bits.

_G6_HEADER = ">>graph6<<"


def _g6_encode_count(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return chr(126) + "".join(chr(63 + ((n >> shift) & 63)) for shift in (12, 6, 0))
    raise FormatError(f"vertex count {n} too large for this graph6 encoder")


def encode_graph6(g: SimpleGraph) -> str:
    n = g.vertex_count
    out = [_g6_encode_count(n)]
    bits = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            bits = (bits << 1) | (1 if (i, j) in g.edges else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + bits))
                bits = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (bits << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> SimpleGraph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise FormatError("empty graph6 input")
    values = []
    for ch in s:
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise FormatError(f"invalid graph6 character {ch!r}")
        values.append(code)
    if values[0] != 63:
        n = values[0]
        payload = values[1:]
    else:
        if len(values) >= 2 and values[1] == 63:
            if len(values) < 8:
                raise FormatError("truncated graph6 vertex count")
            n = 0
            for code in values[2:8]:
                n = (n << 6) | code
            payload = values[8:]
        else:
            if len(values) < 4:
                raise FormatError("truncated graph6 vertex count")
            n = (values[1] << 12) | (values[2] << 6) | values[3]
            payload = values[4:]
    total_bits = n * (n - 1) // 2
    needed = (total_bits + 5) // 6
    if len(payload) != needed:
        raise FormatError(
            f"graph6 payload has {len(payload)} characters, expected {needed} for {n} vertices"
        )
    edges = set()
    index = 0
    for j in range(1, n):
        for i in range(j):
            group, offset = divmod(index, 6)
            if (payload[group] >> (5 - offset)) & 1:
                edges.add((i, j))
            index += 1
    if total_bits % 6:
        pad = payload[-1] & ((1 << (6 - total_bits % 6)) - 1)
        if pad:
            raise FormatError("nonzero padding bits in graph6 payload")
    return SimpleGraph(n, frozenset(edges))


# ---------------------------------------------------------------------------
# constructions between graphs, coverings, and colourings


def induced_multigraph(g: SimpleGraph, covering: Covering) -> Multigraph:
    """Multigraph whose multiplicities count how many matchings use each edge."""
    counts: Counter[Edge] = Counter()
    for idx, m in enumerate(covering.matchings):
        for e in m.edges:
            if e not in g.edges:
                raise CoveringError(f"matching {idx} contains non-edge {e}")
            counts[e] += 1
    return Multigraph(g.vertex_count, dict(counts))


def underlying_simple(h: Multigraph) -> SimpleGraph:
    return SimpleGraph(h.vertex_count, h.support())


def covering_induced_by_coloring(
    g: SimpleGraph, h: Multigraph, coloring: "EdgeColoring"
) -> Covering:
    """Project the colour classes of a colouring of ``h`` onto matchings of ``g``."""
    if underlying_simple(h) != g:
        raise StructuralError("multigraph does not have the given graph as underlying simple graph")
    if coloring.host != h:
        raise StructuralError("colouring does not belong to the given multigraph")
    return Covering(tuple(Matching(cls) for cls in coloring.classes))


def delete_edge_instances(h: Multigraph, count: int) -> Multigraph:
    """Remove ``count`` surplus edge instances, preserving the underlying graph.

    Instances are removed by repeatedly decrementing a maximum-multiplicity
    pair, ties broken by the lexicographically smallest pair.
    """
    surplus = h.edge_count - len(h.support())
    if count < 0 or count > surplus:
        raise PreconditionError(f"cannot delete {count} instances; removable surplus is {surplus}")
    counts = h.multiplicities()
    for _ in range(count):
        target = min(counts, key=lambda e: (-counts[e], e))
        counts[target] -= 1
        assert counts[target] >= 1
    return Multigraph(h.vertex_count, counts)


# ---------------------------------------------------------------------------
# JSON form of coverings: {"matchings": [[[u, v], ...], ...]}


def covering_to_json(c: Covering) -> dict:
    return {"matchings": [[list(e) for e in m.sorted_edges()] for m in c.matchings]}


def covering_from_json(obj: object) -> Covering:
    if not isinstance(obj, dict) or "matchings" not in obj:
        raise FormatError("covering JSON must be an object with a 'matchings' key")
    raw = obj["matchings"]
    if not isinstance(raw, list):
        raise FormatError("'matchings' must be a list")
    matchings = []
    for entry in raw:
        if not isinstance(entry, list):
            raise FormatError("each matching must be a list of edges")
        edges = set()
        for pair in entry:
            if not (isinstance(pair, list) and len(pair) == 2):
                raise FormatError(f"bad edge entry {pair!r}")
            u, v = pair
            if not (isinstance(u, int) and isinstance(v, int)):
                raise FormatError(f"bad edge entry {pair!r}")
            edges.add(normalize_edge(u, v))
        matchings.append(Matching(frozenset(edges)))
    return Covering(tuple(matchings))
