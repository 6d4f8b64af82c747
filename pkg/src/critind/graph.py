"""Immutable simple-graph model, text formats, and deterministic generators.

Vertices are referenced internally by index 0..n-1; every index maps to a
stable string label. All set-valued results are plain frozensets of indices;
use :func:`label_set` to render them as sorted label lists for reports.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "ParseError",
    "GeneratorSpec",
    "FIXTURE_NAMES",
    "parse_graph",
    "to_edge_list",
    "neighborhood",
    "difference",
    "is_independent",
    "induced_subgraph",
    "complement_set",
    "label_set",
    "generate",
    "gnp",
    "bipartite_gnp",
    "disjoint_union",
    "fixture",
]


class ParseError(ValueError):
    """Raised for malformed graph text; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Graph:
    """Simple undirected graph: no self-loops, no parallel edges.

    Immutable after construction; all operations in this package are pure
    functions over Graph values, so instances are safe to share.
    """

    __slots__ = ("labels", "adj", "adj_sets", "n", "m", "_index", "__weakref__")

    def __init__(self, labels: Sequence[str], edges: Iterable[tuple[int, int]]):
        labels = tuple(labels)
        index: dict[str, int] = {}
        for i, name in enumerate(labels):
            if not name or any(ch.isspace() for ch in name) or "#" in name:
                raise ValueError(f"invalid vertex label {name!r}")
            if name in index:
                raise ValueError(f"duplicate vertex label {name!r}")
            index[name] = i
        n = len(labels)
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {labels[u]!r}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.labels = labels
        self.n = n
        self.m = sum(len(s) for s in nbrs) // 2
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        self.adj_sets = tuple(frozenset(s) for s in nbrs)
        self._index = index

    @classmethod
    def from_label_edges(cls, labels: Sequence[str], edges: Iterable[tuple[str, str]]) -> "Graph":
        """Build a graph from labels plus label-pair edges."""
        labels = tuple(labels)
        index = {name: i for i, name in enumerate(labels)}
        return cls(labels, [(index[a], index[b]) for a, b in edges])

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown vertex label {label!r}") from None

    def indices(self, names: Iterable[str]) -> frozenset[int]:
        return frozenset(self.index_of(name) for name in names)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, ascending."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


def check_vertex_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Validate indices against g and return them as a frozenset."""
    fs = frozenset(s)
    for v in fs:
        if not (0 <= v < g.n):
            raise IndexError(f"vertex index {v} out of range for n={g.n}")
    return fs


def neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """N(S): union of neighbor sets of the members of S. May intersect S."""
    fs = check_vertex_set(g, s)
    out: set[int] = set()
    for v in fs:
        out.update(g.adj[v])
    return frozenset(out)


def difference(g: Graph, s: Iterable[int]) -> int:
    """d(S) = |S| - |N(S)|; can be negative."""
    fs = check_vertex_set(g, s)
    return len(fs) - len(neighborhood(g, fs))


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    """True iff no edge of g joins two members of S."""
    fs = check_vertex_set(g, s)
    return all(not (g.adj_sets[v] & fs) for v in fs)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by S, labels preserved.

    Returns (subgraph, back_map); back_map[i] is the g-index of subgraph
    vertex i. Vertices keep ascending-index order.
    """
    fs = check_vertex_set(g, s)
    back = tuple(sorted(fs))
    pos = {v: i for i, v in enumerate(back)}
    edges = [
        (pos[u], pos[v])
        for u in back
        for v in g.adj[u]
        if u < v and v in fs
    ]
    sub = Graph([g.labels[v] for v in back], edges)
    return sub, back


def complement_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """V(g) minus S."""
    fs = check_vertex_set(g, s)
    return frozenset(range(g.n)) - fs


def label_set(g: Graph, s: Iterable[int]) -> list[str]:
    """Canonical rendering of a vertex set: sorted list of labels."""
    fs = check_vertex_set(g, s)
    return sorted(g.labels[v] for v in fs)


# ---------------------------------------------------------------------------
# Parsing and serialization


def parse_graph(text: str, format: str = "edge_list") -> Graph:
    """Parse graph text in 'edge_list' or 'dimacs' format.

    Duplicate edges collapse silently; self-loops and count mismatches are
    hard errors that name the offending line.
    """
    if format == "edge_list":
        return _parse_edge_list(text)
    if format == "dimacs":
        return _parse_dimacs(text)
    raise ValueError(f"unknown graph format {format!r}")


def _parse_edge_list(text: str) -> Graph:
    labels: list[str] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    header: tuple[int, int] | None = None
    edge_lines = 0

    def intern(name: str, lineno: int) -> int:
        if name in index:
            return index[name]
        if header is not None and len(labels) >= header[0]:
            raise ParseError(
                f"unknown label {name!r}: header declares only {header[0]} vertices",
                lineno,
            )
        index[name] = len(labels)
        labels.append(name)
        return index[name]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 2:
                raise ParseError("expected header 'n m'", lineno)
            try:
                n, m = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ParseError("expected header 'n m'", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("vertex/edge counts must be non-negative", lineno)
            header = (n, m)
            continue
        if len(tokens) == 1:
            intern(tokens[0], lineno)
        elif len(tokens) == 2:
            u = intern(tokens[0], lineno)
            v = intern(tokens[1], lineno)
            if u == v:
                raise ParseError(f"self-loop at {tokens[0]!r}", lineno)
            edges.append((u, v))
            edge_lines += 1
        else:
            raise ParseError("expected 'u v' (edge) or 'u' (isolated vertex)", lineno)

    if header is None:
        raise ParseError("missing header 'n m'", 1)
    n, m = header
    if len(labels) != n:
        raise ParseError(f"header declares {n} vertices but {len(labels)} were named")
    if edge_lines != m:
        raise ParseError(f"header declares {m} edges but {edge_lines} edge lines found")
    return Graph(labels, edges)


def _parse_dimacs(text: str) -> Graph:
    n = None
    m_declared = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ParseError("expected 'p edge n m'", lineno)
            try:
                n, m_declared = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise ParseError("expected 'p edge n m'", lineno) from None
            if n < 0 or m_declared < 0:
                raise ParseError("counts must be non-negative", lineno)
        elif tokens[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", lineno)
            if len(tokens) != 3:
                raise ParseError("expected 'e i j'", lineno)
            try:
                i, j = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError("expected 'e i j'", lineno) from None
            if not (1 <= i <= n and 1 <= j <= n):
                raise ParseError(f"unknown vertex index in edge ({i}, {j})", lineno)
            if i == j:
                raise ParseError(f"self-loop at vertex {i}", lineno)
            edges.append((i - 1, j - 1))
        else:
            raise ParseError(f"unrecognized line type {tokens[0]!r}", lineno)
    if n is None:
        raise ParseError("missing problem line 'p edge n m'", 1)
    if len(edges) != m_declared:
        raise ParseError(f"problem line declares {m_declared} edges but {len(edges)} found")
    return Graph([str(i) for i in range(1, n + 1)], edges)


def to_edge_list(g: Graph) -> str:
    """Serialize to edge_list text: header, edges, then isolated vertices."""
    lines = [f"{g.n} {g.m}"]
    for u, v in g.edges():
        lines.append(f"{g.labels[u]} {g.labels[v]}")
    for v in range(g.n):
        if not g.adj[v]:
            lines.append(g.labels[v])
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Fixtures and generators

# Worked examples transcribed from the figures this package is tested against.
_FIXTURE_EDGES: dict[str, tuple[str, list[str]]] = {
    # 7 vertices, 7 edges; Konig-Egervary.
    "G1": ("abcdefg", ["ae", "be", "ce", "cf", "cg", "dg", "fg"]),
    # 10 vertices, 11 edges; not Konig-Egervary.
    "G2": ("abcdefghij", ["ae", "be", "ce", "cf", "dg", "fg", "eh", "gi", "hi", "hj", "ij"]),
    # 10 vertices, 16 edges; unique maximum critical independent set {a,b,c}.
    "GF": (
        "abcdefghij",
        ["ad", "ae", "bd", "be", "cd", "ce", "df", "ej", "fj", "fg", "fi", "gj", "gi", "gh", "ij", "ih"],
    ),
}

FIXTURE_NAMES = tuple(sorted(_FIXTURE_EDGES))


def fixture(name: str) -> Graph:
    """Named worked-example graph (G1, G2, GF)."""
    try:
        labels, edges = _FIXTURE_EDGES[name]
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; expected one of {FIXTURE_NAMES}") from None
    return Graph.from_label_edges(list(labels), [(e[0], e[1]) for e in edges])


def _check_probability(p: float) -> float:
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    return p


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); identical (n, p, seed) gives identical graphs."""
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    _check_probability(p)
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph([f"v{i}" for i in range(n)], edges)


def bipartite_gnp(n_left: int, n_right: int, p: float, seed: int) -> Graph:
    """Random bipartite graph: left labels u*, right labels w*."""
    if n_left < 0 or n_right < 0:
        raise ValueError("part sizes must be non-negative")
    _check_probability(p)
    rng = random.Random(seed)
    labels = [f"u{i}" for i in range(n_left)] + [f"w{j}" for j in range(n_right)]
    edges = [
        (i, n_left + j)
        for i in range(n_left)
        for j in range(n_right)
        if rng.random() < p
    ]
    return Graph(labels, edges)


def disjoint_union(parts: Sequence[int], p: float, seed: int) -> Graph:
    """Disjoint union of G(size, p) components drawn from one seeded stream."""
    if any(size < 0 for size in parts):
        raise ValueError("part sizes must be non-negative")
    _check_probability(p)
    rng = random.Random(seed)
    labels: list[str] = []
    edges: list[tuple[int, int]] = []
    offset = 0
    for size in parts:
        labels.extend(f"v{offset + i}" for i in range(size))
        edges.extend(
            (offset + i, offset + j)
            for i in range(size)
            for j in range(i + 1, size)
            if rng.random() < p
        )
        offset += size
    return Graph(labels, edges)


@dataclass(frozen=True)
class GeneratorSpec:
    """Deterministic recipe for a graph: same spec and seed, same graph."""

    kind: str  # gnp | bipartite_gnp | disjoint_union | fixture
    n: int = 0
    p: float = 0.0
    parts: tuple[int, ...] = field(default=())
    fixture: str = ""
    seed: int = 0


def generate(spec: GeneratorSpec) -> Graph:
    """Materialize a GeneratorSpec."""
    if spec.kind == "gnp":
        return gnp(spec.n, spec.p, spec.seed)
    if spec.kind == "bipartite_gnp":
        if len(spec.parts) != 2:
            raise ValueError("bipartite_gnp needs exactly two part sizes")
        return bipartite_gnp(spec.parts[0], spec.parts[1], spec.p, spec.seed)
    if spec.kind == "disjoint_union":
        return disjoint_union(spec.parts, spec.p, spec.seed)
    if spec.kind == "fixture":
        return fixture(spec.fixture)
    raise ValueError(f"unknown generator kind {spec.kind!r}")
