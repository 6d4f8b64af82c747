"""Polynomial-time critical-independence machinery.

The critical difference d(G) = max |X| - |N(X)| is computed as n - mu(B(G))
over the bipartite double B(G). On top of the same maximum matching we build
a closure structure that characterizes every critical set at once:

    X is critical  <=>  X contains all unmatched originals, avoids every
    vertex with an unmatched mirrored neighbor, and is closed under
    "u in X forces the matched partner of each mirrored neighbor into X".

The family of critical sets is therefore a lattice of closed sets, and
membership questions (does some critical independent set contain J?) reduce
to a closure walk plus a disjointness test against N(J). That is what powers
the greedy maximum critical independent set and the diadem scan at scale.
Every fast answer here is cross-checked against the exhaustive oracle in the
test suite; nothing below is trusted on theory alone.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, check_vertex_set, induced_subgraph, neighborhood
from .matching import BipartitePartition, max_matching_bipartite, min_vertex_cover_bipartite

__all__ = [
    "BipartiteDouble",
    "ForcingConstraints",
    "Decomposition",
    "bipartite_double",
    "critical_difference",
    "find_critical_independent_set",
    "forced_difference",
    "extends_to_critical_independent",
    "max_critical_independent_set",
    "diadem",
    "decompose",
]


@dataclass(frozen=True)
class BipartiteDouble:
    """B(G): original vertices on the left, mirrored copies on the right.

    Vertex u of the host maps to double index u; its mirror to n + u. An edge
    uv of the host contributes u-(n+v) and v-(n+u), so the double has 2n
    vertices and 2m edges and no edges within a side.
    """

    host: Graph
    double: Graph
    parts: BipartitePartition


@dataclass(frozen=True)
class ForcingConstraints:
    """Vertices pinned inside / outside the set over which d is maximized."""

    force_in: frozenset[int] = frozenset()
    force_out: frozenset[int] = frozenset()


@dataclass(frozen=True)
class Decomposition:
    """The unique split X = I + N(I) for a maximum critical independent set I."""

    I: frozenset[int]
    X: frozenset[int]
    Xc: frozenset[int]


def bipartite_double(g: Graph) -> BipartiteDouble:
    n = g.n
    existing = set(g.labels)
    suffix = "'"
    while any(lab + suffix in existing for lab in g.labels):
        suffix += "'"
    labels = list(g.labels) + [lab + suffix for lab in g.labels]
    edges = [(u, n + v) for u in range(n) for v in g.adj[u]]
    double = Graph(labels, edges)
    parts = BipartitePartition(frozenset(range(n)), frozenset(range(n, 2 * n)))
    return BipartiteDouble(g, double, parts)


class _CriticalStructure:
    """Matching on B(G) plus the closure graph over original vertices.

    succ[u] lists the matched partners of u's mirrored neighbors; a critical
    set is exactly a succ-closed set that contains every unmatched original
    and no vertex whose mirror side has an unmatched neighbor.
    """

    def __init__(self, g: Graph):
        self.g = g
        n = g.n
        dbl = bipartite_double(g)
        m = max_matching_bipartite(dbl.double, dbl.parts)
        left_match = [-1] * n
        right_match = [-1] * n
        for a, b in m.edges:
            left_match[a] = b - n
            right_match[b - n] = a
        self.mu_double = m.size
        self.d = n - m.size

        succ: list[tuple[int, ...]] = []
        forbidden = [False] * n
        for u in range(n):
            outs: set[int] = set()
            bad = False
            for w in g.adj[u]:
                x = right_match[w]
                if x == -1:
                    bad = True
                    break
                if x != u:
                    outs.add(x)
            forbidden[u] = bad
            succ.append(tuple(sorted(outs)) if not bad else ())
        self.succ = succ

        # blocked[u]: u reaches a forbidden vertex, so no critical set has u.
        rev: list[list[int]] = [[] for _ in range(n)]
        for u in range(n):
            for x in succ[u]:
                rev[x].append(u)
        blocked = forbidden[:]
        stack = [u for u in range(n) if forbidden[u]]
        while stack:
            x = stack.pop()
            for u in rev[x]:
                if not blocked[u]:
                    blocked[u] = True
                    stack.append(u)
        self.blocked = blocked

        # Minimum critical set: closure of the unmatched originals.
        in_xmin = bytearray(n)
        stack = [u for u in range(n) if left_match[u] == -1]
        for u in stack:
            in_xmin[u] = 1
        while stack:
            u = stack.pop()
            assert not blocked[u], "minimum critical set hit a blocked vertex"
            for x in succ[u]:
                if not in_xmin[x]:
                    in_xmin[x] = 1
                    stack.append(x)
        self.in_xmin = in_xmin
        self.x_min = frozenset(u for u in range(n) if in_xmin[u])

        # Scratch stamps shared by the per-vertex scans.
        self._visit = [-1] * n
        self._nbr_stamp = [-1] * n
        self._stamp = 0

    def extends(self, members: frozenset[int]) -> bool:
        """Is there a critical independent set containing all of members?"""
        if not members:
            return True
        g = self.g
        nj: set[int] = set()
        for v in members:
            if self.blocked[v]:
                return False
            nj.update(g.adj[v])
        if nj & members:
            return False  # members are not independent
        if nj & self.x_min:
            return False
        seen: set[int] = set()
        stack = [v for v in members if not self.in_xmin[v]]
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            if u in nj:
                return False
            seen.add(u)
            for x in self.succ[u]:
                if not self.in_xmin[x] and x not in seen:
                    stack.append(x)
        return True

    def greedy_max_critical_independent_set(self) -> frozenset[int]:
        """Scan vertices in index order, keeping those that still extend."""
        g = self.g
        n = g.n
        in_x = bytearray(self.in_xmin)
        in_nj = bytearray(n)
        visit = self._visit
        nbr = self._nbr_stamp
        succ = self.succ
        blocked = self.blocked
        chosen: list[int] = []
        for v in range(n):
            if blocked[v] or in_nj[v]:
                continue
            self._stamp += 1
            stamp = self._stamp
            ok = True
            for w in g.adj[v]:
                nbr[w] = stamp
                if in_x[w]:
                    ok = False
                    break
            if not ok:
                continue
            new_nodes: list[int] = []
            if not in_x[v]:
                stack = [v]
                while stack:
                    u = stack.pop()
                    if in_x[u] or visit[u] == stamp:
                        continue
                    if in_nj[u] or nbr[u] == stamp:
                        ok = False
                        break
                    visit[u] = stamp
                    new_nodes.append(u)
                    stack.extend(succ[u])
                if not ok:
                    continue
            for u in new_nodes:
                in_x[u] = 1
            for w in g.adj[v]:
                in_nj[w] = 1
            chosen.append(v)
        return frozenset(chosen)

    def diadem(self) -> frozenset[int]:
        """Vertices lying in some critical independent set."""
        g = self.g
        n = g.n
        in_xmin = self.in_xmin
        visit = self._visit
        nbr = self._nbr_stamp
        succ = self.succ
        blocked = self.blocked
        out: list[int] = []
        for v in range(n):
            if blocked[v]:
                continue
            self._stamp += 1
            stamp = self._stamp
            ok = True
            for w in g.adj[v]:
                nbr[w] = stamp
                if in_xmin[w]:
                    ok = False
                    break
            if not ok:
                continue
            if not in_xmin[v]:
                stack = [v]
                while stack:
                    u = stack.pop()
                    if in_xmin[u] or visit[u] == stamp:
                        continue
                    if nbr[u] == stamp:
                        ok = False
                        break
                    visit[u] = stamp
                    stack.extend(succ[u])
            if ok:
                out.append(v)
        return frozenset(out)


_structures: "weakref.WeakKeyDictionary[Graph, _CriticalStructure]" = weakref.WeakKeyDictionary()


def _structure(g: Graph) -> _CriticalStructure:
    got = _structures.get(g)
    if got is None:
        got = _CriticalStructure(g)
        _structures[g] = got
    return got


def critical_difference(g: Graph) -> int:
    """d(G) = n - mu(B(G)); always >= 0 since d(empty set) = 0."""
    return _structure(g).d


def find_critical_independent_set(g: Graph) -> frozenset[int]:
    """Some independent S with d(S) = d(G), possibly empty.

    Extracts a critical set as the original-side complement of a Konig cover
    of B(G), then strips its neighborhood.
    """
    dbl = bipartite_double(g)
    m = max_matching_bipartite(dbl.double, dbl.parts)
    cover = min_vertex_cover_bipartite(dbl.double, dbl.parts, m)
    x = frozenset(u for u in range(g.n) if u not in cover)
    return x - neighborhood(g, x)


def forced_difference(g: Graph, constraints: ForcingConstraints) -> int:
    """max { d(X) : force_in subset of X, X disjoint from force_out }.

    Realized on the double: forced-in vertices saturate their mirrored
    neighborhood for free, forced-out vertices leave the selectable side but
    stay present as mirrors, and the rest is a maximum matching.
    """
    force_in = check_vertex_set(g, constraints.force_in)
    force_out = check_vertex_set(g, constraints.force_out)
    if force_in & force_out:
        raise ValueError("force_in and force_out overlap")
    n = g.n
    nf = neighborhood(g, force_in)
    dbl = bipartite_double(g)
    keep = [u for u in range(n) if u not in force_in and u not in force_out]
    keep += [n + w for w in range(n) if w not in nf]
    sub, back = induced_subgraph(dbl.double, keep)
    left = frozenset(i for i, orig in enumerate(back) if orig < n)
    parts = BipartitePartition(left, frozenset(range(sub.n)) - left)
    mu = max_matching_bipartite(sub, parts).size
    return n - len(force_out) - len(nf) - mu


def extends_to_critical_independent(g: Graph, members: Iterable[int]) -> bool:
    """True iff members is independent and some maximum critical independent
    set contains it; equivalently the forced difference pinning members in and
    N(members) out still reaches d(G)."""
    return _structure(g).extends(check_vertex_set(g, members))


def max_critical_independent_set(g: Graph) -> frozenset[int]:
    """Largest critical independent set, grown greedily in index order.

    Greedy is exact here: any partial set that extends is contained in a
    maximum critical independent set, whose members all pass their tests.
    """
    return _structure(g).greedy_max_critical_independent_set()


def diadem(g: Graph) -> frozenset[int]:
    """Union of all maximum critical independent sets: the vertices that
    individually extend to one."""
    return _structure(g).diadem()


def decompose(g: Graph) -> Decomposition:
    """The unique X = I + N(I) over any maximum critical independent set I."""
    i_set = max_critical_independent_set(g)
    x = i_set | neighborhood(g, i_set)
    return Decomposition(i_set, x, frozenset(range(g.n)) - x)
