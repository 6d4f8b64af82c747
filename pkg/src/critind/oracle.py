"""Exact brute-force ground truth at desk scale.

Everything here enumerates: independence number with the complete family of
maximum independent sets, the complete critical-independent-set family with
its intersection/union summaries, and exact maximum-matching size. These are
the correctness anchors for the polynomial-time paths; they refuse inputs
beyond the configured bound instead of approximating.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

__all__ = [
    "DEFAULT_ORACLE_BOUND",
    "OracleBoundError",
    "IndependenceProfile",
    "CriticalFamily",
    "independence_profile",
    "critical_family",
    "mu_exact",
    "max_independent_difference",
    "max_difference_exhaustive",
]

DEFAULT_ORACLE_BOUND = 20

# Exhaustive 2^n subset scans get a tighter default than the branch-and-bound
# enumerations; they exist to cross-check the reduction identity on small graphs.
DEFAULT_SUBSET_SCAN_BOUND = 16


class OracleBoundError(RuntimeError):
    """Input too large for exact enumeration; never degrade silently."""

    def __init__(self, n: int, bound: int, what: str):
        self.n = n
        self.bound = bound
        super().__init__(f"{what}: n={n} exceeds oracle bound {bound}")


@dataclass(frozen=True)
class IndependenceProfile:
    """alpha, every maximum independent set, and their intersection/union."""

    alpha: int
    omega_family: tuple[frozenset[int], ...]
    core: frozenset[int]
    corona: frozenset[int]


@dataclass(frozen=True)
class CriticalFamily:
    """The complete family of critical independent sets of a graph."""

    d: int
    all_critical_independent: tuple[frozenset[int], ...]
    maximum_critical_independent: tuple[frozenset[int], ...]
    ker: frozenset[int]
    nucleus: frozenset[int]
    diadem: frozenset[int]


def _require(g: Graph, bound: int, what: str) -> None:
    if g.n > bound:
        raise OracleBoundError(g.n, bound, what)


def adjacency_masks(g: Graph) -> tuple[int, ...]:
    """Neighbor sets as bitmasks; index i owns bit 1 << i."""
    return tuple(sum(1 << u for u in nbrs) for nbrs in g.adj)


def _mask_set(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _sorted_family(g: Graph, masks: list[int]) -> tuple[frozenset[int], ...]:
    sets = [_mask_set(m) for m in masks]
    sets.sort(key=lambda s: (len(s), sorted(s)))
    return tuple(sets)


def independence_profile(g: Graph, bound: int = DEFAULT_ORACLE_BOUND) -> IndependenceProfile:
    """Exact alpha with complete Omega(G), core, and corona.

    Branch and bound over a max-degree pivot; a vertex with no undecided
    neighbor is forced in, which every maximum independent set must contain.
    """
    _require(g, bound, "independence_profile")
    adj = adjacency_masks(g)
    n = g.n

    best = -1
    found: list[int] = []

    def rec(avail: int, cur: int, size: int) -> None:
        nonlocal best, found
        # Force in vertices isolated within avail; they never hurt a maximum set.
        forced = True
        while forced and avail:
            forced = False
            a = avail
            while a:
                b = a & -a
                v = b.bit_length() - 1
                a ^= b
                if not (adj[v] & avail):
                    cur |= b
                    size += 1
                    avail ^= b
                    forced = True
        if not avail:
            if size > best:
                best = size
                found = [cur]
            elif size == best:
                found.append(cur)
            return
        if size + avail.bit_count() < best:
            return
        # Pivot on the max-degree vertex within avail.
        pivot = -1
        pivot_deg = -1
        a = avail
        while a:
            b = a & -a
            v = b.bit_length() - 1
            a ^= b
            deg = (adj[v] & avail).bit_count()
            if deg > pivot_deg:
                pivot, pivot_deg = v, deg
        pb = 1 << pivot
        rec(avail & ~(adj[pivot] | pb), cur | pb, size + 1)
        rec(avail & ~pb, cur, size)

    rec((1 << n) - 1, 0, 0)

    family = _sorted_family(g, found)
    core = frozenset.intersection(*family) if family else frozenset()
    corona = frozenset.union(*family) if family else frozenset()
    return IndependenceProfile(best, family, core, corona)


def _max_independent_difference(adj: tuple[int, ...], n: int) -> int:
    """Max of d(S) over independent S, by branch and bound."""
    best = 0  # d(empty set) = 0

    def rec(avail: int, cur_nbrs: int, size: int) -> None:
        nonlocal best
        d_now = size - cur_nbrs.bit_count()
        if d_now > best:
            best = d_now
        if not avail:
            return
        # Optimistic bound: take all of avail, gain no new neighbors.
        if size + avail.bit_count() - cur_nbrs.bit_count() <= best:
            return
        b = avail & -avail
        v = b.bit_length() - 1
        rec(avail & ~(adj[v] | b), cur_nbrs | adj[v], size + 1)
        rec(avail & ~b, cur_nbrs, size)

    rec((1 << n) - 1, 0, 0)
    return best


def max_independent_difference(g: Graph, bound: int = DEFAULT_ORACLE_BOUND) -> int:
    """Max of d(S) over independent S, by branch and bound."""
    _require(g, bound, "max_independent_difference")
    return _max_independent_difference(adjacency_masks(g), g.n)


def critical_family(g: Graph, bound: int = DEFAULT_ORACLE_BOUND) -> CriticalFamily:
    """Enumerate every independent S with d(S) = d(G), plus ker/nucleus/diadem.

    ker intersects ALL critical independent sets (the empty set is one exactly
    when d(G) = 0, which then forces ker to be empty). nucleus and diadem
    intersect/union only the maximum-cardinality members.
    """
    _require(g, bound, "critical_family")
    adj = adjacency_masks(g)
    n = g.n
    d_target = _max_independent_difference(adj, n)

    hits: list[int] = []

    def rec(avail: int, cur: int, cur_nbrs: int, size: int) -> None:
        # Record at leaves only: each independent set reaches exactly one leaf.
        if not avail:
            if size - cur_nbrs.bit_count() == d_target:
                hits.append(cur)
            return
        if size + avail.bit_count() - cur_nbrs.bit_count() < d_target:
            return
        b = avail & -avail
        v = b.bit_length() - 1
        rec(avail & ~(adj[v] | b), cur | b, cur_nbrs | adj[v], size + 1)
        rec(avail & ~b, cur, cur_nbrs, size)

    rec((1 << n) - 1, 0, 0, 0)

    family = _sorted_family(g, hits)
    max_size = max((len(s) for s in family), default=0)
    maximum = tuple(s for s in family if len(s) == max_size)
    ker = frozenset.intersection(*family) if family else frozenset()
    nucleus = frozenset.intersection(*maximum) if maximum else frozenset()
    diadem = frozenset.union(*maximum) if maximum else frozenset()
    return CriticalFamily(d_target, family, maximum, ker, nucleus, diadem)


def mu_exact(g: Graph, bound: int = DEFAULT_ORACLE_BOUND) -> int:
    """Exact maximum-matching size by edge include/exclude with memoization."""
    _require(g, bound, "mu_exact")
    adj = adjacency_masks(g)
    memo: dict[int, int] = {}

    def rec(active: int) -> int:
        got = memo.get(active)
        if got is not None:
            return got
        a = active
        v = -1
        while a:
            b = a & -a
            i = b.bit_length() - 1
            if adj[i] & active:
                v = i
                break
            a ^= b
        if v < 0:
            memo[active] = 0
            return 0
        vb = 1 << v
        best = rec(active & ~vb)  # v stays unmatched
        nb = adj[v] & active
        while nb:
            ub = nb & -nb
            nb ^= ub
            cand = 1 + rec(active & ~vb & ~ub)
            if cand > best:
                best = cand
        memo[active] = best
        return best

    return rec((1 << g.n) - 1)


def max_difference_exhaustive(
    g: Graph,
    independent_only: bool = False,
    bound: int = DEFAULT_SUBSET_SCAN_BOUND,
) -> int:
    """Max of d(X) over all 2^n subsets (or only the independent ones).

    A plain exhaustive scan, kept deliberately independent from the
    branch-and-bound paths so the two can cross-check each other.
    """
    _require(g, bound, "max_difference_exhaustive")
    adj = adjacency_masks(g)
    n = g.n
    best = 0
    for mask in range(1 << n):
        nbrs = 0
        size = 0
        a = mask
        while a:
            b = a & -a
            v = b.bit_length() - 1
            a ^= b
            nbrs |= adj[v]
            size += 1
        if independent_only and (nbrs & mask):
            continue
        d = size - nbrs.bit_count()
        if d > best:
            best = d
    return best
