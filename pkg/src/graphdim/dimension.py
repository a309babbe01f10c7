"""Exact solver for the minimax induced-subgraph degree invariant.

Two quantities drive everything here.  For a host vertex set S of size m,
``subdim(g, S)`` is the minimum, over all subsets T of S with
|T| >= floor(m/2) + 1, of the maximum degree of the subgraph induced by T.
``dim_exact(g)`` is the maximum of that quantity over all nonempty vertex
sets of the graph.  Because the induced maximum degree can only drop when
vertices are removed, the inner minimum is attained at size exactly
floor(m/2) + 1, and that is the only size the solvers enumerate.

The solver comes in two independent routes: a brute-force oracle
(``subdim_naive``) that enumerates every candidate subset, and a pruned
branch-and-bound (``subdim_exists`` / ``subdim``) used for real work.  Both
return the same value and the same witness: subsets are explored in
increasing numeric bitset order, so the reported witness is always the
numerically smallest optimal subset and certificates compare bit-for-bit
across routes and runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, bits_of, max_degree_within, subsets_of_mask, subsets_of_size
from .errors import DomainError
from .limits import require_within_cap

__all__ = [
    "SubdimCertificate",
    "DimCertificate",
    "subdim_exists",
    "subdim",
    "subdim_naive",
    "half_witness",
    "dim_exact",
    "dim_bounds",
]


@dataclass(frozen=True)
class SubdimCertificate:
    """Value of the inner minimum plus the subset achieving it.

    witness_min has exactly floor(host_size/2) + 1 vertices and its induced
    maximum degree equals value; replaying it through max_degree_within
    proves the upper direction of the bound.
    """

    value: int
    witness_min: int
    host_size: int


@dataclass(frozen=True)
class DimCertificate:
    """Value of the outer maximum plus the host subset achieving it.

    inner is the certificate for the maximizing host, so the pair proves
    the lower direction; inner is None only for the empty graph.
    """

    value: int
    witness_max: int
    inner: SubdimCertificate | None


def subdim_exists(g: Graph, subset: int, s: int, d: int) -> int | None:
    """Decision form: a size-s subset of `subset` with induced max degree <= d.

    Returns the numerically smallest such subset as a bitset, or None.
    Branch and bound over include/exclude decisions per vertex, highest
    vertex first with the exclude branch explored before the include
    branch, which makes complete selections appear in increasing numeric
    order.  A branch dies when an included vertex would exceed d included
    neighbors, or when the vertices still available cannot reach size s.
    """
    if subset & ~g.vertex_mask:
        raise DomainError("vertex set mentions vertices outside the graph")
    members = bits_of(subset)
    k = len(members)
    if s < 0 or s > k:
        raise DomainError(f"target size {s} out of range for a {k}-element host")
    if d < 0:
        return None
    if s == 0:
        return 0
    adj = g.adj
    # counts[u] = number of already-included neighbors of u, for every vertex
    counts = [0] * g.n
    included = 0

    def viable(idx: int) -> int:
        # undecided members whose included-neighbor count still permits inclusion
        alive = 0
        for i in range(idx + 1):
            if counts[members[i]] <= d:
                alive += 1
        return alive

    def dfs(idx: int, size: int) -> int | None:
        nonlocal included
        if size == s:
            return included
        if size + idx + 1 < s or size + viable(idx) < s:
            return None
        v = members[idx]
        found = dfs(idx - 1, size)  # exclude first: keeps masks ascending
        if found is not None:
            return found
        if counts[v] <= d:  # counts[v] == |adj[v] & included| by the invariant
            rest = adj[v] & included
            while rest:
                low = rest & -rest
                if counts[low.bit_length() - 1] >= d:
                    return None  # some included neighbor would exceed d
                rest ^= low
            included |= 1 << v
            rest = adj[v]
            while rest:
                low = rest & -rest
                counts[low.bit_length() - 1] += 1
                rest ^= low
            found = dfs(idx - 1, size + 1)
            if found is not None:
                return found
            included ^= 1 << v
            rest = adj[v]
            while rest:
                low = rest & -rest
                counts[low.bit_length() - 1] -= 1
                rest ^= low
        return None

    return dfs(k - 1, 0)


def _subdim_scan(g: Graph, subset: int, s: int, start: int) -> tuple[int, int]:
    """Smallest d >= start admitting a witness, with that witness."""
    d = start
    while True:
        witness = subdim_exists(g, subset, s, d)
        if witness is not None:
            return d, witness
        d += 1


def subdim(g: Graph, subset: int) -> SubdimCertificate:
    """Minimum induced max degree over majority-size subsets of the host.

    Ascending scan on the degree bound d with the branch-and-bound decision
    procedure; values are small (at most the host's induced max degree), so
    the linear scan beats binary search in practice.
    """
    if subset == 0:
        raise DomainError("sub-dimension of an empty host is undefined")
    m = subset.bit_count()
    s = m // 2 + 1
    value, witness = _subdim_scan(g, subset, s, 0)
    return SubdimCertificate(value=value, witness_min=witness, host_size=m)


def subdim_naive(g: Graph, subset: int) -> SubdimCertificate:
    """Brute-force oracle for subdim: enumerate every majority-size subset.

    Kept deliberately free of pruning so it can vouch for the search path.
    """
    if subset == 0:
        raise DomainError("sub-dimension of an empty host is undefined")
    m = subset.bit_count()
    s = m // 2 + 1
    adj = g.adj
    best = None
    best_witness = None
    for cand in subsets_of_mask(subset, s):
        delta = 0
        rest = cand
        while rest:
            low = rest & -rest
            deg = (adj[low.bit_length() - 1] & cand).bit_count()
            if deg > delta:
                delta = deg
            rest ^= low
        if best is None or delta < best:
            best = delta
            best_witness = cand
    return SubdimCertificate(value=best, witness_min=best_witness, host_size=m)


def half_witness(g: Graph, subset: int) -> int:
    """The majority-size subset minimizing induced max degree (the subdim witness)."""
    return subdim(g, subset).witness_min


def dim_exact(g: Graph, cap: int | None = None) -> DimCertificate:
    """Maximum of subdim over all nonempty vertex subsets, exactly.

    Hosts are enumerated by decreasing size (the full vertex set first,
    which tends to set a strong incumbent immediately).  A host S is
    skipped when its induced max degree is at most the incumbent, since
    subdim never exceeds it; surviving hosts first get a single decision
    call at the incumbent bound and only on failure is their exact value
    computed.  The reported witness is the first host, in this order, that
    reached the final value.
    """
    require_within_cap(g.n, cap, "dim_exact")
    if g.n == 0:
        return DimCertificate(value=0, witness_max=0, inner=None)
    adj = g.adj
    best = -1
    best_host = 0
    best_inner = None
    for size in range(g.n, 0, -1):
        s = size // 2 + 1
        for host in subsets_of_size(g.n, size):
            delta = 0
            rest = host
            while rest:
                low = rest & -rest
                deg = (adj[low.bit_length() - 1] & host).bit_count()
                if deg > delta:
                    delta = deg
                rest ^= low
            if delta <= best:
                continue
            if best >= 0 and subdim_exists(g, host, s, best) is not None:
                continue  # subdim(host) <= best, cannot improve
            value, witness = _subdim_scan(g, host, s, best + 1)
            best = value
            best_host = host
            best_inner = SubdimCertificate(value=value, witness_min=witness, host_size=size)
    return DimCertificate(value=best, witness_max=best_host, inner=best_inner)


def dim_bounds(g: Graph) -> tuple[int, int]:
    """Cheap sandwich: subdim of the full vertex set <= dim <= max degree."""
    if g.n == 0:
        return 0, 0
    return subdim(g, g.vertex_mask).value, g.max_degree()
