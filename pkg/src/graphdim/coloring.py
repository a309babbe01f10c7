"""Proper vertex coloring: greedy, exact, critical subgraphs, and the
decomposition coloring driven by half-witness subsets.

The decomposition colorer is the constructive side of the chromatic bound:
peel off a majority-size subset of the remaining vertices whose induced max
degree is as small as possible (the subdim witness), color it greedily with
fresh colors, and repeat.  Each round at least halves the remainder, so
there are at most ceil(log2 n) rounds and each round spends at most
subdim(remainder) + 1 <= dim(g) + 1 colors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, bits_of, ceil_log2
from .dimension import subdim
from .errors import DomainError
from .limits import require_within_cap

__all__ = [
    "Coloring",
    "DecompositionRound",
    "DecompositionTrace",
    "is_proper",
    "greedy_coloring",
    "chromatic_number",
    "chromatic_number_within",
    "critical_subgraph",
    "min_degree_check",
    "decomposition_coloring",
    "decomposition_round_bound",
    "chromatic_bound_from_dim",
]

_CHI_TABLE_MAX_N = 12  # 3^n submask walk; beyond this use per-query decisions


@dataclass(frozen=True)
class Coloring:
    """Total proper coloring; color ids are gap-free 0..palette_size-1."""

    colors: tuple[int, ...]
    palette_size: int

    def __post_init__(self):
        used = set(self.colors)
        expected = self.palette_size
        if self.colors:
            if used != set(range(expected)):
                raise DomainError("palette has gaps or palette_size is wrong")
        elif expected != 0:
            raise DomainError("empty coloring must have palette_size 0")

    def color_class(self, c: int) -> int:
        """Bitset of vertices with color c."""
        m = 0
        for v, col in enumerate(self.colors):
            if col == c:
                m |= 1 << v
        return m


@dataclass(frozen=True)
class DecompositionRound:
    chunk: int           # vertex bitset peeled off in this round
    chunk_delta: int     # induced max degree of the chunk
    palette_offset: int  # first color id this round's palette starts at


@dataclass(frozen=True)
class DecompositionTrace:
    rounds: tuple[DecompositionRound, ...]


def is_proper(g: Graph, colors) -> bool:
    colors = tuple(colors)
    if len(colors) != g.n:
        return False
    return all(colors[u] != colors[v] for u, v in g.edges())


def greedy_coloring(g: Graph, order) -> Coloring:
    """First-fit coloring along the given vertex order (a permutation of V).

    Uses at most max_degree(g) + 1 colors, with no gaps in the palette.
    """
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise DomainError("order must be a permutation of the vertices")
    colors = [-1] * g.n
    top = 0
    for v in order:
        used = 0
        rest = g.adj[v]
        while rest:
            low = rest & -rest
            c = colors[low.bit_length() - 1]
            if c >= 0:
                used |= 1 << c
            rest ^= low
        c = (~used & -~used).bit_length() - 1  # lowest unused color
        colors[v] = c
        if c + 1 > top:
            top = c + 1
    return Coloring(tuple(colors), top)


def _greedy_order(g: Graph) -> list[int]:
    # static order by descending degree, id as tie-break
    return sorted(range(g.n), key=lambda v: (-g.adj[v].bit_count(), v))


def _clique_lower_bound(adj, members: list[int]) -> int:
    """Greedy clique among `members`; a cheap chromatic lower bound."""
    order = sorted(members, key=lambda v: (-(adj[v]).bit_count(), v))
    clique = 0
    size = 0
    for v in order:
        if clique & ~adj[v] == 0:  # v adjacent to the whole clique so far
            clique |= 1 << v
            size += 1
    return size


def _color_decision(adj, members: list[int], k: int):
    """Proper k-coloring of the subgraph on `members`, or None.

    Backtracking in descending-degree order with the usual symmetry break:
    a vertex may open at most one new color beyond those used so far.
    """
    order = sorted(members, key=lambda v: (-(adj[v]).bit_count(), v))
    assigned = {}

    def place(i: int, palette_top: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        used = 0
        rest = adj[v]
        while rest:
            low = rest & -rest
            c = assigned.get(low.bit_length() - 1)
            if c is not None:
                used |= 1 << c
            rest ^= low
        limit = min(k, palette_top + 1)
        for c in range(limit):
            if used >> c & 1:
                continue
            assigned[v] = c
            if place(i + 1, max(palette_top, c + 1)):
                return True
            del assigned[v]
        return False

    return dict(assigned) if place(0, 0) else None


def chromatic_number(g: Graph, cap: int | None = None) -> tuple[int, Coloring]:
    """Exact chromatic number with a witnessing coloring.

    Greedy gives the incumbent, a greedy clique the lower bound, and
    backtracking decides each candidate palette size in between.
    """
    require_within_cap(g.n, cap, "chromatic_number")
    if g.n == 0:
        return 0, Coloring((), 0)
    greedy = greedy_coloring(g, _greedy_order(g))
    ub = greedy.palette_size
    lb = _clique_lower_bound(g.adj, list(range(g.n)))
    for k in range(lb, ub):
        assigned = _color_decision(g.adj, list(range(g.n)), k)
        if assigned is not None:
            colors = tuple(assigned[v] for v in range(g.n))
            return k, Coloring(colors, k)
    return ub, greedy


def _chi_table(adj, n: int) -> list[int]:
    """Chromatic number of every induced subgraph, indexed by vertex bitset.

    chi(S) = 1 + min over independent sets I containing the lowest vertex
    of S of chi(S \\ I); submask-walk dynamic program, fine for n <= 12.
    """
    size = 1 << n
    independent = bytearray(size)
    independent[0] = 1
    for m in range(1, size):
        low = m & -m
        v = low.bit_length() - 1
        independent[m] = 1 if independent[m ^ low] and adj[v] & m == 0 else 0
    chi = [0] * size
    for m in range(1, size):
        low = m & -m
        rest = m ^ low
        best = n + 1
        t = rest
        while True:
            if independent[t | low]:
                c = chi[m ^ (t | low)] + 1
                if c < best:
                    best = c
            if t == 0:
                break
            t = (t - 1) & rest
        chi[m] = best
    return chi


def chromatic_number_within(g: Graph, subset: int, cap: int | None = None) -> int:
    """Chromatic number of the subgraph induced by `subset` (value only)."""
    if subset & ~g.vertex_mask:
        raise DomainError("vertex set mentions vertices outside the graph")
    require_within_cap(g.n, cap, "chromatic_number_within")
    members = bits_of(subset)
    if not members:
        return 0
    lb = _clique_lower_bound(g.adj, members)
    for k in range(lb, len(members)):
        if _color_decision(g.adj, members, k) is not None:
            return k
    return len(members)


def critical_subgraph(g: Graph, cap: int | None = None) -> int:
    """A chromatic-critical induced subgraph: same chromatic number as g,
    and removing any single vertex lowers it.

    Scans vertices in ascending id order, drops the first whose removal
    keeps the chromatic number, and restarts until nothing is removable.
    """
    require_within_cap(g.n, cap, "critical_subgraph")
    if g.n == 0:
        raise DomainError("critical subgraph of the empty graph is undefined")
    if g.n <= _CHI_TABLE_MAX_N:
        table = _chi_table(g.adj, g.n)

        def chi(m: int) -> int:
            return table[m]
    else:
        def chi(m: int) -> int:
            return chromatic_number_within(g, m, cap=cap)
    subset = g.vertex_mask
    target = chi(subset)
    changed = True
    while changed:
        changed = False
        for v in bits_of(subset):
            smaller = subset ^ (1 << v)
            if chi(smaller) == target:
                subset = smaller
                changed = True
                break
    return subset


def min_degree_check(g: Graph, subset: int, cap: int | None = None) -> bool:
    """True iff every vertex of the induced subgraph has degree at least
    its chromatic number minus one (the mark of a critical subgraph)."""
    if subset == 0:
        raise DomainError("min_degree_check needs a nonempty vertex set")
    need = chromatic_number_within(g, subset, cap=cap) - 1
    return all((g.adj[v] & subset).bit_count() >= need for v in bits_of(subset))


def decomposition_coloring(g: Graph, cap: int | None = None) -> tuple[Coloring, DecompositionTrace]:
    """Color by repeatedly peeling the half-witness of the remaining set.

    Every round takes the majority-size subset of the remainder with the
    smallest induced max degree, first-fit colors it in ascending id order
    with a palette disjoint from all earlier rounds, and removes it.  The
    palette offset advances by the number of colors the round actually
    used (at most chunk_delta + 1), keeping the global palette gap-free.
    Uses at most (dim(g) + 1) * max(1, ceil(log2 n)) colors in at most
    max(1, ceil(log2 n)) rounds.
    """
    require_within_cap(g.n, cap, "decomposition_coloring")
    if g.n == 0:
        raise DomainError("decomposition coloring of the empty graph is undefined")
    colors = [-1] * g.n
    rounds = []
    remaining = g.vertex_mask
    offset = 0
    while remaining:
        cert = subdim(g, remaining)
        chunk = cert.witness_min
        used = 0
        for v in bits_of(chunk):
            taken = 0
            rest = g.adj[v] & chunk
            while rest:
                low = rest & -rest
                c = colors[low.bit_length() - 1]
                if c >= 0:
                    taken |= 1 << (c - offset)
                rest ^= low
            c = (~taken & -~taken).bit_length() - 1
            colors[v] = offset + c
            if c + 1 > used:
                used = c + 1
        rounds.append(DecompositionRound(chunk=chunk, chunk_delta=cert.value,
                                         palette_offset=offset))
        offset += used
        remaining ^= chunk
    return Coloring(tuple(colors), offset), DecompositionTrace(tuple(rounds))


def decomposition_round_bound(n: int) -> int:
    """Upper bound on decomposition rounds: max(1, ceil(log2 n))."""
    if n < 1:
        raise DomainError("round bound needs n >= 1")
    return max(1, ceil_log2(n))


def chromatic_bound_from_dim(dim_value: int, n: int) -> int:
    """The guaranteed palette bound (dim + 1) * max(1, ceil(log2 n))."""
    return (dim_value + 1) * decomposition_round_bound(n)
