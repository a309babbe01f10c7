"""Cayley graphs of finite abelian groups and the translation arguments
that collapse the outer maximum of the dimension to a single subdim call.

Elements of Z_{n_1} x ... x Z_{n_k} are encoded as mixed-radix integers
with the first coordinate least significant, so for Z_2^k the encoding is
plain binary and the n-dimensional hypercube is the Cayley graph of the
unit vectors with vertex ids matching ``hypercube_graph``.

Translating any vertex set by a group element is a graph automorphism.
Summing the overlap of all translates of a set W with a target set S
counts each (w, s) pair exactly once, giving sum == |W| * |S|; the best
translate therefore covers at least the average.  Applied to the
half-witness W of the whole graph this pins a low-degree majority subset
inside every induced subgraph, which is why dim == subdim here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Graph, bits_of
from .dimension import DimCertificate, subdim
from .errors import DomainError
from .limits import require_within_cap

__all__ = [
    "AbelianGroup",
    "GeneratorSet",
    "cayley_graph",
    "translate",
    "counting_identity",
    "best_translate",
    "dim_via_transitivity",
]


@dataclass(frozen=True)
class AbelianGroup:
    """Direct product of cyclic groups Z_{n_1} x ... x Z_{n_k}."""

    orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(n) for n in self.orders))
        if not self.orders:
            raise DomainError("group needs at least one cyclic factor")
        if any(n < 1 for n in self.orders):
            raise DomainError(f"cyclic orders must be >= 1, got {self.orders}")

    @property
    def size(self) -> int:
        return math.prod(self.orders)

    def encode(self, element) -> int:
        """Mixed-radix id of a residue tuple (first coordinate least significant)."""
        element = tuple(element)
        if len(element) != len(self.orders):
            raise DomainError(f"element has {len(element)} coordinates, wanted {len(self.orders)}")
        eid = 0
        stride = 1
        for a, n in zip(element, self.orders):
            eid += (a % n) * stride
            stride *= n
        return eid

    def decode(self, eid: int) -> tuple[int, ...]:
        if not 0 <= eid < self.size:
            raise DomainError(f"element id {eid} out of range for group of size {self.size}")
        out = []
        for n in self.orders:
            out.append(eid % n)
            eid //= n
        return tuple(out)

    def add(self, x: int, y: int) -> int:
        out = 0
        stride = 1
        for n in self.orders:
            out += ((x + y) % n) * stride
            x //= n
            y //= n
            stride *= n
        return out

    def neg(self, x: int) -> int:
        out = 0
        stride = 1
        for n in self.orders:
            out += (-x % n) * stride
            x //= n
            stride *= n
        return out


@dataclass(frozen=True)
class GeneratorSet:
    """Connection set for a Cayley graph: element ids, no identity,
    closed under negation (validated against the group at build time)."""

    elements: frozenset[int]

    def __init__(self, elements):
        object.__setattr__(self, "elements", frozenset(int(e) for e in elements))

    @classmethod
    def closed(cls, grp: AbelianGroup, elements) -> "GeneratorSet":
        """Build from arbitrary elements by adding every negation."""
        base = {int(e) for e in elements}
        return cls(base | {grp.neg(e) for e in base})


def _check_generators(grp: AbelianGroup, gens: GeneratorSet) -> None:
    for s in gens.elements:
        if not 0 <= s < grp.size:
            raise DomainError(f"generator {s} out of range for group of size {grp.size}")
        if s == 0:
            raise DomainError("the identity cannot be a generator (no self-loops)")
        if grp.neg(s) not in gens.elements:
            raise DomainError(f"generator set not closed under negation: missing {grp.neg(s)}")


def cayley_graph(grp: AbelianGroup, gens: GeneratorSet) -> Graph:
    """Graph on the group elements with an edge x ~ x+s for each generator s."""
    _check_generators(grp, gens)
    n = grp.size
    adj = [0] * n
    for x in range(n):
        for s in gens.elements:
            adj[x] |= 1 << grp.add(x, s)
    return Graph(n, tuple(adj))


def translate(grp: AbelianGroup, subset: int, a: int) -> int:
    """Image of a vertex set under addition of the group element a."""
    if subset >> grp.size:
        raise DomainError("vertex set mentions ids outside the group")
    out = 0
    for x in bits_of(subset):
        out |= 1 << grp.add(x, a)
    return out


def counting_identity(grp: AbelianGroup, w_set: int, s_set: int) -> tuple[int, int]:
    """Sum over all group elements a of |(W + a) & S|, with its closed form.

    Returns (total, expected) where expected = |W| * |S|; the two are equal
    for every abelian group, and the explicit summation exists precisely so
    that equality can be checked rather than assumed.
    """
    total = 0
    for a in range(grp.size):
        total += (translate(grp, w_set, a) & s_set).bit_count()
    expected = w_set.bit_count() * s_set.bit_count()
    return total, expected


def best_translate(grp: AbelianGroup, w_set: int, s_set: int) -> tuple[int, int]:
    """The translate of W with the largest overlap with S.

    Returns (a, overlap); ties go to the smallest element id.  The overlap
    is never below ceil(|W| * |S| / N) by averaging over the identity above.
    """
    best_a = 0
    best_overlap = -1
    for a in range(grp.size):
        overlap = (translate(grp, w_set, a) & s_set).bit_count()
        if overlap > best_overlap:
            best_a, best_overlap = a, overlap
    return best_a, best_overlap


def dim_via_transitivity(grp: AbelianGroup, gens: GeneratorSet,
                         cap: int | None = None) -> DimCertificate:
    """dim of a Cayley graph computed as subdim of the full vertex set.

    Translation symmetry makes the outer maximum collapse: the best
    translate of the full half-witness W covers a majority of any induced
    subgraph S, and that intersection, being induced in a translate of W,
    has max degree at most the witness value.  So no subset beats the full
    set and one subdim call certifies the dimension.
    """
    g = cayley_graph(grp, gens)
    require_within_cap(g.n, cap, "dim_via_transitivity")
    inner = subdim(g, g.vertex_mask)
    return DimCertificate(value=inner.value, witness_max=g.vertex_mask, inner=inner)
