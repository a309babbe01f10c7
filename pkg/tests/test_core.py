import itertools
import math
import random

import pytest

from graphdim.core import (
    Graph,
    bits_of,
    ceil_log2,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    degree_profile,
    encode_graph6,
    family,
    format_edge_list,
    hypercube_graph,
    induced_degree,
    induced_subgraph,
    mask_of,
    max_degree_within,
    parse_edge_list,
    parse_graph6,
    path_graph,
    relabel,
    subsets_of_mask,
    subsets_of_size,
)
from graphdim.errors import DomainError, ParseError


def random_graph(rng, n, p=0.5):
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Graph construction and validation
# ---------------------------------------------------------------------------

def test_graph_rejects_asymmetry():
    with pytest.raises(DomainError):
        Graph(2, (0b10, 0b00))


def test_graph_rejects_self_loop():
    with pytest.raises(DomainError):
        Graph(1, (0b1,))
    with pytest.raises(DomainError):
        Graph.from_edges(3, [(1, 1)])


def test_graph_rejects_out_of_range():
    with pytest.raises(DomainError):
        Graph(2, (0b100, 0))
    with pytest.raises(DomainError):
        Graph.from_edges(2, [(0, 2)])


def test_empty_graph():
    g = Graph(0, ())
    assert g.vertex_mask == 0
    assert g.max_degree() == 0
    assert g.edge_count() == 0


def test_edges_iteration_sorted():
    g = cycle_graph(4)
    assert list(g.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]


# ---------------------------------------------------------------------------
# induced degrees
# ---------------------------------------------------------------------------

def test_induced_degree_clique():
    g = complete_graph(4)
    assert induced_degree(g, mask_of([0, 1, 2]), 0) == 2


def test_induced_degree_path():
    g = path_graph(4)
    assert induced_degree(g, mask_of([0, 2, 3]), 2) == 1


def test_induced_degree_cycle():
    # enumerate C_4's edges inside {0,1,3}: 0-1 and 0-3 survive
    g = cycle_graph(4)
    assert induced_degree(g, mask_of([0, 1, 3]), 0) == 2


def test_induced_degree_requires_membership():
    g = path_graph(3)
    with pytest.raises(DomainError):
        induced_degree(g, mask_of([0, 1]), 2)


def test_max_degree_within_cycle4():
    g = cycle_graph(4)
    assert max_degree_within(g, g.vertex_mask) == 2
    for sub in subsets_of_size(4, 3):
        assert max_degree_within(g, sub) == 2


def test_max_degree_within_cycle5_sparse_subset():
    assert max_degree_within(cycle_graph(5), mask_of([0, 1, 3])) == 1


def test_max_degree_within_small_sets():
    g = complete_graph(5)
    assert max_degree_within(g, 0) == 0
    assert max_degree_within(g, mask_of([3])) == 0


def test_max_degree_monotone_under_inclusion():
    rng = random.Random(100)
    for _ in range(120):
        n = rng.randint(1, 10)
        g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
        small = rng.getrandbits(n)
        grow = small | rng.getrandbits(n)
        assert max_degree_within(g, small) <= max_degree_within(g, grow)


def test_degree_profile():
    g = cycle_graph(5)
    prof = degree_profile(g, mask_of([0, 1, 3]))
    assert prof.members == (0, 1, 3)
    assert prof.degrees == (1, 1, 0)
    assert prof.max_degree == 1


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def test_parse_edge_list_k2():
    g = parse_edge_list("2\n0 1")
    assert g == complete_graph(2)


def test_parse_edge_list_c4():
    g = parse_edge_list("4\n0 1\n1 2\n2 3\n3 0\n")
    assert g == cycle_graph(4)


def test_parse_edge_list_isolated_vertex():
    g = parse_edge_list("1\n")
    assert g.n == 1 and g.edge_count() == 0


def test_parse_edge_list_duplicates_tolerated():
    g = parse_edge_list("3\n0 1\n1 0\n0 1")
    assert g.edge_count() == 1


@pytest.mark.parametrize("text,fragment", [
    ("2\n0 5", "out of range"),
    ("2\n1 1", "self-loop"),
    ("2\n0 1 2", "expected"),
    ("x\n0 1", "vertex count"),
    ("", "empty input"),
])
def test_parse_edge_list_errors(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_edge_list(text)
    assert fragment in str(err.value)


def test_parse_edge_list_error_carries_line_number():
    with pytest.raises(ParseError) as err:
        parse_edge_list("3\n0 1\n0 9")
    assert err.value.line == 3


def test_edge_list_round_trip():
    rng = random.Random(4)
    for _ in range(40):
        g = random_graph(rng, rng.randint(0, 12))
        assert parse_edge_list(format_edge_list(g)) == g


def test_graph6_decode_k2():
    # 'A' encodes n=2, '_' carries a single 1 bit for the pair (0,1)
    assert parse_graph6("A_") == complete_graph(2)


def test_graph6_decode_star():
    g = parse_graph6("D?{")
    assert g.n == 5
    assert encode_graph6(g) == "D?{"
    assert bits_of(g.adj[4]) == [0, 1, 2, 3]


def test_graph6_round_trip_families():
    for g in (cycle_graph(5), complete_graph(7), hypercube_graph(3), path_graph(1)):
        assert parse_graph6(encode_graph6(g)) == g


def test_graph6_round_trip_random():
    rng = random.Random(5)
    for _ in range(60):
        g = random_graph(rng, rng.randint(0, 20))
        assert parse_graph6(encode_graph6(g)) == g


def test_graph6_large_n_header():
    rng = random.Random(6)
    g = random_graph(rng, 70, 0.1)
    enc = encode_graph6(g)
    assert enc.startswith("~")
    assert parse_graph6(enc) == g


def test_graph6_optional_prefix():
    assert parse_graph6(">>graph6<<A_") == complete_graph(2)


@pytest.mark.parametrize("text", ["", "A", "D?", "D?{{", "~~~~~~", "A" + chr(200)])
def test_graph6_errors(text):
    with pytest.raises(ParseError):
        parse_graph6(text)


def test_graph6_rejects_dirty_padding():
    # K_2's body byte with a nonzero padding bit
    with pytest.raises(ParseError):
        parse_graph6("A" + chr(95 + 1))


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------

def test_hypercube_2_is_the_4_cycle():
    g = hypercube_graph(2)
    assert g.n == 4
    assert sorted(g.edges()) == [(0, 1), (0, 2), (1, 3), (2, 3)]


def test_complete_5_edges():
    assert complete_graph(5).edge_count() == 10


def test_complete_bipartite_partition():
    g = complete_bipartite_graph(2, 3)
    assert g.edge_count() == 6
    for u, v in g.edges():
        assert u < 2 <= v


def test_family_dispatch():
    assert family("hypercube", 3) == hypercube_graph(3)
    assert family("complete_bipartite", 2, 3) == complete_bipartite_graph(2, 3)
    with pytest.raises(DomainError):
        family("petersen", 1)
    with pytest.raises(DomainError):
        family("path", 1, 2)


@pytest.mark.parametrize("name,params", [
    ("path", (0,)), ("cycle", (2,)), ("complete", (0,)),
    ("complete_bipartite", (0, 3)), ("hypercube", (0,)),
])
def test_family_parameter_range(name, params):
    with pytest.raises(DomainError):
        family(name, *params)


def test_hypercube_degrees():
    for n in (1, 2, 3, 4):
        g = hypercube_graph(n)
        assert all(g.degree(v) == n for v in range(g.n))
        assert g.edge_count() == n * (1 << (n - 1))


# ---------------------------------------------------------------------------
# subset iteration
# ---------------------------------------------------------------------------

def test_subsets_of_size_order():
    assert list(subsets_of_size(3, 2)) == [0b011, 0b101, 0b110]


def test_subsets_of_size_empty():
    assert list(subsets_of_size(4, 0)) == [0]


def test_subsets_of_size_count():
    assert sum(1 for _ in subsets_of_size(16, 9)) == math.comb(16, 9)


def test_subsets_of_size_exhaustive_and_distinct():
    for n in range(0, 8):
        for s in range(0, n + 1):
            seen = list(subsets_of_size(n, s))
            assert len(seen) == math.comb(n, s)
            assert len(set(seen)) == len(seen)
            assert seen == sorted(seen)
            assert all(m.bit_count() == s for m in seen)


def test_subsets_of_size_range_check():
    with pytest.raises(DomainError):
        list(subsets_of_size(3, 4))


def test_subsets_of_mask():
    got = list(subsets_of_mask(mask_of([1, 2, 4]), 2))
    assert got == [mask_of([1, 2]), mask_of([1, 4]), mask_of([2, 4])]
    assert list(subsets_of_mask(0, 0)) == [0]


# ---------------------------------------------------------------------------
# misc helpers
# ---------------------------------------------------------------------------

def test_induced_subgraph_relabeled():
    g = cycle_graph(5)
    sub = induced_subgraph(g, mask_of([0, 1, 3]))
    assert sub.n == 3
    assert sorted(sub.edges()) == [(0, 1)]


def test_relabel_is_isomorphism():
    rng = random.Random(8)
    for _ in range(40):
        n = rng.randint(1, 9)
        g = random_graph(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert h.edge_count() == g.edge_count()
        assert sorted(h.degree(v) for v in range(n)) == sorted(g.degree(v) for v in range(n))


def test_ceil_log2():
    assert [ceil_log2(n) for n in (1, 2, 3, 4, 5, 8, 9)] == [0, 1, 2, 2, 3, 3, 4]
    with pytest.raises(DomainError):
        ceil_log2(0)
