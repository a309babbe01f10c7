"""Batch verification sweeps.

Each suite checks one guaranteed relationship on a fixed population of
graphs and reports every instance with a pass/fail flag, so a run is a
self-contained audit trail.  The exhaustive sweeps walk every labeled
graph on up to six vertices; redundancy across isomorphic graphs is
deliberate, since it needs no canonization and each instance stays
independently replayable.  All randomness is seeded, so repeated runs
produce identical reports.
"""

from __future__ import annotations

import itertools
import math
import random
from functools import lru_cache

from .cayley import (
    AbelianGroup,
    GeneratorSet,
    best_translate,
    cayley_graph,
    counting_identity,
    dim_via_transitivity,
)
from .coloring import (
    chromatic_bound_from_dim,
    chromatic_number,
    chromatic_number_within,
    critical_subgraph,
    decomposition_coloring,
    decomposition_round_bound,
    is_proper,
    min_degree_check,
)
from .core import Graph, encode_graph6, hypercube_graph, max_degree_within
from .dimension import dim_exact, subdim, subdim_naive
from .embedding import unit_distance_embed, verify_embedding
from .errors import CapExceeded, DomainError
from .inputs import load_input

__all__ = ["SUITE_NAMES", "enumerate_labeled_graphs", "run_suite", "run_all"]

SUITE_NAMES = ("examples", "theorem1", "prop1", "theorem2", "lemma2",
               "corollary1", "identity")

_SWEEP_LIMIT = 6          # enumerate_labeled_graphs refuses beyond this
_IDENTITY_SEED = 20250810  # fixed so reports are byte-identical across runs
_EMBED_SAMPLE_STRIDE = 500


def enumerate_labeled_graphs(n: int):
    """All 2^C(n,2) labeled graphs on vertices 0..n-1, each exactly once.

    Edge pairs are ranked in itertools.combinations order and graph i has
    exactly the edges whose rank bits are set in i, so enumeration order is
    deterministic and dense in i.
    """
    if n > _SWEEP_LIMIT:
        raise CapExceeded(f"labeled enumeration supports n <= {_SWEEP_LIMIT}, got {n}")
    if n < 0:
        raise DomainError(f"vertex count must be >= 0, got {n}")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, tuple(adj))


@lru_cache(maxsize=8)
def _sweep_stats(n: int) -> list[tuple[str, int, int]]:
    """(graph6, chromatic number, dim) for every labeled n-vertex graph."""
    out = []
    for g in enumerate_labeled_graphs(n):
        chi = chromatic_number_within(g, g.vertex_mask)
        out.append((encode_graph6(g), chi, dim_exact(g).value))
    return out


def _ceil_sqrt(n: int) -> int:
    r = math.isqrt(n)
    return r if r * r == n else r + 1


def _suite_report(name: str, parameters: dict, instances: list[dict]) -> dict:
    failures = sum(1 for inst in instances if not inst["ok"])
    return {
        "suite": name,
        "parameters": parameters,
        "checked": len(instances),
        "failures": failures,
        "ok": failures == 0,
        "instances": instances,
    }


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def suite_examples(cap: int | None = None) -> dict:
    """Closed-form dimension values of the basic families."""
    instances = []

    def check(case: str, metric: str, got: int, want: int):
        instances.append({"case": case, "metric": metric, "got": got,
                          "want": want, "ok": got == want})

    for n in range(4, 11):
        g, _ = load_input(f"path:{n}")
        check(f"path:{n}", "dim", dim_exact(g).value, 1)
    for n in range(5, 11):
        g, _ = load_input(f"cycle:{n}")
        check(f"cycle:{n}", "dim", dim_exact(g).value, 1)
    for n in range(2, 11):
        g, _ = load_input(f"complete:{n}")
        check(f"complete:{n}", "dim", dim_exact(g).value, n // 2)
    for m in range(1, 6):
        for n in range(m, 6):
            g, _ = load_input(f"kbip:{m},{n}")
            sub = subdim(g, g.vertex_mask).value
            check(f"kbip:{m},{n}", "subdim", sub, 0 if m < n else m // 2 + 1)
            check(f"kbip:{m},{n}", "dim", dim_exact(g).value, m // 2 + 1)
    return _suite_report("examples", {}, instances)


def suite_theorem1(cap: int | None = None) -> dict:
    """Hypercube dimension: ceil(sqrt(n)), exactly for n <= 3, and via the
    translation shortcut plus a searched half-witness for n = 4."""
    instances = []
    for n in (1, 2, 3):
        g = hypercube_graph(n)
        got = dim_exact(g).value
        instances.append({"case": f"cube:{n}", "metric": "dim_exact",
                          "got": got, "want": _ceil_sqrt(n), "ok": got == _ceil_sqrt(n)})
    grp = AbelianGroup((2,) * 4)
    gens = GeneratorSet({1 << i for i in range(4)})
    cert = dim_via_transitivity(grp, gens)
    instances.append({"case": "cube:4", "metric": "dim_via_transitivity",
                      "got": cert.value, "want": 2, "ok": cert.value == 2})
    q4 = hypercube_graph(4)
    witness = cert.inner.witness_min
    size = witness.bit_count()
    delta = max_degree_within(q4, witness)
    instances.append({"case": "cube:4", "metric": "half_witness_size",
                      "got": size, "want": 9, "ok": size == 9})
    instances.append({"case": "cube:4", "metric": "half_witness_delta",
                      "got": delta, "want": 2, "ok": delta == 2})
    return _suite_report("theorem1", {}, instances)


def _prop1_cases() -> list[str]:
    cases = [f"cayley:z:{n};gens=1,{n - 1}" for n in range(5, 9)]
    cases += [f"cayley:z:{n};gens=" + ",".join(str(s) for s in range(1, n))
              for n in range(4, 8)]
    cases += ["cayley:z:2,2;gens=(1,0),(0,1)",
              "cayley:z:2,2,2;gens=(1,0,0),(0,1,0),(0,0,1)",
              "cayley:z:7;gens=1,2,5,6"]
    return cases


def suite_prop1(cap: int | None = None) -> dict:
    """Translation shortcut agrees with the exhaustive solver on Cayley graphs."""
    from .inputs import parse_cayley_spec
    instances = []
    for case in _prop1_cases():
        grp, gens = parse_cayley_spec(case[len("cayley:"):])
        shortcut = dim_via_transitivity(grp, gens).value
        exhaustive = dim_exact(cayley_graph(grp, gens)).value
        instances.append({"case": case, "metric": "dim", "got": shortcut,
                          "want": exhaustive, "ok": shortcut == exhaustive})
    return _suite_report("prop1", {}, instances)


def suite_theorem2(cap: int | None = None) -> dict:
    """Chromatic bound chi <= (dim + 1) * max(1, ceil(log2 n)) on every
    labeled graph up to the sweep cap, with the decomposition coloring
    meeting the same palette bound in at most max(1, ceil(log2 n)) rounds."""
    max_n = _SWEEP_LIMIT if cap is None else cap
    instances = []
    for n in range(1, max_n + 1):
        stats = _sweep_stats(n)
        for g, (g6, chi, dim_value) in zip(enumerate_labeled_graphs(n), stats):
            bound = chromatic_bound_from_dim(dim_value, n)
            col, trace = decomposition_coloring(g)
            ok = (chi <= bound
                  and is_proper(g, col.colors)
                  and col.palette_size <= bound
                  and len(trace.rounds) <= decomposition_round_bound(n))
            instances.append({"case": g6, "chi": chi, "dim": dim_value,
                              "bound": bound, "palette": col.palette_size,
                              "rounds": len(trace.rounds), "ok": ok})
    return _suite_report("theorem2", {"max_n": max_n}, instances)


def suite_lemma2(cap: int | None = None) -> dict:
    """Critical subgraphs keep the chromatic number and have min degree
    at least chi - 1, on every labeled graph up to the sweep cap."""
    max_n = _SWEEP_LIMIT if cap is None else cap
    instances = []
    for n in range(1, max_n + 1):
        stats = _sweep_stats(n)
        for g, (g6, chi, _) in zip(enumerate_labeled_graphs(n), stats):
            core = critical_subgraph(g)
            preserved = chromatic_number_within(g, core) == chi
            degrees_ok = min_degree_check(g, core)
            instances.append({"case": g6, "chi": chi,
                              "critical_size": core.bit_count(),
                              "chi_preserved": preserved,
                              "min_degree_ok": degrees_ok,
                              "ok": preserved and degrees_ok})
    return _suite_report("lemma2", {"max_n": max_n}, instances)


def suite_corollary1(cap: int | None = None) -> dict:
    """2*chi never exceeds 2*(dim+1)*max(1, ceil(log2 n)) on the sweep, and
    sampled graphs get their coloring-based embedding built and verified."""
    max_n = _SWEEP_LIMIT if cap is None else cap
    instances = []
    counter = 0
    for n in range(1, max_n + 1):
        stats = _sweep_stats(n)
        for g, (g6, chi, dim_value) in zip(enumerate_labeled_graphs(n), stats):
            via_chi = 2 * chi
            via_dim = 2 * chromatic_bound_from_dim(dim_value, n)
            instances.append({"case": g6, "bound_via_chi": via_chi,
                              "bound_via_dim": via_dim, "ok": via_chi <= via_dim})
            if counter % _EMBED_SAMPLE_STRIDE == 0:
                _, col = chromatic_number(g)
                report = verify_embedding(g, unit_distance_embed(g, col))
                instances.append({"case": g6, "ambient": report.ambient_dim,
                                  "want_ambient": 2 * chi,
                                  "max_edge_error": report.max_edge_error,
                                  "ok": report.ok and report.ambient_dim == 2 * chi})
            counter += 1
    return _suite_report("corollary1", {"max_n": max_n}, instances)


def suite_identity(cap: int | None = None) -> dict:
    """Exact translate-overlap counting and the averaging consequence, on
    seeded random triples, plus exhaustive majority coverage on the
    3-dimensional cube."""
    rng = random.Random(_IDENTITY_SEED)
    instances = []
    for trial in range(100):
        while True:
            orders = tuple(rng.randint(1, 8) for _ in range(rng.randint(1, 3)))
            if math.prod(orders) <= 64:
                break
        grp = AbelianGroup(orders)
        size = grp.size
        w_set = rng.getrandbits(size)
        s_set = rng.getrandbits(size)
        total, expected = counting_identity(grp, w_set, s_set)
        _, overlap = best_translate(grp, w_set, s_set)
        needed = -(-w_set.bit_count() * s_set.bit_count() // size)
        instances.append({
            "case": "z:" + ",".join(map(str, orders)) + f" #{trial:03d}",
            "sum": total, "expected": expected,
            "overlap": overlap, "overlap_needed": needed,
            "ok": total == expected and overlap >= needed,
        })
    grp = AbelianGroup((2, 2, 2))
    gens = GeneratorSet({1, 2, 4})
    g = cayley_graph(grp, gens)
    witness = subdim(g, g.vertex_mask).witness_min
    for s_set in range(1, 1 << g.n):
        _, overlap = best_translate(grp, witness, s_set)
        needed = s_set.bit_count() // 2 + 1
        instances.append({"case": f"coverage z:2,2,2 S=0x{s_set:02x}",
                          "overlap": overlap, "overlap_needed": needed,
                          "ok": overlap >= needed})
    return _suite_report("identity", {"seed": _IDENTITY_SEED, "trials": 100}, instances)


def suite_oracle(cap: int | None = None, trials: int = 200) -> dict:
    """Branch-and-bound solver against the brute-force oracle: identical
    certificates on the family graphs and on seeded random graphs."""
    rng = random.Random(_IDENTITY_SEED + 1)
    instances = []

    def check(case: str, g: Graph):
        fast = subdim(g, g.vertex_mask)
        slow = subdim_naive(g, g.vertex_mask)
        instances.append({"case": case, "got": fast.value, "want": slow.value,
                          "witness_match": fast == slow,
                          "ok": fast == slow})

    for n in range(4, 11):
        check(f"path:{n}", load_input(f"path:{n}")[0])
    for n in range(5, 11):
        check(f"cycle:{n}", load_input(f"cycle:{n}")[0])
    for n in range(2, 11):
        check(f"complete:{n}", load_input(f"complete:{n}")[0])
    for m in range(1, 6):
        for n in range(m, 6):
            check(f"kbip:{m},{n}", load_input(f"kbip:{m},{n}")[0])
    for n in (1, 2, 3, 4):
        check(f"cube:{n}", hypercube_graph(n))
    for case in _prop1_cases():
        check(case, load_input(case)[0])
    for trial in range(trials):
        n = rng.randint(1, 10)
        p = rng.choice((0.2, 0.5, 0.8))
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        check(f"random n={n} p={p} #{trial:03d} {encode_graph6(g)}", g)
    return _suite_report("oracle", {"seed": _IDENTITY_SEED + 1, "trials": trials}, instances)


_SUITES = {
    "examples": suite_examples,
    "theorem1": suite_theorem1,
    "prop1": suite_prop1,
    "theorem2": suite_theorem2,
    "lemma2": suite_lemma2,
    "corollary1": suite_corollary1,
    "identity": suite_identity,
    "oracle": suite_oracle,
}


def run_suite(name: str, cap: int | None = None) -> dict:
    if name == "all":
        return run_all(cap)
    if name not in _SUITES:
        raise DomainError(f"unknown suite {name!r}; known: all, {', '.join(_SUITES)}")
    return _SUITES[name](cap)


def run_all(cap: int | None = None) -> dict:
    suites = [_SUITES[name](cap) for name in SUITE_NAMES]
    return {
        "suite": "all",
        "checked": sum(s["checked"] for s in suites),
        "failures": sum(s["failures"] for s in suites),
        "ok": all(s["ok"] for s in suites),
        "suites": suites,
    }
