"""Input descriptors for the command line and the verification sweeps.

A graph input is either a family spec or a file path.  Family specs:

    path:7  cycle:6  complete:5  kbip:3,4  cube:3
    cayley:z:N1,N2,...;gens=G1,G2,...

Cayley generators are element tuples like (1,0),(0,1); for a single cyclic
factor bare residues are accepted (gens=1,4).  The generator set is taken
literally and must already be closed under negation.

Files ending in .g6 are read as graph6; otherwise a file whose first
non-blank line is a lone integer is read as an edge list, and anything
else as graph6.
"""

from __future__ import annotations

import os
import re

from .cayley import AbelianGroup, GeneratorSet
from .core import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    hypercube_graph,
    parse_edge_list,
    parse_graph6,
    path_graph,
)
from .errors import ParseError

__all__ = ["parse_cayley_spec", "load_input"]

_FAMILY_TOKENS = ("path", "cycle", "complete", "kbip", "cube", "cayley")


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError:
        raise ParseError(f"bad {what} {text!r}, expected comma-separated integers") from None


def parse_cayley_spec(body: str) -> tuple[AbelianGroup, GeneratorSet]:
    """Parse 'z:2,2,2;gens=(1,0,0),(0,1,0),(0,0,1)' into a group and generators."""
    if ";gens=" not in body:
        raise ParseError(f"cayley spec {body!r} lacks ';gens='")
    group_part, gens_part = body.split(";gens=", 1)
    if not group_part.startswith("z:"):
        raise ParseError(f"cayley group spec {group_part!r} must start with 'z:'")
    orders = _parse_int_list(group_part[2:], "group orders")
    if not orders:
        raise ParseError("cayley group needs at least one cyclic order")
    grp = AbelianGroup(tuple(orders))
    if "(" in gens_part:
        tuples = re.findall(r"\(([^()]*)\)", gens_part)
        leftover = re.sub(r"\(([^()]*)\)", "", gens_part).replace(",", "").strip()
        if not tuples or leftover:
            raise ParseError(f"bad generator list {gens_part!r}")
        elements = []
        for t in tuples:
            coords = _parse_int_list(t, "generator tuple")
            if len(coords) != len(orders):
                raise ParseError(
                    f"generator ({t}) has {len(coords)} coordinates, group has {len(orders)}")
            elements.append(grp.encode(coords))
    else:
        scalars = _parse_int_list(gens_part, "generator list")
        if len(orders) != 1:
            raise ParseError("bare-residue generators need a single cyclic factor; "
                             "use tuples like (1,0),(0,1)")
        elements = [s % orders[0] for s in scalars]
    if not elements:
        raise ParseError("cayley spec needs at least one generator")
    return grp, GeneratorSet(elements)


def _build_family(token: str, body: str) -> Graph:
    if token == "cayley":
        from .cayley import cayley_graph
        grp, gens = parse_cayley_spec(body)
        return cayley_graph(grp, gens)
    params = _parse_int_list(body, f"{token} parameters")
    if token == "path":
        (n,) = _expect_arity(params, 1, token)
        return path_graph(n)
    if token == "cycle":
        (n,) = _expect_arity(params, 1, token)
        return cycle_graph(n)
    if token == "complete":
        (n,) = _expect_arity(params, 1, token)
        return complete_graph(n)
    if token == "kbip":
        m, n = _expect_arity(params, 2, token)
        return complete_bipartite_graph(m, n)
    if token == "cube":
        (n,) = _expect_arity(params, 1, token)
        return hypercube_graph(n)
    raise ParseError(f"unknown family {token!r}")


def _expect_arity(params: list[int], arity: int, token: str) -> list[int]:
    if len(params) != arity:
        raise ParseError(f"family {token!r} takes {arity} parameter(s), got {len(params)}")
    return params


def _load_file(path: str) -> Graph:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except UnicodeDecodeError:
        raise ParseError(f"{path} is not an ASCII graph file") from None
    if path.endswith(".g6"):
        return parse_graph6(text)
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped:
            continue
        if len(stripped.split()) == 1 and stripped.lstrip("-").isdigit():
            return parse_edge_list(text)
        break
    return parse_graph6(text)


def load_input(spec: str) -> tuple[Graph, dict]:
    """Resolve a family spec or file path into a graph plus a report descriptor."""
    head = spec.split(":", 1)[0]
    if ":" in spec and head in _FAMILY_TOKENS:
        g = _build_family(head, spec.split(":", 1)[1])
        return g, {"input": spec, "kind": "family"}
    if os.path.exists(spec):
        return _load_file(spec), {"input": spec, "kind": "file"}
    raise ParseError(
        f"{spec!r} is neither a family spec ({', '.join(_FAMILY_TOKENS)}) nor an existing file")
