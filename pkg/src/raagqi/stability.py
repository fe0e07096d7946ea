"""Closed-form stability criteria for subgraphs.

A full subgraph is stable when its standard subcomplexes are preserved by
every self-quasi-isometry up to bounded distance; the criteria below compute
this without touching any quasi-isometry.  Only cliques admit a clean
characterization — the non-clique case has genuine counterexamples and is
deliberately not exposed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graphs import SimplicialGraph


def minimal_stable_supergraph(graph: SimplicialGraph, w) -> frozenset[str]:
    """Vertex set of the smallest stable full subgraph containing w.

    Equals {w' : lk(w) inside St(w')}; always contains w itself.
    """
    graph.check_vertex(w)
    lk = graph.link(w)
    return frozenset(v for v in graph.vertices if lk <= graph.star(v))


def is_stable_clique(graph: SimplicialGraph, clique) -> bool:
    """Stability test for a clique: no member's link fits inside an outside star."""
    clique = frozenset(clique)
    for v in clique:
        graph.check_vertex(v)
    if not graph.is_clique(clique):
        raise InputError(f"{sorted(clique)!r} is not a clique; criterion only applies to cliques")
    for w in clique:
        lk = graph.link(w)
        for v in graph.vertices:
            if v not in clique and lk <= graph.star(v):
                return False
    return True


@dataclass(frozen=True)
class CliqueCase:
    gamma_w: frozenset[str]
    star_stable: frozenset[str]


@dataclass(frozen=True)
class SplitCase:
    gamma_w: frozenset[str]
    gamma1: frozenset[str]
    gamma2: frozenset[str]


def vertex_dichotomy(graph: SimplicialGraph, w):
    """Either the minimal stable supergraph is a clique (then St(w) is stable),
    or lk(w) and its double link give a stable join with disconnected second factor."""
    graph.check_vertex(w)
    gamma_w = minimal_stable_supergraph(graph, w)
    if graph.is_clique(gamma_w):
        return CliqueCase(gamma_w=gamma_w, star_stable=graph.star(w))
    gamma1 = graph.link(w)
    gamma2 = graph.orthogonal_complement(gamma1)
    return SplitCase(gamma_w=gamma_w, gamma1=gamma1, gamma2=gamma2)
