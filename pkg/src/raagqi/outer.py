"""Detection of the infinite-order outer automorphism generators.

Only two generator families can have infinite order: transvections (one
vertex's link inside another vertex's closed star) and partial conjugations
(a closed star whose removal disconnects the graph).  The outer automorphism
group is finite exactly when neither exists.  Inversions and graph
automorphisms are finite-order and reported as counts only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import SimplicialGraph


def transvection_pairs(graph: SimplicialGraph):
    """All ordered pairs (w, v), w != v, with lk(w) inside St(v), flagged adjacent."""
    out = []
    for w in graph.vertices:
        lk = graph.link(w)
        for v in graph.vertices:
            if v == w:
                continue
            if lk <= graph.star(v):
                out.append((w, v, graph.adjacent(w, v)))
    return out


def separating_stars(graph: SimplicialGraph):
    """Vertices whose closed star disconnects the rest, with the components."""
    out = []
    for v in graph.vertices:
        comps = graph.components(removed=graph.star(v))
        if len(comps) >= 2:
            out.append((v, comps))
    return out


def _two_star_cover(graph: SimplicialGraph) -> bool:
    """Is every maximal clique inside one of two closed stars?"""
    if len(graph.vertices) <= 1:
        return bool(graph.vertices)
    cliques = graph.maximal_cliques()
    stars = {v: graph.star(v) for v in graph.vertices}
    verts = graph.vertices
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            s1, s2 = stars[verts[i]], stars[verts[j]]
            if all(c <= s1 or c <= s2 for c in cliques):
                return True
    return False


@dataclass(frozen=True)
class OutProfile:
    graph: SimplicialGraph
    transvections: tuple
    partial_conjugation_sites: tuple
    finite: bool
    reconstruction_ok: bool
    connected: bool
    inversions: int
    graph_automorphisms: int


def out_profile(graph: SimplicialGraph, count_automorphisms=True) -> OutProfile:
    """Assemble the finiteness and reconstruction data for one graph."""
    tv = tuple(transvection_pairs(graph))
    pc = tuple(separating_stars(graph))
    finite = not tv and not pc
    reconstruction_ok = not pc and not _two_star_cover(graph)
    aut = len(graph.automorphisms()) if count_automorphisms else 0
    return OutProfile(
        graph=graph,
        transvections=tv,
        partial_conjugation_sites=pc,
        finite=finite,
        reconstruction_ok=reconstruction_ok,
        connected=graph.is_connected(),
        inversions=len(graph.vertices),
        graph_automorphisms=aut,
    )
