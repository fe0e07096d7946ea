"""Finite windows on the commutation graph of generator conjugates.

A vertex is a parallelism class of generator axes, encoded as a pair
(label, minimal coset representative of the label's star subgroup).  Two
classes are adjacent exactly when they admit commuting representatives,
which reduces to a double-parabolic membership test on the representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import InputError, ResourceLimitError
from .graphs import SimplicialGraph
from .words import (
    GroupElement,
    cayley_ball,
    coset_rep,
    in_double_parabolic,
    parse_word,
    sort_key,
)

TRUNCATION_RADIUS_BOUND = 4
TRUNCATION_VERTEX_CAP = 20_000


class ExtVertex(NamedTuple):
    label: str
    rep: GroupElement

    def encode(self) -> str:
        return f"{self.label}@{self.rep.literal()}"


def make_vertex(g: GroupElement, s) -> ExtVertex:
    g.graph.check_vertex(s)
    return ExtVertex(s, coset_rep(g, s))


def decode_vertex(graph: SimplicialGraph, name: str) -> ExtVertex:
    if "@" not in name:
        raise InputError(f"not an extension-vertex name: {name!r}")
    label, lit = name.split("@", 1)
    graph.check_vertex(label)
    rep = parse_word(graph, lit)
    if coset_rep(rep, label) != rep:
        raise InputError(f"{name!r}: representative is not coset-minimal")
    return ExtVertex(label, rep)


def vertex_sort_key(u: ExtVertex):
    return (u.rep.graph.index[u.label],) + sort_key(u.rep)


def adjacent(u: ExtVertex, v: ExtVertex) -> bool:
    """Commutation of the two conjugate generators."""
    graph = u.rep.graph
    if graph != v.rep.graph:
        raise InputError("ambient graph mismatch")
    if u == v:
        raise InputError("adjacency is only defined for distinct vertices")
    if not graph.adjacent(u.label, v.label):
        return False
    diff = u.rep.inverse() * v.rep
    return in_double_parabolic(diff, graph.star(u.label), graph.star(v.label))


def local_complex(g: GroupElement) -> frozenset[ExtVertex]:
    """The classes through one group element; induced graph is a copy of the base graph."""
    return frozenset(make_vertex(g, s) for s in g.graph.vertices)


def class_graph(graph: SimplicialGraph, classes) -> SimplicialGraph:
    """Graph on encoded class names with intrinsic adjacency."""
    ordered = sorted(classes, key=vertex_sort_key)
    names = [u.encode() for u in ordered]
    edges = []
    for i in range(len(ordered)):
        for j in range(i + 1, len(ordered)):
            if adjacent(ordered[i], ordered[j]):
                edges.append((names[i], names[j]))
    return SimplicialGraph(names, edges)


def support(elements) -> SimplicialGraph:
    """Union of the local complexes of a set of elements, as a graph on encoded names."""
    elements = list(elements)
    if not elements:
        raise InputError("support of an empty vertex set")
    graph = elements[0].graph
    classes = set()
    for g in elements:
        if g.graph != graph:
            raise InputError("ambient graph mismatch")
        classes |= local_complex(g)
    return class_graph(graph, classes)


@dataclass(frozen=True)
class ExtTruncation:
    ambient: SimplicialGraph
    radius: int
    graph: SimplicialGraph


def truncation(
    graph: SimplicialGraph,
    radius: int,
    max_radius=TRUNCATION_RADIUS_BOUND,
    vertex_cap=TRUNCATION_VERTEX_CAP,
) -> ExtTruncation:
    """All classes whose minimal representative has word length <= radius."""
    if radius > max_radius:
        raise ResourceLimitError(f"truncation radius {radius} exceeds bound {max_radius}")
    classes = set()
    for g in cayley_ball(graph, radius):
        for s in graph.vertices:
            classes.add(make_vertex(g, s))
            if len(classes) > vertex_cap:
                raise ResourceLimitError(f"truncation exceeds vertex cap {vertex_cap}")
    return ExtTruncation(graph, radius, class_graph(graph, classes))
