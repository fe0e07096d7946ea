"""Finite vertex sets of compact convex full subcomplexes, based at the identity.

A vertex set determines the subcomplex, so only vertices are stored.  The
normative convexity check is brute-force interval closure over all pairs; a
local checker (connectedness plus closure of distance-2 intervals around
common neighbors) is provided as an independent fast route and is tested
against the brute-force one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .errors import InputError, NotConvexError, ResourceLimitError
from .extension import ExtVertex, local_complex, support
from .graphs import SimplicialGraph, graph_from_payload, graph_to_payload
from .words import (
    GroupElement,
    coordinates,
    format_word,
    identity,
    parse_word,
    sort_key,
    word_distance,
)

VALIDATE_VERTEX_CAP = 500


def _neighbors(g: GroupElement):
    for v in g.graph.vertices:
        for s in (1, -1):
            yield g * GroupElement(g.graph, ((v, s),))


def interval(x: GroupElement, y: GroupElement) -> frozenset[GroupElement]:
    """All points on geodesics from x to y, by descent toward y."""
    dist = word_distance(x, y)
    layer = {x}
    out = {x}
    for k in range(dist):
        nxt = set()
        for z in layer:
            for w in _neighbors(z):
                if w not in out and word_distance(w, y) == dist - k - 1:
                    nxt.add(w)
        out |= nxt
        layer = nxt
    return frozenset(out)


@dataclass(frozen=True)
class ConvexComplex:
    graph: SimplicialGraph
    elements: tuple[GroupElement, ...]

    @cached_property
    def element_set(self) -> frozenset[GroupElement]:
        return frozenset(self.elements)

    def __contains__(self, g):
        return g in self.element_set

    def __len__(self):
        return len(self.elements)

    @cached_property
    def diameter(self) -> int:
        best = 0
        for i, x in enumerate(self.elements):
            for y in self.elements[i + 1 :]:
                best = max(best, word_distance(x, y))
        return best

    def classes(self) -> frozenset[ExtVertex]:
        out = set()
        for x in self.elements:
            out |= local_complex(x)
        return frozenset(out)

    def support_graph(self) -> SimplicialGraph:
        return support(self.elements)

    def widths(self) -> dict[ExtVertex, int]:
        """Number of complex vertices on any geodesic of each class meeting the complex."""
        coords = [coordinates(x) for x in self.elements]
        out = {}
        for c in sorted(self.classes(), key=lambda u: (u.rep.graph.index[u.label],) + sort_key(u.rep)):
            vals = [cc.get(c, 0) for cc in coords]
            out[c] = max(vals) - min(vals) + 1
        return out

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for x in self.elements for v in coordinates(x).values())


def validate(graph: SimplicialGraph, elements, vertex_cap=VALIDATE_VERTEX_CAP) -> ConvexComplex:
    """Check interval closure (brute force over pairs) and return the complex.

    Raises NotConvexError naming a violating triple, InputError when the
    identity is missing, ResourceLimitError above the vertex cap.
    """
    elems = set(elements)
    if not elems:
        raise InputError("complex must be nonempty")
    graphs = {g.graph for g in elems}
    if graphs != {graph}:
        raise InputError("complex elements must live over the given graph")
    if identity(graph) not in elems:
        raise InputError("complex must contain the identity")
    if len(elems) > vertex_cap:
        raise ResourceLimitError(f"complex has {len(elems)} vertices, cap is {vertex_cap}")
    ordered = sorted(elems, key=sort_key)
    for i, x in enumerate(ordered):
        for y in ordered[i + 1 :]:
            for z in interval(x, y):
                if z not in elems:
                    raise NotConvexError(x.literal(), z.literal(), y.literal())
    cc = ConvexComplex(graph, tuple(ordered))
    # implied by interval closure; kept as redundant assertions
    assert _is_connected(graph, elems)
    assert _squares_closed(graph, elems)
    return cc


def _is_connected(graph, elems):
    elems = set(elems)
    root = next(iter(elems))
    seen = {root}
    stack = [root]
    while stack:
        x = stack.pop()
        for y in _neighbors(x):
            if y in elems and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == elems


def _squares_closed(graph, elems):
    for x in elems:
        nbrs = [(v, s) for v in graph.vertices for s in (1, -1)
                if x * GroupElement(graph, ((v, s),)) in elems]
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                (a, sa), (b, sb) = nbrs[i], nbrs[j]
                if a != b and graph.adjacent(a, b):
                    corner = x * GroupElement(graph, ((a, sa), (b, sb)))
                    if corner not in elems:
                        return False
    return True


def is_interval_closed_local(graph: SimplicialGraph, elements) -> bool:
    """Fast convexity route: connected plus local distance-2 interval closure."""
    elems = set(elements)
    if not elems or not _is_connected(graph, elems):
        return False
    for x in elems:
        nbrs = [y for y in _neighbors(x) if y in elems]
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                y1, y2 = nbrs[i], nbrs[j]
                if word_distance(y1, y2) == 2:
                    if any(z not in elems for z in interval(y1, y2)):
                        return False
    return True


def is_interval_closed_brute(graph: SimplicialGraph, elements) -> bool:
    try:
        validate(graph, elements, vertex_cap=VALIDATE_VERTEX_CAP)
    except NotConvexError:
        return False
    return True


# -- JSON file format ----------------------------------------------------------


def complex_to_payload(cc: ConvexComplex) -> dict:
    return {
        "graph": graph_to_payload(cc.graph),
        "vertices": [format_word(x) for x in cc.elements],
    }


def complex_from_payload(payload) -> ConvexComplex:
    if not isinstance(payload, dict) or "graph" not in payload or "vertices" not in payload:
        raise InputError('complex payload must be {"graph": ..., "vertices": [...]}')
    graph = graph_from_payload(payload["graph"])
    elems = [parse_word(graph, lit) for lit in payload["vertices"]]
    return validate(graph, elems)


def load_complex(path) -> ConvexComplex:
    with open(path, "r", encoding="utf-8") as fh:
        return complex_from_payload(json.load(fh))


def save_complex(cc: ConvexComplex, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(complex_to_payload(cc), fh, indent=2, sort_keys=True)
        fh.write("\n")
