"""Finite-index subgroups built from non-negative convex complexes.

Each class meeting the complex contributes one generator: the class
translation raised to the complex's width along that class, conjugated back
to the class's base point.  The complex vertex set is then a strict
fundamental domain for the subgroup's left action, which is what
verify_subgroup checks at desk scale, alongside the commutation pattern and
injectivity on short products.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .complexes import ConvexComplex
from .errors import InputError, SearchExhaustedError, VerificationError
from .extension import ExtVertex, class_graph, decode_vertex, vertex_sort_key
from .graphs import SimplicialGraph
from .words import GroupElement, cayley_ball, coordinate, identity, normal_form


def _conjugated_power(alpha: GroupElement, base: str, power: int) -> GroupElement:
    graph = alpha.graph
    letters = list(alpha.word) + [(base, 1)] * power + [(v, -s) for v, s in reversed(alpha.word)]
    return normal_form(graph, letters)


@dataclass(frozen=True)
class SpecialSubgroup:
    ambient: SimplicialGraph
    generators: tuple[tuple[GroupElement, str, int], ...]
    defining_graph: SimplicialGraph
    source: ConvexComplex
    index: int

    @cached_property
    def generator_words(self) -> tuple[GroupElement, ...]:
        return tuple(_conjugated_power(a, b, n) for a, b, n in self.generators)


def theta(complex_: ConvexComplex) -> SpecialSubgroup:
    """One generator per class meeting the complex; index = vertex count."""
    if not complex_.is_nonnegative():
        raise InputError("complex must be non-negative")
    widths = complex_.widths()
    defining = complex_.support_graph()
    gens = []
    for name in defining.vertices:
        u = decode_vertex(complex_.graph, name)
        gens.append((u.rep, u.label, widths[u]))
    return SpecialSubgroup(
        ambient=complex_.graph,
        generators=tuple(gens),
        defining_graph=defining,
        source=complex_,
        index=len(complex_.elements),
    )


def _product_table(sub: SpecialSubgroup, abstract_radius, ambient_bound=None, slack=None):
    """BFS over products of the generators, keyed by ambient normal form.

    Returns (table, collision) where table maps ambient elements to abstract
    normal forms over the defining graph and collision is a pair of distinct
    abstract elements sharing an ambient value (None when injective).  When
    ambient_bound is set, expansion stops past ambient_bound + slack; every
    subgroup element whose ambient and abstract lengths are both within
    abstract_radius/ambient_bound is still found, the slack only admits
    detours through slightly longer prefixes.
    """
    words = sub.generator_words
    names = sub.defining_graph.vertices
    if slack is None:
        slack = max((w.word_length for w in words), default=0)
    amb0 = identity(sub.ambient)
    abs0 = identity(sub.defining_graph)
    table = {amb0: abs0}
    collision = None
    queue = deque([(amb0, abs0)])
    while queue:
        amb, abst = queue.popleft()
        if abst.word_length >= abstract_radius:
            continue
        for i, w in enumerate(words):
            for sign in (1, -1):
                step = w if sign == 1 else w.inverse()
                amb2 = amb * step
                if ambient_bound is not None and amb2.word_length > ambient_bound + slack:
                    continue
                abst2 = abst * GroupElement(sub.defining_graph, ((names[i], sign),))
                if abst2.word_length != abst.word_length + 1:
                    continue
                seen = table.get(amb2)
                if seen is None:
                    table[amb2] = abst2
                    queue.append((amb2, abst2))
                elif seen != abst2 and collision is None:
                    collision = (seen, abst2)
    return table, collision


def retraction(sub: SpecialSubgroup, g: GroupElement, bound=None):
    """Factor g = gamma * k with gamma in the subgroup and k in the complex."""
    if g.graph != sub.ambient:
        raise InputError("element lives over a different graph")
    if bound is None:
        bound = g.word_length + sub.source.diameter
    table, _ = _product_table(sub, abstract_radius=bound, ambient_bound=bound)
    hits = []
    for k in sub.source.elements:
        gamma = g * k.inverse()
        if gamma in table:
            hits.append((gamma, k))
    if not hits:
        raise SearchExhaustedError(
            f"no factorization of {g.literal()!r} found within search bound {bound}"
        )
    if len(hits) > 1:
        raise VerificationError("fundamental-domain", [ (a.literal(), b.literal()) for a, b in hits ])
    return hits[0]


@dataclass(frozen=True)
class VerifyReport:
    radius: int
    ball_size: int
    translates: int
    product_bound: int
    products_checked: int


def verify_subgroup(sub: SpecialSubgroup, radius: int, product_bound=3) -> VerifyReport:
    """Desk-scale verification; raises VerificationError naming a witness.

    (a) the subgroup translates of the complex partition the ambient ball,
    (b) generators commute exactly along the defining graph's edges,
    (c) short products are pairwise distinct unless equal abstractly.
    """
    ball = cayley_ball(sub.ambient, radius)
    bound = radius + sub.source.diameter
    table, collision = _product_table(sub, abstract_radius=bound, ambient_bound=bound)
    for g in ball:
        covers = []
        for k in sub.source.elements:
            gamma = g * k.inverse()
            if gamma in table:
                covers.append((gamma.literal(), k.literal()))
        if len(covers) != 1:
            kind = "overlap" if covers else "uncovered"
            raise VerificationError(
                "covering", {"element": g.literal(), "translates": covers, "kind": kind}
            )

    words = sub.generator_words
    names = sub.defining_graph.vertices
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            commute = words[i] * words[j] == words[j] * words[i]
            edge = sub.defining_graph.adjacent(names[i], names[j])
            if commute != edge:
                raise VerificationError(
                    "commutation",
                    {"pair": (names[i], names[j]), "commute": commute, "edge": edge},
                )

    prod_table, collision = _product_table(sub, abstract_radius=product_bound)
    if collision is not None:
        raise VerificationError(
            "injectivity", {"words": (collision[0].literal(), collision[1].literal())}
        )

    return VerifyReport(
        radius=radius,
        ball_size=len(ball),
        translates=len(table),
        product_bound=product_bound,
        products_checked=len(prod_table),
    )


# -- embeddings from extension-graph subcomplexes ------------------------------


@dataclass(frozen=True)
class ExtEmbedding:
    ambient: SimplicialGraph
    defining_graph: SimplicialGraph
    generators: tuple[tuple[GroupElement, str, int], ...]
    intervals: dict[str, tuple[int, int]]

    @cached_property
    def generator_words(self) -> tuple[GroupElement, ...]:
        return tuple(_conjugated_power(a, b, n) for a, b, n in self.generators)


def embed_from_ext_subcomplex(graph: SimplicialGraph, classes) -> ExtEmbedding:
    """Subgroup generators realizing the induced graph on a finite class set.

    For each class, the non-adjacent classes project to an interval of the
    class's axis; the generator is the class translation to the power
    (interval length + 1).  No finite index is claimed.
    """
    decoded = []
    for m in classes:
        if isinstance(m, str):
            m = decode_vertex(graph, m)
        decoded.append(ExtVertex(*m))
    decoded = sorted(set(decoded), key=vertex_sort_key)
    if not decoded:
        raise InputError("empty class set")
    defining = class_graph(graph, decoded)
    gens = []
    intervals = {}
    for u in decoded:
        others = [
            w
            for w in decoded
            if w != u and not defining.adjacent(u.encode(), w.encode())
        ]
        if others:
            projs = [coordinate(w.rep, u.label, u.rep) for w in others]
            a, top = min(projs), max(projs)
            k = top - a
        else:
            a, k = 0, 0
        intervals[u.encode()] = (a, k)
        gens.append((u.rep, u.label, k + 1))
    return ExtEmbedding(
        ambient=graph,
        defining_graph=defining,
        generators=tuple(gens),
        intervals=intervals,
    )


def separation_side(emb: ExtEmbedding, name: str, g: GroupElement) -> bool:
    """Is g in the avoided region of the named class (outside its interval)?"""
    u = decode_vertex(emb.ambient, name)
    a, k = emb.intervals[name]
    c = coordinate(g, u.label, u.rep)
    return c <= a - 1 or c >= a + k + 1
