"""Exact arithmetic in the group presented by a simple graph.

Generators are the graph's vertices; two generators commute exactly when
adjacent.  Elements are stored as canonical words: the lexicographically
least fully-reduced word in the commutation-shuffle class, under the
generator order given by the graph's vertex order with (v, +1) < (v, -1).
Equal elements therefore compare equal structurally.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import InputError, ResourceLimitError
from .graphs import SimplicialGraph

BALL_RADIUS_BOUND = 6
BALL_ELEMENT_CAP = 500_000

Letter = tuple[str, int]


@dataclass(frozen=True)
class GroupElement:
    graph: SimplicialGraph
    word: tuple[Letter, ...]

    @cached_property
    def word_length(self) -> int:
        return len(self.word)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if self.graph != other.graph:
            raise InputError("ambient graph mismatch in multiplication")
        return normal_form(self.graph, self.word + other.word)

    def inverse(self) -> "GroupElement":
        flipped = tuple((v, -s) for v, s in reversed(self.word))
        return normal_form(self.graph, flipped)

    def is_identity(self) -> bool:
        return not self.word

    def support(self) -> frozenset[str]:
        return frozenset(v for v, _ in self.word)

    def literal(self) -> str:
        return format_word(self)

    def __repr__(self):
        return f"<{self.literal() or 'id'}>"


def identity(graph: SimplicialGraph) -> GroupElement:
    return GroupElement(graph, ())


def generator(graph: SimplicialGraph, v, sign=1) -> GroupElement:
    graph.check_vertex(v)
    if sign not in (1, -1):
        raise InputError(f"sign must be +1 or -1, got {sign!r}")
    return GroupElement(graph, ((v, sign),))


def _commutes(graph, a, b):
    # same generator always shuffles past itself
    return a == b or graph.adjacent(a, b)


def _reduce(graph, letters):
    word = list(letters)
    changed = True
    while changed:
        changed = False
        for i in range(len(word)):
            v, s = word[i]
            for j in range(i + 1, len(word)):
                w, t = word[j]
                if w == v and t == -s:
                    del word[j]
                    del word[i]
                    changed = True
                    break
                if not _commutes(graph, v, w):
                    break
            if changed:
                break
    return word


def _lex_least(graph, word):
    index = graph.index
    out = []
    rem = list(word)
    while rem:
        best_i = None
        best_key = None
        for i, (v, s) in enumerate(rem):
            movable = True
            for w, _ in rem[:i]:
                if w == v or not graph.adjacent(w, v):
                    movable = False
                    break
            if movable:
                key = (index[v], 0 if s > 0 else 1)
                if best_key is None or key < best_key:
                    best_key = key
                    best_i = i
        out.append(rem.pop(best_i))
    return tuple(out)


def normal_form(graph: SimplicialGraph, letters) -> GroupElement:
    """Canonical representative of a raw letter sequence.

    Letters are (vertex, sign) pairs; bare vertex names are read as positive.
    """
    seq = []
    for item in letters:
        if isinstance(item, str):
            item = (item, 1)
        v, s = item
        graph.check_vertex(v)
        if s not in (1, -1):
            raise InputError(f"letter sign must be +1 or -1, got {s!r}")
        seq.append((v, s))
    return GroupElement(graph, _lex_least(graph, _reduce(graph, seq)))


# -- word literals ------------------------------------------------------------


def parse_word(graph: SimplicialGraph, text: str) -> GroupElement:
    """Parse the dotted literal syntax: "1.3'.2" means 1 * 3^-1 * 2, "" is the identity."""
    if text == "":
        return identity(graph)
    letters = []
    for tok in text.split("."):
        if not tok:
            raise InputError(f"empty token in word literal {text!r}")
        if tok.endswith("'"):
            letters.append((tok[:-1], -1))
        else:
            letters.append((tok, 1))
    return normal_form(graph, letters)


def format_word(g: GroupElement) -> str:
    return ".".join(v + ("'" if s < 0 else "") for v, s in g.word)


def sort_key(g: GroupElement):
    index = g.graph.index
    return (len(g.word), tuple((index[v], 0 if s > 0 else 1) for v, s in g.word))


# -- metrics and parabolic machinery ------------------------------------------


def parabolic_split(g: GroupElement, subset, side="left"):
    """Factor off the maximal divisor supported in `subset`.

    side="left": g = part * rest; side="right": g = rest * part.
    Returns (part, rest) in both cases.
    """
    graph = g.graph
    subset = frozenset(subset)
    for v in subset:
        graph.check_vertex(v)
    if side not in ("left", "right"):
        raise InputError(f"side must be 'left' or 'right', got {side!r}")
    word = list(g.word)
    collected = []
    changed = True
    while changed:
        changed = False
        rng = range(len(word)) if side == "left" else range(len(word) - 1, -1, -1)
        for i in rng:
            v, s = word[i]
            if v not in subset:
                continue
            blockers = word[:i] if side == "left" else word[i + 1 :]
            if all(_commutes(graph, w, v) for w, _ in blockers):
                if side == "left":
                    collected.append(word.pop(i))
                else:
                    collected.insert(0, word.pop(i))
                changed = True
                break
    part = normal_form(graph, collected)
    rest = normal_form(graph, word)
    return part, rest


def coset_rep(g: GroupElement, s) -> GroupElement:
    """Minimal representative of the left coset of the star subgroup of `s`."""
    g.graph.check_vertex(s)
    _, rest = parabolic_split(g, g.graph.star(s), side="right")
    return rest


def in_double_parabolic(g: GroupElement, a_set, b_set) -> bool:
    """Membership test for the product of two standard parabolic subgroups."""
    part, rest = parabolic_split(g, a_set, side="left")
    del part
    return rest.support() <= frozenset(b_set)


def _walk_coordinates(graph: SimplicialGraph, letters):
    coords: dict[tuple[str, GroupElement], int] = {}
    prefix = identity(graph)
    for v, s in letters:
        key = (v, coset_rep(prefix, v))
        coords[key] = coords.get(key, 0) + s
        if coords[key] == 0:
            del coords[key]
        prefix = prefix * GroupElement(graph, ((v, s),))
    return coords


def coordinates(g: GroupElement) -> dict[tuple[str, GroupElement], int]:
    """Signed hyperplane-crossing counts, one integer per parallelism class.

    Keys are (label, minimal coset representative) pairs; unlisted classes
    are 0.  Taken together the values give a distance-preserving embedding
    into l^1.
    """
    return _walk_coordinates(g.graph, g.word)


def coordinate(g: GroupElement, label, rep: GroupElement) -> int:
    return coordinates(g).get((label, rep), 0)


def syllable_length(g: GroupElement) -> int:
    """Minimal number of generator-power factors; counted via distinct crossing classes."""
    classes = set()
    prefix = identity(g.graph)
    for v, s in g.word:
        classes.add((v, coset_rep(prefix, v)))
        prefix = prefix * GroupElement(g.graph, ((v, s),))
    return len(classes)


def geodesic_length(g: GroupElement):
    """(word length, syllable length) of the canonical form."""
    return g.word_length, syllable_length(g)


def word_distance(g: GroupElement, h: GroupElement) -> int:
    return (g.inverse() * h).word_length


def syllable_distance(g: GroupElement, h: GroupElement) -> int:
    return syllable_length(g.inverse() * h)


def cayley_ball(
    graph: SimplicialGraph,
    radius: int,
    max_radius=BALL_RADIUS_BOUND,
    element_cap=BALL_ELEMENT_CAP,
) -> tuple[GroupElement, ...]:
    """All elements of word length <= radius, sorted canonically."""
    if radius > max_radius:
        raise ResourceLimitError(f"ball radius {radius} exceeds bound {max_radius}")
    ball = {identity(graph)}
    sphere = [identity(graph)]
    for r in range(1, radius + 1):
        nxt = set()
        for g in sphere:
            for v in graph.vertices:
                for s in (1, -1):
                    h = g * GroupElement(graph, ((v, s),))
                    if h.word_length == r and h not in ball:
                        nxt.add(h)
        ball |= nxt
        if len(ball) > element_cap:
            raise ResourceLimitError(f"ball exceeds element cap {element_cap}")
        sphere = sorted(nxt, key=sort_key)
    return tuple(sorted(ball, key=sort_key))


def level_flip(graph: SimplicialGraph, s, g: GroupElement) -> GroupElement:
    """Swap the 0- and 1-levels transverse to the s-geodesic through the identity."""
    graph.check_vertex(s)
    c = coordinate(g, s, identity(graph))
    if c == 0:
        return generator(graph, s) * g
    if c == 1:
        return generator(graph, s, -1) * g
    return g
