"""Finite simple graphs with the local operators used throughout the package.

Vertices are strings and their input order is part of the value: it fixes the
total order on generators that the word machinery uses for normal forms, so
two graphs with the same edges but different vertex order are different
values (though isomorphic).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import InputError, ResourceLimitError

CANONICAL_SIZE_BOUND = 24

_FORBIDDEN_CHARS = set(".'@ \t\n")


def _check_vertex_name(name):
    if not isinstance(name, str) or not name:
        raise InputError(f"vertex identifier must be a nonempty string, got {name!r}")
    bad = _FORBIDDEN_CHARS.intersection(name)
    if bad:
        raise InputError(
            f"vertex identifier {name!r} contains forbidden character {sorted(bad)[0]!r}"
        )


@dataclass(frozen=True, init=False)
class SimplicialGraph:
    """Finite simple graph; loops and duplicate edges are rejected."""

    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]

    def __init__(self, vertices, edges):
        vertices = tuple(vertices)
        for v in vertices:
            _check_vertex_name(v)
        if len(set(vertices)) != len(vertices):
            dup = next(v for v in vertices if vertices.count(v) > 1)
            raise InputError(f"duplicate vertex {dup!r}")
        index = {v: i for i, v in enumerate(vertices)}
        norm = set()
        for e in edges:
            u, v = e
            if u == v:
                raise InputError(f"loop edge {list(e)!r}")
            if u not in index or v not in index:
                raise InputError(f"edge {list(e)!r} has an endpoint that is not a vertex")
            pair = (u, v) if index[u] < index[v] else (v, u)
            if pair in norm:
                raise InputError(f"duplicate edge {list(e)!r}")
            norm.add(pair)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", frozenset(norm))

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adj(self) -> dict[str, frozenset[str]]:
        nbrs = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def __contains__(self, v):
        return v in self.index

    def __len__(self):
        return len(self.vertices)

    def check_vertex(self, v):
        if v not in self.index:
            raise InputError(f"unknown vertex {v!r}")

    def adjacent(self, u, v):
        return v in self.adj[u]

    def link(self, v) -> frozenset[str]:
        self.check_vertex(v)
        return self.adj[v]

    def star(self, v) -> frozenset[str]:
        self.check_vertex(v)
        return self.adj[v] | {v}

    def orthogonal_complement(self, subset) -> frozenset[str]:
        """Vertices adjacent to every member of `subset`; all of V for the empty set."""
        subset = list(subset)
        for v in subset:
            self.check_vertex(v)
        if not subset:
            return frozenset(self.vertices)
        out = set(self.adj[subset[0]])
        for v in subset[1:]:
            out &= self.adj[v]
        return frozenset(out)

    def induced(self, subset) -> "SimplicialGraph":
        keep = set(subset)
        for v in keep:
            self.check_vertex(v)
        verts = [v for v in self.vertices if v in keep]
        edges = [e for e in self.edges if e[0] in keep and e[1] in keep]
        return SimplicialGraph(verts, edges)

    def components(self, removed=()) -> list[frozenset[str]]:
        """Connected components of the full subgraph on V minus `removed`, in vertex order."""
        removed = set(removed)
        seen = set(removed)
        out = []
        for root in self.vertices:
            if root in seen:
                continue
            comp = {root}
            stack = [root]
            seen.add(root)
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.add(y)
                        stack.append(y)
            out.append(frozenset(comp))
        return out

    def is_connected(self):
        return len(self.vertices) <= 1 or len(self.components()) == 1

    def is_clique(self, subset):
        subset = list(subset)
        return all(self.adjacent(u, v) for u, v in combinations(subset, 2))

    def maximal_cliques(self) -> list[frozenset[str]]:
        """Bron-Kerbosch with pivoting, deterministic order."""
        out = []

        def expand(r, p, x):
            if not p and not x:
                out.append(frozenset(r))
                return
            pivot = max(p | x, key=lambda v: (len(self.adj[v] & p), -self.index[v]))
            for v in sorted(p - self.adj[pivot], key=self.index.get):
                expand(r | {v}, p & self.adj[v], x & self.adj[v])
                p = p - {v}
                x = x | {v}

        if self.vertices:
            expand(set(), set(self.vertices), set())
        return out

    def max_clique_size(self):
        if not self.vertices:
            return 0
        return max(len(c) for c in self.maximal_cliques())

    def join_decompose(self):
        """Split into the maximal clique factor plus irreducible join factors.

        Join factors are the connected components of the complement graph;
        the clique factor collects the components that are single vertices.
        """
        if not self.vertices:
            raise InputError("join decomposition of the empty graph")
        n = len(self.vertices)
        comp_adj = {
            v: set(self.vertices) - self.adj[v] - {v} for v in self.vertices
        }
        seen = set()
        clique = set()
        factors = []
        for root in self.vertices:
            if root in seen:
                continue
            comp = {root}
            stack = [root]
            seen.add(root)
            while stack:
                x = stack.pop()
                for y in comp_adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.add(y)
                        stack.append(y)
            if len(comp) == 1:
                clique |= comp
            else:
                factors.append(frozenset(comp))
        return frozenset(clique), factors

    # -- canonical labeling ------------------------------------------------

    def _canonical_search(self, max_vertices):
        if len(self.vertices) > max_vertices:
            raise ResourceLimitError(
                f"canonical labeling limited to {max_vertices} vertices, got {len(self.vertices)}"
            )
        n = len(self.vertices)
        masks = [0] * n
        for u, v in self.edges:
            i, j = self.index[u], self.index[v]
            masks[i] |= 1 << j
            masks[j] |= 1 << i

        def refine(cells):
            while True:
                for ci, cell in enumerate(cells):
                    if len(cell) == 1:
                        continue
                    cellmasks = [sum(1 << v for v in c) for c in cells]
                    sigs = {}
                    for v in cell:
                        sig = tuple((masks[v] & cm).bit_count() for cm in cellmasks)
                        sigs.setdefault(sig, []).append(v)
                    if len(sigs) > 1:
                        cells[ci : ci + 1] = [sigs[s] for s in sorted(sigs)]
                        break
                else:
                    return cells

        best = [None]
        labelings = []

        def walk(cells):
            cells = refine(cells)
            split = next((c for c in cells if len(c) > 1), None)
            if split is None:
                pos = {}
                for p, cell in enumerate(cells):
                    pos[cell[0]] = p
                enc = tuple(
                    sorted(
                        tuple(sorted((pos[self.index[u]], pos[self.index[v]])))
                        for u, v in self.edges
                    )
                )
                if best[0] is None or enc < best[0]:
                    best[0] = enc
                    labelings.clear()
                    labelings.append(pos)
                elif enc == best[0]:
                    labelings.append(pos)
                return
            ci = cells.index(split)
            for v in split:
                rest = [u for u in split if u != v]
                walk(cells[:ci] + [[v], rest] + cells[ci + 1 :])

        if n:
            walk([list(range(n))])
            return best[0], labelings
        return (), [{}]

    def canonical_form(self, max_vertices=CANONICAL_SIZE_BOUND) -> str:
        """Graph-isomorphism-invariant encoding: equal iff the graphs are isomorphic."""
        enc, _ = self._canonical_search(max_vertices)
        body = ",".join(f"{i}-{j}" for i, j in enc)
        return f"{len(self.vertices)}|{body}"

    def automorphisms(self, max_vertices=CANONICAL_SIZE_BOUND) -> list[dict[str, str]]:
        """All graph automorphisms, as vertex maps."""
        _, labelings = self._canonical_search(max_vertices)
        base = labelings[0]
        by_pos = {p: i for i, p in base.items()}
        perms = set()
        for lab in labelings:
            perms.add(tuple(by_pos[lab[i]] for i in range(len(self.vertices))))
        out = []
        for perm in sorted(perms):
            out.append({self.vertices[i]: self.vertices[perm[i]] for i in range(len(perm))})
        return out


# -- module-level operations matching the library surface ---------------------


def neighborhoods(graph: SimplicialGraph, v):
    """(link, star) of a vertex."""
    return graph.link(v), graph.star(v)


def orthogonal_complement(graph: SimplicialGraph, subset):
    return graph.orthogonal_complement(subset)


def join_decompose(graph: SimplicialGraph):
    return graph.join_decompose()


def canonical_form(graph: SimplicialGraph, max_vertices=CANONICAL_SIZE_BOUND):
    return graph.canonical_form(max_vertices)


def complement_components(graph: SimplicialGraph, removed):
    for v in removed:
        graph.check_vertex(v)
    return graph.components(removed)


def induced_copies_cover(pattern: SimplicialGraph, host: SimplicialGraph):
    """Check every host vertex lies in an induced copy of `pattern` in `host`.

    Returns (True, None) or (False, uncovered_vertex).
    """
    pn = len(pattern.vertices)
    covered = set()
    if pn == 0 or pn > len(host.vertices):
        return (pn == 0, None if pn == 0 else host.vertices[0])
    pverts = sorted(pattern.vertices, key=lambda v: -len(pattern.adj[v]))

    def extend(mapping, used):
        if len(mapping) == pn:
            covered.update(used)
            return
        pv = pverts[len(mapping)]
        for hv in host.vertices:
            if hv in used:
                continue
            ok = True
            for qv, hq in mapping.items():
                if pattern.adjacent(pv, qv) != host.adjacent(hv, hq):
                    ok = False
                    break
            if ok:
                mapping[pv] = hv
                extend(mapping, used | {hv})
                del mapping[pv]

    extend({}, frozenset())
    for v in host.vertices:
        if v not in covered:
            return False, v
    return True, None


# -- JSON file format ----------------------------------------------------------


def graph_to_payload(graph: SimplicialGraph) -> dict:
    pairs = sorted(graph.edges, key=lambda e: (graph.index[e[0]], graph.index[e[1]]))
    return {"vertices": list(graph.vertices), "edges": [list(e) for e in pairs]}


def graph_from_payload(payload) -> SimplicialGraph:
    if not isinstance(payload, dict) or "vertices" not in payload or "edges" not in payload:
        raise InputError('graph payload must be {"vertices": [...], "edges": [...]}')
    edges = []
    for e in payload["edges"]:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise InputError(f"edge {e!r} must be a pair")
        edges.append(tuple(e))
    return SimplicialGraph(payload["vertices"], edges)


def load_graph(path) -> SimplicialGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_payload(json.load(fh))


def save_graph(graph: SimplicialGraph, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(graph_to_payload(graph), fh, indent=2, sort_keys=True)
        fh.write("\n")
