"""Finite convex subcomplexes of the universal cover of a Salvetti complex.

Vertices of the universal cover are group elements (normal forms).  A vertex
set is convex exactly when it is interval-closed, which is how hulls are
computed here.  Hyperplanes are identified globally by a key ``(c, v)``:
``v`` is the label of the dual edges and ``c`` the shortest element of the
coset ``p A_link(v)`` for any dual edge ``(p, p v)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .complexes import InvariantError
from .raag import (
    DefiningGraph, IDENTITY, InputError, Letter, NormalForm,
    distance, in_standard_subgroup, interval, inverse_word, multiply, normal_form,
)

HyperplaneKey = tuple  # (NormalForm, str)


def shortlex_key(graph: DefiningGraph, g: NormalForm):
    return (g.length, [graph.letter_key(x) for x in g.letters])


@dataclass(frozen=True)
class DevelopedComplex:
    graph: DefiningGraph
    vertices: frozenset

    def __contains__(self, g) -> bool:
        return g in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def sorted_vertices(self) -> list[NormalForm]:
        return sorted(self.vertices, key=lambda g: shortlex_key(self.graph, g))

    def edges(self) -> list[tuple[NormalForm, str]]:
        """Edges ``(p, v)`` meaning ``p -> p v``."""
        out = []
        for p in self.sorted_vertices():
            for v in self.graph.vertices:
                if multiply(self.graph, p, (Letter(v, 1),)) in self.vertices:
                    out.append((p, v))
        return out

    def is_convex(self) -> bool:
        vs = list(self.vertices)
        return all(interval(self.graph, a, b) <= self.vertices for a, b in combinations(vs, 2))


@dataclass(frozen=True)
class Hyperplane:
    label: str
    dual_edges: frozenset
    canonical_key: tuple

    def __hash__(self):
        return hash(self.canonical_key)

    def __eq__(self, other):
        return isinstance(other, Hyperplane) and self.canonical_key == other.canonical_key


@dataclass(frozen=True)
class FrameData:
    hyperplane: Hyperplane
    line_base: NormalForm
    line_label: str
    segment_length: int
    cross_section: frozenset  # elements h of A_link(v) with line_base*h in K
    levels: tuple  # exponents j with line_base*v^j in K


def coset_rep(graph: DefiningGraph, p: NormalForm, gens: Iterable[str]) -> NormalForm:
    """Shortest element of the coset ``p A_gens``."""
    gens = set(gens)
    letters = list(p.letters)
    changed = True
    while changed:
        changed = False
        for i in range(len(letters) - 1, -1, -1):
            x = letters[i]
            if x.gen in gens and all(graph.commute(x.gen, y.gen) for y in letters[i + 1:]):
                del letters[i]
                changed = True
                break
    return normal_form(graph, letters)


def edge_key(graph: DefiningGraph, p: NormalForm, v: str) -> HyperplaneKey:
    """Global key of the hyperplane dual to the edge ``p -> p v``."""
    return (coset_rep(graph, p, graph.link(v)), v)


def step_key(graph: DefiningGraph, p: NormalForm, x: Letter) -> HyperplaneKey:
    """Key of the hyperplane crossed when stepping from ``p`` along ``x``."""
    if x.sign > 0:
        return edge_key(graph, p, x.gen)
    return edge_key(graph, multiply(graph, p, (x,)), x.gen)


def separating_keys(graph: DefiningGraph, a: NormalForm, b: NormalForm) -> set:
    """Keys of all hyperplanes separating ``a`` from ``b``."""
    w = multiply(graph, inverse_word(a.letters), b)
    out = set()
    p = a
    for x in w.letters:
        out.add(step_key(graph, p, x))
        p = multiply(graph, p, (x,))
    return out


def develop_hull(graph: DefiningGraph, points: Iterable[NormalForm]) -> DevelopedComplex:
    pts = {normal_form(graph, p) for p in points}
    if not pts:
        raise InputError("hull of an empty set")
    done_pairs = set()
    while True:
        new = set()
        vs = sorted(pts, key=lambda g: shortlex_key(graph, g))
        for a, b in combinations(vs, 2):
            if (a, b) in done_pairs:
                continue
            done_pairs.add((a, b))
            new |= interval(graph, a, b) - pts
        if not new:
            return DevelopedComplex(graph, frozenset(pts))
        pts |= new


def gate(x: NormalForm, D: DevelopedComplex) -> NormalForm:
    g = D.graph
    best = None
    ties = []
    for d in D.vertices:
        dist = distance(g, d, x)
        if best is None or dist < best:
            best, ties = dist, [d]
        elif dist == best:
            ties.append(d)
    if len(ties) != 1:
        raise InvariantError(f"gate of {x} is not unique; complex is not convex")
    return ties[0]


def gate_projection(D: DevelopedComplex, D2: DevelopedComplex) -> DevelopedComplex:
    """Projection of ``D2`` onto ``D``: hull of the gates of its vertices."""
    return develop_hull(D.graph, {gate(x, D) for x in D2.vertices})


def hyperplanes_of(D: DevelopedComplex) -> list[Hyperplane]:
    g = D.graph
    parent: dict = {}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    edges = D.edges()
    for e in edges:
        parent[e] = e
    for p, v in edges:
        for u in g.link(v):
            for s in (1, -1):
                q = multiply(g, p, (Letter(u, s),))
                if q in D.vertices and (q, v) in parent:
                    ra, rb = find((p, v)), find((q, v))
                    if ra != rb:
                        parent[ra] = rb
    classes: dict = {}
    for e in edges:
        classes.setdefault(find(e), set()).add(e)
    out = []
    for members in classes.values():
        p, v = next(iter(members))
        key = edge_key(g, p, v)
        if any(edge_key(g, q, v) != key for q, _ in members):
            raise InvariantError("square-transport class is not a single hyperplane")
        out.append(Hyperplane(v, frozenset(members), key))
    out.sort(key=lambda h: (shortlex_key(g, h.canonical_key[0]), g.index(h.label)))
    return out


def _side(H: Hyperplane, D: DevelopedComplex, start: NormalForm) -> set:
    g = D.graph
    blocked = set(H.dual_edges)
    seen = {start}
    todo = [start]
    while todo:
        p = todo.pop()
        for v in g.vertices:
            for s in (1, -1):
                q = multiply(g, p, (Letter(v, s),))
                if q not in D.vertices or q in seen:
                    continue
                e = (p, v) if s > 0 else (q, v)
                if e in blocked:
                    continue
                seen.add(q)
                todo.append(q)
    return seen


def separates(H: Hyperplane, a: NormalForm, b: NormalForm, D: DevelopedComplex) -> bool:
    if a not in D.vertices or b not in D.vertices:
        raise InputError("points must lie in the development")
    return b not in _side(H, D, a)


def crosses(H: Hyperplane, H2: Hyperplane, D: DevelopedComplex) -> bool:
    g = D.graph
    if H2.label not in g.link(H.label):
        return False
    for p, v in H.dual_edges:
        for s in (1, -1):
            q = multiply(g, p, (Letter(H2.label, s),))
            e = (p, H2.label) if s > 0 else (q, H2.label)
            if e in H2.dual_edges and (q, v) in H.dual_edges:
                return True
    return False


def keys_cross(graph: DefiningGraph, k1: HyperplaneKey, k2: HyperplaneKey) -> bool:
    """Whether two hyperplanes of the universal cover intersect.

    Hyperplanes ``(c, v)`` and ``(d, w)`` cross iff ``v, w`` are adjacent and
    ``c^-1 d`` lies in ``A_link(v) A_link(w)``.
    """
    (c, v), (d, w) = k1, k2
    if not graph.adjacent(v, w):
        return False
    h = multiply(graph, inverse_word(c.letters), d)
    # strip a suffix from A_link(w) then test membership in A_link(v)
    return in_standard_subgroup(graph, coset_rep(graph, h, graph.link(w)), graph.link(v))


def collateral(H: Hyperplane | HyperplaneKey, H2: Hyperplane | HyperplaneKey, graph: DefiningGraph) -> bool:
    k1 = H.canonical_key if isinstance(H, Hyperplane) else H
    k2 = H2.canonical_key if isinstance(H2, Hyperplane) else H2
    (p, v), (q, w) = k1, k2
    if v != w:
        return False
    h = multiply(graph, inverse_word(p.letters), q)
    return in_standard_subgroup(graph, h, graph.star(v))


def collateral_key(graph: DefiningGraph, key: HyperplaneKey):
    """Label of the collateral class of a hyperplane: its standard-line coset."""
    p, v = key
    return (coset_rep(graph, p, graph.star(v)), v)


def frame_in(H: Hyperplane, K: DevelopedComplex) -> FrameData:
    g = K.graph
    v = H.label
    p = min((e[0] for e in H.dual_edges), key=lambda q: shortlex_key(g, q))
    link = g.link(v)
    star = g.star(v)
    frame = []
    for x in K.vertices:
        h = multiply(g, inverse_word(p.letters), x)
        if in_standard_subgroup(g, h, star):
            j = sum(l.sign for l in h.letters if l.gen == v)
            side = normal_form(g, [l for l in h.letters if l.gen != v])
            frame.append((side, j))
    sides = {s for s, _ in frame}
    levels = sorted({j for _, j in frame})
    if set(frame) != {(s, j) for s in sides for j in levels}:
        raise InvariantError(f"frame of {H.canonical_key} is not a product")
    if levels != list(range(levels[0], levels[-1] + 1)):
        raise InvariantError("frame segment is not connected")
    assert all(in_standard_subgroup(g, s, link) for s in sides)
    base = multiply(g, p, (Letter(v, 1 if levels[0] >= 0 else -1),) * abs(levels[0]))
    shift = levels[0]
    return FrameData(H, base, v, len(levels) - 1, frozenset(sides),
                     tuple(j - shift for j in levels))
