"""Random instances: defining graphs, local isometries and words."""
from __future__ import annotations

import random
from itertools import combinations

from .complexes import InvariantError, LabeledComplex, check_local_isometry
from .construction import ConstructionIncomplete, _Builder, saturate
from .raag import DefiningGraph, Letter, NormalForm, normal_form

NAMES = "abcdefgh"

TEST_GRAPHS = {
    "Z": DefiningGraph.from_edges("v"),
    "Z2": DefiningGraph.from_edges("ab", [("a", "b")]),
    "F2": DefiningGraph.from_edges("ab"),
    "path": DefiningGraph.from_edges("abc", [("a", "b"), ("b", "c")]),
}


def random_graph(rng: random.Random, max_vertices: int = 4, p: float = 0.5) -> DefiningGraph:
    n = rng.randint(1, max_vertices)
    verts = NAMES[:n]
    edges = [e for e in combinations(verts, 2) if rng.random() < p]
    return DefiningGraph.from_edges(verts, edges)


def random_local_isometry(rng: random.Random, graph: DefiningGraph, max_vertices: int = 6,
                          steps: int = 12) -> LabeledComplex:
    """Grow a complex by random edges, closing corners after each move."""
    cur = LabeledComplex(graph, (0,), 0, {})
    for _ in range(steps):
        b = _Builder(cur)
        x = rng.choice(b.vertices)
        v = rng.choice(graph.vertices)
        s = rng.choice((1, -1))
        if b.step(x, v, s) is not None:
            continue
        if len(b.vertices) < max_vertices and rng.random() < 0.6:
            y = b.new_vertex()
        else:
            y = rng.choice(b.vertices)
        if not b.add(x, v, s, y):
            continue
        try:
            saturate(b)
        except (ConstructionIncomplete, InvariantError):
            continue
        cand = b.complex()
        if check_local_isometry(cand).ok:
            cur = cand
    return cur


def random_free_complex(rng: random.Random, graph: DefiningGraph, max_vertices: int = 8,
                        steps: int = 14) -> LabeledComplex:
    """Folded labeled graph over an edgeless defining graph (a Stallings graph)."""
    assert not graph.edges
    return random_local_isometry(rng, graph, max_vertices, steps)


def random_word(rng: random.Random, graph: DefiningGraph, max_length: int) -> NormalForm:
    n = rng.randint(1, max_length)
    letters = [Letter(rng.choice(graph.vertices), rng.choice((1, -1))) for _ in range(n)]
    return normal_form(graph, letters)
