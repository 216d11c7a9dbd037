"""Text formats for defining graphs and labeled complexes, plus JSON encoders.

Graph file::

    # comment
    vertices a b c
    edge a b
    edge b c

Complex file::

    graph zz.graph
    vertex 0
    vertex 1
    base 0
    edge a 0 1

Vertex declaration order in the graph file is the shortlex generator order.
The ``graph`` path in a complex file is resolved relative to the complex file.
"""
from __future__ import annotations

from pathlib import Path

from .complexes import LabeledComplex
from .raag import DefiningGraph, InputError, NormalForm


class ParseError(InputError):
    def __init__(self, message, line=None, path=None):
        where = f"{path or '<text>'}:{line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


def _lines(text):
    for i, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line.split()


def parse_graph(text: str, path=None) -> DefiningGraph:
    verts = None
    edges = []
    for i, toks in _lines(text):
        if toks[0] == "vertices":
            if verts is not None:
                raise ParseError("duplicate vertices line", i, path)
            verts = toks[1:]
            if len(set(verts)) != len(verts):
                raise ParseError("repeated vertex", i, path)
        elif toks[0] == "edge":
            if verts is None:
                raise ParseError("edge before vertices line", i, path)
            if len(toks) != 3:
                raise ParseError("edge needs two endpoints", i, path)
            u, v = toks[1:]
            for x in (u, v):
                if x not in verts:
                    raise ParseError(f"edge endpoint {x!r} is not a declared vertex", i, path)
            if u == v:
                raise ParseError("loop edge", i, path)
            if frozenset((u, v)) in {frozenset(e) for e in edges}:
                raise ParseError("repeated edge", i, path)
            edges.append((u, v))
        else:
            raise ParseError(f"unknown directive {toks[0]!r}", i, path)
    if verts is None:
        raise ParseError("missing vertices line", None, path)
    return DefiningGraph.from_edges(verts, edges)


def format_graph(graph: DefiningGraph) -> str:
    lines = ["vertices " + " ".join(graph.vertices)]
    for e in sorted(graph.edges, key=lambda e: sorted(graph.index(v) for v in e)):
        u, v = sorted(e, key=graph.index)
        lines.append(f"edge {u} {v}")
    return "\n".join(lines) + "\n"


def load_graph(path) -> DefiningGraph:
    path = Path(path)
    return parse_graph(path.read_text(), path)


def parse_complex(text: str, graph: DefiningGraph | None = None, path=None,
                  graph_loader=load_graph) -> tuple[LabeledComplex, str | None]:
    graph_ref = None
    verts, base, sigma = [], None, {}
    for i, toks in _lines(text):
        kind = toks[0]
        try:
            if kind == "graph":
                graph_ref = toks[1]
                if graph is None:
                    ref = Path(graph_ref)
                    if path is not None and not ref.is_absolute():
                        ref = Path(path).parent / ref
                    graph = graph_loader(ref)
            elif kind == "vertex":
                x = int(toks[1])
                if x < 0:
                    raise ValueError
                verts.append(x)
            elif kind == "base":
                if base is not None:
                    raise ParseError("more than one base", i, path)
                base = int(toks[1])
            elif kind == "edge":
                v, x, y = toks[1], int(toks[2]), int(toks[3])
                if graph is None:
                    raise ParseError("edge before graph line", i, path)
                if v not in graph.vertices:
                    raise ParseError(f"unknown generator {v!r}", i, path)
                for z in (x, y):
                    if z not in verts:
                        raise ParseError(f"edge endpoint {z} is not a declared vertex", i, path)
                m = sigma.setdefault(v, {})
                if x in m or y in m.values():
                    raise ParseError(f"second {v}-edge at a vertex (sigma_{v} not injective)", i, path)
                m[x] = y
            else:
                raise ParseError(f"unknown directive {kind!r}", i, path)
        except (IndexError, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"malformed {kind} line", i, path) from None
    if graph is None:
        raise ParseError("missing graph line", None, path)
    if base is None:
        raise ParseError("missing base line", None, path)
    if base not in verts:
        raise ParseError("base is not a declared vertex", None, path)
    return LabeledComplex(graph, tuple(verts), base, sigma), graph_ref


def format_complex(X: LabeledComplex, graph_ref: str = "graph") -> str:
    lines = [f"graph {graph_ref}"]
    lines += [f"vertex {x}" for x in X.vertices]
    lines.append(f"base {X.base}")
    lines += [f"edge {v} {x} {y}" for v, x, y in X.edges()]
    return "\n".join(lines) + "\n"


def load_complex(path, graph: DefiningGraph | None = None) -> LabeledComplex:
    path = Path(path)
    return parse_complex(path.read_text(), graph, path)[0]


# ------------------------------------------------------------------ json

def word_json(g: NormalForm) -> list[str]:
    return [str(x) for x in g.letters]


def complex_json(X: LabeledComplex) -> dict:
    return {
        "generators": list(X.graph.vertices),
        "vertices": sorted(X.vertices),
        "base": X.base,
        "edges": {v: [[x, X.sigma[v][x]] for x in sorted(X.sigma[v])] for v in X.graph.vertices},
    }


def cover_json(X: LabeledComplex) -> dict:
    return {
        "generators": list(X.graph.vertices),
        "vertices": sorted(X.vertices),
        "base": X.base,
        "permutations": {v: [X.sigma[v][x] for x in sorted(X.vertices)] for v in X.graph.vertices},
    }
