"""Gamma-labeled cube complexes over a Salvetti complex.

A complex is stored as its vertex set together with one partial injection
``sigma[v]`` per generator: ``sigma[v][x]`` is the endpoint of the v-labeled
edge leaving ``x``.  Squares and higher cubes are not stored; a cube is
present exactly when its pairwise-commuting edge germs close up into squares.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .raag import DefiningGraph, IDENTITY, InputError, Letter, NormalForm, normal_form


class InvariantError(RuntimeError):
    """An internal consistency check failed."""


class NotLocalIsometry(ValueError):
    """Input complex does not map to the Salvetti complex by a local isometry."""


@dataclass
class LabeledComplex:
    graph: DefiningGraph
    vertices: tuple[int, ...]
    base: int
    sigma: dict[str, dict[int, int]]
    _inv: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        self.vertices = tuple(sorted(set(self.vertices)))
        vs = set(self.vertices)
        if self.base not in vs:
            raise InputError(f"base {self.base} is not a vertex")
        sig = {}
        for v in self.graph.vertices:
            m = dict(self.sigma.get(v, {}))
            for x, y in m.items():
                if x not in vs or y not in vs:
                    raise InputError(f"{v}-edge {x}->{y} has an endpoint outside the vertex set")
            sig[v] = m
        for v in self.sigma:
            if v not in sig:
                raise InputError(f"unknown generator {v!r}")
        self.sigma = sig

    @property
    def size(self) -> int:
        return len(self.vertices)

    def inverse_maps(self) -> dict[str, dict[int, int]]:
        if self._inv is None:
            inv = {}
            for v, m in self.sigma.items():
                inv[v] = {y: x for x, y in m.items()}
            self._inv = inv
        return self._inv

    def step(self, x: int, gen: str, sign: int = 1):
        if sign > 0:
            return self.sigma[gen].get(x)
        return self.inverse_maps()[gen].get(x)

    def edges(self) -> list[tuple[str, int, int]]:
        return [(v, x, self.sigma[v][x]) for v in self.graph.vertices for x in sorted(self.sigma[v])]

    def injectivity_errors(self) -> list[str]:
        errs = []
        for v, m in self.sigma.items():
            if len(set(m.values())) != len(m):
                errs.append(f"sigma_{v} is not injective")
        return errs

    def is_connected(self) -> bool:
        return len(component(self, self.base)) == self.size

    def copy(self) -> "LabeledComplex":
        return LabeledComplex(self.graph, self.vertices, self.base,
                              {v: dict(m) for v, m in self.sigma.items()})

    def restrict(self, keep: Iterable[int], base: int | None = None) -> "LabeledComplex":
        keep = set(keep)
        sig = {v: {x: y for x, y in m.items() if x in keep and y in keep}
               for v, m in self.sigma.items()}
        return LabeledComplex(self.graph, tuple(keep), self.base if base is None else base, sig)

    def contains(self, other: "LabeledComplex") -> bool:
        """True when ``other`` is a based labeled subcomplex with the same vertex ids."""
        if other.base != self.base or not set(other.vertices) <= set(self.vertices):
            return False
        return all(self.sigma[v].get(x) == y for v, x, y in other.edges())


class CoverComplex(LabeledComplex):
    """Labeled complex in which every sigma is a bijection and edges commute."""

    def __post_init__(self):
        super().__post_init__()
        problems = cover_errors(self)
        if problems:
            raise InvariantError("; ".join(problems))

    @property
    def degree(self) -> int:
        return self.size

    def permutation(self, gen: str) -> dict[int, int]:
        return dict(self.sigma[gen])


def cover_errors(X: LabeledComplex) -> list[str]:
    errs = list(X.injectivity_errors())
    vs = set(X.vertices)
    for v, m in X.sigma.items():
        if set(m) != vs:
            errs.append(f"sigma_{v} is not total")
    if errs:
        return errs
    for e in X.graph.edges:
        v, w = sorted(e, key=X.graph.index)
        for x in X.vertices:
            if X.sigma[v][X.sigma[w][x]] != X.sigma[w][X.sigma[v][x]]:
                errs.append(f"sigma_{v} and sigma_{w} do not commute at {x}")
                break
    return errs


def component(X: LabeledComplex, start: int, gens: Iterable[str] | None = None) -> set[int]:
    gens = X.graph.vertices if gens is None else tuple(gens)
    inv = X.inverse_maps()
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for v in gens:
            for y in (X.sigma[v].get(x), inv[v].get(x)):
                if y is not None and y not in seen:
                    seen.add(y)
                    todo.append(y)
    return seen


def salvetti(graph: DefiningGraph) -> CoverComplex:
    return CoverComplex(graph, (0,), 0, {v: {0: 0} for v in graph.vertices})


@dataclass
class LocalIsometryReport:
    violations: list[tuple[int, tuple[str, int], tuple[str, int]]]
    invariant_errors: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations and not self.invariant_errors

    def __bool__(self) -> bool:
        return self.ok


def missing_corners(X: LabeledComplex, vertices: Iterable[int] | None = None):
    """Yield ``(x, (v, a), (w, b))`` for every open square corner at ``x``."""
    g = X.graph
    for x in (X.vertices if vertices is None else vertices):
        for e in g.edges:
            v, w = sorted(e, key=g.index)
            for a in (1, -1):
                ax = X.step(x, v, a)
                if ax is None:
                    continue
                for b in (1, -1):
                    bx = X.step(x, w, b)
                    if bx is None:
                        continue
                    p = X.step(ax, w, b)
                    q = X.step(bx, v, a)
                    if p is None or q is None or p != q:
                        yield (x, (v, a), (w, b))


def check_local_isometry(X: LabeledComplex) -> LocalIsometryReport:
    errs = X.injectivity_errors()
    if errs:
        return LocalIsometryReport([], errs)
    return LocalIsometryReport(list(missing_corners(X)), [])


def trace(X: LabeledComplex, word: Sequence[Letter] | NormalForm, start: int | None = None):
    """Follow ``word`` from ``start``.

    Returns ``(True, end_vertex)`` or ``(False, index_of_first_undefined_letter)``.
    """
    if isinstance(word, NormalForm):
        word = word.letters
    x = X.base if start is None else start
    for i, (gen, sign) in enumerate(word):
        y = X.step(x, gen, sign)
        if y is None:
            return False, i
        x = y
    return True, x


def canonical_completion(Z: LabeledComplex, gens: Iterable[str] | None = None) -> CoverComplex:
    """Close every maximal sigma-chain into a cycle.

    With ``gens`` given, only those generators are closed and the result is a
    cover of the Salvetti complex of the induced subgraph.
    """
    errs = Z.injectivity_errors()
    if errs:
        raise InvariantError("; ".join(errs))
    if gens is None:
        graph = Z.graph
    else:
        graph = Z.graph.subgraph(gens)
    inv = Z.inverse_maps()
    sigma = {}
    for v in graph.vertices:
        m = dict(Z.sigma[v])
        for x in Z.vertices:
            if x in inv[v]:
                continue
            t = x
            while t in m:
                t = m[t]
            m[t] = x
        sigma[v] = m
    try:
        return CoverComplex(graph, Z.vertices, Z.base, sigma)
    except InvariantError as exc:
        raise NotLocalIsometry(f"input not a local isometry: {exc}") from None


def spanning_tree(X: LabeledComplex):
    """Breadth-first tree from the base, preferring forward edges.

    A first pass follows only forward steps ``x -> sigma_v(x)``; a second
    pass reaches the rest of ``X`` using both directions.  Returns
    ``(paths, tree_edges)`` where ``paths[x]`` is the word read along the tree
    from the base to ``x``.
    """
    paths = {X.base: ()}
    tree = set()
    order = [X.base]
    for signs in ((1,), (1, -1)):
        queue = deque(order)
        while queue:
            x = queue.popleft()
            for v in X.graph.vertices:
                for s in signs:
                    y = X.step(x, v, s)
                    if y is None or y in paths:
                        continue
                    paths[y] = paths[x] + (Letter(v, s),)
                    tree.add((v, x, y) if s > 0 else (v, y, x))
                    order.append(y)
                    queue.append(y)
    return paths, tree


def pi1_generators(Z: LabeledComplex) -> list[NormalForm]:
    paths, tree = spanning_tree(Z)
    gens = []
    for v, x, y in Z.edges():
        if (v, x, y) in tree:
            continue
        w = paths[x] + (Letter(v, 1),) + tuple(l.inverse() for l in reversed(paths[y]))
        gens.append(normal_form(Z.graph, w))
    return gens


def cycle_complex(graph: DefiningGraph, gen: str, n: int) -> LabeledComplex:
    """The n-cycle labeled by ``gen``, based at 0."""
    return LabeledComplex(graph, tuple(range(n)), 0, {gen: {i: (i + 1) % n for i in range(n)}})
