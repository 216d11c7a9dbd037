"""Right-angled Artin groups: defining graphs, letters and normal forms.

Elements of A_Gamma are stored as their shortlex-least geodesic word, with
the generator order taken from the declaration order of the graph and
``v < v^-1 < w < w^-1`` whenever ``v`` is declared before ``w``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence


class InputError(ValueError):
    """Malformed user input (unknown generator, bad graph, bad file)."""


class Letter(NamedTuple):
    gen: str
    sign: int = 1

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.sign)

    def __str__(self) -> str:
        return self.gen if self.sign > 0 else f"{self.gen}^-1"


@dataclass(frozen=True)
class DefiningGraph:
    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]] = frozenset()
    _links: dict = field(init=False, repr=False, compare=False, hash=False)
    _order: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(set(verts)) != len(verts):
            raise InputError("repeated vertex in defining graph")
        edges = set()
        for e in self.edges:
            e = frozenset(e)
            if len(e) != 2:
                raise InputError(f"loop or malformed edge {sorted(e)}")
            for v in e:
                if v not in verts:
                    raise InputError(f"edge endpoint {v!r} is not a vertex")
            edges.add(e)
        object.__setattr__(self, "edges", frozenset(edges))
        links = {v: set() for v in verts}
        for e in edges:
            u, w = tuple(e)
            links[u].add(w)
            links[w].add(u)
        object.__setattr__(self, "_links", {v: frozenset(s) for v, s in links.items()})
        object.__setattr__(self, "_order", {v: i for i, v in enumerate(verts)})

    @classmethod
    def from_edges(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        return cls(tuple(vertices), frozenset(frozenset(e) for e in edges))

    def link(self, v: str) -> frozenset[str]:
        return self._links[v]

    def star(self, v: str) -> frozenset[str]:
        return self._links[v] | {v}

    def adjacent(self, v: str, w: str) -> bool:
        return w in self._links[v]

    def commute(self, v: str, w: str) -> bool:
        return v == w or w in self._links[v]

    def index(self, v: str) -> int:
        return self._order[v]

    def letters(self) -> list[Letter]:
        """All letters in shortlex order."""
        return [Letter(v, s) for v in self.vertices for s in (1, -1)]

    def letter_key(self, x: Letter) -> tuple[int, int]:
        return (self._order[x.gen], 0 if x.sign > 0 else 1)

    def check_word(self, word: Iterable[Letter]) -> tuple[Letter, ...]:
        out = []
        for x in word:
            if not isinstance(x, Letter):
                x = Letter(*x)
            if x.gen not in self._order:
                raise InputError(f"unknown generator {x.gen!r}")
            if x.sign not in (1, -1):
                raise InputError(f"bad sign {x.sign!r} on {x.gen!r}")
            out.append(x)
        return tuple(out)

    def subgraph(self, keep: Iterable[str]) -> "DefiningGraph":
        keep = set(keep)
        verts = tuple(v for v in self.vertices if v in keep)
        return DefiningGraph(verts, frozenset(e for e in self.edges if e <= keep))


@dataclass(frozen=True, order=False)
class NormalForm:
    letters: tuple[Letter, ...] = ()

    @property
    def length(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return " ".join(map(str, self.letters)) or "e"

    def __repr__(self) -> str:
        return f"NormalForm({self})"


IDENTITY = NormalForm(())


def inverse_word(word: Sequence[Letter]) -> tuple[Letter, ...]:
    return tuple(x.inverse() for x in reversed(word))


def _reduce(graph: DefiningGraph, word: Iterable[Letter]) -> list[Letter]:
    # Cancel x against an earlier x^-1 whenever every letter in between
    # commutes with x. The result is a geodesic word.
    out: list[Letter] = []
    for x in word:
        j = len(out) - 1
        cancelled = False
        while j >= 0:
            y = out[j]
            if y.gen == x.gen:
                if y.sign == -x.sign:
                    del out[j]
                    cancelled = True
                break
            if not graph.adjacent(x.gen, y.gen):
                break
            j -= 1
        if not cancelled:
            out.append(x)
    return out


def _lex_least(graph: DefiningGraph, word: list[Letter]) -> tuple[Letter, ...]:
    # Lexicographically least linearisation of the heap of a reduced word:
    # repeatedly emit the smallest letter that can be shuffled to the front.
    rest = list(word)
    out = []
    while rest:
        best = None
        for i, x in enumerate(rest):
            if all(graph.adjacent(x.gen, y.gen) for y in rest[:i]):
                if best is None or graph.letter_key(x) < graph.letter_key(rest[best]):
                    best = i
        out.append(rest.pop(best))
    return tuple(out)


def normal_form(graph: DefiningGraph, word: Iterable[Letter] | NormalForm) -> NormalForm:
    """Shortlex-least geodesic representative of ``word``."""
    if isinstance(word, NormalForm):
        word = word.letters
    word = graph.check_word(word)
    return NormalForm(_lex_least(graph, _reduce(graph, word)))


def multiply(graph: DefiningGraph, *parts) -> NormalForm:
    letters: list[Letter] = []
    for p in parts:
        letters.extend(p.letters if isinstance(p, NormalForm) else p)
    return normal_form(graph, letters)


def inverse(graph: DefiningGraph, g: NormalForm) -> NormalForm:
    return normal_form(graph, inverse_word(g.letters))


def distance(graph: DefiningGraph, a: NormalForm, b: NormalForm) -> int:
    """Graph distance between ``a`` and ``b`` in the Cayley graph."""
    return len(_reduce(graph, inverse_word(a.letters) + b.letters))


def interval(graph: DefiningGraph, a: NormalForm, b: NormalForm) -> set[NormalForm]:
    """All vertices lying on some geodesic from ``a`` to ``b``."""
    h = multiply(graph, inverse_word(a.letters), b)
    n = h.length
    seen = {IDENTITY}
    frontier = deque([IDENTITY])
    letters = graph.letters()
    while frontier:
        p = frontier.popleft()
        dp = distance(graph, p, h)
        if dp == 0:
            continue
        for x in letters:
            q = multiply(graph, p, (x,))
            if q in seen or q.length != p.length + 1:
                continue
            if distance(graph, q, h) == dp - 1:
                seen.add(q)
                frontier.append(q)
    assert all(p.length <= n for p in seen)
    return {multiply(graph, a, p) for p in seen}


def in_standard_subgroup(graph: DefiningGraph, g: NormalForm, gens: Iterable[str]) -> bool:
    gens = set(gens)
    return all(x.gen in gens for x in g.letters)


def parse_word(graph: DefiningGraph, text: str) -> tuple[Letter, ...]:
    """Parse whitespace separated tokens ``a`` or ``a^-1``."""
    out = []
    for tok in text.split():
        if tok.endswith("^-1"):
            out.append(Letter(tok[:-3], -1))
        elif tok.endswith("^1"):
            out.append(Letter(tok[:-2], 1))
        else:
            out.append(Letter(tok, 1))
    return graph.check_word(out)


def word(graph: DefiningGraph, text: str) -> NormalForm:
    return normal_form(graph, parse_word(graph, text))


def all_normal_forms(graph: DefiningGraph, max_length: int) -> list[NormalForm]:
    """Every element of length at most ``max_length``, by length then shortlex."""
    layers = [[IDENTITY]]
    seen = {IDENTITY}
    for _ in range(max_length):
        nxt = []
        for p in layers[-1]:
            for x in graph.letters():
                q = multiply(graph, p, (x,))
                if q.length == p.length + 1 and q not in seen:
                    seen.add(q)
                    nxt.append(q)
        nxt.sort(key=lambda g: [graph.letter_key(x) for x in g.letters])
        layers.append(nxt)
    return [g for layer in layers for g in layer]
