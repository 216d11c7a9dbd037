"""Membership, separation certificates and the minimal-index oracle."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .complexes import (
    CoverComplex, InvariantError, LabeledComplex, canonical_completion, cover_errors,
    pi1_generators, trace,
)
from .construction import theorem_a
from .raag import DefiningGraph, IDENTITY, InputError, Letter, NormalForm, all_normal_forms, normal_form


class BudgetExceeded(RuntimeError):
    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


def member(Z: LabeledComplex, g: NormalForm) -> bool:
    ok, end = trace(Z, normal_form(Z.graph, g), Z.base)
    return ok and end == Z.base


@dataclass
class SeparationCertificate:
    cover: CoverComplex
    base: int
    subgroup_gens: list
    g: NormalForm
    index: int

    def problems(self) -> list[str]:
        out = list(cover_errors(self.cover))
        for h in self.subgroup_gens:
            ok, end = trace(self.cover, h, self.base)
            if not ok or end != self.base:
                out.append(f"subgroup generator {h} does not close")
        ok, end = trace(self.cover, self.g, self.base)
        if not ok or end == self.base:
            out.append(f"{self.g} closes at the base")
        if self.index != self.cover.size:
            out.append("index differs from the degree of the cover")
        return out

    def verify(self) -> bool:
        return not self.problems()


def _certificate(Y: LabeledComplex, Z: LabeledComplex, g: NormalForm) -> SeparationCertificate:
    cover = canonical_completion(Y)
    cert = SeparationCertificate(cover, Y.base, pi1_generators(Z), g, cover.degree)
    problems = cert.problems()
    if problems:
        raise InvariantError("; ".join(problems))
    return cert


def separate(Z: LabeledComplex, g: NormalForm) -> SeparationCertificate:
    """Finite-index subgroup containing pi_1 Z and missing g, as a based cover."""
    g = normal_form(Z.graph, g)
    Y = theorem_a(Z, g)
    cert = _certificate(Y, Z, g)
    if cert.index > Z.size * (g.length + 1):
        raise InvariantError(f"certificate index {cert.index} exceeds |Z|(|g|+1)")
    return cert


def stallings_separate(r: int, Z: LabeledComplex, g: NormalForm) -> SeparationCertificate:
    """Free-group fast path: trace g, hang the untraced suffix off as a new path."""
    graph = Z.graph
    if graph.edges or len(graph.vertices) != r:
        raise InputError("stallings_separate needs an edgeless graph on r vertices")
    g = normal_form(graph, g)
    if member(Z, g):
        raise ValueError(f"{g} lies in pi_1 Z")
    Y = Z.copy()
    x = Y.base
    nxt = max(Y.vertices) + 1
    verts = list(Y.vertices)
    for i, (v, s) in enumerate(g.letters):
        y = Y.step(x, v, s)
        if y is None:
            y = nxt
            nxt += 1
            verts.append(y)
            if s > 0:
                Y.sigma[v][x] = y
            else:
                Y.sigma[v][y] = x
            Y._inv = None
        x = y
    Y = LabeledComplex(graph, tuple(verts), Y.base, Y.sigma)
    cert = _certificate(Y, Z, g)
    if cert.index > Z.size + g.length:
        raise InvariantError("free-group certificate exceeds |Z| + |g|")
    return cert


def short_transversal(cover: LabeledComplex, base: int | None = None) -> list[NormalForm]:
    """One shortest word per vertex of the cover, in breadth-first order."""
    base = cover.base if base is None else base
    words = {base: ()}
    order = [base]
    q = deque([base])
    while q:
        x = q.popleft()
        for v in cover.graph.vertices:
            for s in (1, -1):
                y = cover.step(x, v, s)
                if y is not None and y not in words:
                    words[y] = words[x] + (Letter(v, s),)
                    order.append(y)
                    q.append(y)
    if len(words) != cover.size:
        raise InvariantError("cover is disconnected")
    return [normal_form(cover.graph, words[x]) for x in order]


# ----------------------------------------------------------------- oracle

class _Table:
    __slots__ = ("fwd", "bwd", "n")

    def __init__(self, gens, m):
        self.fwd = {v: [None] * m for v in gens}
        self.bwd = {v: [None] * m for v in gens}
        self.n = 1

    def copy(self, gens):
        t = _Table.__new__(_Table)
        t.fwd = {v: list(self.fwd[v]) for v in gens}
        t.bwd = {v: list(self.bwd[v]) for v in gens}
        t.n = self.n
        return t

    def get(self, x, v, s):
        return (self.fwd if s > 0 else self.bwd)[v][x]

    def set(self, x, v, s, y) -> bool:
        if s < 0:
            x, y = y, x
        a, b = self.fwd[v][x], self.bwd[v][y]
        if a is not None or b is not None:
            return a == y and b == x
        self.fwd[v][x] = y
        self.bwd[v][y] = x
        return True


def _scan(t: _Table, x: int, word) -> str | tuple | None:
    """Scan the cyclic relator ``word`` at ``x``.

    Returns "bad" on contradiction, a deduction ``(p, v, s, q)`` when exactly
    one entry is missing, or None.
    """
    n = len(word)
    i, f = 0, x
    while i < n:
        y = t.get(f, word[i][0], word[i][1])
        if y is None:
            break
        f = y
        i += 1
    if i == n:
        return None if f == x else "bad"
    j, b = n, x
    while j > i:
        v, s = word[j - 1]
        y = t.get(b, v, -s)
        if y is None:
            break
        b = y
        j -= 1
    if j == i:
        return None if f == b else "bad"
    if j == i + 1:
        v, s = word[i]
        return (f, v, s, b)
    return None


def _close(t: _Table, relators, subgroup) -> bool:
    changed = True
    while changed:
        changed = False
        for x in range(t.n):
            for w in relators:
                r = _scan(t, x, w)
                if r == "bad":
                    return False
                if r is not None:
                    if not t.set(*r):
                        return False
                    changed = True
        for w in subgroup:
            r = _scan(t, 0, w)
            if r == "bad":
                return False
            if r is not None:
                if not t.set(*r):
                    return False
                changed = True
    return True


def _search(graph: DefiningGraph, subgroup, g, m: int, budget: list) -> bool:
    gens = list(graph.vertices)
    relators = []
    for e in graph.edges:
        v, w = sorted(e, key=graph.index)
        relators.append(((v, 1), (w, 1), (v, -1), (w, -1)))
    sub = [tuple(h.letters) for h in subgroup if h.length]
    gw = tuple(g.letters)

    def rec(t: _Table) -> bool:
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceeded("oracle search budget exhausted")
        hole = None
        for x in range(t.n):
            for v in gens:
                for s in (1, -1):
                    if t.get(x, v, s) is None:
                        hole = (x, v, s)
                        break
                if hole:
                    break
            if hole:
                break
        if hole is None:
            ok, end = True, 0
            for v, s in gw:
                end = t.get(end, v, s)
            return end != 0
        x, v, s = hole
        targets = list(range(t.n)) + ([t.n] if t.n < m else [])
        for y in targets:
            if t.get(y, v, -s) is not None:
                continue
            u = t.copy(gens)
            if y == u.n:
                u.n += 1
            u.set(x, v, s, y)
            if _close(u, relators, sub) and rec(u):
                return True
        return False

    t = _Table(gens, m)
    if not _close(t, relators, sub):
        return False
    return rec(t)


def min_sep_index_oracle(graph: DefiningGraph, subgroup_gens, g: NormalForm, m_max: int,
                         budget: int = 2_000_000):
    """Least index of a subgroup containing ``subgroup_gens`` and missing ``g``.

    Searches transitive actions of A_Gamma on at most ``m_max`` points (coset
    tables with commutator relators), with the subgroup fixing point 0.  Returns
    None when nothing of index at most ``m_max`` separates.
    """
    g = normal_form(graph, g)
    left = [budget]
    for m in range(1, m_max + 1):
        try:
            if _search(graph, subgroup_gens, g, m, left):
                return m
        except BudgetExceeded as exc:
            exc.partial = {"searched_up_to": m - 1}
            raise
    return None


@dataclass
class GrowthReport:
    subgroup: list
    n: int
    value: int
    table: dict = field(default_factory=dict)  # g -> (oracle, certificate index)
    incomplete: list = field(default_factory=list)


def sep_growth(Z: LabeledComplex, n: int, m_max: int, certify: bool = True) -> GrowthReport:
    gens = pi1_generators(Z)
    table = {}
    incomplete = []
    for g in all_normal_forms(Z.graph, n):
        if member(Z, g):
            continue
        try:
            d = min_sep_index_oracle(Z.graph, gens, g, m_max)
        except BudgetExceeded:
            incomplete.append(g)
            d = None
        idx = separate(Z, g).index if certify else None
        table[g] = (d, idx)
    vals = [d for d, _ in table.values() if d is not None]
    return GrowthReport(gens, n, max(vals, default=0), table, incomplete)
