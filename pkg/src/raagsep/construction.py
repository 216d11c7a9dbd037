"""Enlarging a local isometry Z -> S_Gamma so that a chosen element no longer lifts.

Pipeline for a based local isometry ``Z`` and an element ``g`` outside
``pi_1 Z``:

1. ``setup``: develop a fundamental domain of ``Z`` into the universal cover
   (``Zhat``) and take the convex hull ``K`` of ``Zhat`` and ``g``.
2. ``partition_hyperplanes``: split the hyperplanes of ``K`` into those
   meeting ``Zhat``, those whose dual lines wrap a cycle of ``Z``, the chosen
   separating chain and the rest.
3. ``floor_and_quotient``: the hull ``floor`` of ``Zhat`` and the wrapping
   segments, with the quotient table ``floor -> Z``.
4. ``select_chain`` / ``frame_quotient``: nested separating hyperplanes and
   the finite quotient of each of their frames.
5. ``glue_and_saturate``: attach the frame quotients to ``Z`` along the
   geodesic for ``g`` and close missing corners without adding vertices.
"""
from __future__ import annotations

import itertools
import logging
from collections import deque
from dataclasses import dataclass, field

from .complexes import (
    InvariantError, LabeledComplex, canonical_completion, check_local_isometry,
    component, missing_corners, spanning_tree, trace,
)
from .development import (
    DevelopedComplex, FrameData, Hyperplane, collateral, collateral_key, develop_hull,
    frame_in, gate, gate_projection, hyperplanes_of, keys_cross, separating_keys,
    shortlex_key, step_key,
)
from .raag import (
    IDENTITY, Letter, NormalForm, inverse_word, multiply, normal_form,
)

log = logging.getLogger(__name__)


class ConstructionIncomplete(RuntimeError):
    """The construction reached a state none of its rules can resolve."""


class PreconditionError(ValueError):
    pass


@dataclass
class HyperplanePartition:
    Z_class: set
    N_class: set
    H_class: set
    B_class: set
    cycle_length: dict  # key -> n_N
    N_collateral: dict  # collateral class id -> set of keys in S (the N'_i)
    chain: list = field(default_factory=list)  # keys H_1..H_k
    segments: list = field(default_factory=list)  # FrameData per chain member
    lengths: list = field(default_factory=list)  # m_i
    floor_segments: list = field(default_factory=list)

    @property
    def all(self) -> set:
        return self.Z_class | self.N_class | self.H_class | self.B_class


@dataclass
class QuotientPlan:
    table: dict  # floor vertex -> Z vertex
    exponents: dict  # floor vertex -> {class id: r_j}
    moduli: dict  # class id -> n_j
    labels: dict  # class id -> generator


@dataclass
class FramePiece:
    hyperplane: tuple
    kind: str  # "isolated" | "interfered"
    frame: FrameData
    cross_section: LabeledComplex  # image of H cap K, labels in link(v)
    levels: int
    attach: dict  # near-side vertex of K -> vertex of the cross-section


@dataclass
class Construction:
    Z: LabeledComplex
    g: NormalForm
    Zhat: DevelopedComplex
    K: DevelopedComplex
    projection: dict
    partition: HyperplanePartition
    floor: DevelopedComplex
    plan: QuotientPlan
    pieces: list
    Y: LabeledComplex
    level_sizes: list
    notes: list = field(default_factory=list)


# ---------------------------------------------------------------- setup

def lift_fundamental_domain(Z: LabeledComplex) -> tuple[set, dict]:
    """Tree lift of ``Z`` plus the far endpoint of every non-tree edge."""
    graph = Z.graph
    paths, tree = spanning_tree(Z)
    pts = {}
    for x, w in paths.items():
        pts[normal_form(graph, w)] = x
    for v, x, y in Z.edges():
        if (v, x, y) not in tree:
            pts[normal_form(graph, paths[x] + (Letter(v, 1),))] = y
    return set(pts), pts


def covering_projection(Z: LabeledComplex, points) -> dict:
    proj = {}
    for p in points:
        ok, end = trace(Z, p)
        if not ok:
            raise InvariantError(f"{p} does not lie in the universal cover of Z")
        proj[p] = end
    return proj


def setup(Z: LabeledComplex, g: NormalForm):
    from .separability import member

    report = check_local_isometry(Z)
    if not report.ok:
        raise PreconditionError(f"Z is not a local isometry: {report.violations[:3]} {report.invariant_errors}")
    g = normal_form(Z.graph, g)
    if member(Z, g):
        raise PreconditionError(f"{g} lies in pi_1 Z")
    pts, _ = lift_fundamental_domain(Z)
    Zhat = develop_hull(Z.graph, pts)
    K = develop_hull(Z.graph, set(Zhat.vertices) | {g})
    return Zhat, K


# ------------------------------------------------------------ partition

def _line(graph, K: DevelopedComplex, p: NormalForm, v: str) -> list[NormalForm]:
    """Maximal standard v-segment of K through p, in increasing exponent."""
    back, fwd = [], [p]
    q = p
    while True:
        q = multiply(graph, q, (Letter(v, -1),))
        if q not in K.vertices:
            break
        back.append(q)
    q = p
    while True:
        q = multiply(graph, q, (Letter(v, 1),))
        if q not in K.vertices:
            break
        fwd.append(q)
    return back[::-1] + fwd


def _wrap_length(Z: LabeledComplex, proj: dict, seg: list, Zhat, v: str):
    """Cycle length if the part of ``seg`` inside Zhat wraps a sigma_v-cycle of Z."""
    inside = [p for p in seg if p in Zhat.vertices]
    if len(inside) < 2:
        return None
    z = proj[inside[0]]
    n, y = 1, Z.sigma[v].get(z)
    while y is not None and y != z:
        y = Z.sigma[v].get(y)
        n += 1
    if y is None:
        return None
    return n if len(inside) - 1 >= n else None


def partition_hyperplanes(K: DevelopedComplex, Zhat: DevelopedComplex, Z: LabeledComplex,
                          projection: dict | None = None) -> HyperplanePartition:
    """Classify the hyperplanes of K (chain classes are filled in by ``select_chain``)."""
    graph = K.graph
    proj = projection or covering_projection(Z, Zhat.vertices)
    S = {h.canonical_key: h for h in hyperplanes_of(K)}
    zkeys = {h.canonical_key for h in hyperplanes_of(Zhat)}
    N, cyc = set(), {}
    for key, H in S.items():
        if key in zkeys:
            continue
        fr = frame_in(H, K)
        lengths = set()
        for h in fr.cross_section:
            base = multiply(graph, fr.line_base, h)
            seg = _line(graph, K, base, fr.line_label)
            n = _wrap_length(Z, proj, seg, Zhat, fr.line_label)
            if n is not None:
                lengths.add(n)
        if len(lengths) > 1:
            raise InvariantError(f"cycle length of {key} depends on the segment: {lengths}")
        if lengths:
            N.add(key)
            cyc[key] = lengths.pop()
    ncol: dict = {}
    for key in N:
        ncol.setdefault(collateral_key(graph, key), set())
    for key in S:
        ck = collateral_key(graph, key)
        if ck in ncol:
            ncol[ck].add(key)
    for ck, members in ncol.items():
        if not members & zkeys:
            raise InvariantError(f"wrapping class {ck} has no member meeting Zhat")
    return HyperplanePartition(zkeys & set(S), N, set(), set(S) - zkeys - N, cyc, ncol)


# ------------------------------------------------------ floor, quotient

def floor_segments(K, Zhat, Z, proj) -> list[list[NormalForm]]:
    graph = K.graph
    segs = []
    seen = set()
    for p in Zhat.sorted_vertices():
        for v in graph.vertices:
            seg = _line(graph, K, p, v)
            key = (seg[0], v)
            if key in seen:
                continue
            seen.add(key)
            if _wrap_length(Z, proj, seg, Zhat, v) is not None:
                segs.append(seg)
    return segs


def _push(Z: LabeledComplex, z: int, v: str, r: int) -> int:
    sign = 1 if r >= 0 else -1
    for _ in range(abs(r)):
        z = Z.step(z, v, sign)
        if z is None:
            raise InvariantError(f"sigma_{v} undefined while pushing along a wrapping class")
    return z


def floor_and_quotient(K, Zhat, Z, partition: HyperplanePartition, projection=None):
    graph = K.graph
    proj = projection or covering_projection(Z, Zhat.vertices)
    segs = floor_segments(K, Zhat, Z, proj)
    partition.floor_segments = segs
    pts = set(Zhat.vertices)
    for s in segs:
        pts.update(s)
    floor = develop_hull(graph, pts)
    floor_keys = {h.canonical_key for h in hyperplanes_of(floor)}
    if floor_keys - partition.Z_class != partition.N_class:
        raise InvariantError("hyperplanes crossing the floor but not Zhat differ from the wrapping class")
    class_of = {}
    for ck, members in partition.N_collateral.items():
        for key in members:
            class_of[key] = ck
    moduli = {ck: partition.cycle_length[next(k for k in m if k in partition.N_class)]
              for ck, m in partition.N_collateral.items()}
    labels = {ck: ck[1] for ck in partition.N_collateral}
    table, exps = {}, {}
    for z in floor.sorted_vertices():
        if z in Zhat.vertices:
            table[z] = proj[z]
            exps[z] = {}
            continue
        base = gate(z, Zhat)
        w = multiply(graph, inverse_word(base.letters), z)
        r: dict = {}
        p = base
        for x in w.letters:
            key = step_key(graph, p, x)
            if key not in class_of:
                raise InvariantError(f"{key} separates {z} from Zhat but is not wrapping")
            r[class_of[key]] = r.get(class_of[key], 0) + x.sign
            p = multiply(graph, p, (x,))
        results = set()
        order = sorted(r, key=lambda ck: (shortlex_key(graph, ck[0]), ck[1]))
        perms = itertools.permutations(order) if len(order) <= 4 else [order, order[::-1]]
        for perm in perms:
            y = proj[base]
            for ck in perm:
                y = _push(Z, y, labels[ck], r[ck] % moduli[ck])
            results.add(y)
        if len(results) != 1:
            raise InvariantError(f"quotient of {z} depends on the order of the wrapping classes")
        table[z] = results.pop()
        exps[z] = r
    for p, v in floor.edges():
        q = multiply(graph, p, (Letter(v, 1),))
        if Z.sigma[v].get(table[p]) != table[q]:
            raise InvariantError(f"quotient does not map the edge {p} -{v}-> {q} to an edge")
    return floor, QuotientPlan(table, exps, moduli, labels)


def generalized_frames(floor, Zhat, plan: QuotientPlan) -> dict:
    """Generalized frames of the floor, keyed by a set ``I`` of wrapping classes.

    Floor vertices are written in coordinates ``(gate in Zhat, r)`` where ``r``
    holds the signed number of hyperplanes of each wrapping class separating the
    vertex from Zhat.  ``Y(I)`` is the set of gates of vertices separated from
    Zhat by exactly the classes in ``I`` and ``F(I)`` the vertices with gate in
    ``Y(I)`` and support inside ``I``.  Raises if some ``F(I)`` is not the full
    product ``Y(I) x prod R_i``.
    """
    gates = {z: gate(z, Zhat) for z in floor.vertices}
    support = {z: frozenset(ck for ck, e in plan.exponents[z].items() if e) for z in floor.vertices}
    frames = {}
    for I in {s for s in support.values() if s}:
        Y = {gates[z] for z in floor.vertices if support[z] == I}
        F = {z for z in floor.vertices if gates[z] in Y and support[z] <= I}
        ranges = {ck: sorted({plan.exponents[z].get(ck, 0) for z in F}) for ck in I}
        coords = {(gates[z], tuple(plan.exponents[z].get(ck, 0) for ck in sorted(I, key=str))) for z in F}
        full = {(y, r) for y in Y for r in itertools.product(*(ranges[ck] for ck in sorted(I, key=str)))}
        if coords != full or len(coords) != len(F):
            raise InvariantError(f"generalized frame for {len(I)} classes is not a product")
        frames[I] = {"Y": Y, "F": F, "ranges": ranges}
    return frames


def intersection_law_holds(frames: dict, plan: QuotientPlan, Zhat) -> bool:
    """``F(I) cap F(J) = (Y(I) cap Y(J)) x prod_{I cap J} L`` on vertex sets."""
    for I, J in itertools.combinations(frames, 2):
        fi, fj = frames[I], frames[J]
        both = fi["F"] & fj["F"]
        Y = fi["Y"] & fj["Y"]
        common = I & J
        want = {z for z in fi["F"] | fj["F"]
                if gate(z, Zhat) in Y
                and all(plan.exponents[z].get(ck, 0) == 0 or ck in common for ck in plan.exponents[z])
                and all(plan.exponents[z].get(ck, 0) in fi["ranges"][ck] and plan.exponents[z].get(ck, 0) in fj["ranges"][ck]
                        for ck in common)}
        if both != want:
            return False
    return True


# ---------------------------------------------------------------- chain

def _separates_from(graph, key, region: DevelopedComplex, p: NormalForm) -> bool:
    return key in separating_keys(graph, gate(p, region), p)


def _a_vertex(K, key):
    H = next(h for h in hyperplanes_of(K) if h.canonical_key == key)
    return min((e[0] for e in H.dual_edges), key=lambda q: shortlex_key(K.graph, q))


def check_chain(chain, K, floor, Zhat, Z, proj, g) -> list[str]:
    """Return the list of failed chain conditions (empty when the chain is valid)."""
    graph = K.graph
    problems = []
    S = {h.canonical_key: h for h in hyperplanes_of(K)}
    near = {k: _a_vertex(K, k) for k in chain}
    for i in range(len(chain) - 1):
        a, b = chain[i], chain[i + 1]
        if keys_cross(graph, a, b) or not _separates_from(graph, a, floor, near[b]):
            problems.append(f"(1) {a} does not separate {b} from the floor")
    for i, j in itertools.combinations(range(len(chain)), 2):
        ci, cj = near[chain[i]], near[chain[j]]
        between = separating_keys(graph, ci, cj) - {chain[i], chain[j]}
        for key in between:
            # key separates H_i from H_j only if it crosses neither
            if keys_cross(graph, key, chain[i]) or keys_cross(graph, key, chain[j]):
                continue
            # hyperplanes crossing a chain member between H_i and H_j are B-type
            if any(keys_cross(graph, key, chain[l]) for l in range(i, j + 1)):
                continue
            if not any(collateral(key, chain[l], graph) for l in range(i, j + 1)):
                problems.append(f"(2) {key} between H_{i+1} and H_{j+1} is not collateral to the chain")
    if chain:
        first = chain[0]
        p = near[first]
        for key in separating_keys(graph, gate(p, floor), p):
            if key != first and not keys_cross(graph, key, first) and not collateral(key, first, graph):
                problems.append(f"(2) {key} between the floor and H_1 is not collateral to H_1")
        last = chain[-1]
        for key in separating_keys(graph, near[last], g):
            if key != last and not keys_cross(graph, key, last) and not collateral(key, last, graph):
                problems.append(f"(2) {key} between H_k and g is not collateral to H_k")
    for key in chain:
        fr = frame_in(S[key], K)
        for h in fr.cross_section:
            seg = _line(graph, K, multiply(graph, fr.line_base, h), fr.line_label)
            if _wrap_length(Z, proj, seg, Zhat, fr.line_label) is not None:
                problems.append(f"(3) a segment of the frame of {key} wraps a cycle of Z")
                break
    return problems


def select_chain(partition: HyperplanePartition, K, floor, g, Zhat=None, Z=None, proj=None):
    graph = K.graph
    out_keys = separating_keys(graph, gate(g, floor), g)
    out_keys -= partition.N_class
    # order of first crossing along the normal form path from the floor
    start = gate(g, floor)
    w = multiply(graph, inverse_word(start.letters), g)
    order, p = [], start
    for x in w.letters:
        order.append(step_key(graph, p, x))
        p = multiply(graph, p, (x,))
    rank = {k: i for i, k in enumerate(order)}
    classes: dict = {}
    for k in sorted(out_keys, key=rank.get):
        classes.setdefault(collateral_key(graph, k), []).append(k)

    def nested(keys):
        # order by how many of the others separate each from the floor
        def depth(k):
            q = _a_vertex(K, k)
            return sum(1 for o in keys if o != k and _separates_from(graph, o, floor, q))
        return sorted(keys, key=lambda k: (depth(k), rank[k]))

    reps = nested([m[0] for m in classes.values()])
    chain = reps
    problems = check_chain(chain, K, floor, Zhat, Z, proj, g) if Z is not None else []
    if problems:
        found = None
        pool = sorted(out_keys, key=rank.get)
        for r in range(1, len(pool) + 1):
            for sub in itertools.combinations(pool, r):
                cand = nested(list(sub))
                if not check_chain(cand, K, floor, Zhat, Z, proj, g):
                    found = cand
                    break
            if found:
                break
        if found is None:
            raise ConstructionIncomplete(f"no hyperplane chain satisfies the nesting conditions: {problems[:3]}")
        chain = found
    H = {k for k in out_keys if any(collateral(k, c, graph) for c in chain)}
    partition.chain = chain
    partition.H_class = H
    partition.B_class = partition.B_class - H
    S = {h.canonical_key: h for h in hyperplanes_of(K)}
    partition.segments = [frame_in(S[k], K) for k in chain]
    partition.lengths = [sum(1 for k in H if collateral(k, c, graph)) for c in chain]
    return chain


# -------------------------------------------------------- frame pieces

def _carrier(K, H: Hyperplane) -> DevelopedComplex:
    graph = K.graph
    pts = set()
    for p, v in H.dual_edges:
        pts.add(p)
        pts.add(multiply(graph, p, (Letter(v, 1),)))
    return DevelopedComplex(graph, frozenset(pts))


def frame_quotient(key, K, Z, Zhat, projection=None, levels: int | None = None) -> FramePiece:
    """Finite quotient ``Y_H`` of the frame of a chain hyperplane.

    The cross-section ``H cap K`` is sent to the Salvetti complex when the
    frame is isolated, and into the canonical completion of the image of the
    gate projection of its carrier onto Zhat when it is interfered.
    """
    graph = K.graph
    proj = projection or covering_projection(Z, Zhat.vertices)
    H = next(h for h in hyperplanes_of(K) if h.canonical_key == key)
    v = H.label
    fr = frame_in(H, K)
    near = sorted({p for p, _ in H.dual_edges}, key=lambda q: shortlex_key(graph, q))
    link = [u for u in graph.vertices if u in graph.link(v)]
    sub = graph.subgraph(link)
    Ahat = gate_projection(Zhat, _carrier(K, H))
    interfered = len(Ahat) > 1
    if not interfered:
        used = {u for u in link for p in near if multiply(graph, p, (Letter(u, 1),)) in near}
        cross = LabeledComplex(sub, (0,), 0, {u: {0: 0} for u in used})
        attach = {p: 0 for p in near}
    else:
        A = {proj[p] for p in Ahat.vertices}
        sig = {u: {} for u in graph.vertices}
        for p, u in Ahat.edges():
            sig[u][proj[p]] = proj[multiply(graph, p, (Letter(u, 1),))]
        Acx = LabeledComplex(graph, tuple(A), proj[gate(near[0], Zhat)], sig)
        C = canonical_completion(Acx)
        h0 = near[0]
        c0 = proj[gate(h0, Zhat)]
        attach = {}
        for p in near:
            h = multiply(graph, inverse_word(h0.letters), p)
            ok, end = trace(C, h, c0)
            assert ok
            attach[p] = end
        img = set(attach.values())
        csig = {u: {x: C.sigma[u][x] for x in img if C.sigma[u][x] in img} for u in link}
        cross = LabeledComplex(sub, tuple(img), c0, csig)
        if len(img) > Z.size:
            raise InvariantError("frame cross-section larger than Z")
    return FramePiece(key, "interfered" if interfered else "isolated", fr, cross,
                      fr.segment_length if levels is None else levels, attach)


# ---------------------------------------------------------------- glue

class _Builder:
    """Mutable partial injections used while gluing and saturating."""

    def __init__(self, Z: LabeledComplex):
        self.graph = Z.graph
        self.base = Z.base
        self.vertices = list(Z.vertices)
        self.fwd = {v: dict(m) for v, m in Z.sigma.items()}
        self.bwd = {v: {y: x for x, y in m.items()} for v, m in Z.sigma.items()}

    def new_vertex(self) -> int:
        x = max(self.vertices) + 1
        self.vertices.append(x)
        return x

    def step(self, x, v, s):
        return (self.fwd if s > 0 else self.bwd)[v].get(x)

    def add(self, x, v, s, y):
        """Add the edge x --v^s--> y; returns False on an injectivity clash."""
        if s < 0:
            x, y = y, x
        if self.fwd[v].get(x, y) != y or self.bwd[v].get(y, x) != x:
            return False
        self.fwd[v][x] = y
        self.bwd[v][y] = x
        return True

    def complex(self) -> LabeledComplex:
        return LabeledComplex(self.graph, tuple(self.vertices), self.base,
                              {v: dict(m) for v, m in self.fwd.items()})

    def component(self, x, gens) -> list[int]:
        seen, todo = {x}, [x]
        while todo:
            y = todo.pop()
            for u in gens:
                for s in (1, -1):
                    z = self.step(y, u, s)
                    if z is not None and z not in seen:
                        seen.add(z)
                        todo.append(z)
        return sorted(seen)

    def bfs_order(self):
        seen, out = {self.base}, [self.base]
        q = deque([self.base])
        while q:
            x = q.popleft()
            for v in self.graph.vertices:
                for s in (1, -1):
                    y = self.step(x, v, s)
                    if y is not None and y not in seen:
                        seen.add(y)
                        out.append(y)
                        q.append(y)
        return out


def _open_corners(b: _Builder):
    g = b.graph
    for x in b.bfs_order():
        for e in sorted(g.edges, key=lambda e: sorted(g.index(u) for u in e)):
            v, w = sorted(e, key=g.index)
            for a in (1, -1):
                ax = b.step(x, v, a)
                if ax is None:
                    continue
                for c in (1, -1):
                    cx = b.step(x, w, c)
                    if cx is None:
                        continue
                    p = b.step(ax, w, c)
                    q = b.step(cx, v, a)
                    if p is None or q is None or p != q:
                        yield x, (v, a, ax, p), (w, c, cx, q)


def saturate(b: _Builder, max_rounds: int | None = None) -> dict:
    """Close missing corners without adding vertices.

    Transport first: a square with three corners present gets its fourth edge.
    When no transport applies, the chain through an open corner is closed into a
    cycle.  Returns counters of the moves made.
    """
    stats = {"transport": 0, "cycle": 0}
    germs = sum(len(m) for m in b.fwd.values())
    bound = max_rounds or (len(b.vertices) * len(b.graph.vertices) * 2 + germs + 10)
    for _ in range(bound):
        pending = None
        moved = False
        for x, (v, a, ax, p), (w, c, cx, q) in _open_corners(b):
            if p is not None and q is not None:
                raise ConstructionIncomplete(f"square at {x} closes on two different vertices")
            if p is not None:
                if not b.add(cx, v, a, p):
                    raise ConstructionIncomplete(f"transport at {x} clashes with an existing {v}-edge")
                stats["transport"] += 1
                moved = True
                break
            if q is not None:
                if not b.add(ax, w, c, q):
                    raise ConstructionIncomplete(f"transport at {x} clashes with an existing {w}-edge")
                stats["transport"] += 1
                moved = True
                break
            if pending is None:
                pending = (x, v, a, cx)
        if moved:
            continue
        if pending is None:
            return stats
        x, v, a, cx = pending
        # close the sigma_v chain through cx so that cx gains a v^a germ
        end = cx
        while b.step(end, v, a) is not None:
            end = b.step(end, v, a)
        start = cx
        while b.step(start, v, -a) is not None:
            start = b.step(start, v, -a)
        if b.step(end, v, a) is not None or not b.add(end, v, a, start):
            raise ConstructionIncomplete(f"cannot close the {v}-chain at {cx}")
        stats["cycle"] += 1
    raise InvariantError("saturation exceeded its iteration bound")


def glue_and_saturate(Z: LabeledComplex, g: NormalForm, plan: QuotientPlan | None = None,
                      pieces=()) -> tuple[LabeledComplex, list, dict]:
    """Attach frame quotients along the geodesic for ``g`` and saturate.

    The normal form of ``g`` is read from the base.  While ``Z`` already carries
    the path nothing happens (this is the floor, mapped by the quotient table).
    Each time the path leaves the current complex across a hyperplane labeled
    ``s``, a new level is glued: a copy of the canonical completion, over
    ``link(s)``, of the ``link(s)``-cross-section at the exit point, joined to that
    cross-section by ``s``-edges.  This is the frame quotient of the crossed
    hyperplane.  Missing corners are then closed by ``saturate``.

    Returns ``(Y, level_sizes, stats)``.
    """
    graph = Z.graph
    b = _Builder(Z)
    y = b.base
    sizes = []
    stats = {"transport": 0, "cycle": 0}
    for gen, sign in g.letters:
        nxt = b.step(y, gen, sign)
        if nxt is not None:
            y = nxt
            continue
        link = [u for u in graph.vertices if u in graph.link(gen)]
        P = b.component(y, link)
        if any(b.step(p, gen, sign) is not None for p in P):
            raise ConstructionIncomplete(f"cross-section at {y} is only partly open in direction {gen}")
        Pcx = LabeledComplex(graph, tuple(P), y, {u: {p: b.fwd[u][p] for p in P if p in b.fwd[u]} for u in link})
        C = canonical_completion(Pcx, link)
        copy = {p: b.new_vertex() for p in P}
        for p in P:
            b.add(p, gen, sign, copy[p])
        for u in link:
            for p in P:
                if not b.add(copy[p], u, 1, copy[C.sigma[u][p]]):
                    raise InvariantError("level copy is not injective")
        sizes.append(len(P))
        s = saturate(b)
        for k in stats:
            stats[k] += s[k]
        y = copy[y]
    s = saturate(b)
    for k in stats:
        stats[k] += s[k]
    return b.complex(), sizes, stats


# ------------------------------------------------------------- driver

def construct(Z: LabeledComplex, g: NormalForm) -> Construction:
    graph = Z.graph
    g = normal_form(graph, g)
    Zhat, K = setup(Z, g)
    proj = covering_projection(Z, Zhat.vertices)
    part = partition_hyperplanes(K, Zhat, Z, proj)
    floor, plan = floor_and_quotient(K, Zhat, Z, part, proj)
    notes = []
    try:
        chain = select_chain(part, K, floor, g, Zhat, Z, proj)
    except ConstructionIncomplete as exc:
        notes.append(str(exc))
        log.warning("chain selection failed: %s", exc)
        chain = []
    pieces = [frame_quotient(k, K, Z, Zhat, proj, m) for k, m in zip(chain, part.lengths)]
    Y, sizes, stats = glue_and_saturate(Z, g, plan, pieces)
    if stats["cycle"]:
        notes.append(f"cycle closures: {stats['cycle']}")
    return Construction(Z, g, Zhat, K, proj, part, floor, plan, pieces, Y, sizes, notes)


def theorem_a(Z: LabeledComplex, g: NormalForm) -> LabeledComplex:
    return construct(Z, g).Y


# ---------------------------------------------------------- verification

@dataclass
class TheoremAReport:
    contains_Z: bool
    local_isometry: bool
    g_not_closed: bool
    size_bound: bool
    size: int
    bound: int
    details: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.contains_Z and self.local_isometry and self.g_not_closed and self.size_bound

    def __bool__(self) -> bool:
        return self.ok


def _other_words(g: NormalForm, graph) -> list:
    """A few non-geodesic words representing g."""
    out = []
    letters = list(g.letters)
    gens = graph.letters()
    for i in range(len(letters) + 1):
        x = gens[i % len(gens)]
        out.append(tuple(letters[:i] + [x, x.inverse()] + letters[i:]))
    if letters:
        x = letters[0]
        out.append(tuple([x.inverse(), x] + letters))
    return out


def verify_theorem_a(Z: LabeledComplex, g: NormalForm, Y: LabeledComplex) -> TheoremAReport:
    graph = Z.graph
    g = normal_form(graph, g)
    details = []
    c1 = Y.contains(Z)
    if not c1:
        details.append("Z is not a based subcomplex of Y")
    rep = check_local_isometry(Y)
    c2 = rep.ok
    if not c2:
        details.append(f"local isometry fails: {rep.violations[:3]} {rep.invariant_errors}")
    ok, end = trace(Y, g, Y.base)
    c3 = ok and end != Y.base
    if not c3:
        details.append("g does not lift to a non-closed path")
    for w in _other_words(g, graph):
        ok2, end2 = trace(Y, w, Y.base)
        if ok2 and end2 == Y.base:
            c3 = False
            details.append(f"word {' '.join(map(str, w))} for g closes up")
    bound = Z.size * (g.length + 1)
    c4 = Y.size <= bound
    if not c4:
        details.append(f"|Y| = {Y.size} exceeds {bound}")
    return TheoremAReport(c1, c2, c3, c4, Y.size, bound, details)


def partition_problems(partition: HyperplanePartition, S: set, graph) -> list[str]:
    """Per-run checks of the hyperplane partition."""
    out = []
    parts = [partition.Z_class, partition.N_class, partition.H_class, partition.B_class]
    if set().union(*parts) != set(S) or sum(map(len, parts)) != len(S):
        out.append("the four classes do not partition the hyperplanes of K")
    if partition.H_class & partition.N_class:
        out.append("chain classes meet the wrapping class")
    for key in partition.N_class:
        if not any(collateral(key, w, graph) for w in partition.Z_class):
            out.append(f"wrapping {key} is not collateral to a hyperplane of Zhat")
    for key in partition.B_class:
        if not any(keys_cross(graph, key, h) for h in partition.chain):
            out.append(f"{key} crosses no chain hyperplane")
    return out
