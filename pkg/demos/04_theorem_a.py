"""Grow a local isometry Z into Y so that g no longer closes up.

The construction lifts a fundamental domain of Z to the universal cover,
takes the convex hull K with g, sorts the hyperplanes of K, and glues
quotients of the frames of the chosen chain onto Z before closing corners.
"""
from raagsep.complexes import LabeledComplex
from raagsep.construction import construct, verify_theorem_a
from raagsep.raag import DefiningGraph, word

cases = {
    "Z3 in Z, g = v": (DefiningGraph.from_edges("v"), {"v": {0: 1, 1: 2, 2: 0}}, 3, "v"),
    "a-loop in Z^2, g = b": (DefiningGraph.from_edges("ab", [("a", "b")]), {"a": {0: 0}}, 1, "b"),
    "a-loop in F2, g = b a": (DefiningGraph.from_edges("ab"), {"a": {0: 0}}, 1, "b a"),
    "a b-square cycle, g = a b^-1 c": (
        DefiningGraph.from_edges("abc", [("a", "b")]),
        {"a": {0: 1, 1: 0}, "b": {0: 0, 1: 1}}, 2, "a b^-1 c"),
}

for name, (graph, sigma, n, text) in cases.items():
    Z = LabeledComplex(graph, tuple(range(n)), 0, sigma)
    g = word(graph, text)
    c = construct(Z, g)
    P = c.partition
    rep = verify_theorem_a(Z, g, c.Y)
    print(f"{name}:")
    print(f"  |Zhat| = {len(c.Zhat)}, |K| = {len(c.K)}, floor = {len(c.floor)}")
    print(f"  hyperplanes: {len(P.Z_class)} meet Zhat, {len(P.N_class)} wrap cycles,"
          f" chain {[f'({p}, {v})' for p, v in P.chain]}, {len(P.B_class)} others")
    print(f"  frames: {[p.kind for p in c.pieces]}")
    print(f"  |Y| = {rep.size} <= {rep.bound}; all four checks pass: {rep.ok}")
    print("  Y edges:", c.Y.edges())
