"""Convex hulls, gates and hyperplanes in the universal cover."""
from raagsep.development import (
    collateral, develop_hull, frame_in, gate, gate_projection, hyperplanes_of, separates,
)
from raagsep.raag import DefiningGraph, word

zz = DefiningGraph.from_edges("ab", [("a", "b")])
e = word(zz, "")

square = develop_hull(zz, [e, word(zz, "a b")])
print("hull{e, ab}:", [str(p) for p in square.sorted_vertices()])

for H in hyperplanes_of(square):
    c, v = H.canonical_key
    print(f"  hyperplane label {v}, key ({c}, {v}), {len(H.dual_edges)} dual edges,",
          "separates e from a:", separates(H, e, word(zz, "a"), square))

# gates: nearest point projection onto a convex set
seg = develop_hull(zz, [e, word(zz, "a")])
print("gate(a b, {e, a}) =", gate(word(zz, "a b"), seg))
print("projection of the far a-segment:",
      [str(p) for p in gate_projection(seg, develop_hull(zz, [word(zz, "b"), word(zz, "a b")])).sorted_vertices()])

# collateral hyperplanes share a dual standard line
path = DefiningGraph.from_edges("abc", [("a", "b"), ("b", "c")])
D = develop_hull(path, [word(path, "a"), word(path, "c a")])
H1, H2 = [H for H in hyperplanes_of(D) if H.label == "a"]
print("the two a-hyperplanes of hull{a, c a} collateral?", collateral(H1, H2, path))
K = develop_hull(zz, [e, word(zz, "a a b")])
Hb = next(H for H in hyperplanes_of(K) if H.label == "b")
F = frame_in(Hb, K)
print(f"frame of the b-hyperplane in hull{{e, a a b}}: {len(F.cross_section)} cross-section vertices,"
      f" segment length {F.segment_length}")
print("collateral to itself:", collateral(Hb, Hb, zz))
