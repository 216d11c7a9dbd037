"""Local isometries to the Salvetti complex and canonical completion."""
from raagsep.complexes import (
    LabeledComplex, canonical_completion, check_local_isometry, pi1_generators,
)
from raagsep.raag import DefiningGraph

zz = DefiningGraph.from_edges("ab", [("a", "b")])

# an a-edge followed by a b-edge with no square: not a local isometry
corner = LabeledComplex(zz, (0, 1, 2), 0, {"a": {0: 1}, "b": {1: 2}})
print("corner violations:", check_local_isometry(corner).violations)

# an a-loop with a b-edge to a second a-loop: the torus corner is full
X = LabeledComplex(zz, (0, 1), 0, {"a": {0: 0, 1: 1}, "b": {0: 1}})
print("X is a local isometry:", check_local_isometry(X).ok)
# both loops read a once conjugated back along b
print("pi_1 X generated by:", [str(g) for g in pi1_generators(X)])

# completion closes the b-chain 0 -> 1 into a cycle; the degree is |X^0|
C = canonical_completion(X)
print("completed permutations:", {v: C.permutation(v) for v in zz.vertices})
print("degree", C.degree, "contains X:", C.contains(X))
