"""Finite-index separation certificates and their independent re-check."""
from raagsep.complexes import LabeledComplex, trace
from raagsep.raag import DefiningGraph, word
from raagsep.separability import member, separate, short_transversal

zz = DefiningGraph.from_edges("ab", [("a", "b")])
Z = LabeledComplex(zz, (0,), 0, {"a": {0: 0}})
g = word(zz, "b")
print("b in <a>?", member(Z, g))

cert = separate(Z, g)
print("index", cert.index, "bound", Z.size * (g.length + 1))
print("permutations:", {v: cert.cover.permutation(v) for v in zz.vertices})

# anyone can re-check: generators close at the base, g does not
for h in cert.subgroup_gens:
    print(f"  {h} closes:", trace(cert.cover, h, cert.base) == (True, cert.base))
print(f"  {g} closes:", trace(cert.cover, g, cert.base) == (True, cert.base))
print("coset representatives:", [str(w) for w in short_transversal(cert.cover, cert.base)])
