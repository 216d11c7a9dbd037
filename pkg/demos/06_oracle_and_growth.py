"""The least separating index by low-index coset enumeration, and Sep growth."""
from raagsep.complexes import LabeledComplex, cycle_complex
from raagsep.raag import DefiningGraph, word
from raagsep.separability import min_sep_index_oracle, sep_growth

Zg = DefiningGraph.from_edges("v")
print("D(<v^3>, v) =", min_sep_index_oracle(Zg, [word(Zg, "v v v")], word(Zg, "v"), 6))
print("D(<v^6>, v^2) =", min_sep_index_oracle(Zg, [word(Zg, "v v v v v v")], word(Zg, "v v"), 8))

rep = sep_growth(cycle_complex(Zg, "v", 3), 4, 6)
print("Sep(<v^3>, 4) =", rep.value)
for g, (d, idx) in rep.table.items():
    print(f"  {str(g):18} oracle {d}  certificate {idx}")

zz = DefiningGraph.from_edges("ab", [("a", "b")])
loop = LabeledComplex(zz, (0,), 0, {"a": {0: 0}})
for n in (1, 2, 3):
    print(f"Sep(<a> in Z^2, {n}) =", sep_growth(loop, n, 6, certify=False).value)
