"""Normal forms in right-angled Artin groups.

Elements are stored as their shortlex-least geodesic word, with generator
order taken from the graph declaration and v < v^-1 < w < w^-1.
"""
from raagsep.raag import DefiningGraph, interval, in_standard_subgroup, word

path = DefiningGraph.from_edges("abc", [("a", "b"), ("b", "c")])

# a and b commute, so b a is rewritten a b; a and c do not.
print("b a      ->", word(path, "b a"))
print("c a      ->", word(path, "c a"))

# cancellation across a commuting block: a b a^-1 = b
print("a b a^-1 ->", word(path, "a b a^-1"))

# the interval between two elements is every vertex on some geodesic
zz = DefiningGraph.from_edges("ab", [("a", "b")])
I = interval(zz, word(zz, ""), word(zz, "a b"))
print("interval(e, a b) in Z^2:", sorted(map(str, I)))

# standard subgroups are convex, so membership reads off the letters
g = word(zz, "b a b^-1")
print(f"{g} in <a>?", in_standard_subgroup(zz, g, {"a"}))
