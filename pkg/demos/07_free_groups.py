"""Free groups: the Stallings fast path and its |Z| + |g| bound."""
import random

from raagsep.complexes import cycle_complex
from raagsep.fleet import random_free_complex, random_word
from raagsep.raag import DefiningGraph, word
from raagsep.separability import member, sep_growth, stallings_separate

F2 = DefiningGraph.from_edges("ab")
loop = cycle_complex(F2, "a", 1)
for text in ("b a", "a b", "b b a^-1"):
    g = word(F2, text)
    print(f"<a> vs {text}: index {stallings_separate(2, loop, g).index}")

rng = random.Random(0)
worst = 0.0
for _ in range(200):
    Z = random_free_complex(rng, F2)
    g = random_word(rng, F2, 6)
    if member(Z, g):
        continue
    idx = stallings_separate(2, Z, g).index
    worst = max(worst, idx / (Z.size + g.length))
print("largest index / (|Z| + |g|) over 200 random folded graphs:", round(worst, 3))

for n in range(1, 5):
    print(f"Sep(<a> in F2, {n}) = {sep_growth(loop, n, n + 1, certify=False).value} <= {1 + n}")
