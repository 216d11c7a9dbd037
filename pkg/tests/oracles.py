"""Independent reference implementations used only by the tests."""
from __future__ import annotations

from collections import deque

from raagsep.raag import Letter


def shuffle_closure(graph, word, max_states=200_000):
    """Every word reachable by swapping adjacent commuting letters or deleting x x^-1."""
    start = tuple(word)
    seen = {start}
    q = deque([start])
    while q:
        w = q.popleft()
        for i in range(len(w) - 1):
            x, y = w[i], w[i + 1]
            if x.gen == y.gen and x.sign == -y.sign:
                nxt = w[:i] + w[i + 2:]
            elif x.gen != y.gen and graph.adjacent(x.gen, y.gen):
                nxt = w[:i] + (y, x) + w[i + 2:]
            else:
                continue
            if nxt not in seen:
                seen.add(nxt)
                q.append(nxt)
        if len(seen) > max_states:
            raise RuntimeError("closure too large")
    return seen


def oracle_normal_form(graph, word):
    """Shortlex-least shortest word in the shuffle-and-cancel closure."""
    forms = shuffle_closure(graph, word)
    return min(forms, key=lambda w: (len(w), [graph.letter_key(x) for x in w]))


def bfs_distances(graph, source, radius):
    """Distances in the Cayley graph from ``source`` (a letter tuple in normal form)."""
    dist = {source: 0}
    q = deque([source])
    while q:
        w = q.popleft()
        if dist[w] == radius:
            continue
        for x in graph.letters():
            nxt = oracle_normal_form(graph, w + (x,))
            if nxt not in dist:
                dist[nxt] = dist[w] + 1
                q.append(nxt)
    return dist


def cyclic_subgroup_indices(n):
    """Indices of subgroups of Z containing nZ."""
    return sorted(d for d in range(1, n + 1) if n % d == 0)


def letters(text):
    """``"a b^-1"`` -> tuple of Letter without any normalization."""
    out = []
    for tok in text.split():
        out.append(Letter(tok[:-3], -1) if tok.endswith("^-1") else Letter(tok, 1))
    return tuple(out)
