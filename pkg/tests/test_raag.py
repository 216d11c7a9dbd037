import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import bfs_distances, letters, oracle_normal_form
from raagsep.fleet import TEST_GRAPHS
from raagsep.raag import (
    IDENTITY, DefiningGraph, InputError, Letter, NormalForm, distance, in_standard_subgroup,
    interval, inverse, multiply, normal_form, parse_word, word,
)

ZZ = TEST_GRAPHS["Z2"]
F2 = TEST_GRAPHS["F2"]
PATH = TEST_GRAPHS["path"]


def nf(graph, text):
    return normal_form(graph, letters(text))


def test_graph_validation():
    with pytest.raises(InputError):
        DefiningGraph.from_edges("ab", [("a", "a")])
    with pytest.raises(InputError):
        DefiningGraph.from_edges("ab", [("a", "c")])
    assert PATH.link("b") == {"a", "c"}
    assert PATH.star("a") == {"a", "b"}


def test_normal_form_examples():
    assert nf(ZZ, "b a").letters == letters("a b")
    assert nf(F2, "a a^-1") == IDENTITY
    assert nf(PATH, "c a").letters == letters("c a")
    assert str(IDENTITY) == "e"


def test_unknown_generator():
    with pytest.raises(InputError):
        normal_form(ZZ, [Letter("z", 1)])
    with pytest.raises(InputError):
        parse_word(ZZ, "a q^-1")


def test_letter_order_is_v_vinv_w_winv():
    assert [str(x) for x in ZZ.letters()] == ["a", "a^-1", "b", "b^-1"]
    # a^-1 b < b a^-1 since a^-1 precedes b
    assert nf(ZZ, "b a^-1").letters == letters("a^-1 b")


words = st.integers(0, 2**31).map(random.Random)


def _random_letters(rng, graph, n):
    return tuple(Letter(rng.choice(graph.vertices), rng.choice((1, -1))) for _ in range(n))


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(sorted(TEST_GRAPHS)), words, st.integers(0, 6))
def test_normal_form_matches_shuffle_oracle(name, rng, n):
    graph = TEST_GRAPHS[name]
    w = _random_letters(rng, graph, n)
    assert normal_form(graph, w).letters == oracle_normal_form(graph, w)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(sorted(TEST_GRAPHS)), words, st.integers(0, 8))
def test_idempotent_and_metric(name, rng, n):
    graph = TEST_GRAPHS[name]
    u = normal_form(graph, _random_letters(rng, graph, n))
    v = normal_form(graph, _random_letters(rng, graph, n // 2))
    assert normal_form(graph, u) == u
    assert multiply(graph, u, v).length <= u.length + v.length
    assert inverse(graph, u).length == u.length
    assert multiply(graph, u, inverse(graph, u)) == IDENTITY


def test_equality_soundness_exhaustive_short():
    graph = PATH
    ws = [w for n in range(4) for w in itertools.product(graph.letters(), repeat=n)]
    for u, v in itertools.combinations(ws[:200], 2):
        same = oracle_normal_form(graph, u + tuple(x.inverse() for x in reversed(v))) == ()
        assert (normal_form(graph, u) == normal_form(graph, v)) == same


def test_interval_examples():
    e = IDENTITY
    assert interval(ZZ, e, nf(ZZ, "a b")) == {e, nf(ZZ, "a"), nf(ZZ, "b"), nf(ZZ, "a b")}
    aba = nf(F2, "a b a")
    assert interval(F2, e, aba) == {e, nf(F2, "a"), nf(F2, "a b"), aba}
    g = nf(PATH, "c a b")
    assert interval(PATH, g, g) == {g}


@pytest.mark.parametrize("name", sorted(TEST_GRAPHS))
def test_interval_against_bfs(name):
    graph = TEST_GRAPHS[name]
    rng = random.Random(7)
    for _ in range(8):
        a = normal_form(graph, _random_letters(rng, graph, 3))
        b = normal_form(graph, _random_letters(rng, graph, 3))
        d = distance(graph, a, b)
        da = bfs_distances(graph, a.letters, d)
        db = bfs_distances(graph, b.letters, d)
        expect = {NormalForm(p) for p in da if p in db and da[p] + db[p] == d}
        got = interval(graph, a, b)
        assert got == expect
        assert got == interval(graph, b, a)
        if not graph.edges:
            assert len(got) == d + 1


def test_in_standard_subgroup():
    assert not in_standard_subgroup(PATH, word(PATH, "c"), PATH.star("a"))
    assert in_standard_subgroup(PATH, IDENTITY, set())
    g = word(ZZ, "b a b^-1")
    assert g == word(ZZ, "a")
    assert in_standard_subgroup(ZZ, g, {"a"})
