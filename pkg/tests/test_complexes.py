import random

import pytest

from oracles import letters
from raagsep.complexes import (
    CoverComplex, InvariantError, LabeledComplex, NotLocalIsometry, canonical_completion,
    check_local_isometry, cycle_complex, pi1_generators, salvetti, trace,
)
from raagsep.fleet import TEST_GRAPHS, random_graph, random_local_isometry
from raagsep.raag import InputError, normal_form

ZZ, F2, PATH, Z1 = (TEST_GRAPHS[k] for k in ("Z2", "F2", "path", "Z"))


def is_cover(X):
    """Bijections that commute along edges, checked by hand."""
    for v in X.graph.vertices:
        m = X.sigma[v]
        if set(m) != set(X.vertices) or set(m.values()) != set(X.vertices):
            return False
    for e in X.graph.edges:
        v, w = sorted(e)
        if any(X.sigma[v][X.sigma[w][x]] != X.sigma[w][X.sigma[v][x]] for x in X.vertices):
            return False
    return True


@pytest.mark.parametrize("graph", [Z1, ZZ, PATH, F2])
def test_salvetti(graph):
    S = salvetti(graph)
    assert S.size == 1 and is_cover(S)
    assert check_local_isometry(S).ok
    assert len(S.edges()) == len(graph.vertices)


def test_local_isometry_examples():
    vw = TEST_GRAPHS["Z2"]
    X = LabeledComplex(vw, (0, 1, 2), 0, {"a": {0: 1}, "b": {1: 2}})
    rep = check_local_isometry(X)
    assert not rep.ok
    assert {x for x, _, _ in rep.violations} == {1}
    Y = LabeledComplex(ZZ, (0, 1), 0, {"a": {0: 0, 1: 1}, "b": {0: 1}})
    assert check_local_isometry(Y).ok


def test_non_injective_reported_separately():
    X = LabeledComplex(Z1, (0, 1, 2), 0, {"v": {0: 2, 1: 2}})
    rep = check_local_isometry(X)
    assert rep.invariant_errors and not rep.violations
    with pytest.raises(InvariantError):
        canonical_completion(X)


def test_dangling_edge_rejected():
    with pytest.raises(InputError):
        LabeledComplex(Z1, (0,), 0, {"v": {0: 5}})


def test_trace_examples():
    Z3 = cycle_complex(Z1, "v", 3)
    assert trace(Z3, letters("v v v"), 0) == (True, 0)
    assert trace(Z3, letters("v"), 0) == (True, 1)
    loop = cycle_complex(ZZ, "a", 1)
    assert trace(loop, letters("b")) == (False, 0)


def test_completion_examples():
    Z3 = cycle_complex(Z1, "v", 3)
    C = canonical_completion(Z3)
    assert C.degree == 3 and C.sigma == Z3.sigma
    chain = LabeledComplex(Z1, (0, 1), 0, {"v": {0: 1}})
    C = canonical_completion(chain)
    assert C.degree == 2 and C.sigma["v"] == {0: 1, 1: 0}
    loop = cycle_complex(ZZ, "a", 1)
    C = canonical_completion(loop)
    assert C.sigma == salvetti(ZZ).sigma


def test_completion_of_non_local_isometry_fails():
    # a path b-a-b^-1 style corner with no square closes into non-commuting maps
    X = LabeledComplex(ZZ, (0, 1, 2), 0, {"a": {0: 1}, "b": {1: 2}})
    with pytest.raises(NotLocalIsometry):
        canonical_completion(X)


def test_pi1_examples():
    Z3 = cycle_complex(Z1, "v", 3)
    assert [str(g) for g in pi1_generators(Z3)] == ["v v v"]
    assert [str(g) for g in pi1_generators(cycle_complex(PATH, "a", 1))] == ["a"]
    tree = LabeledComplex(F2, (0, 1, 2), 0, {"a": {0: 1}, "b": {1: 2}})
    assert pi1_generators(tree) == []


def test_completion_fleet():
    rng = random.Random(11)
    for _ in range(60):
        graph = random_graph(rng)
        Z = random_local_isometry(rng, graph, max_vertices=8)
        assert check_local_isometry(Z).ok
        C = canonical_completion(Z)
        assert isinstance(C, CoverComplex) and is_cover(C)
        assert C.contains(Z) and C.degree == Z.size
        assert canonical_completion(C).sigma == C.sigma
        for h in pi1_generators(Z):
            assert trace(Z, h) == (True, Z.base)
            assert trace(C, h) == (True, C.base)
