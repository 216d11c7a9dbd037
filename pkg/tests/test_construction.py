import itertools
import random

import pytest

from oracles import letters
from raagsep.complexes import LabeledComplex, check_local_isometry, cycle_complex, trace
from raagsep.construction import (
    PreconditionError, construct, generalized_frames, intersection_law_holds, partition_problems,
    setup, theorem_a, verify_theorem_a, _push,
)
from raagsep.development import edge_key, hyperplanes_of
from raagsep.fleet import TEST_GRAPHS, random_graph, random_local_isometry, random_word
from raagsep.raag import IDENTITY, DefiningGraph, normal_form
from raagsep.separability import member

ZZ, F2, Z1 = TEST_GRAPHS["Z2"], TEST_GRAPHS["F2"], TEST_GRAPHS["Z"]


def nf(graph, text):
    return normal_form(graph, letters(text)) if text else IDENTITY


def verts(graph, *texts):
    return {nf(graph, t) for t in texts}


E1 = (cycle_complex(Z1, "v", 3), nf(Z1, "v"))
E2 = (cycle_complex(ZZ, "a", 1), nf(ZZ, "b"))
E3 = (cycle_complex(F2, "a", 1), nf(F2, "b a"))


def test_setup_examples():
    Zhat, K = setup(*E1)
    assert Zhat.vertices == verts(Z1, "", "v", "v v", "v v v") and K == Zhat
    Zhat, K = setup(*E2)
    assert Zhat.vertices == verts(ZZ, "", "a") and K.vertices == verts(ZZ, "", "a", "b", "a b")
    Zhat, K = setup(*E3)
    assert K.vertices == verts(F2, "", "a", "b", "b a")


def test_setup_rejects_members():
    Z, _ = E1
    with pytest.raises(PreconditionError):
        setup(Z, nf(Z1, "v v v"))


def test_partition_examples():
    c = construct(*E1)
    P = c.partition
    assert P.all == P.Z_class and not (P.N_class | P.H_class | P.B_class)
    c = construct(*E2)
    P = c.partition
    assert P.Z_class == {edge_key(ZZ, IDENTITY, "a")}
    assert P.H_class == {edge_key(ZZ, IDENTITY, "b")} and not P.N_class and not P.B_class


def test_N_class_cycle_length():
    graph = DefiningGraph.from_edges("vw")
    Z = cycle_complex(graph, "v", 3)
    c = construct(Z, nf(graph, "v v v v w"))
    assert c.partition.N_class
    assert set(c.partition.cycle_length.values()) == {3}
    assert all(k[1] == "v" for k in c.partition.N_class)


def test_chain_examples():
    assert construct(*E1).partition.chain == []
    P = construct(*E2).partition
    assert P.chain == [edge_key(ZZ, IDENTITY, "b")] and P.lengths == [1]
    P = construct(*E3).partition
    assert P.chain == [edge_key(F2, IDENTITY, "b"), edge_key(F2, nf(F2, "b"), "a")]
    assert P.lengths == [1, 1]


def test_floor_and_quotient_examples():
    c = construct(*E2)
    assert c.floor == c.Zhat and set(c.plan.table.values()) == {0}
    c = construct(*E1)
    assert c.floor == c.K
    assert c.plan.table[nf(Z1, "v v v")] == 0 and c.plan.table[nf(Z1, "v")] == 1
    graph = DefiningGraph.from_edges("vw")
    c = construct(cycle_complex(graph, "v", 3), nf(graph, "w"))
    assert c.floor == c.Zhat


def test_frame_pieces():
    c = construct(*E2)
    assert [p.kind for p in c.pieces] == ["interfered"]
    assert c.pieces[0].cross_section.size == 1
    c = construct(*E3)
    assert c.pieces[0].kind == "isolated"
    for case in (E1, E2, E3):
        c = construct(*case)
        assert all(p.cross_section.size <= case[0].size for p in c.pieces)


def test_worked_threads():
    Y = theorem_a(*E1)
    assert Y.sigma == E1[0].sigma and Y.size == 3
    Y = theorem_a(*E2)
    assert Y.size == 2 and Y.sigma["a"] == {0: 0, 1: 1} and Y.sigma["b"] == {0: 1}
    Y = theorem_a(*E3)
    assert Y.size == 3 and check_local_isometry(Y).ok
    assert Y.size <= E3[0].size + E3[1].length
    for Z, g in (E1, E2, E3):
        assert verify_theorem_a(Z, g, theorem_a(Z, g)).ok


def test_tampered_outputs_fail_verification():
    Z, g = E2
    Y = theorem_a(Z, g)
    broken = LabeledComplex(Y.graph, Y.vertices, Y.base,
                            {"a": {0: 0}, "b": dict(Y.sigma["b"])})
    rep = verify_theorem_a(Z, g, broken)
    assert not rep.local_isometry and not rep.ok
    closing = LabeledComplex(Y.graph, Y.vertices, Y.base,
                             {"a": dict(Y.sigma["a"]), "b": {0: 0, 1: 1}})
    rep = verify_theorem_a(Z, g, closing)
    assert not rep.g_not_closed and not rep.ok


def test_fleet_theorem_a_and_invariants():
    rng = random.Random(21)
    done = 0
    while done < 40:
        graph = random_graph(rng)
        Z = random_local_isometry(rng, graph)
        g = random_word(rng, graph, 4)
        if member(Z, g):
            continue
        c = construct(Z, g)
        rep = verify_theorem_a(Z, g, c.Y)
        assert rep.ok, rep.details
        S = {H.canonical_key for H in hyperplanes_of(c.K)}
        assert partition_problems(c.partition, S, graph) == []
        # q agrees with the covering projection on the lifted domain
        for p in c.Zhat.vertices:
            assert c.plan.table[p] == c.projection[p]
        # exponent pushes commute
        for p, r in c.plan.exponents.items():
            z0 = c.projection.get(p)
            if z0 is None or len(r) < 2:
                continue
            ends = set()
            for order in itertools.permutations(r):
                z = z0
                for j in order:
                    z = _push(Z, z, c.plan.labels[j], r[j])
                ends.add(z)
            assert len(ends) == 1
        if c.partition.N_class:
            frames = generalized_frames(c.floor, c.Zhat, c.plan)
            assert intersection_law_holds(frames, c.plan, c.Zhat)
        done += 1
