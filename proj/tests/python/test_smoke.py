import os
import pathlib

import pytest

import coqkit

DATA = pathlib.Path(
    os.environ.get("COQKIT_DATA", pathlib.Path(__file__).resolve().parents[2] / "data" / "quivers")
)


def load(name):
    return coqkit.load(str(DATA / f"{name}.json"))


def test_mutating_a3_gives_the_oriented_triangle():
    q, _ = load("path-a3")
    m = q.mutate("b")
    assert sorted(m.arrows()) == [("a", "c", 1), ("b", "a", 1), ("c", "b", 1)]
    assert m.mutate("b") == q


def test_alexander_of_d6():
    q, _ = load("dynkin-d6")
    assert coqkit.alexander_text(q) == "t^6 - t^5 - t + 1"
    assert coqkit.alexander(q) == [1, -1, 0, 0, 0, -1, 1]


def test_markov_invariant_of_three_vertex_quiver():
    q = coqkit.Quiver(["a", "b", "c"], [("a", "b", 3), ("b", "c", 4), ("a", "c", 5)])
    assert coqkit.markov(q, ["a", "b", "c"]) == 9 + 16 + 25 + 3 * 4 * 5


def test_large_multiplicities_survive():
    big = 2**80 + 7
    q = coqkit.Quiver(["x", "y"], [("x", "y", big)])
    assert q.matrix() == [[0, big], [-big, 0]]
    assert coqkit.Quiver.from_json(q.to_json()) == q


def test_properness_and_proper_mutation():
    q, order = load("fig5")
    assert not coqkit.is_proper_vertex(q, order, "k")
    assert coqkit.is_proper_vertex(q, order, "k", up_to_wiggles=True)
    c, order = load("cycle-d4")
    assert coqkit.is_proper(c, order)
    m, new_order = coqkit.proper_mutate(c, order, "a")
    assert sorted(new_order) == ["a", "b", "c", "d"]
    with pytest.raises(coqkit.DomainError):
        coqkit.proper_mutate(c, ["a", "d", "c", "b"], "a")


def test_total_properness_verdicts():
    q, order = load("path-a4")
    assert coqkit.verify_totally_proper(q, order)["status"] == "verified-proper-class"
    q, order = load("cycle-d4-winding2")
    verdict = coqkit.verify_totally_proper(q, order)
    assert verdict["status"] == "refuted"
    assert "witness" in verdict


def test_mutation_class_and_forkless_part():
    q, _ = load("path-a3")
    report = coqkit.mutation_class(q)
    assert report["complete"] and report["size"] == 4
    q1, _ = load("remark-q1")
    part = coqkit.forkless_part(q1, max_entry=10**9)
    assert part["complete"] and part["size"] == 14


def test_braid_words_and_invariant_report():
    q, _ = load("path-a3")
    r, order = coqkit.braid(q, ["a", "b", "c"], "s1 s2 s1 S2 S1 S2")
    assert r == q and order == ["a", "b", "c"]
    rep = coqkit.invariants(q, None, [2])
    assert rep["n"] == 3 and "d2" in rep["lattices"]


def test_errors():
    with pytest.raises(coqkit.ParseError):
        coqkit.Quiver.from_json('{"vertices": ["a", "a"]}')
    with pytest.raises(coqkit.ParseError):
        coqkit.braid(coqkit.Quiver(["a", "b"], []), ["a", "b"], "x1")
    with pytest.raises(ValueError):
        coqkit.Quiver(["a", "b"], [("a", "a", 1)])
