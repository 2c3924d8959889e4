import random

import numpy as np
import pytest

import posetdim as pd
from posetdim import (
    CycleError,
    ExtensionMismatch,
    IncPair,
    cover_relation,
    incomparable_pairs,
    is_convex,
    poset_from_relations,
    subposet,
    verify_realizer,
)
from posetdim.core import is_linear_extension, linear_extension_of

from helpers import random_poset


def chain3():
    return poset_from_relations(["a", "b", "c"], [("a", "b"), ("b", "c")], "cover")


def s2():
    return pd.gen_standard_example(2)


def test_chain_closure():
    p = chain3()
    rels = {(p.elements[a], p.elements[b]) for a, b in np.argwhere(p.lt)}
    assert rels == {("a", "b"), ("b", "c"), ("a", "c")}


def test_reflexive_relation_rejected():
    with pytest.raises(CycleError):
        poset_from_relations(["a"], [("a", "a")], "order")


def test_cycle_rejected():
    with pytest.raises(CycleError):
        poset_from_relations(["a", "b"], [("a", "b"), ("b", "a")], "order")


def test_unknown_element():
    with pytest.raises(pd.UnknownElement):
        poset_from_relations(["a"], [("a", "b")], "order")


def test_s2_relations():
    p = s2()
    rels = {(p.elements[a], p.elements[b]) for a, b in np.argwhere(p.lt)}
    assert rels == {("a1", "b2"), ("a2", "b1")}


def test_cover_relation_chain():
    p = chain3()
    assert set(cover_relation(p)) == {(0, 1), (1, 2)}


def test_cover_relation_s2():
    p = s2()
    names = {(p.elements[a], p.elements[b]) for a, b in cover_relation(p)}
    assert names == {("a1", "b2"), ("a2", "b1")}


def test_cover_relation_grid22():
    # oracle: (a,b) is a cover iff a<b and no c strictly between
    p = pd.gen_grid(2, 2)
    expected = {
        (a, b)
        for a in range(4)
        for b in range(4)
        if p.lt[a, b] and not any(p.lt[a, c] and p.lt[c, b] for c in range(4))
    }
    assert set(cover_relation(p)) == expected
    assert len(expected) == 4


def test_incomparable_pairs_chain_empty():
    assert incomparable_pairs(chain3()) == []


def test_incomparable_pairs_antichain():
    p = poset_from_relations(["a", "b"], [], "order")
    assert incomparable_pairs(p) == [IncPair(0, 1), IncPair(1, 0)]


def test_incomparable_pairs_s2():
    p = s2()
    got = {(p.elements[q.x], p.elements[q.y]) for q in incomparable_pairs(p)}
    assert got == {
        ("a1", "b1"), ("b1", "a1"), ("a2", "b2"), ("b2", "a2"),
        ("a1", "a2"), ("a2", "a1"), ("b1", "b2"), ("b2", "b1"),
    }


def test_verify_realizer_chain():
    p = chain3()
    assert verify_realizer(p, [(0, 1, 2)]).valid


def test_verify_realizer_counterexample():
    p = s2()
    e = {name: i for i, name in enumerate(p.elements)}
    exts = [
        tuple(e[x] for x in ["a1", "a2", "b1", "b2"]),
        tuple(e[x] for x in ["a2", "a1", "b2", "b1"]),
    ]
    check = verify_realizer(p, exts)
    assert not check.valid
    a, b = check.pair
    assert {p.elements[a], p.elements[b]} in ({"a1", "b1"}, {"a2", "b2"})
    assert "never reversed" in check.reason


def test_verify_realizer_s2_witness():
    p = s2()
    res = pd.exact_dimension(p)
    assert verify_realizer(p, res.witness).valid
    assert len(res.witness) == 2


def test_verify_realizer_wrong_elements():
    p = s2()
    with pytest.raises(ExtensionMismatch):
        verify_realizer(p, [(0, 1, 2)])


def test_subposet_chain():
    p = chain3()
    sub = subposet(p, [0, 2])
    assert sub.elements == ("a", "c")
    assert sub.lt[0, 1] and not sub.lt[1, 0]


def test_subposet_s3_gives_s2():
    p = pd.gen_standard_example(3)
    keep = [p.index(x) for x in ("a1", "a2", "b1", "b2")]
    sub = subposet(p, keep)
    rels = {(sub.elements[a], sub.elements[b]) for a, b in np.argwhere(sub.lt)}
    assert rels == {("a1", "b2"), ("a2", "b1")}


def test_subposet_identity():
    p = s2()
    assert subposet(p, range(p.n)) == p


def test_is_convex():
    p = chain3()
    assert not is_convex(p, [0, 2])
    assert is_convex(p, [0, 1])


def test_diamond_block_convex_in_block_grid():
    p = pd.gen_block_grid(2, 2)
    w = p.index("g(0,1)")
    diamond = [w, p.index("x@g(0,1)"), p.index("y@g(0,1)"), p.index("z@g(0,1)")]
    assert is_convex(p, diamond)


def test_cover_round_trip_random():
    rng = random.Random(0)
    for _ in range(50):
        p = random_poset(rng, rng.randrange(1, 10), rng.uniform(0.1, 0.6))
        covers = [(p.elements[a], p.elements[b]) for a, b in cover_relation(p)]
        assert poset_from_relations(p.elements, covers, "cover") == p


def test_incomparable_count_random():
    rng = random.Random(1)
    for _ in range(50):
        p = random_poset(rng, rng.randrange(1, 10), rng.uniform(0.1, 0.6))
        n = p.n
        assert len(incomparable_pairs(p)) == n * (n - 1) - 2 * int(p.lt.sum())


def test_random_subposet_invariants():
    rng = random.Random(2)
    for _ in range(30):
        p = random_poset(rng, 8, 0.3)
        keep = rng.sample(range(8), rng.randrange(1, 9))
        sub = subposet(p, keep)
        lt = sub.lt
        assert not lt.diagonal().any()
        assert not (lt & lt.T).any()
        assert not (((lt @ lt) & ~lt)).any()


def test_linear_extension_of():
    rng = random.Random(3)
    for _ in range(20):
        p = random_poset(rng, 7, 0.4)
        assert is_linear_extension(p, linear_extension_of(p))
