import pytest

import posetdim as pd
from posetdim.blocks import block_decomposition, cover_graph
from posetdim.core import cover_relation, incomparable_pairs
from posetdim.solver import critical_pairs


def test_chain_shape():
    p = pd.gen_chain(5)
    assert p.n == 5
    assert cover_relation(p) == [(i, i + 1) for i in range(4)]
    assert incomparable_pairs(p) == []


def test_standard_example_relations():
    for d in (2, 3, 4):
        p = pd.gen_standard_example(d)
        assert p.n == 2 * d
        for i in range(d):
            for j in range(d):
                a = p.index(f"a{i + 1}")
                b = p.index(f"b{j + 1}")
                assert p.less(a, b) == (i != j)
        # every (a_i, b_i) is a critical pair
        cps = {(q.x, q.y) for q in critical_pairs(p)}
        for i in range(d):
            assert (p.index(f"a{i + 1}"), p.index(f"b{i + 1}")) in cps


def test_grid_order():
    p = pd.gen_grid(3, 2)
    assert p.n == 9
    for i in range(3):
        for j in range(3):
            for k in range(3):
                for l in range(3):
                    u = p.index(f"g({i},{j})")
                    v = p.index(f"g({k},{l})")
                    expect = (i, j) != (k, l) and i <= k and j <= l
                    assert p.less(u, v) == expect


def test_grid_size_guard():
    with pytest.raises(ValueError):
        pd.gen_grid(40, 4)


def test_block_grid_structure():
    n, d = 2, 2
    p = pd.gen_block_grid(n, d)
    base = n ** d
    assert p.n == base + 3 * base
    dec = block_decomposition(p)
    assert dec.t == base + 1
    # cut vertices are exactly the base grid points
    grid_idx = {p.index(f"g({i},{j})") for i in range(n) for j in range(n)}
    assert dec.cut_vertices == grid_idx
    # each diamond: x < w < z, x < y < z, w parallel to y
    for i in range(n):
        for j in range(n):
            w = p.index(f"g({i},{j})")
            x = p.index(f"x@g({i},{j})")
            y = p.index(f"y@g({i},{j})")
            z = p.index(f"z@g({i},{j})")
            assert p.less(x, w) and p.less(w, z)
            assert p.less(x, y) and p.less(y, z)
            assert p.incomparable(w, y)


def test_block_grid_diamond_blocks_rooted_at_base():
    p = pd.gen_block_grid(2, 2)
    dec = block_decomposition(p)
    for i, b in enumerate(dec.blocks):
        names = {p.elements[v] for v in b}
        if any("@" in s for s in names) and i in dec.roots:
            assert len(b) == 4
            assert "@" not in p.elements[dec.roots[i]]


def test_fig1_left_counts():
    for n in (2, 3, 4):
        p = pd.gen_fig1_left(n)
        assert p.n == 2 * n + 3


def test_fig1_right_relations():
    n = 3
    p = pd.gen_fig1_right(n)
    assert p.n == 3 * n + 3
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            ci = p.index(f"c{i}")
            dj = p.index(f"d{j}")
            assert p.less(ci, dj) == (i != j)
    cn1 = p.index(f"c{n+1}")
    assert all(p.incomparable(cn1, p.index(f"d{j}")) for j in range(1, n + 1))


def test_fig3_trees_are_trees():
    import networkx as nx

    for p in pd.gen_fig3_trees():
        g = cover_graph(p)
        assert nx.is_tree(g)
        assert p.n == 7


def test_fig4_diamonds_structure():
    n = 4
    p = pd.gen_fig4_diamonds(n)
    assert p.n == 3 * n + 1
    x = p.index("x")
    for i in range(1, n + 1):
        a = p.index(f"a{i}")
        b = p.index(f"b{i}")
        c = p.index(f"c{i}")
        assert p.less(a, x) and p.less(x, c)
        assert p.less(a, b) and p.less(b, c)
        assert p.incomparable(b, x)
    dec = block_decomposition(p)
    assert dec.t == n
    assert dec.cut_vertices == ({x} if n > 1 else frozenset())
    assert all(r == x for r in dec.roots.values())


def test_section5_antichains_2d():
    p = pd.gen_block_grid(2, 2)
    emb = pd.gen_section5_antichains(p, [{0, 1}, {0, 1}])
    x_lo = p.index(f"x@{emb.lo}")
    z_hi = p.index(f"z@{emb.hi}")
    assert p.less(x_lo, p.index(emb.lo))
    assert p.less(p.index(emb.hi), z_hi)
    assert p.incomparable(p.index(f"x@{emb.lo}"), p.index(f"y@{emb.hi}"))
    assert p.incomparable(p.index(f"y@{emb.lo}"), p.index(f"z@{emb.hi}"))


def test_section5_antichains_3sets():
    p = pd.gen_block_grid(3, 2)
    emb = pd.gen_section5_antichains(p, [{0, 1, 2}, {0, 1, 2}], special=0)
    assert len(emb.a) == len(emb.b)
    assert p.less(p.index(emb.lo), p.index(emb.hi))


def test_section5_antichains_rejects_singletons():
    p = pd.gen_block_grid(2, 2)
    with pytest.raises(ValueError):
        pd.gen_section5_antichains(p, [{0}, {0, 1}])


def test_generator_param_validation():
    with pytest.raises(ValueError):
        pd.gen_chain(0)
    with pytest.raises(ValueError):
        pd.gen_standard_example(1)
    with pytest.raises(ValueError):
        pd.gen_grid(0, 2)
    with pytest.raises(ValueError):
        pd.gen_fig4_diamonds(0)
