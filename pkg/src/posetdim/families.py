"""Constructors for the poset families used throughout the package.

Naming is fixed so serialized output is stable: grid points are
"g(c1,...,cd)", diamond satellites "x@<point>", "y@<point>",
"z@<point>".
"""

import itertools
from dataclasses import dataclass

import numpy as np

from .core import Poset, poset_from_relations

MAX_GRID_POINTS = 10**6


def gen_chain(n):
    """Total order 0 < 1 < ... < n-1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    elements = tuple(str(i) for i in range(n))
    return poset_from_relations(elements, [(str(i), str(i + 1)) for i in range(n - 1)], "cover")


def gen_standard_example(d):
    """Height-2 poset with a_i < b_j exactly when i != j; dimension d."""
    if d < 2:
        raise ValueError("d must be >= 2")
    elements = tuple(f"a{i}" for i in range(1, d + 1)) + tuple(f"b{i}" for i in range(1, d + 1))
    rels = [(f"a{i}", f"b{j}") for i in range(1, d + 1) for j in range(1, d + 1) if i != j]
    return poset_from_relations(elements, rels, "order")


def grid_name(coords):
    return "g(" + ",".join(map(str, coords)) + ")"


def gen_grid(n, d):
    """Componentwise order on d-tuples over {0..n-1}."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if n**d > MAX_GRID_POINTS:
        raise ValueError(f"grid too large: {n}^{d} points")
    points = list(itertools.product(range(n), repeat=d))
    elements = tuple(grid_name(c) for c in points)
    coords = np.array(points)
    lt = np.all(coords[:, None, :] <= coords[None, :, :], axis=2)
    np.fill_diagonal(lt, False)
    return Poset(elements, lt)


def gen_block_grid(n, d):
    """A grid base with a diamond hung on every base point.

    The base n^d grid is one block and the set of cut vertices; every
    base point w carries a chain x@w < y@w < z@w with x@w < w < z@w
    while w and y@w stay incomparable, so {w, x@w, y@w, z@w} is a
    4-point diamond block.
    """
    if n < 2 or d < 2:
        raise ValueError("need n >= 2 and d >= 2")
    if 4 * n**d > MAX_GRID_POINTS:
        raise ValueError(f"poset too large: 4*{n}^{d} points")
    points = list(itertools.product(range(n), repeat=d))
    elements = []
    rels = []
    for c in points:
        w = grid_name(c)
        elements += [w, f"x@{w}", f"y@{w}", f"z@{w}"]
        rels += [(f"x@{w}", w), (w, f"z@{w}"), (f"x@{w}", f"y@{w}"), (f"y@{w}", f"z@{w}")]
    for c in points:
        for j in range(d):
            if c[j] + 1 < n:
                up = c[:j] + (c[j] + 1,) + c[j + 1:]
                rels.append((grid_name(c), grid_name(up)))
    return poset_from_relations(tuple(elements), rels, "cover")


def gen_fig1_left(n):
    """Cut-vertex family: a cycle block with two pendant edges.

    Elements a, e, top, b_1..b_n, c_1..c_n with covers a < b_i
    (i < n), a < e < top, b_i < c_i, b_i < c_{i+1} (i < n), b_n < c_n,
    and c_j < top (j >= 2).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    elements = ["a", "e", "top"] + [f"b{i}" for i in range(1, n + 1)] + [f"c{i}" for i in range(1, n + 1)]
    rels = [("a", "e"), ("e", "top")]
    for i in range(1, n):
        rels += [("a", f"b{i}"), (f"b{i}", f"c{i}"), (f"b{i}", f"c{i+1}")]
    rels.append((f"b{n}", f"c{n}"))
    for j in range(2, n + 1):
        rels.append((f"c{j}", "top"))
    return poset_from_relations(tuple(elements), rels, "cover")


def gen_fig1_right(n):
    """Cut-vertex family embedding a standard example.

    Elements a, b_1..b_{n+1}, c_1..c_{n+1}, d_1..d_n with covers
    a < b_i (i <= n), b_i < c_i (i <= n), b_j < c_{n+1} (all j), and
    c_i < d_j exactly when i != j.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    elements = (
        ["a"]
        + [f"b{i}" for i in range(1, n + 2)]
        + [f"c{i}" for i in range(1, n + 2)]
        + [f"d{i}" for i in range(1, n + 1)]
    )
    rels = []
    for i in range(1, n + 1):
        rels += [("a", f"b{i}"), (f"b{i}", f"c{i}")]
        for j in range(1, n + 1):
            if i != j:
                rels.append((f"c{i}", f"d{j}"))
    for j in range(1, n + 2):
        rels.append((f"b{j}", f"c{n+1}"))
    return poset_from_relations(tuple(elements), rels, "cover")


def gen_fig3_trees():
    """The two fixed 7-element tree posets of dimension 3."""
    left = poset_from_relations(
        ("a", "b1", "b2", "b3", "b4", "c1", "c2"),
        [("a", "b2"), ("a", "b4"), ("b1", "c1"), ("b2", "c1"), ("b2", "c2"), ("b3", "c2")],
        "cover",
    )
    right = poset_from_relations(
        ("x1", "x2", "x3", "x4", "y1", "y2", "y3"),
        [("x1", "y1"), ("x2", "y1"), ("x1", "y2"), ("x3", "y2"), ("x1", "y3"), ("x4", "y3")],
        "cover",
    )
    return left, right


def gen_fig4_diamonds(n):
    """n diamonds sharing the single cut vertex x; outerplanar cover graph.

    Covers a_i < x < c_i and a_i < b_i < c_i, with b_i incomparable
    to x.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    elements = ["x"]
    rels = []
    for i in range(1, n + 1):
        elements += [f"a{i}", f"b{i}", f"c{i}"]
        rels += [(f"a{i}", "x"), ("x", f"c{i}"), (f"a{i}", f"b{i}"), (f"b{i}", f"c{i}")]
    return poset_from_relations(tuple(elements), rels, "cover")


@dataclass
class EmbeddedExample:
    a: list      # antichain element names, a_1..a_d
    b: list      # antichain element names, b_1..b_d
    lo: str      # all-minimum base point
    hi: str      # companion base point (all-maximum for 2-subsets)
    mid: str     # third base point, only for 3-subsets ("" otherwise)


def gen_section5_antichains(p, tsets, special=0):
    """Locate the standard example and witness points a grid of
    coordinate subsets embeds in a block-grid poset.

    ``tsets`` is a list of d coordinate subsets, each of size 2 or 3
    (all the same size).  For size-2 subsets the witnesses are the
    all-min point ``lo`` and all-max point ``hi``; for size-3 subsets
    the three points follow the staircase pattern around coordinate
    ``special``.  The embedding facts are asserted: a_i is below b_j
    exactly when i != j (for d = 2 the points a_i and b_j with i != j
    coincide, and the satellite antichains x@a_i / z@b_j carry the
    standard example instead), x@lo < lo < hi < z@hi, and both
    (x@lo, y@hi) and (y@lo, z@hi) are incomparable.
    """
    d = len(tsets)
    if d < 2:
        raise ValueError("need at least 2 coordinate subsets")
    sizes = {len(t) for t in tsets}
    if sizes not in ({2}, {3}):
        raise ValueError("coordinate subsets must all have size 2 or all size 3")
    k = sizes.pop()
    tsets = [sorted(t) for t in tsets]

    def name(coords):
        return grid_name(coords)

    a = []
    b = []
    for i in range(d):
        a.append(name([max(tsets[j]) if i == j else min(tsets[j]) for j in range(d)]))
        b.append(name([min(tsets[j]) if i == j else max(tsets[j]) for j in range(d)]))

    if k == 2:
        lo = name([min(t) for t in tsets])
        hi = name([max(t) for t in tsets])
        mid = ""
    else:
        if not (0 <= special < d):
            raise ValueError("special coordinate out of range")
        lo = name([t[0] for t in tsets])
        hi = name([tsets[j][2] if j == special else tsets[j][1] for j in range(d)])
        mid = name([tsets[j][1] if j == special else tsets[j][2] for j in range(d)])

    ai = [p.index(x) for x in a]
    bi = [p.index(x) for x in b]
    for i in range(d):
        for j in range(d):
            want = i != j
            # a_i and b_j can be the same base point when d = 2; the
            # satellite copy below is a standard example regardless
            base_leq = p.less(ai[i], bi[j]) or ai[i] == bi[j]
            if base_leq != want:
                raise AssertionError("antichains do not embed a standard example")
            sat = p.less(p.index(f"x@{a[i]}"), p.index(f"z@{b[j]}"))
            if sat != want:
                raise AssertionError("satellite antichains do not embed a standard example")
    x_lo = p.index(f"x@{lo}")
    y_lo = p.index(f"y@{lo}")
    y_hi = p.index(f"y@{hi}")
    z_hi = p.index(f"z@{hi}")
    ilo, ihi = p.index(lo), p.index(hi)
    assert p.less(x_lo, ilo) and p.less(ilo, ihi) and p.less(ihi, z_hi)
    assert p.incomparable(x_lo, y_hi)
    assert p.incomparable(y_lo, z_hi)
    return EmbeddedExample(a, b, lo, hi, mid)
