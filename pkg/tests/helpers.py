"""Shared random instance generators for the test suite."""

import numpy as np

from posetdim import cover_relation, poset_from_relations
from posetdim.core import Poset, _close

import posetdim as pd


def random_poset(rng, n, prob=0.3):
    """Transitive closure of a random DAG on n labeled points."""
    perm = list(range(n))
    rng.shuffle(perm)
    adj = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < prob:
                adj[perm[i], perm[j]] = True
    _close(adj)
    return Poset(tuple(map(str, range(n))), adj)


def random_tree_poset(rng, n):
    """Random tree cover graph with random edge orientations."""
    els = [str(i) for i in range(n)]
    rels = []
    for v in range(1, n):
        u = rng.randrange(v)
        a, b = (u, v) if rng.random() < 0.5 else (v, u)
        rels.append((str(a), str(b)))
    return poset_from_relations(els, rels, "cover")


_PIECES = None


def _pieces():
    global _PIECES
    if _PIECES is None:
        _PIECES = [
            pd.gen_chain(2),
            pd.gen_chain(3),
            pd.gen_grid(2, 2),
            pd.gen_standard_example(3),
            pd.gen_fig4_diamonds(1),
        ]
    return _PIECES


def random_glued_poset(rng, max_pieces=6):
    """Glue random small blocks at single shared vertices.

    Every piece has dimension <= 3, so the glued poset has max block
    dimension <= 3.
    """
    pieces = _pieces()
    p = pieces[rng.randrange(len(pieces))]
    els = [f"0.{e}" for e in p.elements]
    rels = [(f"0.{p.elements[a]}", f"0.{p.elements[b]}") for a, b in cover_relation(p)]
    for k in range(1, rng.randrange(2, max_pieces + 1)):
        q = pieces[rng.randrange(len(pieces))]
        glue_old = rng.choice(els)
        glue_new = rng.choice(q.elements)

        def name(e):
            return glue_old if e == glue_new else f"{k}.{e}"

        for e in q.elements:
            if e != glue_new:
                els.append(f"{k}.{e}")
        rels += [(name(q.elements[a]), name(q.elements[b])) for a, b in cover_relation(q)]
    return poset_from_relations(els, rels, "cover")
