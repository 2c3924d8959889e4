"""Cover graphs, biconnected blocks, block-cut trees, and tails.

Blocks are the maximal 2-connected pieces of the cover graph (bridges
count as 2-vertex blocks).  They are labeled B_0..B_{t-1} so that every
block after the first meets the union of its predecessors in exactly
one vertex, its root.  The tail of (u, B_i) is u together with the
later-block elements that u separates from B_i.
"""

from dataclasses import dataclass
from typing import Optional

import networkx as nx

from .core import Poset, cover_relation, is_convex, subposet
from .errors import Disconnected, NotInBlock, PosetError


@dataclass
class BlockDecomposition:
    blocks: list            # list of frozenset of vertex indices, B_0..B_{t-1}
    roots: dict             # block index i >= 1 -> root vertex of B_i
    cut_vertices: frozenset
    tree: nx.Graph          # bipartite: ("block", i) / ("cut", v)
    block_of: dict          # non-cut vertex -> its unique block index

    @property
    def t(self):
        return len(self.blocks)

    def node_of(self, v):
        """Tree node representing vertex v."""
        if v in self.cut_vertices:
            return ("cut", v)
        return ("block", self.block_of[v])


@dataclass
class Tail:
    u: int
    block_index: int
    members: frozenset


def cover_graph(p):
    """Undirected graph of the cover pairs, on all vertex indices."""
    g = nx.Graph()
    g.add_nodes_from(range(p.n))
    g.add_edges_from(cover_relation(p))
    return g


def is_connected(g):
    if g.number_of_nodes() == 0:
        return True
    return nx.is_connected(g)


def components(p):
    """Connected components of p as induced (convex) subposets."""
    g = cover_graph(p)
    comps = sorted((sorted(c) for c in nx.connected_components(g)), key=lambda c: c[0])
    return [subposet(p, c) for c in comps]


def block_decomposition(p, order_seed=None):
    """Blocks of a connected poset, labeled so the root property holds.

    The default order is a BFS of the block-cut tree from the block
    containing vertex 0, ties broken by smallest contained vertex.
    ``order_seed`` instead draws a random valid labeling (used to check
    that downstream results do not depend on the labeling).
    """
    g = cover_graph(p)
    if p.n == 0:
        raise PosetError("empty poset has no block decomposition")
    if not is_connected(g):
        raise Disconnected("cover graph is not connected")
    if p.n == 1:
        blocks = [frozenset({0})]
        tree = nx.Graph()
        tree.add_node(("block", 0))
        return BlockDecomposition(blocks, {}, frozenset(), tree, {0: 0})

    raw = [frozenset(b) for b in nx.biconnected_components(g)]
    cuts = frozenset(nx.articulation_points(g))

    # provisional canonical order for determinism of the tree itself
    raw.sort(key=lambda b: sorted(b))
    tree = nx.Graph()
    for k, b in enumerate(raw):
        tree.add_node(("block", k))
        for v in b:
            if v in cuts:
                tree.add_edge(("block", k), ("cut", v))

    if order_seed is None:
        order = _bfs_order(raw, tree)
    else:
        order = _random_order(raw, tree, order_seed)

    blocks = [raw[k] for k in order]
    # relabel tree block nodes to final indices
    relabel = {("block", k): ("block", i) for i, k in enumerate(order)}
    tree = nx.relabel_nodes(tree, relabel)

    roots = {}
    seen = set(blocks[0])
    for i in range(1, len(blocks)):
        shared = blocks[i] & seen
        if len(shared) != 1:
            raise PosetError("block labeling violates the root property")
        roots[i] = next(iter(shared))
        seen |= blocks[i]

    block_of = {}
    for i, b in enumerate(blocks):
        for v in b:
            if v not in cuts:
                block_of[v] = i

    for b in blocks:
        if not is_convex(p, b):
            raise PosetError(f"block {sorted(b)} is not convex in the poset")

    return BlockDecomposition(blocks, roots, cuts, tree, block_of)


def _bfs_order(raw, tree):
    start = min(range(len(raw)), key=lambda k: min(raw[k]))
    depth = {("block", start): 0}
    queue = [("block", start)]
    while queue:
        node = queue.pop(0)
        for nb in sorted(tree.neighbors(node), key=str):
            if nb not in depth:
                depth[nb] = depth[node] + 1
                queue.append(nb)
    keys = []
    for k in range(len(raw)):
        keys.append((depth[("block", k)], min(raw[k]), k))
    return [k for _, _, k in sorted(keys)]


def _random_order(raw, tree, seed):
    import random

    rng = random.Random(seed)
    start = rng.randrange(len(raw))
    order = [start]
    chosen = {start}
    # frontier: blocks tree-adjacent (through a cut vertex) to a chosen block
    def adjacent_blocks(k):
        for cut in tree.neighbors(("block", k)):
            for nb in tree.neighbors(cut):
                yield nb[1]

    frontier = set(adjacent_blocks(start)) - chosen
    while frontier:
        k = rng.choice(sorted(frontier))
        order.append(k)
        chosen.add(k)
        frontier |= set(adjacent_blocks(k))
        frontier -= chosen
    return order


def tail(p, dec, u, i):
    """Tail of u relative to block i: u plus the later-block elements
    that u separates from the union of the first i+1 blocks.

    Separation from the whole already-labeled part (not from block i
    alone) is what the merge construction keeps consecutive: a later
    block hanging off an earlier block elsewhere may be cut off from
    block i by its root yet sit far away in every merged extension.
    """
    if u not in dec.blocks[i]:
        raise NotInBlock(f"vertex {u} not in block {i}")
    if u not in dec.cut_vertices:
        return Tail(u, i, frozenset({u}))
    pruned = dec.tree.copy()
    pruned.remove_node(("cut", u))
    # vertices still attached to some block <= i once u is gone
    reachable = set()
    for comp in nx.connected_components(pruned):
        if any(node[0] == "block" and node[1] <= i for node in comp):
            for node in comp:
                if node[0] == "block":
                    reachable |= dec.blocks[node[1]]
                else:
                    reachable.add(node[1])
    later = set()
    for k in range(i + 1, dec.t):
        later |= dec.blocks[k]
    members = {u} | {v for v in later if v != u and v not in reachable}
    return Tail(u, i, frozenset(members))
