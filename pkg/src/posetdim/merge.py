"""Assembling a realizer of P from realizers of its blocks.

Given size-d realizers for every block, the merge rule splices each new
block's extension into the running extension at the block's root,
yielding d extensions of P whose restriction to any block is that
block's extension (block property) and in which every tail occupies a
consecutive run (interval property).  The incomparable pairs these d
extensions fail to reverse split into two reversible sets, classified
by which side of their separating block their up-set or down-set stays
on; reversing each set adds at most two extensions, so the result has
size at most d + 2.
"""

from dataclasses import dataclass

import networkx as nx
import numpy as np

from .blocks import BlockDecomposition, block_decomposition, tail
from .core import IncPair, Poset, incomparable_pairs, subposet, verify_realizer
from .errors import (
    ClaimViolation,
    InvalidBlockRealizer,
    PosetError,
    SharedElements,
)
from .solver import exact_dimension


@dataclass
class MergedFamily:
    extensions: list        # d extensions of the full poset
    block_realizers: dict   # block index -> list of d extensions (global indices)
    decomposition: BlockDecomposition


@dataclass
class ResidualPair:
    pair: IncPair
    block_index: int
    u: int
    v: int
    side: int  # which extra extension reverses it: d+1 or d+2


def merge_rule(m_old, m_new, w):
    """Splice m_new into m_old at their unique shared element w.

    m_old = A + [w] + B and m_new = C + [w] + D over element sets
    sharing only w; the result is A + C + [w] + D + B, whose
    restrictions to the two inputs are m_old and m_new.
    """
    shared = set(m_old) & set(m_new)
    if shared != {w}:
        raise SharedElements(f"inputs share {sorted(shared)}, expected exactly [{w}]")
    ko = m_old.index(w)
    kn = m_new.index(w)
    return tuple(m_old[:ko]) + tuple(m_new[:kn]) + (w,) + tuple(m_new[kn + 1:]) + tuple(m_old[ko + 1:])


def _verify_block_realizer(p, block, exts, d):
    sub = subposet(p, sorted(block))
    to_sub = {g: sub.index(p.elements[g]) for g in block}
    mapped = []
    for ext in exts:
        if set(ext) != set(block):
            raise InvalidBlockRealizer("extension element set differs from block")
        mapped.append(tuple(to_sub[g] for g in ext))
    if len(mapped) != d:
        raise InvalidBlockRealizer(f"expected {d} extensions, got {len(mapped)}")
    check = verify_realizer(sub, mapped)
    if not check.valid:
        raise InvalidBlockRealizer(f"not a realizer of its block: {check.reason}")


def build_family(p, dec, block_realizers):
    """Merge per-block realizers of equal size d into d extensions of p.

    Every block realizer must be a valid size-d realizer of its block
    (pad shorter ones by repeating an extension before calling).  The
    block and interval properties are asserted on the result.
    """
    sizes = {len(exts) for exts in block_realizers.values()}
    if len(sizes) != 1:
        raise InvalidBlockRealizer(f"realizer sizes differ: {sorted(sizes)}")
    d = sizes.pop()
    for i, b in enumerate(dec.blocks):
        if i not in block_realizers:
            raise InvalidBlockRealizer(f"missing realizer for block {i}")
        _verify_block_realizer(p, b, block_realizers[i], d)

    extensions = []
    for j in range(d):
        m = tuple(block_realizers[0][j])
        for i in range(1, dec.t):
            m = merge_rule(m, tuple(block_realizers[i][j]), dec.roots[i])
        extensions.append(m)

    fam = MergedFamily(extensions, dict(block_realizers), dec)
    _assert_block_property(p, fam)
    _assert_interval_property(p, fam)
    return fam


def _assert_block_property(p, fam):
    for j, ext in enumerate(fam.extensions):
        for i, b in enumerate(fam.decomposition.blocks):
            restricted = tuple(v for v in ext if v in b)
            if restricted != tuple(fam.block_realizers[i][j]):
                raise PosetError(
                    f"block property fails: extension {j} restricted to block {i}"
                )


def _assert_interval_property(p, fam):
    dec = fam.decomposition
    positions = []
    for ext in fam.extensions:
        pos = {v: r for r, v in enumerate(ext)}
        positions.append(pos)
    for i in range(dec.t):
        for u in dec.blocks[i]:
            members = tail(p, dec, u, i).members
            if len(members) == 1:
                continue
            for j, pos in enumerate(positions):
                ranks = sorted(pos[v] for v in members)
                if ranks[-1] - ranks[0] != len(ranks) - 1:
                    raise PosetError(
                        f"interval property fails: tail ({u},{i}) in extension {j}"
                    )


def _tree_path_blocks(dec, x, y):
    """Blocks every cover-graph x-y path crosses in >= 2 vertices, plus
    the entry/exit vertices of the least-index one."""
    path = nx.shortest_path(dec.tree, dec.node_of(x), dec.node_of(y))
    block_positions = {node[1]: k for k, node in enumerate(path) if node[0] == "block"}
    i = min(block_positions)
    k = block_positions[i]
    u = x if k == 0 else path[k - 1][1]
    v = y if k == len(path) - 1 else path[k + 1][1]
    return i, u, v


def residual_pairs(p, fam):
    """Incomparable pairs below-in-every-extension, with their
    separating block, boundary vertices, and reversal side."""
    dec = fam.decomposition
    d = len(fam.extensions)
    n = p.n
    pos = np.empty((d, n), dtype=int)
    for j, ext in enumerate(fam.extensions):
        pos[j, list(ext)] = np.arange(n)
    out = []
    tails = {}

    def tail_members(u, i):
        if (u, i) not in tails:
            tails[(u, i)] = tail(p, dec, u, i).members
        return tails[(u, i)]

    for q in incomparable_pairs(p):
        if not all(pos[j, q.x] < pos[j, q.y] for j in range(d)):
            continue
        i, u, v = _tree_path_blocks(dec, q.x, q.y)
        t_u = tail_members(u, i)
        t_v = tail_members(v, i)
        if not (q.x in t_u and q.y not in t_u and q.y in t_v and q.x not in t_v):
            raise ClaimViolation(f"tail membership fails for pair ({q.x},{q.y})")
        if not p.less(u, v):
            raise ClaimViolation(f"boundary vertices not ordered for ({q.x},{q.y})")
        ups = set(map(int, np.flatnonzero(p.lt[q.x]))) | {q.x}
        downs = set(map(int, np.flatnonzero(p.lt[:, q.y]))) | {q.y}
        if ups <= t_u:
            side = d + 1
        elif downs <= t_v:
            side = d + 2
        else:
            raise ClaimViolation(
                f"pair ({q.x},{q.y}) fits neither reversal side"
            )
        out.append(ResidualPair(q, i, u, v, side))
    return out


def complete_realizer(p, fam, residual):
    """Extend the merged family with at most two reversing extensions.

    The returned list always passes verify_realizer; empty sides are
    dropped, so a 2-connected poset keeps its size-d realizer.
    """
    from .reversal import reverse_extension

    d = len(fam.extensions)
    realizer = list(fam.extensions)
    for side in (d + 1, d + 2):
        pairs = [r.pair for r in residual if r.side == side]
        if pairs:
            realizer.append(reverse_extension(p, pairs))
    check = verify_realizer(p, realizer)
    if not check.valid:
        raise PosetError(f"merged realizer invalid: {check.reason} at {check.pair}")
    return realizer


def dimension_upper_bound(p, timeout=300.0, order_seed=None):
    """Bound dim(p) by d + 2 where d is the largest block dimension.

    Solves each block exactly, pads block realizers to a common size,
    merges, and reverses the residual pairs.  Returns (size, realizer)
    with the realizer verified; size is d on 2-connected input and at
    most d + 2 always.
    """
    if p.n == 1:
        return 1, [(0,)]
    dec = block_decomposition(p, order_seed=order_seed)
    block_realizers = {}
    d = 1
    for i, b in enumerate(dec.blocks):
        sub = subposet(p, sorted(b))
        res = exact_dimension(sub, timeout=timeout)
        to_global = [p.index(name) for name in sub.elements]
        block_realizers[i] = [tuple(to_global[k] for k in ext) for ext in res.witness]
        d = max(d, res.dim)
    for i, exts in block_realizers.items():
        while len(exts) < d:
            exts.append(exts[-1])
    fam = build_family(p, dec, block_realizers)
    residual = residual_pairs(p, fam)
    realizer = complete_realizer(p, fam, residual)
    assert len(realizer) <= d + 2
    return len(realizer), realizer
