"""Reversible pair sets and alternating cycles.

A set R of ordered incomparable pairs is reversible when one linear
extension puts y above x... concretely: y before x for every (x, y) in
R.  The obstruction is an alternating cycle: pairs (x_1,y_1)..(x_k,y_k)
with x_i <= y_{i+1} cyclically.  Detection runs on the digraph whose
nodes are the pairs, with an arc (x,y) -> (x',y') iff x <= y' in P.
"""

import heapq

import numpy as np

from .core import IncPair, is_linear_extension
from .errors import NotReversible, PosetError


def _check_pairs(p, pairs):
    pairs = list(pairs)
    for q in pairs:
        if not p.incomparable(q.x, q.y):
            raise PosetError(f"pair ({q.x},{q.y}) is not incomparable")
    return pairs


def find_alternating_cycle(p, pairs):
    """Return a list of IncPair forming an alternating cycle within
    ``pairs``, or None.  Deterministic DFS; the witness is any cycle,
    not necessarily a shortest one."""
    pairs = _check_pairs(p, pairs)
    m = len(pairs)
    if m < 2:
        return None
    arcs = [
        [j for j in range(m) if j != i and p.leq(pairs[i].x, pairs[j].y)]
        for i in range(m)
    ]
    color = [0] * m  # 0 unseen, 1 on stack, 2 done
    parent = [-1] * m
    for s in range(m):
        if color[s]:
            continue
        stack = [(s, iter(arcs[s]))]
        color[s] = 1
        while stack:
            node, it = stack[-1]
            advanced = False
            for j in it:
                if color[j] == 0:
                    color[j] = 1
                    parent[j] = node
                    stack.append((j, iter(arcs[j])))
                    advanced = True
                    break
                if color[j] == 1:
                    # walk back from node to j along parents
                    cyc = [node]
                    while cyc[-1] != j:
                        cyc.append(parent[cyc[-1]])
                    cyc.reverse()
                    return [pairs[k] for k in cyc]
            if not advanced:
                color[node] = 2
                stack.pop()
    return None


def is_reversible(p, pairs):
    return find_alternating_cycle(p, pairs) is None


def reverse_extension(p, pairs):
    """A linear extension of p with y before x for every (x, y) in pairs.

    Topologically sorts the order relation augmented with the arcs
    y -> x.  Raises NotReversible if the pairs contain an alternating
    cycle (equivalently, the augmented digraph is cyclic).
    """
    pairs = _check_pairs(p, pairs)
    n = p.n
    succ = [set(map(int, np.flatnonzero(p.lt[i]))) for i in range(n)]
    for q in pairs:
        succ[q.y].add(q.x)
    indeg = [0] * n
    for i in range(n):
        for j in succ[i]:
            indeg[j] += 1
    ready = [i for i in range(n) if indeg[i] == 0]
    order = []
    heapq.heapify(ready)
    while ready:
        i = heapq.heappop(ready)
        order.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(ready, j)
    if len(order) != n:
        raise NotReversible("pair set contains an alternating cycle")
    ext = tuple(order)
    assert is_linear_extension(p, ext)
    return ext
