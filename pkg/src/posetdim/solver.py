"""Exact order dimension by covering critical pairs with reversible sets.

The dimension of P equals the least d such that the critical pairs of P
can be partitioned into d sets none of which contains an alternating
cycle: a family of extensions reversing every critical pair is a
realizer, and restricting the search to critical pairs cuts the search
space by orders of magnitude.  The search is a backtracking CSP with a
fail-first branching heuristic and incremental cycle rejection; the
companion brute_force_dimension enumerates linear extensions outright
and serves as an independent oracle at small n.
"""

import time
from dataclasses import dataclass

import numpy as np

from .core import (
    IncPair,
    incomparable_pairs,
    linear_extension_of,
    verify_realizer,
)
from .errors import ExceedsMax, SolverTimeout, TooLarge
from .reversal import reverse_extension


@dataclass
class DimResult:
    dim: int
    witness: list  # list of extensions
    nodes: int
    elapsed: float


def critical_pairs(p):
    """Ordered incomparable pairs (x, y) with downset(x) within
    downset(y) and upset(y) within upset(x)."""
    lt = p.lt
    n = p.n
    out = []
    for q in incomparable_pairs(p):
        x, y = q.x, q.y
        if not (lt[:, x] & ~lt[:, y]).any() and not (lt[y, :] & ~lt[x, :]).any():
            out.append(q)
    return out


class _Search:
    """Partition critical pairs into <= d cycle-free classes."""

    def __init__(self, p, pairs, d, deadline):
        self.p = p
        self.pairs = pairs
        self.d = d
        self.deadline = deadline
        m = len(pairs)
        self.m = m
        # arc[i, j]: x_i <= y_j, the alternating-cycle step relation
        arc = np.zeros((m, m), dtype=bool)
        for i, qi in enumerate(pairs):
            for j, qj in enumerate(pairs):
                if i != j and p.leq(qi.x, qj.y):
                    arc[i, j] = True
        self.arc = arc
        self.assigned = np.full(m, -1, dtype=int)
        self.members = np.zeros((d, m), dtype=bool)
        self.used = 0
        self.nodes = 0

    def feasible(self, q, c):
        """Adding pair q to class c keeps it free of alternating cycles?"""
        mask = self.members[c].copy()
        mask[q] = True
        reach = np.zeros(self.m, dtype=bool)
        frontier = self.arc[q] & mask
        while frontier.any():
            if frontier[q]:
                return False
            reach |= frontier
            frontier = (self.arc[frontier].any(axis=0)) & mask & ~reach
        return True

    def run(self):
        if time.monotonic() > self.deadline:
            raise SolverTimeout(f"decision level d={self.d} timed out")
        if self.m == 0:
            return []
        return self._extend()

    def _extend(self):
        self.nodes += 1
        if self.nodes % 64 == 0 and time.monotonic() > self.deadline:
            raise SolverTimeout(f"decision level d={self.d} timed out")
        todo = np.flatnonzero(self.assigned < 0)
        if len(todo) == 0:
            return [list(np.flatnonzero(self.members[c])) for c in range(self.used)]
        # fail-first: pair with fewest feasible classes
        best_q, best_opts = None, None
        limit = min(self.used + 1, self.d)
        for q in todo:
            opts = [c for c in range(limit) if self.feasible(q, c)]
            if best_opts is None or len(opts) < len(best_opts):
                best_q, best_opts = int(q), opts
                if not opts:
                    return None
                if len(opts) == 1:
                    break
        for c in best_opts:
            was_used = self.used
            self.assigned[best_q] = c
            self.members[c, best_q] = True
            if c == self.used:
                self.used += 1
            result = self._extend()
            if result is not None:
                return result
            self.assigned[best_q] = -1
            self.members[c, best_q] = False
            self.used = was_used
        return None


def is_dim_at_most(p, d, timeout=300.0, order_seed=None):
    """Decision problem: does p admit a realizer of size d?

    Returns a witness realizer (list of extensions, possibly fewer than
    d) or None.  Raises SolverTimeout when the budget runs out.
    ``order_seed`` shuffles the variable order, for replaying a "no"
    answer down an independent search path.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    deadline = time.monotonic() + timeout
    if not incomparable_pairs(p):
        return [linear_extension_of(p)]
    if d == 1:
        return None
    cps = critical_pairs(p)
    if order_seed is not None:
        import random

        random.Random(order_seed).shuffle(cps)
    search = _Search(p, cps, d, deadline)
    classes = search.run()
    if classes is None:
        return None
    witness = [
        reverse_extension(p, [cps[i] for i in cls]) for cls in classes
    ]
    check = verify_realizer(p, witness)
    assert check.valid, f"solver produced invalid realizer: {check.reason}"
    return witness


def exact_dimension(p, max_d=None, timeout=300.0):
    """Exact dimension with a certifying witness realizer.

    Tries d = 1, 2, ... up to ``max_d`` (default n, always enough);
    the first succeeding level is the dimension, certified below by the
    exhausted search at d-1.  ``timeout`` is per decision level.
    """
    start = time.monotonic()
    if max_d is None:
        max_d = max(1, p.n)
    nodes = 0
    if not incomparable_pairs(p):
        return DimResult(1, [linear_extension_of(p)], 0, time.monotonic() - start)
    cps = critical_pairs(p)
    for d in range(2, max_d + 1):
        deadline = time.monotonic() + timeout
        search = _Search(p, cps, d, deadline)
        classes = search.run()
        nodes += search.nodes
        if classes is not None:
            witness = [reverse_extension(p, [cps[i] for i in cls]) for cls in classes]
            check = verify_realizer(p, witness)
            assert check.valid, f"solver produced invalid realizer: {check.reason}"
            # level d-1 was exhausted, so exactly d classes were needed
            assert len(witness) == d
            return DimResult(d, witness, nodes, time.monotonic() - start)
    raise ExceedsMax(f"dimension exceeds max_d={max_d}", max_d)


def brute_force_dimension(p, max_extensions=200_000):
    """Oracle: smallest k such that k linear extensions realize p.

    Enumerates every linear extension, records which incomparable pairs
    each one reverses, and finds a minimum set cover by exact search.
    Only for n <= 8 (raises TooLarge beyond, or when the extension
    count explodes).
    """
    from .core import all_linear_extensions

    if p.n > 8:
        raise TooLarge("brute force limited to n <= 8")
    inc = incomparable_pairs(p)
    if not inc:
        return 1
    xs = np.array([q.x for q in inc])
    ys = np.array([q.y for q in inc])
    full = (1 << len(inc)) - 1
    masks = set()
    pos = np.empty(p.n, dtype=int)
    for ext in all_linear_extensions(p, limit=max_extensions):
        pos[list(ext)] = np.arange(p.n)
        rev = pos[ys] < pos[xs]
        masks.add(int.from_bytes(np.packbits(rev, bitorder="little").tobytes(), "little"))
    # drop dominated masks
    masks = sorted(masks, key=lambda m: -bin(m).count("1"))
    maximal = []
    for m in masks:
        if not any(m | big == big for big in maximal):
            maximal.append(m)

    cover_by = [[m for m in maximal if m >> k & 1] for k in range(len(inc))]

    def cover(acc, k_left):
        if acc == full:
            return True
        if k_left == 0:
            return False
        # branch on the uncovered pair with fewest candidate masks
        k = min(
            (k for k in range(len(inc)) if not acc >> k & 1),
            key=lambda k: len(cover_by[k]),
        )
        return any(cover(acc | m, k_left - 1) for m in cover_by[k])

    for k in range(2, min(5, len(maximal) + 1)):
        if cover(0, k):
            return k
    raise TooLarge("no realizer of size <= 4 found at n <= 8 (unexpected)")
