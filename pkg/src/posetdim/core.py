"""Finite posets, linear extensions, and realizer verification.

A poset is stored as an ordered tuple of element names plus a dense
boolean matrix ``lt`` with ``lt[a, b]`` true iff a < b.  All
algorithmic APIs work on dense indices 0..n-1; names only matter at
the I/O boundary.  Linear extensions are plain tuples of indices
(position = rank), realizers are lists of such tuples.
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import CycleError, ExtensionMismatch, UnknownElement

Extension = tuple  # tuple of element indices, ascending order


@dataclass(frozen=True)
class Poset:
    elements: tuple
    lt: np.ndarray  # bool, n x n, strict order
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.elements)})
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate element names")
        self.lt.setflags(write=False)

    @property
    def n(self):
        return len(self.elements)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownElement(f"unknown element {name!r}") from None

    def less(self, a, b):
        return bool(self.lt[a, b])

    def leq(self, a, b):
        return a == b or bool(self.lt[a, b])

    def incomparable(self, a, b):
        return a != b and not self.lt[a, b] and not self.lt[b, a]

    def downset(self, a):
        """Boolean mask of elements strictly below a."""
        return self.lt[:, a]

    def upset(self, a):
        """Boolean mask of elements strictly above a."""
        return self.lt[a, :]

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self.lt, other.lt)

    def __hash__(self):
        return hash((self.elements, self.lt.tobytes()))

    def __repr__(self):
        return f"Poset(n={self.n}, relations={int(self.lt.sum())})"


@dataclass(frozen=True)
class IncPair:
    x: int
    y: int


@dataclass
class RealizerCheck:
    valid: bool
    pair: Optional[tuple] = None  # (a, b) indices
    reason: Optional[str] = None

    def __bool__(self):
        return self.valid


def _close(adj):
    """Transitive closure of a boolean adjacency matrix, in place."""
    n = adj.shape[0]
    for k in range(n):
        src = adj[:, k]
        if src.any():
            adj[src, :] |= adj[k, :]
    return adj


def poset_from_relations(elements, relations, kind="order"):
    """Build a Poset from (a, b) name pairs meaning a < b.

    ``kind`` records whether the pairs are cover pairs or arbitrary
    order relations; either way the strict order is the transitive
    closure.  Raises CycleError if the closure would put an element
    below itself, UnknownElement on dangling names.
    """
    if kind not in ("cover", "order"):
        raise ValueError(f"bad relation kind {kind!r}")
    elements = tuple(elements)
    index = {e: i for i, e in enumerate(elements)}
    if len(index) != len(elements):
        raise ValueError("duplicate element names")
    n = len(elements)
    adj = np.zeros((n, n), dtype=bool)
    for a, b in relations:
        if a not in index:
            raise UnknownElement(f"unknown element {a!r}")
        if b not in index:
            raise UnknownElement(f"unknown element {b!r}")
        if a == b:
            raise CycleError(f"reflexive relation on {a!r}")
        adj[index[a], index[b]] = True
    _close(adj)
    if adj.diagonal().any():
        bad = elements[int(np.flatnonzero(adj.diagonal())[0])]
        raise CycleError(f"relations put {bad!r} below itself")
    return Poset(elements, adj)


def cover_relation(p):
    """All (a, b) index pairs with a < b and nothing strictly between."""
    strict2 = p.lt @ p.lt  # a < c < b for some c
    covers = p.lt & ~strict2
    return [(int(a), int(b)) for a, b in np.argwhere(covers)]


def incomparable_pairs(p):
    """All ordered incomparable pairs, as IncPair, lexicographic order."""
    inc = ~p.lt & ~p.lt.T & ~np.eye(p.n, dtype=bool)
    return [IncPair(int(a), int(b)) for a, b in np.argwhere(inc)]


def is_linear_extension(p, order):
    """True iff ``order`` is a permutation of 0..n-1 respecting p."""
    if sorted(order) != list(range(p.n)):
        return False
    pos = np.empty(p.n, dtype=int)
    pos[list(order)] = np.arange(p.n)
    a, b = np.nonzero(p.lt)
    return bool(np.all(pos[a] < pos[b]))


def verify_realizer(p, extensions):
    """Check that the intersection of the extensions is exactly p.

    Returns a RealizerCheck; on failure it carries an offending pair and
    whether a comparability was broken or an incomparability never
    reversed.  Raises ExtensionMismatch if an extension is not a
    permutation of p's elements.
    """
    extensions = list(extensions)
    if not extensions:
        raise ExtensionMismatch("empty realizer")
    n = p.n
    pos = np.empty((len(extensions), n), dtype=int)
    for k, ext in enumerate(extensions):
        if sorted(ext) != list(range(n)):
            raise ExtensionMismatch(f"extension {k} is not a permutation of the ground set")
        pos[k, list(ext)] = np.arange(n)
    # before[a, b]: a precedes b in every extension
    before = np.ones((n, n), dtype=bool)
    for k in range(len(extensions)):
        before &= pos[k, :, None] < pos[k, None, :]
    broken = p.lt & ~before
    if broken.any():
        a, b = map(int, np.argwhere(broken)[0])
        k = int(np.flatnonzero(pos[:, a] > pos[:, b])[0])
        return RealizerCheck(False, (a, b), f"comparability broken by extension {k}")
    extra = before & ~p.lt & ~np.eye(n, dtype=bool)
    if extra.any():
        a, b = map(int, np.argwhere(extra)[0])
        return RealizerCheck(False, (a, b), "incomparable pair never reversed")
    return RealizerCheck(True)


def subposet(p, subset):
    """Induced subposet on the given element indices (order preserved)."""
    idx = sorted(set(subset))
    for i in idx:
        if not (0 <= i < p.n):
            raise UnknownElement(f"index {i} out of range")
    names = tuple(p.elements[i] for i in idx)
    sub = p.lt[np.ix_(idx, idx)].copy()
    return Poset(names, sub)


def is_convex(p, subset):
    """True iff no outside element sits strictly between two members."""
    mask = np.zeros(p.n, dtype=bool)
    idx = list(subset)
    for i in idx:
        if not (0 <= i < p.n):
            raise UnknownElement(f"index {i} out of range")
    mask[idx] = True
    out = ~mask
    if not out.any() or not mask.any():
        return True
    # y outside with some x in S below y and some z in S above y
    below = p.lt[np.ix_(idx, np.flatnonzero(out))].any(axis=0)
    above = p.lt[np.ix_(np.flatnonzero(out), idx)].any(axis=1)
    return not bool((below & above).any())


def linear_extension_of(p):
    """Some linear extension of p (deterministic Kahn topsort)."""
    remaining = set(range(p.n))
    order = []
    lt = p.lt
    while remaining:
        m = min(i for i in remaining if not any(lt[j, i] for j in remaining))
        order.append(m)
        remaining.remove(m)
    return tuple(order)


def all_linear_extensions(p, limit=None):
    """Yield every linear extension of p (backtracking over minimal elements).

    Stops with TooLarge if ``limit`` extensions are exceeded.
    """
    from .errors import TooLarge

    n = p.n
    preds = [set(map(int, np.flatnonzero(p.lt[:, i]))) for i in range(n)]
    count = 0
    order = []
    used = [False] * n
    indeg = [len(preds[i]) for i in range(n)]

    def rec():
        nonlocal count
        if len(order) == n:
            count += 1
            if limit is not None and count > limit:
                raise TooLarge(f"more than {limit} linear extensions")
            yield tuple(order)
            return
        for i in range(n):
            if not used[i] and indeg[i] == 0:
                used[i] = True
                order.append(i)
                for j in range(n):
                    if p.lt[i, j]:
                        indeg[j] -= 1
                yield from rec()
                for j in range(n):
                    if p.lt[i, j]:
                        indeg[j] += 1
                order.pop()
                used[i] = False

    yield from rec()
