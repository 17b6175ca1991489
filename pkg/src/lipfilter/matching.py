"""Local computation of the random-greedy maximal matching.

Every edge gets a pseudorandom rank from the seed.  An edge is matched iff
every adjacent edge of smaller rank is unmatched; this recursion is
well-founded because ranks strictly decrease along it.  Verdicts depend
only on the seed and the graph, never on query order, and are memoized per
instance.

The neighbor oracle must be symmetric (y in nbrs(x) iff x in nbrs(y));
violation-graph oracles built in this package are.
"""
from __future__ import annotations

import threading

from .errors import BudgetExceeded
from .seeds import Seed, edge_rank

DEFAULT_EDGE_BUDGET = 1_000_000


class MatchingLCA:
    """match_of queries against the greedy matching defined by ``seed``.

    Args:
        neighbors: callable vertex -> iterable of adjacent vertices.
        seed: rank PRF key.
        encode: canonical vertex encoding (use graph.canon); defaults to
            str, which is fine for ints and tuples on a single machine.
        budget: cap on newly explored edges per top-level query.
    """

    def __init__(self, neighbors, seed: Seed, *, encode=None, budget=DEFAULT_EDGE_BUDGET):
        self._nbrs = neighbors
        self._seed = seed
        self._encode = encode if encode is not None else str
        self._budget = budget
        self._adj: dict = {}
        self._ranks: dict = {}
        self._verdict: dict = {}
        self._lock = threading.RLock()

    def _adjacent(self, v):
        cached = self._adj.get(v)
        if cached is None:
            cached = tuple(self._nbrs(v))
            self._adj[v] = cached
        return cached

    @staticmethod
    def _edge(u, v):
        return (u, v) if u < v else (v, u)

    def _rank(self, e):
        r = self._ranks.get(e)
        if r is None:
            r = edge_rank(self._seed, self._encode(e[0]), self._encode(e[1]))
            self._ranks[e] = r
        return r

    def _blockers(self, e):
        """Adjacent edges of strictly smaller rank, ascending."""
        u, v = e
        mine = self._rank(e)
        out = []
        for a, b in ((u, v), (v, u)):
            for w in self._adjacent(a):
                if w == b:
                    continue
                other = self._edge(a, w)
                if self._rank(other) < mine:
                    out.append(other)
        out.sort(key=self._rank)
        return out

    def _eval(self, root, state):
        verdict = self._verdict
        known = verdict.get(root)
        if known is not None:
            return known
        state["used"] += 1
        if state["used"] > self._budget:
            raise BudgetExceeded(f"matching exploration exceeded {self._budget} edges")
        stack = [[root, self._blockers(root), 0]]
        while stack:
            frame = stack[-1]
            e, blockers, i = frame
            matched = None
            descend = None
            while i < len(blockers):
                bv = verdict.get(blockers[i])
                if bv is None:
                    descend = blockers[i]
                    break
                if bv:
                    matched = False  # a smaller-rank neighbor is matched
                    break
                i += 1
                frame[2] = i
            if descend is not None:
                state["used"] += 1
                if state["used"] > self._budget:
                    raise BudgetExceeded(
                        f"matching exploration exceeded {self._budget} edges"
                    )
                stack.append([descend, self._blockers(descend), 0])
                continue
            verdict[e] = True if matched is None else matched
            stack.pop()
        return verdict[root]

    def edge_matched(self, u, v) -> bool:
        with self._lock:
            return self._eval(self._edge(u, v), {"used": 0})

    def match_of(self, x):
        """Partner of ``x`` in the matching, or None if unmatched."""
        with self._lock:
            state = {"used": 0}
            incident = sorted(
                (self._edge(x, w) for w in self._adjacent(x)), key=self._rank
            )
            for e in incident:
                if self._eval(e, state):
                    return e[1] if e[0] == x else e[0]
            return None

    def transcript(self, vertices) -> dict:
        """match_of over a vertex list, as {canon(x): canon(partner) | None}."""
        out = {}
        for x in vertices:
            m = self.match_of(x)
            out[self._encode(x)] = None if m is None else self._encode(m)
        return out


def greedy_maximal_matching(edges, seed: Seed, *, encode=None) -> dict:
    """Global reference: scan all edges by ascending rank, keep the free ones.

    Returns a symmetric partner map.  Produces exactly the matching that
    MatchingLCA answers pointwise for the same seed.
    """
    enc = encode if encode is not None else str
    ordered = sorted(
        {MatchingLCA._edge(u, v) for u, v in edges},
        key=lambda e: edge_rank(seed, enc(e[0]), enc(e[1])),
    )
    partner: dict = {}
    for u, v in ordered:
        if u not in partner and v not in partner:
            partner[u] = v
            partner[v] = u
    return partner
