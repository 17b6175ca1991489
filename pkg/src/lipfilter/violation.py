"""Violation scores and threshold violation graphs.

A pair (x, y) is tau-violated when |f(x) - f(y)| - dist(x, y) > tau.
Pairs with an undefined endpoint or infinite distance are never violated.
Because defined values span at most the range diameter r, every
tau-violated partner of x sits within distance ceil(r - tau) - 1, which
bounds the BFS.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .errors import BudgetExceeded

DEFAULT_SCAN_BUDGET = 200_000


def violation_score(graph, f, x, y) -> Fraction:
    """max(0, |f(x) - f(y)| - dist(x, y)); 0 when either value is ?."""
    fx = f.lookup(x)
    fy = f.lookup(y)
    if fx is None or fy is None:
        return Fraction(0)
    d = graph.dist(x, y)
    if d is math.inf:
        return Fraction(0)
    return max(Fraction(0), abs(fx - fy) - d)


def scan_scored_neighbors(graph, lookup, r, x, *, radius=None, budget=DEFAULT_SCAN_BUDGET):
    """All y with positive violation score against x, as sorted (y, score).

    ``lookup`` is any callable vertex -> Fraction | None.  The scan covers
    the closed ball of ``radius`` (default ceil(r) - 1, enough for every
    tau >= 0 given range diameter r).
    """
    fx = lookup(x)
    if fx is None:
        return []
    if radius is None:
        radius = max(0, math.ceil(r) - 1)
    out = []
    for y, d in graph.ball(x, radius, budget=budget):
        if d == 0:
            continue
        fy = lookup(y)
        if fy is None:
            continue
        score = abs(fx - fy) - d
        if score > 0:
            out.append((y, score))
    out.sort(key=lambda p: p[0])
    return out


def viol_neighbors(graph, f, tau, x, *, budget=DEFAULT_SCAN_BUDGET):
    """Neighbors of x in the tau-violation graph of f, in canonical order.

    BFS is truncated at radius ceil(r - tau) - 1 (floored at 0): any pair
    with score above tau is at least that close because values differ by at
    most r.
    """
    tau = Fraction(tau)
    radius = max(0, math.ceil(f.r - tau) - 1)
    scored = scan_scored_neighbors(graph, f.lookup, f.r, x, radius=radius, budget=budget)
    return [y for y, s in scored if s > tau]


def is_dangerous(graph, f, x, *, budget=DEFAULT_SCAN_BUDGET) -> bool:
    """True iff x participates in at least one violated pair (tau = 0)."""
    return bool(viol_neighbors(graph, f, 0, x, budget=budget))


def violation_edges(graph, f, *, budget=DEFAULT_SCAN_BUDGET):
    """Every 0-violated pair of f, each once as an ordered (low, high) edge."""
    cache: dict = {}

    def lookup(v):
        if v in cache:
            return cache[v]
        val = f.lookup(v)
        cache[v] = val
        return val

    edges = []
    for x in graph.vertices():
        for y, _ in scan_scored_neighbors(graph, lookup, f.r, x, budget=budget):
            if x < y:
                edges.append((x, y))
    edges.sort()
    return edges


def max_violation_score(graph, f, *, budget=DEFAULT_SCAN_BUDGET) -> Fraction:
    """Largest violation score over all pairs (0 when f is 1-Lipschitz)."""
    cache: dict = {}

    def lookup(v):
        if v in cache:
            return cache[v]
        val = f.lookup(v)
        cache[v] = val
        return val

    best = Fraction(0)
    for x in graph.vertices():
        for _, s in scan_scored_neighbors(graph, lookup, f.r, x, budget=budget):
            if s > best:
                best = s
    return best
