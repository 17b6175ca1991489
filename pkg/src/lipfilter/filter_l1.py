"""Additive-error Lipschitz filter via rounds of violation matchings.

Round t (t = 2..T) takes a maximal matching of the tau_t-violation graph
of the previous round's function and moves each matched pair's values
toward each other by delta_t = tau_t / 2, where tau_t = r * (2/3)^(t-1).
After round T the maximum violation score is at most slack, so the output
is (1 + slack)-Lipschitz; values never leave [lo, lo + r] and the l1
distance to any fixed Lipschitz function never grows from round to round.

The local filter simulates exactly this computation per query, sharing
per-round matchings through the seeded matching LCA.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParam, PartialFunction
from .matching import DEFAULT_EDGE_BUDGET, MatchingLCA, greedy_maximal_matching
from .seeds import Seed
from .violation import DEFAULT_SCAN_BUDGET, scan_scored_neighbors

DEFAULT_SLACK = Fraction(1, 100)

# reuse of cached violation scans is skipped when more than this many
# values moved since the scan; the distance checks would cost more than a
# rescan
_REUSE_CHANGE_CAP = 512


@dataclass(frozen=True)
class Schedule:
    """Round count and per-round thresholds for given r and slack."""

    r: Fraction
    slack: Fraction
    rounds: int  # T; rounds run for t = 2..T, so T = 1 means identity

    def tau(self, t: int) -> Fraction:
        if not 2 <= t <= self.rounds:
            raise InvalidParam(f"round {t} outside 2..{self.rounds}")
        return self.r * Fraction(2, 3) ** (t - 1)

    def delta(self, t: int) -> Fraction:
        return self.tau(t) / 2

    @property
    def final_threshold(self) -> Fraction:
        if self.rounds == 1:
            return self.r
        return self.tau(self.rounds)


def make_schedule(r, slack) -> Schedule:
    """T = 1 + (least k with (3/2)^k >= r / slack), computed exactly.

    Guarantees r * (2/3)^(T-1) <= slack; slack >= r degenerates to T = 1
    and the filter is the identity.
    """
    r = Fraction(r)
    slack = Fraction(slack)
    if r < 0:
        raise InvalidParam(f"range diameter must be nonnegative, got {r}")
    if slack <= 0:
        raise InvalidParam(f"slack must be positive, got {slack}")
    ratio = r / slack
    k = 0
    power = Fraction(1)
    while power < ratio:
        power *= Fraction(3, 2)
        k += 1
    return Schedule(r=r, slack=slack, rounds=k + 1)


class LocalFilterL1:
    """Per-query simulation of the round-based filter for one (f, seed).

    ``value(x)`` recurses through rounds, resolving each round's matching
    locally; all verdicts, values, and violation scans are memoized so
    repeated or bulk queries share work.  ``table(t)`` drives the same
    recursion round by round over the whole domain, which additionally
    lets finished rounds revalidate cached scans (only vertices near a
    moved value need rescanning).
    """

    def __init__(self, graph, f, seed: Seed, *, slack=DEFAULT_SLACK, r=None,
                 scan_budget=DEFAULT_SCAN_BUDGET, match_budget=DEFAULT_EDGE_BUDGET):
        self.graph = graph
        self.f = f
        self.seed = seed
        self.schedule = make_schedule(f.r if r is None else r, slack)
        self.scan_budget = scan_budget
        self.match_budget = match_budget
        self._radius = max(0, math.ceil(self.schedule.r) - 1)
        self._tables: dict[int, dict] = {t: {} for t in range(1, self.schedule.rounds + 1)}
        self._matchers: dict[int, MatchingLCA] = {}
        self._scores: dict = {}  # vertex -> {version: [(y, score), ...]}
        self._changed: dict[int, set] = {}
        self._complete: set[int] = set()

    # -- round values ---------------------------------------------------

    def _value(self, x, t: int) -> Fraction:
        memo = self._tables[t]
        v = memo.get(x)
        if v is not None:
            return v
        if t == 1:
            v = self.f.lookup(x)
            if v is None:
                raise PartialFunction(f"filter needs a total function; f({x!r}) = ?")
        else:
            v = self._value(x, t - 1)
            partner = self._matcher(t).match_of(x)
            if partner is not None:
                w = self._value(partner, t - 1)
                delta = self.schedule.delta(t)
                v = v + delta if w > v else v - delta
                self._changed.setdefault(t, set()).add(x)
        memo[x] = v
        return v

    def _matcher(self, t: int) -> MatchingLCA:
        m = self._matchers.get(t)
        if m is None:
            tau = self.schedule.tau(t)

            def adjacent(v, _tau=tau, _version=t - 1):
                return [y for y, s in self._scores_for(v, _version) if s > _tau]

            m = MatchingLCA(
                adjacent,
                self.seed.derive("iter", t),
                encode=self.graph.canon,
                budget=self.match_budget,
            )
            self._matchers[t] = m
        return m

    # -- violation scans ------------------------------------------------

    def _scores_for(self, v, version: int):
        """Positive violation scores of v against the round-``version`` table."""
        ent = self._scores.setdefault(v, {})
        scored = ent.get(version)
        if scored is not None:
            return scored
        reused = self._try_reuse(ent, v, version)
        if reused is not None:
            ent[version] = reused
            return reused
        scored = scan_scored_neighbors(
            self.graph,
            lambda y, _t=version: self._value(y, _t),
            self.schedule.r,
            v,
            radius=self._radius,
            budget=self.scan_budget,
        )
        ent[version] = scored
        return scored

    def _try_reuse(self, ent, v, version):
        """A scan against an older complete round stays valid while no value
        within the scan radius has moved since."""
        for s0 in sorted(ent, reverse=True):
            if s0 >= version:
                continue
            window = range(s0 + 1, version + 1)
            if any(s not in self._complete for s in window):
                return None
            moved = [c for s in window for c in self._changed.get(s, ())]
            if len(moved) > _REUSE_CHANGE_CAP:
                return None
            if all(self.graph.dist(v, c) > self._radius for c in moved):
                return ent[s0]
            return None
        return None

    # -- public API -----------------------------------------------------

    def value(self, x, t: int | None = None) -> Fraction:
        """g_t(x); t defaults to the final round."""
        t = self.schedule.rounds if t is None else t
        if not 1 <= t <= self.schedule.rounds:
            raise InvalidParam(f"round {t} outside 1..{self.schedule.rounds}")
        return self._value(x, t)

    def table(self, t: int | None = None) -> dict:
        """Full table at round t, computing rounds in order (fast path)."""
        t = self.schedule.rounds if t is None else t
        vertices = list(self.graph.vertices())
        for s in range(1, t + 1):
            if s in self._complete:
                continue
            for x in vertices:
                self._value(x, s)
            self._changed.setdefault(s, set())
            self._complete.add(s)
        return {x: self._tables[t][x] for x in vertices}

    def match_of(self, x, t: int):
        """Partner of x in the round-t matching (None if unmatched)."""
        return self._matcher(t).match_of(x)


def local_filter_l1(graph, f, seed: Seed, x, *, slack=DEFAULT_SLACK, **kw) -> Fraction:
    """One-shot query; see LocalFilterL1 for sessions."""
    return LocalFilterL1(graph, f, seed, slack=slack, **kw).value(x)


def global_filter_l1(graph, f, seed: Seed, *, slack=DEFAULT_SLACK, r=None,
                     trace=False, scan_budget=DEFAULT_SCAN_BUDGET):
    """Reference implementation: materialize every round over the domain.

    Uses the global greedy matching on the same seeded ranks as the LCA,
    so outputs match LocalFilterL1 exactly.  With ``trace=True`` returns
    the list [g_1, ..., g_T].
    """
    schedule = make_schedule(f.r if r is None else r, slack)
    current = {}
    for x in graph.vertices():
        v = f.lookup(x)
        if v is None:
            raise PartialFunction(f"filter needs a total function; f({x!r}) = ?")
        current[x] = v
    tables = [dict(current)]
    for t in range(2, schedule.rounds + 1):
        tau = schedule.tau(t)
        delta = schedule.delta(t)
        radius = max(0, math.ceil(schedule.r - tau) - 1)
        edges = []
        for x in graph.vertices():
            for y, s in scan_scored_neighbors(
                graph, current.get, schedule.r, x, radius=radius, budget=scan_budget
            ):
                if s > tau and x < y:
                    edges.append((x, y))
        partner = greedy_maximal_matching(
            edges, seed.derive("iter", t), encode=graph.canon
        )
        for u, v in partner.items():
            if u < v:
                low, high = (u, v) if current[u] < current[v] else (v, u)
                current[low] += delta
                current[high] -= delta
        if trace:
            tables.append(dict(current))
    if trace:
        return tables
    return current
