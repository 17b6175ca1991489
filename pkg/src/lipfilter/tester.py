"""Tolerant Lipschitz testing on the hypercube via the l0 filter.

A Lipschitz function on {0,1}^d concentrates within +-t of any fixed
value for t = 2 sqrt(d log2(d/eps)), so restricting f to that window and
filtering changes few points.  A function far from Lipschitz keeps many
violated pairs inside any window, so the filter must rewrite a constant
fraction.  The tester estimates the rewritten fraction from m uniform
samples and compares it against 2.005 eps.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParam, PartialFunction
from .exact import min_vertex_cover
from .filter_l0 import LocalFilterL0
from .functions import Interval, parse_rational
from .graphs import random_vertex
from .matching import DEFAULT_EDGE_BUDGET
from .seeds import Seed
from .violation import DEFAULT_SCAN_BUDGET, violation_edges

MIN_DIMENSION = 4
MAX_EPS = Fraction(1, 3)


@dataclass(frozen=True)
class TesterParams:
    eps: Fraction
    t: Fraction           # half-width of the value window
    m: int                # samples per repetition
    threshold: Fraction   # accept iff estimate <= threshold
    reps: int


def make_params(d: int, eps, *, m: int | None = None, reps: int = 1) -> TesterParams:
    if not isinstance(d, int) or d < MIN_DIMENSION:
        raise InvalidParam(f"dimension must be an int >= {MIN_DIMENSION}")
    eps = parse_rational(eps)
    if not 0 < eps < MAX_EPS:
        raise InvalidParam(f"eps must lie in (0, {MAX_EPS})")
    if reps < 1 or reps % 2 == 0:
        raise InvalidParam("reps must be a positive odd integer")
    t = Fraction(2 * math.sqrt(d * math.log2(d / eps)))
    if m is None:
        m = math.ceil((Fraction(1500) / eps) ** 2)
    if m < 1:
        raise InvalidParam("m must be positive")
    return TesterParams(
        eps=eps, t=t, m=m, threshold=Fraction(2005, 1000) * eps, reps=reps)


@dataclass(frozen=True)
class TestReport:
    accept: bool
    estimates: tuple
    params: TesterParams


def tolerant_test_once(graph, f, params: TesterParams, seed: Seed, *,
                       scan_budget: int = DEFAULT_SCAN_BUDGET,
                       match_budget: int = DEFAULT_EDGE_BUDGET):
    """One repetition: (accept?, estimated changed fraction)."""
    rng = random.Random(int(seed.hex, 16))
    pivot = random_vertex(graph, rng)
    center = f.lookup(pivot)
    if center is None:
        raise PartialFunction(f"tester pivot {pivot!r} has no value")
    window = Interval(center - params.t, center + params.t)
    restricted = f.restrict(window)
    filt = LocalFilterL0(
        graph, restricted, seed.derive("filter"),
        scan_budget=scan_budget, match_budget=match_budget)
    changed = 0
    for _ in range(params.m):
        x = random_vertex(graph, rng)
        g = filt.value(x)
        if g is None or g != f.lookup(x):
            changed += 1
    estimate = Fraction(changed, params.m)
    return estimate <= params.threshold, estimate


def tolerant_test(graph, f, eps, seed: Seed, *, m: int | None = None,
                  reps: int = 1,
                  scan_budget: int = DEFAULT_SCAN_BUDGET,
                  match_budget: int = DEFAULT_EDGE_BUDGET) -> TestReport:
    """Majority verdict over `reps` independent repetitions."""
    params = make_params(graph.d, eps, m=m, reps=reps)
    votes = 0
    estimates = []
    for k in range(params.reps):
        ok, est = tolerant_test_once(
            graph, f, params, seed.derive("rep", k),
            scan_budget=scan_budget, match_budget=match_budget)
        votes += 1 if ok else 0
        estimates.append(est)
    return TestReport(
        accept=2 * votes > params.reps,
        estimates=tuple(estimates),
        params=params)


def eps_of_interval(graph, f, interval: Interval, *, cap=None) -> Fraction:
    """l0 distance of the restriction f_I to the Lipschitz partial functions.

    Equals |min vertex cover of the violation graph of f_I| / N.  Used to
    certify how far reject instances stay from Lipschitz inside a window.
    """
    restricted = f.restrict(interval)
    cover = min_vertex_cover(violation_edges(graph, restricted), cap=cap)
    return Fraction(len(cover), graph.n_vertices)
