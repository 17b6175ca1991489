import json
import random
from fractions import Fraction

import pytest

from lipfilter import (
    Hypercube,
    Hypergrid,
    InvalidParam,
    RetryExhausted,
    check_separation,
    hard_instance_from_json,
    is_c_lipschitz,
    sample_hard_instance,
    separation_threshold,
    violation_score,
)
from helpers import seed_of


class TestValidation:
    def test_r_must_be_even_int(self):
        g = Hypercube(10)
        for bad in (3, 2.0, 0, -2):
            with pytest.raises(InvalidParam):
                sample_hard_instance(g, bad, 1, seed_of(0))

    def test_b_and_m(self):
        g = Hypercube(10)
        with pytest.raises(InvalidParam):
            sample_hard_instance(g, 2, 2, seed_of(0))
        with pytest.raises(InvalidParam):
            sample_hard_instance(g, 2, 0, seed_of(0), m=0)

    def test_r_beyond_diameter(self):
        g = Hypercube(4)
        with pytest.raises(InvalidParam):
            sample_hard_instance(g, 6, 0, seed_of(0))

    def test_retry_exhaustion(self):
        g = Hypercube(6)
        with pytest.raises(RetryExhausted):
            # 6 separated pairs cannot fit in a 6-cube
            sample_hard_instance(g, 4, 1, seed_of(0), m=6, retry_cap=50)

    def test_threshold(self):
        assert separation_threshold(12, 2) == 3
        assert separation_threshold(4, 6) == 5


class TestStructure:
    def test_separation_holds(self):
        for i in range(5):
            g = Hypercube(14)
            inst = sample_hard_instance(g, 4, 1, seed_of(i), m=2)
            assert check_separation(g, inst.pairs, 4, 1)
            for a, ap in inst.pairs:
                assert g.dist(a, ap) == 3

    def test_check_separation_rejects_close_pairs(self):
        g = Hypercube(12)
        a = (0,) * 12
        ap = (1, 1, 1) + (0,) * 9
        other = (1,) + (0,) * 11  # distance 1 from a: too close
        pairs = ((a, ap), (other, (0, 1, 1, 1) + (0,) * 8))
        assert not check_separation(g, pairs, 4, 1)

    def test_value_profile_on_pair_path(self):
        g = Hypercube(12)
        inst = sample_hard_instance(g, 4, 0, seed_of(3), m=1)
        (a, ap), = inst.pairs
        assert inst.value(a) == 4
        assert inst.value(ap) == 0
        # baseline far away
        far = tuple(1 - c for c in a)
        if all(g.dist(far, v) >= 2 for v in (a, ap)):
            assert inst.value(far) == 2

    def test_support_matches_open_balls(self):
        g = Hypergrid(5, 3)
        inst = sample_hard_instance(g, 4, 1, seed_of(4), m=1)
        support = inst.support()
        half = 2
        for x in g.vertices():
            inside = any(
                g.dist(x, v) < half for pair in inst.pairs for v in pair
            )
            assert (x in support) == inside

    def test_range_respected(self):
        g = Hypercube(12)
        inst = sample_hard_instance(g, 4, 1, seed_of(5), m=2)
        f = inst.to_oracle()
        for _ in range(50):
            x = tuple(random.Random(99).randrange(2) for _ in range(12))
            assert 0 <= f.lookup(x) <= 4


class TestLipschitzness:
    def test_b0_is_lipschitz(self):
        for i in range(4):
            g = Hypercube(10)
            inst = sample_hard_instance(g, 4, 0, seed_of(10 + i), m=2)
            assert is_c_lipschitz(g, inst.to_oracle(), 1)

    def test_b1_pairs_have_unit_violation(self):
        for i in range(4):
            g = Hypercube(10)
            inst = sample_hard_instance(g, 4, 1, seed_of(20 + i), m=2)
            f = inst.to_oracle()
            twins = inst.corresponding_pairs()
            assert len(twins) == 2 * (4 // 2)
            for x, y in twins:
                assert violation_score(g, f, x, y) == 1

    def test_b1_on_grid(self):
        g = Hypergrid(4, 4)
        inst = sample_hard_instance(g, 6, 1, seed_of(30), m=1)
        f = inst.to_oracle()
        for x, y in inst.corresponding_pairs():
            assert violation_score(g, f, x, y) == 1


class TestJson:
    def test_round_trip(self):
        g = Hypercube(10)
        inst = sample_hard_instance(g, 4, 1, seed_of(40), m=2)
        doc = json.loads(json.dumps(inst.to_json()))
        back = hard_instance_from_json(doc)
        assert back.r == 4 and back.b == 1
        assert back.pairs == inst.pairs
        xs = [(0,) * 10, (1,) * 10, inst.pairs[0][0]]
        for x in xs:
            assert back.value(x) == inst.value(x)
