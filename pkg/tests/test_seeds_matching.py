import random
import threading

import pytest

from lipfilter import (
    BudgetExceeded,
    InvalidParam,
    MatchingLCA,
    Seed,
    edge_rank,
    greedy_maximal_matching,
)
from helpers import random_connected_graph, seed_of


class TestSeed:
    def test_hex_round_trip(self):
        s = Seed.from_int(12345)
        assert Seed.from_hex(s.hex) == s
        assert len(s.hex) == 64

    def test_bad_inputs(self):
        with pytest.raises(InvalidParam):
            Seed(b"short")
        with pytest.raises(InvalidParam):
            Seed.from_hex("zz")

    def test_derive_is_separated(self):
        s = seed_of(7)
        assert s.derive("round", 1) == s.derive("round", 1)
        assert s.derive("round", 1) != s.derive("round", 2)
        assert s.derive("round", 1) != s.derive("rep", 1)
        assert s.derive("a", -1) != s.derive("a", 1)

    def test_rank_deterministic(self):
        s = seed_of(3)
        assert s.rank(b"edge") == s.rank(b"edge")
        assert s.rank(b"edge") != s.rank(b"other")

    def test_edge_rank_symmetric(self):
        s = seed_of(11)
        assert edge_rank(s, "03", "07") == edge_rank(s, "07", "03")


def check_matching(graph, partner):
    # symmetry + edges of the graph only
    for u, v in partner.items():
        assert partner[v] == u
        assert v in graph.neighbors(u)


def check_maximal(graph, partner):
    for u, v in graph.edges():
        assert u in partner or v in partner


class TestMatchingLCA:
    def lca(self, graph, seed, **kw):
        return MatchingLCA(graph.neighbors, seed, encode=graph.canon, **kw)

    def test_matches_global_greedy(self):
        rng = random.Random(0)
        for trial in range(20):
            g = random_connected_graph(rng, 4 + rng.randrange(12), extra=rng.randrange(8))
            seed = seed_of(trial)
            ref = greedy_maximal_matching(g.edges(), seed, encode=g.canon)
            lca = self.lca(g, seed)
            for x in g.vertices():
                assert lca.match_of(x) == ref.get(x)

    def test_valid_and_maximal(self):
        rng = random.Random(1)
        for trial in range(10):
            g = random_connected_graph(rng, 10, extra=5)
            lca = self.lca(g, seed_of(100 + trial))
            partner = {}
            for x in g.vertices():
                m = lca.match_of(x)
                if m is not None:
                    partner[x] = m
            check_matching(g, partner)
            check_maximal(g, partner)

    def test_query_order_irrelevant(self):
        rng = random.Random(2)
        g = random_connected_graph(rng, 12, extra=6)
        seed = seed_of(42)
        baseline = self.lca(g, seed).transcript(g.vertices())
        for _ in range(5):
            order = list(g.vertices())
            rng.shuffle(order)
            fresh = self.lca(g, seed)
            got = {g.canon(x): None for x in g.vertices()}
            for x in order:
                m = fresh.match_of(x)
                got[g.canon(x)] = None if m is None else g.canon(m)
            assert got == baseline

    def test_edge_matched_consistent_with_match_of(self):
        rng = random.Random(3)
        g = random_connected_graph(rng, 9, extra=4)
        lca = self.lca(g, seed_of(9))
        for u, v in g.edges():
            expect = lca.match_of(u) == v
            assert lca.edge_matched(u, v) == expect

    def test_budget(self):
        rng = random.Random(4)
        g = random_connected_graph(rng, 40, extra=30)
        lca = self.lca(g, seed_of(5), budget=2)
        with pytest.raises(BudgetExceeded):
            for x in g.vertices():
                lca.match_of(x)
        # a roomy budget answers everything
        roomy = self.lca(g, seed_of(5), budget=10_000)
        assert any(roomy.match_of(x) is not None for x in g.vertices())

    def test_memoized_answers_do_not_recharge_budget(self):
        rng = random.Random(5)
        g = random_connected_graph(rng, 8, extra=3)
        lca = self.lca(g, seed_of(6), budget=10_000)
        first = [lca.match_of(x) for x in g.vertices()]
        # all verdicts cached now; a tiny budget must still succeed
        lca._budget = 1
        second = [lca.match_of(x) for x in g.vertices()]
        assert first == second

    def test_thread_safety(self):
        rng = random.Random(6)
        g = random_connected_graph(rng, 30, extra=20)
        seed = seed_of(77)
        ref = greedy_maximal_matching(g.edges(), seed, encode=g.canon)
        lca = self.lca(g, seed)
        errors = []

        def worker(offset):
            try:
                verts = list(g.vertices())
                for x in verts[offset::4]:
                    assert lca.match_of(x) == ref.get(x)
            except Exception as exc:  # pragma: no cover
                errors.append(exc)

        threads = [threading.Thread(target=worker, args=(i,)) for i in range(4)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert errors == []

    def test_isolated_vertex(self):
        g = random_connected_graph(random.Random(7), 5)
        lca = MatchingLCA(lambda x: (), seed_of(1))
        assert lca.match_of(3) is None
