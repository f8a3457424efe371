import itertools
import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from flowrec import (
    DirectedGraph,
    DisconnectedGraphError,
    EmptySupportError,
    certify_nup,
    certify_support,
    cycle_vector,
    enumerate_simple_cycles,
    nullspace_constant_incidence,
    spark_incidence,
)

from conftest import random_connected_graph, triangle


class TestSpark:
    def test_fig1(self, fig1):
        assert spark_incidence(fig1) == 4

    def test_tree_infinite(self):
        g = DirectedGraph(vertex_count=4, edges=((0, 1), (1, 2), (1, 3)))
        assert math.isinf(spark_incidence(g))

    def test_triangle(self):
        assert spark_incidence(triangle()) == 3


class TestNullspaceConstant:
    def test_fig1_values(self, fig1):
        assert nullspace_constant_incidence(fig1, 1) == 0.25
        assert nullspace_constant_incidence(fig1, 4) == 1.0
        assert nullspace_constant_incidence(fig1, 7) == 1.0

    def test_zero_sparsity(self, fig1):
        assert nullspace_constant_incidence(fig1, 0) == 0.0

    def test_acyclic(self):
        g = DirectedGraph(vertex_count=3, edges=((0, 1), (1, 2)))
        assert nullspace_constant_incidence(g, 3) == 0.0


class TestCertifyNup:
    def test_fig1_s1_holds(self, fig1):
        cert = certify_nup(fig1, 1)
        assert cert.holds
        assert cert.nullspace_constant == 0.25
        assert cert.witness is None

    def test_fig1_s2_fails_with_shortest_cycle_witness(self, fig1):
        cert = certify_nup(fig1, 2)
        assert not cert.holds
        assert cert.nullspace_constant == 0.5
        assert cert.witness.vertices == (0, 1, 2, 3)

    def test_triangle_s1(self):
        assert certify_nup(triangle(), 1).holds

    def test_invalid_order(self, fig1):
        with pytest.raises(ValueError):
            certify_nup(fig1, 0)

    def test_disconnected_rejected_by_default(self):
        g = DirectedGraph(
            vertex_count=6,
            edges=((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)),
        )
        with pytest.raises(DisconnectedGraphError):
            certify_nup(g, 1)
        cert = certify_nup(g, 1, per_component=True)
        assert cert.holds and cert.girth == 3

    def test_json_roundtrip(self, fig1):
        cert = certify_nup(fig1, 2)
        doc = json.loads(json.dumps(cert.to_json_dict()))
        assert doc["version"] == 1
        assert doc["order"] == 2
        assert doc["girth"] == 4
        assert doc["holds"] is False
        assert doc["witness_cycle"] == [1, 2, 3, 4]

    def test_acyclic_certifies_every_order(self):
        g = DirectedGraph(vertex_count=4, edges=((0, 1), (1, 2), (2, 3)))
        cert = certify_nup(g, 3)
        assert cert.holds and math.isinf(cert.girth)
        assert cert.to_json_dict()["girth"] is None


class TestCertifySupport:
    def test_known_recoverable_supports(self, fig1):
        assert certify_support(fig1, [1, 6]).holds  # edges {2, 7} 1-based
        assert certify_support(fig1, [3, 5, 7]).holds  # edges {4, 6, 8} 1-based

    def test_uncertified_support_with_witness(self, fig1):
        cert = certify_support(fig1, [0, 1, 2])  # edges {1, 2, 3} 1-based
        assert not cert.holds
        assert cert.worst_ratio == 0.75
        assert cert.witness.vertices == (0, 1, 2, 3)

    def test_empty_support_rejected(self, fig1):
        with pytest.raises(EmptySupportError):
            certify_support(fig1, [])

    def test_subset_monotonicity(self, fig1):
        full = [2, 3, 4, 5, 6, 7, 9]
        for size in range(1, len(full)):
            for sub in itertools.combinations(full, size):
                if certify_support(fig1, full).holds:
                    assert certify_support(fig1, sub).holds

    def test_conservative_fallback_when_cap_exceeded(self, fig1):
        # Exact enumeration certifies {2, 7}; the girth bound (|S|/g =
        # 2/4) cannot, so the fallback is conservative but never wrong.
        assert certify_support(fig1, [1, 6]).holds
        cert = certify_support(fig1, [1, 6], cap=2)
        assert cert.conservative
        assert not cert.holds
        assert cert.worst_ratio == 0.5
        single = certify_support(fig1, [1], cap=2)
        assert single.conservative and single.holds

    def test_json(self, fig1):
        doc = certify_support(fig1, [0, 1, 2]).to_json_dict()
        assert doc["support"] == [1, 2, 3]
        assert doc["witness_cycle"] == [1, 2, 3, 4]


class TestNupSupportConsistency:
    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=12, deadline=None)
    def test_nup_iff_all_supports(self, seed):
        rng = np.random.default_rng(seed)
        m = int(rng.integers(3, 7))
        n = int(rng.integers(m, min(m * (m - 1) // 2, 12) + 1))
        g = random_connected_graph(rng, m, n)
        for s in range(1, min(n, 4) + 1):
            nup = certify_nup(g, s)
            all_hold = all(
                certify_support(g, S).holds
                for S in itertools.combinations(range(n), s)
            )
            assert nup.holds == all_hold

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=20, deadline=None)
    def test_spark_matches_l0_and_l1_condition(self, seed):
        # For incidence matrices l0 uniqueness (spark > 2s) and l1
        # recovery (s < g/2) coincide at every order.
        rng = np.random.default_rng(seed)
        m = int(rng.integers(3, 8))
        n = int(rng.integers(m - 1, m * (m - 1) // 2 + 1))
        g = random_connected_graph(rng, m, n)
        spark = spark_incidence(g)
        for s in range(1, 7):
            assert (spark > 2 * s) == (s < spark / 2)
            if s <= n:
                assert certify_nup(g, s).holds == (s < spark / 2)

    def test_counting_formula_matches_l1_norm(self, fig1):
        # |S n supp(z)| / ||z||_0 equals ||z_S||_1 for normalized cycles.
        rng = np.random.default_rng(5)
        cycles = enumerate_simple_cycles(fig1)
        for _ in range(100):
            size = int(rng.integers(1, 11))
            S = rng.choice(10, size=size, replace=False)
            for c in cycles:
                w = cycle_vector(c, fig1)  # integer entries: sums are exact
                direct = np.abs(w[S]).sum() / c.length
                counted = len(set(int(j) for j in S) & set(c.edge_ids)) / c.length
                assert direct == counted
