import random

import pytest

from conftest import oracle_enumerate, oracle_maximum, random_stream
from temporal_matching import (
    BudgetExceededError,
    LinkStream,
    enumerate_gamma_edges,
    exact_decision,
    exact_maximum,
    greedy_matching,
    validate_matching,
)

FACTOR_TWO_STREAM = LinkStream(
    [(0, "b", "c"), (1, "b", "c"), (1, "a", "b"), (2, "a", "b"), (1, "c", "d"), (2, "c", "d")]
)


def test_no_gamma_edges():
    s = LinkStream([(0, "a", "b"), (2, "a", "b")])
    result = exact_maximum(s, 2)
    assert result.optimum == 0
    assert len(result.witness) == 0


def test_factor_two_instance_has_optimum_two():
    assert exact_maximum(FACTOR_TWO_STREAM, 2).optimum == 2


def test_agrees_with_subset_oracle():
    rng = random.Random(30)
    checked = 0
    for _ in range(200):
        s = random_stream(rng, max_vertices=6, max_horizon=8)
        for gamma in (1, 2, 3):
            if len(oracle_enumerate(s, gamma)) > 20:
                continue
            result = exact_maximum(s, gamma)
            assert result.optimum == oracle_maximum(s, gamma)
            assert validate_matching(s, result.witness).ok
            assert len(result.witness) == result.optimum
            checked += 1
    assert checked >= 100


def test_sandwich_against_greedy():
    rng = random.Random(31)
    for _ in range(60):
        s = random_stream(rng)
        for gamma in (2, 3):
            greedy = len(greedy_matching(s, gamma))
            optimum = exact_maximum(s, gamma).optimum
            assert greedy <= optimum <= 2 * greedy


class TestDecision:
    def test_k_zero_always_true(self):
        s = LinkStream([(0, "a", "b")])
        assert exact_decision(s, 3, 0) is True

    def test_counting_bound_short_circuit(self):
        # 2 vertices x 4 instants / (2*2) = 2; k=3 is impossible outright.
        s = LinkStream([(t, "a", "b") for t in range(4)])
        assert exact_decision(s, 2, 3) is False

    def test_matches_oracle_threshold(self):
        rng = random.Random(32)
        checked = 0
        for _ in range(80):
            s = random_stream(rng, max_vertices=6, max_horizon=8)
            for gamma in (1, 2):
                # the subset oracle enumerates every independent family and
                # needs a small candidate pool to stay cheap
                if len(oracle_enumerate(s, gamma)) > 18:
                    continue
                optimum = oracle_maximum(s, gamma)
                for k in range(0, optimum + 2):
                    assert exact_decision(s, gamma, k) == (optimum >= k)
                checked += 1
        assert checked >= 40

    def test_negative_k_rejected(self):
        with pytest.raises(ValueError):
            exact_decision(FACTOR_TWO_STREAM, 2, -1)


def test_gamma_validation():
    with pytest.raises(ValueError):
        exact_maximum(FACTOR_TWO_STREAM, 0)


def test_budget_exhaustion_raises_loudly():
    # a hardness instance of an unsatisfiable formula forces real search
    from temporal_matching import CnfFormula, reduce_formula

    instance = reduce_formula(CnfFormula(4, [(1,), (-1,), (2, 3, 4)]), 3)
    with pytest.raises(BudgetExceededError) as info:
        exact_maximum(instance.stream, 3, node_budget=50)
    assert info.value.explored_nodes > info.value.node_budget


def test_node_counts_reproducible():
    rng = random.Random(34)
    for _ in range(10):
        s = random_stream(rng)
        first = exact_maximum(s, 2)
        second = exact_maximum(s, 2)
        assert first.explored_nodes == second.explored_nodes
        assert list(first.witness) == list(second.witness)
