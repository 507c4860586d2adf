import pytest

from fpr.core import (
    Aggregator,
    Dissatisfaction,
    Election,
    InvalidInputError,
    Rule,
    SizeLimitError,
    validate_assignment,
)
from fpr.instances import SplitMix64, gen_random_single_crossing
from fpr.oracle import (
    best_contiguous_bruteforce,
    enumeration_budget,
    optimal_balanced_assignment,
    solve_cc_bruteforce,
    solve_monroe_bruteforce,
)
from fpr.verify import exhaustive_balanced_value
from helpers import make_election

BORDA3 = Dissatisfaction.borda(3)


def _random_election(m, n, seed):
    rng = SplitMix64(seed)
    votes = []
    for _ in range(n):
        order = list(range(m))
        rng.shuffle(order)
        votes.append(tuple(order))
    return Election.from_votes(votes)


def test_full_committee_scores_zero():
    e = make_election("abc", "bca", "cab")
    for agg in Aggregator:
        res = solve_cc_bruteforce(e, 3, BORDA3, agg)
        assert res.objective == 0
        assert res.assignment.rep_of == (0, 1, 2)


def test_cc_tie_breaks_to_lexicographic_committee():
    e = make_election("ab", "ba")
    res = solve_cc_bruteforce(e, 1, Dissatisfaction.borda(2), Aggregator.SUM)
    assert res.objective == 1
    assert res.committee == frozenset({0})


def test_k_validation():
    e = make_election("abc", "bca")
    with pytest.raises(InvalidInputError):
        solve_cc_bruteforce(e, 0, BORDA3, Aggregator.SUM)
    with pytest.raises(InvalidInputError):
        solve_cc_bruteforce(e, 4, BORDA3, Aggregator.SUM)
    with pytest.raises(InvalidInputError):
        solve_monroe_bruteforce(e, 3, BORDA3, Aggregator.SUM)  # k > n


def test_budget_guard(monkeypatch):
    e = gen_random_single_crossing(8, 4, 1)
    alpha = Dissatisfaction.borda(8)
    with pytest.raises(SizeLimitError):
        solve_cc_bruteforce(e, 4, alpha, Aggregator.SUM, budget=50)
    with pytest.raises(SizeLimitError):
        best_contiguous_bruteforce(e, 3, alpha, Aggregator.SUM, Rule.CC, budget=1)
    monkeypatch.setenv("FPR_BUDGET", "2")
    assert enumeration_budget() == 2
    with pytest.raises(SizeLimitError):
        solve_cc_bruteforce(e, 4, alpha, Aggregator.SUM)
    # an explicit budget still wins over the environment
    assert enumeration_budget(10) == 10


def test_balanced_assignment_hand_case():
    e = make_election("ab", "ab")
    alpha = Dissatisfaction.borda(2)
    for agg in Aggregator:
        res = optimal_balanced_assignment(e, (0, 1), alpha, agg)
        assert res.objective == 1
        assert sorted(res.assignment.rep_of) == [0, 1]
    assert optimal_balanced_assignment(e, (0,), alpha, Aggregator.SUM).objective == 0


def test_balanced_assignment_validation():
    e = make_election("ab", "ba")
    alpha = Dissatisfaction.borda(2)
    with pytest.raises(InvalidInputError):
        optimal_balanced_assignment(e, (), alpha, Aggregator.SUM)
    with pytest.raises(InvalidInputError):
        optimal_balanced_assignment(e, (0, 7), alpha, Aggregator.SUM)
    with pytest.raises(InvalidInputError):
        optimal_balanced_assignment(make_election("ab"), (0, 1), alpha,
                                    Aggregator.SUM)


def test_balanced_assignment_matches_exhaustive():
    """The matching model must agree with direct enumeration of balanced
    assignments on unstructured profiles."""
    for i in range(30):
        m, n = 2 + i % 4, 2 + (3 * i) % 6
        e = _random_election(m, n, 5000 + i)
        k = min(1 + i % 3, m, n)
        picks = list(range(m))
        SplitMix64(6000 + i).shuffle(picks)
        committee = tuple(sorted(picks[:k]))
        alpha = Dissatisfaction.borda(m)
        for agg in Aggregator:
            res = optimal_balanced_assignment(e, committee, alpha, agg)
            assert validate_assignment(e, res.assignment, Rule.MONROE, k)
            assert res.objective == exhaustive_balanced_value(e, committee,
                                                              alpha, agg)


def test_monroe_dominates_cc():
    # Monroe's load bounds can only hurt the objective
    for i in range(12):
        m, n = 3 + i % 3, 4 + i % 4
        e = _random_election(m, n, 7000 + i)
        alpha = Dissatisfaction.borda(m)
        k = 1 + i % 2
        for agg in Aggregator:
            cc = solve_cc_bruteforce(e, k, alpha, agg)
            monroe = solve_monroe_bruteforce(e, k, alpha, agg)
            assert cc.objective <= monroe.objective


def test_contiguity_restriction_dominates():
    for i in range(12):
        m, n = 3 + i % 3, 4 + i % 3
        e = _random_election(m, n, 8000 + i)
        alpha = Dissatisfaction.borda(m)
        k = 1 + i % 2
        for rule in Rule:
            free = (solve_cc_bruteforce if rule is Rule.CC
                    else solve_monroe_bruteforce)(e, k, alpha, Aggregator.SUM)
            tied = best_contiguous_bruteforce(e, k, alpha, Aggregator.SUM, rule)
            assert free.objective <= tied.objective


def test_contiguous_cc_is_free_on_single_crossing():
    """On single-crossing input some optimal CC assignment uses contiguous
    blocks, so restricting to them must cost nothing."""
    for i in range(15):
        m, n = 3 + i % 4, 3 + (2 * i) % 5
        e = gen_random_single_crossing(m, n, 9000 + i)
        alpha = Dissatisfaction.borda(m)
        k = min(1 + i % 3, m)
        for agg in Aggregator:
            free = solve_cc_bruteforce(e, k, alpha, agg)
            tied = best_contiguous_bruteforce(e, k, alpha, agg, Rule.CC)
            assert free.objective == tied.objective
