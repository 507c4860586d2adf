import numpy as np
import pytest

from fpr.cc_solver import cc_dp_table, solve_cc, solve_cc_width
from fpr.core import (
    Aggregator,
    Dissatisfaction,
    DomainViolationError,
    InvalidInputError,
)
from fpr.domains import ClonePartition
from fpr.instances import (
    gen_example_narcissistic_util,
    gen_example_sc_gap,
    gen_random_single_crossing,
)
from fpr.oracle import solve_cc_bruteforce
from helpers import CYCLE, make_election


def test_twelve_voter_goldens():
    e = gen_example_narcissistic_util()
    alpha = Dissatisfaction.borda(6)
    res = solve_cc(e, 2, alpha, Aggregator.SUM)
    assert res.objective == 7
    assert res.committee_names() == ("c", "e")
    res = solve_cc(e, 2, alpha, Aggregator.MAX)
    assert res.objective == 2
    assert res.committee_names() == ("b", "d")


def test_gap_family_golden():
    # c1 tops every vote, so one seat of the budget already suffices
    e = gen_example_sc_gap(2, 1)
    res = solve_cc(e, 2, Dissatisfaction.borda(6), Aggregator.SUM)
    assert res.objective == 0
    assert res.committee_names() == ("c1",)


def test_full_committee_is_free():
    e = gen_random_single_crossing(5, 6, 11)
    for agg in Aggregator:
        assert solve_cc(e, 5, Dissatisfaction.borda(5), agg).objective == 0


def test_objective_monotone_in_k():
    e = gen_random_single_crossing(6, 8, 12)
    alpha = Dissatisfaction.borda(6)
    for agg in Aggregator:
        values = [solve_cc(e, k, alpha, agg).objective for k in range(1, 7)]
        assert values == sorted(values, reverse=True)
        assert values[-1] == 0


def test_voters_get_their_favorite_member():
    e = gen_random_single_crossing(5, 7, 13)
    res = solve_cc(e, 2, Dissatisfaction.borda(5), Aggregator.SUM)
    committee = sorted(res.committee)
    pos = e.pos_matrix[:, committee]
    want = np.asarray(committee)[pos.argmin(axis=1)]
    assert res.assignment.rep_of == tuple(int(c) for c in want)


def test_table_agrees_with_solver():
    e = gen_random_single_crossing(4, 6, 14)
    alpha = Dissatisfaction.borda(4)
    for agg in Aggregator:
        table = cc_dp_table(e, 2, alpha, agg)
        assert table.shape == (6, 4, 2)
        assert table.value(6, 4, 2) == solve_cc(e, 2, alpha, agg).objective
        # zero voters cost nothing, even with no candidates admitted
        assert table.value(0, 0, 0) == 0


def test_k_one_closed_form():
    for seed in (20, 21, 22):
        e = gen_random_single_crossing(5, 6, seed)
        alpha = Dissatisfaction.borda(5)
        by_hand = min(int((e.pos_matrix[:, c] - 1).sum()) for c in range(5))
        assert solve_cc(e, 1, alpha, Aggregator.SUM).objective == by_hand


def test_rejects_non_single_crossing():
    e = make_election(*CYCLE)
    with pytest.raises(DomainViolationError):
        solve_cc(e, 1, Dissatisfaction.borda(3), Aggregator.SUM)


def test_argument_validation():
    e = gen_random_single_crossing(4, 3, 15)
    with pytest.raises(InvalidInputError):
        solve_cc(e, 0, Dissatisfaction.borda(4), Aggregator.SUM)
    with pytest.raises(InvalidInputError):
        cc_dp_table(e, 5, Dissatisfaction.borda(4), Aggregator.SUM)
    with pytest.raises(InvalidInputError):
        cc_dp_table(e, 2, Dissatisfaction.borda(3), Aggregator.SUM)


def test_deterministic():
    e = gen_random_single_crossing(5, 9, 16)
    alpha = Dissatisfaction.t_approval(2, 5)
    a = solve_cc(e, 3, alpha, Aggregator.MAX)
    b = solve_cc(e, 3, alpha, Aggregator.MAX)
    assert a.assignment == b.assignment and a.objective == b.objective


def test_sum_optimum_dominates_max_optimum():
    for seed in range(30, 40):
        e = gen_random_single_crossing(5, 7, seed)
        alpha = Dissatisfaction.borda(5)
        s = solve_cc(e, 2, alpha, Aggregator.SUM).objective
        x = solve_cc(e, 2, alpha, Aggregator.MAX).objective
        assert s >= x


def test_matches_oracle_on_random_profiles():
    for i in range(25):
        m, n = 2 + i % 5, 2 + (3 * i) % 7
        e = gen_random_single_crossing(m, n, 100 + i)
        k = min(1 + i % 3, m)
        alpha = Dissatisfaction.borda(m)
        for agg in Aggregator:
            assert solve_cc(e, k, alpha, agg).objective \
                == solve_cc_bruteforce(e, k, alpha, agg).objective


def test_width_singletons_match_plain_solver():
    e = gen_random_single_crossing(4, 6, 17)
    alpha = Dissatisfaction.borda(4)
    for agg in Aggregator:
        plain = solve_cc(e, 2, alpha, agg)
        wide = solve_cc_width(e, ClonePartition.singletons(4), 2, alpha, agg)
        assert wide.objective == plain.objective
        assert wide.diagnostics["width"] == 1


def test_width_solver_on_cloned_pair():
    """Not single-crossing as given, but contracting the clone pair {a, b}
    makes it so; the width solver must still find the true optimum."""
    e = make_election("abc", "bac", "cab")
    partition = ClonePartition(((0, 1), (2,)))
    alpha = Dissatisfaction.borda(3)
    res = solve_cc_width(e, partition, 1, alpha, Aggregator.SUM)
    assert res.objective == 2
    for k in (1, 2, 3):
        for agg in Aggregator:
            wide = solve_cc_width(e, partition, k, alpha, agg)
            free = solve_cc_bruteforce(e, k, alpha, agg)
            assert wide.objective == free.objective


def test_width_solver_rejects_bad_partitions():
    e = make_election("abc", "bac", "cab")
    alpha = Dissatisfaction.borda(3)
    with pytest.raises(DomainViolationError):
        solve_cc_width(e, ClonePartition(((0, 2), (1,))), 1, alpha, Aggregator.SUM)
    cyc = make_election(*CYCLE)
    with pytest.raises(DomainViolationError):
        solve_cc_width(cyc, ClonePartition.singletons(3), 1, alpha, Aggregator.SUM)
    with pytest.raises(InvalidInputError):
        solve_cc_width(e, ClonePartition(((0, 1), (2,))), 0, alpha, Aggregator.SUM)
