"""Reference solvers: exhaustive committee enumeration plus an exact
balanced-assignment subroutine.

These are the ground truth the dynamic-programming solvers are checked
against, so they avoid any structural shortcuts: no single-crossing
assumptions, no contiguity assumptions.

Enumeration budgets: every operation that enumerates committees or block
boundaries first bounds the enumeration count; the FPR_BUDGET
environment variable overrides the default of 10**6.
"""

from __future__ import annotations

import itertools
import math
import os

import numpy as np
from scipy.optimize import linear_sum_assignment

from .core import (
    Aggregator,
    Assignment,
    Dissatisfaction,
    Election,
    InvalidInputError,
    Rule,
    SizeLimitError,
    SolveResult,
    score,
)

DEFAULT_BUDGET = 10**6


def enumeration_budget(explicit: int | None = None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("FPR_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _check_k(election: Election, k: int, need_n: bool = False) -> None:
    if not 1 <= k <= election.m:
        raise InvalidInputError(f"k={k} outside 1..{election.m}")
    if need_n and k > election.n:
        raise InvalidInputError(f"k={k} exceeds the number of voters {election.n}")


def solve_cc_bruteforce(election: Election, k: int, alpha: Dissatisfaction,
                        aggregator: Aggregator,
                        budget: int | None = None) -> SolveResult:
    """Try every k-subset of candidates; each voter takes her favorite
    member.  Ties go to the lexicographically smallest committee."""
    _check_k(election, k)
    limit = enumeration_budget(budget)
    if math.comb(election.m, k) > limit:
        raise SizeLimitError(
            f"{math.comb(election.m, k)} committees exceed budget {limit}"
        )
    avals = alpha.as_array()
    cost = avals[election.pos_matrix - 1]  # (n, m) dissatisfaction per pair
    best: tuple[int, tuple[int, ...]] | None = None
    for committee in itertools.combinations(range(election.m), k):
        sub = cost[:, committee]
        per_voter = sub.min(axis=1)
        obj = aggregator.reduce_array(per_voter)
        if best is None or obj < best[0]:
            reps = np.asarray(committee)[sub.argmin(axis=1)]
            best = (obj, tuple(int(c) for c in reps))
    assert best is not None
    assignment = Assignment(best[1])
    return SolveResult(
        election, assignment, best[0], Rule.CC, aggregator, alpha.label,
        diagnostics={"solver": "cc-bruteforce",
                     "committees": math.comb(election.m, k)},
    )


def _slot_model(election: Election, committee: tuple[int, ...],
                alpha: Dissatisfaction):
    """Square transportation model for balanced representation.

    Every committee member gets floor(n/k) mandatory seats; when k does
    not divide n each member also gets one optional seat, and k - (n % k)
    dummy voters eat the optional seats nobody should use.  A perfect
    matching on the square matrix is exactly a balanced assignment.

    Returns (cost matrix, slot owner array, mandatory-slot mask, big M).
    """
    n, k = election.n, len(committee)
    q, r = divmod(n, k)
    per = q if r == 0 else q + 1
    slot_owner = np.repeat(np.asarray(committee), per)
    mandatory = np.tile(np.arange(per) < q if r else np.ones(per, bool), k)
    avals = alpha.as_array()
    voter_cost = avals[election.pos_matrix[:, committee] - 1]  # (n, k)
    big = int(n + 1) * (int(avals.max()) + 1)
    rows = [np.repeat(voter_cost, per, axis=1)]
    if r:
        dummy = np.where(mandatory, big, 0)[None, :].repeat(k - r, axis=0)
        rows.append(dummy)
    return np.vstack(rows).astype(np.int64), slot_owner, mandatory, big


def optimal_balanced_assignment(election: Election, committee,
                                alpha: Dissatisfaction,
                                aggregator: Aggregator) -> SolveResult:
    """Best assignment of all voters to a fixed committee under Monroe
    load bounds (each member serves floor(n/k) or ceil(n/k) voters).

    Sum objectives go straight to a min-cost perfect matching.  Max
    objectives binary-search the distinct dissatisfaction values, testing
    feasibility with only the arcs at or under the threshold, then pick
    the Sum-cheapest assignment within the optimal threshold.
    """
    committee = tuple(sorted(set(committee)))
    k = len(committee)
    if k == 0 or any(not 0 <= c < election.m for c in committee):
        raise InvalidInputError("committee must be a nonempty set of candidates")
    if k > election.n:
        raise InvalidInputError("committee larger than the electorate")
    n = election.n
    cost, slot_owner, _, big = _slot_model(election, committee, alpha)

    if aggregator is Aggregator.MAX:
        values = np.unique(cost[:n])
        lo, hi = 0, len(values) - 1
        while lo < hi:  # smallest threshold with a feasible matching
            mid = (lo + hi) // 2
            viol = (cost > values[mid]).astype(np.int64)
            rows, cols = linear_sum_assignment(viol)
            if viol[rows, cols].sum() == 0:
                hi = mid
            else:
                lo = mid + 1
        theta = int(values[lo])
        cost = np.where(cost <= theta, cost, big)

    rows, cols = linear_sum_assignment(cost)
    total = int(cost[rows, cols].sum())
    if total >= big:
        raise AssertionError("balanced matching unexpectedly infeasible")
    reps = [0] * n
    for rr, cc in zip(rows, cols):
        if rr < n:
            reps[rr] = int(slot_owner[cc])
    assignment = Assignment(tuple(reps))
    objective = score(election, assignment, alpha, aggregator)
    return SolveResult(
        election, assignment, objective, Rule.MONROE, aggregator, alpha.label,
        diagnostics={"solver": "balanced-flow", "slots": int(cost.shape[1])},
    )


def solve_monroe_bruteforce(election: Election, k: int, alpha: Dissatisfaction,
                            aggregator: Aggregator,
                            budget: int | None = None) -> SolveResult:
    """Every k-subset of candidates, each scored by its optimal balanced
    assignment.  Ties go to the lexicographically smallest committee."""
    _check_k(election, k, need_n=True)
    limit = enumeration_budget(budget)
    if math.comb(election.m, k) > limit:
        raise SizeLimitError(
            f"{math.comb(election.m, k)} committees exceed budget {limit}"
        )
    best: SolveResult | None = None
    for committee in itertools.combinations(range(election.m), k):
        res = optimal_balanced_assignment(election, committee, alpha, aggregator)
        if best is None or res.objective < best.objective:
            best = res
    assert best is not None
    best.diagnostics.update(
        solver="monroe-bruteforce", committees=math.comb(election.m, k)
    )
    return best


def _interval_cost(election: Election, alpha: Dissatisfaction,
                   aggregator: Aggregator, bounds: list[int]) -> np.ndarray:
    """(blocks, m) aggregated dissatisfaction of each candidate over each
    voter interval; bounds has block edges [b0, b1, ..], block i is
    voters bounds[i]..bounds[i+1]-1."""
    avals = alpha.as_array()
    cost = avals[election.pos_matrix - 1]
    out = np.empty((len(bounds) - 1, election.m), dtype=np.int64)
    for b, (lo, hi) in enumerate(zip(bounds, bounds[1:])):
        seg = cost[lo:hi]
        out[b] = seg.sum(axis=0) if aggregator is Aggregator.SUM else seg.max(axis=0)
    return out


def _best_injection(block_cost: np.ndarray, aggregator: Aggregator):
    """Injective block -> candidate map minimizing the aggregate; returns
    (objective, chosen candidate per block)."""
    if aggregator is Aggregator.SUM:
        rows, cols = linear_sum_assignment(block_cost)
        return int(block_cost[rows, cols].sum()), cols
    values = np.unique(block_cost)
    lo, hi = 0, len(values) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        viol = (block_cost > values[mid]).astype(np.int64)
        rows, cols = linear_sum_assignment(viol)
        if viol[rows, cols].sum() == 0:
            hi = mid
        else:
            lo = mid + 1
    theta = int(values[lo])
    big = int(block_cost.max()) + 1
    masked = np.where(block_cost <= theta, block_cost, big)
    rows, cols = linear_sum_assignment(masked)
    return theta, cols


def best_contiguous_bruteforce(election: Election, k: int,
                               alpha: Dissatisfaction, aggregator: Aggregator,
                               rule: Rule,
                               budget: int | None = None) -> SolveResult:
    """Best assignment whose voter blocks are contiguous, with no
    restriction on which candidate serves which block.

    Monroe: exactly k blocks of balanced sizes in every arrangement.
    CC: every split of the voter line into at most k intervals.
    """
    _check_k(election, k, need_n=(rule is Rule.MONROE))
    n = election.n
    limit = enumeration_budget(budget)

    arrangements: list[list[int]] = []
    if rule is Rule.MONROE:
        q, r = divmod(n, k)
        if math.comb(k, r) > limit:
            raise SizeLimitError("block arrangements exceed budget")
        for ceil_at in itertools.combinations(range(k), r):
            sizes = [q + 1 if b in ceil_at else q for b in range(k)]
            arrangements.append([0] + list(itertools.accumulate(sizes)))
    else:
        total = sum(math.comb(n - 1, j - 1) for j in range(1, min(k, n) + 1))
        if total > limit:
            raise SizeLimitError("block arrangements exceed budget")
        for j in range(1, min(k, n) + 1):
            for cuts in itertools.combinations(range(1, n), j - 1):
                arrangements.append([0, *cuts, n])

    best: tuple[int, list[int], np.ndarray] | None = None
    for bounds in arrangements:
        block_cost = _interval_cost(election, alpha, aggregator, bounds)
        obj, cols = _best_injection(block_cost, aggregator)
        if best is None or obj < best[0]:
            best = (obj, bounds, cols)
    assert best is not None
    obj, bounds, cols = best
    reps = [0] * n
    for b, (lo, hi) in enumerate(zip(bounds, bounds[1:])):
        for v in range(lo, hi):
            reps[v] = int(cols[b])
    assignment = Assignment(tuple(reps))
    return SolveResult(
        election, assignment, obj, rule, aggregator, alpha.label,
        diagnostics={"solver": "contiguous-bruteforce",
                     "arrangements": len(arrangements)},
    )
