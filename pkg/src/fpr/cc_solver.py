"""Exact Chamberlin-Courant winner determination on single-crossing
elections, plus the bounded-width generalization for near-single-crossing
elections with clone structure.

Both solvers exploit the same structural fact: on a single-crossing
profile some optimal assignment partitions the voter line into contiguous
blocks whose candidates appear in voter 0's preference order.  The
dynamic program therefore sweeps candidates in voter 0's order and voters
in profile order.

State A[i][j][t]: cheapest way to cover the first i voters using at most
t representatives drawn from voter 0's first j candidates.  Transition:
either candidate j serves nobody, or it serves a final block (i*, i].
Dissatisfaction uses global ranking positions, never positions within a
candidate prefix.  The i = 0 row is 0; no-candidate and no-seat states
with voters left are infeasible.  Runtime O(m n^2 k), memory O(m n k).

Tie-breaking is deterministic: at equal objective prefer not using the
current candidate, then the smallest block start i*.
"""

from __future__ import annotations

import time

import numba
import numpy as np

from .core import (
    Aggregator,
    Assignment,
    Dissatisfaction,
    DomainViolationError,
    Election,
    InvalidInputError,
    Rule,
    SolveResult,
    score,
)
from .domains import (
    ClonePartition,
    check_single_crossing,
    contract_clones,
    verify_clone_partition,
)

INF = np.int64(1) << np.int64(60)


@numba.njit(cache=True)
def _fill_cc(cost, k, use_max):  # pragma: no cover - exercised via solve_cc
    # cost[j, i]: dissatisfaction of voter i (1-based col) for candidate j
    # in voter 0's preference order.  Layout [j, t, i] keeps the i* scan
    # contiguous in memory.
    m, n1 = cost.shape
    n = n1 - 1
    A = np.full((m + 1, k + 1, n + 1), INF, np.int64)
    split = np.full((m + 1, k + 1, n + 1), np.int32(-1), np.int32)
    for j in range(m + 1):
        for t in range(k + 1):
            A[j, t, 0] = 0
    S = np.zeros(n + 1, np.int64)
    for j in range(1, m + 1):
        row = cost[j - 1]
        for i in range(1, n + 1):
            S[i] = S[i - 1] + row[i]
        for t in range(1, k + 1):
            prev = A[j - 1, t - 1]
            skiprow = A[j - 1, t]
            cur = A[j, t]
            curspl = split[j, t]
            if use_max:
                for i in range(1, n + 1):
                    best = skiprow[i]
                    arg = np.int32(-1)
                    w = np.int64(0)
                    # Downward scan keeps the block maximum incremental;
                    # equality updates still end at the smallest i*.
                    for istar in range(i - 1, -1, -1):
                        c = row[istar + 1]
                        if c > w:
                            w = c
                        p = prev[istar]
                        if p < INF:
                            v = p if p > w else w
                            if v < best or (v == best and arg >= 0):
                                best = v
                                arg = np.int32(istar)
                    cur[i] = best
                    curspl[i] = arg
            else:
                for i in range(1, n + 1):
                    best = skiprow[i]
                    arg = np.int32(-1)
                    si = S[i]
                    for istar in range(i):
                        p = prev[istar]
                        if p < INF:
                            v = p + si - S[istar]
                            if v < best:
                                best = v
                                arg = np.int32(istar)
                    cur[i] = best
                    curspl[i] = arg
    return A, split


class CcDpTable:
    """Filled dynamic-programming table with back-pointers.

    Candidate j means voter 0's j-th ranked candidate.  value(i, j, t)
    reads the objective for the first i voters, first j candidates, at
    most t seats; block_start(i, j, t) is the chosen split i*, or -1
    where candidate j went unused.
    """

    def __init__(self, values: np.ndarray, split: np.ndarray):
        self.values = values  # layout [j, t, i]
        self.split = split

    def value(self, i: int, j: int, t: int) -> int:
        return int(self.values[j, t, i])

    def block_start(self, i: int, j: int, t: int) -> int:
        return int(self.split[j, t, i])

    @property
    def shape(self) -> tuple[int, int, int]:
        j1, t1, i1 = self.values.shape
        return (i1 - 1, j1 - 1, t1 - 1)


def _reindexed_cost(election: Election, alpha: Dissatisfaction) -> np.ndarray:
    vote0 = election.rankings[0]
    avals = alpha.as_array()
    m, n = election.m, election.n
    cost = np.zeros((m, n + 1), np.int64)
    cost[:, 1:] = avals[election.pos_matrix[:, vote0].T - 1]
    return cost


def cc_dp_table(election: Election, k: int, alpha: Dissatisfaction,
                aggregator: Aggregator) -> CcDpTable:
    """Fill the table without reconstructing an assignment."""
    if not 1 <= k <= election.m:
        raise InvalidInputError(f"k={k} outside 1..{election.m}")
    if len(alpha) != election.m:
        raise InvalidInputError("dissatisfaction function does not cover all positions")
    A, split = _fill_cc(_reindexed_cost(election, alpha), k,
                        aggregator is Aggregator.MAX)
    return CcDpTable(A, split)


def _favorite_assignment(election: Election, committee: list[int]) -> Assignment:
    sub = election.pos_matrix[:, committee]
    reps = np.asarray(committee)[sub.argmin(axis=1)]
    return Assignment(tuple(int(c) for c in reps))


def solve_cc(election: Election, k: int, alpha: Dissatisfaction,
             aggregator: Aggregator) -> SolveResult:
    """Optimal committee of at most k candidates, each voter scored by
    her favorite member.  Refuses elections that are not single-crossing
    in the given voter order."""
    t0 = time.perf_counter()
    if not check_single_crossing(election):
        raise DomainViolationError(
            "solve_cc needs a single-crossing voter order; "
            "try find_single_crossing_order first"
        )
    table = cc_dp_table(election, k, alpha, aggregator)
    n, m = election.n, election.m
    i, j, t = n, m, k
    members: list[int] = []
    while i > 0:
        assert j >= 1 and t >= 1, "walked into an infeasible state"
        s = table.block_start(i, j, t)
        if s < 0:
            j -= 1
        else:
            members.append(j - 1)
            i, j, t = s, j - 1, t - 1
    vote0 = election.rankings[0]
    committee = sorted(vote0[c] for c in members)
    # Voters take their favorite member; on single-crossing profiles this
    # keeps blocks contiguous and never worsens the objective.
    assignment = _favorite_assignment(election, committee)
    objective = score(election, assignment, alpha, aggregator)
    assert objective == table.value(n, m, k), "reconstruction mismatch"
    return SolveResult(
        election, assignment, objective, Rule.CC, aggregator, alpha.label,
        diagnostics={
            "solver": "cc-dp",
            "table_shape": table.shape,
            "elapsed_s": time.perf_counter() - t0,
        },
    )


def _subset_members(members: tuple[int, ...], mask: int) -> list[int]:
    return [c for b, c in enumerate(members) if mask >> b & 1]


def solve_cc_width(election: Election, partition: ClonePartition, k: int,
                   alpha: Dissatisfaction, aggregator: Aggregator) -> SolveResult:
    """Chamberlin-Courant on an election whose clone-set contraction is
    single-crossing; exponential only in the partition width.

    Blocks are contiguous voter intervals, one per used clone set, in the
    order voter 0 ranks the sets; within a block every voter takes her
    favorite among the subset chosen from that set.
    """
    if not 1 <= k <= election.m:
        raise InvalidInputError(f"k={k} outside 1..{election.m}")
    t0 = time.perf_counter()
    if not verify_clone_partition(election, partition):
        raise DomainViolationError("partition sets are not clones in every vote")
    contracted = contract_clones(election, partition)
    if not check_single_crossing(contracted):
        raise DomainViolationError("clone-set contraction is not single-crossing")
    sets = [partition.sets[idx] for idx in contracted.rankings[0]]
    s, n = len(sets), election.n
    avals = alpha.as_array()
    cost = avals[election.pos_matrix - 1]

    big = int(INF)
    B = np.full((s + 1, k + 1, n + 1), big, np.int64)
    B[:, :, 0] = 0
    choice = np.full((s + 1, k + 1, n + 1), -1, np.int64)

    def block_values(vec: np.ndarray, prev: np.ndarray) -> np.ndarray:
        """vals[i] = best over i* < i of combining prev[i*] with the
        block cost of voters i*+1..i (vec is 0-based per voter)."""
        vals = np.full(n + 1, big, np.int64)
        if aggregator is Aggregator.SUM:
            P = np.concatenate(([0], np.cumsum(vec)))
            run = np.minimum.accumulate(np.where(prev < big, prev - P, big))
            vals[1:] = np.where(run[:-1] < big, P[1:] + run[:-1], big)
        else:
            wmax = np.zeros(n, np.int64)
            for i in range(1, n + 1):
                wmax[: i - 1] = np.maximum(wmax[: i - 1], vec[i - 1])
                wmax[i - 1] = vec[i - 1]
                cand = np.where(prev[:i] < big,
                                np.maximum(prev[:i], wmax[:i]), big)
                vals[i] = cand.min()
        return vals

    minvec: dict[tuple[int, int], np.ndarray] = {}
    for b in range(1, s + 1):
        members = sets[b - 1]
        for mask in range(1, 1 << len(members)):
            minvec[(b, mask)] = cost[:, _subset_members(members, mask)].min(axis=1)
        for t in range(1, k + 1):
            cur = B[b - 1, t].copy()
            ch = np.full(n + 1, -1, np.int64)
            for mask in range(1, 1 << len(members)):
                sz = bin(mask).count("1")
                if sz > t:
                    continue
                vals = block_values(minvec[(b, mask)], B[b - 1, t - sz])
                better = vals < cur
                cur = np.where(better, vals, cur)
                ch = np.where(better, mask, ch)
            B[b, t] = cur
            choice[b, t] = ch
    assert B[s, k, n] < big, "some voter could not be covered"

    reps = [0] * n
    members_used: list[int] = []
    i, b, t = n, s, k
    while i > 0:
        assert b >= 1, "walked into an infeasible state"
        mask = int(choice[b, t, i])
        if mask < 0:
            b -= 1
            continue
        chosen = _subset_members(sets[b - 1], mask)
        vec = minvec[(b, mask)]
        prev = B[b - 1, t - len(chosen)]
        target = int(B[b, t, i])
        istar = None
        if aggregator is Aggregator.SUM:
            acc = 0
            for cand_i in range(i - 1, -1, -1):
                acc += int(vec[cand_i])
                if prev[cand_i] < big and int(prev[cand_i]) + acc == target:
                    istar = cand_i  # keep scanning: smallest i* wins
        else:
            w = 0
            for cand_i in range(i - 1, -1, -1):
                w = max(w, int(vec[cand_i]))
                if prev[cand_i] < big and max(int(prev[cand_i]), w) == target:
                    istar = cand_i
        assert istar is not None, "reconstruction lost the block start"
        fav = np.asarray(chosen)[cost[istar:i, chosen].argmin(axis=1)]
        for v in range(istar, i):
            reps[v] = int(fav[v - istar])
        members_used.extend(chosen)
        i, b, t = istar, b - 1, t - len(chosen)

    assignment = Assignment(tuple(reps))
    objective = score(election, assignment, alpha, aggregator)
    assert objective == int(B[s, k, n]), "reconstruction mismatch"
    return SolveResult(
        election, assignment, objective, Rule.CC, aggregator, alpha.label,
        diagnostics={
            "solver": "cc-width-dp",
            "width": partition.width,
            "sets": s,
            "elapsed_s": time.perf_counter() - t0,
        },
    )
