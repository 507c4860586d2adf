"""Exact Monroe winner determination via a contiguous-blocks dynamic
program.

A Monroe assignment uses exactly k candidates, each serving between
floor(n/k) and ceil(n/k) voters.  The solver searches assignments whose
voter blocks are contiguous in profile order and whose block candidates
appear in voter 0's preference order along the line.  For egalitarian
(worst-voter) dissatisfaction on single-crossing narcissistic profiles
this restriction is lossless, so the dynamic program is an exact solver
there; elsewhere it is exact only within that restricted class.

State A[t][i][j]: best objective covering the first i voters with t
agents drawn from voter 0's first j candidates, the last agent serving a
trailing window of floor or ceil length.  The j' scan restarts at every
j on purpose: the O(n m^2 k) profile of the stated recurrence is part of
the contract.  Ties prefer the shorter window, then the smaller j'.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numba
import numpy as np
from scipy.ndimage import maximum_filter1d

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
    validate_assignment,
)
from .domains import check_narcissistic, check_single_crossing

INF = np.int64(1) << np.int64(60)


def _trailing_max(pos: np.ndarray, w: int) -> np.ndarray:
    # Row i becomes the max over rows i-w+1..i; rows before the first
    # full window hold the truncated-window max (edge rows are clamped).
    return maximum_filter1d(pos, size=w, axis=0, origin=(w - 1) // 2,
                            mode="nearest")


@dataclass(frozen=True)
class WorstPositionWindows:
    """Per candidate, the worst ranking position over every trailing
    voter window of the two Monroe block lengths.

    Row i - 1 of each array covers the window ending at voter i
    (1-based); only rows with a full window behind them feed the solver.
    Worst positions are stored instead of costs so one structure serves
    any dissatisfaction function: alpha is nondecreasing, so the worst
    position is the worst cost.
    """

    floor_len: int
    ceil_len: int
    floor_worst: np.ndarray
    ceil_worst: np.ndarray

    @classmethod
    def build(cls, election: Election, k: int) -> "WorstPositionWindows":
        if not 1 <= k <= election.n:
            raise InvalidInputError(f"k={k} outside 1..{election.n}")
        q, r = divmod(election.n, k)
        fw = _trailing_max(election.pos_matrix, q)
        cw = _trailing_max(election.pos_matrix, q + 1) if r else fw
        return cls(q, q + 1 if r else q, fw, cw)


@numba.njit(cache=True)
def _fill_monroe(wf, wc, lf, lc, k, use_max):  # pragma: no cover
    # wf[i, jp] / wc[i, jp]: cost of the floor- / ceil-length window
    # ending at voter i when served by candidate jp (voter-0 order,
    # 1-based).  Layout [t, i, j] keeps the jp scan contiguous.
    n1, m1 = wf.shape
    n, m = n1 - 1, m1 - 1
    A = np.full((k + 1, n + 1, m + 1), INF, np.int64)
    bpj = np.full((k + 1, n + 1, m + 1), np.int32(-1), np.int32)
    bpw = np.zeros((k + 1, n + 1, m + 1), np.int32)
    for j in range(m + 1):
        A[0, 0, j] = 0
    two = lf != lc
    for t in range(1, k + 1):
        prevtab = A[t - 1]
        for i in range(1, n + 1):
            cur = A[t, i]
            curj = bpj[t, i]
            curw = bpw[t, i]
            for j in range(1, m + 1):
                best = INF
                bj = np.int32(-1)
                bw = np.int32(0)
                if i - lf >= 0:
                    prow = prevtab[i - lf]
                    crow = wf[i]
                    for jp in range(1, j + 1):
                        p = prow[jp - 1]
                        if p < INF:
                            c = crow[jp]
                            v = (p if p > c else c) if use_max else p + c
                            if v < best:
                                best = v
                                bj = np.int32(jp)
                                bw = np.int32(lf)
                if two and i - lc >= 0:
                    prow = prevtab[i - lc]
                    crow = wc[i]
                    for jp in range(1, j + 1):
                        p = prow[jp - 1]
                        if p < INF:
                            c = crow[jp]
                            v = (p if p > c else c) if use_max else p + c
                            if v < best:
                                best = v
                                bj = np.int32(jp)
                                bw = np.int32(lc)
                cur[j] = best
                curj[j] = bj
                curw[j] = bw
    return A, bpj, bpw


def _solve_contiguous(election: Election, k: int, alpha: Dissatisfaction,
                      aggregator: Aggregator, solver_name: str) -> SolveResult:
    n, m = election.n, election.m
    if not 1 <= k <= min(n, m):
        raise InvalidInputError(f"k={k} outside 1..min(n={n}, m={m})")
    if len(alpha) != m:
        raise InvalidInputError("dissatisfaction function does not cover all positions")
    t0 = time.perf_counter()
    vote0 = election.rankings[0]
    q, r = divmod(n, k)
    lf, lc = q, q + 1 if r else q
    avals = alpha.as_array()
    wf = np.zeros((n + 1, m + 1), np.int64)
    wc = np.zeros((n + 1, m + 1), np.int64)
    if aggregator is Aggregator.MAX:
        ww = WorstPositionWindows.build(election, k)
        wf[1:, 1:] = avals[ww.floor_worst[:, vote0] - 1]
        wc[1:, 1:] = avals[ww.ceil_worst[:, vote0] - 1]
    else:
        per = avals[election.pos_matrix[:, vote0] - 1].astype(np.int64)
        ps = np.zeros((n + 1, m), np.int64)
        np.cumsum(per, axis=0, out=ps[1:])
        wf[lf:, 1:] = ps[lf:] - ps[: n + 1 - lf]
        if r:
            wc[lc:, 1:] = ps[lc:] - ps[: n + 1 - lc]
    A, bpj, bpw = _fill_monroe(wf, wc, lf, lc, k, aggregator is Aggregator.MAX)
    assert A[k, n, m] < INF, "no feasible block decomposition"

    reps = [0] * n
    t, i, j = k, n, m
    while t > 0:
        jp = int(bpj[t, i, j])
        w = int(bpw[t, i, j])
        assert jp >= 1, "walked into an infeasible state"
        cand = vote0[jp - 1]
        for v in range(i - w, i):
            reps[v] = cand
        t, i, j = t - 1, i - w, jp - 1
    assert i == 0, "reconstruction left voters uncovered"

    assignment = Assignment(tuple(reps))
    report = validate_assignment(election, assignment, Rule.MONROE, k)
    assert report.ok, f"invalid Monroe assignment: {report.problems}"
    objective = score(election, assignment, alpha, aggregator)
    assert objective == int(A[k, n, m]), "reconstruction mismatch"
    return SolveResult(
        election, assignment, objective, Rule.MONROE, aggregator, alpha.label,
        diagnostics={
            "solver": solver_name,
            "table_shape": (k, n, m),
            "elapsed_s": time.perf_counter() - t0,
        },
    )


def solve_monroe_contiguous(election: Election, k: int, alpha: Dissatisfaction,
                            aggregator: Aggregator) -> SolveResult:
    """Best Monroe assignment among those whose blocks are contiguous and
    candidate-ordered by voter 0.  No domain precondition; exactness
    beyond that class is only guaranteed where the restriction is
    lossless."""
    return _solve_contiguous(election, k, alpha, aggregator, "monroe-contiguous-dp")


def solve_monroe_egalitarian_sc_narcissistic(
        election: Election, k: int, alpha: Dissatisfaction) -> SolveResult:
    """Exact egalitarian Monroe on single-crossing narcissistic
    elections.  Raises DomainViolationError off-domain, because there the
    contiguous restriction may lose the optimum."""
    if not check_single_crossing(election):
        raise DomainViolationError("voter order is not single-crossing")
    if not check_narcissistic(election):
        raise DomainViolationError(
            "profile is not narcissistic (needs one voter ranking each candidate first)"
        )
    result = _solve_contiguous(election, k, alpha, Aggregator.MAX,
                               "monroe-egalitarian-dp")
    return result
