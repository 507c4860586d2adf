"""Instance transformation embedding arbitrary utilitarian-Borda-Monroe
winner determination into single-crossing elections.

Given any source election with committee size k, k | n and n > k, the
builder outputs a much larger single-crossing election and a committee
size k_sc such that optimal Monroe dissatisfaction on the output equals
the source optimum plus a constant depending on (m, n, k) only, and the
embedded copies of the source candidates that win there are exactly the
source winners.

The construction stacks filler candidate groups (H, F_1..F_m, E_1..E_m,
E, D_1..D_m, G_1..G_m, G) around the embedded source candidates C'.
Voter lists V_1..V_5 use two gadgets: rotation profiles, which give every
candidate of a set an equal-sized block of supporters while staying
single-crossing, and adjustment profiles, which replay the source's
position sequence for one embedded candidate shifted mn places down.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from .core import (
    Aggregator,
    Assignment,
    Dissatisfaction,
    Election,
    InvalidInputError,
    SizeLimitError,
    validate_assignment,
)
from .core import Rule
from .oracle import solve_monroe_bruteforce

# Hard cap on |C_sc| * |V_sc|; the profile is materialized densely.
_CELL_LIMIT = 50_000_000


def _rotation_rows(order: Sequence[int]) -> list[tuple[int, ...]]:
    # Row b: order[b:] then order[:b] reversed; the last row is the
    # reverse of the first.
    out = []
    for b in range(len(order)):
        out.append(tuple(order[b:]) + tuple(reversed(order[:b])))
    return out


def build_rotation_profile(candidate_order: Sequence[int], copies: int) -> Election:
    """Single-crossing narcissistic profile where each candidate leads
    for exactly `copies` consecutive voters, declining thereafter."""
    if len(candidate_order) == 0:
        raise InvalidInputError("empty candidate order")
    if copies < 1:
        raise InvalidInputError(f"copies must be >= 1, got {copies}")
    votes = []
    for row in _rotation_rows(candidate_order):
        votes.extend([row] * copies)
    return Election.from_votes(votes)


def rotation_inverse(order: Sequence[int]) -> tuple[int, ...]:
    """Order whose rotation profile ends with `order` as its last vote."""
    return tuple(reversed(order))


def _adjustment_rows(positions: Sequence[int], a_ids: Sequence[int],
                     target: int, b_ids: Sequence[int]) -> list[tuple[int, ...]]:
    # Row j puts target at position x + y + 1 = len(a_ids) + positions[j]
    # inside the segment; x leading A's, y leading B's, remainders after.
    rows = []
    x, y = len(a_ids), positions[0] - 1
    prev = positions[0]
    for p in positions:
        d = p - prev
        if d >= 0:
            y += d
        else:
            x += d
        prev = p
        assert 0 < x <= len(a_ids) and 0 <= y < len(b_ids)
        rows.append(tuple(a_ids[:x]) + tuple(b_ids[:y]) + (target,)
                    + tuple(b_ids[y:]) + tuple(a_ids[x:]))
    return rows


def _adjustment_parts(source: Election, target: int, a_ids: Sequence[int],
                      b_ids: Sequence[int]) -> tuple[list[tuple[int, ...]], int]:
    mn = source.m * source.n
    if len(a_ids) != mn or len(b_ids) != mn:
        raise InvalidInputError(f"A and B must each have {mn} candidates")
    if not 0 <= target < source.m:
        raise InvalidInputError(f"target {target} is not a source candidate")
    used = set(a_ids) | set(b_ids)
    if len(used) != 2 * mn or not used <= set(range(2 * mn + 1)):
        # A, B and one leftover id for the target must tile 0..2mn so the
        # rows form a standalone election.
        raise InvalidInputError("A and B must be disjoint and drawn from 0..2mn")
    t_id = (set(range(2 * mn + 1)) - used).pop()
    positions = [int(source.position(v, target)) for v in range(source.n)]
    return _adjustment_rows(positions, a_ids, t_id, b_ids), t_id


def build_adjustment_profile(source: Election, target: int,
                             a_ids: Sequence[int], b_ids: Sequence[int]) -> Election:
    """One vote per source voter over A + B + one target id (the id in
    0..2mn that A and B leave unused), preserving the internal orders of
    A and B, with the target's position in vote j equal to mn + the
    source position of `target` in source vote j."""
    rows, _ = _adjustment_parts(source, target, a_ids, b_ids)
    return Election.from_votes(rows)


def bracketed_adjustment_profile(source: Election, target: int,
                                 a_ids: Sequence[int], b_ids: Sequence[int]) -> Election:
    """Adjustment profile with sentinel votes A > target > B prepended
    and B > target > A appended; still single-crossing."""
    rows, t_id = _adjustment_parts(source, target, a_ids, b_ids)
    first = tuple(a_ids) + (t_id,) + tuple(b_ids)
    last = tuple(b_ids) + (t_id,) + tuple(a_ids)
    return Election.from_votes([first, *rows, last])


@dataclass(frozen=True, eq=False)
class ReductionOutput:
    """Built single-crossing instance plus the bookkeeping needed to
    audit it and map solutions back."""

    source: Election
    k: int
    sc_election: Election
    k_sc: int
    candidate_group: tuple[str, ...]
    voter_list: tuple[str, ...]
    groups: dict[str, tuple[int, ...]] = field(repr=False)
    cprime_ids: tuple[int, ...]

    def group_sizes(self) -> dict[str, int]:
        return {label: len(ids) for label, ids in self.groups.items()}

    def thresholds(self) -> dict[str, int]:
        """Position bounds separating where the embedded candidates sit
        in the different voter lists.  p1 and p2 coincide identically;
        voters outside V_3 + V_4 rank embedded candidates strictly below
        p1, V_4 voters strictly above p2."""
        m = self.source.m
        n = self.source.n
        sz = self.group_sizes()
        sum_e = sum(sz[f"E_{i}"] for i in range(1, m + 1))
        sum_f = sum(sz[f"F_{i}"] for i in range(1, m + 1))
        p1 = sz["H"] + sum_e + sum_f + sz["E"]
        p2 = sz["H"] + sum_e + 2 * m * m * n + m
        p3 = sz["H"] + sum_e
        p4 = sz["H"] + sum_f + sum(sz[f"E_{i}"] for i in range(1, m)) + sz["E"] + 1
        return {"p1": p1, "p2": p2, "p3": p3, "p4": p4, "p5": p1}


def _audit(out: ReductionOutput) -> None:
    # The separation the construction relies on, checked on the built
    # profile: embedded candidates sit strictly below p1 for V_1, V_2
    # and V_5 voters and strictly inside (p3, p2) for V_4 voters.
    th = out.thresholds()
    assert th["p1"] >= th["p2"]
    pos = out.sc_election.pos_matrix[:, list(out.cprime_ids)]
    lists = np.asarray(out.voter_list)
    outer = np.isin(lists, ("V_1", "V_2", "V_5"))
    if outer.any():
        assert int(pos[outer].min()) > th["p1"], "embedded candidate too high outside V_3+V_4"
    v4 = lists == "V_4"
    assert int(pos[v4].max()) < th["p2"], "embedded candidate too low in V_4"
    assert int(pos[v4].min()) > th["p3"], "embedded candidate too high in V_4"


def build_monroe_reduction(election: Election, k: int) -> ReductionOutput:
    """Build the single-crossing instance embedding `election` with
    committee size k.  Requires k | n, n > k and k <= m."""
    m, n = election.m, election.n
    if not 1 <= k <= m:
        raise InvalidInputError(f"k={k} outside 1..{m}")
    if n <= k or n % k:
        raise InvalidInputError(f"need n > k and k | n, got n={n}, k={k}")
    ratio = n // k

    sizes: dict[str, int] = {"H": m - k}
    for i in range(1, m + 1):
        sizes[f"F_{i}"] = m * n
    for i in range(1, m + 1):
        sizes[f"E_{i}"] = 2 * m * m * n + m + (m - i) * (2 * m * n + 1) * ratio
    sizes["E"] = m * m * n + m
    for i in range(1, m + 1):
        sizes[f"D_{i}"] = sizes[f"E_{i}"]
    for i in range(1, m + 1):
        sizes[f"G_{i}"] = m * n
    sizes["G"] = sum(sizes[f"F_{i}"] for i in range(1, m + 1)) + sizes["E"]
    total_c = sum(sizes.values()) + m

    n_v2 = (sum(sizes[f"F_{i}"] + sizes[f"E_{i}"] for i in range(1, m + 1))
            + sizes["E"]) * (ratio + 1)
    n_v5 = (sum(sizes[f"D_{i}"] + sizes[f"G_{i}"] for i in range(1, m + 1))
            + sizes["G"]) * (ratio + 1)
    total_v = (m - k) * ratio + n_v2 + m + n + n_v5
    if total_c * total_v > _CELL_LIMIT:
        raise SizeLimitError(
            f"built profile would hold {total_c * total_v} cells (limit {_CELL_LIMIT})"
        )

    groups: dict[str, tuple[int, ...]] = {}
    names: list[str] = []
    group_of: list[str] = []
    next_id = 0

    def alloc(label: str, count: int, name_of) -> tuple[int, ...]:
        nonlocal next_id
        ids = tuple(range(next_id, next_id + count))
        next_id += count
        groups[label] = ids
        names.extend(name_of(j) for j in range(1, count + 1))
        group_of.extend([label] * count)
        return ids

    H = alloc("H", m - k, lambda j: f"h{j}")
    F = [alloc(f"F_{i}", sizes[f"F_{i}"], lambda j, i=i: f"F{i}_{j}")
         for i in range(1, m + 1)]
    E_i = [alloc(f"E_{i}", sizes[f"E_{i}"], lambda j, i=i: f"E{i}_{j}")
           for i in range(1, m + 1)]
    E = alloc("E", sizes["E"], lambda j: f"E_{j}")
    D = [alloc(f"D_{i}", sizes[f"D_{i}"], lambda j, i=i: f"D{i}_{j}")
         for i in range(1, m + 1)]
    G_i = [alloc(f"G_{i}", sizes[f"G_{i}"], lambda j, i=i: f"G{i}_{j}")
           for i in range(1, m + 1)]
    G = alloc("G", sizes["G"], lambda j: f"G_{j}")
    cprime = alloc("Cprime", m, lambda j: election.names[j - 1])
    assert next_id == total_c

    def flat(seqs) -> tuple[int, ...]:
        return tuple(c for s in seqs for c in s)

    Fs = flat(F)
    Ds = flat(D)
    Gis = flat(G_i)
    ei_desc = flat(reversed(E_i))
    cs = cprime
    X = Fs + E + ei_desc
    rev_x = tuple(reversed(X))

    votes: list[tuple[int, ...]] = []
    vlist: list[str] = []

    def emit(label: str, rows, copies: int = 1) -> None:
        for row in rows:
            votes.extend([row] * copies)
            vlist.extend([label] * copies)

    tail_145 = cs + Ds + Gis + G
    emit("V_1", [H + rev_x + tail_145] * ((m - k) * ratio))
    emit("V_2", (H + r + tail_145 for r in _rotation_rows(rev_x)), ratio + 1)

    def v3_row(i: int) -> tuple[int, ...]:
        return (H + Fs + E
                + flat(D[: i - 1]) + flat(reversed(E_i[i:]))
                + (cs[i - 1],) + E_i[i - 1]
                + cs[i: ] + tuple(reversed(cs[: i - 1]))
                + flat(reversed(E_i[: i - 1])) + flat(D[i - 1:])
                + Gis + G)

    emit("V_3", (v3_row(i) for i in range(1, m + 1)))

    adj = []
    for j in range(1, m + 1):
        target = cs[m - j]
        positions = [int(election.position(v, m - j)) for v in range(n)]
        adj.append(_adjustment_rows(positions, F[j - 1], target, G_i[j - 1]))
    emit("V_4", (H + Ds + flat(adj[j][l] for j in range(m)) + E + ei_desc + G
                 for l in range(n)))

    y_seq = Ds + Gis + G
    v5_tail = tuple(reversed(cs)) + Fs + E + ei_desc
    emit("V_5", (H + r + v5_tail for r in _rotation_rows(y_seq)), ratio + 1)

    assert len(votes) == total_v
    sc = Election.from_votes(votes, names=names)
    out = ReductionOutput(
        source=election,
        k=k,
        sc_election=sc,
        k_sc=total_c - (m - k),
        candidate_group=tuple(group_of),
        voter_list=tuple(vlist),
        groups=groups,
        cprime_ids=cprime,
    )
    _audit(out)
    return out


def extract_original_committee(output: ReductionOutput,
                               sc_solution: Assignment) -> tuple[int, ...]:
    """Source candidates whose embedded copies won; exactly k of them in
    any optimal solution, otherwise the extraction fails loudly."""
    report = validate_assignment(output.sc_election, sc_solution,
                                 Rule.MONROE, output.k_sc)
    if not report:
        raise InvalidInputError(
            "sc_solution is not Monroe-valid: " + "; ".join(report.problems)
        )
    offset = output.cprime_ids[0]
    embedded = set(output.cprime_ids)
    hits = sorted(c - offset for c in sc_solution.committee if c in embedded)
    if len(hits) != output.k:
        raise InvalidInputError(
            f"expected {output.k} embedded winners, found {len(hits)}; "
            "the sc_solution is not optimal"
        )
    return tuple(hits)


def _calibration_source(m: int, n: int) -> Election:
    votes = [tuple((l + j) % m for j in range(m)) for l in range(n)]
    return Election.from_votes(votes)


def calibrate_offset(m: int, n: int, k: int, budget: int | None = None) -> int:
    """Constant gap between the built instance's optimum and the source
    optimum at these parameters, measured on a fixed calibration source
    under utilitarian Borda-Monroe."""
    source = _calibration_source(m, n)
    out = build_monroe_reduction(source, k)
    base = solve_monroe_bruteforce(source, k, Dissatisfaction.borda(m),
                                   Aggregator.SUM, budget=budget)
    lifted = solve_monroe_bruteforce(out.sc_election, out.k_sc,
                                     Dissatisfaction.borda(out.sc_election.m),
                                     Aggregator.SUM, budget=budget)
    return lifted.objective - base.objective
