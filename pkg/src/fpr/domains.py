"""Preference-domain recognition: single-crossing, narcissistic,
single-peaked, and clone structure.

Voter order matters: check_single_crossing reads the election's voter
sequence as given.  find_single_crossing_order searches for a reordering
instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import Election, InvalidInputError, SizeLimitError

_FIND_ORDER_LIMIT = 200_000_000  # n * m^2 guard for the quadratic search


def check_single_crossing(election: Election) -> bool:
    """True iff for every candidate pair the set of voters preferring one
    side is a prefix of the voter sequence (oriented by voter 0)."""
    pos = election.pos_matrix
    n, m = pos.shape
    if n == 1 or m == 1:
        return True
    for a in range(m):
        below = np.flatnonzero(pos[0] > pos[0, a])  # b's voter 0 ranks under a
        if below.size == 0:
            continue
        beats = pos[:, a, None] < pos[:, below]
        # A prefix set is exactly one with no False -> True step downward.
        if np.any(~beats[:-1] & beats[1:]):
            return False
    return True


def _beats_tensor(election: Election) -> np.ndarray:
    pos = election.pos_matrix
    return pos[:, :, None] < pos[:, None, :]


def find_single_crossing_order(election: Election) -> tuple[int, ...] | None:
    """A voter permutation making the election single-crossing, or None.

    Tries every voter as the first of the sought order, sorts the rest by
    number of pairwise disagreements with it (duplicate votes grouped,
    then input index), and verifies.  In a valid ordering anchored at u,
    distinct votes sit at distinct disagreement counts, so the sort is
    exhaustive despite being greedy.  Quadratic in n and m; refuses
    elections beyond n * m^2 of 2e8.
    """
    n, m = election.n, election.m
    if n * m * m > _FIND_ORDER_LIMIT:
        raise SizeLimitError("election too large for reordering search")
    if check_single_crossing(election):
        return tuple(range(n))
    beats = _beats_tensor(election)
    for anchor in range(n):
        dist = [int(np.sum(beats[anchor] ^ beats[v])) // 2 for v in range(n)]
        perm = sorted(range(n), key=lambda v: (dist[v], election.rankings[v], v))
        if check_single_crossing(election.reorder_voters(perm)):
            return tuple(perm)
    return None


def check_narcissistic(election: Election) -> bool:
    """True iff every candidate is ranked first by at least one voter."""
    return len({r[0] for r in election.rankings}) == election.m


def check_single_peaked_axis(election: Election, axis: tuple[int, ...]) -> bool:
    """True iff every vote is single-peaked with respect to the axis:
    walking a vote from best to worst always extends one end of the
    axis interval covered so far."""
    if sorted(axis) != list(range(election.m)):
        raise InvalidInputError("axis must be a permutation of the candidates")
    axpos = [0] * election.m
    for p, c in enumerate(axis):
        axpos[c] = p
    for vote in election.rankings:
        lo = hi = axpos[vote[0]]
        for c in vote[1:]:
            p = axpos[c]
            if p == lo - 1:
                lo = p
            elif p == hi + 1:
                hi = p
            else:
                return False
    return True


def find_single_peaked_axis_bruteforce(
    election: Election, max_m: int = 8
) -> tuple[int, ...] | None:
    """First axis (in lexicographic order over candidate permutations)
    the election is single-peaked on, or None.  Factorial in m."""
    if election.m > max_m:
        raise SizeLimitError(f"axis enumeration refuses m > {max_m}")
    for axis in itertools.permutations(range(election.m)):
        if check_single_peaked_axis(election, axis):
            return axis
    return None


def axis_induced_voter_order(election: Election, axis: tuple[int, ...]) -> tuple[int, ...]:
    """Voters sorted lexicographically by their votes rewritten in axis
    coordinates; ties keep input order.  For a single-peaked election
    this ordering is single-crossing-friendly."""
    if sorted(axis) != list(range(election.m)):
        raise InvalidInputError("axis must be a permutation of the candidates")
    axpos = [0] * election.m
    for p, c in enumerate(axis):
        axpos[c] = p
    keys = [tuple(axpos[c] for c in vote) for vote in election.rankings]
    return tuple(sorted(range(election.n), key=lambda v: keys[v]))


@dataclass(frozen=True)
class ClonePartition:
    """An ordered partition of the candidates into disjoint sets."""

    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for s in self.sets:
            if not s:
                raise InvalidInputError("clone sets must be nonempty")
            if seen & set(s):
                raise InvalidInputError("clone sets overlap")
            seen |= set(s)
        object.__setattr__(self, "sets", tuple(tuple(sorted(s)) for s in self.sets))

    @classmethod
    def singletons(cls, m: int) -> "ClonePartition":
        return cls(tuple((c,) for c in range(m)))

    @property
    def width(self) -> int:
        return max(len(s) for s in self.sets)

    def set_of(self, candidate: int) -> int:
        for idx, s in enumerate(self.sets):
            if candidate in s:
                return idx
        raise InvalidInputError(f"candidate {candidate} not in partition")


def _check_cover(election: Election, partition: ClonePartition) -> None:
    covered = sorted(c for s in partition.sets for c in s)
    if covered != list(range(election.m)):
        raise InvalidInputError("partition must cover every candidate exactly once")


def verify_clone_partition(election: Election, partition: ClonePartition) -> bool:
    """True iff each set's members occupy consecutive positions in every
    single vote (the defining property of clone sets)."""
    _check_cover(election, partition)
    pos = election.pos_matrix
    for s in partition.sets:
        if len(s) < 2:
            continue
        p = pos[:, list(s)]
        if not np.all(p.max(axis=1) - p.min(axis=1) + 1 == len(s)):
            return False
    return True


def contract_clones(election: Election, partition: ClonePartition) -> Election:
    """Election over the clone sets: each vote lists the sets in order of
    their best member.  Contracted candidate j is partition.sets[j]."""
    if not verify_clone_partition(election, partition):
        raise InvalidInputError("sets are not clones in this election")
    set_of = [0] * election.m
    for idx, s in enumerate(partition.sets):
        for c in s:
            set_of[c] = idx
    votes = []
    for vote in election.rankings:
        seen: set[int] = set()
        out = []
        for c in vote:
            idx = set_of[c]
            if idx not in seen:
                seen.add(idx)
                out.append(idx)
        votes.append(tuple(out))
    names = tuple("+".join(election.names[c] for c in s) for s in partition.sets)
    return Election.from_votes(votes, names)


def compute_width_bruteforce(election: Election, max_m: int = 10) -> ClonePartition:
    """Minimum-width clone partition whose contraction is single-crossing.

    Only partitions contiguous in vote 0 can qualify (clone sets are
    consecutive in every vote), so the search enumerates the 2^(m-1)
    segmentations of vote 0, in ascending order of the cut bitmask, and
    keeps the first one of minimal width.  The one-set partition always
    qualifies, so a result always exists.
    """
    m = election.m
    if m > max_m:
        raise SizeLimitError(f"width search refuses m > {max_m}")
    vote0 = election.rankings[0]
    best: ClonePartition | None = None
    for cuts in range(1 << (m - 1)):
        bounds = [0] + [p + 1 for p in range(m - 1) if cuts >> p & 1] + [m]
        partition = ClonePartition(
            tuple(tuple(vote0[a:b]) for a, b in zip(bounds, bounds[1:]))
        )
        if best is not None and partition.width >= best.width:
            continue
        if not verify_clone_partition(election, partition):
            continue
        if check_single_crossing(contract_clones(election, partition)):
            best = partition
            if best.width == 1:
                break
    assert best is not None  # the cuts == 0 partition always passes
    return best
