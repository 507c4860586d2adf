"""Core types for fully proportional representation solvers.

Conventions used across the package:

* Candidates and voters are integers ``0 .. m-1`` / ``0 .. n-1``.
* Ranking positions are 1-based at every interface: position 1 is the
  most preferred candidate.
* Dissatisfaction values and objectives are exact Python ints; no
  floating point is used anywhere in scoring.
* The voter order of an :class:`Election` is significant.  Domain checks
  (single-crossing) and contiguity reports read voters in that order.
* All types are immutable; operations never mutate their inputs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class FprError(Exception):
    """Base class for all package errors."""


class InvalidInputError(FprError):
    """Malformed arguments: bad rankings, alpha vectors, committees, ..."""


class DomainViolationError(FprError):
    """A solver precondition (single-crossing, narcissism) does not hold."""


class SizeLimitError(FprError):
    """An enumeration budget or size limit would be exceeded."""


class ParseError(FprError):
    """A profile file could not be parsed.

    Attributes:
        line: 1-based line number where parsing failed, or None.
    """

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class Aggregator(enum.Enum):
    """How per-voter dissatisfactions combine into one objective."""

    SUM = "sum"
    MAX = "max"

    def combine(self, values: Iterable[int]) -> int:
        vals = list(values)
        if not vals:
            return 0
        return sum(vals) if self is Aggregator.SUM else max(vals)

    def reduce_array(self, values: np.ndarray) -> int:
        if values.size == 0:
            return 0
        return int(values.sum()) if self is Aggregator.SUM else int(values.max())


class Rule(enum.Enum):
    CC = "cc"
    MONROE = "monroe"


@dataclass(frozen=True)
class Dissatisfaction:
    """A nondecreasing misrepresentation function on ranking positions.

    ``values[i - 1]`` is the dissatisfaction of a voter represented by
    her i-th ranked candidate.  Position 1 must cost 0.
    """

    values: tuple[int, ...]
    label: str = "custom"

    def __post_init__(self):
        if not self.values:
            raise InvalidInputError("dissatisfaction function needs at least one value")
        if any(not isinstance(v, int) or isinstance(v, bool) for v in self.values):
            raise InvalidInputError("dissatisfaction values must be ints")
        if self.values[0] != 0:
            raise InvalidInputError("dissatisfaction at position 1 must be 0")
        if any(b < a for a, b in zip(self.values, self.values[1:])):
            raise InvalidInputError("dissatisfaction values must be nondecreasing")

    @classmethod
    def borda(cls, m: int) -> "Dissatisfaction":
        """Position i costs i - 1."""
        return cls(tuple(range(m)), label="borda")

    @classmethod
    def t_approval(cls, t: int, m: int) -> "Dissatisfaction":
        """Positions 1..t cost 0, every later position costs 1."""
        if not 1 <= t <= m:
            raise InvalidInputError(f"approval threshold {t} outside 1..{m}")
        return cls(tuple(0 if i < t else 1 for i in range(m)), label=f"tapprox:{t}")

    @classmethod
    def custom(cls, values: Sequence[int]) -> "Dissatisfaction":
        return cls(tuple(int(v) for v in values), label="custom")

    def __call__(self, position: int) -> int:
        if not 1 <= position <= len(self.values):
            raise InvalidInputError(f"position {position} outside 1..{len(self.values)}")
        return self.values[position - 1]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.int64)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class Election:
    """An ordered list of voters, each with a strict ranking of candidates.

    ``rankings[i][p]`` is the candidate voter ``i`` places at position
    ``p + 1``.  ``names`` are display labels used by I/O only; solvers
    work on candidate indices.
    """

    rankings: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.rankings:
            raise InvalidInputError("election needs at least one voter")
        m = len(self.rankings[0])
        if m == 0:
            raise InvalidInputError("election needs at least one candidate")
        ref = frozenset(range(m))
        for i, r in enumerate(self.rankings):
            if len(r) != m or frozenset(r) != ref:
                raise InvalidInputError(f"vote {i} is not a permutation of 0..{m - 1}")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"c{j + 1}" for j in range(m)))
        elif len(self.names) != m or len(set(self.names)) != m:
            raise InvalidInputError("candidate names must be distinct and match m")

    @classmethod
    def from_votes(cls, votes: Iterable[Sequence[int]],
                   names: Sequence[str] | None = None) -> "Election":
        return cls(tuple(tuple(v) for v in votes),
                   tuple(names) if names is not None else ())

    @property
    def m(self) -> int:
        return len(self.rankings[0])

    @property
    def n(self) -> int:
        return len(self.rankings)

    @cached_property
    def rank_matrix(self) -> np.ndarray:
        """(n, m) array; row i is voter i's ranking, best first."""
        arr = np.asarray(self.rankings, dtype=np.int32)
        arr.setflags(write=False)
        return arr

    @cached_property
    def pos_matrix(self) -> np.ndarray:
        """(n, m) array of 1-based positions; pos_matrix[i, c] ranks c for voter i."""
        rm = self.rank_matrix
        pos = np.empty_like(rm)
        rows = np.arange(self.n)[:, None]
        pos[rows, rm] = np.arange(1, self.m + 1, dtype=np.int32)[None, :]
        pos.setflags(write=False)
        return pos

    def position(self, voter: int, candidate: int) -> int:
        """1-based position of candidate in voter's ranking."""
        return int(self.pos_matrix[voter, candidate])

    def reorder_voters(self, perm: Sequence[int]) -> "Election":
        """New election whose voter i is this election's voter perm[i]."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidInputError("voter permutation must cover 0..n-1")
        return Election(tuple(self.rankings[i] for i in perm), self.names)

    def relabel_candidates(self, newid: Sequence[int]) -> "Election":
        """New election where old candidate c becomes newid[c]; names follow."""
        if sorted(newid) != list(range(self.m)):
            raise InvalidInputError("candidate relabeling must cover 0..m-1")
        names = [""] * self.m
        for old, new in enumerate(newid):
            names[new] = self.names[old]
        return Election(
            tuple(tuple(newid[c] for c in r) for r in self.rankings), tuple(names)
        )


@dataclass(frozen=True)
class Assignment:
    """A voter-to-representative map; rep_of[i] represents voter i."""

    rep_of: tuple[int, ...]

    @cached_property
    def committee(self) -> frozenset[int]:
        return frozenset(self.rep_of)

    @property
    def n(self) -> int:
        return len(self.rep_of)

    def load(self, candidate: int) -> int:
        return sum(1 for c in self.rep_of if c == candidate)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Block:
    """A contiguous run of voters sharing one representative (inclusive ends)."""

    candidate: int
    first_voter: int
    last_voter: int


@dataclass(frozen=True)
class ContiguityReport:
    ok: bool
    blocks: tuple[Block, ...] = ()
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class SolveResult:
    """What every solver and oracle returns."""

    election: Election
    assignment: Assignment
    objective: int
    rule: Rule
    aggregator: Aggregator
    alpha_label: str
    diagnostics: dict = field(default_factory=dict, compare=False)

    @property
    def committee(self) -> frozenset[int]:
        return self.assignment.committee

    def committee_names(self) -> tuple[str, ...]:
        return tuple(self.election.names[c] for c in sorted(self.committee))


def score(election: Election, assignment: Assignment,
          alpha: Dissatisfaction, aggregator: Aggregator) -> int:
    """Aggregate dissatisfaction of an assignment, as an exact int."""
    if assignment.n != election.n:
        raise InvalidInputError("assignment length differs from voter count")
    if len(alpha) != election.m:
        raise InvalidInputError("dissatisfaction function does not cover all positions")
    reps = np.asarray(assignment.rep_of, dtype=np.int64)
    if reps.size and (reps.min() < 0 or reps.max() >= election.m):
        raise InvalidInputError("assignment uses unknown candidates")
    pos = election.pos_matrix[np.arange(election.n), reps]
    return aggregator.reduce_array(alpha.as_array()[pos - 1])


def validate_assignment(election: Election, assignment: Assignment,
                        rule: Rule, k: int) -> ValidationReport:
    """Check CC or Monroe structural constraints; does not score."""
    problems: list[str] = []
    if assignment.n != election.n:
        return ValidationReport(False, ("assignment length differs from voter count",))
    bad = [c for c in assignment.committee if not 0 <= c < election.m]
    if bad:
        problems.append(f"unknown candidates used: {sorted(bad)}")
    size = len(assignment.committee)
    if rule is Rule.CC:
        if size > k:
            problems.append(f"CC committee has {size} members, above k={k}")
    else:
        if size != k:
            problems.append(f"Monroe committee has {size} members, expected exactly {k}")
        lo, hi = election.n // k, -(-election.n // k)
        for c in sorted(assignment.committee):
            ld = assignment.load(c)
            if not lo <= ld <= hi:
                problems.append(
                    f"candidate {c} represents {ld} voters, outside [{lo}, {hi}]"
                )
    return ValidationReport(not problems, tuple(problems))


def contiguity_report(election: Election, assignment: Assignment) -> ContiguityReport:
    """Contiguity check for block-structured assignments.

    Passes iff every used candidate's voters form one contiguous interval
    of the voter order, and intervals appear in the order voter 0 ranks
    their candidates.  Voter indices in blocks are 0-based.
    """
    if assignment.n != election.n:
        return ContiguityReport(False, (), ("assignment length differs from voter count",))
    problems: list[str] = []
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for i, c in enumerate(assignment.rep_of):
        first.setdefault(c, i)
        last[c] = i
    for c in sorted(first):
        span = last[c] - first[c] + 1
        if assignment.load(c) != span:
            problems.append(
                f"candidate {c} voters are not contiguous "
                f"(span {first[c]}..{last[c]} holds other representatives)"
            )
    blocks = tuple(
        Block(c, first[c], last[c]) for c in sorted(first, key=lambda c: first[c])
    )
    if not problems:
        # Blocks must appear in the order voter 0 ranks their candidates.
        pos0 = election.pos_matrix[0]
        for a, b in zip(blocks, blocks[1:]):
            if pos0[a.candidate] > pos0[b.candidate]:
                problems.append(
                    f"block of candidate {a.candidate} precedes block of "
                    f"{b.candidate} against voter 0's order"
                )
    return ContiguityReport(not problems, blocks, tuple(problems))
