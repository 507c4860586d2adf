"""Election generators: fixed worked families and seeded random ones.

All generators are deterministic.  Random ones draw every value from a
SplitMix64 stream seeded by the caller, so outputs are reproducible
bit-for-bit on any platform.
"""

from __future__ import annotations

from .core import Election, InvalidInputError

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator (Steele, Lea, Flood 2014): 64-bit state,
    golden-gamma increment.  Used instead of random.Random so generated
    instances do not depend on interpreter version."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        # Modulo bias is irrelevant at the bounds used here (< 2**20).
        if bound <= 0:
            raise InvalidInputError("bound must be positive")
        return self.next_u64() % bound

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def gen_example_sc_gap(m: int, n: int) -> Election:
    """Single-crossing family over 2m+2 candidates and 4n voters where
    contiguous-block Monroe assignments are far worse than unrestricted
    ones (gap grows with m).

    Candidates: two pivotal ones c1, c2 plus padding groups a1..am and
    b1..bm.  Four voter groups of n identical votes each; c1 and c2
    between them cover everyone at the top two positions, but no
    contiguous two-block split can use both cheaply.
    """
    if m < 1 or n < 1:
        raise InvalidInputError("need m >= 1 and n >= 1")
    c1, c2 = 0, 1
    A = list(range(2, m + 2))
    B = list(range(m + 2, 2 * m + 2))
    names = ["c1", "c2"] + [f"a{i}" for i in range(1, m + 1)] \
        + [f"b{i}" for i in range(1, m + 1)]
    groups = [
        [c1, *B, c2, *A],
        [c1, c2, *reversed(B), *A],
        [c1, c2, *A, *reversed(B)],
        [c1, *reversed(A), c2, *reversed(B)],
    ]
    votes = [tuple(g) for g in groups for _ in range(n)]
    return Election.from_votes(votes, names)


def gen_example_narcissistic_util() -> Election:
    """Fixed 12-voter, 6-candidate single-crossing narcissistic profile
    whose utilitarian Monroe optimum is not achievable with contiguous
    voter blocks."""
    a, b, c, d, e, f = range(6)
    votes = [
        (a, b, c, d, e, f),
        (b, a, c, d, e, f),
        (b, c, a, d, e, f),
        (c, b, a, d, e, f),
        (c, b, a, d, e, f),
        (c, b, a, d, e, f),
        (c, b, d, a, e, f),
        (c, d, b, a, e, f),
        (d, e, f, c, b, a),
        (e, f, d, c, b, a),
        (e, f, d, c, b, a),
        (f, e, d, c, b, a),
    ]
    return Election.from_votes(votes, ("a", "b", "c", "d", "e", "f"))


def gen_example_sp(m: int) -> Election:
    """Four-voter single-peaked family over 2m+4 candidates with the same
    contiguous-vs-unrestricted gap as gen_example_sc_gap, showing the gap
    is not an artifact of the single-crossing domain."""
    if m < 1:
        raise InvalidInputError("need m >= 1")
    a, b, c, d = 0, 1, 2, 3
    X = list(range(4, m + 4))
    Y = list(range(m + 4, 2 * m + 4))
    names = ["a", "b", "c", "d"] + [f"x{i}" for i in range(1, m + 1)] \
        + [f"y{i}" for i in range(1, m + 1)]
    votes = [
        (a, *X, b, c, d, *Y),
        (b, c, d, *Y, a, *X),
        (c, b, a, *X, d, *Y),
        (d, *Y, c, b, a, *X),
    ]
    return Election.from_votes(votes, names)


def example_sp_axis(m: int) -> tuple[int, ...]:
    """The societal axis gen_example_sp(m) is single-peaked on:
    x_m .. x_1, a, b, c, d, y_1 .. y_m."""
    X = list(range(4, m + 4))
    Y = list(range(m + 4, 2 * m + 4))
    return tuple(reversed(X)) + (0, 1, 2, 3) + tuple(Y)


def gen_random_single_crossing(m: int, n: int, seed: int) -> Election:
    """Seeded random single-crossing election.

    Voter 1 gets a random order.  Each later voter applies a random
    number of adjacent transpositions, each inverting a pair no earlier
    transposition inverted, so every pair flips at most once along the
    voter sequence.  Repeated votes are allowed.
    """
    if m < 1 or n < 1:
        raise InvalidInputError("need m >= 1 and n >= 1")
    rng = SplitMix64(seed)
    order = list(range(m))
    rng.shuffle(order)
    votes = [tuple(order)]
    inverted: set[tuple[int, int]] = set()
    for _ in range(n - 1):
        if m >= 2:
            for _ in range(rng.below(2 * m + 1)):
                p = rng.below(m - 1)
                a, b = order[p], order[p + 1]
                key = (a, b) if a < b else (b, a)
                if key not in inverted:
                    inverted.add(key)
                    order[p], order[p + 1] = b, a
        votes.append(tuple(order))
    return Election.from_votes(votes)


def gen_random_sc_narcissistic(m: int, n: int, seed: int) -> Election:
    """Seeded random single-crossing narcissistic election, n >= m.

    Draws all votes from the rotation chain of a random candidate order:
    vote block i ranks base[i] first, then base[i+1..], then base[..i-1]
    reversed.  Every block appears at least once (narcissism); the n - m
    leftover votes are spread over blocks by the seed.
    """
    if m < 1:
        raise InvalidInputError("need m >= 1")
    if n < m:
        raise InvalidInputError("narcissistic generation needs n >= m")
    rng = SplitMix64(seed)
    base = list(range(m))
    rng.shuffle(base)
    counts = [1] * m
    for _ in range(n - m):
        counts[rng.below(m)] += 1
    votes = []
    for b in range(m):
        rot = tuple(base[b:]) + tuple(reversed(base[:b]))
        votes.extend([rot] * counts[b])
    return Election.from_votes(votes)
