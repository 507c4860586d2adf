"""Small shared utilities for the test suite."""

from fpr.core import Election


def make_election(*orders: str) -> Election:
    """Votes as letter strings: make_election("abc", "bac").  Candidate
    ids follow sorted letters, names are the letters themselves."""
    letters = sorted(orders[0])
    idx = {ch: i for i, ch in enumerate(letters)}
    votes = [tuple(idx[ch] for ch in order) for order in orders]
    return Election.from_votes(votes, tuple(letters))


# No voter order makes this single-crossing, and no axis makes it
# single-peaked; handy as the canonical off-domain profile.
CYCLE = ("abc", "bca", "cab")
