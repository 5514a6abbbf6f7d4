import itertools
import math
import random

import pytest

from rsdel.channel import (
    DeletionPattern,
    apply_deletions,
    enumerate_triples,
    random_pattern,
    triple_count,
)
from rsdel.errors import ParameterError


def is_subsequence(short, long):
    """Greedy left-to-right matcher, independent of the DP elsewhere."""
    it = iter(long)
    return all(s in it for s in short)


def test_apply_deletions_basic():
    word = ["a", "b", "c", "d", "e"]
    assert apply_deletions(word, DeletionPattern((1, 3, 5))) == ("a", "c", "e")
    assert apply_deletions(word, DeletionPattern((2,))) == ("b",)
    assert apply_deletions(word, DeletionPattern(())) == ()


def test_pattern_validation():
    with pytest.raises(ParameterError):
        DeletionPattern((3, 1, 5))  # must be increasing
    with pytest.raises(ParameterError):
        DeletionPattern((1, 1, 2))
    with pytest.raises(ParameterError):
        DeletionPattern((0, 1, 2))  # positions are 1-based
    with pytest.raises(ParameterError):
        apply_deletions(["a", "b"], DeletionPattern((1, 3)))


def test_pattern_survivors():
    pat = DeletionPattern((2, 5, 9))
    assert pat.survivors == 3
    assert list(pat) == [2, 5, 9]


def test_random_pattern_deterministic():
    a = random_pattern(10, 3, seed=42)
    b = random_pattern(10, 3, seed=42)
    assert a == b
    assert a.survivors == 3
    assert random_pattern(10, 3, seed=43) != a or True  # different seed may differ
    # frozen draw so a silent RNG change gets noticed
    assert random_pattern(10, 3, seed=0).kept == (1, 7, 10)


def test_random_pattern_bounds():
    assert random_pattern(5, 0, seed=1).kept == ()
    assert random_pattern(5, 5, seed=1).kept == (1, 2, 3, 4, 5)
    with pytest.raises(ParameterError):
        random_pattern(5, 6, seed=1)
    with pytest.raises(ParameterError):
        random_pattern(5, -1, seed=1)


def test_random_pattern_output_is_subsequence():
    rng = random.Random(7)
    word = list(range(100, 120))
    for trial in range(200):
        k = rng.randrange(0, len(word) + 1)
        pat = random_pattern(len(word), k, seed=trial)
        out = apply_deletions(word, pat)
        assert len(out) == k
        assert is_subsequence(out, word)


def test_enumerate_triples():
    pats = list(enumerate_triples(10))
    assert len(pats) == 120 == triple_count(10)
    assert pats[0].kept == (1, 2, 3)
    assert pats[-1].kept == (8, 9, 10)
    assert len(set(pats)) == 120
    # agrees with itertools directly
    want = [tuple(c) for c in itertools.combinations(range(1, 11), 3)]
    assert [p.kept for p in pats] == want


def test_triple_count_matches_comb():
    for n in range(3, 40):
        assert triple_count(n) == math.comb(n, 3)
    with pytest.raises(ParameterError):
        list(enumerate_triples(2))
