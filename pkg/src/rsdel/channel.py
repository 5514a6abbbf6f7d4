"""Deletion channel: which positions survive, and in what order.

A DeletionPattern records the kept positions (1-based, strictly increasing);
applying it to a word keeps exactly those symbols in order.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .errors import ParameterError


@dataclass(frozen=True)
class DeletionPattern:
    kept: tuple[int, ...]

    def __post_init__(self):
        kept = tuple(int(i) for i in self.kept)
        object.__setattr__(self, "kept", kept)
        if any(i < 1 for i in kept):
            raise ParameterError(f"positions are 1-based, got {kept}")
        if any(a >= b for a, b in zip(kept, kept[1:])):
            raise ParameterError(f"kept positions must be strictly increasing, got {kept}")

    @property
    def survivors(self) -> int:
        return len(self.kept)

    def __iter__(self):
        return iter(self.kept)


def apply_deletions(word, pattern: DeletionPattern):
    """Symbols of `word` at the kept positions, as a tuple.

    `word` is a Codeword or any sequence of symbols.
    """
    n = len(word)
    if pattern.kept and pattern.kept[-1] > n:
        raise ParameterError(
            f"kept position {pattern.kept[-1]} exceeds word length {n}")
    return tuple(word[i - 1] for i in pattern.kept)


def random_pattern(n: int, survivors: int, seed: int) -> DeletionPattern:
    """Uniformly random size-`survivors` kept set; deterministic per seed."""
    if not 0 <= survivors <= n:
        raise ParameterError(f"survivors must lie in 0..{n}, got {survivors}")
    rng = random.Random(seed)
    return DeletionPattern(tuple(sorted(rng.sample(range(1, n + 1), survivors))))


def enumerate_triples(n: int) -> Iterator[DeletionPattern]:
    """All C(n, 3) kept triples in lexicographic order."""
    if n < 3:
        raise ParameterError(f"need n >= 3 to keep a triple, got {n}")
    for kept in itertools.combinations(range(1, n + 1), 3):
        yield DeletionPattern(kept)


def triple_count(n: int) -> int:
    return comb(n, 3)
