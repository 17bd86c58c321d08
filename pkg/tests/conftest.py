from functools import lru_cache

import pytest

from nilideal.ideals import ideal_masks
from nilideal.rootsystem import RootSystem


@lru_cache(maxsize=None)
def cached_system(letter: str, rank: int) -> RootSystem:
    return RootSystem(letter, rank)


@lru_cache(maxsize=None)
def cached_masks(letter: str, rank: int) -> tuple[int, ...]:
    return tuple(ideal_masks(cached_system(letter, rank)))


@pytest.fixture
def system():
    return cached_system


def all_systems(max_rank: int):
    """Every valid (letter, rank) with rank <= max_rank, in a fixed order."""
    out = []
    for n in range(1, max_rank + 1):
        out.append(("A", n))
    for letter in ("B", "C"):
        for n in range(2, max_rank + 1):
            out.append((letter, n))
    for n in range(3, max_rank + 1):
        out.append(("D", n))
    for n in (6, 7, 8):
        if n <= max_rank:
            out.append(("E", n))
    if max_rank >= 4:
        out.append(("F", 4))
    if max_rank >= 2:
        out.append(("G", 2))
    return out
