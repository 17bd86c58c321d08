"""Nonnegative U/D lattice paths with end-height and return statistics.

A path is a word over {U, D} whose prefix heights never go below zero.
A return is a time t >= 1 at which the height is zero again, i.e. a
contact with the x-axis not counting the start.  ``count_paths`` counts
by brute-force enumeration; ``count_paths_closed`` is the ballot-style
closed form, and the two are kept as independent routes to the same
numbers.

Also here: the explicit bijection between staircase partitions (ideals
in type A) and Dyck paths, under which the number of returns exceeds the
number of simple roots of the ideal by one.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .formulas import binom


@dataclass(frozen=True)
class LatticePath:
    """A U/D step word that never dips below the x-axis."""

    steps: str

    def __post_init__(self):
        h = 0
        for t, s in enumerate(self.steps):
            if s == "U":
                h += 1
            elif s == "D":
                h -= 1
            else:
                raise ValueError(f"bad step {s!r} at position {t}: expected 'U' or 'D'")
            if h < 0:
                raise ValueError(f"path goes below the x-axis at step {t}")

    def __len__(self):
        return len(self.steps)

    @property
    def heights(self) -> tuple[int, ...]:
        out = [0]
        for s in self.steps:
            out.append(out[-1] + (1 if s == "U" else -1))
        return tuple(out)

    @property
    def end_height(self) -> int:
        return self.steps.count("U") - self.steps.count("D")

    @property
    def returns(self) -> int:
        return sum(1 for h in self.heights[1:] if h == 0)

    def is_dyck(self) -> bool:
        return self.end_height == 0


def enumerate_paths(length: int) -> Iterator[LatticePath]:
    """All nonnegative paths of the given length, in lexicographic order (D < U)."""
    if length < 0:
        raise ValueError("length must be nonnegative")

    def go(prefix: list[str], h: int):
        if len(prefix) == length:
            yield LatticePath("".join(prefix))
            return
        if h > 0:
            prefix.append("D")
            yield from go(prefix, h - 1)
            prefix.pop()
        prefix.append("U")
        yield from go(prefix, h + 1)
        prefix.pop()

    yield from go([], 0)


def path_census(length: int) -> Counter:
    """Counter over (end_height, returns) for all nonnegative paths of a length."""
    census: Counter = Counter()
    for p in enumerate_paths(length):
        census[(p.end_height, p.returns)] += 1
    return census


def count_paths(n: int, h: int, j: int) -> int:
    """Brute force: nonnegative paths of length n ending at height h with j returns."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    return sum(1 for p in enumerate_paths(n) if p.end_height == h and p.returns == j)


def count_paths_closed(n: int, h: int, j: int) -> int:
    """Closed form for count_paths: C(n-j-1, (n+h)/2 - 1) - C(n-j-1, (n+h)/2).

    Zero when n + h is odd.  The length-zero case is the empty path,
    which the ballot formula does not cover; its value is forced by the
    definition (one path, height 0, no returns).
    """
    if h < 0 or j < 0:
        return 0
    if (n + h) % 2:
        return 0
    if n == 0:
        return 1 if (h == 0 and j == 0) else 0
    half = (n + h) // 2
    return binom(n - (j + 1), half - 1) - binom(n - (j + 1), half)


# -- staircase partitions <-> Dyck paths -------------------------------------


def _check_staircase(n: int, lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(lam)
    if len(lam) > n:
        raise ValueError(f"at most {n} parts allowed, got {len(lam)}")
    lam = lam + (0,) * (n - len(lam))
    for i, x in enumerate(lam):
        if x < 0 or x > n - i:
            raise ValueError(f"part {x} at row {i + 1} violates the staircase bound {n - i}")
        if i and lam[i - 1] < x:
            raise ValueError("parts must be weakly decreasing")
    return lam


def dyck_from_partition(n: int, lam: Sequence[int]) -> LatticePath:
    """Encode a partition inside the staircase (n, n-1, ..., 1) as a Dyck path.

    The path is U D^{a_1} U D^{a_2} ... U D^{a_{n+1}} where a_k counts the
    rows of size exactly n+1-k for k <= n, and a_{n+1} counts the empty
    rows plus a final sentinel down-step.  Its length is 2n + 2 and its
    returns exceed the number of full rows (lambda_i = n+1-i) by one.
    """
    lam = _check_staircase(n, lam)
    blocks = [0] * (n + 1)
    for x in lam:
        blocks[n - x] += 1  # row of size x contributes to a_{n+1-x}
    blocks[n] += 1
    return LatticePath("".join("U" + "D" * a for a in blocks))


def partition_from_dyck(n: int, path: LatticePath) -> tuple[int, ...]:
    """Inverse of dyck_from_partition; rejects inputs that are not Dyck paths."""
    if len(path.steps) != 2 * n + 2:
        raise ValueError(f"expected a path of length {2 * n + 2}, got {len(path.steps)}")
    if not path.is_dyck():
        raise ValueError("path does not end on the x-axis")
    blocks = []
    for s in path.steps:
        if s == "U":
            blocks.append(0)
        else:
            blocks[-1] += 1
    assert len(blocks) == n + 1
    if blocks[-1] < 1:
        raise ValueError("path must end with a down-step")
    sizes = []
    for k, a in enumerate(blocks[:-1], start=1):
        sizes.extend([n + 1 - k] * a)
    sizes.extend([0] * (blocks[-1] - 1))
    return _check_staircase(n, tuple(sizes))
