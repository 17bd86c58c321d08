"""Ideals of the Borel subalgebra as upward-closed sets of positive roots.

An ideal of the Borel contained in the nilradical is a direct sum of root
spaces, so it is determined by its set of positive roots, and that set is
upward closed in the root poset.  Everything here therefore works on sets
of root indices, stored as int bitmasks over the (deterministic) root
order of a RootSystem.

The Lie bracket also reduces to root arithmetic: [g_a, g_b] equals
g_{a+b} whenever a + b is a root and vanishes otherwise, and each pair of
root spaces contributes independently to the span.  Hence the bracket of
two root-space sums is exactly the root-space sum over the pairwise root
sums, with no structure constants needed.  That one fact is what lets the
nilpotency computations below stay purely combinatorial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .rootsystem import RootSystem


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Ideal:
    """An upward-closed set of positive roots, a value object keyed by its members."""

    __slots__ = ("rs", "mask")

    def __init__(self, rs: RootSystem, members: Iterable[int]):
        mask = 0
        for i in members:
            if not 0 <= i < len(rs.roots):
                raise ValueError(f"root index {i} out of range for {rs.letter}{rs.rank}")
            mask |= 1 << i
        for i in _bits(mask):
            if rs.up_cover_masks[i] & ~mask:
                missing = next(_bits(rs.up_cover_masks[i] & ~mask))
                raise ValueError(
                    f"not upward closed: contains {rs.root_str(i)} "
                    f"but not {rs.root_str(missing)}"
                )
        self.rs = rs
        self.mask = mask

    @classmethod
    def _trusted(cls, rs: RootSystem, mask: int) -> "Ideal":
        obj = object.__new__(cls)
        obj.rs = rs
        obj.mask = mask
        return obj

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(_bits(self.mask))

    @property
    def roots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.rs.roots[i] for i in _bits(self.mask))

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, i: int):
        return bool(self.mask >> i & 1)

    def __eq__(self, other):
        return (isinstance(other, Ideal)
                and (self.rs.letter, self.rs.rank, self.mask)
                == (other.rs.letter, other.rs.rank, other.mask))

    def __hash__(self):
        return hash((self.rs.letter, self.rs.rank, self.mask))

    def __repr__(self):
        names = ", ".join(self.rs.root_str(i) for i in _bits(self.mask))
        return f"Ideal({self.rs.letter}{self.rs.rank}: {{{names}}})"

    def simple_count(self) -> int:
        """Number of simple roots among the members."""
        return (self.mask & self.rs.simple_mask()).bit_count()

    def is_abelian(self) -> bool:
        return _is_abelian_mask(self.rs, self.mask)

    def antichain(self) -> "Antichain":
        return antichain_of(self)

    def nilpotency_index(self) -> int:
        return _nilpotency_mask(self.rs, self.mask)

    def antichain_nilpotency_index(self) -> int:
        return antichain_nilpotency_index(self)


@dataclass(frozen=True)
class Antichain:
    """A set of pairwise incomparable positive roots."""

    rs: RootSystem
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(set(self.indices)))
        object.__setattr__(self, "indices", idx)
        for a in idx:
            if not 0 <= a < len(self.rs.roots):
                raise ValueError(f"root index {a} out of range")
        for a in idx:
            for b in idx:
                if a != b and self.rs.leq(a, b):
                    raise ValueError(
                        f"not an antichain: {self.rs.root_str(a)} <= {self.rs.root_str(b)}"
                    )

    @property
    def roots(self):
        return tuple(self.rs.roots[i] for i in self.indices)

    def __len__(self):
        return len(self.indices)


# -- enumeration -------------------------------------------------------------

def ideal_masks(rs: RootSystem) -> list[int]:
    """Bitmasks of every upward-closed subset of the positive roots, each once.

    Roots are decided in decreasing height order, so when a root is
    considered all roots above it are already fixed; it may join only if
    its covers are all present.
    """
    uc = rs.up_cover_masks
    out: list[int] = []
    append = out.append

    def go(k: int, mask: int):
        if k < 0:
            append(mask)
            return
        go(k - 1, mask)
        if not uc[k] & ~mask:
            go(k - 1, mask | (1 << k))

    go(len(rs.roots) - 1, 0)
    return out


def enumerate_ideals(rs: RootSystem) -> Iterator[Ideal]:
    """All ideals of the Borel of rs, in a fixed order."""
    for mask in ideal_masks(rs):
        yield Ideal._trusted(rs, mask)


# -- antichain correspondence --------------------------------------------------

def antichain_of(ideal: Ideal) -> Antichain:
    """The minimal roots of an ideal.

    A member is minimal iff none of its lower covers belongs to the
    ideal: any smaller member would put a whole saturated chain, and in
    particular a lower cover, inside the upward-closed set.
    """
    rs, mask = ideal.rs, ideal.mask
    mins = [i for i in _bits(mask) if not rs.down_cover_masks[i] & mask]
    return Antichain(rs, tuple(mins))


def ideal_from_antichain(rs: RootSystem, antichain: Antichain | Iterable[int]) -> Ideal:
    """The ideal generated by an antichain: the union of the upper sets."""
    if not isinstance(antichain, Antichain):
        antichain = Antichain(rs, tuple(antichain))
    mask = 0
    for i in antichain.indices:
        mask |= rs.upset_masks[i]
    return Ideal._trusted(rs, mask)


def principal_ideal(rs: RootSystem, j: int) -> Ideal:
    """All roots above the j-th simple root (j is 1-based)."""
    if not 1 <= j <= rs.rank:
        raise ValueError(f"need 1 <= j <= {rs.rank}, got {j}")
    return Ideal._trusted(rs, rs.upset_masks[rs.simple_indices[j - 1]])


# -- statistics ----------------------------------------------------------------

@dataclass(frozen=True)
class StatsTable:
    """Exact counts indexed by the number of simple roots contained."""

    letter: str
    rank: int
    counts: tuple[int, ...]
    method: str

    def __getitem__(self, j: int) -> int:
        return self.counts[j]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def as_rows(self):
        return [
            {"type": self.letter, "rank": self.rank, "j": j, "count": c, "method": self.method}
            for j, c in enumerate(self.counts)
        ]


def _tally(rs: RootSystem, masks: Iterable[int], method: str) -> StatsTable:
    counts = [0] * (rs.rank + 1)
    sm = rs.simple_mask()
    for m in masks:
        counts[(m & sm).bit_count()] += 1
    return StatsTable(rs.letter, rs.rank, tuple(counts), method)


def stats_table(rs: RootSystem, masks: Sequence[int] | None = None) -> StatsTable:
    """Count all ideals by number of simple roots contained (by enumeration)."""
    return _tally(rs, ideal_masks(rs) if masks is None else masks, "ideals")


def abelian_table(rs: RootSystem, masks: Sequence[int] | None = None) -> StatsTable:
    """Count abelian ideals by number of simple roots contained (by enumeration)."""
    if masks is None:
        masks = ideal_masks(rs)
    return _tally(rs, (m for m in masks if _is_abelian_mask(rs, m)), "ideals")


# -- bracket and nilpotency ----------------------------------------------------

def _is_abelian_mask(rs: RootSystem, mask: int) -> bool:
    for a in _bits(mask):
        if rs.partner_masks[a] & mask:
            return False
    return True


def _bracket_mask(rs: RootSystem, x: int, y: int) -> int:
    out = 0
    sums = rs.sum_index
    for a in _bits(x):
        row = sums[a]
        for b in _bits(rs.partner_masks[a] & y):
            out |= 1 << row[b]
    return out


def bracket(i: Ideal, j: Ideal) -> Ideal:
    """Root-set bracket: all roots expressible as (member of i) + (member of j)."""
    if i.rs is not j.rs and (i.rs.letter, i.rs.rank) != (j.rs.letter, j.rs.rank):
        raise ValueError("ideals belong to different root systems")
    return Ideal._trusted(i.rs, _bracket_mask(i.rs, i.mask, j.mask))


def _nilpotency_mask(rs: RootSystem, mask: int) -> int:
    """Number of nonzero terms of the descending central series."""
    n = 0
    cur = mask
    while cur:
        n += 1
        cur = _bracket_mask(rs, cur, mask)
    return n


def nilpotency_index(ideal: Ideal) -> int:
    """Length of i >= [i,i] >= [[i,i],i] >= ... before it reaches zero."""
    return _nilpotency_mask(ideal.rs, ideal.mask)


def is_abelian(ideal: Ideal) -> bool:
    """True iff no two members (repetition allowed) sum to a root."""
    return _is_abelian_mask(ideal.rs, ideal.mask)


def simple_count(ideal: Ideal) -> int:
    return ideal.simple_count()


def antichain_nilpotency_index(ideal: Ideal) -> int:
    """Nilpotency index read off the antichain of minimal roots.

    Returns the largest k such that some k-element multiset of minimal
    roots has sum below the highest root, i.e. sums coefficientwise to at
    most the marks.  Level-by-level search terminates because every added
    root raises the height by at least one and heights below the highest
    root are bounded by h - 1.
    """
    rs = ideal.rs
    gens = [rs.roots[i] for i in antichain_of(ideal).indices]
    if not gens:
        return 0
    marks = rs.marks
    level = {(0,) * rs.rank}
    k = 0
    while True:
        nxt = set()
        for v in level:
            for g in gens:
                w = tuple(x + y for x, y in zip(v, g))
                if all(x <= m for x, m in zip(w, marks)):
                    nxt.add(w)
        if not nxt:
            return k
        level = nxt
        k += 1
