"""Labelled staircase diagrams whose subdiagrams encode ideals (types A-D).

Type A_n uses the staircase of row lengths (n, n-1, ..., 1); B_n and C_n
use the shifted staircase (2n-1, 2n-3, ..., 1) and D_n the shifted
staircase (2n-2, 2n-4, ..., 2), each box carrying one positive root.
Selecting a prefix of every row, closed under the column shift, yields
exactly the upward-closed root sets: a bijection in types A, B, C.  In
type D every subdiagram is read twice, plainly and with the two middle
columns n-1 and n exchanged; the two readings give the same ideal exactly
when the selected middle columns have equal length, so the ideal count is
twice the subdiagram count minus the equal-column count.

The labelling is validated at build time: every root must appear exactly
once, rows and columns must decrease in the root order (except the two
mutually incomparable middle boxes of each type D row), and the simple
roots must sit at the documented boxes.  A violation raises RuntimeError
rather than being patched over, since the whole correspondence rests on
the labelling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .ideals import Ideal, StatsTable
from .rootsystem import RootSystem


def _segment(n: int, lo: int, hi: int, weight: int = 1) -> tuple[int, ...]:
    """Coefficient vector weight*(alpha_lo + ... + alpha_hi); empty if lo > hi."""
    return tuple(weight if lo <= k <= hi else 0 for k in range(1, n + 1))


def _add(*vs: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(col) for col in zip(*vs))


def _label(letter: str, n: int, i: int, j: int) -> tuple[int, ...]:
    """Root in box (row i, absolute column j), both 1-based."""
    if letter == "A":
        return _segment(n, i, n + 1 - j)
    if letter == "B":
        if j <= n - 1:
            return _add(_segment(n, i, j), _segment(n, j + 1, n, 2))
        return _segment(n, i, 2 * n - j)
    if letter == "C":
        if j <= n - 1:
            return _add(_segment(n, i, j - 1), _segment(n, j, n - 1, 2), _segment(n, n, n))
        return _segment(n, i, 2 * n - j)
    if letter == "D":
        if j <= n - 2:
            return _add(_segment(n, i, j), _segment(n, j + 1, n - 2, 2),
                        _segment(n, n - 1, n))
        if j == n - 1:
            return _add(_segment(n, i, n - 2), _segment(n, n, n))
        return _segment(n, i, 2 * n - 1 - j)
    raise ValueError(f"no staircase diagram for type {letter}")


class Diagram:
    """The labelled (shifted) staircase diagram of a classical root system."""

    def __init__(self, rs: RootSystem):
        if rs.letter not in "ABCD":
            raise ValueError(f"no staircase diagram for type {rs.letter}")
        self.rs = rs
        n = rs.rank
        if rs.letter == "A":
            self.rows = tuple((1, n + 1 - i) for i in range(1, n + 1))
        elif rs.letter in "BC":
            self.rows = tuple((i, 2 * (n - i) + 1) for i in range(1, n + 1))
        else:
            self.rows = tuple((i, 2 * (n - i)) for i in range(1, n))
        labels = {}
        for i, (start, length) in enumerate(self.rows, start=1):
            for j in range(start, start + length):
                v = _label(rs.letter, n, i, j)
                idx = rs.index.get(v)
                if idx is None:
                    raise RuntimeError(
                        f"labeling bug in {rs.letter}{n}: box ({i},{j}) holds {v}, not a root"
                    )
                labels[(i, j)] = idx
        self.labels = labels
        self._validate()

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def row_columns(self, i: int) -> range:
        start, length = self.rows[i - 1]
        return range(start, start + length)

    def label(self, i: int, j: int) -> int:
        return self.labels[(i, j)]

    def _validate(self):
        rs, n = self.rs, self.rs.rank
        seen = sorted(self.labels.values())
        if seen != list(range(len(rs.roots))):
            raise RuntimeError(f"labeling bug in {rs.letter}{n}: not a bijection onto the roots")
        gt = lambda a, b: a != b and rs.leq(b, a)
        incomparable = lambda a, b: not rs.leq(a, b) and not rs.leq(b, a)
        for i in range(1, self.n_rows + 1):
            cols = self.row_columns(i)
            for j in cols:
                here = self.labels[(i, j)]
                if j + 1 in cols:
                    right = self.labels[(i, j + 1)]
                    middle = rs.letter == "D" and j == n - 1
                    ok = incomparable(here, right) if middle else gt(here, right)
                    if not ok:
                        raise RuntimeError(
                            f"labeling bug in {rs.letter}{n}: row {i} not ordered at column {j}"
                        )
                if i > 1 and not gt(self.labels[(i - 1, j)], here):
                    raise RuntimeError(
                        f"labeling bug in {rs.letter}{n}: column {j} not ordered at row {i}"
                    )
        # simple roots sit at the right end of each row (type D: last row holds
        # alpha_n then alpha_{n-1})
        for i in range(1, self.n_rows + 1):
            start, length = self.rows[i - 1]
            rightmost = self.labels[(i, start + length - 1)]
            if rs.letter == "D" and i == n - 1:
                if (self.labels[(n - 1, n - 1)] != rs.simple_indices[n - 1]
                        or self.labels[(n - 1, n)] != rs.simple_indices[n - 2]):
                    raise RuntimeError(f"labeling bug in D{n}: last row simples misplaced")
            elif rightmost != rs.simple_indices[i - 1]:
                raise RuntimeError(
                    f"labeling bug in {rs.letter}{n}: row {i} does not end in a{i}"
                )

    def render(self, selected: "SubDiagram | None" = None) -> str:
        """ASCII picture of the diagram, marking selected boxes with a star."""
        width = max(len(self.rs.root_str(i)) for i in self.labels.values()) + 2
        lines = []
        for i in range(1, self.n_rows + 1):
            start, length = self.rows[i - 1]
            cells = ["".ljust(width)] * (start - 1)
            for j in self.row_columns(i):
                text = self.rs.root_str(self.labels[(i, j)])
                if selected is not None and j < start + selected.prefix[i - 1]:
                    text = "*" + text
                cells.append(text.ljust(width))
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)

    def __repr__(self):
        return f"Diagram({self.rs.letter}{self.rs.rank}, rows {tuple(l for _, l in self.rows)})"


@dataclass(frozen=True)
class SubDiagram:
    """A row-prefix selection of a diagram, closed under the column shift."""

    diagram: Diagram
    prefix: tuple[int, ...]

    def __post_init__(self):
        dg = self.diagram
        lam = tuple(self.prefix)
        object.__setattr__(self, "prefix", lam)
        if len(lam) != dg.n_rows:
            raise ValueError(f"expected {dg.n_rows} rows, got {len(lam)}")
        shifted = dg.rs.letter != "A"
        for i, x in enumerate(lam):
            if not 0 <= x <= dg.rows[i][1]:
                raise ValueError(f"row {i + 1} prefix {x} exceeds length {dg.rows[i][1]}")
            if i and x > 0:
                need = x + 1 if shifted else x
                if lam[i - 1] < need:
                    raise ValueError(
                        f"column closure violated: row {i} prefix {lam[i - 1]} "
                        f"< required {need}"
                    )

    def boxes(self) -> Iterator[tuple[int, int]]:
        for i, x in enumerate(self.prefix, start=1):
            start = self.diagram.rows[i - 1][0]
            for j in range(start, start + x):
                yield (i, j)

    def __len__(self):
        return sum(self.prefix)


def enumerate_subdiagrams(diagram: Diagram) -> Iterator[SubDiagram]:
    """All valid prefix vectors, each exactly once, in lexicographic order."""
    shifted = diagram.rs.letter != "A"
    lengths = [l for _, l in diagram.rows]

    def go(i: int, lam: list[int]):
        if i == len(lengths):
            yield SubDiagram(diagram, tuple(lam))
            return
        if i == 0:
            top = lengths[0]
        elif shifted:
            top = min(lengths[i], lam[i - 1] - 1)
        else:
            top = min(lengths[i], lam[i - 1])
        for x in range(0, max(top, 0) + 1):
            lam.append(x)
            yield from go(i + 1, lam)
            lam.pop()

    yield from go(0, [])


def rootset(sub: SubDiagram, swapped: bool = False) -> Ideal:
    """The ideal whose members are the selected boxes' labels.

    With ``swapped`` (type D only) the labels of columns n-1 and n are
    exchanged before reading.  The result is checked to be upward closed;
    failure means the labelling itself is wrong and raises RuntimeError.
    """
    dg = sub.diagram
    rs, n = dg.rs, dg.rs.rank
    if swapped and rs.letter != "D":
        raise ValueError("swapped reading only exists for type D")
    members = []
    for (i, j) in sub.boxes():
        if swapped and j in (n - 1, n):
            j = 2 * n - 1 - j
        members.append(dg.labels[(i, j)])
    try:
        return Ideal(rs, members)
    except ValueError as exc:
        raise RuntimeError(f"labeling bug in {rs.letter}{n}: {exc}") from exc


def column_length(sub: SubDiagram, col: int) -> int:
    """Number of selected boxes in an absolute column."""
    total = 0
    for i, x in enumerate(sub.prefix, start=1):
        start = sub.diagram.rows[i - 1][0]
        if start <= col < start + x:
            total += 1
    return total


def equal_middle_columns(sub: SubDiagram) -> bool:
    """Type D: whether the selected columns n-1 and n have the same length."""
    rs = sub.diagram.rs
    if rs.letter != "D":
        raise ValueError("middle columns only exist for type D")
    n = rs.rank
    return column_length(sub, n - 1) == column_length(sub, n)


def prefix_simple_count(sub: SubDiagram, swapped: bool = False) -> int:
    """Simple roots of the rootset, computed from the prefix vector alone."""
    dg = sub.diagram
    n = dg.rs.rank
    lam = sub.prefix
    if dg.rs.letter != "D":
        return sum(1 for i, x in enumerate(lam) if x == dg.rows[i][1])
    count = sum(1 for i in range(n - 2) if lam[i] == dg.rows[i][1])
    # last row has length 2; one selected box gives alpha_n (alpha_{n-1} when
    # swapped), both boxes give both simples
    return count + lam[n - 2]


@dataclass(frozen=True)
class DiagramTables:
    """The three per-j subdiagram counts behind the type D double count."""

    unswapped: StatsTable
    swapped: StatsTable
    equal_columns: StatsTable

    @property
    def subdiagram_total(self) -> int:
        return self.unswapped.total

    @property
    def equal_total(self) -> int:
        return self.equal_columns.total

    def combined(self) -> StatsTable:
        t = self.unswapped
        counts = tuple(
            t.counts[j] + self.swapped.counts[j] - self.equal_columns.counts[j]
            for j in range(len(t.counts))
        )
        return StatsTable(t.letter, t.rank, counts, "diagrams")


def d_tables(diagram: Diagram) -> DiagramTables:
    """Per-j counts of subdiagrams (plain and swapped readings, equal columns)."""
    rs = diagram.rs
    if rs.letter != "D":
        raise ValueError("only type D has the double-counting rule")
    size = rs.rank + 1
    plain, swapped, equal = [0] * size, [0] * size, [0] * size
    for sub in enumerate_subdiagrams(diagram):
        j_plain = rootset(sub, swapped=False).simple_count()
        j_swapped = rootset(sub, swapped=True).simple_count()
        plain[j_plain] += 1
        swapped[j_swapped] += 1
        if equal_middle_columns(sub):
            equal[j_plain] += 1
    mk = lambda c: StatsTable(rs.letter, rs.rank, tuple(c), "diagrams")
    return DiagramTables(mk(plain), mk(swapped), mk(equal))


def diagram_stats(diagram: Diagram) -> StatsTable:
    """Per-j ideal counts read from the diagram; for D both readings combined."""
    rs = diagram.rs
    if rs.letter == "D":
        return d_tables(diagram).combined()
    counts = [0] * (rs.rank + 1)
    for sub in enumerate_subdiagrams(diagram):
        counts[rootset(sub).simple_count()] += 1
    return StatsTable(rs.letter, rs.rank, tuple(counts), "diagrams")
