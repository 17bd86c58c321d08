"""Cross-verification suite: every count computed at least two independent ways.

For each requested root system this runs the applicable comparisons
between direct enumeration, the closed-form formulas, the staircase
diagram counts and the lattice-path counts, all as exact integer
equalities.  Results come back as Check records so callers (the CLI, the
test suite) can report or fail on them uniformly.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import formulas
from .ideals import Ideal, abelian_table, ideal_masks, nilpotency_index, principal_ideal, stats_table
from .paths import count_paths_closed, dyck_from_partition
from .rootsystem import RootSystem
from .staircase import Diagram, d_tables, diagram_stats, enumerate_subdiagrams, rootset


@dataclass(frozen=True)
class Check:
    system: str
    name: str
    j: int | None
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def as_row(self) -> dict:
        return {"system": self.system, "check": self.name, "j": self.j,
                "lhs": self.lhs, "rhs": self.rhs, "ok": self.ok}


# nilpotency agreement is exhaustive over all ideals, so keep it to the
# systems where that stays cheap
_DEEP_SCOPE_MAX_CLASSICAL_RANK = 5


def _deep_applies(letter: str, rank: int) -> bool:
    if letter in "ABCD":
        return rank <= _DEEP_SCOPE_MAX_CLASSICAL_RANK
    return letter in "FG"


def expand_types(types: list[str], max_rank: int) -> list[tuple[str, int]]:
    """All valid (letter, rank) pairs for the requested families."""
    out: list[tuple[str, int]] = []
    for letter in types:
        if letter == "A":
            ranks = range(1, max_rank + 1)
        elif letter in ("B", "C"):
            ranks = range(2, max_rank + 1)
        elif letter == "D":
            ranks = range(3, max_rank + 1)
        elif letter == "E":
            ranks = [n for n in (6, 7, 8) if n <= max_rank]
        elif letter == "F":
            ranks = [4] if max_rank >= 4 else []
        elif letter == "G":
            ranks = [2] if max_rank >= 2 else []
        else:
            raise ValueError(f"unknown type letter {letter!r}")
        out.extend((letter, n) for n in ranks)
    return out


def checks_for_system(letter: str, rank: int, deep: bool = False) -> list[Check]:
    rs = RootSystem(letter, rank)
    name = f"{letter}{rank}"
    masks = ideal_masks(rs)
    stats = stats_table(rs, masks)
    checks: list[Check] = []
    add = checks.append

    z_marks = 1 + sum(1 for a in rs.marks if a == 1)
    add(Check(name, "z_consistency", None, rs.connection_index, z_marks))

    add(Check(name, "catalan_total", None, stats.total, formulas.total_ideal_count(rs)))
    add(Check(name, "simple_free", 0, stats.counts[0], formulas.simple_free_count(rs)))

    if letter in "ABCD":
        for j in range(rank + 1):
            add(Check(name, "theorem_stats", j, stats.counts[j],
                      formulas.ideal_count(letter, rank, j)))

    if letter == "A":
        for j in range(rank + 1):
            add(Check(name, "path_stats", j, stats.counts[j],
                      count_paths_closed(2 * rank + 2, 0, j + 1)))
    elif letter in "BC":
        for j in range(rank + 1):
            total = sum(count_paths_closed(2 * rank, h, j) for h in range(2 * rank + 1))
            add(Check(name, "path_stats", j, stats.counts[j], total))

    if letter in "ABCD":
        dg = Diagram(rs)
        table = diagram_stats(dg)
        for j in range(rank + 1):
            add(Check(name, "diagram_stats", j, table.counts[j], stats.counts[j]))
        if letter == "D":
            tabs = d_tables(dg)
            add(Check(name, "d_double_count", None,
                      2 * tabs.subdiagram_total - tabs.equal_total, stats.total))
            for j in range(rank + 1):
                add(Check(name, "d_subdiagram_count", j, tabs.unswapped.counts[j],
                          formulas.d_subdiagram_count(rank, j)))
                add(Check(name, "d_equal_column_count", j, tabs.equal_columns.counts[j],
                          formulas.d_equal_column_count(rank, j)))
            alpha_n = rs.simple_indices[rank - 1]
            marker = sum(1 for sub in enumerate_subdiagrams(dg) if alpha_n in rootset(sub))
            by_paths = sum(count_paths_closed(2 * rank - 1, 1, j) for j in range(2 * rank))
            add(Check(name, "d_alpha_marker", None, marker, by_paths))

    if letter == "A":
        images = set()
        mismatches = 0
        for sub in enumerate_subdiagrams(Diagram(rs)):
            path = dyck_from_partition(rank, sub.prefix)
            images.add(path.steps)
            if path.returns - 1 != rootset(sub).simple_count():
                mismatches += 1
        add(Check(name, "dyck_image_count", None, len(images), stats.total))
        add(Check(name, "dyck_returns_mismatch", None, mismatches, 0))

    ab = abelian_table(rs, masks)
    add(Check(name, "abelian_total", None, ab.total, 2 ** rank))
    for j in range(rank + 1):
        add(Check(name, "abelian_stats", j, ab.counts[j], formulas.abelian_ideal_count(rs, j)))
    many_simples = sum(ab.counts[2:])
    add(Check(name, "abelian_simple_bound", None, many_simples, 0))

    for j in range(1, rank + 1):
        add(Check(name, "principal_nilpotency", j,
                  nilpotency_index(principal_ideal(rs, j)), rs.marks[j - 1]))

    if deep and _deep_applies(letter, rank):
        bad = 0
        for m in masks:
            ideal = Ideal._trusted(rs, m)
            if ideal.antichain_nilpotency_index() != nilpotency_index(ideal):
                bad += 1
        add(Check(name, "nilpotency_agreement", None, bad, 0))

    return checks


def _worker(args: tuple[str, int, bool]) -> list[Check]:
    return checks_for_system(*args)


def run_verify(types: list[str], max_rank: int, deep: bool = False,
               threads: int | None = None) -> list[Check]:
    """Run the suite over the requested families; results in a fixed order."""
    systems = expand_types(types, max_rank)
    if not systems:
        raise ValueError(f"no systems of rank <= {max_rank} among types {','.join(types)}")
    if threads is None:
        threads = worker_count_from_env()
    jobs = [(letter, rank, deep) for letter, rank in systems]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_worker, jobs))
    else:
        results = [_worker(job) for job in jobs]
    return [c for batch in results for c in batch]


def worker_count_from_env() -> int:
    raw = os.environ.get("NILIDEAL_THREADS", "1")
    try:
        threads = int(raw)
    except ValueError:
        raise ValueError(f"NILIDEAL_THREADS must be an integer, got {raw!r}")
    if threads < 1:
        raise ValueError(f"NILIDEAL_THREADS must be >= 1, got {threads}")
    return threads


def first_failure(checks: list[Check]) -> Check | None:
    return next((c for c in checks if not c.ok), None)
