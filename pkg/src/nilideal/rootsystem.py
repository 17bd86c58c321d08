"""Positive root systems of the finite simple types A-G.

Every root is stored as its integer coefficient vector over the simple
basis (Bourbaki numbering), so the whole artifact runs on exact integer
arithmetic.  Roots are generated from the Cartan matrix by reflection
closure: starting from the simple basis vectors, apply the simple
reflections repeatedly and keep the vectors with all-nonnegative
coefficients.  Derived invariants (exponents, Coxeter number, Weyl group
order, connection index) are computed from the generated set and
cross-checked against each other at build time; a mismatch raises, since
it can only mean the generation itself is wrong.

The root poset order is coefficientwise comparison: alpha <= beta iff
beta - alpha has nonnegative coordinates, which agrees with the usual
order on positive roots (every cover adds a single simple root).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

VALID_LETTERS = "ABCDEFG"

# Minimal rank per family; E is special-cased to {6, 7, 8}.
_RANK_RULES = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


def validate_type_rank(letter: str, rank: int) -> None:
    """Raise ValueError unless (letter, rank) names a simple type."""
    if letter not in _RANK_RULES:
        raise ValueError(f"unknown type letter {letter!r}: expected one of {VALID_LETTERS}")
    lo, hi = _RANK_RULES[letter]
    if letter == "E":
        if rank not in (6, 7, 8):
            raise ValueError(f"type E requires rank in {{6, 7, 8}}, got {rank}")
        return
    if rank < lo:
        raise ValueError(f"type {letter} requires rank >= {lo}, got {rank}")
    if hi is not None and rank > hi:
        raise ValueError(f"type {letter} requires rank = {hi}, got {rank}")


def cartan_matrix(letter: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix a[i][j] = <alpha_i, alpha_j^vee> in Bourbaki numbering."""
    validate_type_rank(letter, rank)
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, ij=-1, ji=-1):
        a[i][j] = ij
        a[j][i] = ji

    if letter in "ABC":
        for i in range(n - 1):
            bond(i, i + 1)
        if letter == "B":
            a[n - 2][n - 1] = -2  # alpha_n is the short root
        elif letter == "C":
            a[n - 1][n - 2] = -2  # alpha_n is the long root
    elif letter == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif letter == "E":
        # chain 1-3-4-5-...-n with node 2 attached to node 4
        chain = [0] + list(range(2, n))
        for i, j in zip(chain, chain[1:]):
            bond(i, j)
        bond(1, 3)
    elif letter == "F":
        for i in range(3):
            bond(i, i + 1)
        a[1][2] = -2  # double bond, alpha_3/alpha_4 short
    elif letter == "G":
        bond(0, 1)
        a[1][0] = -3  # alpha_1 short
    return tuple(tuple(row) for row in a)


def _det_exact(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a small integer matrix (fraction-free elimination)."""
    n = len(m)
    w = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if w[r][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            w[c], w[pivot] = w[pivot], w[c]
            det = -det
        det *= w[c][c]
        inv = 1 / w[c][c]
        for r in range(c + 1, n):
            f = w[r][c] * inv
            for k in range(c, n):
                w[r][k] -= f * w[c][k]
    assert det.denominator == 1
    return int(det)


class RootSystem:
    """The positive roots of a simple type, with poset and invariant data.

    Immutable after construction; safe to share between workers.  All of
    ``roots`` is sorted by (height, lexicographic coefficients), so root
    indices are reproducible across runs.
    """

    def __init__(self, letter: str, rank: int):
        validate_type_rank(letter, rank)
        self.letter = letter
        self.rank = rank
        self.cartan = cartan_matrix(letter, rank)
        self.roots = self._generate_positive_roots()
        self.index = {v: i for i, v in enumerate(self.roots)}
        self.heights = tuple(sum(v) for v in self.roots)
        self.simple_indices = tuple(
            self.index[tuple(1 if j == k else 0 for j in range(rank))] for k in range(rank)
        )
        self.theta_index = len(self.roots) - 1
        self.marks = self.roots[self.theta_index]
        self.exponents = self._exponents_from_heights()
        self.coxeter_number = self.heights[self.theta_index] + 1
        w = 1
        for e in self.exponents:
            w *= e + 1
        self.weyl_order = w
        self.connection_index = _det_exact(self.cartan)

        self._simple_mask = 0
        for i in self.simple_indices:
            self._simple_mask |= 1 << i
        self._build_poset_tables()
        self._check_invariants()

    # -- construction ------------------------------------------------------

    def _generate_positive_roots(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        a = self.cartan
        simples = [tuple(1 if j == k else 0 for j in range(n)) for k in range(n)]
        found = set(simples)
        frontier = list(simples)
        while frontier:
            nxt = []
            for v in frontier:
                for j in range(n):
                    # s_j(v) changes only coordinate j, by <v, alpha_j^vee>
                    pairing = sum(v[i] * a[i][j] for i in range(n))
                    w = list(v)
                    w[j] -= pairing
                    if w[j] < 0:
                        continue
                    t = tuple(w)
                    if t not in found:
                        found.add(t)
                        nxt.append(t)
            frontier = nxt
        return tuple(sorted(found, key=lambda v: (sum(v), v)))

    def _exponents_from_heights(self) -> tuple[int, ...]:
        # conjugate of the partition (#roots of height 1, of height 2, ...)
        hmax = self.heights[-1]
        count = [0] * (hmax + 1)
        for h in self.heights:
            count[h] += 1
        exps = [sum(1 for h in range(1, hmax + 1) if count[h] >= i) for i in range(1, self.rank + 1)]
        return tuple(sorted(exps))

    def _build_poset_tables(self):
        n_roots = len(self.roots)
        up = [[] for _ in range(n_roots)]
        down = [[] for _ in range(n_roots)]
        for i, v in enumerate(self.roots):
            for k in range(self.rank):
                w = list(v)
                w[k] += 1
                j = self.index.get(tuple(w))
                if j is not None:
                    up[i].append(j)
                    down[j].append(i)
        self.up_covers = tuple(tuple(sorted(c)) for c in up)
        self.down_covers = tuple(tuple(sorted(c)) for c in down)
        self.up_cover_masks = tuple(_mask(c) for c in self.up_covers)
        self.down_cover_masks = tuple(_mask(c) for c in self.down_covers)

        # upset_masks[i] = bitmask of every root >= root i
        upset = [0] * n_roots
        for i in range(n_roots - 1, -1, -1):
            m = 1 << i
            for j in self.up_covers[i]:
                m |= upset[j]
            upset[i] = m
        self.upset_masks = tuple(upset)

        # sum_index[i][j] = index of root_i + root_j, or -1
        sums = []
        partners = []
        for i, v in enumerate(self.roots):
            row = []
            pm = 0
            for j, w in enumerate(self.roots):
                s = self.index.get(tuple(x + y for x, y in zip(v, w)), -1)
                row.append(s)
                if s >= 0:
                    pm |= 1 << j
            sums.append(tuple(row))
            partners.append(pm)
        self.sum_index = tuple(sums)
        self.partner_masks = tuple(partners)

    def _check_invariants(self):
        n, h = self.rank, self.coxeter_number
        problems = []
        if 2 * len(self.roots) != n * h:
            problems.append(f"|roots| = {len(self.roots)} but rank*h/2 = {n * h // 2}")
        z_marks = 1 + sum(1 for a in self.marks if a == 1)
        if self.connection_index != z_marks:
            problems.append(
                f"det(cartan) = {self.connection_index} but 1 + #{{marks = 1}} = {z_marks}"
            )
        # theta must be the unique maximum
        for i in range(len(self.roots)):
            if not self.leq(i, self.theta_index):
                problems.append(f"root {self.roots[i]} not below theta")
                break
        # every non-simple root is a root of smaller height plus a simple root
        for j, v in enumerate(self.roots):
            if self.heights[j] > 1 and not self.down_covers[j]:
                problems.append(f"root {v} has no lower cover")
                break
        if problems:
            raise RuntimeError(
                f"inconsistent root data for {self.letter}{self.rank}: " + "; ".join(problems)
            )

    # -- queries -----------------------------------------------------------

    def __repr__(self):
        return f"RootSystem({self.letter}{self.rank}, {len(self.roots)} positive roots)"

    def __len__(self):
        return len(self.roots)

    def leq(self, a: int, b: int) -> bool:
        """Root poset order: true iff root b - root a has nonnegative coordinates."""
        va, vb = self.roots[a], self.roots[b]
        return all(x <= y for x, y in zip(va, vb))

    def is_root(self, v: Iterable[int]) -> bool:
        """True iff v is the coefficient vector of a positive root."""
        t = tuple(v)
        if len(t) != self.rank:
            raise ValueError(f"expected a vector of length {self.rank}, got {len(t)}")
        return t in self.index

    def highest_root(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """The highest root and its marks (they are the same vector)."""
        return self.marks, self.marks

    def simple_mask(self) -> int:
        return self._simple_mask

    def root_str(self, i: int) -> str:
        """Human-readable form of root i, e.g. 'a1+2a2+a3'."""
        parts = []
        for k, c in enumerate(self.roots[i], start=1):
            if c == 0:
                continue
            parts.append(f"a{k}" if c == 1 else f"{c}a{k}")
        return "+".join(parts)

    def invariants_report(self) -> dict:
        """Numerical invariants; recomputes the two z values and re-verifies them."""
        z_marks = 1 + sum(1 for a in self.marks if a == 1)
        if z_marks != self.connection_index:
            raise RuntimeError("connection index mismatch")  # unreachable after build check
        return {
            "type": self.letter,
            "rank": self.rank,
            "positive_roots": len(self.roots),
            "coxeter_number": self.coxeter_number,
            "exponents": list(self.exponents),
            "weyl_order": self.weyl_order,
            "connection_index": self.connection_index,
            "marks": list(self.marks),
        }


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def build(letter: str, rank: int) -> RootSystem:
    """Construct the positive root system of the given simple type."""
    return RootSystem(letter, rank)
