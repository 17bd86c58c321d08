"""Closed-form counts for ideals of Borel subalgebras, as exact integers.

The classical-type counts of ideals containing a given number j of simple
roots, the abelian refinement, the generalized Catalan total, the count
of ideals containing no simple root, and the two intermediate counts used
in the type D double-counting argument.  Divisions are checked exact; a
nonzero remainder raises, since it can only mean bad input data.
"""

from __future__ import annotations

from math import comb

from .rootsystem import RootSystem


def binom(a: int, b: int) -> int:
    """Binomial coefficient, 0 whenever b < 0 or b > a (so 0 for all a < 0, b >= 0)."""
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what}: {num}/{den} is not an integer")
    return q


def ideal_count_a(n: int, j: int) -> int:
    """Ideals of the A_n Borel containing exactly j simple roots: (j+1)/(n+1) C(2n-j, n)."""
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= {n}, got {j}")
    return _exact_div((j + 1) * binom(2 * n - j, n), n + 1, "ideal_count_a")


def ideal_count_bc(n: int, j: int) -> int:
    """Ideals of the B_n (equivalently C_n) Borel with j simple roots: C(2n-j-1, n-1)."""
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= {n}, got {j}")
    return binom(2 * n - j - 1, n - 1)


def ideal_count_d(n: int, j: int) -> int:
    """Ideals of the D_n Borel with j simple roots, n >= 3."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= {n}, got {j}")
    if j == 0:
        return binom(2 * n - 2, n - 2) + binom(2 * n - 3, n - 3)
    return binom(2 * n - 2 - j, n - 2) + binom(2 * n - 3 - j, n - 2)


def ideal_count(letter: str, n: int, j: int) -> int:
    """Dispatch to the classical closed form; no closed form exists for E, F, G."""
    if letter == "A":
        return ideal_count_a(n, j)
    if letter in ("B", "C"):
        return ideal_count_bc(n, j)
    if letter == "D":
        return ideal_count_d(n, j)
    raise ValueError(f"no closed form for type {letter}")


def abelian_ideal_count(rs: RootSystem, j: int) -> int:
    """Abelian ideals with j simple roots: (2^n - z + 1, z - 1, 0, ...)."""
    if not 0 <= j <= rs.rank:
        raise ValueError(f"need 0 <= j <= {rs.rank}, got {j}")
    z = rs.connection_index
    if j == 0:
        return 2 ** rs.rank - z + 1
    if j == 1:
        return z - 1
    return 0


def simple_free_count(rs: RootSystem) -> int:
    """Ideals containing no simple root: (1/|W|) prod(h + e_i - 1)."""
    num = 1
    for e in rs.exponents:
        num *= rs.coxeter_number + e - 1
    return _exact_div(num, rs.weyl_order, "simple_free_count")


def total_ideal_count(rs: RootSystem) -> int:
    """All ideals, the generalized Catalan number (1/|W|) prod(e_i + h + 1)."""
    num = 1
    for e in rs.exponents:
        num *= e + rs.coxeter_number + 1
    return _exact_div(num, rs.weyl_order, "total_ideal_count")


def _ideal_count_a_clamped(n: int, j: int) -> int:
    # difference form extends to j > n as 0; j < 0 is clamped to 0 by hand
    if j < 0:
        return 0
    return binom(2 * n - j, n) - binom(2 * n - j, n + 1)


def d_subdiagram_count(n: int, j: int) -> int:
    """Subdiagrams of the D_n staircase whose plain reading has j simple roots."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return binom(2 * n - j - 2, n - 2)


def d_equal_column_count(n: int, j: int) -> int:
    """Subdiagrams of the D_n staircase with equal middle columns and j simple roots."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return (binom(2 * (n - 1) - j - 1, n - 2)
            - _ideal_count_a_clamped(n - 2, j - 1)
            + _ideal_count_a_clamped(n - 2, j - 2))
