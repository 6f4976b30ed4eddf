"""Exact counting of sweep-covers on truncations-free infinite star trees.

Everything here works in unbounded Python integers; scientific notation is a
display concern for callers.  The central quantity is ``p_count(delta,
gamma, n)``, the number of sweep-covers of size n on the infinite tree of
delta-stars joined by gamma-edge paths, evaluated by memoized recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .enumeration import compositions


class InvalidParamsError(ValueError):
    pass


class NonIntegerResultError(ArithmeticError):
    """The Raney formula division did not come out exact."""


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Partitions of n elements into k non-empty blocks.

    Out-of-range arguments (negative k, k > n) give 0 so that callers can
    apply summation formulas without boundary special-casing.
    """
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def count_nonsingleton(n: int, m: int) -> int:
    """Partitions of n elements into exactly m blocks, each of size >= 2.

    Evaluated via the alternating binomial-Stirling sum over s = n-m .. n.
    """
    return sum(
        comb(n, s) * (-1) ** (n - s) * stirling2(s, s + m - n)
        for s in range(max(n - m, 0), n + 1)
    )


def raney(p: int, r: int, k: int) -> int:
    """Raney number r/(kp+r) * binom(kp+r, k), asserted to be an integer."""
    if p < 1 or r < 1 or k < 0 or k * p + r <= 0:
        raise InvalidParamsError(f"bad Raney parameters p={p}, r={r}, k={k}")
    numerator = r * comb(k * p + r, k)
    denominator = k * p + r
    if numerator % denominator:
        raise NonIntegerResultError(f"r/(kp+r)*C(kp+r,k) not integral for p={p}, r={r}, k={k}")
    return numerator // denominator


def catalan(k: int) -> int:
    return raney(2, 1, k)


_p_memo: dict[tuple[int, int, int], int] = {}


def l_delta(delta: int, gamma: int, n: int, i: int) -> int:
    """Sum over compositions of n into i positive parts of the product of
    per-part cover counts.  Zero when n < i (no such composition)."""
    if n < i or n <= 0:
        return 0
    total = 0
    for parts in compositions(n, i):
        product = 1
        for k in parts:
            product *= p_count(delta, gamma, k)
        total += product
    return total


def p_count(delta: int, gamma: int, n: int) -> int:
    """Number of sweep-covers of size n on the infinite (delta, gamma) tree.

    Base case n = 1 is gamma + 1.  For n >= 2 the count splits by the
    number of singleton blocks l in the child-set partition: the l-sum is
    empty for delta = 2, and the l = delta and all-non-singleton cases are
    the two trailing terms.
    """
    if delta < 2 or gamma < 0 or n < 1:
        raise InvalidParamsError(f"bad parameters delta={delta}, gamma={gamma}, n={n}")
    key = (delta, gamma, n)
    if key in _p_memo:
        return _p_memo[key]
    if n == 1:
        value = gamma + 1
    else:
        value = 0
        for l in range(1, delta - 1):
            inner = 0
            for r in range(1, delta - l + 1):
                inner += l_delta(delta, gamma, n - r, l) * count_nonsingleton(delta - l, r)
            value += comb(delta, l) * inner
        value += l_delta(delta, gamma, n, delta)
        value += count_nonsingleton(delta, n)
    _p_memo[key] = value
    return value


def series_coefficients(delta: int, gamma: int, n_max: int) -> list[int]:
    """Coefficients [P(1), ..., P(n_max)] of the counting generating function."""
    if n_max < 1:
        raise InvalidParamsError(f"n_max must be >= 1, got {n_max}")
    return [p_count(delta, gamma, n) for n in range(1, n_max + 1)]


def p_table(
    delta_range: tuple[int, int], n_range: tuple[int, int], gamma: int
) -> dict[int, list[int]]:
    """Full-precision grid of p_count values, keyed by delta."""
    d_lo, d_hi = delta_range
    n_lo, n_hi = n_range
    if d_lo < 2 or d_hi < d_lo or n_lo < 1 or n_hi < n_lo or gamma < 0:
        raise InvalidParamsError(
            f"bad ranges delta={delta_range}, n={n_range}, gamma={gamma}"
        )
    return {
        d: [p_count(d, gamma, n) for n in range(n_lo, n_hi + 1)]
        for d in range(d_lo, d_hi + 1)
    }


# -- identity and bound reports ----------------------------------------


def raney_decomposition_check(p: int, r: int, k: int) -> bool:
    """Evaluate both sides of the Raney root-decomposition identity.

    RHS: sum over l = 1..r of binom(r, l) times, over compositions of k-1
    into l parts, the product of C_{p,1}(part+1).  Returns the computed
    verdict; nothing is assumed.
    """
    if p < 1 or r < 1 or k < 1:
        raise InvalidParamsError(f"bad parameters p={p}, r={r}, k={k}")
    rhs = 0
    for l in range(1, r + 1):
        partial = 0
        for parts in compositions(k - 1, l):
            product = 1
            for h in parts:
                product *= raney(p, 1, h + 1)
            partial += product
        rhs += comb(r, l) * partial
    return rhs == raney(p, r, k)


@dataclass(frozen=True)
class BoundRow:
    n: int
    p_value: int
    raney_value: int
    inequality_holds: bool


def raney_bound_report(
    delta: int, gamma: int, n_range: tuple[int, int]
) -> list[BoundRow]:
    """Per-n comparison of p_count against C_{delta,1}(n+1).

    Purely observational: each row records whether p_count >= the Raney
    value; nothing is asserted.
    """
    n_lo, n_hi = n_range
    if n_lo < 1 or n_hi < n_lo:
        raise InvalidParamsError(f"bad n range {n_range}")
    rows = []
    for n in range(n_lo, n_hi + 1):
        p = p_count(delta, gamma, n)
        c = raney(delta, 1, n + 1)
        rows.append(BoundRow(n=n, p_value=p, raney_value=c, inequality_holds=p >= c))
    return rows


@dataclass(frozen=True)
class GrowthRow:
    n: int
    p_value: int
    ratio: Fraction | None
    nth_root: float


def growth_report(delta: int, gamma: int, n_max: int) -> list[GrowthRow]:
    """Exact counts with consecutive ratios and n-th roots for eyeballing growth."""
    if n_max < 2:
        raise InvalidParamsError(f"n_max must be >= 2, got {n_max}")
    rows = []
    prev: int | None = None
    for n in range(1, n_max + 1):
        p = p_count(delta, gamma, n)
        ratio = Fraction(p, prev) if prev else None
        rows.append(GrowthRow(n=n, p_value=p, ratio=ratio, nth_root=p ** (1.0 / n)))
        prev = p
    return rows
