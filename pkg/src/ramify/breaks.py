"""Break combinatorics for degree-p extensions of local fields.

The upper-numbering break of a ramified degree-p cyclic extension of a local
field with residue characteristic p is a positive integer prime to p.  These
are enumerated by b_upper(i) = i + a_of(i), an increasing bijection from the
positive integers onto the positive integers prime to p.  b_lower(i) is the
same break transported to lower numbering through the Herbrand transition of
the ambient filtration (closed form below; module filtration owns the
piecewise-linear map that reproduces it).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "a_of",
    "b_upper",
    "prime_to_p_breaks",
    "b_lower",
    "c_truncation",
    "BreakSequence",
    "break_sequence",
    "iter_break_entries",
]


def _check_prime(p: int) -> None:
    if p < 2:
        raise ValueError("p must be a prime")
    if p in (2, 3):
        return
    if p % 2 == 0:
        raise ValueError("p must be a prime")
    d = 3
    while d * d <= p:
        if p % d == 0:
            raise ValueError("p must be a prime")
        d += 2


def _check_index(i: int) -> None:
    if i < 1:
        raise ValueError("index out of domain")


def a_of(i: int, p: int) -> int:
    """floor((i-1)/(p-1)), the number of p-multiples skipped below b_upper(i)."""
    _check_index(i)
    _check_prime(p)
    return (i - 1) // (p - 1)


def b_upper(i: int, p: int) -> int:
    """The i-th positive integer prime to p, in increasing order."""
    return i + a_of(i, p)


def prime_to_p_breaks(p: int, e: int) -> list[int]:
    """The e possible upper breaks b_upper(1) < ... < b_upper(e)."""
    if e < 0:
        raise ValueError("index out of domain")
    return [b_upper(i, p) for i in range(1, e + 1)]


def _check_q(p: int, q: int) -> None:
    _check_prime(p)
    r = q
    while r > 1:
        if r % p:
            raise ValueError("q must be a power of p")
        r //= p
    if q < p:
        raise ValueError("q must be a power of p")


def b_lower(i: int, p: int, q: int) -> int:
    """Lower-numbering image of b_upper(i): sum_{j<i} q^j + sum_{j=1}^{a(i)} q^{j(p-1)}."""
    _check_index(i)
    _check_q(p, q)
    first = sum(q**j for j in range(i))
    second = sum(q ** (j * (p - 1)) for j in range(1, a_of(i, p) + 1))
    return first + second


def c_truncation(m: int, p: int) -> int:
    """m - floor(m/p): how many break indices survive truncation at level m."""
    if m < 0:
        raise ValueError("index out of domain")
    _check_prime(p)
    return m - m // p


@dataclass(frozen=True)
class BreakSequence:
    """Tabulated break data: rows (i, a_of(i), b_upper(i), b_lower(i))."""

    p: int
    q: int
    entries: tuple[tuple[int, int, int, int], ...]


def iter_break_entries(p: int, q: int) -> Iterator[tuple[int, int, int, int]]:
    """Yield (i, a_of(i), b_upper(i), b_lower(i)) for i = 1, 2, ... without end."""
    _check_q(p, q)
    i = 1
    lower = 0
    prev_upper = 0
    while True:
        upper = b_upper(i, p)
        # Incremental form of the closed formula: crossing from b_upper(i-1)
        # to b_upper(i) adds one q^{i-1}-sized step per unit of upper distance,
        # which telescopes to the two-sum expression tested against b_lower.
        lower += q ** (i - 1) * (upper - prev_upper)
        yield i, a_of(i, p), upper, lower
        prev_upper = upper
        i += 1


def break_sequence(p: int, q: int, count: int) -> BreakSequence:
    """Materialize the first `count` rows of iter_break_entries."""
    if count < 0:
        raise ValueError("index out of domain")
    rows = []
    for row in iter_break_entries(p, q):
        if row[0] > count:
            break
        rows.append(row)
    return BreakSequence(p=p, q=q, entries=tuple(rows))
