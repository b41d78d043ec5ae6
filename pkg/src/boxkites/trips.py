"""Associative triplets: recognition, orientation, enumeration, counting.

A triple of distinct nonzero indices (a, b, c) with a ^ b = c spans an
associative (quaternionic) subalgebra.  Written in cyclically positive
order (CPO), left-to-right products of adjacent members come out
positive.  A trip stored ascending is "good" when ascending order is
already CPO and "bad" when the cycle runs the other way.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cdp import IndexRangeError, Level, mul_basis


class NotTripError(ValueError):
    """The given indices do not form an associative triplet."""


@dataclass(frozen=True, slots=True)
class Trip:
    """Canonical trip: indices ascending, orientation in the good flag."""

    a: int
    b: int
    c: int
    good: bool

    def __post_init__(self) -> None:
        if not 0 < self.a < self.b < self.c:
            raise ValueError(f"trip must be stored ascending: {(self.a, self.b, self.c)}")
        if self.a ^ self.b != self.c:
            raise ValueError(f"not closed under XOR: {(self.a, self.b, self.c)}")

    def indices(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def cpo(self) -> tuple[int, int, int]:
        """CPO rotation starting from the smallest index."""
        return (self.a, self.b, self.c) if self.good else (self.a, self.c, self.b)


@dataclass(frozen=True, slots=True)
class TripCount:
    n: int
    total: int
    good: int
    bad: int


def is_trip(a: int, b: int, c: int, lvl: Level) -> bool:
    """True when the indices are distinct, nonzero, and XOR-closed."""
    for k in (a, b, c):
        if not 0 <= k < lvl.dim:
            raise IndexRangeError(f"index {k} out of range for 2^{lvl.n}-ions")
    if 0 in (a, b, c) or len({a, b, c}) != 3:
        return False
    return a ^ b == c


def cpo_orient(a: int, b: int, c: int, lvl: Level) -> Trip:
    """Classify a trip, fixing its canonical ascending storage and flag."""
    if not is_trip(a, b, c, lvl):
        raise NotTripError(f"{(a, b, c)} is not an associative triplet")
    x, y, z = sorted((a, b, c))
    return Trip(x, y, z, mul_basis(x, y, lvl).sign > 0)


def enumerate_trips(lvl: Level) -> list[Trip]:
    """All trips at a level, ascending storage, sorted by (a, b, c)."""
    out: list[Trip] = []
    for a in range(1, lvl.dim):
        for b in range(a + 1, lvl.dim):
            c = a ^ b
            if c > b:
                out.append(Trip(a, b, c, mul_basis(a, b, lvl).sign > 0))
    return out


def _closed_form(n: int) -> int:
    d = 1 << n
    return (d - 1) * (d - 2) // 6


def trip_count(n: int) -> TripCount:
    """Closed-form trip census for the 2^n-ions.

    The total is the choose-two-then-divide count over the imaginary
    units; the bad share equals twice the previous level's total, and
    the remainder, including the fresh generator triples, is good.
    """
    if n < 1:
        raise ValueError(f"need n >= 1: {n}")
    total = _closed_form(n)
    bad = 2 * _closed_form(n - 1)
    return TripCount(n, total, total - bad, bad)


def rule2_expand(t: Trip | tuple[int, int, int], g: int) -> list[tuple[int, int, int]]:
    """Expand one CPO triple through a doubling by generator g.

    Each rotation (x, y, z) of the input yields (x, z + g, y + g):
    adding the generator to two members reverses the cycle.  Accepts a
    Trip or a bare CPO tuple and returns the three expansions, each a
    CPO tuple, in rotation order.
    """
    cpo = t.cpo() if isinstance(t, Trip) else tuple(t)
    if len(cpo) != 3:
        raise NotTripError(f"need exactly three indices: {cpo!r}")
    if g < 2 or g & (g - 1):
        raise ValueError(f"generator must be a power of two >= 2: {g}")
    if not all(0 < k < g for k in cpo):
        raise IndexRangeError(f"indices {cpo} must lie strictly below the generator {g}")
    lvl = Level(g.bit_length())  # results live one doubling up
    x, y, z = cpo
    if not is_trip(x, y, z, lvl) or mul_basis(x, y, lvl).sign < 0:
        raise NotTripError(f"{cpo} is not in cyclically positive order")
    out = []
    for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
        new = (p, r + g, q + g)
        assert new[0] ^ new[1] == new[2] and mul_basis(new[0], new[1], lvl).sign > 0
        out.append(new)
    return out


def trips_to_lines(trips: list[Trip]) -> list[str]:
    """Stable text export: one "a b c good|bad" line per trip."""
    ordered = sorted(trips, key=lambda t: (t.a, t.b, t.c))
    return [f"{t.a} {t.b} {t.c} {'good' if t.good else 'bad'}" for t in ordered]
