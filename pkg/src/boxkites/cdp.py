"""Exact arithmetic for Cayley-Dickson basis units and sparse elements.

Basis units of the 2^n-dimensional algebra carry indices 0 .. 2^n - 1,
index 0 being the real unit.  A product of two basis units lands on the
XOR of the factors' indices; its sign comes from the doubling
construction and does not depend on the ambient dimension, so one signed
table serves every level (lower tables sit in the corner of higher ones).

Coefficients are exact (int or Fraction); floats are rejected so that
zero detection is never approximate.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from pathlib import Path
from typing import Iterable, Mapping, NamedTuple, Union

Coeff = Union[int, Fraction]

#: sign tables are memoized up to this level; beyond it the recursion runs bare
MEMO_MAX_N = 8


class IndexRangeError(ValueError):
    """A basis index does not fit the ambient 2^n-ion level."""


@dataclass(frozen=True, slots=True)
class Level:
    """Ambient level: the 2^n-ions, whose generator has index 2^(n-1)."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"level exponent must be positive: {self.n}")

    @property
    def g(self) -> int:
        """Index of the unit whose adjunction produced this level."""
        return 1 << (self.n - 1)

    @property
    def dim(self) -> int:
        return 1 << self.n

    def __repr__(self) -> str:
        return f"Level({self.n})"


class SignedUnit(NamedTuple):
    sign: int
    index: int


def _basis_sign(a: int, b: int) -> int:
    """Sign of the basis product i_a * i_b, by recursive doubling.

    One doubling step views a unit of the 2h-dimensional algebra as a
    pair of h-dimensional units, multiplied by

        (p, q) * (r, t) = (p r - t* q,  t p + q r*)

    with * the conjugation.  Unrolled to single basis units this leaves
    the four index cases below; the recursion bottoms out at the reals.
    The result is the same at every level that contains both factors.
    """
    if a == 0 or b == 0:
        return 1
    if a == b:
        return -1
    h = 1 << (max(a, b).bit_length() - 1)
    if a < h:  # low * high:  (e_a, 0)(0, e_j) = (0, e_j e_a)
        return _basis_sign(b - h, a)
    if b < h:  # high * low:  (0, e_i)(e_b, 0) = (0, e_i e_b*)
        return -_basis_sign(a - h, b)
    i, j = a - h, b - h  # high * high: (0, e_i)(0, e_j) = (-e_j* e_i, 0)
    if j == 0:
        return -1
    return _basis_sign(j, i)


_VALIDATED = False


def _validate_convention() -> None:
    """One-time self-check of the sign convention.

    Two facts pin the whole table down: a unit indexed below a
    power-of-two generator g satisfies i_L * i_g = +i_(g+L), and the
    quaternion cycle (1,2,3) doubles into the six oriented octonion
    cycles listed here.  A doubling variant with conjugations placed the
    other way would break these; guard against regressions.
    """
    global _VALIDATED
    if _VALIDATED:
        return
    for g in (2, 4, 8, 16):
        for lo in range(1, g):
            assert _basis_sign(lo, g) == 1, (lo, g)
    cycles = ((1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 4, 7), (1, 7, 6), (2, 5, 7), (3, 6, 5))
    for x, y, z in cycles:
        for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
            assert p ^ q == r and _basis_sign(p, q) == 1, (p, q, r)
    _VALIDATED = True


_TABLES: dict[int, list[list[int]]] = {}


def sign_table(n: int, cache_dir: str | os.PathLike | None = None) -> list[list[int]]:
    """Signed multiplication table for the 2^n-ions, memoized for n <= 8.

    With ``cache_dir`` given, the table is loaded from ``signs_n{n}.txt``
    in that directory when present, and written there (byte-stable) when
    absent.  File format: one line per entry, ``a b s`` with s in
    {+1, -1}, ordered by a then b.
    """
    if not 1 <= n <= MEMO_MAX_N:
        raise ValueError(f"sign tables are kept only for 1 <= n <= {MEMO_MAX_N}: {n}")
    tbl = _TABLES.get(n)
    if tbl is not None:
        return tbl
    _validate_convention()
    path = Path(cache_dir, f"signs_n{n}.txt") if cache_dir is not None else None
    if path is not None and path.exists():
        read_n, tbl = read_sign_table(path)
        if read_n != n:
            raise ValueError(f"cache file {path} holds a table for n={read_n}, wanted n={n}")
    else:
        dim = 1 << n
        tbl = [[_basis_sign(a, b) for b in range(dim)] for a in range(dim)]
        if path is not None:
            _write_table(tbl, path)
    _TABLES[n] = tbl
    return tbl


def _write_table(tbl: list[list[int]], path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = []
    for a, row in enumerate(tbl):
        for b, s in enumerate(row):
            lines.append(f"{a} {b} {'+1' if s > 0 else '-1'}")
    path.write_text("\n".join(lines) + "\n")


def write_sign_table(n: int, path: str | os.PathLike) -> None:
    """Write the full table for level n in the flat triple-per-line format."""
    _write_table(sign_table(n), Path(path))


def read_sign_table(path: str | os.PathLike) -> tuple[int, list[list[int]]]:
    """Read a table written by write_sign_table; returns (n, table)."""
    tokens = Path(path).read_text().split()
    if len(tokens) % 3:
        raise ValueError(f"{path}: token count {len(tokens)} is not a multiple of 3")
    dim = isqrt(len(tokens) // 3)
    if dim * dim * 3 != len(tokens) or dim < 2 or dim & (dim - 1):
        raise ValueError(f"{path}: entry count is not a square power of four")
    tbl = [[0] * dim for _ in range(dim)]
    pos = 0
    for a in range(dim):
        row = tbl[a]
        for b in range(dim):
            if int(tokens[pos]) != a or int(tokens[pos + 1]) != b:
                raise ValueError(f"{path}: entries out of order near ({a}, {b})")
            s = int(tokens[pos + 2])
            if s not in (1, -1):
                raise ValueError(f"{path}: bad sign {tokens[pos + 2]!r} at ({a}, {b})")
            row[b] = s
            pos += 3
    return dim.bit_length() - 1, tbl


def mul_basis(a: int, b: int, lvl: Level) -> SignedUnit:
    """Signed product of two basis units at the given level.

    The result index is a ^ b; i_0 is a two-sided identity and every
    other unit squares to -1.
    """
    d = lvl.dim
    if not (0 <= a < d and 0 <= b < d):
        raise IndexRangeError(f"basis indices ({a}, {b}) out of range for 2^{lvl.n}-ions")
    if lvl.n <= MEMO_MAX_N:
        return SignedUnit(sign_table(lvl.n)[a][b], a ^ b)
    return SignedUnit(_basis_sign(a, b), a ^ b)


def _check_coeff(v: Coeff) -> Coeff:
    if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
        raise TypeError(f"coefficients must be exact int or Fraction, got {type(v).__name__}")
    return v


class Element:
    """Sparse exact element: a finite signed sum of basis units.

    Stored as {index: coefficient} with zero coefficients dropped, so
    equality is canonical and exact cancelation yields the zero element.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Coeff] | Iterable[tuple[int, Coeff]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Coeff] = {}
        for k, v in items:
            if isinstance(k, bool) or not isinstance(k, int) or k < 0:
                raise IndexRangeError(f"basis index must be a non-negative int: {k!r}")
            _check_coeff(v)
            acc[k] = acc.get(k, 0) + v
        self._terms = {k: v for k, v in acc.items() if v != 0}

    @classmethod
    def unit(cls, index: int, coeff: Coeff = 1) -> "Element":
        return cls({index: coeff})

    @classmethod
    def scalar(cls, value: Coeff) -> "Element":
        return cls({0: value})

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    @property
    def terms(self) -> dict[int, Coeff]:
        return dict(self._terms)

    def coeff(self, index: int) -> Coeff:
        return self._terms.get(index, 0)

    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self._terms))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        acc = dict(self._terms)
        for k, v in other._terms.items():
            acc[k] = acc.get(k, 0) + v
        return Element(acc)

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Element":
        out = Element.__new__(Element)
        out._terms = {k: -v for k, v in self._terms.items()}
        return out

    def __mul__(self, other: Coeff) -> "Element":
        if isinstance(other, Element):
            raise TypeError("element products need an ambient level; use mul_element")
        _check_coeff(other)
        if other == 0:
            return Element.zero()
        out = Element.__new__(Element)
        out._terms = {k: v * other for k, v in self._terms.items()}
        return out

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Element) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {v!r}" for k, v in sorted(self._terms.items()))
        return f"Element({{{inner}}})"


def _check_element_level(x: Element, lvl: Level) -> None:
    for k in x._terms:
        if k >= lvl.dim:
            raise IndexRangeError(f"term index {k} outside 2^{lvl.n}-ions (level mismatch)")


def mul_element(x: Element, y: Element, lvl: Level) -> Element:
    """Bilinear product: distribute mul_basis over all term pairs.

    Like terms collect, so exact cancelation can return the zero element.
    """
    _check_element_level(x, lvl)
    _check_element_level(y, lvl)
    tbl = sign_table(lvl.n) if lvl.n <= MEMO_MAX_N else None
    acc: dict[int, Coeff] = {}
    for i, ci in x._terms.items():
        row = tbl[i] if tbl is not None else None
        for j, cj in y._terms.items():
            s = row[j] if row is not None else _basis_sign(i, j)
            k = i ^ j
            c = acc.get(k, 0) + (ci * cj if s > 0 else -(ci * cj))
            if c:
                acc[k] = c
            elif k in acc:
                del acc[k]
    out = Element.__new__(Element)
    out._terms = acc
    return out


def conjugate(x: Element) -> Element:
    """Negate every imaginary coefficient, fixing the real part."""
    out = Element.__new__(Element)
    out._terms = {k: (v if k == 0 else -v) for k, v in x._terms.items()}
    return out
