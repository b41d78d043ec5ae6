from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from boxkites.cdp import (
    Element,
    IndexRangeError,
    Level,
    conjugate,
    mul_basis,
    mul_element,
    read_sign_table,
    sign_table,
    write_sign_table,
)

LVL2, LVL3, LVL4 = Level(2), Level(3), Level(4)

# The seven oriented octonion cycles: the quaternion cycle, its three
# generator extensions, and the three order-reversed doublings.  Together
# with identity and square rules they fix the whole 8x8 table, giving an
# oracle independent of the recursion under test.
OCTONION_CYCLES = ((1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 4, 7), (1, 7, 6), (2, 5, 7), (3, 6, 5))


def cycle_table(cycles, dim):
    tbl = {}
    for a in range(dim):
        tbl[(0, a)] = (1, a)
        tbl[(a, 0)] = (1, a)
    for a in range(1, dim):
        tbl[(a, a)] = (-1, 0)
    for x, y, z in cycles:
        for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
            tbl[(p, q)] = (1, r)
            tbl[(q, p)] = (-1, r)
    return tbl


def test_octonion_table_matches_cycle_oracle():
    oracle = cycle_table(OCTONION_CYCLES, 8)
    assert len(oracle) == 64
    for (a, b), expected in oracle.items():
        assert tuple(mul_basis(a, b, LVL3)) == expected, (a, b)


def test_quaternion_table_matches_cycle_oracle():
    oracle = cycle_table([(1, 2, 3)], 4)
    for (a, b), expected in oracle.items():
        assert tuple(mul_basis(a, b, LVL2)) == expected, (a, b)


@pytest.mark.parametrize(
    "a,b,lvl,expected",
    [
        (1, 2, LVL2, (1, 3)),
        (0, 5, LVL3, (1, 5)),
        (7, 7, LVL3, (-1, 0)),
        (3, 8, LVL4, (1, 11)),
        (1, 7, LVL3, (1, 6)),
        # reversal of the (1,7,6) cycle adjacency, hence negative
        (7, 1, LVL3, (-1, 6)),
    ],
)
def test_mul_basis_pinned_values(a, b, lvl, expected):
    assert tuple(mul_basis(a, b, lvl)) == expected


def test_generator_rule_all_powers():
    # i_L * i_g = +i_(g+L) for any power-of-two g and L < g
    for n in range(2, 7):
        lvl = Level(n)
        g = 2
        while g <= lvl.g:
            for lo in range(1, g):
                assert tuple(mul_basis(lo, g, lvl)) == (1, g + lo)
            g <<= 1


def test_sign_is_level_independent():
    for a in range(16):
        for b in range(16):
            ref = mul_basis(a, b, LVL4)
            for n in (5, 6):
                assert mul_basis(a, b, Level(n)) == ref


def test_index_is_xor_up_to_n8():
    lvl = Level(8)
    for a in range(256):
        for b in range(256):
            assert mul_basis(a, b, lvl).index == a ^ b


def test_anticommutativity_distinct_imaginaries():
    for n in (2, 3, 4, 5):
        lvl = Level(n)
        for a in range(1, lvl.dim):
            for b in range(1, lvl.dim):
                if a != b:
                    assert mul_basis(a, b, lvl).sign == -mul_basis(b, a, lvl).sign


def test_mul_basis_range_errors():
    with pytest.raises(IndexRangeError):
        mul_basis(8, 1, LVL3)
    with pytest.raises(IndexRangeError):
        mul_basis(1, -1, LVL3)


def test_element_canonical_and_zero():
    e = Element({3: 1, 5: 0, 7: -2})
    assert e.indices() == (3, 7)
    assert Element({1: 1}) - Element({1: 1}) == Element.zero()
    assert (Element({1: 1}) - Element({1: 1})).is_zero()
    assert not Element.zero()


def test_element_rejects_floats_and_bad_indices():
    with pytest.raises(TypeError):
        Element({1: 0.5})
    with pytest.raises(TypeError):
        Element({1: 1}) * 1.5
    with pytest.raises(IndexRangeError):
        Element({-1: 1})


def test_element_fraction_coefficients():
    e = Element({0: Fraction(1, 2), 3: Fraction(-2, 3)})
    assert e.coeff(0) == Fraction(1, 2)
    assert (3 * e).coeff(3) == -2


def test_mul_element_pinned_examples():
    # a sedenion box-kite edge in its annihilating orientation
    x = Element({1: 1, 13: 1})
    y = Element({2: 1, 14: -1})
    assert mul_element(x, y, LVL4).is_zero()
    # same planes, other slope pairing: not zero
    assert not mul_element(x, Element({2: 1, 14: 1}), LVL4).is_zero()
    assert mul_element(Element.unit(1), Element.unit(2), LVL2) == Element.unit(3)
    # (i_5 + i_4)^2 = -2: the cross terms anticommute away
    sq = mul_element(Element({5: 1, 4: 1}), Element({5: 1, 4: 1}), LVL3)
    assert sq == Element.scalar(-2)


def test_mul_element_level_mismatch():
    with pytest.raises(IndexRangeError):
        mul_element(Element.unit(9), Element.unit(1), LVL3)


def test_conjugate_pinned():
    assert conjugate(Element.unit(0)) == Element.unit(0)
    assert conjugate(Element.unit(5)) == Element.unit(5, -1)
    assert conjugate(Element({0: 3, 7: 2})) == Element({0: 3, 7: -2})


def _elements(n, max_terms=4):
    dim = 1 << n
    return st.dictionaries(
        st.integers(0, dim - 1), st.integers(-5, 5), max_size=max_terms
    ).map(Element)


@given(x=_elements(3), y=_elements(3), z=_elements(3))
def test_mul_element_is_bilinear(x, y, z):
    lvl = LVL3
    lhs = mul_element(x + y, z, lvl)
    rhs = mul_element(x, z, lvl) + mul_element(y, z, lvl)
    assert lhs == rhs
    assert mul_element(z, x + y, lvl) == mul_element(z, x, lvl) + mul_element(z, y, lvl)


def _norm_sq(x, lvl):
    prod = mul_element(x, conjugate(x), lvl)
    assert prod.indices() in ((), (0,))
    return prod.coeff(0)


@given(x=_elements(3), y=_elements(3))
def test_norm_composes_through_octonions(x, y):
    xy = mul_element(x, y, LVL3)
    assert _norm_sq(xy, LVL3) == _norm_sq(x, LVL3) * _norm_sq(y, LVL3)


@given(x=_elements(2), y=_elements(2))
def test_norm_composes_through_quaternions(x, y):
    xy = mul_element(x, y, LVL2)
    assert _norm_sq(xy, LVL2) == _norm_sq(x, LVL2) * _norm_sq(y, LVL2)


def test_norm_composition_fails_at_sedenions():
    x = Element({1: 1, 13: 1})
    y = Element({2: 1, 14: -1})
    assert _norm_sq(x, LVL4) * _norm_sq(y, LVL4) == 4
    assert _norm_sq(mul_element(x, y, LVL4), LVL4) == 0


def test_sign_table_cache_roundtrip(tmp_path):
    path = tmp_path / "signs_n3.txt"
    write_sign_table(3, path)
    first = path.read_bytes()
    n, tbl = read_sign_table(path)
    assert n == 3 and tbl == sign_table(3)
    write_sign_table(3, path)
    assert path.read_bytes() == first


def test_sign_table_cache_dir(tmp_path):
    import boxkites.cdp as cdp

    cdp._TABLES.pop(2, None)
    tbl = sign_table(2, cache_dir=tmp_path)
    assert (tmp_path / "signs_n2.txt").exists()
    cdp._TABLES.pop(2, None)
    assert sign_table(2, cache_dir=tmp_path) == tbl


def test_read_sign_table_rejects_corruption(tmp_path):
    path = tmp_path / "signs.txt"
    path.write_text("0 0 +1\n0 1 +2\n1 0 -1\n1 1 -1\n")
    with pytest.raises(ValueError):
        read_sign_table(path)
