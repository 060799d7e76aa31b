from itertools import product

import pytest
from hypothesis import given, strategies as st

from qpl.core import (LEFT, MIDDLE, RIGHT, LatinError, Perm, Quasigroup, compose,
                      cyclic_group, direct_product, divide, is_associative,
                      loop_profile, mul, nucleus, tables_equal, translation)
from qpl.parastrophe import parastrophe

import oracles
from conftest import quasigroups


def test_mul_lookup(z3, ts3):
    assert mul(z3, 1, 2) == 0
    assert mul(z3, 0, 0) == z3.rows[0][0]
    assert mul(ts3, 1, 2) == (3 - 1 - 2) % 3 == 0


def test_mul_out_of_range(z3):
    with pytest.raises(IndexError):
        mul(z3, 3, 0)


def test_constructor_rejects_non_latin():
    with pytest.raises(LatinError):
        Quasigroup(((0, 1), (0, 1)))
    with pytest.raises(LatinError):
        Quasigroup(((0, 1), (1, 1)))
    with pytest.raises(LatinError):
        Quasigroup(((0, 1, 2), (1, 2, 0)))
    with pytest.raises(LatinError):
        Quasigroup(())


def test_divide(z3):
    assert divide(z3, LEFT, 1, 0) == 2
    assert divide(z3, RIGHT, 0, 2) == 1  # column 2 holds 0 in row 1
    with pytest.raises(ValueError):
        divide(z3, "up", 0, 0)


@given(quasigroups(max_order=5))
def test_division_round_trip(Q):
    for a, b in product(Q.elements(), repeat=2):
        assert mul(Q, a, divide(Q, LEFT, a, b)) == b
        assert mul(Q, divide(Q, RIGHT, a, b), b) == a
        assert divide(Q, LEFT, a, mul(Q, a, b)) == b


def test_translation(z3):
    assert translation(z3, LEFT, 0) == Perm.identity(3)
    assert translation(z3, LEFT, 1) == (1, 2, 0)


@given(quasigroups())
def test_translations_are_rows_and_columns(Q):
    for x in Q.elements():
        assert translation(Q, RIGHT, x) == tuple(r[x] for r in Q.rows)
        L = translation(Q, LEFT, x)
        assert L.then(L.inverse()).is_identity()
        assert L.inverse().then(L).is_identity()


def test_perm_basics():
    p = Perm([1, 2, 0])
    q = Perm([0, 2, 1])
    # right action: apply p then q
    assert p.then(q) == (2, 1, 0)
    assert compose(p, q, q) == p
    assert p.inverse() == (2, 0, 1)
    with pytest.raises(LatinError):
        Perm([0, 0, 1])
    assert sorted([q, p, Perm.identity(3)])[0] == (0, 1, 2)


def test_is_associative(z2, z3, ts3, s3):
    assert is_associative(z3) is None
    assert is_associative(z2) is None
    assert is_associative(s3) is None
    assert is_associative(ts3) == oracles.first_nonassociative(ts3.rows) == (0, 0, 1)


@given(quasigroups(max_order=5))
def test_associativity_matches_bruteforce(Q):
    assert is_associative(Q) == oracles.first_nonassociative(Q.rows)


def test_loop_profile(z2, z3, k4, ts3):
    p = loop_profile(z3)
    assert (p.two_sided_identity, p.commutative, p.exponent_two) == (0, True, False)
    assert loop_profile(z2).exponent_two
    assert loop_profile(k4).exponent_two
    p = loop_profile(ts3)
    assert p.two_sided_identity is None and not p.left_identities
    # x\z in Z3 has 0 as a left identity only
    p = loop_profile(parastrophe(z3, 3))
    assert p.left_identities == {0} and p.right_identities == set()


def test_nucleus_examples(z3, ts3):
    assert nucleus(z3, RIGHT) == {0, 1, 2}
    assert nucleus(ts3, RIGHT) == oracles.nucleus(ts3.rows, "right") == set()


@given(quasigroups(max_order=5))
def test_nuclei_match_bruteforce(Q):
    for kind in (LEFT, MIDDLE, RIGHT):
        assert nucleus(Q, kind) == oracles.nucleus(Q.rows, kind)


def test_nucleus_of_loop_with_partial_nucleus():
    # a non-associative loop of order 5 has a proper nucleus
    from qpl.enumeration import loops
    L = next(q for q in loops(5) if is_associative(q) is not None)
    for kind in (LEFT, MIDDLE, RIGHT):
        assert nucleus(L, kind) == oracles.nucleus(L.rows, kind)
        assert 0 in nucleus(L, kind)


@given(quasigroups(max_order=5))
def test_associative_means_full_nuclei(Q):
    if is_associative(Q) is None:
        for kind in (LEFT, MIDDLE, RIGHT):
            assert nucleus(Q, kind) == set(Q.elements())


def test_tables_equal(z2, z3, ts3):
    assert tables_equal(z3, z3)
    assert not tables_equal(z3, ts3)
    assert tables_equal(z2, parastrophe(z2, 2))
    assert not tables_equal(z2, z3)


def test_direct_product_is_klein(k4, z2):
    from qpl.isotopy import find_isomorphism
    assert find_isomorphism(direct_product(z2, z2), k4) is not None
    assert is_associative(direct_product(cyclic_group(3), z2)) is None
