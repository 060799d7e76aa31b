import pytest
from hypothesis import given

from qpl.core import LEFT, Perm, tables_equal, translation, cyclic_group
from qpl.enumeration import latin_squares, random_quasigroup
from qpl.parastrophe import (ALIASES, SYMBOLS, Kind, check_translation_identities,
                             is_totally_symmetric, parastrophe,
                             parastrophe_translation, parse_kind, parastrophe_loop_profile)

import oracles
from conftest import quasigroups


def test_left_division_parastrophe_of_z3(z3):
    assert parastrophe(z3, Kind.PI3).rows == ((0, 1, 2), (2, 0, 1), (1, 2, 0))


@pytest.mark.parametrize("kind", list(Kind))
def test_z2_every_kind(z2, kind):
    assert parastrophe(z2, kind).rows == ((0, 1), (1, 0))


def test_totally_symmetric(ts3, z3):
    assert all(tables_equal(ts3, parastrophe(ts3, k)) for k in Kind)
    assert is_totally_symmetric(ts3)
    assert not is_totally_symmetric(z3)


@given(quasigroups())
def test_matches_relation_oracle(Q):
    want = oracles.parastrophes(Q.rows)
    for k in Kind:
        assert parastrophe(Q, k).rows == want[int(k)]


@given(quasigroups())
def test_involutions_and_composites(Q):
    for k in (Kind.PI2, Kind.PI3, Kind.PI4):
        assert parastrophe(parastrophe(Q, k), k) == Q
    assert parastrophe(Q, Kind.PI5) == parastrophe(parastrophe(Q, Kind.PI3), Kind.PI2)
    assert parastrophe(Q, Kind.PI6) == parastrophe(parastrophe(Q, Kind.PI4), Kind.PI2)
    assert parastrophe(Q, Kind.PI1) is Q


@given(quasigroups())
def test_commutative_iff_equal_to_transpose(Q):
    comm = all(Q.rows[x][y] == Q.rows[y][x] for x in Q.elements() for y in Q.elements())
    assert comm == tables_equal(Q, parastrophe(Q, Kind.PI2))


def test_involutions_exhaustive_order_4():
    for Q in latin_squares(4):
        for k in (Kind.PI2, Kind.PI3, Kind.PI4):
            assert parastrophe(parastrophe(Q, k), k) == Q


def test_parse_kind():
    assert parse_kind("pi5") is Kind.PI5
    assert parse_kind("PI2") is Kind.PI2
    assert parse_kind("rinv") is Kind.PI3
    assert parse_kind(6) is Kind.PI6
    assert set(ALIASES.values()) == set(Kind)
    with pytest.raises(ValueError):
        parse_kind("pi7")


def test_parastrophe_translation(z3, z2):
    calL1 = parastrophe_translation(z3, "calL", 1)
    assert calL1 == translation(z3, LEFT, 1).inverse()
    for x in z3.elements():
        assert parastrophe_translation(z3, "R*", x) == translation(z3, LEFT, x)
    for name in SYMBOLS:
        assert parastrophe_translation(z2, name, 0) == Perm.identity(2)


def test_translation_identities_z3(z3):
    res = check_translation_identities(z3)
    assert len(res) == 10
    assert all(r.ok and r.first_failure is None for r in res)


def test_translation_identities_exhaustive_order_4():
    for Q in latin_squares(4):
        assert all(r.ok for r in check_translation_identities(Q))


def test_translation_identities_seeded_order_5():
    assert all(r.ok for r in check_translation_identities(random_quasigroup(5, 7)))


def test_translation_identities_detects_broken_identity(z3, monkeypatch):
    # a deliberately wrong identity must be flagged with its first failing x
    import qpl.parastrophe as pm
    monkeypatch.setattr(pm, "TRANSLATION_IDENTITIES", [("calL", "L", False)])
    (r,) = check_translation_identities(z3)
    assert not r.ok and r.first_failure == 1


def test_parastrophe_loops_z2(z2):
    rep = parastrophe_loop_profile(z2)
    assert rep.ok
    assert all(rep.loops[k] for k in (Kind.PI3, Kind.PI4, Kind.PI5, Kind.PI6))


def test_parastrophe_loops_z3(z3):
    rep = parastrophe_loop_profile(z3)
    assert rep.ok
    assert rep.left_identity[Kind.PI3] == [0]
    assert not rep.loops[Kind.PI3]


def test_parastrophe_loops_z4():
    rep = parastrophe_loop_profile(cyclic_group(4))
    assert rep.ok
    assert rep.right_identity[Kind.PI4] == [0]
    assert not rep.loops[Kind.PI4]


def test_parastrophe_loops_every_loop_order_5():
    from qpl.enumeration import loops
    assert all(parastrophe_loop_profile(L).ok for L in loops(5))
