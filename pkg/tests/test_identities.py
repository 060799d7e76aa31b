import random

import pytest
from hypothesis import given, strategies as st

from qpl.core import Perm, cyclic_group
from qpl.enumeration import groups, latin_squares, random_quasigroup, sample_quasigroups
from qpl.identities import (BUILTINS, KHALIL, BinOp, EvansWitness, IdentityError,
                            ParseError, Var, builtin, equality_vs_associativity,
                            evaluate_term, evans_check, evans_from_isotopism, evans_search,
                            holds, identity_holds, is_balanced, khalil_parastrophes,
                            khalil_suite, parse_identity, parse_term)
from qpl.isotopy import BoundExceeded, Isotopism, apply_isotopism, find_isotopism

import oracles
from conftest import quasigroups


# -- parsing ---------------------------------------------------------------------

def test_parse_associativity():
    ident = parse_identity("x*(y*z) = (x*y)*z")
    assert ident.vars == ("x", "y", "z")
    assert ident.lhs == BinOp("*", Var("x"), BinOp("*", Var("y"), Var("z")))


def test_brackets_are_interchangeable():
    a = parse_term(r"x*{z\[(z/u)*v]}")
    b = parse_term(r"x*(z\((z/u)*v))")
    assert a == b


def test_left_associative_single_level():
    assert parse_term("x/y*z") == BinOp("*", BinOp("/", Var("x"), Var("y")), Var("z"))


@pytest.mark.parametrize("text,pos", [
    ("x*y = y*", 8),
    ("x*(y*z = x", 7),
    ("xy = yx", 1),
    ("x*y", 3),
    ("x*Y = y", 2),
    ("x*y = y*x)", 9),
    ("x*[y*z) = x", 6),
])
def test_parse_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as err:
        parse_identity(text)
    assert err.value.pos == pos
    assert f"position {pos}" in str(err.value)


def test_unknown_builtin():
    with pytest.raises(IdentityError):
        builtin("nope")


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_printing_roundtrips(name):
    ident = builtin(name)
    assert parse_identity(str(ident)) == ident


@st.composite
def terms(draw, depth=3):
    if depth == 0 or draw(st.booleans()):
        return Var(draw(st.sampled_from("xyzuv")))
    return BinOp(draw(st.sampled_from("*\\/")), draw(terms(depth - 1)), draw(terms(depth - 1)))


@given(terms(), terms())
def test_printing_roundtrips_generated(a, b):
    text = f"{BinOp('*', a, b)}"
    assert parse_term(text) == BinOp("*", a, b)


def test_balanced():
    assert is_balanced(builtin("comm"))
    assert is_balanced(builtin("assoc"))
    assert not is_balanced(parse_identity(r"x*(x\y) = y"))
    assert not is_balanced(parse_identity("x*y = x*z"))
    assert not any(is_balanced(builtin(k)) for k in KHALIL)


# -- evaluation ------------------------------------------------------------------

def test_evaluate_term_examples(z3):
    assert evaluate_term(z3, parse_term("x*y"), {"x": 1, "y": 2}) == 0
    for x in z3.elements():
        assert evaluate_term(z3, parse_term(r"x\x"), {"x": x}) == 0
    k1 = builtin("khalil1")
    asg = dict.fromkeys(k1.vars, 1)
    assert evaluate_term(z3, k1.lhs, asg) == evaluate_term(z3, k1.rhs, asg)
    with pytest.raises(IdentityError):
        evaluate_term(z3, parse_term("x*y"), {"x": 0})


@given(quasigroups(max_order=5), st.data())
def test_divisions_invert_multiplication(Q, data):
    x = data.draw(st.integers(0, Q.n - 1))
    y = data.draw(st.integers(0, Q.n - 1))
    asg = {"x": x, "y": y}
    assert evaluate_term(Q, parse_term(r"x*(x\y)"), asg) == y
    assert evaluate_term(Q, parse_term(r"(y/x)*x"), asg) == y


def test_identity_holds_examples(z3, ts3):
    assert identity_holds(z3, builtin("assoc")) is None
    fail = identity_holds(ts3, builtin("assoc"))
    assert tuple(fail.values()) == oracles.first_nonassociative(ts3.rows)
    assert identity_holds(z3, builtin("khalil1")) is None
    assert holds(ts3, "comm") and holds(ts3, "x*y = y*x")


def test_first_failure_is_lexicographic():
    for Q in list(latin_squares(3)) + list(sample_quasigroups(4, 20, seed=1)):
        got = identity_holds(Q, builtin("assoc"))
        want = oracles.first_nonassociative(Q.rows)
        assert (None if got is None else (got["x"], got["y"], got["z"])) == want


def test_variable_bound(z2):
    many = parse_identity("a*b*c*d*e*f*g = g*f*e*d*c*b*a")
    with pytest.raises(IdentityError):
        identity_holds(z2, many)
    assert identity_holds(z2, many, max_vars=7) is None


# -- Khalil conditions -------------------------------------------------------------

def test_khalil_on_groups_and_their_isotopes(z3, ts3, k4):
    assert all(khalil_suite(z3))
    assert all(khalil_suite(ts3))
    assert all(khalil_suite(k4))


def test_khalil_fails_off_group_isotopes():
    # an order-5 square that is isotopic to no group
    for Q in sample_quasigroups(5, 50, seed=0):
        if find_isotopism(Q, cyclic_group(5)) is None:
            assert not all(khalil_suite(Q))
            break
    else:
        pytest.fail("no non-isotope found in the sample")


def test_khalil_bound():
    with pytest.raises(BoundExceeded):
        khalil_suite(random_quasigroup(9, 0))


def test_khalil_parastrophes_of_groups():
    for n in range(1, 5):
        for G in groups(n):
            assert khalil_parastrophes(G).ok


def test_khalil_parastrophes_rejects_non_group(ts3):
    assert khalil_parastrophes(ts3).error


# -- Evans witnesses ---------------------------------------------------------------

def test_trivial_witness_is_associativity(z3, ts3):
    assert evans_check(z3, EvansWitness.trivial(3))
    assert not evans_check(ts3, EvansWitness.trivial(3))


def test_witness_from_isotopism():
    rng = random.Random(4)
    for G in list(groups(4)) + [cyclic_group(5)]:
        n = G.n
        for _ in range(10):
            A, B, C = (Perm(rng.sample(range(n), n)) for _ in "ABC")
            Q = apply_isotopism(G, Isotopism(A, B, C))
            assert evans_check(Q, evans_from_isotopism(A, B, C))


def test_witness_degree_checked(z3):
    with pytest.raises(ValueError):
        evans_check(z3, EvansWitness.trivial(2))


def test_evans_search_small():
    for n in range(1, 4):
        for Q in latin_squares(n):
            w = evans_search(Q)
            assert w is not None and evans_check(Q, w)


def test_evans_search_bound(z4):
    with pytest.raises(BoundExceeded):
        evans_search(z4)


# -- group reports -----------------------------------------------------------------

def test_equality_parts_small_groups(z2, z3):
    assert all(p.equal and p.associative for p in equality_vs_associativity(z2).parts)
    assert all(not p.equal and not p.associative for p in equality_vs_associativity(z3).parts)


def test_equality_parts_all_small_groups():
    for n in range(1, 7):
        for G in groups(n):
            assert equality_vs_associativity(G).ok


def test_equality_rejects_non_group(ts3):
    assert equality_vs_associativity(ts3).error
