"""The six parastrophes (conjugates) of a quasigroup and their translations.

Numbering used throughout the package, for ``x*y = z`` in the original:

    PI1  the operation itself          x PI1 y = z
    PI2  transpose  (theta*)           y PI2 x = z
    PI3  left division  (theta^-1)     x PI3 z = y      i.e. x PI3 z = x\\z
    PI4  right division (^-1 theta)    z PI4 y = x      i.e. z PI4 y = z/y
    PI5  (theta^-1)*                   z PI5 x = y      i.e. z PI5 x = x\\z
    PI6  (^-1 theta)*                  y PI6 z = x      i.e. y PI6 z = z/y
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .core import (LEFT, RIGHT, Perm, Quasigroup, loop_profile, tables_equal,
                   translation)


class Kind(enum.IntEnum):
    PI1 = 1
    PI2 = 2
    PI3 = 3
    PI4 = 4
    PI5 = 5
    PI6 = 6

    @property
    def label(self) -> str:
        return self.name.lower()


ALIASES = {
    "id": Kind.PI1,
    "star": Kind.PI2,
    "rinv": Kind.PI3,
    "linv": Kind.PI4,
    "rinv-star": Kind.PI5,
    "linv-star": Kind.PI6,
}


def parse_kind(name: str | int | Kind) -> Kind:
    if isinstance(name, Kind):
        return name
    if isinstance(name, int):
        return Kind(name)
    key = name.strip().lower()
    if key in ALIASES:
        return ALIASES[key]
    try:
        return Kind[key.upper()]
    except KeyError:
        raise ValueError(f"unknown parastrophe kind {name!r}") from None


def parastrophe(Q: Quasigroup, kind) -> Quasigroup:
    kind = parse_kind(kind)
    n = Q.n
    T, LD, RD = Q.rows, Q.ldiv_rows, Q.rdiv_rows
    r = range(n)
    if kind is Kind.PI1:
        return Q
    if kind is Kind.PI2:
        rows = tuple(tuple(T[x][y] for x in r) for y in r)
    elif kind is Kind.PI3:
        rows = LD
    elif kind is Kind.PI4:
        rows = RD
    elif kind is Kind.PI5:
        # table[z][x] = x\z
        rows = tuple(tuple(LD[x][z] for x in r) for z in r)
    else:
        # table[y][z] = z/y
        rows = tuple(tuple(RD[z][y] for z in r) for y in r)
    return Quasigroup(rows)


def all_parastrophes(Q: Quasigroup) -> dict:
    return {k: parastrophe(Q, k) for k in Kind}


def is_totally_symmetric(Q: Quasigroup) -> bool:
    return all(tables_equal(Q, parastrophe(Q, k)) for k in Kind)


class TranslationSymbol(NamedTuple):
    kind: Kind
    side: str


# R, L in the operation itself; R*, L* in the transpose; script R/L in the
# left-division parastrophe; blackboard R/L in the right-division one; and
# starred script / blackboard in PI5 / PI6.
SYMBOLS = {
    "R": TranslationSymbol(Kind.PI1, RIGHT),
    "L": TranslationSymbol(Kind.PI1, LEFT),
    "R*": TranslationSymbol(Kind.PI2, RIGHT),
    "L*": TranslationSymbol(Kind.PI2, LEFT),
    "calR": TranslationSymbol(Kind.PI3, RIGHT),
    "calL": TranslationSymbol(Kind.PI3, LEFT),
    "bbR": TranslationSymbol(Kind.PI4, RIGHT),
    "bbL": TranslationSymbol(Kind.PI4, LEFT),
    "calR*": TranslationSymbol(Kind.PI5, RIGHT),
    "calL*": TranslationSymbol(Kind.PI5, LEFT),
    "bbR*": TranslationSymbol(Kind.PI6, RIGHT),
    "bbL*": TranslationSymbol(Kind.PI6, LEFT),
}


def parastrophe_translation(Q: Quasigroup, sym, x: int) -> Perm:
    if isinstance(sym, str):
        sym = SYMBOLS[sym]
    return translation(parastrophe(Q, sym.kind), sym.side, x)


# (lhs symbol, rhs symbol, rhs inverted?)
TRANSLATION_IDENTITIES = [
    ("R*", "L", False),
    ("L*", "R", False),
    ("calL", "L", True),
    ("bbR", "R", True),
    ("calR*", "L", True),
    ("bbL*", "R", True),
    ("calL", "R*", True),
    ("bbR", "L*", True),
    ("calR*", "calL", False),
    ("bbL*", "bbR", False),
]


def identity_name(lhs: str, rhs: str, inverted: bool) -> str:
    return f"{lhs}_x = {rhs}_x{'^-1' if inverted else ''}"


@dataclass
class TranslationCheck:
    name: str
    ok: bool
    first_failure: Optional[int] = None


def check_translation_identities(Q: Quasigroup) -> list[TranslationCheck]:
    """Check the ten translation identities for every element.

    Each entry reports pass/fail plus the first ``x`` at which it fails.
    """
    paras = all_parastrophes(Q)

    def tr(sym, x):
        s = SYMBOLS[sym]
        return translation(paras[s.kind], s.side, x)

    out = []
    for lhs, rhs, inv in TRANSLATION_IDENTITIES:
        fail = None
        for x in Q.elements():
            want = tr(rhs, x)
            if inv:
                want = want.inverse()
            if tr(lhs, x) != want:
                fail = x
                break
        out.append(TranslationCheck(identity_name(lhs, rhs, inv), fail is None, fail))
    return out


@dataclass
class ParastropheLoopReport:
    """Loop-ness of the parastrophes of ``Q`` against the expected pattern."""

    is_loop: bool
    exponent_two: bool
    transpose_is_loop: bool
    left_identity: dict     # kind -> sorted left identities
    right_identity: dict
    loops: dict             # kind -> bool
    claims: dict            # claim -> bool

    @property
    def ok(self) -> bool:
        return all(self.claims.values())


def parastrophe_loop_profile(Q: Quasigroup) -> ParastropheLoopReport:
    base = loop_profile(Q)
    profs = {k: loop_profile(parastrophe(Q, k)) for k in Kind}
    division = (Kind.PI3, Kind.PI4, Kind.PI5, Kind.PI6)
    claims = {"transpose loop iff loop": profs[Kind.PI2].is_loop == base.is_loop}
    if base.is_loop:
        e = base.two_sided_identity
        for k in (Kind.PI3, Kind.PI6):
            claims[f"{k.label} has left identity"] = e in profs[k].left_identities
        for k in (Kind.PI4, Kind.PI5):
            claims[f"{k.label} has right identity"] = e in profs[k].right_identities
        for k in division:
            claims[f"{k.label} loop iff exponent 2"] = profs[k].is_loop == base.exponent_two
    return ParastropheLoopReport(
        is_loop=base.is_loop,
        exponent_two=base.exponent_two,
        transpose_is_loop=profs[Kind.PI2].is_loop,
        left_identity={k: sorted(p.left_identities) for k, p in profs.items()},
        right_identity={k: sorted(p.right_identities) for k, p in profs.items()},
        loops={k: p.is_loop for k, p in profs.items()},
        claims=claims,
    )
