"""Quasigroup identities over ``*``, ``\\`` and ``/``: parsing and finite checking.

Concrete syntax::

    identity := term "=" term
    term     := atom { op atom }          (one precedence level, left-assoc)
    atom     := var | "(" term ")" | "[" term "]" | "{" term "}"
    op       := "*" | "\\" | "/"
    var      := a single lowercase letter

``a\\b`` is the left division (the y with a*y = b) and ``a/b`` the right
division (the x with x*b = a).  Juxtaposition is not accepted.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import NamedTuple, Optional, Union

import numpy as np

from .core import Perm, Quasigroup, associates, tables_equal
from .parastrophe import Kind, parastrophe

MUL, LDIV, RDIV = "*", "\\", "/"
OPS = (MUL, LDIV, RDIV)
OPEN = {"(": ")", "[": "]", "{": "}"}
MAX_VARS = 6


class IdentityError(ValueError):
    pass


class ParseError(IdentityError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Term"
    right: "Term"

    def __str__(self):
        def wrap(t):
            return str(t) if isinstance(t, Var) else f"({t})"
        return f"{wrap(self.left)}{self.op}{wrap(self.right)}"


Term = Union[Var, BinOp]


def variables(t: Term, out: Optional[list] = None) -> list:
    """Variable names in order of first appearance."""
    out = [] if out is None else out
    if isinstance(t, Var):
        if t.name not in out:
            out.append(t.name)
    else:
        variables(t.left, out)
        variables(t.right, out)
    return out


def occurrences(t: Term) -> dict:
    if isinstance(t, Var):
        return {t.name: 1}
    counts = occurrences(t.left)
    for k, v in occurrences(t.right).items():
        counts[k] = counts.get(k, 0) + v
    return counts


@dataclass(frozen=True)
class Identity:
    lhs: Term
    rhs: Term

    @property
    def vars(self) -> tuple:
        return tuple(variables(self.rhs, variables(self.lhs)))

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> Optional[str]:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def term(self) -> Term:
        t = self.atom()
        while self.peek() in OPS:
            op = self.take()
            t = BinOp(op, t, self.atom())
        return t

    def atom(self) -> Term:
        ch = self.peek()
        start = self.pos
        if ch is None:
            raise ParseError("unexpected end of input", start)
        if ch in OPEN:
            self.take()
            t = self.term()
            close = self.peek()
            if close != OPEN[ch]:
                raise ParseError(f"expected {OPEN[ch]!r}, found {close!r}", self.pos)
            self.take()
            return t
        if "a" <= ch <= "z":
            self.take()
            nxt = self.text[self.pos] if self.pos < len(self.text) else ""
            if nxt.isalnum() or nxt == "_":
                raise ParseError("variables are single lowercase letters "
                                 "(juxtaposition needs an explicit '*')", self.pos)
            return Var(ch)
        raise ParseError(f"unexpected character {ch!r}", start)


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    if p.peek() is not None:
        raise ParseError(f"unexpected character {p.peek()!r}", p.pos)
    return t


def parse_identity(text: str) -> Identity:
    p = _Parser(text)
    lhs = p.term()
    if p.peek() != "=":
        raise ParseError(f"expected '=', found {p.peek()!r}", p.pos)
    p.take()
    rhs = p.term()
    if p.peek() is not None:
        raise ParseError(f"unexpected character {p.peek()!r}", p.pos)
    return Identity(lhs, rhs)


BUILTINS = {
    "assoc": "x*(y*z) = (x*y)*z",
    "comm": "x*y = y*x",
    "khalil1": r"x*{z\[(z/u)*v]} = {[x*(z\z)]/u}*v",
    "khalil2": r"x*{u\[(z/u)*v]} = {[x*(u\z)]/u}*v",
    "khalil3": r"x*{z\[(u/u)*v]} = {[x*(z\u)]/u}*v",
    "khalil4": r"x*[y\{[(y*y)/z]*u}] = [{x*[y\(y*y)]}/z]*u",
    "khalil5": r"x*[y\{[(y*z)/y]*u}] = [{x*[y\(y*z)]}/y]*u",
    "khalil6": r"x*[z\{[(y*y)/y]*u}] = [{x*[z\(y*y)]}/y]*u",
}
KHALIL = tuple(f"khalil{i}" for i in range(1, 7))


def builtin(name: str) -> Identity:
    try:
        return parse_identity(BUILTINS[name])
    except KeyError:
        raise IdentityError(f"unknown identity {name!r}") from None


def _tables(Q: Quasigroup, arrays: bool):
    if arrays:
        return {MUL: Q.array, LDIV: Q.ldiv_array, RDIV: Q.rdiv_array}
    return {MUL: Q.rows, LDIV: Q.ldiv_rows, RDIV: Q.rdiv_rows}


def evaluate_term(Q: Quasigroup, t: Term, asg: dict) -> int:
    tabs = _tables(Q, arrays=False)

    def ev(t):
        if isinstance(t, Var):
            try:
                v = asg[t.name]
            except KeyError:
                raise IdentityError(f"unbound variable {t.name!r}") from None
            if not 0 <= v < Q.n:
                raise IndexError(f"element {v} out of range for order {Q.n}")
            return v
        return tabs[t.op][ev(t.left)][ev(t.right)]

    return ev(t)


def _evaluate_all(tabs, t: Term, cols: dict) -> np.ndarray:
    if isinstance(t, Var):
        return cols[t.name]
    return tabs[t.op][_evaluate_all(tabs, t.left, cols), _evaluate_all(tabs, t.right, cols)]


def identity_holds(Q: Quasigroup, ident: Identity, max_vars: int = MAX_VARS
                   ) -> Optional[dict]:
    """None if the identity holds everywhere, else the first failing assignment.

    Assignments are ordered lexicographically with variables taken in order of
    first appearance (left side, then right side).
    """
    names = ident.vars
    if len(names) > max_vars:
        raise IdentityError(f"{len(names)} variables exceed the bound {max_vars}")
    n = Q.n
    grid = np.indices((n,) * len(names)).reshape(len(names), -1)
    cols = dict(zip(names, grid))
    tabs = _tables(Q, arrays=True)
    lhs = np.broadcast_to(_evaluate_all(tabs, ident.lhs, cols), grid.shape[1:])
    rhs = np.broadcast_to(_evaluate_all(tabs, ident.rhs, cols), grid.shape[1:])
    bad = lhs != rhs
    if not bad.any():
        return None
    i = int(np.argmax(bad))
    return {v: int(grid[j, i]) for j, v in enumerate(names)}


def holds(Q: Quasigroup, ident: Identity | str) -> bool:
    if isinstance(ident, str):
        ident = builtin(ident) if ident in BUILTINS else parse_identity(ident)
    return identity_holds(Q, ident) is None


def is_balanced(ident: Identity) -> bool:
    """Each variable occurs exactly once on each side."""
    left, right = occurrences(ident.lhs), occurrences(ident.rhs)
    return left.keys() == right.keys() and all(
        v == 1 for v in (*left.values(), *right.values()))


def khalil_suite(Q: Quasigroup, bound: int = 8) -> tuple:
    if Q.n > bound:
        from .isotopy import BoundExceeded
        raise BoundExceeded(f"order {Q.n} exceeds the identity-check bound {bound}")
    return tuple(identity_holds(Q, builtin(k)) is None for k in KHALIL)


# -- the generalized associative law with permutations -------------------------

class EvansWitness(NamedTuple):
    """Permutations for [(xP1*yP2)P3*zP4]P5 = [xQ1*(yQ2*zQ3)Q4]Q5."""

    P: tuple
    Q: tuple

    @classmethod
    def trivial(cls, n: int) -> "EvansWitness":
        i = Perm.identity(n)
        return cls((i,) * 5, (i,) * 5)


def evans_check(Q: Quasigroup, w: EvansWitness) -> bool:
    n = Q.n
    if len(w.P) != 5 or len(w.Q) != 5 or any(len(p) != n for p in (*w.P, *w.Q)):
        raise ValueError("witness must hold ten permutations of degree n")
    T = Q.array
    P = [np.asarray(p) for p in w.P]
    R = [np.asarray(p) for p in w.Q]
    x, y, z = np.indices((n, n, n)).reshape(3, -1)
    lhs = P[4][T[P[2][T[P[0][x], P[1][y]]], P[3][z]]]
    rhs = R[4][T[R[0][x], R[3][T[R[1][y], R[2][z]]]]]
    return bool((lhs == rhs).all())


def evans_from_isotopism(A: Perm, B: Perm, C: Perm) -> EvansWitness:
    """Witness for the isotope ``apply_isotopism(G, (A, B, C))`` of a group G.

    Rewriting associativity of G through ``x.y = (xA o yB)C^-1`` gives
    P = (A, B, C^-1 A, B, C^-1) and Q = (A, A, B, C^-1 B, C^-1).
    """
    Ci = C.inverse()
    return EvansWitness((A, B, Ci.then(A), B, Ci), (A, A, B, Ci.then(B), Ci))


def evans_search(Q: Quasigroup) -> Optional[EvansWitness]:
    """Exhaustive witness search, orders <= 3 only.

    Substituting x, y, z and cancelling Q5 lets P1 = P2 = P4 = Q5 = I
    without loss; P5 is then forced pointwise, leaving S_n^5 candidates.
    """
    n = Q.n
    if n > 3:
        from .isotopy import BoundExceeded
        raise BoundExceeded("the Evans-law search is offered for orders <= 3 only")
    T = Q.rows
    r = range(n)
    triples = list(product(r, r, r))
    perms = [Perm._trusted(p) for p in permutations(r)]
    I = Perm.identity(n)
    for P3 in perms:
        left = [T[P3[T[x][y]]][z] for x, y, z in triples]
        for Q1, Q2, Q3, Q4 in product(perms, repeat=4):
            P5 = [-1] * n
            ok = True
            for (x, y, z), a in zip(triples, left):
                b = T[Q1[x]][Q4[T[Q2[y]][Q3[z]]]]
                if P5[a] < 0:
                    P5[a] = b
                elif P5[a] != b:
                    ok = False
                    break
            if ok and sorted(P5) == list(r):
                return EvansWitness((I, I, P3, I, Perm._trusted(P5)), (Q1, Q2, Q3, Q4, I))
    return None


# -- group-level reports -------------------------------------------------------

DIVISION_KINDS = (Kind.PI3, Kind.PI4, Kind.PI5, Kind.PI6)


@dataclass
class KhalilParastrophes:
    results: dict           # kind -> six bools
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None and all(all(v) for v in self.results.values())


def khalil_parastrophes(G: Quasigroup) -> KhalilParastrophes:
    """Each of the four division parastrophes of a group obeys all six
    Khalil conditions."""
    if not associates(G):
        return KhalilParastrophes({}, "G is not associative")
    return KhalilParastrophes({k: khalil_suite(parastrophe(G, k)) for k in DIVISION_KINDS})


# part -> (left table kind, right table kind, kind whose associativity decides)
EQUALITY_PARTS = {
    1: (Kind.PI1, Kind.PI5, Kind.PI5),
    2: (Kind.PI2, Kind.PI3, Kind.PI3),
    3: (Kind.PI1, Kind.PI6, Kind.PI6),
    4: (Kind.PI2, Kind.PI4, Kind.PI4),
}


@dataclass
class EqualityPart:
    part: int
    equal: bool
    associative: bool

    @property
    def ok(self) -> bool:
        return self.equal == self.associative


@dataclass
class EqualityReport:
    parts: list
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None and all(p.ok for p in self.parts)


def equality_vs_associativity(G: Quasigroup) -> EqualityReport:
    """For a group: two parastrophes coincide iff the division one is associative."""
    if not associates(G):
        return EqualityReport([], "G is not associative")
    paras = {k: parastrophe(G, k) for k in Kind}
    return EqualityReport([
        EqualityPart(i, tables_equal(paras[a], paras[b]), associates(paras[c]))
        for i, (a, b, c) in EQUALITY_PARTS.items()
    ])
