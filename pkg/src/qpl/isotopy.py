"""Isotopisms, isotopy/isomorphism search and the isotopy-based criteria.

An isotopism ``(A, B, C)`` from ``(G, .)`` to ``(H, o)`` satisfies
``xA o yB = (x.y)C`` for all x, y.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterator, NamedTuple, Optional

from .core import (LEFT, RIGHT, Perm, Quasigroup, associates, loop_profile,
                   nucleus, translation)
from .parastrophe import Kind, SYMBOLS, parastrophe

DEFAULT_SEARCH_BOUND = 6


class BoundExceeded(RuntimeError):
    """An exhaustive search was asked for an order above its bound."""


class Isotopism(NamedTuple):
    A: Perm
    B: Perm
    C: Perm

    @classmethod
    def identity(cls, n: int) -> "Isotopism":
        i = Perm.identity(n)
        return cls(i, i, i)

    @property
    def degree(self) -> int:
        return len(self.A)

    def inverse(self) -> "Isotopism":
        return Isotopism(self.A.inverse(), self.B.inverse(), self.C.inverse())

    def then(self, other: "Isotopism") -> "Isotopism":
        return Isotopism(self.A.then(other.A), self.B.then(other.B), self.C.then(other.C))

    def shape(self) -> Optional[str]:
        """'(A,I,A)' or '(I,B,B)' when the triple has one of those forms."""
        if self.B.is_identity() and self.A == self.C:
            return "(A,I,A)"
        if self.A.is_identity() and self.B == self.C:
            return "(I,B,B)"
        return None


def _degrees(T: Isotopism, *qs: Quasigroup):
    n = qs[0].n
    if any(q.n != n for q in qs) or any(len(p) != n for p in T):
        raise ValueError("degree mismatch")


def is_isotopism(T: Isotopism, Q1: Quasigroup, Q2: Quasigroup) -> bool:
    _degrees(T, Q1, Q2)
    A, B, C = T
    T1, T2 = Q1.rows, Q2.rows
    r = range(Q1.n)
    return all(T2[A[x]][B[y]] == C[T1[x][y]] for x in r for y in r)


def is_isotopism_by_translations(T: Isotopism, Q1: Quasigroup, Q2: Quasigroup) -> bool:
    """Same question via ``R'_{xB} = A^-1 R_x C`` for every x."""
    _degrees(T, Q1, Q2)
    A, B, C = T
    Ainv = A.inverse()
    return all(translation(Q2, RIGHT, B[x]) == Ainv.then(translation(Q1, RIGHT, x)).then(C)
               for x in Q1.elements())


def apply_isotopism(Q: Quasigroup, T: Isotopism) -> Quasigroup:
    """The isotope ``u o v = (uA^-1 . vB^-1)C``."""
    _degrees(T, Q)
    Ai, Bi, C = T.A.inverse(), T.B.inverse(), T.C
    r = range(Q.n)
    return Quasigroup(tuple(tuple(C[Q.rows[Ai[u]][Bi[v]]] for v in r) for u in r))


def is_isomorphism(phi: Perm, Q1: Quasigroup, Q2: Quasigroup) -> bool:
    return is_isotopism(Isotopism(phi, phi, phi), Q1, Q2)


def _bound(n: int, bound: Optional[int]):
    limit = DEFAULT_SEARCH_BOUND if bound is None else bound
    if n > limit:
        raise BoundExceeded(f"order {n} exceeds search bound {limit}")


def isotopisms(Q1: Quasigroup, Q2: Quasigroup, bound: Optional[int] = None
               ) -> Iterator[Isotopism]:
    """All isotopisms ``Q1 -> Q2`` in lexicographic (A, B) order.

    For each A, B is built column by column; C is forced by
    ``C(x.y) = xA o yB`` and must stay well defined and injective.
    """
    n = Q1.n
    if Q2.n != n:
        return
    _bound(n, bound)
    T1, T2 = Q1.rows, Q2.rows
    r = range(n)
    for A in permutations(r):
        rowsA = [T2[a] for a in A]
        B = [-1] * n
        usedB = [False] * n
        C = [-1] * n
        Cinv = [-1] * n

        def extend(y):
            if y == n:
                yield Isotopism(Perm._trusted(A), Perm._trusted(B), Perm._trusted(C))
                return
            for b in r:
                if usedB[b]:
                    continue
                newly = []
                ok = True
                for x in r:
                    c = T1[x][y]
                    val = rowsA[x][b]
                    cur = C[c]
                    if cur < 0:
                        if Cinv[val] >= 0:
                            ok = False
                            break
                        C[c] = val
                        Cinv[val] = c
                        newly.append(c)
                    elif cur != val:
                        ok = False
                        break
                if ok:
                    usedB[b] = True
                    B[y] = b
                    yield from extend(y + 1)
                    usedB[b] = False
                    B[y] = -1
                for c in newly:
                    Cinv[C[c]] = -1
                    C[c] = -1

        yield from extend(0)


def find_isotopism(Q1: Quasigroup, Q2: Quasigroup, bound: Optional[int] = None
                   ) -> Optional[Isotopism]:
    return next(isotopisms(Q1, Q2, bound), None)


def find_isotopism_bruteforce(Q1: Quasigroup, Q2: Quasigroup) -> Optional[Isotopism]:
    """Plain scan over S_n x S_n with C forced pointwise; test oracle."""
    n = Q1.n
    if Q2.n != n:
        return None
    r = range(n)
    for A in permutations(r):
        for B in permutations(r):
            C = [-1] * n
            ok = True
            for x in r:
                for y in r:
                    c, val = Q1.rows[x][y], Q2.rows[A[x]][B[y]]
                    if C[c] < 0:
                        C[c] = val
                    elif C[c] != val:
                        ok = False
                        break
                if not ok:
                    break
            if ok and sorted(C) == list(r):
                return Isotopism(Perm(A), Perm(B), Perm(C))
    return None


def isomorphisms(Q1: Quasigroup, Q2: Quasigroup, bound: Optional[int] = 8
                 ) -> Iterator[Perm]:
    """All isomorphisms ``Q1 -> Q2`` in lexicographic order.

    Backtracking on the smallest unassigned point; every assignment is
    closed under ``phi(x.y) = phi(x) o phi(y)`` before branching again.
    """
    n = Q1.n
    if Q2.n != n:
        return
    if bound is not None and n > bound:
        raise BoundExceeded(f"order {n} exceeds search bound {bound}")
    T1, T2 = Q1.rows, Q2.rows

    def close(phi, inv):
        done = False
        while not done:
            done = True
            dom = [x for x in range(n) if phi[x] >= 0]
            for x in dom:
                rx, sx = T1[x], T2[phi[x]]
                for y in dom:
                    z, w = rx[y], sx[phi[y]]
                    if phi[z] < 0:
                        if inv[w] >= 0:
                            return False
                        phi[z] = w
                        inv[w] = z
                        done = False
                    elif phi[z] != w:
                        return False
        return True

    def search(phi, inv):
        try:
            x = phi.index(-1)
        except ValueError:
            yield Perm._trusted(phi)
            return
        for w in range(n):
            if inv[w] >= 0:
                continue
            p, q = phi[:], inv[:]
            p[x] = w
            q[w] = x
            if close(p, q):
                yield from search(p, q)

    yield from search([-1] * n, [-1] * n)


def find_isomorphism(Q1: Quasigroup, Q2: Quasigroup, bound: Optional[int] = 8
                     ) -> Optional[Perm]:
    return next(isomorphisms(Q1, Q2, bound), None)


def find_isomorphism_scan(Q1: Quasigroup, Q2: Quasigroup) -> Optional[Perm]:
    """n!-scan oracle for ``find_isomorphism``."""
    if Q1.n != Q2.n:
        return None
    r = range(Q1.n)
    T1, T2 = Q1.rows, Q2.rows
    for phi in permutations(r):
        if all(T2[phi[x]][phi[y]] == phi[T1[x][y]] for x in r for y in r):
            return Perm(phi)
    return None


def random_perm(n: int, rng: random.Random) -> Perm:
    p = list(range(n))
    rng.shuffle(p)
    return Perm._trusted(p)


# -- associativity through the four triple families ---------------------------

# (name, translation symbol, which slot is I, source kind, target kind)
FAMILIES = (
    ("eq1", "calR", "B", Kind.PI1, Kind.PI5),
    ("eq2", "calR", "A", Kind.PI2, Kind.PI3),
    ("eq3", "bbL", "A", Kind.PI1, Kind.PI6),
    ("eq4", "bbL", "B", Kind.PI2, Kind.PI4),
)


def family_triple(Q: Quasigroup, family: str, s: int) -> Isotopism:
    """The member at ``s`` of one of the four families.

    eq1: (calR_s, I, calR_s)  Q -> PI5      eq2: (I, calR_s, calR_s)  PI2 -> PI3
    eq3: (I, bbL_s, bbL_s)    Q -> PI6      eq4: (bbL_s, I, bbL_s)    PI2 -> PI4
    where calR_s is the right translation of PI3 and bbL_s the left
    translation of PI4.
    """
    name, sym, unit, _, _ = next(f for f in FAMILIES if f[0] == family)
    s_ = SYMBOLS[sym]
    P = translation(parastrophe(Q, s_.kind), s_.side, s)
    I = Perm.identity(Q.n)
    return Isotopism(P, I, P) if unit == "B" else Isotopism(I, P, P)


@dataclass
class FamilyResult:
    family: str
    source: Kind
    target: Kind
    all_isotopisms: bool
    first_failure: Optional[int]
    shapes_ok: bool


@dataclass
class AssociativityFamilies:
    associative: bool
    families: list = field(default_factory=list)

    @property
    def all_families(self) -> bool:
        return all(f.all_isotopisms for f in self.families)

    @property
    def ok(self) -> bool:
        """All four families hold exactly when the table is associative,
        family by family, and every triple has shape (A,I,A) or (I,B,B)."""
        return (self.all_families == self.associative
                and all(f.all_isotopisms == self.associative for f in self.families)
                and all(f.shapes_ok for f in self.families))


def associativity_families(Q: Quasigroup) -> AssociativityFamilies:
    paras = {k: parastrophe(Q, k) for k in Kind}
    out = AssociativityFamilies(associates(Q))
    for name, _, unit, src, dst in FAMILIES:
        fail = None
        shapes = True
        for s in Q.elements():
            T = family_triple(Q, name, s)
            want = "(A,I,A)" if unit == "B" else "(I,B,B)"
            shapes &= T.shape() == want or T.A == T.B == T.C
            if fail is None and not is_isotopism(T, paras[src], paras[dst]):
                fail = s
        out.families.append(FamilyResult(name, src, dst, fail is None, fail, shapes))
    return out


# -- nucleus criterion for loop isotopes ------------------------------------

@dataclass
class NucleusCase:
    case: str           # "C=B" or "C=A"
    isomorphism: bool   # A (resp. B) is an isomorphism G -> H
    in_nucleus: bool    # eB in right nucleus (resp. eA in left nucleus)

    @property
    def ok(self) -> bool:
        return self.isomorphism == self.in_nucleus


@dataclass
class NucleusReport:
    cases: list = field(default_factory=list)
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None and all(c.ok for c in self.cases)


def nucleus_criterion(G: Quasigroup, H: Quasigroup, T: Isotopism) -> NucleusReport:
    """For a loop G and an isotopism (A,B,C): G -> H with C = B or C = A.

    C = B: A is an isomorphism  <=>  eB in the right nucleus of H.
    C = A: B is an isomorphism  <=>  eA in the left nucleus of H.
    """
    e = loop_profile(G).two_sided_identity
    if e is None:
        return NucleusReport(error="G has no two-sided identity")
    if G.n != H.n or any(len(p) != G.n for p in T):
        return NucleusReport(error="degree mismatch")
    if not is_isotopism(T, G, H):
        return NucleusReport(error="triple is not an isotopism G -> H")
    rep = NucleusReport()
    if T.C == T.B:
        rep.cases.append(NucleusCase("C=B", is_isomorphism(T.A, G, H),
                                     T.B[e] in nucleus(H, RIGHT)))
    if T.C == T.A:
        rep.cases.append(NucleusCase("C=A", is_isomorphism(T.B, G, H),
                                     T.A[e] in nucleus(H, LEFT)))
    if not rep.cases:
        rep.error = "triple has neither C = B nor C = A"
    return rep


def sample_nucleus_triple(G: Quasigroup, case: str, rng: random.Random) -> Isotopism:
    """A random (A,B,B) or (A,B,A) triple on G's carrier.

    Half the draws tie the free component to the other through a translation
    of G (B = R_k A, resp. A = L_k B) so that both verdicts get exercised.
    """
    n = G.n
    P = random_perm(n, rng)
    if rng.random() < 0.5:
        k = rng.randrange(n)
        side = RIGHT if case == "C=B" else LEFT
        Q = translation(G, side, k).then(P)
    else:
        Q = random_perm(n, rng)
    if case == "C=B":
        return Isotopism(P, Q, Q)
    return Isotopism(Q, P, Q)


# -- parastrophes of a group isotope ----------------------------------------

@dataclass
class GroupIsotopeReport:
    isotopic: dict = field(default_factory=dict)   # kind -> bool
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None and all(self.isotopic.values())


def parastrophes_isotopic_to_group(Q: Quasigroup, G: Quasigroup,
                                   bound: Optional[int] = None) -> GroupIsotopeReport:
    """If Q is isotopic to the group G, every parastrophe of Q is as well."""
    if not associates(G):
        return GroupIsotopeReport(error="G is not associative")
    if find_isotopism(Q, G, bound) is None:
        return GroupIsotopeReport(error="Q is not isotopic to G")
    rep = GroupIsotopeReport()
    for k in Kind:
        rep.isotopic[k] = find_isotopism(parastrophe(Q, k), G, bound) is not None
    return rep


# -- isotopy-isomorphy for the four families on a group ------------------------

# family -> which half of the nucleus criterion applies
ISOMORPHY_CASES = {"eq1": "C=A", "eq2": "C=B", "eq3": "C=B", "eq4": "C=A"}


@dataclass
class IsomorphyPart:
    family: str
    equal: bool             # source and target tables coincide (I is an isomorphism)
    all_nuclear: bool       # every family member passes the nucleus test
    associative: bool       # the target parastrophe is associative
    criterion_ok: bool      # the nucleus criterion held for every member

    @property
    def ok(self) -> bool:
        return self.criterion_ok and self.equal == self.all_nuclear == self.associative


@dataclass
class IsomorphyReport:
    parts: list = field(default_factory=list)
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None and all(p.ok for p in self.parts)


def isotopy_isomorphy(G: Quasigroup) -> IsomorphyReport:
    """For a group G, run every member of each family through the nucleus
    criterion: the two parastrophes coincide exactly when the target one is
    associative."""
    if not associates(G):
        return IsomorphyReport(error="G is not associative")
    paras = {k: parastrophe(G, k) for k in Kind}
    rep = IsomorphyReport()
    for name, _, _, src, dst in FAMILIES:
        case = ISOMORPHY_CASES[name]
        nuclear, crit = True, True
        for s in G.elements():
            r = nucleus_criterion(paras[src], paras[dst], family_triple(G, name, s))
            c = next((c for c in r.cases if c.case == case), None)
            if r.error is not None or c is None:
                crit = False
                continue
            crit &= c.ok
            nuclear &= c.in_nucleus
        rep.parts.append(IsomorphyPart(
            name, paras[src] == paras[dst], nuclear, associates(paras[dst]), crit))
    return rep
