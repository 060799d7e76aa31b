"""Automorphism groups, holomorphs, and parastrophes of holomorphs.

The holomorph of Q lives on Aut(Q) x Q with

    (a, x) o (b, y) = (ab, xb * y)

where ``ab`` applies ``a`` first and ``xb`` is the image of x under b.  The
pair ``(i, x)`` (i an index into the canonically ordered Aut(Q)) is coded as
the integer ``i*n + x``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import Perm, Quasigroup, associates, tables_equal
from .isotopy import BoundExceeded, isomorphisms
from .parastrophe import Kind, parastrophe

DEFAULT_HOLOMORPH_BOUND = 200
DEFAULT_AUT_BOUND = 8


@dataclass(frozen=True)
class AutomorphismGroup:
    perms: tuple  # lexicographic by image tuple; identity first

    def __len__(self):
        return len(self.perms)

    def __iter__(self):
        return iter(self.perms)

    def __getitem__(self, i) -> Perm:
        return self.perms[i]

    def index(self, p: Perm) -> int:
        return self._index[p]

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {p: i for i, p in enumerate(self.perms)}
            object.__setattr__(self, "_idx", idx)
        return idx


def automorphism_group(Q: Quasigroup, bound: Optional[int] = DEFAULT_AUT_BOUND
                       ) -> AutomorphismGroup:
    return AutomorphismGroup(tuple(isomorphisms(Q, Q, bound)))


def encode(aut_index: int, point: int, n: int) -> int:
    return aut_index * n + point


def decode(code: int, n: int) -> tuple[int, int]:
    return divmod(code, n)


def build_holomorph(Q: Quasigroup, aut: Optional[AutomorphismGroup] = None,
                    bound: int = DEFAULT_HOLOMORPH_BOUND) -> Quasigroup:
    if aut is None:
        aut = automorphism_group(Q)
    n, m = Q.n, len(aut)
    if n * m > bound:
        raise BoundExceeded(f"holomorph order {n * m} exceeds bound {bound}")
    comp = [[aut.index(a.then(b)) for b in aut] for a in aut]
    T = Q.rows
    rows = []
    for i in range(m):
        ci = comp[i]
        for x in range(n):
            row = []
            for j, b in enumerate(aut.perms):
                rx = T[b[x]]
                base = ci[j] * n
                row.extend(base + rx[y] for y in range(n))
            rows.append(tuple(row))
    return Quasigroup(tuple(rows))


def holomorph_order(Q: Quasigroup) -> int:
    return Q.n * len(automorphism_group(Q))


def _apply(Q: Quasigroup, kinds) -> Quasigroup:
    for k in kinds:
        Q = parastrophe(Q, k)
    return Q


# How the holomorph of the k-th parastrophe is re-parastrophed before being
# compared with the k-th parastrophe of the holomorph; kinds apply in order.
INTERCHANGE = {
    Kind.PI2: (Kind.PI2,),
    Kind.PI3: (Kind.PI3,),
    Kind.PI4: (Kind.PI4,),
    Kind.PI5: (Kind.PI3, Kind.PI2),
    Kind.PI6: (Kind.PI4, Kind.PI2),
}

# Same for the group case; the first two composites differ from INTERCHANGE.
GROUP_INTERCHANGE = {
    Kind.PI3: (Kind.PI3, Kind.PI2),
    Kind.PI4: (Kind.PI4, Kind.PI2),
    Kind.PI5: (Kind.PI3, Kind.PI2),
    Kind.PI6: (Kind.PI4, Kind.PI2),
}


@dataclass
class InterchangeCase:
    kind: Kind
    lhs: bool           # the two holomorph tables coincide
    rhs: bool           # the stated condition on Q
    same_aut: bool      # Aut(Q) == Aut(parastrophe(Q, kind))

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class InterchangeReport:
    order: int
    holomorph_order: int
    cases: list = field(default_factory=list)
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None and all(c.ok for c in self.cases)


def _compare(Q, recipe, rhs_of, bound) -> InterchangeReport:
    aut = automorphism_group(Q)
    try:
        H = build_holomorph(Q, aut, bound)
    except BoundExceeded as exc:
        return InterchangeReport(Q.n, Q.n * len(aut), error=str(exc))
    rep = InterchangeReport(Q.n, H.n)
    for k, kinds in recipe.items():
        P = parastrophe(Q, k)
        aut_p = automorphism_group(P)
        lhs_table = parastrophe(H, k)
        rhs_table = _apply(build_holomorph(P, aut_p, bound), kinds)
        rep.cases.append(InterchangeCase(k, tables_equal(lhs_table, rhs_table),
                                         rhs_of(k, P), aut_p == aut))
    return rep


def holomorph_interchange(Q: Quasigroup, bound: int = DEFAULT_HOLOMORPH_BOUND
                          ) -> InterchangeReport:
    """For k = PI2..PI6: the k-parastrophe of Hol(Q) equals the prescribed
    re-parastrophe of Hol(k-parastrophe of Q)  <=>  Q equals its k-parastrophe."""
    return _compare(Q, INTERCHANGE, lambda k, P: tables_equal(Q, P), bound)


def holomorph_associativity(G: Quasigroup, bound: int = DEFAULT_HOLOMORPH_BOUND
                            ) -> InterchangeReport:
    """For a group G and k = PI3..PI6: the holomorph table comparison holds
    <=> the k-parastrophe of G is associative."""
    if not associates(G):
        return InterchangeReport(G.n, 0, error="G is not associative")
    return _compare(G, GROUP_INTERCHANGE, lambda k, P: associates(P), bound)
