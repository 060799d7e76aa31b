"""Cayley-table quasigroups: evaluation, divisions, translations, nuclei.

Elements are the integers ``0..n-1``. Maps act on the right, so ``p.then(q)``
applies ``p`` first and ``q`` second, matching the postfix notation ``xAB``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

LEFT = "left"
RIGHT = "right"
MIDDLE = "middle"


class LatinError(ValueError):
    """Raised when a table is not a Latin square (or a perm not a bijection)."""


class Perm(tuple):
    """A bijection of ``{0..n-1}`` stored as its image tuple.

    Ordering and hashing are those of the image tuple, so sorting a list of
    perms gives the canonical lexicographic order.
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise LatinError(f"not a permutation: {images}")
        return super().__new__(cls, images)

    @classmethod
    def _trusted(cls, images):
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls._trusted(range(n))

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, x: int) -> int:
        return self[x]

    def then(self, other: "Perm") -> "Perm":
        """Apply ``self`` first, then ``other``."""
        if len(other) != len(self):
            raise ValueError("degree mismatch")
        return Perm._trusted(other[i] for i in self)

    def inverse(self) -> "Perm":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Perm._trusted(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def __repr__(self):
        return f"Perm({list(self)})"


def compose(*perms: Perm) -> Perm:
    """Left-to-right composite ``p1 p2 ... pk``."""
    out = perms[0]
    for p in perms[1:]:
        out = out.then(p)
    return out


@dataclass(frozen=True)
class Quasigroup:
    """A finite quasigroup given by its Cayley table ``rows[x][y] = x*y``.

    The constructor rejects anything that is not a Latin square.
    """

    rows: tuple = field()

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if n == 0:
            raise LatinError("empty table")
        full = set(range(n))
        for x, r in enumerate(rows):
            if len(r) != n:
                raise LatinError(f"row {x} has length {len(r)}, expected {n}")
            if set(r) != full:
                raise LatinError(f"row {x} is not a permutation of 0..{n - 1}")
        for y in range(n):
            if {r[y] for r in rows} != full:
                raise LatinError(f"column {y} is not a permutation of 0..{n - 1}")

    @classmethod
    def from_array(cls, table) -> "Quasigroup":
        return cls(tuple(tuple(r) for r in np.asarray(table).tolist()))

    @property
    def order(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def elements(self) -> range:
        return range(len(self.rows))

    @cached_property
    def array(self) -> np.ndarray:
        a = np.array(self.rows, dtype=np.intp)
        a.flags.writeable = False
        return a

    @cached_property
    def ldiv_rows(self) -> tuple:
        """``ldiv_rows[a][b] = a\\b``."""
        n = self.n
        out = [[0] * n for _ in range(n)]
        for a, r in enumerate(self.rows):
            for y, b in enumerate(r):
                out[a][b] = y
        return tuple(tuple(r) for r in out)

    @cached_property
    def rdiv_rows(self) -> tuple:
        """``rdiv_rows[a][b] = a/b``."""
        n = self.n
        out = [[0] * n for _ in range(n)]
        for x, r in enumerate(self.rows):
            for b, a in enumerate(r):
                out[a][b] = x
        return tuple(tuple(r) for r in out)

    @cached_property
    def ldiv_array(self) -> np.ndarray:
        return np.array(self.ldiv_rows, dtype=np.intp)

    @cached_property
    def rdiv_array(self) -> np.ndarray:
        return np.array(self.rdiv_rows, dtype=np.intp)

    def __str__(self):
        return "\n".join(" ".join(map(str, r)) for r in self.rows)


def _check(Q: Quasigroup, *xs: int):
    for x in xs:
        if not 0 <= x < Q.n:
            raise IndexError(f"element {x} out of range for order {Q.n}")


def mul(Q: Quasigroup, x: int, y: int) -> int:
    _check(Q, x, y)
    return Q.rows[x][y]


def divide(Q: Quasigroup, side: str, a: int, b: int) -> int:
    """``side='left'`` gives ``a\\b``; ``side='right'`` gives ``a/b``."""
    _check(Q, a, b)
    if side == LEFT:
        return Q.ldiv_rows[a][b]
    if side == RIGHT:
        return Q.rdiv_rows[a][b]
    raise ValueError(f"bad side {side!r}")


def translation(Q: Quasigroup, side: str, x: int) -> Perm:
    """``L_x: y -> x*y`` for ``side='left'``, ``R_x: y -> y*x`` for ``'right'``."""
    _check(Q, x)
    if side == LEFT:
        return Perm._trusted(Q.rows[x])
    if side == RIGHT:
        return Perm._trusted(r[x] for r in Q.rows)
    raise ValueError(f"bad side {side!r}")


def is_associative(Q: Quasigroup) -> Optional[tuple[int, int, int]]:
    """None if associative, else the lexicographically first failing ``(x, y, z)``."""
    T = Q.array
    bad = T[T] != T[:, T]  # [x,y,z]: (xy)z != x(yz)
    if not bad.any():
        return None
    x, y, z = np.unravel_index(np.argmax(bad), bad.shape)
    return int(x), int(y), int(z)


def associates(Q: Quasigroup) -> bool:
    return is_associative(Q) is None


@dataclass(frozen=True)
class LoopProfile:
    two_sided_identity: Optional[int]
    left_identities: frozenset
    right_identities: frozenset
    commutative: bool
    exponent_two: bool

    @property
    def is_loop(self) -> bool:
        return self.two_sided_identity is not None


def loop_profile(Q: Quasigroup) -> LoopProfile:
    T = Q.array
    ids = np.arange(Q.n)
    left = frozenset(int(a) for a in ids if (T[a] == ids).all())
    right = frozenset(int(a) for a in ids if (T[:, a] == ids).all())
    both = left & right
    e = min(both) if both else None
    exp2 = e is not None and bool((np.diagonal(T) == e).all())
    return LoopProfile(e, left, right, bool((T == T.T).all()), exp2)


def nucleus(Q: Quasigroup, kind: str) -> frozenset:
    """Left, middle or right nucleus as a set of elements (possibly empty).

    left:   a with a(xy) = (ax)y
    middle: a with x(ay) = (xa)y
    right:  a with (xy)a = x(ya)
    """
    T = Q.array
    if kind == LEFT:
        ok = T[:, T] == T[T]  # ok[a,x,y]: T[a,T[x,y]] == T[T[a,x],y]
        ok = ok.reshape(Q.n, -1).all(axis=1)
    elif kind == MIDDLE:
        # x(ay) vs (xa)y indexed [x,a,y]
        ok = (T[:, T] == T[T]).transpose(1, 0, 2).reshape(Q.n, -1).all(axis=1)
    elif kind == RIGHT:
        # (xy)a vs x(ya) indexed [x,y,a]
        ok = (T[T] == T[:, T]).transpose(2, 0, 1).reshape(Q.n, -1).all(axis=1)
    else:
        raise ValueError(f"bad nucleus kind {kind!r}")
    return frozenset(int(a) for a in np.flatnonzero(ok))


def tables_equal(Q1: Quasigroup, Q2: Quasigroup) -> bool:
    return Q1.rows == Q2.rows


# -- a few standard tables -------------------------------------------------

def cyclic_group(n: int) -> Quasigroup:
    return Quasigroup(tuple(tuple((x + y) % n for y in range(n)) for x in range(n)))


def direct_product(G: Quasigroup, H: Quasigroup) -> Quasigroup:
    """Componentwise product; the pair (g, h) is coded as ``g*|H| + h``."""
    m = H.n
    rows = []
    for a in range(G.n * m):
        g1, h1 = divmod(a, m)
        rows.append(tuple(G.rows[g1][b // m] * m + H.rows[h1][b % m]
                          for b in range(G.n * m)))
    return Quasigroup(tuple(rows))


def klein_four() -> Quasigroup:
    return Quasigroup(tuple(tuple(x ^ y for y in range(4)) for x in range(4)))


def symmetric_group_3() -> Quasigroup:
    """S3 acting on {0,1,2}; elements are its perms in lexicographic order."""
    from itertools import permutations

    perms = [Perm(p) for p in permutations(range(3))]
    index = {p: i for i, p in enumerate(perms)}
    return Quasigroup(tuple(tuple(index[p.then(q)] for q in perms) for p in perms))


def totally_symmetric_z3() -> Quasigroup:
    """x*y = -(x+y) mod 3: a quasigroup equal to all of its parastrophes."""
    return Quasigroup(tuple(tuple((-x - y) % 3 for y in range(3)) for x in range(3)))


def as_quasigroup(table: Sequence[Sequence[int]] | Quasigroup) -> Quasigroup:
    return table if isinstance(table, Quasigroup) else Quasigroup(tuple(map(tuple, table)))
