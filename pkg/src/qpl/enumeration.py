"""Exhaustive and seeded generation of Latin squares, loops and groups."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Optional

from .core import Quasigroup, associates
from .isotopy import BoundExceeded

MAX_ALL_LATIN = 5
MAX_LOOPS = 6
MAX_RANDOM = 32

KINDS = ("all_latin", "reduced_latin", "loops", "groups")


def _fill(n: int, reduced: bool) -> Iterator[tuple]:
    """Row-major cell-by-cell backtracking with row/column bitmasks."""
    full = (1 << n) - 1
    grid = [[-1] * n for _ in range(n)]
    rowmask = [0] * n
    colmask = [0] * n
    if reduced:
        for k in range(n):
            grid[0][k] = grid[k][0] = k
            rowmask[0] |= 1 << k
            colmask[0] |= 1 << k
            rowmask[k] |= 1 << k
            colmask[k] |= 1 << k
        cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    else:
        cells = [(i, j) for i in range(n) for j in range(n)]
    last = len(cells)

    def rec(k):
        if k == last:
            yield tuple(tuple(r) for r in grid)
            return
        i, j = cells[k]
        avail = full & ~(rowmask[i] | colmask[j])
        v = 0
        while avail:
            if avail & 1:
                bit = 1 << v
                grid[i][j] = v
                rowmask[i] |= bit
                colmask[j] |= bit
                yield from rec(k + 1)
                rowmask[i] &= ~bit
                colmask[j] &= ~bit
            avail >>= 1
            v += 1
        grid[i][j] = -1

    yield from rec(0)


def latin_squares(n: int) -> Iterator[Quasigroup]:
    """Every n x n Latin square once, lexicographic in row-major order."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > MAX_ALL_LATIN:
        raise BoundExceeded(f"exhaustive Latin squares only for n <= {MAX_ALL_LATIN}")
    for rows in _fill(n, reduced=False):
        yield Quasigroup(rows)


def loops(n: int) -> Iterator[Quasigroup]:
    """Latin squares whose first row and column are 0..n-1 (0 is the identity)."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > MAX_LOOPS:
        raise BoundExceeded(f"exhaustive loops only for n <= {MAX_LOOPS}")
    for rows in _fill(n, reduced=True):
        yield Quasigroup(rows)


def groups(n: int) -> Iterator[Quasigroup]:
    """Associative members of ``loops(n)``; isomorphic copies are all kept."""
    return (L for L in loops(n) if associates(L))


def random_quasigroup(n: int, seed: int) -> Quasigroup:
    """A Latin square that is a deterministic function of ``(n, seed)``.

    Rows are drawn one at a time as a perfect matching between columns and
    unused symbols, found by augmenting paths over shuffled candidate lists.
    A Latin rectangle always extends, so no row ever has to be redone.
    """
    if not 1 <= n <= MAX_RANDOM:
        raise BoundExceeded(f"random quasigroups only for 1 <= n <= {MAX_RANDOM}")
    rng = random.Random(f"qpl:{n}:{seed}")
    colused = [set() for _ in range(n)]
    rows = []
    for _ in range(n):
        cand = []
        for j in range(n):
            c = [v for v in range(n) if v not in colused[j]]
            rng.shuffle(c)
            cand.append(c)
        owner = {}  # symbol -> column

        def augment(j, seen):
            for v in cand[j]:
                if v in seen:
                    continue
                seen.add(v)
                if v not in owner or augment(owner[v], seen):
                    owner[v] = j
                    return True
            return False

        order = list(range(n))
        rng.shuffle(order)
        for j in order:
            if not augment(j, set()):  # pragma: no cover - Hall's condition
                raise RuntimeError("Latin rectangle failed to extend")
        row = [0] * n
        for v, j in owner.items():
            row[j] = v
            colused[j].add(v)
        rows.append(tuple(row))
    return Quasigroup(tuple(rows))


def sample_quasigroups(n: int, count: int, seed: int = 0) -> Iterator[Quasigroup]:
    for i in range(count):
        yield random_quasigroup(n, seed * 1_000_003 + i)


@dataclass(frozen=True)
class EnumerationSpec:
    order: int
    kind: str = "all_latin"
    seed: Optional[int] = None
    limit: Optional[int] = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")


def stream(spec: EnumerationSpec) -> Iterator[Quasigroup]:
    """Exhaustive stream, or ``limit`` seeded random squares when a seed is set."""
    if spec.seed is not None:
        if spec.kind != "all_latin":
            raise ValueError("sampling mode only draws general Latin squares")
        yield from sample_quasigroups(spec.order, spec.limit or 1, spec.seed)
        return
    gen = {
        "all_latin": latin_squares,
        "reduced_latin": loops,
        "loops": loops,
        "groups": groups,
    }[spec.kind](spec.order)
    for i, q in enumerate(gen):
        if spec.limit is not None and i >= spec.limit:
            return
        yield q
