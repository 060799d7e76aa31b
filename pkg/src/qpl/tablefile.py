"""Plain-text table files.

    # comment lines start with '#'
    3
    0 1 2
    1 2 0
    2 0 1

The first non-comment line holds the order n, followed by n rows of n
whitespace-separated integers in [0, n).  ``write_table`` emits the canonical
form: no comments, single spaces, trailing newline.
"""
from __future__ import annotations

from pathlib import Path

from .core import Perm, Quasigroup


class TableFileError(ValueError):
    def __init__(self, msg: str, line: int, col: int = 1):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


def _tokens(text: str):
    """Yield ``(lineno, [(col, token), ...])`` for every content line."""
    for lineno, raw in enumerate(text.splitlines(), 1):
        if raw.lstrip().startswith("#") or not raw.strip():
            continue
        toks = []
        col = 0
        for tok in raw.split():
            col = raw.index(tok, col)
            toks.append((col + 1, tok))
            col += len(tok)
        yield lineno, toks


def _int(tok: str, line: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise TableFileError(f"expected an integer, found {tok!r}", line, col) from None


def parse_table(text: str) -> Quasigroup:
    lines = list(_tokens(text))
    if not lines:
        raise TableFileError("missing order header", 1)
    hline, htoks = lines[0]
    if len(htoks) != 1:
        raise TableFileError("header must be a single integer (the order)", hline)
    n = _int(htoks[0][1], hline, htoks[0][0])
    if n < 1:
        raise TableFileError("order must be positive", hline, htoks[0][0])
    body = lines[1:]
    if len(body) != n:
        where = body[n][0] if len(body) > n else (body[-1][0] if body else hline)
        raise TableFileError(f"expected {n} rows, found {len(body)}", where)
    rows = []
    seen_cols = [dict() for _ in range(n)]
    for x, (line, toks) in enumerate(body):
        if len(toks) != n:
            raise TableFileError(f"expected {n} entries, found {len(toks)}", line)
        row = []
        for y, (col, tok) in enumerate(toks):
            v = _int(tok, line, col)
            if not 0 <= v < n:
                raise TableFileError(f"entry {v} outside 0..{n - 1}", line, col)
            if v in row:
                raise TableFileError(f"entry {v} repeats in row {x}", line, col)
            if v in seen_cols[y]:
                raise TableFileError(
                    f"entry {v} repeats in column {y} (first in row {seen_cols[y][v]})",
                    line, col)
            seen_cols[y][v] = x
            row.append(v)
        rows.append(tuple(row))
    return Quasigroup(tuple(rows))


def read_table(path) -> Quasigroup:
    return parse_table(Path(path).read_text())


def format_table(Q: Quasigroup) -> str:
    return f"{Q.n}\n" + "".join(" ".join(map(str, r)) + "\n" for r in Q.rows)


def write_table(Q: Quasigroup, path) -> None:
    Path(path).write_text(format_table(Q))


def format_perm(p: Perm) -> str:
    return " ".join(map(str, p))


def parse_perms(text: str) -> list[Perm]:
    """One permutation per content line (used for Evans witnesses)."""
    out = []
    for line, toks in _tokens(text):
        images = [_int(t, line, c) for c, t in toks]
        try:
            out.append(Perm(images))
        except ValueError as exc:
            raise TableFileError(str(exc), line) from None
    return out
