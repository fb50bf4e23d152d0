"""The ``.gem`` text format.

::

    # comment
    n p
    <c-neighbours of vertex 1 for c = 0..n>
    ...
    <c-neighbours of vertex p>
"""

from __future__ import annotations

import os

from .errors import GemFormatError
from .gem import Gem


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_gem(text: str) -> Gem:
    lines = list(_content_lines(text))
    if not lines:
        raise GemFormatError("empty gem file", 1)
    head_no, head = lines[0]
    try:
        n, p = (int(t) for t in head.split())
    except ValueError:
        raise GemFormatError("header must be two integers 'n p'", head_no) from None
    if n < 1 or p < 2 or p % 2:
        raise GemFormatError(f"invalid header n={n} p={p}", head_no)
    rows = lines[1:]
    if len(rows) != p:
        where = rows[p][0] if len(rows) > p else (rows[-1][0] if rows else head_no)
        raise GemFormatError(f"expected {p} vertex rows, found {len(rows)}", where)
    table = {}
    for v, (lineno, line) in enumerate(rows, start=1):
        try:
            entries = [int(t) for t in line.split()]
        except ValueError:
            raise GemFormatError("non-integer entry", lineno) from None
        if len(entries) != n + 1:
            raise GemFormatError(f"expected {n + 1} entries, found {len(entries)}", lineno)
        for c, w in enumerate(entries):
            if not 1 <= w <= p:
                raise GemFormatError(f"colour {c}: neighbour {w} outside 1..{p}", lineno)
            if w == v:
                raise GemFormatError(f"colour {c}: vertex {v} is its own neighbour", lineno)
        table[v] = (lineno, entries)
    for v, (lineno, entries) in table.items():
        for c, w in enumerate(entries):
            if table[w][1][c] != v:
                raise GemFormatError(
                    f"colour {c}: {v} -> {w} but {w} -> {table[w][1][c]}", lineno
                )
    adj = [[table[v][1][c] for v in range(1, p + 1)] for c in range(n + 1)]
    return Gem(n, p, adj)


def format_gem(G: Gem) -> str:
    out = [f"{G.n} {G.p}"]
    out.extend(" ".join(map(str, row)) for row in G.rows())
    return "\n".join(out) + "\n"


def read_gem(path: str | os.PathLike) -> Gem:
    with open(path, encoding="utf-8") as fh:
        return parse_gem(fh.read())


def write_gem(G: Gem, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_gem(G))
