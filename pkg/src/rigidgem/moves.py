"""Dipoles, blobs and fusion.

Deleting vertices renumbers the survivors compactly in ascending order of
their old labels; inserted vertices are appended as ``p + 1, p + 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import BadType, GemError, InvalidAttachment, NotSeparated, StaleDipole
from .gem import Edge, Gem, hat, residue_label


@dataclass(frozen=True, order=True)
class Dipole:
    x: int
    y: int
    colours: frozenset

    @property
    def k(self) -> int:
        return len(self.colours)

    def __str__(self):
        cols = ",".join(map(str, sorted(self.colours)))
        return f"{self.k}-dipole ({self.x},{self.y}) colours {{{cols}}}"


def _mutable(G: Gem) -> list[list[int]]:
    return [list(row) for row in G.adj]


def _freeze(n: int, tables: list[list[int]], removed: Iterable[int] = ()) -> Gem:
    """Drop ``removed`` vertices and renumber the rest ascending."""
    removed = set(removed)
    p = len(tables[0]) - 1
    if not removed:
        return Gem(n, p, [row[1:] for row in tables])
    keep = [v for v in range(1, p + 1) if v not in removed]
    new = {v: i for i, v in enumerate(keep, start=1)}
    return Gem(n, len(keep), [[new[row[v]] for v in keep] for row in tables])


def classify_dipole(G: Gem, x: int, y: int) -> Dipole | None:
    if x == y:
        raise GemError("a dipole needs two distinct vertices")
    joined = G.joining_colours(x, y)
    if not joined or len(joined) > G.n:
        return None
    rest = [c for c in G.colours if c not in joined]
    if residue_label(G, rest, x) == residue_label(G, rest, y):
        return None
    return Dipole(min(x, y), max(x, y), joined)


def all_dipoles(G: Gem) -> list[Dipole]:
    seen = set()
    out = []
    for x in G.vertices:
        for row in G.adj:
            y = row[x]
            if x < y and y not in seen:
                seen.add(y)
                d = classify_dipole(G, x, y)
                if d is not None:
                    out.append(d)
        seen.clear()
    return sorted(out)


def find_dipoles(G: Gem, k: int) -> list[Dipole]:
    if not 1 <= k <= G.n:
        raise BadType(f"dipole type must be in 1..{G.n}, got {k}")
    return [d for d in all_dipoles(G) if d.k == k]


def cancel_dipole(G: Gem, d: Dipole) -> Gem:
    current = classify_dipole(G, d.x, d.y) if d.x != d.y else None
    if current is None or current.colours != frozenset(d.colours):
        raise StaleDipole(f"({d.x},{d.y}) is not a dipole on {sorted(d.colours)}")
    t = _mutable(G)
    for c in G.colours:
        if c in current.colours:
            continue
        a, b = t[c][d.x], t[c][d.y]
        t[c][a] = b
        t[c][b] = a
    return _freeze(G.n, t, (d.x, d.y))


def add_blob(G: Gem, e: Edge) -> Gem:
    """Insert an n-dipole on ``e``: ``e.v`` joins the first new vertex."""
    c = e.c
    if not 0 <= c <= G.n or not 1 <= e.v <= G.p:
        raise GemError(f"no edge {e}")
    u = e.v
    w = G.adj[c][u]
    a, b = G.p + 1, G.p + 2
    t = [row + [0, 0] for row in _mutable(G)]
    for i in G.colours:
        if i == c:
            t[i][u], t[i][a] = a, u
            t[i][b], t[i][w] = w, b
        else:
            t[i][a], t[i][b] = b, a
    return _freeze(G.n, t)


def add_dipole(G: Gem, colours: Iterable[int], attachment: Mapping[int, int]) -> Gem:
    """Insert a dipole ``(p+1, p+2)`` joined by ``colours``.

    ``attachment[i]`` names, for each colour ``i`` outside ``colours``, a
    vertex ``a``: the ``i``-edge at ``a`` is split so that ``a`` joins
    ``p + 1`` and its old neighbour joins ``p + 2``.
    """
    colours = frozenset(colours)
    rest = [c for c in G.colours if c not in colours]
    if not colours or not rest or not colours <= set(G.colours):
        raise InvalidAttachment(f"bad colour set {sorted(colours)}")
    if set(attachment) != set(rest):
        raise InvalidAttachment(f"attachment must name colours {rest}")
    if any(not 1 <= attachment[i] <= G.p for i in rest):
        raise InvalidAttachment("attachment vertex out of range")
    x, y = G.p + 1, G.p + 2
    t = [row + [0, 0] for row in _mutable(G)]
    for i in colours:
        t[i][x], t[i][y] = y, x
    for i in rest:
        a = attachment[i]
        b = t[i][a]
        t[i][a], t[i][x] = x, a
        t[i][b], t[i][y] = y, b
    H = _freeze(G.n, t)
    d = classify_dipole(H, x, y)
    if d is None or d.colours != colours:
        raise InvalidAttachment("the inserted pair is not a dipole")
    return H


def completely_separated(G: Gem, x: int, y: int) -> bool:
    if x == y:
        raise GemError("need two distinct vertices")
    return all(
        residue_label(G, hat(G, c), x) != residue_label(G, hat(G, c), y)
        for c in G.colours
    )


def fuse(G: Gem, x: int, y: int) -> Gem:
    """Delete ``x`` and ``y`` and glue their hanging edges colour by colour.

    With ``x``, ``y`` in the two components of a gem this gives a connected
    sum; inside one connected gem it adds a handle summand.
    """
    if not completely_separated(G, x, y):
        raise NotSeparated(f"{x} and {y} are not completely separated")
    t = _mutable(G)
    for c in G.colours:
        a, b = t[c][x], t[c][y]
        t[c][a], t[c][b] = b, a
    return _freeze(G.n, t, (x, y))
