"""Edge-coloured graphs stored as one fixed-point-free involution per colour.

A :class:`Gem` with dimension ``n`` has colours ``0..n`` and vertices
``1..p``.  ``G.adj[c][v]`` is the ``c``-neighbour of ``v``; index 0 of every
table is a sentinel and holds 0.  Gems are immutable; every operation in the
package returns a fresh value.
"""

from __future__ import annotations

import itertools
import random
from array import array
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import kernels
from .errors import (
    BadArity,
    BadColour,
    DimensionMismatch,
    Disconnected,
    GemError,
    InvalidInvolution,
)


class Edge(NamedTuple):
    """A coloured edge addressed by one endpoint and its colour.

    ``v`` doubles as the tail when an orientation matters (blob insertion,
    induced orientations).  :meth:`Gem.edge` returns the canonical handle,
    whose ``v`` is the smaller endpoint.
    """

    v: int
    c: int


class Gem:
    __slots__ = ("n", "p", "adj", "_flat", "_cache")

    def __init__(self, n: int, p: int, adj, *, check: bool = True):
        if not isinstance(n, int) or n < 1:
            raise BadArity(f"dimension must be an integer >= 1, got {n!r}")
        if not isinstance(p, int) or p < 2:
            raise BadArity(f"vertex count must be an integer >= 2, got {p!r}")
        if len(adj) != n + 1:
            raise BadArity(f"expected {n + 1} colour tables, got {len(adj)}")
        tables = []
        for c, table in enumerate(adj):
            tables.append(_normalise_table(table, p, c))
        self.n = n
        self.p = p
        self.adj = tuple(tables)
        if check:
            for c, row in enumerate(self.adj):
                for v in range(1, p + 1):
                    w = row[v]
                    if w == v:
                        raise InvalidInvolution(f"colour {c}: vertex {v} is a loop")
                    if row[w] != v:
                        raise InvalidInvolution(
                            f"colour {c}: {v} -> {w} but {w} -> {row[w]}"
                        )
        flat = array("i")
        for row in self.adj:
            flat.extend(row)
        self._flat = flat
        self._cache = {}

    # construction helpers -------------------------------------------------

    @classmethod
    def from_matchings(cls, matchings: Sequence[Iterable[tuple[int, int]]]) -> "Gem":
        """Build a gem from one list of vertex pairs per colour."""
        matchings = [list(m) for m in matchings]
        p = 2 * len(matchings[0]) if matchings else 0
        tables = []
        for c, pairs in enumerate(matchings):
            table = {}
            for a, b in pairs:
                if a in table or b in table:
                    raise InvalidInvolution(f"colour {c}: vertex used twice")
                table[a] = b
                table[b] = a
            tables.append(table)
        return cls(len(matchings) - 1, p, tables)

    # basic queries ----------------------------------------------------------

    @property
    def colours(self) -> range:
        return range(self.n + 1)

    @property
    def vertices(self) -> range:
        return range(1, self.p + 1)

    def neighbour(self, v: int, c: int) -> int:
        return self.adj[c][v]

    def edge(self, v: int, c: int) -> Edge:
        """Canonical handle of the ``c``-edge at ``v``."""
        return Edge(min(v, self.adj[c][v]), c)

    def endpoints(self, e: Edge) -> tuple[int, int]:
        """``(tail, head)`` of ``e`` with ``e.v`` as the tail."""
        return e.v, self.adj[e.c][e.v]

    def edges(self, c: int | None = None) -> list[Edge]:
        """Canonical handles, sorted, of all edges (of colour ``c`` if given)."""
        cols = self.colours if c is None else (c,)
        out = []
        for col in cols:
            row = self.adj[col]
            out.extend(Edge(v, col) for v in self.vertices if v < row[v])
        return out

    def matching(self, c: int) -> list[tuple[int, int]]:
        row = self.adj[c]
        return [(v, row[v]) for v in self.vertices if v < row[v]]

    def rows(self) -> list[tuple[int, ...]]:
        """Row ``v - 1`` lists the neighbours of ``v`` in colour order."""
        return [tuple(self.adj[c][v] for c in self.colours) for v in self.vertices]

    def joining_colours(self, x: int, y: int) -> frozenset[int]:
        return frozenset(c for c in self.colours if self.adj[c][x] == y)

    def __eq__(self, other):
        if not isinstance(other, Gem):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        body = " | ".join(
            " ".join(f"{a}{b}" if self.p < 10 else f"{a}-{b}" for a, b in self.matching(c))
            for c in self.colours
        )
        return f"Gem(n={self.n}, p={self.p}: {body})"

    # residue plumbing (cached) ---------------------------------------------

    def _labels(self, colours: Iterable[int]) -> tuple[list[int], int]:
        key = tuple(sorted(set(colours)))
        hit = self._cache.get(key)
        if hit is None:
            for c in key:
                if not 0 <= c <= self.n:
                    raise BadColour(f"colour {c} outside 0..{self.n}")
            hit = kernels.residue_labels(self._flat, self.n, self.p, list(key))
            self._cache[key] = hit
        return hit


def _normalise_table(table, p: int, c: int) -> tuple[int, ...]:
    if isinstance(table, Mapping):
        if set(table) != set(range(1, p + 1)):
            raise BadArity(f"colour {c}: table must cover vertices 1..{p}")
        values = [table[v] for v in range(1, p + 1)]
    else:
        values = list(table)
        if len(values) == p + 1 and values[0] == 0:
            values = values[1:]
        if len(values) != p:
            raise BadArity(f"colour {c}: expected {p} entries, got {len(values)}")
    for v, w in enumerate(values, start=1):
        if not isinstance(w, int) or isinstance(w, bool):
            raise BadArity(f"colour {c}: entry for vertex {v} is not an integer")
        if not 1 <= w <= p:
            raise InvalidInvolution(f"colour {c}: vertex {v} -> {w} out of range")
    return (0, *values)


def new_gem(n: int, p: int, adj) -> Gem:
    return Gem(n, p, adj)


def standard_crystallization(n: int) -> Gem:
    """The 2-vertex crystallization of the n-sphere."""
    if n < 1:
        raise BadArity("dimension must be >= 1")
    return Gem(n, 2, [(2, 1)] * (n + 1))


# residues -------------------------------------------------------------------


@dataclass(frozen=True)
class ResiduePartition:
    colours: frozenset
    blocks: tuple  # tuple of sorted vertex tuples, ordered by smallest vertex

    @property
    def count(self) -> int:
        return len(self.blocks)


def _check_colours(G: Gem, B) -> tuple[int, ...]:
    B = tuple(sorted(set(B)))
    for c in B:
        if not isinstance(c, int) or not 0 <= c <= G.n:
            raise BadColour(f"colour {c!r} outside 0..{G.n}")
    return B


def residues(G: Gem, B) -> ResiduePartition:
    B = _check_colours(G, B)
    labels, count = G._labels(B)
    blocks = [[] for _ in range(count)]
    for v in G.vertices:
        blocks[labels[v]].append(v)
    return ResiduePartition(frozenset(B), tuple(tuple(b) for b in blocks))


def residue_count(G: Gem, B) -> int:
    return G._labels(_check_colours(G, B))[1]


def residue_label(G: Gem, B, v: int) -> int:
    """Index of the B-residue containing ``v`` (blocks ordered by least vertex)."""
    return G._labels(_check_colours(G, B))[0][v]


def residue_of(G: Gem, B, v: int) -> frozenset[int]:
    B = _check_colours(G, B)
    if not 1 <= v <= G.p:
        raise GemError(f"vertex {v} outside 1..{G.p}")
    labels, _ = G._labels(B)
    target = labels[v]
    return frozenset(w for w in G.vertices if labels[w] == target)


def hat(G: Gem, c: int) -> tuple[int, ...]:
    """All colours except ``c``."""
    return tuple(i for i in G.colours if i != c)


def components(G: Gem) -> list[tuple[int, ...]]:
    return list(residues(G, G.colours).blocks)


def is_connected(G: Gem) -> bool:
    return residue_count(G, G.colours) == 1


def f_vector(G: Gem) -> list[int]:
    """Simplex counts of the associated coloured complex.

    An ``s``-simplex with vertex colours ``C`` corresponds to a residue of the
    complementary colour set, so ``f_s`` sums ``g`` over complements of the
    ``(s+1)``-subsets; the empty colour set has ``p`` (singleton) residues.
    """
    out = []
    for s in range(G.n + 1):
        total = 0
        for C in itertools.combinations(G.colours, s + 1):
            rest = [i for i in G.colours if i not in C]
            total += residue_count(G, rest) if rest else G.p
        out.append(total)
    return out


def euler_characteristic(G: Gem) -> int:
    return sum((-1) ** s * f for s, f in enumerate(f_vector(G)))


def bipartition(G: Gem) -> tuple[frozenset, frozenset] | None:
    """Two-colouring of the vertices, or ``None`` if there is an odd cycle.

    In each component the smallest vertex goes to the first class.
    """
    side = [-1] * (G.p + 1)
    for s in G.vertices:
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for row in G.adj:
                w = row[v]
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    return None
    v0 = frozenset(v for v in G.vertices if side[v] == 0)
    v1 = frozenset(v for v in G.vertices if side[v] == 1)
    return v0, v1


def is_bipartite(G: Gem) -> bool:
    return bipartition(G) is not None


def is_contracted(G: Gem) -> bool:
    return all(residue_count(G, hat(G, c)) == 1 for c in G.colours)


# sub-structures and relabelling ----------------------------------------------


def subgem(G: Gem, vertices: Iterable[int], colours: Iterable[int]) -> Gem:
    """The subgraph on ``vertices`` using only ``colours``, renumbered.

    ``vertices`` must be a union of residues of ``colours``.  Vertices are
    renumbered in ascending order and colours are re-indexed ``0..k-1`` in
    ascending order.
    """
    verts = sorted(set(vertices))
    cols = sorted(set(colours))
    if len(cols) < 2:
        raise BadArity("a sub-gem needs at least two colours")
    new = {v: i for i, v in enumerate(verts, start=1)}
    tables = []
    for c in cols:
        row = G.adj[c]
        try:
            tables.append([new[row[v]] for v in verts])
        except KeyError:
            raise GemError("vertex set is not closed under the given colours") from None
    return Gem(len(cols) - 1, len(verts), tables, check=False)


def residue_gems(G: Gem, B) -> list[Gem]:
    """Each B-residue as a (|B|)-coloured graph."""
    part = residues(G, B)
    return [subgem(G, block, part.colours) for block in part.blocks]


def relabel(G: Gem, mapping) -> Gem:
    """Rename vertex ``v`` to ``mapping[v]`` (a permutation of 1..p)."""
    if isinstance(mapping, Sequence):
        m = {v: mapping[v - 1] for v in G.vertices}
    else:
        m = dict(mapping)
    if sorted(m.values()) != list(G.vertices):
        raise GemError("relabelling is not a permutation of the vertices")
    tables = []
    for row in G.adj:
        t = [0] * G.p
        for v in G.vertices:
            t[m[v] - 1] = m[row[v]]
        tables.append(t)
    return Gem(G.n, G.p, tables, check=False)


def permute_colours(G: Gem, perm: Sequence[int]) -> Gem:
    """Recolour: the old colour ``c`` becomes ``perm[c]``."""
    if sorted(perm) != list(G.colours):
        raise BadColour("not a permutation of the colours")
    tables = [None] * (G.n + 1)
    for c, row in enumerate(G.adj):
        tables[perm[c]] = row[1:]
    return Gem(G.n, G.p, tables, check=False)


def disjoint_union(*gems: Gem) -> Gem:
    if not gems:
        raise BadArity("nothing to join")
    n = gems[0].n
    if any(g.n != n for g in gems):
        raise DimensionMismatch("all parts must have the same dimension")
    tables = [[] for _ in range(n + 1)]
    shift = 0
    for g in gems:
        for c in range(n + 1):
            tables[c].extend(w + shift for w in g.adj[c][1:])
        shift += g.p
    return Gem(n, shift, tables, check=False)


def with_matching(G: Gem, c: int, pairs: Iterable[tuple[int, int]]) -> Gem:
    """Copy of ``G`` whose colour ``c`` is replaced by ``pairs``."""
    row = [0] * (G.p + 1)
    for a, b in pairs:
        row[a] = b
        row[b] = a
    tables = [r[1:] for r in G.adj]
    tables[c] = row[1:]
    return Gem(G.n, G.p, tables)


def random_coloured_graph(n: int, p: int, rng: random.Random) -> Gem:
    """Uniformly random perfect matching in every colour."""
    if p % 2:
        raise BadArity("vertex count must be even")
    tables = []
    for _ in range(n + 1):
        verts = list(range(1, p + 1))
        rng.shuffle(verts)
        row = [0] * (p + 1)
        for a, b in zip(verts[::2], verts[1::2]):
            row[a] = b
            row[b] = a
        tables.append(row[1:])
    return Gem(n, p, tables, check=False)


# canonical codes --------------------------------------------------------------

_DIGITS = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz"


def _width(p: int) -> int:
    w = 1
    while len(_DIGITS) ** w <= p:
        w += 1
    return w


def _encode(value: int, width: int) -> str:
    out = []
    for _ in range(width):
        value, r = divmod(value, len(_DIGITS))
        out.append(_DIGITS[r])
    return "".join(reversed(out))


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Colour- and relabelling-invariant key of a connected gem.

    ``body`` lists, row by row, the canonical numbering of the neighbours of
    each vertex, each number written with a fixed number of base-62 digits.
    String order agrees with numeric order of the underlying sequence.
    """

    n: int
    p: int
    body: str

    def __str__(self):
        return f"{self.n}:{self.p}:{self.body}"

    @classmethod
    def parse(cls, text: str) -> "CanonicalCode":
        try:
            n_s, p_s, body = text.strip().split(":")
            n, p = int(n_s), int(p_s)
        except ValueError:
            raise GemError(f"malformed canonical code {text!r}") from None
        if len(body) != p * (n + 1) * _width(p) or any(ch not in _DIGITS for ch in body):
            raise GemError(f"malformed canonical code {text!r}")
        return cls(n, p, body)

    def sequence(self) -> tuple[int, ...]:
        w = _width(self.p)
        return tuple(_decode(self.body[i : i + w]) for i in range(0, len(self.body), w))

    def to_gem(self) -> Gem:
        """The gem in canonical numbering (validated)."""
        seq = self.sequence()
        k = self.n + 1
        tables = [[seq[v * k + c] for v in range(self.p)] for c in range(k)]
        return Gem(self.n, self.p, tables)


def _decode(s: str) -> int:
    value = 0
    for ch in s:
        value = value * len(_DIGITS) + _DIGITS.index(ch)
    return value


_PERM_CACHE: dict[int, list[tuple[int, ...]]] = {}


def _perms(n: int) -> list[tuple[int, ...]]:
    if n not in _PERM_CACHE:
        _PERM_CACHE[n] = list(itertools.permutations(range(n + 1)))
    return _PERM_CACHE[n]


def canonical_code(G: Gem) -> CanonicalCode:
    if not is_connected(G):
        raise Disconnected("canonical codes are defined for connected gems")
    hit = G._cache.get("code")
    if hit is None:
        seq = kernels.canonical_sequence(G._flat, G.n, G.p, _perms(G.n))
        w = _width(G.p)
        hit = CanonicalCode(G.n, G.p, "".join(_encode(x, w) for x in seq))
        G._cache["code"] = hit
    return hit


def gem_key(G: Gem) -> tuple:
    """Sorted multiset of component codes; usable for disconnected gems."""
    parts = residue_gems(G, G.colours) if not is_connected(G) else [G]
    return (G.n, tuple(sorted(str(canonical_code(h)) for h in parts)))


def colour_isomorphic(G1: Gem, G2: Gem) -> bool:
    if G1.n != G2.n:
        raise DimensionMismatch(f"dimensions differ: {G1.n} vs {G2.n}")
    if G1.p != G2.p:
        if not (is_connected(G1) and is_connected(G2)):
            raise Disconnected("colour isomorphism is tested on connected gems")
        return False
    return canonical_code(G1) == canonical_code(G2)


def residue_profile(G: Gem) -> tuple:
    """Colour-permutation invariant: sorted g_B values for each size of B."""
    return tuple(
        tuple(sorted(residue_count(G, B) for B in itertools.combinations(G.colours, k)))
        for k in range(1, G.n + 1)
    )

