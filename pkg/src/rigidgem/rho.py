"""ρ-pairs, switchings and rigidity.

Two edges of colour ``c`` form a ρ_n-pair when they share their
``{c, i}``-bicoloured cycle for every other colour ``i``, and a
ρ_{n-1}-pair when exactly one colour ``d`` (the non-involved colour) gives
different cycles.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    BadColour,
    ColourMismatch,
    DimensionTooLow,
    GemError,
    NoCanonicalSwitch,
    NotSameCycle,
    PreconditionFailed,
)
from .gem import (
    Edge,
    Gem,
    bipartition,
    hat,
    residue_gems,
    residue_label,
    residue_of,
    residues,
    subgem,
)
from .moves import _freeze, _mutable


class Kind(enum.Enum):
    RHO_N = "rho_n"
    RHO_N1 = "rho_n-1"


class SwitchVariant(enum.Enum):
    """Which endpoints are re-joined.

    With ``e = {u, v}`` and ``f = {w, z}`` (``u < v``, ``w < z``), ``UW_VZ``
    adds the edges ``u-w``, ``v-z`` and ``UZ_VW`` adds ``u-z``, ``v-w``.
    """

    UW_VZ = "UW_VZ"
    UZ_VW = "UZ_VW"


@dataclass(frozen=True)
class RhoPair:
    e: Edge
    f: Edge
    kind: Kind
    d: int | None = None

    @property
    def colour(self) -> int:
        return self.e.c

    def __str__(self):
        tag = "rho_n" if self.kind is Kind.RHO_N else f"rho_(n-1) d={self.d}"
        return f"{tag} colour {self.colour}: edges at {self.e.v} and {self.f.v}"


def _canonical_pair(G: Gem, e: Edge, f: Edge) -> tuple[Edge, Edge]:
    if e.c != f.c:
        raise ColourMismatch(f"edges have colours {e.c} and {f.c}")
    if not 0 <= e.c <= G.n:
        raise BadColour(f"colour {e.c} outside 0..{G.n}")
    e, f = G.edge(e.v, e.c), G.edge(f.v, f.c)
    if e == f:
        raise GemError("a pair needs two distinct edges")
    return (e, f) if e.v < f.v else (f, e)


def classify_pair(G: Gem, e: Edge, f: Edge) -> RhoPair | None:
    e, f = _canonical_pair(G, e, f)
    c = e.c
    disagree = [
        i for i in G.colours
        if i != c and residue_label(G, (c, i), e.v) != residue_label(G, (c, i), f.v)
    ]
    if not disagree:
        return RhoPair(e, f, Kind.RHO_N)
    if len(disagree) == 1:
        return RhoPair(e, f, Kind.RHO_N1, disagree[0])
    return None


def find_rho_pairs(G: Gem) -> list[RhoPair]:
    """All ρ-pairs ordered by colour, then by the smaller endpoints."""
    out = []
    for c in G.colours:
        edges = G.edges(c)
        others = [i for i in G.colours if i != c]
        tables = [G._labels((c, i))[0] for i in others]
        for a in range(len(edges)):
            va = edges[a].v
            for b in range(a + 1, len(edges)):
                vb = edges[b].v
                disagree = None
                count = 0
                for i, lab in zip(others, tables):
                    if lab[va] != lab[vb]:
                        count += 1
                        if count > 1:
                            break
                        disagree = i
                if count == 0:
                    out.append(RhoPair(edges[a], edges[b], Kind.RHO_N))
                elif count == 1:
                    out.append(RhoPair(edges[a], edges[b], Kind.RHO_N1, disagree))
    return out


def switch_generic(G: Gem, e: Edge, f: Edge, variant: SwitchVariant) -> Gem:
    e, f = _canonical_pair(G, e, f)
    c = e.c
    u, v = G.endpoints(e)
    w, z = G.endpoints(f)
    t = _mutable(G)
    if SwitchVariant(variant) is SwitchVariant.UW_VZ:
        joins = ((u, w), (v, z))
    else:
        joins = ((u, z), (v, w))
    for a, b in joins:
        t[c][a], t[c][b] = b, a
    return _freeze(G.n, t)


def _walk_to(G: Gem, tail: int, head: int, f: Edge, i: int) -> tuple[int, int]:
    """Follow the {c, i}-cycle leaving ``tail`` through ``head``; orient ``f``."""
    c = f.c
    fends = {f.v, G.adj[c][f.v]}
    a, b = tail, head
    while True:
        if {a, b} == fends:
            return a, b
        # b -> i-neighbour -> c-neighbour
        a = G.adj[i][b]
        b = G.adj[c][a]
        if a == tail:
            raise NotSameCycle("edges lie in different bicoloured cycles")


def induced_head(G: Gem, e: Edge, f: Edge, i: int) -> int:
    """Head of ``f`` for the orientation the {c, i}-cycle inherits from ``e``.

    ``e`` is oriented from ``e.v`` to its other endpoint.
    """
    if e.c != f.c:
        raise ColourMismatch(f"edges have colours {e.c} and {f.c}")
    if i == e.c or not 0 <= i <= G.n:
        raise BadColour(f"colour {i} must differ from {e.c} and lie in 0..{G.n}")
    tail, head = G.endpoints(e)
    return _walk_to(G, tail, head, f, i)[1]


def _variant_for(G: Gem, R: RhoPair, x0: int, x1: int, y0: int, y1: int) -> SwitchVariant:
    # the preferred switching joins x0-y1 and x1-y0
    u, _ = G.endpoints(R.e)
    w, _ = G.endpoints(R.f)
    first = {x0, y1} if u in (x0, y1) else {x1, y0}
    return SwitchVariant.UW_VZ if first == {u, w} else SwitchVariant.UZ_VW


def _orient_by_classes(G: Gem, R: RhoPair, v0: frozenset) -> SwitchVariant:
    a, b = G.endpoints(R.e)
    x0, x1 = (a, b) if a in v0 else (b, a)
    a, b = G.endpoints(R.f)
    y0, y1 = (a, b) if a in v0 else (b, a)
    return _variant_for(G, R, x0, x1, y0, y1)


def preferred_switch_case(G: Gem, R: RhoPair) -> str:
    """``"A"``, ``"B1"`` or ``"B2"``; raises when no canonical choice exists."""
    comp = residue_of(G, G.colours, R.e.v)
    if bipartition(subgem(G, comp, G.colours)) is not None:
        return "A"
    if R.kind is Kind.RHO_N1:
        xi = residue_of(G, hat(G, R.d), R.e.v)
        if bipartition(subgem(G, xi, hat(G, R.d))) is not None:
            return "B1"
        raise PreconditionFailed("the residue missing the non-involved colour is not bipartite")
    if G.n == 2:
        raise NoCanonicalSwitch(
            "a rho_2-pair of a non-bipartite 3-coloured graph has no canonical switching"
        )
    for c in G.colours:
        if any(bipartition(h) is None for h in residue_gems(G, hat(G, c))):
            raise PreconditionFailed("some proper residue is not bipartite")
    return "B2"


def preferred_variant(G: Gem, R: RhoPair) -> SwitchVariant:
    case = preferred_switch_case(G, R)
    if case == "A":
        comp = residue_of(G, G.colours, R.e.v)
        sub = sorted(comp)
        classes = bipartition(subgem(G, comp, G.colours))
        # subgem renumbers ascending; map class 0 back to original labels
        v0 = frozenset(sub[i - 1] for i in classes[0])
        return _orient_by_classes(G, R, v0)
    if case == "B1":
        cols = hat(G, R.d)
        xi = sorted(residue_of(G, cols, R.e.v))
        classes = bipartition(subgem(G, xi, cols))
        v0 = frozenset(xi[i - 1] for i in classes[0])
        return _orient_by_classes(G, R, v0)
    x0, x1 = G.endpoints(R.e)
    i = min(j for j in G.colours if j != R.colour)
    y0, y1 = _walk_to(G, x0, x1, R.f, i)
    return _variant_for(G, R, x0, x1, y0, y1)


def switch_preferred(G: Gem, R: RhoPair) -> Gem:
    return switch_generic(G, R.e, R.f, preferred_variant(G, R))


def is_rigid(G: Gem) -> bool:
    if G.n < 3:
        raise DimensionTooLow("rigidity is only meaningful for n >= 3")
    return not find_rho_pairs(G)


def _cycle_ids(H: Gem, c: int, j: int) -> list[int]:
    """Bicoloured cycle index of every vertex, by walking the cycles."""
    ids = [-1] * (H.p + 1)
    k = 0
    for s in H.vertices:
        if ids[s] >= 0:
            continue
        v = s
        while ids[v] < 0:
            ids[v] = k
            w = H.adj[c][v]
            ids[w] = k
            v = H.adj[j][w]
        k += 1
    return ids


def _has_top_pair(H: Gem) -> bool:
    """Does ``H`` contain two equally coloured edges sharing all their cycles?"""
    for c in H.colours:
        edges = [v for v in H.vertices if v < H.adj[c][v]]
        if len(edges) < 2:
            continue
        ids = [_cycle_ids(H, c, j) for j in H.colours if j != c]
        keys = {}
        for v in edges:
            key = tuple(t[v] for t in ids)
            if key in keys:
                return True
            keys[key] = v
    return False


def is_rigid_via_residues(G: Gem) -> bool:
    """Rigidity decided residue by residue.

    ``G`` is rigid exactly when no residue missing one colour contains a pair
    of equally coloured edges that share every bicoloured cycle of that
    residue.  Cycles are found by walking, independently of
    :func:`find_rho_pairs`.
    """
    if G.n < 3:
        raise DimensionTooLow("rigidity is only meaningful for n >= 3")
    for i in G.colours:
        cols = hat(G, i)
        for block in residues(G, cols).blocks:
            if _has_top_pair(subgem(G, block, cols)):
                return False
    return True
