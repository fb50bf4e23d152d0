"""Manifold checks with three-valued verdicts.

A colour graph is a gem exactly when every residue missing one colour
represents a sphere.  Sphere recognition is exact up to dimension 2 (via the
Euler characteristic) and heuristic above: greedy dipole cancellation plus
ρ_{n-1}-switching, retried after seeded random blow-ups.  A ``Yes`` in
dimension >= 3 always carries a trace that replays to the 2-vertex
crystallization.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import Disconnected, NotAGem
from .gem import (
    Gem,
    euler_characteristic,
    hat,
    is_bipartite,
    is_connected,
    is_contracted,
    residue_gems,
)
from .trace import MoveTrace


class Answer(enum.Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Verdict:
    value: Answer
    evidence: str
    trace: MoveTrace | None = None

    def __str__(self):
        return f"{self.value.value} ({self.evidence})"

    def __bool__(self):
        return self.value is Answer.YES


DEFAULT_ROUNDS = 3


def is_sphere(G: Gem, *, seed: int = 0, rounds: int = DEFAULT_ROUNDS,
              budget: int | None = None) -> Verdict:
    if not is_connected(G):
        raise Disconnected("sphere recognition expects a connected graph")
    m = G.n
    if m == 1:
        return Verdict(Answer.YES, "a single bicoloured cycle")
    chi = euler_characteristic(G)
    if m == 2:
        if chi == 2:
            return Verdict(Answer.YES, "chi = 2")
        return Verdict(Answer.NO, f"chi = {chi}")

    gem = is_gem(G, seed=seed, rounds=rounds)
    if gem.value is Answer.NO:
        return Verdict(Answer.NO, f"not a gem: {gem.evidence}")
    expected = 2 if m % 2 == 0 else 0
    if gem.value is Answer.YES and chi != expected:
        return Verdict(Answer.NO, f"chi = {chi}, a {m}-sphere has {expected}")

    from .reduce import blow_up_trace, greedy_simplify

    trace = MoveTrace()
    H, t = greedy_simplify(G, budget)
    trace.extend(t)
    r = 0
    while H.p > 2 and r < rounds:
        H, t = blow_up_trace(H, seed + r, max(2, H.p // 2))
        trace.extend(t)
        H, t = greedy_simplify(H, budget)
        trace.extend(t)
        r += 1
    if H.p == 2:
        if gem.value is Answer.YES:
            return Verdict(Answer.YES, f"reduced to the 2-vertex crystallization in "
                                       f"{len(trace)} moves", trace)
        return Verdict(Answer.UNKNOWN, f"reduces to order 2 but residues undecided: "
                                       f"{gem.evidence}", trace)
    return Verdict(Answer.UNKNOWN, f"reduction stalled at order {H.p} after {r} "
                                   f"blow-up rounds")


def is_gem(G: Gem, *, seed: int = 0, rounds: int = DEFAULT_ROUNDS) -> Verdict:
    if G.n == 1:
        return Verdict(Answer.YES, "every 2-coloured graph is a gem")
    unknown = None
    for c in G.colours:
        for k, H in enumerate(residue_gems(G, hat(G, c))):
            v = is_sphere(H, seed=seed, rounds=rounds)
            if v.value is Answer.NO:
                return Verdict(Answer.NO, f"residue {k} without colour {c}: {v.evidence}")
            if v.value is Answer.UNKNOWN and unknown is None:
                unknown = f"residue {k} without colour {c}: {v.evidence}"
    if unknown is not None:
        return Verdict(Answer.UNKNOWN, unknown)
    return Verdict(Answer.YES, "all residues are spheres")


def is_orientable(G: Gem) -> bool:
    if is_gem(G).value is Answer.NO:
        raise NotAGem("orientability is defined for gems")
    return is_bipartite(G)


def is_crystallization(G: Gem) -> Verdict:
    if not is_contracted(G):
        return Verdict(Answer.NO, "not contracted")
    gem = is_gem(G)
    if gem.value is Answer.YES:
        return Verdict(Answer.YES, "contracted gem")
    return gem
