"""Reduction to crystallizations and to rigid crystallizations.

:func:`rigidify` repeatedly switches a ρ_{n-1}-pair of a crystallization and
cancels the 1-dipoles this creates.  Switching such a pair keeps the
represented manifold, and the residue missing the non-involved colour ``d``
splits in two, so a ``d``-coloured 1-dipole appears and the order drops.
ρ_n-pairs are never switched: in a crystallization they signal a handle
summand, which is reported through ``handle_flag``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import (
    DimensionTooLow,
    Disconnected,
    GemError,
    InvalidAttachment,
    NotACrystallization,
    Stuck,
    TheoremViolation,
)
from .gem import Edge, Gem, is_connected, is_contracted
from .moves import (
    add_blob,
    add_dipole,
    all_dipoles,
    cancel_dipole,
    find_dipoles,
)
from .rho import Kind, find_rho_pairs, preferred_variant, switch_generic
from .trace import Add, Blob, Cancel, MoveTrace, Switch, format_trace


def crystallize_trace(G: Gem) -> tuple[Gem, MoveTrace]:
    """Cancel 1-dipoles (least pair first) until the gem is contracted.

    The input is assumed to be a gem; a non-contracted connected graph always
    has a 1-dipole, so falling back to higher dipoles only matters for
    malformed input.
    """
    if not is_connected(G):
        raise Disconnected("crystallize expects a connected gem")
    trace = MoveTrace()
    while not is_contracted(G):
        ones = find_dipoles(G, 1)
        if ones:
            d = ones[0]
        else:
            rest = all_dipoles(G)
            if not rest:
                raise Stuck(f"order {G.p}: not contracted and no dipole to cancel")
            d = max(rest, key=lambda x: (x.k, -x.x, -x.y))
        G = cancel_dipole(G, d)
        trace.append(Cancel(d.x, d.y))
    return G, trace


def crystallize(G: Gem) -> Gem:
    return crystallize_trace(G)[0]


@dataclass
class ReductionReport:
    p0: int
    gem: Gem
    trace: MoveTrace
    events: list = field(default_factory=list)  # (RhoPair, [Dipole, ...])
    handle_flag: bool = False

    @property
    def p1(self) -> int:
        return self.gem.p

    @property
    def rigid(self) -> bool:
        return not self.handle_flag

    @property
    def switches(self) -> int:
        return len(self.events)

    def summary(self) -> str:
        state = "handle summand detected" if self.handle_flag else "rigid"
        return f"p: {self.p0} → {self.p1}, {state}"

    def to_text(self) -> str:
        head = f"p0 {self.p0}\np1 {self.p1}\nhandle_flag {int(self.handle_flag)}\n"
        return head + format_trace(self.trace)


def rigidify(G: Gem, *, check: bool = True) -> ReductionReport:
    """Eliminate ρ-pairs from a crystallization without raising its order.

    With ``check`` the input is first confirmed not to be a non-gem (this
    runs the residue sphere checks).
    """
    if G.n < 3:
        raise DimensionTooLow("rigid crystallizations are defined for n >= 3")
    if not is_connected(G) or not is_contracted(G):
        raise NotACrystallization("input is not a contracted gem")
    if check:
        from .verify import Answer, is_gem

        if is_gem(G).value is Answer.NO:
            raise NotACrystallization("input is not a gem of a manifold")
    report = ReductionReport(G.p, G, MoveTrace())
    while True:
        pairs = find_rho_pairs(G)
        if not pairs:
            break
        weak = [R for R in pairs if R.kind is Kind.RHO_N1]
        if not weak:
            report.handle_flag = True
            break
        R = weak[0]
        variant = preferred_variant(G, R)
        G = switch_generic(G, R.e, R.f, variant)
        report.trace.append(Switch(R.e.v, R.e.c, R.f.v, R.f.c, variant))
        if not any(d.colours == {R.d} for d in find_dipoles(G, 1)):
            raise TheoremViolation(
                f"no 1-dipole of colour {R.d} after switching {R}"
            )
        before = G.p
        G, steps = crystallize_trace(G)
        report.trace.extend(steps)
        report.events.append((R, list(steps)))
        if G.p >= before:
            raise TheoremViolation("switching did not lead to a smaller crystallization")
    report.gem = G
    return report


def reduce_gem(G: Gem, *, check: bool = True) -> ReductionReport:
    """Crystallize, then rigidify; the report's trace starts at ``G``."""
    C, trace = crystallize_trace(G)
    report = rigidify(C, check=check)
    trace.extend(report.trace)
    report.trace = trace
    report.p0 = G.p
    return report


def _random_step(G: Gem, rng: random.Random):
    n = G.n
    v = rng.randint(1, G.p)
    k = rng.randint(1, n)
    cols = tuple(sorted(rng.sample(range(n + 1), k)))
    rest = [c for c in G.colours if c not in cols]
    if k == n:
        step = Blob(v, rest[0])
        return add_blob(G, Edge(v, rest[0])), step
    if rng.random() < 0.5:
        hosts = tuple((c, rng.randint(1, G.p)) for c in rest)
        try:
            return add_dipole(G, cols, dict(hosts)), Add(cols, hosts)
        except InvalidAttachment:
            pass
    hosts = tuple((c, v) for c in rest)
    return add_dipole(G, cols, dict(hosts)), Add(cols, hosts)


def blow_up_trace(G: Gem, seed: int, steps: int) -> tuple[Gem, MoveTrace]:
    """Apply ``steps`` seeded random dipole/blob insertions."""
    rng = random.Random(seed)
    trace = MoveTrace()
    for _ in range(steps):
        G, step = _random_step(G, rng)
        trace.append(step)
    return G, trace


def blow_up(G: Gem, seed: int, steps: int) -> Gem:
    return blow_up_trace(G, seed, steps)[0]


def undo_blow_up(G: Gem, steps: int) -> Gem:
    """Cancel the last ``steps`` inserted dipoles, newest first."""
    from .moves import classify_dipole

    for _ in range(steps):
        d = classify_dipole(G, G.p - 1, G.p)
        if d is None:
            raise GemError("newest vertices do not form a dipole")
        G = cancel_dipole(G, d)
    return G


def greedy_simplify(G: Gem, budget: int | None = None) -> tuple[Gem, MoveTrace]:
    """Cancel dipoles (highest type first, then least pair) and switch
    ρ_{n-1}-pairs of stalled crystallizations, within ``budget`` moves."""
    if budget is None:
        budget = 10 * G.p
    trace = MoveTrace()
    moves = 0
    while moves < budget and G.p > 2:
        ds = all_dipoles(G)
        if ds:
            d = min(ds, key=lambda x: (-x.k, x.x, x.y))
            G = cancel_dipole(G, d)
            trace.append(Cancel(d.x, d.y))
            moves += 1
            continue
        switched = False
        for R in find_rho_pairs(G):
            if R.kind is not Kind.RHO_N1:
                continue
            try:
                variant = preferred_variant(G, R)
            except GemError:
                continue
            G = switch_generic(G, R.e, R.f, variant)
            trace.append(Switch(R.e.v, R.e.c, R.f.v, R.f.c, variant))
            moves += 1
            switched = True
            break
        if not switched:
            break
    return G, trace


__all__ = [
    "ReductionReport",
    "blow_up",
    "blow_up_trace",
    "crystallize",
    "crystallize_trace",
    "greedy_simplify",
    "reduce_gem",
    "rigidify",
    "undo_blow_up",
]
