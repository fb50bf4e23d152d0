"""Move traces: recorded sequences of manifold-preserving moves.

Text format, one step per line (``#`` starts a comment)::

    cancel x y                 cancel the dipole (x, y)
    blob v c                   add a blob on the c-edge at v (v joins p+1)
    add i,j,.. c:v c:v ..      add a dipole on colours i,j,..; host edges by tail
    switch v1 c1 v2 c2 VAR     switch the rho_(n-1)-pair of c-edges at v1, v2

A ``switch`` step is accepted only on a ρ_{n-1}-pair and only with the
preferred variant, since that is the switching known to keep the manifold.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GemError, TraceFormatError
from .gem import Edge, Gem, gem_key
from .moves import add_blob, add_dipole, cancel_dipole, classify_dipole
from .rho import Kind, SwitchVariant, classify_pair, preferred_variant, switch_generic


@dataclass(frozen=True)
class Cancel:
    x: int
    y: int

    def apply(self, G: Gem) -> Gem:
        if not (1 <= self.x <= G.p and 1 <= self.y <= G.p) or self.x == self.y:
            raise GemError(f"no vertex pair ({self.x},{self.y})")
        d = classify_dipole(G, self.x, self.y)
        if d is None:
            raise GemError(f"({self.x},{self.y}) is not a dipole")
        return cancel_dipole(G, d)

    def __str__(self):
        return f"cancel {self.x} {self.y}"


@dataclass(frozen=True)
class Blob:
    v: int
    c: int

    def apply(self, G: Gem) -> Gem:
        if not (1 <= self.v <= G.p and 0 <= self.c <= G.n):
            raise GemError(f"no edge at vertex {self.v} colour {self.c}")
        return add_blob(G, Edge(self.v, self.c))

    def __str__(self):
        return f"blob {self.v} {self.c}"


@dataclass(frozen=True)
class Add:
    colours: tuple
    hosts: tuple  # ((colour, tail vertex), ...)

    def apply(self, G: Gem) -> Gem:
        return add_dipole(G, self.colours, dict(self.hosts))

    def __str__(self):
        cols = ",".join(map(str, self.colours))
        hosts = " ".join(f"{c}:{v}" for c, v in self.hosts)
        return f"add {cols} {hosts}".rstrip()


@dataclass(frozen=True)
class Switch:
    v1: int
    c1: int
    v2: int
    c2: int
    variant: SwitchVariant

    def apply(self, G: Gem) -> Gem:
        if not (1 <= self.v1 <= G.p and 1 <= self.v2 <= G.p):
            raise GemError("switch vertex out of range")
        if not (0 <= self.c1 <= G.n and 0 <= self.c2 <= G.n):
            raise GemError("switch colour out of range")
        e, f = Edge(self.v1, self.c1), Edge(self.v2, self.c2)
        R = classify_pair(G, e, f)
        if R is None or R.kind is not Kind.RHO_N1:
            raise GemError("switched edges are not a rho_(n-1)-pair")
        if preferred_variant(G, R) is not self.variant:
            raise GemError(f"variant {self.variant.value} is not the preferred switching")
        return switch_generic(G, e, f, self.variant)

    def __str__(self):
        return f"switch {self.v1} {self.c1} {self.v2} {self.c2} {self.variant.value}"


Step = Cancel | Blob | Add | Switch


@dataclass
class MoveTrace:
    steps: list = field(default_factory=list)

    def append(self, step) -> None:
        self.steps.append(step)

    def extend(self, other) -> None:
        self.steps.extend(other.steps if isinstance(other, MoveTrace) else other)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __str__(self):
        return format_trace(self)

    def replay(self, G: Gem) -> Gem:
        for step in self.steps:
            G = step.apply(G)
        return G


def format_trace(t: MoveTrace) -> str:
    return "".join(f"{step}\n" for step in t.steps)


def parse_trace(text: str) -> MoveTrace:
    out = MoveTrace()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        verb, *args = line.split()
        try:
            if verb == "cancel" and len(args) == 2:
                out.append(Cancel(int(args[0]), int(args[1])))
            elif verb == "blob" and len(args) == 2:
                out.append(Blob(int(args[0]), int(args[1])))
            elif verb == "add" and args:
                cols = tuple(int(c) for c in args[0].split(","))
                hosts = []
                for tok in args[1:]:
                    c, v = tok.split(":")
                    hosts.append((int(c), int(v)))
                out.append(Add(cols, tuple(hosts)))
            elif verb == "switch" and len(args) == 5:
                v1, c1, v2, c2 = (int(a) for a in args[:4])
                out.append(Switch(v1, c1, v2, c2, SwitchVariant(args[4])))
            else:
                raise TraceFormatError(f"cannot parse step {line!r}", lineno)
        except ValueError as exc:
            if isinstance(exc, TraceFormatError):
                raise
            raise TraceFormatError(f"cannot parse step {line!r}: {exc}", lineno) from None
    return out


def read_trace(path) -> MoveTrace:
    with open(path, encoding="utf-8") as fh:
        return parse_trace(fh.read())


@dataclass(frozen=True)
class TraceCheck:
    """Outcome of :func:`verify_trace`; truthy iff the trace checks out.

    ``step`` is the 1-based index of the first failing step, 0 when every
    step applied but the final gem differs, ``None`` on success.
    """

    ok: bool
    step: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_trace(start: Gem, trace: MoveTrace, end: Gem) -> TraceCheck:
    G = start
    for idx, step in enumerate(trace.steps, start=1):
        try:
            G = step.apply(G)
        except GemError as exc:
            return TraceCheck(False, idx, f"{step}: {exc}")
    if G.n != end.n or G.p != end.p or gem_key(G) != gem_key(end):
        return TraceCheck(False, 0, "final gem is not colour-isomorphic to the target")
    return TraceCheck(True)
