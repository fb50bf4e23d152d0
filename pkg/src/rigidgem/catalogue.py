"""Census of rigid crystallizations of small order.

Search space: colour 0 is fixed to ``(1 2)(3 4)...`` and colour 1 to the
standard layout of its {0,1}-cycle type (cycles laid out consecutively,
longest first), which every graph admits after relabelling.  Colours
``2..n`` are perfect matchings chosen vertex by vertex.  In bipartite mode
odd vertices form one class, so later colours only join odd to even.

Pruning after each completed colour ``k``:

* every residue on three colours including ``k`` must be a 2-sphere
  (``sum g_ij - size/2 == 2``), as every such residue of a gem is;
* once colours ``0..n-1`` are placed, that residue must be connected
  (contractedness) and contain no two equally coloured edges sharing all of
  its bicoloured cycles (otherwise the finished graph has a ρ-pair).

Survivors are kept when contracted, rigid and not refuted as gems, then
deduplicated by canonical code.

Catalogue file::

    dim <n> max_order <p> count <k>
    <order> <code> <flags>

``flags`` is three characters: ``B``/``N`` (bipartite or not), ``Y``/``U``
(gem verdict) and ``R`` (rigid).
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import BudgetExceeded, CorruptCatalogue, GemError
from .gem import CanonicalCode, Gem, canonical_code, is_bipartite, is_connected, is_contracted
from .rho import _has_top_pair, find_rho_pairs
from .verify import Answer, is_gem

DEFAULT_BUDGET = 5_000_000


@dataclass(frozen=True, order=True)
class CatalogueEntry:
    order: int
    code: CanonicalCode
    dimension: int
    bipartite: bool
    gem_verdict: Answer
    rigid: bool = True

    @property
    def flags(self) -> str:
        return (
            ("B" if self.bipartite else "N")
            + ("Y" if self.gem_verdict is Answer.YES else "U")
            + ("R" if self.rigid else "-")
        )

    def gem(self) -> Gem:
        return self.code.to_gem()


def partitions(m: int, largest: int | None = None):
    """Partitions of ``m`` as non-increasing tuples."""
    if largest is None:
        largest = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in partitions(m - first, first):
            yield (first,) + rest


def _standard_01(p: int, parts: tuple) -> tuple[list[int], list[int]]:
    row0 = [0] * (p + 1)
    row1 = [0] * (p + 1)
    s = 0
    for m in parts:
        verts = list(range(s + 1, s + 2 * m + 1))
        for j in range(0, 2 * m, 2):
            a, b = verts[j], verts[j + 1]
            row0[a], row0[b] = b, a
        for j in range(1, 2 * m, 2):
            a, b = verts[j], verts[(j + 1) % (2 * m)]
            row1[a], row1[b] = b, a
        s += 2 * m
    return row0, row1


class _Counter:
    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"search exceeded {self.budget} nodes")


def _matchings(p: int, bipartite: bool, counter: _Counter, first: int | None = None):
    """Every perfect matching of 1..p as an involution table."""
    row = [0] * (p + 1)

    def rec(v):
        while v <= p and row[v]:
            v += 1
        if v > p:
            yield row
            return
        for w in range(v + 1, p + 1):
            if row[w] or (bipartite and (w - v) % 2 == 0):
                continue
            if first is not None and v == 1 and w != first:
                continue
            counter.tick()
            row[v], row[w] = w, v
            yield from rec(v + 1)
            row[v] = row[w] = 0

    yield from rec(1)


def _surfaces_ok(H: Gem, k: int) -> bool:
    """Each residue on three colours containing ``k`` has Euler characteristic 2."""
    for a, b in itertools.combinations(range(k), 2):
        B = (a, b, k)
        lab, g = H._labels(B)
        size = [0] * g
        cycles = [0] * g
        for v in H.vertices:
            size[lab[v]] += 1
        for pair in ((a, b), (a, k), (b, k)):
            plab, pg = H._labels(pair)
            seen = [False] * pg
            for v in H.vertices:
                if not seen[plab[v]]:
                    seen[plab[v]] = True
                    cycles[lab[v]] += 1
        if any(2 * cycles[i] - size[i] != 4 for i in range(g)):
            return False
    return True


def _entry(G: Gem) -> CatalogueEntry | None:
    if not is_contracted(G) or find_rho_pairs(G):
        return None
    verdict = is_gem(G).value
    if verdict is Answer.NO:
        return None
    return CatalogueEntry(G.p, canonical_code(G), G.n, is_bipartite(G), verdict)


def _search(n: int, p: int, parts: tuple, bipartite: bool, first: int | None,
            budget: int) -> dict:
    counter = _Counter(budget)
    found = {}
    row0, row1 = _standard_01(p, parts)
    tables = [row0, row1]

    def place(k):
        if k > n:
            G = Gem(n, p, [list(t) for t in tables], check=False)
            e = _entry(G)
            if e is not None:
                found.setdefault(e.code, e)
            return
        for row in _matchings(p, bipartite, counter, first if k == 2 else None):
            tables.append(row)
            H = Gem(k, p, [list(t) for t in tables], check=False)
            ok = _surfaces_ok(H, k)
            if ok and k == n - 1:
                ok = is_connected(H) and not _has_top_pair(H)
            if ok:
                place(k + 1)
            tables.pop()

    place(2)
    return found


def _shards(n: int, max_order: int, bipartite: bool):
    for p in range(2, max_order + 1, 2):
        for parts in partitions(p // 2):
            firsts = [w for w in range(2, p + 1) if not (bipartite and w % 2 == 1)]
            for first in firsts:
                yield (n, p, parts, bipartite, first)


def _run_shard(args):
    n, p, parts, bipartite, first, budget = args
    return _search(n, p, parts, bipartite, first, budget)


def enumerate_rigid(n: int, max_order: int, bipartite_only: bool = False, *,
                    budget: int = DEFAULT_BUDGET, jobs: int = 1) -> list[CatalogueEntry]:
    """All rigid crystallizations of order <= ``max_order`` up to colour isomorphism.

    ``budget`` caps the number of search nodes in each shard (one shard per
    order, colour-1 layout and partner of vertex 1 in colour 2).
    """
    if n < 3:
        raise GemError("rigid crystallizations are defined for n >= 3")
    if max_order < 2 or max_order % 2:
        raise GemError("max_order must be even and at least 2")
    tasks = [s + (budget,) for s in _shards(n, max_order, bipartite_only)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_shard, tasks))
    else:
        results = [_run_shard(t) for t in tasks]
    merged = {}
    for found in results:
        for code, e in found.items():
            merged.setdefault(code, e)
    return sorted(merged.values(), key=lambda e: (e.order, str(e.code)))


# persistence -------------------------------------------------------------------


def format_catalogue(entries, n: int, max_order: int) -> str:
    lines = [f"dim {n} max_order {max_order} count {len(entries)}"]
    for e in sorted(entries, key=lambda e: (e.order, str(e.code))):
        lines.append(f"{e.order} {e.code} {e.flags}")
    return "\n".join(lines) + "\n"


def save(entries, path, n: int | None = None, max_order: int | None = None) -> None:
    entries = list(entries)
    if n is None:
        if not entries:
            raise GemError("dimension required for an empty catalogue")
        n = entries[0].dimension
    if max_order is None:
        max_order = max((e.order for e in entries), default=2)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_catalogue(entries, n, max_order))


@dataclass(frozen=True)
class Catalogue:
    dimension: int
    max_order: int
    entries: tuple


def parse_catalogue(text: str) -> Catalogue:
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1) if ln.strip()]
    if not lines:
        raise CorruptCatalogue("empty catalogue", 1)
    lineno, head = lines[0]
    tok = head.split()
    try:
        if len(tok) != 6 or tok[0] != "dim" or tok[2] != "max_order" or tok[4] != "count":
            raise ValueError
        n, max_order, count = int(tok[1]), int(tok[3]), int(tok[5])
    except ValueError:
        raise CorruptCatalogue("header must read 'dim n max_order p count k'", lineno) from None
    body = lines[1:]
    if len(body) != count:
        raise CorruptCatalogue(f"header announces {count} entries, found {len(body)}", lineno)
    entries = []
    seen = set()
    for lineno, line in body:
        entries.append(_parse_entry(line, lineno, n, max_order, seen))
    return Catalogue(n, max_order, tuple(entries))


def _parse_entry(line: str, lineno: int, n: int, max_order: int, seen: set) -> CatalogueEntry:
    parts = line.split()
    if len(parts) != 3:
        raise CorruptCatalogue("entry must read 'order code flags'", lineno)
    order_s, code_s, flags = parts
    try:
        order = int(order_s)
        code = CanonicalCode.parse(code_s)
        G = code.to_gem()
    except (ValueError, GemError) as exc:
        raise CorruptCatalogue(f"bad entry: {exc}", lineno) from None
    if code.n != n or code.p != order or order > max_order:
        raise CorruptCatalogue("order or dimension disagrees with the header", lineno)
    if len(flags) != 3 or flags[0] not in "BN" or flags[1] not in "YU" or flags[2] != "R":
        raise CorruptCatalogue(f"bad flags {flags!r}", lineno)
    if code in seen:
        raise CorruptCatalogue("duplicate entry", lineno)
    seen.add(code)
    if canonical_code(G) != code:
        raise CorruptCatalogue("code is not in canonical form", lineno)
    if not is_contracted(G) or find_rho_pairs(G):
        raise CorruptCatalogue("entry is not a rigid crystallization", lineno)
    if is_bipartite(G) != (flags[0] == "B"):
        raise CorruptCatalogue("bipartite flag is wrong", lineno)
    verdict = is_gem(G).value
    if verdict is Answer.NO or (verdict is Answer.YES) != (flags[1] == "Y"):
        raise CorruptCatalogue(f"gem verdict is {verdict.value}, flag says {flags[1]}", lineno)
    return CatalogueEntry(order, code, n, flags[0] == "B", verdict)


def load(path) -> list[CatalogueEntry]:
    return list(load_catalogue(path).entries)


def load_catalogue(path) -> Catalogue:
    with open(path, encoding="utf-8") as fh:
        return parse_catalogue(fh.read())


def merge(catalogues) -> Catalogue:
    catalogues = list(catalogues)
    if not catalogues:
        raise GemError("nothing to merge")
    n = catalogues[0].dimension
    if any(c.dimension != n for c in catalogues):
        raise GemError("catalogues have different dimensions")
    merged = {}
    for cat in catalogues:
        for e in cat.entries:
            merged.setdefault(e.code, e)
    entries = sorted(merged.values(), key=lambda e: (e.order, str(e.code)))
    return Catalogue(n, max(c.max_order for c in catalogues), tuple(entries))


def default_jobs() -> int:
    return os.cpu_count() or 1
