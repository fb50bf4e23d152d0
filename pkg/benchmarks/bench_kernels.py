"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times canonical codes and residue labelling on random connected graphs, and
an order-10 census with each backend (the census runs in a subprocess so the
backend can be chosen through ``RIGIDGEM_PURE``).
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from rigidgem import _pykernels
from rigidgem.gem import _perms, components, random_coloured_graph, residue_gems

try:
    from rigidgem import _ckernels
except ImportError:
    _ckernels = None


def sample(n, p, seed):
    G = random_coloured_graph(n, p, random.Random(seed))
    return residue_gems(G, G.colours)[0] if len(components(G)) > 1 else G


def census_time(pure: bool) -> float:
    env = dict(os.environ, RIGIDGEM_PURE="1" if pure else "0")
    code = ("import time; from rigidgem.catalogue import enumerate_rigid;"
            "t = time.perf_counter(); enumerate_rigid(3, 10);"
            "print(time.perf_counter() - t)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True)
    return float(out.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--no-census", action="store_true")
    args = ap.parse_args()
    mods = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])

    print(f"{'kernel':<28}{'backend':<10}{'seconds/call':>14}")
    for n, p in ((3, 12), (3, 30), (4, 20)):
        G = sample(n, p, 1)
        perms = _perms(G.n)
        for name, mod in mods:
            t = min(timeit.repeat(lambda: mod.canonical_sequence(G._flat, G.n, G.p, perms),
                                  number=3, repeat=args.repeat)) / 3
            print(f"{f'canonical n={G.n} p={G.p}':<28}{name:<10}{t:>14.2e}")
    G = sample(4, 200, 2)
    cols = [0, 2, 3]
    for name, mod in mods:
        t = min(timeit.repeat(lambda: mod.residue_labels(G._flat, G.n, G.p, cols),
                              number=200, repeat=args.repeat)) / 200
        print(f"{f'residues n={G.n} p={G.p}':<28}{name:<10}{t:>14.2e}")
    if not args.no_census:
        for name, pure in (("python", True), ("cython", False)):
            if name == "cython" and _ckernels is None:
                continue
            print(f"{'census n=3 order<=10':<28}{name:<10}{census_time(pure):>14.2f}")


if __name__ == "__main__":
    main()
