import os
import random
import subprocess
import sys

import pytest

from rigidgem import _pykernels, kernels
from rigidgem.errors import GemError
from rigidgem.gem import _perms, components, random_coloured_graph, residue_gems

ck = pytest.importorskip("rigidgem._ckernels", reason="compiled kernels not built")


def connected_sample(seed):
    rng = random.Random(seed)
    G = random_coloured_graph(rng.randint(1, 4), 2 * rng.randint(1, 12), rng)
    return residue_gems(G, G.colours)[0] if len(components(G)) > 1 else G


def test_backend_selected():
    pure = os.environ.get("RIGIDGEM_PURE", "") in ("1", "true", "yes")
    assert kernels.BACKEND == ("python" if pure else "cython")


@pytest.mark.parametrize("seed", range(40))
def test_residue_labels_agree(seed):
    rng = random.Random(seed)
    G = random_coloured_graph(rng.randint(1, 4), 2 * rng.randint(1, 12), rng)
    for k in range(0, G.n + 2):
        cols = sorted(rng.sample(range(G.n + 1), k))
        a = _pykernels.residue_labels(G._flat, G.n, G.p, cols)
        b = ck.residue_labels(G._flat, G.n, G.p, cols)
        assert tuple(a[0]) == tuple(b[0]) and a[1] == b[1]


@pytest.mark.parametrize("seed", range(40))
def test_canonical_sequence_agrees(seed):
    G = connected_sample(seed)
    perms = _perms(G.n)
    a = _pykernels.canonical_sequence(G._flat, G.n, G.p, perms)
    b = ck.canonical_sequence(G._flat, G.n, G.p, perms)
    assert tuple(a) == tuple(b)


def test_disconnected_rejected_by_both():
    from rigidgem.gem import disjoint_union, standard_crystallization

    S3 = standard_crystallization(3)
    G = disjoint_union(S3, S3)
    for mod in (_pykernels, ck):
        with pytest.raises(ValueError):
            mod.canonical_sequence(G._flat, G.n, G.p, _perms(3))


def test_pure_fallback_by_environment():
    env = dict(os.environ, RIGIDGEM_PURE="1")
    code = "import rigidgem; print(rigidgem.BACKEND, rigidgem.canonical_code(rigidgem.standard_crystallization(3)))"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True).stdout
    assert out == "python 3:2:22221111\n"


def test_errors_are_value_errors():
    assert issubclass(GemError, ValueError)
