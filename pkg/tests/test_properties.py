"""Invariants checked on generated graphs."""

import random

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import oracles
from gems import S2, S3
from rigidgem import (
    canonical_code,
    euler_characteristic,
    f_vector,
    find_rho_pairs,
    is_contracted,
    is_rigid,
    is_rigid_via_residues,
    switch_generic,
)
from rigidgem.gem import (
    components,
    gem_key,
    permute_colours,
    random_coloured_graph,
    relabel,
    residue_gems,
    residue_profile,
)
from rigidgem.moves import all_dipoles, cancel_dipole
from rigidgem.reduce import blow_up, crystallize
from rigidgem.rho import Kind, SwitchVariant

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def graphs(draw, min_n=1, max_n=4, max_half=7):
    n = draw(st.integers(min_n, max_n))
    half = draw(st.integers(1, max_half))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_coloured_graph(n, 2 * half, random.Random(seed))


@st.composite
def connected_graphs(draw, **kw):
    G = draw(graphs(**kw))
    return residue_gems(G, G.colours)[0] if len(components(G)) > 1 else G


@st.composite
def spheres(draw, base=S3, max_steps=8):
    return blow_up(base, draw(st.integers(0, 10**6)), draw(st.integers(0, max_steps)))


@SETTINGS
@given(graphs())
def test_f_vector_oracle(G):
    assert f_vector(G) == oracles.f_vector(G)


@SETTINGS
@given(connected_graphs(), st.randoms(use_true_random=False))
def test_code_invariant(G, rnd):
    perm = list(range(1, G.p + 1))
    rnd.shuffle(perm)
    cols = list(G.colours)
    rnd.shuffle(cols)
    H = permute_colours(relabel(G, perm), cols)
    assert canonical_code(H) == canonical_code(G)
    assert canonical_code(canonical_code(G).to_gem()) == canonical_code(G)


@SETTINGS
@given(connected_graphs(max_half=5), connected_graphs(max_half=5))
def test_code_equality_is_isomorphism(G, H):
    if G.n == H.n and G.p == H.p:
        assert (canonical_code(G) == canonical_code(H)) == oracles.isomorphic(G, H)


@SETTINGS
@given(graphs(min_n=2, max_n=4, max_half=6))
def test_rho_pairs_oracle(G):
    got = {(R.colour, tuple(sorted(G.endpoints(R.e))), tuple(sorted(G.endpoints(R.f))),
            "N" if R.kind is Kind.RHO_N else "N1", R.d) for R in find_rho_pairs(G)}
    assert got == oracles.rho_pairs(G)


@SETTINGS
@given(graphs(min_n=3, max_n=4, max_half=6))
def test_rigidity_routes_agree(G):
    assert is_rigid(G) == is_rigid_via_residues(G)


@SETTINGS
@given(graphs(min_n=2, max_n=4))
def test_switch_component_deltas(G):
    base = oracles.components(G)
    for R in find_rho_pairs(G):
        for v in SwitchVariant:
            delta = oracles.components(switch_generic(G, R.e, R.f, v)) - base
            if R.kind is Kind.RHO_N1:
                assert delta == 0
            else:
                assert delta in (0, 1)


@SETTINGS
@given(spheres(base=S2))
def test_s2_gems_keep_chi(G):
    assert euler_characteristic(G) == 2


@SETTINGS
@given(spheres())
def test_three_sphere_gems(G):
    assert euler_characteristic(G) == 0
    C = crystallize(G)
    assert is_contracted(C) and oracles.contracted(C)
    assert not any(R.kind is Kind.RHO_N for R in find_rho_pairs(C))


@SETTINGS
@given(spheres(max_steps=6))
def test_cancel_keeps_residue_verdicts(G):
    # every residue missing a colour stays a 2-sphere after any cancellation
    for d in all_dipoles(G):
        H = cancel_dipole(G, d)
        for c in H.colours:
            for part in residue_gems(H, [i for i in H.colours if i != c]):
                assert oracles.chi(part) == 2


@SETTINGS
@given(connected_graphs(max_half=6))
def test_profile_and_key_invariant(G):
    H = permute_colours(G, list(reversed(list(G.colours))))
    assert residue_profile(H) == residue_profile(G)
    assert gem_key(H) == gem_key(G)
