import itertools
import random

import pytest

import oracles
from gems import B4, Q4, RP2, S2, S3, S4, TORUS
from rigidgem import (
    CanonicalCode,
    Gem,
    bipartition,
    canonical_code,
    colour_isomorphic,
    euler_characteristic,
    f_vector,
    is_contracted,
    new_gem,
    residue_of,
    residues,
    standard_crystallization,
)
from rigidgem.errors import (
    BadArity,
    BadColour,
    DimensionMismatch,
    Disconnected,
    GemError,
    InvalidInvolution,
)
from rigidgem.gem import (
    Edge,
    components,
    disjoint_union,
    gem_key,
    is_bipartite,
    permute_colours,
    random_coloured_graph,
    relabel,
    residue_count,
    residue_gems,
    subgem,
    with_matching,
)


class TestConstruction:
    def test_standard_crystallization(self):
        G = new_gem(3, 2, [[2, 1]] * 4)
        assert G == S3
        assert G.p == 2 and G.n == 3

    def test_loop_rejected(self):
        with pytest.raises(InvalidInvolution):
            new_gem(3, 2, [[1, 1], [2, 1], [2, 1], [2, 1]])

    def test_not_an_involution(self):
        with pytest.raises(InvalidInvolution):
            new_gem(1, 4, [[2, 1, 4, 3], [2, 3, 4, 1]])

    def test_q4_is_valid(self):
        assert Q4.p == 4
        for c in Q4.colours:
            for v in Q4.vertices:
                w = Q4.neighbour(v, c)
                assert w != v and Q4.neighbour(w, c) == v

    def test_tables_with_sentinel_and_mappings(self):
        a = new_gem(1, 2, [[0, 2, 1], {1: 2, 2: 1}])
        assert a == standard_crystallization(1)

    @pytest.mark.parametrize("n,p,adj", [
        (0, 2, [[2, 1]]),
        (1, 1, [[1], [1]]),
        (1, 2, [[2, 1]]),
        (1, 2, [[2, 1, 3], [2, 1]]),
    ])
    def test_bad_arity(self, n, p, adj):
        with pytest.raises(BadArity):
            new_gem(n, p, adj)

    def test_out_of_range_neighbour(self):
        with pytest.raises(GemError):
            new_gem(1, 2, [[2, 3], [2, 1]])

    def test_edges_and_matching(self):
        assert Q4.edges(0) == [Edge(1, 0), Edge(3, 0)]
        assert Q4.matching(2) == [(1, 3), (2, 4)]
        assert Q4.edge(4, 2) == Edge(2, 2)
        assert Q4.endpoints(Edge(4, 2)) == (4, 2)
        assert Q4.joining_colours(1, 2) == {0, 1}
        assert len(Q4.edges()) == 2 * 4

    def test_equality_and_hash(self):
        again = Gem.from_matchings([[(3, 4), (1, 2)]] * 2 + [[(2, 4), (1, 3)]] * 2)
        assert again == Q4 and hash(again) == hash(Q4)
        assert Q4 != B4


class TestResidues:
    def test_s3_single_block(self):
        assert residues(S3, {0, 1}).blocks == ((1, 2),)

    def test_q4_blocks(self):
        assert residues(Q4, {0, 1}).blocks == ((1, 2), (3, 4))
        assert residues(Q4, {0, 2}).blocks == ((1, 2, 3, 4),)

    def test_residue_of(self):
        assert residue_of(Q4, {0, 1}, 1) == {1, 2}
        assert residue_of(Q4, set(), 3) == {3}
        assert residue_of(S3, {0, 1, 2}, 2) == {1, 2}

    def test_bad_colour(self):
        with pytest.raises(BadColour):
            residues(S3, {4})

    @pytest.mark.parametrize("seed", range(30))
    def test_blocks_match_union_find(self, seed):
        rng = random.Random(seed)
        G = random_coloured_graph(rng.randint(1, 4), 2 * rng.randint(1, 8), rng)
        for k in range(1, G.n + 2):
            for B in itertools.combinations(G.colours, k):
                assert [frozenset(b) for b in residues(G, B).blocks] == oracles.blocks(G, B)
                assert residue_count(G, B) == len(oracles.blocks(G, B))

    def test_residue_gems(self):
        parts = residue_gems(Q4, (2, 3))
        assert [h.p for h in parts] == [2, 2]
        assert all(h == standard_crystallization(1) for h in parts)


class TestInvariants:
    def test_f_vector_examples(self):
        assert f_vector(S2) == [3, 3, 2]
        assert f_vector(S3) == [4, 6, 4, 2]
        assert f_vector(Q4) == oracles.f_vector(Q4) == [4, 8, 8, 4]

    def test_euler_characteristic(self):
        assert euler_characteristic(S2) == 2
        assert euler_characteristic(S3) == 0
        assert euler_characteristic(Q4) == 0
        assert euler_characteristic(TORUS) == 0
        assert euler_characteristic(RP2) == 1

    @pytest.mark.parametrize("seed", range(30))
    def test_f_vector_matches_oracle(self, seed):
        rng = random.Random(100 + seed)
        G = random_coloured_graph(rng.randint(1, 4), 2 * rng.randint(1, 6), rng)
        assert f_vector(G) == oracles.f_vector(G)
        assert euler_characteristic(G) == oracles.chi(G)

    def test_bipartition(self):
        assert bipartition(S3) == ({1}, {2})
        assert bipartition(Q4) == ({1, 4}, {2, 3})
        assert bipartition(RP2) is None
        assert not is_bipartite(RP2)

    def test_q4_switched_not_bipartite(self):
        # join 1-4 and 2-3 in colour 0
        H = with_matching(Q4, 0, [(1, 4), (2, 3)])
        assert bipartition(H) is None
        assert oracles.two_colouring(H) is None

    @pytest.mark.parametrize("seed", range(30))
    def test_bipartition_matches_oracle(self, seed):
        rng = random.Random(200 + seed)
        G = random_coloured_graph(rng.randint(1, 3), 2 * rng.randint(1, 6), rng)
        assert bipartition(G) == oracles.two_colouring(G)

    def test_contracted(self):
        for n in range(1, 5):
            assert is_contracted(standard_crystallization(n))
        assert is_contracted(Q4)
        assert not is_contracted(B4)
        assert not is_contracted(disjoint_union(S3, S3))
        assert oracles.contracted(Q4) and not oracles.contracted(B4)


class TestCodes:
    def test_known_codes(self):
        assert str(canonical_code(S3)) == "3:2:22221111"
        assert str(canonical_code(Q4)) == "3:4:2233114444113322"

    def test_round_trip(self):
        for G in (S3, Q4, B4, TORUS, RP2):
            code = canonical_code(G)
            assert CanonicalCode.parse(str(code)) == code
            H = code.to_gem()
            assert canonical_code(H) == code
            assert oracles.isomorphic(G, H)

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            canonical_code(disjoint_union(S3, S3))

    def test_malformed(self):
        for bad in ("3:2:2222111", "x:2:22221111", "3:2:2222111!", "22221111"):
            with pytest.raises(GemError):
                CanonicalCode.parse(bad)

    def test_wide_digits(self):
        G = random_coloured_graph(2, 64, random.Random(5))
        G = residue_gems(G, G.colours)[0] if len(components(G)) > 1 else G
        code = canonical_code(G)
        assert canonical_code(code.to_gem()) == code

    def test_colour_isomorphic(self):
        assert colour_isomorphic(S3, relabel(S3, [2, 1]))
        assert not colour_isomorphic(Q4, B4)
        with pytest.raises(DimensionMismatch):
            colour_isomorphic(S2, S3)
        assert not colour_isomorphic(S3, Q4)

    def test_gem_key_disconnected(self):
        a = disjoint_union(S3, Q4)
        b = disjoint_union(Q4, S3)
        assert gem_key(a) == gem_key(b)
        assert gem_key(a) != gem_key(disjoint_union(S3, B4))

    def test_permute_colours(self):
        H = permute_colours(Q4, [2, 3, 0, 1])
        assert H.matching(0) == Q4.matching(2)
        assert canonical_code(H) == canonical_code(Q4)
        with pytest.raises(BadColour):
            permute_colours(Q4, [0, 0, 1, 2])

    def test_subgem(self):
        H = subgem(Q4, {1, 2}, (0, 1))
        assert H == standard_crystallization(1)
        with pytest.raises(GemError):
            subgem(Q4, {1, 3}, (0, 1))

    def test_n4_standard(self):
        assert S4.p == 2
        assert len(S4.edges()) == 5
