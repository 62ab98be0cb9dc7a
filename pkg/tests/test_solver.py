import random

import pytest

from charm.catalog import cubic_graphs
from charm.connectivity import find_cyclic_edge_cut
from charm.enumeration import (
    circuits_from_one_plus_factor,
    complement_subgraph,
    enumerate_circuits,
    enumerate_disjoint_circuit_collections,
    enumerate_perfect_matchings,
    is_acyclic,
)
from charm.errors import CircuitsNotDisjoint, ConnectivityTooLow, EdgeNotInGraph, InvalidFactor, KleeInput
from charm.families import Kind, is_klee, klee_coloring, klee_ladder_special_edge, make_family
from charm.graph import Circuit, edge, hits_all, is_perfect_matching
from charm.io import write_graph6
from charm.solver import (
    SolveConfig,
    acyclic_complement,
    charm_matching,
    charm_matching_any,
    oracle_charm,
    replay,
    second_matching,
)

LOW = SolveConfig(brute_force_threshold=6)
TARGETS = [g for n in (8, 10) for g in cubic_graphs(n) if find_cyclic_edge_cut(g, 2) is None and not is_klee(g)]


def _valid(g, m, e, cs):
    return is_perfect_matching(g, m) and e in m and hits_all(m, cs)


class TestConfig:
    def test_defaults(self):
        c = SolveConfig()
        assert c.brute_force_threshold == 16 and c.enable_distance2_reductions

    def test_threshold_floor(self):
        with pytest.raises(ValueError):
            SolveConfig(brute_force_threshold=4)

    def test_env(self, monkeypatch):
        monkeypatch.setenv("CHARM_THRESHOLD", "8")
        assert SolveConfig.from_env().brute_force_threshold == 8
        assert SolveConfig.from_env(brute_force_threshold=10).brute_force_threshold == 10


class TestOracle:
    def test_k33_single_circuits(self, k33):
        for e in k33.edges:
            for c in enumerate_circuits(k33):
                assert oracle_charm(k33, e, [c]) is not None

    def test_kl12_infeasible(self):
        g = make_family(Kind.KLEE_LADDER, 12)
        e, m = klee_ladder_special_edge(g)
        assert oracle_charm(g, e, circuits_from_one_plus_factor(g, m)) is None

    def test_empty_collection(self, petersen):
        for e in petersen.edges:
            m = oracle_charm(petersen, e)
            assert e in m and is_perfect_matching(petersen, m)

    def test_errors(self, petersen):
        with pytest.raises(EdgeNotInGraph):
            oracle_charm(petersen, (0, 2))
        with pytest.raises(CircuitsNotDisjoint):
            oracle_charm(petersen, (0, 1), [(0, 1, 2, 3, 4), (0, 5, 7, 2, 1)])

    def test_first_in_enumeration_order(self, cube):
        e = cube.edges[0]
        assert oracle_charm(cube, e) == enumerate_perfect_matchings(cube, e)[0]


class TestCharm:
    def test_petersen_two_factor(self, petersen):
        for m in enumerate_perfect_matchings(petersen):
            cs = circuits_from_one_plus_factor(petersen, m)
            for e in petersen.edges:
                res = charm_matching(petersen, e, cs, LOW)
                assert _valid(petersen, res.matching, e, cs)

    def test_cube_faces(self, cube):
        from charm.reductions import four_circuits

        for face in four_circuits(cube):
            for e in cube.edges:
                res = charm_matching(cube, e, [face], LOW)
                assert _valid(cube, res.matching, e, [face])
                assert oracle_charm(cube, e, [face]) is not None

    def test_klee_rejected(self):
        with pytest.raises(KleeInput):
            charm_matching(make_family(Kind.KLEE_LADDER, 12), (0, 1))

    def test_low_connectivity_rejected(self):
        g = next(g for g in cubic_graphs(10) if find_cyclic_edge_cut(g, 2) is not None)
        with pytest.raises(ConnectivityTooLow):
            charm_matching(g, g.edges[0])

    def test_edge_errors(self, petersen):
        with pytest.raises(EdgeNotInGraph):
            charm_matching(petersen, (0, 2))

    @pytest.mark.parametrize("g", TARGETS, ids=write_graph6)
    def test_low_threshold_all_instances(self, g):
        cols = [()] + list(enumerate_disjoint_circuit_collections(g))
        fallbacks = 0
        for e in g.edges:
            for cs in cols:
                res = charm_matching(g, e, cs, LOW)
                assert _valid(g, res.matching, e, cs)
                fallbacks += res.fallbacks
                for step in res.trace:
                    assert all(a < step.n_before for a in step.n_after)
        assert fallbacks == 0

    def test_replay(self):
        rng = random.Random(3)
        for g in rng.sample(TARGETS, 6):
            cols = list(enumerate_disjoint_circuit_collections(g, max_count=30))
            for _ in range(5):
                e, cs = rng.choice(g.edges), rng.choice(cols)
                res = charm_matching(g, e, cs, LOW)
                assert replay(g, e, cs, res, LOW)

    def test_reduction_kinds_exercised(self):
        kinds = set()
        for g in TARGETS:
            for cs in list(enumerate_disjoint_circuit_collections(g, max_count=10)):
                res = charm_matching(g, g.edges[0], cs, LOW)
                kinds |= {s.kind for s in res.trace}
        assert {"3cut", "4circuit", "oracle"} <= kinds


class TestConvenience:
    def test_any_on_klee(self):
        g = make_family(Kind.KLEE_LADDER, 12)
        e, m = klee_ladder_special_edge(g)
        cs = circuits_from_one_plus_factor(g, m)
        got = charm_matching_any(g, cs)
        assert got in klee_coloring(g) and got != m and hits_all(got, cs)

    def test_any_k4_triangle(self, k4):
        for t in enumerate_circuits(k4):
            if len(t) == 3:
                assert hits_all(charm_matching_any(k4, [t]), [t])

    def test_any_petersen(self, petersen):
        for cs in enumerate_disjoint_circuit_collections(petersen):
            assert hits_all(charm_matching_any(petersen, cs, LOW), cs)

    def test_acyclic_complement(self, petersen):
        for e in petersen.edges:
            assert edge(*e) in acyclic_complement(petersen, petersen.edge_set, e)
        for f in enumerate_perfect_matchings(petersen):
            for e in petersen.edges:
                m = acyclic_complement(petersen, f, e, LOW)
                assert e in m and is_acyclic(complement_subgraph(petersen, [f, m]))

    def test_acyclic_complement_errors(self):
        with pytest.raises(KleeInput):
            acyclic_complement(make_family(Kind.KLEE_LADDER, 8), make_family(Kind.KLEE_LADDER, 8).edge_set, (0, 1))
        with pytest.raises(InvalidFactor):
            acyclic_complement(make_family(Kind.LADDER, 8), [(0, 1)], (0, 1))

    @pytest.mark.parametrize("name", ["k4", "petersen", "prism", "cube"])
    def test_second_matching(self, name, request):
        g = request.getfixturevalue(name)
        for m1 in enumerate_perfect_matchings(g):
            m2 = second_matching(g, m1)
            assert is_perfect_matching(g, m2) and is_acyclic(complement_subgraph(g, [m1, m2]))


# the cyclically 5-edge-connected cubic graphs on 14 vertices
C5_14 = [
    "MsP@@?OC?T@I@c@W?",
    "MsP@Go_C?P_c?c?P_",
    "MsP@Og_C?H@B?c?W_",
    "MsP@Og_C?P_o?W?D_",
    "MsP@Og_CGH@A?o?B_",
    "MsP@Og_CGP?a?o?B_",
    "MsP@PGOC?P?a?h?U?",
    "MsP@PGOC?P?b?g?S_",
    "MsP@PGOC?P?c?d?U?",
]


def test_distance_two_branch():
    from charm.connectivity import cyclic_edge_connectivity
    from charm.io import parse_graph6
    from props import random_collection

    rng = random.Random(21)
    kinds, fallbacks = set(), 0
    for code in C5_14:
        g = parse_graph6(code)
        assert cyclic_edge_connectivity(g) >= 5
        for _ in range(12):
            e, cs = rng.choice(g.edges), random_collection(rng, g)
            res = charm_matching(g, e, cs, LOW)
            assert _valid(g, res.matching, e, cs)
            kinds |= {s.kind for s in res.trace}
            fallbacks += res.fallbacks
    assert "edge" in kinds and fallbacks == 0
