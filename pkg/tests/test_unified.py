import random

import pytest

from commgraph import (
    ConnectorVerdict,
    PTrans,
    UnionFind,
    build_unified,
    certify_no_partial_connector,
    empty,
    export_dot,
    identity,
    is_connected,
    parse_element,
    partial_connector_bruteforce,
    point_map,
    power,
)

from oracles import to_dict


def full_cycle(n):
    return PTrans(n, tuple((x + 1) % n for x in range(n)))


def random_full(rng, n):
    return PTrans(n, tuple(rng.randrange(n) for _ in range(n)))


class TestBuild:
    def test_cycle_with_itself_is_cycle_graph(self):
        for n in (3, 4, 5, 6):
            u = build_unified(full_cycle(n), full_cycle(n))
            assert len(u.edges) == n
            assert is_connected(u)

    def test_identity_graph_is_edgeless(self):
        u = build_unified(identity(4), identity(4))
        assert u.edges == frozenset()
        assert not is_connected(u)

    def test_n6_third_power_with_idempotent(self):
        a = parse_element("(1 2 3 4 5 6)^3")
        e = parse_element("{2 6 -> 2}{3 4 -> 3}{5 1 -> 5}")
        u = build_unified(a, e)
        assert is_connected(u)
        assert u.edges == frozenset({(0, 3), (1, 4), (2, 5), (0, 4), (2, 3), (1, 5)})

    def test_n6_square_is_two_triangles_plus_bridge(self):
        a = power(parse_element("(1 2 3 4 5 6)"), 2)
        e = parse_element("{2 6 -> 2}{3 4 -> 3}{5 1 -> 5}")
        u = build_unified(a, e)
        triangles = {(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5)}
        assert u.edges == frozenset(triangles | {(2, 3)})
        assert is_connected(u)

    def test_all_n6_powers_with_idempotent_connected(self):
        alpha = parse_element("(1 2 3 4 5 6)")
        e = parse_element("{2 6 -> 2}{3 4 -> 3}{5 1 -> 5}")
        for k in (2, 3, 4, 5):
            assert is_connected(build_unified(power(alpha, k), e))

    def test_rejects_partial_inputs(self):
        with pytest.raises(ValueError):
            build_unified(point_map(4, 0, 1), identity(4))

    def test_symmetric_in_arguments(self):
        rng = random.Random(5)
        for _ in range(20):
            a, b = random_full(rng, 5), random_full(rng, 5)
            assert build_unified(a, b).edges == build_unified(b, a).edges

    def test_self_graph_has_at_most_n_edges(self):
        rng = random.Random(6)
        for _ in range(20):
            a = random_full(rng, 6)
            assert len(build_unified(a, a).edges) <= 6


class TestConnectivity:
    def test_single_point_graph_connected(self):
        assert is_connected(build_unified(identity(1), identity(1)))

    def test_union_find(self):
        uf = UnionFind(5)
        uf.union(0, 1)
        uf.union(3, 4)
        assert uf.component_count() == 3
        assert uf.find(0) == uf.find(1)
        assert uf.find(0) != uf.find(3)


class TestCertificate:
    def test_n8_fourth_power_proven(self):
        a = power(full_cycle(8), 4)
        e = parse_element("{1 8 -> 1}{2 5 7 -> 2}{3 4 6 -> 3}")
        cert = certify_no_partial_connector(a, e)
        assert cert.verdict is ConnectorVerdict.PROVEN_EMPTY_ONLY
        assert cert.gamma_connected

    def test_identity_pair_inconclusive(self):
        cert = certify_no_partial_connector(identity(4), identity(4))
        assert cert.verdict is ConnectorVerdict.INCONCLUSIVE

    def test_certificate_agrees_with_oracle(self):
        rng = random.Random(9)
        for _ in range(40):
            a, b = random_full(rng, 4), random_full(rng, 4)
            cert = certify_no_partial_connector(a, b)
            if cert.gamma_connected:
                found = partial_connector_bruteforce(a, b)
                assert found == [empty(4)]


class TestBruteforce:
    def test_identity_pair_n3(self):
        found = partial_connector_bruteforce(identity(3), identity(3))
        assert len(found) == 4**3 - 3**3  # every strictly partial map commutes with id

    def test_cycle_and_square(self):
        a = full_cycle(4)
        found = partial_connector_bruteforce(a, power(a, 2))
        assert found == [empty(4)]

    def test_size_guard(self):
        with pytest.raises(ValueError):
            partial_connector_bruteforce(identity(6), identity(6))

    def test_edge_propagation_invariant(self):
        # along any move-graph edge, domain membership of a common commuting
        # element propagates
        rng = random.Random(10)
        for _ in range(25):
            a, b = random_full(rng, 4), random_full(rng, 4)
            edges = build_unified(a, b).edges
            for gamma in partial_connector_bruteforce(a, b):
                dom = gamma.dom()
                for x, y in edges:
                    assert (x in dom) == (y in dom)


class TestDot:
    def test_four_cycle_golden(self):
        u = build_unified(full_cycle(4), full_cycle(4))
        assert export_dot(u) == (
            "graph G {\n"
            '  "1";\n'
            '  "2";\n'
            '  "3";\n'
            '  "4";\n'
            '  "1" -- "2";\n'
            '  "1" -- "4";\n'
            '  "2" -- "3";\n'
            '  "3" -- "4";\n'
            "}\n"
        )

    def test_custom_labels(self):
        u = build_unified(full_cycle(3), full_cycle(3))
        text = export_dot(u, labels=["x1", "x2", "x3"])
        assert '"x1" -- "x2";' in text

    def test_node_count_always_n(self):
        rng = random.Random(11)
        for _ in range(10):
            n = rng.randint(1, 7)
            a = PTrans(n, tuple(rng.randrange(n) for _ in range(n)))
            text = export_dot(build_unified(a, a))
            assert text.count(";") - len(build_unified(a, a).edges) == n
