import itertools

import networkx as nx
import pytest

from treecount.errors import CapacityError, DomainError, GenerationFailedError
from treecount.graph import INFINITE, Graph, girth, regular_degree
from treecount.treegen import (
    GenSpec,
    LiftVertex,
    complete_graph,
    gen_lifted_complete,
    gen_random_regular,
    generate,
    lift,
    lift_cycle,
    named_graph,
    shortest_cycle,
)


def reference_lift(g):
    """Direct transcription: (v, s) ~ (w, s xor e_i) for the i-th edge vw."""
    edges = g.edges()
    h = nx.Graph()
    for v, bits in itertools.product(range(g.n), itertools.product((0, 1), repeat=len(edges))):
        h.add_node((v, bits))
    for i, (u, v) in enumerate(edges):
        for bits in itertools.product((0, 1), repeat=len(edges)):
            flipped = list(bits)
            flipped[i] ^= 1
            h.add_edge((u, bits), (v, tuple(flipped)))
    return h


@pytest.mark.parametrize("base", [complete_graph(3), Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])])
def test_lift_matches_reference(base):
    got = lift(base)
    ref = reference_lift(base)
    m = base.num_edges
    # vertex id = base * 2^m + labeling, bit i of the labeling <-> edge i
    relabel = {
        (v, bits): LiftVertex(v, sum(b << i for i, b in enumerate(bits)), m).id for v, bits in ref.nodes
    }
    expected = Graph.from_edges(got.n, [(relabel[a], relabel[b]) for a, b in ref.edges])
    assert got == expected


def test_lift_vertex_ids_round_trip():
    v = LiftVertex(5, 0b1011, 6)
    assert v.id == 5 * 64 + 11
    assert LiftVertex.from_id(v.id, 6) == v
    assert v.bits() == (1, 1, 0, 1, 0, 0)


@pytest.mark.parametrize("base", ["k3", "k4", "cycle_5"])
def test_lift_preserves_degree_and_doubles_girth(base):
    g = named_graph(base)
    h = lift(g)
    assert h.n == g.n * 2**g.num_edges
    assert regular_degree(h) == regular_degree(g)
    assert girth(h) == 2 * girth(g)


def test_lift_of_forest_is_forest():
    path = named_graph("path_3")
    h = lift(path)
    assert h.n == 12
    assert girth(h) == INFINITE


def test_lift_cycle_is_a_cycle_of_double_length():
    g = complete_graph(4)
    h = lift(g)
    cyc = lift_cycle(g)
    assert len(cyc) == 2 * girth(g) == len(set(cyc))
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        assert h.has_edge(a, b)


def test_shortest_cycle(petersen):
    cyc = shortest_cycle(petersen)
    assert len(cyc) == 5
    assert all(petersen.has_edge(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1]))
    assert shortest_cycle(named_graph("path_4")) is None
    with pytest.raises(DomainError):
        lift_cycle(named_graph("path_4"))


def test_lift_capacity_guards():
    with pytest.raises(CapacityError):
        lift(complete_graph(8))  # 28 edges
    with pytest.raises(CapacityError):
        gen_lifted_complete(2, 2)  # 24 * 2^24 vertices


def test_lifted_complete_sizes():
    assert gen_lifted_complete(2, 0) == complete_graph(3)
    g = gen_lifted_complete(3, 1)
    assert (g.n, regular_degree(g), girth(g)) == (256, 3, 6)
    with pytest.raises(DomainError):
        gen_lifted_complete(1, 1)


@pytest.mark.parametrize("n,d,min_girth", [(100, 3, 6), (500, 4, 7), (1000, 3, 10), (40, 6, 4)])
def test_random_regular_meets_its_contract(n, d, min_girth):
    g = gen_random_regular(n, d, min_girth, seed=5)
    assert g.n == n
    assert regular_degree(g) == d
    assert girth(g) >= min_girth


def test_random_regular_is_seed_deterministic():
    a = gen_random_regular(300, 3, 7, seed=42)
    b = gen_random_regular(300, 3, 7, seed=42)
    c = gen_random_regular(300, 3, 7, seed=43)
    assert a == b
    assert a != c


def test_random_regular_domain_errors():
    with pytest.raises(DomainError, match="even"):
        gen_random_regular(7, 3, 3, 0)
    with pytest.raises(DomainError):
        gen_random_regular(4, 4, 3, 0)
    with pytest.raises(GenerationFailedError):
        gen_random_regular(12, 3, 10, 0, max_attempts=3)
    assert gen_random_regular(5, 0, 3, 0).num_edges == 0


@pytest.mark.parametrize(
    "name,n,d,g",
    [("petersen", 10, 3, 5), ("heawood", 14, 3, 6), ("tutte_coxeter", 30, 3, 8), ("cage_4_8", 80, 4, 8)],
)
def test_fixtures_match_networkx(name, n, d, g):
    graph = named_graph(name)
    assert (graph.n, regular_degree(graph), girth(graph)) == (n, d, g)
    h = nx.Graph(graph.edges())
    if name == "petersen":
        assert nx.is_isomorphic(h, nx.petersen_graph())
    if name == "heawood":
        assert nx.is_isomorphic(h, nx.heawood_graph())
    if name == "tutte_coxeter":
        assert nx.is_isomorphic(h, nx.LCF_graph(30, [-13, -9, 7, -7, 9, 13], 5))


def test_named_graph_families():
    assert named_graph("K5") == complete_graph(5)
    assert named_graph("cycle_6").num_edges == 6
    with pytest.raises(DomainError):
        named_graph("cycle_2")
    with pytest.raises(DomainError):
        named_graph("no-such-graph")


def test_generate_dispatch():
    assert generate(GenSpec("named", name="k4")) == complete_graph(4)
    assert generate(GenSpec("lifted-complete", degree=2, lifts=1)).n == 24
    assert generate(GenSpec("random-regular", degree=3, n=30, min_girth=4, seed=1)).n == 30
    with pytest.raises(DomainError):
        generate(GenSpec("bogus"))
