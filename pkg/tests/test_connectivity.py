import networkx as nx
import pytest

from charm.catalog import cubic_graphs
from charm.connectivity import (
    cut_between,
    cyclic_edge_connectivity,
    edge_distance,
    find_cyclic_edge_cut,
    girth,
    is_bridgeless,
    is_cyclically_k_edge_connected,
)
from charm.errors import EdgeNotInGraph
from charm.io import write_graph6

GRAPHS = [g for n in (4, 6, 8, 10) for g in cubic_graphs(n)]


def _bipartition_oracle(g):
    """Minimum cyclic cut size by scanning vertex bipartitions."""
    best = None
    for mask in range(1, 1 << (g.n - 1)):
        side = frozenset(v for v in range(g.n) if mask >> v & 1)
        cut = cut_between(g, side)
        if cut.cyclic and (best is None or len(cut) < best):
            best = len(cut)
    return best if best is not None else len(g.edges) - g.n + 1


def test_known_values(k4, k33, petersen, prism):
    assert cyclic_edge_connectivity(k4) == 3
    assert cyclic_edge_connectivity(k33) == 4
    assert cyclic_edge_connectivity(petersen) == 5
    assert cyclic_edge_connectivity(prism) == 3


@pytest.mark.parametrize("g", GRAPHS, ids=write_graph6)
def test_against_bipartition_oracle(g):
    assert cyclic_edge_connectivity(g) == _bipartition_oracle(g)


def test_prism_cut(prism):
    cut = find_cyclic_edge_cut(prism, 3)
    assert len(cut) == 3 and cut.cyclic
    # the three rungs joining the two triangles
    assert all(not (set(e) <= cut.side_a or set(e) <= cut.side_b) for e in cut.crossing)
    assert len(cut.side_a) == 3


def test_none_found(petersen, k4):
    assert find_cyclic_edge_cut(petersen, 4) is None
    assert find_cyclic_edge_cut(k4, 5) is None


@pytest.mark.parametrize("g", GRAPHS, ids=write_graph6)
def test_cut_properties(g):
    for k in (1, 2, 3, 4):
        cut = find_cyclic_edge_cut(g, k)
        if cut is None:
            assert find_cyclic_edge_cut(g, k - 1) is None if k > 1 else True
            continue
        again = cut_between(g, cut.side_a)
        assert set(again.crossing) == set(cut.crossing) and again.cyclic
        if len(cut) == 3 and find_cyclic_edge_cut(g, 2) is None:
            ends = [v for e in cut.crossing for v in e]
            assert len(set(ends)) == 6
    if cyclic_edge_connectivity(g) >= 3:
        assert is_bridgeless(g) and is_cyclically_k_edge_connected(g, 3)


@pytest.mark.parametrize("g", GRAPHS, ids=write_graph6)
def test_girth_and_bridges(g):
    h = nx.Graph(list(g.edges))
    assert girth(g) == nx.girth(h)
    assert is_bridgeless(g) == (not nx.has_bridges(h))


def test_small_girths(k4, k33, petersen):
    assert (girth(k4), girth(k33), girth(petersen)) == (3, 4, 5)
    assert is_bridgeless(k4)


def test_edge_distance(prism, petersen):
    assert edge_distance(prism, (0, 1), (0, 1)) == 0
    assert edge_distance(prism, (0, 1), (0, 2)) == 1
    lg = nx.line_graph(nx.Graph(list(petersen.edges)))
    for f in petersen.edges:
        want = nx.shortest_path_length(lg, (0, 1), f if f in lg else f[::-1])
        assert edge_distance(petersen, (0, 1), f) == want
    with pytest.raises(EdgeNotInGraph):
        edge_distance(prism, (0, 5), (0, 1))
