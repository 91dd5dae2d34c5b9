from functools import reduce

import networkx as nx
import pytest

from config.constants import DEFAULT_GOLDEN_PATH, EXPECTED_1D_CLASSES
from models.graph import Graph1D
from models.matroid import Matroid
from models.simplicial_complex import SimplicialComplex
from services.complex_service import ComplexService
from services.cotangent_service import CotangentService
from services.graph_service import GoldenFormatError, GraphService
from services.matroid_service import MatroidService


def cycle_graph(n):
    return Graph1D.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def from_nx(graph):
    return Graph1D.from_edges(graph.number_of_nodes(), graph.edges())


def atlas(max_nodes):
    """辺を1本以上持つ max_nodes 頂点以下の全てのグラフ"""
    return [g for g in nx.graph_atlas_g() if 2 <= g.number_of_nodes() <= max_nodes and g.number_of_edges()]


SQUARE_WITH_LEAF = Graph1D.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
TWO_TRIANGLES = Graph1D.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
HEXAGON_WITH_LEAF = Graph1D.from_edges(7, [(i, (i + 1) % 6) for i in range(6)] + [(0, 6)])


# =========================
# 入力の検証
# =========================
def test_graph_requires_dimension_one():
    with pytest.raises(ValueError):
        Graph1D.from_complex(SimplicialComplex.simplex(3))
    with pytest.raises(ValueError):
        Graph1D.from_complex(SimplicialComplex.zero_dimensional(3))


def test_graph_rejects_loops():
    with pytest.raises(ValueError):
        Graph1D.from_complex(SimplicialComplex.from_facets(3, [[0, 1]]))


# =========================
# 3つの条件
# =========================
def test_condition_i():
    assert not GraphService.condition_i(from_nx(nx.star_graph(4)))
    assert GraphService.condition_i(cycle_graph(5))
    assert GraphService.condition_i(SQUARE_WITH_LEAF)


def test_condition_ii():
    assert GraphService.condition_ii(cycle_graph(3))
    assert GraphService.condition_ii(cycle_graph(7))
    assert not GraphService.condition_ii(TWO_TRIANGLES)
    # 唯一の閉路は葉も支配する
    assert GraphService.condition_ii(HEXAGON_WITH_LEAF)


def _assert_condition_ii_matches_cycles(levels):
    for n, graphs in levels.items():
        for adjacency in graphs:
            if any(adjacency):
                g = Graph1D.from_adjacency(adjacency)
                assert GraphService.condition_ii(g) == GraphService.every_cycle_dominating(g), g.edge_pairs


def test_condition_ii_matches_cycle_enumeration(graph_service):
    _assert_condition_ii_matches_cycles(graph_service.enumerate_graphs(6, max_degree=5))


@pytest.mark.slow
def test_condition_ii_matches_cycle_enumeration_up_to_eight_vertices(graph_service):
    _assert_condition_ii_matches_cycles(graph_service.enumerate_graphs(8, max_degree=7))


def test_condition_iii():
    path4 = Graph1D.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert GraphService.condition_iii(path4)
    assert not GraphService.condition_iii(Graph1D.from_edges(4, [(0, 1), (2, 3)]))
    assert GraphService.condition_iii(from_nx(nx.complete_graph(4)))


@pytest.mark.parametrize("n", range(2, 8))
def test_trees(n):
    for tree in nx.nonisomorphic_trees(n):
        assert GraphService.unobstructed_1d(from_nx(tree)) is (n <= 4)


def test_square_with_leaf_is_unobstructed():
    assert GraphService.unobstructed_1d(SQUARE_WITH_LEAF)


# =========================
# 3条件と T² = 0 の同値
# =========================
def test_conditions_match_t2_on_small_graphs():
    service = CotangentService()
    for graph in atlas(5):
        g = from_nx(graph)
        assert GraphService.unobstructed_1d(g) == service.t2_vanishes(g.complex).vanishes


@pytest.mark.slow
def test_conditions_match_t2_on_all_graphs_up_to_seven_vertices():
    service = CotangentService()
    for graph in atlas(7):
        g = from_nx(graph)
        assert GraphService.unobstructed_1d(g) == service.t2_vanishes(g.complex).vanishes


# =========================
# 誘導閉路
# =========================
def test_chordless_cycles():
    assert GraphService.chordless_cycles(cycle_graph(4)) == [(0, 1, 2, 3)]
    k4 = GraphService.chordless_cycles(from_nx(nx.complete_graph(4)))
    assert len(k4) == 4 and all(len(c) == 3 for c in k4)
    assert GraphService.max_chordless_len(cycle_graph(7)) == 7
    assert GraphService.max_chordless_len(from_nx(nx.path_graph(4))) == 0


def test_long_chordless_cycle_obstructs():
    service = CotangentService()
    for n in (7, 8):
        assert not service.t2_vanishes(cycle_graph(n).complex).vanishes


def test_obstructed_candidates_pass_i_but_not_ii():
    service = CotangentService()
    nine, ten = GraphService.obstructed_candidates()
    assert (nine.n, len(nine.edge_pairs)) == (9, 12)
    assert (ten.n, len(ten.edge_pairs)) == (10, 15)
    for graph in (nine, ten):
        # 1始まりの 2,7,9,6,8,3 は頂点5を支配しない
        assert (1, 2, 7, 5, 8, 6) in GraphService.chordless_cycles(graph)
        assert GraphService.condition_i(graph)
        assert not GraphService.condition_ii(graph)
        assert not service.t2_vanishes(graph.complex).vanishes


# =========================
# 列挙と分類
# =========================
def test_enumerate_graphs_small_counts(graph_service):
    levels = graph_service.enumerate_graphs(4)
    assert [len(levels[n]) for n in range(1, 5)] == [1, 2, 4, 11]


def test_enumerate_graphs_respects_degree_bound(graph_service):
    levels = graph_service.enumerate_graphs(5, max_degree=2)
    assert all(row.bit_count() <= 2 for graphs in levels.values() for adj in graphs for row in adj)


def test_classify_small(graph_service):
    result = graph_service.classify_1d(4)
    assert result.count > 0
    assert all(e.n <= 4 for e in result.entries)
    assert len({e.canonical for e in result.entries}) == result.count
    assert all(GraphService.unobstructed_1d(Graph1D.from_complex(e.complex)) for e in result.entries)
    keys = [(e.n, e.edge_count, e.canonical) for e in result.entries]
    assert keys == sorted(keys)
    labels = {e.canonical for e in result.entries}
    assert ComplexService().canonical_form(cycle_graph(4).complex) in labels
    assert ComplexService().canonical_form(cycle_graph(3).complex) in labels


def test_classify_rejects_large_bound(graph_service):
    with pytest.raises(ValueError):
        graph_service.classify_1d(9)


def test_golden_comparison_reports_missing_classes(graph_service, tmp_path):
    result = graph_service.classify_1d(4)
    path = tmp_path / "golden.txt"
    graph_service.write_golden(result, str(path), 4)
    assert graph_service.compare_golden(result, str(path), 4) == []
    lines = path.read_text(encoding="utf-8").splitlines()
    path.write_text("\n".join(lines[:-1]) + "\n", encoding="utf-8")
    diff = graph_service.compare_golden(result, str(path), 4)
    assert any(line.startswith("+n=") for line in diff)


def test_golden_comparison_ignores_vertex_labels(graph_service, tmp_path):
    # 四角形に葉を付けたものを番号を変えて書く
    path = tmp_path / "golden.txt"
    path.write_text("n=5 edges=5 matroid=no edgelist=1-4,2-4,2-3,1-3,3-0\n", encoding="utf-8")
    (entry,) = graph_service.read_golden(str(path))
    assert entry.canonical == ComplexService().canonical_form(SQUARE_WITH_LEAF.complex)


@pytest.mark.parametrize("text,line", [
    ("n=3 edges=1 matroid=no\n", 1),
    ("# header\nn=3 edges=1 matroid=maybe edgelist=0-1\n", 2),
    ("n=3 edges=2 matroid=no edgelist=0-1\n", 1),
    ("n=2 edges=1 matroid=yes edgelist=0-1\n\nn=3 edges=1 matroid=no edgelist=0-7\n", 3),
])
def test_malformed_golden_line(graph_service, tmp_path, text, line):
    path = tmp_path / "golden.txt"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(GoldenFormatError) as info:
        graph_service.read_golden(str(path))
    assert info.value.line == line


# =========================
# 同梱の一覧
# =========================
def _assert_classification_claims(entries):
    """分類の一覧について成り立つべき性質をまとめて確かめる"""
    cotangent = CotangentService()
    matroids = MatroidService(cotangent)
    labeler = ComplexService()
    assert len({e.canonical for e in entries}) == len(entries)
    graphs = [Graph1D.from_complex(e.complex) for e in entries]
    assert all(GraphService.unobstructed_1d(g) for g in graphs)
    assert max(g.n for g in graphs) <= 8

    with_leaf = [g for g in graphs if any(g.degree(v) == 1 for v in range(g.n))]
    assert all(g.n <= 5 for g in with_leaf)
    five = [g for g in with_leaf if g.n == 5]
    assert len(five) == 1
    assert labeler.are_isomorphic(five[0].complex, SQUARE_WITH_LEAF.complex)

    trees = [g for g in graphs if nx.is_tree(g.to_networkx())]
    assert trees and all(g.n <= 4 for g in trees)

    for g in graphs:
        cycles = GraphService.chordless_cycles(g)
        if cycles:
            assert g.n <= 2 * min(len(c) for c in cycles)
            assert max(len(c) for c in cycles) < 7

    # matroid 印は is_matroid と一致し、直和分解で閉じている
    assert [e.is_matroid for e in entries] == [MatroidService.is_matroid(e.complex) for e in entries]
    flagged = [e for e in entries if e.is_matroid]
    assert len(flagged) == 9
    flagged_labels = {e.canonical for e in flagged}
    for entry in flagged:
        matroid = Matroid.from_complex(entry.complex)
        components = matroids.connected_components(matroid)
        joined = reduce(MatroidService.direct_sum, components)
        assert labeler.are_isomorphic(joined.complex, matroid.complex)
        for component in components:
            assert cotangent.t2_vanishes(component.complex).vanishes
            if component.rank == 2:
                assert labeler.canonical_form(component.complex) in flagged_labels


def test_bundled_golden_list(graph_service):
    entries = graph_service.read_golden(DEFAULT_GOLDEN_PATH)
    assert len(entries) == EXPECTED_1D_CLASSES
    assert [sum(e.n == n for e in entries) for n in range(2, 9)] == [1, 3, 6, 5, 6, 2, 3]
    _assert_classification_claims(entries)


def test_bundled_golden_agrees_on_small_graphs(graph_service):
    result = graph_service.classify_1d(5)
    assert graph_service.compare_golden(result, DEFAULT_GOLDEN_PATH, 5) == []


@pytest.mark.slow
def test_classification_has_twenty_six_classes():
    service = GraphService(jobs=2)
    result = service.classify_1d(8)
    assert result.count == EXPECTED_1D_CLASSES
    assert ([e.key_line() for e in result.entries]
            == [e.key_line() for e in service.read_golden(DEFAULT_GOLDEN_PATH)])
    assert service.compare_golden(result, DEFAULT_GOLDEN_PATH, 8) == []
    _assert_classification_claims(result.entries)


# =========================
# 完全二部グラフ
# =========================
@pytest.mark.parametrize("r,s", [(r, s) for s in range(1, 5) for r in range(1, s + 1)])
def test_complete_bipartite(r, s):
    graph = from_nx(nx.complete_bipartite_graph(r, s))
    assert GraphService.unobstructed_1d(graph) is (s <= 3)
    if r + s <= 6:
        assert CotangentService().t2_vanishes(graph.complex).vanishes is (s <= 3)


@pytest.mark.slow
@pytest.mark.parametrize("r,s", [(3, 4), (4, 4)])
def test_complete_bipartite_t2_directly(r, s):
    graph = from_nx(nx.complete_bipartite_graph(r, s))
    assert not CotangentService().t2_vanishes(graph.complex).vanishes
