"""
Graph Service: the three-condition test for one-dimensional complexes and their classification
"""
import difflib
import logging
import os
from functools import partial
from itertools import combinations
from typing import Dict, List, Optional, Tuple

import networkx as nx
from tqdm import tqdm

from config.constants import MAX_CANONICAL_N, MAX_CLASSIFY_N
from models import vertex_set as vs
from models.graph import Graph1D
from models.report import ClassificationEntry, ClassificationResult
from services.complex_service import ComplexService
from services.matroid_service import MatroidService
from utils.parallel import ordered_map

logger = logging.getLogger(__name__)

Adjacency = Tuple[int, ...]

# 9頂点・10頂点の候補（1始まりの番号）：五角形 1-2-3-4-5 に頂点を足したもの
_CANDIDATE_9_EDGES = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
                      (1, 6), (2, 7), (3, 8), (4, 9), (6, 8), (6, 9), (7, 9)]
_CANDIDATE_10_EXTRA = [(5, 10), (7, 10), (8, 10)]


class GoldenFormatError(ValueError):
    """ゴールデンファイルの形式エラー（line は1始まりの行番号）"""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _evaluate_candidate(adjacency: Adjacency, max_canonical_n: int) -> Optional[ClassificationEntry]:
    """分類のワーカー：T² = 0 なら標準形付きの代表を返す"""
    graph = Graph1D.from_adjacency(adjacency)
    if not GraphService.unobstructed_1d(graph):
        return None
    label = ComplexService(max_n=max_canonical_n).canonical_form(graph.complex)
    return ClassificationEntry(graph.complex, label, MatroidService.is_matroid(graph.complex))


class GraphService:
    """1次元複体の T² = 0 判定（3条件）と同型類の分類を行うサービスクラス"""

    def __init__(self, jobs: int = 1, max_canonical_n: int = MAX_CANONICAL_N):
        """
        GraphServiceの初期化

        Args:
            jobs: 分類で使うワーカープロセス数
            max_canonical_n: 標準形の頂点数上限
        """
        self.jobs = jobs
        self.max_canonical_n = max_canonical_n

    # =========================
    # 3つの条件
    # =========================
    @staticmethod
    def condition_i(graph: Graph1D) -> bool:
        """全ての頂点の局所次数が3以下"""
        return all(graph.degree(v) <= 3 for v in range(graph.n))

    @staticmethod
    def _is_forest(graph: nx.Graph) -> bool:
        # 空グラフも森とみなす
        return graph.number_of_edges() == graph.number_of_nodes() - nx.number_connected_components(graph)

    @classmethod
    def condition_ii(cls, graph: Graph1D) -> bool:
        """全ての閉路が支配集合（各 i について Δ∖ν(i) が森）"""
        g = graph.to_networkx()
        for i in range(graph.n):
            removed = set(vs.members(graph.complex.neighborhood(i)))
            if not cls._is_forest(g.subgraph(set(g.nodes) - removed)):
                return False
        return True

    @staticmethod
    def every_cycle_dominating(graph: Graph1D) -> bool:
        """閉路を全て列挙して支配性を直接確かめる（condition_ii の検算用）"""
        g = graph.to_networkx()
        return all(nx.is_dominating_set(g, cycle) for cycle in nx.simple_cycles(g))

    @staticmethod
    def condition_iii(graph: Graph1D) -> bool:
        """隣接しない全ての2点 b について Δ∖b̂ が連結"""
        g = graph.to_networkx()
        edges = set(graph.complex.edges)
        for u, v in combinations(range(graph.n), 2):
            b = 1 << u | 1 << v
            if b in edges:
                continue
            removed = set(vs.members(graph.complex.b_hat(b)))
            rest = g.subgraph(set(g.nodes) - removed)
            if nx.number_connected_components(rest) > 1:
                return False
        return True

    @classmethod
    def unobstructed_1d(cls, graph: Graph1D) -> bool:
        """T² = 0 ⟺ 条件 (i), (ii), (iii) を全て満たす"""
        return cls.condition_i(graph) and cls.condition_ii(graph) and cls.condition_iii(graph)

    # =========================
    # 誘導閉路
    # =========================
    @staticmethod
    def _normalize_cycle(cycle: List[int]) -> Tuple[int, ...]:
        start = cycle.index(min(cycle))
        rotated = cycle[start:] + cycle[:start]
        reverse = [rotated[0]] + rotated[1:][::-1]
        return tuple(min(rotated, reverse))

    @classmethod
    def chordless_cycles(cls, graph: Graph1D) -> List[Tuple[int, ...]]:
        """弦のない閉路（最小頂点から始まる向きに正規化して整列）"""
        cycles = {cls._normalize_cycle(list(c)) for c in nx.chordless_cycles(graph.to_networkx())}
        return sorted(cycles, key=lambda c: (len(c), c))

    @classmethod
    def max_chordless_len(cls, graph: Graph1D) -> int:
        return max((len(c) for c in cls.chordless_cycles(graph)), default=0)

    # =========================
    # 列挙と分類
    # =========================
    @staticmethod
    def _signature(adjacency: Adjacency) -> tuple:
        """同型不変な指紋（辺数と、各頂点の次数・隣接点の次数列）"""
        degrees = [row.bit_count() for row in adjacency]
        profile = sorted((degrees[v], tuple(sorted(degrees[u] for u in vs.members(row))))
                         for v, row in enumerate(adjacency))
        return (sum(degrees) // 2, tuple(profile))

    @staticmethod
    def _to_networkx(adjacency: Adjacency) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(len(adjacency)))
        graph.add_edges_from((u, v) for u, row in enumerate(adjacency) for v in vs.members(row) if u < v)
        return graph

    def enumerate_graphs(self, max_n: int, max_degree: int = 3) -> Dict[int, List[Adjacency]]:
        """最大次数が max_degree 以下のグラフを同型類ごとに列挙（孤立点を含む）

        n-1 頂点の代表に新しい頂点を1つ足して作る。次数の上限は部分グラフに
        遺伝するので、この拡張で全ての同型類が得られる。

        Returns:
            Dict[int, List[Adjacency]]: 頂点数ごとの代表（隣接ビット集合の列）
        """
        levels: Dict[int, List[Adjacency]] = {1: [(0,)]}
        for n in range(2, max_n + 1):
            new = n - 1
            buckets: Dict[tuple, List[nx.Graph]] = {}
            found: List[Adjacency] = []
            for adjacency in tqdm(levels[n - 1], desc=f"graphs on {n} vertices", disable=None, leave=False):
                allowed = [v for v in range(new) if adjacency[v].bit_count() < max_degree]
                for k in range(min(max_degree, len(allowed)) + 1):
                    for attach in combinations(allowed, k):
                        rows = list(adjacency) + [vs.from_indices(attach)]
                        for v in attach:
                            rows[v] |= 1 << new
                        candidate = tuple(rows)
                        key = self._signature(candidate)
                        graph = self._to_networkx(candidate)
                        bucket = buckets.setdefault(key, [])
                        if any(nx.is_isomorphic(graph, other) for other in bucket):
                            continue
                        bucket.append(graph)
                        found.append(candidate)
            levels[n] = found
            logger.info("%d graphs with max degree <= %d on %d vertices", len(found), max_degree, n)
        return {n: graphs for n, graphs in levels.items() if n <= max_n}

    def classify_1d(self, max_n: int = MAX_CLASSIFY_N) -> ClassificationResult:
        """T² = 0 となる1次元複体の同型類を全て求める

        条件 (i) より最大次数3以下のグラフだけを列挙し、辺を持つものを3条件で選別する。

        Raises:
            ValueError: max_n が 1..8 の範囲外の場合
        """
        if not 1 <= max_n <= MAX_CLASSIFY_N:
            raise ValueError(f"classification supports 1 <= max_n <= {MAX_CLASSIFY_N}, got {max_n}")
        levels = self.enumerate_graphs(max_n)
        candidates = [adj for n in sorted(levels) for adj in levels[n] if any(adj)]
        worker = partial(_evaluate_candidate, max_canonical_n=self.max_canonical_n)
        results = ordered_map(worker, candidates, jobs=self.jobs, desc="classify")
        entries = sorted((e for e in results if e is not None), key=lambda e: e.sort_key)
        logger.info("%d unobstructed classes among %d candidates", len(entries), len(candidates))
        return ClassificationResult(entries)

    @staticmethod
    def obstructed_candidates() -> List[Graph1D]:
        """9頂点・10頂点の候補（0始まりに直したもの）"""
        nine = [(u - 1, v - 1) for u, v in _CANDIDATE_9_EDGES]
        ten = nine + [(u - 1, v - 1) for u, v in _CANDIDATE_10_EXTRA]
        return [Graph1D.from_edges(9, nine), Graph1D.from_edges(10, ten)]

    # =========================
    # ゴールデンファイル
    # =========================
    @staticmethod
    def golden_lines(result: ClassificationResult, max_n: int) -> List[str]:
        return [f"# classify-1d max_n={max_n} count={result.count}"] + [e.golden_line() for e in result.entries]

    def write_golden(self, result: ClassificationResult, path: str, max_n: int) -> None:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write("\n".join(self.golden_lines(result, max_n)) + "\n")
        logger.info("golden file written to %s", path)

    def read_golden(self, path: str, max_n: Optional[int] = None) -> List[ClassificationEntry]:
        """ゴールデンファイルを読み、各行の代表に標準ラベルを付けて返す

        行の形式は `n=<n> edges=<m> matroid=<yes|no> edgelist=<a-b,...>`。
        `#` で始まる行と空行は読み飛ばす。max_n を与えるとそれより頂点の多い行を除く。

        Raises:
            GoldenFormatError: 行の形式が正しくない場合
            OSError: ファイルが読めない場合
        """
        labeler = ComplexService(max_n=self.max_canonical_n)
        entries: List[ClassificationEntry] = []
        with open(path, encoding="utf-8") as handle:
            for line_number, raw in enumerate(handle, start=1):
                text = raw.strip()
                if not text or text.startswith("#"):
                    continue
                graph, is_matroid = self._parse_golden_line(text, line_number)
                if max_n is not None and graph.n > max_n:
                    continue
                entries.append(ClassificationEntry(graph.complex, labeler.canonical_form(graph.complex), is_matroid))
        return sorted(entries, key=lambda e: e.sort_key)

    @staticmethod
    def _parse_golden_line(text: str, line_number: int) -> Tuple[Graph1D, bool]:
        fields = dict(token.partition("=")[::2] for token in text.split())
        missing = [key for key in ("n", "edges", "matroid", "edgelist") if key not in fields]
        if missing:
            raise GoldenFormatError(f"missing field(s) {', '.join(missing)}", line_number)
        if fields["matroid"] not in ("yes", "no"):
            raise GoldenFormatError(f"matroid must be yes or no, got '{fields['matroid']}'", line_number)
        try:
            n = int(fields["n"])
            edges = [tuple(int(v) for v in pair.split("-")) for pair in fields["edgelist"].split(",") if pair]
            graph = Graph1D.from_edges(n, edges)
        except ValueError as e:
            raise GoldenFormatError(str(e), line_number) from e
        if str(len(graph.edge_pairs)) != fields["edges"]:
            raise GoldenFormatError(f"edges={fields['edges']} but edgelist has {len(graph.edge_pairs)}", line_number)
        return graph, fields["matroid"] == "yes"

    def compare_golden(self, result: ClassificationResult, path: str, max_n: int) -> List[str]:
        """ゴールデンファイルとの差分（一致すれば空リスト）

        同型類で比べるので、ファイルの辺リストは任意の番号付けでよい。
        max_n より頂点の多い行は比較から外す。
        """
        stored = [e.key_line() for e in self.read_golden(path, max_n)]
        computed = [e.key_line() for e in result.entries]
        return list(difflib.unified_diff(stored, computed, fromfile=path, tofile="computed", lineterm=""))
