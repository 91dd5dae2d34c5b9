"""
Matroid Service: axioms, duality, circuits, parallel classes, connectivity and the T² checks on matroids
"""
import logging
from functools import partial
from itertools import combinations
from math import comb
from typing import List, Optional

import networkx as nx
from sympy.utilities.iterables import partitions

from config.constants import MAX_ENUMERATE_MATROID_N, MAX_MATROID_N
from models import vertex_set as vs
from models.field import FieldChoice
from models.matroid import Matroid, PartitionSpec, exchange_violation
from models.report import ConjectureVerdict, VanishingResult
from models.simplicial_complex import SimplicialComplex
from models.vertex_set import VertexSet
from services.complex_service import ComplexService
from services.cotangent_service import CotangentService
from utils.parallel import ordered_map

logger = logging.getLogger(__name__)


def _vanishing_worker(matroid: Matroid, field: FieldChoice) -> VanishingResult:
    return CotangentService(field=field).t2_vanishes(matroid.complex)


def _conjecture_worker(matroid: Matroid, field: FieldChoice) -> ConjectureVerdict:
    return MatroidService(field=field).conjecture_check(matroid)


class MatroidParseError(ValueError):
    """revlex 表記の解釈エラー（position は問題の文字位置）"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class MatroidService:
    """マトロイドの構成・性質の計算と、T² に関する検証を行うサービスクラス"""

    def __init__(self, cotangent_service: Optional[CotangentService] = None,
                 complex_service: Optional[ComplexService] = None,
                 field: Optional[FieldChoice] = None):
        """
        MatroidServiceの初期化

        Args:
            cotangent_service: T² の判定に使うサービス
            complex_service: 同型判定に使うサービス
            field: 既定の係数体
        """
        self.cotangent_service = cotangent_service or CotangentService(field=field)
        self.complex_service = complex_service or ComplexService()
        self.field = field or self.cotangent_service.field

    # =========================
    # 公理と構成
    # =========================
    @staticmethod
    def is_matroid(complex_: SimplicialComplex) -> bool:
        """facet が等しい大きさで、基底交換公理を満たすか

        Raises:
            ValueError: void の場合
        """
        if complex_.is_void:
            raise ValueError("matroid test needs a non-void complex")
        if not complex_.is_pure:
            return False
        return exchange_violation(frozenset(complex_.facets)) is None

    @staticmethod
    def uniform(n: int, r: int) -> Matroid:
        """一様マトロイド U^r_n（基底は r 元部分集合全体）"""
        if not 0 <= r <= n:
            raise ValueError(f"uniform matroid needs 0 <= r <= n, got n={n}, r={r}")
        return Matroid(n, tuple(vs.subsets_of_size(vs.full(n), r)))

    @staticmethod
    def dual(matroid: Matroid) -> Matroid:
        ground = vs.full(matroid.n)
        return Matroid(matroid.n, tuple(vs.sorted_sets(ground & ~b for b in matroid.bases)))

    @staticmethod
    def direct_sum(first: Matroid, second: Matroid) -> Matroid:
        """直和（単体複体としての結合）"""
        bases = [b1 | (b2 << first.n) for b1 in first.bases for b2 in second.bases]
        return Matroid(first.n + second.n, tuple(vs.sorted_sets(bases)))

    @staticmethod
    def restriction(matroid: Matroid, subset: VertexSet) -> Matroid:
        """subset への制限（順序を保って 0.. に番号を付け直す）"""
        parts = {b & subset for b in matroid.bases}
        top = max(p.bit_count() for p in parts)
        mapping = {v: i for i, v in enumerate(vs.members(subset))}
        bases = {vs.relabel(p, mapping) for p in parts if p.bit_count() == top}
        return Matroid(len(mapping), tuple(vs.sorted_sets(bases)))

    # =========================
    # 基本的な不変量
    # =========================
    @staticmethod
    def circuits(matroid: Matroid) -> List[VertexSet]:
        return list(matroid.complex.minimal_nonfaces)

    @staticmethod
    def corank(matroid: Matroid) -> int:
        return matroid.corank

    @staticmethod
    def loops(matroid: Matroid) -> VertexSet:
        return matroid.complex.loops

    @staticmethod
    def coloops(matroid: Matroid) -> VertexSet:
        """全ての基底に含まれる要素"""
        common = vs.full(matroid.n)
        for b in matroid.bases:
            common &= b
        return common

    @staticmethod
    def rank_of(matroid: Matroid, subset: VertexSet) -> int:
        return max((b & subset).bit_count() for b in matroid.bases)

    @classmethod
    def hyperplanes(cls, matroid: Matroid) -> List[VertexSet]:
        """階数 r-1 の極大な部分集合（総当たり）"""
        r = matroid.rank
        out = []
        for subset in vs.subsets(vs.full(matroid.n)):
            if cls.rank_of(matroid, subset) != r - 1:
                continue
            outside = vs.members(vs.full(matroid.n) & ~subset)
            if all(cls.rank_of(matroid, subset | (1 << e)) == r for e in outside):
                out.append(subset)
        return out

    @classmethod
    def parallel_classes(cls, matroid: Matroid) -> PartitionSpec:
        """ループと平行類（{v,w} が非面となる非ループ要素の同値類）"""
        faces = matroid.complex.face_set
        loops = cls.loops(matroid)
        classes: List[VertexSet] = []
        for v in vs.members(vs.full(matroid.n) & ~loops):
            for i, cls_mask in enumerate(classes):
                rep = vs.members(cls_mask)[0]
                if (1 << v | 1 << rep) not in faces:
                    classes[i] = cls_mask | 1 << v
                    break
            else:
                classes.append(1 << v)
        return PartitionSpec(matroid.n, loops, tuple(vs.sorted_sets(classes)))

    # =========================
    # 階数2・余階数2
    # =========================
    @staticmethod
    def rank2_from_partition(spec: PartitionSpec) -> Matroid:
        """平行類の分割から階数2マトロイドを作る（基底は異なる類から1つずつ選んだ対）

        Raises:
            ValueError: 類が2つ未満の場合
        """
        spec.validate()
        if len(spec.parallel_classes) < 2:
            raise ValueError("a rank two matroid needs at least two parallel classes")
        bases = []
        for p, q in combinations(spec.parallel_classes, 2):
            bases.extend(1 << u | 1 << v for u in vs.members(p) for v in vs.members(q))
        return Matroid(spec.n, tuple(vs.sorted_sets(bases)))

    @staticmethod
    def _partition_specs(n: int) -> List[PartitionSpec]:
        """[n] を2つ以上の類に分ける分割（同型類ごとに1つ、大きい類から順に番号を振る）"""
        specs = []
        shapes = []
        for part in partitions(n):
            sizes = sorted((k for k, m in part.items() for _ in range(m)), reverse=True)
            if len(sizes) >= 2:
                shapes.append(tuple(sizes))
        for sizes in sorted(shapes, reverse=True):
            classes, start = [], 0
            for s in sizes:
                classes.append(vs.full(start + s) & ~vs.full(start))
                start += s
            specs.append(PartitionSpec(n, vs.EMPTY, tuple(classes)))
        return specs

    def corank2_enumerate(self, n: int) -> List[Matroid]:
        """コループを持たない余階数2のマトロイド（同型類ごと）

        ループのない階数2マトロイドの双対として作る。

        Raises:
            ValueError: n が範囲外の場合
        """
        if not 2 <= n <= MAX_MATROID_N:
            raise ValueError(f"corank two enumeration needs 2 <= n <= {MAX_MATROID_N}, got {n}")
        return [self.dual(self.rank2_from_partition(spec)) for spec in self._partition_specs(n)]

    def corank_at_most_two(self, n: int) -> List[Matroid]:
        """n 要素上の余階数 0, 1, 2 のマトロイド全て（同型類ごと）

        コループのない部分にコループを直和で付け足す。
        """
        if not 1 <= n <= MAX_MATROID_N:
            raise ValueError(f"n must satisfy 1 <= n <= {MAX_MATROID_N}, got {n}")
        out = [self.uniform(n, n)]
        for m in range(1, n + 1):
            core = self.uniform(m, m - 1)
            out.append(core if m == n else self.direct_sum(core, self.uniform(n - m, n - m)))
        for m in range(2, n + 1):
            for core in self.corank2_enumerate(m):
                out.append(core if m == n else self.direct_sum(core, self.uniform(n - m, n - m)))
        return out

    @staticmethod
    def uniform_t2_formula(n: int, r: int, b_size: int) -> int:
        """一様マトロイドの dim T²_{-b} の閉じた式

        #b = 2 かつ 1 ≤ r < n-1 のとき r·C(n-2, r) - C(n-2, r-1)、それ以外は 0。
        """
        if b_size != 2 or r == 0 or r >= n - 1:
            return 0
        return r * comb(n - 2, r) - comb(n - 2, r - 1)

    # =========================
    # 連結性
    # =========================
    def component_sets(self, matroid: Matroid) -> List[VertexSet]:
        """連結成分の要素集合（共通の回路に含まれる要素を同値とする）"""
        graph = nx.Graph()
        graph.add_nodes_from(range(matroid.n))
        for circuit in self.circuits(matroid):
            elems = vs.members(circuit)
            graph.add_edges_from((elems[0], e) for e in elems[1:])
        components = [vs.from_indices(c) for c in nx.connected_components(graph)]
        return sorted(components, key=lambda mask: mask & -mask)

    def connected_components(self, matroid: Matroid) -> List[Matroid]:
        """連結成分（各成分への制限、番号は付け直す）"""
        return [self.restriction(matroid, s) for s in self.component_sets(matroid)]

    def is_connected(self, matroid: Matroid) -> bool:
        return len(self.component_sets(matroid)) <= 1

    def is_cycle_atomic(self, matroid: Matroid, b: VertexSet) -> bool:
        """全ての回路 C について b ∩ C ∈ {∅, b}"""
        return all((c & b) in (0, b) for c in self.circuits(matroid))

    # =========================
    # revlex 表記
    # =========================
    @staticmethod
    def revlex_subsets(n: int, r: int) -> List[VertexSet]:
        """r 元部分集合の revlex 順（最大の異なる要素が小さい方が先）"""
        return sorted(vs.subsets_of_size(vs.full(n), r),
                      key=lambda s: tuple(sorted(vs.members(s), reverse=True)))

    def parse_revlex(self, line: str, n: int, r: int) -> Matroid:
        """基底の指示文字列（'*' が基底、'0' が非基底）からマトロイドを作る

        Raises:
            MatroidParseError: 長さ・文字・交換公理の違反
        """
        if not 0 <= r <= n <= MAX_MATROID_N:
            raise MatroidParseError(f"unsupported size n={n}, r={r}", 0)
        text = line.strip()
        order = self.revlex_subsets(n, r)
        if len(text) != len(order):
            raise MatroidParseError(f"expected {len(order)} characters for n={n}, r={r}, got {len(text)}",
                                    min(len(text), len(order)))
        bases = []
        for pos, (ch, subset) in enumerate(zip(text, order)):
            if ch == "*":
                bases.append(subset)
            elif ch != "0":
                raise MatroidParseError(f"invalid character '{ch}'", pos)
        if not bases:
            raise MatroidParseError("no bases", 0)
        bad = exchange_violation(frozenset(bases))
        if bad is not None:
            b1, b2, x = bad
            raise MatroidParseError(
                f"basis exchange fails for {vs.format_set(b1)}, {vs.format_set(b2)} at element {x}",
                order.index(b1))
        return Matroid(n, tuple(vs.sorted_sets(bases)))

    def to_revlex(self, matroid: Matroid) -> str:
        basis_set = matroid.basis_set
        return "".join("*" if s in basis_set else "0" for s in self.revlex_subsets(matroid.n, matroid.rank))

    # =========================
    # 全列挙と予想の検証
    # =========================
    def enumerate_all(self, max_n: int) -> List[Matroid]:
        """max_n 要素以下の全マトロイド（同型類ごと、基底族の総当たり）"""
        if not 1 <= max_n <= MAX_ENUMERATE_MATROID_N:
            raise ValueError(f"brute-force enumeration supports 1 <= n <= {MAX_ENUMERATE_MATROID_N}")
        out = []
        for n in range(1, max_n + 1):
            for r in range(n + 1):
                candidates = list(vs.subsets_of_size(vs.full(n), r))
                seen = set()
                for family in range(1, 1 << len(candidates)):
                    bases = frozenset(c for i, c in enumerate(candidates) if family >> i & 1)
                    if exchange_violation(bases) is not None:
                        continue
                    matroid = Matroid(n, tuple(vs.sorted_sets(bases)))
                    label = self.complex_service.canonical_form(matroid.complex)
                    if label not in seen:
                        seen.add(label)
                        out.append(matroid)
        logger.info("enumerated %d matroids on at most %d elements", len(out), max_n)
        return out

    def conjecture_check(self, matroid: Matroid, field: Optional[FieldChoice] = None) -> ConjectureVerdict:
        """「T²(M) = 0 ⟺ M は余階数2以下のマトロイドの直和」を1つのマトロイドで確かめる"""
        if matroid.n > MAX_MATROID_N:
            raise ValueError(f"conjecture check supports n <= {MAX_MATROID_N}")
        result = self.cotangent_service.t2_vanishes(matroid.complex, field or self.field)
        rhs = all(c.corank <= 2 for c in self.connected_components(matroid))
        verdict = ConjectureVerdict(result.vanishes, rhs, None if result.vanishes else result)
        if verdict.kind == "counterexample":
            logger.error("COUNTEREXAMPLE candidate: T2 vanishes but a component has corank > 2: %s",
                         matroid.describe())
        elif verdict.kind == "bug":
            logger.error("corank <= 2 matroid with nonvanishing T2 (%s): %s",
                         result.witness_line(), matroid.describe())
        return verdict

    def vanishing_sweep(self, matroids: List[Matroid], jobs: int = 1,
                        desc: Optional[str] = None) -> List[VanishingResult]:
        """複数のマトロイドの T² = 0 判定（入力順の結果）"""
        return ordered_map(partial(_vanishing_worker, field=self.field), matroids, jobs=jobs, desc=desc)

    def conjecture_sweep(self, matroids: List[Matroid], jobs: int = 1,
                         desc: Optional[str] = None) -> List[ConjectureVerdict]:
        """複数のマトロイドの予想検証（入力順の結果）"""
        return ordered_map(partial(_conjecture_worker, field=self.field), matroids, jobs=jobs, desc=desc)
