"""Simplicial complex data model"""
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from config.constants import MAX_GROUND_SET
from models import vertex_set as vs
from models.vertex_set import VertexSet


def _maximal(masks: Iterable[VertexSet]) -> Tuple[VertexSet, ...]:
    """包含関係で極大なものだけを残し、(要素数, 辞書順) に並べる"""
    kept: List[VertexSet] = []
    for m in sorted(set(masks), key=lambda x: -x.bit_count()):
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return tuple(vs.sorted_sets(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    """有限単体複体

    台集合 {0, ..., n-1} 上の極大面（facet）の反鎖で表す。
    facets == () は空複体（void、面を一つも持たない）、
    facets == (0,) は {∅}（irrelevant complex）を表す。
    どの facet にも現れない頂点はループ（{i} ∉ Δ）になる。
    """
    n: int
    facets: Tuple[VertexSet, ...]

    # =========================
    # 生成
    # =========================
    @classmethod
    def from_facets(cls, n: int, facets: Iterable, check_capacity: bool = False) -> "SimplicialComplex":
        """facet の列から単体複体を生成

        Args:
            n: 台集合の大きさ
            facets: VertexSet（int）または頂点番号の列の列
            check_capacity: True なら入力上限（63頂点）を検査

        Returns:
            SimplicialComplex: 極大元だけに正規化した複体

        Raises:
            ValueError: 頂点番号が範囲外の場合
        """
        if n < 0:
            raise ValueError(f"ground set size must be non-negative, got {n}")
        if check_capacity and n > MAX_GROUND_SET:
            raise ValueError(f"ground set size {n} exceeds the limit of {MAX_GROUND_SET}")
        masks = []
        for facet in facets:
            mask = facet if isinstance(facet, int) else vs.from_indices(facet)
            if mask >> n:
                raise ValueError(f"facet {vs.format_set(mask)} uses a vertex outside 0..{n - 1}")
            masks.append(mask)
        return cls(n, _maximal(masks))

    @classmethod
    def from_antichain(cls, n: int, facets: Sequence[VertexSet]) -> "SimplicialComplex":
        """既に反鎖であると分かっている facet 列から生成（極大性の検査を省略）"""
        return cls(n, tuple(vs.sorted_sets(facets)))

    @classmethod
    def void(cls, n: int = 0) -> "SimplicialComplex":
        return cls(n, ())

    @classmethod
    def irrelevant(cls, n: int = 0) -> "SimplicialComplex":
        """{∅}"""
        return cls(n, (vs.EMPTY,))

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        return cls(n, (vs.full(n),))

    @classmethod
    def zero_dimensional(cls, n: int) -> "SimplicialComplex":
        """n 個の孤立点（n = 0 なら {∅}）"""
        if n == 0:
            return cls.irrelevant(0)
        return cls(n, tuple(vs.singleton(i) for i in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]], isolated: bool = True) -> "SimplicialComplex":
        """辺リストから1次元複体を生成

        Args:
            n: 頂点数
            edges: 辺 (u, v) の列
            isolated: True なら辺に現れない頂点を孤立点として加える（False ならループ）
        """
        facets = [vs.from_indices(e) for e in edges]
        if isolated:
            covered = 0
            for f in facets:
                covered |= f
            facets.extend(vs.singleton(i) for i in range(n) if not covered >> i & 1)
        return cls.from_facets(n, facets)

    @classmethod
    def from_dict(cls, data: dict) -> "SimplicialComplex":
        """JSON 形式 {"n": .., "facets": [[..], ..]} から生成"""
        return cls.from_facets(data["n"], data["facets"], check_capacity=True)

    def to_dict(self) -> dict:
        return {"n": self.n, "facets": [list(vs.members(f)) for f in self.facets]}

    # =========================
    # 基本情報
    # =========================
    @property
    def is_void(self) -> bool:
        return not self.facets

    @cached_property
    def vertices(self) -> VertexSet:
        """{i} ∈ Δ となる頂点全体"""
        mask = 0
        for f in self.facets:
            mask |= f
        return mask

    @property
    def loops(self) -> VertexSet:
        return vs.full(self.n) & ~self.vertices

    @property
    def dimension(self) -> int:
        """次元（void と {∅} はともに -1）"""
        if not self.facets:
            return -1
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({f.bit_count() for f in self.facets}) <= 1

    @cached_property
    def face_set(self) -> FrozenSet[VertexSet]:
        """全ての面（∅ を含む）"""
        faces = set()
        for f in self.facets:
            if f in faces:
                continue
            faces.update(vs.subsets(f))
        return frozenset(faces)

    @cached_property
    def faces(self) -> Tuple[VertexSet, ...]:
        """全ての面を (要素数, 辞書順) で並べたもの"""
        return tuple(vs.sorted_sets(self.face_set))

    def faces_of_size(self, k: int) -> List[VertexSet]:
        return [f for f in self.faces if f.bit_count() == k]

    def is_face(self, face: VertexSet) -> bool:
        return any(face & ~f == 0 for f in self.facets)

    @cached_property
    def edges(self) -> Tuple[VertexSet, ...]:
        return tuple(self.faces_of_size(2))

    def degree(self, v: int) -> int:
        """局所次数（v を含む辺の数）"""
        bit = vs.singleton(v)
        return sum(1 for e in self.edges if e & bit)

    # =========================
    # 複体の演算
    # =========================
    def _require_face(self, face: VertexSet, op: str) -> None:
        if not self.is_face(face):
            raise ValueError(f"{op}: {vs.format_set(face)} is not a face of the complex")

    def link(self, face: VertexSet) -> "SimplicialComplex":
        """link_Δ F = {A ∈ Δ : A ∩ F = ∅, A ∪ F ∈ Δ}

        Raises:
            ValueError: F が面でない場合
        """
        self._require_face(face, "link")
        return SimplicialComplex(self.n, _maximal(f & ~face for f in self.facets if face & ~f == 0))

    def star(self, face: VertexSet) -> "SimplicialComplex":
        """star_Δ F = {G ∈ Δ : F ∪ G ∈ Δ}"""
        self._require_face(face, "star")
        return SimplicialComplex(self.n, tuple(f for f in self.facets if face & ~f == 0))

    def deletion(self, removed: VertexSet) -> "SimplicialComplex":
        """Δ∖W = {F ∈ Δ : F ∩ W = ∅}"""
        if self.is_void:
            return self
        return SimplicialComplex(self.n, _maximal(f & ~removed for f in self.facets))

    def restriction(self, kept: VertexSet) -> "SimplicialComplex":
        return self.deletion(vs.full(self.n) & ~kept)

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        """結合 Δ∗Γ（Γ の頂点番号は self.n だけずらす）

        Raises:
            ValueError: どちらかが void の場合
        """
        if self.is_void or other.is_void:
            raise ValueError("join requires two non-void complexes")
        facets = [f | (g << self.n) for f in self.facets for g in other.facets]
        return SimplicialComplex.from_antichain(self.n + other.n, facets)

    @cached_property
    def minimal_nonfaces(self) -> Tuple[VertexSet, ...]:
        """極小非面 C_Δ（真部分集合はすべて面である非面）

        Raises:
            ValueError: void の場合
        """
        if self.is_void:
            raise ValueError("minimal nonfaces are undefined for the void complex")
        faces = self.face_set
        found = set()
        for face in faces:
            for v in range(self.n):
                bit = 1 << v
                if face & bit:
                    continue
                cand = face | bit
                if cand in faces or cand in found:
                    continue
                if all(cand & ~(1 << w) in faces for w in vs.members(face)):
                    found.add(cand)
        return tuple(vs.sorted_sets(found))

    # =========================
    # 1次元複体の近傍
    # =========================
    def neighborhood(self, v: int) -> VertexSet:
        """閉近傍 ν(v) = {v} ∪ {w : {v,w} ∈ Δ}

        Raises:
            ValueError: 2次元以上の複体、または v がループの場合
        """
        if self.dimension > 1:
            raise ValueError("neighborhoods are defined for complexes of dimension at most 1")
        if not self.vertices >> v & 1:
            raise ValueError(f"vertex {v} is a loop")
        bit = vs.singleton(v)
        out = bit
        for e in self.edges:
            if e & bit:
                out |= e
        return out

    def nbhd_of_set(self, subset: VertexSet) -> VertexSet:
        out = 0
        for v in vs.members(subset):
            out |= self.neighborhood(v)
        return out

    def b_hat(self, b: VertexSet) -> VertexSet:
        """b̂ = b ∪ (⋂_{v∈b} ν(v))"""
        if not b:
            raise ValueError("b_hat needs a nonempty set")
        common = vs.full(self.n)
        for v in vs.members(b):
            common &= self.neighborhood(v)
        return b | common

    # =========================
    # 連結性・付け替え
    # =========================
    def connected_components(self) -> List[VertexSet]:
        """頂点の連結成分（各成分の頂点集合、最小頂点の順）"""
        graph = nx.Graph()
        graph.add_nodes_from(vs.members(self.vertices))
        for f in self.facets:
            elems = vs.members(f)
            graph.add_edges_from((elems[0], u) for u in elems[1:])
        components = [vs.from_indices(c) for c in nx.connected_components(graph)]
        return sorted(components, key=lambda mask: mask & -mask)

    @property
    def is_connected(self) -> bool:
        """void・{∅}・1点はいずれも連結とみなす"""
        return len(self.connected_components()) <= 1

    def relabel(self, permutation: Sequence[int], n: Optional[int] = None) -> "SimplicialComplex":
        """頂点 i を permutation[i] に移した複体"""
        mapping = dict(enumerate(permutation))
        return SimplicialComplex.from_antichain(self.n if n is None else n,
                                                [vs.relabel(f, mapping) for f in self.facets])

    def compress(self) -> Tuple["SimplicialComplex", Tuple[int, ...]]:
        """ループを取り除き、頂点を順序を保って 0.. に詰め直す

        Returns:
            Tuple: (詰め直した複体, 新番号 -> 元の頂点番号)
        """
        kept = vs.members(self.vertices)
        mapping = {v: i for i, v in enumerate(kept)}
        facets = [vs.relabel(f, mapping) for f in self.facets]
        return SimplicialComplex(len(kept), tuple(vs.sorted_sets(facets))), kept

    def hilbert_indicator(self, degree: "Multidegree") -> int:
        """多重次数 c の Hilbert 関数値（c ≥ 0 かつ supp c ∈ Δ なら 1）"""
        if any(x < 0 for x in degree.c):
            return 0
        return 1 if self.is_face(degree.a_support) else 0

    def describe(self) -> str:
        return f"n={self.n} facets=" + " ".join(vs.format_set(f) for f in self.facets)


@dataclass(frozen=True)
class Multidegree:
    """多重次数 c ∈ ℤⁿ と一意な分解 c = a − b（supp a ∩ supp b = ∅）"""
    c: Tuple[int, ...]

    @classmethod
    def from_parts(cls, n: int, a_support: VertexSet, b: VertexSet) -> "Multidegree":
        """同値類 (supp a, b) の代表元（a は supp a の指示ベクトル）"""
        if a_support & b:
            raise ValueError("supp a and b must be disjoint")
        return cls(tuple((a_support >> i & 1) - (b >> i & 1) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.c)

    @property
    def a_support(self) -> VertexSet:
        return vs.from_indices(i for i, x in enumerate(self.c) if x > 0)

    @property
    def b(self) -> VertexSet:
        """負の部分の台"""
        return vs.from_indices(i for i, x in enumerate(self.c) if x < 0)

    @property
    def is_squarefree_negative(self) -> bool:
        """負の部分が {0,1} ベクトルかどうか"""
        return all(x >= -1 for x in self.c)

    def split(self, offset: int) -> Tuple["Multidegree", "Multidegree"]:
        """結合複体の多重次数を二つの因子に分ける"""
        return Multidegree(self.c[:offset]), Multidegree(self.c[offset:])
