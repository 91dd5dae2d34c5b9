"""
Cotangent Service: dimensions of T¹ and T² of Stanley-Reisner rings in every multidegree
"""
import logging
from typing import Dict, List, Optional, Tuple

import networkx as nx

from models import vertex_set as vs
from models.face_poset import FacePoset
from models.field import FieldChoice
from models.report import (
    ZERO,
    GradedEntry,
    GradedT2Report,
    JoinCheckResult,
    JoinMismatch,
    NbPair,
    TDims,
    VanishingResult,
)
from models.simplicial_complex import Multidegree, SimplicialComplex
from models.vertex_set import VertexSet
from services.homology_service import HomologyService

logger = logging.getLogger(__name__)

# 計算結果キャッシュの上限（超えたら捨てる）
_CACHE_LIMIT = 200_000

# 近道の規則名
RULE_LOOP = "loop-cone"
RULE_NOT_MINIMAL = "non-minimal-nonface"
RULE_CIRCUIT = "circuit"
RULE_EMPTY_N = "empty-N"
RULE_N_EQUALS_NTILDE = "N-equals-Ntilde"


class CotangentService:
    """T¹_{-b}, T²_{-b} とその多重次数付き構造を計算するサービスクラス

    次元は (N_b, Ñ_b) の順序複体の対の相対コホモロジーとして求める。
    """

    def __init__(self, homology_service: Optional[HomologyService] = None,
                 field: Optional[FieldChoice] = None):
        """
        CotangentServiceの初期化

        Args:
            homology_service: コホモロジー計算に使うサービス
            field: 既定の係数体（省略時は homology_service の係数体）
        """
        self.homology_service = homology_service or HomologyService(field)
        self.field = field or self.homology_service.field
        self._cache: Dict[Tuple[SimplicialComplex, VertexSet, FieldChoice], TDims] = {}

    # =========================
    # N_b と Ñ_b
    # =========================
    @staticmethod
    def build_nb_pair(complex_: SimplicialComplex, b: VertexSet) -> NbPair:
        """N_b(Δ) と Ñ_b(Δ) を作る

        N_b = {F ∈ Δ : F ∩ b = ∅, F ∪ b ∉ Δ}
        Ñ_b = {F ∈ N_b : ある b' ⊊ b で F ∪ b' ∉ Δ}

        Raises:
            ValueError: Δ が void、または b が空・台集合の外にある場合
        """
        if complex_.is_void:
            raise ValueError("N_b is defined for non-void complexes only")
        if not b:
            raise ValueError("b must be nonempty")
        if b >> complex_.n:
            raise ValueError(f"b={vs.format_set(b)} lies outside the ground set")
        faces = complex_.face_set
        b_members = vs.members(b)
        N = [F for F in complex_.faces if not F & b and (F | b) not in faces]
        # b' ⊊ b の中で極大なもの（1点抜き）を見れば十分
        Ntilde = [F for F in N if any((F | (b & ~(1 << v))) not in faces for v in b_members)]

        deleted = complex_.deletion(b).face_set
        if b in faces:
            expected = {F for F in deleted if (F | b) not in faces}
        else:
            expected = set(deleted)
        assert expected == set(N), f"N_b disagrees with the deletion/star description for b={vs.format_set(b)}"
        return NbPair(b, FacePoset.of(N), FacePoset.of(Ntilde))

    # =========================
    # 負の次数 -b
    # =========================
    def t_dims_general(self, complex_: SimplicialComplex, b: VertexSet,
                       field: Optional[FieldChoice] = None) -> TDims:
        """近道を使わず、順序複体の対の相対コホモロジーから (dim T¹, dim T²) を求める

        #b = 1 のときは被約相対コホモロジーを使う。
        """
        nb = self.build_nb_pair(complex_, b)
        pair = self.homology_service.order_complex_pair(nb.N, nb.Ntilde)
        dims = self.homology_service.relative_cohomology_dims(
            pair, field or self.field, reduced=b.bit_count() == 1)
        return TDims(dims.h0, dims.h1)

    def fast_path(self, complex_: SimplicialComplex, b: VertexSet) -> Optional[Tuple[str, TDims]]:
        """近道が使える場合は (規則名, 次元) を返す

        Returns:
            Optional[Tuple[str, TDims]]: 使える規則がなければ None
        """
        faces = complex_.face_set
        if b in faces:
            nb = self.build_nb_pair(complex_, b)
            if nb.N.is_empty:
                return RULE_EMPTY_N, ZERO
            if nb.N.elements == nb.Ntilde.elements:
                return RULE_N_EQUALS_NTILDE, ZERO
            return None
        if b.bit_count() == 1:
            # ループ: ⟨N⟩ は錐
            return RULE_LOOP, ZERO
        if b not in complex_.minimal_nonfaces:
            return RULE_NOT_MINIMAL, ZERO
        nb = self.build_nb_pair(complex_, b)
        return RULE_CIRCUIT, self.circuit_dims(nb)

    @staticmethod
    def circuit_dims(nb: NbPair) -> TDims:
        """b が極小非面（#b ≥ 2）のとき

        ⟨N_b⟩ は錐なので T¹ = [Ñ_b = ∅]、T² = ⟨Ñ_b⟩ の被約 H⁰ の次元。
        ⟨Ñ_b⟩ の連結成分は Ñ_b の比較可能性グラフの連結成分に一致する。
        """
        elements = nb.Ntilde.elements
        if not elements:
            return TDims(1, 0)
        graph = nx.Graph()
        graph.add_nodes_from(elements)
        graph.add_edges_from(
            (x, y) for i, x in enumerate(elements) for y in elements[i + 1:]
            if x & ~y == 0 or y & ~x == 0
        )
        return TDims(0, nx.number_connected_components(graph) - 1)

    def t_dims_negative(self, complex_: SimplicialComplex, b: VertexSet,
                        field: Optional[FieldChoice] = None) -> TDims:
        """(dim T¹_{-b}(Δ), dim T²_{-b}(Δ))

        Args:
            complex_: 単体複体（void でない）
            b: 空でない頂点集合
            field: 係数体

        Returns:
            TDims: 次元

        Raises:
            ValueError: b が空の場合
        """
        if not b:
            raise ValueError("b must be nonempty")
        field = field or self.field
        key = (complex_, b, field)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        fast = self.fast_path(complex_, b)
        dims = fast[1] if fast is not None else self.t_dims_general(complex_, b, field)
        if len(self._cache) >= _CACHE_LIMIT:
            self._cache.clear()
        self._cache[key] = dims
        return dims

    def les_cross_check(self, complex_: SimplicialComplex, b: VertexSet,
                        field: Optional[FieldChoice] = None) -> TDims:
        """長完全系列から (dim T¹, dim T²) を組み立てる

        T¹ = ker(H⁰⟨N⟩→H⁰⟨Ñ⟩)
        T² = coker(H⁰⟨N⟩→H⁰⟨Ñ⟩) ⊕ ker(H¹⟨N⟩→H¹⟨Ñ⟩)

        相対コホモロジーから直接求めた値と一致することも確認する。

        Raises:
            ValueError: #b < 2 の場合
            AssertionError: 二つの計算が一致しない場合
        """
        if b.bit_count() < 2:
            raise ValueError("the long exact sequence check needs #b >= 2")
        field = field or self.field
        hs = self.homology_service
        nb = self.build_nb_pair(complex_, b)
        pair = hs.order_complex_pair(nb.N, nb.Ntilde)
        h_total = hs.cohomology_dims(pair.total, field)
        h_sub = hs.cohomology_dims(pair.sub, field)
        rank0, rank1 = hs.induced_h_maps(pair, field)
        dims = TDims(h_total.h0 - rank0, (h_sub.h0 - rank0) + (h_total.h1 - rank1))

        relative = hs.relative_cohomology_dims(pair, field)
        assert dims.as_tuple() == relative.as_tuple(), (
            f"long exact sequence {dims.as_tuple()} disagrees with relative cohomology "
            f"{relative.as_tuple()} at b={vs.format_set(b)}")
        return dims

    def check_paths(self, complex_: SimplicialComplex, b: VertexSet,
                    field: Optional[FieldChoice] = None) -> TDims:
        """一般の計算と、適用できる近道・長完全系列の計算が一致することを確認する

        Raises:
            AssertionError: 食い違いがあった場合
        """
        general = self.t_dims_general(complex_, b, field)
        fast = self.fast_path(complex_, b)
        if fast is not None:
            rule, dims = fast
            assert dims == general, f"{rule} shortcut gives {dims}, general path {general}"
        if b.bit_count() >= 2:
            les = self.les_cross_check(complex_, b, field)
            assert les == general, f"long exact sequence gives {les}, general path {general}"
        return general

    # =========================
    # 多重次数
    # =========================
    def t_dims_multigraded(self, complex_: SimplicialComplex, A: VertexSet, b: VertexSet,
                           field: Optional[FieldChoice] = None) -> TDims:
        """T^i_{a-b}(Δ) = T^i_{-b}(link_Δ supp a)

        条件（b ≠ ∅、A ∈ Δ、b ⊆ link の頂点集合）を満たさなければ 0。
        """
        if not b or A & b or not complex_.is_face(A):
            return ZERO
        link = complex_.link(A)
        if b & ~link.vertices:
            return ZERO
        return self.t_dims_negative(link, b, field)

    def t_dims_at(self, complex_: SimplicialComplex, degree: Multidegree,
                  field: Optional[FieldChoice] = None) -> TDims:
        """任意の多重次数 c ∈ ℤⁿ での次元"""
        if degree.n != complex_.n:
            raise ValueError(f"multidegree has length {degree.n}, complex has n={complex_.n}")
        if not degree.is_squarefree_negative:
            return ZERO
        return self.t_dims_multigraded(complex_, degree.a_support, degree.b, field)

    @staticmethod
    def candidate_bs(link: SimplicialComplex) -> List[VertexSet]:
        """T² が非零になり得る b: 空でない面と、頂点集合に含まれる極小非面"""
        inside = [c for c in link.minimal_nonfaces if not c & ~link.vertices]
        return vs.sorted_sets([f for f in link.faces if f] + inside)

    # =========================
    # T²(Δ) = 0 の判定
    # =========================
    def t2_vanishes(self, complex_: SimplicialComplex, field: Optional[FieldChoice] = None) -> VanishingResult:
        """全ての多重次数で T² = 0 かどうか

        A を面全体に (|A|, 辞書順)、b を link の候補に (|b|, 辞書順) で走らせ、
        最初に見つかった非零の類を証拠として返す。ループを除いて同じになる
        link は一度だけ計算する。

        Raises:
            ValueError: Δ が void の場合
        """
        if complex_.is_void:
            raise ValueError("T2 vanishing is decided for non-void complexes only")
        field = field or self.field
        seen = set()
        for A in complex_.faces:
            link, kept = complex_.link(A).compress()
            if link in seen:
                continue
            seen.add(link)
            back = dict(enumerate(kept))
            for b in self.candidate_bs(link):
                dims = self.t_dims_negative(link, b, field)
                if dims.t2:
                    witness = VanishingResult(False, A, vs.relabel(b, back), dims)
                    logger.debug("T2 does not vanish: %s", witness.witness_line())
                    return witness
        return VanishingResult(True)

    def graded_report(self, complex_: SimplicialComplex, field: Optional[FieldChoice] = None) -> GradedT2Report:
        """補題の許す全ての類 (A, b) についての次元表

        A は面全体、b は link_Δ A の頂点集合の空でない部分集合全体。
        """
        if complex_.is_void:
            raise ValueError("graded report needs a non-void complex")
        field = field or self.field
        report = GradedT2Report(complex_, field.label)
        for A in complex_.faces:
            link, kept = complex_.link(A).compress()
            back = dict(enumerate(kept))
            for b in vs.subsets(vs.full(link.n)):
                if not b:
                    continue
                dims = self.t_dims_negative(link, b, field)
                report.entries.append(GradedEntry(A, vs.relabel(b, back), dims.t1, dims.t2))
        return report

    # =========================
    # 結合複体
    # =========================
    def join_graded_check(self, first: SimplicialComplex, second: SimplicialComplex,
                          field: Optional[FieldChoice] = None) -> JoinCheckResult:
        """結合 Δ∗Γ の T² が因子の T² と Hilbert 関数で表されることを全ての類で確認する

        dim T²_c(Δ∗Γ) = dim T²_{c1}(Δ)·hilb_Γ(c2) + hilb_Δ(c1)·dim T²_{c2}(Γ)

        b が両側にまたがる類では右辺は 0 になる。併せて
        「T²(Δ∗Γ) = 0 ⟺ T²(Δ) = 0 かつ T²(Γ) = 0」も確かめる。
        """
        field = field or self.field
        joined = first.join(second)
        offset = first.n
        result = JoinCheckResult()
        ground = vs.full(joined.n)
        for A in joined.faces:
            for b in vs.subsets(ground & ~A):
                if not b:
                    continue
                degree = Multidegree.from_parts(joined.n, A, b)
                c1, c2 = degree.split(offset)
                lhs = self.t_dims_at(joined, degree, field).t2
                rhs = (self.t_dims_at(first, c1, field).t2 * second.hilbert_indicator(c2)
                       + first.hilbert_indicator(c1) * self.t_dims_at(second, c2, field).t2)
                result.classes_checked += 1
                if lhs != rhs:
                    logger.warning("join formula fails at A=%s b=%s: %d != %d",
                                   vs.format_set(A), vs.format_set(b), lhs, rhs)
                    result.mismatches.append(JoinMismatch(A, b, lhs, rhs))
        result.join_vanishes = self.t2_vanishes(joined, field).vanishes
        result.factors_vanish = (self.t2_vanishes(first, field).vanishes
                                 and self.t2_vanishes(second, field).vanishes)
        return result
