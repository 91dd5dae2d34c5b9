"""
Homology Service: order complexes and exact (relative) cohomology in degrees 0 and 1
"""
import logging
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple

from models import vertex_set as vs
from models.face_poset import CohomologyDims, FacePoset, SimplicialPair
from models.field import FieldChoice
from models.simplicial_complex import SimplicialComplex
from models.vertex_set import VertexSet
from utils import linalg

logger = logging.getLogger(__name__)

# 0, 1, 2 次元単体（頂点数 1, 2, 3）
_Skeleton = Tuple[List[VertexSet], List[VertexSet], List[VertexSet]]


class HomologyService:
    """順序複体の構成と、係数体上の厳密なコホモロジー計算を行うサービスクラス"""

    def __init__(self, field: Optional[FieldChoice] = None):
        """
        HomologyServiceの初期化

        Args:
            field: 既定の係数体（省略時は有理数体）
        """
        self.field = field or FieldChoice.rationals()

    # =========================
    # 順序複体
    # =========================
    @staticmethod
    def vertex_index(poset: FacePoset) -> Dict[VertexSet, int]:
        """順序複体の頂点番号

        空でない元を (要素数, 辞書順) に並べて 0.. を振り、∅ があれば最後の番号（頂点）を与える。
        コバウンダリの符号はこの順序で決まる。
        """
        index = {e: i for i, e in enumerate(poset.nonempty_elements())}
        if poset.contains_empty:
            index[vs.EMPTY] = len(index)
        return index

    def order_complex(self, poset: FacePoset, index: Optional[Dict[VertexSet, int]] = None) -> SimplicialComplex:
        """面の集まり Γ の順序複体（極大鎖を facet とする）

        ∅ ∈ Γ のときは ∅ が頂点として全ての鎖の底に入るので、錐になる。
        Γ = ∅ は void、Γ = {∅} は1点。

        Args:
            poset: 面の集まり
            index: 頂点番号（対を作るときに共有する）。省略時は poset から作る

        Returns:
            SimplicialComplex: 順序複体
        """
        if index is None:
            index = self.vertex_index(poset)
        n = len(index)
        elements = list(poset.elements)
        if not elements:
            return SimplicialComplex.void(n)

        above: Dict[VertexSet, List[VertexSet]] = {
            x: [y for y in elements if y != x and x & ~y == 0] for x in elements
        }
        covers: Dict[VertexSet, List[VertexSet]] = {}
        for x, ups in above.items():
            covers[x] = [y for y in ups if not any(z != y and z & ~y == 0 for z in ups)]
        has_lower = {y for ups in above.values() for y in ups}
        minimal = [x for x in elements if x not in has_lower]

        chains: List[VertexSet] = []
        stack = [(x, 1 << index[x]) for x in minimal]
        while stack:
            top, mask = stack.pop()
            if not covers[top]:
                chains.append(mask)
                continue
            for y in covers[top]:
                stack.append((y, mask | 1 << index[y]))
        logger.debug("order complex: %d elements, %d maximal chains", len(elements), len(chains))
        return SimplicialComplex.from_antichain(n, chains)

    def order_complex_pair(self, total: FacePoset, sub: FacePoset) -> SimplicialPair:
        """(⟨total⟩, ⟨sub⟩) の順序複体の対（頂点番号は total のものを共有）

        Raises:
            ValueError: sub が total に含まれない場合
        """
        if not sub.is_subposet_of(total):
            raise ValueError("sub poset is not contained in total poset")
        index = self.vertex_index(total)
        return SimplicialPair(self.order_complex(total, index), self.order_complex(sub, index))

    # =========================
    # コチェイン複体
    # =========================
    @staticmethod
    def skeleton(complex_: SimplicialComplex) -> _Skeleton:
        """頂点数 1, 2, 3 の単体をそれぞれ整列して返す"""
        layers: List[Set[VertexSet]] = [set(), set(), set()]
        for facet in complex_.facets:
            elems = vs.members(facet)
            for k in range(min(3, len(elems))):
                layers[k].update(vs.from_indices(c) for c in combinations(elems, k + 1))
        s0, s1, s2 = (sorted(layer) for layer in layers)
        return s0, s1, s2

    @staticmethod
    def coboundary(rows_simplices: List[VertexSet], col_simplices: List[VertexSet], domain) -> linalg.SparseRows:
        """コバウンダリ行列 δ（行: 高次単体、列: その面）

        σ の i 番目に小さい頂点を除いた面 τ について係数 (-1)^i。
        列に無い面（相対コチェインで部分複体に属する面）は無視する。
        """
        col_of = {s: j for j, s in enumerate(col_simplices)}
        plus, minus = domain.one, -domain.one
        rows: linalg.SparseRows = {}
        for i, sigma in enumerate(rows_simplices):
            entries = {}
            for pos, v in enumerate(vs.members(sigma)):
                j = col_of.get(sigma & ~(1 << v))
                if j is not None:
                    entries[j] = plus if pos % 2 == 0 else minus
            if entries:
                rows[i] = entries
        return rows

    def _dims_from_layers(self, s0, s1, s2, domain) -> Tuple[int, int]:
        r0 = linalg.rank(self.coboundary(s1, s0, domain), (len(s1), len(s0)), domain)
        r1 = linalg.rank(self.coboundary(s2, s1, domain), (len(s2), len(s1)), domain)
        return len(s0) - r0, len(s1) - r1 - r0

    # =========================
    # コホモロジー
    # =========================
    def cohomology_dims(self, complex_: SimplicialComplex, field: Optional[FieldChoice] = None,
                        reduced: bool = False) -> CohomologyDims:
        """H⁰, H¹ の次元

        Args:
            complex_: 単体複体
            field: 係数体（省略時はサービスの既定）
            reduced: True なら被約コホモロジー（頂点があれば h0 から 1 を引く）

        Returns:
            CohomologyDims: 次元
        """
        domain = (field or self.field).domain
        if complex_.is_void:
            return CohomologyDims(0, 0, reduced)
        s0, s1, s2 = self.skeleton(complex_)
        h0, h1 = self._dims_from_layers(s0, s1, s2, domain)
        if reduced and s0:
            h0 -= 1
        return CohomologyDims(h0, h1, reduced)

    def relative_cohomology_dims(self, pair: SimplicialPair, field: Optional[FieldChoice] = None,
                                 reduced: bool = False) -> CohomologyDims:
        """対 (total, sub) の相対コホモロジー H⁰, H¹ の次元

        sub で消えるコチェインの複体から計算する。sub が void のときは total の
        （reduced なら被約）絶対コホモロジーに一致する。
        """
        if pair.sub.is_void:
            return self.cohomology_dims(pair.total, field, reduced)
        domain = (field or self.field).domain
        t0, t1, t2 = self.skeleton(pair.total)
        u0, u1, u2 = (set(layer) for layer in self.skeleton(pair.sub))
        s0 = [s for s in t0 if s not in u0]
        s1 = [s for s in t1 if s not in u1]
        s2 = [s for s in t2 if s not in u2]
        h0, h1 = self._dims_from_layers(s0, s1, s2, domain)
        return CohomologyDims(h0, h1, reduced)

    def induced_h_maps(self, pair: SimplicialPair, field: Optional[FieldChoice] = None) -> Tuple[int, int]:
        """制限写像 H⁰(total)→H⁰(sub), H¹(total)→H¹(sub) の階数

        total の余輪体を sub の単体へ制限し、sub の余境界 B(sub) を法とした像の次元を数える。
        """
        if pair.sub.is_void or pair.total.is_void:
            return (0, 0)
        domain = (field or self.field).domain
        x0, x1, x2 = self.skeleton(pair.total)
        a0, a1, _ = self.skeleton(pair.sub)

        z0 = linalg.kernel_basis(self.coboundary(x1, x0, domain), (len(x1), len(x0)), domain)
        rank0 = linalg.span_rank(self._restrict(z0, x0, a0), len(a0), domain)

        z1 = linalg.kernel_basis(self.coboundary(x2, x1, domain), (len(x2), len(x1)), domain)
        boundaries = list(linalg.transpose(self.coboundary(a1, a0, domain)).values())
        restricted = self._restrict(z1, x1, a1)
        rank_b = linalg.span_rank(boundaries, len(a1), domain)
        rank1 = linalg.span_rank(restricted + boundaries, len(a1), domain) - rank_b
        return (rank0, rank1)

    @staticmethod
    def _restrict(vectors: List[Dict[int, object]], source: List[VertexSet],
                  target: List[VertexSet]) -> List[Dict[int, object]]:
        position = {s: j for j, s in enumerate(target)}
        out = []
        for vec in vectors:
            moved = {position[source[i]]: v for i, v in vec.items() if source[i] in position}
            out.append(moved)
        return out
