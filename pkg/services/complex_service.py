"""
Complex Service: isomorphism-invariant canonical labels of simplicial complexes
"""
import logging
from itertools import groupby, permutations, product
from typing import List, Sequence, Tuple

from config.constants import MAX_CANONICAL_N
from models import vertex_set as vs
from models.simplicial_complex import SimplicialComplex

logger = logging.getLogger(__name__)


class ComplexService:
    """単体複体の標準形（同型類のラベル）を計算するサービスクラス"""

    def __init__(self, max_n: int = MAX_CANONICAL_N, refinement_rounds: int = 2):
        """
        ComplexServiceの初期化

        Args:
            max_n: 置換総当たりを許す頂点数の上限
            refinement_rounds: 近傍による不変量の細分回数
        """
        self.max_n = max_n
        self.refinement_rounds = refinement_rounds

    def vertex_invariants(self, complex_: SimplicialComplex) -> List[tuple]:
        """頂点ごとの同型不変量

        (ループか, 含まれる facet の大きさの列) から始め、隣接頂点の不変量の
        整列列を付け足して細分する。
        """
        n = complex_.n
        neighbors: List[int] = [0] * n
        sizes: List[List[int]] = [[] for _ in range(n)]
        for facet in complex_.facets:
            for v in vs.members(facet):
                neighbors[v] |= facet
                sizes[v].append(facet.bit_count())
        inv = [(not sizes[v], tuple(sorted(sizes[v]))) for v in range(n)]
        for _ in range(self.refinement_rounds):
            inv = [inv[v] + (tuple(sorted(inv[u] for u in vs.members(neighbors[v] & ~(1 << v)))),)
                   for v in range(n)]
        return inv

    def canonical_form(self, complex_: SimplicialComplex) -> bytes:
        """同型で不変かつ完全な標準ラベル

        不変量の順に頂点をブロックに分け、各ブロック内の全ての並べ替えで facet 族を
        付け替え、整列したビット集合列が辞書順最小になるものを符号化する。

        Args:
            complex_: 単体複体（n ≤ max_n）

        Returns:
            bytes: "n:facet,facet,..."（facet は16進ビット集合）

        Raises:
            ValueError: n が上限を超える場合
        """
        n = complex_.n
        if n > self.max_n:
            raise ValueError(f"canonical form supports n <= {self.max_n}, got n={n}")
        inv = self.vertex_invariants(complex_)
        order = sorted(range(n), key=lambda v: inv[v])
        blocks = [list(group) for _, group in groupby(order, key=lambda v: inv[v])]
        facet_members = [vs.members(f) for f in complex_.facets]

        best = None
        count = 0
        for choice in product(*(permutations(block) for block in blocks)):
            position = [0] * n
            pos = 0
            for block in choice:
                for v in block:
                    position[v] = pos
                    pos += 1
            code = tuple(sorted(self._relabel_mask(elems, position) for elems in facet_members))
            if best is None or code < best:
                best = code
            count += 1
        logger.debug("canonical form of n=%d complex: %d relabelings tried", n, count)
        return self.encode(n, best or ())

    @staticmethod
    def _relabel_mask(elems: Sequence[int], position: Sequence[int]) -> int:
        mask = 0
        for v in elems:
            mask |= 1 << position[v]
        return mask

    @staticmethod
    def encode(n: int, facets: Tuple[int, ...]) -> bytes:
        return (f"{n}:" + ",".join(format(f, "x") for f in facets)).encode("ascii")

    @staticmethod
    def decode(label: bytes) -> SimplicialComplex:
        """標準ラベルから代表の複体を復元"""
        text = label.decode("ascii")
        n_text, _, body = text.partition(":")
        facets = [int(tok, 16) for tok in body.split(",")] if body else []
        return SimplicialComplex.from_antichain(int(n_text), facets)

    def are_isomorphic(self, first: SimplicialComplex, second: SimplicialComplex) -> bool:
        if first.n != second.n or len(first.facets) != len(second.facets):
            return False
        return self.canonical_form(first) == self.canonical_form(second)
