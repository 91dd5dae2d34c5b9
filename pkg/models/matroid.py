"""マトロイドデータモデル"""
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

from models import vertex_set as vs
from models.simplicial_complex import SimplicialComplex
from models.vertex_set import VertexSet


def exchange_violation(bases: FrozenSet[VertexSet]) -> Optional[Tuple[VertexSet, VertexSet, int]]:
    """基底交換公理の反例を探す

    Returns:
        Optional[Tuple]: (B1, B2, x) の反例、公理を満たせば None
    """
    ordered = vs.sorted_sets(bases)
    for b1 in ordered:
        for b2 in ordered:
            for x in vs.members(b1 & ~b2):
                without = b1 & ~(1 << x)
                if not any(without | (1 << y) in bases for y in vs.members(b2 & ~b1)):
                    return (b1, b2, x)
    return None


@dataclass(frozen=True)
class Matroid:
    """マトロイド（基底族で表す）

    単体複体としては基底の部分集合全体。基底の大きさが階数。
    """
    n: int
    bases: Tuple[VertexSet, ...]

    @classmethod
    def from_bases(cls, n: int, bases: Iterable[VertexSet], validate: bool = True) -> "Matroid":
        """基底の列からマトロイドを生成

        Raises:
            ValueError: 基底が空・大きさ不揃い・交換公理違反の場合
        """
        unique = frozenset(bases)
        if not unique:
            raise ValueError("a matroid needs at least one basis")
        if any(b >> n for b in unique):
            raise ValueError(f"basis uses an element outside 0..{n - 1}")
        if validate:
            if len({b.bit_count() for b in unique}) != 1:
                raise ValueError("bases must all have the same cardinality")
            bad = exchange_violation(unique)
            if bad is not None:
                b1, b2, x = bad
                raise ValueError(
                    f"basis exchange fails for B1={vs.format_set(b1)}, B2={vs.format_set(b2)}, x={x}")
        return cls(n, tuple(vs.sorted_sets(unique)))

    @classmethod
    def from_complex(cls, complex_: SimplicialComplex) -> "Matroid":
        return cls.from_bases(complex_.n, complex_.facets)

    @cached_property
    def complex(self) -> SimplicialComplex:
        return SimplicialComplex.from_antichain(self.n, self.bases)

    @property
    def rank(self) -> int:
        return self.bases[0].bit_count()

    @property
    def corank(self) -> int:
        return self.n - self.rank

    @cached_property
    def basis_set(self) -> FrozenSet[VertexSet]:
        return frozenset(self.bases)

    def describe(self) -> str:
        return f"n={self.n} r={self.rank} bases=" + " ".join(vs.format_set(b) for b in self.bases)


@dataclass(frozen=True)
class PartitionSpec:
    """階数2マトロイドの記述：ループ集合と平行類の分割"""
    n: int
    loops: VertexSet
    parallel_classes: Tuple[VertexSet, ...]

    @classmethod
    def of(cls, n: int, classes: Sequence[Iterable[int]], loops: Iterable[int] = ()) -> "PartitionSpec":
        """頂点番号の列から生成して検証する

        Raises:
            ValueError: 類が空・重複・被覆漏れ・ループとの重なりがある場合
        """
        masks = tuple(vs.sorted_sets(vs.from_indices(c) for c in classes))
        spec = cls(n, vs.from_indices(loops), masks)
        spec.validate()
        return spec

    def validate(self) -> None:
        seen = self.loops
        for cls_mask in self.parallel_classes:
            if not cls_mask:
                raise ValueError("parallel classes must be nonempty")
            if cls_mask & seen:
                raise ValueError(f"class {vs.format_set(cls_mask)} overlaps another class or a loop")
            seen |= cls_mask
        if seen != vs.full(self.n):
            raise ValueError("loops and parallel classes must cover the ground set")
