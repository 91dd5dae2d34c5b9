"""
Face posets, simplicial pairs and cohomology dimension records
"""
from dataclasses import dataclass
from typing import Iterable, Tuple

from models import vertex_set as vs
from models.simplicial_complex import SimplicialComplex
from models.vertex_set import VertexSet


@dataclass(frozen=True)
class FacePoset:
    """包含で順序付けた面の集まり Γ（部分集合で閉じているとは限らない）"""
    elements: Tuple[VertexSet, ...]

    @classmethod
    def of(cls, elements: Iterable[VertexSet]) -> "FacePoset":
        return cls(tuple(vs.sorted_sets(set(elements))))

    @property
    def contains_empty(self) -> bool:
        return vs.EMPTY in self.elements

    @property
    def is_empty(self) -> bool:
        return not self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, face: VertexSet) -> bool:
        return face in self.elements

    def nonempty_elements(self) -> Tuple[VertexSet, ...]:
        return tuple(e for e in self.elements if e)

    def is_subposet_of(self, other: "FacePoset") -> bool:
        return set(self.elements) <= set(other.elements)

    def describe(self) -> str:
        return "[" + " ".join(vs.format_set(e) for e in self.elements) + "]"


@dataclass(frozen=True)
class SimplicialPair:
    """単体複体の対 (total, sub)：sub は同じ頂点番号付けの部分複体"""
    total: SimplicialComplex
    sub: SimplicialComplex

    def __post_init__(self):
        if self.sub.n != self.total.n:
            raise ValueError("pair members must share one vertex indexing")
        if any(not self.total.is_face(f) for f in self.sub.facets):
            raise ValueError("sub is not a subcomplex of total")


@dataclass(frozen=True)
class CohomologyDims:
    """H⁰ と H¹ の次元"""
    h0: int
    h1: int
    reduced: bool = False

    def as_tuple(self) -> Tuple[int, int]:
        return (self.h0, self.h1)
