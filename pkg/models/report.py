"""
Result records: N_b pairs, T¹/T² dimensions, graded reports and verdicts
"""
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from models import vertex_set as vs
from models.face_poset import FacePoset
from models.simplicial_complex import SimplicialComplex
from models.vertex_set import VertexSet


@dataclass(frozen=True)
class NbPair:
    """b に対する面の集まりの対 (N_b, Ñ_b)"""
    b: VertexSet
    N: FacePoset
    Ntilde: FacePoset


@dataclass(frozen=True)
class TDims:
    """dim T¹ と dim T²"""
    t1: int
    t2: int

    def as_tuple(self) -> Tuple[int, int]:
        return (self.t1, self.t2)


ZERO = TDims(0, 0)


@dataclass(frozen=True)
class GradedEntry:
    """同値類 (A, b) ごとの T¹, T² の次元"""
    A: VertexSet
    b: VertexSet
    t1: int
    t2: int

    def to_dict(self) -> dict:
        return {"A": list(vs.members(self.A)), "b": list(vs.members(self.b)),
                "dimT1": self.t1, "dimT2": self.t2}


@dataclass
class GradedT2Report:
    """補題の許す全ての (A, b) 類についての次元表"""
    complex: SimplicialComplex
    field_label: str
    entries: List[GradedEntry] = field(default_factory=list)

    def nonzero_rows(self, include_t1: bool = False) -> List[GradedEntry]:
        """T² が非零の行（include_t1 なら T¹ 非零の行も）を (|A|, A, |b|, b) 順で"""
        return [e for e in self.entries if e.t2 or (include_t1 and e.t1)]

    @property
    def t2_vanishes(self) -> bool:
        return all(e.t2 == 0 for e in self.entries)

    def to_dict(self, include_t1: bool = False) -> dict:
        return {
            "field": self.field_label,
            "complex": self.complex.to_dict(),
            "rows": [e.to_dict() for e in self.nonzero_rows(include_t1)],
        }


@dataclass(frozen=True)
class VanishingResult:
    """T²(Δ) = 0 の判定と、非零の場合の最初の証拠"""
    vanishes: bool
    A: Optional[VertexSet] = None
    b: Optional[VertexSet] = None
    dims: Optional[TDims] = None

    def witness_line(self) -> str:
        return f"A={vs.format_set(self.A)} b={vs.format_set(self.b)} dimT2={self.dims.t2}"

    def to_dict(self) -> dict:
        if self.vanishes:
            return {"vanishes": True}
        return {"vanishes": False, "A": list(vs.members(self.A)), "b": list(vs.members(self.b)),
                "dimT1": self.dims.t1, "dimT2": self.dims.t2}


@dataclass(frozen=True)
class ClassificationEntry:
    """T² = 0 となる1次元複体の同型類の代表"""
    complex: SimplicialComplex
    canonical: bytes
    is_matroid: bool

    @property
    def n(self) -> int:
        return self.complex.n

    @property
    def edge_count(self) -> int:
        return len(self.complex.edges)

    def to_line(self) -> str:
        """出力の1行（代表の辺リストと標準ラベル）"""
        return f"{self.golden_line()} canon={self.canonical.decode('ascii')}"

    def golden_line(self) -> str:
        """ゴールデンファイルの1行（辺リストは任意の代表でよい）"""
        edges = ",".join(f"{a}-{b}" for a, b in (vs.members(e) for e in self.complex.edges))
        return f"n={self.n} edges={self.edge_count} matroid={'yes' if self.is_matroid else 'no'} edgelist={edges}"

    def key_line(self) -> str:
        """同型で変わらない比較用の1行"""
        return (f"n={self.n} edges={self.edge_count} matroid={'yes' if self.is_matroid else 'no'} "
                f"canon={self.canonical.decode('ascii')}")

    @property
    def sort_key(self) -> tuple:
        return (self.n, self.edge_count, self.canonical)


@dataclass
class ClassificationResult:
    """1次元分類の結果"""
    entries: List[ClassificationEntry]

    @property
    def count(self) -> int:
        return len(self.entries)

    def matroid_entries(self) -> List[ClassificationEntry]:
        return [e for e in self.entries if e.is_matroid]

    def to_lines(self) -> List[str]:
        return [e.to_line() for e in self.entries]


@dataclass(frozen=True)
class ConjectureVerdict:
    """マトロイド1個についての予想の検証結果

    lhs: T²(M) = 0
    rhs: 全ての連結成分の余階数が2以下
    """
    lhs: bool
    rhs: bool
    witness: Optional[VanishingResult] = None

    @property
    def agree(self) -> bool:
        return self.lhs == self.rhs

    @property
    def kind(self) -> str:
        if self.agree:
            return "agree"
        # lhs=False, rhs=True は既知の定理に反するので実装の誤り
        return "counterexample" if self.lhs else "bug"


@dataclass(frozen=True)
class JoinMismatch:
    """結合の公式が一致しなかった類"""
    A: VertexSet
    b: VertexSet
    lhs: int
    rhs: int


@dataclass
class JoinCheckResult:
    """結合複体の T² 公式の検証結果"""
    classes_checked: int = 0
    mismatches: List[JoinMismatch] = field(default_factory=list)
    join_vanishes: bool = True
    factors_vanish: bool = True

    @property
    def biconditional_holds(self) -> bool:
        return self.join_vanishes == self.factors_vanish

    @property
    def passed(self) -> bool:
        return not self.mismatches and self.biconditional_holds
