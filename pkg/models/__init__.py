"""モデルパッケージ - データクラスと複体の演算"""

from .vertex_set import VertexSet
from .simplicial_complex import SimplicialComplex, Multidegree
from .field import FieldChoice
from .face_poset import FacePoset, SimplicialPair, CohomologyDims
from .matroid import Matroid, PartitionSpec
from .graph import Graph1D
from .report import (
    NbPair,
    TDims,
    GradedEntry,
    GradedT2Report,
    VanishingResult,
    ClassificationEntry,
    ClassificationResult,
    ConjectureVerdict,
    JoinCheckResult,
)

__all__ = [
    'VertexSet',
    'SimplicialComplex',
    'Multidegree',
    'FieldChoice',
    'FacePoset',
    'SimplicialPair',
    'CohomologyDims',
    'Matroid',
    'PartitionSpec',
    'Graph1D',
    'NbPair',
    'TDims',
    'GradedEntry',
    'GradedT2Report',
    'VanishingResult',
    'ClassificationEntry',
    'ClassificationResult',
    'ConjectureVerdict',
    'JoinCheckResult',
]
