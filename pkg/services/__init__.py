"""
Services layer for the combinatorial computations
"""

from .complex_service import ComplexService
from .homology_service import HomologyService
from .cotangent_service import CotangentService
from .matroid_service import MatroidService, MatroidParseError
from .graph_service import GoldenFormatError, GraphService

__all__ = [
    'ComplexService',
    'HomologyService',
    'CotangentService',
    'MatroidService',
    'MatroidParseError',
    'GraphService',
    'GoldenFormatError',
]
