"""共通フィクスチャ"""
import os
import random
import sys
from typing import Iterator, List

import pytest

# リポジトリのルートを import パスに入れる（app.py と同じ階層のパッケージを使う）
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from models.simplicial_complex import SimplicialComplex  # noqa: E402
from services.complex_service import ComplexService  # noqa: E402
from services.cotangent_service import CotangentService  # noqa: E402
from services.graph_service import GraphService  # noqa: E402
from services.homology_service import HomologyService  # noqa: E402
from services.matroid_service import MatroidService  # noqa: E402


@pytest.fixture
def homology_service() -> HomologyService:
    return HomologyService()


@pytest.fixture
def cotangent_service(homology_service) -> CotangentService:
    return CotangentService(homology_service)


@pytest.fixture
def complex_service() -> ComplexService:
    return ComplexService()


@pytest.fixture
def matroid_service(cotangent_service, complex_service) -> MatroidService:
    return MatroidService(cotangent_service, complex_service)


@pytest.fixture
def graph_service() -> GraphService:
    return GraphService(jobs=1)


# =========================
# 複体の組み立て
# =========================
def cycle(n: int) -> SimplicialComplex:
    return SimplicialComplex.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> SimplicialComplex:
    return SimplicialComplex.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def random_complexes(count: int, max_n: int, seed: int) -> Iterator[SimplicialComplex]:
    """void でない乱択複体（ループも許す）"""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        facets: List[List[int]] = []
        for _ in range(rng.randint(1, 4)):
            facets.append([v for v in range(n) if rng.random() < 0.45])
        yield SimplicialComplex.from_facets(n, facets)
