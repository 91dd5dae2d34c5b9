"""1次元複体（グラフ）モデル"""
from dataclasses import dataclass
from typing import Iterable, List, Tuple

import networkx as nx

from models import vertex_set as vs
from models.simplicial_complex import SimplicialComplex


@dataclass(frozen=True)
class Graph1D:
    """ちょうど1次元でループのない単体複体

    孤立点は許す（辺を1本以上持つ）。
    """
    complex: SimplicialComplex

    @classmethod
    def from_complex(cls, complex_: SimplicialComplex) -> "Graph1D":
        """
        Raises:
            ValueError: 1次元でない、またはループがある場合
        """
        if complex_.dimension != 1:
            raise ValueError(f"expected a one-dimensional complex, got dimension {complex_.dimension}")
        if complex_.loops:
            raise ValueError(f"loops are not allowed: {vs.format_set(complex_.loops)}")
        return cls(complex_)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph1D":
        return cls.from_complex(SimplicialComplex.from_edges(n, edges))

    @classmethod
    def from_adjacency(cls, adjacency: Tuple[int, ...]) -> "Graph1D":
        """隣接ビット集合の列から生成"""
        edges = [(u, v) for u, row in enumerate(adjacency) for v in vs.members(row) if u < v]
        return cls.from_edges(len(adjacency), edges)

    @property
    def n(self) -> int:
        return self.complex.n

    @property
    def edge_pairs(self) -> List[Tuple[int, int]]:
        return [tuple(vs.members(e)) for e in self.complex.edges]

    def degree(self, v: int) -> int:
        return self.complex.degree(v)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edge_pairs)
        return graph
