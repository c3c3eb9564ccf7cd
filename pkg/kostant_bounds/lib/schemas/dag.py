"""
Directed acyclic graphs on vertices 0..n with edges i -> j, i < j.
"""

import msgspec
import networkx as nx

__all__ = ['Dag']


class Dag(msgspec.Struct, frozen=True):
    """
    Attributes:
        n_vertices: Vertex count (vertices 0..n_vertices-1)
        edges: Edges (i, j) with i < j; repeated pairs are parallel edges
    """

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for i, j in self.edges:
            if not 0 <= i < j < self.n_vertices:
                raise ValueError(f'Edge ({i}, {j}) is not an increasing pair of vertices')

    @classmethod
    def complete(cls, n_vertices: int) -> 'Dag':
        """
        The complete DAG on n_vertices vertices.
        """

        edges = tuple((i, j) for i in range(n_vertices) for j in range(i + 1, n_vertices))
        return cls(n_vertices=n_vertices, edges=edges)

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(self.n_vertices))
        graph.add_edges_from(self.edges)
        return graph
