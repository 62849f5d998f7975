"""Small named graphs and embedding shims shared across test modules."""

from __future__ import annotations

import oracles
from hlink.core import SimpleGraph
from hlink.planar import RotationEmbedding


def petersen() -> SimpleGraph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph.from_edges(10, edges)


def _from_faces(n, faces):
    edges = sorted({
        tuple(sorted((f[i], f[(i + 1) % len(f)])))
        for f in faces
        for i in range(len(f))
    })
    return SimpleGraph.from_edges(n, edges)


def octahedron() -> SimpleGraph:
    return _from_faces(6, oracles.OCTAHEDRON_FACES)


def icosahedron() -> SimpleGraph:
    return _from_faces(12, oracles.ICOSAHEDRON_FACES)


def embed_faces(faces, outer) -> RotationEmbedding:
    """Embedding with the rotation system the oriented face list induces."""
    return RotationEmbedding.make(oracles.rotation_from_faces(faces), outer)


def adjacency(G: SimpleGraph) -> dict[int, set[int]]:
    return {v: set(G.neighbors(v)) for v in range(G.n)}


def separating_instance():
    """Cycle C_8 with an attached connected pair: the witness workhorse.

    Vertex 8 sees 1,2,3; vertex 9 sees 5,7; 8 and 9 are adjacent.  With
    u1=0, u2=4 the minimum-weight pair is R1=(1,2,3), R2=(5,6,7).
    """
    edges = [(i, (i + 1) % 8) for i in range(8)]
    edges += [(8, 1), (8, 2), (8, 3), (9, 5), (9, 7), (8, 9)]
    return SimpleGraph.from_edges(10, edges)
