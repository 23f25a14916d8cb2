from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from models.bipartite_graph import Vertex

HalfEdge = Tuple[Vertex, Vertex]


class Embedding(BaseModel):
    """A combinatorial plane embedding: clockwise rotations plus face boundary walks.

    Faces are listed per connected component; each walk is a cyclic sequence of
    half-edges and every half-edge occurs in exactly one walk.
    """

    model_config = ConfigDict(frozen=True)

    rotation: Dict[Vertex, Tuple[Vertex, ...]]
    faces: Tuple[Tuple[HalfEdge, ...], ...]
    component_count: int
    edge_count: int

    @model_validator(mode="after")
    def check_euler(self) -> "Embedding":
        seen = [h for face in self.faces for h in face]
        if len(seen) != 2 * self.edge_count or len(set(seen)) != len(seen):
            raise ValueError("every half-edge must lie on exactly one face")
        v = len(self.rotation)
        if v - self.edge_count + self.plane_face_count != 1 + self.component_count:
            raise ValueError("embedding violates Euler's formula")
        return self

    @property
    def plane_face_count(self) -> int:
        # Isolated vertices have no half-edges but still bound one face of their own.
        isolated = sum(1 for nbrs in self.rotation.values() if not nbrs)
        return len(self.faces) + isolated - (self.component_count - 1)

    def faces_of(self, vertices) -> List[Tuple[HalfEdge, ...]]:
        members = set(vertices)
        return [face for face in self.faces if face and face[0][0] in members]
