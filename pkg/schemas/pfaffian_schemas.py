from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class GraphText(BaseModel):
    """A bipartite graph in the text file format."""
    text: str = Field(..., description="'bipartite <n_a> <n_b>' header followed by 'e <a> <b>' lines")
    verify: bool = Field(False, description="Check the orientation with the exact oracle")


class VerifyRequest(BaseModel):
    """A graph and a candidate orientation to check."""
    graph: str = Field(..., description="Graph file contents")
    orientation: str = Field(..., description="Orientation file contents, one 'e <a> <b> <dir>' line per edge")


class PfaffianResult(BaseModel):
    pfaffian: bool
    orientation: List[str] = Field(default_factory=list, description="Orientation lines, sorted by edge")
    reason: Optional[str] = None
    reason_path: List[int] = Field(default_factory=list)
    tree: Dict[str, Any]
