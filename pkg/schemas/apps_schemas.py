from typing import List, Optional

from pydantic import BaseModel, Field


class MatrixText(BaseModel):
    """A square matrix, one row per line."""
    text: str = Field(..., description="Whitespace separated entries in {-1, 0, 1}")


class DigraphText(BaseModel):
    """A digraph in the text file format."""
    text: str = Field(..., description="'digraph <n>' header followed by 'a <u> <v>' lines")


class PolyaResult(BaseModel):
    matrix: Optional[List[List[int]]] = None


class EvennessResult(BaseModel):
    even: bool
    weights: List[List[int]] = Field(default_factory=list, description="[u, v, w] triples, 1-based")


class SnsResult(BaseModel):
    sns: bool
