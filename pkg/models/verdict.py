from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from models.decomposition import DecompositionTree
from models.digraph import EdgeWeighting
from models.orientation import Orientation


class NoPfaffianKind(str, Enum):
    TOO_MANY_TRISECTORS = "too_many_trisectors"
    NONPLANAR_NON_HEAWOOD = "nonplanar_non_heawood"
    EDGE_BOUND_EXCEEDED = "edge_bound_exceeded"

    @property
    def message(self) -> str:
        return _MESSAGES[self]


_MESSAGES = {
    NoPfaffianKind.TOO_MANY_TRISECTORS: "brace has more than n-5 trisectors",
    NoPfaffianKind.NONPLANAR_NON_HEAWOOD: "nonplanar brace, not Heawood, no trisectors",
    NoPfaffianKind.EDGE_BOUND_EXCEEDED: "brace has more than 2n-4 edges",
}


class NoPfaffianReason(BaseModel):
    """Why a graph has no Pfaffian orientation.

    ``path`` lists child indices from the tree root to the failing brace node;
    a nonempty path means the failure happened in a piece.
    """

    model_config = ConfigDict(frozen=True)

    kind: NoPfaffianKind
    path: List[int] = Field(default_factory=list)

    @property
    def piece_failed(self) -> bool:
        return bool(self.path)

    def under(self, index: int) -> "NoPfaffianReason":
        return NoPfaffianReason(kind=self.kind, path=[index] + list(self.path))

    def describe(self, skip: int = 0) -> str:
        """Human readable reason; the first ``skip`` path steps are not reported as pieces."""
        piece = self.path[skip:]
        if not piece:
            return self.kind.message
        where = ".".join(str(i) for i in piece)
        return f"{self.kind.message} (piece {where})"


class PfaffianVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    pfaffian: bool
    tree: DecompositionTree
    orientation: Optional[Orientation] = None
    reason: Optional[NoPfaffianReason] = None

    @model_validator(mode="after")
    def check_payload(self) -> "PfaffianVerdict":
        if self.pfaffian and (self.orientation is None or self.reason is not None):
            raise ValueError("a Yes verdict carries an orientation and no reason")
        if not self.pfaffian and (self.reason is None or self.orientation is not None):
            raise ValueError("a No verdict carries a reason and no orientation")
        return self


class EvennessVerdict(BaseModel):
    """``witness`` makes every directed circuit odd; it is present only for non-even digraphs."""

    model_config = ConfigDict(frozen=True)

    even: bool
    witness: Optional[EdgeWeighting] = None

    @model_validator(mode="after")
    def check_witness(self) -> "EvennessVerdict":
        if self.even and self.witness is not None:
            raise ValueError("an even digraph has no odd weighting")
        if not self.even and self.witness is None:
            raise ValueError("a non-even verdict needs a witness weighting")
        return self
