from typing import ClassVar, FrozenSet, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class SquareMatrix(BaseModel):
    """A square integer matrix whose entries come from ``allowed``."""

    model_config = ConfigDict(frozen=True)

    allowed: ClassVar[FrozenSet[int]] = frozenset()

    n: int = Field(..., ge=0)
    entries: Tuple[Tuple[int, ...], ...] = ()

    @model_validator(mode="after")
    def check_shape(self) -> "SquareMatrix":
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ValueError(f"matrix must be {self.n}x{self.n}")
        for row in self.entries:
            for x in row:
                if x not in self.allowed:
                    raise ValueError(f"entry {x} not allowed; expected one of {sorted(self.allowed)}")
        return self

    @classmethod
    def from_rows(cls, rows: List[List[int]]):
        return cls(n=len(rows), entries=tuple(tuple(int(x) for x in row) for row in rows))

    def rows(self) -> List[List[int]]:
        return [list(row) for row in self.entries]


class ZeroOneMatrix(SquareMatrix):
    allowed: ClassVar[FrozenSet[int]] = frozenset({0, 1})


class SignMatrix(SquareMatrix):
    allowed: ClassVar[FrozenSet[int]] = frozenset({-1, 0, 1})

    def support(self) -> ZeroOneMatrix:
        return ZeroOneMatrix.from_rows([[1 if x else 0 for x in row] for row in self.entries])
