from typing import Dict, List, Union

from pydantic import BaseModel, StrictInt, StrictStr, model_validator


# ============= Input Schemas =============


class SemigroupTableFile(BaseModel):
    """A finite semigroup as stored on disk (row = left factor)."""

    n: int
    labels: List[str]
    identity: int
    table: List[List[int]]

    @model_validator(mode="after")
    def check_dimensions(self) -> "SemigroupTableFile":
        if self.n < 1:
            raise ValueError("n must be positive")
        if len(self.labels) != self.n:
            raise ValueError(f"expected {self.n} labels, got {len(self.labels)}")
        if len(self.table) != self.n or any(len(row) != self.n for row in self.table):
            raise ValueError(f"table must be {self.n}x{self.n}")
        return self


class WeightsFile(BaseModel):
    """Rational weights keyed by element label, e.g. {"weights": {"1": "1/2"}}."""

    weights: Dict[str, Union[StrictStr, StrictInt]]
