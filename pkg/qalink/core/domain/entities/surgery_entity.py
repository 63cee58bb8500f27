# qalink/core/domain/entities/surgery_entity.py

from math import gcd
from typing import Dict, List, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from ..enums.surgery_enums import SurgeryForm

SURGERY_SCHEMA_VERSION = 1


class SurgeryComponent(BaseModel):
    """An unknotted component with surgery coefficient p/q."""
    p: int
    q: int = 1

    @model_validator(mode="after")
    def _lowest_terms(self):
        if self.q < 1:
            raise ValueError(f"coefficient denominator must be >= 1, got {self.q}")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"coefficient {self.p}/{self.q} is not in lowest terms")
        return self


class SurgeryDiagram(BaseModel):
    """
    Rational surgery on a link of unknots. `linking[i][j]` is the linking
    number of components i and j; the diagonal is 0.
    """
    schema_version: int = SURGERY_SCHEMA_VERSION
    form: SurgeryForm = SurgeryForm.CLASP
    components: List[SurgeryComponent] = Field(default_factory=list)
    linking: List[List[int]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_linking(self):
        n = len(self.components)
        if len(self.linking) != n or any(len(row) != n for row in self.linking):
            raise ValueError(f"linking matrix must be {n}x{n}")
        for i in range(n):
            if self.linking[i][i] != 0:
                raise ValueError(f"linking diagonal must be 0 (row {i})")
            for j in range(i):
                if self.linking[i][j] != self.linking[j][i]:
                    raise ValueError(f"linking matrix not symmetric at ({i},{j})")
        return self

    @property
    def size(self) -> int:
        return len(self.components)


class PlumbingTree(BaseModel):
    """
    Weighted plumbing graph. Vertex ids are arbitrary integers; `weights`
    holds the Euler number of each disk bundle.
    """
    weights: Dict[int, int] = Field(default_factory=dict)
    edges: List[Tuple[int, int]] = Field(default_factory=list)

    @field_validator("edges")
    @classmethod
    def _normalize_edges(cls, v: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
        return sorted((min(a, b), max(a, b)) for a, b in v)

    @model_validator(mode="after")
    def _check_tree(self):
        seen = set()
        parent = {x: x for x in self.weights}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            if a not in self.weights or b not in self.weights:
                raise ValueError(f"edge ({a},{b}) references an unknown vertex")
            if a == b or (a, b) in seen:
                raise ValueError(f"edge ({a},{b}) is a loop or repeated")
            seen.add((a, b))
            ra, rb = find(a), find(b)
            if ra == rb:
                raise ValueError(f"edge ({a},{b}) closes a cycle")
            parent[ra] = rb
        return self

    @property
    def vertices(self) -> List[int]:
        return sorted(self.weights)

    def neighbors(self, v: int) -> List[int]:
        return sorted([b for a, b in self.edges if a == v] + [a for a, b in self.edges if b == v])

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))
