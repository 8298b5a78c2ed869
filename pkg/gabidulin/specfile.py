"""
Code Specification Files

JSON description of a Gabidulin code: q, m, optional modulus (ascending
coefficients over GF(q)), n, k and the n generator elements.
"""

import json
from pathlib import Path
from typing import List, Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from .codes import CodeSpec
from .field import field_new


class CodeSpecFile(BaseModel):
    """Shape and type validation of a code specification; algebra is checked by CodeSpec."""

    q: int = Field(..., ge=2)
    m: int = Field(..., ge=1)
    modulus: Optional[List[int]] = None
    n: int = Field(..., ge=1)
    k: int = Field(..., ge=1)
    generators: List[int]

    @field_validator("generators")
    @classmethod
    def _non_negative(cls, value: List[int]) -> List[int]:
        if any(g < 0 for g in value):
            raise ValueError("generators must be non-negative element integers")
        return value

    @model_validator(mode="after")
    def _lengths(self) -> "CodeSpecFile":
        if len(self.generators) != self.n:
            raise ValueError(f"expected {self.n} generators, got {len(self.generators)}")
        if self.modulus is not None and len(self.modulus) != self.m + 1:
            raise ValueError(f"modulus needs {self.m + 1} coefficients, got {len(self.modulus)}")
        return self

    @classmethod
    def load(cls, path: Union[str, Path]) -> "CodeSpecFile":
        """
        Read and validate a specification file.

        Raises:
            OSError: If the file cannot be read
            pydantic.ValidationError: If the JSON is malformed or has the wrong shape
        """
        with open(path, "r", encoding="utf-8") as f:
            return cls.model_validate_json(f.read())

    def to_code(self) -> CodeSpec:
        """
        Build the code.

        Raises:
            GabidulinError: If the field or code invariants do not hold
        """
        field = field_new(self.q, self.m, self.modulus)
        return CodeSpec(field, self.n, self.k, tuple(self.generators))

    @classmethod
    def from_code(cls, code: CodeSpec) -> "CodeSpecFile":
        return cls(**code.as_dict())

    def dump(self) -> str:
        return json.dumps(self.model_dump(), indent=2)
