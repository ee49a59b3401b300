"""
JSON group files.

  {"name": "A4", "degree": 4, "generators": ["(0 1 2)", [0, 2, 3, 1]]}

Optional keys: "order" (checked against the stabilizer chain), "subgroup"
(analyze the action on right cosets of this subgroup) and
"point_stabilizer" (the group is the point stabilizer M of an action too large
to build; see PointStabilizerSpec).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel, Field, field_validator

from errors import InvalidGroupFile
from groups.perm_group import PermGroup
from perms.permutation import Permutation, format_permutation, permutation_from_json

PermutationText = Union[str, list[int]]


class PointStabilizerSpec(BaseModel):
    """Configuration for the implicit-action tests (suborbit reduction and divisibility)."""

    omega_size: Optional[str] = Field(
        default=None,
        description="|G:M| as a decimal string (arbitrary precision)",
    )
    intersections: list[list[PermutationText]] = Field(
        default_factory=list,
        description="Generators of subgroups M ∩ M^g for chosen g; each gives a coset action of M",
    )
    d: Optional[int] = Field(default=None, ge=2, description="Divisor used by the divisibility test")
    relax_condition2: bool = Field(default=True, description="Skip the composition-factor filter")
    relax_condition3: bool = Field(default=True, description="Skip the kernel filter")

    @field_validator("omega_size")
    @classmethod
    def _digits(cls, v: Optional[str]) -> Optional[str]:
        if v is not None and not v.strip().isdigit():
            raise ValueError(f"omega_size must be a decimal integer, got {v!r}")
        return v.strip() if v is not None else v

    @property
    def omega(self) -> Optional[int]:
        return int(self.omega_size) if self.omega_size is not None else None


class GroupFile(BaseModel):
    """A permutation group given by generators on {0, ..., degree-1}."""

    name: Optional[str] = Field(default=None, description="Display name")
    degree: int = Field(ge=1, description="Number of points")
    generators: list[PermutationText] = Field(description="Cycle strings or image lists")
    order: Optional[int] = Field(default=None, ge=1, description="Expected group order")
    subgroup: Optional[list[PermutationText]] = Field(
        default=None, description="Generators of H; the action studied is on right cosets of H"
    )
    point_stabilizer: Optional[PointStabilizerSpec] = Field(
        default=None, description="Implicit action with this group as point stabilizer"
    )
    labels: Optional[dict[str, str]] = Field(
        default=None, description="Point descriptions of a realized action"
    )
    index: Optional[int] = Field(default=None, description="|G:H| for coset actions")

    def permutations(self, one_based: bool = False) -> list[Permutation]:
        return [permutation_from_json(g, self.degree, one_based) for g in self.generators]

    def subgroup_permutations(self, one_based: bool = False) -> list[Permutation]:
        return [permutation_from_json(g, self.degree, one_based) for g in self.subgroup or []]

    def to_group(self, one_based: bool = False) -> PermGroup:
        G = PermGroup(self.permutations(one_based), degree=self.degree, name=self.name)
        if self.order is not None and G.order() != self.order:
            raise InvalidGroupFile(
                f"{self.name or 'group'}: generators give order {G.order()}, file says {self.order}"
            )
        return G

    @classmethod
    def from_group(cls, G: PermGroup, name: str | None = None, **extra) -> GroupFile:
        return cls(
            name=name or G.name,
            degree=G.degree,
            generators=[format_permutation(g) for g in G.generators] or ["()"],
            **extra,
        )


def load_group_file(path: Path) -> GroupFile:
    with open(path, encoding="utf-8") as f:
        data = json.load(f)
    if not isinstance(data, dict):
        raise InvalidGroupFile(f"{path}: expected a JSON object")
    return GroupFile.model_validate(data)


def load_group(path: Path, one_based: bool = False) -> PermGroup:
    return load_group_file(path).to_group(one_based)


def write_json(path: Path, model: BaseModel) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(model.model_dump_json(indent=2, by_alias=True, exclude_none=True))
        f.write("\n")
