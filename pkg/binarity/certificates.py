"""
Non-binary witness certificates.

A certificate names the group, two tuples I and J, and for every index pair
u < v an element mapping (I_u, I_v) to (J_u, J_v). It is valid when no element
maps I to J. verify_witness rechecks all of this from the file alone.

File format:
  {"group": {...group file...}, "I": [..], "J": [..],
   "pair_transporters": {"0,1": [image list], ...}, "kind": "plain" | "strong"}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Literal, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from groups.perm_group import PermGroup, transporter
from parsers.group_file import GroupFile, write_json
from perms.permutation import Permutation, permutation_from_json
from binarity.outcomes import Verification


class WitnessCertificate(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    group: GroupFile = Field(description="The acting group")
    left: list[int] = Field(alias="I", description="First tuple")
    right: list[int] = Field(alias="J", description="Second tuple")
    pair_transporters: dict[str, list[int]] = Field(
        description="'u,v' -> image list of an element mapping (I_u, I_v) to (J_u, J_v)"
    )
    kind: Literal["plain", "strong"] = "plain"
    provenance: Optional[str] = Field(default=None, description="Which test or lemma produced it")

    def to_json(self) -> dict:
        return json.loads(self.model_dump_json(by_alias=True, exclude_none=True))

    def save(self, path: Path) -> None:
        write_json(path, self)

    @classmethod
    def load(cls, path: Path) -> WitnessCertificate:
        with open(path, encoding="utf-8") as f:
            return cls.model_validate(json.load(f))


def pair_key(u: int, v: int) -> str:
    return f"{u},{v}"


def build_certificate(
    G: PermGroup,
    I: Sequence[int],
    J: Sequence[int],
    kind: Literal["plain", "strong"] = "plain",
    provenance: str | None = None,
) -> WitnessCertificate | None:
    """Pair transporters for (I, J), or None if some pair is not transportable."""
    table: dict[str, list[int]] = {}
    for u in range(len(I)):
        for v in range(u + 1, len(I)):
            t = transporter(G, (I[u], I[v]), (J[u], J[v]))
            if t is None:
                return None
            table[pair_key(u, v)] = t.as_list()
    return WitnessCertificate(
        group=GroupFile.from_group(G, order=G.order()),
        I=list(I),
        J=list(J),
        pair_transporters=table,
        kind=kind,
        provenance=provenance,
    )


def certificate_from_permutation(
    action, sigma: Permutation, provenance: str | None = None
) -> WitnessCertificate | None:
    """I = (0, ..., n-1) and J = I^sigma; strong when sigma is in the 2-closure but not in G."""
    n = action.degree
    I = list(range(n))
    J = [sigma.images[i] for i in I]
    return build_certificate(action.group, I, J, kind="strong", provenance=provenance)


def verify_witness(certificate: WitnessCertificate) -> Verification:
    try:
        G = certificate.group.to_group()
    except ValueError as e:
        return Verification.rejected(f"invalid group: {e}")
    I, J = certificate.left, certificate.right
    n = G.degree
    if len(I) != len(J):
        return Verification.rejected("tuple lengths differ")
    if any(p < 0 or p >= n for p in (*I, *J)):
        return Verification.rejected("tuple entry out of range")

    if transporter(G, I, J) is not None:
        return Verification.rejected("global transporter exists")

    for u in range(len(I)):
        for v in range(u + 1, len(I)):
            images = certificate.pair_transporters.get(pair_key(u, v))
            if images is None:
                return Verification.rejected(f"pair ({u},{v}) unproven")
            try:
                t = permutation_from_json(images, n)
            except ValueError:
                return Verification.rejected(f"pair ({u},{v}) unproven")
            if t.images[I[u]] != J[u] or t.images[I[v]] != J[v] or t not in G:
                return Verification.rejected(f"pair ({u},{v}) unproven")

    if certificate.kind == "strong" and sorted(I) != list(range(n)):
        return Verification.rejected("strong certificate does not exhaust the domain")
    return Verification.ok()


def lift_induced_certificate(
    certificate: WitnessCertificate, action, provenance: str | None = None
) -> WitnessCertificate | None:
    """A strong certificate for G^Lambda re-expressed in the parent's points.

    Any element of G carrying I to J would stabilize Lambda, so the lifted
    pair is a witness for G itself.
    """
    if certificate.kind != "strong":
        raise ValueError("only strong certificates lift through an induced action")
    points = action.points
    I = [points[i] for i in certificate.left]
    J = [points[j] for j in certificate.right]
    parent = action.parent
    kind = "strong" if len(points) == parent.degree else "plain"
    return build_certificate(parent, I, J, kind=kind, provenance=provenance or certificate.provenance)


def lift_suborbit_certificate(
    certificate: WitnessCertificate, action, alpha: int, G: PermGroup, provenance: str | None = None
) -> WitnessCertificate | None:
    """Witness for G_alpha on a suborbit, prefixed by alpha, is a witness for G."""
    points = action.points
    I = [alpha] + [points[i] for i in certificate.left]
    J = [alpha] + [points[j] for j in certificate.right]
    return build_certificate(G, I, J, kind="plain", provenance=provenance or certificate.provenance)
