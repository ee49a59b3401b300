"""
Witness constructions from an elementary abelian subgroup V = <g, h> of order p^2.

lemma_m2_witness: G transitive, p divides |Omega| and |G_alpha| exactly once,
g in G_alpha, h and gh conjugate to g. The 3p points

    alpha_i        = alpha^(h^i)
    alpha_(p+i)    = (alpha^x)^(g^i)      where h = g^x
    alpha_(2p+i)   = (alpha^y)^(g^i)      where gh = g^y

carry g, h and gh as two p-cycles each, and the p-cycle
tau = (alpha_p, ..., alpha_(2p-1)) gives the witness (Lambda, Lambda^tau).

lemma_added_witness: g, h and gh^-1 pairwise conjugate, no element of order p
fixes more points than g and |Fix(V)| < |Fix(g)|. On
Lambda = Fix(g) ∪ Fix(h) ∪ Fix(gh^-1) the permutation tau_1 induced by g on
Fix(gh^-1) gives the witness (Lambda, Lambda^tau_1).

Both return NotApplicable naming the first hypothesis that fails. An element
of G carrying Lambda to its image contradicts the hypotheses and raises
ArithmeticError.
"""

from __future__ import annotations

from typing import Sequence

from sympy import isprime

from errors import BudgetExceeded, NotAMember
from groups.backtrack import conjugating_element
from groups.budget import SearchBudget, ensure_budget
from groups.perm_group import PermGroup, transporter
from perms.permutation import Permutation, commutes, compose, format_permutation, inverse
from binarity.certificates import WitnessCertificate, build_certificate
from binarity.outcomes import NotApplicable


def _realize(action, g: Permutation) -> Permutation:
    if g.degree == action.degree:
        return g
    return action.image_of(g)


def _generates_rank_two(g: Permutation, h: Permutation, p: int) -> bool:
    powers = {g ** i for i in range(p)}
    return commutes(g, h) and h not in powers


def _is_p_cycle(perm: Permutation, block: Sequence[int], step: int = 1) -> bool:
    p = len(block)
    return all(perm.images[block[i]] == block[(i + step) % p] for i in range(p))


def _fixes_all(perm: Permutation, block: Sequence[int]) -> bool:
    return all(perm.images[b] == b for b in block)


def _orbit_under_powers(point: int, g: Permutation, p: int) -> list[int]:
    out = [point]
    for _ in range(p - 1):
        out.append(g.images[out[-1]])
    return out


def witness_on(
    G: PermGroup, lam: Sequence[int], tau_images: dict[int, int], provenance: str
) -> Permutation | WitnessCertificate | NotApplicable:
    """
    Witness (Lambda, Lambda^tau) for G, with tau given on its support.

    Returns the element of G carrying Lambda to Lambda^tau pointwise when one
    exists, NotApplicable when some pair of Lambda cannot be carried, and the
    certificate otherwise (plain unless Lambda is all of Omega).
    """
    I = list(lam)
    J = [tau_images.get(a, a) for a in I]
    f = transporter(G, I, J)
    if f is not None:
        return f
    kind = "strong" if len(I) == G.degree else "plain"
    cert = build_certificate(G, I, J, kind=kind, provenance=provenance)
    if cert is None:
        return NotApplicable(reason="some pair of Lambda cannot be carried to its image under tau by G")
    return cert


def m2_points(
    alpha: int, p: int, g: Permutation, h: Permutation, x: Permutation, y: Permutation
) -> list[int]:
    """alpha_0, ..., alpha_(3p-1) in order."""
    first = _orbit_under_powers(alpha, h, p)
    second = _orbit_under_powers(x.images[alpha], g, p)
    third = _orbit_under_powers(y.images[alpha], g, p)
    return first + second + third


def lemma_m2_witness(
    action,
    alpha: int,
    p: int,
    g: Permutation,
    h: Permutation,
    budget: SearchBudget | None = None,
) -> WitnessCertificate | NotApplicable:
    G = action.group
    budget = ensure_budget(budget, "conjugating element")
    if not isprime(p):
        return NotApplicable(reason=f"{p} is not prime")
    try:
        g, h = _realize(action, g), _realize(action, h)
    except NotAMember as e:
        return NotApplicable(reason=str(e))
    if not G.is_transitive():
        return NotApplicable(reason="G is not transitive")
    if G.degree % p:
        return NotApplicable(reason=f"p={p} does not divide |Omega|={G.degree}")
    stab_order = G.point_stabilizer(alpha).order()
    if stab_order % p:
        return NotApplicable(reason=f"p={p} does not divide |G_alpha|={stab_order}")
    if stab_order % (p * p) == 0:
        return NotApplicable(reason=f"p^2={p * p} divides |G_alpha|={stab_order}")
    if g not in G or h not in G:
        return NotApplicable(reason="g or h is not in G")
    if g.images[alpha] != alpha:
        return NotApplicable(reason="g does not fix alpha")
    if g.order() != p or h.order() != p:
        return NotApplicable(reason=f"g and h must have order {p}")
    if not _generates_rank_two(g, h, p):
        return NotApplicable(reason="<g, h> is not elementary abelian of order p^2")

    gh = compose(g, h)
    try:
        x = conjugating_element(G, g, h, budget)
        y = conjugating_element(G, g, gh, budget) if x is not None else None
    except BudgetExceeded as e:
        return NotApplicable(reason=f"conjugacy search gave up: {e}")
    if x is None:
        return NotApplicable(reason="h is not conjugate to g")
    if y is None:
        return NotApplicable(reason="gh is not conjugate to g")

    lam = m2_points(alpha, p, g, h, x, y)
    if len(set(lam)) != 3 * p:
        return NotApplicable(reason="the 3p points are not distinct")
    first, second, third = lam[:p], lam[p : 2 * p], lam[2 * p :]
    shapes_hold = (
        _fixes_all(g, first) and _is_p_cycle(g, second) and _is_p_cycle(g, third)
        and _is_p_cycle(h, first) and _fixes_all(h, second) and _is_p_cycle(h, third, step=-1)
        and _is_p_cycle(gh, first) and _is_p_cycle(gh, second) and _fixes_all(gh, third)
    )
    if not shapes_hold:
        raise ArithmeticError("g, h and gh do not induce the expected cycles on Lambda")

    tau = {second[i]: second[(i + 1) % p] for i in range(p)}
    result = witness_on(G, lam, tau, provenance=f"Lemma M2 (p={p})")
    if isinstance(result, Permutation):
        raise ArithmeticError(
            f"{format_permutation(result)} induces the lone p-cycle on Lambda "
            f"although p^2 does not divide |G_alpha|={stab_order}"
        )
    return result


def _max_fixity(G: PermGroup, p: int, cap: int | None) -> int:
    best = 0
    for f in G.elements(cap):
        if not f.is_identity() and f.order() == p:
            best = max(best, len(f.fixed_points()))
    return best


def lemma_added_witness(
    action,
    g: Permutation,
    h: Permutation,
    p: int,
    budget: SearchBudget | None = None,
    cap: int | None = None,
) -> WitnessCertificate | NotApplicable:
    G = action.group
    budget = ensure_budget(budget, "conjugating element")
    if not isprime(p):
        return NotApplicable(reason=f"{p} is not prime")
    try:
        g, h = _realize(action, g), _realize(action, h)
    except NotAMember as e:
        return NotApplicable(reason=str(e))
    if g not in G or h not in G:
        return NotApplicable(reason="g or h is not in G")
    if g.order() != p or h.order() != p:
        return NotApplicable(reason=f"g and h must have order {p}")
    if not _generates_rank_two(g, h, p):
        return NotApplicable(reason="<g, h> is not elementary abelian of order p^2")

    k = compose(g, inverse(h))
    try:
        if conjugating_element(G, g, h, budget) is None:
            return NotApplicable(reason="h is not conjugate to g")
        if conjugating_element(G, g, k, budget) is None:
            return NotApplicable(reason="gh^-1 is not conjugate to g")
    except BudgetExceeded as e:
        return NotApplicable(reason=f"conjugacy search gave up: {e}")

    fix_g, fix_h, fix_k = set(g.fixed_points()), set(h.fixed_points()), set(k.fixed_points())
    try:
        most = _max_fixity(G, p, cap)
    except BudgetExceeded as e:
        return NotApplicable(reason=f"cannot enumerate G to check fixity: {e}")
    if most > len(fix_g):
        return NotApplicable(reason=f"an element of order {p} fixes {most} > {len(fix_g)} points")
    fix_v = fix_g & fix_h
    if len(fix_v) >= len(fix_g):
        return NotApplicable(reason="|Fix(V)| is not smaller than |Fix(g)|")

    lam = sorted(fix_g | fix_h | fix_k)
    tau = {a: g.images[a] for a in fix_k}
    result = witness_on(G, lam, tau, provenance=f"Lemma added (p={p})")
    if isinstance(result, Permutation):
        raise ArithmeticError(
            f"{format_permutation(result)} induces tau_1 on Lambda "
            f"although |Fix(V)|={len(fix_v)} < |Fix(g)|={len(fix_g)}"
        )
    return result
