"""Naive semantics and the concurrence decision by exhaustive enumeration.

Extensions are frozensets of argument ids; claim sets are frozensets of
interned claim keys. Families come back as lists in a fixed order: extension
lists ascend by membership bitmask (argument 0 = least significant bit),
claim-set lists ascend lexicographically by sorted key tuple. Identical
inputs always yield identical ordered outputs.
"""

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import CapacityError, StructuralError
from .model import Caf, ClaimSet, Extension, Framework, af_of, ids_of, mask_of

DEFAULT_MAX_ARGS = 64
DEFAULT_EXHAUSTIVE_MAX_ARGS = 16


def is_conflict_free(framework: Framework, members: Iterable[int]) -> bool:
    """True iff no attack, self-attacks included, has both endpoints in ``members``."""
    af = af_of(framework)
    ids = frozenset(members)
    for a in ids:
        if not (0 <= a < af.n_args):
            raise StructuralError(f"argument id {a} outside range 0..{af.n_args - 1}")
    m = mask_of(ids)
    for a in ids:
        if a in af.self_attackers:
            return False
        if af.conflict_masks[a] & m:
            return False
    return True


def _expand(r: int, p: int, x: int, compat: Sequence[int], out: list[int]) -> None:
    # Pivoted branch and bound over the compatibility (non-conflict) graph:
    # maximal cliques there are exactly the maximal conflict-free sets.
    if p == 0 and x == 0:
        out.append(r)
        return
    pivot, best = -1, -1
    px = p | x
    while px:
        low = px & -px
        u = low.bit_length() - 1
        px ^= low
        score = (p & compat[u]).bit_count()
        if score > best:
            pivot, best = u, score
    branches = p & ~compat[pivot]
    while branches:
        low = branches & -branches
        v = low.bit_length() - 1
        branches ^= low
        _expand(r | low, p & compat[v], x & compat[v], compat, out)
        p ^= low
        x |= low


def naive_extensions(
    framework: Framework, max_args: int = DEFAULT_MAX_ARGS
) -> list[Extension]:
    """All maximal conflict-free sets, ascending by membership bitmask.

    Works on the symmetrized conflict graph: an attack in either direction is
    a conflict, and self-attacking arguments are dropped up front since they
    can never join a conflict-free set. The cap guards the potentially
    exponential output.
    """
    af = af_of(framework)
    if af.n_args > max_args:
        raise CapacityError(f"{af.n_args} arguments exceed the enumeration cap of {max_args}")
    alive = [a for a in range(af.n_args) if a not in af.self_attackers]
    alive_mask = mask_of(alive)
    compat = tuple(
        alive_mask & ~af.conflict_masks[a] & ~(1 << a) if a in alive else 0
        for a in range(af.n_args)
    )
    out: list[int] = []
    _expand(0, alive_mask, 0, compat, out)
    out.sort()
    return [ids_of(m) for m in out]


def is_naive(framework: Framework, members: Iterable[int]) -> bool:
    """Conflict-free and not extendable by any outside non-self-attacking argument."""
    af = af_of(framework)
    ids = frozenset(members)
    if not is_conflict_free(af, ids):
        return False
    m = mask_of(ids)
    for b in range(af.n_args):
        if b in ids or b in af.self_attackers:
            continue
        if af.conflict_masks[b] & m == 0:
            return False
    return True


def _family_sorted(sets: Iterable[ClaimSet]) -> list[ClaimSet]:
    return sorted(set(sets), key=lambda s: tuple(sorted(s)))


def inherited_naive(caf: Caf, max_args: int = DEFAULT_MAX_ARGS) -> list[ClaimSet]:
    """Claim sets of the naive extensions, duplicates collapsed."""
    return _family_sorted(caf.claim_set(e) for e in naive_extensions(caf.af, max_args))


def claim_level_naive(caf: Caf, max_args: int = DEFAULT_MAX_ARGS) -> list[ClaimSet]:
    """Maximal claim sets among claim sets of conflict-free sets.

    Every conflict-free set extends to a maximal one and claim lifting is
    monotone, so these are exactly the maximal elements of the inherited
    family; filtering those avoids a sweep over all argument subsets.
    """
    fam = inherited_naive(caf, max_args)
    return [s for s in fam if not any(s < t for t in fam)]


def claim_level_naive_exhaustive(
    caf: Caf, max_args: int = DEFAULT_EXHAUSTIVE_MAX_ARGS
) -> list[ClaimSet]:
    """Reference computation of the same family by scanning every subset.

    Exponential in the argument count; kept as an independent cross-check for
    claim_level_naive and for invariant sweeps at desk scale.
    """
    n = caf.n_args
    if n > max_args:
        raise CapacityError(f"{n} arguments exceed the exhaustive-scan cap of {max_args}")
    masks = caf.af.conflict_masks
    self_mask = mask_of(caf.af.self_attackers)
    seen: set[ClaimSet] = set()
    for m in range(1 << n):
        if m & self_mask:
            continue
        mm, ok = m, True
        while mm:
            low = mm & -mm
            mm ^= low
            if masks[low.bit_length() - 1] & m:
                ok = False
                break
        if ok:
            seen.add(caf.claim_set(ids_of(m)))
    return _family_sorted(s for s in seen if not any(s < t for t in seen))


def incomparability_violation(
    family: Iterable[ClaimSet],
) -> Optional[tuple[ClaimSet, ClaimSet]]:
    """First strictly nested pair (S, T), S ⊂ T, scanning in family order."""
    fam = _family_sorted(family)
    for s in fam:
        for t in fam:
            if s < t:
                return (s, t)
    return None


def is_incomparable(family: Iterable[ClaimSet]) -> bool:
    """True iff no member of the family is a strict subset of another."""
    return incomparability_violation(family) is None


@dataclass(frozen=True)
class ConcurrenceVerdict:
    """Outcome of a concurrence decision.

    Non-concurrence carries a witness: two naive extensions whose claim sets
    are strictly nested (first strictly below second).
    """

    concurrent: bool
    witness: Optional[tuple[Extension, Extension]] = None


def is_concurrent_brute(caf: Caf, max_args: int = DEFAULT_MAX_ARGS) -> ConcurrenceVerdict:
    """Decide concurrence by enumerating naive extensions.

    The two claim-level liftings coincide exactly when the inherited family
    is an antichain, so one enumeration settles the verdict; a violating pair
    of claim sets is mapped back to the first extensions carrying them.
    """
    exts = naive_extensions(caf.af, max_args)
    fam = _family_sorted(caf.claim_set(e) for e in exts)
    hit = incomparability_violation(fam)
    if hit is None:
        return ConcurrenceVerdict(True)
    small, large = hit
    e = next(x for x in exts if caf.claim_set(x) == small)
    g = next(x for x in exts if caf.claim_set(x) == large)
    return ConcurrenceVerdict(False, (e, g))
