"""Domain model for claim-augmented argumentation frameworks.

Arguments are dense integer ids starting at 0. Display names and claim labels
live in side tables; claim labels are interned to integer keys so that claim
sets are cheap frozensets of ints. Sets of arguments double as bitmasks
(argument id = bit position) in the enumeration code.

All types are immutable after construction and safe to share between workers.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union

from .errors import StructuralError

Extension = frozenset[int]  # argument ids
ClaimSet = frozenset[int]   # interned claim keys


def _check_name(text: str, what: str) -> None:
    if not text or "#" in text or any(ch.isspace() for ch in text):
        raise StructuralError(
            f"invalid {what} {text!r}: must be non-empty with no whitespace or '#'"
        )


def mask_of(members: Iterable[int]) -> int:
    """Pack argument ids into a bitmask."""
    m = 0
    for a in members:
        if a < 0:
            raise StructuralError(f"argument id {a} is negative")
        m |= 1 << a
    return m


def ids_of(mask: int) -> frozenset[int]:
    """Unpack a bitmask into the set of argument ids."""
    out = set()
    while mask:
        low = mask & -mask
        out.add(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


@dataclass(frozen=True)
class Af:
    """Directed attack graph over arguments 0..n_args-1.

    The attack relation is a set: duplicates collapse on construction via
    ``make_af``. Self-attacks are allowed.
    """

    n_args: int
    attacks: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n_args < 0:
            raise StructuralError("argument count must be non-negative")
        for a, b in self.attacks:
            if not (0 <= a < self.n_args and 0 <= b < self.n_args):
                raise StructuralError(
                    f"attack ({a}, {b}) outside argument range 0..{self.n_args - 1}"
                )

    @cached_property
    def attackers_map(self) -> tuple[frozenset[int], ...]:
        """Per argument: the set of arguments attacking it."""
        m: list[set[int]] = [set() for _ in range(self.n_args)]
        for a, b in self.attacks:
            m[b].add(a)
        return tuple(frozenset(s) for s in m)

    @cached_property
    def attacked_map(self) -> tuple[frozenset[int], ...]:
        """Per argument: the set of arguments it attacks."""
        m: list[set[int]] = [set() for _ in range(self.n_args)]
        for a, b in self.attacks:
            m[a].add(b)
        return tuple(frozenset(s) for s in m)

    @cached_property
    def self_attackers(self) -> frozenset[int]:
        return frozenset(a for a, b in self.attacks if a == b)

    @cached_property
    def conflict_masks(self) -> tuple[int, ...]:
        """Per argument: bitmask of *other* arguments in conflict with it
        (attacking or attacked, direction ignored)."""
        masks = [0] * self.n_args
        for a, b in self.attacks:
            if a != b:
                masks[a] |= 1 << b
                masks[b] |= 1 << a
        return tuple(masks)


def make_af(n_args: int, attacks: Iterable[tuple[int, int]] = ()) -> Af:
    """Build an Af; duplicate attack pairs are silently collapsed."""
    return Af(n_args, frozenset((int(a), int(b)) for a, b in attacks))


@dataclass(frozen=True)
class Caf:
    """A claim-augmented framework: an attack graph plus a total claim assignment.

    ``claims[a]`` is the interned key of argument a's claim and
    ``claim_names[key]`` recovers the label. Interning is canonical: keys are
    assigned in order of first appearance over argument ids, so structurally
    equal frameworks compare equal.
    """

    af: Af
    arg_names: tuple[str, ...]
    claims: tuple[int, ...]
    claim_names: tuple[str, ...]

    def __post_init__(self) -> None:
        n = self.af.n_args
        if len(self.arg_names) != n:
            raise StructuralError(f"{n} arguments but {len(self.arg_names)} names")
        if len(self.claims) != n:
            raise StructuralError("claim assignment must be total over all arguments")
        seen: set[str] = set()
        for name in self.arg_names:
            _check_name(name, "argument name")
            if name in seen:
                raise StructuralError(f"duplicate argument name {name!r}")
            seen.add(name)
        for label in self.claim_names:
            _check_name(label, "claim label")
        if len(set(self.claim_names)) != len(self.claim_names):
            raise StructuralError("claim labels must be interned uniquely")
        nxt = 0
        for key in self.claims:
            if not (0 <= key < len(self.claim_names)):
                raise StructuralError(f"claim key {key} out of range")
            if key == nxt:
                nxt += 1
            elif key > nxt:
                raise StructuralError("claim keys must be interned in first-appearance order")
        if nxt != len(self.claim_names):
            raise StructuralError("unused claim labels in intern table")

    @property
    def n_args(self) -> int:
        return self.af.n_args

    @cached_property
    def args_by_claim(self) -> tuple[tuple[int, ...], ...]:
        """Per claim key: the argument ids carrying that claim, ascending."""
        groups: list[list[int]] = [[] for _ in self.claim_names]
        for a, key in enumerate(self.claims):
            groups[key].append(a)
        return tuple(tuple(g) for g in groups)

    def claim_set(self, members: Iterable[int]) -> ClaimSet:
        """Lift a set of arguments to the set of claim keys they carry."""
        return frozenset(self.claims[a] for a in members)

    def claim_labels(self, claim_keys: Iterable[int]) -> tuple[str, ...]:
        """Labels of a claim set, in interned-key order."""
        return tuple(self.claim_names[k] for k in sorted(claim_keys))


def make_caf(
    arg_names: Sequence[str],
    attacks: Iterable[tuple[int, int]],
    claim_labels: Sequence[str],
) -> Caf:
    """Build a Caf from per-argument claim labels.

    Labels are interned in order of first appearance over argument ids.
    """
    af = make_af(len(arg_names), attacks)
    keys: dict[str, int] = {}
    claims = []
    for label in claim_labels:
        if label not in keys:
            keys[label] = len(keys)
        claims.append(keys[label])
    return Caf(af, tuple(arg_names), tuple(claims), tuple(keys))


Framework = Union[Af, Caf]


def af_of(framework: Framework) -> Af:
    """The argument-level attack graph of either framework flavor."""
    return framework.af if isinstance(framework, Caf) else framework


def _check_arg(af: Af, a: int) -> None:
    if not (0 <= a < af.n_args):
        raise StructuralError(f"argument id {a} outside range 0..{af.n_args - 1}")


def attackers_of(framework: Framework, a: int) -> frozenset[int]:
    """The arguments attacking ``a``."""
    af = af_of(framework)
    _check_arg(af, a)
    return af.attackers_map[a]


def attacked_by(framework: Framework, a: int) -> frozenset[int]:
    """The arguments that ``a`` attacks."""
    af = af_of(framework)
    _check_arg(af, a)
    return af.attacked_map[a]


def well_formedness_violation(caf: Caf) -> "tuple[int, int] | None":
    """First pair of same-claim arguments with different attack targets.

    Groups are scanned in claim-key order and members in id order, so the
    witness is deterministic. Returns None when the framework is well-formed.
    """
    for group in caf.args_by_claim:
        base = caf.af.attacked_map[group[0]]
        for b in group[1:]:
            if caf.af.attacked_map[b] != base:
                return (group[0], b)
    return None


def is_well_formed(caf: Caf) -> bool:
    """True iff arguments sharing a claim attack exactly the same arguments."""
    return well_formedness_violation(caf) is None
