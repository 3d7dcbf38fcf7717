"""Witness search for non-concurrence as a propositional encoding.

Searches for two naive extensions with strictly nested claim sets by SAT:
membership variables track each argument's presence in the two candidate
extensions, claim variables track each claim's presence in their claim sets.
A built-in complete solver keeps the package dependency-free; the encoding
can also be exported as DIMACS for external solvers.
"""

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import StructuralError, WitnessVerificationError
from .model import Caf, Extension, ids_of
from .semantics import ConcurrenceVerdict, is_naive


@dataclass(frozen=True)
class WitnessEncoding:
    """CNF whose models are exactly the non-concurrence witnesses of ``caf``.

    Variable layout (1-based, n arguments, K claims):

    =================  =========================================
    a + 1              argument a belongs to E
    n + a + 1          argument a belongs to G
    2n + k + 1         claim k belongs to cl(E)
    2n + K + k + 1     claim k belongs to cl(G)
    2n + 2K + k + 1    claim k separates the two: in cl(G), not cl(E)
    =================  =========================================
    """

    caf: Caf
    n_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def e_var(self, a: int) -> int:
        return a + 1

    def g_var(self, a: int) -> int:
        return self.caf.n_args + a + 1

    def ce_var(self, k: int) -> int:
        return 2 * self.caf.n_args + k + 1

    def cg_var(self, k: int) -> int:
        return 2 * self.caf.n_args + len(self.caf.claim_names) + k + 1

    def sep_var(self, k: int) -> int:
        return 2 * self.caf.n_args + 2 * len(self.caf.claim_names) + k + 1

    def decode(self, model: Mapping[int, bool]) -> tuple[Extension, Extension]:
        """Read the two candidate extensions off a model."""
        n = self.caf.n_args
        e = frozenset(a for a in range(n) if model[self.e_var(a)])
        g = frozenset(a for a in range(n) if model[self.g_var(a)])
        return e, g

    def variable_legend(self) -> list[str]:
        """One ``var <index> <role> <name>`` entry per variable; roles are
        inE, inG, claimE, claimG, sep."""
        out = []
        for a, name in enumerate(self.caf.arg_names):
            out.append(f"var {self.e_var(a)} inE {name}")
        for a, name in enumerate(self.caf.arg_names):
            out.append(f"var {self.g_var(a)} inG {name}")
        for k, label in enumerate(self.caf.claim_names):
            out.append(f"var {self.ce_var(k)} claimE {label}")
        for k, label in enumerate(self.caf.claim_names):
            out.append(f"var {self.cg_var(k)} claimG {label}")
        for k, label in enumerate(self.caf.claim_names):
            out.append(f"var {self.sep_var(k)} sep {label}")
        return out


def encode_nonconcurrence(caf: Caf) -> WitnessEncoding:
    """Build the witness CNF for a framework.

    Per candidate extension: one binary clause per undirected conflict, a
    forced-out unit per self-attacker, and per non-self-attacking argument a
    maximality clause saying the argument is in or one of its conflict
    neighbors is. Claim variables are tied to argument variables in both
    directions so decoded claim sets are exact. Strictness adds cl(E) ⊆ cl(G)
    implications plus one clause requiring some separating claim; with no
    claims at all that clause is empty and the encoding is unsatisfiable.
    """
    n = caf.n_args
    nclaims = len(caf.claim_names)

    def e(a: int) -> int:
        return a + 1

    def g(a: int) -> int:
        return n + a + 1

    def ce(k: int) -> int:
        return 2 * n + k + 1

    def cg(k: int) -> int:
        return 2 * n + nclaims + k + 1

    def sep(k: int) -> int:
        return 2 * n + 2 * nclaims + k + 1

    selfers = caf.af.self_attackers
    conflicts = sorted(
        {(min(a, b), max(a, b)) for a, b in caf.af.attacks if a != b}
    )
    neigh = caf.af.conflict_masks

    clauses: list[tuple[int, ...]] = []
    for member in (e, g):
        for a, b in conflicts:
            clauses.append((-member(a), -member(b)))
        for a in sorted(selfers):
            clauses.append((-member(a),))
        for a in range(n):
            if a in selfers:
                continue
            clause = [member(a)]
            clause.extend(member(b) for b in sorted(ids_of(neigh[a])))
            clauses.append(tuple(clause))
    for cx, member in ((ce, e), (cg, g)):
        for k in range(nclaims):
            group = caf.args_by_claim[k]
            clauses.append(tuple([-cx(k)] + [member(a) for a in group]))
            for a in group:
                clauses.append((-member(a), cx(k)))
    for k in range(nclaims):
        clauses.append((-ce(k), cg(k)))
    for k in range(nclaims):
        clauses.append((-sep(k), cg(k)))
        clauses.append((-sep(k), -ce(k)))
    clauses.append(tuple(sep(k) for k in range(nclaims)))
    return WitnessEncoding(caf, 2 * n + 3 * nclaims, tuple(clauses))


def dpll_solve(
    n_vars: int, clauses: Sequence[Sequence[int]]
) -> Optional[dict[int, bool]]:
    """Complete DPLL search over arbitrary clause sets.

    Two-watched-literal unit propagation with chronological backtracking;
    branching is deterministic (lowest-index unassigned variable, False
    first), so the first model found is a function of the input alone.
    Returns a total assignment, or None when unsatisfiable.
    """
    cls: list[list[int]] = []
    units: list[int] = []
    for c in clauses:
        lits = list(dict.fromkeys(c))
        if not lits:
            return None
        for lit in lits:
            if lit == 0 or abs(lit) > n_vars:
                raise StructuralError(f"literal {lit} out of range for {n_vars} variables")
        if len(lits) == 1:
            units.append(lits[0])
        cls.append(lits)

    def widx(lit: int) -> int:
        return 2 * lit if lit > 0 else -2 * lit + 1

    watchers: list[list[int]] = [[] for _ in range(2 * n_vars + 2)]
    for ci, lits in enumerate(cls):
        if len(lits) >= 2:
            watchers[widx(lits[0])].append(ci)
            watchers[widx(lits[1])].append(ci)

    assign: list[Optional[bool]] = [None] * (n_vars + 1)
    trail: list[int] = []

    def value(lit: int) -> Optional[bool]:
        v = assign[abs(lit)]
        return None if v is None else (v if lit > 0 else not v)

    def enqueue(lit: int) -> bool:
        v = value(lit)
        if v is not None:
            return v
        assign[abs(lit)] = lit > 0
        trail.append(lit)
        return True

    def propagate(qhead: int) -> bool:
        while qhead < len(trail):
            falsified = -trail[qhead]
            qhead += 1
            ws = watchers[widx(falsified)]
            kept: list[int] = []
            conflict = False
            for pos, ci in enumerate(ws):
                lits = cls[ci]
                if lits[0] == falsified:
                    lits[0], lits[1] = lits[1], lits[0]
                if value(lits[0]) is True:
                    kept.append(ci)
                    continue
                for k in range(2, len(lits)):
                    if value(lits[k]) is not False:
                        lits[1], lits[k] = lits[k], lits[1]
                        watchers[widx(lits[1])].append(ci)
                        break
                else:
                    kept.append(ci)
                    if not enqueue(lits[0]):
                        kept.extend(ws[pos + 1 :])
                        conflict = True
                        break
            watchers[widx(falsified)] = kept
            if conflict:
                return False
        return True

    for u in units:
        if not enqueue(u):
            return None
    if not propagate(0):
        return None

    stack: list[tuple[int, int, bool]] = []  # (trail mark, variable, tried True)
    while True:
        decision = None
        for v in range(1, n_vars + 1):
            if assign[v] is None:
                decision = v
                break
        if decision is None:
            return {v: bool(assign[v]) for v in range(1, n_vars + 1)}
        qhead = len(trail)
        stack.append((qhead, decision, False))
        enqueue(-decision)
        while not propagate(qhead):
            flipped = False
            while stack:
                mark, dv, tried_true = stack.pop()
                for lit in trail[mark:]:
                    assign[abs(lit)] = None
                del trail[mark:]
                if not tried_true:
                    stack.append((mark, dv, True))
                    enqueue(dv)
                    qhead = mark
                    flipped = True
                    break
            if not flipped:
                return None


def solve_encoding(enc: WitnessEncoding) -> Optional[dict[int, bool]]:
    """Model of the witness encoding, or None when none exists."""
    return dpll_solve(enc.n_vars, enc.clauses)


def verify_witness(caf: Caf, e: Extension, g: Extension) -> None:
    """Raise WitnessVerificationError unless (e, g) certifies non-concurrence."""
    if not is_naive(caf, e):
        raise WitnessVerificationError(f"first extension {sorted(e)} is not naive")
    if not is_naive(caf, g):
        raise WitnessVerificationError(f"second extension {sorted(g)} is not naive")
    if not caf.claim_set(e) < caf.claim_set(g):
        raise WitnessVerificationError(
            f"claim sets of {sorted(e)} and {sorted(g)} are not strictly nested"
        )


def is_concurrent_sat(caf: Caf) -> ConcurrenceVerdict:
    """Decide concurrence by satisfiability of the witness encoding.

    A decoded witness is re-verified against the semantics predicates before
    being returned; a verification failure means the encoding is wrong and is
    raised loudly rather than silently returned.
    """
    enc = encode_nonconcurrence(caf)
    model = solve_encoding(enc)
    if model is None:
        return ConcurrenceVerdict(True)
    e, g = enc.decode(model)
    verify_witness(caf, e, g)
    return ConcurrenceVerdict(False, (e, g))


def export_encoding_dimacs(enc: WitnessEncoding) -> str:
    """DIMACS text with a ``c`` comment legend mapping variables to roles.

    Legend lines are ``c var <index> <role> <name>`` with roles inE, inG,
    claimE, claimG, sep. A framework with no claims yields the degenerate
    single empty clause (a bare ``0`` line), which external solvers read as
    trivially unsatisfiable; such text is deliberately not re-parseable by
    the strict DIMACS reader here.
    """
    lines = ["c non-concurrence witness encoding"]
    lines.extend(f"c {entry}" for entry in enc.variable_legend())
    lines.append(f"p cnf {enc.n_vars} {len(enc.clauses)}")
    for clause in enc.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0" if clause else "0")
    return "\n".join(lines) + "\n"


__all__ = [
    "WitnessEncoding",
    "encode_nonconcurrence",
    "dpll_solve",
    "solve_encoding",
    "verify_witness",
    "is_concurrent_sat",
    "export_encoding_dimacs",
]
