"""CNF formulas, DIMACS text interchange, and an exhaustive satisfiability oracle.

A literal is a nonzero signed integer in the DIMACS convention: ``+v`` asserts
variable v, ``-v`` its negation. Clauses are sets of literals (duplicates
collapse); the clause *list* keeps its order because downstream constructions
index clauses by position.
"""

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .errors import CapacityError, ParseError, StructuralError

DEFAULT_ORACLE_MAX_VARS = 24


@dataclass(frozen=True)
class CnfFormula:
    """Ordered clause list over variables 1..n_vars. Clauses are never empty."""

    n_vars: int
    clauses: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n_vars < 0:
            raise StructuralError("variable count must be non-negative")
        for i, clause in enumerate(self.clauses):
            if not clause:
                raise StructuralError(f"clause {i} is empty")
            for lit in clause:
                if lit == 0 or abs(lit) > self.n_vars:
                    raise StructuralError(f"literal {lit} in clause {i} out of range")


def make_cnf(n_vars: int, clauses: Iterable[Iterable[int]]) -> CnfFormula:
    return CnfFormula(n_vars, tuple(frozenset(c) for c in clauses))


_HEADER = re.compile(r"p\s+cnf\s+(\d+)\s+(\d+)")


def parse_dimacs(text: "str | bytes") -> CnfFormula:
    """Parse DIMACS CNF text.

    Accepted dialect: optional ``c`` comment lines, exactly one
    ``p cnf <vars> <clauses>`` header, then clauses as 0-terminated integer
    runs (several per line or spanning lines). CRLF input is tolerated.
    Unused variables are retained. Rejected, each with the offending line
    number: missing or duplicate header, non-integer tokens, literals out of
    range, empty (zero-only) clauses, and a clause count that contradicts the
    header.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n_vars: Optional[int] = None
    declared = 0
    clauses: list[frozenset[int]] = []
    pending: list[int] = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if n_vars is not None:
                raise ParseError("duplicate 'p cnf' header", lineno)
            m = _HEADER.fullmatch(line)
            if m is None:
                raise ParseError(f"malformed header {line!r}", lineno)
            n_vars, declared = int(m.group(1)), int(m.group(2))
            continue
        if n_vars is None:
            raise ParseError("clause data before 'p cnf' header", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"expected integer literal, got {tok!r}", lineno) from None
            if lit == 0:
                if not pending:
                    raise ParseError("empty clause (lone 0)", lineno)
                clauses.append(frozenset(pending))
                pending.clear()
            else:
                if abs(lit) > n_vars:
                    raise ParseError(
                        f"literal {lit} exceeds the {n_vars} declared variables", lineno
                    )
                pending.append(lit)
    if n_vars is None:
        raise ParseError("missing 'p cnf' header", max(lineno, 1))
    if pending:
        raise ParseError("unterminated clause at end of input", lineno)
    if len(clauses) != declared:
        raise ParseError(
            f"header declares {declared} clauses but {len(clauses)} were read", lineno
        )
    return CnfFormula(n_vars, tuple(clauses))


def emit_dimacs(f: CnfFormula) -> str:
    """Serialize to DIMACS; literals are ordered by variable, positive first.

    ``parse_dimacs(emit_dimacs(f)) == f``.
    """
    lines = [f"p cnf {f.n_vars} {len(f.clauses)}"]
    for clause in f.clauses:
        lits = sorted(clause, key=lambda lit: (abs(lit), lit < 0))
        lines.append(" ".join(str(lit) for lit in lits) + " 0")
    return "\n".join(lines) + "\n"


def find_tautological_clause(f: CnfFormula) -> Optional[int]:
    """Index of the first clause containing a variable in both polarities."""
    for i, clause in enumerate(f.clauses):
        if any(-lit in clause for lit in clause):
            return i
    return None


def has_tautological_clause(f: CnfFormula) -> bool:
    return find_tautological_clause(f) is not None


def satisfies(f: CnfFormula, assignment: Mapping[int, bool]) -> bool:
    """True iff every clause has a literal made true by the assignment."""
    return all(
        any(assignment[abs(lit)] == (lit > 0) for lit in clause) for clause in f.clauses
    )


def sat_oracle(
    f: CnfFormula, max_vars: int = DEFAULT_ORACLE_MAX_VARS
) -> Optional[dict[int, bool]]:
    """Exhaustive model search; ground truth for small formulas.

    Assignments are scanned lexicographically by variable index with False
    before True, and the first model is returned (None when unsatisfiable).
    The cap guards the 2**n_vars sweep.
    """
    if f.n_vars > max_vars:
        raise CapacityError(f"{f.n_vars} variables exceed the oracle cap of {max_vars}")
    for bits in itertools.product((False, True), repeat=f.n_vars):
        assignment = {v: bits[v - 1] for v in range(1, f.n_vars + 1)}
        if satisfies(f, assignment):
            return assignment
    return None
