"""CNF-to-framework construction whose concurrence verdict mirrors satisfiability."""

from dataclasses import dataclass

from .cnf import CnfFormula, find_tautological_clause, sat_oracle, DEFAULT_ORACLE_MAX_VARS
from .errors import TautologyError
from .model import Caf, make_caf, well_formedness_violation
from .semantics import (
    DEFAULT_MAX_ARGS,
    is_concurrent_brute,
    is_naive,
    naive_extensions,
)


@dataclass(frozen=True)
class ReductionArtifact:
    """A generated framework plus the provenance of each argument.

    ``roles[arg_id]`` is one of ("pos", v), ("neg", v), ("clause", j),
    ("formula", 0), ("aux", 1), ("aux", 2) with v a 1-based variable index
    and j a 1-based clause index.
    """

    caf: Caf
    roles: tuple[tuple[str, int], ...]
    n_vars: int
    n_clauses: int

    def pos_arg(self, var: int) -> int:
        return 2 * (var - 1)

    def neg_arg(self, var: int) -> int:
        return 2 * var - 1

    def clause_arg(self, index: int) -> int:
        return 2 * self.n_vars + index - 1

    @property
    def formula_arg(self) -> int:
        return 2 * self.n_vars + self.n_clauses

    @property
    def aux1_arg(self) -> int:
        return self.formula_arg + 1

    @property
    def aux2_arg(self) -> int:
        return self.formula_arg + 2


def reduce_unsat(f: CnfFormula) -> ReductionArtifact:
    """Transform a CNF into a well-formed claim-augmented framework.

    One argument per literal polarity of every variable (claims ``x<i>`` and
    ``nx<i>``; variables absent from all clauses still contribute a pair),
    one per clause (claims ``c<j>``), a formula argument (claim ``phi``) and
    two auxiliaries a1, a2 sharing claim ``a``. Attacks: each literal
    argument attacks the clause arguments it occurs in and its complementary
    literal argument; every clause argument attacks phi; phi attacks a2. The
    framework is non-concurrent exactly when the formula is satisfiable.

    Formulas containing a tautological clause are rejected.
    """
    tautological = find_tautological_clause(f)
    if tautological is not None:
        raise TautologyError(tautological)
    v, m = f.n_vars, len(f.clauses)
    names: list[str] = []
    labels: list[str] = []
    roles: list[tuple[str, int]] = []
    for i in range(1, v + 1):
        names += [f"x{i}", f"nx{i}"]
        labels += [f"x{i}", f"nx{i}"]
        roles += [("pos", i), ("neg", i)]
    for j in range(1, m + 1):
        names.append(f"c{j}")
        labels.append(f"c{j}")
        roles.append(("clause", j))
    names += ["phi", "a1", "a2"]
    labels += ["phi", "a", "a"]
    roles += [("formula", 0), ("aux", 1), ("aux", 2)]

    def pos(i: int) -> int:
        return 2 * (i - 1)

    def neg(i: int) -> int:
        return 2 * i - 1

    def cl(j: int) -> int:
        return 2 * v + j - 1

    phi = 2 * v + m
    attacks: list[tuple[int, int]] = []
    for j, clause in enumerate(f.clauses, 1):
        for lit in sorted(clause, key=abs):
            attacks.append((pos(lit) if lit > 0 else neg(-lit), cl(j)))
    for i in range(1, v + 1):
        attacks += [(pos(i), neg(i)), (neg(i), pos(i))]
    for j in range(1, m + 1):
        attacks.append((cl(j), phi))
    attacks.append((phi, phi + 2))
    caf = make_caf(names, attacks, labels)
    return ReductionArtifact(caf, tuple(roles), v, m)


@dataclass(frozen=True)
class ReductionCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ReductionReport:
    """Per-check outcomes of verify_reduction; ``ok`` iff all passed."""

    checks: tuple[ReductionCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_reduction(
    art: ReductionArtifact,
    f: CnfFormula,
    *,
    oracle_max_vars: int = DEFAULT_ORACLE_MAX_VARS,
    max_args: int = DEFAULT_MAX_ARGS,
) -> ReductionReport:
    """Check one generated framework against the construction's contract.

    Five checks: the framework is well-formed; oracle satisfiability matches
    non-concurrence; a model induces the two expected naive extensions (its
    literal arguments plus {phi, a1}, and plus {a1, a2}); a1 occurs in every
    naive extension; every naive extension containing phi picks exactly one
    polarity per variable.
    """
    checks: list[ReductionCheck] = []
    caf = art.caf

    violation = well_formedness_violation(caf)
    checks.append(
        ReductionCheck(
            "well-formed",
            violation is None,
            ""
            if violation is None
            else "arguments {} and {} share a claim but attack different sets".format(
                caf.arg_names[violation[0]], caf.arg_names[violation[1]]
            ),
        )
    )

    model = sat_oracle(f, oracle_max_vars)
    verdict = is_concurrent_brute(caf, max_args)
    checks.append(
        ReductionCheck(
            "sat-matches-nonconcurrence",
            (model is not None) == (not verdict.concurrent),
            f"satisfiable={model is not None}, concurrent={verdict.concurrent}",
        )
    )

    if model is None:
        checks.append(
            ReductionCheck(
                "model-extensions-naive", True, "formula unsatisfiable; nothing to check"
            )
        )
    else:
        literal_args = {
            art.pos_arg(i) if model[i] else art.neg_arg(i)
            for i in range(1, art.n_vars + 1)
        }
        with_phi = literal_args | {art.formula_arg, art.aux1_arg}
        without_phi = literal_args | {art.aux1_arg, art.aux2_arg}
        ok = is_naive(caf, with_phi) and is_naive(caf, without_phi)
        checks.append(
            ReductionCheck(
                "model-extensions-naive",
                ok,
                "" if ok else "a model-induced candidate is not a naive extension",
            )
        )

    extensions = naive_extensions(caf.af, max_args)
    missing = [e for e in extensions if art.aux1_arg not in e]
    checks.append(
        ReductionCheck(
            "aux1-in-every-extension",
            not missing,
            "" if not missing else f"{len(missing)} extensions omit a1",
        )
    )

    bad = 0
    for e in extensions:
        if art.formula_arg not in e:
            continue
        for i in range(1, art.n_vars + 1):
            if (art.pos_arg(i) in e) == (art.neg_arg(i) in e):
                bad += 1
                break
    checks.append(
        ReductionCheck(
            "phi-extensions-pick-one-polarity",
            bad == 0,
            "" if bad == 0 else f"{bad} phi-extensions break the one-polarity rule",
        )
    )
    return ReductionReport(tuple(checks))
