"""Shared fixtures data, independent oracles, and hypothesis strategies.

The oracles here deliberately avoid the library's data structures and
algorithms (plain sets, no bitmasks, no pivoting) so that agreement with the
package is meaningful evidence.
"""

from itertools import product

from hypothesis import strategies as st

import concaf as C

TINY_DOC = (
    "arg a1\n"
    "arg a2\n"
    "arg phi\n"
    "claim a1 a\n"
    "claim a2 a\n"
    "claim phi phi\n"
    "att phi a2\n"
)

# 4 variables, 3 clauses: {1,3,4}, {-3,-4,-2}, {-1,-3,2}
DEMO_DIMACS = "p cnf 4 3\n1 3 4 0\n-3 -4 -2 0\n-1 -3 2 0\n"


def tiny_caf() -> C.Caf:
    """Two arguments sharing claim ``a``, one of them attacked by ``phi``."""
    return C.parse_caf(TINY_DOC)


def injective_caf() -> C.Caf:
    """A small framework whose claims are pairwise distinct."""
    return C.make_caf(
        ["p", "q", "r", "s"], [(0, 1), (1, 2), (2, 0), (0, 3)], ["cp", "cq", "cr", "cs"]
    )


# ---------------------------------------------------------------- oracles


def oracle_models(n_vars, clauses):
    """All satisfying assignments of a clause list, by direct evaluation."""
    models = []
    for bits in product((False, True), repeat=n_vars):
        assignment = {v: bits[v - 1] for v in range(1, n_vars + 1)}
        if all(
            any(assignment[abs(lit)] == (lit > 0) for lit in clause)
            for clause in clauses
        ):
            models.append(assignment)
    return models


def oracle_conflict_free_sets(n_args, attacks):
    """Every conflict-free subset, by scanning all subsets."""
    attacks = set(attacks)
    out = []
    for bits in product((False, True), repeat=n_args):
        subset = {a for a in range(n_args) if bits[a]}
        if all((a, b) not in attacks for a in subset for b in subset):
            out.append(frozenset(subset))
    return out


def oracle_naive_sets(n_args, attacks):
    """Maximal conflict-free subsets, filtered from the full subset scan."""
    cf = oracle_conflict_free_sets(n_args, attacks)
    return {s for s in cf if not any(s < t for t in cf)}


def oracle_claim_level(caf: C.Caf):
    """Maximal claim sets of conflict-free sets, from the full subset scan."""
    families = {
        caf.claim_set(s)
        for s in oracle_conflict_free_sets(caf.n_args, caf.af.attacks)
    }
    return {s for s in families if not any(s < t for t in families)}


# ------------------------------------------------------------- strategies


@st.composite
def afs(draw, max_args=8):
    n = draw(st.integers(min_value=0, max_value=max_args))
    if n == 0:
        return C.make_af(0)
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    return C.make_af(n, draw(st.lists(pairs, max_size=3 * n)))


@st.composite
def cafs(draw, max_args=8, max_claims=5):
    n = draw(st.integers(min_value=0, max_value=max_args))
    attacks = []
    if n:
        pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
        attacks = draw(st.lists(pairs, max_size=3 * n))
    labels = [f"k{draw(st.integers(0, max_claims - 1))}" for _ in range(n)]
    return C.make_caf([f"a{i}" for i in range(n)], attacks, labels)


@st.composite
def cnfs(draw, max_vars=4, max_clauses=5):
    n_vars = draw(st.integers(min_value=1, max_value=max_vars))
    lit = st.integers(1, n_vars).flatmap(
        lambda v: st.sampled_from([v, -v])
    )
    clauses = draw(st.lists(st.lists(lit, min_size=1, max_size=3), max_size=max_clauses))
    return C.make_cnf(n_vars, clauses)
