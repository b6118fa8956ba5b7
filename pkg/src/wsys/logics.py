"""Satisfaction semantics for the concrete logics: sat, pl, lp, wc, sigma
theories and lazy complements, including reducts and answer-set checking.
"""

from __future__ import annotations

from .errors import VocabularyMismatchError
from .model import (
    Clause,
    Interpretation,
    Program,
    PropFormula,
    Rule,
    Theory,
    Vocabulary,
    WCondition,
    and_,
    clause_to_formula,
    not_,
    project,
)


def eval_clause(i: Interpretation, c: Clause) -> bool:
    for name in c.atom_names():
        if name not in i.vocabulary:
            raise VocabularyMismatchError(f"clause atom {name!r} not in vocabulary")
    return any(p in i.members for p in c.positive) or any(
        n not in i.members for n in c.negative
    )


def eval_formula(i: Interpretation, f: PropFormula) -> bool:
    for name in f.atom_names():
        if name not in i.vocabulary:
            raise VocabularyMismatchError(f"formula atom {name!r} not in vocabulary")
    return _eval_formula(i.members, f)


def _eval_formula(members, f: PropFormula) -> bool:
    op = f.op
    if op == "true":
        return True
    if op == "false":
        return False
    if op == "atom":
        return f.name in members
    if op == "not":
        return not _eval_formula(members, f.children[0])
    if op == "and":
        return all(_eval_formula(members, c) for c in f.children)
    if op == "or":
        return any(_eval_formula(members, c) for c in f.children)
    if op == "implies":
        a, b = f.children
        return (not _eval_formula(members, a)) or _eval_formula(members, b)
    if op == "iff":
        a, b = f.children
        return _eval_formula(members, a) == _eval_formula(members, b)
    raise ValueError(f"unknown formula op {op!r}")


def reduct(p: Program, x: Interpretation) -> Program:
    """Delete rules whose negative body is violated by x; strip the rest."""
    kept = []
    for r in p.rules:
        if r.negative_body & x.members:
            continue
        kept.append(Rule(r.head, r.positive_body, frozenset()))
    return Program(kept, p.vocabulary)


def least_model(p: Program) -> Interpretation:
    """Least set of atoms closed under the atom-headed rules of a positive
    program; constraint rules contribute nothing to the fixpoint."""
    for r in p.rules:
        if r.negative_body:
            raise ValueError("least_model requires a program with empty negative bodies")
    derived: set = set()
    pending = [r for r in p.rules if r.head is not None]
    changed = True
    while changed:
        changed = False
        remaining = []
        for r in pending:
            if r.positive_body <= derived:
                if r.head not in derived:
                    derived.add(r.head)
                    changed = True
            else:
                remaining.append(r)
        pending = remaining
    return Interpretation(p.vocabulary, derived)


def is_answer_set(p: Program, x: Interpretation) -> bool:
    """x equals the least model of the atom rules of its own reduct and
    violates no surviving constraint body."""
    rd = reduct(p, x)
    for r in rd.rules:
        if r.is_constraint and r.positive_body <= x.members:
            return False
    atom_rules = Program([r for r in rd.rules if not r.is_constraint], p.vocabulary)
    return least_model(atom_rules).members == x.members


def satisfies(i: Interpretation, t: Theory) -> bool:
    """Model check: project i to the theory's vocabulary and dispatch."""
    if not t.vocabulary.issubset(i.vocabulary):
        missing = [n for n in t.vocabulary if n not in i.vocabulary]
        raise VocabularyMismatchError(
            f"theory mentions atoms outside the interpretation vocabulary: {missing}"
        )
    j = project(i, t.vocabulary)
    logic = t.logic
    if logic == "sat":
        return all(eval_clause(j, c) for c in t.payload)
    if logic == "pl":
        return all(eval_formula(j, f) for f in t.payload)
    if logic == "lp":
        return is_answer_set(t.payload, project(j, t.payload.vocabulary))
    if logic == "wc":
        body = t.payload
        return body.positive <= j.members and not (body.negative & j.members)
    if logic == "sigma":
        return True
    if logic == "complement":
        return not satisfies(j, t.payload)
    raise ValueError(f"unknown logic tag {logic!r}")


def weighted_eval(i: Interpretation, b: WCondition) -> int:
    """The w-condition mapping: weight when i satisfies the theory, else 0."""
    return b.weight if satisfies(i, b.theory) else 0


def sigma_theory(sigma: Vocabulary) -> Theory:
    """The trivial module: satisfied by every interpretation of sigma."""
    return Theory.sigma(sigma)


def complement(t: Theory) -> Theory:
    """A theory whose models are exactly the non-models of t.

    Uses a syntactic rendering where one exists (pl negation, wc/clause
    duality); lp theories fall back to the lazy complement wrapper, since
    lp-logic is not closed under complement.
    """
    if t.logic == "complement":
        return t.payload
    if t.logic == "pl":
        if len(t.payload) == 1:
            return Theory.pl(not_(t.payload[0]), t.vocabulary)
        return Theory.pl(not_(and_(*t.payload)), t.vocabulary)
    if t.logic == "wc":
        return Theory.sat({t.payload.complement_clause()}, t.vocabulary)
    if t.logic == "sat":
        clauses = sorted(
            t.payload, key=lambda c: (sorted(c.negative), sorted(c.positive))
        )
        if len(clauses) == 1:
            c = clauses[0]
            if not c.atom_names():
                # The empty clause is unsatisfiable; its complement is trivial.
                return Theory.sigma(t.vocabulary)
            return Theory.wc(c.complement_body(), t.vocabulary)
        if not clauses:
            return Theory.pl(PropFormula("false"), t.vocabulary)
        return Theory.pl(
            not_(and_(*(clause_to_formula(c) for c in clauses))), t.vocabulary
        )
    if t.logic == "sigma":
        return Theory.pl(PropFormula("false"), t.vocabulary)
    return Theory("complement", t, t.vocabulary)


def all_interpretations(sigma: Vocabulary):
    """Int(sigma) in canonical order (earlier atoms most significant,
    absent before present)."""
    names = sigma.names
    n = len(names)
    for mask in range(1 << n):
        members = {names[j] for j in range(n) if (mask >> (n - 1 - j)) & 1}
        yield Interpretation(sigma, members)


def equivalent(t1: Theory, t2: Theory) -> bool:
    """Exhaustive semantic equality over the shared vocabulary."""
    if set(t1.vocabulary.names) != set(t2.vocabulary.names):
        raise VocabularyMismatchError(
            "equivalence is only defined for theories over the same vocabulary"
        )
    for i in all_interpretations(t1.vocabulary):
        if satisfies(i, t1) != satisfies(i, t2):
            return False
    return True
