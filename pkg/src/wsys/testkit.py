"""Seeded random-instance generators and independent brute-force oracles.

The oracles recompute every notion straight from its defining conditions
with their own naive evaluators (powerset enumeration, literal pairwise
domination, minimal-set answer-set checking), deliberately bypassing the
library's main code paths so they can serve as differential references.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .encodings import OProgram, PwProblem, WeakConstraint
from .model import (
    AMS,
    Clause,
    Interpretation,
    Program,
    Rule,
    Theory,
    Vocabulary,
    WCondition,
    WcBody,
    WSystem,
    and_,
    atom,
    iff,
    implies,
    not_,
    or_,
)
from .solve import Sense

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class GenConfig:
    max_atoms: int = 8
    max_rules: int = 6
    max_clauses: int = 6
    max_conditions: int = 6
    weight_range: tuple = (-5, 5)
    level_range: tuple = (1, 4)
    seed: int = 0


def _rand_clause(rng, names):
    k = rng.randint(1, min(3, len(names)))
    chosen = rng.sample(names, k)
    pos = frozenset(n for n in chosen if rng.random() < 0.5)
    neg = frozenset(n for n in chosen if n not in pos)
    return Clause(negative=neg, positive=pos)


def _rand_body(rng, names, max_size=3):
    k = rng.randint(1, min(max_size, len(names)))
    chosen = rng.sample(names, k)
    pos = frozenset(n for n in chosen if rng.random() < 0.5)
    neg = frozenset(n for n in chosen if n not in pos)
    if not (pos | neg):
        pos = frozenset(chosen[:1])
    return WcBody(pos, neg)


def _rand_rules(rng, names, max_rules):
    rules = []
    for _ in range(rng.randint(0, max_rules)):
        head = None if rng.random() < 0.15 else rng.choice(names)
        pool = [n for n in names if n != head]
        pos = frozenset(rng.sample(pool, rng.randint(0, min(2, len(pool)))))
        rest = [n for n in pool if n not in pos]
        neg = frozenset(rng.sample(rest, rng.randint(0, min(2, len(rest)))))
        rules.append(Rule(head, pos, neg))
    return rules


def _rand_formula(rng, names, depth=2):
    if depth == 0 or rng.random() < 0.4:
        return atom(rng.choice(names))
    op = rng.choice(["not", "and", "or", "implies", "iff"])
    if op == "not":
        return not_(_rand_formula(rng, names, depth - 1))
    a = _rand_formula(rng, names, depth - 1)
    b = _rand_formula(rng, names, depth - 1)
    if op == "and":
        return and_(a, b)
    if op == "or":
        return or_(a, b)
    if op == "implies":
        return implies(a, b)
    return iff(a, b)


def _restrict_vocab(sigma, mentioned):
    return Vocabulary([n for n in sigma.names if n in mentioned])


def gen_wsystem(cfg: GenConfig) -> WSystem:
    """A deterministic pseudo-random w-system with mixed-logic modules and
    conditions. A full-vocabulary sigma module keeps the soft vocabulary
    covered without constraining anything."""
    rng = random.Random(f"wsystem:{cfg.seed}")
    n = rng.randint(0, cfg.max_atoms)
    names = list(_LETTERS[:n])
    sigma = Vocabulary(names)
    if n == 0:
        return WSystem(AMS([Theory.sigma(sigma)]), ())

    # The leading full-vocabulary sigma module pins the system vocabulary
    # order and keeps the soft part covered without constraining anything.
    modules = [Theory.sigma(sigma)]
    roll = rng.random()
    if roll < 0.45:
        clauses = frozenset(
            _rand_clause(rng, names) for _ in range(rng.randint(0, cfg.max_clauses))
        )
        mentioned = frozenset().union(*(c.atom_names() for c in clauses)) if clauses else frozenset()
        modules.append(Theory.sat(clauses, _restrict_vocab(sigma, mentioned)))
    elif roll < 0.7:
        rules = _rand_rules(rng, names, cfg.max_rules)
        mentioned = frozenset().union(*(r.atom_names() for r in rules)) if rules else frozenset()
        prog = Program(rules, _restrict_vocab(sigma, mentioned))
        modules.append(Theory.lp(prog))
    elif roll < 0.8:
        f = _rand_formula(rng, names)
        modules.append(Theory.pl(f, _restrict_vocab(sigma, f.atom_names())))
    # else: only the sigma module; every interpretation is a model.

    lo, hi = cfg.weight_range
    llo, lhi = cfg.level_range
    soft = []
    for i in range(rng.randint(0, cfg.max_conditions)):
        kind = rng.random()
        if kind < 0.5:
            c = _rand_clause(rng, names)
            theory = Theory.sat(frozenset([c]), _restrict_vocab(sigma, c.atom_names()))
        elif kind < 0.75:
            body = _rand_body(rng, names)
            theory = Theory.wc(body, _restrict_vocab(sigma, body.atom_names()))
        elif kind < 0.9:
            f = _rand_formula(rng, names)
            theory = Theory.pl(f, _restrict_vocab(sigma, f.atom_names()))
        else:
            rules = _rand_rules(rng, names, 3)
            mentioned = frozenset().union(*(r.atom_names() for r in rules)) if rules else frozenset()
            theory = Theory.lp(Program(rules, _restrict_vocab(sigma, mentioned)))
        soft.append(
            WCondition(f"c{i}", theory, rng.randint(lo, hi), rng.randint(llo, lhi))
        )
    return WSystem(AMS(modules), tuple(soft))


def gen_oprogram(cfg: GenConfig) -> OProgram:
    rng = random.Random(f"oprogram:{cfg.seed}")
    n = rng.randint(1, max(1, cfg.max_atoms))
    names = list(_LETTERS[:n])
    vocab = Vocabulary(names)
    rules = _rand_rules(rng, names, cfg.max_rules)
    lo, hi = cfg.weight_range
    llo, lhi = cfg.level_range
    constraints = [
        WeakConstraint(_rand_body(rng, names), rng.randint(lo, hi), rng.randint(llo, lhi))
        for _ in range(rng.randint(0, cfg.max_conditions))
    ]
    return OProgram(Program(rules, vocab), constraints)


def gen_pw(cfg: GenConfig) -> PwProblem:
    rng = random.Random(f"pw:{cfg.seed}")
    n = rng.randint(0, cfg.max_atoms)
    names = list(_LETTERS[:n])
    sigma = Vocabulary(names)
    if n == 0:
        return PwProblem(sigma, (), (), sense=Sense.MAX)
    hard = tuple(
        _rand_clause(rng, names) for _ in range(rng.randint(0, cfg.max_clauses // 2))
    )
    soft = tuple(
        (_rand_clause(rng, names), rng.randint(1, 5))
        for _ in range(rng.randint(0, cfg.max_clauses))
    )
    sense = rng.choice([Sense.MAX, Sense.MIN])
    return PwProblem(sigma, hard, soft, sense=sense)


# ==========================================================================
# Independent brute-force oracles


def _subsets(names):
    names = list(names)
    for k in range(len(names) + 1):
        for combo in combinations(names, k):
            yield frozenset(combo)


def _oracle_formula(members, f) -> bool:
    op = f.op
    if op == "true":
        return True
    if op == "false":
        return False
    if op == "atom":
        return f.name in members
    if op == "not":
        return not _oracle_formula(members, f.children[0])
    if op == "and":
        return all(_oracle_formula(members, c) for c in f.children)
    if op == "or":
        return any(_oracle_formula(members, c) for c in f.children)
    if op == "implies":
        return (not _oracle_formula(members, f.children[0])) or _oracle_formula(
            members, f.children[1]
        )
    if op == "iff":
        return _oracle_formula(members, f.children[0]) == _oracle_formula(
            members, f.children[1]
        )
    raise AssertionError(op)


def _oracle_rule_satisfied(members, rule) -> bool:
    # body -> head, with a None head standing for falsity.
    body = rule.positive_body <= members and not (rule.negative_body & members)
    if not body:
        return True
    return rule.head is not None and rule.head in members


def _oracle_is_answer_set(program, members) -> bool:
    # Literal reading: x is the minimal set satisfying all rules of the reduct.
    surviving = [
        Rule(r.head, r.positive_body, frozenset())
        for r in program.rules
        if not (r.negative_body & members)
    ]
    x = members & frozenset(program.vocabulary.names)
    if not all(_oracle_rule_satisfied(x, r) for r in surviving):
        return False
    for k in range(len(x)):
        for sub in combinations(sorted(x), k):
            y = frozenset(sub)
            if all(_oracle_rule_satisfied(y, r) for r in surviving):
                return False
    return True


def _oracle_holds(members, theory) -> bool:
    members = members & frozenset(theory.vocabulary.names)
    logic = theory.logic
    if logic == "sat":
        return all(
            any(p in members for p in c.positive) or any(n not in members for n in c.negative)
            for c in theory.payload
        )
    if logic == "pl":
        return all(_oracle_formula(members, f) for f in theory.payload)
    if logic == "lp":
        return _oracle_is_answer_set(theory.payload, members)
    if logic == "wc":
        body = theory.payload
        return body.positive <= members and not (body.negative & members)
    if logic == "sigma":
        return True
    if logic == "complement":
        return not _oracle_holds(members, theory.payload)
    raise AssertionError(logic)


def oracle_optimal(w: WSystem, s: Sense):
    """Non-dominated models computed straight from the pairwise domination
    conditions; returns a set of Interpretation."""
    sigma = w.vocabulary
    models = [
        x for x in _subsets(sigma.names) if all(_oracle_holds(x, t) for t in w.hard.modules)
    ]
    lvls = sorted({b.level for b in w.soft})
    sums = []
    for x in models:
        per = {l: 0 for l in lvls}
        for b in w.soft:
            if _oracle_holds(x, b.theory):
                per[b.level] += b.weight
        sums.append(per)

    def dominates(j, i):
        # some level where j is strictly better while all greater levels tie
        for l in lvls:
            if all(sums[j][l2] == sums[i][l2] for l2 in lvls if l2 > l):
                if s is Sense.MIN and sums[j][l] < sums[i][l]:
                    return True
                if s is Sense.MAX and sums[j][l] > sums[i][l]:
                    return True
        return False

    optimal = set()
    for i, x in enumerate(models):
        if not any(dominates(j, i) for j in range(len(models)) if j != i):
            optimal.add(Interpretation(sigma, x))
    return optimal


def oracle_optimal_answer_sets(p: OProgram):
    """Optimal answer sets computed from the weak-constraint domination
    conditions; returns a set of Interpretation."""
    sigma = p.vocabulary
    answer_sets = [
        x for x in _subsets(sigma.names) if _oracle_is_answer_set(p.program, x)
    ]
    lvls = sorted({wc.level for wc in p.constraints})

    def body_holds(x, body):
        return body.positive <= x and not (body.negative & x)

    sums = []
    for x in answer_sets:
        per = {l: 0 for l in lvls}
        for wc in p.constraints:
            if body_holds(x, wc.body):
                per[wc.level] += wc.weight
        sums.append(per)

    def dominates(j, i):
        for l in lvls:
            if all(sums[j][l2] == sums[i][l2] for l2 in lvls if l2 > l):
                if sums[j][l] < sums[i][l]:
                    return True
        return False

    optimal = set()
    for i, x in enumerate(answer_sets):
        if not any(dominates(j, i) for j in range(len(answer_sets)) if j != i):
            optimal.add(Interpretation(sigma, x))
    return optimal


# ==========================================================================
# Metatheorem checks (the CLI `check` engine)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def run_checks(w: WSystem, oprog: OProgram | None = None, max_vars: int = 24):
    """Run the instance-level metatheorem suite: both optimality definitions
    agree (and match the oracle), models ignore the soft part, and every
    applicable transform preserves the optimal sets."""
    from . import solve, transforms
    from .translate import is_tight, oprogram_to_pw
    from .encodings import from_pw_sat
    from .model import project as _project

    results = []

    def record(name, passed, detail=""):
        results.append(CheckResult(name, bool(passed), detail))

    models = solve.enumerate_models(w, max_vars=max_vars)
    oracle = {s: oracle_optimal(w, s) for s in (Sense.MAX, Sense.MIN)}
    for s in (Sense.MAX, Sense.MIN):
        dom = solve.optimal_models_domination(w, s, max_vars=max_vars)
        rec = solve.optimal_models_recursive(w, s, max_vars=max_vars)
        record(f"definition-equivalence-{s.value}", dom == rec)
        record(f"oracle-agreement-{s.value}", set(dom) == oracle[s])

    record(
        "models-ignore-soft",
        models == solve.enumerate_models(WSystem(w.hard, ()), max_vars=max_vars),
    )
    if not w.soft:
        for s in (Sense.MAX, Sense.MIN):
            record(
                f"empty-soft-all-optimal-{s.value}",
                set(solve.optimal_models_domination(w, s, max_vars=max_vars))
                == set(models),
            )

    def preserves(name, w2):
        ok = all(oracle_optimal(w2, s) == oracle[s] for s in (Sense.MAX, Sense.MIN))
        record(name, ok)

    preserves("drop-zero-weights-preserves", transforms.drop_zero_weights(w))
    preserves("scale-weights-3-preserves", transforms.scale_weights(w, 3))
    preserves("normalize-levels-preserves", transforms.normalize_levels(w))
    preserves("eliminate-sign-max-preserves", transforms.eliminate_sign(w, Sense.MAX))
    preserves("eliminate-sign-min-preserves", transforms.eliminate_sign(w, Sense.MIN))
    neg = transforms.negate_all_weights(w)
    record(
        "negate-weights-swaps-optima",
        oracle_optimal(neg, Sense.MAX) == oracle[Sense.MIN]
        and oracle_optimal(neg, Sense.MIN) == oracle[Sense.MAX],
    )
    if w.soft:
        flat_input = transforms.normalize_levels(
            transforms.drop_zero_weights(transforms.eliminate_sign(w, Sense.MAX))
        )
        preserves("flatten-pipeline-preserves", transforms.flatten_levels(flat_input))

    if oprog is not None:
        expected = oracle_optimal_answer_sets(oprog)
        system = None
        try:
            from .encodings import from_oprogram

            system = from_oprogram(oprog)
        except ValueError:
            pass
        if system is not None:
            got = set(solve.optimal_models_domination(system, Sense.MIN, max_vars=max_vars))
            record("oprogram-min-optimal-equals-optimal-answer-sets", got == expected)
        if is_tight(oprog.program):
            for target in (Sense.MAX, Sense.MIN):
                prob, _ = oprogram_to_pw(oprog, target)
                pw_system = from_pw_sat(prob)
                opt = solve.optimal_models_domination(pw_system, target, max_vars=max_vars)
                projected = {_project(m, oprog.vocabulary) for m in opt}
                record(f"translation-{target.value}-matches-optimal-answer-sets",
                       projected == expected)
        else:
            record("translation-skipped-not-tight", True, "program has a positive cycle")
    return results
