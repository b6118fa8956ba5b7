#!/usr/bin/env python3
"""Tour of the core objects: one hard module, weighted soft conditions,
models, and optimal models under both senses.

The running instance is the classic two-model exclusive-or formula
(a | b) & (-a | -b), first as a plain pw-MaxSAT problem, then with a
condition boosted to a higher level.
"""

from wsys import (
    AMS,
    Clause,
    Sense,
    Theory,
    Vocabulary,
    WCondition,
    WSystem,
    enumerate_models,
    level_sums,
    levels,
    optimal_models_domination,
    optimal_models_recursive,
)

vocab = Vocabulary(["a", "b"])
xor_clauses = frozenset({Clause(positive={"a", "b"}), Clause(negative={"a", "b"})})
hard = AMS([Theory.sat(xor_clauses, vocab)])


def clause_cond(label, positive, negative, weight, level=1):
    clause = Clause(positive=positive, negative=negative)
    return WCondition(label, Theory.sat(frozenset([clause]), vocab), weight, level)


flat = WSystem(
    hard,
    [
        clause_cond("unit-a", {"a"}, set(), 1),
        clause_cond("unit-b", {"b"}, set(), 1),
        clause_cond("a-or-not-b", {"a"}, {"b"}, 2),
        clause_cond("free", {"b"}, {"a"}, 0),
    ],
)

print("== single-level system ==")
models = enumerate_models(flat)
print("models:", models)
for m in models:
    print(f"  {m}: level sums {level_sums(flat, m)}")
print("optimal (max):", optimal_models_domination(flat, Sense.MAX))
print("optimal (min):", optimal_models_domination(flat, Sense.MIN))

# Boost the unit-b condition to level 3: levels dominate lexicographically,
# so {b} now wins under max regardless of the level-1 totals.
boosted = WSystem(
    hard,
    [b if b.label != "unit-b" else WCondition(b.label, b.theory, b.weight, 3) for b in flat.soft],
)
print("\n== two-level system ==")
print("levels:", levels(boosted))
for m in enumerate_models(boosted):
    print(f"  {m}: level sums {level_sums(boosted, m)}")
print("optimal (max):", optimal_models_domination(boosted, Sense.MAX))

# The pairwise-domination and per-level-recursion definitions always agree.
for s in (Sense.MAX, Sense.MIN):
    assert optimal_models_domination(boosted, s) == optimal_models_recursive(boosted, s)
print("\nboth optimality definitions agree on this instance")
