#!/usr/bin/env python3
"""Cardinality- and subset-style preferences as weighted systems: MIN-ONE,
its answer-set variant, DISTANCE-SAT, and the leveled subset encodings where
the chosen permutation decides which minimal solution wins.
"""

from itertools import permutations

from wsys import (
    Clause,
    Interpretation,
    Program,
    Rule,
    Sense,
    Vocabulary,
    distance_sat,
    distance_sat_subset,
    min_one,
    min_one_asp,
    min_one_subset,
    optimal_models_domination,
)

sigma = Vocabulary(["a", "b", "c"])
formula = {Clause(positive={"a", "b", "c"})}  # at least one atom true

print("== MIN-ONE: fewest true atoms among models of (a | b | c) ==")
w = min_one(formula, {"a", "b", "c"}, sigma)
print("optimal:", optimal_models_domination(w, Sense.MAX))

print("\n== MIN-ONE over answer sets ==")
program = Program(
    [Rule("a", negative_body={"b"}), Rule("b", negative_body={"a"})],
    Vocabulary(["a", "b"]),
)
print("penalizing a:", optimal_models_domination(min_one_asp(program, {"a"}), Sense.MAX))

print("\n== MIN-ONE-subset: the permutation picks the minimal solution ==")
two = Vocabulary(["a", "b"])
either = {Clause(positive={"a", "b"})}
for perm in permutations(["a", "b"]):
    w = min_one_subset(either, {"a", "b"}, list(perm), two)
    print(f"  permutation {perm}: optimal {optimal_models_domination(w, Sense.MAX)}")

print("\n== DISTANCE-SAT: stay close to a reference assignment ==")
exclusion = {Clause(negative={"a", "b"})}  # not both
reference = Interpretation(two, {"a", "b"})
w = distance_sat(exclusion, reference, two)
print("closest models to {a,b}:", optimal_models_domination(w, Sense.MAX))

print("\n== DISTANCE-SAT-subset ==")
for perm in permutations(["a", "b"]):
    w = distance_sat_subset(exclusion, reference, list(perm), two)
    print(f"  permutation {perm}: optimal {optimal_models_domination(w, Sense.MAX)}")
