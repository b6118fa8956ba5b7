"""Shared fixtures: the small golden instances every module exercises
(two-clause exclusive-or hard part, its weighted variants, and the
two-rule even-loop program)."""

import pytest

from wsys import (
    AMS,
    Clause,
    Interpretation,
    OProgram,
    Program,
    Rule,
    Theory,
    Vocabulary,
    WCondition,
    WcBody,
    WeakConstraint,
    WSystem,
)

VAB = Vocabulary(["a", "b"])

CLAUSE_A = Clause(positive={"a"})
CLAUSE_B = Clause(positive={"b"})
CLAUSE_A_NOT_B = Clause(positive={"a"}, negative={"b"})  # a | -b
CLAUSE_NOT_A_B = Clause(positive={"b"}, negative={"a"})  # -a | b

XOR_CLAUSES = frozenset({Clause(positive={"a", "b"}), Clause(negative={"a", "b"})})


def interp(members, vocab=VAB):
    return Interpretation(vocab, members)


def sat_cond(label, clause, weight, level=1, vocab=VAB):
    return WCondition(label, Theory.sat(frozenset([clause]), vocab), weight, level)


@pytest.fixture
def vab():
    return VAB


@pytest.fixture
def xor_theory():
    return Theory.sat(XOR_CLAUSES, VAB)


@pytest.fixture
def xor_hard(xor_theory):
    return AMS([xor_theory])


@pytest.fixture
def pw_maxsat_sample(xor_hard):
    # Four-condition pw-MaxSAT sample over the exclusive-or hard part:
    # units on a and b, weight-2 clause a|-b, and a zero-weight clause.
    return WSystem(
        xor_hard,
        [
            sat_cond("c0", CLAUSE_A, 1),
            sat_cond("c1", CLAUSE_B, 1),
            sat_cond("c2", CLAUSE_A_NOT_B, 2),
            sat_cond("c3", CLAUSE_NOT_A_B, 0),
        ],
    )


@pytest.fixture
def pw_minsat_sample(xor_hard):
    # Single weight-2 soft clause -a|b over the exclusive-or hard part.
    return WSystem(xor_hard, [sat_cond("c0", CLAUSE_NOT_A_B, 2)])


@pytest.fixture
def leveled_sample(xor_hard):
    # The multi-level variant: the unit clause on b is boosted to level 3.
    return WSystem(
        xor_hard,
        [
            sat_cond("c0", CLAUSE_A, 1),
            sat_cond("c1", CLAUSE_B, 1, level=3),
            sat_cond("c2", CLAUSE_A_NOT_B, 2),
            sat_cond("c3", CLAUSE_NOT_A_B, 0),
        ],
    )


@pytest.fixture
def flatten_sample(xor_hard):
    # Two-level flattening instance: units and a weight-2 clause at level 1,
    # one unit condition at level 2.
    return WSystem(
        xor_hard,
        [
            sat_cond("c0", CLAUSE_A, 1),
            sat_cond("c1", CLAUSE_A_NOT_B, 2),
            sat_cond("c2", CLAUSE_B, 1, level=2),
        ],
    )


@pytest.fixture
def even_loop_program():
    # a :- not b.  b :- not a.
    return Program([Rule("a", negative_body={"b"}), Rule("b", negative_body={"a"})], VAB)


@pytest.fixture
def weak_sample_oprogram(even_loop_program):
    # (even loop, {:~ a, not b. [-2@1]})
    return OProgram(
        even_loop_program,
        [WeakConstraint(WcBody(positive={"a"}, negative={"b"}), -2, 1)],
    )
