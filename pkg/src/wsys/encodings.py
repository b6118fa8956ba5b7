"""Constructors building w-systems from each surface formalism: the MaxSAT
family, optimization programs, and the MIN-ONE / DISTANCE-SAT family.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import VocabularyMismatchError
from .model import (
    AMS,
    Clause,
    Interpretation,
    Program,
    Theory,
    Vocabulary,
    WCondition,
    WcBody,
    WSystem,
)
from .solve import Sense


@dataclass(frozen=True)
class WeakConstraint:
    """:~ body. [weight@level]"""

    body: WcBody
    weight: int
    level: int = 1

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("weak-constraint level must be positive")


@dataclass(frozen=True)
class OProgram:
    """A logic program paired with weak constraints."""

    program: Program
    constraints: tuple

    def __init__(self, program: Program, constraints=()):
        constraints = tuple(constraints)
        for wc in constraints:
            for name in wc.body.atom_names():
                if name not in program.vocabulary:
                    raise ValueError(
                        f"weak-constraint atom {name!r} not in program vocabulary"
                    )
        object.__setattr__(self, "program", program)
        object.__setattr__(self, "constraints", constraints)

    @property
    def vocabulary(self) -> Vocabulary:
        return self.program.vocabulary


@dataclass(frozen=True)
class PwProblem:
    """Hard clauses plus positively weighted soft clauses with a sense."""

    vocabulary: Vocabulary
    hard: tuple
    soft: tuple  # (Clause, weight) pairs, weights > 0
    sense: Sense = Sense.MAX

    def __init__(self, vocabulary, hard=(), soft=(), sense=Sense.MAX):
        hard = tuple(hard)
        soft = tuple(soft)
        for c in hard:
            _check_clause(c, vocabulary)
        for c, wt in soft:
            _check_clause(c, vocabulary)
            if not isinstance(wt, int) or wt <= 0:
                raise ValueError(f"soft clause weight must be a positive integer, got {wt!r}")
        object.__setattr__(self, "vocabulary", vocabulary)
        object.__setattr__(self, "hard", hard)
        object.__setattr__(self, "soft", soft)
        object.__setattr__(self, "sense", sense)


def _check_clause(c: Clause, sigma: Vocabulary):
    for name in c.atom_names():
        if name not in sigma:
            raise VocabularyMismatchError(f"clause atom {name!r} not in vocabulary")


def _sat_conditions(pairs, sigma, levels=None):
    conds = []
    for i, (c, wt) in enumerate(pairs):
        lvl = 1 if levels is None else levels[i]
        conds.append(WCondition(f"s{i}", Theory.sat({c}, sigma), wt, lvl))
    return conds


def from_maxsat(f, sigma: Vocabulary) -> WSystem:
    """MaxSAT instance as a w-system: trivial hard module, unit-weight soft
    clauses. Its max-optimal models are exactly the MaxSAT solutions."""
    clauses = sorted(f, key=lambda c: (sorted(c.negative), sorted(c.positive)))
    for c in clauses:
        _check_clause(c, sigma)
    return WSystem(AMS([Theory.sigma(sigma)]), _sat_conditions([(c, 1) for c in clauses], sigma))


def from_weighted_sat(p, sigma: Vocabulary, s: Sense) -> WSystem:
    """Weighted MaxSAT/MinSAT instance as a w-system. Solutions are the
    optimal models for s=MAX and the min-optimal models for s=MIN."""
    pairs = list(p)
    for c, wt in pairs:
        if wt <= 0:
            raise ValueError("weighted MaxSAT/MinSAT weights must be positive")
        _check_clause(c, sigma)
    return WSystem(AMS([Theory.sigma(sigma)]), _sat_conditions(pairs, sigma))


def from_pw_sat(prob: PwProblem) -> WSystem:
    """Partial weighted MaxSAT/MinSAT as a w-system: the hard clauses become
    one sat module, the soft pairs become sat w-conditions."""
    hard = Theory.sat(frozenset(prob.hard), prob.vocabulary)
    return WSystem(AMS([hard]), _sat_conditions(prob.soft, prob.vocabulary))


def from_oprogram(p: OProgram) -> WSystem:
    """Optimization program as a w-system: lp hard module plus wc-logic
    conditions. Models are the answer sets; min-optimal models are the
    optimal answer sets."""
    sigma = p.vocabulary
    conds = [
        WCondition(f"w{i}", Theory.wc(wc.body, sigma), wc.weight, wc.level)
        for i, wc in enumerate(p.constraints)
    ]
    return WSystem(AMS([Theory.lp(p.program)]), conds)


def desugar_minimize(lits, direction: str):
    """Expand a #minimize/#maximize statement into one weak constraint per
    entry; maximize negates the weights.

    Each entry is (weight, level, atom_name, is_positive).
    """
    if direction not in ("minimize", "maximize"):
        raise ValueError(f"direction must be 'minimize' or 'maximize', got {direction!r}")
    out = []
    for weight, level, name, is_positive in lits:
        if direction == "maximize":
            weight = -weight
        body = WcBody(positive={name}) if is_positive else WcBody(negative={name})
        out.append(WeakConstraint(body, weight, level))
    return out


def _unit_conditions(entries, sigma):
    # entries: (label, atom, is_positive, level)
    conds = []
    for label, name, is_positive, level in entries:
        clause = Clause(positive={name}) if is_positive else Clause(negative={name})
        conds.append(WCondition(label, Theory.sat({clause}, sigma), 1, level))
    return conds


def min_one(f, xi, sigma: Vocabulary) -> WSystem:
    """MIN-ONE: models of f whose intersection with xi has minimum size are
    the optimal (max) models of (f, {(not a, 1) | a in xi})."""
    xi = set(xi)
    for name in xi:
        if name not in sigma:
            raise ValueError(f"distinguished atom {name!r} not in vocabulary")
    hard = Theory.sat(frozenset(f), sigma)
    entries = [(f"m{i}", a, False, 1) for i, a in enumerate(sorted(xi, key=sigma.index))]
    return WSystem(AMS([hard]), _unit_conditions(entries, sigma))


def min_one_asp(p: Program, xi) -> WSystem:
    """MIN-ONE over answer sets: lp hard module, same unit soft clauses."""
    sigma = p.vocabulary
    xi = set(xi)
    for name in xi:
        if name not in sigma:
            raise ValueError(f"distinguished atom {name!r} not in vocabulary")
    entries = [(f"m{i}", a, False, 1) for i, a in enumerate(sorted(xi, key=sigma.index))]
    return WSystem(AMS([Theory.lp(p)]), _unit_conditions(entries, sigma))


def min_one_subset(f, xi, perm, sigma: Vocabulary) -> WSystem:
    """MIN-ONE-subset encoding: (not a_i, 1@i) along the permutation. Every
    optimal model is a subset-minimal solution; which minimal solutions show
    up depends on the permutation (one-sided, by design)."""
    perm = list(perm)
    if sorted(perm) != sorted(set(xi)):
        raise ValueError("perm must be a permutation of xi")
    hard = Theory.sat(frozenset(f), sigma)
    entries = [(f"m{i}", a, False, i + 1) for i, a in enumerate(perm)]
    return WSystem(AMS([hard]), _unit_conditions(entries, sigma))


def distance_sat(f, ref: Interpretation, sigma: Vocabulary) -> WSystem:
    """DISTANCE-SAT: optimal (max) models minimize the symmetric difference
    to the reference interpretation."""
    if not ref.vocabulary.issubset(sigma):
        raise ValueError("reference interpretation must be over the problem vocabulary")
    hard = Theory.sat(frozenset(f), sigma)
    entries = [
        (f"d{i}", a, a in ref.members, 1) for i, a in enumerate(sigma.names)
    ]
    return WSystem(AMS([hard]), _unit_conditions(entries, sigma))


def distance_sat_subset(f, ref: Interpretation, perm, sigma: Vocabulary) -> WSystem:
    """DISTANCE-SAT-subset encoding with per-atom levels along the
    permutation; optimal models are subset-minimal-difference solutions
    (one-sided)."""
    perm = list(perm)
    if sorted(perm) != sorted(sigma.names):
        raise ValueError("perm must be a permutation of the vocabulary")
    hard = Theory.sat(frozenset(f), sigma)
    entries = [
        (f"d{i}", a, a in ref.members, i + 1) for i, a in enumerate(perm)
    ]
    return WSystem(AMS([hard]), _unit_conditions(entries, sigma))
