"""Core value types: vocabularies, interpretations, theories, w-conditions
and w-systems, plus the syntactic payload types the individual logics use.

Everything here is an immutable value; all semantics (satisfaction, answer
sets, ...) lives in the logics module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional


class Atom(NamedTuple):
    name: str
    index: int


class Vocabulary:
    """An ordered, finite, duplicate-free collection of atom names."""

    __slots__ = ("names", "_index")

    def __init__(self, names=()):
        names = tuple(names)
        index = {}
        for i, name in enumerate(names):
            if name in index:
                raise ValueError(f"duplicate atom {name!r} in vocabulary")
            index[name] = i
        self.names = names
        self._index = index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"atom {name!r} not in vocabulary") from None

    @property
    def atoms(self) -> tuple[Atom, ...]:
        return tuple(Atom(n, i) for i, n in enumerate(self.names))

    def union(self, other: "Vocabulary") -> "Vocabulary":
        extra = [n for n in other.names if n not in self._index]
        return Vocabulary(self.names + tuple(extra))

    def issubset(self, other: "Vocabulary") -> bool:
        return all(n in other._index for n in self.names)

    def __contains__(self, name) -> bool:
        return name in self._index

    def __iter__(self):
        return iter(self.names)

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, Vocabulary) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Vocabulary({', '.join(self.names)})"


EMPTY_VOCABULARY = Vocabulary()


class Interpretation:
    """A subset of a vocabulary's atoms.

    Equality and hashing are over the member-name set only, matching the
    usual identification of interpretations with the atoms they make true.
    """

    __slots__ = ("vocabulary", "members")

    def __init__(self, vocabulary: Vocabulary, members=()):
        members = frozenset(members)
        for name in members:
            if name not in vocabulary:
                raise ValueError(f"member atom {name!r} not in vocabulary")
        self.vocabulary = vocabulary
        self.members = members

    def sort_key(self) -> tuple[int, ...]:
        # Canonical order: lexicographic over the vocabulary's atom order,
        # absent before present.
        return tuple(1 if n in self.members else 0 for n in self.vocabulary)

    def __contains__(self, name) -> bool:
        return name in self.members

    def __eq__(self, other):
        return isinstance(other, Interpretation) and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        inner = ",".join(sorted(self.members))
        return "{" + inner + "}"


def project(i: Interpretation, sigma: Vocabulary) -> Interpretation:
    """Restrict an interpretation to a vocabulary, dropping foreign atoms."""
    return Interpretation(sigma, {n for n in i.members if n in sigma})


def canonical_order(interps) -> list[Interpretation]:
    return sorted(interps, key=Interpretation.sort_key)


# --------------------------------------------------------------------------
# Syntactic payloads


@dataclass(frozen=True)
class Clause:
    """Disjunction of negated atoms (`negative`) and plain atoms (`positive`).

    Both parts empty is the explicit empty clause, which no interpretation
    satisfies.
    """

    negative: frozenset = frozenset()
    positive: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "negative", frozenset(self.negative))
        object.__setattr__(self, "positive", frozenset(self.positive))

    def atom_names(self) -> frozenset:
        return self.negative | self.positive

    def complement_body(self) -> "WcBody":
        """The literal conjunction equivalent to this clause's negation."""
        if not self.atom_names():
            raise ValueError("the empty clause has no conjunctive complement")
        return WcBody(positive=self.negative, negative=self.positive)


@dataclass(frozen=True)
class PropFormula:
    """Propositional formula tree.

    op is one of: true, false, atom, not, and, or, implies, iff.
    and/or are n-ary (empty and = true, empty or = false); implies/iff are
    binary; not is unary; atom carries its name.
    """

    op: str
    name: Optional[str] = None
    children: tuple = ()

    def atom_names(self) -> frozenset:
        if self.op == "atom":
            return frozenset([self.name])
        out = frozenset()
        for c in self.children:
            out |= c.atom_names()
        return out


TRUE = PropFormula("true")
FALSE = PropFormula("false")


def atom(name: str) -> PropFormula:
    return PropFormula("atom", name=name)


def not_(f: PropFormula) -> PropFormula:
    return PropFormula("not", children=(f,))


def and_(*fs: PropFormula) -> PropFormula:
    return PropFormula("and", children=tuple(fs))


def or_(*fs: PropFormula) -> PropFormula:
    return PropFormula("or", children=tuple(fs))


def implies(a: PropFormula, b: PropFormula) -> PropFormula:
    return PropFormula("implies", children=(a, b))


def iff(a: PropFormula, b: PropFormula) -> PropFormula:
    return PropFormula("iff", children=(a, b))


def clause_to_formula(c: Clause) -> PropFormula:
    lits = [not_(atom(n)) for n in sorted(c.negative)]
    lits += [atom(n) for n in sorted(c.positive)]
    if len(lits) == 1:
        return lits[0]
    return or_(*lits)


@dataclass(frozen=True)
class Rule:
    """head <- positive_body, not negative_body. A None head is bottom."""

    head: Optional[str]
    positive_body: frozenset = frozenset()
    negative_body: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "positive_body", frozenset(self.positive_body))
        object.__setattr__(self, "negative_body", frozenset(self.negative_body))

    def atom_names(self) -> frozenset:
        out = self.positive_body | self.negative_body
        if self.head is not None:
            out |= {self.head}
        return out

    @property
    def is_constraint(self) -> bool:
        return self.head is None


@dataclass(frozen=True)
class Program:
    rules: tuple
    vocabulary: Vocabulary

    def __init__(self, rules, vocabulary: Vocabulary):
        # Set semantics with stable order: duplicates collapse.
        rules = tuple(dict.fromkeys(rules))
        for r in rules:
            for name in r.atom_names():
                if name not in vocabulary:
                    raise ValueError(f"rule atom {name!r} not in program vocabulary")
        object.__setattr__(self, "rules", rules)
        object.__setattr__(self, "vocabulary", vocabulary)


@dataclass(frozen=True)
class WcBody:
    """Nonempty conjunction of literals: positive atoms and negated atoms."""

    positive: frozenset = frozenset()
    negative: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "positive", frozenset(self.positive))
        object.__setattr__(self, "negative", frozenset(self.negative))
        if not (self.positive | self.negative):
            raise ValueError("weak-constraint body must be a nonempty conjunction")

    def atom_names(self) -> frozenset:
        return self.positive | self.negative

    def size(self) -> int:
        return len(self.positive) + len(self.negative)

    def complement_clause(self) -> Clause:
        return Clause(negative=self.positive, positive=self.negative)


# --------------------------------------------------------------------------
# Theories, conditions, systems

_LOGICS = ("sat", "pl", "lp", "wc", "sigma", "complement")


@dataclass(frozen=True)
class Theory:
    """A logic-tagged syntactic object together with its vocabulary."""

    logic: str
    payload: object
    vocabulary: Vocabulary

    def __post_init__(self):
        if self.logic not in _LOGICS:
            raise ValueError(f"unknown logic tag {self.logic!r}")
        mentioned = self.atom_names()
        for name in mentioned:
            if name not in self.vocabulary:
                raise ValueError(f"theory atom {name!r} not in its vocabulary")
        if self.logic == "complement":
            inner = self.payload
            if not isinstance(inner, Theory) or inner.vocabulary != self.vocabulary:
                raise ValueError("complement must wrap one theory over the same vocabulary")

    def atom_names(self) -> frozenset:
        if self.logic == "sat":
            out = frozenset()
            for c in self.payload:
                out |= c.atom_names()
            return out
        if self.logic == "pl":
            out = frozenset()
            for f in self.payload:
                out |= f.atom_names()
            return out
        if self.logic == "lp":
            return frozenset(self.payload.vocabulary.names)
        if self.logic == "wc":
            return self.payload.atom_names()
        if self.logic == "sigma":
            return frozenset()
        return self.payload.atom_names()

    # Constructors ---------------------------------------------------------

    @staticmethod
    def sat(clauses, vocabulary: Vocabulary) -> "Theory":
        return Theory("sat", frozenset(clauses), vocabulary)

    @staticmethod
    def pl(formulas, vocabulary: Vocabulary) -> "Theory":
        if isinstance(formulas, PropFormula):
            formulas = (formulas,)
        return Theory("pl", tuple(formulas), vocabulary)

    @staticmethod
    def lp(program: Program) -> "Theory":
        return Theory("lp", program, program.vocabulary)

    @staticmethod
    def wc(body: WcBody, vocabulary: Vocabulary) -> "Theory":
        return Theory("wc", body, vocabulary)

    @staticmethod
    def sigma(vocabulary: Vocabulary) -> "Theory":
        return Theory("sigma", None, vocabulary)


@dataclass(frozen=True)
class WCondition:
    """A labeled soft unit: theory plus weight w at level l, written (T, w@l).

    Labels make syntactic duplicates distinct set elements, so WCNF-style
    repeated soft clauses keep multiset behavior.
    """

    label: str
    theory: Theory
    weight: int
    level: int = 1

    def __post_init__(self):
        if not isinstance(self.weight, int) or isinstance(self.weight, bool):
            raise ValueError("weight must be an exact integer")
        if not isinstance(self.level, int) or self.level < 1:
            raise ValueError("level must be a positive integer")


@dataclass(frozen=True)
class AMS:
    """Abstract modular system: a set of theories, possibly in different logics."""

    modules: tuple

    def __init__(self, modules=()):
        object.__setattr__(self, "modules", tuple(modules))

    @property
    def vocabulary(self) -> Vocabulary:
        vocab = EMPTY_VOCABULARY
        for t in self.modules:
            vocab = vocab.union(t.vocabulary)
        return vocab


@dataclass(frozen=True)
class WSystem:
    """(hard AMS, labeled soft w-conditions) with soft vocab inside hard vocab."""

    hard: AMS
    soft: tuple

    def __init__(self, hard: AMS, soft=()):
        soft = tuple(soft)
        sigma_h = hard.vocabulary
        labels = set()
        for b in soft:
            if b.label in labels:
                raise ValueError(f"duplicate w-condition label {b.label!r}")
            labels.add(b.label)
            if not b.theory.vocabulary.issubset(sigma_h):
                raise ValueError(
                    f"w-condition {b.label!r} mentions atoms outside the hard vocabulary"
                )
        object.__setattr__(self, "hard", hard)
        object.__setattr__(self, "soft", soft)

    @property
    def vocabulary(self) -> Vocabulary:
        return self.hard.vocabulary

    def condition(self, label: str) -> WCondition:
        for b in self.soft:
            if b.label == label:
                return b
        raise KeyError(f"no w-condition labeled {label!r}")


def levels(w: WSystem) -> tuple[int, ...]:
    """All levels used by the soft part, ascending; empty when soft is empty."""
    return tuple(sorted({b.level for b in w.soft}))


def level_slice(w: WSystem, l: int) -> tuple[WCondition, ...]:
    """The w-conditions at level l, in soft order; empty for absent levels."""
    return tuple(b for b in w.soft if b.level == l)


def prev_level(w: WSystem, l: int) -> Optional[int]:
    """The least level greater than l, or None for the greatest level."""
    ls = levels(w)
    if l not in ls:
        raise ValueError(f"level {l} is not a level of the system (levels: {ls})")
    greater = [x for x in ls if x > l]
    return min(greater) if greater else None
