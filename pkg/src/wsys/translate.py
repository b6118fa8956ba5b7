"""Completion-based translation of tight optimization programs into partial
weighted MaxSAT/MinSAT: tightness analysis, Clark completion, clausification,
and the end-to-end pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass

from .encodings import OProgram, PwProblem
from .errors import TightnessError, TransformError
from .model import (
    Clause,
    Program,
    PropFormula,
    Vocabulary,
    and_,
    atom,
    iff,
    not_,
    or_,
    FALSE,
    TRUE,
)
from .solve import Sense
from .transforms import _make_singular

AUX_BODY_PREFIX = "__body"


@dataclass(frozen=True)
class DependencyGraph:
    """Positive dependency graph: head -> positive-body-atom edges."""

    nodes: tuple
    edges: dict  # name -> frozenset of names


def dependency_graph(p: Program) -> DependencyGraph:
    edges = {name: set() for name in p.vocabulary}
    for r in p.rules:
        if r.head is not None:
            edges[r.head] |= r.positive_body
    return DependencyGraph(
        tuple(p.vocabulary.names), {k: frozenset(v) for k, v in edges.items()}
    )


def find_positive_cycle(p: Program):
    """A directed cycle in the positive dependency graph, or None."""
    graph = dependency_graph(p).edges
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {n: WHITE for n in graph}
    stack: list = []

    def visit(n):
        color[n] = GRAY
        stack.append(n)
        for m in sorted(graph[n]):
            if color[m] == GRAY:
                return stack[stack.index(m):]
            if color[m] == WHITE:
                found = visit(m)
                if found is not None:
                    return found
        stack.pop()
        color[n] = BLACK
        return None

    for n in graph:
        if color[n] == WHITE:
            cycle = visit(n)
            if cycle is not None:
                return cycle
    return None


def is_tight(p: Program) -> bool:
    return find_positive_cycle(p) is None


def _body_formula(r) -> PropFormula:
    lits = [atom(n) for n in sorted(r.positive_body)]
    lits += [not_(atom(n)) for n in sorted(r.negative_body)]
    if not lits:
        return TRUE
    if len(lits) == 1:
        return lits[0]
    return and_(*lits)


def completion(p: Program) -> PropFormula:
    """Clark completion: each atom iff the disjunction of its rule bodies,
    plus the negation of every constraint body. For tight programs its
    models are exactly the answer sets."""
    conjuncts = []
    for name in p.vocabulary:
        bodies = [_body_formula(r) for r in p.rules if r.head == name]
        if not bodies:
            rhs = FALSE
        elif len(bodies) == 1:
            rhs = bodies[0]
        else:
            rhs = or_(*bodies)
        conjuncts.append(iff(atom(name), rhs))
    for r in p.rules:
        if r.is_constraint:
            conjuncts.append(not_(_body_formula(r)))
    if len(conjuncts) == 1:
        return conjuncts[0]
    return and_(*conjuncts)


# --------------------------------------------------------------------------
# Clausification

def _strip_arrows(f: PropFormula) -> PropFormula:
    op = f.op
    if op in ("true", "false", "atom"):
        return f
    if op == "not":
        return not_(_strip_arrows(f.children[0]))
    if op == "implies":
        a, b = (_strip_arrows(c) for c in f.children)
        return or_(not_(a), b)
    if op == "iff":
        a, b = (_strip_arrows(c) for c in f.children)
        return and_(or_(not_(a), b), or_(not_(b), a))
    return PropFormula(op, children=tuple(_strip_arrows(c) for c in f.children))


def _nnf(f: PropFormula, negate: bool) -> PropFormula:
    op = f.op
    if op == "true":
        return FALSE if negate else TRUE
    if op == "false":
        return TRUE if negate else FALSE
    if op == "atom":
        return not_(f) if negate else f
    if op == "not":
        return _nnf(f.children[0], not negate)
    if op == "and":
        kids = tuple(_nnf(c, negate) for c in f.children)
        return or_(*kids) if negate else and_(*kids)
    if op == "or":
        kids = tuple(_nnf(c, negate) for c in f.children)
        return and_(*kids) if negate else or_(*kids)
    raise ValueError(f"unexpected op {op!r} after arrow elimination")


def clausify(f: PropFormula, max_expansion: int = 32):
    """CNF conversion: small disjunctions distribute, larger ones get one
    fresh defined atom per conjunctive disjunct (structure preserving).

    Returns (clauses, fresh_atoms). Models of the clause set restricted to
    the original atoms are exactly the models of f.
    """
    nnf = _nnf(_strip_arrows(f), False)
    fresh: list = []
    counter = [0]

    def fresh_atom() -> str:
        name = f"{AUX_BODY_PREFIX}{counter[0]}"
        counter[0] += 1
        fresh.append(name)
        return name

    # Clauses are dicts name -> bool (True for a positive literal). A None
    # result marks a tautology.
    def lit_clause(name, positive):
        return {name: positive}

    def merge(c1, c2):
        out = dict(c1)
        for k, v in c2.items():
            if k in out and out[k] != v:
                return None
            out[k] = v
        return out

    def cnf(node) -> list:
        op = node.op
        if op == "true":
            return []
        if op == "false":
            return [{}]
        if op == "atom":
            return [lit_clause(node.name, True)]
        if op == "not":
            return [lit_clause(node.children[0].name, False)]
        if op == "and":
            out = []
            for c in node.children:
                out.extend(cnf(c))
            return out
        if op == "or":
            parts = [cnf(c) for c in node.children]
            if any(not p for p in parts):
                return []  # some disjunct is valid
            size = 1
            for p in parts:
                size *= len(p)
            if size <= max_expansion:
                acc = [{}]
                for p in parts:
                    nxt = []
                    for base in acc:
                        for cl in p:
                            m = merge(base, cl)
                            if m is not None:
                                nxt.append(m)
                    acc = nxt
                return acc
            # Structure-preserving fallback: define each multi-clause
            # disjunct by a fresh atom (one-sided suffices for projection).
            defs = []
            top = {}
            for p in parts:
                if len(p) == 1:
                    m = merge(top, p[0])
                    if m is None:
                        return []  # top clause became a tautology
                    top = m
                    continue
                t = fresh_atom()
                for cl in p:
                    guarded = dict(cl)
                    guarded[t] = False
                    defs.append(guarded)
                top[t] = True
            defs.append(top)
            return defs
        raise ValueError(f"unexpected op {op!r} in NNF")

    raw = cnf(nnf)
    clauses = []
    seen = set()
    for cl in raw:
        pos = frozenset(k for k, v in cl.items() if v)
        neg = frozenset(k for k, v in cl.items() if not v)
        key = (neg, pos)
        if key not in seen:
            seen.add(key)
            clauses.append(Clause(negative=neg, positive=pos))
    return tuple(clauses), tuple(fresh)


# --------------------------------------------------------------------------
# End-to-end pipeline

def _flatten_constraints(constraints):
    """Single-level the constraint list. Expects all weights strictly one
    signed and nonzero; factors come from |w| sums, which on one-signed
    input is the sign-conjugated flattening."""
    lvls = sorted({wc.level for wc in constraints})
    if len(lvls) <= 1:
        return [type(wc)(wc.body, wc.weight, 1) for wc in constraints]
    rank = {l: i + 1 for i, l in enumerate(lvls)}
    k = len(lvls)
    M = {0: 1}
    for i in range(1, k):
        M[i] = 1 + sum(abs(wc.weight) for wc in constraints if rank[wc.level] == i)
    f = {}
    for i in range(1, k + 1):
        prod = 1
        for j in range(i):
            prod *= M[j]
        f[i] = prod
    return [type(wc)(wc.body, f[rank[wc.level]] * wc.weight, 1) for wc in constraints]


def oprogram_to_pw(p: OProgram, target: Sense, max_expansion: int = 32):
    """Translate a tight optimization program into a pw-MaxSAT (target=MAX)
    or pw-MinSAT (target=MIN) problem.

    Optimal answer sets of the input equal the optimal models of the output
    projected to the input vocabulary. Returns (problem, fresh_atoms).
    """
    cycle = find_positive_cycle(p.program)
    if cycle is not None:
        raise TightnessError(cycle)

    family = "positive" if target is Sense.MAX else "negative"
    p2, aux_map = _make_singular(p, family)
    constraints = [wc for wc in p2.constraints if wc.weight != 0]

    # Make the weights strictly one-signed within wc-logic (unit-body flips).
    signed = []
    for wc in constraints:
        wrong = wc.weight < 0 if family == "positive" else wc.weight > 0
        if wrong:
            if wc.body.size() != 1:
                raise TransformError(
                    "internal: non-singular condition survived normalization"
                )
            body = (
                type(wc.body)(negative=wc.body.positive)
                if wc.body.positive
                else type(wc.body)(positive=wc.body.negative)
            )
            signed.append(type(wc)(body, -wc.weight, wc.level))
        else:
            signed.append(wc)

    flat = _flatten_constraints(signed)

    # Each body becomes its complementary clause with the weight negated;
    # for target=MAX the whole soft part is then sign-flipped once more.
    soft = []
    for wc in flat:
        clause = wc.body.complement_clause()
        weight = -wc.weight
        if target is Sense.MAX:
            weight = -weight
        soft.append((clause, weight))

    hard, clause_aux = clausify(completion(p2.program), max_expansion=max_expansion)
    vocab = Vocabulary(p2.program.vocabulary.names + tuple(clause_aux))
    problem = PwProblem(vocab, hard, tuple(soft), sense=target)
    fresh = tuple(aux_map.keys()) + tuple(clause_aux)
    return problem, fresh
