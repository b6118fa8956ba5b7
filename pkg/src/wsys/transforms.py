"""Equivalence-preserving rewrites on w-systems and optimization programs:
dropping zero or invariant conditions, weight scaling and sign handling,
level normalization and flattening, and singular weak-constraint rewriting.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .encodings import OProgram, WeakConstraint
from .errors import TransformError
from .logics import complement, satisfies
from .model import (
    Clause,
    Program,
    Rule,
    Theory,
    Vocabulary,
    WCondition,
    WcBody,
    WSystem,
    level_slice,
    levels,
    prev_level,
)
from .solve import (
    DEFAULT_MAX_VARS,
    Sense,
    enumerate_models,
    l_optimal_models,
)


def drop_zero_weights(w: WSystem) -> WSystem:
    """Zero-weight conditions never move any sum; drop them."""
    return WSystem(w.hard, tuple(b for b in w.soft if b.weight != 0))


def scale_weights(w: WSystem, a: int) -> WSystem:
    """Multiply every weight by a positive integer; optima are unchanged."""
    if not isinstance(a, int) or a < 1:
        raise TransformError(f"scale factor must be a positive integer, got {a!r}")
    return WSystem(w.hard, tuple(replace(b, weight=a * b.weight) for b in w.soft))


def normalize_levels(w: WSystem) -> WSystem:
    """Replace each level by its ascending rank, making levels 1..k."""
    rank = {l: i + 1 for i, l in enumerate(levels(w))}
    return WSystem(w.hard, tuple(replace(b, level=rank[b.level]) for b in w.soft))


def negate_all_weights(w: WSystem) -> WSystem:
    """Swap optimal and min-optimal model sets by flipping every weight."""
    return WSystem(w.hard, tuple(replace(b, weight=-b.weight) for b in w.soft))


def eliminate_sign(w: WSystem, keep: Sense) -> WSystem:
    """Rewrite wrong-signed conditions as complements with negated weight.

    keep=MAX leaves only nonnegative weights, keep=MIN only nonpositive;
    both optimal and min-optimal sets are preserved.
    """
    out = []
    for b in w.soft:
        flip = b.weight < 0 if keep is Sense.MAX else b.weight > 0
        if flip:
            out.append(WCondition(b.label, complement(b.theory), -b.weight, b.level))
        else:
            out.append(b)
    return WSystem(w.hard, tuple(out))


def flip_single_condition(w: WSystem, label: str) -> WSystem:
    """Replace one condition by its complement with negated weight."""
    try:
        w.condition(label)
    except KeyError as e:
        raise TransformError(str(e)) from None
    out = tuple(
        WCondition(b.label, complement(b.theory), -b.weight, b.level)
        if b.label == label
        else b
        for b in w.soft
    )
    return WSystem(w.hard, out)


def drop_invariant_conditions(
    w: WSystem, s, sense: Sense, max_vars: int = DEFAULT_MAX_VARS
) -> WSystem:
    """Drop a same-level set of conditions whose summed value is constant
    across the relevant candidate models.

    The semantic precondition is verified exhaustively: the candidates are
    the prev(l)-optimal models for the given sense, or all models when l is
    the greatest level. Refuses with TransformError when the sums differ.
    """
    labels = set(s)
    conds = []
    for label in sorted(labels):
        try:
            conds.append(w.condition(label))
        except KeyError as e:
            raise TransformError(str(e)) from None
    if not conds:
        return w
    lvls = {b.level for b in conds}
    if len(lvls) > 1:
        raise TransformError(f"conditions must share one level, got levels {sorted(lvls)}")
    (l,) = lvls
    prev = prev_level(w, l)
    if prev is None:
        candidates = enumerate_models(w, max_vars=max_vars)
    else:
        candidates = l_optimal_models(w, prev, sense, max_vars=max_vars)
    sums = {
        sum(b.weight if satisfies(m, b.theory) else 0 for b in conds)
        for m in candidates
    }
    if len(sums) > 1:
        raise TransformError(
            f"summed value over {sorted(labels)} is not constant across candidate "
            f"models (saw sums {sorted(sums)}); rewrite refused"
        )
    return WSystem(w.hard, tuple(b for b in w.soft if b.label not in labels))


@dataclass(frozen=True)
class LevelFactors:
    """Flattening arithmetic: M[0]=1, M[i] = 1 + sum of level-i weights;
    f[i] is the product of M[0..i-1]."""

    M: dict
    f: dict


def level_factors(w: WSystem) -> LevelFactors:
    lvls = levels(w)
    _require_flattenable(w, lvls)
    k = len(lvls)
    M = {0: 1}
    for i in range(1, k):
        M[i] = 1 + sum(b.weight for b in level_slice(w, i))
    f = {}
    for i in range(1, k + 1):
        prod = 1
        for j in range(i):
            prod *= M[j]
        f[i] = prod
    return LevelFactors(M, f)


def _require_flattenable(w: WSystem, lvls):
    if any(b.weight <= 0 for b in w.soft):
        raise TransformError("level flattening requires strictly positive weights")
    if lvls and lvls != tuple(range(1, len(lvls) + 1)):
        raise TransformError(
            f"level flattening requires a level-normal system, got levels {lvls}"
        )


def flatten_levels(w: WSystem) -> WSystem:
    """Collapse a strictly positive level-normal system to a single level by
    scaling each level's weights with the cumulative factor f_i."""
    lvls = levels(w)
    factors = level_factors(w)
    if len(lvls) <= 1:
        return WSystem(w.hard, tuple(replace(b, level=1) for b in w.soft))
    return WSystem(
        w.hard,
        tuple(replace(b, weight=factors.f[b.level] * b.weight, level=1) for b in w.soft),
    )


# --------------------------------------------------------------------------
# Optimization-program rewrites

AUX_WC_PREFIX = "__aux_wc"


def _make_singular(p: OProgram, family: str, rewrite_all_multi: bool = False):
    """Rewrite weak constraints via fresh defined atoms so that each is
    positively-singular (family='positive': weight >= 0 or unit body) or
    negatively-singular (family='negative').

    Returns the rewritten program and a map fresh-atom -> constraint index.
    """
    if family not in ("positive", "negative"):
        raise ValueError(f"family must be 'positive' or 'negative', got {family!r}")
    new_rules = list(p.program.rules)
    new_names = list(p.program.vocabulary.names)
    constraints = []
    mapping = {}
    for i, wc in enumerate(p.constraints):
        multi = wc.body.size() > 1
        wrong_sign = wc.weight < 0 if family == "positive" else wc.weight > 0
        if multi and (rewrite_all_multi or wrong_sign):
            aux = f"{AUX_WC_PREFIX}{i}"
            if aux in p.program.vocabulary:
                raise TransformError(f"fresh atom {aux!r} collides with a program atom")
            new_names.append(aux)
            new_rules.append(Rule(aux, wc.body.positive, wc.body.negative))
            constraints.append(WeakConstraint(WcBody(positive={aux}), wc.weight, wc.level))
            mapping[aux] = i
        else:
            constraints.append(wc)
    program = Program(new_rules, Vocabulary(new_names))
    return OProgram(program, constraints), mapping


def to_positively_singular(p: OProgram, rewrite_all_multi: bool = False):
    """Replace negative-weight multi-literal weak constraints (all
    multi-literal ones under rewrite_all_multi) by fresh defined atoms.

    Answer sets of the output, with fresh atoms dropped, are exactly the
    answer sets of the input, and optimal answer sets correspond.
    """
    return _make_singular(p, "positive", rewrite_all_multi)


def _is_singular(weight: int, size: int, family: str) -> bool:
    if size == 1:
        return True
    return weight >= 0 if family == "positive" else weight <= 0


def _flip_unit_body(body: WcBody) -> WcBody:
    if body.positive:
        (name,) = body.positive
        return WcBody(negative={name})
    (name,) = body.negative
    return WcBody(positive={name})


def singular_rewrite(b: WCondition, mode: str, family: str | None = None) -> WCondition:
    """The two singular rewrites of a wc-logic condition.

    mode='up' stays in wc-logic: a unit body whose weight sign disagrees with
    the family is literal-complemented with the weight negated.  mode='sat'
    moves to sat-logic: when the family's sign condition holds, the body is
    replaced by its complementary clause with the weight negated; otherwise
    the unit body is reread as a unit clause.

    family defaults to the side whose sign condition the weight satisfies.
    """
    if mode not in ("up", "sat"):
        raise TransformError(f"mode must be 'up' or 'sat', got {mode!r}")
    if b.theory.logic != "wc":
        raise TransformError("singular rewriting applies to wc-logic conditions only")
    body: WcBody = b.theory.payload
    if family is None:
        family = "positive" if b.weight >= 0 else "negative"
    if family not in ("positive", "negative"):
        raise TransformError(f"family must be 'positive' or 'negative', got {family!r}")
    if not _is_singular(b.weight, body.size(), family):
        raise TransformError(
            f"condition {b.label!r} is not {family}ly-singular "
            f"(weight {b.weight}, body size {body.size()})"
        )
    sign_holds = b.weight >= 0 if family == "positive" else b.weight <= 0
    sigma = b.theory.vocabulary
    if mode == "up":
        if sign_holds:
            return b
        flipped = _flip_unit_body(body)
        return WCondition(b.label, Theory.wc(flipped, sigma), -b.weight, b.level)
    if sign_holds:
        clause = body.complement_clause()
        return WCondition(b.label, Theory.sat({clause}, sigma), -b.weight, b.level)
    # Unit body, wrong sign: unchanged, reread as a unit clause.
    clause = Clause(positive=body.positive, negative=body.negative)
    return WCondition(b.label, Theory.sat({clause}, sigma), b.weight, b.level)
