import pytest

from wsys import (
    OProgram,
    Program,
    Rule,
    Sense,
    Theory,
    TransformError,
    Vocabulary,
    WCondition,
    WcBody,
    WeakConstraint,
    WSystem,
    all_interpretations,
    drop_invariant_conditions,
    drop_zero_weights,
    eliminate_sign,
    enumerate_models,
    flatten_levels,
    flip_single_condition,
    is_answer_set,
    levels,
    negate_all_weights,
    normalize_levels,
    optimal_models_domination,
    project,
    scale_weights,
    singular_rewrite,
    to_positively_singular,
)
from wsys.transforms import level_factors
from wsys.testkit import GenConfig, gen_oprogram, gen_wsystem, oracle_optimal

from conftest import VAB, interp, sat_cond, CLAUSE_A, CLAUSE_NOT_A_B

BOTH = (Sense.MAX, Sense.MIN)


def _corpus(n, max_atoms=6):
    return [gen_wsystem(GenConfig(max_atoms=max_atoms, seed=seed)) for seed in range(n)]


def _assert_preserves(w, w2):
    assert enumerate_models(w2) == enumerate_models(w)
    for s in BOTH:
        assert oracle_optimal(w2, s) == oracle_optimal(w, s)


def test_drop_zero_weights(pw_maxsat_sample):
    out = drop_zero_weights(pw_maxsat_sample)
    assert [b.label for b in out.soft] == ["c0", "c1", "c2"]
    untouched = drop_zero_weights(out)
    assert untouched == out
    all_zero = WSystem(pw_maxsat_sample.hard, [sat_cond("z", CLAUSE_A, 0)])
    assert drop_zero_weights(all_zero).soft == ()


def test_scale_weights(pw_maxsat_sample):
    assert scale_weights(pw_maxsat_sample, 1) == pw_maxsat_sample
    doubled = scale_weights(pw_maxsat_sample, 2)
    assert [b.weight for b in doubled.soft] == [2, 2, 4, 0]
    with pytest.raises(TransformError):
        scale_weights(pw_maxsat_sample, 0)
    scaled = scale_weights(pw_maxsat_sample, 5)
    assert optimal_models_domination(scaled, Sense.MAX) == [interp({"a"})]


def test_normalize_levels(leveled_sample):
    out = normalize_levels(leveled_sample)
    assert levels(out) == (1, 2)
    assert out.condition("c1").level == 2
    assert normalize_levels(out) == out
    sparse = WSystem(
        leveled_sample.hard,
        [sat_cond(f"c{i}", CLAUSE_A, 1, level=l) for i, l in enumerate([2, 6, 8, 9])],
    )
    assert [b.level for b in normalize_levels(sparse).soft] == [1, 2, 3, 4]


def test_negate_all_weights_is_involution(pw_maxsat_sample):
    assert negate_all_weights(negate_all_weights(pw_maxsat_sample)) == pw_maxsat_sample
    zero = WSystem(pw_maxsat_sample.hard, [sat_cond("z", CLAUSE_A, 0)])
    assert negate_all_weights(zero).condition("z").weight == 0


def test_negate_all_weights_swaps_optima(pw_minsat_sample):
    neg = negate_all_weights(pw_minsat_sample)
    assert optimal_models_domination(neg, Sense.MAX) == optimal_models_domination(
        pw_minsat_sample, Sense.MIN
    )
    assert optimal_models_domination(neg, Sense.MIN) == optimal_models_domination(
        pw_minsat_sample, Sense.MAX
    )


def test_eliminate_sign_wc_example():
    # (a & -b, -2@1) becomes the clause (-a | b, 2@1) when keeping max.
    w = WSystem(
        __import__("wsys").AMS([Theory.sigma(VAB)]),
        [WCondition("c", Theory.wc(WcBody(positive={"a"}, negative={"b"}), VAB), -2, 1)],
    )
    out = eliminate_sign(w, Sense.MAX)
    (b,) = out.soft
    assert b.theory.logic == "sat"
    assert b.theory.payload == frozenset({CLAUSE_NOT_A_B})
    assert b.weight == 2 and b.level == 1


def test_eliminate_sign_identity_when_signs_agree(pw_minsat_sample):
    assert eliminate_sign(pw_minsat_sample, Sense.MAX) == pw_minsat_sample


def test_eliminate_sign_weight_signs():
    for seed in range(25):
        w = gen_wsystem(GenConfig(max_atoms=5, seed=seed))
        assert all(b.weight >= 0 for b in eliminate_sign(w, Sense.MAX).soft)
        assert all(b.weight <= 0 for b in eliminate_sign(w, Sense.MIN).soft)


def test_flip_single_condition(pw_minsat_sample):
    out = flip_single_condition(pw_minsat_sample, "c0")
    (b,) = out.soft
    assert b.weight == -2
    _assert_preserves(pw_minsat_sample, out)
    twice = flip_single_condition(out, "c0")
    for s in BOTH:
        assert oracle_optimal(twice, s) == oracle_optimal(pw_minsat_sample, s)
    with pytest.raises(TransformError):
        flip_single_condition(pw_minsat_sample, "nope")


def test_drop_invariant_conditions(pw_maxsat_sample):
    # Both unit conditions score 1 on every model, so they can be dropped;
    # removing the zero-weight one afterwards leaves the simplified problem.
    out = drop_invariant_conditions(pw_maxsat_sample, {"c0", "c1"}, Sense.MAX)
    assert [b.label for b in out.soft] == ["c2", "c3"]
    _assert_preserves(pw_maxsat_sample, out)
    simplified = drop_zero_weights(out)
    assert [b.label for b in simplified.soft] == ["c2"]
    _assert_preserves(pw_maxsat_sample, simplified)


def test_drop_invariant_all_droppable(xor_hard):
    from conftest import CLAUSE_B

    w = WSystem(xor_hard, [sat_cond("c0", CLAUSE_A, 1), sat_cond("c1", CLAUSE_B, 1)])
    out = drop_invariant_conditions(w, {"c0", "c1"}, Sense.MAX)
    assert out.soft == ()
    models = enumerate_models(w)
    for s in BOTH:
        assert optimal_models_domination(out, s) == models


def test_drop_invariant_refuses_varying_sums(pw_maxsat_sample):
    with pytest.raises(TransformError):
        drop_invariant_conditions(pw_maxsat_sample, {"c2"}, Sense.MAX)
    with pytest.raises(TransformError):
        drop_invariant_conditions(pw_maxsat_sample, {"c0", "c2"}, Sense.MAX)


def test_level_factors_and_flatten(flatten_sample):
    factors = level_factors(flatten_sample)
    assert factors.M == {0: 1, 1: 4}
    assert factors.f == {1: 1, 2: 4}
    flat = flatten_levels(flatten_sample)
    assert levels(flat) == (1,)
    assert [(b.label, b.weight) for b in flat.soft] == [("c0", 1), ("c1", 2), ("c2", 4)]
    _assert_preserves(flatten_sample, flat)


def test_flatten_factor_arithmetic():
    for seed in range(40):
        w = gen_wsystem(GenConfig(max_atoms=5, seed=seed))
        w = normalize_levels(drop_zero_weights(eliminate_sign(w, Sense.MAX)))
        if not w.soft:
            continue
        factors = level_factors(w)
        assert factors.f[1] == 1
        for i in sorted(factors.f)[:-1]:
            assert factors.f[i + 1] == factors.f[i] * factors.M[i]


def test_flatten_single_level_identity(pw_minsat_sample):
    flat = flatten_levels(pw_minsat_sample)
    assert [(b.weight, b.level) for b in flat.soft] == [(2, 1)]


def test_flatten_rejects_bad_inputs(pw_maxsat_sample, leveled_sample):
    with pytest.raises(TransformError):
        flatten_levels(pw_maxsat_sample)  # zero weight present
    with pytest.raises(TransformError):
        flatten_levels(drop_zero_weights(leveled_sample))  # levels {1,3}
    neg = negate_all_weights(drop_zero_weights(pw_maxsat_sample))
    with pytest.raises(TransformError):
        flatten_levels(neg)


def test_transform_preservation_corpus():
    for w in _corpus(60, max_atoms=5):
        base = {s: oracle_optimal(w, s) for s in BOTH}
        candidates = [
            drop_zero_weights(w),
            scale_weights(w, 2),
            scale_weights(w, 3),
            scale_weights(w, 7),
            normalize_levels(w),
            eliminate_sign(w, Sense.MAX),
            eliminate_sign(w, Sense.MIN),
        ]
        if w.soft:
            candidates.append(flip_single_condition(w, w.soft[0].label))
            candidates.append(
                flatten_levels(
                    normalize_levels(drop_zero_weights(eliminate_sign(w, Sense.MAX)))
                )
            )
        for w2 in candidates:
            assert enumerate_models(w2) == enumerate_models(w)
            for s in BOTH:
                assert oracle_optimal(w2, s) == base[s]
        neg = negate_all_weights(w)
        assert oracle_optimal(neg, Sense.MAX) == base[Sense.MIN]
        assert oracle_optimal(neg, Sense.MIN) == base[Sense.MAX]


def test_composition_pipeline_preserves():
    for w in _corpus(40, max_atoms=5):
        staged = eliminate_sign(w, Sense.MAX)
        staged = drop_zero_weights(staged)
        staged = normalize_levels(staged)
        staged = flatten_levels(staged)
        for s in BOTH:
            assert oracle_optimal(staged, s) == oracle_optimal(w, s)


# --------------------------------------------------------------------------
# Singular rewriting


def _negative_body_cond():
    return WCondition(
        "wc0", Theory.wc(WcBody(positive={"a"}, negative={"b"}), VAB), -2, 1
    )


def test_singular_rewrite_up_identity():
    assert singular_rewrite(_negative_body_cond(), "up") == _negative_body_cond()


def test_singular_rewrite_sat_examples():
    out = singular_rewrite(_negative_body_cond(), "sat")
    assert out.theory.logic == "sat"
    assert out.theory.payload == frozenset({CLAUSE_NOT_A_B})
    assert out.weight == 2 and out.level == 1

    pos = WCondition("p", Theory.wc(WcBody(positive={"a"}, negative={"b"}), VAB), 2, 1)
    out2 = singular_rewrite(pos, "sat")
    assert out2.theory.payload == frozenset({CLAUSE_NOT_A_B})
    assert out2.weight == -2


def test_singular_rewrite_up_flips_unit_bodies():
    unit = WCondition("u", Theory.wc(WcBody(positive={"a"}), VAB), 5, 2)
    flipped = singular_rewrite(unit, "up", family="negative")
    assert flipped.theory.payload == WcBody(negative={"a"})
    assert flipped.weight == -5 and flipped.level == 2
    # Under the positive family the sign already agrees: identity.
    assert singular_rewrite(unit, "up", family="positive") == unit


def test_singular_rewrite_sat_wrong_sign_unit_stays():
    unit = WCondition("u", Theory.wc(WcBody(negative={"b"}), VAB), -3, 1)
    out = singular_rewrite(unit, "sat", family="positive")
    assert out.theory.logic == "sat"
    assert out.theory.payload == frozenset({__import__("wsys").Clause(negative={"b"})})
    assert out.weight == -3


def test_singular_rewrite_rejects_nonsingular():
    multi = WCondition(
        "m", Theory.wc(WcBody(positive={"a", "b"}), VAB), -1, 1
    )
    with pytest.raises(TransformError):
        singular_rewrite(multi, "up", family="positive")
    with pytest.raises(TransformError):
        singular_rewrite(_negative_body_cond(), "bogus")


def test_singular_rewrite_preserves_semantics_with_sign_flip():
    # (T, w@l) -> (complement clause, -w@l) leaves both optima unchanged.
    from wsys import AMS

    w = WSystem(AMS([Theory.sigma(VAB)]), [_negative_body_cond()])
    rewritten = WSystem(AMS([Theory.sigma(VAB)]), [singular_rewrite(_negative_body_cond(), "sat")])
    for s in BOTH:
        assert oracle_optimal(w, s) == oracle_optimal(rewritten, s)


# --------------------------------------------------------------------------
# to_positively_singular


def test_to_positively_singular_example(even_loop_program):
    op = OProgram(
        even_loop_program,
        [WeakConstraint(WcBody(positive={"a"}, negative={"b"}), -3, 1)],
    )
    out, mapping = to_positively_singular(op)
    assert mapping == {"__aux_wc0": 0}
    assert out.program.rules[-1] == Rule(
        "__aux_wc0", frozenset({"a"}), frozenset({"b"})
    )
    (wc,) = out.constraints
    assert wc.body == WcBody(positive={"__aux_wc0"})
    assert wc.weight == -3 and wc.level == 1


def test_to_positively_singular_identity(weak_sample_oprogram):
    # All constraints already singular under the positive family? The sample
    # has weight -2 with a two-literal body, so it is rewritten; a positive
    # variant is not.
    pos = OProgram(
        weak_sample_oprogram.program,
        [WeakConstraint(WcBody(positive={"a"}, negative={"b"}), 2, 1)],
    )
    out, mapping = to_positively_singular(pos)
    assert out == pos and mapping == {}


def test_to_positively_singular_rewrite_all(weak_sample_oprogram):
    pos = OProgram(
        weak_sample_oprogram.program,
        [WeakConstraint(WcBody(positive={"a"}, negative={"b"}), 2, 1)],
    )
    out, mapping = to_positively_singular(pos, rewrite_all_multi=True)
    assert mapping == {"__aux_wc0": 0}
    assert all(wc.body.size() == 1 for wc in out.constraints)


def _drop_fresh(i, original_vocab):
    return project(i, original_vocab)


def test_to_positively_singular_answer_set_bijection():
    from wsys.testkit import oracle_optimal_answer_sets

    checked = 0
    for seed in range(40):
        op = gen_oprogram(GenConfig(max_atoms=4, max_rules=4, max_conditions=3, seed=seed))
        out, mapping = to_positively_singular(op)
        if not mapping:
            continue
        checked += 1
        orig = [
            i
            for i in all_interpretations(op.vocabulary)
            if is_answer_set(op.program, i)
        ]
        new = [
            i
            for i in all_interpretations(out.vocabulary)
            if is_answer_set(out.program, i)
        ]
        projected = [_drop_fresh(i, op.vocabulary) for i in new]
        assert sorted(projected, key=lambda x: sorted(x.members)) == sorted(
            orig, key=lambda x: sorted(x.members)
        )
        assert len(set(projected)) == len(new)  # bijection, not just onto
        opt_orig = oracle_optimal_answer_sets(op)
        opt_new = oracle_optimal_answer_sets(out)
        assert {_drop_fresh(i, op.vocabulary) for i in opt_new} == opt_orig
    assert checked >= 5


def test_to_positively_singular_rejects_collision(even_loop_program):
    vocab = Vocabulary(["a", "b", "__aux_wc0"])
    prog = Program(list(even_loop_program.rules), vocab)
    op = OProgram(prog, [WeakConstraint(WcBody(positive={"a"}, negative={"b"}), -1, 1)])
    with pytest.raises(TransformError):
        to_positively_singular(op)
