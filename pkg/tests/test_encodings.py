from itertools import permutations

import pytest

from wsys import (
    Clause,
    Interpretation,
    PwProblem,
    Sense,
    Vocabulary,
    WcBody,
    WeakConstraint,
    all_interpretations,
    desugar_minimize,
    distance_sat,
    distance_sat_subset,
    enumerate_models,
    eval_clause,
    from_maxsat,
    from_oprogram,
    from_pw_sat,
    from_weighted_sat,
    min_one,
    min_one_asp,
    min_one_subset,
    optimal_models_domination,
)
from wsys.testkit import (
    GenConfig,
    gen_oprogram,
    gen_pw,
    oracle_optimal_answer_sets,
)

from conftest import XOR_CLAUSES, VAB, interp


def _models_of(clauses, sigma):
    return [
        i for i in all_interpretations(sigma) if all(eval_clause(i, c) for c in clauses)
    ]


def test_from_maxsat_solutions():
    w = from_maxsat(XOR_CLAUSES, VAB)
    assert set(optimal_models_domination(w, Sense.MAX)) == {interp({"a"}), interp({"b"})}
    empty = from_maxsat(set(), VAB)
    assert len(optimal_models_domination(empty, Sense.MAX)) == 4
    va = Vocabulary(["a"])
    contradictory = from_maxsat({Clause(positive={"a"}), Clause(negative={"a"})}, va)
    assert set(optimal_models_domination(contradictory, Sense.MAX)) == {
        Interpretation(va, set()),
        Interpretation(va, {"a"}),
    }


def test_from_maxsat_matches_bruteforce_count():
    # Optimal models maximize the satisfied-clause count, against a direct count.
    for seed in range(25):
        prob = gen_pw(GenConfig(max_atoms=5, seed=seed))
        clauses = [c for c, _ in prob.soft]
        if not clauses:
            continue
        w = from_maxsat(clauses, prob.vocabulary)
        counts = {
            i: sum(1 for c in clauses if eval_clause(i, c))
            for i in all_interpretations(prob.vocabulary)
        }
        best = max(counts.values())
        expected = {i for i, v in counts.items() if v == best}
        assert set(optimal_models_domination(w, Sense.MAX)) == expected


def test_from_weighted_sat():
    va = Vocabulary(["a"])
    pairs = [(Clause(positive={"a"}), 2), (Clause(negative={"a"}), 1)]
    w = from_weighted_sat(pairs, va, Sense.MAX)
    assert optimal_models_domination(w, Sense.MAX) == [Interpretation(va, {"a"})]
    assert optimal_models_domination(w, Sense.MIN) == [Interpretation(va, set())]
    with pytest.raises(ValueError):
        from_weighted_sat([(Clause(positive={"a"}), 0)], va, Sense.MAX)


def test_weighted_single_clause_scale_free():
    va = Vocabulary(["a"])
    for weight in (1, 3, 99):
        w = from_weighted_sat([(Clause(positive={"a"}), weight)], va, Sense.MAX)
        assert optimal_models_domination(w, Sense.MAX) == [Interpretation(va, {"a"})]


def test_from_pw_sat_golden_samples():
    soft = [
        (Clause(positive={"a"}), 1),
        (Clause(positive={"b"}), 1),
        (Clause(positive={"a"}, negative={"b"}), 2),
    ]
    prob = PwProblem(VAB, tuple(XOR_CLAUSES), tuple(soft), sense=Sense.MAX)
    w = from_pw_sat(prob)
    assert enumerate_models(w) == [interp({"b"}), interp({"a"})]
    assert optimal_models_domination(w, Sense.MAX) == [interp({"a"})]
    assert optimal_models_domination(w, Sense.MIN) == [interp({"b"})]

    minprob = PwProblem(
        VAB, tuple(XOR_CLAUSES), ((Clause(positive={"b"}, negative={"a"}), 2),), sense=Sense.MIN
    )
    assert optimal_models_domination(from_pw_sat(minprob), Sense.MIN) == [interp({"a"})]


def test_pw_problem_validates_weights():
    with pytest.raises(ValueError):
        PwProblem(VAB, (), ((Clause(positive={"a"}), 0),))
    with pytest.raises(ValueError):
        PwProblem(VAB, (), ((Clause(positive={"a"}), -2),))


def test_pw_round_trip_bruteforce():
    # Optimal models of the encoding equal the direct argmax/argmin of the
    # weighted satisfied-clause sum over the hard models.
    for seed in range(30):
        prob = gen_pw(GenConfig(max_atoms=5, seed=seed))
        w = from_pw_sat(prob)
        models = _models_of(prob.hard, prob.vocabulary)
        assert enumerate_models(w) == models
        if not models:
            continue
        scores = {
            i: sum(wt for c, wt in prob.soft if eval_clause(i, c)) for i in models
        }
        for s in (Sense.MAX, Sense.MIN):
            best = max(scores.values()) if s is Sense.MAX else min(scores.values())
            expected = {i for i in models if scores[i] == best}
            assert set(optimal_models_domination(w, s)) == expected


def test_from_oprogram(weak_sample_oprogram):
    w = from_oprogram(weak_sample_oprogram)
    assert enumerate_models(w) == [interp({"b"}), interp({"a"})]
    assert optimal_models_domination(w, Sense.MIN) == [interp({"a"})]
    bare = from_oprogram(type(weak_sample_oprogram)(weak_sample_oprogram.program, ()))
    assert optimal_models_domination(bare, Sense.MIN) == enumerate_models(bare)


def test_from_oprogram_matches_pw_minsat(weak_sample_oprogram, pw_minsat_sample):
    got = optimal_models_domination(from_oprogram(weak_sample_oprogram), Sense.MIN)
    want = optimal_models_domination(pw_minsat_sample, Sense.MIN)
    assert got == want == [interp({"a"})]


def test_from_oprogram_corpus_matches_oracle():
    for seed in range(60):
        op = gen_oprogram(GenConfig(max_atoms=5, max_rules=5, max_conditions=4, seed=seed))
        got = set(optimal_models_domination(from_oprogram(op), Sense.MIN))
        assert got == oracle_optimal_answer_sets(op)


def test_desugar_minimize():
    out = desugar_minimize([(2, 1, "a", True)], "minimize")
    assert out == [WeakConstraint(WcBody(positive={"a"}), 2, 1)]
    out = desugar_minimize([(2, 1, "a", True)], "maximize")
    assert out == [WeakConstraint(WcBody(positive={"a"}), -2, 1)]
    assert desugar_minimize([], "minimize") == []
    out = desugar_minimize([(1, 2, "b", False)], "minimize")
    assert out == [WeakConstraint(WcBody(negative={"b"}), 1, 2)]
    with pytest.raises(ValueError):
        desugar_minimize([], "sideways")


# --------------------------------------------------------------------------
# MIN-ONE family


def test_min_one_examples():
    vabc = Vocabulary(["a", "b", "c"])
    w = min_one({Clause(positive={"a", "b", "c"})}, {"a", "b", "c"}, vabc)
    assert set(optimal_models_domination(w, Sense.MAX)) == {
        Interpretation(vabc, {"a"}),
        Interpretation(vabc, {"b"}),
        Interpretation(vabc, {"c"}),
    }
    w2 = min_one(XOR_CLAUSES, set(), VAB)
    assert optimal_models_domination(w2, Sense.MAX) == enumerate_models(w2)
    w3 = min_one(XOR_CLAUSES, {"a"}, VAB)
    assert optimal_models_domination(w3, Sense.MAX) == [interp({"b"})]


def test_min_one_achieves_minimum_cardinality():
    for seed in range(30):
        prob = gen_pw(GenConfig(max_atoms=6, seed=seed))
        sigma = prob.vocabulary
        if not len(sigma):
            continue
        xi = set(list(sigma.names)[:: 2])
        w = min_one(prob.hard, xi, sigma)
        models = _models_of(prob.hard, sigma)
        if not models:
            assert optimal_models_domination(w, Sense.MAX) == []
            continue
        best = min(len(i.members & xi) for i in models)
        expected = {i for i in models if len(i.members & xi) == best}
        assert set(optimal_models_domination(w, Sense.MAX)) == expected


def test_min_one_asp(even_loop_program):
    w = min_one_asp(even_loop_program, {"a"})
    assert optimal_models_domination(w, Sense.MAX) == [interp({"b"})]
    w2 = min_one_asp(even_loop_program, set())
    assert len(optimal_models_domination(w2, Sense.MAX)) == 2


def test_min_one_asp_agrees_with_min_one_on_equivalent_formula(even_loop_program):
    # F1's models coincide with the program's answer sets, so the two
    # problem encodings have identical optimal sets.
    w_asp = min_one_asp(even_loop_program, {"a"})
    w_sat = min_one(XOR_CLAUSES, {"a"}, VAB)
    assert optimal_models_domination(w_asp, Sense.MAX) == optimal_models_domination(
        w_sat, Sense.MAX
    ) == [interp({"b"})]


def _subset_minimal_intersections(models, xi):
    sections = {i: i.members & xi for i in models}
    return {
        i
        for i, sec in sections.items()
        if not any(other < sec for other in sections.values())
    }


def test_min_one_subset_frozen_example():
    w = min_one_subset({Clause(positive={"a", "b"})}, {"a", "b"}, ["a", "b"], VAB)
    assert optimal_models_domination(w, Sense.MAX) == [interp({"a"})]
    w2 = min_one_subset({Clause(positive={"a", "b"})}, {"a", "b"}, ["b", "a"], VAB)
    assert optimal_models_domination(w2, Sense.MAX) == [interp({"b"})]
    single = min_one_subset(XOR_CLAUSES, {"a"}, ["a"], VAB)
    assert optimal_models_domination(single, Sense.MAX) == optimal_models_domination(
        min_one(XOR_CLAUSES, {"a"}, VAB), Sense.MAX
    )
    with pytest.raises(ValueError):
        min_one_subset(XOR_CLAUSES, {"a", "b"}, ["a"], VAB)


def test_min_one_subset_soundness_exhaustive():
    # Every optimal model has subset-minimal intersection, whatever the
    # permutation.
    for seed in range(20):
        prob = gen_pw(GenConfig(max_atoms=4, seed=seed))
        sigma = prob.vocabulary
        if len(sigma) < 2:
            continue
        xi = set(list(sigma.names)[:2])
        models = _models_of(prob.hard, sigma)
        minimal = _subset_minimal_intersections(models, xi)
        for perm in permutations(sorted(xi)):
            w = min_one_subset(prob.hard, xi, list(perm), sigma)
            for opt in optimal_models_domination(w, Sense.MAX):
                assert opt in minimal


def test_min_one_subset_completeness_via_tailored_permutation():
    # Each subset-minimal solution is recovered by ordering its xi-atoms first.
    for seed in range(20):
        prob = gen_pw(GenConfig(max_atoms=4, seed=seed))
        sigma = prob.vocabulary
        if len(sigma) < 2:
            continue
        xi = set(list(sigma.names)[:3])
        models = _models_of(prob.hard, sigma)
        for sol in _subset_minimal_intersections(models, xi):
            inside = sorted(xi & sol.members)
            outside = sorted(xi - sol.members)
            perm = inside + outside
            w = min_one_subset(prob.hard, xi, perm, sigma)
            assert sol in optimal_models_domination(w, Sense.MAX)


# --------------------------------------------------------------------------
# DISTANCE-SAT family


def test_distance_sat_examples():
    f = {Clause(negative={"a", "b"})}
    ref = interp({"a", "b"})
    w = distance_sat(f, ref, VAB)
    assert set(optimal_models_domination(w, Sense.MAX)) == {interp({"a"}), interp({"b"})}
    # A reference that is itself a model is the unique optimum.
    w2 = distance_sat(XOR_CLAUSES, interp({"a"}), VAB)
    assert optimal_models_domination(w2, Sense.MAX) == [interp({"a"})]
    empty_sigma = Vocabulary([])
    w3 = distance_sat(set(), Interpretation(empty_sigma, set()), empty_sigma)
    assert optimal_models_domination(w3, Sense.MAX) == [Interpretation(empty_sigma, set())]


def test_distance_sat_minimizes_symmetric_difference():
    for seed in range(25):
        prob = gen_pw(GenConfig(max_atoms=5, seed=seed))
        sigma = prob.vocabulary
        if not len(sigma):
            continue
        ref = Interpretation(sigma, set(list(sigma.names)[::2]))
        w = distance_sat(prob.hard, ref, sigma)
        models = _models_of(prob.hard, sigma)
        if not models:
            continue
        dist = {i: len(i.members ^ ref.members) for i in models}
        best = min(dist.values())
        assert set(optimal_models_domination(w, Sense.MAX)) == {
            i for i in models if dist[i] == best
        }


def test_distance_sat_subset_frozen_example():
    f = {Clause(negative={"a", "b"})}
    ref = interp({"a", "b"})
    w = distance_sat_subset(f, ref, ["a", "b"], VAB)
    assert optimal_models_domination(w, Sense.MAX) == [interp({"b"})]
    w2 = distance_sat_subset(f, ref, ["b", "a"], VAB)
    assert optimal_models_domination(w2, Sense.MAX) == [interp({"a"})]
    w3 = distance_sat_subset(XOR_CLAUSES, interp({"a"}), ["a", "b"], VAB)
    assert optimal_models_domination(w3, Sense.MAX) == [interp({"a"})]


def test_distance_sat_subset_single_atom_reduces_to_distance_sat():
    va = Vocabulary(["a"])
    f = {Clause(positive={"a"})}
    ref = Interpretation(va, set())
    subset = distance_sat_subset(f, ref, ["a"], va)
    plain = distance_sat(f, ref, va)
    assert optimal_models_domination(subset, Sense.MAX) == optimal_models_domination(
        plain, Sense.MAX
    )


def test_distance_sat_subset_soundness():
    for seed in range(20):
        prob = gen_pw(GenConfig(max_atoms=4, seed=seed))
        sigma = prob.vocabulary
        if len(sigma) < 2:
            continue
        ref = Interpretation(sigma, set(list(sigma.names)[:1]))
        models = _models_of(prob.hard, sigma)
        diffs = {i: i.members ^ ref.members for i in models}
        minimal = {
            i for i, d in diffs.items() if not any(other < d for other in diffs.values())
        }
        for perm in permutations(sigma.names):
            w = distance_sat_subset(prob.hard, ref, list(perm), sigma)
            for opt in optimal_models_domination(w, Sense.MAX):
                assert opt in minimal


def test_min_one_asp_prop_corpus():
    # Whenever a formula's models coincide with a program's answer sets,
    # the two MIN-ONE encodings have identical optimal sets.
    from wsys import clausify, completion, is_tight
    from wsys.testkit import gen_oprogram

    checked = 0
    for seed in range(120):
        op = gen_oprogram(GenConfig(max_atoms=4, max_rules=4, seed=seed))
        if not is_tight(op.program):
            continue
        clauses, fresh = clausify(completion(op.program))
        if fresh:
            continue  # keep the formula over the program vocabulary
        checked += 1
        sigma = op.vocabulary
        xi = set(list(sigma.names)[::2])
        got_sat = optimal_models_domination(min_one(clauses, xi, sigma), Sense.MAX)
        got_asp = optimal_models_domination(min_one_asp(op.program, xi), Sense.MAX)
        assert got_sat == got_asp
    assert checked >= 40
