"""Exhaustive model enumeration and both formulations of optimal-model
computation (pairwise domination and per-level recursion), each usable as
a cross-check for the other.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import CapExceededError
from .logics import all_interpretations, satisfies, weighted_eval
from .model import (
    Interpretation,
    WSystem,
    canonical_order,
    level_slice,
    levels,
)

DEFAULT_MAX_VARS = 24


class Sense(enum.Enum):
    MAX = "max"
    MIN = "min"


@dataclass(frozen=True)
class SolveReport:
    models: tuple
    optimal: tuple
    per_level_sums: tuple  # one {level: sum} dict per optimal model


def enumerate_models(w: WSystem, max_vars: int = DEFAULT_MAX_VARS, workers: int = 1):
    """All models of the hard part, in canonical interpretation order.

    Depends only on w.hard; the soft part never constrains modelhood.
    Instances with more than max_vars atoms are refused.
    """
    sigma = w.vocabulary
    if len(sigma) > max_vars:
        raise CapExceededError(len(sigma), max_vars)
    modules = w.hard.modules

    def is_model(i: Interpretation) -> bool:
        return all(satisfies(i, t) for t in modules)

    candidates = list(all_interpretations(sigma))
    if workers <= 1 or len(candidates) < 64:
        return [i for i in candidates if is_model(i)]

    # Partition the space; results merge into the same canonical order
    # regardless of worker count.
    chunks = [candidates[k::workers] for k in range(workers)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(lambda chunk: [i for i in chunk if is_model(i)], chunks)
    found = [i for part in parts for i in part]
    return canonical_order(found)


def level_sums(w: WSystem, i: Interpretation) -> dict:
    """Per-level totals of the w-condition mapping for one model."""
    sums = {l: 0 for l in levels(w)}
    for b in w.soft:
        sums[b.level] += weighted_eval(i, b)
    return sums


def dominates(w: WSystem, i2: Interpretation, i1: Interpretation, s: Sense) -> bool:
    """Whether i2 dominates i1: some level where i2's sum is strictly better
    (less for MIN, greater for MAX) while every greater level ties."""
    s1 = level_sums(w, i1)
    s2 = level_sums(w, i2)
    return _dominates_sums(s2, s1, levels(w), s)


def _dominates_sums(sums2, sums1, lvls, s: Sense) -> bool:
    for idx, l in enumerate(lvls):
        if any(sums2[l2] != sums1[l2] for l2 in lvls[idx + 1 :]):
            continue
        if s is Sense.MIN and sums2[l] < sums1[l]:
            return True
        if s is Sense.MAX and sums2[l] > sums1[l]:
            return True
    return False


def optimal_models_domination(
    w: WSystem, s: Sense, max_vars: int = DEFAULT_MAX_VARS, workers: int = 1
):
    """Models that no other model dominates (the pairwise definition)."""
    models = enumerate_models(w, max_vars=max_vars, workers=workers)
    lvls = levels(w)
    sums = [level_sums(w, m) for m in models]
    out = []
    for i, m in enumerate(models):
        if not any(
            _dominates_sums(sums[j], sums[i], lvls, s)
            for j in range(len(models))
            if j != i
        ):
            out.append(m)
    return out


def l_optimal_models(
    w: WSystem, l: int, s: Sense, max_vars: int = DEFAULT_MAX_VARS, workers: int = 1
):
    """The level-l optimum set: argbest of the level-l sum over all models at
    the greatest level, and over the next level's optimum set below it."""
    lvls = levels(w)
    if l not in lvls:
        raise ValueError(f"level {l} is not a level of the system (levels: {lvls})")
    models = enumerate_models(w, max_vars=max_vars, workers=workers)
    memo = {}
    candidates = models
    for lvl in reversed(lvls):
        candidates = _argbest(w, lvl, candidates, s)
        memo[lvl] = candidates
        if lvl == l:
            break
    return memo[l]


def _argbest(w: WSystem, lvl: int, candidates, s: Sense):
    if not candidates:
        return []
    conds = level_slice(w, lvl)
    scored = [(sum(weighted_eval(m, b) for b in conds), m) for m in candidates]
    best = max(v for v, _ in scored) if s is Sense.MAX else min(v for v, _ in scored)
    return [m for v, m in scored if v == best]


def optimal_models_recursive(
    w: WSystem, s: Sense, max_vars: int = DEFAULT_MAX_VARS, workers: int = 1
):
    """Models that are l-optimal at every level; all models when no levels
    exist. Equals the least-level optimum set."""
    lvls = levels(w)
    if not lvls:
        return enumerate_models(w, max_vars=max_vars, workers=workers)
    return l_optimal_models(w, lvls[0], s, max_vars=max_vars, workers=workers)


def optimal_models(
    w: WSystem, s: Sense, max_vars: int = DEFAULT_MAX_VARS, workers: int = 1
):
    return optimal_models_domination(w, s, max_vars=max_vars, workers=workers)


def solve_report(
    w: WSystem, s: Sense, max_vars: int = DEFAULT_MAX_VARS, workers: int = 1
) -> SolveReport:
    models = enumerate_models(w, max_vars=max_vars, workers=workers)
    lvls = levels(w)
    sums = [level_sums(w, m) for m in models]
    optimal = [
        m
        for i, m in enumerate(models)
        if not any(
            _dominates_sums(sums[j], sums[i], lvls, s)
            for j in range(len(models))
            if j != i
        )
    ]
    opt_sums = tuple(level_sums(w, m) for m in optimal)
    return SolveReport(tuple(models), tuple(optimal), opt_sums)
