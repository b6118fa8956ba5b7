#!/usr/bin/env python3
"""Walk the rewrite catalog on one leveled system, printing the system after
every step and verifying that the optimal sets never move.
"""

from wsys import (
    Sense,
    drop_zero_weights,
    eliminate_sign,
    flatten_levels,
    flip_single_condition,
    negate_all_weights,
    normalize_levels,
    optimal_models_domination,
    parse_wsystem,
    scale_weights,
    write_wsystem,
)
from wsys.transforms import level_factors

TEXT = """\
vocab a b
hard sat { a | b. -a | -b. }
soft clause (a) [1@2]
soft clause (a | -b) [2@2]
soft clause (b) [-1@6]
soft clause (-a | b) [0@2]
"""

system = parse_wsystem(TEXT)
reference = {s: optimal_models_domination(system, s) for s in (Sense.MAX, Sense.MIN)}
print("start:")
print(write_wsystem(system))
print("optimal max/min:", reference[Sense.MAX], reference[Sense.MIN])


def step(name, fn, swap=False):
    global system
    system = fn(system)
    print(f"-- after {name} --")
    print(write_wsystem(system))
    for s in (Sense.MAX, Sense.MIN):
        want = reference[
            (Sense.MIN if s is Sense.MAX else Sense.MAX) if swap else s
        ]
        got = optimal_models_domination(system, s)
        assert got == want, (name, s, got, want)


step("drop_zero_weights", drop_zero_weights)
step("scale_weights by 3", lambda w: scale_weights(w, 3))
step("normalize_levels", normalize_levels)
step("eliminate_sign keeping max", lambda w: eliminate_sign(w, Sense.MAX))

factors = level_factors(system)
print("flattening factors: M =", factors.M, " f =", factors.f)
step("flatten_levels", flatten_levels)

step("flip_single_condition s0", lambda w: flip_single_condition(w, "s0"))
step("negate_all_weights (swaps the two optima)", negate_all_weights, swap=True)

print("every rewrite preserved the optimal sets")
