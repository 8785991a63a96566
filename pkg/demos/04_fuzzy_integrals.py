"""Capacities, possibility profiles, and the max-plus fuzzy integral.

A capacity scores subsets monotonically between 0 and 1.  The max-plus
integral of a function sweeps its level sets: max over thresholds t of
log(capacity of {phi >= t}) + t.  For maxitive (possibility) capacities the
same value comes out of a one-line pointwise formula.
"""

import numpy as np

from idemkit import (
    FiniteSpace,
    MetaPossibility,
    PossibilityProfile,
    RealFunction,
    capacity_from_profile,
    check_characterization,
    check_repr,
    integral_functional,
    is_possibility,
    maxplus_integral,
    possibility_integral,
    possibility_mult,
    recover_capacity,
    shilkret_integral,
)

space = FiniteSpace(("a", "b", "c"))
pi = PossibilityProfile(space, {"a": 1.0, "b": 0.5, "c": 0.1})
c = capacity_from_profile(pi)

print("capacity of {b,c}:", c.value({"b", "c"}))
print("maxitive:", is_possibility(c))

# the worked integral: candidates 0, 1 + ln(.5), 2 + ln(.1); the middle wins
phi = RealFunction(space, {"a": 0.0, "b": 1.0, "c": 2.0})
print("level-set form:", maxplus_integral(c, phi))
print("pointwise form:", possibility_integral(pi, phi))
print("the two agree :", check_repr(pi, phi))

# on exp scale the same integral is a product-threshold integral
print("exp(integral) :", np.exp(maxplus_integral(c, phi)))
print("product form  :", shilkret_integral(c, phi))

# integral functionals are normalized, translation-affine, and maxitive on
# comonotone pairs; the battery probes all three
report = check_characterization(integral_functional(c), space, trials=100, seed=0)
print("characterized :", report.passed)

# a summing functional is not an integral of this kind and gets a witness
broken = check_characterization(lambda g: sum(g.values.values()), space, trials=100, seed=0)
print("sum rejected  :", [o.name for o in broken.failing()])

# the capacity itself can be read back off the functional
recovered = recover_capacity(integral_functional(c), space, bound=40.0)
print("recovery error:", float(np.max(np.abs(recovered.table - c.table))))

# possibility capacities over possibility capacities multiply in closed form
pi2 = PossibilityProfile(space, {"a": 0.0, "b": 1.0, "c": 0.4})
C = MetaPossibility(((pi, 1.0), (pi2, 0.5)))
print("multiplied    :", possibility_mult(C).singletons)
