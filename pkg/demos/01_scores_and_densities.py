"""Scores, the two semirings, and normalized densities.

A score is a real number or bottom (-inf).  Max plays the role of addition
and + the role of multiplication; on the unit interval the same structure
uses max and ordinary multiplication.  exp/log translate between the two.
"""

from idemkit import (
    BOTTOM,
    FiniteSpace,
    MaxPlusDensity,
    RealFunction,
    dirac,
    eval_measure,
    exp_bridge,
    log_bridge,
    normalize_maxplus,
    oplus,
    otimes,
)

# semiring arithmetic: bottom is neutral for max and absorbing for plus
print("max(-inf, 3)  =", oplus(BOTTOM, 3.0))
print("-inf + 3      =", otimes(BOTTOM, 3.0))
print("2 (x) 3       =", otimes(2.0, 3.0))  # scores multiply by adding

# the bridge sends [-inf, 0] onto [0, 1]
print("exp(-inf)     =", exp_bridge(BOTTOM))
print("exp(0)        =", exp_bridge(0.0))
print("log(0.5)      =", log_bridge(0.5))
print("round trip    =", exp_bridge(log_bridge(0.5)))

# a density is a weight profile peaking at exactly 0
space = FiniteSpace(("a", "b", "c"))
f = MaxPlusDensity(space, {"a": 0.0, "b": -1.0, "c": BOTTOM})
print("\ndensity:", f.weights)
print("support:", f.support())

# constructors refuse unnormalized weights; normalize_maxplus shifts the peak
g = normalize_maxplus(space, {"a": -2.0, "b": -3.0, "c": -7.5})
print("normalized:", g.weights)

# a density doubles as a measure: it assigns max(weight + value) to functions
phi = RealFunction(space, {"a": 2.0, "b": 5.0, "c": 100.0})
print("\nmeasure of phi:", eval_measure(f, phi))  # c is weighted -inf, so 100 is ignored
print("point mass at a:", eval_measure(dirac("a", space), phi))
