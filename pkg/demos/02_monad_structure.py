"""The monad structure on densities: units, pushforwards, multiplication.

Densities over densities (meta densities) multiply down to densities; the
unit laws and associativity can be checked on any instance, and the same
multiplication can be recomputed through measure functionals as a
cross-check.
"""

from idemkit import (
    BOTTOM,
    FiniteSpace,
    MaxPlusDensity,
    MetaDensity,
    PointMap,
    check_associativity,
    check_unit_laws,
    density_from_functional,
    dirac,
    eval_measure,
    measure_multiplication,
    multiply,
    pushforward,
)
from idemkit.measures import ThirdLevel

space = FiniteSpace(("a", "b"))
f1 = MaxPlusDensity(space, {"a": 0.0, "b": BOTTOM})
f2 = MaxPlusDensity(space, {"a": BOTTOM, "b": 0.0})

# a meta density weights whole densities; multiplying collapses one level
F = MetaDensity(((f1, 0.0), (f2, -1.0)))
print("multiplied:", multiply(F).weights)  # {'a': 0.0, 'b': -1.0}

# the same collapse computed through probe functionals, no shared code
print("via probes:", measure_multiplication(F, bound=64.0).weights)

# unit laws: embedding f as a single pair, or as weighted point masses,
# multiplies back to f
f = MaxPlusDensity(space, {"a": 0.0, "b": -2.5})
print("unit laws hold:", check_unit_laws(f))

# associativity: a third-level element collapses the same way in both orders
G = ThirdLevel(((MetaDensity(((f1, 0.0), (f2, -1.0))), 0.0),
                (MetaDensity(((f2, 0.0),)), -0.5)))
print("associativity holds:", check_associativity(G))

# pushforward along a point map takes fiberwise maxima
target = FiniteSpace(("u", "v", "w"))
g = PointMap(space, target, {"a": "u", "b": "u"})
print("pushforward:", pushforward(g, f).weights)  # w gets an empty fiber -> -inf

# a measure functional can be turned back into its density by probing
oracle = lambda phi: eval_measure(f, phi)
print("recovered:", density_from_functional(oracle, space, bound=64.0).weights)
print("point mass:", dirac("a", space).weights)
