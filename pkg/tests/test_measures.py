import pytest

from idemkit.generate import (
    random_maxplus_density,
    random_maxtimes_density,
    random_meta,
    random_point_map,
    random_real_function,
    random_space,
    random_third,
    random_third_times,
    random_unit_function,
    trial_stream,
)
from idemkit.measures import (
    MaxPlusDensity,
    MaxTimesDensity,
    MetaDensity,
    MetaTimesDensity,
    check_associativity,
    check_associativity_times,
    check_unit_laws,
    check_unit_laws_times,
    density_close,
    density_from_functional,
    dirac,
    dirac_times,
    eval_measure,
    eval_measure_times,
    measure_multiplication,
    meta_pushforward,
    multiply,
    multiply_times,
    normalize_maxplus,
    normalize_maxtimes,
    pushforward,
    pushforward_times,
    times_close,
)
from idemkit.semiring import BOTTOM, is_bottom
from idemkit.spaces import (
    FiniteSpace,
    PointMap,
    RealFunction,
    UnitFunction,
    compose_maps,
    fn_max,
    fn_shift,
    unit_max,
    unit_scale,
)

AB = FiniteSpace(("a", "b"))
ABC = FiniteSpace(("a", "b", "c"))


def plus_density(**weights):
    return MaxPlusDensity(FiniteSpace(tuple(weights)), weights)


def test_density_constructor_rejects_unnormalized():
    with pytest.raises(ValueError):
        MaxPlusDensity(AB, {"a": -0.5, "b": -1.0})
    with pytest.raises(ValueError):
        MaxPlusDensity(AB, {"a": 0.5, "b": 0.0})
    with pytest.raises(ValueError):
        MaxPlusDensity(AB, {"a": BOTTOM, "b": BOTTOM})
    with pytest.raises(ValueError):
        MaxTimesDensity(AB, {"a": 0.5, "b": 0.2})


def test_normalize_helpers():
    f = normalize_maxplus(AB, {"a": -0.5, "b": -1.0})
    assert f.weights == {"a": 0.0, "b": -0.5}
    g = normalize_maxtimes(AB, {"a": 0.5, "b": 0.2})
    assert g.weights["a"] == 1.0 and abs(g.weights["b"] - 0.4) < 1e-15
    with pytest.raises(ValueError):
        normalize_maxplus(AB, {"a": BOTTOM, "b": BOTTOM})
    with pytest.raises(ValueError):
        normalize_maxtimes(AB, {"a": 0.0, "b": 0.0})


def test_eval_measure_examples():
    f = MaxPlusDensity(AB, {"a": 0.0, "b": -1.0})
    phi = RealFunction(AB, {"a": 2.0, "b": 5.0})
    assert eval_measure(f, phi) == 4.0
    assert eval_measure(dirac("a", AB), phi) == 2.0
    assert eval_measure(f, RealFunction.constant(AB, 0.0)) == 0.0


def test_eval_measure_times_examples():
    g = MaxTimesDensity(AB, {"a": 1.0, "b": 0.5})
    phi = UnitFunction(AB, {"a": 0.2, "b": 1.0})
    assert eval_measure_times(g, phi) == 0.5
    assert eval_measure_times(dirac_times("a", AB), phi) == 0.2
    assert eval_measure_times(g, UnitFunction.constant(AB, 1.0)) == 1.0


def test_eval_measure_space_mismatch():
    f = MaxPlusDensity(AB, {"a": 0.0, "b": -1.0})
    with pytest.raises(ValueError):
        eval_measure(f, RealFunction.constant(ABC, 0.0))


def test_eval_measure_is_an_idempotent_measure():
    # normalization, translation, and max-preservation on random instances
    for i in range(200):
        rng = trial_stream(101, i)
        space = random_space(rng, 6)
        f = random_maxplus_density(rng, space)
        phi = random_real_function(rng, space)
        psi = random_real_function(rng, space)
        lam = float(rng.uniform(-4.0, 4.0))
        assert abs(eval_measure(f, RealFunction.constant(space, 1.0)) - 1.0) <= 1e-12
        assert abs(eval_measure(f, fn_shift(phi, lam)) - (lam + eval_measure(f, phi))) <= 1e-12
        joined = eval_measure(f, fn_max(phi, psi))
        assert abs(joined - max(eval_measure(f, phi), eval_measure(f, psi))) <= 1e-12


def test_eval_measure_times_is_a_times_measure():
    for i in range(200):
        rng = trial_stream(102, i)
        space = random_space(rng, 6)
        g = random_maxtimes_density(rng, space)
        phi = random_unit_function(rng, space)
        psi = random_unit_function(rng, space)
        lam = float(rng.uniform(0.0, 1.0))
        assert abs(eval_measure_times(g, UnitFunction.constant(space, 1.0)) - 1.0) <= 1e-12
        assert (
            abs(eval_measure_times(g, unit_scale(phi, lam)) - lam * eval_measure_times(g, phi))
            <= 1e-12
        )
        joined = eval_measure_times(g, unit_max(phi, psi))
        assert (
            abs(joined - max(eval_measure_times(g, phi), eval_measure_times(g, psi))) <= 1e-12
        )


def test_density_from_functional_examples():
    f = MaxPlusDensity(AB, {"a": 0.0, "b": -1.0})
    recovered = density_from_functional(lambda phi: eval_measure(f, phi), AB, 10.0)
    assert recovered.weights == {"a": 0.0, "b": -1.0}

    d = dirac("a", AB)
    rd = density_from_functional(lambda phi: eval_measure(d, phi), AB, 10.0)
    assert rd.weights["a"] == 0.0 and is_bottom(rd.weights["b"])

    g = MaxPlusDensity(AB, {"a": 0.0, "b": BOTTOM})
    rg = density_from_functional(lambda phi: eval_measure(g, phi), AB, 10.0)
    assert is_bottom(rg.weights["b"])


def test_density_from_functional_rejects_bad_bound():
    with pytest.raises(ValueError):
        density_from_functional(lambda phi: 0.0, AB, 0.0)


def test_dirac_examples():
    d = dirac("a", AB)
    assert d.weights == {"a": 0.0, "b": BOTTOM}
    assert dirac_times("a", AB).weights == {"a": 1.0, "b": 0.0}
    with pytest.raises(ValueError):
        dirac("z", AB)
    g = PointMap(AB, ABC, {"a": "c", "b": "b"})
    assert density_close(pushforward(g, d), dirac("c", ABC), 0.0)


def test_pushforward_examples():
    src = FiniteSpace(("a", "b", "c"))
    tgt = FiniteSpace(("u", "v"))
    g = PointMap(src, tgt, {"a": "u", "b": "u", "c": "v"})
    f = MaxPlusDensity(src, {"a": 0.0, "b": -2.0, "c": -5.0})
    assert pushforward(g, f).weights == {"u": 0.0, "v": -5.0}

    wide = FiniteSpace(("u", "v", "w"))
    g2 = PointMap(src, wide, {"a": "u", "b": "u", "c": "v"})
    assert is_bottom(pushforward(g2, f).weights["w"])

    assert pushforward(PointMap.identity(src), f).weights == f.weights

    ft = MaxTimesDensity(src, {"a": 1.0, "b": 0.3, "c": 0.6})
    assert pushforward_times(g, ft).weights == {"u": 1.0, "v": 0.6}
    assert pushforward_times(g2, ft).weights["w"] == 0.0
    assert pushforward_times(PointMap.identity(src), ft).weights == ft.weights


def test_pushforward_rejects_invalid_map():
    f = MaxPlusDensity(AB, {"a": 0.0, "b": -1.0})
    broken = PointMap(AB, ABC, {"a": "c"})
    with pytest.raises(ValueError):
        pushforward(broken, f)


def test_multiply_examples():
    f1 = MaxPlusDensity(AB, {"a": 0.0, "b": BOTTOM})
    f2 = MaxPlusDensity(AB, {"a": BOTTOM, "b": 0.0})
    F = MetaDensity(((f1, 0.0), (f2, -1.0)))
    assert multiply(F).weights == {"a": 0.0, "b": -1.0}

    f = MaxPlusDensity(ABC, {"a": 0.0, "b": -0.25, "c": BOTTOM})
    assert multiply(MetaDensity(((f, 0.0),))).weights == f.weights

    unit_image = MetaDensity(
        tuple((dirac(x, ABC), w) for x, w in f.weights.items() if not is_bottom(w))
    )
    assert multiply(unit_image).weights == f.weights


def test_multiply_times_examples():
    g1 = MaxTimesDensity(AB, {"a": 1.0, "b": 0.0})
    g2 = MaxTimesDensity(AB, {"a": 0.0, "b": 1.0})
    F = MetaTimesDensity(((g1, 1.0), (g2, 0.5)))
    assert multiply_times(F).weights == {"a": 1.0, "b": 0.5}

    g = MaxTimesDensity(ABC, {"a": 1.0, "b": 0.25, "c": 0.0})
    assert multiply_times(MetaTimesDensity(((g, 1.0),))).weights == g.weights

    unit_image = MetaTimesDensity(
        tuple((dirac_times(x, ABC), w) for x, w in g.weights.items() if w > 0.0)
    )
    assert multiply_times(unit_image).weights == g.weights


def test_meta_constructor_contracts():
    f1 = MaxPlusDensity(AB, {"a": 0.0, "b": -1.0})
    f2 = MaxPlusDensity(AB, {"a": 0.0, "b": BOTTOM})
    # bottom-weight entries are dropped
    F = MetaDensity(((f1, 0.0), (f2, BOTTOM)))
    assert len(F.support) == 1
    # duplicates merge by max weight
    G = MetaDensity(((f1, -0.5), (f1, 0.0)))
    assert len(G.support) == 1 and G.support[0][1] == 0.0
    with pytest.raises(ValueError):
        MetaDensity(((f1, 0.5),))
    with pytest.raises(ValueError):
        MetaDensity(((f1, -0.5),))
    with pytest.raises(ValueError):
        MetaDensity(((f1, BOTTOM),))


def test_measure_multiplication_examples():
    f = MaxPlusDensity(AB, {"a": 0.0, "b": -0.75})
    N = MetaDensity(((f, 0.0),))
    assert density_close(measure_multiplication(N, 64.0), f, 1e-12)

    f1 = MaxPlusDensity(AB, {"a": 0.0, "b": BOTTOM})
    f2 = MaxPlusDensity(AB, {"a": BOTTOM, "b": 0.0})
    N2 = MetaDensity(((f1, 0.0), (f2, -1.0)))
    assert measure_multiplication(N2, 64.0).weights == {"a": 0.0, "b": -1.0}


def test_measure_multiplication_agrees_with_multiply():
    for i in range(100):
        rng = trial_stream(103, i)
        space = random_space(rng, 5)
        N = random_meta(rng, space)
        assert density_close(measure_multiplication(N, 64.0), multiply(N), 1e-9)


def test_unit_laws():
    assert check_unit_laws(dirac("a", AB), 1e-12)
    f = MaxPlusDensity(ABC, {"a": 0.0, "b": -1.0, "c": BOTTOM})
    assert check_unit_laws(f, 1e-12)
    for i in range(100):
        rng = trial_stream(104, i)
        space = random_space(rng, 6)
        assert check_unit_laws(random_maxplus_density(rng, space), 1e-12)
        assert check_unit_laws_times(random_maxtimes_density(rng, space), 1e-12)


def test_associativity_single_meta_reduces_to_unit_law():
    f = MaxPlusDensity(AB, {"a": 0.0, "b": -2.0})
    meta = MetaDensity(((f, 0.0),))
    from idemkit.measures import ThirdLevel

    assert check_associativity(ThirdLevel(((meta, 0.0),)), 1e-12)


def test_associativity_random():
    for i in range(100):
        rng = trial_stream(105, i)
        space = random_space(rng, 4)
        assert check_associativity(random_third(rng, space), 1e-9)
        assert check_associativity_times(random_third_times(rng, space), 1e-9)


def test_functoriality_random():
    for i in range(100):
        rng = trial_stream(106, i)
        X = random_space(rng, 5)
        Y = random_space(rng, 5)
        Z = random_space(rng, 5)
        f = random_maxplus_density(rng, X)
        h = random_point_map(rng, X, Y)
        g = random_point_map(rng, Y, Z)
        assert density_close(
            pushforward(compose_maps(g, h), f), pushforward(g, pushforward(h, f)), 1e-12
        )
        ft = random_maxtimes_density(rng, X)
        assert times_close(
            pushforward_times(compose_maps(g, h), ft),
            pushforward_times(g, pushforward_times(h, ft)),
            1e-12,
        )


def test_multiply_is_natural_in_the_map():
    for i in range(100):
        rng = trial_stream(107, i)
        X = random_space(rng, 5)
        Y = random_space(rng, 5)
        g = random_point_map(rng, X, Y)
        F = random_meta(rng, X)
        assert density_close(
            multiply(meta_pushforward(g, F)), pushforward(g, multiply(F)), 1e-9
        )
