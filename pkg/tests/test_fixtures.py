from fractions import Fraction as F

from meshpoly import INF, ClassSpec, class_membership, mesh_numeric
from meshpoly.fixtures import derive_rng, gen_fixture, gen_rooted, rand_fraction


def test_derive_rng_is_keyed_and_stable():
    a = derive_rng(7, "layer", 3).random()
    b = derive_rng(7, "layer", 3).random()
    c = derive_rng(7, "layer", 4).random()
    d = derive_rng(8, "layer", 3).random()
    assert a == b
    assert a != c and a != d


def test_rand_fraction_bounds():
    rng = derive_rng(1, "rf")
    for _ in range(200):
        v = rand_fraction(rng, F(-2), F(3))
        assert F(-2) <= v <= F(3)
        assert v.denominator in (1, 2, 3, 4, 6, 8)


def test_gen_rooted_respects_spec():
    for t in range(40):
        rng = derive_rng(11, "gr", t)
        spec = [ClassSpec.hyperbolic(), ClassSpec.hp_ge(1),
                ClassSpec.hp_plus_ge(F(1, 2))][t % 3]
        fx = gen_rooted(spec, 1 + t % 5, rng)
        assert class_membership(fx.poly, spec)
        assert fx.poly.degree == 1 + t % 5
        assert len(fx.roots) == fx.poly.degree
        for r in fx.roots:
            assert fx.poly.evaluate(r) == 0


def test_exact_mesh_matches_numeric():
    rng = derive_rng(3, "mesh")
    for t in range(20):
        fx = gen_rooted(ClassSpec.hp_ge(1), 4, rng)
        rep = mesh_numeric(fx.poly)
        assert rep.exact_value == fx.exact_mesh
        assert fx.exact_mesh >= 1
        assert fx.min_root == min(fx.roots)


def test_gen_fixture_is_deterministic():
    p = gen_fixture(ClassSpec.hp_ge(1), 5, derive_rng(9, "det"))
    q = gen_fixture(ClassSpec.hp_ge(1), 5, derive_rng(9, "det"))
    assert p == q


def test_degree_zero_fixture():
    fx = gen_rooted(ClassSpec.hyperbolic(), 0, derive_rng(2, "c"))
    assert fx.poly.degree == 0
    assert fx.roots == ()
    assert fx.exact_mesh == INF
    assert gen_rooted(ClassSpec.hp_ge(1), 1, derive_rng(0, "one")).exact_mesh == INF
