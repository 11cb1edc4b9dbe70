"""Class membership, proper position, and the quadratic shortcut."""

from fractions import Fraction as F

import pytest

from meshpoly import (
    ClassSpec,
    Polynomial,
    class_membership,
    negativity_point,
    nonneg_on_reals,
    proper_position,
    quadratic_hp1plus,
    wronskian,
)


def test_class_spec_labels():
    assert ClassSpec.hyperbolic().label == "HP"
    assert ClassSpec.hp_ge(1).label == "HP>=1"
    assert ClassSpec.hp_ge(F(1, 2)).label == "HP>=1/2"
    assert ClassSpec.hp_plus_ge(1).label == "HP+>=1"


def test_class_membership_mesh_and_sign():
    p = Polynomial.from_roots([0, 2, 4])
    assert class_membership(p, ClassSpec.hyperbolic())
    assert class_membership(p, ClassSpec.hp_ge(2))
    assert not class_membership(p, ClassSpec.hp_ge(3))
    assert class_membership(p, ClassSpec.hp_plus_ge(2))
    # one negative root breaks the nonnegativity requirement only
    q = Polynomial.from_roots([-1, 1])
    assert class_membership(q, ClassSpec.hp_ge(2))
    assert not class_membership(q, ClassSpec.hp_plus_ge(2))
    assert not class_membership(Polynomial([1, 0, 1]), ClassSpec.hyperbolic())


def test_class_membership_low_degree():
    # degree <= 1 never constrains the mesh
    assert class_membership(Polynomial([5]), ClassSpec.hp_ge(100))
    assert class_membership(Polynomial([0, 1]), ClassSpec.hp_plus_ge(3))
    assert not class_membership(Polynomial([1, 1]), ClassSpec.hp_plus_ge(1))  # root -1
    with pytest.raises(ValueError):
        class_membership(Polynomial([]), ClassSpec.hyperbolic())


def test_proper_position_shift_characterization():
    # mesh >= alpha iff p sits properly left of its right-shift by alpha
    p = Polynomial.from_roots([0, 2, 4])
    assert proper_position(p, p.shift(2)).holds
    assert not proper_position(p, p.shift(F(5, 2))).holds
    v = proper_position(Polynomial.from_roots([0, 2]), Polynomial.from_roots([1, 3]))
    assert v.holds and v.interlaces and v.wronskian_nonneg


def test_proper_position_failure_modes():
    # same roots reversed: interlacing order flips
    v = proper_position(Polynomial.from_roots([1, 3]), Polynomial.from_roots([0, 2]))
    assert not v.holds
    assert v.failure_witness is not None


def test_wronskian_sign():
    p = Polynomial.from_roots([0, 2])
    q = Polynomial.from_roots([1, 3])
    w = wronskian(p, q)
    assert nonneg_on_reals(w)
    assert negativity_point(wronskian(q, p)) is not None


def test_quadratic_shortcut_matches_membership():
    # A y(y-1) - 2 B y + C with A > 0, B, C >= 0
    cases = [(1, 0, 0), (1, 1, 0), (2, 1, 1), (1, 0, 1), (3, 2, 5), (1, 5, 1)]
    for A, B, C in cases:
        q = Polynomial([C, -2 * B - A, A])
        assert quadratic_hp1plus(A, B, C) == class_membership(q, ClassSpec.hp_plus_ge(1))


def test_quadratic_shortcut_boundary():
    # AC = B^2 + AB is the extreme case: double root, mesh 0 < 1 unless B = C = 0
    assert quadratic_hp1plus(1, 0, 0)
    assert not quadratic_hp1plus(1, 1, 3)  # AC - B^2 - AB = 1 > 0
    assert quadratic_hp1plus(1, 1, 2)  # = 0: roots split by at least 1
