"""Elementary cobordism maps, tensor extension and surface evaluation."""

import itertools

import pytest

from vlinkhom.algebra import all_presets, preset, theory_from_triple
from vlinkhom.errors import DimensionMismatch
from vlinkhom.fields import GF2, QQ
from vlinkhom.tqft import (Cap, Cup, Cylinder, ExactLinearMap, Merge,
                           SingleCycle, Split, StateSpaceBasis, compose,
                           counit_matrix, elementary_map,
                           evaluate_closed_surface, phi_matrix, product_matrix,
                           tensor_extend, theta_matrix, unit_matrix)

Q = QQ.from_int


def q_theory(a=1, lam=0, mu=1):
    return theory_from_triple(Q(a), Q(lam), Q(mu))


def test_merge_row1_matrix():
    # x*x = 0 in row 1
    m = elementary_map(preset("manturov"), Merge())
    assert m.entry_map() == {(0, 0): 1, (1, 1): 1, (1, 2): 1}


def test_single_cycle_row1_zero_row7_theta():
    assert elementary_map(preset("manturov"), SingleCycle()).is_zero()
    m = elementary_map(preset("f2_row7"), SingleCycle())
    # theta = x, h = t = 0: 1 -> x, x -> x*x = 0
    assert m.entry_map() == {(1, 0): 1}


def test_single_cycle_twist_agnostic():
    # phi o (theta .) = (theta .) as matrices, for every preset
    for th in all_presets() + [q_theory(2, 1, 1)]:
        tmat = theta_matrix(th)
        assert phi_matrix(th).compose(tmat) == tmat
        assert tmat.compose(phi_matrix(th)) == tmat


def test_merge_double_twist_collapses():
    # phi o m o (phi (x) phi) = m
    for th in all_presets():
        assert elementary_map(th, Merge(twist_in=(1, 1), twist_out=1)) == \
            elementary_map(th, Merge())


def test_global_twist_flip_is_invisible():
    # flipping every twist bit leaves the matrix unchanged
    for th in all_presets():
        for ti in itertools.product((0, 1), repeat=2):
            for to in (0, 1):
                flipped = Merge(twist_in=(1 - ti[0], 1 - ti[1]), twist_out=1 - to)
                assert elementary_map(th, Merge(twist_in=ti, twist_out=to)) == \
                    elementary_map(th, flipped)
        for ti in (0, 1):
            for to in itertools.product((0, 1), repeat=2):
                flipped = Split(twist_in=1 - ti, twist_out=(1 - to[0], 1 - to[1]))
                assert elementary_map(th, Split(twist_in=ti, twist_out=to)) == \
                    elementary_map(th, flipped)


def test_cylinder_composition_is_identity():
    for th in all_presets():
        c = elementary_map(th, Cylinder())
        assert compose(c, c) == ExactLinearMap.identity(th.field, 2)
        tw = elementary_map(th, Cylinder(twist=1))
        assert compose(tw, tw) == ExactLinearMap.identity(th.field, 2)


def test_cup_cap_sphere():
    for th in all_presets() + [q_theory()]:
        sphere = compose(elementary_map(th, Cup()), elementary_map(th, Cap()))
        assert sphere.is_zero()


def test_tensor_extend_phi_on_first_of_two():
    th = preset("f2_row2")
    basis = StateSpaceBasis(("a", "b"))
    ext = tensor_extend(phi_matrix(th), 0, basis)
    expected = phi_matrix(th).kron(ExactLinearMap.identity(GF2, 2))
    assert ext == expected
    ext2 = tensor_extend(phi_matrix(th), 1, basis)
    assert ext2 == ExactLinearMap.identity(GF2, 2).kron(phi_matrix(th))


def test_tensor_extend_shape_mismatch():
    th = preset("manturov")
    with pytest.raises(DimensionMismatch):
        tensor_extend(product_matrix(th), 0, StateSpaceBasis(("a", "b")))


def test_compose_dimension_mismatch():
    th = preset("manturov")
    with pytest.raises(DimensionMismatch):
        compose(unit_matrix(th), unit_matrix(th))


def test_torus_from_elementary_pieces_any_twists():
    # cup o merge o split o cap evaluates to 2 for every twist assignment
    for th in all_presets() + [q_theory(1, 1, 1)]:
        F = th.field
        two = F.from_int(2)
        for ti, to in itertools.product(itertools.product((0, 1), repeat=2), repeat=2):
            torus = compose(
                elementary_map(th, Cup()),
                elementary_map(th, Merge(twist_in=ti, twist_out=0)),
                elementary_map(th, Split(twist_in=0, twist_out=to)),
                elementary_map(th, Cap()))
            value = torus.entry_map().get((0, 0), F.zero)
            assert value == two


# -- closed surfaces -----------------------------------------------------------

def test_sphere_and_torus_values():
    for th in all_presets():
        assert evaluate_closed_surface(th, 0, 0) == th.field.zero
        assert evaluate_closed_surface(th, 1, 0) == th.field.from_int(2)
    thq = q_theory(1, 0, 1)
    assert evaluate_closed_surface(thq, 0, 0) == Q(0)
    assert evaluate_closed_surface(thq, 1, 0) == Q(2)


def test_crosscap_value_row7():
    assert evaluate_closed_surface(preset("f2_row7"), 0, 1) == 1


def test_crosscap_normalization():
    # eps(H^g theta^k) = eps(H^(g+1) theta^(k-2)) for k >= 2
    theories = all_presets() + [q_theory(1, 0, 1), q_theory(2, 1, 1), q_theory(1, -1, 1)]
    for th in theories:
        for k in range(2, 7):
            for g in range(0, 4):
                assert evaluate_closed_surface(th, g, k) == \
                    evaluate_closed_surface(th, g + 1, k - 2), (th.name, g, k)


def test_klein_bottle_two_routes():
    # eps(theta^2) computed directly and through m(phi (x) Id)Delta(1)
    from vlinkhom.algebra import comultiply, counit, multiply_tensor2, phi_on_factor, unit
    for th in all_presets() + [q_theory(1, 2, 1)]:
        direct = evaluate_closed_surface(th, 0, 2)
        klein = counit(th, multiply_tensor2(
            th, phi_on_factor(th, comultiply(th, unit(th)), 0)))
        assert direct == klein


def test_counit_unit_matrices():
    th = q_theory(1, 0, 1)
    assert counit_matrix(th).entry_map() == {(0, 1): Q(1)}
    assert unit_matrix(th).entry_map() == {(0, 0): Q(1)}
