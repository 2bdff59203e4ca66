"""Landau-Ginzburg side: polar parts, pairing, bases, product, annihilator."""

import pytest

from wproj._rat import rat
from wproj.bmodel import (build_bmodel, gauge_to_flat_and_orb, jacobi_product,
                          monomial_product_oracle, qde_annihilation_check,
                          verify_bmodel)
from wproj.combinatorics import build_weight_data, spectrum_data
from wproj.connection import verify_pairing_flatness
from wproj.puiseux import PMatrix, Puiseux


def _pkg(weights):
    wd = build_weight_data(weights)
    sd = spectrum_data(wd)
    return build_bmodel(wd, sd)


def test_polar_part_1_2_2():
    bp = _pkg((1, 2, 2))
    five = Puiseux.const(5)
    for i in range(1, 5):
        assert bp.res_zero.rows[i][i - 1] == five
    assert bp.res_zero.rows[0][4] == Puiseux.term(rat(5, 16), x=1)


def test_polar_part_1_1():
    bp = _pkg((1, 1))
    assert bp.res_zero.rows[1][0] == Puiseux.const(2)
    assert bp.res_zero.rows[0][1] == Puiseux.term(2, x=1)


def test_flat_polar_1_2_2():
    bp = _pkg((1, 2, 2))
    sub = [bp.res_zero_flat.rows[i][i - 1] for i in range(1, 5)]
    assert sub == [Puiseux.const(5), Puiseux.const(5),
                   Puiseux.term(5, x=rat(1, 2)), Puiseux.const(5)]
    assert bp.res_zero_flat.rows[0][4] == \
        Puiseux.term(rat(5, 16), x=rat(1, 2))


def test_pairing_values():
    bp = _pkg((1, 2, 2))
    assert bp.pairing.rows[0][2] == Puiseux.term(rat(1, 4), theta=2)
    assert bp.pairing.rows[3][4] == Puiseux.term(rat(1, 64), theta=2, x=1)
    assert bp.pairing.rows[0][1] == Puiseux.zero()
    bp = _pkg((1, 1, 1))
    for k in range(3):
        assert bp.pairing.rows[k][2 - k] == Puiseux.term(1, theta=2)
    assert not any(e.variables() for _i, _j, e in bp.pairing.nonzero_entries())


def test_orb_pairing_block_value():
    # the deep antidiagonal picks up the weight product of its sector block
    bp = _pkg((1, 2, 2))
    assert bp.pairing_orb.rows[3][4] == Puiseux.term(rat(1, 4), theta=2)
    assert bp.pairing_orb.rows[0][2] == Puiseux.term(rat(1, 4), theta=2)


def test_residue_diagonal_identity():
    for weights in [(1, 2, 2), (1, 3), (1, 1, 2)]:
        bp = _pkg(weights)
        derived = (bp.grading - bp.res_inf) * rat(1, bp.wd.mu)
        assert derived == bp.res_base


def test_gauge_reaches_displayed_bases():
    for weights in [(1, 2, 2), (1, 1, 1), (1, 1, 3)]:
        flat_rep, orb_rep = gauge_to_flat_and_orb(_pkg(weights))
        assert flat_rep.ok, flat_rep.failures
        assert orb_rep.ok, orb_rep.failures


def test_jacobi_product_examples():
    wd = build_weight_data((1, 2, 2))
    sd = spectrum_data(wd)
    assert jacobi_product(wd, sd, 3, 4) == (Puiseux.term(rat(1, 16), x=1), 2)
    for j in range(5):
        assert jacobi_product(wd, sd, 0, j) == (Puiseux.const(1), j)
    wd = build_weight_data((1, 1))
    sd = spectrum_data(wd)
    assert jacobi_product(wd, sd, 1, 1) == (Puiseux.term(1, x=1), 0)
    with pytest.raises(ValueError):
        jacobi_product(wd, sd, 0, 5)


def test_monomial_oracle_matches_closed_form():
    for weights in [(1, 2, 2), (1, 3), (1, 1, 2), (1, 2, 3)]:
        wd = build_weight_data(weights)
        sd = spectrum_data(wd)
        bp = build_bmodel(wd, sd)
        for i in range(wd.mu):
            for j in range(wd.mu):
                assert monomial_product_oracle(wd, bp.monomials, i, j) == \
                    jacobi_product(wd, sd, i, j), (weights, i, j)


def test_qde_annihilation_examples():
    # mu = 3 with trivial weights: theta^3 (x nabla)^3 acting on e_0
    for weights in [(1, 1, 1), (1, 2, 2), (1, 1)]:
        wd = build_weight_data(weights)
        sd = spectrum_data(wd)
        bp = build_bmodel(wd, sd)
        rep = qde_annihilation_check(wd, sd, bp.res_zero)
        assert rep.ok, (weights, rep.failures)


def test_qde_product_sign():
    # the mu-fold product of the first-order factors sends e_0 to
    # (-1)^mu x/(w^w theta^mu) e_0; check the sign explicitly for odd mu
    wd = build_weight_data((1, 1, 1))
    sd = spectrum_data(wd)
    bp = build_bmodel(wd, sd)
    theta_inv = Puiseux.term(1, theta=-1)
    M = bp.res_zero * theta_inv * rat(-1, 3) + bp.res_base
    vec = [Puiseux.const(1), Puiseux.zero(), Puiseux.zero()]
    for ck in sd.c:
        applied = [sum((M.rows[i][k] * vec[k] for k in range(3)),
                       vec[i].dlog("x")) for i in range(3)]
        vec = [a - vec[i] * ck for i, a in enumerate(applied)]
    assert vec[0] == Puiseux.term(-1, x=1, theta=-3)
    assert vec[1] == vec[2] == Puiseux.zero()


def test_sign_flip_breaks_pairing_flatness():
    bp = _pkg((1, 2, 2))
    rows = [list(r) for r in bp.pairing.rows]
    rows[0][2] = -rows[0][2]
    broken = PMatrix(rows)
    assert not verify_pairing_flatness(bp.conn_canonical, broken, 2).ok


def test_full_suite_small():
    for weights in [(1, 1), (1, 1, 1), (1, 2, 2), (1, 3), (1, 1, 3)]:
        for rep in verify_bmodel(_pkg(weights)):
            assert rep.ok, (weights, rep.name, rep.failures)
