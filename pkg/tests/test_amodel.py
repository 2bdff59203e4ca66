"""Quantum-side matrices, pairings, gauge law and Picard equivariance."""

from wproj._rat import rat
from wproj.amodel import (build_amodel, connections, gauge_consistency_check,
                          picard_action_check, verify_amodel)
from wproj.combinatorics import build_weight_data, spectrum_data
from wproj.connection import verify_pairing_flatness
from wproj.puiseux import PMatrix, Puiseux


def _pkg(weights):
    wd = build_weight_data(weights)
    sd = spectrum_data(wd)
    return build_amodel(wd, sd)


def test_quantum_matrix_1_2_2_golden():
    ap = _pkg((1, 2, 2))
    q_half = Puiseux.term(rat(1, 4), q=rat(1, 2))
    one = Puiseux.const(1)
    zero = Puiseux.zero()
    expected = PMatrix([
        [zero, zero, zero, zero, q_half],
        [one, zero, zero, zero, zero],
        [zero, one, zero, zero, zero],
        [zero, zero, q_half, zero, zero],
        [zero, zero, zero, one, zero],
    ])
    assert ap.mult_sectors == expected


def test_quantum_matrix_at_zero_drops_two_rows():
    ap = _pkg((1, 2, 2))
    at0 = ap.mult_sectors.at_zero("q")
    nonzero = {(i, j) for i, j, _ in at0.nonzero_entries()}
    assert nonzero == {(1, 0), (2, 1), (4, 3)}


def test_quantum_matrix_1_1_1():
    ap = _pkg((1, 1, 1))
    assert ap.mult_sectors.rows[1][0] == Puiseux.const(1)
    assert ap.mult_sectors.rows[2][1] == Puiseux.const(1)
    assert ap.mult_sectors.rows[0][2] == Puiseux.term(1, q=1)


def test_power_matrix_corners():
    assert _pkg((1, 2, 2)).mult_powers.rows[0][4] == \
        Puiseux.term(rat(1, 16), q=1)
    assert _pkg((1, 1, 1)).mult_powers.rows[0][2] == Puiseux.term(1, q=1)
    assert _pkg((1, 3)).mult_powers.rows[0][3] == Puiseux.term(rat(1, 27), q=1)


def test_orbifold_degrees():
    ap = _pkg((1, 2, 2))
    assert ap.degrees == (rat(0), rat(2), rat(4), rat(1), rat(3))


def test_poincare_pairing_values():
    ap = _pkg((1, 2, 2))
    g = ap.pairing_sectors
    # <1, P^2> and <1_{1/2}, 1_{1/2}P> are 1/4; mixed sectors vanish
    assert g[0][2] == rat(1, 4)
    assert g[3][4] == rat(1, 4)
    assert g[1][3] == rat(0)
    g = _pkg((1, 1)).pairing_sectors
    assert g[0][1] == rat(1)
    assert g[0][0] == rat(0)


def test_power_pairing_values():
    ap = _pkg((1, 2, 2))
    assert ap.pairing_powers.rows[0][2] == Puiseux.term(rat(1, 4), theta=2)
    assert ap.pairing_powers.rows[3][4] == \
        Puiseux.term(rat(1, 64), theta=2, q=1)
    assert ap.pairing_powers.rows[1][3] == Puiseux.zero()
    ap = _pkg((1, 1, 1))
    assert ap.pairing_powers.rows[0][2] == Puiseux.term(1, theta=2)
    assert ap.pairing_powers.rows[1][1] == Puiseux.term(1, theta=2)


def test_gauge_consistency():
    for weights in [(1, 2, 2), (1, 1, 1), (1, 1, 2)]:
        assert gauge_consistency_check(_pkg(weights)).ok


def test_picard_phases():
    ap = _pkg((1, 2, 2))
    assert picard_action_check(ap, 1).ok
    ap = _pkg((1, 1, 1))
    for d in (1, 2, 3):
        assert picard_action_check(ap, d).ok
    assert picard_action_check(_pkg((1, 3)), 2).ok


def test_full_suite_small():
    for weights in [(1, 1), (1, 2, 2), (1, 1, 3), (1, 4)]:
        for rep in verify_amodel(_pkg(weights)):
            assert rep.ok, (weights, rep.name, rep.failures)


def test_corrupted_corner_breaks_pairing_flatness():
    wd = build_weight_data((1, 2, 2))
    sd = spectrum_data(wd)
    ap = build_amodel(wd, sd)
    rows = [list(r) for r in ap.mult_powers.rows]
    rows[0][-1] = rows[0][-1] * 2
    _sect, conn_powers = connections(wd, sd, ap.mult_sectors, PMatrix(rows))
    result = verify_pairing_flatness(conn_powers, ap.pairing_powers, wd.n)
    assert not result.ok
