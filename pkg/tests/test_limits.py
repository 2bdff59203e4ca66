"""Limit structures: Jordan data, limit pairing, cup product, primitivity."""

from wproj._rat import rat
from wproj.bmodel import build_bmodel
from wproj.combinatorics import build_weight_data, spectrum_data
from wproj.limits import (build_limit, cup_table_sectors, jordan_analysis,
                          limit_cup, preprimitive_test, verify_limits)
from wproj.puiseux import Puiseux
from wproj.ratlin import rat_rank


def _lp(weights):
    wd = build_weight_data(weights)
    sd = spectrum_data(wd)
    return build_limit(wd, sd)


def test_jordan_blocks():
    assert jordan_analysis(spectrum_data(build_weight_data((1, 2, 2)))) == [3, 2]
    assert jordan_analysis(spectrum_data(build_weight_data((1, 1, 1, 1)))) == [4]
    assert jordan_analysis(spectrum_data(build_weight_data((1, 3)))) == [2, 1, 1]


def test_rank_oracle_matches_blocks():
    # ranks of powers of the nilpotent must follow the block profile
    lp = _lp((1, 2, 2))
    rows = [list(r) for r in lp.nilpotent]
    assert rat_rank(rows) == 3
    square = [[sum((rows[i][k] * rows[k][j] for k in range(5)), rat(0))
               for j in range(5)] for i in range(5)]
    assert rat_rank(square) == 1


def test_limit_pairing_values():
    lp = _lp((1, 2, 2))
    assert lp.pairing.rows[0][2] == Puiseux.term(rat(1, 4), theta=2)
    assert lp.pairing.rows[3][4] == Puiseux.term(rat(1, 64), theta=2)
    lp = _lp((1, 1, 1))
    for k in range(3):
        assert lp.pairing.rows[k][2 - k] == Puiseux.term(1, theta=2)


def test_cup_table_1_2_2_golden():
    # the full 5x5 table in the graded basis
    wd = build_weight_data((1, 2, 2))
    sd = spectrum_data(wd)
    cup = limit_cup(wd, sd)
    t = cup.table
    one = rat(1)
    assert t[0] == ((one, 0), (one, 1), (one, 2), (one, 3), (one, 4))
    assert t[1][1] == (one, 2) and t[1][2] is None
    assert t[1][3] == (one, 4) and t[1][4] is None
    assert t[2][2] is None and t[2][3] is None and t[2][4] is None
    assert t[3][3] == (rat(1, 16), 1)
    assert t[3][4] == (rat(1, 16), 2)
    assert t[4][4] is None


def test_cup_table_sectors_1_2_2_golden():
    # rewritten on the sector classes 1, P, P^2, 1_{1/2}, 1_{1/2}P the same
    # product has unit coefficients throughout
    wd = build_weight_data((1, 2, 2))
    sd = spectrum_data(wd)
    table = cup_table_sectors(wd, sd, limit_cup(wd, sd))
    one = rat(1)
    assert table[1][1] == (one, 2)          # P * P = P^2
    assert table[1][3] == (one, 4)          # P * 1_{1/2} = 1_{1/2}P
    assert table[3][3] == (one, 1)          # 1_{1/2} * 1_{1/2} = P
    assert table[3][4] == (one, 2)          # 1_{1/2} * 1_{1/2}P = P^2
    assert table[2][2] is None and table[4][4] is None
    assert table[1][4] is None and table[2][3] is None


def test_preprimitive_dichotomy():
    lp = _lp((1, 1, 1))
    rows = lp.res_zero.scalar_rows()
    assert preprimitive_test(rows, 0)
    lp = _lp((1, 2, 2))
    rows = lp.res_zero.scalar_rows()
    for e in range(5):
        assert not preprimitive_test(rows, e)


def test_full_suite_small():
    for weights in [(1, 1), (1, 1, 1), (1, 2, 2), (1, 3), (1, 1, 3), (1, 2, 3)]:
        wd = build_weight_data(weights)
        sd = spectrum_data(wd)
        lp = build_limit(wd, sd)
        bp = build_bmodel(wd, sd)
        for rep in verify_limits(lp, bp):
            assert rep.ok, (weights, rep.name, rep.failures)
