"""The two sides agree entry for entry under q -> x."""

from dataclasses import replace

from wproj._rat import rat
from wproj.amodel import build_amodel, connections
from wproj.bmodel import build_bmodel
from wproj.combinatorics import build_weight_data, spectrum_data
from wproj.mirror import (quantum_power_product, verify_mirror,
                          verify_product_mirror)
from wproj.puiseux import PMatrix, Puiseux


def _pair(weights):
    wd = build_weight_data(weights)
    sd = spectrum_data(wd)
    return build_amodel(wd, sd), build_bmodel(wd, sd)


def test_mirror_examples():
    for weights in [(1, 2, 2), (1, 1, 1), (1, 3), (1, 1, 2, 3)]:
        ap, bp = _pair(weights)
        for rep in verify_mirror(ap, bp):
            assert rep.ok, (weights, rep.name, rep.failures)
        assert verify_product_mirror(ap, bp).ok


def test_product_rule_values():
    # wrap at (4,4): i+j = 8 lands on class 3 with coefficient q/16
    wd = build_weight_data((1, 2, 2))
    assert quantum_power_product(wd, 4, 4) == \
        (Puiseux.term(rat(1, 16), q=1), 3)
    assert quantum_power_product(wd, 0, 3) == (Puiseux.const(1), 3)
    # (1,3) at (2,3): i+j = 5 >= mu = 4, coefficient q/27
    wd13 = build_weight_data((1, 3))
    assert quantum_power_product(wd13, 2, 3) == \
        (Puiseux.term(rat(1, 27), q=1), 1)


def test_corrupted_corner_detected():
    wd = build_weight_data((1, 2, 2))
    sd = spectrum_data(wd)
    ap = build_amodel(wd, sd)
    bp = build_bmodel(wd, sd)
    rows = [list(r) for r in ap.mult_powers.rows]
    rows[0][-1] = rows[0][-1] * 2
    corrupted = PMatrix(rows)
    _sect, conn_powers = connections(wd, sd, ap.mult_sectors, corrupted)
    bad = replace(ap, mult_powers=corrupted, conn_powers=conn_powers)
    reports = {r.name: r for r in verify_mirror(bad, bp)}
    base = reports["mirror.connection_base"]
    assert not base.ok
    assert "(0,4)" in base.failures[0]


def test_global_rescale_invariance():
    # scaling the comparison map by 3 scales both pairings by 9 and leaves
    # the connection matrices alone: every check still passes
    ap, bp = _pair((1, 2, 2))
    scale = Puiseux.const(9)
    ap9 = replace(ap, pairing_powers=ap.pairing_powers * scale)
    bp9 = replace(bp, pairing=bp.pairing * scale)
    for rep in verify_mirror(ap9, bp9):
        assert rep.ok, (rep.name, rep.failures)
    # scaling only one side must be caught
    reports = {r.name: r for r in verify_mirror(ap9, bp)}
    assert not reports["mirror.pairing"].ok
