"""Acceptance suite: one test per criterion, exact equality throughout.

Every criterion prints a single PASS/FAIL line; the time limits are part of
the criteria and are asserted against wall-clock measurements.
"""

import time

import pytest

from wproj._rat import rat
from wproj.cli import main
from wproj.combinatorics import (build_weight_data, c_sequence_oracle,
                                 enumerate_weight_tuples, spectrum_data,
                                 stepping_sequence)
from wproj.limits import cup_table_sectors, limit_cup
from wproj.puiseux import PMatrix, Puiseux
from wproj.report import render_json, run_checks, run_report

MU_MAX = 12


@pytest.fixture(scope="module")
def full_results():
    """Verdicts of the complete check suite for every tuple with mu <= 12."""
    results = {}
    start = time.perf_counter()
    for weights in enumerate_weight_tuples(MU_MAX):
        _packages, verdicts = run_checks(weights)
        results[weights] = verdicts
    elapsed = time.perf_counter() - start
    return results, elapsed


def _announce(number, ok, message):
    print("criterion %d %s: %s" % (number, "PASS" if ok else "FAIL", message))
    assert ok


def _subset_ok(results, prefixes):
    bad = []
    for weights, verdicts in results.items():
        for name, rep in verdicts.items():
            if name.startswith(prefixes) and not rep.ok:
                bad.append((weights, name, rep.failures[:2]))
    return bad


def test_criterion_1_golden_fixture():
    start = time.perf_counter()
    wd = build_weight_data((1, 2, 2))
    sd = spectrum_data(wd)

    assert sd.c == (rat(0), rat(0), rat(0), rat(1, 2), rat(1, 2))
    assert sd.alpha == (rat(0), rat(1), rat(2), rat(1, 2), rat(3, 2))

    from wproj.amodel import quantum_matrix_sectors
    q_half = Puiseux.term(rat(1, 4), q=rat(1, 2))
    one, zero = Puiseux.const(1), Puiseux.zero()
    expected_C = PMatrix([
        [zero, zero, zero, zero, q_half],
        [one, zero, zero, zero, zero],
        [zero, one, zero, zero, zero],
        [zero, zero, q_half, zero, zero],
        [zero, zero, zero, one, zero],
    ])
    assert quantum_matrix_sectors(wd, sd) == expected_C

    cup = limit_cup(wd, sd)
    one_r = rat(1)
    expected_graded = {
        (0, 0): (one_r, 0), (0, 1): (one_r, 1), (0, 2): (one_r, 2),
        (0, 3): (one_r, 3), (0, 4): (one_r, 4),
        (1, 1): (one_r, 2), (1, 2): None, (1, 3): (one_r, 4), (1, 4): None,
        (2, 2): None, (2, 3): None, (2, 4): None,
        (3, 3): (rat(1, 16), 1), (3, 4): (rat(1, 16), 2),
        (4, 4): None,
    }
    for (i, j), want in expected_graded.items():
        assert cup.table[i][j] == want, (i, j)
        assert cup.table[j][i] == want, (j, i)

    sector_table = cup_table_sectors(wd, sd, cup)
    expected_sectors = {
        (0, 0): (one_r, 0), (0, 1): (one_r, 1), (0, 2): (one_r, 2),
        (0, 3): (one_r, 3), (0, 4): (one_r, 4),
        (1, 1): (one_r, 2), (1, 2): None, (1, 3): (one_r, 4), (1, 4): None,
        (2, 2): None, (2, 3): None, (2, 4): None,
        (3, 3): (one_r, 1), (3, 4): (one_r, 2),
        (4, 4): None,
    }
    for (i, j), want in expected_sectors.items():
        assert sector_table[i][j] == want, (i, j)

    elapsed = time.perf_counter() - start
    _announce(1, elapsed < 1.0,
              "golden fixture (1,2,2) reproduced exactly in %.3fs" % elapsed)


def test_criterion_2_dual_oracle():
    start = time.perf_counter()
    count = 0
    for weights in enumerate_weight_tuples(MU_MAX):
        wd = build_weight_data(weights)
        _steps, _mins, c, _alpha = stepping_sequence(wd)
        assert c == c_sequence_oracle(wd), weights
        count += 1
    elapsed = time.perf_counter() - start
    _announce(2, elapsed < 5.0,
              "stepping recursion equals sorted multiset on %d tuples "
              "in %.2fs" % (count, elapsed))


def test_criterion_3_flatness_suite(full_results):
    results, elapsed = full_results
    bad = _subset_ok(results, (
        "amodel.flatness", "amodel.pairing_flatness",
        "bmodel.flatness", "bmodel.pairing_flatness",
        "bmodel.self_adjoint_residue", "bmodel.residue_infinity_sum",
        "unfolding.curvature",
        "limits.pairing_adjoint",
    ))
    ok = not bad and elapsed < 60.0
    _announce(3, ok,
              "curvature, pairing flatness and adjointness exact on %d "
              "tuples (full suite %.1fs)" % (len(results), elapsed)
              if not bad else "failures: %r" % bad[:3])


def test_criterion_4_mirror(full_results):
    results, _elapsed = full_results
    bad = _subset_ok(results, ("mirror.",))
    _announce(4, not bad,
              "mirror identification exact on %d tuples" % len(results)
              if not bad else "failures: %r" % bad[:3])


def test_criterion_5_qde():
    from wproj.bmodel import birkhoff_residue, qde_annihilation_check
    start = time.perf_counter()
    count = 0
    for weights in enumerate_weight_tuples(8):
        wd = build_weight_data(weights)
        sd = spectrum_data(wd)
        rep = qde_annihilation_check(wd, sd, birkhoff_residue(wd, sd))
        assert rep.ok, (weights, rep.failures)
        count += 1
    elapsed = time.perf_counter() - start
    _announce(5, elapsed < 30.0,
              "differential operator annihilates the first section on %d "
              "tuples in %.2fs" % (count, elapsed))


def test_criterion_6_limits(full_results):
    results, _elapsed = full_results
    bad = _subset_ok(results, ("limits.",))
    _announce(6, not bad,
              "Jordan blocks, limit pairing, Frobenius algebra and "
              "primitivity dichotomy exact on %d tuples" % len(results)
              if not bad else "failures: %r" % bad[:3])


def test_criterion_7_unfolding(full_results):
    results, _elapsed = full_results
    bad = _subset_ok(results, ("unfolding.",))
    manifold = [w for w in results if all(x == 1 for x in w) and sum(w) <= 6]
    for w in manifold:
        assert "unfolding.manifold_potential" in results[w]
    _announce(7, not bad,
              "unfolding identity suite and potential exact on %d tuples "
              "(closed form checked on %d manifold cases)"
              % (len(results), len(manifold))
              if not bad else "failures: %r" % bad[:3])


def test_criterion_8_log_degeneracy(full_results):
    results, _elapsed = full_results
    bad = _subset_ok(results, ("log.",))
    _announce(8, not bad,
              "boundary rank n+1 and nondegeneracy dichotomy on %d tuples"
              % len(results) if not bad else "failures: %r" % bad[:3])


def test_criterion_9_determinism(full_results, capsys):
    results, _elapsed = full_results
    first = render_json(run_report((1, 2, 2)))
    second = render_json(run_report((1, 2, 2)))
    assert first == second
    all_ok = all(rep.ok for verdicts in results.values()
                 for rep in verdicts.values())
    assert all_ok
    exit_code = main(["--sweep", str(MU_MAX)])
    capsys.readouterr()
    with capsys.disabled():
        _announce(9, exit_code == 0 and first == second,
                  "byte-identical reports and sweep exit code 0 at mu <= %d"
                  % MU_MAX)
