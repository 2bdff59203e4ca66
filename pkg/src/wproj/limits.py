"""Degeneration of the structures at the origin of the parameter line.

The graded pieces of the canonical filtration along x = 0 are governed
entirely by the c-sequence: the valuation of the k-th canonical section is
c_k, the induced nilpotent operator has the indicator matrix B with
B[i][i-1] = -1 exactly when c_i = c_{i-1}, and its Jordan blocks are the
maximal constant runs of the c-sequence.  The limit of the connection
residue is -mu*B, which must coincide with the flat-basis polar part
evaluated at x = 0.

On the graded space one also gets a limit pairing with constant rational
values and a cup product whose structure constants are switched on by the
additivity condition on the c-values; together they form a Frobenius algebra
isomorphic to the orbifold cohomology ring.  The pre-primitivity question
for the limit data is settled exactly through the nilpotency index.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ._rat import ZERO as R_ZERO, rat, to_rat
from .bmodel import BModelPackage, flat_residue
from .combinatorics import SpectrumData, WeightData
from .connection import report, verify_adjoint
from .puiseux import PMatrix, Puiseux
from .ratlin import (krylov_dimension, rat_det, rat_identity, rat_matmul,
                     rat_rank)


@dataclass(frozen=True)
class FrobeniusAlgebraData:
    """Structure constants of a graded product plus a pairing on the basis.

    ``table[i][j]`` is either None (the product vanishes) or a pair
    (coefficient, index) meaning coefficient times the index-th basis vector.
    """

    table: tuple
    pairing: tuple   # plain rational matrix
    degrees: tuple   # the alpha grading


@dataclass(frozen=True)
class LimitPackage:
    wd: WeightData
    sd: SpectrumData
    valuations: tuple
    nilpotent: tuple          # the indicator matrix B, rational rows
    res_zero: PMatrix         # -mu*B
    pairing: PMatrix          # theta^n valued, constant
    metric: tuple             # rational matrix, the theta^n coefficient
    cup: FrobeniusAlgebraData


def c_runs(sd: SpectrumData):
    """Lengths of the maximal constant runs of the c-sequence."""
    runs = []
    count = 0
    last = None
    for value in sd.c:
        if last is not None and value == last:
            count += 1
        else:
            if count:
                runs.append(count)
            count = 1
            last = value
    runs.append(count)
    return runs


def jordan_analysis(sd: SpectrumData):
    """Jordan block sizes of the limit nilpotent operator."""
    return sorted(c_runs(sd), reverse=True)


def nilpotent_matrix(sd: SpectrumData):
    mu = len(sd.c)
    rows = [[R_ZERO] * mu for _ in range(mu)]
    for i in range(1, mu):
        if sd.c[i] == sd.c[i - 1]:
            rows[i][i - 1] = rat(-1)
    return tuple(tuple(r) for r in rows)


def limit_pairing(wd: WeightData, sd: SpectrumData) -> PMatrix:
    """Constant limit pairing: theta^n/(w_1...w_n) on k+l = n for k <= n and
    theta^n/prod(w_i^(w_i+1)) on k+l = mu+n for k >= n+1."""
    mu, n = wd.mu, wd.n
    m1 = wd.m_first()
    deep = m1 * wd.w_pow_w()   # equals prod w_i^(w_i + 1)
    rows = [[Puiseux.zero()] * mu for _ in range(mu)]
    for k in range(mu):
        for ell in range(mu):
            if k <= n and k + ell == n:
                rows[k][ell] = Puiseux.term(rat(1, m1), theta=n)
            elif k >= n + 1 and k + ell == mu + n:
                rows[k][ell] = Puiseux.term(rat(1, deep), theta=n)
    return PMatrix(rows)


def limit_cup(wd: WeightData, sd: SpectrumData) -> FrobeniusAlgebraData:
    """Structure constants of the limit cup product.

    The (i,j) product is the (i+j)-th class when c_(i+j) = c_i + c_j, the
    (i+j-mu)-th class over w^w when the index wraps and 1 + c_(i+j-mu)
    = c_i + c_j, and zero otherwise.
    """
    mu = wd.mu
    c = sd.c
    table = []
    for i in range(mu):
        row = []
        for j in range(mu):
            if i + j <= mu - 1:
                row.append((rat(1), i + j) if c[i + j] == c[i] + c[j] else None)
            else:
                k = i + j - mu
                row.append((rat(1, wd.w_pow_w()), k)
                           if 1 + c[k] == c[i] + c[j] else None)
        table.append(tuple(row))
    metric = limit_metric(wd, sd)
    return FrobeniusAlgebraData(tuple(table), metric, sd.alpha)


def limit_metric(wd: WeightData, sd: SpectrumData):
    """The theta^n coefficient of the limit pairing as plain rationals."""
    S = limit_pairing(wd, sd)
    key = (wd.n, ())
    return tuple(tuple(S.rows[i][j].terms.get(key, R_ZERO)
                       for j in range(wd.mu)) for i in range(wd.mu))


def cup_table_sectors(wd: WeightData, sd: SpectrumData,
                      cup: FrobeniusAlgebraData):
    """The same product written on the sector basis classes.

    The k-th graded class equals s_k times the k-th sector class, so the
    structure constants pick up s_k/(s_i*s_j).
    """
    mu = wd.mu
    out = []
    for i in range(mu):
        row = []
        for j in range(mu):
            entry = cup.table[i][j]
            if entry is None:
                row.append(None)
            else:
                coeff, k = entry
                row.append((coeff * sd.scales[k] / (sd.scales[i] * sd.scales[j]),
                            k))
        out.append(tuple(row))
    return tuple(out)


def preprimitive_test(matrix_rows, index: int) -> bool:
    """Whether the iterates of the index-th unit vector span everything."""
    n = len(matrix_rows)
    vec = [rat(1) if i == index else R_ZERO for i in range(n)]
    return krylov_dimension(matrix_rows, vec) == n


def preprimitive_certificate(lp: LimitPackage):
    """Exact dichotomy for pre-primitive vectors of the limit operator.

    For a nilpotent operator the largest Krylov dimension over all vectors
    is the nilpotency index, i.e. the largest Jordan block.  So some vector
    is pre-primitive iff the largest constant run of the c-sequence is mu,
    which happens exactly in the manifold case mu = n+1.  The certificate
    verifies the nilpotency index by exact rank computations, sweeps all
    unit vectors, and corroborates with a seeded sample of random vectors.
    """
    wd = lp.wd
    mu = wd.mu
    blocks = jordan_analysis(lp.sd)
    largest = blocks[0]
    rows = [[to_rat(v) for v in row] for row in lp.res_zero.scalar_rows()]
    fails = []

    # nilpotency index equals the largest block: A^(largest) = 0, A^(largest-1) != 0
    power = rat_identity(mu)
    for _step in range(largest - 1):
        power = rat_matmul(rows, power)
    if largest > 1 and all(not v for row in power for v in row):
        fails.append("operator vanished before the largest block size")
    power = rat_matmul(rows, power)
    if any(v for row in power for v in row):
        fails.append("operator not nilpotent of index = largest block")

    exists = largest == mu
    if exists != (mu == wd.n + 1):
        fails.append("cyclic-vector certificate disagrees with mu = n+1")
    if preprimitive_test(rows, 0) != exists:
        fails.append("unit vector 0 disagrees with the certificate")
    if mu >= wd.n + 2:
        for e in range(mu):
            if preprimitive_test(rows, e):
                fails.append("unit vector %d is pre-primitive" % e)
        rng = random.Random(0)
        for _ in range(5):
            vec = [rat(rng.randint(-3, 3)) for _ in range(mu)]
            if krylov_dimension(rows, vec) == mu:
                fails.append("random vector %r is pre-primitive" % (vec,))
    return report("limits.preprimitive_dichotomy", fails)


def build_limit(wd: WeightData, sd: SpectrumData) -> LimitPackage:
    B = nilpotent_matrix(sd)
    res_zero = PMatrix.from_scalars([[-wd.mu * v for v in row] for row in B])
    cup = limit_cup(wd, sd)
    return LimitPackage(
        wd=wd, sd=sd,
        valuations=sd.c,
        nilpotent=B,
        res_zero=res_zero,
        pairing=limit_pairing(wd, sd),
        metric=cup.pairing,
        cup=cup,
    )


def _compose(cup, left, scale_left, k):
    """Product of (scale_left * class left) with class k, as (coeff, idx)."""
    entry = cup.table[left][k]
    if entry is None:
        return None
    coeff, idx = entry
    return scale_left * coeff, idx


def verify_limits(lp: LimitPackage, bp: BModelPackage):
    wd, sd = lp.wd, lp.sd
    mu, n = wd.mu, wd.n
    reports = []

    blocks = jordan_analysis(sd)
    fails = []
    if sum(blocks) != mu:
        fails.append("block sizes do not sum to mu")
    distinct_runs = len(c_runs(sd))
    if len(blocks) != distinct_runs:
        fails.append("number of blocks != number of runs")
    reports.append(report("limits.jordan_blocks", fails))

    # rank oracle: rank(B^p) must equal sum of max(size - p, 0)
    fails = []
    rows = [list(r) for r in lp.nilpotent]
    power = rat_identity(mu)
    for p in range(1, mu + 1):
        power = rat_matmul(power, rows)
        expected = sum(max(b - p, 0) for b in blocks)
        got = rat_rank(power)
        if got != expected:
            fails.append("rank(B^%d) = %d, expected %d" % (p, got, expected))
    reports.append(report("limits.jordan_rank_oracle", fails))

    flat_at_zero = flat_residue(wd, sd).at_zero("x")
    reports.append(report(
        "limits.residue_limit",
        [] if flat_at_zero == lp.res_zero else
        ["flat polar part at x=0 != -mu*B"]))

    fails = []
    if not rat_det(lp.metric):
        fails.append("limit pairing is degenerate")
    reports.append(report("limits.pairing_nondegenerate", fails))
    reports.append(verify_adjoint(lp.res_zero, lp.pairing, "self_adjoint",
                                  name="limits.pairing_adjoint_residue"))
    reports.append(verify_adjoint(PMatrix.diag(list(sd.alpha)), lp.pairing,
                                  "sum_to_scalar", total=rat(n),
                                  name="limits.pairing_adjoint_infinity"))

    # graded-piece oracle: on k+l = n read the constant coefficient of the
    # global pairing, on k+l = mu+n the coefficient of x
    fails = []
    for k in range(mu):
        for ell in range(mu):
            e = bp.pairing.rows[k][ell]
            got = e.coeff_of("x", 0) if k <= n else e.coeff_of("x", 1)
            if got != lp.pairing.rows[k][ell]:
                fails.append("graded coefficient (%d,%d) mismatch" % (k, ell))
    reports.append(report("limits.pairing_limit_of_global", fails))

    cup = lp.cup
    g = lp.metric
    fails = []
    for j in range(mu):
        if cup.table[0][j] != (rat(1), j):
            fails.append("unit law fails at %d" % j)
        for i in range(mu):
            if cup.table[i][j] != cup.table[j][i]:
                fails.append("not commutative at (%d,%d)" % (i, j))
            entry = cup.table[i][j]
            if entry is not None:
                _coeff, k = entry
                if sd.alpha[i] + sd.alpha[j] != sd.alpha[k]:
                    fails.append("grading violated at (%d,%d)" % (i, j))
    for i in range(mu):
        for j in range(mu):
            for k in range(mu):
                left = cup.table[i][j]
                lhs = None if left is None else _compose(cup, left[1], left[0], k)
                right = cup.table[j][k]
                rhs = None if right is None else _compose(cup, right[1],
                                                          right[0], i)
                if lhs != rhs:
                    fails.append("associativity fails at (%d,%d,%d)" % (i, j, k))
    # compatibility of the product with the metric
    for i in range(mu):
        for j in range(mu):
            for k in range(mu):
                left = cup.table[i][k]
                lhs = R_ZERO if left is None else left[0] * g[left[1]][j]
                right = cup.table[j][k]
                rhs = R_ZERO if right is None else right[0] * g[i][right[1]]
                if lhs != rhs:
                    fails.append("metric compatibility fails at (%d,%d,%d)"
                                 % (i, j, k))
    for i in range(mu):
        for j in range(mu):
            if g[i][j] and sd.alpha[i] + sd.alpha[j] != n:
                fails.append("metric not homogeneous at (%d,%d)" % (i, j))
    reports.append(report("limits.frobenius_algebra", fails))

    reports.append(preprimitive_certificate(lp))
    return reports
