"""The mu-parameter unfolding of the limit structure and its potential.

The constant matrices C_0, ..., C_(mu-1) are minus the multiplication
operators of the limit cup algebra; the unfolded polar part is affine in the
deformation coordinates x_0, ..., x_(mu-1) (the coordinate x_1 stays
implicit in the constant term).  The module checks the complete flatness
identity suite, the curvature of the unfolded connection as an exact
polynomial identity, the total symmetry of the potential coefficients
c_ijk = g(C_i C_j e_0, e_k), the Euler field, and in the all-ones case the
closed cubic form of the potential.

It also carries the boundary checks of the x = 0 (and q = 0) structure:
the pairings drop rank to n+1 there, so the metric survives the limit only
in the manifold case, while the generation and injectivity conditions for
the canonical section hold for every weight vector.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._rat import ZERO as R_ZERO, rat
from .amodel import AModelPackage
from .bmodel import BModelPackage
from .combinatorics import SpectrumData, WeightData
from .connection import (Connection, Variable, report, verify_adjoint,
                         verify_flatness)
from .limits import LimitPackage
from .puiseux import PMatrix, Puiseux
from .ratlin import krylov_dimension, rat_rank


def _xvar(i: int) -> str:
    return "x%d" % i


def unfolding_matrices(wd: WeightData, sd: SpectrumData):
    """The constant matrices C_i: C_i e_j = -(1/w^w) e_(i+j-mu) under the
    wrapped additivity condition, -e_(i+j) under the plain one, else 0."""
    mu = wd.mu
    c = sd.c
    out = []
    for i in range(mu):
        rows = [[Puiseux.zero()] * mu for _ in range(mu)]
        for j in range(mu):
            if i + j <= mu - 1:
                if c[i + j] == c[i] + c[j]:
                    rows[i + j][j] = Puiseux.const(-1)
            else:
                k = i + j - mu
                if 1 + c[k] == c[i] + c[j]:
                    rows[k][j] = Puiseux.const(rat(-1, wd.w_pow_w()))
        out.append(PMatrix(rows))
    return tuple(out)


def a_tilde(wd: WeightData, sd: SpectrumData, higgs) -> PMatrix:
    """(alpha_0 - 1) x_0 C_0 - mu C_1 + sum_(i>=2) (alpha_i - 1) x_i C_i."""
    mu = wd.mu
    total = higgs[1] * rat(-mu)
    for i in range(mu):
        if i == 1:
            continue
        scale = Puiseux.term(sd.alpha[i] - 1, **{_xvar(i): 1})
        total = total + higgs[i] * scale
    return total


def unfolded_connection(wd: WeightData, sd: SpectrumData, higgs,
                        res_zero: PMatrix) -> Connection:
    """(res_zero(x)/theta + diag(alpha)) dtheta/theta + theta^-1 sum C_i dx_i,
    the base directions being plain (not logarithmic)."""
    theta_inv = Puiseux.term(1, theta=-1)
    res_inf = PMatrix.diag(list(sd.alpha))
    labels = tuple("e%d" % i for i in range(wd.mu))
    parts = tuple((Variable(_xvar(i), logarithmic=False), higgs[i] * theta_inv)
                  for i in range(wd.mu))
    return Connection(labels, res_zero * theta_inv + res_inf, parts)


def euler_field(wd: WeightData, sd: SpectrumData):
    """Components of the Euler field: (1-alpha_0) x_0, the constant mu in the
    x_1 direction, and (1-alpha_i) x_i for i >= 2."""
    out = []
    for i in range(wd.mu):
        if i == 1:
            out.append(Puiseux.const(wd.mu))
        else:
            out.append(Puiseux.term(1 - sd.alpha[i], **{_xvar(i): 1}))
    return tuple(out)


def potential_coefficient(higgs, metric, i: int, j: int, k: int):
    """One ordered coefficient c_ijk = g(C_i C_j e_0, e_k).

    C_j e_0 is minus the j-th unit vector, so C_i C_j e_0 is minus the j-th
    column of C_i.
    """
    mu = len(metric)
    vec = [-higgs[i].rows[a][j].as_scalar() for a in range(mu)]
    return sum((vec[a] * metric[a][k] for a in range(mu)), R_ZERO)


def frobenius_potential(wd: WeightData, sd: SpectrumData, higgs, metric):
    """Cubic coefficients of the potential, keyed by sorted index triples.

    Total symmetry in (i, j, k) is established separately by the
    verification suite; here each canonical triple is computed once.
    """
    mu = wd.mu
    coeffs = {}
    for i in range(mu):
        for j in range(i, mu):
            for k in range(j, mu):
                value = potential_coefficient(higgs, metric, i, j, k)
                if value:
                    coeffs[(i, j, k)] = value
    return coeffs


def closed_form_potential(mu: int):
    """Monomial coefficients of (1/6) sum over i+j <= mu-1 of
    x_i x_j x_(mu-1-i-j), keyed by sorted index triples."""
    out = {}
    sixth = rat(1, 6)
    for i in range(mu):
        for j in range(mu - i):
            k = mu - 1 - i - j
            key = tuple(sorted((i, j, k)))
            out[key] = out.get(key, R_ZERO) + sixth
    return {k: v for k, v in out.items() if v}


def potential_monomials(coeffs):
    """Monomial coefficients of (1/6) sum c_ijk x_i x_j x_k over all ordered
    triples, keyed by sorted index triples."""
    out = {}
    sixth = rat(1, 6)
    for (i, j, k), value in coeffs.items():
        distinct = len({i, j, k})
        arrangements = {3: 6, 2: 3, 1: 1}[distinct]
        out[(i, j, k)] = value * sixth * arrangements
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class UnfoldingPackage:
    wd: WeightData
    sd: SpectrumData
    higgs: tuple             # C_0, ..., C_(mu-1)
    res_zero: PMatrix        # affine in x_0..x_(mu-1)
    res_inf: PMatrix
    conn: Connection
    euler: tuple
    potential: dict


def build_unfolding(wd: WeightData, sd: SpectrumData,
                    lp: LimitPackage) -> UnfoldingPackage:
    higgs = unfolding_matrices(wd, sd)
    res_zero = a_tilde(wd, sd, higgs)
    return UnfoldingPackage(
        wd=wd, sd=sd,
        higgs=higgs,
        res_zero=res_zero,
        res_inf=PMatrix.diag(list(sd.alpha)),
        conn=unfolded_connection(wd, sd, higgs, res_zero),
        euler=euler_field(wd, sd),
        potential=frobenius_potential(wd, sd, higgs, lp.metric),
    )


def verify_unfolded_flatness(up: UnfoldingPackage, lp: LimitPackage):
    """The identity suite for the unfolded connection."""
    wd, sd = up.wd, up.sd
    mu = wd.mu
    reports = []

    fails = []
    for i in range(mu):
        for j in range(i + 1, mu):
            if not up.higgs[i].commutator(up.higgs[j]).is_zero():
                fails.append("[C_%d, C_%d] != 0" % (i, j))
    reports.append(report("unfolding.commute", fails))

    fails = []
    for i in range(mu):
        lhs = up.res_inf.commutator(up.higgs[i])
        if lhs != up.higgs[i] * sd.alpha[i]:
            fails.append("[res_inf, C_%d] != alpha_%d C_%d" % (i, i, i))
    reports.append(report("unfolding.residue_grading", fails))

    fails = []
    for i in range(mu):
        if not up.res_zero.commutator(up.higgs[i]).is_zero():
            fails.append("[res_zero(x), C_%d] != 0" % i)
    reports.append(report("unfolding.residue_commutes", fails))

    fails = []
    for i in range(mu):
        lhs = up.res_zero.d(_xvar(i)) + up.higgs[i]
        rhs = up.res_inf.commutator(up.higgs[i])
        if lhs != rhs:
            fails.append("d(res_zero)/dx_%d + C_%d != [res_inf, C_%d]"
                         % (i, i, i))
    reports.append(report("unfolding.potential_derivative", fails))

    adj = []
    for i in range(mu):
        r = verify_adjoint(up.higgs[i], lp.pairing, "self_adjoint",
                           name="C_%d" % i)
        if not r.ok:
            adj.extend(r.failures)
    reports.append(report("unfolding.self_adjoint", adj))

    reports.append(verify_flatness(up.conn, "unfolding.curvature"))

    fails = []
    if up.higgs[1] * rat(-wd.mu) != lp.res_zero:
        fails.append("-mu C_1 != limit polar part")
    if up.res_zero.at_zero_all() != lp.res_zero:
        fails.append("res_zero(0) != limit polar part")
    for i in range(mu):
        for a in range(mu):
            want = rat(-1) if a == i else R_ZERO
            got = up.higgs[i].rows[a][0].as_scalar()
            if got != want:
                fails.append("C_%d e_0 != -e_%d" % (i, i))
                break
    for i in range(mu):
        for j in range(mu):
            entry = lp.cup.table[i][j]
            want = Puiseux.zero() if entry is None else \
                Puiseux.const(-entry[0])
            target = entry[1] if entry is not None else None
            for a in range(mu):
                got = up.higgs[i].rows[a][j]
                expected = want if a == target else Puiseux.zero()
                if got != expected:
                    fails.append("C_%d column %d disagrees with the cup table"
                                 % (i, j))
                    break
    reports.append(report("unfolding.matches_cup", fails))

    fails = []
    total = PMatrix.zero(mu)
    for i in range(mu):
        total = total + up.higgs[i] * up.euler[i]
    if total != -up.res_zero:
        fails.append("sum E_i C_i != -res_zero(x)")
    reports.append(report("unfolding.euler_field", fails))

    g = lp.metric
    fails = []
    for i in range(mu):
        for j in range(mu):
            for k in range(mu):
                value = potential_coefficient(up.higgs, g, i, j, k)
                stored = up.potential.get(tuple(sorted((i, j, k))), R_ZERO)
                if value != stored:
                    fails.append("c_%d%d%d breaks total symmetry" % (i, j, k))
    reports.append(report("unfolding.potential_symmetry", fails))

    fails = []
    for j in range(mu):
        for k in range(mu):
            value = up.potential.get(tuple(sorted((0, j, k))), R_ZERO)
            if value != g[j][k]:
                fails.append("c_0%d%d != metric entry" % (j, k))
    reports.append(report("unfolding.potential_unit", fails))

    if all(w == 1 for w in wd.weights):
        got = potential_monomials(up.potential)
        want = closed_form_potential(mu)
        reports.append(report(
            "unfolding.manifold_potential",
            [] if got == want else
            ["cubic part differs from the closed form"]))
    return reports


def log_structure_checks(ap: AModelPackage, bp: BModelPackage,
                         lp: LimitPackage):
    """Boundary behaviour at x = 0 and q = 0.

    The pairings restrict to rank n+1 (only the constant antidiagonal
    survives), hence stay nondegenerate exactly in the manifold case.  The
    canonical section keeps the generation and injectivity properties at the
    boundary: its iterates under the restricted polar part span everything.
    The limit operator, by contrast, only generates the first sector block,
    which is the observable form of the orbifold obstruction.
    """
    wd = ap.wd
    mu, n = wd.mu, wd.n
    reports = []

    def theta_free(matrix):
        return [[e.terms.get((n, ()), R_ZERO) for e in row]
                for row in matrix.rows]

    fails = []
    rank_b = rat_rank(theta_free(bp.pairing.at_zero("x")))
    if rank_b != n + 1:
        fails.append("rank of the pairing at x=0 is %d, expected %d"
                     % (rank_b, n + 1))
    if (rank_b == mu) != (mu == n + 1):
        fails.append("nondegeneracy at x=0 disagrees with mu = n+1")
    reports.append(report("log.metric_rank_b", fails))

    fails = []
    rank_a = rat_rank(theta_free(ap.pairing_powers.at_zero("q")))
    if rank_a != n + 1:
        fails.append("rank of the power pairing at q=0 is %d, expected %d"
                     % (rank_a, n + 1))
    if (rank_a == mu) != (mu == n + 1):
        fails.append("nondegeneracy at q=0 disagrees with mu = n+1")
    reports.append(report("log.metric_rank_a", fails))

    fails = []
    phi0 = bp.res_zero.at_zero("x").scalar_rows()
    phi0 = [[-v / mu for v in row] for row in phi0]
    e0 = [rat(1)] + [R_ZERO] * (mu - 1)
    image = [row[0] for row in phi0]
    if all(not v for v in image):
        fails.append("restricted period map kills the canonical section")
    if krylov_dimension(phi0, e0) != mu:
        fails.append("canonical section does not generate at the boundary")
    limit_rows = lp.res_zero.scalar_rows()
    span = krylov_dimension(limit_rows, e0)
    if span != n + 1:
        fails.append("limit iterates span %d, expected n+1 = %d"
                     % (span, n + 1))
    if (span == mu) != (mu == n + 1):
        fails.append("limit generation disagrees with mu = n+1")
    reports.append(report("log.generation", fails))
    return reports
