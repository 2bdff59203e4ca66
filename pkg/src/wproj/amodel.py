"""Small quantum multiplication data of a weighted projective space.

Everything lives on the rank-mu trivial bundle over the punctured q-line.
Two bases are carried side by side:

* the sector basis 1_{f_i} P^j (orbifold cohomology classes ordered so that
  position k matches the k-th entry of the c-sequence), in which the
  quantum multiplication by the hyperplane class has matrix mult_sectors
  with rational powers of q;
* the power basis, the q-dependent powers of the hyperplane class under the
  quantum product, in which the same operator has matrix mult_powers with
  integer powers of q only.

The two are related by the diagonal gauge D = diag(q^{c_i} s_i), and the
package records both connections, both pairings and the diagonal degree
matrices.  The verification suite checks the gauge law, curvature and
pairing flatness, degree consistency, the cyclic power identity and the
equivariance under the Picard action (tracked through exact phases in Q/Z).
"""

from __future__ import annotations

from dataclasses import dataclass

from ._rat import ZERO as R_ZERO, floor_rat, is_integer, rat
from .combinatorics import SpectrumData, WeightData
from .connection import (CheckReport, Connection, Variable, gauge_transform,
                         report, verify_flatness, verify_pairing_flatness)
from .puiseux import PMatrix, Phase, Puiseux
from .ratlin import rat_det

QVAR = "q"


def quantum_matrix_sectors(wd: WeightData, sd: SpectrumData) -> PMatrix:
    """Matrix of quantum multiplication by the hyperplane class, sector basis.

    Subdiagonal entries a_i q^(c_i - c_{i-1}), corner entry a_mu q^(1 - c_{mu-1}).
    """
    mu = wd.mu
    rows = [[Puiseux.zero()] * mu for _ in range(mu)]
    for i in range(1, mu):
        rows[i][i - 1] = Puiseux.term(sd.subdiag[i - 1], q=sd.c[i] - sd.c[i - 1])
    rows[0][mu - 1] = Puiseux.term(sd.subdiag[mu - 1], q=1 - sd.c[mu - 1])
    return PMatrix(rows)


def quantum_matrix_powers(wd: WeightData, sd: SpectrumData) -> PMatrix:
    """Same operator in the power basis: subdiagonal ones, corner q/w^w."""
    mu = wd.mu
    rows = [[Puiseux.zero()] * mu for _ in range(mu)]
    for i in range(1, mu):
        rows[i][i - 1] = Puiseux.const(1)
    rows[0][mu - 1] = Puiseux.term(rat(1, wd.w_pow_w()), q=1)
    return PMatrix(rows)


def orbifold_degrees(wd: WeightData):
    """Orbifold degree of each sector-basis element, by the age formula.

    deg(1_{f_i} P^j) = 2j + 2 * sum_k frac(-w_k f_i).  This is one of the two
    independent degree computations; the other is 2*alpha_k.
    """
    degrees = []
    for i, j in wd.basis_positions():
        f = wd.sectors[i].f
        age = R_ZERO
        for w in wd.weights:
            v = -f * w
            age += v - floor_rat(v)
        degrees.append(2 * j + 2 * age)
    return tuple(degrees)


def poincare_pairing(wd: WeightData):
    """Orbifold Poincare pairing in the sector basis, as plain rationals.

    The (1_{f_i} P^k, 1_{f_j} P^l) entry is 1/m_i when f_i + f_j is an
    integer and k + l = d_i - 1, and 0 otherwise.
    """
    positions = wd.basis_positions()
    mu = wd.mu
    rows = []
    for a in range(mu):
        i, k = positions[a]
        si = wd.sectors[i]
        row = []
        for b in range(mu):
            j, ell = positions[b]
            sj = wd.sectors[j]
            if is_integer(si.f + sj.f) and k + ell == si.d - 1:
                row.append(rat(1, si.m))
            else:
                row.append(R_ZERO)
        rows.append(row)
    return tuple(tuple(r) for r in rows)


def pairing_powers(wd: WeightData, sd: SpectrumData) -> PMatrix:
    """Pairing in the power basis, valued in theta^n:
    theta^n/m_1 on i+j = n, theta^n q/(w^w m_1) on i+j = n+mu, else 0."""
    mu, n = wd.mu, wd.n
    m1 = wd.m_first()
    rows = [[Puiseux.zero()] * mu for _ in range(mu)]
    for i in range(mu):
        for j in range(mu):
            if i + j == n:
                rows[i][j] = Puiseux.term(rat(1, m1), theta=n)
            elif i + j == n + mu:
                rows[i][j] = Puiseux.term(rat(1, wd.w_pow_w() * m1),
                                          theta=n, q=1)
    return PMatrix(rows)


def power_gauge(wd: WeightData, sd: SpectrumData) -> PMatrix:
    """Diagonal change of basis D = diag(q^{c_i} s_i) from sectors to powers."""
    return PMatrix.diag([Puiseux.term(sd.scales[i], q=sd.c[i])
                         for i in range(wd.mu)])


def connections(wd: WeightData, sd: SpectrumData, mult_sectors: PMatrix,
                mult_powers: PMatrix):
    """The connection matrices in both bases.

    Sector basis: Omega_theta = mu*C/theta + diag(alpha), Omega_q = -C/theta.
    Power basis adds the residue diag(c) to the q-part.
    """
    mu = wd.mu
    theta_inv = Puiseux.term(1, theta=-1)
    res_inf = PMatrix.diag(list(sd.alpha))
    res_base = PMatrix.diag(list(sd.c))
    labels = wd.basis_labels()
    conn_sectors = Connection(
        labels,
        mult_sectors * theta_inv * mu + res_inf,
        ((Variable(QVAR), -(mult_sectors * theta_inv)),),
    )
    power_labels = tuple("P*%d" % i for i in range(mu))
    conn_powers = Connection(
        power_labels,
        mult_powers * theta_inv * mu + res_inf,
        ((Variable(QVAR), -(mult_powers * theta_inv) + res_base),),
    )
    return conn_sectors, conn_powers


@dataclass(frozen=True)
class AModelPackage:
    wd: WeightData
    sd: SpectrumData
    degrees: tuple
    mult_sectors: PMatrix
    mult_powers: PMatrix
    res_inf: PMatrix        # diag(alpha) = half orbifold degrees
    res_base: PMatrix       # diag(c)
    pairing_sectors: tuple  # plain rationals
    pairing_sectors_theta: PMatrix
    pairing_powers: PMatrix
    conn_sectors: Connection
    conn_powers: Connection


def build_amodel(wd: WeightData, sd: SpectrumData) -> AModelPackage:
    mult_sectors = quantum_matrix_sectors(wd, sd)
    mult_powers = quantum_matrix_powers(wd, sd)
    pairing = poincare_pairing(wd)
    pairing_theta = PMatrix(
        [[Puiseux.term(v, theta=wd.n) for v in row] for row in pairing])
    conn_sectors, conn_powers = connections(wd, sd, mult_sectors, mult_powers)
    return AModelPackage(
        wd=wd, sd=sd,
        degrees=orbifold_degrees(wd),
        mult_sectors=mult_sectors,
        mult_powers=mult_powers,
        res_inf=PMatrix.diag(list(sd.alpha)),
        res_base=PMatrix.diag(list(sd.c)),
        pairing_sectors=pairing,
        pairing_sectors_theta=pairing_theta,
        pairing_powers=pairing_powers(wd, sd),
        conn_sectors=conn_sectors,
        conn_powers=conn_powers,
    )


def gauge_consistency_check(ap: AModelPackage) -> CheckReport:
    """D^-1 C(q) D == C_powers(q) and the full connection gauge law."""
    D = power_gauge(ap.wd, ap.sd)
    fails = []
    inv = PMatrix.diag([D.rows[i][i].inv_monomial() for i in range(D.n)])
    if inv * ap.mult_sectors * D != ap.mult_powers:
        fails.append("multiplication matrices disagree under the gauge")
    gauged = gauge_transform(ap.conn_sectors, D)
    if gauged.theta != ap.conn_powers.theta:
        fails.append("theta part disagrees under the gauge")
    if gauged.part(QVAR) != ap.conn_powers.part(QVAR):
        fails.append("q part disagrees under the gauge")
    return report("amodel.gauge_consistency", fails)


def picard_action_check(ap: AModelPackage, d: int) -> CheckReport:
    """Equivariance of the power basis and invariance of the multiplication
    matrix under the line-bundle action, with exact phases in Q/Z.

    The twist of degree d multiplies a sector-f class by the phase -d*f and a
    monomial q^r by the phase -d*r.
    """
    wd, sd = ap.wd, ap.sd
    positions = wd.basis_positions()
    fails = []
    # the q^{c_i} prefactor of the i-th power must absorb the fiber phase
    for i in range(wd.mu):
        phase_q = Phase(-d * sd.c[i])
        phase_fiber = Phase(-d * wd.sectors[positions[i][0]].f)
        if phase_q != phase_fiber:
            fails.append("power %d: phase %r vs %r" % (i, phase_q, phase_fiber))
    # each entry of the sector-basis matrix must transform with total phase 0
    for i, j, e in ap.mult_sectors.nonzero_entries():
        ((_s, xp), _c), = [*e.terms.items()]
        exp = dict(xp).get(QVAR, R_ZERO)
        total = (Phase(-d * exp) + Phase(-d * wd.sectors[positions[j][0]].f)
                 - Phase(-d * wd.sectors[positions[i][0]].f))
        if not total.is_trivial():
            fails.append("entry (%d,%d) picks up phase %r" % (i, j, total))
    return report("amodel.picard_equivariance_d%d" % d, fails)


def verify_amodel(ap: AModelPackage):
    """All identity checks on the small quantum data of one weight vector."""
    wd, sd = ap.wd, ap.sd
    mu, n = wd.mu, wd.n
    reports = []

    fails = ["position %d: degree %s != 2*alpha" % (k, ap.degrees[k])
             for k in range(mu) if ap.degrees[k] != 2 * sd.alpha[k]]
    reports.append(report("amodel.degrees_cross", fails))

    fails = []
    for i in range(mu):
        for j in range(mu):
            if ap.pairing_sectors[i][j] != ap.pairing_sectors[j][i]:
                fails.append("pairing not symmetric at (%d,%d)" % (i, j))
    if not rat_det(ap.pairing_sectors):
        fails.append("sector pairing is singular")
    for i, j, _e in ap.pairing_powers.nonzero_entries():
        if i + j != n and i + j != n + mu:
            fails.append("power pairing nonzero off the antidiagonals (%d,%d)"
                         % (i, j))
    reports.append(report("amodel.pairing_structure", fails))

    D = power_gauge(wd, sd)
    expected = D.transpose() * ap.pairing_sectors_theta * D
    reports.append(report(
        "amodel.pairing_change_of_basis",
        [] if expected == ap.pairing_powers else
        ["D^T <,> D theta^n != power pairing"]))

    power = ap.mult_powers ** mu
    target = PMatrix.identity(mu) * Puiseux.term(rat(1, wd.w_pow_w()), q=1)
    reports.append(report(
        "amodel.cyclic_power",
        [] if power == target else ["mult_powers^mu != (q/w^w) * identity"]))

    reports.append(verify_flatness(ap.conn_sectors, "amodel.flatness_sectors"))
    reports.append(verify_flatness(ap.conn_powers, "amodel.flatness_powers"))
    reports.append(verify_pairing_flatness(
        ap.conn_sectors, ap.pairing_sectors_theta, n,
        "amodel.pairing_flatness_sectors"))
    reports.append(verify_pairing_flatness(
        ap.conn_powers, ap.pairing_powers, n,
        "amodel.pairing_flatness_powers"))
    reports.append(gauge_consistency_check(ap))
    reports.append(picard_action_check(ap, 1))
    reports.append(picard_action_check(ap, 2))
    return reports
