"""Entrywise identification of the quantum-side and Landau-Ginzburg-side data.

The comparison map sends the i-th power-basis class to the i-th canonical
section, with the base parameters identified by literally renaming q to x.
Under that renaming the connection matrices, the pairings and the residue
matrices must agree entry for entry, and the quantum product rule must match
the Jacobi-algebra product on every pair of indices.  Exact equality, no
tolerances.
"""

from __future__ import annotations

from ._rat import rat
from .amodel import AModelPackage, QVAR
from .bmodel import BModelPackage, XVAR, jacobi_product
from .connection import CheckReport, report


def _entry_mismatches(tag, A, B):
    for i in range(A.n):
        for j in range(A.n):
            if A.rows[i][j] != B.rows[i][j]:
                yield "%s entry (%d,%d): %r != %r" % (
                    tag, i, j, A.rows[i][j], B.rows[i][j])


def verify_mirror(ap: AModelPackage, bp: BModelPackage):
    """Compare the connection matrices, the pairings and the degrees."""
    reports = []
    conn_a = ap.conn_powers.rename(QVAR, XVAR)
    reports.append(report(
        "mirror.connection_theta",
        _entry_mismatches("theta", conn_a.theta, bp.conn_canonical.theta)))
    reports.append(report(
        "mirror.connection_base",
        _entry_mismatches("base", conn_a.part(XVAR),
                          bp.conn_canonical.part(XVAR))))
    reports.append(report(
        "mirror.pairing",
        _entry_mismatches("pairing", ap.pairing_powers.rename(QVAR, XVAR),
                          bp.pairing)))
    fails = []
    for k in range(ap.wd.mu):
        if ap.degrees[k] != 2 * bp.sd.alpha[k]:
            fails.append("degree of class %d: %s != 2*alpha" %
                         (k, ap.degrees[k]))
    if ap.res_inf != bp.res_inf:
        fails.append("residue matrices at infinity differ")
    reports.append(report("mirror.degrees", fails))
    return reports


def quantum_power_product(wd, i: int, j: int):
    """Product rule for the power basis classes: the (i+j)-th class, or
    (q/w^w) times the (i+j-mu)-th when the exponent wraps."""
    from .puiseux import Puiseux
    if i + j <= wd.mu - 1:
        return Puiseux.const(1), i + j
    return Puiseux.term(rat(1, wd.w_pow_w()), q=1), i + j - wd.mu


def verify_product_mirror(ap: AModelPackage, bp: BModelPackage) -> CheckReport:
    """The product rules agree under q -> x for every pair of indices."""
    wd, sd = ap.wd, ap.sd
    fails = []
    for i in range(wd.mu):
        for j in range(wd.mu):
            qcoeff, qidx = quantum_power_product(wd, i, j)
            bcoeff, bidx = jacobi_product(wd, sd, i, j)
            if (qcoeff.rename(QVAR, XVAR), qidx) != (bcoeff, bidx):
                fails.append("pair (%d,%d): %r * class %d != %r * class %d"
                             % (i, j, qcoeff, qidx, bcoeff, bidx))
    return report("mirror.product", fails)
