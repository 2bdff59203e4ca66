"""Connections on a trivial bundle and the generic integrability verifiers.

A :class:`Connection` stores one matrix per direction: the coefficient of
d(theta)/theta and, for each base variable, the coefficient of either
dx_v/x_v (logarithmic direction) or dx_v (plain direction).  The convention
throughout the package is that columns are images: the covariant derivative
of the j-th basis vector is sum_i Omega[i][j] e_i.

The three verifiers check, by exact expansion,

* curvature vanishing (all pairwise integrability conditions),
* flatness of a twisted pairing G with values in theta^n times functions,
  where the twist flips theta -> -theta in the second slot,
* adjointness of an endomorphism with respect to a pairing matrix.

Failures are reported entry by entry (0-based indices), never raised.
"""

from __future__ import annotations

from dataclasses import dataclass

from .puiseux import PMatrix, Puiseux


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one verification: a stable name, a verdict, and details."""

    name: str
    ok: bool
    failures: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def report(name: str, failures) -> CheckReport:
    failures = tuple(failures)
    return CheckReport(name, not failures, failures)


def merge_reports(name: str, reports) -> CheckReport:
    fails = []
    for r in reports:
        if not r.ok:
            fails.extend("%s: %s" % (r.name, f) for f in (r.failures or ("failed",)))
    return report(name, fails)


@dataclass(frozen=True)
class Variable:
    """A base direction of a connection; logarithmic means the pole dx/x."""

    name: str
    logarithmic: bool = True


@dataclass(frozen=True)
class Connection:
    """Matrices of a meromorphic connection on a trivial bundle.

    ``theta`` is the coefficient of d(theta)/theta; ``parts`` associates each
    base variable with the coefficient of dx_v/x_v or dx_v per its flag.
    All matrices share the rank and each variable appears once.
    """

    labels: tuple[str, ...]
    theta: PMatrix
    parts: tuple[tuple[Variable, PMatrix], ...]

    def __post_init__(self):
        n = self.theta.n
        if len(self.labels) != n:
            raise ValueError("need one label per basis vector")
        names = [v.name for v, _m in self.parts]
        if len(set(names)) != len(names) or "theta" in names:
            raise ValueError("base variables must be distinct and not theta")
        if any(m.n != n for _v, m in self.parts):
            raise ValueError("all matrices must have the same size")

    def part(self, name: str) -> PMatrix:
        for v, m in self.parts:
            if v.name == name:
                return m
        raise KeyError(name)

    def rename(self, old: str, new: str) -> "Connection":
        return Connection(
            self.labels,
            self.theta.rename(old, new),
            tuple((Variable(new if v.name == old else v.name, v.logarithmic),
                   m.rename(old, new)) for v, m in self.parts),
        )


def _delta(matrix: PMatrix, var: Variable) -> PMatrix:
    return matrix.dlog(var.name) if var.logarithmic else matrix.d(var.name)


def _entry_failures(tag: str, residual: PMatrix):
    for i, j, e in residual.nonzero_entries():
        yield "%s entry (%d,%d): %r" % (tag, i, j, e)


def verify_flatness(conn: Connection, name: str = "flatness") -> CheckReport:
    """Check that the curvature of the connection vanishes identically.

    For every base variable v: theta*d_theta(Omega_v) - delta_v(Omega_theta)
    + [Omega_theta, Omega_v] must vanish, and for every pair u, v:
    delta_u(Omega_v) - delta_v(Omega_u) + [Omega_u, Omega_v] must vanish,
    where delta is x*d/dx for logarithmic directions and d/dx otherwise.
    """
    if not conn.parts:
        raise ValueError("connection needs at least one variable besides theta")
    failures = []
    for v, mv in conn.parts:
        residual = mv.dlog_theta() - _delta(conn.theta, v) \
            + conn.theta.commutator(mv)
        failures.extend(_entry_failures("(theta,%s)" % v.name, residual))
    for a in range(len(conn.parts)):
        u, mu = conn.parts[a]
        for b in range(a + 1, len(conn.parts)):
            v, mv = conn.parts[b]
            residual = _delta(mv, u) - _delta(mu, v) + mu.commutator(mv)
            failures.extend(_entry_failures("(%s,%s)" % (u.name, v.name),
                                            residual))
    return report(name, failures)


def uniform_theta_degree(G: PMatrix) -> int:
    """The common theta exponent of all terms of G; raises if mixed."""
    degrees = set()
    for _i, _j, e in G.nonzero_entries():
        degrees |= e.theta_exponents()
    if len(degrees) != 1:
        raise ValueError("pairing matrix has mixed theta degrees: %s"
                         % sorted(degrees))
    return degrees.pop()


def verify_pairing_flatness(conn: Connection, G: PMatrix, n: int,
                            name: str = "pairing-flatness") -> CheckReport:
    """Check that G is flat for the connection with the theta -> -theta twist.

    In every direction delta: delta(G) = Omega^T G + G sigma(Omega), where
    sigma flips the sign of theta in each entry.
    """
    deg = uniform_theta_degree(G)
    if deg != n:
        raise ValueError("pairing matrix has theta degree %d, expected %d"
                         % (deg, n))
    failures = []
    directions = [(Variable("theta"), conn.theta)]
    directions.extend(conn.parts)
    for v, omega in directions:
        lhs = G.dlog_theta() if v.name == "theta" else _delta(G, v)
        rhs = omega.transpose() * G + G * omega.theta_flip()
        failures.extend(_entry_failures("d(%s)" % v.name, lhs - rhs))
    return report(name, failures)


def verify_adjoint(A: PMatrix, G: PMatrix, mode: str = "self_adjoint",
                   total=None, name: str = "adjoint") -> CheckReport:
    """Adjointness of A with respect to an invertible pairing matrix G.

    mode "self_adjoint" checks G*A == A^T*G; mode "sum_to_scalar" checks
    G*A + A^T*G == total*G.  G must be invertible over the fraction field,
    which is established by an exact determinant.
    """
    if not G.det():
        raise ValueError("pairing matrix is singular")
    if mode == "self_adjoint":
        residual = G * A - A.transpose() * G
    elif mode == "sum_to_scalar":
        if total is None:
            raise ValueError("sum_to_scalar mode needs the scalar")
        residual = G * A + A.transpose() * G - G * Puiseux.const(total)
    else:
        raise ValueError("unknown mode %r" % mode)
    return report(name, _entry_failures(mode, residual))


def gauge_transform(conn: Connection, D: PMatrix) -> Connection:
    """Connection matrices after the change of basis e'_j = sum_i D_ij e_i.

    D must be diagonal with monomial entries (all base changes used here
    are); the new matrices are D^-1 Omega D + D^-1 delta(D) per direction.
    """
    n = D.n
    inv_entries = [D.rows[i][i].inv_monomial() for i in range(n)]
    Dinv = PMatrix.diag(inv_entries)

    def transform(omega: PMatrix, var: Variable | None) -> PMatrix:
        out = Dinv * omega * D
        if var is None:
            out = out + Dinv * D.dlog_theta()
        else:
            out = out + Dinv * _delta(D, var)
        return out

    return Connection(
        conn.labels,
        transform(conn.theta, None),
        tuple((v, transform(m, v)) for v, m in conn.parts),
    )
