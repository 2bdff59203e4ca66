"""Weight-vector combinatorics: inertia sectors and the exponent spectrum.

For a weight vector (1, w_1, ..., w_n) with mu = 1 + w_1 + ... + w_n, this
module computes

* the sector table: the fractions f with some w_j*f integral, each with its
  index set S_f, multiplicity d = #S_f and weight product m;
* the stepping sequence a(k) in N^{n+1} together with the minimizing indices,
  producing the c-sequence (c_0, ..., c_{mu-1}) of residue exponents in [0,1)
  and the spectrum alpha_k = k - mu*c_k;
* the repetition indices r(i), the scaling factors s_i and the subdiagonal
  coefficients a_i that enter the quantum multiplication matrices.

The c-sequence is computed twice, by the stepping recursion and by sorting
the multiset {f_i with multiplicity d_i}; the two must agree exactly, which
is the anti-bug oracle exercised by the verification suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._rat import ONE as R_ONE, RAT, ceil_rat, fmt_rat, is_integer, rat
from .connection import report


@dataclass(frozen=True)
class Sector:
    """One inertia sector: fraction f, member indices, multiplicity, product."""

    f: object  # rational in [0, 1)
    members: tuple[int, ...]
    d: int
    m: int


@dataclass(frozen=True)
class WeightData:
    weights: tuple[int, ...]
    n: int
    mu: int
    sectors: tuple[Sector, ...]

    def w_pow_w(self) -> int:
        """The product of w_i^(w_i) over all weights."""
        out = 1
        for w in self.weights:
            out *= w ** w
        return out

    def m_first(self) -> int:
        """Product of all weights (the m of the untwisted sector)."""
        return self.sectors[0].m

    def basis_positions(self):
        """Position k -> (sector index, power j), in c-sequence order."""
        out = []
        for i, sec in enumerate(self.sectors):
            for j in range(sec.d):
                out.append((i, j))
        return out

    def basis_labels(self):
        labels = []
        for i, j in self.basis_positions():
            f = self.sectors[i].f
            head = "" if not f else "1_{%s}" % fmt_rat(f)
            if j == 0:
                tail = "" if head else "1"
            elif j == 1:
                tail = "P"
            else:
                tail = "P^%d" % j
            labels.append(head + tail)
        return tuple(labels)


def build_weight_data(weights) -> WeightData:
    """Validate a weight vector and assemble its sector table."""
    weights = tuple(int(w) for w in weights)
    if len(weights) < 2:
        raise ValueError("need at least two weights")
    if weights[0] != 1:
        raise ValueError("first weight must be 1, got %d" % weights[0])
    if any(w < 1 for w in weights):
        raise ValueError("weights must be positive integers: %r" % (weights,))
    n = len(weights) - 1
    fractions = set()
    for w in weights:
        for ell in range(w):
            fractions.add(rat(ell, w))
    sectors = []
    for f in sorted(fractions):
        members = tuple(j for j, w in enumerate(weights) if is_integer(f * w))
        m = 1
        for j in members:
            m *= weights[j]
        sectors.append(Sector(f, members, len(members), m))
    return WeightData(weights, n, sum(weights), tuple(sectors))


def stepping_sequence(wd: WeightData):
    """The stepping recursion a(k+1) = a(k) + unit(i(k)).

    i(k) is the smallest index attaining min_j a(k)_j / w_j; the tie-break by
    smallest index is part of the definition.  Returns (steps, mins, c, alpha)
    with steps = (a(0), ..., a(mu)), mins = (i(0), ..., i(mu-1)).
    """
    w = wd.weights
    steps = [tuple([0] * (wd.n + 1))]
    mins = []
    c = []
    a = [0] * (wd.n + 1)
    for k in range(wd.mu):
        best = min(rat(a[j], w[j]) for j in range(wd.n + 1))
        i_k = next(j for j in range(wd.n + 1) if rat(a[j], w[j]) == best)
        mins.append(i_k)
        c.append(best)
        a[i_k] += 1
        steps.append(tuple(a))
    alpha = tuple(rat(k) - wd.mu * c[k] for k in range(wd.mu))
    return tuple(steps), tuple(mins), tuple(c), alpha


def c_sequence_oracle(wd: WeightData):
    """Independent computation of the c-sequence: the sorted multiset of
    sector fractions, each repeated by its multiplicity."""
    values = []
    for sec in wd.sectors:
        values.extend([sec.f] * sec.d)
    return tuple(sorted(values))


def repetition_and_scaling(c, wd: WeightData):
    """r(i) counts earlier equal c-values; s_i = prod w_k^(-ceil(c_i w_k))."""
    repeats = []
    scales = []
    for i, ci in enumerate(c):
        repeats.append(sum(1 for k in range(i) if c[k] == ci))
        s = R_ONE
        for w in wd.weights:
            s = s / RAT(w) ** ceil_rat(ci * w)
        scales.append(s)
    return tuple(repeats), tuple(scales)


def subdiagonal_coeffs(wd: WeightData):
    """Coefficients a_1..a_mu: 1/m_j at each partial-sum boundary, else 1."""
    coeffs = [R_ONE] * wd.mu
    boundary = 0
    for sec in wd.sectors:
        boundary += sec.d
        coeffs[boundary - 1] = rat(1, sec.m)
    return tuple(coeffs)


@dataclass(frozen=True)
class SpectrumData:
    """All spectrum data of one weight vector, in c-sequence order."""

    steps: tuple          # a(0), ..., a(mu)
    mins: tuple           # minimizing indices i(0), ..., i(mu-1)
    c: tuple              # residue exponents in [0, 1)
    alpha: tuple          # spectrum at infinity, alpha_k = k - mu*c_k
    repeats: tuple        # r(i)
    scales: tuple         # s_i
    subdiag: tuple        # a_1, ..., a_mu (index i-1 holds a_i)


def spectrum_data(wd: WeightData) -> SpectrumData:
    steps, mins, c, alpha = stepping_sequence(wd)
    repeats, scales = repetition_and_scaling(c, wd)
    return SpectrumData(steps, mins, c, alpha, repeats, scales,
                        subdiagonal_coeffs(wd))


def enumerate_weight_tuples(mu_max: int):
    """All weight vectors (1, w_1 <= ... <= w_n) with mu <= mu_max, sorted."""
    if mu_max < 2:
        raise ValueError("mu_max must be at least 2")
    out = []

    def parts(remaining, smallest, prefix):
        if remaining == 0 and prefix:
            out.append((1,) + tuple(prefix))
            return
        for p in range(smallest, remaining + 1):
            parts(remaining - p, p, prefix + [p])

    for total in range(1, mu_max):
        parts(total, 1, [])
    out.sort(key=lambda t: (sum(t), t))
    return out


def verify_combinatorics(wd: WeightData, sd: SpectrumData):
    """The identity suite for the sector and spectrum data."""
    reports = []
    mu, n = wd.mu, wd.n

    oracle = c_sequence_oracle(wd)
    reports.append(report(
        "combinatorics.c_dual_oracle",
        [] if sd.c == oracle else
        ["stepping %r != sorted multiset %r" % (sd.c, oracle)]))

    fails = []
    if any(sd.c[k] for k in range(n + 1)):
        fails.append("c_0..c_n not all zero: %r" % (sd.c[:n + 1],))
    if mu > n + 1 and sd.c[n + 1] != rat(1, max(wd.weights)):
        fails.append("c_{n+1} != 1/max(w): %s" % fmt_rat(sd.c[n + 1]))
    for k in range(n + 1, mu):
        if sd.c[k] + sd.c[mu + n - k] != 1:
            fails.append("c_%d + c_%d != 1" % (k, mu + n - k))
    if any(sd.c[k] > sd.c[k + 1] for k in range(mu - 1)):
        fails.append("c-sequence not non-decreasing")
    reports.append(report("combinatorics.c_symmetry", fails))

    fails = []
    for k in range(mu):
        if sd.alpha[k] != k - mu * sd.c[k]:
            fails.append("alpha_%d != %d - mu*c_%d" % (k, k, k))
    for k in range(n + 1):
        if sd.alpha[k] + sd.alpha[n - k] != n:
            fails.append("alpha_%d + alpha_%d != n" % (k, n - k))
    for k in range(n + 1, mu):
        if sd.alpha[k] + sd.alpha[mu + n - k] != n:
            fails.append("alpha_%d + alpha_%d != n" % (k, mu + n - k))
    for k in range(mu - 1):
        if sd.alpha[k + 1] > sd.alpha[k] + 1:
            fails.append("alpha_%d > alpha_%d + 1" % (k + 1, k))
    reports.append(report("combinatorics.alpha_symmetry", fails))

    all_integral = all(is_integer(a) for a in sd.alpha)
    divides = all(mu % w == 0 for w in wd.weights)
    reports.append(report(
        "combinatorics.alpha_integrality",
        [] if all_integral == divides else
        ["alpha integral: %s, all weights divide mu: %s"
         % (all_integral, divides)]))

    fails = []
    if sum(sec.d for sec in wd.sectors) != mu:
        fails.append("sum of multiplicities != mu")
    if sd.steps[1] != (1,) + (0,) * n:
        fails.append("a(1) wrong: %r" % (sd.steps[1],))
    if sd.steps[n + 1] != (1,) * (n + 1):
        fails.append("a(n+1) wrong: %r" % (sd.steps[n + 1],))
    if sd.steps[mu] != (1,) + wd.weights[1:]:
        fails.append("a(mu) wrong: %r" % (sd.steps[mu],))
    for k, a in enumerate(sd.steps):
        if sum(a) != k:
            fails.append("sum a(%d) != %d" % (k, k))
    m_product = 1
    for sec in wd.sectors:
        m_product *= sec.m
    if m_product != wd.w_pow_w():
        fails.append("product of sector m's != w^w")
    reports.append(report("combinatorics.sector_sums", fails))
    return reports
