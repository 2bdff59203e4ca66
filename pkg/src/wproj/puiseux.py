"""Exact scalar and matrix substrate.

A :class:`Puiseux` element is a finite Q-linear combination of monomials

    x_{v_1}^{r_1} ... x_{v_k}^{r_k} * theta^s

where the base exponents ``r_i`` are rationals, the ``theta`` exponent ``s``
is an integer and the coefficients are rationals.  The variables are named
by strings ("q", "x", "x0", ...); ``theta`` is a distinguished variable with
integer exponents only.  Elements are kept canonical: no zero coefficients,
one entry per exponent key.

:class:`PMatrix` wraps a square array of such elements and provides the ring
operations, entrywise derivations and a division-free determinant.  All
matrices in this package are small (a few dozen rows at most), so the dense
representation with zero-skipping products is entirely adequate.

:class:`Phase` models an element of Q/Z, i.e. a root of unity exp(2*pi*i*t)
remembered through t; phases are only ever multiplied (added in Q/Z), never
summed as complex numbers.
"""

from __future__ import annotations

from ._rat import RAT, ZERO as RZERO, floor_rat, fmt_rat, to_rat

# A term key is (theta_exp, xpart) where xpart is a tuple of (name, exponent)
# pairs, sorted by name, with nonzero exponents only.


def _merge_xparts(xa, xb):
    if not xa:
        return xb
    if not xb:
        return xa
    d = dict(xa)
    for name, exp in xb:
        cur = d.get(name)
        if cur is None:
            d[name] = exp
        else:
            cur = cur + exp
            if cur:
                d[name] = cur
            else:
                del d[name]
    return tuple(sorted(d.items()))


class Puiseux:
    """A finite Q-linear combination of monomials x^r * theta^s."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # terms must already be canonical; use the constructors below.
        self.terms = terms if terms is not None else {}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Puiseux":
        return _P_ZERO

    @staticmethod
    def const(c) -> "Puiseux":
        c = to_rat(c)
        if not c:
            return _P_ZERO
        return Puiseux({(0, ()): c})

    @staticmethod
    def term(coeff, theta: int = 0, **exps) -> "Puiseux":
        """Single monomial coeff * prod(var^exp) * theta^theta.

        Variable exponents are given as keyword arguments and may be ints or
        rationals; "theta" is reserved for the integer theta exponent.
        """
        coeff = to_rat(coeff)
        if not coeff:
            return _P_ZERO
        xpart = tuple(
            sorted((name, to_rat(e)) for name, e in exps.items() if e)
        )
        return Puiseux({(theta, xpart): coeff})

    # -- ring structure ----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Puiseux):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return Puiseux({k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, Puiseux):
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for k, c in other.terms.items():
            cur = out.get(k)
            if cur is None:
                out[k] = c
            else:
                cur = cur + c
                if cur:
                    out[k] = cur
                else:
                    del out[k]
        return Puiseux(out)

    def __sub__(self, other):
        if not isinstance(other, Puiseux):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Puiseux):
            a, b = self.terms, other.terms
            if not a or not b:
                return _P_ZERO
            out = {}
            for (sa, xa), ca in a.items():
                for (sb, xb), cb in b.items():
                    k = (sa + sb, _merge_xparts(xa, xb))
                    c = ca * cb
                    cur = out.get(k)
                    if cur is None:
                        out[k] = c
                    else:
                        cur = cur + c
                        if cur:
                            out[k] = cur
                        else:
                            del out[k]
            return Puiseux(out)
        # scalar
        s = to_rat(other)
        if not s:
            return _P_ZERO
        return Puiseux({k: c * s for k, c in self.terms.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for monomials")
        out = P_ONE
        for _ in range(n):
            out = out * self
        return out

    # -- operators specific to this ring -----------------------------------

    def theta_flip(self) -> "Puiseux":
        """The involution theta -> -theta (multiplies each term by (-1)^s)."""
        return Puiseux({k: (-c if k[0] % 2 else c) for k, c in self.terms.items()})

    def dlog_theta(self) -> "Puiseux":
        """theta * d/d(theta)."""
        out = {}
        for (s, xp), c in self.terms.items():
            if s:
                out[(s, xp)] = c * s
        return Puiseux(out)

    def dlog(self, var: str) -> "Puiseux":
        """x_var * d/d(x_var)."""
        out = {}
        for (s, xp), c in self.terms.items():
            for name, e in xp:
                if name == var:
                    out[(s, xp)] = c * e
                    break
        return Puiseux(out)

    def d(self, var: str) -> "Puiseux":
        """d/d(x_var)."""
        out = {}
        for (s, xp), c in self.terms.items():
            for name, e in xp:
                if name == var:
                    e1 = e - 1
                    if e1:
                        nxp = tuple(sorted([(n, x) for n, x in xp if n != var]
                                           + [(var, e1)]))
                    else:
                        nxp = tuple((n, x) for n, x in xp if n != var)
                    k = (s, nxp)
                    cur = out.get(k, RZERO) + c * e
                    if cur:
                        out[k] = cur
                    elif k in out:
                        del out[k]
                    break
        return Puiseux(out)

    def at_zero(self, var: str) -> "Puiseux":
        """Evaluate at x_var = 0.

        Terms with positive exponent vanish, terms not involving the variable
        survive; a negative exponent makes the value undefined and raises.
        """
        out = {}
        for (s, xp), c in self.terms.items():
            e = None
            for name, ex in xp:
                if name == var:
                    e = ex
                    break
            if e is None:
                out[(s, xp)] = c
            elif e < 0:
                raise ValueError(
                    "cannot evaluate at %s=0: term with exponent %s" % (var, e))
            # e > 0: term vanishes
        return Puiseux(out)

    def at_zero_all(self) -> "Puiseux":
        """Evaluate every base variable at 0 (theta is untouched)."""
        out = {}
        for (s, xp), c in self.terms.items():
            if not xp:
                out[(s, ())] = c
            elif any(e < 0 for _n, e in xp):
                raise ValueError("cannot evaluate at 0: negative exponent")
        return Puiseux(out)

    def rename(self, old: str, new: str) -> "Puiseux":
        """Rename a base variable (used to compare q-side and x-side data)."""
        if old == new:
            return self
        out = {}
        for (s, xp), c in self.terms.items():
            nxp = tuple(sorted((new if n == old else n, e) for n, e in xp))
            out[(s, nxp)] = c
        return Puiseux(out)

    def coeff_of(self, var: str, exponent) -> "Puiseux":
        """Coefficient of x_var^exponent (exponent 0 selects var-free terms)."""
        exponent = to_rat(exponent)
        out = {}
        for (s, xp), c in self.terms.items():
            e = RZERO
            rest = []
            for name, ex in xp:
                if name == var:
                    e = ex
                else:
                    rest.append((name, ex))
            if e == exponent:
                out[(s, tuple(rest))] = c
        return Puiseux(out)

    def theta_exponents(self):
        return {s for (s, _xp) in self.terms}

    def variables(self):
        names = set()
        for (_s, xp) in self.terms:
            for name, _e in xp:
                names.add(name)
        return names

    def as_scalar(self):
        """The rational value of a constant element (None if not constant)."""
        if not self.terms:
            return RZERO
        if len(self.terms) == 1:
            (key, c), = self.terms.items()
            if key == (0, ()):
                return c
        return None

    def inv_monomial(self) -> "Puiseux":
        """Inverse of a single-term element."""
        if len(self.terms) != 1:
            raise ValueError("only monomials can be inverted")
        ((s, xp), c), = [*self.terms.items()]
        return Puiseux({(-s, tuple((n, -e) for n, e in xp)): 1 / c})

    def sorted_terms(self):
        """Terms in a deterministic order (by theta exponent, then x part)."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1]))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (s, xp), c in self.sorted_terms():
            factors = [fmt_rat(c)]
            for name, e in xp:
                factors.append("%s^%s" % (name, fmt_rat(e)))
            if s:
                factors.append("theta^%d" % s)
            bits.append("*".join(factors))
        return " + ".join(bits)


_P_ZERO = Puiseux({})
P_ONE = Puiseux({(0, ()): RAT(1)})


def pconst(c) -> Puiseux:
    return Puiseux.const(c)


class PMatrix:
    """A square matrix of :class:`Puiseux` elements."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    @staticmethod
    def zero(n: int) -> "PMatrix":
        return PMatrix([[_P_ZERO] * n for _ in range(n)])

    @staticmethod
    def identity(n: int) -> "PMatrix":
        return PMatrix([[P_ONE if i == j else _P_ZERO for j in range(n)]
                        for i in range(n)])

    @staticmethod
    def diag(values) -> "PMatrix":
        vals = [v if isinstance(v, Puiseux) else Puiseux.const(v) for v in values]
        n = len(vals)
        return PMatrix([[vals[i] if i == j else _P_ZERO for j in range(n)]
                        for i in range(n)])

    @staticmethod
    def from_scalars(rows) -> "PMatrix":
        return PMatrix([[Puiseux.const(c) for c in row] for row in rows])

    def __eq__(self, other):
        if isinstance(other, PMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        return PMatrix([[a + b for a, b in zip(ra, rb)]
                        for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return PMatrix([[a - b for a, b in zip(ra, rb)]
                        for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        return PMatrix([[-a for a in row] for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, PMatrix):
            n = self.n
            rows = self.rows
            brows = other.rows
            out = [[_P_ZERO] * n for _ in range(n)]
            for i in range(n):
                arow = rows[i]
                orow = out[i]
                for k in range(n):
                    a = arow[k]
                    if not a.terms:
                        continue
                    brow = brows[k]
                    for j in range(n):
                        b = brow[j]
                        if b.terms:
                            orow[j] = orow[j] + a * b
            return PMatrix(out)
        return PMatrix([[e * other for e in row] for row in self.rows])

    def __rmul__(self, other):
        return PMatrix([[e * other for e in row] for row in self.rows])

    def __pow__(self, k: int):
        out = PMatrix.identity(self.n)
        for _ in range(k):
            out = out * self
        return out

    def commutator(self, other: "PMatrix") -> "PMatrix":
        return self * other - other * self

    def transpose(self) -> "PMatrix":
        return PMatrix(list(zip(*self.rows)))

    def map(self, f) -> "PMatrix":
        return PMatrix([[f(e) for e in row] for row in self.rows])

    def theta_flip(self):
        return self.map(lambda e: e.theta_flip())

    def dlog_theta(self):
        return self.map(lambda e: e.dlog_theta())

    def dlog(self, var: str):
        return self.map(lambda e: e.dlog(var))

    def d(self, var: str):
        return self.map(lambda e: e.d(var))

    def at_zero(self, var: str):
        return self.map(lambda e: e.at_zero(var))

    def at_zero_all(self):
        return self.map(lambda e: e.at_zero_all())

    def rename(self, old: str, new: str):
        return self.map(lambda e: e.rename(old, new))

    def is_zero(self) -> bool:
        return all(not e.terms for row in self.rows for e in row)

    def nonzero_entries(self):
        for i, row in enumerate(self.rows):
            for j, e in enumerate(row):
                if e.terms:
                    yield i, j, e

    def entry(self, i: int, j: int) -> Puiseux:
        return self.rows[i][j]

    def scalar_rows(self):
        """The matrix as nested rationals; None if any entry is non-constant."""
        out = []
        for row in self.rows:
            vals = []
            for e in row:
                v = e.as_scalar()
                if v is None:
                    return None
                vals.append(v)
            out.append(vals)
        return out

    def det(self) -> Puiseux:
        """Division-free determinant (column expansion over row subsets).

        Exponential in the size, which is harmless here (n <= 12), and it
        skips zero entries so the nearly-diagonal pairing matrices cost
        almost nothing.
        """
        n = self.n
        if n == 0:
            return P_ONE
        states = {0: P_ONE}
        for j in range(n):
            nxt = {}
            for mask, val in states.items():
                for i in range(n):
                    bit = 1 << i
                    if mask & bit:
                        continue
                    a = self.rows[i][j]
                    if not a.terms:
                        continue
                    # new inversions: previously used rows above row i
                    sign = -1 if bin(mask >> (i + 1)).count("1") % 2 else 1
                    contrib = val * a if sign > 0 else -(val * a)
                    key = mask | bit
                    cur = nxt.get(key)
                    nxt[key] = contrib if cur is None else cur + contrib
            states = nxt
            if not states:
                return _P_ZERO
        return states.get((1 << n) - 1, _P_ZERO)

    def __repr__(self):
        body = ",\n ".join("[" + ", ".join(repr(e) for e in row) + "]"
                           for row in self.rows)
        return "PMatrix(\n %s)" % body


class Phase:
    """An element of Q/Z, standing for the unit complex number e^(2*pi*i*t).

    Phases multiply (values add mod 1); they are never added as complex
    numbers, so no cyclotomic arithmetic is needed anywhere.
    """

    __slots__ = ("value",)

    def __init__(self, value):
        value = to_rat(value)
        self.value = value - floor_rat(value)

    def __add__(self, other):
        return Phase(self.value + other.value)

    def __sub__(self, other):
        return Phase(self.value - other.value)

    def __neg__(self):
        return Phase(-self.value)

    def __eq__(self, other):
        if isinstance(other, Phase):
            return self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash(("Phase", self.value))

    def is_trivial(self) -> bool:
        return not self.value

    def __repr__(self):
        return "Phase(%s)" % fmt_rat(self.value)


def monomial(coeff, exps: dict, theta: int = 0) -> Puiseux:
    """Monomial helper taking the exponent dict explicitly."""
    coeff = to_rat(coeff)
    if not coeff:
        return _P_ZERO
    xpart = tuple(sorted((n, to_rat(e)) for n, e in exps.items() if e))
    return Puiseux({(theta, xpart): coeff})


ZERO = _P_ZERO
ONE = P_ONE
