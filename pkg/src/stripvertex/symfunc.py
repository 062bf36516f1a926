"""Symmetric functions truncated by degree, over Novikov series coefficients.

Elements live in the ring of symmetric functions in infinitely many
variables, expressed in either the Schur basis or the power sum basis and
truncated to partitions of size at most cap.  Basis changes go through the
integer character table (power sums to Schurs and back), multiplication is
concatenation in the power sum basis, and the Hall pairing makes the power
sums orthogonal with norm z_lambda.

The second half of the module provides the same algebra on the tensor
square (two sets of variables), plus the principal specializations used by
the vertex: evaluations at q^rho and q^(nu+rho) computed through Jacobi-
Trudi determinants with a closed-form tail.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cache

from .partitions import (
    Partition,
    character,
    contains,
    hooks,
    kappa,
    partitions_of,
    size,
    transpose,
    z_factor,
)
from .scalars import SYMBOLIC, NovikovSeries


class NonNilpotentArgument(ValueError):
    """Raised when a plethystic exponential is fed a series with a constant part."""


def _concat(mu: Partition, nu: Partition) -> Partition:
    return tuple(sorted(mu + nu, reverse=True))


class SymFunc:
    """A truncated symmetric function with NovikovSeries coefficients."""

    __slots__ = ("basis", "terms", "cap", "ring")

    def __init__(self, basis: str, terms: dict[Partition, NovikovSeries],
                 cap: int, ring, clean: bool = False):
        if basis not in ("schur", "p"):
            raise ValueError(f"unknown basis {basis!r}")
        if not clean:
            terms = {k: c for k, c in terms.items()
                     if size(k) <= cap and not c.is_zero()}
        self.basis = basis
        self.terms = terms
        self.cap = cap
        self.ring = ring

    # -- constructors ---------------------------------------------------------
    @classmethod
    def one(cls, ring, cap: int, basis: str = "p") -> "SymFunc":
        return cls(basis, {(): NovikovSeries.constant(ring.one)}, cap, ring, clean=True)

    @classmethod
    def zero(cls, ring, cap: int, basis: str = "p") -> "SymFunc":
        return cls(basis, {}, cap, ring, clean=True)

    @classmethod
    def schur(cls, lam: Partition, ring, cap: int) -> "SymFunc":
        return cls("schur", {tuple(lam): NovikovSeries.constant(ring.one)}, cap, ring)

    @classmethod
    def power_sum(cls, lam: Partition, ring, cap: int) -> "SymFunc":
        return cls("p", {tuple(lam): NovikovSeries.constant(ring.one)}, cap, ring)

    # -- ring structure --------------------------------------------------------
    def _require_like(self, other: "SymFunc") -> None:
        if self.ring is not other.ring and self.ring != other.ring:
            raise ValueError("mixed coefficient rings")

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._require_like(other)
        a, b = self, other
        if a.basis != b.basis:
            b = b.convert(a.basis)
        out = dict(a.terms)
        for k, c in b.terms.items():
            if k in out:
                v = out[k] + c
                if v.is_zero():
                    del out[k]
                else:
                    out[k] = v
            else:
                out[k] = c
        return SymFunc(a.basis, out, min(a.cap, b.cap), a.ring, clean=True)

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.basis, {k: -c for k, c in self.terms.items()},
                       self.cap, self.ring, clean=True)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __mul__(self, other: "SymFunc") -> "SymFunc":
        """Product, computed in the power sum basis, returned in the left basis."""
        self._require_like(other)
        a = self.convert("p")
        b = other.convert("p")
        cap = min(a.cap, b.cap)
        out: dict[Partition, NovikovSeries] = {}
        for k1, c1 in a.terms.items():
            s1 = size(k1)
            for k2, c2 in b.terms.items():
                if s1 + size(k2) > cap:
                    continue
                k = _concat(k1, k2)
                v = c1 * c2
                if k in out:
                    v = out[k] + v
                if v.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = v
        prod = SymFunc("p", out, cap, self.ring, clean=True)
        return prod.convert(self.basis)

    def scale(self, series: NovikovSeries) -> "SymFunc":
        if series.is_zero():
            return SymFunc.zero(self.ring, self.cap, self.basis)
        return SymFunc(self.basis, {k: c * series for k, c in self.terms.items()},
                       self.cap, self.ring)

    def scale_scalar(self, scalar) -> "SymFunc":
        return SymFunc(self.basis, {k: c.scale(scalar) for k, c in self.terms.items()},
                       self.cap, self.ring)

    def map_coeffs(self, fn) -> "SymFunc":
        """Apply a scalar map (such as q -> 1/q) to every coefficient."""
        return SymFunc(self.basis,
                       {k: c.map_scalars(fn) for k, c in self.terms.items()},
                       self.cap, self.ring)

    def truncate(self, cap: int) -> "SymFunc":
        return SymFunc(self.basis, {k: c for k, c in self.terms.items() if size(k) <= cap},
                       cap, self.ring, clean=True)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, lam: Partition) -> NovikovSeries:
        return self.terms.get(tuple(lam), NovikovSeries({}, clean=True))

    # -- basis change -----------------------------------------------------------
    def convert(self, basis: str) -> "SymFunc":
        if basis == self.basis:
            return self
        out: dict[Partition, NovikovSeries] = {}
        ring = self.ring
        if self.basis == "p" and basis == "schur":
            # p_mu = sum_lam chi^lam(mu) s_lam
            for mu, c in self.terms.items():
                for lam in partitions_of(size(mu)):
                    x = character(lam, mu)
                    if not x:
                        continue
                    v = c.scale(ring.from_fraction(x))
                    if lam in out:
                        v = out[lam] + v
                    if v.is_zero():
                        out.pop(lam, None)
                    else:
                        out[lam] = v
            return SymFunc("schur", out, self.cap, ring, clean=True)
        if self.basis == "schur" and basis == "p":
            # s_lam = sum_mu chi^lam(mu) / z_mu p_mu
            for lam, c in self.terms.items():
                for mu in partitions_of(size(lam)):
                    x = character(lam, mu)
                    if not x:
                        continue
                    v = c.scale(ring.from_fraction(Fraction(x, z_factor(mu))))
                    if mu in out:
                        v = out[mu] + v
                    if v.is_zero():
                        out.pop(mu, None)
                    else:
                        out[mu] = v
            return SymFunc("p", out, self.cap, ring, clean=True)
        raise ValueError(f"cannot convert {self.basis} -> {basis}")

    # -- plumbing ----------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        a, b = self, other
        if a.basis != b.basis:
            b = b.convert(a.basis)
        return a.terms == b.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (size(kv[0]), kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        sym = "s" if self.basis == "schur" else "p"
        return " + ".join(f"({c})*{sym}{list(k)}" for k, c in self.sorted_terms())

    def __repr__(self):
        return f"SymFunc({self})"


def hall_pairing(f: SymFunc, g: SymFunc) -> NovikovSeries:
    """The Hall inner product, extended bilinearly over coefficient series."""
    a = f.convert("p")
    b = g.convert("p")
    out = NovikovSeries({}, clean=True)
    ring = f.ring
    for mu, c in a.terms.items():
        d = b.terms.get(mu)
        if d is None:
            continue
        out = out + (c * d).scale(ring.from_fraction(z_factor(mu)))
    return out


@cache
def _littlewood_richardson(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """Expansion of s_mu * s_nu in the Schur basis (integer coefficients)."""
    n = size(mu) + size(nu)
    prod: dict[Partition, Fraction] = {}
    for r1 in partitions_of(size(mu)):
        x1 = character(mu, r1)
        if not x1:
            continue
        c1 = Fraction(x1, z_factor(r1))
        for r2 in partitions_of(size(nu)):
            x2 = character(nu, r2)
            if not x2:
                continue
            key = _concat(r1, r2)
            prod[key] = prod.get(key, Fraction(0)) + c1 * Fraction(x2, z_factor(r2))
    out: dict[Partition, int] = {}
    for lam in partitions_of(n):
        val = sum((c * character(lam, rho) for rho, c in prod.items()), Fraction(0))
        assert val.denominator == 1
        if val:
            out[lam] = int(val)
    return out


def skew_schur(lam: Partition, mu: Partition, ring, cap: int | None = None) -> SymFunc:
    """The skew Schur function s_{lam/mu} = sum_nu <s_lam, s_mu s_nu> s_nu."""
    lam, mu = tuple(lam), tuple(mu)
    if cap is None:
        cap = size(lam)
    if not contains(lam, mu):
        return SymFunc.zero(ring, cap, "schur")
    n = size(lam) - size(mu)
    terms: dict[Partition, NovikovSeries] = {}
    for nu in partitions_of(n):
        c = _littlewood_richardson(mu, nu).get(lam, 0)
        if c:
            terms[nu] = NovikovSeries.constant(ring.from_fraction(c))
    return SymFunc("schur", terms, cap, ring, clean=True)


def adams(k: int, f: SymFunc) -> SymFunc:
    """The k-th Adams operation: p_n -> p_{kn} on the basis, t -> t^k, params -> params^k."""
    if k < 1:
        raise ValueError("adams degree must be positive")
    g = f.convert("p")
    out: dict[Partition, NovikovSeries] = {}
    for lam, c in g.terms.items():
        key = tuple(p * k for p in lam)
        if size(key) > g.cap:
            continue
        out[key] = c.adams(k)
    res = SymFunc("p", out, g.cap, g.ring, clean=True)
    return res.convert(f.basis)


def sym_exp(g: SymFunc) -> SymFunc:
    """exp of a symmetric function with no constant part, in the power sum basis."""
    g = g.convert("p")
    ring = g.ring
    extra = 0
    c0 = g.terms.get(())
    if c0 is not None:
        if c0.min_degree() == 0:
            raise NonNilpotentArgument("exponential needs a nilpotent argument")
        if c0.cap is None:
            raise NonNilpotentArgument("constant-partition part must carry a degree cap")
        extra = c0.cap
    out = SymFunc.one(ring, g.cap)
    for m in range(g.cap + extra, 0, -1):
        out = SymFunc.one(ring, g.cap) + (g * out).scale_scalar(
            ring.from_fraction(Fraction(1, m)))
    return out


def plethystic_exp(f: SymFunc, variant: str = "plain") -> SymFunc:
    """Exp(f) = exp(sum_k psi_k(f)/k), or with alternating signs (-1)^(k+1)."""
    if variant not in ("plain", "alternating"):
        raise ValueError(f"unknown variant {variant!r}")
    g = f.convert("p")
    ring = g.ring
    log = SymFunc.zero(ring, g.cap)
    kmax = g.cap
    c0 = g.terms.get(())
    if c0 is not None:
        if c0.min_degree() == 0:
            raise NonNilpotentArgument("plethystic exponential needs a nilpotent argument")
        if c0.cap is None:
            raise NonNilpotentArgument("constant-partition part must carry a degree cap")
        kmax = max(kmax, c0.cap)
    for k in range(1, kmax + 1):
        c = Fraction(1, k) if (variant == "plain" or k % 2 == 1) else Fraction(-1, k)
        log = log + adams(k, g).scale_scalar(ring.from_fraction(c))
    return sym_exp(log)


# ---------------------------------------------------------------------------
# principal specializations

def _h_rho(k: int, ring):
    """h_k at x_i = q^(-(2i-1)/2): equals t^(-k) / prod_{j<=k} (1 - t^(-2j))."""
    memo = ring.memo
    key = ("h_rho", k)
    if key not in memo:
        if k < 0:
            memo[key] = ring.zero
        elif k == 0:
            memo[key] = ring.one
        else:
            prev = _h_rho(k - 1, ring)
            memo[key] = prev * ring.t_power(-1) / (ring.one - ring.t_power(-2 * k))
    return memo[key]


def principal_spec_h(k: int, nu: Partition, ring=SYMBOLIC):
    """h_k evaluated at x_i = q^(nu_i - (2i-1)/2), as an exact scalar.

    The finitely many corrected factors of the generating product are
    expanded as a series in the auxiliary variable and folded against the
    closed-form tail values at nu = empty.
    """
    nu = tuple(nu)
    if k < 0:
        return ring.zero
    memo = ring.memo
    key = ("h_nu", k, nu)
    if key in memo:
        return memo[key]
    if not nu:
        out = _h_rho(k, ring)
    else:
        # r-series of prod_i (1 - t^(-2i+1) u) / (1 - t^(2 nu_i - 2i + 1) u) up to u^k
        r = [ring.one] + [ring.zero] * k
        for i, p in enumerate(nu, 1):
            geo = ring.t_power(2 * p - 2 * i + 1)
            new = [ring.zero] * (k + 1)
            acc = ring.one
            for m in range(k + 1):
                # multiply r by the geometric series of geo
                val = ring.zero
                g = ring.one
                for j in range(m, -1, -1):
                    val = val + r[j] * g
                    g = g * geo
                new[m] = val
            head = ring.t_power(-2 * i + 1)
            r = [new[0]] + [new[m] - head * new[m - 1] for m in range(1, k + 1)]
        out = ring.zero
        for m in range(k + 1):
            if not r[m].is_zero():
                out = out + r[m] * _h_rho(k - m, ring)
    memo[key] = out
    return out


def _det(mat, ring):
    """Determinant by fraction-field Gaussian elimination."""
    n = len(mat)
    if n == 0:
        return ring.one
    m = [row[:] for row in mat]
    det = ring.one
    sign = 1
    for col in range(n):
        piv = None
        for row in range(col, n):
            if not m[row][col].is_zero():
                piv = row
                break
        if piv is None:
            return ring.zero
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        pivot = m[col][col]
        det = det * pivot
        for row in range(col + 1, n):
            if m[row][col].is_zero():
                continue
            f = m[row][col] / pivot
            for c2 in range(col, n):
                m[row][c2] = m[row][c2] - f * m[col][c2]
    if sign < 0:
        det = -det
    return det


def principal_spec_skew(lam: Partition, mu: Partition, nu: Partition, ring=SYMBOLIC):
    """s_{lam/mu} at x_i = q^(nu_i - (2i-1)/2) via the Jacobi-Trudi determinant."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    memo = ring.memo
    key = ("ssk", lam, mu, nu)
    if key in memo:
        return memo[key]
    n = len(lam)
    if len(mu) > n:
        out = ring.zero
    elif n == 0:
        out = ring.one
    else:
        mup = mu + (0,) * (n - len(mu))
        mat = [[principal_spec_h(lam[i] - mup[j] - i + j, nu, ring)
                for j in range(n)] for i in range(n)]
        out = _det(mat, ring)
    memo[key] = out
    return out


def principal_spec_schur_hook(lam: Partition, ring=SYMBOLIC):
    """Closed form for s_lam at q^rho: t^(kappa/2) over the product of {hook}."""
    lam = tuple(lam)
    out = ring.t_power(kappa(lam) // 2)
    for h in hooks(lam):
        out = out / ring.quantum_int(h)
    return out


def sign_transpose_residual(lam: Partition, mu: Partition, ring=SYMBOLIC):
    """Residual of s_{lam/mu}(q^rho) - (-1)^(|lam|-|mu|) s_{lam'/mu'}(q^-rho)."""
    lam, mu = tuple(lam), tuple(mu)
    lhs = principal_spec_skew(lam, mu, (), ring)
    rhs = principal_spec_skew(transpose(lam), transpose(mu), (), ring).subs_q_inverse()
    if (size(lam) - size(mu)) % 2:
        rhs = -rhs
    return lhs - rhs


# ---------------------------------------------------------------------------
# the tensor square: two independent sets of variables

PairKey = tuple[Partition, Partition]


class SymFunc2:
    """Symmetric functions in two alphabets, truncated by combined degree.

    The combined degree of a term is |lam1| + |lam2| plus the Novikov degree
    of its coefficient; every stored coefficient is truncated to Novikov
    degree cap - |lam1| - |lam2|.
    """

    __slots__ = ("basis", "terms", "cap", "ring")

    def __init__(self, basis: str, terms: dict[PairKey, NovikovSeries],
                 cap: int, ring, clean: bool = False):
        if basis not in ("schur", "p"):
            raise ValueError(f"unknown basis {basis!r}")
        if not clean:
            fixed: dict[PairKey, NovikovSeries] = {}
            for (l1, l2), c in terms.items():
                room = cap - size(l1) - size(l2)
                if room < 0:
                    continue
                c = c.truncate(room)
                if not c.is_zero():
                    fixed[(l1, l2)] = c
            terms = fixed
        self.basis = basis
        self.terms = terms
        self.cap = cap
        self.ring = ring

    @classmethod
    def one(cls, ring, cap: int, basis: str = "p") -> "SymFunc2":
        c = NovikovSeries.constant(ring.one).truncate(cap)
        return cls(basis, {((), ()): c}, cap, ring, clean=True)

    @classmethod
    def zero(cls, ring, cap: int, basis: str = "p") -> "SymFunc2":
        return cls(basis, {}, cap, ring, clean=True)

    def add_term(self, l1: Partition, l2: Partition, series: NovikovSeries) -> None:
        """Mutating accumulation used while assembling sums; truncates as it goes."""
        room = self.cap - size(l1) - size(l2)
        if room < 0:
            return
        series = series.truncate(room)
        key = (l1, l2)
        if key in self.terms:
            series = self.terms[key] + series
        if series.is_zero():
            self.terms.pop(key, None)
        else:
            self.terms[key] = series

    def __add__(self, other: "SymFunc2") -> "SymFunc2":
        a, b = self, other
        if a.basis != b.basis:
            b = b.convert(a.basis)
        out = SymFunc2(a.basis, dict(a.terms), min(a.cap, b.cap), a.ring, clean=True)
        for (l1, l2), c in b.terms.items():
            out.add_term(l1, l2, c)
        return out

    def __neg__(self) -> "SymFunc2":
        return SymFunc2(self.basis, {k: -c for k, c in self.terms.items()},
                        self.cap, self.ring, clean=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "SymFunc2") -> "SymFunc2":
        a = self.convert("p")
        b = other.convert("p")
        cap = min(a.cap, b.cap)
        out = SymFunc2.zero(self.ring, cap)
        for (k1, k2), c1 in a.terms.items():
            s1 = size(k1) + size(k2)
            for (m1, m2), c2 in b.terms.items():
                if s1 + size(m1) + size(m2) > cap:
                    continue
                out.add_term(_concat(k1, m1), _concat(k2, m2), c1 * c2)
        return out.convert(self.basis)

    def scale(self, series: NovikovSeries) -> "SymFunc2":
        out = SymFunc2.zero(self.ring, self.cap, self.basis)
        for (l1, l2), c in self.terms.items():
            out.add_term(l1, l2, c * series)
        return out

    def scale_scalar(self, scalar) -> "SymFunc2":
        return SymFunc2(self.basis, {k: c.scale(scalar) for k, c in self.terms.items()},
                        self.cap, self.ring)

    def convert(self, basis: str) -> "SymFunc2":
        if basis == self.basis:
            return self
        ring = self.ring
        out = SymFunc2.zero(ring, self.cap, basis)
        if self.basis == "p":
            for (m1, m2), c in self.terms.items():
                for l1 in partitions_of(size(m1)):
                    x1 = character(l1, m1)
                    if not x1:
                        continue
                    for l2 in partitions_of(size(m2)):
                        x2 = character(l2, m2)
                        if not x2:
                            continue
                        out.add_term(l1, l2, c.scale(ring.from_fraction(x1 * x2)))
        else:
            for (l1, l2), c in self.terms.items():
                for m1 in partitions_of(size(l1)):
                    x1 = character(l1, m1)
                    if not x1:
                        continue
                    f1 = Fraction(x1, z_factor(m1))
                    for m2 in partitions_of(size(l2)):
                        x2 = character(l2, m2)
                        if not x2:
                            continue
                        out.add_term(m1, m2,
                                     c.scale(ring.from_fraction(f1 * Fraction(x2, z_factor(m2)))))
        return out

    def exp(self) -> "SymFunc2":
        """exp of an element with positive combined degree in every term."""
        g = self.convert("p")
        if ((), ()) in g.terms and g.terms[((), ())].min_degree() == 0:
            raise NonNilpotentArgument("exponential needs a nilpotent argument")
        ring = self.ring
        out = SymFunc2.one(ring, g.cap)
        for m in range(g.cap, 0, -1):
            out = SymFunc2.one(ring, g.cap) + (g * out).scale_scalar(
                ring.from_fraction(Fraction(1, m)))
        return out

    def coefficient(self, l1: Partition, l2: Partition) -> NovikovSeries:
        return self.terms.get((tuple(l1), tuple(l2)), NovikovSeries({}, clean=True))

    def truncate(self, cap: int) -> "SymFunc2":
        return SymFunc2(self.basis, self.terms, cap, self.ring)

    def slice_first(self) -> SymFunc:
        """The part paired with the empty partition in the second slot."""
        terms = {l1: c for (l1, l2), c in self.terms.items() if l2 == ()}
        return SymFunc(self.basis, terms, self.cap, self.ring, clean=True)

    def map_coeffs(self, fn) -> "SymFunc2":
        return SymFunc2(self.basis,
                        {k: c.map_scalars(fn) for k, c in self.terms.items()},
                        self.cap, self.ring)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc2):
            return NotImplemented
        a, b = self, other
        if a.basis != b.basis:
            b = b.convert(a.basis)
        return a.terms == b.terms

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (size(kv[0][0]) + size(kv[0][1]), kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        sym = "s" if self.basis == "schur" else "p"
        return " + ".join(f"({c})*{sym}{list(k1)}(x){sym}{list(k2)}"
                          for (k1, k2), c in self.sorted_terms())

    def __repr__(self):
        return f"SymFunc2({self})"


def tensor(f: SymFunc, g: SymFunc, cap: int | None = None) -> SymFunc2:
    """The tensor product element f(x) g(y) in the two-alphabet ring."""
    a = f.convert("p")
    b = g.convert("p")
    if cap is None:
        cap = a.cap + b.cap
    out = SymFunc2.zero(f.ring, cap)
    for k1, c1 in a.terms.items():
        for k2, c2 in b.terms.items():
            out.add_term(k1, k2, c1 * c2)
    return out


def contract_middle(u: SymFunc2, v: SymFunc2, transpose_middle: bool = False) -> SymFunc2:
    """Pair the second slot of u with the first slot of v against the Schur kernel.

    With transpose_middle, the kernel pairs s_lam with s_{lam'} instead
    (the dual kernel).
    """
    a = u.convert("schur")
    b = v.convert("schur")
    cap = a.cap + b.cap
    by_mid: dict[Partition, list] = {}
    for (k1, mid), c in a.terms.items():
        by_mid.setdefault(mid, []).append((k1, c))
    out = SymFunc2.zero(u.ring, cap, "schur")
    for (mid, k2), d in b.terms.items():
        key = transpose(mid) if transpose_middle else mid
        for k1, c in by_mid.get(key, ()):
            out.add_term(k1, k2, c * d)
    return out
