"""Exact coefficient arithmetic in t = q^(1/2) and the loop variable a.

A symbolic scalar is a reduced fraction num/den where num is a Laurent
polynomial in t and a with rational coefficients and den is a polynomial
in t alone.  Reduction keeps a unique canonical form (den has nonzero
constant term, integer primitive coefficients, positive leading
coefficient, and shares no polynomial factor with num), so equality is
plain dict comparison.

A numeric ring pins t to a rational value while a stays formal; the same
operation names apply, which lets the higher layers run unchanged in
either mode.

The module also provides NovikovSeries, a truncated multivariate series
in named formal parameters (Kahler classes, brane weights) whose
coefficients are scalars of either kind.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# dense integer polynomial helpers (used only for gcd reduction)

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _primitive(c: list[int]) -> list[int]:
    g = 0
    for x in c:
        g = gcd(g, x)
        if g == 1:
            return c
    if g == 0:
        return []
    return [x // g for x in c]


def _prem_step(a: list[int], b: list[int]) -> list[int]:
    # pseudo-remainder of a by b; exact integer arithmetic throughout
    db = len(b) - 1
    lb = b[-1]
    r = a[:]
    while len(r) - 1 >= db:
        cr = r[-1]
        dr = len(r) - 1
        r = [lb * c for c in r]
        off = dr - db
        for i in range(db + 1):
            r[off + i] -= cr * b[i]
        r.pop()
        _trim(r)
        if not r:
            break
    return r


def _int_poly_gcd(a: list[int], b: list[int]) -> list[int]:
    a = _primitive(_trim(a[:]))
    b = _primitive(_trim(b[:]))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem_step(a, b)
        a, b = b, _primitive(r)
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def _frac_poly_to_int(p: dict[int, Fraction]) -> list[int]:
    # clear denominators; content is irrelevant for gcd purposes
    if not p:
        return []
    deg = max(p)
    lcm = 1
    for c in p.values():
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    out = [0] * (deg + 1)
    for e, c in p.items():
        out[e] = int(c * lcm)
    return out


def _divexact(p: dict[int, Fraction], g: list[int]) -> dict[int, Fraction]:
    # exact division of a Fraction polynomial dict by an integer polynomial
    dg = len(g) - 1
    lead = g[-1]
    rem = dict(p)
    out: dict[int, Fraction] = {}
    while rem:
        e = max(rem)
        c = rem[e]
        k = e - dg
        q = c / lead
        out[k] = q
        for i, gi in enumerate(g):
            if gi:
                key = k + i
                nv = rem.get(key, _ZERO) - q * gi
                if nv:
                    rem[key] = nv
                else:
                    rem.pop(key, None)
    return out


def _poly_mul(p: dict[int, Fraction], q: dict[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            k = e1 + e2
            v = out.get(k, _ZERO) + c1 * c2
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def _num_mul(n1: dict[tuple[int, int], Fraction],
             n2: dict[tuple[int, int], Fraction]) -> dict[tuple[int, int], Fraction]:
    out: dict[tuple[int, int], Fraction] = {}
    for (t1, a1), c1 in n1.items():
        for (t2, a2), c2 in n2.items():
            k = (t1 + t2, a1 + a2)
            v = out.get(k, _ZERO) + c1 * c2
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def _num_add(n1, n2):
    out = dict(n1)
    for k, c in n2.items():
        v = out.get(k, _ZERO) + c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _reduce(num: dict[tuple[int, int], Fraction],
            den: dict[int, Fraction]):
    """Bring num/den to the canonical form described in the module docstring."""
    num = {k: c for k, c in num.items() if c}
    den = {e: c for e, c in den.items() if c}
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return {}, {0: _ONE}
    m = min(den)
    if m:
        den = {e - m: c for e, c in den.items()}
        num = {(te - m, ae): c for (te, ae), c in num.items()}
    if len(den) > 1 or den.get(0) != _ONE:
        # cancel any common polynomial factor (powers of t were moved out above)
        slices: dict[int, dict[int, Fraction]] = {}
        for (te, ae), c in num.items():
            slices.setdefault(ae, {})[te] = c
        g = _frac_poly_to_int(den)
        for sl in slices.values():
            if len(g) <= 1:
                break
            shift = min(sl)
            g = _int_poly_gcd(g, _frac_poly_to_int({e - shift: c for e, c in sl.items()}))
        if len(g) > 1:
            den = _divexact(den, g)
            new_num: dict[tuple[int, int], Fraction] = {}
            for ae, sl in slices.items():
                shift = min(sl)
                q = _divexact({e - shift: c for e, c in sl.items()}, g)
                for e, c in q.items():
                    new_num[(e + shift, ae)] = c
            num = new_num
        # normalize den to primitive integer coefficients, positive leading one
        lcm = 1
        for c in den.values():
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        cont = 0
        for c in den.values():
            cont = gcd(cont, int(c * lcm))
        f = Fraction(cont, lcm)
        if den[max(den)] < 0:
            f = -f
        if f != 1:
            den = {e: c / f for e, c in den.items()}
            num = {k: c / f for k, c in num.items()}
    return num, den


class Scalar:
    """Canonical rational function in t (denominator a-free, numerator Laurent in t, a)."""

    __slots__ = ("num", "den", "ring")

    def __init__(self, num, den, ring, reduced: bool = False):
        if not reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self.ring = ring

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == {(0, 0): _ONE} and self.den == {0: _ONE}

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: "Scalar") -> "Scalar":
        if self.den == other.den:
            return Scalar(_num_add(self.num, other.num), self.den, self.ring)
        d2 = {(e, 0): c for e, c in other.den.items()}
        d1 = {(e, 0): c for e, c in self.den.items()}
        num = _num_add(_num_mul(self.num, d2), _num_mul(other.num, d1))
        return Scalar(num, _poly_mul(self.den, other.den), self.ring)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __neg__(self) -> "Scalar":
        return Scalar({k: -c for k, c in self.num.items()}, self.den, self.ring, reduced=True)

    def __mul__(self, other: "Scalar") -> "Scalar":
        return Scalar(_num_mul(self.num, other.num),
                      _poly_mul(self.den, other.den), self.ring)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        if other.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        aexps = {ae for (_, ae) in other.num}
        if len(aexps) != 1:
            raise ValueError("divisor must be a-free up to a monomial in a")
        ae = aexps.pop()
        lt = {te: c for (te, _), c in other.num.items()}
        m = min(lt)
        lp = {te - m: c for te, c in lt.items()}
        d2 = {(e - m, -ae): c for e, c in other.den.items()}
        num = _num_mul(self.num, d2)
        return Scalar(num, _poly_mul(self.den, lp), self.ring)

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.ring.one / self ** (-k)
        out = self.ring.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- substitutions ------------------------------------------------------
    def subs_q_inverse(self) -> "Scalar":
        """Substitute t by 1/t (equivalently q by 1/q)."""
        d = max(self.den)
        num = {(d - te, ae): c for (te, ae), c in self.num.items()}
        den = {d - e: c for e, c in self.den.items()}
        return Scalar(num, den, self.ring)

    def subs_a_one(self) -> "Scalar":
        """Set a = 1."""
        num: dict[tuple[int, int], Fraction] = {}
        for (te, _), c in self.num.items():
            k = (te, 0)
            v = num.get(k, _ZERO) + c
            if v:
                num[k] = v
            else:
                num.pop(k, None)
        return Scalar(num, self.den, self.ring)

    def adams(self, k: int) -> "Scalar":
        """The degree-k Adams image: t -> t^k, a -> a^k."""
        if k < 1:
            raise ValueError("adams degree must be positive")
        if k == 1:
            return self
        num = {(te * k, ae * k): c for (te, ae), c in self.num.items()}
        den = {e * k: c for e, c in self.den.items()}
        return Scalar(num, den, self.ring, reduced=True)

    def eval_q(self, t_value: Fraction) -> "LaurentScalar":
        """Evaluate at a rational value of t = q^(1/2); a stays formal."""
        t_value = Fraction(t_value)
        if t_value == 0:
            raise ZeroDivisionError("t must be a nonzero rational")
        dv = _ZERO
        for e, c in self.den.items():
            dv += c * t_value ** e
        if dv == 0:
            raise ZeroDivisionError("denominator vanishes at this value of t")
        out: dict[int, Fraction] = {}
        for (te, ae), c in self.num.items():
            v = out.get(ae, _ZERO) + c * t_value ** te
            if v:
                out[ae] = v
            else:
                out.pop(ae, None)
        return LaurentScalar({ae: v / dv for ae, v in out.items()}, NumericQ(t_value))

    # -- plumbing -----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((tuple(sorted(self.num.items())), tuple(sorted(self.den.items()))))

    def __str__(self) -> str:
        ns = _num_str(self.num)
        if self.den == {0: _ONE}:
            return ns
        return f"({ns})/({_den_str(self.den)})"

    def __repr__(self) -> str:
        return f"Scalar({self})"


def _term_str(c: Fraction, vars_part: str) -> str:
    if not vars_part:
        return str(c)
    if c == 1:
        return vars_part
    if c == -1:
        return "-" + vars_part
    return f"{c}*{vars_part}"


def _vpow(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def _num_str(num: dict[tuple[int, int], Fraction]) -> str:
    if not num:
        return "0"
    parts = []
    for (te, ae) in sorted(num):
        c = num[(te, ae)]
        vs = "*".join([_vpow("t", te)] * (te != 0) + [_vpow("a", ae)] * (ae != 0))
        parts.append(_term_str(c, vs))
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def _den_str(den: dict[int, Fraction]) -> str:
    return _num_str({(e, 0): c for e, c in den.items()})


class SymbolicQ:
    """Factory ring for symbolic scalars.  Holds the memo caches."""

    mode = "symbolic"

    def __init__(self):
        self.memo: dict = {}
        self.one = Scalar({(0, 0): _ONE}, {0: _ONE}, self, reduced=True)
        self.zero = Scalar({}, {0: _ONE}, self, reduced=True)

    def from_fraction(self, c) -> Scalar:
        c = Fraction(c)
        if not c:
            return self.zero
        return Scalar({(0, 0): c}, {0: _ONE}, self, reduced=True)

    def monomial(self, c, t_exp: int = 0, a_exp: int = 0) -> Scalar:
        c = Fraction(c)
        if not c:
            return self.zero
        return Scalar({(t_exp, a_exp): c}, {0: _ONE}, self, reduced=True)

    def t_power(self, k: int) -> Scalar:
        return Scalar({(k, 0): _ONE}, {0: _ONE}, self, reduced=True)

    def a_power(self, k: int) -> Scalar:
        return Scalar({(0, k): _ONE}, {0: _ONE}, self, reduced=True)

    def quantum_int(self, n: int) -> Scalar:
        """The balanced quantum integer {n} = t^n - t^(-n)."""
        if n == 0:
            return self.zero
        return Scalar({(n, 0): _ONE, (-n, 0): -_ONE}, {0: _ONE}, self, reduced=True)

    def __repr__(self):
        return "SymbolicQ()"


class LaurentScalar:
    """Numeric-mode scalar: a Laurent polynomial in a over the rationals."""

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: dict[int, Fraction], ring: "NumericQ", clean: bool = False):
        if not clean:
            coeffs = {e: c for e, c in coeffs.items() if c}
        self.coeffs = coeffs
        self.ring = ring

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == {0: _ONE}

    def __add__(self, other: "LaurentScalar") -> "LaurentScalar":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = out.get(e, _ZERO) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentScalar(out, self.ring, clean=True)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LaurentScalar({e: -c for e, c in self.coeffs.items()}, self.ring, clean=True)

    def __mul__(self, other: "LaurentScalar") -> "LaurentScalar":
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                k = e1 + e2
                v = out.get(k, _ZERO) + c1 * c2
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return LaurentScalar(out, self.ring, clean=True)

    def __truediv__(self, other: "LaurentScalar") -> "LaurentScalar":
        if other.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        if len(other.coeffs) != 1:
            raise ValueError("divisor must be a-free up to a monomial in a")
        (ae, c), = other.coeffs.items()
        return LaurentScalar({e - ae: v / c for e, v in self.coeffs.items()}, self.ring, clean=True)

    def __pow__(self, k: int) -> "LaurentScalar":
        if k < 0:
            return self.ring.one / self ** (-k)
        out = self.ring.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def subs_a_one(self) -> "LaurentScalar":
        return LaurentScalar({0: sum(self.coeffs.values(), _ZERO)}, self.ring)

    def adams(self, k: int):
        raise NotImplementedError("Adams operations need symbolic q")

    def subs_q_inverse(self):
        raise NotImplementedError("q -> 1/q substitution needs symbolic q")

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = [_term_str(self.coeffs[e], _vpow("a", e) if e else "") for e in sorted(self.coeffs)]
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"LaurentScalar({self})"


class NumericQ:
    """Factory ring with t = q^(1/2) pinned to an exact rational value."""

    mode = "numeric"

    def __init__(self, t):
        t = Fraction(t)
        if t == 0:
            raise ValueError("t must be nonzero")
        self.t = t
        self.memo: dict = {}
        self.one = LaurentScalar({0: _ONE}, self, clean=True)
        self.zero = LaurentScalar({}, self, clean=True)

    @classmethod
    def from_q(cls, q) -> "NumericQ":
        """Build the ring from a rational value of q, which must be a perfect square."""
        q = Fraction(q)
        if q <= 0:
            raise ValueError("q must be a positive rational")
        rn, rd = isqrt(q.numerator), isqrt(q.denominator)
        if rn * rn != q.numerator or rd * rd != q.denominator:
            raise ValueError("q must be the square of a rational so that t = q^(1/2) is exact")
        return cls(Fraction(rn, rd))

    def from_fraction(self, c) -> LaurentScalar:
        c = Fraction(c)
        if not c:
            return self.zero
        return LaurentScalar({0: c}, self, clean=True)

    def monomial(self, c, t_exp: int = 0, a_exp: int = 0) -> LaurentScalar:
        c = Fraction(c) * self.t ** t_exp
        if not c:
            return self.zero
        return LaurentScalar({a_exp: c}, self, clean=True)

    def t_power(self, k: int) -> LaurentScalar:
        return LaurentScalar({0: self.t ** k}, self, clean=True)

    def a_power(self, k: int) -> LaurentScalar:
        return LaurentScalar({k: _ONE}, self, clean=True)

    def quantum_int(self, n: int) -> LaurentScalar:
        v = self.t ** n - self.t ** (-n)
        if not v:
            return self.zero
        return LaurentScalar({0: v}, self, clean=True)

    def __eq__(self, other):
        return isinstance(other, NumericQ) and other.t == self.t

    def __hash__(self):
        return hash(("NumericQ", self.t))

    def __repr__(self):
        return f"NumericQ({self.t})"


SYMBOLIC = SymbolicQ()


def quantum_integer(n: int, ring=SYMBOLIC):
    """The balanced quantum integer {n} = q^(n/2) - q^(-n/2)."""
    return ring.quantum_int(n)


# ---------------------------------------------------------------------------
# truncated multivariate series in named formal parameters

Key = tuple[tuple[str, int], ...]


def _key_mul(k1: Key, k2: Key) -> Key:
    d = dict(k1)
    for n, e in k2:
        d[n] = d.get(n, 0) + e
    return tuple(sorted(d.items()))


def _key_pow(k: Key, p: int) -> Key:
    return tuple((n, e * p) for n, e in k)


class NovikovSeries:
    """Truncated series in named formal parameters with scalar coefficients.

    Terms are keyed by sorted tuples of (name, positive exponent) pairs; the
    empty key is the constant term.  A term is kept while its weighted total
    degree is at most cap (cap None means no truncation; weights default to
    one per parameter).
    """

    __slots__ = ("terms", "cap", "weights")

    def __init__(self, terms: dict[Key, object], cap: int | None = None,
                 weights: dict[str, int] | None = None, clean: bool = False):
        if not clean:
            terms = {k: c for k, c in terms.items() if not c.is_zero()}
            if cap is not None:
                terms = {k: c for k, c in terms.items()
                         if _wdeg(k, weights) <= cap}
        self.terms = terms
        self.cap = cap
        self.weights = weights

    # -- constructors -------------------------------------------------------
    @classmethod
    def constant(cls, scalar, cap: int | None = None, weights=None) -> "NovikovSeries":
        if scalar.is_zero():
            return cls({}, cap, weights, clean=True)
        return cls({(): scalar}, cap, weights, clean=True)

    @classmethod
    def monomial(cls, exps: dict[str, int], scalar, cap: int | None = None,
                 weights=None) -> "NovikovSeries":
        key = tuple(sorted((n, e) for n, e in exps.items() if e))
        if any(e < 0 for _, e in key):
            raise ValueError("parameter exponents must be nonnegative")
        return cls({key: scalar}, cap, weights)

    # -- helpers -------------------------------------------------------------
    def degree(self, key: Key) -> int:
        return _wdeg(key, self.weights)

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self, ring):
        return self.terms.get((), ring.zero)

    def min_degree(self) -> int | None:
        if not self.terms:
            return None
        return min(self.degree(k) for k in self.terms)

    def _caps(self, other) -> int | None:
        if self.cap is None:
            return other.cap
        if other.cap is None:
            return self.cap
        return min(self.cap, other.cap)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other: "NovikovSeries") -> "NovikovSeries":
        out = dict(self.terms)
        for k, c in other.terms.items():
            if k in out:
                v = out[k] + c
                if v.is_zero():
                    del out[k]
                else:
                    out[k] = v
            else:
                out[k] = c
        cap = self._caps(other)
        if cap is not None:
            out = {k: c for k, c in out.items() if _wdeg(k, self.weights) <= cap}
        return NovikovSeries(out, cap, self.weights, clean=True)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return NovikovSeries({k: -c for k, c in self.terms.items()},
                             self.cap, self.weights, clean=True)

    def __mul__(self, other: "NovikovSeries") -> "NovikovSeries":
        cap = self._caps(other)
        out: dict[Key, object] = {}
        for k1, c1 in self.terms.items():
            d1 = _wdeg(k1, self.weights)
            for k2, c2 in other.terms.items():
                if cap is not None and d1 + _wdeg(k2, self.weights) > cap:
                    continue
                k = _key_mul(k1, k2)
                v = c1 * c2
                if k in out:
                    v = out[k] + v
                if v.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = v
        return NovikovSeries(out, cap, self.weights, clean=True)

    def scale(self, scalar) -> "NovikovSeries":
        if scalar.is_zero():
            return NovikovSeries({}, self.cap, self.weights, clean=True)
        return NovikovSeries({k: c * scalar for k, c in self.terms.items()},
                             self.cap, self.weights)

    def truncate(self, cap: int | None) -> "NovikovSeries":
        if cap is None:
            return NovikovSeries(dict(self.terms), None, self.weights, clean=True)
        return NovikovSeries({k: c for k, c in self.terms.items()
                              if _wdeg(k, self.weights) <= cap},
                             cap, self.weights, clean=True)

    def inverse(self, ring) -> "NovikovSeries":
        """Multiplicative inverse; requires an invertible constant term."""
        c0 = self.terms.get(())
        if c0 is None or c0.is_zero():
            raise ValueError("series has no constant term, cannot invert")
        c0inv = ring.one / c0
        rest = NovikovSeries({k: c for k, c in self.terms.items() if k},
                             self.cap, self.weights, clean=True)
        if rest.is_zero():
            return NovikovSeries.constant(c0inv, self.cap, self.weights)
        if self.cap is None:
            raise ValueError("inverting a non-constant series needs a finite cap")
        # Neumann series: 1/(c0 + r) = c0inv * sum_k (-r * c0inv)^k
        base = rest.scale(-c0inv)
        out = NovikovSeries.constant(ring.one, self.cap, self.weights)
        term = NovikovSeries.constant(ring.one, self.cap, self.weights)
        for _ in range(self.cap):
            term = term * base
            if term.is_zero():
                break
            out = out + term
        return out.scale(c0inv)

    def adams(self, k: int) -> "NovikovSeries":
        """Scale every exponent by k and apply the scalar Adams operation."""
        out = {_key_pow(key, k): c.adams(k) for key, c in self.terms.items()}
        if self.cap is not None:
            out = {key: c for key, c in out.items() if _wdeg(key, self.weights) <= self.cap}
        return NovikovSeries(out, self.cap, self.weights, clean=True)

    def eval_q(self, t_value) -> "NovikovSeries":
        return NovikovSeries({k: c.eval_q(t_value) for k, c in self.terms.items()},
                             self.cap, self.weights, clean=True)

    def map_scalars(self, fn) -> "NovikovSeries":
        """Apply a scalar-to-scalar map to every coefficient."""
        return NovikovSeries({k: fn(c) for k, c in self.terms.items()},
                             self.cap, self.weights)

    # -- plumbing -------------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (self.degree(kv[0]), kv[0]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, NovikovSeries):
            return NotImplemented
        return self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.sorted_terms():
            mono = "*".join(_vpow(n, e) for n, e in k)
            cs = str(c)
            if mono:
                if ("+" in cs or "/" in cs or (" - " in cs) or cs.startswith("-")):
                    cs = f"({cs})"
                parts.append(f"{cs}*{mono}" if cs != "1" else mono)
            else:
                parts.append(cs)
        return " + ".join(parts)

    def __repr__(self):
        return f"NovikovSeries({self})"


def _wdeg(key: Key, weights: dict[str, int] | None) -> int:
    if weights is None:
        return sum(e for _, e in key)
    return sum(e * weights.get(n, 1) for n, e in key)


def monomial_key(exps: dict[str, int]) -> Key:
    return tuple(sorted((n, e) for n, e in exps.items() if e))


def key_string(key: Key) -> str:
    if not key:
        return "1"
    return "*".join(_vpow(n, e) for n, e in key)
