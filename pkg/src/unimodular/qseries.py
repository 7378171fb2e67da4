"""Exact truncated q-series on the quarter-integer exponent grid.

A series is a finite map from exponents-in-quarters to rational
coefficients: the key e stands for the monomial q^(e/4).  Integer-exponent
series are the special case e = 0 (mod 4).  Every series carries a
truncation bound: coefficients at exponents >= trunc are unknown, not
zero, and all arithmetic propagates the largest bound it can still
guarantee (the minimum of the operand bounds, shifted by the valuation of
the other factor under multiplication).

Coefficients are fractions.Fraction throughout; nothing here rounds.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Rat = Fraction


def rat_str(x) -> str:
    """Render an exact rational as 'p' or 'p/q'."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(s) -> Fraction:
    """Parse 'p' or 'p/q' (or an int) into a Fraction."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s).strip())


def _monomial_str(e: int) -> str:
    if e == 0:
        return ""
    if e % 4 == 0:
        k = e // 4
        return "q" if k == 1 else f"q^{k}"
    return f"q^({e}/4)"


class QSeries:
    """Truncated series sum_e c_e q^(e/4), immutable by convention.

    terms: dict exponent-in-quarters -> nonzero Fraction, every key < trunc.
    trunc: first unknown exponent (in quarters), at least 1.
    """

    __slots__ = ("terms", "trunc")

    def __init__(self, terms=(), trunc: int = 1):
        trunc = int(trunc)
        if trunc < 1:
            raise ValueError("truncation must be positive")
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[int, Fraction] = {}
        for e, c in items:
            e = int(e)
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if e >= trunc:
                continue
            c = Fraction(c)
            if c:
                acc[e] = acc.get(e, Fraction(0)) + c
        self.terms = {e: c for e, c in sorted(acc.items()) if c}
        self.trunc = trunc

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(trunc: int) -> "QSeries":
        return QSeries((), trunc)

    @staticmethod
    def one(trunc: int) -> "QSeries":
        return QSeries({0: 1}, trunc)

    @staticmethod
    def monomial(e: int, c, trunc: int) -> "QSeries":
        return QSeries({e: c}, trunc)

    # -- inspection -------------------------------------------------------

    def coeff(self, e: int) -> Fraction:
        """Coefficient of q^(e/4); e must lie below the truncation."""
        if e >= self.trunc:
            raise ValueError(f"exponent {e}/4 is beyond truncation {self.trunc}/4")
        return self.terms.get(e, Fraction(0))

    def items(self):
        """Sorted (exponent-in-quarters, coefficient) pairs."""
        return list(self.terms.items())

    def valuation(self) -> int:
        """Least stored exponent; equals trunc for the (known-)zero series."""
        return min(self.terms) if self.terms else self.trunc

    def is_zero(self) -> bool:
        return not self.terms

    def integer_coeffs(self, upto: int | None = None) -> list[Fraction]:
        """Coefficients at integer exponents 0..upto (default: all known)."""
        if upto is None:
            upto = (self.trunc - 1) // 4
        if 4 * upto >= self.trunc:
            raise ValueError(f"exponent {upto} is beyond truncation")
        return [self.terms.get(4 * m, Fraction(0)) for m in range(upto + 1)]

    # -- ring operations --------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return QSeries({0: other}, self.trunc)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = min(self.trunc, o.trunc)
        acc = dict(self.terms)
        for e, c in o.terms.items():
            acc[e] = acc.get(e, Fraction(0)) + c
        return QSeries(acc, t)

    __radd__ = __add__

    def __neg__(self):
        return QSeries({e: -c for e, c in self.terms.items()}, self.trunc)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QSeries({e: c * other for e, c in self.terms.items()}, self.trunc)
        if not isinstance(other, QSeries):
            return NotImplemented
        t = min(self.trunc + other.valuation(), other.trunc + self.valuation())
        acc: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            if e1 >= t:
                continue
            for e2, c2 in other.terms.items():
                e = e1 + e2
                if e >= t:
                    continue
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return QSeries(acc, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QSeries.one(self.trunc if k == 0 else self.trunc)
        base = self
        # binary powering; truncation propagates through each product
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> "QSeries":
        """Multiplicative inverse; requires constant term exactly 1."""
        c0 = self.terms.get(0)
        if c0 is None:
            raise ValueError("not invertible at this order")
        if c0 != 1:
            raise ValueError(f"inversion requires constant term 1, got {c0}")
        t = self.trunc
        inv = {0: Fraction(1)}
        # b_e = -sum_{0<i<=e} a_i b_{e-i}, running over stored exponents only
        tail = [(e, c) for e, c in self.terms.items() if e > 0]
        for e in range(1, t):
            s = Fraction(0)
            for i, c in tail:
                if i > e:
                    break
                b = inv.get(e - i)
                if b is not None:
                    s -= c * b
            if s:
                inv[e] = s
        return QSeries(inv, t)

    def truncate(self, t: int) -> "QSeries":
        """Forget coefficients at exponents >= t (cannot extend knowledge)."""
        t = min(int(t), self.trunc)
        return QSeries({e: c for e, c in self.terms.items() if e < t}, t)

    def subs_q2(self) -> "QSeries":
        """Substitute q -> q^2: doubles every exponent and the truncation."""
        return QSeries({2 * e: c for e, c in self.terms.items()}, 2 * self.trunc)

    # -- comparison and rendering ----------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSeries({0: other}, self.trunc)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.terms == other.terms and self.trunc == other.trunc

    def __hash__(self):
        return hash((tuple(self.terms.items()), self.trunc))

    def agrees_with(self, other: "QSeries", upto: int | None = None) -> bool:
        """True when coefficients match at every exponent < upto.

        Default upto is the shared truncation.
        """
        t = min(self.trunc, other.trunc)
        if upto is not None:
            if upto > t:
                raise ValueError("comparison window exceeds truncation")
            t = upto
        for e in set(self.terms) | set(other.terms):
            if e < t and self.terms.get(e, 0) != other.terms.get(e, 0):
                return False
        return True

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms.items():
            mono = _monomial_str(e)
            if not mono:
                parts.append((c < 0, rat_str(abs(c))))
            elif abs(c) == 1:
                parts.append((c < 0, mono))
            else:
                parts.append((c < 0, f"{rat_str(abs(c))}*{mono}"))
        out = []
        for i, (neg, body) in enumerate(parts):
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append(("- " if neg else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"QSeries({self}, trunc={self.trunc}/4)"

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "den4": [[e, rat_str(c)] for e, c in self.terms.items()],
            "trunc": self.trunc,
        }

    @staticmethod
    def from_json_dict(d: dict) -> "QSeries":
        return QSeries([(int(e), parse_rat(c)) for e, c in d["den4"]], int(d["trunc"]))


# -- classical series --------------------------------------------------------
#
# All constructors take the truncation in quarters.  Products over m stop as
# soon as the factor's leading exponent leaves the window, at which point the
# factor is 1 to this precision.


def _int_grid(poly: dict[int, Fraction], trunc: int) -> QSeries:
    """Lift a dict {integer exponent: coeff} onto the quarter grid."""
    return QSeries({4 * k: c for k, c in poly.items()}, trunc)


def _poly_mul(a: dict, b: dict, kmax: int) -> dict:
    out: dict[int, Fraction] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            if e <= kmax:
                out[e] = out.get(e, Fraction(0)) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _poly_binom_factor(k: int, power: int, sign: int, kmax: int) -> dict:
    """(1 + sign*x^k)^power as an integer-exponent dict, degree <= kmax."""
    out = {0: Fraction(1)}
    binom = 1
    for i in range(1, power + 1):
        binom = binom * (power - i + 1) // i
        if i * k > kmax:
            break
        out[i * k] = Fraction(binom * (sign ** i))
    return out


def _poly_product(factors, kmax: int) -> dict:
    out = {0: Fraction(1)}
    for f in factors:
        out = _poly_mul(out, f, kmax)
    return out


def _poly_inverse(a: dict, kmax: int) -> dict:
    assert a.get(0) == 1
    inv = {0: Fraction(1)}
    tail = sorted((e, c) for e, c in a.items() if e > 0)
    for e in range(1, kmax + 1):
        s = Fraction(0)
        for i, c in tail:
            if i > e:
                break
            b = inv.get(e - i)
            if b is not None:
                s -= c * b
        if s:
            inv[e] = s
    return inv


@lru_cache(maxsize=None)
def theta3(trunc: int) -> QSeries:
    """theta3(q) = 1 + 2q + 2q^4 + 2q^9 + ... (exponents m^2)."""
    terms = {0: Fraction(1)}
    m = 1
    while 4 * m * m < trunc:
        terms[4 * m * m] = Fraction(2)
        m += 1
    return QSeries(terms, trunc)


@lru_cache(maxsize=None)
def theta4(trunc: int) -> QSeries:
    """theta4(q) = 1 - 2q + 2q^4 - 2q^9 + ... (alternating m^2)."""
    terms = {0: Fraction(1)}
    m = 1
    while 4 * m * m < trunc:
        terms[4 * m * m] = Fraction(2 if m % 2 == 0 else -2)
        m += 1
    return QSeries(terms, trunc)


@lru_cache(maxsize=None)
def theta2(trunc: int) -> QSeries:
    """theta2(q) = 2q^(1/4) + 2q^(9/4) + ... (exponents (2m+1)^2/4)."""
    terms = {}
    m = 0
    while (2 * m + 1) ** 2 < trunc:
        terms[(2 * m + 1) ** 2] = Fraction(2)
        m += 1
    return QSeries(terms, trunc)


@lru_cache(maxsize=None)
def delta8(trunc: int) -> QSeries:
    """delta8(q) = q prod_m (1-q^(2m-1))^8 (1-q^(4m))^8 = q - 8q^2 + 28q^3 - ...

    Weight-4 form for the theta expansion of odd unimodular lattices.
    """
    if trunc < 8:
        raise ValueError("truncation too small for delta8")
    kmax = (trunc - 1) // 4 - 1
    factors = []
    m = 1
    while 2 * m - 1 <= kmax:
        factors.append(_poly_binom_factor(2 * m - 1, 8, -1, kmax))
        m += 1
    m = 1
    while 4 * m <= kmax:
        factors.append(_poly_binom_factor(4 * m, 8, -1, kmax))
        m += 1
    prod = _poly_product(factors, kmax)
    return _int_grid({k + 1: c for k, c in prod.items()}, trunc)


@lru_cache(maxsize=None)
def _g2_h2(trunc: int) -> tuple[QSeries, QSeries]:
    if trunc < 8:
        raise ValueError("truncation too small")
    kmax = (trunc - 1) // 4
    odd = range(1, kmax + 1, 2)
    even = range(2, kmax + 1, 2)
    plus_odd = _poly_product((_poly_binom_factor(k, 8, +1, kmax) for k in odd), kmax)
    inv_plus_odd = _poly_inverse(plus_odd, kmax)
    plus_even = _poly_product((_poly_binom_factor(k, 8, +1, kmax - 1) for k in even), kmax - 1)
    minus_odd = _poly_product((_poly_binom_factor(k, 8, -1, kmax) for k in odd), kmax)
    g = _poly_mul(plus_even, {k: c for k, c in inv_plus_odd.items() if k <= kmax - 1}, kmax - 1)
    g = {k + 1: 16 * c for k, c in g.items()}
    h = _poly_mul(minus_odd, inv_plus_odd, kmax)
    return _int_grid(g, trunc), _int_grid(h, trunc)


def g2(trunc: int) -> QSeries:
    """g2(q) = 16q prod_m ((1+q^(2m))/(1+q^(2m-1)))^8 = 16q - 128q^2 + ...

    Satisfies g2 * theta3^4 = theta2^4 and g2 + h2 = 1.
    """
    return _g2_h2(trunc)[0]


def h2(trunc: int) -> QSeries:
    """h2(q) = prod_m ((1-q^(2m-1))/(1+q^(2m-1)))^8 = 1 - 16q + 128q^2 - ...

    Satisfies h2 * theta3^4 = theta4^4 and g2 + h2 = 1.
    """
    return _g2_h2(trunc)[1]


@lru_cache(maxsize=None)
def eisenstein_e4(trunc: int) -> QSeries:
    """E4 in the nome x = q^2: 1 + 240 sum sigma3(m) x^m, x^m at 8m quarters."""
    if trunc < 9:
        raise ValueError("truncation too small for eisenstein_e4")
    mmax = (trunc - 1) // 8
    terms = {0: Fraction(1)}
    for m in range(1, mmax + 1):
        sigma3 = sum(d ** 3 for d in range(1, m + 1) if m % d == 0)
        terms[8 * m] = Fraction(240 * sigma3)
    return QSeries(terms, trunc)


@lru_cache(maxsize=None)
def cusp_delta24(trunc: int) -> QSeries:
    """The weight-12 cusp form in the nome x = q^2: x prod (1-x^m)^24."""
    if trunc < 9:
        raise ValueError("truncation too small for cusp_delta24")
    mmax = (trunc - 1) // 8
    kmax = mmax - 1
    prod = _poly_product(
        (_poly_binom_factor(m, 24, -1, kmax) for m in range(1, kmax + 1)), kmax
    )
    return QSeries({8 * (k + 1): c for k, c in prod.items()}, trunc)
