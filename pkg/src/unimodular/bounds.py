"""Certified upper bounds for the minimal norm of unimodular lattices.

The theta series of an n-dimensional odd unimodular lattice L lies in the
ring generated by theta3 and the weight-4 form delta8, so

    Theta_L = sum_{j=0}^{[n/8]} a_j * delta8^j * theta3^(n-8j)

with integer a_j, and the theta series of its shadow S (the translates of
the even sublattice inside the dual that are not in L) is obtained by the
standard imaginary transformation of each basis term:

    Theta_S = sum_j (-1)^j / 16^j * a_j * theta4(q^2)^(8j) * theta2^(n-8j).

If L has minimal norm mu, the coefficients of q^1 .. q^(mu-1) in Theta_L
vanish; this forces a_0 .. a_(mu-1) and leaves a_mu .. a_[n/8] free.  Both
series must then have coefficients that could count lattice vectors:

  * every coefficient is a nonnegative integer;
  * vectors come in +/- pairs, so all shadow coefficients and all theta
    coefficients beyond the constant term are even;
  * writing beta_r for the number of shadow vectors of norm r, at most one
    beta_r with r < (mu+2)/2 is nonzero, beta_r = 0 for r < mu/4, and
    beta_r <= 2 for r < mu/2 (differences and sums of shadow vectors land
    in L, which has minimal norm mu);
  * if 2k shadow vectors have norm s < (mu+2)/2, picking one from each
    antipodal pair gives k vectors whose pairwise inner products are
    forced into a small set; if only one inner product b is possible the
    Gram matrix (s-b)I + bJ must be positive semidefinite of rank <= n.

`feasibility_scan` decides whether such a coefficient assignment exists
for a given (n, mu); `mu_upper` combines the odd scan with the classical
even-lattice bound (extremal modular form) into a certified upper bound,
and `table1` tabulates the results.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .qseries import (
    QSeries,
    Rat,
    cusp_delta24,
    delta8,
    eisenstein_e4,
    rat_str,
    theta2,
    theta3,
    theta4,
)

# Elimination reasons, ordered from shallowest to deepest check.  A scan
# that needs a deeper check to kill every branch reports the deepest
# reason used.
R_PREFIX = "prefix violation"
R_NONINT = "non-integral coefficient"
R_NEG = "negative coefficient"
R_PARITY = "parity violation"
R_COUNT = "shadow-count violation"
R_RANK = "rank obstruction"
R_UNBOUNDED = "unbounded free coefficient"
R_LIMIT = "candidate limit exceeded"

_SEVERITY = {
    R_PREFIX: 0,
    R_NONINT: 1,
    R_NEG: 2,
    R_PARITY: 3,
    R_COUNT: 4,
    R_RANK: 5,
}

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
INCONCLUSIVE = "inconclusive"

MAX_CANDIDATES = 4096


# ---------------------------------------------------------------------------
# basis series


@lru_cache(maxsize=None)
def theta_basis(n: int, trunc: int) -> tuple[QSeries, ...]:
    """Basis delta8^j * theta3^(n-8j), j = 0..[n/8], truncated at `trunc`."""
    if n < 1:
        raise ValueError("dimension must be positive")
    t3 = theta3(trunc)
    d8 = delta8(trunc) if n >= 8 else None
    out = []
    for j in range(n // 8 + 1):
        s = t3 ** (n - 8 * j)
        if j:
            s = s * d8 ** j
        out.append(s.truncate(trunc))
    return tuple(out)


@lru_cache(maxsize=None)
def shadow_basis(n: int, trunc: int) -> tuple[QSeries, ...]:
    """Shadow counterparts (-1/16)^j * theta4(q^2)^(8j) * theta2^(n-8j)."""
    if n < 1:
        raise ValueError("dimension must be positive")
    t2 = theta2(trunc)
    t4q2 = theta4(trunc).subs_q2()
    out = []
    for j in range(n // 8 + 1):
        s = (t4q2 ** (8 * j)) * (t2 ** (n - 8 * j)) * Fraction((-1) ** j, 16 ** j)
        out.append(s.truncate(trunc))
    return tuple(out)


def lattice_theta(n: int, coeffs, trunc: int) -> QSeries:
    """sum a_j * delta8^j * theta3^(n-8j) for the given coefficients."""
    basis = theta_basis(n, trunc)
    if len(coeffs) != len(basis):
        raise ValueError("expected %d coefficients" % len(basis))
    acc = QSeries.zero(trunc)
    for a, b in zip(coeffs, basis):
        if a:
            acc = acc + b * Fraction(a)
    return acc


def shadow_theta(n: int, coeffs, trunc: int) -> QSeries:
    """Shadow theta series attached to the same coefficients."""
    basis = shadow_basis(n, trunc)
    if len(coeffs) != len(basis):
        raise ValueError("expected %d coefficients" % len(basis))
    acc = QSeries.zero(trunc)
    for a, b in zip(coeffs, basis):
        if a:
            acc = acc + b * Fraction(a)
    return acc


def default_trunc(n: int, mu: int) -> int:
    """Truncation (in quarter-norm units) covering every checked window."""
    return max(4 * (mu + 4) + 1, n + 33)


# ---------------------------------------------------------------------------
# prefix fit


@dataclass
class ThetaFit:
    """Partially determined basis coefficients for a minimal-norm target.

    coeffs[j] is the forced value of a_j, or None for a free coefficient.
    prefix_residual lists (m, value) pairs where a fully forced fit fails
    to kill the q^m theta coefficient, m < mu.
    """

    dim: int
    mu: int
    trunc: int
    coeffs: list
    prefix_residual: list = field(default_factory=list)

    @property
    def free(self) -> list[int]:
        return [j for j, a in enumerate(self.coeffs) if a is None]

    def resolved(self, assignment: dict) -> list[Fraction]:
        out = []
        for j, a in enumerate(self.coeffs):
            out.append(Fraction(assignment[j]) if a is None else a)
        return out


def solve_prefix(n: int, mu: int, trunc: int | None = None) -> ThetaFit:
    """Force a_0..a_(mu-1) from Theta_L = 1 + O(q^mu).

    The basis is unitriangular in the q-grading (delta8^j starts at q^j
    with coefficient 1), so the first min(mu, [n/8]+1) coefficients are
    determined; any further prefix equations are overdetermined checks and
    land in prefix_residual when violated.
    """
    if mu < 1:
        raise ValueError("minimal norm target must be >= 1")
    if trunc is None:
        trunc = default_trunc(n, mu)
    basis = theta_basis(n, trunc)
    jmax = n // 8
    coeffs: list = [None] * (jmax + 1)
    coeffs[0] = Fraction(1)
    residual = []
    for m in range(1, mu):
        acc = Fraction(0)
        for j in range(min(m, jmax + 1)):
            if coeffs[j]:
                acc += coeffs[j] * basis[j].coeff(4 * m)
        if m <= jmax:
            coeffs[m] = -acc  # diagonal coefficient is 1
        elif acc != 0:
            residual.append((m, acc))
    return ThetaFit(n, mu, trunc, coeffs, residual)


def fit_from_theta(n: int, theta: QSeries) -> list[Fraction]:
    """Recover the basis coefficients of a known lattice theta series.

    Needs the coefficients of q^0..q^[n/8]; raises if `theta` is truncated
    too early.
    """
    jmax = n // 8
    if theta.trunc <= 4 * jmax:
        raise ValueError("theta series must be known past q^%d" % jmax)
    basis = theta_basis(n, max(4 * jmax + 1, 8))
    coeffs: list[Fraction] = []
    for m in range(jmax + 1):
        acc = theta.coeff(4 * m)
        for j, a in enumerate(coeffs):
            acc -= a * basis[j].coeff(4 * m)
        coeffs.append(acc)
    return coeffs


# ---------------------------------------------------------------------------
# Gram-matrix obstruction


@dataclass
class GramCheck:
    """Outcome of the pairwise inner-product test for k shadow vectors of
    norm s in a lattice of minimal norm mu."""

    dim: int
    mu: int
    s: Fraction
    k: int
    tset: tuple
    contradiction: bool
    detail: str


def gram_obstruction(n: int, s, k: int, mu: int) -> GramCheck:
    """Check whether k norm-s shadow vectors can coexist in dimension n.

    For distinct shadow vectors u, v (no antipodal pairs among the k), both
    u-v and u+v are nonzero lattice vectors, u-v lies in the even
    sublattice, and neither is shorter than mu.  That confines t = u.v to

        T = { t : |t| < s, 2s-2t an even integer >= mu rounded up to even,
                           2s+2t an integer >= mu }.

    If T = {b}, the Gram matrix of the k vectors is (s-b)I + bJ with
    eigenvalues s-b (k-1 times) and s+(k-1)b; it must be positive
    semidefinite of rank <= n.  If T has several elements the test is
    inconclusive.
    """
    s = Fraction(s)
    if s <= 0:
        raise ValueError("shadow norm must be positive")
    mu_even = mu + (mu % 2)
    tset = []
    q1 = mu_even
    while q1 < 4 * s:  # q1 = |u-v|^2, so t = s - q1/2 and |t| < s
        t = s - Fraction(q1, 2)
        p2 = 4 * s - q1  # |u+v|^2
        if p2.denominator == 1 and p2 >= mu:
            tset.append(t)
        q1 += 2
    tset.sort()
    base = dict(dim=n, mu=mu, s=s, k=k, tset=tuple(tset))
    if k < 2:
        return GramCheck(**base, contradiction=False,
                         detail="fewer than two vectors, nothing to compare")
    if len(tset) == 0:
        return GramCheck(**base, contradiction=False,
                         detail="no admissible inner product (test inconclusive)")
    if len(tset) > 1:
        return GramCheck(**base, contradiction=False,
                         detail="several admissible inner products %s"
                                % ", ".join(rat_str(t) for t in tset))
    b = tset[0]
    lam2 = s + (k - 1) * b  # other eigenvalue s-b is positive since b < s
    if lam2 < 0:
        return GramCheck(
            **base, contradiction=True,
            detail="%d vectors of norm %s with pairwise inner product %s give "
                   "a Gram matrix with negative eigenvalue %s"
                   % (k, rat_str(s), rat_str(b), rat_str(lam2)))
    rank = (k - 1) + (1 if lam2 > 0 else 0)
    if rank > n:
        return GramCheck(
            **base, contradiction=True,
            detail="%d vectors of norm %s with pairwise inner product %s span "
                   "rank %d > dimension %d" % (k, rat_str(s), rat_str(b), rank, n))
    return GramCheck(
        **base, contradiction=False,
        detail="Gram matrix (s-b)I + bJ with b=%s is admissible (rank %d)"
               % (rat_str(b), rank))


# ---------------------------------------------------------------------------
# feasibility scan


@dataclass
class Branch:
    """One assignment of the free coefficients, with its verdict."""

    assignment: dict
    verdict: str
    reason: str | None = None
    detail: str | None = None
    coeffs: list | None = None
    theta: QSeries | None = None
    shadow: QSeries | None = None
    obstruction: GramCheck | None = None

    def to_json_dict(self) -> dict:
        d = {
            "assignment": {str(j): rat_str(a) for j, a in self.assignment.items()},
            "verdict": self.verdict,
        }
        if self.reason:
            d["reason"] = self.reason
        if self.detail:
            d["detail"] = self.detail
        if self.coeffs is not None:
            d["coefficients"] = [rat_str(a) for a in self.coeffs]
        if self.theta is not None:
            d["theta"] = str(self.theta)
        if self.shadow is not None:
            d["shadow"] = str(self.shadow)
        return d


@dataclass
class FeasibilityReport:
    """Outcome of scanning dimension `dim` for minimal norm `mu`."""

    dim: int
    mu: int
    trunc: int
    verdict: str
    reason: str | None
    detail: str | None
    fit: ThetaFit
    branches: list
    theta: QSeries | None = None   # witness series of the first feasible branch
    shadow: QSeries | None = None

    @property
    def feasible(self) -> bool:
        return self.verdict == FEASIBLE

    def to_json_dict(self) -> dict:
        d = {
            "dim": self.dim,
            "mu": self.mu,
            "verdict": self.verdict,
            "forced": {
                str(j): rat_str(a)
                for j, a in enumerate(self.fit.coeffs)
                if a is not None
            },
            "free": self.fit.free,
            "branches": [b.to_json_dict() for b in self.branches],
        }
        if self.reason:
            d["reason"] = self.reason
        if self.detail:
            d["detail"] = self.detail
        if self.theta is not None:
            d["theta"] = str(self.theta)
            d["shadow"] = str(self.shadow)
        return d

    def summary(self) -> str:
        head = "n=%d mu=%d: %s" % (self.dim, self.mu, self.verdict)
        if self.reason:
            head += " (%s)" % self.reason
        return head


def _shadow_grid(n: int, trunc: int) -> list[int]:
    """Shadow exponents (quarter-norm units): e = n mod 8 up to n+32."""
    e0 = n % 8
    return list(range(e0, min(n + 32, trunc - 1) + 1, 8))


def _solve_even_congruence(s: Fraction, t: Fraction):
    """Integers a with s + t*a a (nonnegative-unconstrained) even integer.

    Returns (a0, step) describing the progression, or a reason string when
    empty: R_NONINT if s + t*a is never an integer, R_PARITY if integral
    values exist but never even.
    """
    den = math.lcm(s.denominator, t.denominator)
    sv = int(s * den)
    tv = int(t * den)
    # need sv + tv*a == 0 (mod 2*den)
    g = math.gcd(tv, 2 * den)
    if sv % g != 0:
        g1 = math.gcd(tv, den)
        return R_NONINT if sv % g1 != 0 else R_PARITY
    step = 2 * den // g
    a0 = (-sv // g * pow(tv // g, -1, step)) % step
    return a0, step


def _affine_bounds(constraints):
    """Integer interval from constraints s + t*a >= lo_c (and <= hi_c).

    Each constraint is (s, t, upper) with t != 0; `upper` is None for a
    pure nonnegativity constraint or the numeric cap.  Returns (lo, hi)
    with None marking an unbounded side.
    """
    lo = None
    hi = None
    for s, t, cap in constraints:
        # s + t*a >= 0
        bound = -s / t
        if t > 0:
            b = math.ceil(bound)
            lo = b if lo is None else max(lo, b)
        else:
            b = math.floor(bound)
            hi = b if hi is None else min(hi, b)
        if cap is not None:
            # s + t*a <= cap
            bound = (cap - s) / t
            if t > 0:
                b = math.floor(bound)
                hi = b if hi is None else min(hi, b)
            else:
                b = math.ceil(bound)
                lo = b if lo is None else max(lo, b)
    return lo, hi


def _progression_in(a0: int, step: int, lo: int, hi: int) -> list[int]:
    first = lo + (a0 - lo) % step
    if first > hi:
        return []
    return list(range(first, hi + 1, step))


def feasibility_scan(n: int, mu: int, trunc: int | None = None) -> FeasibilityReport:
    """Decide whether some odd unimodular theta/shadow pair in dimension n
    is compatible with minimal norm mu.

    Free coefficients are resolved from the top down (a_[n/8] first): the
    shadow coefficient at e = n-8j is the first place a_j appears, and
    requiring it to be an even integer in [0, 2] (the cap applies below
    norm mu/2) pins a_j to finitely many integers.  The last free
    coefficient is additionally bounded by nonnegativity over the whole
    checked window of both series.  Every complete assignment is then
    checked window-wide, one rule at a time in severity order, so a branch
    reports the shallowest rule that kills it.
    """
    if trunc is None:
        trunc = default_trunc(n, mu)
    fit = solve_prefix(n, mu, trunc)
    if fit.prefix_residual:
        m, val = fit.prefix_residual[0]
        return FeasibilityReport(
            n, mu, trunc, INFEASIBLE, R_PREFIX,
            "forced fit leaves theta coefficient %s at q^%d" % (rat_str(val), m),
            fit, [])

    sbasis = shadow_basis(n, trunc)
    tbasis = theta_basis(n, trunc)
    grid = _shadow_grid(n, trunc)
    free = fit.free  # ascending; resolution order is reversed
    branches: list[Branch] = []
    theta_fixed0 = lattice_theta(
        n, [a if a is not None else 0 for a in fit.coeffs], trunc)
    shadow_fixed0 = shadow_theta(
        n, [a if a is not None else 0 for a in fit.coeffs], trunc)

    def final_check(assignment: dict) -> Branch:
        coeffs = fit.resolved(assignment)
        th = lattice_theta(n, coeffs, trunc)
        sh = shadow_theta(n, coeffs, trunc)
        br = Branch(dict(assignment), FEASIBLE, coeffs=coeffs, theta=th, shadow=sh)
        assert th.coeff(0) == 1
        svals = [(e, sh.coeff(e)) for e in grid]
        tvals = [(m, th.coeff(4 * m)) for m in range(1, mu + 5) if 4 * m < trunc]
        # pass 1: integrality
        for e, c in svals:
            if c.denominator != 1:
                br.verdict, br.reason = INFEASIBLE, R_NONINT
                br.detail = "shadow coefficient %s at norm %s" % (
                    rat_str(c), rat_str(Fraction(e, 4)))
                return br
        for m, c in tvals:
            if c.denominator != 1:
                br.verdict, br.reason = INFEASIBLE, R_NONINT
                br.detail = "theta coefficient %s at q^%d" % (rat_str(c), m)
                return br
        # pass 2: negativity
        for e, c in svals:
            if c < 0:
                br.verdict, br.reason = INFEASIBLE, R_NEG
                br.detail = "shadow coefficient %s at norm %s" % (
                    rat_str(c), rat_str(Fraction(e, 4)))
                return br
        for m, c in tvals:
            if c < 0:
                br.verdict, br.reason = INFEASIBLE, R_NEG
                br.detail = "theta coefficient %s at q^%d" % (rat_str(c), m)
                return br
        # pass 3: parity (vectors come in antipodal pairs)
        for e, c in svals:
            if c % 2:
                br.verdict, br.reason = INFEASIBLE, R_PARITY
                br.detail = "odd shadow coefficient %s at norm %s" % (
                    rat_str(c), rat_str(Fraction(e, 4)))
                return br
        for m, c in tvals:
            if c % 2:
                br.verdict, br.reason = INFEASIBLE, R_PARITY
                br.detail = "odd theta coefficient %s at q^%d" % (rat_str(c), m)
                return br
        # pass 4: shadow count rules
        for e, c in svals:
            if e < mu and c != 0:
                br.verdict, br.reason = INFEASIBLE, R_COUNT
                br.detail = "shadow coefficient %s at norm %s below mu/4" % (
                    rat_str(c), rat_str(Fraction(e, 4)))
                return br
            if e < 2 * mu and c > 2:
                br.verdict, br.reason = INFEASIBLE, R_COUNT
                br.detail = "shadow coefficient %s at norm %s exceeds 2" % (
                    rat_str(c), rat_str(Fraction(e, 4)))
                return br
        low = [(e, c) for e, c in svals if e < 2 * mu + 4 and c != 0]
        if len(low) > 1:
            br.verdict, br.reason = INFEASIBLE, R_COUNT
            br.detail = "two shadow norms below (mu+2)/2: %s and %s" % (
                rat_str(Fraction(low[0][0], 4)), rat_str(Fraction(low[1][0], 4)))
            return br
        # pass 5: Gram-matrix rank obstruction
        for e, c in low:
            k = int(c) // 2
            gc = gram_obstruction(n, Fraction(e, 4), k, mu)
            if gc.contradiction:
                br.verdict, br.reason = INFEASIBLE, R_RANK
                br.detail = gc.detail
                br.obstruction = gc
                return br
            br.obstruction = gc
        return br

    overflow: list[str] = []

    def resolve(idx: int, assignment: dict, sh_fixed: QSeries, th_fixed: QSeries):
        # idx counts down through `free`; free[idx] is the next coefficient
        if overflow:
            return
        if idx < 0:
            branches.append(final_check(assignment))
            return
        j = free[idx]
        last = idx == 0
        e_j = n - 8 * j
        t_j = sbasis[j].coeff(e_j)
        assert t_j != 0
        prog = _solve_even_congruence(sh_fixed.coeff(e_j), t_j)
        if isinstance(prog, str):
            branches.append(Branch(
                dict(assignment), INFEASIBLE, prog,
                "no integer a_%d makes the shadow coefficient at norm %s an "
                "even integer" % (j, rat_str(Fraction(e_j, 4)))))
            return
        a0, step = prog
        own_cap = Fraction(2) if e_j < 2 * mu else None
        constraints = [(sh_fixed.coeff(e_j), t_j, own_cap)]
        if own_cap is None:
            # No cap bounds this strip, so borrow nonnegativity constraints
            # from deeper coefficients that depend only on a_j.  This keeps
            # the candidate set finite without changing the verdict: a value
            # they exclude would fail the negativity pass anyway.
            if last:
                for e in grid:
                    t_e = sbasis[j].coeff(e)
                    if e != e_j and t_e != 0:
                        constraints.append((sh_fixed.coeff(e), t_e, None))
                for m in range(mu, mu + 5):
                    if 4 * m >= trunc:
                        break
                    t_m = tbasis[j].coeff(4 * m)
                    if t_m != 0:
                        constraints.append((th_fixed.coeff(4 * m), t_m, None))
        lo, hi = _affine_bounds(constraints)
        if lo is None or hi is None:
            overflow.append(
                "coefficient a_%d is not bounded by the checked window" % j)
            return
        cands = _progression_in(a0, step, lo, hi)
        if not cands:
            # distinguish a cap kill from conflicting nonnegativity
            lo2, hi2 = _affine_bounds([(s, t, None) for s, t, _ in constraints])
            empty_nocap = (
                hi2 is not None and lo2 is not None
                and not _progression_in(a0, step, lo2, hi2))
            reason = R_NEG if (empty_nocap or hi2 is None or lo2 is None) else R_COUNT
            branches.append(Branch(
                dict(assignment), INFEASIBLE, reason,
                "no admissible value for a_%d: every choice violates the %s"
                % (j, "nonnegativity of some coefficient"
                   if reason == R_NEG else "shadow count cap below mu/2")))
            return
        if len(cands) > MAX_CANDIDATES:
            overflow.append(
                "coefficient a_%d admits %d candidates (limit %d)"
                % (j, len(cands), MAX_CANDIDATES))
            return
        for a in cands:
            assignment[j] = a
            resolve(idx - 1, assignment,
                    sh_fixed + sbasis[j] * a, th_fixed + tbasis[j] * a)
            del assignment[j]

    resolve(len(free) - 1, {}, shadow_fixed0, theta_fixed0)

    if overflow:
        return FeasibilityReport(
            n, mu, trunc, INCONCLUSIVE,
            R_LIMIT if "limit" in overflow[0] else R_UNBOUNDED,
            overflow[0], fit, branches)
    winners = [b for b in branches if b.verdict == FEASIBLE]
    if winners:
        w = winners[0]
        return FeasibilityReport(
            n, mu, trunc, FEASIBLE, None, None, fit, branches,
            theta=w.theta, shadow=w.shadow)
    if not branches:
        return FeasibilityReport(
            n, mu, trunc, INFEASIBLE, R_COUNT,
            "no candidate assignment for the free coefficients", fit, [])
    deepest = max(branches, key=lambda b: _SEVERITY.get(b.reason, 0))
    return FeasibilityReport(
        n, mu, trunc, INFEASIBLE, deepest.reason, deepest.detail, fit, branches)


# ---------------------------------------------------------------------------
# even lattices: extremal modular form


@dataclass
class EvenScan:
    """Largest minimal norm compatible with an even unimodular theta."""

    dim: int
    mu: int
    coeffs: list
    series: QSeries  # exponents in quarter-norm units (multiples of 8)

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "mu": self.mu,
            "coefficients": [rat_str(c) for c in self.coeffs],
            "series": str(self.series),
        }


def even_extremal_scan(n: int, trunc: int | None = None) -> EvenScan | None:
    """Even unimodular lattices exist only for 8 | n; their theta series is
    a weight-n/2 polynomial in E4 and Delta24, so the minimal norm is at
    most 2[n/24] + 2.  Returns the largest feasible even minimal norm with
    its witness series, or None when n is not a multiple of 8.
    """
    if n % 8 != 0 or n < 8:
        return None
    m_count = n // 24 + 1
    if trunc is None:
        trunc = 8 * (n // 24 + 6) + 1
    e4 = eisenstein_e4(trunc)
    d24 = cusp_delta24(trunc)
    basis = []
    for b in range(m_count):
        basis.append(((e4 ** (n // 8 - 3 * b)) * (d24 ** b)).truncate(trunc))
    xmax = (trunc - 1) // 8  # largest x-power available (x = q^2)

    for mu in range(2 * (n // 24) + 4, 0, -2):
        half = mu // 2
        coeffs: list = [None] * m_count
        ok = True
        for i in range(half):
            acc = Fraction(1) if i == 0 else Fraction(0)
            for bb in range(min(i, m_count)):
                acc -= coeffs[bb] * basis[bb].coeff(8 * i)
            if i < m_count:
                coeffs[i] = acc  # cusp form basis is unitriangular in x
            elif acc != 0:
                ok = False
                break
        if not ok:
            continue
        for bb in range(m_count):
            if coeffs[bb] is None:
                coeffs[bb] = Fraction(0)
        series = QSeries.zero(trunc)
        for c, f in zip(coeffs, basis):
            if c:
                series = series + f * c
        good = all(
            c.denominator == 1 and c >= 0 and (e == 0 or c % 2 == 0)
            for e, c in ((8 * i, series.coeff(8 * i)) for i in range(xmax + 1)))
        if good and series.coeff(0) == 1:
            return EvenScan(n, mu, coeffs, series)
    raise AssertionError("no even theta fit found for n=%d" % n)


# ---------------------------------------------------------------------------
# certified upper bound and the table


@dataclass
class BoundCertificate:
    """mu_upper(n) together with the scans that prove it."""

    dim: int
    mu_upper: int
    odd_mu: int
    even_mu: int  # 0 when no even unimodular lattice exists in dim n
    odd_witness: FeasibilityReport
    odd_elimination: FeasibilityReport
    even_scan: EvenScan | None

    def to_json_dict(self) -> dict:
        d = {
            "dim": self.dim,
            "mu_upper": self.mu_upper,
            "odd_mu": self.odd_mu,
            "even_mu": self.even_mu or None,
            "odd_witness": self.odd_witness.to_json_dict(),
            "odd_elimination": self.odd_elimination.to_json_dict(),
        }
        if self.even_scan is not None:
            d["even_scan"] = self.even_scan.to_json_dict()
        return d


def mu_upper(n: int) -> BoundCertificate:
    """Certified upper bound on the minimal norm of any n-dimensional
    unimodular lattice: the largest mu that survives the odd scan, or the
    even extremal bound when 8 | n, whichever is larger."""
    if n < 1:
        raise ValueError("dimension must be positive")
    mu = n // 8 + 2
    report = feasibility_scan(n, mu)
    while report.feasible:  # safety: should not trigger below dim 48
        mu += 1
        if mu > n // 8 + 8:
            raise AssertionError("odd scan failed to terminate at n=%d" % n)
        report = feasibility_scan(n, mu)
    elimination = report
    witness = None
    while mu > 1:
        lower = feasibility_scan(n, mu - 1)
        if lower.feasible:
            witness = lower
            break
        elimination = lower
        mu -= 1
    if witness is None:
        witness = feasibility_scan(n, 1)
        assert witness.feasible, "Z^n must pass the scan"
    odd_mu = witness.mu
    ev = even_extremal_scan(n)
    even_mu = ev.mu if ev is not None else 0
    return BoundCertificate(
        n, max(odd_mu, even_mu), odd_mu, even_mu, witness, elimination, ev)


#: Best known minimal norms (with attaining constructions) for reference
#: alongside the certified analytic bounds.  `external` marks values that
#: need a classification beyond the bounds computed here.
KNOWN_MINIMA: dict[int, dict] = {}
for _n in range(1, 8):
    KNOWN_MINIMA[_n] = dict(lo=1, hi=1, note="Z^n is optimal", external=False)
KNOWN_MINIMA[8] = dict(lo=2, hi=2, note="E8", external=False)
for _n in (9, 10, 11):
    KNOWN_MINIMA[_n] = dict(lo=1, hi=1, note="Z^n is optimal", external=False)
KNOWN_MINIMA[12] = dict(lo=2, hi=2, note="D12+ attains 2", external=False)
KNOWN_MINIMA[13] = dict(lo=1, hi=1, note="Z^13 is optimal", external=False)
for _n in range(14, 23):
    KNOWN_MINIMA[_n] = dict(lo=2, hi=2, note="minimum-2 lattices known",
                            external=False)
KNOWN_MINIMA[23] = dict(lo=3, hi=3, note="shorter Leech lattice O23",
                        external=False)
KNOWN_MINIMA[24] = dict(lo=4, hi=4, note="Leech lattice", external=False)
KNOWN_MINIMA[25] = dict(
    lo=2, hi=2, external=True,
    note="classification of 25-dimensional unimodular lattices (Borcherds) "
         "gives 2; the analytic bound is 3")
KNOWN_MINIMA[26] = dict(lo=3, hi=3, note="unique minimum-3 lattice (Borcherds)",
                        external=False)
KNOWN_MINIMA[27] = dict(lo=3, hi=3, note="three minimum-3 lattices known",
                        external=False)
KNOWN_MINIMA[28] = dict(lo=3, hi=3, note="38 minimum-3 lattices known",
                        external=False)
for _n in (29, 30, 31):
    KNOWN_MINIMA[_n] = dict(lo=3, hi=3,
                            note="glue/shave constructions attain 3",
                            external=False)
KNOWN_MINIMA[32] = dict(
    lo=4, hi=4, external=False,
    note="code lattices from doubly even self-dual length-32 codes")
KNOWN_MINIMA[33] = dict(lo=3, hi=3, note="minimum-3 examples known",
                        external=False)
for _n in (34, 35, 37, 38, 39):
    KNOWN_MINIMA[_n] = dict(
        lo=3, hi=4, external=False,
        note="minimum 3 attained; existence of minimum 4 open")
KNOWN_MINIMA[36] = dict(lo=4, hi=4, note="minimum-4 example known",
                        external=False)
KNOWN_MINIMA[40] = dict(lo=4, hi=4, note="extremal lattices attain 4",
                        external=False)
del _n


def _table_row(n: int) -> dict:
    cert = mu_upper(n)
    row = {
        "n": n,
        "bound": cert.mu_upper,
        "odd": cert.odd_mu,
        "even": cert.even_mu or None,
    }
    known = KNOWN_MINIMA.get(n)
    if known:
        row["known"] = (
            str(known["lo"]) if known["lo"] == known["hi"]
            else "%d-%d" % (known["lo"], known["hi"]))
        row["note"] = known["note"]
        row["external"] = known["external"]
    return row


def table1(lo: int = 8, hi: int = 40) -> list[dict]:
    """Certified upper bounds (with known values) for lo <= n <= hi.

    Set UNIMODULAR_WORKERS to fan the dimensions out over processes.
    """
    dims = list(range(lo, hi + 1))
    workers = int(os.environ.get("UNIMODULAR_WORKERS", "1"))
    if workers > 1 and len(dims) > 1:
        import multiprocessing

        with multiprocessing.Pool(min(workers, len(dims))) as pool:
            return pool.map(_table_row, dims)
    return [_table_row(n) for n in dims]
