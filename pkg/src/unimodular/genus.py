"""Average theta series over the genus of odd unimodular lattices.

For every n > 4 the mass-weighted average  (1/M) sum_L Theta_L / |Aut L|
over the genus of odd unimodular n-dimensional lattices equals

    theta3^n * sum_{j=0}^{[n/4]} c_j (g2^j + h2^j)

where g2 = 16 q prod((1+q^2m)/(1+q^(2m-1)))^8 and h2 is its companion
prod((1-q^(2m-1))/(1+q^(2m-1)))^8, and the c_j are pinned down by two
facts: the coefficients alpha_i of P = theta3^n sum_j c_j g2^j satisfy
alpha_(4i) = 2^(n-2) alpha_i for every i >= 0 (so alpha_0 = 0), and the
constant term of the average is 1.

Averaged coefficients bound class numbers: since each lattice has at
least the automorphisms +-1, the number of classes with no vectors of
norm 1 or 2 is at least  M * (1 - (A_1 + A_2)/2)  where A_k is the
average number of norm-k vectors, and each such class contributes at
least 2 lattices-with-automorphism count... concretely, the number of
classes of minimal norm >= 3 is at least 2 * that mass.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import gauss_solve
from .qseries import QSeries, Rat, g2, h2, rat_str, theta3


@dataclass
class AverageTheta:
    """Exact genus-average theta series in dimension `dim`."""

    dim: int
    c: list
    series: QSeries  # average theta; exponents on the integer-norm grid

    def coeff_norm(self, k: int) -> Fraction:
        """Average number of vectors of norm k across the genus."""
        return self.series.coeff(4 * k)

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "c": [rat_str(x) for x in self.c],
            "series": self.series.to_json_dict(),
            "display": str(self.series),
        }


def solve_cj(n: int, trunc: int | None = None, verify_extra: int = 1) -> AverageTheta:
    """Determine the c_j and the exact average theta series for dimension n.

    Unknowns c_0..c_m (m = [n/4]) against the m+1 equations alpha_0 = 0,
    alpha_(4i) = 2^(n-2) alpha_i for i = 1..m-1, and constant term 1.
    `verify_extra` surplus relations (i = m, m+1, ...) are checked after
    solving; they must hold automatically.
    """
    if n <= 4:
        raise ValueError("the average theta formula needs dimension > 4")
    m = n // 4
    top_i = 4 * (m - 1 + verify_extra)
    if trunc is None:
        trunc = 4 * top_i + 1
    t3n = theta3(trunc) ** n
    g = g2(trunc)
    h = h2(trunc)
    gpow = [QSeries.one(trunc)]
    hpow = [QSeries.one(trunc)]
    for _ in range(m):
        gpow.append((gpow[-1] * g).truncate(trunc))
        hpow.append((hpow[-1] * h).truncate(trunc))
    basis = [(t3n * gp).truncate(trunc) for gp in gpow]

    def alpha_row(i: int) -> list[Fraction]:
        return [b.coeff(4 * i) for b in basis]

    rows = [alpha_row(0)]
    rhs = [Fraction(0)]
    scale = Fraction(2) ** (n - 2)
    for i in range(1, m):
        a4 = alpha_row(4 * i)
        a1 = alpha_row(i)
        rows.append([x - scale * y for x, y in zip(a4, a1)])
        rhs.append(Fraction(0))
    # constant term of theta3^n sum c_j (g2^j + h2^j): g2^j kills j>=1,
    # h2^j contributes 1 for every j
    rows.append([Fraction(2)] + [Fraction(1)] * m)
    rhs.append(Fraction(1))
    c = gauss_solve(rows, rhs)

    for i in range(m, m + verify_extra):
        a4 = sum(cc * x for cc, x in zip(c, alpha_row(4 * i)))
        a1 = sum(cc * x for cc, x in zip(c, alpha_row(i)))
        assert a4 == scale * a1, "surplus average-theta relation failed at i=%d" % i

    series = QSeries.zero(trunc)
    for cc, gp, hp in zip(c, gpow, hpow):
        if cc:
            series = series + (gp + hp) * cc
    series = (t3n * series).truncate(trunc)
    assert series.coeff(0) == 1
    return AverageTheta(n, c, series)


@dataclass
class CountBound:
    """Lower bound on the number of classes of minimal norm >= 3."""

    dim: int
    mass: Fraction
    mass_is_approximate: bool
    a1: Fraction
    a2: Fraction
    m0_lower: Fraction
    count_lower: Fraction

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "mass": rat_str(self.mass),
            "mass_is_approximate": self.mass_is_approximate,
            "avg_norm1": rat_str(self.a1),
            "avg_norm2": rat_str(self.a2),
            "m0_lower": rat_str(self.m0_lower),
            "count_lower": rat_str(self.count_lower),
        }


#: Total mass of the genus of odd unimodular 33-dimensional lattices,
#: truncated to four significant digits (the exact value is a huge
#: rational; bounds derived from this number inherit its precision).
DEFAULT_MASS_33 = Fraction(1407) * 10 ** 18


def mass_count_bound(avg: AverageTheta, mass=None,
                     mass_is_approximate: bool | None = None) -> CountBound:
    """Bound the number of minimal-norm->=3 classes in the genus.

    The total count of norm-1 and norm-2 vectors over the genus is
    (A_1 + A_2) * M = 2 M_2 + 4 M_4 + ... >= 2 (M - M_0), where M_(2k) is
    the mass of classes with exactly 2k such vectors.  Hence
    M_0 >= M (1 - (A_1 + A_2)/2), and |Aut| >= 2 turns mass into a count:
    #classes >= 2 M_0.
    """
    if mass is None:
        if avg.dim != 33:
            raise ValueError("no default mass known for dimension %d" % avg.dim)
        mass = DEFAULT_MASS_33
        if mass_is_approximate is None:
            mass_is_approximate = True
    mass = Fraction(mass)
    if mass_is_approximate is None:
        mass_is_approximate = False
    a1 = avg.coeff_norm(1)
    a2 = avg.coeff_norm(2)
    m0 = mass * (1 - (a1 + a2) / 2)
    if m0 < 0:
        m0 = Fraction(0)  # vacuous bound
    return CountBound(avg.dim, mass, mass_is_approximate, a1, a2, m0, 2 * m0)
