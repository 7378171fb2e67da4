"""Lattices with exact rational Gram matrices.

A lattice is presented by a symmetric positive definite Gram matrix over Q,
optionally with an embedding (generator rows and a scale so that
gram = scale_sq * gens gens^T).  A coset is a lattice translate, its offset
written in coordinates of the base lattice's basis.

Short-vector enumeration is exact Fincke-Pohst: the Gram matrix is LLL
reduced, fraction-free Gram-Schmidt data turns the usual recursion into
scaled big-integer arithmetic (isqrt bounds, no floating point), and coset
offsets are handled by congruence-stepping the integer coordinates.  When a
coset is fixed by negation, only canonical representatives are walked and
counts are doubled.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt, lcm

from .linalg import (
    det_frac,
    gauss_solve,
    identity,
    integral_gso,
    is_integer_matrix,
    lll_reduce_gram,
    mat_frac,
    mat_inverse,
    matmul,
    matvec,
    parity_kernel_basis,
    transpose,
    vecmat,
)
from .qseries import QSeries, parse_rat, rat_str


class Lattice:
    """Exact lattice: Gram matrix, optional embedding, cached reduction data."""

    def __init__(self, gram, gens=None, scale_sq=1, name=""):
        gram = mat_frac(gram)
        n = len(gram)
        if any(len(row) != n for row in gram):
            raise ValueError("gram matrix must be square")
        for i in range(n):
            for j in range(n):
                if gram[i][j] != gram[j][i]:
                    raise ValueError(f"gram matrix not symmetric at ({i},{j})")
        self.gram = gram
        self.scale_sq = Fraction(scale_sq)
        if self.scale_sq <= 0:
            raise ValueError("scale_sq must be positive")
        self.gens = None
        if gens is not None:
            gens = mat_frac(gens)
            if len(gens) != n:
                raise ValueError("generator count must equal the dimension")
            check = matmul(gens, transpose(gens))
            for i in range(n):
                for j in range(n):
                    if self.scale_sq * check[i][j] != gram[i][j]:
                        raise ValueError(
                            f"generators do not match gram at ({i},{j}): "
                            f"{self.scale_sq * check[i][j]} != {gram[i][j]}"
                        )
            self.gens = gens
        self.name = name
        self._det = None
        self._reduced = None

    @property
    def dim(self) -> int:
        return len(self.gram)

    def det(self) -> Fraction:
        if self._det is None:
            self._det = det_frac(self.gram)
        return self._det

    def is_integral(self) -> bool:
        return is_integer_matrix(self.gram)

    def norm_of(self, coords) -> Fraction:
        """Norm (squared length) of the vector with the given basis coordinates."""
        v = [Fraction(c) for c in coords]
        return sum(v[i] * self.gram[i][j] * v[j] for i in range(self.dim) for j in range(self.dim))

    def __repr__(self):
        tag = self.name or "lattice"
        return f"<{tag}: dim {self.dim}, det {self.det()}>"


class Coset:
    """Translate base + offset; offset in base-basis coordinates."""

    def __init__(self, base: Lattice, offset):
        self.base = base
        self.offset = [Fraction(x) for x in offset]
        if len(self.offset) != base.dim:
            raise ValueError("offset length must equal the base dimension")

    def is_lattice(self) -> bool:
        return all(x.denominator == 1 for x in self.offset)

    def norm_of(self, coords) -> Fraction:
        v = [Fraction(c) + t for c, t in zip(coords, self.offset)]
        g = self.base.gram
        n = self.base.dim
        return sum(v[i] * g[i][j] * v[j] for i in range(n) for j in range(n))

    def __repr__(self):
        return f"<coset of {self.base!r} + {[str(x) for x in self.offset]}>"


def zn(n: int) -> Lattice:
    """The cubic lattice Z^n."""
    return Lattice(identity(n), gens=identity(n), name=f"Z{n}")


# -- unimodularity -----------------------------------------------------------


def check_unimodular(L: Lattice) -> str:
    """Classify L: returns 'odd', 'even', or 'not-unimodular(detail)'."""
    n = L.dim
    for i in range(n):
        for j in range(n):
            if L.gram[i][j].denominator != 1:
                return f"not-unimodular(non-integral entry {L.gram[i][j]} at ({i},{j}))"
    try:
        _reduced_data(L)
    except ValueError:
        return "not-unimodular(not positive definite)"
    d = L.det()
    if d != 1:
        return f"not-unimodular(det={d})"
    if any(L.gram[i][i] % 2 == 1 for i in range(n)):
        return "odd"
    return "even"


def dual(L: Lattice) -> Lattice:
    """Dual lattice: Gram matrix is the inverse; embedding maps along."""
    ginv = mat_inverse(L.gram)
    gens = matmul(ginv, L.gens) if L.gens is not None else None
    return Lattice(ginv, gens=gens, scale_sq=L.scale_sq, name=f"{L.name}*" if L.name else "")


def even_sublattice(L: Lattice) -> Lattice:
    """Even vectors of an odd integral lattice (index 2).

    For odd unimodular L the result has determinant 4.
    """
    if not L.is_integral():
        raise ValueError("even sublattice requires an integral lattice")
    E = _even_coords(L)
    gram0 = matmul(matmul(E, L.gram), transpose(E))
    gens0 = matmul(E, L.gens) if L.gens is not None else None
    return Lattice(gram0, gens=gens0, scale_sq=L.scale_sq, name=f"{L.name}_0" if L.name else "")


def _even_coords(L: Lattice):
    """Basis (rows, in L-coordinates) of the even-norm kernel sublattice."""
    parity = [int(L.gram[i][i]) % 2 for i in range(L.dim)]
    return parity_kernel_basis(parity, L.dim)


def shadow_cosets(L: Lattice) -> tuple[Coset, Coset]:
    """The two cosets of the even sublattice whose union is the shadow.

    The shadow of an odd unimodular L is dual(L_0) minus L; it is cut out by
    the half characteristic vectors w/2, where G w = diag(G) (mod 2).  The
    returned pair is closed under negation.
    """
    verdict = check_unimodular(L)
    if verdict != "odd":
        raise ValueError(f"shadow requires an odd unimodular lattice, got {verdict}")
    n = L.dim
    G = [[int(x) for x in row] for row in L.gram]
    w = solve_mod2(G, [G[i][i] % 2 for i in range(n)])
    E = _even_coords(L)
    L0 = Lattice(
        matmul(matmul(E, L.gram), transpose(E)),
        gens=matmul(E, L.gens) if L.gens is not None else None,
        scale_sq=L.scale_sq,
        name=f"{L.name}_0" if L.name else "",
    )
    Einv = mat_inverse(E)
    half_w = [Fraction(x, 2) for x in w]
    p = next(i for i in range(n) if L.gram[i][i] % 2 == 1)
    x0 = [Fraction(1) if i == p else Fraction(0) for i in range(n)]
    t1 = vecmat(half_w, Einv)
    t2 = vecmat([a + b for a, b in zip(half_w, x0)], Einv)
    c1, c2 = Coset(L0, t1), Coset(L0, t2)
    assert not c1.is_lattice() and not c2.is_lattice()
    return c1, c2


def solve_mod2(A, b):
    """Solve A x = b over GF(2); A square invertible mod 2."""
    n = len(A)
    rows = [(sum((A[i][j] & 1) << j for j in range(n)), b[i] & 1) for i in range(n)]
    x = [0] * n
    piv_of_col = {}
    for r, (row, rhs) in enumerate(rows):
        for col, (prow, prhs) in piv_of_col.items():
            if row >> col & 1:
                row ^= prow
                rhs ^= prhs
        if row == 0:
            if rhs:
                raise ValueError("inconsistent system mod 2")
            continue
        col = (row & -row).bit_length() - 1
        piv_of_col[col] = (row, rhs)
    for col in sorted(piv_of_col, reverse=True):
        row, rhs = piv_of_col[col]
        v = rhs
        for j in range(col + 1, n):
            if row >> j & 1:
                v ^= x[j]
        x[col] = v
    return x


# -- exact enumeration -------------------------------------------------------


def _reduced_data(L: Lattice):
    """LLL-reduce the Gram matrix once per lattice; cache scaled-integer data.

    Returns (dmul, U, Uinv, d, lam, m, M): dmul clears denominators of the
    Gram matrix, U is the reduction transform (rows of the reduced basis in
    original coordinates), d/lam the fraction-free Gram-Schmidt table of the
    reduced integer Gram, m[i] = M / (d[i-1] d[i]) for the common budget
    denominator M.
    """
    if L._reduced is not None:
        return L._reduced
    dens = [x.denominator for row in L.gram for x in row]
    dmul = lcm(*dens) if dens else 1
    gint = [[int(x * dmul) for x in row] for row in L.gram]
    gred, U = lll_reduce_gram(gint)
    gred = [[int(x) for x in row] for row in gred]
    d, lam = integral_gso(gred)
    pairs = [(d[i - 1] if i else 1) * d[i] for i in range(len(d))]
    M = lcm(*pairs) if pairs else 1
    m = [M // p for p in pairs]
    Uinv = [[int(x) for x in row] for row in mat_frac(mat_inverse(U))]
    L._reduced = (dmul, U, Uinv, d, lam, m, M)
    return L._reduced


def _as_coset(target) -> Coset:
    if isinstance(target, Lattice):
        return Coset(target, [0] * target.dim)
    if isinstance(target, Coset):
        return target
    raise TypeError("expected a Lattice or Coset")


def _enum(target, max_norm, collect=False, first_only=False):
    """Walk {x + t : x in Z^n, |x + t|^2 <= max_norm} exactly.

    Returns (counts, vectors): counts maps scaled integer norms to vector
    counts (scale M * dmul * delta^2), vectors (when requested) holds integer
    coordinate rows x in the original basis, mirror pairs expanded.  With
    first_only, stops at the first nonzero vector found.
    """
    coset = _as_coset(target)
    L = coset.base
    n = L.dim
    max_norm = Fraction(max_norm)
    dmul, U, Uinv, d, lam, m, M = _reduced_data(L)
    # offset in reduced coordinates; delta clears its denominators
    t_red = vecmat(coset.offset, Uinv)
    delta = lcm(*[x.denominator for x in t_red]) if n else 1
    s = [int(x * delta) for x in t_red]
    # when -t = t mod Z^n, walk one of each +/- pair and double the count
    sym = all((2 * si) % delta == 0 for si in s)
    top = int(max_norm * dmul * delta * delta * M)
    if top < 0:
        return {}, ([] if collect or first_only else None), 1
    counts: dict[int, int] = {}
    vecs = [] if (collect or first_only) else None
    w = [0] * n
    lam_rows = [lam[j][:j] for j in range(n)]
    stop = []

    def emit(wj, U_tot, mult):
        counts[U_tot] = counts.get(U_tot, 0) + mult
        if vecs is None:
            return
        if first_only and U_tot == 0:
            return
        w[0] = wj
        x_red = [(wi - si) // delta for wi, si in zip(w, s)]
        vecs.append(tuple(int(v) for v in vecmat(x_red, U)))
        if first_only:
            stop.append(True)
            return
        if mult == 2:
            xm_red = [(-wi - si) // delta for wi, si in zip(w, s)]
            vecs.append(tuple(int(v) for v in vecmat(xm_red, U)))

    def level(j, cacc, rem, zero_pref, acc):
        c = cacc[j]
        dj, mj = d[j], m[j]
        A = isqrt(rem // mj)
        lo = -((A + c) // dj)
        wj = lo + ((s[j] - lo) % delta)
        if zero_pref:
            wj = max(wj, s[j] % delta)
        hi = (A - c) // dj
        if j == 0:
            while wj <= hi:
                Z = dj * wj + c
                u = mj * Z * Z
                whole_zero = zero_pref and wj == 0
                emit(wj, acc + u, 2 if sym and not whole_zero else 1)
                if stop:
                    return
                wj += delta
            return
        lamj = lam_rows[j]
        while wj <= hi:
            Z = dj * wj + c
            u = mj * Z * Z
            w[j] = wj
            child = [cacc[i] + lamj[i] * wj for i in range(j)]
            level(j - 1, child, rem - u, zero_pref and wj == 0, acc + u)
            if stop:
                return
            wj += delta

    if n > 0:
        level(n - 1, [0] * n, top, sym, 0)
    elif max_norm >= 0:
        counts[0] = 1
    return counts, vecs, M * dmul * delta * delta


def _norms_from_scaled(counts: dict, scale: int) -> dict:
    out: dict[Fraction, int] = {}
    for u, cnt in counts.items():
        out[Fraction(u, scale)] = cnt
    return out


def enumerate_short(target, max_norm, collect: bool = False):
    """Count vectors of each exact norm <= max_norm in a lattice or coset.

    Returns a dict norm -> count (norm 0 included when the zero vector is in
    the coset).  With collect=True returns (counts, vectors) where vectors
    are integer coordinate rows x in the base basis (the coset element is
    x + offset), mirror pairs expanded.
    """
    counts, vecs, scale = _enum(target, max_norm, collect=collect)
    counts = _norms_from_scaled(counts, scale)
    return (counts, vecs) if collect else counts


def find_any(target, max_norm):
    """First nonzero vector of norm <= max_norm, or None.

    Returns (norm, x) with x integer coordinates in the base basis.
    """
    counts, vecs, scale = _enum(target, max_norm, first_only=True)
    if not vecs:
        return None
    x = vecs[0]
    return _as_coset(target).norm_of(x), list(x)


def min_norm(L: Lattice) -> Fraction:
    """Minimal nonzero norm, by enumeration up to the reduced diagonal bound."""
    dmul, U, Uinv, d, lam, m, M = _reduced_data(L)
    bound = min(Fraction(d[0], dmul), *(Fraction(L.norm_of(row)) for row in U))
    counts = enumerate_short(L, bound)
    nz = [k for k in counts if k > 0]
    assert nz, "reduced basis vector must appear in its own norm bound"
    return min(nz)


def verify_min_norm(L: Lattice, mu) -> bool:
    """Certify min(L) = mu: no nonzero vector below mu, one at mu."""
    mu = Fraction(mu)
    below = enumerate_short(L, mu - Fraction(1, 4))
    if any(k > 0 for k in below):
        return False
    hit = find_any(L, mu)
    return hit is not None and hit[0] == mu


def theta_by_enumeration(L, max_norm: int) -> QSeries:
    """Theta series of a lattice or coset, certified through q^max_norm."""
    counts = enumerate_short(L, max_norm)
    terms = {}
    for norm, cnt in counts.items():
        e = norm * 4
        assert e.denominator == 1, f"norm {norm} not on the quarter grid"
        terms[int(e)] = Fraction(cnt)
    return QSeries(terms, 4 * int(max_norm) + 1)


def shadow_by_enumeration(L: Lattice, max_norm: int) -> QSeries:
    """Theta series of the shadow of an odd unimodular lattice, by counting."""
    c1, c2 = shadow_cosets(L)
    return theta_by_enumeration(c1, max_norm) + theta_by_enumeration(c2, max_norm)


# -- serialization -----------------------------------------------------------


def lattice_to_json_dict(L: Lattice) -> dict:
    out = {
        "name": L.name,
        "dim": L.dim,
        "gram": [[rat_str(x) for x in row] for row in L.gram],
    }
    if L.gens is not None:
        out["generators"] = [[rat_str(x) for x in row] for row in L.gens]
        out["scale_sq"] = rat_str(L.scale_sq)
    return out


def lattice_from_json_dict(d: dict) -> Lattice:
    try:
        dim = int(d["dim"])
        gram = [[parse_rat(x) for x in row] for row in d["gram"]]
    except (KeyError, ValueError, TypeError) as exc:
        raise ValueError(f"invalid lattice file: {exc}") from exc
    if len(gram) != dim or any(len(r) != dim for r in gram):
        raise ValueError(f"invalid lattice file: gram must be {dim}x{dim}")
    gens = None
    scale = Fraction(1)
    if "generators" in d:
        gens = [[parse_rat(x) for x in row] for row in d["generators"]]
        scale = parse_rat(d.get("scale_sq", 1))
    return Lattice(gram, gens=gens, scale_sq=scale, name=str(d.get("name", "")))
