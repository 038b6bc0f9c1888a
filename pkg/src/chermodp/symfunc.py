"""Degree-n symmetric functions over Q(q,t) with bases p, h, e, m, s.

Coefficients are :class:`~chermodp.qt.RatQT`.  All basis transitions are exact
and routed through the power-sum basis (character table / Kostka numbers), so
round-trips are identities on the nose.

The q,t-content lives in three places:

* ``phi`` -- the homomorphism scaling p_k by 1/((1-t^k)(1-q^k)),
* ``f_map`` -- multiplication by phi(h_n) under the internal (Kronecker)
  product, with ``f_matrix``/``f_inverse_matrix`` its exact matrix in the
  Schur basis,
* ``sfp`` -- the partition function lam -> <s_lam, phi(h_n)>.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .partitions import (
    character_table,
    conjugate,
    dominates,
    kostka_number,
    partitions_of,
    z_lambda,
)
from .qt import LaurentQT, RatQT, one_minus

BASES = ("p", "h", "e", "m", "s")


class SymFunc:
    """A symmetric function of fixed degree n in a tagged basis."""

    __slots__ = ("n", "basis", "coeffs")

    def __init__(self, n, basis, coeffs):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.n = n
        self.basis = basis
        coerced = {}
        for lam, c in coeffs.items():
            if isinstance(c, LaurentQT):
                c = RatQT.from_laurent(c)
            elif not isinstance(c, RatQT):
                c = RatQT.const(c)
            if c:
                coerced[lam] = c
        self.coeffs = coerced
        for lam in self.coeffs:
            if sum(lam) != n:
                raise ValueError(f"index {lam} has wrong size for degree {n}")

    @classmethod
    def basis_element(cls, basis, lam):
        return cls(sum(lam), basis, {tuple(lam): RatQT.const(1)})

    def to(self, target):
        if target == self.basis:
            return self
        out = {}
        table = _transition(self.n, self.basis, target)
        for lam, c in self.coeffs.items():
            for mu, a in table[lam].items():
                prev = out.get(mu)
                out[mu] = c * a if prev is None else prev + c * a
        return SymFunc(self.n, target, out)

    def coeff(self, lam):
        return self.coeffs.get(tuple(lam), RatQT.const(0))

    def __add__(self, other):
        other = other.to(self.basis)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out[lam] + c if lam in out else c
        return SymFunc(self.n, self.basis, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if not isinstance(c, RatQT):
            c = RatQT.const(c)
        return SymFunc(self.n, self.basis, {lam: v * c for lam, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.n != other.n:
            return False
        return self.to("p").coeffs == other.to("p").coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.to("p").coeffs.items())))

    def is_zero(self):
        return not self.coeffs

    def to_json(self):
        key = lambda lam: "[" + ",".join(str(x) for x in lam) + "]"
        names = {"p": "power", "h": "homogeneous", "e": "elementary", "m": "monomial", "s": "schur"}
        return {
            "basis": names[self.basis],
            "n": self.n,
            "coeffs": {key(lam): self.coeffs[lam].text() for lam in sorted(self.coeffs, reverse=True)},
        }

    def __repr__(self):
        terms = ", ".join(
            f"{self.basis}{list(lam)}: {c.text()}" for lam, c in sorted(self.coeffs.items(), reverse=True)
        )
        return f"SymFunc({terms or '0'})"


# ---------------------------------------------------------------------------
# transition matrices (Fraction-valued, cached per degree)
# ---------------------------------------------------------------------------

def _mat_from_func(n, fn):
    return {lam: fn(lam) for lam in partitions_of(n)}


@lru_cache(maxsize=None)
def _s_to_p(n):
    chi = character_table(n)
    return _mat_from_func(
        n, lambda lam: {mu: Fraction(chi[(lam, mu)], z_lambda(mu)) for mu in partitions_of(n) if chi[(lam, mu)]}
    )


@lru_cache(maxsize=None)
def _p_to_s(n):
    chi = character_table(n)
    return _mat_from_func(
        n, lambda mu: {lam: Fraction(chi[(lam, mu)]) for lam in partitions_of(n) if chi[(lam, mu)]}
    )


def _multiset_union(rhos):
    out = []
    for rho in rhos:
        out.extend(rho)
    return tuple(sorted(out, reverse=True))


def _product_expansion(n, part_to_p):
    """Expand a multiplicative basis b_lam = prod b_{lam_i} into p."""
    def expand(lam):
        out = {(): Fraction(1)} if not lam else None
        if out is not None:
            return out
        out = {(): Fraction(1)}
        for part in lam:
            nxt = {}
            for rho, c in part_to_p[part].items():
                for sig, d in out.items():
                    key = _multiset_union([sig, rho])
                    nxt[key] = nxt.get(key, Fraction(0)) + c * d
            out = nxt
        return {k: v for k, v in out.items() if v}

    return _mat_from_func(n, expand)


@lru_cache(maxsize=None)
def _h_to_p(n):
    part_to_p = {
        k: {rho: Fraction(1, z_lambda(rho)) for rho in partitions_of(k)} for k in range(1, n + 1)
    }
    return _product_expansion(n, part_to_p)


@lru_cache(maxsize=None)
def _e_to_p(n):
    part_to_p = {
        k: {rho: Fraction((-1) ** (k - len(rho)), z_lambda(rho)) for rho in partitions_of(k)}
        for k in range(1, n + 1)
    }
    return _product_expansion(n, part_to_p)


@lru_cache(maxsize=None)
def _s_to_m(n):
    return _mat_from_func(
        n,
        lambda lam: {
            mu: Fraction(kostka_number(lam, mu)) for mu in partitions_of(n) if kostka_number(lam, mu)
        },
    )


@lru_cache(maxsize=None)
def _m_to_s(n):
    """Invert the Kostka matrix; lex order refines dominance, so triangular."""
    parts = partitions_of(n)  # descending lex: K is upper-unitriangular
    k = _s_to_m(n)
    inv = {}
    for j, mu in enumerate(parts):
        # m_mu = sum_nu x[nu] s_nu, solved column by column
        x = {}
        for i in range(j, len(parts)):
            nu = parts[i]
            val = Fraction(1) if nu == mu else Fraction(0)
            for lam, c in x.items():
                val -= c * k[lam].get(nu, Fraction(0))
            if val:
                x[nu] = val
        inv[mu] = x
    return inv


def _compose(m1, m2):
    out = {}
    for src, row in m1.items():
        acc = {}
        for mid, c in row.items():
            for dst, d in m2[mid].items():
                acc[dst] = acc.get(dst, Fraction(0)) + c * d
        out[src] = {k: v for k, v in acc.items() if v}
    return out


@lru_cache(maxsize=None)
def _invert_fraction_matrix(n, name):
    """Invert a cached p-expansion (h or e) by Gaussian elimination."""
    parts = partitions_of(n)
    fwd = _h_to_p(n) if name == "h" else _e_to_p(n)
    size = len(parts)
    idx = {lam: i for i, lam in enumerate(parts)}
    a = [[Fraction(0)] * size for _ in range(size)]
    for lam, row in fwd.items():
        for mu, c in row.items():
            a[idx[lam]][idx[mu]] = c
    inv = [[Fraction(1) if i == j else Fraction(0) for j in range(size)] for i in range(size)]
    for col in range(size):
        piv = next(r for r in range(col, size) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        lead = a[col][col]
        a[col] = [x / lead for x in a[col]]
        inv[col] = [x / lead for x in inv[col]]
        for r in range(size):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    # rows of inv now express p_lam in the h/e basis... careful: we inverted
    # the (basis -> p) matrix, so inv maps p -> basis.
    return {
        parts[i]: {parts[j]: inv[i][j] for j in range(size) if inv[i][j]} for i in range(size)
    }


@lru_cache(maxsize=None)
def _transition(n, src, dst):
    if src == dst:
        return _mat_from_func(n, lambda lam: {lam: Fraction(1)})
    to_p = {
        "p": lambda: _mat_from_func(n, lambda lam: {lam: Fraction(1)}),
        "s": lambda: _s_to_p(n),
        "h": lambda: _h_to_p(n),
        "e": lambda: _e_to_p(n),
        "m": lambda: _compose(_m_to_s(n), _s_to_p(n)),
    }
    from_p = {
        "p": lambda: _mat_from_func(n, lambda lam: {lam: Fraction(1)}),
        "s": lambda: _p_to_s(n),
        "h": lambda: _invert_fraction_matrix(n, "h"),
        "e": lambda: _invert_fraction_matrix(n, "e"),
        "m": lambda: _compose(_p_to_s(n), _s_to_m(n)),
    }
    return _compose(to_p[src](), from_p[dst]())


def convert_basis(f, target):
    return f.to(target)


# ---------------------------------------------------------------------------
# Hall pairing, Kronecker product, phi, F and its inverse
# ---------------------------------------------------------------------------

def hall(f, g):
    """Hall scalar product; Schur functions are orthonormal."""
    if f.n != g.n:
        raise ValueError("hall pairing needs equal degrees")
    fp, gp = f.to("p").coeffs, g.to("p").coeffs
    tot = RatQT.const(0)
    for lam, c in fp.items():
        d = gp.get(lam)
        if d is not None:
            tot = tot + c * d * Fraction(z_lambda(lam))
    return tot


def kronecker(f, g):
    """Internal product from tensoring S_n-modules: pointwise on p_lam/z_lam."""
    if f.n != g.n:
        raise ValueError("kronecker product needs equal degrees")
    fp, gp = f.to("p").coeffs, g.to("p").coeffs
    out = {}
    for lam, c in fp.items():
        d = gp.get(lam)
        if d is not None:
            out[lam] = c * d * Fraction(z_lambda(lam))
    return SymFunc(f.n, "p", out)


@lru_cache(maxsize=None)
def _phi_denominator(rho):
    """prod_i (1-q^{rho_i})(1-t^{rho_i}) as a LaurentQT."""
    prod = LaurentQT.const(1)
    for k in rho:
        prod = prod * one_minus(2 * k, 0) * one_minus(0, 2 * k)
    return prod


def phi(f):
    """The homomorphism p_k -> p_k / ((1-t^k)(1-q^k)), applied in the p basis."""
    fp = f.to("p").coeffs
    out = {
        rho: c * RatQT(LaurentQT.const(1), _phi_denominator(rho))
        for rho, c in fp.items()
    }
    return SymFunc(f.n, "p", out)


@lru_cache(maxsize=None)
def phi_h(n):
    """phi(h_n), cached in the p basis."""
    return phi(SymFunc.basis_element("h", (n,)))


def f_map(f):
    """F(f) = phi(h_n) (x) f under the Kronecker product."""
    return kronecker(phi_h(f.n), f)


@lru_cache(maxsize=None)
def f_matrix(n):
    """Matrix of F in the Schur basis: entry (nu, lam) = <s_nu, F(s_lam)>."""
    chi = character_table(n)
    parts = partitions_of(n)
    out = {}
    for nu in parts:
        for lam in parts:
            tot = RatQT.const(0)
            for rho in parts:
                a = chi[(nu, rho)] * chi[(lam, rho)]
                if a:
                    tot = tot + RatQT(
                        LaurentQT.const(Fraction(a, z_lambda(rho))), _phi_denominator(rho)
                    )
            out[(nu, lam)] = tot
    return out


@lru_cache(maxsize=None)
def f_inverse_matrix(n):
    """Exact inverse of f_matrix(n); entry (mu, lam) is c_{mu,lam}."""
    parts = partitions_of(n)
    size = len(parts)
    F = f_matrix(n)
    a = [[F[(parts[i], parts[j])] for j in range(size)] for i in range(size)]
    inv = [
        [RatQT.const(1) if i == j else RatQT.const(0) for j in range(size)] for i in range(size)
    ]
    for col in range(size):
        piv = next((r for r in range(col, size) if not a[r][col].is_zero()), None)
        if piv is None:
            raise ArithmeticError(f"singular F matrix at n={n}")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        lead = a[col][col]
        a[col] = [x / lead for x in a[col]]
        inv[col] = [x / lead for x in inv[col]]
        for r in range(size):
            if r != col and not a[r][col].is_zero():
                f_ = a[r][col]
                a[r] = [x - f_ * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f_ * y for x, y in zip(inv[r], inv[col])]
    return {(parts[i], parts[j]): inv[i][j] for i in range(size) for j in range(size)}


def c_column(n, lam):
    """The lam-column mu -> c_{mu,lam} of the inverse matrix of F."""
    cinv = f_inverse_matrix(n)
    return {mu: cinv[(mu, tuple(lam))] for mu in partitions_of(n)}


@lru_cache(maxsize=None)
def sfp(n):
    """The partition function lam -> <s_lam, phi(h_n)>."""
    if n < 1:
        raise ValueError("sfp needs n >= 1")
    chi = character_table(n)
    parts = partitions_of(n)
    out = {}
    for lam in parts:
        tot = RatQT.const(0)
        for rho in parts:
            a = chi[(lam, rho)]
            if a:
                tot = tot + RatQT(
                    LaurentQT.const(Fraction(a, z_lambda(rho))), _phi_denominator(rho)
                )
        out[lam] = tot
    return out


# ---------------------------------------------------------------------------
# exact rational-point evaluation (nonvanishing certificates for larger n,
# where building the symbolic fractions would be needlessly expensive)
# ---------------------------------------------------------------------------

def _phi_den_eval(rho, qv, tv):
    prod = Fraction(1)
    for k in rho:
        prod *= (1 - qv ** k) * (1 - tv ** k)
    return prod


def sfp_eval(n, qv, tv):
    """sfp evaluated exactly at rational q = qv, t = tv."""
    chi = character_table(n)
    out = {}
    for lam in partitions_of(n):
        tot = Fraction(0)
        for rho in partitions_of(n):
            a = chi[(lam, rho)]
            if a:
                tot += Fraction(a, z_lambda(rho)) / _phi_den_eval(rho, qv, tv)
        out[lam] = tot
    return out


def f_matrix_eval(n, qv, tv):
    """The matrix of F evaluated at rational q = qv, t = tv (row, col lists)."""
    chi = character_table(n)
    parts = partitions_of(n)
    rows = []
    for nu in parts:
        row = []
        for lam in parts:
            tot = Fraction(0)
            for rho in parts:
                a = chi[(nu, rho)] * chi[(lam, rho)]
                if a:
                    tot += Fraction(a, z_lambda(rho)) / _phi_den_eval(rho, qv, tv)
            row.append(tot)
        rows.append(row)
    return rows


def fraction_matrix_det(rows):
    """Exact determinant of a square Fraction matrix (Gauss)."""
    a = [list(r) for r in rows]
    size = len(a)
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, size):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def plethysm_one_minus_var(f, var):
    """Substitute p_k -> (1 - var^k) p_k, var in {'q', 't'}.

    This is the alphabet transform X -> X(1-q) (resp. X(1-t)) used by the
    triangularity characterization of the modified Macdonald functions.
    """
    fp = f.to("p").coeffs
    out = {}
    for rho, c in fp.items():
        scale = RatQT.const(1)
        for k in rho:
            scale = scale * RatQT.from_laurent(
                one_minus(2 * k, 0) if var == "q" else one_minus(0, 2 * k)
            )
        out[rho] = c * scale
    return SymFunc(f.n, "p", out)
