"""The bigraded character pipeline: f_c, the convolution kernel, splitting
classes, and the per-fixed-point character summands X_lam.

Everything here is exact arithmetic over Q(q^{1/2}, t^{1/2}).  The moving
parts, in pipeline order:

* ``f_c``          -- the twisted pushforward scalar, carrying (qt)^{-p/2},
* ``kernel_K``     -- the convolution kernel built from the Kostka table at
                      (q^p, t^p) over the Frobenius-twisted skyscraper weights,
* ``splitting_class_w0`` -- solves the linear system pairing the Procesi
                      summands against the untwisted splitting bundle,
* ``splitting_class_wc`` -- the twisted splitting class, computable two ways
                      (directly from f_c, or from the pushed-forward line
                      bundle); both routes must agree,
* ``character``    -- the X_lam vector and its sum, plus an independent
                      Euler-characteristic route used as a cross-check.

Contraction convention: in the X_lam numerator the kernel is contracted over
its *first* (Schur-side) index, i.e. the adjoint of the convolution used to
define the splitting-class system.  The two contractions differ for n >= 2,
and only this one makes the per-point summands equal to the restrictions of
the twisted class paired against the inverse-equivalence classes, which the
cross-check route computes independently.  See the acceptance suite.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .hilb import (
    FixedPointClass,
    box_monomial_laurent,
    euler_characteristic,
    frobenius_line_bundle_class,
    frobenius_skyscraper,
    bkr_inverse_class,
    skyscraper_weight_laurent,
)
from .macdonald import kostka_table
from .partitions import partitions_of
from .qt import LaurentQT, RatQT
from .symfunc import c_column, sfp


def is_prime(m):
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def artin_schreier(c, p):
    """c^p - c in F_p; vanishes exactly on the prime field."""
    return (pow(c % p, p, p) - c) % p


@dataclass(frozen=True)
class ModularParams:
    """Prime p, exact rational c = c_num/c_den, and an integer lift of c mod p."""

    p: int
    c_num: int
    c_den: int = 1
    c_lift: int = None  # default: least nonnegative residue
    lift_defaulted: bool = False

    def __post_init__(self):
        if not is_prime(self.p) or self.p == 2:
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.c_den <= 0:
            raise ValueError("c_den must be positive")
        if self.c_den % self.p == 0:
            raise ValueError("c_den must be invertible mod p")
        if self.c_lift is None:
            inv = pow(self.c_den, -1, self.p)
            object.__setattr__(self, "c_lift", (self.c_num * inv) % self.p)
            object.__setattr__(self, "lift_defaulted", True)
        if (self.c_lift * self.c_den - self.c_num) % self.p != 0:
            raise ValueError(
                f"lift {self.c_lift} is not congruent to {self.c_num}/{self.c_den} mod {self.p}"
            )

    def residue(self):
        return self.c_lift % self.p

    def is_good(self):
        """c >= 0 and c not in 1/2 + Z."""
        if self.c_num < 0:
            return False
        twice = Fraction(2 * self.c_num, self.c_den)
        return not (twice.denominator == 1 and twice.numerator % 2 == 1)

    def warn_if_bad(self):
        if not self.is_good():
            warnings.warn(
                f"c = {self.c_num}/{self.c_den} lies outside the good parameter set "
                "(c >= 0 and c not in 1/2 + Z); results are exploratory",
                stacklevel=2,
            )
            return True
        return False


def f_c(params, n):
    """The function mu -> (qt)^{-p/2} (box monomial)^lift (Frobenius ratio)."""
    p = params.p
    if p <= n:
        raise ValueError(f"need p > n, got p={p}, n={n}")
    values = {}
    prefactor = RatQT.monomial(-p, -p)  # (qt)^{-p/2}
    for mu in partitions_of(n):
        ((a2, b2), _), = box_monomial_laurent(mu).terms.items()
        mono = RatQT.monomial(a2 * params.c_lift, b2 * params.c_lift)
        values[mu] = prefactor * mono * frobenius_skyscraper(mu, p)
    return values


class Kernel:
    """The convolution kernel: twisted Kostka numerators over twisted weights."""

    def __init__(self, n, p, swap_qt=False):
        self.n = n
        self.p = p
        self.parts = partitions_of(n)
        table = kostka_table(n, swap_qt=swap_qt)
        self.numer = {
            (lam, mu): table[(lam, mu)].substitute(p, p)
            for lam in self.parts
            for mu in self.parts
        }
        self.weights = {mu: skyscraper_weight_laurent(mu, p) for mu in self.parts}
        self.entries = {
            (lam, mu): RatQT(self.numer[(lam, mu)], self.weights[mu])
            for lam in self.parts
            for mu in self.parts
        }

    def __getitem__(self, key):
        lam, mu = key
        return self.entries[(tuple(lam), tuple(mu))]


@lru_cache(maxsize=None)
def kernel_K(n, p, swap_qt=False):
    return Kernel(n, p, swap_qt=swap_qt)


def apply_K(kernel, f):
    """(K f)(lam) = sum over mu of kernel(lam, mu) f(mu)."""
    out = {}
    for lam in kernel.parts:
        tot = RatQT.const(0)
        for mu in kernel.parts:
            v = f[mu]
            if v:
                tot = tot + kernel.entries[(lam, mu)] * v
        out[lam] = tot
    return out


def apply_K_transpose(kernel, f):
    """(K^T f)(mu) = sum over lam of kernel(lam, mu) f(lam)."""
    out = {}
    for mu in kernel.parts:
        tot = RatQT.const(0)
        for lam in kernel.parts:
            v = f[lam]
            if v:
                tot = tot + kernel.entries[(lam, mu)] * v
        out[mu] = tot
    return out


def _poly_det(rows):
    """Determinant of a square LaurentQT matrix by Laplace expansion."""
    size = len(rows)
    memo = {}

    def rec(r, mask):
        if r == size:
            return LaurentQT.const(1)
        key = mask
        hit = memo.get(key)
        if hit is not None:
            return hit
        tot = LaurentQT()
        sign = 1
        for c in range(size):
            bit = 1 << c
            if mask & bit:
                continue
            entry = rows[r][c]
            if entry:
                sub = rec(r + 1, mask | bit)
                term = entry * sub
                tot = tot + (term if sign > 0 else -term)
            sign = -sign
        memo[key] = tot
        return tot

    return rec(0, 0)


@lru_cache(maxsize=None)
def _kernel_dets(n, p, swap_qt=False):
    """Determinant and all cofactor minors of the twisted Kostka matrix."""
    kernel = kernel_K(n, p, swap_qt)
    parts = kernel.parts
    size = len(parts)
    rows = [[kernel.numer[(parts[i], parts[j])] for j in range(size)] for i in range(size)]
    det = _poly_det(rows)
    if det.is_zero():
        raise ArithmeticError(f"singular kernel at n={n}, p={p}")
    minors = {}
    for i in range(size):
        for j in range(size):
            sub = [
                [rows[r][c] for c in range(size) if c != j]
                for r in range(size)
                if r != i
            ]
            m = _poly_det(sub) if size > 1 else LaurentQT.const(1)
            minors[(i, j)] = m if (i + j) % 2 == 0 else -m
    return det, minors


def apply_K_inverse(kernel, f):
    """Solve K x = f exactly (Cramer over the polynomial numerator matrix)."""
    parts = kernel.parts
    size = len(parts)
    det, minors = _kernel_dets(kernel.n, kernel.p)
    out = {}
    for i, mu in enumerate(parts):
        tot = RatQT.const(0)
        for j, lam in enumerate(parts):
            v = f[lam]
            if v:
                tot = tot + v * RatQT(minors[(j, i)], det)
        out[mu] = tot * kernel.weights[mu]
    return out


@lru_cache(maxsize=None)
def splitting_class_w0(n, p):
    """Restrictions of the untwisted splitting bundle: the kernel-inverse of sfp."""
    kernel = kernel_K(n, p)
    w0 = apply_K_inverse(kernel, sfp(n))
    for mu, v in w0.items():
        if v.is_zero():
            raise ArithmeticError(f"splitting class vanishes at {mu} (n={n}, p={p})")
    return FixedPointClass(n, w0)


def splitting_class_wc(params, n, route="direct"):
    """Restrictions of the twisted splitting bundle.

    route='direct' divides f_c by the involuted untwisted class;
    route='frobenius' instead uses the pushed-forward line bundle class,
    normalized by (qt)^{-p/2}.  The two must agree.
    """
    p = params.p
    w0 = splitting_class_w0(n, p)
    if route == "direct":
        numer = f_c(params, n)
    elif route == "frobenius":
        line = frobenius_line_bundle_class(params.c_lift, p, n)
        pref = RatQT.monomial(-p, -p)
        numer = {mu: pref * line[mu] for mu in partitions_of(n)}
    else:
        raise ValueError(f"unknown route {route!r}")
    values = {}
    for mu in partitions_of(n):
        den = w0[mu].involution()
        if den.is_zero():
            raise ArithmeticError(f"involuted splitting class vanishes at {mu}")
        values[mu] = numer[mu] / den
    return FixedPointClass(n, values)


def x_vector(params, lam):
    """The per-fixed-point character summands X_lam(mu).

    X_lam(mu) = (kernel contracted with the c_lam column over the Schur-side
    index, at mu) * f_c(mu) / (involuted splitting class at mu).
    """
    lam = tuple(lam)
    n = sum(lam)
    kernel = kernel_K(n, params.p)
    kc = apply_K_transpose(kernel, c_column(n, lam))
    wc = splitting_class_wc(params, n)
    return {mu: kc[mu] * wc[mu] for mu in partitions_of(n)}


def x_vector_first_index(params, lam):
    """X_lam built with the kernel contracted over its second index instead.

    Kept for documentation: for n >= 2 this contraction is NOT consistent
    with the Euler-characteristic route; see test_charform.
    """
    lam = tuple(lam)
    n = sum(lam)
    kernel = kernel_K(n, params.p)
    kc = apply_K(kernel, c_column(n, lam))
    wc = splitting_class_wc(params, n)
    return {mu: kc[mu] * wc[mu] for mu in partitions_of(n)}


def character(params, lam):
    """The bigraded character sum over fixed points, with its X vector."""
    params.warn_if_bad()
    xs = x_vector(params, lam)
    total = RatQT.const(0)
    for v in xs.values():
        total = total + v
    return xs, total


def character_euler_route(params, lam):
    """Independent route: Euler characteristic on the Frobenius twist of the
    twisted splitting class times the inverse-equivalence class of lam."""
    lam = tuple(lam)
    n = sum(lam)
    p = params.p
    wc = splitting_class_wc(params, n, route="frobenius")
    bkr = bkr_inverse_class(lam, kostka_power=p)
    return euler_characteristic(wc * bkr, frobenius_power=p)
