"""Torus-equivariant K-theory of the Hilbert scheme via fixed-point data.

Fixed points of the two-torus action on the Hilbert scheme of n points in the
plane are indexed by partitions of n.  A class is represented purely by the
tuple of its restrictions to fixed points; localization makes that a complete
interface for everything downstream.

Weight conventions (frozen, taken verbatim): the skyscraper class at the
fixed point of mu restricts to

    prod over boxes (1 - t^{1+l} q^{-a}) (1 - t^{-l} q^{1+a}),

and the box at (row r, column s) carries the monomial t^r q^s.  Classes
living on the Frobenius twist use the same formulas with (q, t) replaced by
(q^p, t^p); the Euler characteristic accepts that twist as ``frobenius_power``.
"""

from __future__ import annotations

from functools import lru_cache

from .macdonald import kostka_table
from .partitions import arm, boxes, leg, partitions_of
from .qt import LaurentQT, RatQT
from .symfunc import c_column


class FixedPointClass:
    """A K-class known through its fixed-point restrictions."""

    __slots__ = ("n", "values")

    def __init__(self, n, values):
        self.n = n
        self.values = {
            tuple(mu): (v if isinstance(v, RatQT) else RatQT.from_laurent(v) if isinstance(v, LaurentQT) else RatQT.const(v))
            for mu, v in values.items()
        }
        for mu in partitions_of(n):
            self.values.setdefault(mu, RatQT.const(0))

    def __getitem__(self, mu):
        return self.values[tuple(mu)]

    def __eq__(self, other):
        if not isinstance(other, FixedPointClass):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __mul__(self, other):
        """Pointwise product (tensor product of classes)."""
        if isinstance(other, FixedPointClass):
            return FixedPointClass(
                self.n, {mu: v * other.values[mu] for mu, v in self.values.items()}
            )
        return FixedPointClass(self.n, {mu: v * other for mu, v in self.values.items()})

    def __add__(self, other):
        return FixedPointClass(
            self.n, {mu: v + other.values[mu] for mu, v in self.values.items()}
        )

    def to_json(self):
        from .partitions import format_partition

        return {
            format_partition(mu): self.values[mu].text()
            for mu in partitions_of(self.n)
        }

    def __repr__(self):
        return f"FixedPointClass(n={self.n}, {self.to_json()})"


@lru_cache(maxsize=None)
def skyscraper_weight_laurent(mu, power=1):
    """Restriction of the skyscraper class at mu, at (q^power, t^power)."""
    prod = LaurentQT.const(1)
    for b in boxes(mu):
        a, l = arm(mu, b), leg(mu, b)
        prod = prod * LaurentQT(
            {(0, 0): 1, (-2 * a * power, 2 * (1 + l) * power): -1}
        ) * LaurentQT({(0, 0): 1, (2 * (1 + a) * power, -2 * l * power): -1})
    return prod


def skyscraper_weight(mu, power=1):
    return RatQT.from_laurent(skyscraper_weight_laurent(tuple(mu), power))


def skyscraper_class(mu, n=None):
    """The class of the skyscraper sheaf at the fixed point of mu."""
    mu = tuple(mu)
    n = n or sum(mu)
    return FixedPointClass(n, {mu: skyscraper_weight(mu)})


def euler_characteristic(cls, frobenius_power=1):
    """Fixed point formula: sum of restrictions over the tangent weights.

    ``frobenius_power=p`` computes the Euler characteristic of a class living
    on the Frobenius twist, where all torus weights are p-th powers.
    """
    total = RatQT.const(0)
    for mu in partitions_of(cls.n):
        v = cls.values[mu]
        if v:
            total = total + v / skyscraper_weight(mu, frobenius_power)
    return total


def structure_sheaf_class(n):
    return FixedPointClass(n, {mu: RatQT.const(1) for mu in partitions_of(n)})


def procesi_restriction(n, swap_qt=False):
    """lam -> class of the lam-isotypic Procesi summand (values are Kostka)."""
    table = kostka_table(n, swap_qt=swap_qt)
    out = {}
    for lam in partitions_of(n):
        out[lam] = FixedPointClass(
            n, {mu: table[(lam, mu)] for mu in partitions_of(n)}
        )
    return out


def bkr_inverse_class(lam, swap_qt=False, kostka_power=1):
    """Fixed-point restrictions of the inverse-equivalence image of s_lam.

    Values are sum over nu of c_{nu,lam} K[nu, mu]; ``kostka_power=p`` uses
    the table at (q^p, t^p) for classes transported to the Frobenius twist.
    """
    lam = tuple(lam)
    n = sum(lam)
    table = kostka_table(n, swap_qt=swap_qt)
    col = c_column(n, lam)
    values = {}
    for mu in partitions_of(n):
        tot = RatQT.const(0)
        for nu in partitions_of(n):
            k = table[(nu, mu)]
            if k:
                if kostka_power != 1:
                    k = k.substitute(kostka_power, kostka_power)
                tot = tot + col[nu] * k
        values[mu] = tot
    return FixedPointClass(n, values)


def box_monomial_laurent(mu):
    """prod over boxes of t^r q^s as a LaurentQT (a single-term sum per box)."""
    a2 = b2 = 0
    for (r, s) in boxes(mu):
        a2 += 2 * s
        b2 += 2 * r
    return LaurentQT.monomial(a2, b2)


def frobenius_skyscraper(mu, p):
    """Scalar by which the Frobenius pushforward rescales the skyscraper at mu."""
    mu = tuple(mu)
    return skyscraper_weight(mu, p) / skyscraper_weight(mu, 1)


def frobenius_line_bundle_class(c_lift, p, n):
    """Per-mu values of the pushed-forward twisting line bundle.

    Each value is the Frobenius skyscraper scalar times the c_lift-th power of
    the box monomial of mu.
    """
    values = {}
    for mu in partitions_of(n):
        mono = box_monomial_laurent(mu)
        ((a2, b2), _), = mono.terms.items()
        values[mu] = frobenius_skyscraper(mu, p) * RatQT.monomial(
            a2 * c_lift, b2 * c_lift
        )
    return FixedPointClass(n, values)
