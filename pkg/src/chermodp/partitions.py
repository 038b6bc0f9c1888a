"""Partitions of n as Young diagrams with box statistics.

Conventions (frozen):
  * a partition is a tuple of weakly decreasing positive ints,
  * a box is (r, s) with r the 0-based row index and s the 0-based column
    index; the row direction carries t, the column direction carries q, so a
    box contributes the monomial t^r q^s,
  * arm(r, s) counts boxes strictly right of (r, s) in its row,
    leg(r, s) counts boxes strictly below in its column,
  * enumeration order is descending lexicographic, (n) first, (1^n) last.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import NamedTuple


class Box(NamedTuple):
    r: int
    s: int


def check_partition(mu):
    mu = tuple(int(x) for x in mu)
    if any(x <= 0 for x in mu):
        raise ValueError(f"partition parts must be positive: {mu}")
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {mu}")
    return mu


@lru_cache(maxsize=None)
def partitions_of(n):
    """All partitions of n, descending lex; length p(n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ((),)
    out = []

    def rec(rest, maxpart, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for k in range(min(rest, maxpart), 0, -1):
            prefix.append(k)
            rec(rest - k, k, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def size(mu):
    return sum(mu)


def boxes(mu):
    return [Box(r, s) for r, part in enumerate(mu) for s in range(part)]


def _check_box(mu, r, s):
    if not (0 <= r < len(mu) and 0 <= s < mu[r]):
        raise ValueError(f"box ({r},{s}) outside diagram {mu}")


def arm(mu, box):
    r, s = box
    _check_box(mu, r, s)
    return mu[r] - s - 1


def leg(mu, box):
    r, s = box
    _check_box(mu, r, s)
    return sum(1 for rr in range(r + 1, len(mu)) if mu[rr] > s)


def conjugate(mu):
    if not mu:
        return ()
    return tuple(sum(1 for part in mu if part > s) for s in range(mu[0]))


def hook(mu, box):
    return arm(mu, box) + leg(mu, box) + 1


def syt_count(lam):
    """Number of standard Young tableaux of shape lam (hook-length formula)."""
    n = size(lam)
    prod = 1
    for b in boxes(lam):
        prod *= hook(lam, b)
    cnt, rem = divmod(factorial(n), prod)
    if rem:
        raise ArithmeticError(f"hook product does not divide n! for {lam}")
    return cnt


def nstat(mu):
    """n(mu) = sum over boxes of the row index r."""
    return sum(r * part for r, part in enumerate(mu))


def z_lambda(lam):
    """Centralizer order of the conjugacy class of cycle type lam."""
    z = 1
    prev = None
    mult = 0
    for part in list(lam) + [None]:
        if part == prev:
            mult += 1
        else:
            if prev is not None:
                z *= prev ** mult * factorial(mult)
            prev, mult = part, 1
    return z


def dominates(lam, mu):
    """True iff lam >= mu in dominance order (same size)."""
    if sum(lam) != sum(mu):
        raise ValueError("dominance needs equal sizes")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


@lru_cache(maxsize=None)
def mn_character(lam, mu):
    """Irreducible S_n character chi^lam at cycle type mu (Murnaghan-Nakayama)."""
    if not mu:
        return 1 if not lam else 0
    k = mu[0]
    rest = mu[1:]
    total = 0
    # border strips via the beta-set: first-column hook lengths are distinct,
    # removing a k-strip = moving one beta number down by k
    beta = [lam[i] + len(lam) - 1 - i for i in range(len(lam))]
    bset = set(beta)
    for b in beta:
        if b - k >= 0 and (b - k) not in bset:
            nb = sorted((bset - {b}) | {b - k}, reverse=True)
            height = sum(1 for x in nb if b - k < x < b)
            newlam = tuple(x - (len(nb) - 1 - i) for i, x in enumerate(nb))
            newlam = tuple(x for x in newlam if x > 0)
            total += (-1) ** height * mn_character(newlam, rest)
    return total


@lru_cache(maxsize=None)
def character_table(n):
    """dict (lam, mu) -> chi^lam(mu) over all partitions of n."""
    parts = partitions_of(n)
    return {(lam, mu): mn_character(lam, mu) for lam in parts for mu in parts}


@lru_cache(maxsize=None)
def kostka_number(lam, mu):
    """Number of semistandard tableaux of shape lam and content mu."""
    if sum(lam) != sum(mu):
        return 0
    if not lam:
        return 1
    if len(mu) == 0:
        return 0
    # strip off the cells containing the largest entry: a horizontal strip
    last = mu[-1]
    rest = mu[:-1]
    total = 0
    for nu in _horizontal_strips_below(lam, last):
        total += kostka_number(nu, rest)
    return total


def _horizontal_strips_below(lam, k):
    """Shapes nu with lam/nu a horizontal strip of size k."""
    out = []
    rows = len(lam)

    def rec(i, removed, shape):
        if removed == k:
            cand = tuple(x for x in shape + list(lam[i:]) if x > 0)
            if all(cand[j] >= cand[j + 1] for j in range(len(cand) - 1)):
                out.append(cand)
            return
        if i == rows:
            return
        below = lam[i + 1] if i + 1 < rows else 0
        # remove m cells from row i; need lam[i] - m >= below and the strip
        # condition nu[i] >= lam[i+1] is exactly that
        for m in range(0, min(lam[i] - below, k - removed) + 1):
            rec(i + 1, removed + m, shape + [lam[i] - m])

    rec(0, 0, [])
    return out


def parse_partition(text):
    """Parse '[3,2,1]' or '3+2+1' (empty partition: '[]')."""
    text = text.strip()
    if text in ("[]", ""):
        return ()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ValueError(f"bad partition syntax: {text!r}")
        body = text[1:-1].strip()
        if not body:
            return ()
        parts = [p.strip() for p in body.split(",")]
    else:
        parts = [p.strip() for p in text.split("+")]
    try:
        mu = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"bad partition syntax: {text!r}") from None
    return check_partition(mu)


def format_partition(mu, style="json"):
    if style == "json":
        return "[" + ",".join(str(x) for x in mu) + "]"
    return "+".join(str(x) for x in mu)
