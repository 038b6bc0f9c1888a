"""Modified Macdonald polynomials and the Kostka table K[lam, mu](q, t).

The polynomials are built from the explicit fillings sum: over all maps sigma
from the boxes of mu to positive integers, weighted q^inv(sigma) t^maj(sigma).
The statistics use the following frozen orientation (validated against the
classical n <= 3 tables and the table invariants):

* the diagram of mu is laid out with row 1 (the longest) at the bottom and
  row i directly above row i-1,
* maj sums leg(u)+1 over descents, a descent being a box whose entry exceeds
  the entry directly below it; leg counts boxes above in the column,
* inv counts attacking pairs (same row with u left of v, or u in a row with
  v one row below and strictly left) that are out of order, minus arm(u)
  summed over descents.

With this orientation the one-row shape carries q and the one-column shape
carries t, matching the box monomial convention t^row q^col used everywhere
else in this package.  ``swap_qt=True`` exchanges the two variables for
sensitivity checks.

Tables are cached to ``kostka_n<N>.json``; a cache file is trusted only when
its stored generator checksum matches this module's source.
"""

from __future__ import annotations

import hashlib
import json
import os
from fractions import Fraction
from functools import lru_cache

from .partitions import conjugate, format_partition, partitions_of
from .qt import LaurentQT, laurent_from_text
from .symfunc import SymFunc

MAX_N = 8
CACHE_VERSION = 1


class FillingsLayout:
    """Precomputed cell geometry for the fillings sum over one shape."""

    def __init__(self, mu):
        self.mu = mu
        cols = conjugate(mu)
        cells = []  # reading order: top row first, left to right
        for i in range(len(mu), 0, -1):
            for j in range(1, mu[i - 1] + 1):
                cells.append((i, j))
        index = {c: k for k, c in enumerate(cells)}
        self.ncells = len(cells)
        # descents: (cell index, south index, leg+1, arm)
        self.descent_data = []
        for (i, j), k in index.items():
            if i >= 2:
                south = index[(i - 1, j)]
                legp1 = cols[j - 1] - i + 1
                arm = mu[i - 1] - j
                self.descent_data.append((k, south, legp1, arm))
        # attacking pairs (u, v) with u before v in reading order
        self.attack_pairs = []
        for (i, j), k in index.items():
            for (i2, j2), k2 in index.items():
                if k >= k2:
                    continue
                if i2 == i or (i2 == i - 1 and j2 < j):
                    self.attack_pairs.append((k, k2))

    def statistics(self, filling):
        """(inv, maj) of a filling given in reading order."""
        maj = 0
        arm_sub = 0
        for k, south, legp1, arm in self.descent_data:
            if filling[k] > filling[south]:
                maj += legp1
                arm_sub += arm
        inv = -arm_sub
        for u, v in self.attack_pairs:
            if filling[u] > filling[v]:
                inv += 1
        return inv, maj


def _multiset_arrangements(content):
    """All distinct arrangements of the multiset with content[i] copies of i+1."""
    n = sum(content)
    counts = list(content)
    out = []
    cur = [0] * n

    def rec(pos):
        if pos == n:
            out.append(tuple(cur))
            return
        for v in range(len(counts)):
            if counts[v]:
                counts[v] -= 1
                cur[pos] = v + 1
                rec(pos + 1)
                counts[v] += 1

    rec(0)
    return out


@lru_cache(maxsize=None)
def _monomial_expansion(mu):
    """Coefficients of m_lam in the fillings sum for shape mu (integer q,t)."""
    n = sum(mu)
    layout = FillingsLayout(mu)
    out = {}
    for lam in partitions_of(n):
        acc = {}
        for filling in _multiset_arrangements(lam):
            inv, maj = layout.statistics(filling)
            key = (2 * inv, 2 * maj)
            acc[key] = acc.get(key, 0) + 1
        out[lam] = LaurentQT({k: Fraction(v) for k, v in acc.items()})
    return out


def modified_macdonald(mu, swap_qt=False):
    """The modified Macdonald function for shape mu, in the Schur basis."""
    mu = tuple(mu)
    n = sum(mu)
    if n > MAX_N:
        raise ValueError(f"shape size {n} exceeds supported bound {MAX_N}")
    mono = _monomial_expansion(mu)
    f = SymFunc(n, "m", dict(mono)).to("s")
    if swap_qt:
        f = SymFunc(n, "s", {lam: _swap(c) for lam, c in f.coeffs.items()})
    return f


def _swap(r):
    from .qt import RatQT

    return RatQT(
        LaurentQT({(b, a): c for (a, b), c in r.num.terms.items()}),
        LaurentQT({(b, a): c for (a, b), c in r.den.terms.items()}),
    )


class KostkaTable:
    """The full table (lam, mu) -> K[lam, mu](q, t) for one degree."""

    def __init__(self, n, entries, swapped=False):
        self.n = n
        self.entries = entries
        self.swapped = swapped

    def __getitem__(self, key):
        lam, mu = key
        return self.entries[(tuple(lam), tuple(mu))]

    def substituted(self, q_exp, t_exp):
        return {k: v.substitute(q_exp, t_exp) for k, v in self.entries.items()}


def _compute_table(n, swap_qt):
    entries = {}
    for mu in partitions_of(n):
        h = modified_macdonald(mu, swap_qt=swap_qt)
        for lam in partitions_of(n):
            c = h.coeff(lam)
            if not c.is_laurent_polynomial():
                raise ArithmeticError(f"non-polynomial Kostka entry at {(lam, mu)}")
            l = c.as_laurent()
            for (a, b), v in l.terms.items():
                if a < 0 or b < 0 or a % 2 or b % 2 or v.denominator != 1 or v < 0:
                    raise ArithmeticError(
                        f"Kostka entry out of N[q,t] at {(lam, mu)}: {l.text()}"
                    )
            entries[(lam, mu)] = l
    return KostkaTable(n, entries, swapped=swap_qt)


@lru_cache(maxsize=None)
def _cached_table(n, swap_qt):
    return _compute_table(n, swap_qt)


def kostka_table(n, swap_qt=False, cache_dir=None):
    """Kostka table of degree n, memoized; optionally disk-cached.

    Only the unswapped table is written to disk.
    """
    if n < 1:
        raise ValueError("kostka_table needs n >= 1")
    if n > MAX_N:
        raise ValueError(f"degree {n} exceeds supported bound {MAX_N}")
    if cache_dir and not swap_qt:
        loaded = load_cache(n, cache_dir)
        if loaded is not None:
            return loaded
        table = _cached_table(n, False)
        save_cache(table, cache_dir)
        return table
    return _cached_table(n, swap_qt)


# ---------------------------------------------------------------------------
# disk cache
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def generator_checksum():
    with open(__file__, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def cache_path(cache_dir, n):
    return os.path.join(cache_dir, f"kostka_n{n}.json")


def cache_bytes(table):
    payload = {
        "version": CACHE_VERSION,
        "n": table.n,
        "generator": generator_checksum(),
        "entries": {
            format_partition(lam) + "|" + format_partition(mu): l.text()
            for (lam, mu), l in table.entries.items()
        },
    }
    return (json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n").encode()


def save_cache(table, cache_dir):
    os.makedirs(cache_dir, exist_ok=True)
    path = cache_path(cache_dir, table.n)
    with open(path, "wb") as fh:
        fh.write(cache_bytes(table))
    return path


def load_cache(n, cache_dir):
    path = cache_path(cache_dir, n)
    if not os.path.exists(path):
        return None
    try:
        with open(path, "rb") as fh:
            payload = json.loads(fh.read().decode())
    except (OSError, ValueError):
        return None
    if payload.get("version") != CACHE_VERSION or payload.get("n") != n:
        return None
    if payload.get("generator") != generator_checksum():
        return None
    from .partitions import parse_partition

    entries = {}
    for key, text in payload["entries"].items():
        lk, mk = key.split("|")
        entries[(parse_partition(lk), parse_partition(mk))] = laurent_from_text(text)
    return KostkaTable(n, entries)
