"""Exact arithmetic in the variables q, t on the half-integer exponent lattice.

Scalars live in the field of rational functions Q(q^{1/2}, t^{1/2}).  Exponents
are stored *doubled* so that the lattice (1/2)Z x (1/2)Z becomes Z x Z and all
arithmetic stays exact integer/Fraction work.  A term key ``(a2, b2)`` means
``q^(a2/2) * t^(b2/2)``.

Two layers:

* :class:`LaurentQT` -- finite Fraction-coefficient Laurent polynomials on the
  doubled lattice.
* :class:`RatQT` -- quotients num/den of LaurentQT in a canonical form: the
  denominator is a genuine polynomial (min exponent 0 in each variable) with
  graded-lex leading coefficient 1, gcd(num, den) = 1, and any monomial
  content pushed into the numerator.  Equality is structural.

No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction

POLE = "pole"

_GLEX = lambda key: (key[0] + key[1], key[0])  # graded-lex on doubled exponents


class LaurentQT:
    """Laurent polynomial in q^{1/2}, t^{1/2} with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {k: v for k, v in terms.items() if v != 0}

    @classmethod
    def const(cls, c):
        c = Fraction(c)
        return cls({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, a2, b2, coeff=1):
        return cls({(int(a2), int(b2)): Fraction(coeff)})

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0, 0): Fraction(1)}

    def is_monomial(self):
        return len(self.terms) == 1

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentQT):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentQT.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return LaurentQT({k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentQT.const(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return LaurentQT(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentQT.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return LaurentQT()
            return LaurentQT({k: v * c for k, v in self.terms.items()})
        out = {}
        for (a, b), u in self.terms.items():
            for (c, d), v in other.terms.items():
                k = (a + c, b + d)
                w = out.get(k, 0) + u * v
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
        return LaurentQT(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a LaurentQT; use RatQT")
        out = LaurentQT.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def substitute(self, q_exp, t_exp):
        """Map q -> q^q_exp, t -> t^t_exp (nonzero integers)."""
        return LaurentQT({(a * q_exp, b * t_exp): c for (a, b), c in self.terms.items()})

    def min_exps(self):
        amin = min(a for a, _ in self.terms)
        bmin = min(b for _, b in self.terms)
        return amin, bmin

    def shifted(self, da, db):
        return LaurentQT({(a + da, b + db): c for (a, b), c in self.terms.items()})

    def leading_key(self):
        return max(self.terms, key=_GLEX)

    def leading_coeff(self):
        return self.terms[self.leading_key()]

    def value_at_one(self):
        """Evaluate at q = t = 1 (sum of coefficients)."""
        return sum(self.terms.values(), Fraction(0))

    def eval_doubled(self, qh, th):
        """Evaluate with q^{1/2} = qh, t^{1/2} = th (exact Fractions)."""
        tot = Fraction(0)
        for (a, b), c in self.terms.items():
            tot += c * (qh ** a) * (th ** b)
        return tot

    def total_degree(self):
        """Max of (exponent sums), in doubled units; None for zero."""
        if not self.terms:
            return None
        return max(a + b for a, b in self.terms)

    def text(self):
        """Canonical text, terms sorted by (total degree, q-degree)."""
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=_GLEX):
            parts.append(_term_text(key, self.terms[key], first=not parts))
        return "".join(parts)

    def __repr__(self):
        return f"LaurentQT({self.text()})"


def laurent_from_text(text):
    """Parse the canonical text form produced by :meth:`LaurentQT.text`."""
    text = text.strip()
    if text == "0":
        return LaurentQT()
    out = {}
    body = text.replace(" - ", " +-").split(" + ")
    for chunk in body:
        chunk = chunk.strip()
        coeff = Fraction(1)
        if chunk.startswith("+-"):
            chunk = chunk[2:]
            coeff = Fraction(-1)
        elif chunk.startswith("-"):
            chunk = chunk[1:]
            coeff = Fraction(-1)
        a2 = b2 = 0
        for piece in chunk.split("*"):
            piece = piece.strip()
            if not piece:
                continue
            if piece[0] in "qt":
                var = piece[0]
                rest = piece[1:]
                if not rest:
                    e2 = 2
                elif rest.startswith("^"):
                    rest = rest[1:]
                    if rest.startswith("(") and rest.endswith(")"):
                        rest = rest[1:-1]
                    if "/" in rest:
                        num, den = rest.split("/")
                        if int(den) != 2:
                            raise ValueError(f"bad exponent in {piece!r}")
                        e2 = int(num)
                    else:
                        e2 = 2 * int(rest)
                else:
                    raise ValueError(f"bad term {piece!r}")
                if var == "q":
                    a2 += e2
                else:
                    b2 += e2
            else:
                coeff *= Fraction(piece)
        key = (a2, b2)
        out[key] = out.get(key, Fraction(0)) + coeff
    return LaurentQT(out)


def _exp_text(var, e2):
    if e2 == 0:
        return ""
    if e2 == 2:
        return var
    if e2 % 2 == 0:
        return f"{var}^{e2 // 2}" if e2 > 0 else f"{var}^({e2 // 2})"
    return f"{var}^({e2}/2)"


def _term_text(key, coeff, first):
    a2, b2 = key
    mono = "*".join(s for s in (_exp_text("q", a2), _exp_text("t", b2)) if s)
    if coeff < 0:
        sign = "-" if first else " - "
        coeff = -coeff
    else:
        sign = "" if first else " + "
    if not mono:
        return f"{sign}{coeff}"
    if coeff == 1:
        return f"{sign}{mono}"
    return f"{sign}{coeff}*{mono}"


# ---------------------------------------------------------------------------
# polynomial gcd machinery (doubled-exponent dicts with min exponents >= 0)
# ---------------------------------------------------------------------------

def _uni_norm(u):
    return {k: v for k, v in u.items() if v}


def _uni_mul(u, v):
    out = {}
    for a, x in u.items():
        for b, y in v.items():
            k = a + b
            w = out.get(k, 0) + x * y
            if w:
                out[k] = w
            else:
                out.pop(k, None)
    return out


def _uni_scale(u, c):
    if not c:
        return {}
    return {k: v * c for k, v in u.items()}


def _uni_sub(u, v):
    out = dict(u)
    for k, y in v.items():
        w = out.get(k, 0) - y
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def _uni_gcd(u, v):
    """Monic gcd in Q[T] (dicts exponent -> Fraction)."""
    u, v = _uni_norm(u), _uni_norm(v)
    if not u:
        u, v = v, u
    while v:
        du, dv = max(u), max(v)
        if du < dv:
            u, v = v, u
            continue
        # reduce u by v
        r = dict(u)
        while r and max(r) >= dv:
            dr = max(r)
            c = r[dr] / v[dv]
            for k2, y in v.items():
                k = k2 + dr - dv
                w = r.get(k, 0) - c * y
                if w:
                    r[k] = w
                else:
                    r.pop(k, None)
        u, v = v, r
    if not u:
        return {}
    lc = u[max(u)]
    return {k: v / lc for k, v in u.items()}


def _uni_divexact(u, v):
    """Exact division in Q[T]; raises if not divisible."""
    u = dict(u)
    out = {}
    dv = max(v)
    lv = v[dv]
    while u:
        du = max(u)
        if du < dv:
            raise ArithmeticError("inexact univariate division")
        c = u[du] / lv
        out[du - dv] = c
        for k2, y in v.items():
            k = k2 + du - dv
            w = u.get(k, 0) - c * y
            if w:
                u[k] = w
            else:
                u.pop(k, None)
    return out


def _to_rec(f):
    """dict (a,b)->c  ==>  dict a -> {b: c}  (main variable = q-slot)."""
    rec = {}
    for (a, b), c in f.items():
        rec.setdefault(a, {})[b] = c
    return rec


def _from_rec(rec):
    return {(a, b): c for a, u in rec.items() for b, c in u.items()}


def _rec_content(rec):
    cont = {}
    for u in rec.values():
        cont = _uni_gcd(cont, u)
        if cont == {0: Fraction(1)}:
            break
    return cont


def _rec_primitive(rec):
    cont = _rec_content(rec)
    if not cont or cont == {0: Fraction(1)}:
        return rec, cont
    return {a: _uni_divexact(u, cont) for a, u in rec.items()}, cont


def _rec_is_zero(rec):
    return not rec


def _rec_scale_uni(rec, u):
    return {a: _uni_mul(c, u) for a, c in rec.items()} if u else {}


def _rec_sub(r1, r2):
    out = {a: dict(u) for a, u in r1.items()}
    for a, u in r2.items():
        w = _uni_sub(out.get(a, {}), u)
        if w:
            out[a] = w
        else:
            out.pop(a, None)
    return out


def _rec_shift_q(rec, k):
    return {a + k: u for a, u in rec.items()}


def _prem(f, g):
    """Pseudo-remainder of f by g in the q-variable (recursive reps)."""
    df, dg = max(f), max(g)
    lg = g[dg]
    r = {a: dict(u) for a, u in f.items()}
    while r and max(r) >= dg:
        dr = max(r)
        lr = r[dr]
        # r <- lg*r - lr*q^(dr-dg)*g
        r = _rec_sub(_rec_scale_uni(r, lg), _rec_shift_q(_rec_scale_uni(g, lr), dr - dg))
    return r


def poly_gcd(f, g):
    """Gcd of two polynomial LaurentQT dicts (min exps 0), graded-lex monic."""
    if not f:
        base = dict(g)
    elif not g:
        base = dict(f)
    else:
        rf, rg = _to_rec(f), _to_rec(g)
        pf, cf = _rec_primitive(rf)
        pg, cg = _rec_primitive(rg)
        cont = _uni_gcd(cf, cg)
        a, b = pf, pg
        if max(a) < max(b):
            a, b = b, a
        while not _rec_is_zero(b):
            r = _prem(a, b)
            if _rec_is_zero(r):
                a, b = b, r
            else:
                a, b = b, _rec_primitive(r)[0]
        gcd_rec = _rec_primitive(a)[0]
        base = _from_rec({ae: _uni_mul(u, cont) for ae, u in gcd_rec.items()})
    if not base:
        return {}
    lc = base[max(base, key=_GLEX)]
    return {k: v / lc for k, v in base.items()}


def poly_divexact(f, g):
    """Exact multivariate division of polynomial dicts; raises if inexact."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    f = dict(f)
    out = {}
    gl = max(g, key=_GLEX)
    glc = g[gl]
    while f:
        fl = max(f, key=_GLEX)
        ka, kb = fl[0] - gl[0], fl[1] - gl[1]
        if ka < 0 or kb < 0:
            raise ArithmeticError("inexact polynomial division")
        c = f[fl] / glc
        out[(ka, kb)] = c
        for (a, b), v in g.items():
            k = (a + ka, b + kb)
            w = f.get(k, 0) - c * v
            if w:
                f[k] = w
            else:
                f.pop(k, None)
    return out


# ---------------------------------------------------------------------------
# RatQT
# ---------------------------------------------------------------------------

class RatQT:
    """Normalized rational function num/den over the q,t half-lattice."""

    __slots__ = ("num", "den")

    def __init__(self, num, den, _normalized=False):
        if isinstance(num, (int, Fraction)):
            num = LaurentQT.const(num)
        if isinstance(den, (int, Fraction)):
            den = LaurentQT.const(den)
        if _normalized:
            self.num, self.den = num, den
            return
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = LaurentQT(), LaurentQT.const(1)
            return
        na, nb = num.min_exps()
        da, db = den.min_exps()
        npoly = {(a - na, b - nb): c for (a, b), c in num.terms.items()}
        dpoly = {(a - da, b - db): c for (a, b), c in den.terms.items()}
        if len(dpoly) > 1 and len(npoly) > 1:
            g = poly_gcd(npoly, dpoly)
            if len(g) > 1 or (0, 0) not in g:
                npoly = poly_divexact(npoly, g)
                dpoly = poly_divexact(dpoly, g)
        elif len(dpoly) == 1:
            pass  # monomial denominator: nothing to cancel beyond the shift
        lc = dpoly[max(dpoly, key=_GLEX)]
        sa, sb = na - da, nb - db
        self.num = LaurentQT({(a + sa, b + sb): c / lc for (a, b), c in npoly.items()})
        self.den = LaurentQT(dpoly) * (Fraction(1) / lc) if lc != 1 else LaurentQT(dpoly)

    @classmethod
    def const(cls, c):
        return cls(LaurentQT.const(c), LaurentQT.const(1), _normalized=True)

    @classmethod
    def from_laurent(cls, l):
        return cls(l, LaurentQT.const(1), _normalized=True)

    @classmethod
    def monomial(cls, a2, b2, coeff=1):
        if coeff == 0:
            return cls.const(0)
        return cls(LaurentQT.monomial(a2, b2, coeff), LaurentQT.const(1), _normalized=True)

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatQT.const(other)
        if not isinstance(other, RatQT):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RatQT(-self.num, self.den, _normalized=True)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatQT.const(other)
        if self.den == other.den:
            return RatQT(self.num + other.num, self.den)
        return RatQT(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatQT.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatQT(self.num * other, self.den)
        if isinstance(other, LaurentQT):
            other = RatQT.from_laurent(other)
        return RatQT(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatQT.const(other)
        if isinstance(other, LaurentQT):
            other = RatQT.from_laurent(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(q,t)")
        return RatQT(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatQT.const(other) / self

    def __pow__(self, e):
        if e == 0:
            return RatQT.const(1)
        if e < 0:
            return RatQT.const(1) / (self ** (-e))
        return RatQT(self.num ** e, self.den ** e)

    def inverse(self):
        return RatQT.const(1) / self

    def substitute(self, q_exp, t_exp):
        """Return f(q^q_exp, t^t_exp) for nonzero integer exponents."""
        if q_exp == 0 or t_exp == 0:
            raise ValueError("substitution exponents must be nonzero integers")
        return RatQT(self.num.substitute(q_exp, t_exp), self.den.substitute(q_exp, t_exp))

    def involution(self):
        """The involution q -> q^{-1}, t -> t^{-1}."""
        return self.substitute(-1, -1)

    def is_laurent_polynomial(self):
        return self.den.is_monomial()

    def as_laurent(self):
        """LaurentQT form; requires a monomial denominator."""
        if not self.den.is_monomial():
            raise ArithmeticError("not a Laurent polynomial: " + self.text())
        ((a, b), c), = self.den.terms.items()
        return self.num.shifted(-a, -b) * (Fraction(1) / c)

    def limit_at_one(self):
        """Substitute q = t = z, cancel (1-z) factors, evaluate at z = 1.

        Returns a Fraction, or the string POLE if a pole remains.
        """
        num = _collapse(self.num)
        den = _collapse(self.den)
        # divide both by (Z - 1)^k where Z = z^{1/2}
        while True:
            nv = sum(num.values(), Fraction(0))
            dv = sum(den.values(), Fraction(0))
            if dv != 0:
                return nv / dv
            if nv != 0:
                return POLE
            num = _deflate_at_one(num)
            den = _deflate_at_one(den)

    def eval_doubled(self, qh, th):
        """Evaluate with q^{1/2} = qh, t^{1/2} = th; exact Fractions."""
        d = self.den.eval_doubled(qh, th)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.eval_doubled(qh, th) / d

    def text(self):
        if self.den.is_one():
            return self.num.text()
        return f"({self.num.text()}) / ({self.den.text()})"

    def to_json(self):
        def enc(l):
            return [[a, b, str(l.terms[(a, b)])] for a, b in sorted(l.terms, key=_GLEX)]
        return {"num": enc(self.num), "den": enc(self.den)}

    def __repr__(self):
        return f"RatQT({self.text()})"

    def series(self, maxdeg2):
        """Power-series expansion up to doubled total degree maxdeg2.

        Requires the denominator's lowest-degree part to be a single monomial.
        Returns a dict (a2, b2) -> Fraction with a2 + b2 <= maxdeg2.
        """
        den = self.den.terms
        low = min(den, key=lambda k: (k[0] + k[1], k[0]))
        if sum(1 for k in den if k[0] + k[1] == low[0] + low[1]) != 1:
            raise ArithmeticError("no power-series expansion: non-monomial minimal part")
        c0 = den[low]
        num = {(a - low[0], b - low[1]): c / c0 for (a, b), c in self.num.terms.items()}
        eps = {(a - low[0], b - low[1]): c / c0 for (a, b), c in den.items() if (a, b) != low}
        # invert 1 + eps as a series
        out = {k: v for k, v in num.items() if k[0] + k[1] <= maxdeg2}
        layer = dict(num)
        for _ in range(maxdeg2 + 1):
            nxt = {}
            for (a, b), c in layer.items():
                for (da, db), e in eps.items():
                    k = (a + da, b + db)
                    if k[0] + k[1] > maxdeg2:
                        continue
                    w = nxt.get(k, 0) - c * e
                    if w:
                        nxt[k] = w
                    else:
                        nxt.pop(k, None)
            if not nxt:
                break
            for k, v in nxt.items():
                w = out.get(k, 0) + v
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
            layer = nxt
        if any(a < 0 or b < 0 for a, b in out):
            raise ArithmeticError("series expansion produced negative exponents")
        return out


def _collapse(l):
    """Substitute q = t = z; returns dict (doubled z-exponent) -> Fraction."""
    out = {}
    for (a, b), c in l.terms.items():
        k = a + b
        w = out.get(k, 0) + c
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def _deflate_at_one(u):
    """Divide a univariate doubled-exponent dict by (Z - 1), Z = z^{1/2}."""
    if not u:
        return {}
    lo = min(u)
    shifted = {k - lo: v for k, v in u.items()}
    # synthetic division by (Z - 1)
    deg = max(shifted)
    coeffs = [shifted.get(i, Fraction(0)) for i in range(deg + 1)]
    out = [Fraction(0)] * deg
    acc = Fraction(0)
    for i in range(deg, 0, -1):
        acc = coeffs[i] + acc
        out[i - 1] = acc
    return {i + lo: c for i, c in enumerate(out) if c}


# convenient generators ------------------------------------------------------

ONE = RatQT.const(1)
ZERO = RatQT.const(0)


def q_pow(e2):
    """q^(e2/2) as RatQT."""
    return RatQT.monomial(e2, 0)


def t_pow(e2):
    return RatQT.monomial(0, e2)


def qt_pow(e2):
    """(qt)^(e2/2) as RatQT."""
    return RatQT.monomial(e2, e2)


def one_minus(a2, b2):
    """1 - q^(a2/2) t^(b2/2) as a LaurentQT."""
    return LaurentQT({(0, 0): Fraction(1), (a2, b2): Fraction(-1)})
