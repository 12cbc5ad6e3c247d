"""Canonical text forms and parsers for towers, field elements and polynomials.

The grammar is documented in FORMATS.md at the repository root.  Printing is
canonical (terms in decreasing degree, no spaces) and parsing accepts
whitespace, ``-`` and arbitrary products, so ``parse(format(x)) == x``.
"""

import re

from . import upoly
from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


def _tokenize(s):
    out = []
    for num, ident, op in _TOKEN.findall(s):
        if num:
            out.append(("num", int(num)))
        elif ident:
            out.append(("var", ident))
        elif op.strip():
            if op not in "+-*^()[],":
                raise ParseError(f"unexpected character {op!r} in {s!r}")
            out.append(("op", op))
    return out


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "token"
            raise ParseError(f"expected {want} at token {self.i} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        v = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return v

    def expr(self):
        r = self.ring
        sign = None
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = self.take()[1]
        v = self.term()
        if sign == "-":
            v = r.neg(v)
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = r.add(v, w) if op == "+" else r.sub(v, w)
        return v

    def term(self):
        v = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            v = self.ring.mul(v, self.factor())
        return v

    def factor(self):
        v = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            v = self.ring.pow(v, self.take("num")[1])
        return v

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return self.ring.from_int(val)
        if kind == "var":
            self.take()
            return self.ring.var(val)
        if (kind, val) == ("op", "("):
            self.take()
            v = self.expr()
            self.take("op", ")")
            return v
        if (kind, val) == ("op", "["):
            self.take()
            cs = [self.take("num")[1]]
            while self.peek() == ("op", ","):
                self.take()
                cs.append(self.take("num")[1])
            self.take("op", "]")
            return self.ring.vector(cs)
        if kind is None:
            raise ParseError(f"unexpected end of input in {self.text!r}")
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


class _Ring:
    """Adapter base: subclasses provide from_int/var/add/neg/mul."""

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def pow(self, a, k):
        out = self.from_int(1)
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def vector(self, cs):
        raise ParseError("coordinate vectors are not allowed here")

    def var(self, name):
        raise ParseError(f"unknown variable {name!r}")


class _UPolyRing(_Ring):
    """Univariate polynomials over ``k`` in ``name``; ``z`` is F's generator."""

    def __init__(self, k, name, zgen=None):
        self.k, self.name, self.zgen = k, name, zgen

    def from_int(self, v):
        return upoly.trim([self.k.from_int(v)])

    def var(self, name):
        if name == self.name:
            return [0, 1]
        if name == "z" and self.zgen is not None:
            return [self.zgen]
        return super().var(name)

    def add(self, a, b):
        return upoly.add(self.k, a, b)

    def neg(self, a):
        return [self.k.neg(c) for c in a]

    def mul(self, a, b):
        return upoly.mul(self.k, a, b)


def _zgen(F):
    return F.char if F.base is not None else None


# --- field elements -----------------------------------------------------------


def _poly_terms(coeffs, var, fmt_coeff, multi):
    """Render sum c_i var^i; ``multi(c)`` says whether c needs parentheses."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(fmt_coeff(c))
        elif c == 1:
            terms.append(mono)
        else:
            s = fmt_coeff(c)
            terms.append(f"({s})*{mono}" if multi(c) else f"{s}*{mono}")
    return "+".join(terms) if terms else "0"


def _nonzero_terms(cs):
    return sum(1 for c in cs if c)


def format_F(F, c):
    if F.base is None:
        return str(c)
    cs = F.coords(c)
    return _poly_terms(cs, "z", str, lambda _: False)


def _F_multi(F, c):
    return F.base is not None and _nonzero_terms(F.coords(c)) > 1


def format_K(tower, a):
    F = tower.F
    cs = tower.coords(a)
    return _poly_terms(cs, tower.gen, lambda c: format_F(F, c), lambda c: _F_multi(F, c))


def _K_multi(tower, a):
    cs = tower.coords(a)
    nz = [c for c in cs if c]
    if len(nz) > 1:
        return True
    return bool(nz) and _F_multi(tower.F, nz[0])


def format_center_poly(p):
    F = p.field
    return _poly_terms(list(p.coeffs), "x", lambda c: format_F(F, c), lambda c: _F_multi(F, c))


def format_skew(f):
    tower = f.tower
    return _poly_terms(list(f.coeffs), "t", lambda a: format_K(tower, a), lambda a: _K_multi(tower, a))


def format_tower(tower):
    F = tower.F
    if tower.e == 1:
        head = f"GF({tower.p})"
    else:
        base = _poly_terms(list(tower.base_modulus), "z", str, lambda _: False)
        head = f"GF({tower.p}^{tower.e}/{base})"
    ext = _poly_terms(list(tower.ext_modulus), "y", lambda c: format_F(F, c), lambda c: _F_multi(F, c))
    out = f"{head}^{tower.n}/{ext}"
    if tower.gen != "g":
        out += f",gen={tower.gen}"
    return out


# --- parsers ------------------------------------------------------------------

_TOWER_RE = re.compile(
    r"^GF\((\d+)(?:\^(\d+)(?:/([^)]*))?)?\)\^(\d+)(?:/([^,]*))?(?:,gen=([A-Za-z_]\w*))?$"
)


def parse_tower(spec):
    from .field_tower import GF, _least_irreducible, build_tower, is_prime

    m = _TOWER_RE.match(re.sub(r"\s+", "", spec))
    if not m:
        raise ParseError(f"bad tower spec {spec!r}; expected e.g. 'GF(2)^2/y^2+y+1'")
    p, e, base, n, ext, gen = m.groups()
    p, e, n = int(p), int(e or 1), int(n)
    gen = gen or "g"
    if gen in ("t", "x", "y", "z"):
        raise ParseError(f"generator name {gen!r} is reserved")
    if not is_prime(p):
        from .errors import NonPrimeP

        raise NonPrimeP(f"{p} is not prime")
    Fp = GF(p)
    base_mod = None
    if base:
        base_mod = _Parser(base, _UPolyRing(Fp, "z")).parse()
    ext_mod = None
    if ext:
        if e == 1:
            F = Fp
        else:
            # ext-modulus coefficients may mention z, so F is needed first
            F = GF(p, Fp, base_mod or _least_irreducible(Fp, e))
        ext_mod = _Parser(ext, _UPolyRing(F, "y", _zgen(F))).parse()
    return build_tower(p, e, n, base_mod, ext_mod, gen)


class _SkewRing(_Ring):
    def __init__(self, tower):
        self.tower = tower

    def from_int(self, v):
        from .skew_poly import SkewPoly

        return SkewPoly.constant(self.tower, self.tower.F.from_int(v))

    def var(self, name):
        from .skew_poly import SkewPoly

        tw = self.tower
        if name == "t":
            return SkewPoly.t(tw)
        if name == tw.gen:
            return SkewPoly.constant(tw, tw.q if tw.n > 1 else 0)
        if name == "z" and tw.e > 1:
            return SkewPoly.constant(tw, tw.p)
        return super().var(name)

    def vector(self, cs):
        from .skew_poly import SkewPoly

        tw = self.tower
        if len(cs) != tw.n or any(not 0 <= c < tw.q for c in cs):
            raise ParseError(f"coordinate vector must have {tw.n} entries in 0..{tw.q - 1}")
        return SkewPoly.constant(tw, tw.from_coords(cs))

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b


def parse_skew(tower, text):
    return _Parser(text, _SkewRing(tower)).parse()


def parse_K(tower, text):
    f = parse_skew(tower, text)
    if f.degree > 0:
        raise ParseError(f"{text!r} is not a field element")
    return f.coeffs[0] if f.coeffs else 0


def parse_center_poly(field, text):
    from .center_poly import CenterPoly

    return CenterPoly(field, _Parser(text, _UPolyRing(field, "x", _zgen(field))).parse())
