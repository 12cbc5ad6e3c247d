"""Finite field towers F = GF(q) inside K = GF(q^n) with Frobenius sigma.

Field elements are plain ints.  An element of an extension of degree ``k``
over a subfield of order ``Q`` is the int ``sum c_i Q^i`` built from its
power-basis coordinates ``c_0, ..., c_{k-1}`` (lowest power first).  With
this encoding the copy of F inside K is exactly ``range(q)``.
"""

import functools
import math
from dataclasses import dataclass, field

from . import linalg, upoly
from .errors import DegreeMismatch, EmptyList, NonPrimeP, ReducibleModulus, TooLarge, TowerMismatch

MAX_FIELD_ORDER = 1 << 20
TABLE_LIMIT = 1 << 13


def is_prime(p):
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


class GF:
    """A finite field, either GF(p) or ``base[y]/(modulus)``."""

    def __init__(self, p, base=None, modulus=None):
        self.char = p
        self.base = base
        if base is None:
            self.degree = 1
            self.order = p
            self.modulus = None
        else:
            self.modulus = tuple(modulus)
            self.degree = len(self.modulus) - 1
            self.order = base.order ** self.degree
        self._log = self._exp = None
        self._add_table = None
        if base is not None and self.order <= TABLE_LIMIT:
            self._build_tables()

    def __repr__(self):
        return f"GF({self.order})"

    # --- encoding -----------------------------------------------------------
    def coords(self, a):
        if self.base is None:
            return [a]
        Q = self.base.order
        out = []
        for _ in range(self.degree):
            a, c = divmod(a, Q)
            out.append(c)
        return out

    def from_coords(self, cs):
        if self.base is None:
            return cs[0] % self.char
        Q = self.base.order
        a = 0
        for c in reversed(cs):
            a = a * Q + c
        return a

    def elements(self):
        return range(self.order)

    # --- arithmetic ---------------------------------------------------------
    def add(self, a, b):
        p = self.char
        if self.base is None:
            return (a + b) % p
        if p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a * self.order + b]
        return self._digit_add(a, b)

    def neg(self, a):
        p = self.char
        if p == 2:
            return a
        if self.base is None:
            return -a % p
        out, place = 0, 1
        while a:
            a, c = divmod(a, p)
            out += (-c % p) * place
            place *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.base is None:
            return a * b % self.char
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return self._slow_mul(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.base is None:
            return pow(a, self.char - 2, self.char)
        if self._log is not None:
            return self._exp[(-self._log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            return 0 if e > 0 else 1
        if self._log is not None:
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        e %= self.order - 1
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def from_int(self, k):
        """Image of the integer ``k`` (i.e. k * 1)."""
        return k % self.char

    # --- internals ----------------------------------------------------------
    def _digit_add(self, a, b):
        p = self.char
        out, place = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * place
            place *= p
        return out

    def _slow_mul(self, a, b):
        k = self.base
        prod = upoly.mul(k, self.coords(a), self.coords(b))
        r = upoly.rem(k, prod, list(self.modulus))
        return self.from_coords(r + [0] * (self.degree - len(r)))

    def _build_tables(self):
        N = self.order
        if self.char != 2 and N * N <= 1 << 20:
            self._add_table = [self._digit_add(a, b) for a in range(N) for b in range(N)]
        g = self.primitive_element()
        exp = [0] * (N - 1)
        log = [0] * N
        x = 1
        for i in range(N - 1):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        self._exp, self._log = exp, log

    def primitive_element(self):
        N = self.order
        if self.base is None and N == 2:
            return 1
        factors = upoly.prime_factors(N - 1)
        for g in range(2 if N > 2 else 1, N):
            if all(self._slow_pow(g, (N - 1) // r) != 1 for r in factors):
                return g
        raise AssertionError("no primitive element; modulus not irreducible")

    def _slow_pow(self, a, e):
        mul = self._slow_mul if self.base is not None else self.mul
        result, base = 1, a
        while e:
            if e & 1:
                result = mul(result, base)
            base = mul(base, base)
            e >>= 1
        return result


def _least_irreducible(k, degree):
    """Lexicographically least monic irreducible of ``degree`` over ``k``.

    Candidates are ordered by their coefficient tuple (c_0, c_1, ...), so the
    constant term is compared first.
    """
    import itertools

    for cs in itertools.product(range(k.order), repeat=degree):
        poly = list(cs) + [1]
        if cs[0] != 0 and upoly.is_irreducible(k, poly):
            return tuple(poly)
    raise AssertionError("unreachable: irreducibles exist in every degree")


def _check_modulus(k, modulus, degree, what):
    modulus = tuple(int(c) for c in modulus)
    if len(modulus) - 1 != degree or modulus[-1] != 1:
        raise DegreeMismatch(f"{what} must be monic of degree {degree}, got {list(modulus)}")
    if any(not 0 <= c < k.order for c in modulus):
        raise DegreeMismatch(f"{what} has coefficients outside GF({k.order})")
    if not upoly.is_irreducible(k, list(modulus)):
        raise ReducibleModulus(f"{what} {list(modulus)} is reducible over GF({k.order})")
    return modulus


@dataclass(frozen=True)
class FieldTower:
    """F = GF(q), q = p^e, inside K = GF(q^n) with sigma(a) = a^q.

    Elements of K are ints (see the module docstring); elements of F are the
    ints ``0 .. q-1`` and are simultaneously elements of K.
    """

    p: int
    e: int
    n: int
    base_modulus: tuple
    ext_modulus: tuple
    gen: str = "g"
    F: GF = field(compare=False, repr=False, default=None)
    K: GF = field(compare=False, repr=False, default=None)
    sigma_matrices: tuple = field(compare=False, repr=False, default=())

    @property
    def q(self):
        return self.F.order

    @property
    def order(self):
        return self.K.order

    def coords(self, a):
        """Coordinates of ``a`` over F in the power basis 1, g, ..., g^(n-1)."""
        return self.K.coords(a)

    def from_coords(self, cs):
        return self.K.from_coords(list(cs))

    def in_F(self, a):
        return 0 <= a < self.q

    def frob(self, a, j=1):
        j %= self.n
        if j == 0 or a < self.q:
            return a
        if self.K._log is not None:
            return self.K.pow(a, self.q**j)
        return self.from_coords(linalg.matvec(self.F, self.sigma_matrices[j], self.coords(a)))

    def mult_matrix(self, a):
        """Matrix over F of ``x -> a*x`` on K."""
        K = self.K
        cols = [self.coords(K.mul(a, self.q**i)) for i in range(self.n)]
        return linalg.transpose(cols)

    def spec(self):
        from .text import format_tower

        return format_tower(self)

    def check(self, other):
        if other is not self and other != self:
            raise TowerMismatch(f"tower mismatch: {self.spec()} vs {other.spec()}")


@functools.lru_cache(maxsize=64)
def _build(p, e, n, base_modulus, ext_modulus, gen):
    if not is_prime(p):
        raise NonPrimeP(f"{p} is not prime")
    if e < 1 or n < 1:
        raise DegreeMismatch("e and n must be positive")
    if (p**e) ** n > MAX_FIELD_ORDER:
        raise TooLarge(f"GF({p}^{e * n}) exceeds the supported size 2^20")
    Fp = GF(p)
    if e == 1:
        base_modulus = (0, 1)
        F = Fp
    else:
        if base_modulus is None:
            base_modulus = _least_irreducible(Fp, e)
        base_modulus = _check_modulus(Fp, base_modulus, e, "base modulus")
        F = GF(p, Fp, base_modulus)
    if ext_modulus is None:
        ext_modulus = _least_irreducible(F, n)
    ext_modulus = _check_modulus(F, ext_modulus, n, "extension modulus")
    K = GF(p, F, ext_modulus)
    q = F.order

    def sigma_pow(a, j):
        return K.pow(a, q**j)

    mats = []
    for j in range(n):
        cols = [K.coords(sigma_pow(q**i, j)) for i in range(n)]
        mats.append(tuple(tuple(r) for r in linalg.transpose(cols)))
    tower = FieldTower(p, e, n, tuple(base_modulus), tuple(ext_modulus), gen, F, K, tuple(mats))
    _validate(tower)
    return tower


def _validate(tower):
    F, n = tower.F, tower.n
    ident = linalg.identity(F, n)
    mats = [list(map(list, m)) for m in tower.sigma_matrices]
    # sigma has order exactly n
    for j in range(1, n):
        if mats[j] == ident:
            raise AssertionError(f"sigma^{j} is the identity")
    if linalg.matmul(F, mats[1], mats[n - 1]) != ident if n > 1 else False:
        raise AssertionError("sigma^n is not the identity")
    # Fix(sigma) = F, embedded as the first coordinate
    kernel = linalg.nullspace(F, linalg.mat_sub(F, mats[1 % n], ident), n)
    if n > 1 and (len(kernel) != 1 or any(kernel[0][1:])):
        raise AssertionError("Fix(sigma) differs from F")


def build_tower(p, e=1, n=2, base_modulus=None, ext_modulus=None, gen="g"):
    """Validated tower GF(p^e) inside GF(p^(e n)).

    Omitted moduli default to the lexicographically least monic irreducible
    polynomial (coefficients compared constant term first).
    """
    bm = tuple(base_modulus) if base_modulus is not None else None
    em = tuple(ext_modulus) if ext_modulus is not None else None
    return _build(p, e, n, bm, em, gen)


def frobenius(tower, a, j=1):
    """sigma^j(a) = a^(q^j); j is taken mod n."""
    return tower.frob(a, j)


@dataclass(frozen=True)
class Subfield:
    """Fix(sigma^d) inside K, with an F-basis of K-elements."""

    tower: FieldTower = field(repr=False)
    d: int
    degree_over_F: int
    basis: tuple

    def __contains__(self, a):
        return self.tower.frob(a, self.d) == a

    def elements(self):
        import itertools

        K, F = self.tower.K, self.tower.F
        out = []
        for cs in itertools.product(range(F.order), repeat=len(self.basis)):
            x = 0
            for c, b in zip(cs, self.basis):
                x = K.add(x, K.mul(c, b))
            out.append(x)
        return sorted(out)

    def same_as(self, other):
        n = self.tower.n
        rows = lambda s: [self.tower.coords(b) for b in s.basis]
        return linalg.same_span(self.tower.F, rows(self), rows(other), n)


def _kernel_subfield(tower, exponents, d):
    F, n = tower.F, tower.n
    ident = linalg.identity(F, n)
    rows = []
    for u in exponents:
        rows.extend(linalg.mat_sub(F, list(map(list, tower.sigma_matrices[u % n])), ident))
    kernel = linalg.nullspace(F, rows, n)
    basis = tuple(tower.from_coords(v) for v in linalg.span_basis(F, kernel, n))
    return Subfield(tower, d, len(basis), basis)


def fixed_field(tower, d):
    """Fix(sigma^d) as the kernel of sigma^d - id; its degree over F is gcd(n, d)."""
    if d < 1:
        raise ValueError("d must be positive")
    sub = _kernel_subfield(tower, [d], math.gcd(d, tower.n))
    assert sub.degree_over_F == math.gcd(tower.n, d)
    return sub


def intersect_fixed_fields(tower, exponents):
    """Fix(sigma^u1) ∩ ... ∩ Fix(sigma^uk) = Fix(sigma^gcd(u1, ..., uk, n))."""
    exponents = list(exponents)
    if not exponents:
        raise EmptyList("no exponents given")
    d = math.gcd(tower.n, *exponents)
    closed = fixed_field(tower, d)
    literal = _kernel_subfield(tower, exponents, d)
    if not closed.same_as(literal):
        raise AssertionError(f"kernel intersection disagrees with Fix(sigma^{d})")
    return closed
