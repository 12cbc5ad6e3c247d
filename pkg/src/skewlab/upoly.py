"""Dense univariate polynomials over a finite field.

Polynomials are plain lists of field elements, lowest degree first, with no
trailing zeros; ``[]`` is the zero polynomial.  Every function takes the
coefficient field as first argument; the field only needs ``add``, ``sub``,
``neg``, ``mul``, ``inv`` and ``order``.
"""


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def deg(a):
    return len(a) - 1 if a else -1


def add(k, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = k.add(out[i], c)
    return trim(out)


def sub(k, a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = k.sub(out[i], c)
    return trim(out)


def scale(k, c, a):
    if c == 0:
        return []
    return trim([k.mul(c, x) for x in a])


def mul(k, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = k.add(out[i + j], k.mul(x, y))
    return trim(out)


def monic(k, a):
    if not a:
        return []
    return scale(k, k.inv(a[-1]), a)


def divmod_(k, a, b):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], trim(r)
    q = [0] * (len(r) - db)
    inv_lc = k.inv(b[-1])
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c == 0:
            continue
        c = k.mul(c, inv_lc)
        q[i - db] = c
        for j in range(db + 1):
            if b[j]:
                r[i - db + j] = k.sub(r[i - db + j], k.mul(c, b[j]))
    return trim(q), trim(r[:db])


def rem(k, a, b):
    return divmod_(k, a, b)[1]


def gcd(k, a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, rem(k, a, b)
    return monic(k, a)


def xgcd(k, a, b):
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_(k, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(k, s0, mul(k, q, s1))
        t0, t1 = t1, sub(k, t0, mul(k, q, t1))
    if not r0:
        return [], [], []
    c = k.inv(r0[-1])
    return scale(k, c, r0), scale(k, c, s0), scale(k, c, t0)


def lcm(k, a, b):
    if not a or not b:
        return []
    return monic(k, divmod_(k, mul(k, a, b), gcd(k, a, b))[0])


def mulmod(k, a, b, m):
    return rem(k, mul(k, a, b), m)


def powmod(k, a, e, m):
    result = [1] if deg(m) > 0 else []
    base = rem(k, a, m)
    while e:
        if e & 1:
            result = mulmod(k, result, base, m)
        e >>= 1
        if e:
            base = mulmod(k, base, base, m)
    return result


def evaluate(k, a, x):
    acc = 0
    for c in reversed(a):
        acc = k.add(k.mul(acc, x), c)
    return acc


def derivative(k, a):
    out = []
    for i in range(1, len(a)):
        c = 0
        for _ in range(i % k.char):
            c = k.add(c, a[i])
        out.append(c)
    return trim(out)


def prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(k, a):
    """Rabin's test: ``a | x^(q^d) - x`` and coprime to ``x^(q^(d/r)) - x``."""
    a = monic(k, trim(a))
    d = deg(a)
    if d < 1:
        raise ValueError("irreducibility of a constant is undefined")
    if d == 1:
        return True
    q = k.order
    x = [0, 1]
    # frobenius powers x^(q^j) mod a, j = 0..d
    powers = [rem(k, x, a)]
    for _ in range(d):
        powers.append(powmod(k, powers[-1], q, a))
    if sub(k, powers[d], rem(k, x, a)):
        return False
    for r in prime_factors(d):
        g = gcd(k, sub(k, powers[d // r], x), a)
        if deg(g) > 0:
            return False
    return True
