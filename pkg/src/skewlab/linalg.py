"""Exact linear algebra over a finite field.

Matrices are lists of rows; vectors are lists.  All routines take the field
as first argument and never mutate their inputs.
"""


def identity(k, n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matvec(k, a, v):
    out = []
    for row in a:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = k.add(acc, k.mul(x, y))
        out.append(acc)
    return out


def matmul(k, a, b):
    cols = list(zip(*b))
    return [matvec(k, cols, row) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_sub(k, a, b):
    return [[k.sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def rref(k, rows, ncols=None):
    """Reduced row echelon form.  Returns ``(rows, pivot_columns)``."""
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = k.inv(m[r][c])
        m[r] = [k.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [k.sub(x, k.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(k, rows, ncols=None):
    return len(rref(k, rows, ncols)[1])


def nullspace(k, rows, ncols):
    """Basis of ``{x : A x = 0}`` for the matrix with the given rows."""
    red, pivots = rref(k, rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for row, pc in zip(red, pivots):
            if row[fc]:
                v[pc] = k.neg(row[fc])
        basis.append(v)
    return basis


def span_basis(k, vectors, ncols):
    """Reduced basis (rref rows) of the span of ``vectors``."""
    if not vectors:
        return []
    return rref(k, vectors, ncols)[0]


def same_span(k, u, v, ncols):
    return span_basis(k, u, ncols) == span_basis(k, v, ncols)


def solve_in_span(k, basis, v):
    """Coefficients ``c`` with ``sum c_i basis_i = v``, or None."""
    if not basis:
        return [] if not any(v) else None
    ncols = len(v)
    # columns are basis vectors; augment with v
    rows = [[b[i] for b in basis] + [v[i]] for i in range(ncols)]
    red, pivots = rref(k, rows, len(basis) + 1)
    if len(basis) in pivots:
        return None
    coeffs = [0] * len(basis)
    for row, pc in zip(red, pivots):
        coeffs[pc] = row[-1]
    return coeffs
