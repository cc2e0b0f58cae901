"""Dense exact linear algebra over the coefficient fields.

Matrices are lists of row lists whose entries are field elements
(Fraction or GFElement).  Pivoting always takes the first nonzero entry,
the only sound choice for exact arithmetic, and every rank or kernel
decision is therefore exact.
"""

from __future__ import annotations


def zero_matrix(rows: int, cols: int, field) -> list[list]:
    z = field.zero()
    return [[z] * cols for _ in range(rows)]


def identity(n: int, field) -> list[list]:
    z, o = field.zero(), field.one()
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def scaled_identity(factor, n: int, field) -> list[list]:
    z = field.zero()
    return [[factor if i == j else z for j in range(n)] for i in range(n)]


def mat_sub(a: list[list], b: list[list]) -> list[list]:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_mul(a: list[list], b: list[list], field) -> list[list]:
    n, k = len(a), len(b)
    m = len(b[0]) if k else 0
    zero = field.zero()
    bt = [[b[i][j] for i in range(k)] for j in range(m)]
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = zero
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def mat_vec(a: list[list], v: list, field) -> list:
    zero = field.zero()
    out = []
    for row in a:
        acc = zero
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def mat_pow(a: list[list], k: int, field) -> list[list]:
    n = len(a)
    result = identity(n, field)
    base = a
    while k > 0:
        if k & 1:
            result = mat_mul(result, base, field)
        k >>= 1
        if k:
            base = mat_mul(base, base, field)
    return result


def is_zero_matrix(a: list[list]) -> bool:
    return all(not entry for row in a for entry in row)


def rref(matrix: list[list], field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form (a fresh matrix) and its pivot columns."""
    rows = [row[:] for row in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    one = field.one()
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        if pv != one:
            inv = one / pv
            rows[r] = [v * inv for v in rows[r]]
        lead = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], lead)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(matrix: list[list], field) -> int:
    if not matrix:
        return 0
    return len(rref(matrix, field)[1])


def kernel_basis(matrix: list[list], field) -> list[list]:
    """Echelon basis of the right kernel, one vector per free column."""
    if not matrix:
        raise ValueError("kernel of a matrix with no rows is ambiguous")
    reduced, pivots = rref(matrix, field)
    ncols = len(matrix[0])
    pivot_set = set(pivots)
    zero, one = field.zero(), field.one()
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [zero] * ncols
        v[free] = one
        for i, p in enumerate(pivots):
            c = reduced[i][free]
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def solve_in_column_space(columns: list[list], targets: list[list], field) -> list[list]:
    """Coordinates of each target vector in the span of the given columns.

    ``columns`` is an n x m matrix whose m columns are independent.
    Raises ValueError if some target lies outside their span.
    """
    n = len(columns)
    m = len(columns[0]) if n else 0
    augmented = [columns[i][:] + [t[i] for t in targets] for i in range(n)]
    reduced, pivots = rref(augmented, field)
    for p in pivots:
        if p >= m:
            raise ValueError("target vector outside the column space")
    zero = field.zero()
    out = []
    for t_index in range(len(targets)):
        v = [zero] * m
        for i, p in enumerate(pivots):
            v[p] = reduced[i][m + t_index]
        out.append(v)
    return out


def minimal_polynomial(matrix: list[list], field) -> list:
    """Coefficients (constant first, monic) of the minimal polynomial.

    Found as the first linear dependence among the flattened powers
    I, M, M**2, ...; Cayley-Hamilton caps the degree at the matrix size.
    """
    n = len(matrix)
    zero, one = field.zero(), field.one()
    width = n * n
    # echelon rows: (reduced flattened power, dependence coefficients, lead index)
    echelon: list[tuple[list, list, int]] = []
    power = identity(n, field)
    for k in range(n + 1):
        vec = [power[i][j] for i in range(n) for j in range(n)]
        comb = [zero] * (n + 2)
        comb[k] = one
        for evec, ecomb, lead in echelon:
            c = vec[lead]
            if c:
                vec = [v - c * w for v, w in zip(vec, evec)]
                comb = [v - c * w for v, w in zip(comb, ecomb)]
        lead = next((i for i in range(width) if vec[i]), None)
        if lead is None:
            return comb[: k + 1]
        inv = one / vec[lead]
        vec = [v * inv for v in vec]
        comb = [v * inv for v in comb]
        echelon.append((vec, comb, lead))
        if k < n:
            power = mat_mul(power, matrix, field)
    raise ValueError("no linear dependence among matrix powers found")
