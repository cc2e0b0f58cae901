"""Artinian quotients k[x,y]/I and their local invariants at rational points.

The quotient of a zero-dimensional ideal is carried by the pair of
commuting multiplication operators on the standard-monomial basis.  All
invariants come out of exact linear algebra on those operators:

* the support splits into local factors as joint generalized kernels of
  the operators at their rational joint eigenvalues;
* each factor is translated to the origin on the matrix side (M - p*Id),
  never by substituting into polynomials;
* the socle dimension is the kernel of the stacked translated pair;
* the minimal generator count of the local ideal comes from its image in
  the truncation k[x,y]/m^(r+1), where r is the nilpotency index.

The socle route and the generator-count route are independent, and the
identity socle = generators - 1 is asserted wherever both are computed;
a mismatch raises LemmaViolation because it can only mean an engine bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import LemmaViolation, NotZeroDimensional, PointNotInSupport
from .groebner import GroebnerBasis, is_zero_dimensional
from .linalg import (
    identity,
    is_zero_matrix,
    kernel_basis,
    mat_mul,
    mat_pow,
    mat_sub,
    mat_vec,
    minimal_polynomial,
    rank,
    scaled_identity,
    solve_in_column_space,
)
from .poly import Monomial, Polynomial, X, Y


@dataclass(frozen=True)
class QuotientBasis:
    """Standard monomials (those outside the initial ideal), order ascending."""

    monomials: tuple[Monomial, ...]

    @property
    def dimension(self) -> int:
        return len(self.monomials)


@dataclass
class MultiplicationPair:
    """Matrices of multiplication by x and by y on the standard basis."""

    on_x: list
    on_y: list


@dataclass
class LocalQuotient:
    """One local factor of the quotient at a rational support point.

    The multiplication pair is already translated to the origin, so both
    matrices are nilpotent; ``nilpotency_index`` is the least r for which
    every length-r product of them vanishes.
    """

    point: tuple
    dimension: int
    mult_x: list
    mult_y: list
    nilpotency_index: int
    field: object


@dataclass
class Decomposition:
    components: list
    residual_dimension: int
    colength: int


@dataclass(frozen=True)
class BettiData:
    minimal_generators: int  # e
    b1: int
    b2: int
    socle_dim: int


@dataclass(frozen=True)
class MultiplicityData:
    b2: int
    multiplicity: int
    local_length: int
    bounded_by_length: bool
    equals_length: bool


@dataclass(frozen=True)
class ComponentAnalysis:
    point: tuple
    local_length: int
    nilpotency_index: int
    betti: BettiData
    multiplicity: MultiplicityData


@dataclass(frozen=True)
class IdealAnalysis:
    colength: int
    components: tuple
    residual_dimension: int


def quotient_basis(gb: GroebnerBasis) -> QuotientBasis:
    """Monomials outside the initial ideal, sorted ascending by gb's order."""
    if not is_zero_dimensional(gb):
        raise NotZeroDimensional(
            "leading monomials contain no pure power of x or no pure power of y"
        )
    lms = gb.leading_monomials()
    bound_x = min(m.a for m in lms if m.b == 0)
    bound_y = min(m.b for m in lms if m.a == 0)
    standard = [
        Monomial(a, b)
        for a in range(bound_x)
        for b in range(bound_y)
        if not any(lm.divides(Monomial(a, b)) for lm in lms)
    ]
    standard.sort(key=gb.order.key_func())
    return QuotientBasis(tuple(standard))


def multiplication_matrices(qb: QuotientBasis, gb: GroebnerBasis) -> MultiplicationPair:
    """Column j of each matrix expands (variable times j-th basis monomial)."""
    coeff_field = gb.field
    n = qb.dimension
    index = {m: i for i, m in enumerate(qb.monomials)}
    zero, one = coeff_field.zero(), coeff_field.one()

    def action(shift: Monomial) -> list:
        columns = []
        for m in qb.monomials:
            t = m * shift
            col = [zero] * n
            if t in index:
                col[index[t]] = one
            else:
                nf = gb.normal_form(Polynomial.monomial(coeff_field, t))
                for mm, c in nf.terms.items():
                    col[index[mm]] = c
            columns.append(col)
        return [[columns[j][i] for j in range(n)] for i in range(n)]

    return MultiplicationPair(action(X), action(Y))


def _divisors(k: int) -> list[int]:
    k = abs(k)
    out = []
    f = 1
    while f * f <= k:
        if k % f == 0:
            out.append(f)
            if f != k // f:
                out.append(k // f)
        f += 1
    return sorted(out)


def _eval_univariate(coeffs, value, zero):
    acc = zero
    for c in reversed(coeffs):
        acc = acc * value + c
    return acc


def _rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    """All rational roots of a polynomial with Fraction coefficients."""
    v = 0
    while v < len(coeffs) and coeffs[v] == 0:
        v += 1
    roots = set()
    if v > 0:
        roots.add(Fraction(0))
    core = coeffs[v:]
    if len(core) > 1:
        denom_lcm = 1
        for c in core:
            denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
        ints = [int(c * denom_lcm) for c in core]
        g = 0
        for c in ints:
            g = gcd(g, c)
        if g > 1:
            ints = [c // g for c in ints]
        constant, leading = ints[0], ints[-1]
        zero = Fraction(0)
        for p in _divisors(constant):
            for q in _divisors(leading):
                for candidate in (Fraction(p, q), Fraction(-p, q)):
                    if candidate not in roots and _eval_univariate(core, candidate, zero) == 0:
                        roots.add(candidate)
    return sorted(roots)


def _prime_field_roots(coeffs, coeff_field) -> list:
    """Roots in Fp by scanning the field; linear in p, fine for small moduli."""
    p = coeff_field.characteristic
    ints = [c.value for c in coeffs]
    roots = []
    for t in range(p):
        acc = 0
        for c in reversed(ints):
            acc = (acc * t + c) % p
        if acc == 0:
            roots.append(coeff_field.from_int(t))
    return roots


def _eigenvalue_candidates(matrix, coeff_field) -> list:
    coeffs = minimal_polynomial(matrix, coeff_field)
    if coeff_field.characteristic == 0:
        return _rational_roots(coeffs)
    return _prime_field_roots(coeffs, coeff_field)


def nilpotency_index(nil_x: list, nil_y: list, coeff_field) -> int:
    """Least r such that every product of r factors from {Nx, Ny} vanishes.

    Mixed products matter: for the pair coming from (x^2, y^2) both pure
    squares vanish while Nx*Ny does not, so the index is 3 there.
    """
    m = len(nil_x)
    words = {(0, 0): identity(m, coeff_field)}
    for r in range(1, m + 1):
        current = {(r, 0): mat_mul(words[(r - 1, 0)], nil_x, coeff_field)}
        for b in range(1, r + 1):
            current[(r - b, b)] = mat_mul(words[(r - b, b - 1)], nil_y, coeff_field)
        if all(is_zero_matrix(w) for w in current.values()):
            return r
        words = current
    raise ValueError("multiplication operators are not jointly nilpotent")


def local_component_at(gb: GroebnerBasis, point: tuple):
    """The local factor at one rational point, or None if the point is not
    in the support."""
    qb = quotient_basis(gb)
    n = qb.dimension
    if n == 0:
        return None
    pair = multiplication_matrices(qb, gb)
    return _component_at(pair, point, n, gb.field)


def _component_at(pair: MultiplicationPair, point: tuple, n: int, coeff_field):
    px, py = point
    nil_x = mat_pow(mat_sub(pair.on_x, scaled_identity(px, n, coeff_field)), n, coeff_field)
    nil_y = mat_pow(mat_sub(pair.on_y, scaled_identity(py, n, coeff_field)), n, coeff_field)
    stacked = [row[:] for row in nil_x] + [row[:] for row in nil_y]
    kernel = kernel_basis(stacked, coeff_field)
    if not kernel:
        return None
    m = len(kernel)
    columns = [[vec[i] for vec in kernel] for i in range(n)]
    targets_x = [mat_vec(pair.on_x, vec, coeff_field) for vec in kernel]
    targets_y = [mat_vec(pair.on_y, vec, coeff_field) for vec in kernel]
    coords_x = solve_in_column_space(columns, targets_x, coeff_field)
    coords_y = solve_in_column_space(columns, targets_y, coeff_field)
    # restricted action, columns indexed by the kernel basis
    local_x = [[coords_x[j][i] for j in range(m)] for i in range(m)]
    local_y = [[coords_y[j][i] for j in range(m)] for i in range(m)]
    translated_x = mat_sub(local_x, scaled_identity(px, m, coeff_field))
    translated_y = mat_sub(local_y, scaled_identity(py, m, coeff_field))
    r = nilpotency_index(translated_x, translated_y, coeff_field)
    return LocalQuotient(
        point=point,
        dimension=m,
        mult_x=translated_x,
        mult_y=translated_y,
        nilpotency_index=r,
        field=coeff_field,
    )


def local_components(gb: GroebnerBasis) -> Decomposition:
    """Split the quotient into local factors at rational support points.

    Points are located as joint eigenvalues of the commuting pair; any
    dimension carried by non-rational points is reported as the residual
    and gets no local invariants.
    """
    qb = quotient_basis(gb)
    n = qb.dimension
    if n == 0:
        return Decomposition(components=[], residual_dimension=0, colength=0)
    pair = multiplication_matrices(qb, gb)
    coeff_field = gb.field
    components = []
    for px in _eigenvalue_candidates(pair.on_x, coeff_field):
        for py in _eigenvalue_candidates(pair.on_y, coeff_field):
            lq = _component_at(pair, (px, py), n, coeff_field)
            if lq is not None:
                components.append(lq)
    components.sort(
        key=lambda c: (coeff_field.sort_key(c.point[0]), coeff_field.sort_key(c.point[1]))
    )
    residual = n - sum(c.dimension for c in components)
    return Decomposition(components=components, residual_dimension=residual, colength=n)


def socle_dimension(lq: LocalQuotient) -> int:
    """Dimension of the joint kernel of the translated pair (stacked 2n x n)."""
    stacked = [row[:] for row in lq.mult_x] + [row[:] for row in lq.mult_y]
    return len(kernel_basis(stacked, lq.field))


def truncation_monomials(max_degree: int) -> list[Monomial]:
    """All monomials of degree <= max_degree, sorted by (degree, x-exponent)."""
    return [Monomial(a, d - a) for d in range(max_degree + 1) for a in range(d + 1)]


def local_ideal_kernel(lq: LocalQuotient):
    """The local ideal's image in k[x,y]/m^(r+1), as kernel vectors.

    A polynomial f of degree <= r lies in the local ideal exactly when
    f(Nx, Ny) is the zero operator on the factor, so the image is the
    kernel of the evaluation map on the truncation grid.
    """
    coeff_field = lq.field
    m = lq.dimension
    r = lq.nilpotency_index
    monos = truncation_monomials(r)
    words = {(0, 0): identity(m, coeff_field)}
    for a in range(1, r + 1):
        words[(a, 0)] = mat_mul(words[(a - 1, 0)], lq.mult_x, coeff_field)
    for a in range(r + 1):
        for b in range(1, r + 1 - a):
            words[(a, b)] = mat_mul(words[(a, b - 1)], lq.mult_y, coeff_field)
    evaluation = [
        [words[(mono.a, mono.b)][u][v] for mono in monos]
        for u in range(m)
        for v in range(m)
    ]
    return monos, kernel_basis(evaluation, coeff_field)


def local_ideal_truncation(lq: LocalQuotient) -> list[Polynomial]:
    """The kernel above, rendered as honest polynomials."""
    monos, kernel = local_ideal_kernel(lq)
    return [
        Polynomial(lq.field, {monos[i]: c for i, c in enumerate(vec) if c})
        for vec in kernel
    ]


def generator_count(lq: LocalQuotient) -> int:
    """Minimal generators of the local ideal, via its truncated image.

    e = dim(I/mI) computed as dim(image) - dim(m * image); the shifts by
    x and y stay inside the truncation because products that leave degree
    r are zero there.
    """
    monos, kernel = local_ideal_kernel(lq)
    if not kernel:
        raise ValueError("local ideal image is empty; quotient is not Artinian local")
    coeff_field = lq.field
    r = monos[-1].degree
    index = {mono: i for i, mono in enumerate(monos)}
    zero = coeff_field.zero()
    shifted_rows = []
    for vec in kernel:
        for dx, dy in ((1, 0), (0, 1)):
            row = [zero] * len(monos)
            nonzero = False
            for i, c in enumerate(vec):
                if not c:
                    continue
                mono = monos[i]
                if mono.degree + 1 > r:
                    continue
                row[index[Monomial(mono.a + dx, mono.b + dy)]] = c
                nonzero = True
            if nonzero:
                shifted_rows.append(row)
    return len(kernel) - rank(shifted_rows, coeff_field)


def minimal_generator_count(generators, nilpotency: int) -> int:
    """Minimal generator count of a local-at-origin ideal given generators.

    Works in the truncation k[x,y]/m^(r+1) with r = nilpotency: the image
    of the ideal is spanned by monomial multiples of the generators
    together with all degree-r monomials (which lie in the ideal since
    m^r does), and e = rank(image) - rank(m * image).
    """
    gens = [g for g in generators if g]
    if not gens:
        raise ValueError("no nonzero generators")
    coeff_field = gens[0].field
    for g in gens:
        if g.constant_term:
            raise PointNotInSupport(
                "a generator has nonzero constant term, so the origin is not a support point"
            )
    r = nilpotency
    monos = truncation_monomials(r)
    index = {mono: i for i, mono in enumerate(monos)}
    zero = coeff_field.zero()

    def truncate_rows(polys_as_rows):
        rows = []
        for source in polys_as_rows:
            row = [zero] * len(monos)
            for mono, c in source:
                if mono.degree <= r:
                    i = index[mono]
                    row[i] = row[i] + c
            if any(row):
                rows.append(row)
        return rows

    products = []
    for g in gens:
        for mono in monos:
            products.append([(mg * mono, cg) for mg, cg in g.terms.items()])
    one = coeff_field.one()
    padding = [[(mono, one)] for mono in monos if mono.degree == r]
    image_rows = truncate_rows(products + padding)

    shifted = []
    for source in products + padding:
        for dx, dy in ((1, 0), (0, 1)):
            shifted.append([(Monomial(m.a + dx, m.b + dy), c) for m, c in source])
    shifted_rows = truncate_rows(shifted)
    return rank(image_rows, coeff_field) - rank(shifted_rows, coeff_field)


def betti_data(lq: LocalQuotient, local_ideal=None) -> BettiData:
    """Socle dimension and minimal generator count, computed independently.

    The two routes satisfy socle = e - 1 for every Artinian quotient of
    k[x,y]; disagreement is an engine bug and raises LemmaViolation.
    When explicit generators of the local-at-origin ideal are passed, the
    generator count uses them; otherwise it is derived from the operators.
    """
    socle = socle_dimension(lq)
    if local_ideal is not None:
        e = minimal_generator_count(local_ideal, lq.nilpotency_index)
    else:
        e = generator_count(lq)
    if socle != e - 1:
        raise LemmaViolation(
            f"socle dimension {socle} != minimal generators {e} - 1 at point {lq.point}"
        )
    return BettiData(minimal_generators=e, b1=e, b2=e - 1, socle_dim=socle)


def multiplicity_from_socle(b2: int) -> int:
    """The triangular number b2*(b2+1)/2 attached to the socle dimension."""
    if b2 < 1:
        raise ValueError("socle dimension of a nonempty local quotient is at least 1")
    return b2 * (b2 + 1) // 2


def multiplicity_report(lq: LocalQuotient, betti: BettiData | None = None) -> MultiplicityData:
    """Multiplicity from the socle dimension, checked against the local length."""
    if betti is None:
        betti = betti_data(lq)
    mu = multiplicity_from_socle(betti.b2)
    if mu > lq.dimension:
        raise LemmaViolation(
            f"multiplicity {mu} exceeds local length {lq.dimension} at point {lq.point}"
        )
    return MultiplicityData(
        b2=betti.b2,
        multiplicity=mu,
        local_length=lq.dimension,
        bounded_by_length=True,
        equals_length=mu == lq.dimension,
    )


def analyze_quotient(gb: GroebnerBasis) -> IdealAnalysis:
    """Full pipeline: split locally, then Betti data and multiplicity per factor."""
    decomposition = local_components(gb)
    components = []
    for lq in decomposition.components:
        betti = betti_data(lq)
        components.append(
            ComponentAnalysis(
                point=lq.point,
                local_length=lq.dimension,
                nilpotency_index=lq.nilpotency_index,
                betti=betti,
                multiplicity=multiplicity_report(lq, betti),
            )
        )
    return IdealAnalysis(
        colength=decomposition.colength,
        components=tuple(components),
        residual_dimension=decomposition.residual_dimension,
    )
