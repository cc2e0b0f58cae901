"""Multivariate division and Buchberger's algorithm.

The reduced Groebner basis is the canonical form of an ideal here: monic
generators, no monomial of any generator divisible by the leading
monomial of another, generators listed ascending by leading monomial.
For a fixed ideal and order that basis is unique, which is what makes the
golden tests and the permutation-invariance property possible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Monomial, MonomialOrder, Polynomial


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    field: object
    generators: tuple[Polynomial, ...]
    reduced: bool = True

    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(g.leading_monomial(self.order) for g in self.generators)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.generators, self.order)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)


def normal_form(f: Polynomial, basis, order: MonomialOrder) -> Polynomial:
    """Remainder of f on division by the basis.

    Deterministic rule: always reduce the order-largest reducible
    monomial of the running remainder, using the first basis element
    (in sequence order) whose leading monomial divides it.
    """
    reducers = [
        (g.leading_monomial(order), g.leading_coefficient(order), g) for g in basis if g
    ]
    if not reducers or not f:
        return f
    key = order.key_func()
    work = dict(f.terms)
    while True:
        target = None
        for m in sorted(work, key=key, reverse=True):
            for lm, lc, g in reducers:
                if lm.divides(m):
                    target = (m, lm, lc, g)
                    break
            if target:
                break
        if target is None:
            break
        m, lm, lc, g = target
        factor = work[m] / lc
        shift = m.divided_by(lm)
        for mg, cg in g.terms.items():
            mm = mg * shift
            prev = work.get(mm)
            value = prev - factor * cg if prev is not None else -(factor * cg)
            if value:
                work[mm] = value
            else:
                work.pop(mm, None)
    return Polynomial(f.field, work)


def spolynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lm_f = f.leading_monomial(order)
    lm_g = g.leading_monomial(order)
    l = lm_f.lcm(lm_g)
    one = f.field.one()
    left = f.times_term(l.divided_by(lm_f), one / f.leading_coefficient(order))
    right = g.times_term(l.divided_by(lm_g), one / g.leading_coefficient(order))
    return left - right


def buchberger(generators, order: MonomialOrder = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal spanned by the generators.

    Idempotent, and independent of the order in which generators are
    listed.  Zero generators are dropped; if everything is zero the
    result is the empty basis of the zero ideal.
    """
    generators = list(generators)
    if not generators:
        raise ValueError("need at least one generator (possibly zero) to fix the field")
    if order is None:
        from .poly import DEFAULT_ORDER

        order = DEFAULT_ORDER
    coeff_field = generators[0].field
    basis = [g.monic(order) for g in generators if g]
    if not basis:
        return GroebnerBasis(order=order, field=coeff_field, generators=())

    key = order.key_func()
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        # normal selection: smallest lcm of leading monomials first
        best = min(
            range(len(pairs)),
            key=lambda t: (
                key(
                    basis[pairs[t][0]]
                    .leading_monomial(order)
                    .lcm(basis[pairs[t][1]].leading_monomial(order))
                ),
                pairs[t],
            ),
        )
        i, j = pairs.pop(best)
        lm_i = basis[i].leading_monomial(order)
        lm_j = basis[j].leading_monomial(order)
        if lm_i.coprime_with(lm_j):
            continue
        remainder = normal_form(spolynomial(basis[i], basis[j], order), basis, order)
        if remainder:
            basis.append(remainder.monic(order))
            new = len(basis) - 1
            pairs.extend((k, new) for k in range(new))
    return _reduce_basis(basis, order, coeff_field)


def _reduce_basis(basis, order, coeff_field) -> GroebnerBasis:
    key = order.key_func()
    by_lm = sorted(basis, key=lambda g: key(g.leading_monomial(order)))
    kept: list[Polynomial] = []
    kept_lms: list[Monomial] = []
    for g in by_lm:
        lm = g.leading_monomial(order)
        if any(other.divides(lm) for other in kept_lms):
            continue
        kept.append(g)
        kept_lms.append(lm)
    # tail reduction: leading monomials are pairwise non-divisible, so one
    # pass against the full set leaves every tail monomial irreducible
    reduced: list[Polynomial] = []
    for idx, g in enumerate(kept):
        others = reduced + kept[idx + 1 :]
        reduced.append(normal_form(g, others, order).monic(order))
    return GroebnerBasis(order=order, field=coeff_field, generators=tuple(reduced))


def groebner_from_monomials(monomials, order: MonomialOrder, coeff_field) -> GroebnerBasis:
    """The reduced basis of a monomial ideal, built without division."""
    minimal: list[Monomial] = []
    for m in sorted(set(monomials)):
        if not any(other.divides(m) for other in minimal):
            minimal = [other for other in minimal if not m.divides(other)]
            minimal.append(m)
    key = order.key_func()
    minimal.sort(key=key)
    gens = tuple(Polynomial.monomial(coeff_field, m) for m in minimal)
    return GroebnerBasis(order=order, field=coeff_field, generators=gens)


def initial_ideal(gb: GroebnerBasis) -> tuple[Monomial, ...]:
    """Minimal monomial generators of the ideal of leading terms."""
    return gb.leading_monomials()


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    """True iff the leading monomials contain a pure power of x and of y.

    The basis of the unit ideal is {1}, a pure power of both variables,
    so the empty subscheme counts as zero-dimensional with colength 0.
    """
    lms = gb.leading_monomials()
    if not lms:
        return False
    return any(m.b == 0 for m in lms) and any(m.a == 0 for m in lms)


def is_reduced(gb: GroebnerBasis) -> bool:
    """Check the reducedness contract directly (used by the test suite)."""
    one = gb.field.one()
    lms = gb.leading_monomials()
    for g, lm in zip(gb.generators, lms):
        if g.leading_coefficient(gb.order) != one:
            return False
        for m in g.terms:
            for other in lms:
                if other != lm and other.divides(m):
                    return False
    return True


def spolynomial_certificate(gb: GroebnerBasis) -> bool:
    """Every pairwise S-polynomial reduces to zero against the basis."""
    gens = gb.generators
    for j in range(len(gens)):
        for i in range(j):
            s = spolynomial(gens[i], gens[j], gb.order)
            if normal_form(s, gens, gb.order):
                return False
    return True
