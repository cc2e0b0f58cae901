"""Verification harness for the identities tying the invariants together.

Each check returns a :class:`VerificationReport` with per-case evidence
rows and an aggregate verdict.  Reports are deterministic functions of
their inputs (and seed, for the sampler), so serialized output is
byte-identical across runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .artinian import (
    analyze_quotient,
    betti_data,
    generator_count,
    local_component_at,
    local_components,
    multiplicity_from_socle,
    socle_dimension,
    truncation_monomials,
)
from .errors import ConfigError, NotZeroDimensional, ParseError, SupportNotLocal
from .fields import PrimeField, QQ, is_prime
from .groebner import buchberger, groebner_from_monomials, initial_ideal
from .poly import ALL_ORDERS, DEFAULT_ORDER, MonomialOrder, Polynomial, parse_generators
from .staircase import (
    attaining_partition,
    corners,
    monomial_ideal_of,
    partitions_of,
    socle_bound,
)

# Non-monomial ideals over QQ exercised by the test suite: curvilinear
# chains, complete intersections, non-complete-intersections with socle
# dimension 2, a translated fat point, multi-point supports, and one
# ideal carrying a non-rational residual besides the origin.
CURATED_CORPUS: tuple[str, ...] = (
    "y - x^2, x^3",
    "x^2 + y^2, x*y",
    "x^2 - y^2, x*y",
    "y^2 - x^3, x^2*y",
    "x^2 + x*y, y^2",
    "x^2 - x, y",
    "x^2 - 1, y^2 - 1",
    "x - 1, y - 2",
    "x^2 - 2*x + 1, x*y + x - y - 1, y^2 + 2*y + 1",
    "y - x^2, x^4",
    "x^2 - y, y^2",
    "x^3 - y, y^3",
    "x^3 - 2*x, y",
    "x^2 - y^3, x*y^2, y^4",
    "x^3, x*y - y^3, y^4",
    "x^2 + y^3, x*y^3, y^5",
    "x^3, x^2*y, x*y^2 - x^2, y^4",
)

# The subset supported only at the origin, where degeneration comparisons
# are meaningful.
ORIGIN_CORPUS: tuple[str, ...] = (
    "y - x^2, x^3",
    "x^2 + y^2, x*y",
    "x^2 - y^2, x*y",
    "y^2 - x^3, x^2*y",
    "x^2 + x*y, y^2",
    "y - x^2, x^4",
    "x^2 - y, y^2",
    "x^3 - y, y^3",
    "x^2 - y^3, x*y^2, y^4",
    "x^3, x*y - y^3, y^4",
    "x^2 + y^3, x*y^3, y^5",
    "x^3, x^2*y, x*y^2 - x^2, y^4",
)


@dataclass
class VerificationReport:
    check: str
    inputs: dict
    rows: list
    summary: dict
    passed: bool

    def to_jsonable(self) -> dict:
        return {
            "check": self.check,
            "inputs": dict(self.inputs),
            "rows": [dict(row) for row in self.rows],
            "summary": dict(self.summary),
            "passed": self.passed,
        }

    def to_text(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        lines = [f"check: {self.check}   {verdict}"]
        if self.inputs:
            lines.append("  " + "   ".join(f"{k}={v}" for k, v in self.inputs.items()))
        if self.rows:
            lines.extend("  " + line for line in format_table(self.rows))
        if self.summary:
            lines.append("  " + "   ".join(f"{k}={v}" for k, v in self.summary.items()))
        return "\n".join(lines)


@dataclass(frozen=True)
class SocleCensus:
    n: int
    counts: dict
    partition_count: int
    max_attained: int


@dataclass(frozen=True)
class SamplerConfig:
    prime: int
    degree: int
    count: int
    seed: int

    def __post_init__(self) -> None:
        if not is_prime(self.prime):
            raise ConfigError(f"sampler modulus {self.prime} is not prime")
        if self.degree < 1:
            raise ConfigError("sampler degree must be at least 1")
        if self.count < 0:
            raise ConfigError("sampler count must be non-negative")


def format_table(rows: list[dict]) -> list[str]:
    """Aligned column rendering; column order follows the first row."""
    columns = list(rows[0].keys())
    widths = {
        c: max(len(str(c)), max(len(str(row.get(c, ""))) for row in rows)) for c in columns
    }
    lines = ["  ".join(str(c).ljust(widths[c]) for c in columns)]
    for row in rows:
        lines.append("  ".join(str(row.get(c, "")).ljust(widths[c]) for c in columns))
    return lines


def _point_text(point) -> str:
    return f"({point[0]}, {point[1]})"


def _error_report(check: str, inputs: dict, kind: str, exc: Exception) -> VerificationReport:
    return VerificationReport(
        check=check,
        inputs=inputs,
        rows=[],
        summary={"error_kind": kind, "error": str(exc)},
        passed=False,
    )


def _decompose(ideal_text: str, coeff_field, order: MonomialOrder):
    gens = parse_generators(ideal_text, coeff_field)
    gb = buchberger(gens, order)
    return gb, local_components(gb)


def check_socle_identity(
    ideal_text: str, coeff_field=QQ, order: MonomialOrder = DEFAULT_ORDER
) -> VerificationReport:
    """socle dimension = minimal generators - 1 on every rational local factor."""
    inputs = {"ideal": ideal_text, "field": coeff_field.label, "order": order.label}
    try:
        _, decomposition = _decompose(ideal_text, coeff_field, order)
    except ParseError as exc:
        return _error_report("socle_vs_generators", inputs, "parse", exc)
    except NotZeroDimensional as exc:
        return _error_report("socle_vs_generators", inputs, "not_zero_dimensional", exc)
    rows = []
    for lq in decomposition.components:
        socle = socle_dimension(lq)
        e = generator_count(lq)
        rows.append(
            {
                "point": _point_text(lq.point),
                "local_length": lq.dimension,
                "socle_dim": socle,
                "generator_count": e,
                "ok": socle == e - 1,
            }
        )
    summary = {
        "colength": decomposition.colength,
        "components": len(rows),
        "residual_dimension": decomposition.residual_dimension,
    }
    return VerificationReport(
        "socle_vs_generators", inputs, rows, summary, all(r["ok"] for r in rows)
    )


def check_multiplicity_formula(
    ideal_text: str, coeff_field=QQ, order: MonomialOrder = DEFAULT_ORDER
) -> VerificationReport:
    """multiplicity = b2*(b2+1)/2 with multiplicity <= local length, per factor.

    Rows record whether the bound is strict; a strict row is the witness
    that multiplicity and length are different invariants.
    """
    inputs = {"ideal": ideal_text, "field": coeff_field.label, "order": order.label}
    try:
        _, decomposition = _decompose(ideal_text, coeff_field, order)
    except ParseError as exc:
        return _error_report("multiplicity_formula", inputs, "parse", exc)
    except NotZeroDimensional as exc:
        return _error_report("multiplicity_formula", inputs, "not_zero_dimensional", exc)
    rows = []
    for lq in decomposition.components:
        socle = socle_dimension(lq)
        e = generator_count(lq)
        mu = multiplicity_from_socle(socle)
        rows.append(
            {
                "point": _point_text(lq.point),
                "local_length": lq.dimension,
                "b2": socle,
                "generator_count": e,
                "multiplicity": mu,
                "bounded": mu <= lq.dimension,
                "strict": mu < lq.dimension,
                "equals_length": mu == lq.dimension,
                "ok": socle == e - 1 and mu <= lq.dimension,
            }
        )
    summary = {
        "colength": decomposition.colength,
        "residual_dimension": decomposition.residual_dimension,
        "strict_instances": sum(1 for r in rows if r["strict"]),
    }
    return VerificationReport(
        "multiplicity_formula", inputs, rows, summary, all(r["ok"] for r in rows)
    )


def check_staircase_bound(
    n: int,
    crosscheck_cutoff: int = 10,
    coeff_field=QQ,
    order: MonomialOrder = DEFAULT_ORDER,
) -> VerificationReport:
    """Exhaustive bound check over all partitions of n.

    The maximal inner corner count must equal the integer bound, the
    constructed attaining partition must reach it, and (for n up to the
    cutoff) the algebra engine must reproduce each partition's corner
    counts and colength.
    """
    inputs = {"n": n, "crosscheck_cutoff": crosscheck_cutoff}
    bound = socle_bound(n)
    rows = []
    max_b2 = 0
    argmax = None
    partition_count = 0
    mu_bounded = True
    crosschecked = n <= crosscheck_cutoff
    for partition in partitions_of(n):
        partition_count += 1
        b2 = corners(partition).inner_count
        if b2 > max_b2:
            max_b2, argmax = b2, partition
        if b2 * (b2 + 1) // 2 > n:
            mu_bounded = False
        if crosschecked:
            gb = groebner_from_monomials(monomial_ideal_of(partition), order, coeff_field)
            analysis = analyze_quotient(gb)
            component = analysis.components[0]
            ok = (
                analysis.colength == n
                and len(analysis.components) == 1
                and component.betti.b2 == b2
                and component.betti.minimal_generators == corners(partition).outer_count
            )
            rows.append(
                {
                    "partition": str(partition),
                    "b2": b2,
                    "engine_b2": component.betti.b2,
                    "engine_generators": component.betti.minimal_generators,
                    "colength": analysis.colength,
                    "ok": ok,
                }
            )
    attaining = attaining_partition(n)
    attaining_b2 = corners(attaining).inner_count
    passed = (
        max_b2 == bound
        and attaining_b2 == bound
        and attaining.size == n
        and mu_bounded
        and all(r["ok"] for r in rows)
    )
    summary = {
        "partition_count": partition_count,
        "bound": bound,
        "max_b2": max_b2,
        "argmax": str(argmax),
        "attaining": str(attaining),
        "attaining_b2": attaining_b2,
        "multiplicity_le_n": mu_bounded,
        "crosschecked": crosschecked,
    }
    return VerificationReport("staircase_bound", inputs, rows, summary, passed)


def check_degeneration(
    ideal_text: str, coeff_field=QQ, orders: tuple[MonomialOrder, ...] = ALL_ORDERS
) -> VerificationReport:
    """Degeneration to the initial ideal preserves colength and cannot
    decrease the socle dimension, for every requested order.

    Requires all support at the origin, because the comparison is between
    local invariants there.
    """
    inputs = {"ideal": ideal_text, "field": coeff_field.label, "orders": len(orders)}
    try:
        base_gb, decomposition = _decompose(ideal_text, coeff_field, DEFAULT_ORDER)
    except ParseError as exc:
        return _error_report("initial_degeneration", inputs, "parse", exc)
    except NotZeroDimensional as exc:
        return _error_report("initial_degeneration", inputs, "not_zero_dimensional", exc)
    zero = coeff_field.zero()
    origin_only = (
        decomposition.residual_dimension == 0
        and len(decomposition.components) == 1
        and decomposition.components[0].point == (zero, zero)
    )
    if not origin_only:
        raise SupportNotLocal(
            f"support of ({ideal_text}) is not concentrated at the origin"
        )
    base = decomposition.components[0]
    base_b2 = betti_data(base).b2
    gens = parse_generators(ideal_text, coeff_field)
    rows = []
    for order in orders:
        gb = buchberger(gens, order)
        init = initial_ideal(gb)
        monomial_gb = groebner_from_monomials(init, order, coeff_field)
        analysis = analyze_quotient(monomial_gb)
        init_b2 = analysis.components[0].betti.b2
        preserved = analysis.colength == decomposition.colength
        semicontinuous = init_b2 >= base_b2
        rows.append(
            {
                "order": order.label,
                "initial_ideal": "; ".join(str(m) for m in init),
                "colength": decomposition.colength,
                "initial_colength": analysis.colength,
                "length_preserved": preserved,
                "b2": base_b2,
                "initial_b2": init_b2,
                "semicontinuous": semicontinuous,
                "strict": init_b2 > base_b2,
                "ok": preserved and semicontinuous,
            }
        )
    summary = {
        "colength": decomposition.colength,
        "b2": base_b2,
        "strict_orders": sum(1 for r in rows if r["strict"]),
    }
    return VerificationReport(
        "initial_degeneration", inputs, rows, summary, all(r["ok"] for r in rows)
    )


def socle_census(n: int) -> SocleCensus:
    """Partition counts of n grouped by inner corner count."""
    counts: dict[int, int] = {}
    total = 0
    for partition in partitions_of(n):
        total += 1
        b2 = corners(partition).inner_count
        counts[b2] = counts.get(b2, 0) + 1
    return SocleCensus(
        n=n,
        counts=dict(sorted(counts.items())),
        partition_count=total,
        max_attained=max(counts),
    )


def census_report(n: int) -> VerificationReport:
    census = socle_census(n)
    rows = [{"b2": k, "count": v} for k, v in census.counts.items()]
    bound = socle_bound(n)
    summary = {
        "n": n,
        "partition_count": census.partition_count,
        "max_b2": census.max_attained,
        "bound": bound,
    }
    passed = (
        census.max_attained == bound
        and sum(census.counts.values()) == census.partition_count
    )
    return VerificationReport("socle_census", {"n": n}, rows, summary, passed)


def random_ideal_trials(cfg: SamplerConfig) -> VerificationReport:
    """Randomized stress of the socle identity and the multiplicity bound.

    Draws pairs of random polynomials of bounded degree with no constant
    term (so the origin is always in the support), rejects pairs that are
    not zero-dimensional, and checks the origin factor of each accepted
    ideal.  Deterministic for a fixed seed.
    """
    coeff_field = PrimeField(cfg.prime)
    rng = random.Random(cfg.seed)
    support = [m for m in truncation_monomials(cfg.degree) if m.degree >= 1]
    origin = (coeff_field.zero(), coeff_field.zero())

    def draw() -> Polynomial:
        terms = {}
        for mono in support:
            c = rng.randrange(cfg.prime)
            if c:
                terms[mono] = coeff_field.from_int(c)
        return Polynomial(coeff_field, terms)

    accepted = draws = 0
    socle_passes = mu_passes = 0
    histogram: dict[int, int] = {}
    limit = 1000 * max(cfg.count, 1)
    while accepted < cfg.count:
        if draws >= limit:
            raise ConfigError("sampler rejected too many draws; lower the degree or change seed")
        draws += 1
        f, g = draw(), draw()
        if f.is_zero() or g.is_zero():
            continue
        gb = buchberger([f, g], DEFAULT_ORDER)
        lq = None
        try:
            lq = local_component_at(gb, origin)
        except NotZeroDimensional:
            continue
        # both generators vanish at the origin, so the factor exists
        socle = socle_dimension(lq)
        e = generator_count(lq)
        mu = multiplicity_from_socle(socle)
        accepted += 1
        if socle == e - 1:
            socle_passes += 1
        if mu <= lq.dimension:
            mu_passes += 1
        histogram[socle] = histogram.get(socle, 0) + 1
    inputs = {
        "field": coeff_field.label,
        "degree": cfg.degree,
        "count": cfg.count,
        "seed": cfg.seed,
    }
    summary = {
        "requested": cfg.count,
        "accepted": accepted,
        "draws": draws,
        "socle_identity_passes": socle_passes,
        "multiplicity_bound_passes": mu_passes,
        "histogram": {str(k): histogram[k] for k in sorted(histogram)},
    }
    passed = socle_passes == accepted == cfg.count and mu_passes == accepted
    return VerificationReport("random_trials", inputs, [], summary, passed)
