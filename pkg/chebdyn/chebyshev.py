"""Chebyshev maps on Z_2: the parameter s(m), coefficient valuations and the
explicit decomposition, checked against what the lift-tree engine computes."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple, Union

from .decomposition import (Ball, BasinKind, CertificateStatus, Decomposition, MinimalComponent,
                            basin_oracle, decompose, is_tiling, minimality_oracle, whole_space)
from .dynamics import DEFAULT_LEVEL_LIMIT
from .errors import ConsistencyFault, ContractError
from .padic import Valuation, v2
from .polynomial import IntPolynomial, binomial, chebyshev_recurrence

logger = logging.getLogger(__name__)

FIXED_POINTS = (0, 1, -1)


@dataclass(frozen=True)
class SParameter:
    """m = 2^s q + sign with q odd and s >= 2."""
    m: int
    s: int
    q: int
    sign: int

    def __post_init__(self):
        if self.m != (self.q << self.s) + self.sign or self.q % 2 == 0 or self.s < 2:
            raise ConsistencyFault(f"{self} does not decompose m")


def _require_odd(m: int):
    if m < 3 or m % 2 == 0:
        raise ContractError(f"m must be an odd integer >= 3, got {m}")


def s_of_m(m: int) -> SParameter:
    _require_odd(m)
    above, below = int(v2(m + 1)), int(v2(m - 1))
    if above > below:
        return SParameter(m, above, (m + 1) >> above, -1)
    return SParameter(m, below, (m - 1) >> below, 1)


def odd_coefficients(m: int) -> Tuple[int, ...]:
    """c_1, c_3, ..., c_m of T_m re-indexed around the middle term, with m = 2k + 1."""
    _require_odd(m)
    k = m // 2
    result = []
    for i in range(k + 1):
        term = Fraction(m, k + 1 + i) * binomial(k + 1 + i, 2 * i + 1) * (1 << (2 * i))
        if term.denominator != 1:
            raise ConsistencyFault(f"Non-integral coefficient c_{2 * i + 1} of T_{m}: {term}")
        result.append((-1) ** (k - i) * term.numerator)
    return tuple(result)


def derivative_mod4_check(m: int) -> bool:
    """T_m'(x) = 1 mod 4 on every residue mod 4."""
    df = chebyshev_recurrence(m).derivative()
    return all(df.eval_at(x, 4) == 1 for x in range(4))


def coefficient_sum(m: int) -> int:
    """Sum of the coefficients of T_m, which is T_m(1) = 1 for every m."""
    return sum(chebyshev_recurrence(m).coefficients)


def displacement_valuation(f: IntPolynomial, x: int) -> Valuation:
    return v2(f(x) - x)


@dataclass(frozen=True)
class Lemma31Report:
    m: int
    parameter: SParameter
    coefficients: Tuple[int, ...]
    valuations: Tuple[Valuation, ...]
    coefficient_sum: int
    derivative_mod4: bool
    failures: Tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def lemma31_check(m: int) -> Lemma31Report:
    """v2(c_1) = 0, v2(c_3) = s and v2(c_{2i+1}) >= s + 1 for i > 1."""
    parameter = s_of_m(m)
    s = parameter.s
    polynomial = chebyshev_recurrence(m)
    if any(polynomial.coefficient(j) for j in range(0, m + 1, 2)):
        raise ConsistencyFault(f"T_{m} has a nonzero even-degree coefficient")

    coefficients = tuple(polynomial.coefficient(j) for j in range(1, m + 1, 2))
    if coefficients != odd_coefficients(m):
        raise ConsistencyFault(f"The re-indexed coefficients of T_{m} disagree with the recurrence")
    valuations = tuple(v2(c) for c in coefficients)

    failures = []
    if valuations[0] != 0:
        failures.append(f"v2(c_1) = {valuations[0]}, expected 0")
    if valuations[1] != s:
        failures.append(f"v2(c_3) = {valuations[1]}, expected s = {s}")
    for i in range(2, len(valuations)):
        if valuations[i] < s + 1:
            failures.append(f"v2(c_{2 * i + 1}) = {valuations[i]}, expected >= {s + 1}")
    total = coefficient_sum(m)
    if total != 1:
        failures.append(f"coefficients sum to {total}, expected T_{m}(1) = 1")
    mod4 = derivative_mod4_check(m)
    if not mod4:
        failures.append(f"T_{m}' is not 1 mod 4")

    return Lemma31Report(m, parameter, coefficients, valuations, total, mod4, tuple(failures))


@dataclass(frozen=True)
class FamilyMember:
    family: str
    n: int
    i: int
    ball: Ball

    @property
    def component(self) -> MinimalComponent:
        return MinimalComponent((self.ball,), 1, CertificateStatus.PROVEN_STRONG_GROWTH)


@dataclass(frozen=True)
class TheoremPrediction:
    parameter: SParameter
    budget: int
    members: Tuple[FamilyMember, ...]
    pending: Tuple[Ball, ...]
    fixed_points: Tuple[int, ...] = FIXED_POINTS

    @property
    def components(self) -> Tuple[MinimalComponent, ...]:
        return tuple(member.component for member in self.members)

    def balls(self) -> List[Ball]:
        return [member.ball for member in self.members] + list(self.pending)

    def is_tiling(self) -> bool:
        return is_tiling(self.balls())


@dataclass(frozen=True)
class EvenCasePrediction:
    m: int
    budget: int
    attractor: int = 1
    region: Tuple[Ball, ...] = field(default_factory=whole_space)


def theorem_prediction(m: int, budget: int) -> Union[TheoremPrediction, EvenCasePrediction]:
    if m < 2:
        raise ContractError(f"m must be at least 2, got {m}")
    if m % 2 == 0:
        return EvenCasePrediction(m, budget)

    parameter = s_of_m(m)
    s = parameter.s
    if budget < s + 2:
        raise ContractError(f"Budget {budget} is too small for s = {s}; need at least {s + 2}")

    members = []
    for n in range(1, budget - s + 1):
        for i in range(1 << (s - 1)):
            members.append(FamilyMember('E1', n, i, Ball.of((1 + 2 * i) << n, n + s)))
    for family, base in (('E2', 1), ('E3', -1)):
        for n in range(2, budget - s):
            for i in range(1 << s):
                members.append(FamilyMember(family, n, i, Ball.of(base + ((1 + 2 * i) << n), n + s + 1)))

    pending = (Ball.of(0, budget - s + 1), Ball.of(1, budget - s), Ball.of(-1, budget - s))
    return TheoremPrediction(parameter, budget, tuple(members), pending)


def same_structure(m1: int, m2: int, budget: int) -> bool:
    first, second = theorem_prediction(m1, budget), theorem_prediction(m2, budget)
    return set(first.balls()) == set(second.balls())


@dataclass(frozen=True)
class TheoremVerdict:
    m: int
    budget: int
    case: str
    matched: Tuple[MinimalComponent, ...] = ()
    missing: Tuple[MinimalComponent, ...] = ()
    extra: Tuple[MinimalComponent, ...] = ()
    uncertified: Tuple[MinimalComponent, ...] = ()
    stray: Tuple[Ball, ...] = ()
    fixed_points: Tuple[int, ...] = ()
    problems: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not (self.missing or self.extra or self.uncertified or self.stray or self.problems)


def _signed(ball: Ball) -> int:
    return ball.center.signed


def _verify_odd(m: int, budget: int, computed: Decomposition, limit: int) -> TheoremVerdict:
    prediction = theorem_prediction(m, budget)
    f = chebyshev_recurrence(m)
    problems = []

    if not prediction.is_tiling():
        problems.append("the prediction does not tile Z_2")
    for x in FIXED_POINTS:
        if f(x) != x:
            problems.append(f"{x} is not a fixed point of T_{m}")
    if computed.basins:
        problems.append(f"{len(computed.basins)} basins computed, none expected")

    predicted = {c.balls: c for c in prediction.components}
    found = {c.balls: c for c in computed.components}
    matched = [found[key] for key in predicted if key in found]
    missing = [predicted[key] for key in predicted if key not in found]
    extra = [found[key] for key in found if key not in predicted]
    problems.extend(f"component {c.balls[0]} is only {c.status.value}" for c in matched
                    if c.status is not CertificateStatus.PROVEN_STRONG_GROWTH)

    uncertified = [c for c in matched if not minimality_oracle(f, c.balls, budget, limit)]

    residual = list(computed.periodic_localizations) + list(computed.unresolved)
    stray = [b for b in residual if not any(p.contains(b) for p in prediction.pending)]
    residual_measure = sum((b.measure for b in residual), Fraction(0))
    pending_measure = sum((b.measure for b in prediction.pending), Fraction(0))
    if residual_measure != pending_measure:
        problems.append(f"residual measure {residual_measure} differs from pending {pending_measure}")

    fixed = tuple(sorted(_signed(b) for b in computed.periodic_localizations))
    if sorted(fixed) != sorted(FIXED_POINTS):
        problems.append(f"periodic localizations around {list(fixed)}, expected [-1, 0, 1]")
    elif any(f(x) != x for x in fixed):
        problems.append("a localized periodic point is not fixed exactly")

    return TheoremVerdict(m, budget, 'odd', tuple(matched), tuple(missing), tuple(extra),
                          tuple(uncertified), tuple(stray), fixed, tuple(problems))


def _verify_even(m: int, budget: int, computed: Decomposition, limit: int) -> TheoremVerdict:
    prediction = theorem_prediction(m, budget)
    f = chebyshev_recurrence(m)
    problems = []
    attractor = Ball.of(prediction.attractor, budget)

    if f(prediction.attractor) != prediction.attractor:
        problems.append(f"{prediction.attractor} is not a fixed point of T_{m}")
    if computed.components or computed.unresolved or computed.periodic_localizations:
        problems.append("only a single basin was expected")
    if len(computed.basins) != 1:
        problems.append(f"{len(computed.basins)} basins computed, expected 1")
    else:
        basin = computed.basins[0]
        if basin.kind is not BasinKind.ATTRACTING or basin.period != 1:
            problems.append("the basin is not attracted to a fixed point")
        if basin.attractor_orbit != (attractor,):
            problems.append(f"the attractor is localized at {[str(b) for b in basin.attractor_orbit]}")
        if sum((b.measure for b in basin.region), Fraction(0)) != 1:
            problems.append("the basin region is not all of Z_2")
    if not basin_oracle(f, prediction.region, (attractor,), budget, limit):
        problems.append(f"some residue mod 2^{budget} never settles at {prediction.attractor}")

    return TheoremVerdict(m, budget, 'even', fixed_points=(prediction.attractor,),
                          problems=tuple(problems))


def verify_theorem(m: int, budget: int, limit: int = DEFAULT_LEVEL_LIMIT) -> TheoremVerdict:
    if m < 2:
        raise ContractError(f"m must be at least 2, got {m}")
    computed = decompose(chebyshev_recurrence(m), budget, limit)
    if m % 2 == 0:
        verdict = _verify_even(m, budget, computed, limit)
    else:
        verdict = _verify_odd(m, budget, computed, limit)
    logger.info("T_%d to level %d: %s", m, budget, 'PASS' if verdict.passed else 'FAIL')
    return verdict
