"""Minimal decomposition of Z_2 under a polynomial, by exploring the lift tree.

Starting from the cycles of f_1, every branch is followed until it either grows
tails (its clopen set is an attracting basin), strongly grows at a level n >= 2
(its clopen set is a minimal component), or reaches the level budget. Whatever is
still splitting at the budget is reported as a periodic-point localization or as
an unresolved region. Two brute-force oracles re-check the results on the finite
rings Z/2^n Z.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .dynamics import (DEFAULT_LEVEL_LIMIT, Behavior, Cycle, require_level,
                       classify, cycles_at_level, lifts)
from .errors import ConsistencyFault, ContractError
from .padic import Residue, reduce
from .polynomial import IntPolynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Ball:
    """center + 2^L Z_2."""
    center: Residue

    @classmethod
    def of(cls, center: int, level: int) -> 'Ball':
        return cls(reduce(center, level))

    @property
    def level(self) -> int:
        return self.center.level

    @property
    def measure(self) -> Fraction:
        return Fraction(1, 1 << self.level)

    @property
    def sort_key(self):
        return (self.level, self.center.value)

    def contains(self, other: 'Ball') -> bool:
        return (other.level >= self.level
                and other.center.value % self.center.modulus == self.center.value)

    def disjoint(self, other: 'Ball') -> bool:
        return not (self.contains(other) or other.contains(self))

    def children(self) -> Tuple['Ball', 'Ball']:
        low = self.center.value
        level = self.level + 1
        return Ball(Residue(level, low)), Ball(Residue(level, low + self.center.modulus))

    def residues(self, level: int) -> range:
        """Values of the level-`level` residues inside the ball."""
        if level < self.level:
            raise ContractError(f"Cannot list level-{level} residues of a level-{self.level} ball")
        return range(self.center.value, 1 << level, self.center.modulus)

    def __str__(self):
        return f"{self.center.value} + 2^{self.level}*Z2"


def whole_space() -> Tuple[Ball, Ball]:
    return Ball.of(0, 1), Ball.of(1, 1)


def sort_balls(balls: Iterable[Ball]) -> Tuple[Ball, ...]:
    return tuple(sorted(set(balls), key=lambda b: b.sort_key))


class CertificateStatus(Enum):
    PROVEN_STRONG_GROWTH = 'ProvenStrongGrowth'
    VERIFIED_TO_BUDGET = 'VerifiedToBudget'


class BasinKind(Enum):
    ATTRACTING = 'attracting'
    PREIMAGE = 'preimage'


@dataclass(frozen=True)
class MinimalComponent:
    balls: Tuple[Ball, ...]
    cycle_length: int
    status: CertificateStatus = CertificateStatus.PROVEN_STRONG_GROWTH

    def __post_init__(self):
        object.__setattr__(self, 'balls', sort_balls(self.balls))
        if len({b.level for b in self.balls}) != 1:
            raise ContractError("The balls of a minimal component must share one level")
        if len(self.balls) != self.cycle_length:
            raise ContractError(
                f"A component certified by a {self.cycle_length}-cycle needs {self.cycle_length} balls")

    @property
    def level(self) -> int:
        return self.balls[0].level

    @property
    def sort_key(self):
        return self.balls[0].sort_key

    @classmethod
    def from_cycle(cls, c: Cycle, status: CertificateStatus) -> 'MinimalComponent':
        return cls(tuple(Ball(p) for p in c.points), len(c), status)


@dataclass(frozen=True)
class Basin:
    region: Tuple[Ball, ...]
    attractor_orbit: Tuple[Ball, ...]
    period: int
    kind: BasinKind = BasinKind.ATTRACTING

    def __post_init__(self):
        object.__setattr__(self, 'region', sort_balls(self.region))
        object.__setattr__(self, 'attractor_orbit', sort_balls(self.attractor_orbit))
        if self.kind is BasinKind.ATTRACTING:
            for ball in self.attractor_orbit:
                if not any(r.contains(ball) for r in self.region):
                    raise ContractError(f"Attractor ball {ball} lies outside the basin region")

    @property
    def sort_key(self):
        return self.region[0].sort_key


@dataclass(frozen=True)
class Decomposition:
    max_level: int
    periodic_localizations: Tuple[Ball, ...] = ()
    components: Tuple[MinimalComponent, ...] = ()
    basins: Tuple[Basin, ...] = ()
    unresolved: Tuple[Ball, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'periodic_localizations', sort_balls(self.periodic_localizations))
        object.__setattr__(self, 'unresolved', sort_balls(self.unresolved))
        object.__setattr__(self, 'components',
                           tuple(sorted(self.components, key=lambda c: c.sort_key)))
        object.__setattr__(self, 'basins', tuple(sorted(self.basins, key=lambda b: b.sort_key)))

    def balls(self) -> Iterator[Ball]:
        yield from self.periodic_localizations
        for component in self.components:
            yield from component.balls
        for basin in self.basins:
            yield from basin.region
        yield from self.unresolved

    def measure(self) -> Fraction:
        return sum((b.measure for b in self.balls()), Fraction(0))

    def is_tiling(self) -> bool:
        return is_tiling(list(self.balls()))


def overlapping_pair(balls: Sequence[Ball]) -> Optional[Tuple[Ball, Ball]]:
    """Some pair of intersecting balls, or None when the balls are pairwise disjoint."""
    seen = {}
    for ball in sorted(balls, key=lambda b: b.sort_key):
        for level in range(1, ball.level + 1):
            key = (level, ball.center.value % (1 << level))
            if key in seen:
                return seen[key], ball
        seen[(ball.level, ball.center.value)] = ball
    return None


def is_tiling(balls: Sequence[Ball]) -> bool:
    """Pairwise disjoint with total measure exactly 1."""
    total = sum((b.measure for b in balls), Fraction(0))
    return total == 1 and overlapping_pair(balls) is None


def exact_periodic_orbit(f: IntPolynomial, c: Cycle) -> Optional[Tuple[int, ...]]:
    """An integer periodic orbit of f reducing to c, tried from the wrapped and signed representatives."""
    bound = 1 << (2 * c.level + 8)
    x1 = c.points[0]
    for start in sorted({x1.value, x1.value - x1.modulus}, key=abs):
        orbit = [start]
        y = start
        for _ in range(len(c)):
            y = f(y)
            if abs(y) > bound:
                break
            orbit.append(y)
        else:
            if y == start and [v % c.modulus for v in orbit[:-1]] == list(c.values):
                return tuple(orbit[:-1])
    return None


def _attractor_chain(f: IntPolynomial, c: Cycle, max_level: int) -> Cycle:
    current = c
    while current.level < max_level:
        following = lifts(f, current)
        if len(following) != 1 or not classify(f, following[0]).grows_tails:
            raise ConsistencyFault(f"The lift of the tails cycle {current} does not grow tails")
        current = following[0]
    return current


def decompose(f: IntPolynomial, max_level: int, limit: int = DEFAULT_LEVEL_LIMIT) -> Decomposition:
    if f.degree < 2:
        raise ContractError(f"Minimal decomposition needs degree at least 2, got {f.degree}")
    if max_level < 2:
        raise ContractError(f"max_level must be at least 2, got {max_level}")
    require_level(max_level, limit)

    first = cycles_at_level(f, 1, limit)
    periodic = {v for c in first for v in c.values}
    # residues of f_1 that are not periodic fall into some level-1 cycle
    transients = {}
    for x in (0, 1):
        if x in periodic:
            continue
        y = f.eval_at(x, 2)
        while y not in periodic:
            y = f.eval_at(y, 2)
        transients[x] = next(c for c in first if y in c.values)

    localizations: List[Ball] = []
    components: List[MinimalComponent] = []
    basins: List[Basin] = []
    unresolved: List[Ball] = []

    queue = deque(first)
    while queue:
        c = queue.popleft()
        cls = classify(f, c)
        balls = [Ball(p) for p in c.points]

        if cls.grows_tails:
            attractor = _attractor_chain(f, c, max_level)
            region = balls + [Ball.of(x, 1) for x, target in transients.items() if target == c]
            basins.append(Basin(tuple(region), tuple(Ball(p) for p in attractor.points), len(c)))
            logger.debug("%s grows tails; attractor localized at %s", c, attractor)
            continue

        if cls.behavior is Behavior.STRONGLY_GROWS and c.level >= 2:
            components.append(MinimalComponent.from_cycle(c, CertificateStatus.PROVEN_STRONG_GROWTH))
            logger.debug("%s strongly grows; minimal component", c)
            continue

        if c.level == max_level:
            if cls.grows:
                components.append(MinimalComponent.from_cycle(c, CertificateStatus.VERIFIED_TO_BUDGET))
            elif exact_periodic_orbit(f, c) is not None:
                localizations.extend(balls)
            else:
                unresolved.extend(balls)
            continue

        queue.extend(lifts(f, c, cls))

    for x, target in transients.items():
        if not classify(f, target).grows_tails:
            basins.append(Basin((Ball.of(x, 1),), tuple(Ball(p) for p in target.points),
                                len(target), BasinKind.PREIMAGE))

    result = Decomposition(max_level, tuple(localizations), tuple(components), tuple(basins),
                           tuple(unresolved))
    if not result.is_tiling():
        raise ConsistencyFault(f"Decomposition of {f} does not tile Z_2 (measure {result.measure()})")
    logger.debug("Decomposed %s to level %d: %d components, %d basins, %d unresolved balls",
                 f, max_level, len(result.components), len(result.basins), len(result.unresolved))
    return result


def _same_level(E: Sequence[Ball]) -> int:
    levels = {b.level for b in E}
    if len(levels) != 1:
        raise ContractError(f"All balls must share one level, got levels {sorted(levels)}")
    return levels.pop()


def minimality_oracle(f: IntPolynomial, E: Sequence[Ball], check_level: int,
                      limit: int = DEFAULT_LEVEL_LIMIT) -> bool:
    """f_n is a single cycle on E/2^n Z for every n from the level of E up to check_level."""
    L = _same_level(E)
    if L > check_level:
        raise ContractError(f"check_level {check_level} is below the level {L} of the balls")
    require_level(check_level, limit)

    for n in range(L, check_level + 1):
        modulus = 1 << n
        members: Set[int] = set()
        for ball in E:
            members.update(ball.residues(n))
        start = min(members)
        x = start
        for step in range(1, len(members) + 1):
            x = f.eval_at(x, modulus)
            if x not in members:
                logger.debug("f_%d leaves the set at %d", n, x)
                return False
            if x == start and step < len(members):
                logger.debug("f_%d closes a %d-cycle on a set of %d residues", n, step, len(members))
                return False
        if x != start:
            return False
    return True


def basin_oracle(f: IntPolynomial, region: Sequence[Ball], attractor: Sequence[Ball], level: int,
                 limit: int = DEFAULT_LEVEL_LIMIT) -> bool:
    """Every region residue at `level` reaches the attractor's residues, which f_level keeps invariant."""
    require_level(level, limit)
    for ball in attractor:
        if not any(r.contains(ball) for r in region):
            raise ContractError(f"Attractor ball {ball} is not inside the region")
    modulus = 1 << level

    targets: Set[int] = set()
    for ball in attractor:
        targets.update(ball.residues(level))
    if any(f.eval_at(y, modulus) not in targets for y in targets):
        return False

    known = set(targets)
    for ball in region:
        for x in ball.residues(level):
            path = []
            y = x
            while y not in known:
                if len(path) > modulus:
                    return False
                path.append(y)
                y = f.eval_at(y, modulus)
            known.update(path)
    return True
