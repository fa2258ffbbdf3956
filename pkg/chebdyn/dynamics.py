"""Induced maps f_n on Z/2^n Z: cycles, the a_n/b_n coefficients and cycle behavior."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import BudgetExceeded, ConsistencyFault, ContractError
from .padic import Residue
from .polynomial import IntPolynomial

logger = logging.getLogger(__name__)

DEFAULT_LEVEL_LIMIT = 24


class Behavior(Enum):
    STRONGLY_GROWS = 'StronglyGrows'
    WEAKLY_GROWS = 'WeaklyGrows'
    STRONGLY_SPLITS = 'StronglySplits'
    WEAKLY_SPLITS = 'WeaklySplits'
    GROWS_TAILS = 'GrowsTails'


@dataclass(frozen=True)
class CycleClass:
    behavior: Behavior
    a_mod4: int
    b_mod2: Optional[int] = None

    @property
    def grows(self) -> bool:
        return self.behavior in (Behavior.STRONGLY_GROWS, Behavior.WEAKLY_GROWS)

    @property
    def splits(self) -> bool:
        return self.behavior in (Behavior.STRONGLY_SPLITS, Behavior.WEAKLY_SPLITS)

    @property
    def grows_tails(self) -> bool:
        return self.behavior is Behavior.GROWS_TAILS

    @property
    def strong(self) -> bool:
        return self.a_mod4 == 1

    def __str__(self):
        return self.behavior.value


@dataclass(frozen=True)
class Cycle:
    """x_1, ..., x_k at level n with f_n(x_i) = x_{i+1} cyclically, rotated to start at its minimum."""
    level: int
    points: Tuple[Residue, ...]

    def __post_init__(self):
        if not self.points:
            raise ContractError("A cycle needs at least one point")
        if any(p.level != self.level for p in self.points):
            raise ContractError(f"Every point of a level-{self.level} cycle must have that level")
        values = [p.value for p in self.points]
        if len(set(values)) != len(values):
            raise ContractError(f"Cycle points are not distinct: {values}")
        start = values.index(min(values))
        if start:
            object.__setattr__(self, 'points', self.points[start:] + self.points[:start])

    @property
    def values(self) -> Tuple[int, ...]:
        return tuple(p.value for p in self.points)

    @property
    def modulus(self) -> int:
        return 1 << self.level

    def __len__(self):
        return len(self.points)

    def __str__(self):
        return f"({', '.join(str(v) for v in self.values)}) mod 2^{self.level}"


def make_cycle(f: IntPolynomial, level: int, values: Sequence[int]) -> Cycle:
    """Build a cycle, checking that f_level walks the values around and back to the start."""
    modulus = 1 << level
    for i, x in enumerate(values):
        expected = values[(i + 1) % len(values)]
        if f.eval_at(x, modulus) != expected:
            raise ContractError(
                f"f({x}) is not {expected} mod 2^{level}; {list(values)} is not a cycle")
    return Cycle(level, tuple(Residue(level, v) for v in values))


def _cycles_of_table(table, order: Iterable[int], state) -> List[List[int]]:
    """Cycles of the functional graph x -> table[x], walked from each start in `order`.

    `state` maps every node to 0 and is updated in place: 1 on the current path, 2 finished.
    """
    found = []
    for start in order:
        if state[start]:
            continue
        path = []
        x = start
        while state[x] == 0:
            state[x] = 1
            path.append(x)
            x = table[x]
        if state[x] == 1:
            found.append(path[path.index(x):])
        for y in path:
            state[y] = 2
    return found


def require_level(n: int, limit: int):
    if n < 1:
        raise ContractError(f"Level must be at least 1, got {n}")
    if n > limit:
        raise BudgetExceeded(n, limit)


def cycles_at_level(f: IntPolynomial, n: int, limit: int = DEFAULT_LEVEL_LIMIT) -> List[Cycle]:
    require_level(n, limit)
    modulus = 1 << n
    logger.debug("Enumerating the functional graph of f_%d on %d residues", n, modulus)

    table = [f.eval_at(x, modulus) for x in range(modulus)]
    result = [Cycle(n, tuple(Residue(n, v) for v in cycle))
              for cycle in _cycles_of_table(table, range(modulus), bytearray(modulus))]
    result.sort(key=lambda c: c.values[0])
    return result


def a_n(f: IntPolynomial, c: Cycle) -> int:
    """prod f'(f^j(x_1)) mod 4 along the orbit, iterated at level max(n, 2) + 2."""
    modulus = 1 << (max(c.level, 2) + 2)
    df = f.derivative()
    x = c.points[0].value
    a = 1
    for _ in range(len(c)):
        a = a * df.eval_at(x, 4) % 4
        x = f.eval_at(x, modulus)
    return a


def b_n(f: IntPolynomial, c: Cycle, a: Optional[int] = None) -> int:
    """(f^k(x_1) - x_1) / 2^n mod 2; only meaningful when a_n is odd."""
    if a is None:
        a = a_n(f, c)
    if a % 2 == 0:
        raise ContractError(f"b_n is not constant on the cycle {c}: a_n is even")
    modulus = 1 << (c.level + 1)
    x = c.points[0].value
    y = x
    for _ in range(len(c)):
        y = f.eval_at(y, modulus)
    displacement = (y - x) % modulus
    if displacement % c.modulus:
        raise ConsistencyFault(f"{c} is not fixed by the k-th iterate")
    return displacement >> c.level


def classify(f: IntPolynomial, c: Cycle) -> CycleClass:
    a = a_n(f, c)

    parity = 1
    df = f.derivative()
    for p in c.points:
        parity = parity * df.eval_at(p.value, 2) % 2
    if parity != a % 2:
        raise ConsistencyFault(f"a_n mod 2 is not constant along {c}")

    if a % 2 == 0:
        return CycleClass(Behavior.GROWS_TAILS, a)

    b = b_n(f, c, a)
    if b:
        behavior = Behavior.STRONGLY_GROWS if a == 1 else Behavior.WEAKLY_GROWS
    else:
        behavior = Behavior.STRONGLY_SPLITS if a == 1 else Behavior.WEAKLY_SPLITS
    return CycleClass(behavior, a, b)


def lifts(f: IntPolynomial, c: Cycle, cls: Optional[CycleClass] = None) -> List[Cycle]:
    """Cycles of f_{n+1} inside X_sigma, checked against the behavior of c."""
    if cls is None:
        cls = classify(f, c)
    level = c.level + 1
    modulus = 1 << level
    candidates = [v for p in c.points for v in (p.value, p.value + c.modulus)]
    table = {x: f.eval_at(x, modulus) for x in candidates}
    if any(y not in table for y in table.values()):
        raise ConsistencyFault(f"f_{level} does not map X_sigma of {c} into itself")

    result = [Cycle(level, tuple(Residue(level, v) for v in cycle))
              for cycle in _cycles_of_table(table, candidates, dict.fromkeys(table, 0))]
    result.sort(key=lambda cycle: cycle.values[0])

    k = len(c)
    if cls.grows:
        expected = [2 * k]
    elif cls.splits:
        expected = [k, k]
    else:
        expected = [k]
    observed = sorted(len(cycle) for cycle in result)
    if observed != expected:
        raise ConsistencyFault(
            f"{c} is classified {cls} but its lifts have lengths {observed}, expected {expected}")
    return result


@dataclass(frozen=True)
class Linearization:
    """g(x + 2^n t) = x + 2^n (b + a t) mod 2^{2n}, with a and b kept mod 2^n."""
    level: int
    a: int
    b: int

    def phi(self, t: int) -> int:
        return (self.b + self.a * t) % (1 << self.level)


def linearization(f: IntPolynomial, c: Cycle) -> Linearization:
    n = c.level
    modulus = 1 << (2 * n)
    df = f.derivative()
    x = c.points[0].value
    a = 1
    y = x
    for _ in range(len(c)):
        a = a * df.eval_at(y, modulus) % modulus
        y = f.eval_at(y, modulus)
    displacement = (y - x) % modulus
    if displacement % c.modulus:
        raise ConsistencyFault(f"{c} is not fixed by the k-th iterate")
    return Linearization(n, a % c.modulus, (displacement >> n) % c.modulus)
