"""Exact integers, 2-adic valuations and fixed-level residues of Z/2^L Z."""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Optional, Tuple

from .errors import ContractError, LevelMismatch

try:
    import gmpy2
except ImportError:  # pragma: no cover - optional accelerator
    gmpy2 = None

# Python ints are unbounded; coefficients of T_101 need well over 64 bits.
ExactInt = int


@total_ordering
@dataclass(frozen=True, eq=False)
class Valuation:
    """Finite(k) or Infinite (the valuation of 0)."""
    k: Optional[int] = None

    @property
    def infinite(self) -> bool:
        return self.k is None

    def __int__(self):
        if self.k is None:
            raise OverflowError("Infinite valuation has no integer value")
        return self.k

    def __eq__(self, other):
        if isinstance(other, Valuation):
            return self.k == other.k
        if isinstance(other, int) and not isinstance(other, bool):
            return self.k == other
        return NotImplemented

    def __hash__(self):
        return hash(self.k)

    def __lt__(self, other):
        if isinstance(other, int):
            other = Valuation(other)
        if not isinstance(other, Valuation):
            return NotImplemented
        if self.k is None:
            return False
        if other.k is None:
            return True
        return self.k < other.k

    def __add__(self, other):
        if isinstance(other, int):
            other = Valuation(other)
        if self.k is None or other.k is None:
            return INFINITE
        return Valuation(self.k + other.k)

    __radd__ = __add__

    def __str__(self):
        return 'inf' if self.k is None else str(self.k)

    def __repr__(self):
        return 'Infinite' if self.k is None else f'Finite({self.k})'


INFINITE = Valuation(None)


def v2(a: ExactInt) -> Valuation:
    if a == 0:
        return INFINITE
    if gmpy2 is not None:
        return Valuation(int(gmpy2.bit_scan1(gmpy2.mpz(a))))
    # lowest set bit; sign does not matter in two's complement
    return Valuation((a & -a).bit_length() - 1)


@dataclass(frozen=True)
class Residue:
    """An element of Z/2^L Z carrying its level L."""
    level: int
    value: int

    def __post_init__(self):
        if self.level < 1:
            raise ContractError(f"Residue level must be positive, got {self.level}")
        if not 0 <= self.value < (1 << self.level):
            raise ContractError(f"Residue value {self.value} is outside [0, 2^{self.level})")

    @property
    def modulus(self) -> int:
        return 1 << self.level

    @property
    def signed(self) -> int:
        """Representative of least absolute value (ties go to the positive one)."""
        if self.value > self.modulus >> 1:
            return self.value - self.modulus
        return self.value

    def _check_other(self, other):
        if isinstance(other, int):
            return reduce(other, self.level)
        if not isinstance(other, Residue):
            return None
        if other.level != self.level:
            raise LevelMismatch(f"Cannot mix residues of level {self.level} and {other.level}")
        return other

    def __add__(self, other):
        other = self._check_other(other)
        if other is None:
            return NotImplemented
        return reduce(self.value + other.value, self.level)

    def __sub__(self, other):
        other = self._check_other(other)
        if other is None:
            return NotImplemented
        return reduce(self.value - other.value, self.level)

    def __mul__(self, other):
        other = self._check_other(other)
        if other is None:
            return NotImplemented
        return reduce(self.value * other.value, self.level)

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return reduce(-self.value, self.level)

    def __str__(self):
        return f"{self.value} mod 2^{self.level}"


def reduce(a: ExactInt, L: int) -> Residue:
    if L < 1:
        raise ContractError(f"Level must be at least 1, got {L}")
    return Residue(L, a % (1 << L))


def children(r: Residue) -> Tuple[Residue, Residue]:
    level = r.level + 1
    return Residue(level, r.value), Residue(level, r.value + r.modulus)
