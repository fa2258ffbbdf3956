"""Polynomials with exact integer coefficients and the Chebyshev generators."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from .errors import ConsistencyFault, ContractError
from .padic import ExactInt, Residue

ZERO_DEGREE = -1


def _normalize(coefficients: Iterable[int]) -> Tuple[int, ...]:
    coefficients = list(coefficients)
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return tuple(coefficients)


def binomial(n: int, k: int) -> int:
    """C(n, k) by the multiplicative formula; every partial product is integral."""
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        result = result * (n - k + i) // i
    return result


@dataclass(frozen=True)
class IntPolynomial:
    """c_0 + c_1 x + ... + c_d x^d; coefficient index is the degree of the term."""
    coefficients: Tuple[ExactInt, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', _normalize(self.coefficients))

    @classmethod
    def constant(cls, c: int) -> 'IntPolynomial':
        return cls((c,))

    @classmethod
    def identity(cls) -> 'IntPolynomial':
        return cls((0, 1))

    @classmethod
    def monomial(cls, c: int, degree: int) -> 'IntPolynomial':
        return cls((0,) * degree + (c,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1 if self.coefficients else ZERO_DEGREE

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __call__(self, x: int) -> int:
        result = 0
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def eval_at(self, x: int, modulus: int) -> int:
        """Horner evaluation with every intermediate reduced mod `modulus`."""
        result = 0
        for c in reversed(self.coefficients):
            result = (result * x + c) % modulus
        return result

    def derivative(self) -> 'IntPolynomial':
        return IntPolynomial(i * c for i, c in enumerate(self.coefficients) if i > 0)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(self.coefficient(i) + other.coefficient(i) for i in range(size))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coefficients)

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coefficients)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return IntPolynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ContractError(f"Exponent must be a nonnegative integer, got {exponent!r}")
        result = IntPolynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __str__(self):
        if self.is_zero:
            return '0'
        terms = []
        for degree in range(self.degree, -1, -1):
            c = self.coefficients[degree]
            if c == 0:
                continue
            magnitude = abs(c)
            if degree == 0:
                body = str(magnitude)
            else:
                power = 'x' if degree == 1 else f'x^{degree}'
                body = power if magnitude == 1 else f'{magnitude}*{power}'
            if not terms:
                terms.append(f'-{body}' if c < 0 else body)
            else:
                terms.append(f"{'-' if c < 0 else '+'} {body}")
        return ' '.join(terms)


def eval_mod(f: IntPolynomial, x: Residue) -> Residue:
    return Residue(x.level, f.eval_at(x.value, x.modulus))


def derivative(f: IntPolynomial) -> IntPolynomial:
    return f.derivative()


def compose(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Exact coefficients of f(g(x)), by Horner's scheme over polynomials."""
    result = IntPolynomial()
    for c in reversed(f.coefficients):
        result = result * g + c
    return result


def chebyshev_recurrence(m: int) -> IntPolynomial:
    """T_m from T_{k+1} = 2x T_k - T_{k-1}, T_0 = 1, T_1 = x."""
    if m < 0:
        raise ContractError(f"Chebyshev index must be nonnegative, got {m}")
    previous, current = IntPolynomial.constant(1), IntPolynomial.identity()
    if m == 0:
        return previous
    twice_x = IntPolynomial.monomial(2, 1)
    for _ in range(m - 1):
        previous, current = current, twice_x * current - previous
    return current


def chebyshev_closed_form(m: int) -> IntPolynomial:
    """T_m from the explicit sum over k of (-1)^k m/(m-k) C(m-k, k) 2^(m-2k-1) x^(m-2k)."""
    if m < 1:
        raise ContractError(f"Closed form needs m >= 1, got {m}")
    coefficients = [0] * (m + 1)
    for k in range(m // 2 + 1):
        term = Fraction(m, m - k) * binomial(m - k, k) * Fraction(2) ** (m - 2 * k - 1)
        if term.denominator != 1:
            raise ConsistencyFault(f"Non-integral term k={k} in T_{m}: {term}")
        coefficients[m - 2 * k] = (-1) ** k * term.numerator
    return IntPolynomial(coefficients)
