"""Exact arithmetic in rings of cyclotomic integers Z[A]/phi_N(A).

A value is a canonically reduced integer coefficient vector of length
phi(N); equality of values is equality of vectors.  Coefficients are
Python integers, so no overflow handling is needed.  The module also
provides the Galois embedding bookkeeping (EmbeddingIndex) and the pure
integer sign function sin_sign that underlies every exact sign
evaluation in the package.
"""

import cmath
import enum
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, pi

from sympy import divisors, mobius, totient

from .context import LevelContext
from .errors import UsageError


class Sign(enum.Enum):
    """The sign of a real number, as a multiplicative monoid with absorbing zero."""

    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    def __mul__(self, other: "Sign") -> "Sign":
        return Sign(self.value * other.value)

    def __neg__(self) -> "Sign":
        return Sign(-self.value)


def sin_sign(m: int, p: int) -> Sign:
    """Exact sign of sin(2*pi*m/p), by pure integer arithmetic."""
    if p < 3:
        raise UsageError(f"p must be >= 3, got {p}")
    m = m % p
    if m == 0 or 2 * m == p:
        return Sign.ZERO
    return Sign.POSITIVE if 2 * m < p else Sign.NEGATIVE


def _poly_divmod(num: list[int], den: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """Quotient and remainder of integer polynomials; den must be monic."""
    assert den[-1] == 1
    num = list(num)
    deg_d = len(den) - 1
    quot = [0] * max(1, len(num) - deg_d)
    for i in range(len(num) - 1, deg_d - 1, -1):
        c = num[i]
        if c:
            quot[i - deg_d] = c
            for j, d in enumerate(den):
                num[i - deg_d + j] -= c * d
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first.

    Computed by dividing X^n - 1 by phi_d for every proper divisor d of n.
    The lru_cache fill is idempotent, so concurrent initialization is safe.
    """
    if n < 1:
        raise UsageError("cyclotomic polynomial order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d == n:
            continue
        poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
        assert rem == [0]
    return tuple(poly)


@dataclass(frozen=True)
class CyclotomicInteger:
    """A canonical residue in Z[A]/phi_N(A); coeffs[j] is the coefficient of A^j."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        assert len(self.coeffs) == int(totient(self.order))

    @classmethod
    def zero(cls, order: int) -> "CyclotomicInteger":
        return reduce([], order)

    @classmethod
    def one(cls, order: int) -> "CyclotomicInteger":
        return reduce([1], order)

    @classmethod
    def monomial(cls, order: int, exponent: int, coeff: int = 1) -> "CyclotomicInteger":
        """The residue of coeff * A^exponent."""
        e = exponent % order
        return reduce([0] * e + [coeff], order)

    def _check_same_order(self, other: "CyclotomicInteger"):
        if self.order != other.order:
            raise UsageError(
                f"mismatched cyclotomic orders {self.order} and {other.order}"
            )

    def __add__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        self._check_same_order(other)
        return CyclotomicInteger(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        self._check_same_order(other)
        return CyclotomicInteger(
            self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "CyclotomicInteger":
        return CyclotomicInteger(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        self._check_same_order(other)
        prod = [0] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return reduce(prod, self.order)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def conjugate(self) -> "CyclotomicInteger":
        """Image under the involution A -> A^(-1)."""
        raw = [0] * self.order
        for j, c in enumerate(self.coeffs):
            raw[(-j) % self.order] += c
        return reduce(raw, self.order)

    def trace(self) -> int:
        """Field trace down to the rationals: sum of all Galois conjugates.

        Uses trace(A^m) = mobius(N/g) * phi(N)/phi(N/g) with g = gcd(m, N),
        applied termwise to the canonical representative.
        """
        n = self.order
        total = 0
        for j, c in enumerate(self.coeffs):
            if c:
                g = gcd(j, n)
                d = n // g
                total += c * int(mobius(d)) * (int(totient(n)) // int(totient(d)))
        return total

    def evaluate(self, z: complex) -> complex:
        """Numeric value at a chosen root A = z (float oracle support)."""
        result = 0j
        for c in reversed(self.coeffs):
            result = result * z + c
        return result


def reduce(raw_coeffs, order: int) -> CyclotomicInteger:
    """Canonical residue of sum(raw_coeffs[j] * A^j) modulo phi_order(A)."""
    if order < 3:
        raise UsageError(f"order must be >= 3, got {order}")
    phi_poly = cyclotomic_polynomial(order)
    _, rem = _poly_divmod(list(raw_coeffs) or [0], phi_poly)
    deg = int(totient(order))
    rem = rem + [0] * (deg - len(rem))
    return CyclotomicInteger(order, tuple(rem[:deg]))


@dataclass(frozen=True)
class EmbeddingIndex:
    """A choice of primitive 2p-th root of unity A = exp(i*pi*k/p).

    Canonical representatives have k <= p; the conjugate embedding 2p - k
    yields identical signs for every real quantity, so only canonical ones
    are enumerated.  Non-canonical k are still accepted (used to check
    conjugation invariance directly).
    """

    k: int
    p: int

    def __post_init__(self):
        if not 1 <= self.k <= 2 * self.p - 1 or gcd(self.k, 2 * self.p) != 1:
            raise UsageError(
                f"k = {self.k} is not a valid embedding index for p = {self.p}"
            )

    @property
    def is_canonical(self) -> bool:
        return self.k <= self.p

    def root(self) -> complex:
        return cmath.exp(1j * pi * self.k / self.p)


def embeddings(level) -> list[EmbeddingIndex]:
    """All canonical embedding indices k <= p with gcd(k, 2p) = 1, ascending."""
    p = level.p if isinstance(level, LevelContext) else int(level)
    return [EmbeddingIndex(k, p) for k in range(1, p + 1) if gcd(k, 2 * p) == 1]
