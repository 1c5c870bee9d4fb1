"""Quantum integers and their relatives, as exact factored symbols.

The quantum integer [n] = (A^2n - A^-2n)/(A^2 - A^-2) evaluates to
sin(2*pi*n*k/p)/sin(2*pi*k/p) at the embedding A = exp(i*pi*k/p).  All
quantities here (loop values <n>, theta symbols <a,b,c>, Gram ratios)
are kept as formal signed products of quantum integers, so sign
evaluation at an embedding is exact and division-free.
"""

from dataclasses import dataclass
from functools import lru_cache

from .context import LevelContext
from .cyclotomic import CyclotomicInteger, EmbeddingIndex, Sign, sin_sign
from .errors import DivisionByZeroQuantumInteger, UsageError


@dataclass(frozen=True)
class QuantumFactored:
    """A formal signed product unit * prod [n]^e_n of quantum integers.

    unit is +1 or -1, or 0 for the zero symbol.  factors is sorted by n
    descending; [1] (the multiplicative unit) and zero exponents are
    never stored, so equal symbols have equal representations.
    """

    unit: int
    factors: tuple[tuple[int, int], ...]

    @classmethod
    def from_factors(cls, unit: int, factors) -> "QuantumFactored":
        if unit == 0:
            return cls(0, ())
        assert unit in (1, -1)
        merged: dict[int, int] = {}
        for n, e in dict(factors).items():
            if n == 1 or e == 0:
                continue
            if n < 1:
                raise UsageError(f"quantum integer index must be positive, got {n}")
            merged[n] = e
        return cls(unit, tuple(sorted(merged.items(), reverse=True)))

    @property
    def is_zero(self) -> bool:
        return self.unit == 0

    @property
    def is_unit(self) -> bool:
        return self.unit != 0 and not self.factors

    def __mul__(self, other: "QuantumFactored") -> "QuantumFactored":
        if self.is_zero or other.is_zero:
            return QuantumFactored(0, ())
        merged = dict(self.factors)
        for n, e in other.factors:
            merged[n] = merged.get(n, 0) + e
        return QuantumFactored.from_factors(self.unit * other.unit, merged)

    def inverse(self) -> "QuantumFactored":
        if self.is_zero:
            raise DivisionByZeroQuantumInteger("cannot invert the zero symbol")
        return QuantumFactored.from_factors(
            self.unit, {n: -e for n, e in self.factors}
        )

    def __truediv__(self, other: "QuantumFactored") -> "QuantumFactored":
        return self * other.inverse()

    def __pow__(self, e: int) -> "QuantumFactored":
        if self.is_zero:
            if e <= 0:
                raise DivisionByZeroQuantumInteger("zero symbol to a nonpositive power")
            return self
        return QuantumFactored.from_factors(
            self.unit if e % 2 else 1, {n: k * e for n, k in self.factors}
        )

    def __neg__(self) -> "QuantumFactored":
        return QuantumFactored(-self.unit, self.factors)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        num = "".join(
            f"[{n}]" if e == 1 else f"[{n}]^{e}" for n, e in self.factors if e > 0
        )
        den = "".join(
            f"[{n}]" if e == -1 else f"[{n}]^{-e}" for n, e in self.factors if e < 0
        )
        sign = "-" if self.unit < 0 else ""
        if not num:
            num = "1"
        return f"{sign}{num}/({den})" if den else f"{sign}{num}"

    def evaluate(self, emb: EmbeddingIndex) -> float:
        """Float value at the embedding (oracle support, not used in verdicts)."""
        import math

        value = float(self.unit)
        s1 = math.sin(2 * math.pi * emb.k / emb.p)
        for n, e in self.factors:
            value *= (math.sin(2 * math.pi * n * emb.k / emb.p) / s1) ** e
        return value


ONE = QuantumFactored(1, ())
ZERO = QuantumFactored(0, ())


def qint(n: int) -> QuantumFactored:
    """The symbol [n]; [0] is the zero symbol and [1] the unit."""
    if n < 0:
        raise UsageError(f"quantum integer index must be nonnegative, got {n}")
    if n == 0:
        return ZERO
    return QuantumFactored.from_factors(1, {n: 1})


@lru_cache(maxsize=None)
def qfactorial(n: int) -> QuantumFactored:
    """The quantum factorial [n]! = [n][n-1]...[1]."""
    if n <= 1:
        return ONE
    return qfactorial(n - 1) * qint(n)


def qint_sign(n: int, emb: EmbeddingIndex) -> Sign:
    """Exact sign of [n] at A = exp(i*pi*k/p)."""
    if n < 1:
        raise UsageError(f"qint_sign needs n >= 1, got {n}")
    # sign of sin(2 pi n k / p) / sin(2 pi k / p); the denominator never
    # vanishes for a valid embedding, so dividing is multiplying.
    return sin_sign(n * emb.k, emb.p) * sin_sign(emb.k, emb.p)


@lru_cache(maxsize=None)
def qint_sign_table(p: int, k: int, n_max: int) -> tuple[Sign, ...]:
    """Signs of [0], [1], ..., [n_max] at embedding k of level p."""
    sk = sin_sign(k, p)
    return tuple(
        Sign.ZERO if n == 0 else sin_sign(n * k, p) * sk for n in range(n_max + 1)
    )


@lru_cache(maxsize=None)
def qint_sign_values(p: int, k: int, n_max: int) -> tuple[int, ...]:
    """Same as qint_sign_table but as raw -1/0/+1 ints, for tight scan loops."""
    return tuple(s.value for s in qint_sign_table(p, k, n_max))


def eval_sign(x: QuantumFactored, emb: EmbeddingIndex) -> Sign:
    """Sign of a factored symbol at an embedding.

    Raises DivisionByZeroQuantumInteger if a denominator factor vanishes.
    """
    if x.is_zero:
        return Sign.ZERO
    result = Sign.POSITIVE if x.unit > 0 else Sign.NEGATIVE
    zero_in_numerator = False
    for n, e in x.factors:
        s = qint_sign(n, emb)
        if s is Sign.ZERO:
            if e < 0:
                raise DivisionByZeroQuantumInteger(
                    f"[{n}] vanishes at k={emb.k}, p={emb.p}"
                )
            zero_in_numerator = True
        elif e % 2:
            result = result * s
    return Sign.ZERO if zero_in_numerator else result


def bracket_color(n: int) -> QuantumFactored:
    """The loop value <n> = (-1)^n [n+1] of a circle colored n."""
    if n < 0:
        raise UsageError(f"color must be nonnegative, got {n}")
    return QuantumFactored.from_factors(-1 if n % 2 else 1, {n + 1: 1})


def theta_symbol(a: int, b: int, c: int) -> QuantumFactored:
    """The theta net evaluation <a,b,c> for an admissible triple.

    With x = (b+c-a)/2, y = (a+c-b)/2, z = (a+b-c)/2:
        (-1)^(x+y+z) [x+y+z+1]! [x]! [y]! [z]! / ([y+z]! [x+z]! [x+y]!)
    In particular <n,n,0> = <n>, the loop value.
    """
    if (a + b + c) % 2 or abs(a - b) > c or c > a + b:
        raise UsageError(f"({a},{b},{c}) is not an admissible vertex triple")
    x = (b + c - a) // 2
    y = (a + c - b) // 2
    z = (a + b - c) // 2
    num = qfactorial(x + y + z + 1) * qfactorial(x) * qfactorial(y) * qfactorial(z)
    den = qfactorial(y + z) * qfactorial(x + z) * qfactorial(x + y)
    result = num / den
    return -result if (x + y + z) % 2 else result


def twist_eigenvalue(c: int, level: LevelContext) -> CyclotomicInteger:
    """Dehn twist eigenvalue mu_c = (-1)^c A^(c(c+2)) as a residue mod phi_2p."""
    if c < 0:
        raise UsageError(f"color must be nonnegative, got {c}")
    return CyclotomicInteger.monomial(
        2 * level.p, c * (c + 2), -1 if c % 2 else 1
    )
