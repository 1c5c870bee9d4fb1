"""Colored-graph bases and their exact Gram-norm ratios.

Two families are implemented: lollipop bases of the one-holed torus
(stick colored 2c, loop colored i+c) and theta-graph colorings in genus
two.  Only ratios of diagonal norms are ever produced; the bases are
orthogonal and absolute norms are never needed.
"""

from dataclasses import dataclass
from itertools import product

from .context import LevelContext
from .errors import UsageError
from .quantum import QuantumFactored, bracket_color, qint, theta_symbol


@dataclass(frozen=True)
class LollipopVector:
    """Basis vector u_i^c of the one-holed torus space: loop i+c, stick 2c."""

    c: int
    i: int

    @property
    def loop_color(self) -> int:
        return self.i + self.c

    @property
    def stick_color(self) -> int:
        return 2 * self.c


@dataclass(frozen=True)
class AdmissibleTriple:
    a: int
    b: int
    c: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class GramRatio:
    """The ratio <numerator> / <denominator> of two diagonal Gram norms."""

    numerator_index: object
    denominator_index: object
    value: QuantumFactored


def color_set(level: LevelContext) -> list[int]:
    """Valid edge colors: 0..r-2 when p = 2r, even integers 0..p-3 when p odd."""
    return list(level.colors)


def is_admissible(level: LevelContext, a: int, b: int, c: int) -> bool:
    """Parity, triangle inequality and the level bound on a+b+c."""
    if any(x not in level.colors for x in (a, b, c)):
        return False
    if (a + b + c) % 2 or abs(a - b) > c or c > a + b:
        return False
    bound = 2 * level.r - 4 if level.is_even_level else 2 * level.p - 4
    return a + b + c <= bound


def admissible_triples(level: LevelContext) -> list[AdmissibleTriple]:
    """All admissible (a, b, c) over the color set, lexicographic."""
    return [
        AdmissibleTriple(a, b, c)
        for a, b, c in product(level.colors, repeat=3)
        if is_admissible(level, a, b, c)
    ]


def _check_lollipop_color(level: LevelContext, c: int):
    if c < 0 or 2 * c > level.r - 2:
        raise UsageError(f"boundary half-color c = {c} out of range for r = {level.r}")


def lollipop_basis(level: LevelContext, c: int) -> list[LollipopVector]:
    """Vectors u_i^c for 0 <= i <= r-2-2c; empty when the range is empty."""
    _check_lollipop_color(level, c)
    return [LollipopVector(c, i) for i in range(level.r - 1 - 2 * c)]


def lollipop_ratio_step(level: LevelContext, c: int, i: int) -> GramRatio:
    """<u_{i+1}, u_{i+1}> / <u_i, u_i> = [2c+i+2][i+1] / ([c+i+2][c+i+1])."""
    _check_lollipop_color(level, c)
    if not 0 <= i <= level.r - 3 - 2 * c:
        raise UsageError(f"step index i = {i} out of range for r = {level.r}, c = {c}")
    value = (qint(2 * c + i + 2) * qint(i + 1)) / (qint(c + i + 2) * qint(c + i + 1))
    return GramRatio(LollipopVector(c, i + 1), LollipopVector(c, i), value)


def lollipop_ratio_two_step(level: LevelContext, c: int, i: int) -> GramRatio:
    """<u_{i+2}, u_{i+2}> / <u_i, u_i>, as displayed:

    [2c+i+3][2c+i+2][i+2][i+1] / ([c+i+1][c+i+3][c+i+2]^2)

    Canonically equal to the product of the two intermediate one-steps.
    """
    _check_lollipop_color(level, c)
    if not 0 <= i <= level.r - 4 - 2 * c:
        raise UsageError(
            f"two-step index i = {i} out of range for r = {level.r}, c = {c}"
        )
    num = qint(2 * c + i + 3) * qint(2 * c + i + 2) * qint(i + 2) * qint(i + 1)
    den = qint(c + i + 1) * qint(c + i + 3) * qint(c + i + 2) ** 2
    return GramRatio(LollipopVector(c, i + 2), LollipopVector(c, i), num / den)


def lollipop_ratio_cumulative(level: LevelContext, c: int, j: int) -> GramRatio:
    """<u_j, u_j> / <u_0, u_0>, the product of the first j one-step ratios."""
    _check_lollipop_color(level, c)
    if not 1 <= j <= level.r - 2 - 2 * c:
        raise UsageError(f"index j = {j} out of range for r = {level.r}, c = {c}")
    value = QuantumFactored(1, ())
    for i in range(j):
        value = value * lollipop_ratio_step(level, c, i).value
    return GramRatio(LollipopVector(c, j), LollipopVector(c, 0), value)


def theta_norm_ratio(level: LevelContext, t: AdmissibleTriple) -> GramRatio:
    """Norm of the genus-2 theta-graph vector u_{a,b,c} relative to u_{0,0,0}.

    The normalization is pinned by the level's own printed anchor values
    (see the decide_closed witnesses): at even levels the ratio is
    theta(a,b,c)^2 / (<a><b><c>); at odd levels the theta symbol enters
    unsquared and without its global sign.
    """
    a, b, c = t.as_tuple()
    if not is_admissible(level, a, b, c):
        raise UsageError(f"({a},{b},{c}) is not {level.p}-admissible")
    theta = theta_symbol(a, b, c)
    den = bracket_color(a) * bracket_color(b) * bracket_color(c)
    if level.is_even_level:
        value = theta * theta / den
    else:
        unsigned = QuantumFactored(abs(theta.unit), theta.factors)
        value = unsigned / den
    return GramRatio(t, AdmissibleTriple(0, 0, 0), value)
