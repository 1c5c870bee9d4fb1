"""Integrality and discreteness machinery for the ring O_p = Z[A]/phi_alpha(A).

The embedding into the product of Galois conjugates has a discrete
image because the averaged square norm of any element is an integer
divided by phi(alpha_p).  The exact trace computation is the ground
truth for that norm; the literal closed form displayed alongside the
integrality statement (sum of squared coefficients, with a correction at
p = 2r) is
computed separately purely so the two can be compared.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .context import LevelContext, alpha  # noqa: F401  (alpha re-exported)
from .cyclotomic import CyclotomicInteger, reduce
from .errors import UsageError


def lattice_element(level: LevelContext, raw_coeffs) -> CyclotomicInteger:
    """The canonical residue of an integer coefficient vector in O_p."""
    return reduce(raw_coeffs, level.alpha_p)


def psi_norm_sq(element: CyclotomicInteger, level: LevelContext) -> Fraction:
    """Exact averaged square norm over all conjugate embeddings.

    Equals trace(P * conjugate(P)) / phi(alpha_p); the numerator is a
    nonnegative rational integer, zero only for P = 0.
    """
    if element.order != level.alpha_p:
        raise UsageError(
            f"element has order {element.order}, expected alpha_p = {level.alpha_p}"
        )
    return Fraction((element * element.conjugate()).trace(), level.phi_alpha)


def naive_norm_formula(element: CyclotomicInteger, level: LevelContext) -> Fraction:
    """The literal displayed closed form, from the canonical coefficients.

    sum(n_i^2) when p is prime, minus 2 * sum over |i-j| = 2r of n_i n_j
    when p = 2r.  This is documentation, not ground truth: the display
    omits cross terms that the exact trace produces (none of which
    affect the integrality that discreteness rests on).
    """
    coeffs = element.coeffs
    total = sum(c * c for c in coeffs)
    if level.is_even_level:
        d = 2 * level.r
        total -= 2 * sum(
            coeffs[i] * coeffs[i + d] for i in range(len(coeffs) - d)
        )
    return Fraction(total)


@dataclass(frozen=True)
class DiscretenessReport:
    level_p: int
    samples: int
    seed: int
    integrality_passes: int
    integrality_failures: int
    min_norm_sq: Fraction
    formula_agreements: int
    formula_disagreements: int


def discreteness_certificate(
    level: LevelContext, sample_size: int, seed: int = 0, coeff_bound: int = 10
) -> DiscretenessReport:
    """Sample random nonzero elements and certify phi(alpha_p) * norm^2 in Z >= 1.

    Integrality bounds every nonzero norm below by 1/phi(alpha_p), which
    is the discreteness statement.  Also tallies where the displayed
    closed form agrees with the exact trace value.
    """
    if sample_size < 1:
        raise UsageError("sample_size must be >= 1")
    rng = random.Random(seed)
    deg = level.phi_alpha
    passes = failures = agree = disagree = 0
    min_norm = None
    drawn = 0
    while drawn < sample_size:
        coeffs = [rng.randint(-coeff_bound, coeff_bound) for _ in range(deg)]
        element = lattice_element(level, coeffs)
        if element.is_zero():
            continue
        drawn += 1
        norm = psi_norm_sq(element, level)
        scaled = norm * level.phi_alpha
        if scaled.denominator == 1 and scaled >= 1:
            passes += 1
        else:
            failures += 1
        if naive_norm_formula(element, level) == norm:
            agree += 1
        else:
            disagree += 1
        if min_norm is None or norm < min_norm:
            min_norm = norm
    return DiscretenessReport(
        level_p=level.p,
        samples=sample_size,
        seed=seed,
        integrality_passes=passes,
        integrality_failures=failures,
        min_norm_sq=min_norm,
        formula_agreements=agree,
        formula_disagreements=disagree,
    )
