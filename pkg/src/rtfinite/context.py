"""Level bookkeeping.

A *level* is an integer p with p = r or p = 2r for an odd prime r.  The
LevelContext bundles p, r, the auxiliary order alpha_p used by the lattice
machinery, and the set of valid edge colors at that level.
"""

from dataclasses import dataclass

from sympy import isprime, totient

from .errors import UsageError


def level_prime(p: int) -> int:
    """Return the odd prime r with p = r or p = 2r, or raise UsageError."""
    if p >= 3 and p % 2 == 1 and isprime(p):
        return p
    if p % 2 == 0 and p // 2 >= 3 and isprime(p // 2):
        return p // 2
    raise UsageError(f"p = {p} is not r or 2r for an odd prime r")


def alpha(p: int) -> int:
    """The order alpha_p: p itself when p = 3 (mod 4), otherwise 4r."""
    r = level_prime(p)
    if p % 4 == 3:
        return p
    return 4 * r


@dataclass(frozen=True)
class LevelContext:
    """Root object for all computations at a fixed level p."""

    p: int
    r: int
    alpha_p: int
    phi_alpha: int
    colors: tuple[int, ...]
    # kappa is never used in arithmetic: the verdict is invariant under the
    # global sign flip that changing kappa can cause.  We only record the
    # exponent in the defining relation kappa^6 = A^kappa_exponent.
    kappa_exponent: int

    @classmethod
    def at(cls, p: int) -> "LevelContext":
        r = level_prime(p)
        if p == 2 * r:
            colors = tuple(range(r - 1))
        else:
            colors = tuple(range(0, p - 2, 2))
        a = alpha(p)
        return cls(
            p=p,
            r=r,
            alpha_p=a,
            phi_alpha=int(totient(a)),
            colors=colors,
            kappa_exponent=-6 - p * (p + 1) // 2,
        )

    @property
    def is_even_level(self) -> bool:
        return self.p == 2 * self.r
