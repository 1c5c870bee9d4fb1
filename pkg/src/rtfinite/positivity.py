"""The decision engine.

Finiteness of the representation image is equivalent to complete
positivity: at every choice of primitive 2p-th root of unity the
invariant Hermitian form is definite.  Since the graph bases are
orthogonal and norms are taken relative to a fixed base vector, the
form fails to be definite at an embedding exactly when some relative
norm ratio is negative there.  Everything below is an exact sign scan
over (embedding x ratio), plus cross-checks against the closed-form
clauses of the one-holed-torus theorem.
"""

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence

from sympy import isprime

from .bases import (
    AdmissibleTriple,
    GramRatio,
    admissible_triples,
    lollipop_basis,
    lollipop_ratio_step,
    theta_norm_ratio,
)
from .context import LevelContext
from .cyclotomic import EmbeddingIndex, Sign, embeddings
from .errors import UsageError
from .quantum import eval_sign, qint_sign_values


class Positivity(enum.Enum):
    COMPLETELY_POSITIVE = "completely-positive"
    NOT_COMPLETELY_POSITIVE = "not-completely-positive"


class Finiteness(enum.Enum):
    FINITE = "finite"
    INFINITE = "infinite"


class Crosscheck(enum.Enum):
    AGREE = "agree"
    DISAGREE = "disagree"
    NOT_APPLICABLE = "not-applicable"


class Provenance(enum.Enum):
    DIRECT_COMPUTATION = "direct-computation"
    THEOREM_CLAUSE = "theorem-clause"
    CLOSED_SURFACE_RULE = "closed-surface-rule"


@dataclass(frozen=True)
class PositivityReport:
    """Full sign matrix over (embedding k x ratio id), verdict and witness."""

    level: LevelContext
    surface: str
    sign_matrix: dict
    verdict: Positivity
    witness: Optional[tuple] = None
    flags: tuple[str, ...] = ()


@dataclass(frozen=True)
class FinitenessVerdict:
    verdict: Finiteness
    provenance: Provenance
    report: Optional[PositivityReport] = None
    clause: Optional[int] = None
    crosscheck: Crosscheck = Crosscheck.NOT_APPLICABLE
    notes: tuple[str, ...] = ()


def check_complete_positivity(
    ratios: Sequence[GramRatio], level: LevelContext, surface: str = ""
) -> PositivityReport:
    """Evaluate every relative-norm ratio at every canonical embedding.

    The first Negative entry in (ascending k, ratio list order) is the
    witness.  Zero entries are recorded as such; they never occur for
    admissible data.
    """
    sign_matrix = {}
    witness = None
    for emb in embeddings(level):
        for idx, ratio in enumerate(ratios):
            s = eval_sign(ratio.value, emb)
            sign_matrix[(emb.k, idx)] = s
            if s is Sign.NEGATIVE and witness is None:
                witness = (emb.k, idx)
    verdict = (
        Positivity.NOT_COMPLETELY_POSITIVE
        if witness is not None
        else Positivity.COMPLETELY_POSITIVE
    )
    return PositivityReport(level, surface, sign_matrix, verdict, witness)


def _torus_sign_scan(level: LevelContext, c: int):
    """Cumulative relative-norm signs for the lollipop basis at color c.

    Returns (sign_matrix, witness) where entries are keyed by
    (k, j) with j the index of the ratio <u_j>/<u_0>, j >= 1.  Signs are
    accumulated stepwise; no quantum integer in range can vanish, so the
    product of step signs is the cumulative ratio's sign.
    """
    dim = level.r - 1 - 2 * c
    from_int = {-1: Sign.NEGATIVE, 0: Sign.ZERO, 1: Sign.POSITIVE}
    sign_matrix = {}
    witness = None
    for emb in embeddings(level):
        table = qint_sign_values(level.p, emb.k, level.r - 1)
        k = emb.k
        running = 1
        for i in range(dim - 1):
            running *= (
                table[2 * c + i + 2]
                * table[i + 1]
                * table[c + i + 2]
                * table[c + i + 1]
            )
            sign_matrix[(k, i + 1)] = from_int[running]
            if running < 0 and witness is None:
                witness = (k, i + 1)
    return sign_matrix, witness


def theorem_predicate(r: int, c: int) -> Optional[tuple[int, Finiteness]]:
    """First matching closed-form clause for the one-holed torus at p = 2r.

    Clauses, in order: (1) 2c = r-3 finite; (2) c = 1 (mod 3), r != 3, 5
    infinite; (3) the mod-5 residue classes, infinite; (4) 1 <= c and
    3c <= r-7 infinite.  Clause 4 excludes c = 0: a stick colored 0 is
    the closed torus, all of whose ratios are identically 1, so the
    bound is only meaningful for a nontrivial boundary color.
    """
    if 2 * c == r - 3:
        return (1, Finiteness.FINITE)
    if c % 3 == 1 and r not in (3, 5):
        return (2, Finiteness.INFINITE)
    if (
        (c % 5 == 3 and r % 5 in (2, 3))
        or (c % 5 == 1 and r % 5 == 3)
        or (c % 5 == 2 and r % 5 == 2)
    ):
        return (3, Finiteness.INFINITE)
    if 1 <= c and 3 * c <= r - 7:
        return (4, Finiteness.INFINITE)
    return None


def clause_witness_k(r: int, c: int, clause: int) -> Optional[int]:
    """The designated witness embedding index for a clause.

    Clause 2 uses k = (2r+1)/3 or (2r-1)/3 depending on r mod 3, clause 3
    uses k = (2r+1)/5 or (2r-1)/5 depending on r mod 5, clause 4 uses
    k = 3.  Clause 1 has no witness (it asserts positivity).
    """
    if clause == 2:
        if r % 3 == 1:
            return (2 * r + 1) // 3
        if r % 3 == 2:
            return (2 * r - 1) // 3
        return None
    if clause == 3:
        if r % 5 == 2:
            return (2 * r + 1) // 5
        if r % 5 == 3:
            return (2 * r - 1) // 5
        return None
    if clause == 4:
        return 3
    return None


def decide_torus(r: int, c: int, p_choice: str = "2r", experimental: bool = False) -> FinitenessVerdict:
    """Decide finiteness for the one-holed torus with boundary color 2c.

    Direct computation: scan the signs of the cumulative relative norms
    <u_j>/<u_0> over all canonical embeddings.  When p = 2r and a
    theorem clause applies, the clause's prediction is cross-checked.
    The p = r computations are exposed behind the experimental flag; the
    theorem clauses address p = 2r only, so no cross-check applies there.
    """
    if r < 3 or r % 2 == 0 or not isprime(r):
        raise UsageError(f"r must be an odd prime, got {r}")
    if p_choice not in ("r", "2r"):
        raise UsageError(f"p_choice must be 'r' or '2r', got {p_choice!r}")
    if p_choice == "r" and not experimental:
        raise UsageError("p = r one-holed-torus computations are experimental; "
                         "pass experimental=True to run them")
    level = LevelContext.at(r if p_choice == "r" else 2 * r)
    basis = lollipop_basis(level, c)
    notes = ("experimental-odd-p",) if p_choice == "r" else ()
    surface = f"one-holed torus, r={r}, c={c}, p={level.p}"
    if len(basis) <= 1:
        report = PositivityReport(
            level, surface, {}, Positivity.COMPLETELY_POSITIVE,
            flags=("dimension-zero",) + notes,
        )
        return FinitenessVerdict(
            Finiteness.FINITE, Provenance.DIRECT_COMPUTATION, report,
            notes=notes + ("vacuous: basis dimension <= 1",),
        )
    sign_matrix, witness = _torus_sign_scan(level, c)
    positivity = (
        Positivity.NOT_COMPLETELY_POSITIVE
        if witness is not None
        else Positivity.COMPLETELY_POSITIVE
    )
    report = PositivityReport(level, surface, sign_matrix, positivity, witness, notes)
    verdict = (
        Finiteness.FINITE
        if positivity is Positivity.COMPLETELY_POSITIVE
        else Finiteness.INFINITE
    )
    clause = None
    crosscheck = Crosscheck.NOT_APPLICABLE
    if p_choice == "2r":
        predicted = theorem_predicate(r, c)
        if predicted is not None:
            clause, expected = predicted
            crosscheck = (
                Crosscheck.AGREE if expected is verdict else Crosscheck.DISAGREE
            )
    return FinitenessVerdict(
        verdict, Provenance.DIRECT_COMPUTATION, report, clause, crosscheck, notes
    )


def _closed_rule(r: int, g: int) -> Finiteness:
    return Finiteness.FINITE if g == 1 or r == 3 else Finiteness.INFINITE


def decide_closed(p: int, g: int) -> FinitenessVerdict:
    """Decide finiteness for the closed surface of genus g at level p.

    Composes the computational witnesses the way the handle-splitting
    decomposition allows: genus 1 directly (all ratios are the unit
    symbol), r = 3 by checking every admissible-coloring norm, r = 5 by
    the designated genus-2 theta witness (embedded by zero-coloring for
    g >= 3), and r >= 7 through the non-complete-positivity of the
    one-holed torus at boundary color 1.
    """
    if g < 1:
        raise UsageError(f"genus must be >= 1, got {g}")
    level = LevelContext.at(p)
    r = level.r

    if g == 1:
        # Closed torus: the c = 0 lollipop ratios all cancel to the unit.
        steps = [
            lollipop_ratio_step(level, 0, i) for i in range(r - 2)
        ]
        assert all(s.value.is_unit for s in steps)
        report = check_complete_positivity(steps, level, f"closed torus, p={p}")
        verdict = (
            Finiteness.FINITE
            if report.verdict is Positivity.COMPLETELY_POSITIVE
            else Finiteness.INFINITE
        )
        crosscheck = (
            Crosscheck.AGREE if verdict is _closed_rule(r, g) else Crosscheck.DISAGREE
        )
        return FinitenessVerdict(
            verdict, Provenance.DIRECT_COMPUTATION, report, crosscheck=crosscheck
        )

    if r == 3:
        if p == 3:
            # One admissible coloring only: the space is one dimensional.
            report = PositivityReport(
                level, f"closed genus {g}, p=3", {},
                Positivity.COMPLETELY_POSITIVE, flags=("dimension-one",),
            )
            verdict = Finiteness.FINITE
        else:
            ratios = [theta_norm_ratio(level, t) for t in admissible_triples(level)]
            report = check_complete_positivity(
                ratios, level, f"closed genus {g}, p=6 (theta colorings)"
            )
            verdict = (
                Finiteness.FINITE
                if report.verdict is Positivity.COMPLETELY_POSITIVE
                else Finiteness.INFINITE
            )
        crosscheck = (
            Crosscheck.AGREE if verdict is _closed_rule(r, g) else Crosscheck.DISAGREE
        )
        return FinitenessVerdict(
            verdict, Provenance.CLOSED_SURFACE_RULE, report, crosscheck=crosscheck
        )

    if r == 5:
        triple = AdmissibleTriple(2, 2, 2) if p == 5 else AdmissibleTriple(2, 1, 1)
        witness_k = 3
        ratio = theta_norm_ratio(level, triple)
        s = eval_sign(ratio.value, EmbeddingIndex(witness_k, p))
        if s is not Sign.NEGATIVE:
            raise AssertionError(
                f"designated witness {triple.as_tuple()} at k={witness_k} "
                f"is not negative at p={p}"
            )
        note = (
            "genus-2 theta witness"
            if g == 2
            else "genus-2 theta witness embedded by zero-coloring"
        )
        report = PositivityReport(
            level,
            f"closed genus {g}, p={p}",
            {(witness_k, triple.as_tuple()): s},
            Positivity.NOT_COMPLETELY_POSITIVE,
            witness=(witness_k, triple.as_tuple()),
        )
        verdict = FinitenessVerdict(
            Finiteness.INFINITE, Provenance.CLOSED_SURFACE_RULE, report,
            crosscheck=Crosscheck.AGREE
            if _closed_rule(r, g) is Finiteness.INFINITE
            else Crosscheck.DISAGREE,
            notes=(note, f"ratio {ratio.value} negative at k={witness_k}"),
        )
        return verdict

    # r >= 7: handle decomposition V_p(S_g) = (+)_c V_p(T^c) (x) V_p(S_{g-1}^c);
    # the one-holed torus at c = 1 already fails complete positivity.
    sign_matrix, witness = _torus_sign_scan(level, 1)
    if witness is None:
        raise AssertionError(
            f"expected a negative one-holed-torus ratio at c=1 for p={p}"
        )
    report = PositivityReport(
        level,
        f"closed genus {g}, p={p} (via one-holed torus c=1)",
        sign_matrix,
        Positivity.NOT_COMPLETELY_POSITIVE,
        witness,
    )
    return FinitenessVerdict(
        Finiteness.INFINITE,
        Provenance.CLOSED_SURFACE_RULE,
        report,
        crosscheck=Crosscheck.AGREE
        if _closed_rule(r, g) is Finiteness.INFINITE
        else Crosscheck.DISAGREE,
        notes=("handle decomposition onto the c=1 one-holed torus",),
    )
