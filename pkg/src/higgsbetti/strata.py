"""Morse-stratification engine for spaces of rank-2 Higgs bundles.

The Yang-Mills-Higgs flow stratifies the space of Higgs pairs by the degree
d >= 1 of a destabilizing invariant line subbundle.  Stratum d enters at
Morse index mu_d = g - 1 + 2d - d_E, and the first g-1 strata additionally
carry correction terms built from symmetric products S^n M with
n = 2g - 2 + d_E - 2d (the range where the index jumps).  Removing each
stratum's contribution from the classifying-space series and adding the
corrections back yields the equivariant series of the semistable locus;
summing the per-stratum differences telescopes back to the classifying
space, which is the engine's main internal consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .series import Poly, TruncSeries, expand_rational
from .spaces import (
    Determinant,
    SurfaceSpec,
    bg_series,
    sym_cover_series,
    sym_series,
)

__all__ = [
    "KirwanViolation",
    "ModuliSpec",
    "NegativeBettiError",
    "StratumIndex",
    "correction_sum",
    "default_truncation",
    "invariant_part_series",
    "kirwan_monotonicity_check",
    "max_stratum",
    "moduli_series",
    "mu_index",
    "semistable_series",
    "stratification_formula",
    "stratum_difference",
    "stratum_space_series",
    "unstable_sum",
    "unstable_sum_resummed",
]

_ONE_MINUS_T2 = Poly([1, 0, -1])


class NegativeBettiError(ArithmeticError):
    """A series that must consist of Betti numbers has a negative or
    non-integer coefficient.  This signals an implementation bug, never a
    property of the input."""


def default_truncation(genus: int, degree: int) -> int:
    """Default series order: covers every cross-check (in particular the
    degree-one finite-support window 12g-12) while keeping runs fast."""
    return 6 * genus + 10 if degree == 0 else 12 * genus - 8


@dataclass(frozen=True)
class ModuliSpec:
    """Which moduli problem to compute.

    genus g >= 2, bundle degree d_E in {0, 1}, determinant variant, and the
    truncation order for all series.
    """

    genus: int
    degree: int
    determinant: Determinant
    truncation: int

    def __post_init__(self) -> None:
        if self.genus < 2:
            raise ValueError("genus must be at least 2")
        if self.degree not in (0, 1):
            raise ValueError("degree must be 0 or 1")
        if self.truncation < 1:
            raise ValueError("truncation must be at least 1")

    @classmethod
    def default(cls, genus: int, degree: int, determinant: Determinant) -> ModuliSpec:
        return cls(genus, degree, determinant, default_truncation(genus, degree))

    @property
    def surface(self) -> SurfaceSpec:
        return SurfaceSpec(self.genus)


@dataclass(frozen=True)
class StratumIndex:
    """Index data of one stratum: d, its Morse index mu_d, and the
    symmetric-product size n_d (negative once the correction range is left)."""

    d: int
    mu: int
    n: int


def mu_index(spec: ModuliSpec, d: int) -> StratumIndex:
    """mu_d = g - 1 + 2d - d_E and n_d = 2g - 2 + d_E - 2d for stratum d >= 1."""
    if d < 1:
        raise ValueError("strata are indexed by d >= 1")
    return StratumIndex(
        d,
        spec.genus - 1 + 2 * d - spec.degree,
        2 * spec.genus - 2 + spec.degree - 2 * d,
    )


def max_stratum(spec: ModuliSpec) -> int:
    """Largest d whose stratum can contribute below the truncation order.

    A stratum's contribution starts at t^{2 mu_d}, so terms with
    2 mu_d > N vanish identically up to t^N and the infinite sums truncate
    exactly.
    """
    d = 0
    while 2 * mu_index(spec, d + 1).mu <= spec.truncation:
        d += 1
    return d


def _jacobian_bu1(spec: ModuliSpec) -> TruncSeries:
    # (1+t)^{2g} / (1-t^2): Jacobian times BU(1)
    return expand_rational(
        Poly([1, 1]) ** (2 * spec.genus), _ONE_MINUS_T2, spec.truncation
    )


def _eta_series(spec: ModuliSpec) -> TruncSeries:
    """Equivariant series of the d-th critical set (the same for every d).

    Fixed determinant: J_d x BU(1), i.e. (1+t)^{2g}/(1-t^2); non-fixed:
    two Jacobian factors and two BU(1) factors, (1+t)^{4g}/(1-t^2)^2.
    """
    if spec.determinant is Determinant.FIXED:
        return _jacobian_bu1(spec)
    return expand_rational(
        Poly([1, 1]) ** (4 * spec.genus), _ONE_MINUS_T2 ** 2, spec.truncation
    )


def _correction_series(spec: ModuliSpec, n: int) -> TruncSeries | None:
    """Equivariant series of the subspace responsible for the index jump.

    Fixed determinant: the 2^{2g}-fold cover of S^n M; non-fixed: S^n M
    times a Jacobian and a BU(1) factor.  ``None`` once n < 0 (no jump).
    """
    if n < 0:
        return None
    if spec.determinant is Determinant.FIXED:
        return sym_cover_series(spec.surface, n, spec.truncation)
    return sym_series(spec.surface, n, spec.truncation) * _jacobian_bu1(spec)


def _require_betti(series: TruncSeries, what: str) -> TruncSeries:
    for k, c in enumerate(series.coeffs):
        if c.denominator != 1 or c < 0:
            raise NegativeBettiError(f"{what}: coefficient of t^{k} is {c}")
    return series


def unstable_sum(spec: ModuliSpec) -> TruncSeries:
    """Sum over all strata of t^{2 mu_d} times the unstable factor as it
    appears in the stratification formula for this variant.

    Fixed determinant (either degree): (1+t)^{2g}/(1-t^2).
    Non-fixed, degree 0: (1+t)^{4g}/(1-t^2)^2.
    Non-fixed, degree 1: (1+t)^{4g}/(1-t^2).
    """
    g2 = 2 * spec.genus
    if spec.determinant is Determinant.FIXED:
        factor = _jacobian_bu1(spec)
    elif spec.degree == 0:
        factor = expand_rational(Poly([1, 1]) ** (2 * g2), _ONE_MINUS_T2 ** 2, spec.truncation)
    else:
        factor = expand_rational(Poly([1, 1]) ** (2 * g2), _ONE_MINUS_T2, spec.truncation)
    total = TruncSeries.zero(spec.truncation)
    for d in range(1, max_stratum(spec) + 1):
        total = total + factor.shift(2 * mu_index(spec, d).mu)
    return total


def unstable_sum_resummed(spec: ModuliSpec) -> TruncSeries:
    """The same sum via geometric resummation.

    Consecutive exponents 2 mu_d differ by 4, so the tail resums to
    factor * t^{2 mu_1} / (1 - t^4).  Cross-check against
    :func:`unstable_sum`.
    """
    g2 = 2 * spec.genus
    den = Poly([1, 0, 0, 0, -1])
    if spec.determinant is Determinant.FIXED:
        num = Poly([1, 1]) ** g2
        den = den * _ONE_MINUS_T2
    elif spec.degree == 0:
        num = Poly([1, 1]) ** (2 * g2)
        den = den * _ONE_MINUS_T2 ** 2
    else:
        num = Poly([1, 1]) ** (2 * g2)
        den = den * _ONE_MINUS_T2
    return expand_rational(num, den, spec.truncation).shift(2 * mu_index(spec, 1).mu)


def correction_sum(spec: ModuliSpec) -> TruncSeries:
    """Sum over d = 1..g-1 of t^{2 mu_d} times the correction factor as it
    appears in the stratification formula for this variant.

    Fixed determinant: the covered symmetric product; non-fixed, degree 0:
    S^n M times (1+t)^{2g}/(1-t^2); non-fixed, degree 1: S^n M times the
    Jacobian (1+t)^{2g}.
    """
    total = TruncSeries.zero(spec.truncation)
    for d in range(1, spec.genus):
        idx = mu_index(spec, d)
        if spec.determinant is Determinant.FIXED:
            term = sym_cover_series(spec.surface, idx.n, spec.truncation)
        elif spec.degree == 0:
            term = sym_series(spec.surface, idx.n, spec.truncation) * _jacobian_bu1(spec)
        else:
            jac = (Poly([1, 1]) ** (2 * spec.genus)).as_series(spec.truncation)
            term = sym_series(spec.surface, idx.n, spec.truncation) * jac
        total = total + term.shift(2 * idx.mu)
    return total


@lru_cache(maxsize=None)
def semistable_series(spec: ModuliSpec) -> TruncSeries:
    """Equivariant Poincare series of the semistable locus.

    Morse recursion: start from the classifying-space series, remove every
    stratum's normal contribution t^{2 mu_d} * eta_d, and add back the
    correction t^{2 mu_d} * T_d for the first g-1 strata, where the Morse
    index jumps.  Coefficients must come out nonnegative integers.
    """
    total = bg_series(spec.surface, spec.determinant, spec.truncation)
    eta = _eta_series(spec)
    for d in range(1, max_stratum(spec) + 1):
        total = total - eta.shift(2 * mu_index(spec, d).mu)
    for d in range(1, spec.genus):
        idx = mu_index(spec, d)
        correction = _correction_series(spec, idx.n)
        if correction is not None:
            total = total + correction.shift(2 * idx.mu)
    return _require_betti(total, "semistable series")


def moduli_series(spec: ModuliSpec) -> TruncSeries:
    """Poincare series of the moduli space itself.

    Degree 0 reports the equivariant series (the semistable locus is
    singular and that is the meaningful object).  In degree 1 the
    fixed-determinant gauge group acts with finite stabilizers, so the
    equivariant and ordinary series coincide; for non-fixed determinant the
    constant central U(1) contributes a global BU(1) factor, divided out by
    multiplying with (1-t^2).
    """
    series = semistable_series(spec)
    if spec.degree == 1 and spec.determinant is Determinant.NONFIXED:
        series = _ONE_MINUS_T2.as_series(spec.truncation) * series
        return _require_betti(series, "moduli series")
    return series


def stratification_formula(spec: ModuliSpec) -> TruncSeries:
    """The three-term assembly ``leading - unstable_sum + correction_sum``.

    The leading term is (1-t^2) * P_t(BG) for (non-fixed, degree 1), where
    the assembly produces the moduli series directly, and P_t(BG) otherwise,
    where it reproduces :func:`semistable_series`.  Both routes must agree;
    the verification suite checks this.
    """
    leading = bg_series(spec.surface, spec.determinant, spec.truncation)
    if spec.degree == 1 and spec.determinant is Determinant.NONFIXED:
        leading = _ONE_MINUS_T2.as_series(spec.truncation) * leading
    return leading - unstable_sum(spec) + correction_sum(spec)


def stratum_difference(spec: ModuliSpec, d: int) -> TruncSeries:
    """Generating function of dim H^k(X_d) - dim H^k(X_{d-1}).

    Equals t^{2 mu_d} * (eta-term - T-term); the T-term is empty once
    n_d < 0.  Coefficients may be negative exactly when Kirwan surjectivity
    fails (fixed determinant).
    """
    idx = mu_index(spec, d)
    term = _eta_series(spec)
    correction = _correction_series(spec, idx.n)
    if correction is not None:
        term = term - correction
    return term.shift(2 * idx.mu)


@lru_cache(maxsize=None)
def stratum_space_series(spec: ModuliSpec, d: int) -> TruncSeries:
    """Equivariant series of X_d, the union of the semistable locus with the
    strata of index at most d.

    X_0 is the semistable locus; once 2 mu_{d+1} > N the series equals the
    classifying-space series up to t^N.
    """
    if d < 0:
        raise ValueError("stratum spaces are indexed by d >= 0")
    total = semistable_series(spec)
    for ell in range(1, d + 1):
        total = total + stratum_difference(spec, ell)
    return _require_betti(total, f"stratum space X_{d}")


@dataclass(frozen=True)
class KirwanViolation:
    """A failure of Betti monotonicity b_k(X_{d-1}) <= b_k(X_d)."""

    d: int
    k: int
    b_before: int  # b_k(X_{d-1})
    b_after: int  # b_k(X_d)


def kirwan_monotonicity_check(spec: ModuliSpec) -> list[KirwanViolation]:
    """Check b_k(X_{d-1}) <= b_k(X_d) for every stratum attachment.

    Surjectivity of the Kirwan map forces monotonicity, so non-fixed
    determinant variants must return an empty list; fixed-determinant
    variants are expected to produce witnesses (the anti-invariant classes
    of the covers do not extend).
    """
    violations = []
    previous = stratum_space_series(spec, 0)
    for d in range(1, max_stratum(spec) + 1):
        current = stratum_space_series(spec, d)
        for k in range(spec.truncation + 1):
            if previous[k] > current[k]:
                violations.append(
                    KirwanViolation(d, k, int(previous[k]), int(current[k]))
                )
        previous = current
    return violations


def invariant_part_series(spec: ModuliSpec) -> TruncSeries:
    """Semistable series restricted to the invariant part of the cohomology
    under the 2-torsion action (fixed determinant only).

    Same recursion as :func:`semistable_series` with each covered symmetric
    product replaced by the plain one, dropping the anti-invariant classes.
    Bounded above by the classifying-space series coefficientwise.
    """
    if spec.determinant is not Determinant.FIXED:
        raise ValueError("the invariant-part series is a fixed-determinant object")
    total = bg_series(spec.surface, spec.determinant, spec.truncation)
    eta = _eta_series(spec)
    for d in range(1, max_stratum(spec) + 1):
        total = total - eta.shift(2 * mu_index(spec, d).mu)
    for d in range(1, spec.genus):
        idx = mu_index(spec, d)
        if idx.n >= 0:
            correction = sym_series(spec.surface, idx.n, spec.truncation)
            total = total + correction.shift(2 * idx.mu)
    return _require_betti(total, "invariant-part series")
