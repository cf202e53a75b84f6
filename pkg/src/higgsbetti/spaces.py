"""Poincare series of the building-block spaces.

Everything the stratification formulas are assembled from: Jacobian tori,
BU(1), classifying spaces of the rank-2 gauge groups, symmetric products
S^n M of a genus-g curve, and their 2^{2g}-fold covers.  All coefficients
are nonnegative integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .series import BiSeries, Poly, TruncSeries, binomial, expand_rational

__all__ = [
    "CoverRangeError",
    "Determinant",
    "SurfaceSpec",
    "anti_invariant_dim",
    "bg_series",
    "bu1_series",
    "jacobian_series",
    "sym_cover_series",
    "sym_oracle",
    "sym_series",
]


class Determinant(Enum):
    """Whether the determinant line bundle of the rank-2 bundle is held fixed."""

    FIXED = "fixed"
    NONFIXED = "nonfixed"


class CoverRangeError(ValueError):
    """Covered symmetric products are only used for 0 <= n <= 2g-2."""


@dataclass(frozen=True)
class SurfaceSpec:
    """A compact Riemann surface of genus g >= 2.

    The lower bound keeps the correction sums over d = 1..g-1 nonempty.
    """

    genus: int

    def __post_init__(self) -> None:
        if self.genus < 2:
            raise ValueError("genus must be at least 2")


def jacobian_series(surface: SurfaceSpec, order: int) -> TruncSeries:
    """P_t of the Jacobian torus: (1+t)^(2g), independent of the degree."""
    return (Poly([1, 1]) ** (2 * surface.genus)).as_series(order)


def bu1_series(order: int) -> TruncSeries:
    """P_t(BU(1)) = 1/(1-t^2): one generator in every even degree."""
    return expand_rational(Poly.one(), Poly([1, 0, -1]), order)


def bg_series(surface: SurfaceSpec, determinant: Determinant, order: int) -> TruncSeries:
    """Atiyah-Bott series of the classifying space of the gauge group.

    Fixed determinant (SU(2) gauge group):

        (1+t^3)^(2g) / ((1-t^2)(1-t^4))

    Non-fixed determinant (U(2) gauge group):

        (1+t)^(2g) (1+t^3)^(2g) / ((1-t^2)^2 (1-t^4))
    """
    g2 = 2 * surface.genus
    num = Poly([1, 0, 0, 1]) ** g2
    den = Poly([1, 0, -1]) * Poly([1, 0, 0, 0, -1])
    if determinant is Determinant.NONFIXED:
        num = num * Poly([1, 1]) ** g2
        den = den * Poly([1, 0, -1])
    return expand_rational(num, den, order)


@lru_cache(maxsize=None)
def _sym_poly(genus: int, n: int) -> Poly:
    # MacDonald generating function: P_t(S^n M) = [x^n] (1+xt)^{2g} / ((1-x)(1-xt^2)).
    # The answer is a polynomial of degree 2n, so t-order 2n is exact.
    t_order = 2 * n
    g2 = 2 * genus
    num = BiSeries.of_polys(
        [Poly.monomial(a, binomial(g2, a)) for a in range(min(g2, n) + 1)], n, t_order
    )
    # (1-x)(1-xt^2) = 1 - (1+t^2) x + t^2 x^2
    den = BiSeries.of_polys([Poly.one(), Poly([-1, 0, -1]), Poly([0, 0, 1])], n, t_order)
    return Poly((num * den.inv()).x_coeff(n).coeffs)


def sym_series(surface: SurfaceSpec, n: int, order: int) -> TruncSeries:
    """P_t(S^n M) extracted from the MacDonald generating function.

    A palindromic polynomial of degree 2n (the symmetric product is smooth
    and compact).
    """
    if n < 0:
        raise ValueError("symmetric-product size must be nonnegative")
    return _sym_poly(surface.genus, n).as_series(order)


def sym_oracle(surface: SurfaceSpec, n: int) -> TruncSeries:
    """Betti series of S^n M by direct enumeration, no generating functions.

    H^*(S^n M) has 2g generators in degree 1 (each usable at most once) and
    one generator in degree 2, subject only to total weight <= n, so

        b_k = sum over a + 2j = k with a + j <= n of C(2g, a).
    """
    if n < 0:
        raise ValueError("symmetric-product size must be nonnegative")
    g2 = 2 * surface.genus
    out = [0] * (2 * n + 1)
    for a in range(min(g2, n) + 1):
        c = binomial(g2, a)
        for j in range(n - a + 1):
            out[a + 2 * j] += c
    return TruncSeries(out, 2 * n)


def _check_cover_range(surface: SurfaceSpec, n: int) -> None:
    if not 0 <= n <= 2 * surface.genus - 2:
        raise CoverRangeError(
            f"cover formula needs 0 <= n <= 2g-2 = {2 * surface.genus - 2}, got n = {n}"
        )


def anti_invariant_dim(surface: SurfaceSpec, n: int) -> int:
    """Dimension of the extra (anti-invariant) cohomology of the cover.

    The 2^{2g}-fold cover of S^n M adds (2^{2g}-1) * C(2g-2, n) to the Betti
    number in degree n and nothing elsewhere.
    """
    _check_cover_range(surface, n)
    return (2 ** (2 * surface.genus) - 1) * binomial(2 * surface.genus - 2, n)


def sym_cover_series(surface: SurfaceSpec, n: int, order: int) -> TruncSeries:
    """P_t of the 2^{2g}-fold cover of S^n M.

    The base series plus the anti-invariant part concentrated in degree n.
    """
    extra = anti_invariant_dim(surface, n)
    return sym_series(surface, n, order) + Poly.monomial(n, extra).as_series(order)
