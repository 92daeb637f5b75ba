"""Size and rate bounds for hybrid codes: Gaussian coefficients, the
Singleton-type and sphere-packing bounds, their asymptotic rate forms, the
dimension/symbol budget optimizer and the erasure-equivalence constant.

All counting is exact integer arithmetic (Gaussian coefficients overflow
64 bits quickly); floats appear only in rates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def gaussian_coeff(n: int, ell: int, q: int) -> int:
    """Number of ell-dimensional subspaces of F_q^n:
    prod_{i<ell} (q^(n-i) - 1) / (q^(ell-i) - 1)."""
    if not 0 <= ell <= n:
        return 0
    num = 1
    den = 1
    for i in range(ell):
        num *= q ** (n - i) - 1
        den *= q ** (ell - i) - 1
    assert num % den == 0
    return num // den


def singleton_bound(n: int, ell: int, D: int, d: int, q: int) -> int:
    """Largest possible codeword count of an [n, ell, ., 2D, d] code:
    min of the two Gaussian coefficients with n-d-D+2 on top."""
    top = n - d - D + 2
    return min(gaussian_coeff(top, ell - D + 1, q), gaussian_coeff(top, ell, q))


def sphere_size_t0(n: int, ell: int, T: int, q: int) -> int:
    """Exact number of ell-dim subspaces within Grassmann distance T of a
    fixed ell-dim subspace of F_q^n: sum_i q^(i^2) [ell i] [n-ell i]."""
    if T < 0:
        return 0
    return sum(q ** (i * i) * gaussian_coeff(ell, i, q) * gaussian_coeff(n - ell, i, q)
               for i in range(T // 2 + 1))


def sphere_size_lower(n: int, ell: int, T: int, t: int, q: int) -> int:
    """Lower bound on the number of ell-dim subspaces (T, t)-adjacent to a
    fixed one: q^(ell*t) * sum_i q^(i^2) [ell i] [n-t-ell i]."""
    if T < 0:
        return 0
    base = sum(q ** (i * i) * gaussian_coeff(ell, i, q)
               * gaussian_coeff(n - t - ell, i, q)
               for i in range(T // 2 + 1))
    return q ** (ell * t) * base


def sphere_packing_bound(n: int, ell: int, D: int, d: int, q: int) -> int:
    """[n ell]_q divided by the (D-1, d-1) sphere-size lower bound.

    The denominator is itself a lower bound, so this stays an upper bound
    on code size but may be loose; reported as stated, not tightened.
    """
    denom = sphere_size_lower(n, ell, D - 1, d - 1, q)
    return gaussian_coeff(n, ell, q) // denom


def construction_log_size(n: int, ell: int, D: int, d: int) -> int:
    """log_q of the concatenated-construction code size,
    (n - ell - d + 1) * (ell - D + 1); equals m*k for the inner
    linearized-polynomial code with m = n - ell - d + 1, k = ell - D + 1."""
    return (n - ell - d + 1) * (ell - D + 1)


@dataclass(frozen=True)
class AsymptoticParams:
    """Normalized code parameters: lam = ell/n, Delta = D/ell, delta = d/n,
    and the rate R = log_q(M) / (n*ell)."""

    lam: float
    Delta: float
    delta: float
    R: float

    @classmethod
    def of_code(cls, n: int, ell: int, D: int, d: int, q: int,
                size: int) -> "AsymptoticParams":
        return cls(lam=ell / n, Delta=D / ell, delta=d / n,
                   R=math.log(size, q) / (n * ell))


def asymptotic_rates(params: AsymptoticParams, n: int, ell: int) -> dict:
    """Right-hand sides of the two asymptotic rate bounds, without the o(1)
    terms: the Singleton form (1 - Delta + 1/ell)(1 - delta - lam + 1/n) and
    the sphere-packing form
    (1 - delta - lam + 1/n) - (Delta/2 - 1/(2 ell))(1 - delta - lam*Delta/2 + 3/(2n)).
    """
    lam, Delta, delta = params.lam, params.Delta, params.delta
    singleton_rate = (1 - Delta + 1 / ell) * (1 - delta - lam + 1 / n)
    sphere_packing_rate = ((1 - delta - lam + 1 / n)
                           - (Delta / 2 - 1 / (2 * ell))
                           * (1 - delta - lam * Delta / 2 + 3 / (2 * n)))
    return {"singleton_rate": singleton_rate,
            "sphere_packing_rate": sphere_packing_rate}


def _split_objective(n: int, ell: int, s: int, x: int) -> int:
    """log_q code size at the split d-1 = x, D-1 = s-x: (ell-s+x)(n-ell-x)."""
    return (ell - s + x) * (n - ell - x)


def optimal_d(n: int, ell: int, D_total: int) -> int:
    """Minimum-distance budget split maximizing the code size.

    Under (D-1) + (d-1) = D_total-1 with D, d >= 1, the real maximizer is
    d = (n + D_total + 1)/2 - ell; the returned integer evaluates the
    discrete objective at its floor/ceil neighbours (clamped to [1, D_total]),
    ties resolved to the smaller d.  When n >= 2*ell + D_total - 1 all budget
    goes to symbol erasures: d = D_total.
    """
    if D_total < 1:
        raise ValueError("total budget must be >= 1")
    s = D_total - 1
    x_real = (n + s) / 2 - ell
    candidates = set()
    for x in (math.floor(x_real), math.ceil(x_real)):
        candidates.add(min(max(x, 0), s))
    best_x = None
    best_val = None
    for x in sorted(candidates):
        val = _split_objective(n, ell, s, x)
        if best_val is None or val > best_val:
            best_val = val
            best_x = x
    return best_x + 1


def optimal_d_scan(n: int, ell: int, D_total: int) -> int:
    """Exhaustive scan of the discrete split objective (test oracle for
    optimal_d); ties resolved to the smaller d."""
    if D_total < 1:
        raise ValueError("total budget must be >= 1")
    s = D_total - 1
    best_x, best_val = 0, None
    for x in range(s + 1):
        val = _split_objective(n, ell, s, x)
        if best_val is None or val > best_val:
            best_val = val
            best_x = x
    return best_x + 1


def erasure_equivalence_constant(n: int, ell: int) -> Fraction:
    """Symbol erasures per dimension loss at equal code size: (n - ell)/ell."""
    if not 0 < ell < n:
        raise ValueError("need 0 < ell < n")
    return Fraction(n - ell, ell)


def comparison_margin(n: int, ell: int, D: int, d: int, eps: float = 0) -> bool:
    """True iff (n - 2*ell + (D-1)) * (d-1) > eps, the condition under which
    a hybrid code beats any constant-dimension subspace code with the same
    total erasure capability."""
    return (n - 2 * ell + (D - 1)) * (d - 1) > eps
