"""Closed-form bounds on the conditional TV distance: the per-configuration
theta/psi decomposition, the two boundary-pair case bounds, the region-wide
exponential bound and its temperature optimum r(t)."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .model import ModelParams, NeighborConfig, SubRegion, check_spin, classify_region


@dataclass(frozen=True)
class ExponentPair:
    """Exponents (a, b) of the region-wide bound 4*exp(-beta*a)*(1 - exp(-beta*b))."""

    a: float
    b: float

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0):
            raise DomainError(f"exponents must be positive, got a={self.a}, b={self.b}")


def require_sub_region(x: float, y: float) -> SubRegion:
    """Sub-region (A, B or C) of a point, or DomainError if outside the strip."""
    sub = classify_region(x, y).sub
    if sub not in (SubRegion.A, SubRegion.B, SubRegion.C):
        raise DomainError(f"point (x={x}, y={y}) is outside A|B|C")
    return sub


def _exp_expm1(e: float, g: float) -> float:
    """exp(e) * (exp(g) - 1), computed so no intermediate overflows when the
    combined exponent is in range."""
    if g > 0:
        return math.exp(e + g) * -math.expm1(-g)
    return math.exp(e) * math.expm1(g)


def _decay(c: float, e: float, g: float) -> float:
    """c * exp(e) * (1 - exp(g)) for g <= 0."""
    return c * math.exp(e) * -math.expm1(g)


def exponents(params: ModelParams) -> ExponentPair:
    """Exponents a = 2d|x+y+1| (A|B) or 2d|x| (C), b = y+1 / 2 / |y|+1 on A/B/C."""
    sub = require_sub_region(params.x, params.y)
    if sub is SubRegion.C:
        a = 2 * params.d * abs(params.x)
        b = abs(params.y) + 1
    else:
        a = 2 * params.d * abs(params.x + params.y + 1)
        b = params.y + 1 if sub is SubRegion.A else 2.0
    return ExponentPair(a, b)


def theorem1_bound(params: ModelParams) -> float:
    """Region-wide bound 4*exp(-beta*a)*(1 - exp(-beta*b)) on the conditional TV."""
    ep = exponents(params)
    return _decay(4.0, -params.beta * ep.a, -params.beta * ep.b)


def beta_critical(ep: ExponentPair) -> float:
    """Unique maximizer of w(a, b, beta) = 4*exp(-a*beta)*(1 - exp(-b*beta));
    satisfies exp(-beta_c*b) = a/(a+b)."""
    return math.log((ep.a + ep.b) / ep.a) / ep.b


def r_of_t(t: float) -> float:
    """Value of the bound at its temperature optimum: (4/(1+t)) * (1+1/t)^(-t).

    Strictly decreasing on (0, inf) with r(1) = 1.
    """
    if t <= 0:
        raise DomainError(f"t must be positive, got {t}")
    return 4.0 / (1.0 + t) * math.exp(-t * math.log1p(1.0 / t))


def _check_pair(nb: NeighborConfig, sigma1_tilde: int) -> None:
    check_spin(sigma1_tilde)
    if sigma1_tilde == nb.spins[0]:
        raise DomainError("replacement spin must differ from the distinguished neighbor")


def theta(s: int, nb: NeighborConfig, sigma1_tilde: int, params: ModelParams) -> float:
    """One signed term of the TV decomposition for origin spin s in {-1, +1}."""
    if s not in (-1, 1):
        raise DomainError(f"s must be -1 or +1, got {s!r}")
    _check_pair(nb, sigma1_tilde)
    s1, st = nb.spins[0], sigma1_tilde
    beta = params.beta
    e_prefix = beta * (2 * params.d * params.x + params.y * nb.sigma_sq)
    e_inner = beta * params.y * (st * st - s1 * s1) + beta * s * (st - s1)
    e_suffix = beta * s * sum(nb.spins)
    return _exp_expm1(e_prefix + e_suffix, e_inner)


def psi(nb: NeighborConfig, sigma1_tilde: int, params: ModelParams) -> float:
    """The sinh term of the TV decomposition:
    2*exp(beta*(4dx + 2y*sigma_sq)) * exp(beta*y*(st^2-s1^2)) * sinh(beta*(st-s1))."""
    _check_pair(nb, sigma1_tilde)
    s1, st = nb.spins[0], sigma1_tilde
    beta = params.beta
    e = beta * (4 * params.d * params.x + 2 * params.y * nb.sigma_sq)
    e += beta * params.y * (st * st - s1 * s1)
    g = beta * (st - s1)
    if g == 0:
        return 0.0
    # 2*sinh(g) = sign(g) * exp(|g|) * (1 - exp(-2|g|))
    return math.copysign(1.0, g) * math.exp(e + abs(g)) * -math.expm1(-2 * abs(g))


def lemma1_bound(nb: NeighborConfig, sigma1_tilde: int, params: ModelParams) -> float:
    """Configuration-wise TV bound |theta_+1| + |theta_-1| + |psi|.

    The pair is normalized internally to |sigma1_tilde| >= |sigma_1|, with
    (-1, +1) when the magnitudes tie; the bound is symmetric in the pair.
    """
    _check_pair(nb, sigma1_tilde)
    s1, st = nb.spins[0], sigma1_tilde
    if abs(st) < abs(s1):
        nb = nb.with_distinguished(st)
        st = s1
    elif abs(st) == abs(s1):
        nb = nb.with_distinguished(-1)
        st = 1
    return (
        abs(theta(1, nb, st, params))
        + abs(theta(-1, nb, st, params))
        + abs(psi(nb, st, params))
    )


def lemma2_bound(params: ModelParams) -> float:
    """Uniform TV bound over boundary pairs with |sigma_1| = |sigma_1~|."""
    sub = require_sub_region(params.x, params.y)
    beta, x, y, d = params.beta, params.x, params.y, params.d
    if sub is SubRegion.C:
        e = beta * (2 * d * x + y + 1)
    else:
        e = beta * (2 * d * x + 2 * d * (y + 1))
    return _decay(4.0, e, -2 * beta)


def lemma3_bound(params: ModelParams) -> float:
    """Uniform TV bound over boundary pairs with |sigma_1| != |sigma_1~|."""
    sub = require_sub_region(params.x, params.y)
    beta, x, y, d = params.beta, params.x, params.y, params.d
    if sub is SubRegion.A:
        return _decay(3.0, beta * (2 * d * x + 2 * d * (y + 1)), -beta * (y + 1))
    if sub is SubRegion.B:
        return _decay(3.0, beta * (2 * d * x + 2 * d * (y + 1)), -2 * beta)
    return _decay(3.0, 2 * d * beta * x, beta * (y - 1))


def _check_k(params: ModelParams, k: int) -> None:
    if not 0 <= k <= 2 * params.d - 1:
        raise DomainError(f"k must lie in [0, {2 * params.d - 1}], got {k}")


def theta_sum_bound(params: ModelParams, k: int) -> float:
    """Bound on |theta_+1| + |theta_-1| for sigma_1 = 0, sigma_1~ = 1 and k
    nonzero non-distinguished neighbors, by y-regime."""
    _check_k(params, k)
    beta, x, y, d = params.beta, params.x, params.y, params.d
    if y >= 1:
        return _decay(2.0, beta * (2 * d * x + (k + 1) * (y + 1)), -beta * (y + 1))
    if y <= -1:
        return _decay(2.0, beta * (2 * d * x + k * (y + 1)), beta * (y - 1))
    return _decay(2.0, beta * (2 * d * x + (k + 1) * (y + 1)), -2 * beta)


def psi_bound(params: ModelParams, k: int) -> float:
    """Bound on |psi| for sigma_1 = 0, sigma_1~ = +-1 and k nonzero
    non-distinguished neighbors, by y-regime."""
    _check_k(params, k)
    beta, x, y, d = params.beta, params.x, params.y, params.d
    e = beta * (4 * d * x + (2 * k + 1) * y + 1)
    if y >= 1:
        return _decay(1.0, e, -beta * (y + 1))
    if y <= -1:
        return _decay(1.0, e, beta * (y - 1))
    return _decay(1.0, e, -2 * beta)
