"""Special functions and closed-form log integrals used throughout the package.

Everything here is scalar and deterministic: the Euler-Mascheroni constant,
harmonic numbers, the digamma function, the partial sums of sum(1/(k*2^k)),
the beta function, and a small catalogue of integrals of the form
``integral of a power times a logarithmic factor`` that have elementary
closed forms.  These closed forms serve as independent oracles for the
adaptive quadrature in :mod:`extremal_info.numerics` and as building blocks
for the entropy/extropy formulas in :mod:`extremal_info.measures`.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special as _sc

__all__ = [
    "EULER_GAMMA",
    "euler_gamma",
    "harmonic",
    "digamma",
    "half_geometric_sum",
    "beta_function",
    "beta_n1_log_moment",
    "log_power_integral",
    "LOG_POWER_INTEGRAL_KINDS",
]

# Euler-Mascheroni constant, gamma = lim (H_n - ln n).
EULER_GAMMA = float(np.euler_gamma)

# Exact summation is used below this size; the digamma identity
# H_n = psi(n + 1) + gamma takes over above it.  The two branches agree to
# ~1e-15 at the switch point (covered by tests).
_HARMONIC_EXACT_MAX = 10_000

# 1/(k*2^k) underflows double precision long before this cap, so partial
# sums are numerically saturated past it.
_HALF_GEOMETRIC_CAP = 1_100


def euler_gamma() -> float:
    """Return the Euler-Mascheroni constant gamma = 0.5772156649..."""
    return EULER_GAMMA


def harmonic(n: int) -> float:
    """n-th harmonic number H_n = 1 + 1/2 + ... + 1/n.

    Uses exact floating summation for n <= 10^4 and the identity
    H_n = psi(n + 1) + gamma above that, so large arguments stay O(1).

    Parameters
    ----------
    n : int
        Index, n >= 1.
    """
    n = _check_index(n, "harmonic")
    if n <= _HARMONIC_EXACT_MAX:
        return math.fsum(1.0 / k for k in range(1, n + 1))
    return float(_sc.digamma(n + 1.0)) + EULER_GAMMA


def digamma(x: float) -> float:
    """Digamma function psi(x) = d/dx ln Gamma(x) for real x > 0."""
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise ValueError(f"digamma requires x > 0, got {x!r}")
    return float(_sc.digamma(x))


def half_geometric_sum(n: int) -> float:
    """Partial sum sum_{k=1}^{n} 1/(k*2^k).

    Monotonically increasing in n with limit ln 2; the gap to the limit is
    bounded by 2^-n.  Accepts n = 0 (empty sum).
    """
    n = _check_index(n, "half_geometric_sum", minimum=0)
    m = min(n, _HALF_GEOMETRIC_CAP)
    # ldexp underflows gracefully to 0.0 where 2.0**k would overflow
    return math.fsum(math.ldexp(1.0 / k, -k) for k in range(1, m + 1))


def beta_function(a: float, b: float) -> float:
    """Euler beta function B(a, b), computed via log-gamma for stability.

    Handles large arguments such as B(2n - 1, c) with n ~ 10^6 without
    overflow.  Requires a > 0 and b > 0.
    """
    a, b = float(a), float(b)
    if not (a > 0.0 and b > 0.0):
        raise ValueError(f"beta_function requires a, b > 0, got ({a!r}, {b!r})")
    return float(math.exp(_sc.betaln(a, b)))


def beta_n1_log_moment(n: int) -> float:
    """E[ln(1 - Y)] for Y ~ Beta(n, 1), which equals -H_n.

    The density of Y is n*y^(n-1) on (0, 1); expanding ln(1 - y) and
    integrating term by term telescopes to the negated harmonic number.
    """
    n = _check_index(n, "beta_n1_log_moment")
    return -harmonic(n)


LOG_POWER_INTEGRAL_KINDS = (
    "lower_half_log",
    "power_log",
    "power_loglog",
    "power_logpow",
)


def log_power_integral(
    kind: str,
    *,
    n: int | None = None,
    nu: float | None = None,
    mu: float | None = None,
) -> float:
    """Closed forms for four logarithmic moment integrals on (0, 1).

    kind = "lower_half_log"
        integral_0^(1/2) n y^(n-1) ln y dy = -2^-n (ln 2 + 1/n),  n >= 1.
    kind = "power_log"
        integral_0^1 y^(n-1) ln y dy = -1/n^2,  n >= 1.
    kind = "power_loglog"
        integral_0^1 y^(n-1) ln(-ln y) dy = -(gamma + ln n)/n,  n >= 1.
    kind = "power_logpow"
        integral_0^1 x^(nu-1) (ln(1/x))^(mu-1) dx = Gamma(mu)/nu^mu,
        nu > 0, mu > 0 (substitute x = e^-s to get a gamma integral).

    Each value is pinned against adaptive quadrature in the test suite.
    """
    if kind == "lower_half_log":
        n = _check_index(n, kind)
        return -(2.0**-n) * (math.log(2.0) + 1.0 / n)
    if kind == "power_log":
        n = _check_index(n, kind)
        return -1.0 / (n * n)
    if kind == "power_loglog":
        n = _check_index(n, kind)
        return -(EULER_GAMMA + math.log(n)) / n
    if kind == "power_logpow":
        if nu is None or mu is None:
            raise ValueError("power_logpow requires nu and mu")
        nu, mu = float(nu), float(mu)
        if not (nu > 0.0 and mu > 0.0):
            raise ValueError(f"power_logpow requires nu, mu > 0, got ({nu!r}, {mu!r})")
        return float(math.exp(_sc.gammaln(mu) - mu * math.log(nu)))
    raise ValueError(
        f"unknown integral kind {kind!r}; expected one of {LOG_POWER_INTEGRAL_KINDS}"
    )


def _check_index(n: int | None, name: str, minimum: int = 1) -> int:
    if n is None or isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise ValueError(f"{name} requires an integer n, got {n!r}")
    n = int(n)
    if n < minimum:
        raise ValueError(f"{name} requires n >= {minimum}, got {n}")
    return n
