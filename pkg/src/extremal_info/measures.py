"""Shannon entropy and extropy of the sample maximum.

For a parent with density f, distribution function F and density-quantile
profile I(t) = f(F^{-1}(t)), the largest of n i.i.d. draws has density
n F^{n-1} f, and its two information measures reduce to one-dimensional
integrals against Beta(n, 1) / power weights:

    H(X_(n)) = 1 - ln n - 1/n - Int_0^1 n y^{n-1} ln I(y) dy
    J(X_(n)) = -(n^2 / 2) Int_0^1 t^{2n-2} I(t) dt

Every catalog family admits a closed form for both (see the per-family
expressions in the code below), so the quadrature route doubles as an
independent oracle.  The n -> infinity limits are exposed as extended
reals; the Pareto extropy limit is of the unresolved form 0 x (-inf) and
is reported as :data:`INDETERMINATE` rather than silently collapsed to a
number (the closed-form sequence itself tends to 0 from below).

Normalized maxima (X_(n) - b_n)/a_n obey exact transformation laws --
entropy is location-free but scale-dependent, extropy scales linearly:

    H((X_(n) - b_n)/a_n) = -ln a_n + H(X_(n))
    J((X_(n) - b_n)/a_n) = a_n J(X_(n))

so neither normalized measure depends on b_n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import distributions as dist_mod
from . import numerics
from .distributions import GUMBEL_XI_EPS
from .special import EULER_GAMMA, beta_function, harmonic

__all__ = [
    "METHODS",
    "MeasureValue",
    "Indeterminate",
    "INDETERMINATE",
    "is_indeterminate",
    "NoClosedFormError",
    "shannon_max",
    "extropy_max",
    "shannon_limit",
    "extropy_limit",
    "shannon_normalized",
    "extropy_normalized",
    "crosscheck",
]

METHODS = ("closed_form", "quadrature", "monte_carlo")

_METHOD_ALIASES = {
    "closed": "closed_form",
    "quad": "quadrature",
    "mc": "monte_carlo",
    "closed_form": "closed_form",
    "quadrature": "quadrature",
    "monte_carlo": "monte_carlo",
}


class Indeterminate:
    """Marker for an extended-real value of unresolved indeterminate form.

    A single instance, :data:`INDETERMINATE`, stands for limits that the
    defining expressions leave as 0 x (-inf); it deliberately does not
    compare or coerce like a number.
    """

    _INSTANCE = None

    def __new__(cls):
        if cls._INSTANCE is None:
            cls._INSTANCE = super().__new__(cls)
        return cls._INSTANCE

    def __repr__(self) -> str:
        return "indeterminate"


INDETERMINATE = Indeterminate()


def is_indeterminate(x) -> bool:
    """True when ``x`` is the indeterminate extended-real marker."""
    return isinstance(x, Indeterminate)


class NoClosedFormError(ValueError):
    """Requested closed form does not exist for the given distribution."""


@dataclass(frozen=True)
class MeasureValue:
    """An information measure with its provenance.

    ``value`` is an extended real (finite, +/-inf, or :data:`INDETERMINATE`);
    ``method`` records which route produced it; ``error_estimate`` is an
    absolute error bound (quadrature) or standard error (Monte Carlo), and
    exactly 0.0 for closed forms.
    """

    value: float
    method: str
    error_estimate: float = 0.0

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        if not is_indeterminate(self.value):
            object.__setattr__(self, "value", float(self.value))
        err = float(self.error_estimate)
        if not (err >= 0.0):
            raise ValueError(f"error_estimate must be nonnegative, got {err!r}")
        if self.method == "closed_form" and err != 0.0:
            raise ValueError("closed-form values carry no error estimate")
        object.__setattr__(self, "error_estimate", err)


def _check_n(n) -> int:
    if isinstance(n, bool) or not hasattr(n, "__index__") or int(n) < 1:
        raise ValueError(f"n must be an integer >= 1, got {n!r}")
    return int(n)


def _normalize_method(method: str) -> str:
    try:
        return _METHOD_ALIASES[method]
    except KeyError:
        raise ValueError(
            f"unknown method {method!r}; expected one of {sorted(set(_METHOD_ALIASES))}"
        ) from None


def _effective_xi(dist) -> float:
    return 0.0 if abs(dist.xi) < GUMBEL_XI_EPS else dist.xi


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------


def _shannon_closed(dist, n: int) -> float:
    th = dist.theta
    ln_n = math.log(n)
    if dist.family == "uniform":
        return 1.0 - ln_n - 1.0 / n + math.log(th)
    if dist.family == "exponential":
        return 1.0 - ln_n - 1.0 / n - math.log(th) + harmonic(n)
    if dist.family == "logistic":
        return 1.0 - ln_n - math.log(th) + harmonic(n)
    if dist.family == "pareto":
        nu = dist.nu
        return (
            1.0
            + ln_n / nu
            - 1.0 / n
            - math.log(nu / th)
            + ((nu + 1.0) / nu) * (harmonic(n) - ln_n)
        )
    if dist.family == "power_function":
        nu = dist.nu
        return 1.0 - ln_n - math.log(nu * th) - 1.0 / (nu * n)
    if dist.family == "gev":
        xi = _effective_xi(dist)
        return 1.0 + EULER_GAMMA + xi * EULER_GAMMA + xi * ln_n
    raise NoClosedFormError(f"no closed-form entropy for family {dist.family!r}")


def _extropy_closed(dist, n: int) -> float:
    th = dist.theta
    if dist.family == "uniform":
        return -(n * n) / (2.0 * (2.0 * n - 1.0) * th)
    if dist.family == "exponential":
        return -n * th / (4.0 * (2.0 * n - 1.0))
    if dist.family == "logistic":
        return -n * th / (4.0 * (2.0 * n + 1.0))
    if dist.family == "pareto":
        nu = dist.nu
        return -(nu * n * n / (2.0 * th)) * beta_function(2 * n - 1, (2.0 * nu + 1.0) / nu)
    if dist.family == "power_function":
        nu = dist.nu
        if 2.0 * n * nu <= 1.0:
            # The defining integral of f^2 diverges at the lower endpoint.
            return -math.inf
        return -(n * n * nu * nu * th) / (2.0 * (2.0 * n * nu - 1.0))
    if dist.family == "gev":
        xi = _effective_xi(dist)
        if xi <= -2.0:
            raise ValueError(
                f"extropy of the maximum is -inf for gev with xi <= -2 (got xi={dist.xi}); "
                "the closed form is valid only for xi > -2"
            )
        return -math.gamma(xi + 2.0) / (2.0 ** (xi + 3.0) * float(n) ** xi)
    raise NoClosedFormError(f"no closed-form extropy for family {dist.family!r}")


# ---------------------------------------------------------------------------
# Quadrature forms
# ---------------------------------------------------------------------------


def _shannon_quad(dist, n: int, tol: float) -> MeasureValue:
    def integrand(y: float) -> float:
        return n * y ** (n - 1) * math.log(dist_mod.density_quantile(dist, y))

    q = numerics.integrate_unit(integrand, abs_tol=tol)
    value = 1.0 - math.log(n) - 1.0 / n - q.value
    return MeasureValue(value, "quadrature", q.error_estimate)


def _extropy_quad(dist, n: int, tol: float) -> MeasureValue:
    half_n2 = 0.5 * n * n

    def integrand(t: float) -> float:
        return -half_n2 * t ** (2 * n - 2) * dist_mod.density_quantile(dist, t)

    q = numerics.integrate_unit(integrand, abs_tol=tol)
    return MeasureValue(q.value, "quadrature", q.error_estimate)


# ---------------------------------------------------------------------------
# Public measures
# ---------------------------------------------------------------------------


def shannon_max(
    dist,
    n: int,
    method: str = "closed_form",
    *,
    quad_tol: float = 1e-10,
    samples: int = 100_000,
    seed: int = 0,
) -> MeasureValue:
    """Shannon entropy H of the maximum of n i.i.d. draws from ``dist``.

    ``method`` selects the route: ``closed_form`` (exact per-family
    expression), ``quadrature`` (the density-quantile integral), or
    ``monte_carlo`` (plug-in estimate; ``samples`` and ``seed`` apply).
    The CLI short names closed/quad/mc are accepted as aliases.
    """
    n = _check_n(n)
    method = _normalize_method(method)
    if method == "closed_form":
        return MeasureValue(_shannon_closed(dist, n), "closed_form")
    if method == "quadrature":
        return _shannon_quad(dist, n, quad_tol)
    est = numerics.mc_entropy_max(dist, n, samples=samples, seed=seed)
    return MeasureValue(est.estimate, "monte_carlo", est.std_error)


def extropy_max(
    dist,
    n: int,
    method: str = "closed_form",
    *,
    quad_tol: float = 1e-10,
    samples: int = 100_000,
    seed: int = 0,
) -> MeasureValue:
    """Extropy J of the maximum of n i.i.d. draws from ``dist``.

    Same routes as :func:`shannon_max`.  For the gev family the closed form
    requires xi > -2; below that the measure is -inf and a domain error is
    raised instead of evaluating an invalid expression.
    """
    n = _check_n(n)
    method = _normalize_method(method)
    if method == "closed_form":
        return MeasureValue(_extropy_closed(dist, n), "closed_form")
    if method == "quadrature":
        return _extropy_quad(dist, n, quad_tol)
    est = numerics.mc_extropy_max(dist, n, samples=samples, seed=seed)
    return MeasureValue(est.estimate, "monte_carlo", est.std_error)


def shannon_limit(dist) -> float:
    """Limit of H(X_(n)) as n -> infinity, as an extended real."""
    th = dist.theta
    if dist.family == "uniform":
        return -math.inf
    if dist.family in ("exponential", "logistic"):
        return 1.0 - math.log(th) + EULER_GAMMA
    if dist.family == "pareto":
        return math.inf
    if dist.family == "power_function":
        return -math.inf
    if dist.family == "gev":
        xi = _effective_xi(dist)
        if xi > 0.0:
            return math.inf
        if xi < 0.0:
            return -math.inf
        return 1.0 + EULER_GAMMA
    raise ValueError(f"unknown family {dist.family!r}")


def extropy_limit(dist):
    """Limit of J(X_(n)) as n -> infinity, as an extended real.

    For the Pareto family the defining product is of the form 0 x (-inf)
    and the limit is reported as :data:`INDETERMINATE`; the closed-form
    sequence itself increases to 0 from below.
    """
    th = dist.theta
    if dist.family == "uniform":
        return -math.inf
    if dist.family in ("exponential", "logistic"):
        return -th / 8.0
    if dist.family == "pareto":
        return INDETERMINATE
    if dist.family == "power_function":
        return -math.inf
    if dist.family == "gev":
        xi = _effective_xi(dist)
        if xi > 0.0:
            return -0.0
        if xi < 0.0:
            return -math.inf
        return -0.125
    raise ValueError(f"unknown family {dist.family!r}")


def shannon_normalized(
    dist,
    n: int,
    method: str = "closed_form",
    *,
    norming=None,
    quad_tol: float = 1e-10,
    samples: int = 100_000,
    seed: int = 0,
) -> MeasureValue:
    """Entropy of the normalized maximum (X_(n) - b_n)/a_n.

    Equal to -ln a_n + H(X_(n)); the centering b_n never enters.  ``norming``
    overrides the catalog's norming constants (only its ``a_n`` matters).
    """
    if norming is None:
        from . import evt

        norming = evt.norming_constants(dist, n)
    base = shannon_max(dist, n, method, quad_tol=quad_tol, samples=samples, seed=seed)
    return MeasureValue(base.value - math.log(norming.a_n), base.method, base.error_estimate)


def extropy_normalized(
    dist,
    n: int,
    method: str = "closed_form",
    *,
    norming=None,
    quad_tol: float = 1e-10,
    samples: int = 100_000,
    seed: int = 0,
) -> MeasureValue:
    """Extropy of the normalized maximum (X_(n) - b_n)/a_n.

    Equal to a_n * J(X_(n)); the centering b_n never enters.
    """
    if norming is None:
        from . import evt

        norming = evt.norming_constants(dist, n)
    base = extropy_max(dist, n, method, quad_tol=quad_tol, samples=samples, seed=seed)
    return MeasureValue(
        norming.a_n * base.value, base.method, norming.a_n * base.error_estimate
    )


def crosscheck(dist, n: int, *, quad_tol: float = 1e-10) -> dict:
    """Closed form vs quadrature for both measures, with absolute gaps.

    Returns a dict with keys h_closed, h_quad, h_gap, j_closed, j_quad,
    j_gap.  Used by the table reproduction command and the verification
    suite.
    """
    h_closed = shannon_max(dist, n, "closed_form").value
    h_quad = shannon_max(dist, n, "quadrature", quad_tol=quad_tol).value
    j_closed = extropy_max(dist, n, "closed_form").value
    j_quad = extropy_max(dist, n, "quadrature", quad_tol=quad_tol).value
    return {
        "h_closed": h_closed,
        "h_quad": h_quad,
        "h_gap": abs(h_closed - h_quad),
        "j_closed": j_closed,
        "j_quad": j_quad,
        "j_gap": abs(j_closed - j_quad),
    }
