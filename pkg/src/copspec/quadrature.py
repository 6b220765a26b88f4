"""Brute-force quadrature engines used as numerical oracles.

Every routine returns a :class:`QuadResult` carrying the value together
with an error estimate obtained from the last domain doubling plus one
node-density refinement.  The integrands handled here are smooth members
of the closed-form family, so composite Gauss-Legendre panels after a
decay-taming substitution (sinh on lines, log on half-lines and in the
weight direction) converge quickly.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, NamedTuple

import numpy as np

from .errors import NonConvergentError


class QuadResult(NamedTuple):
    value: complex
    error: float

    def __complex__(self) -> complex:
        return complex(self.value)


@lru_cache(maxsize=64)
def gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [-1, 1], cached per order."""
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return nodes, weights


def panel_rule(a: float, b: float, panel_width: float, order: int) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre rule for [a, b] with panels of roughly
    ``panel_width``.  Returns flat node and weight arrays."""
    n_panels = max(1, int(np.ceil((b - a) / panel_width)))
    edges = np.linspace(a, b, n_panels + 1)
    x, w = gauss_legendre(order)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def weight_integral(a: float, b: float, beta: float) -> float:
    """Exact value of the weight integral of t**(-beta) over [a, b], 0 < a <= b."""
    if not 0.0 < a <= b:
        raise ValueError("interval must satisfy 0 < a <= b")
    if beta == 1.0:
        return float(np.log(b / a))
    p = 1.0 - beta
    return float((b**p - a**p) / p)


class _Stabilized(NamedTuple):
    value: complex
    error: float
    level: int


def _stabilize(evaluate: Callable[[int], complex], rtol: float, atol: float,
               max_level: int, what: str) -> _Stabilized:
    """Call ``evaluate`` with growing level until two consecutive values agree."""
    previous = evaluate(0)
    for level in range(1, max_level + 1):
        current = evaluate(level)
        change = abs(current - previous)
        if change <= max(rtol * abs(current), atol):
            return _Stabilized(current, change, level)
        previous = current
    raise NonConvergentError(f"{what} did not stabilize after {max_level} refinements")


def integrate_line(f: Callable[[np.ndarray], np.ndarray], y: float,
                   center: float = 0.0, scale: float = 1.0,
                   rtol: float = 1e-9, atol: float = 1e-14) -> QuadResult:
    """Integrate f along the horizontal line Im w = y.

    Substitutes x = center + scale*sinh(u) so that algebraic tails of the
    integrand become exponentially small in u; the u-range is doubled
    until the value is stable, then the node density is doubled once for
    the error estimate.
    """

    def pass_value(u_max: float, density: float) -> complex:
        u, wu = panel_rule(-u_max, u_max, 1.0 / density, 16)
        x = center + scale * np.sinh(u)
        jac = scale * np.cosh(u)
        vals = f(x + 1j * y)
        return complex(np.sum(vals * jac * wu))

    stable = _stabilize(lambda lvl: pass_value(12.0 * 2.0**lvl, 1.0),
                        rtol, atol, 5, "line integral")
    fine = pass_value(12.0 * 2.0**stable.level, 2.0)
    return QuadResult(fine, stable.error + abs(fine - stable.value))


def integrate_halfplane(f: Callable[[np.ndarray], np.ndarray], alpha: float,
                        center: float = 0.0, scale: float = 1.0,
                        rtol: float = 1e-8, atol: float = 1e-14) -> QuadResult:
    """Integrate f(w) * (Im w)**alpha over the upper half-plane, alpha > -1.

    Tensor Gauss-Legendre panels in coordinates (u, v) with
    x = center + scale*sinh(u) and y = exp(v).  The v-range grows faster
    than the u-range under doubling because the weight direction decays
    like exp(-(alpha+1)|v|) near y = 0 while the sinh substitution makes
    horizontal tails exponentially small almost immediately.  The error
    estimate combines the last doubling with one quadrature-order bump.
    """
    if alpha <= -1.0:
        raise ValueError("half-plane weight requires alpha > -1")

    # Below y = exp(-v_neg) the weighted mass is bounded by a constant
    # times exp(-(alpha+1) v_neg); size it once so only the outgoing
    # directions (large |x|, large y) need doubling.
    v_neg = 40.0 / (alpha + 1.0)

    def pass_value(u_max: float, v_pos: float, bump: int) -> complex:
        u, wu = panel_rule(-u_max, u_max, 1.0, 14 + bump)
        v, wv = panel_rule(-v_neg, v_pos, 0.75, 12 + bump)
        x = center + scale * np.sinh(u)
        jac_u = scale * np.cosh(u) * wu
        y = np.exp(v)
        # dy = y dv, so the weight y**alpha contributes y**(alpha+1)
        jac_v = np.exp((alpha + 1.0) * v) * wv
        vals = f(x[:, None] + 1j * y[None, :])
        return complex(jac_u @ vals @ jac_v)

    def spans(level: int) -> tuple[float, float]:
        # cap the upward range: (alpha+1)*64 stays far from overflow and
        # square-integrable members have negligible mass beyond it
        return min(12.0 * 2.0**level, 96.0), min(16.0 * 2.0**level, 64.0)

    stable = _stabilize(lambda lvl: pass_value(*spans(lvl), 0),
                        rtol, atol, 4, "half-plane integral")
    fine = pass_value(*spans(stable.level), 6)
    return QuadResult(fine, stable.error + abs(fine - stable.value))


def integrate_hardy_line(f: Callable[[np.ndarray], np.ndarray],
                         center: float = 0.0, scale: float = 1.0,
                         rtol: float = 1e-8, atol: float = 1e-14) -> QuadResult:
    """Boundary limit of line integrals for the Hardy pairing.

    Evaluates the line integral at heights y = 2**-k, descending until two
    consecutive values agree; for the closed-form family the limit equals
    the supremum over horizontal lines.
    """
    previous: complex | None = None
    for k in range(0, 42):
        res = integrate_line(f, 2.0**-k, center=center, scale=scale,
                             rtol=rtol * 0.1, atol=atol)
        if previous is not None:
            change = abs(res.value - previous)
            if change <= max(rtol * abs(res.value), atol):
                return QuadResult(res.value, change + res.error)
        previous = res.value
    raise NonConvergentError("Hardy line integrals did not stabilize as y -> 0")


def integrate_disc(f: Callable[[np.ndarray], np.ndarray], alpha: float,
                   rtol: float = 1e-8, atol: float = 1e-14) -> QuadResult:
    """Integrate f(z) * (1-|z|^2)**alpha over the unit disc, alpha > -1.

    Angular direction uses the trapezoid rule (spectrally accurate for
    periodic integrands); the radial direction substitutes
    s = log(1 - r^2), which turns the boundary weight into exp((alpha+1)s).
    """
    if alpha <= -1.0:
        raise ValueError("disc weight requires alpha > -1")

    def pass_value(s_max: float, n_theta: int, density: float) -> complex:
        s, ws = panel_rule(-s_max, 0.0, 0.5 / density, 12)
        r = np.sqrt(-np.expm1(s))
        # offset angles by a half step: deep radial nodes round to r = 1
        # and a node exactly at z = 1 would hit boundary singularities
        theta = (np.arange(n_theta) + 0.5) * (2.0 * np.pi / n_theta)
        z = r[:, None] * np.exp(1j * theta[None, :])
        vals = f(z)
        # r dr = -exp(s) ds / 2; weight (1-r^2)^alpha = exp(alpha*s)
        radial = 0.5 * np.exp((alpha + 1.0) * s) * ws
        return complex((radial @ vals).sum() * (2.0 * np.pi / n_theta))

    stable = _stabilize(lambda lvl: pass_value(24.0 * 2.0**lvl, 64 * 2**lvl, 1.0),
                        rtol, atol, 4, "disc integral")
    fine = pass_value(24.0 * 2.0**stable.level, 64 * 2**stable.level, 1.6)
    return QuadResult(fine, stable.error + abs(fine - stable.value))


def integrate_disc_boundary(f: Callable[[np.ndarray], np.ndarray],
                            rtol: float = 1e-8, atol: float = 1e-14) -> QuadResult:
    """Hardy pairing on the disc: mean of f over circles r -> 1."""

    def circle_mean(r: float, n_theta: int) -> complex:
        theta = (np.arange(n_theta) + 0.5) * (2.0 * np.pi / n_theta)
        return complex(np.mean(f(r * np.exp(1j * theta))))

    previous: complex | None = None
    for k in range(1, 40):
        r = 1.0 - 2.0**-k
        n_theta, val = 256, circle_mean(1.0 - 2.0**-k, 256)
        while True:
            refined = circle_mean(r, 2 * n_theta)
            if abs(refined - val) <= max(0.1 * rtol * abs(refined), atol):
                val = refined
                break
            val, n_theta = refined, 2 * n_theta
            if n_theta > 2**17:
                raise NonConvergentError("disc boundary mean did not converge in angle")
        if previous is not None:
            change = abs(val - previous)
            if change <= max(rtol * abs(val), atol):
                return QuadResult(val, change)
        previous = val
    raise NonConvergentError("disc boundary means did not stabilize as r -> 1")


def integrate_halfline(f: Callable[[np.ndarray], np.ndarray],
                       decay_rate: float,
                       osc_rate: float = 0.0,
                       rtol: float = 1e-9, atol: float = 1e-15) -> QuadResult:
    """Integrate f over (0, infinity) for integrands decaying like
    exp(-decay_rate * t) with oscillation frequency at most osc_rate.

    Splits at t = 1: the left part substitutes t = exp(-u) to tame
    integrable power singularities at 0, the right part uses linear
    panels sized against the oscillation, with the truncation point
    doubled until stable.
    """
    if decay_rate <= 0.0:
        raise NonConvergentError("half-line integrand has no exponential decay")

    def left(u_max: float, density: float) -> complex:
        u, wu = panel_rule(0.0, u_max, 1.0 / density, 16)
        t = np.exp(-u)
        return complex(np.sum(f(t) * t * wu))

    def right(t_max: float, density: float) -> complex:
        width = min(1.0, 3.0 / (1.0 + abs(osc_rate))) / density
        t, wt = panel_rule(1.0, t_max, width, 16)
        return complex(np.sum(f(t) * wt))

    def evaluate(level: int) -> complex:
        u_max = 24.0 * 2.0**level
        t_max = 1.0 + (8.0 / decay_rate) * 2.0**level
        return left(u_max, 1.0) + right(t_max, 1.0)

    stable = _stabilize(evaluate, rtol, atol, 6, "half-line integral")
    u_max = 24.0 * 2.0**stable.level
    t_max = 1.0 + (8.0 / decay_rate) * 2.0**stable.level
    fine = left(u_max, 2.0) + right(t_max, 2.0)
    return QuadResult(fine, stable.error + abs(fine - stable.value))
