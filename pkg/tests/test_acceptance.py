"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Every tolerance is pinned here; run with ``pytest -s tests/test_acceptance.py``
to see the per-criterion lines.
"""

import math

import numpy as np
import pytest

import copspec as cs
from copspec.verification import _reproducing_cases, random_bounded_map


def _report(criterion: str, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"{criterion}: {detail}"


def space_for(alpha: float) -> cs.SpaceParams:
    return cs.SpaceParams.hardy() if alpha == -1.0 else cs.SpaceParams.bergman(alpha)


def test_criterion_1_constants_oracle():
    corrected_ok, printed_documented = True, True
    for alpha in (-0.5, 0.0, 1.0, 2.5):
        report = cs.check_constants(cs.SpaceParams.bergman(alpha))
        corrected_ok = corrected_ok and report.corrected.all_ok
        if alpha == 0.0:
            printed_documented = (not report.printed.positivity_ok
                                  and not report.printed.roundtrip_ok)
    _report("1 (constants oracle)", corrected_ok and printed_documented,
            "corrected sets pass all three oracles; printed alpha=0 set fails "
            "positivity and round-trip as documented")


def test_criterion_2_reproducing_property():
    worst = 0.0
    for alpha in (-1.0, 0.0, 1.0):
        space = space_for(alpha)
        rng = np.random.default_rng(42)
        for F, w0 in _reproducing_cases(space, 20, rng):
            pairing = cs.inner_product(space, F, cs.Kernel(space, w0))
            target = complex(F(w0))
            err = abs(complex(pairing.value) - target) / (1.0 + abs(target))
            worst = max(worst, err)
    _report("2 (reproducing property)", worst <= 1e-5,
            f"20 cases per alpha in (-1, 0, 1); worst error {worst:.2e} <= 1e-5")


def test_criterion_3_paley_wiener_isometry():
    worst = 0.0
    for alpha in (-1.0, 0.0, 1.0, 2.5):
        space = space_for(alpha)
        pairs = cs.exact_pairs(space)
        assert len(pairs) == 10
        for pair in pairs:
            report = cs.isometry_report(space, pair)
            worst = max(worst, report.relative_error)
    _report("3 (Paley-Wiener isometry)", worst <= 1e-5,
            f"10 pairs per alpha; worst relative error {worst:.2e} <= 1e-5")


def test_criterion_4_parabolic_spectrum():
    space = cs.SpaceParams.bergman(0.0)
    ok, details = True, []
    for shift in (1.0, 1j, 1.0 + 1j):
        spectral_set = cs.ParabolicArcClosure(shift)
        size = int(math.ceil(math.log(30.0 / 1e-4) / math.log(1.001)))
        grid = cs.LogGrid(1e-4, 1.001, size)
        op = cs.build_truncation(cs.Multiplication(shift), space, grid)
        bounds = cs.symbol_oscillation_bounds(grid, shift)

        # every diagonal entry sits within the bin oscillation of the
        # symbol curve (hence of the spectral set)
        edges = grid.edges
        mid = 0.5 * (edges[:-1] + edges[1:])
        curve = np.exp(1j * complex(shift) * mid)
        entries_ok = bool(np.all(np.abs(op.diagonal - curve)
                                 <= bounds * (1 + 1e-9) + 1e-15))

        # 50 points off the set: resolvent lower bound up to the worst
        # bin oscillation (plus the distance-helper resolution)
        osc_max = float(np.max(bounds))
        lams = np.concatenate([1.5 * np.exp(2j * np.pi * np.arange(25) / 25),
                               3.0 * np.exp(2j * np.pi * np.arange(25) / 25)])
        sigmas = cs.min_singular_grid(op, lams)
        resolvent_ok = all(
            sigma >= cs.distance(spectral_set, lam) - osc_max - 1e-6
            for sigma, lam in zip(sigmas, lams))

        # defect ratios decrease monotonically below 0.02 by n = 10^4
        n_grid = np.arange(1, 10001)
        ratios = cs.parabolic_weyl_ratio(space, shift, 0.0, n_grid)
        weyl_ok = bool(np.all(np.diff(ratios) < 0.0) and ratios[-1] < 0.02)

        ok = ok and entries_ok and resolvent_ok and weyl_ok
        details.append(f"shift={shift}: entries {entries_ok}, resolvent "
                       f"{resolvent_ok}, weyl {weyl_ok} (final {ratios[-1]:.1e})")
    _report("4 (parabolic spectrum)", ok, "; ".join(details))


def test_criterion_5_hyperbolic_automorphism():
    worst_norm, structure_ok = 0.0, True
    worst_weyl = 0.0
    for alpha in (-1.0, 0.0, 1.0):
        space = space_for(alpha)
        for mu in (0.5, 0.25):
            grid = cs.LogGrid.for_slope(mu, size=64, steps=2)
            op = cs.build_truncation(cs.ScaledDilation(mu), space, grid)
            scale = mu ** (-(alpha + 2.0) / 2.0)
            m = grid.shift_steps
            expected = scale * np.diag(np.ones(64 - m), k=m)
            structure_ok = structure_ok and np.array_equal(op.matrix, expected)
            worst_norm = max(worst_norm,
                             abs(cs.operator_norm_estimate(op) - scale))
            for n in (100, 1000):
                lam_sq = mu ** (-(alpha + 2.0))
                closed = math.sqrt(-2.0 * lam_sq * math.log(mu) / n)
                got = cs.hyperbolic_weyl_ratio(space, mu, 1.3, n)
                worst_weyl = max(worst_weyl, abs(got - closed))
    example = cs.hyperbolic_weyl_ratio(cs.SpaceParams.hardy(), 0.5, 0.0, 100)
    example_ok = abs(example - 0.16651) <= 1e-5

    inverse_ok = True
    for alpha in (-1.0, 0.0, 1.0):
        space = space_for(alpha)
        m = cs.LFTMap(0.5, 0.0)
        s = cs.spectrum(space, m)
        s_inv = cs.spectrum(space, m.inverse())
        for lam in cs.sample_set(s, 100):
            inverse_ok = inverse_ok and cs.contains(s_inv, 1.0 / lam, 1e-9)

    ok = (structure_ok and worst_norm <= 1e-10 and worst_weyl <= 1e-12
          and example_ok and inverse_ok)
    _report("5 (hyperbolic automorphism)", ok,
            f"exact shift structure {structure_ok}; norm defect {worst_norm:.1e}"
            f" <= 1e-10; weyl defect {worst_weyl:.1e} <= 1e-12; example "
            f"{example:.5f} ~ 0.16651; inverse correspondence {inverse_ok}")


def test_criterion_6_hyperbolic_non_automorphism():
    mu = 0.5
    eigen_ok, coverage = True, []
    for alpha in (-1.0, 0.0, 1.0):
        space = space_for(alpha)
        radius = mu ** ((alpha + 2.0) / 2.0)
        moduli = []
        for delta in (0.05, 0.35, 1.0, 2.0, 3.5):
            p = -(alpha + 2.0) / 2.0 + delta
            for q in (0.0, -2.0, 3.0, 7.0):
                residual = cs.eigenfunction_residual(space, mu, p, q)
                eigen_ok = eigen_ok and residual <= 1e-12
                ev = cs.eigenfunction_eigenvalue(space, mu, p, q)
                eigen_ok = eigen_ok and cs.contains(cs.ClosedDisc(radius), ev, 1e-12)
                moduli.append(abs(ev))
        moduli = np.sort(moduli)
        coverage.append(moduli[-1] >= 0.95 * radius and moduli[0] <= 0.1 * radius)

    worst_adjoint = 0.0
    for alpha in (-1.0, 0.0, 1.0):
        space = space_for(alpha)
        for mu_a, z1, z2 in ((0.5, 0.4 + 1.2j, -0.3 + 0.9j),
                             (0.25, 1j, 0.5 + 1.5j)):
            from copspec.verification import adjoint_identity_error
            _, _, err = adjoint_identity_error(space, mu_a, z1, z2)
            worst_adjoint = max(worst_adjoint, err)

    ok = eigen_ok and all(coverage) and worst_adjoint <= 1e-5
    _report("6 (hyperbolic non-automorphism)", ok,
            f"20-point (p, q) residuals <= 1e-12: {eigen_ok}; moduli span the "
            f"disc: {all(coverage)}; adjoint defect {worst_adjoint:.1e} <= 1e-5")


def test_criterion_7_dirichlet_scaling():
    test_maps = [cs.LFTMap(0.5, 1.0), cs.LFTMap(2.0, 0.3 + 1j),
                 cs.LFTMap(0.25, 2j), cs.LFTMap(4.0, 1.0 + 1j),
                 cs.LFTMap(1.0, 1.0 + 1j)]
    ok = True
    for alpha in (0.0, 1.0, 2.0):
        for m in test_maps:
            d_set = cs.spectrum(cs.SpaceParams.dirichlet(alpha), m)
            b_set = cs.spectrum(cs.SpaceParams.bergman(alpha), m)
            for lam in cs.sample_set(b_set, 100):
                ok = ok and cs.contains(d_set, m.mu * lam, 1e-9)
            for lam in cs.sample_set(d_set, 100):
                ok = ok and cs.contains(b_set, lam / m.mu, 1e-9)
    _report("7 (Dirichlet set identity)", ok,
            "200 bidirectional samples at tol 1e-9 for 5 maps x alpha in "
            "(0, 1, 2)")


def test_criterion_8_radius_law():
    rng = np.random.default_rng(2024)
    spaces = [cs.SpaceParams.hardy(), cs.SpaceParams.bergman(0.0),
              cs.SpaceParams.bergman(1.0), cs.SpaceParams.bergman(2.5),
              cs.SpaceParams.dirichlet(0.5), cs.SpaceParams.dirichlet(2.0)]
    worst = 0.0
    for _ in range(100):
        m = random_bounded_map(rng)
        space = spaces[int(rng.integers(0, len(spaces)))]
        radius = cs.spectral_radius(space, m)
        top = max(abs(p) for p in cs.sample_set(cs.spectrum(space, m), 64))
        worst = max(worst, abs(top - radius) / max(1.0, radius))
    _report("8 (radius law)", worst <= 1e-12,
            f"100 random maps; worst defect {worst:.2e} <= 1e-12")
