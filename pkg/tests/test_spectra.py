import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from copspec import (Circle, ClosedDisc, LFTMap, ParabolicArcClosure,
                     SpaceParams, contains, distance, normalize_conjugation,
                     sample_set, spectral_radius, spectrum)
from copspec.errors import IdentityMapError
from copspec.verification import random_bounded_map

HARDY = SpaceParams.hardy()
B0 = SpaceParams.bergman(0.0)


class TestSpectrum:
    def test_parabolic_arc(self):
        s = spectrum(HARDY, LFTMap(1.0, 1j))
        assert s == ParabolicArcClosure(1j)
        assert contains(s, 0.0) and contains(s, 1.0) and contains(s, 0.5)

    def test_hyperbolic_automorphism_circle(self):
        s = spectrum(B0, LFTMap(0.25, 0.0))
        assert s == Circle(4.0)

    def test_hyperbolic_non_automorphism_disc(self):
        s = spectrum(B0, LFTMap(2.0, 1j))
        assert s == ClosedDisc(0.5)

    def test_dirichlet_disc(self):
        s = spectrum(SpaceParams.dirichlet(1.0), LFTMap(4.0, 1j))
        assert s == ClosedDisc(0.5)

    def test_essential_flag_is_documentation(self):
        m = LFTMap(2.0, 1j)
        assert spectrum(B0, m, essential=True) == spectrum(B0, m)

    def test_identity_rejected(self):
        with pytest.raises(IdentityMapError):
            spectrum(B0, LFTMap(1.0, 0.0, allow_identity=True))


class TestRadius:
    def test_examples(self):
        assert spectral_radius(HARDY, LFTMap(1.0, 1.0 + 1j)) == 1.0
        assert spectral_radius(HARDY, LFTMap(0.25, 0.0)) == pytest.approx(2.0)
        assert spectral_radius(SpaceParams.bergman(2.0), LFTMap(2.0, 1j)) == \
            pytest.approx(0.25)

    def test_matches_sampled_maximum(self):
        rng = np.random.default_rng(11)
        spaces = [HARDY, B0, SpaceParams.bergman(2.5), SpaceParams.dirichlet(0.5)]
        for _ in range(40):
            m = random_bounded_map(rng)
            space = spaces[int(rng.integers(0, len(spaces)))]
            r = spectral_radius(space, m)
            top = max(abs(p) for p in sample_set(spectrum(space, m), 48))
            assert abs(top - r) <= 1e-12 * max(1.0, r)


class TestContains:
    def test_arc_examples(self):
        assert contains(ParabolicArcClosure(1j), 0.5)
        assert contains(ParabolicArcClosure(1.0 + 1j), np.exp(1j - 1.0))
        assert not contains(Circle(2.0), 1.999, 1e-6)

    def test_arc_edge_points(self):
        arc = ParabolicArcClosure(1j)
        assert contains(arc, 0.0) and contains(arc, 1.0)
        assert not contains(arc, 1.1, 1e-6)
        assert not contains(arc, 0.5j, 1e-6)
        real_arc = ParabolicArcClosure(2.0)
        assert contains(real_arc, 1j) and not contains(real_arc, 0.0, 1e-6)

    def test_disc_and_circle(self):
        assert contains(ClosedDisc(2.0), 1.999)
        assert contains(ClosedDisc(2.0), 2.0 + 5e-10)
        assert not contains(ClosedDisc(2.0), 2.1, 1e-6)
        assert contains(Circle(1.0), np.exp(0.3j))


class TestSamples:
    def test_circle_four_points(self):
        pts = sample_set(Circle(1.0), 4)
        assert np.allclose(pts, [1.0, 1j, -1.0, -1j], atol=1e-15)

    def test_arc_monotone_moduli(self):
        pts = sample_set(ParabolicArcClosure(1j), 7)
        mods = np.abs(pts)
        assert pts[0] == 1.0
        assert pts[-1] == 0.0
        assert np.all(np.diff(mods) < 0)

    def test_disc_includes_origin_and_boundary(self):
        pts = sample_set(ClosedDisc(2.0), 9)
        mods = np.abs(pts)
        assert mods.max() == pytest.approx(2.0, abs=1e-14)
        assert mods.min() == 0.0
        assert len(pts) == 9

    @given(st.sampled_from(["circle", "disc", "arc", "real_arc"]),
           st.integers(min_value=1, max_value=64))
    @settings(max_examples=40, deadline=None)
    def test_emitted_points_pass_contains(self, kind, n):
        s = {"circle": Circle(1.7), "disc": ClosedDisc(0.8),
             "arc": ParabolicArcClosure(0.5 + 0.7j),
             "real_arc": ParabolicArcClosure(-2.0)}[kind]
        pts = sample_set(s, n)
        assert len(pts) == n
        assert all(contains(s, p, 1e-9) for p in pts)


class TestSetIdentities:
    def test_dirichlet_is_scaled_bergman(self):
        rng = np.random.default_rng(5)
        for alpha in (0.0, 1.0, 2.0):
            for _ in range(3):
                m = random_bounded_map(rng)
                d_set = spectrum(SpaceParams.dirichlet(alpha), m)
                b_set = spectrum(SpaceParams.bergman(alpha), m)
                assert all(contains(d_set, m.mu * lam, 1e-9)
                           for lam in sample_set(b_set, 50))
                assert all(contains(b_set, lam / m.mu, 1e-9)
                           for lam in sample_set(d_set, 50))

    def test_conjugation_invariance(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            m = random_bounded_map(rng)
            canonical = normalize_conjugation(m).canonical
            assert spectrum(B0, m) == spectrum(B0, canonical)

    def test_inverse_reciprocal_law(self):
        m = LFTMap(0.5, 1.5)
        s = spectrum(B0, m)
        s_inv = spectrum(B0, m.inverse())
        assert s_inv == Circle(pytest.approx(1.0 / 2.0))
        for lam in sample_set(s, 36):
            assert contains(s_inv, 1.0 / lam, 1e-9)
        for lam in sample_set(s_inv, 36):
            assert contains(s, 1.0 / lam, 1e-9)


class TestDistance:
    def test_circle_and_disc(self):
        assert distance(Circle(1.0), 2.0) == pytest.approx(1.0)
        assert distance(ClosedDisc(1.0), 0.5j) == 0.0
        assert distance(ClosedDisc(1.0), 3.0) == pytest.approx(2.0)

    def test_arc_distance(self):
        arc = ParabolicArcClosure(1j)  # the segment [0, 1]
        assert distance(arc, 0.5) <= 1e-6
        assert distance(arc, 0.5 + 0.5j) == pytest.approx(0.5, abs=1e-6)
        assert distance(arc, -0.25) == pytest.approx(0.25, abs=1e-6)
        spiral = ParabolicArcClosure(1.0 + 0.2j)
        lam = np.exp(1j * (1.0 + 0.2j) * 2.5)
        assert distance(spiral, lam) <= 1e-6
