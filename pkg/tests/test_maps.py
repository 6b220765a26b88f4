import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from copspec import (InversePower, Kernel, LFTMap, MapKind, Multiplication,
                     ScaledDilation, SpaceParams, SynthesizedFunction,
                     adjoint_descriptor, angular_derivative_infinity,
                     apply_composition, apply_descriptor, classify,
                     fourier_descriptor, indicator, kernel_density,
                     normalize_conjugation, synthesize)
from copspec.errors import (IdentityMapError, NotBoundedError,
                            NotCanonicalError, NotSelfMapError, WrongFormError)
from copspec.fourier import PowerExp
from copspec.verification import adjoint_identity_error

HARDY = SpaceParams.hardy()
B0 = SpaceParams.bergman(0.0)

valid_mu = st.floats(min_value=0.05, max_value=20.0).filter(lambda m: abs(m - 1.0) > 1e-3)
real_part = st.floats(min_value=-5.0, max_value=5.0)
# either a genuine automorphism or a well-separated non-automorphism; the
# conjugation is ill-conditioned for vanishingly small imaginary parts
imag_part = st.one_of(st.just(0.0), st.floats(min_value=1e-6, max_value=5.0))


class TestLFTMap:
    def test_validation(self):
        with pytest.raises(NotSelfMapError):
            LFTMap(-2.0, 0.0)
        with pytest.raises(NotSelfMapError):
            LFTMap(1.0, -1j)
        with pytest.raises(IdentityMapError):
            LFTMap(1.0, 0.0)

    def test_from_coefficients(self):
        m = LFTMap.from_coefficients(1.0, 3.0, 0.0, 2.0)
        assert m.mu == 0.5 and m.shift == 1.5
        with pytest.raises(NotBoundedError, match="fix infinity"):
            LFTMap.from_coefficients(1.0, 0.0, 1.0, 1.0)
        with pytest.raises(NotBoundedError, match="positive real"):
            LFTMap.from_coefficients(1j, 0.0, 0.0, 1.0)
        with pytest.raises(NotBoundedError, match="positive real"):
            LFTMap.from_coefficients(-1.0, 0.0, 0.0, 1.0)
        with pytest.raises(NotSelfMapError):
            LFTMap.from_coefficients(1.0, -1j, 0.0, 1.0)
        with pytest.raises(ValueError):
            LFTMap.from_coefficients(1.0, 2.0, 0.0, 0.0)

    def test_inverse_only_for_automorphisms(self):
        m = LFTMap(2.0, 3.0)
        inv = m.inverse()
        assert inv.mu == 0.5 and inv.shift == -1.5
        with pytest.raises(NotSelfMapError):
            LFTMap(2.0, 1j).inverse()


class TestClassify:
    def test_parabolic_automorphism(self):
        cls = classify(LFTMap(1.0, 3.0))
        assert cls.kind is MapKind.PARABOLIC_AUTOMORPHISM
        assert cls.finite_fixed_point is None
        assert cls.finite_attractive is None

    def test_contracting_non_automorphism(self):
        cls = classify(LFTMap(0.5, 2j))
        assert cls.kind is MapKind.HYPERBOLIC_NON_AUTOMORPHISM
        assert cls.finite_fixed_point == pytest.approx(4j)
        assert cls.finite_attractive is True
        assert cls.infinity_attractive is False

    def test_expanding_automorphism(self):
        cls = classify(LFTMap(3.0, 0.0))
        assert cls.kind is MapKind.HYPERBOLIC_AUTOMORPHISM
        assert cls.finite_fixed_point == 0.0
        assert cls.finite_attractive is False
        assert cls.infinity_attractive is True

    def test_angular_derivative(self):
        assert angular_derivative_infinity(LFTMap(2.0, 1j)) == 0.5
        assert angular_derivative_infinity(LFTMap(1.0, 1.0)) == 1.0
        assert angular_derivative_infinity(LFTMap(0.25, 0.0)) == 4.0

    @given(valid_mu, real_part, imag_part)
    @settings(max_examples=60, deadline=None)
    def test_fixed_point_law(self, mu, re, im):
        m = LFTMap(mu, complex(re, im))
        cls = classify(m)
        p = cls.finite_fixed_point
        assert complex(m(p)) == pytest.approx(p, abs=1e-9 * (1 + abs(p)))
        # the derivatives at the two fixed points are reciprocal
        assert mu * angular_derivative_infinity(m) == pytest.approx(1.0, rel=1e-15)
        assert cls.finite_attractive == (mu < 1.0)
        assert cls.infinity_attractive == (mu > 1.0)


class TestNormalize:
    def test_automorphism_example(self):
        n = normalize_conjugation(LFTMap(0.5, 1.0))
        assert n.canonical == LFTMap(0.5, 0.0)
        assert n.conjugator.mu == 1.0 and n.conjugator.shift == 2.0
        rebuilt = n.conjugator.compose(n.canonical).compose(n.conjugator.inverse())
        assert rebuilt.mu == 0.5 and rebuilt.shift == pytest.approx(1.0)

    def test_expanding_example_identity_conjugator(self):
        n = normalize_conjugation(LFTMap(2.0, 1j))
        assert n.canonical.mu == 2.0 and n.canonical.shift == 1j
        assert n.conjugator.is_identity

    def test_contracting_example(self):
        n = normalize_conjugation(LFTMap(0.5, 1j))
        assert n.canonical == LFTMap(0.5, 0.5j)
        assert n.conjugator.mu == 2.0 and n.conjugator.shift == 0.0

    def test_parabolic_unchanged(self):
        m = LFTMap(1.0, 2.0 + 1j)
        n = normalize_conjugation(m)
        assert n.canonical == m and n.conjugator.is_identity

    @given(valid_mu, real_part, imag_part)
    @settings(max_examples=100, deadline=None)
    def test_roundtrip_machine_precision(self, mu, re, im):
        m = LFTMap(mu, complex(re, im))
        n = normalize_conjugation(m)
        rebuilt = n.conjugator.compose(n.canonical).compose(n.conjugator.inverse())
        scale = 1.0 + abs(m.shift) + m.mu
        assert abs(rebuilt.mu - m.mu) <= 1e-12 * scale
        assert abs(rebuilt.shift - m.shift) <= 1e-12 * scale


class TestDescriptors:
    def test_translation_symbol(self):
        desc = fourier_descriptor(LFTMap(1.0, 1j), HARDY)
        assert isinstance(desc, Multiplication)
        assert desc.symbol(1.0) == pytest.approx(math.exp(-1.0))
        unimodular = fourier_descriptor(LFTMap(1.0, 1.0), HARDY)
        assert np.allclose(np.abs(unimodular.symbol(np.linspace(0, 50, 64))), 1.0)

    def test_dilation_on_indicator(self):
        desc = fourier_descriptor(LFTMap(0.5, 0.0), HARDY)
        assert isinstance(desc, ScaledDilation)
        image = apply_descriptor(desc, indicator(1.0, 2.0))
        assert image.support == (0.5, 1.0)
        assert image.coefficient == pytest.approx(2.0)
        assert image.power == 0.0

    def test_non_canonical_rejected(self):
        with pytest.raises(NotCanonicalError):
            fourier_descriptor(LFTMap(0.5, 0.5j), HARDY)

    @pytest.mark.parametrize("shift", [1.0, 1j, 1.0 + 1j])
    def test_multiplication_intertwines(self, shift):
        w_points = (0.3 + 0.9j, -1.0 + 0.5j, 2j)
        densities = [PowerExp(1.0, 0.0, -1.0), PowerExp(0.5 - 0.5j, 1.5, -0.5),
                     indicator(0.5, 2.0), kernel_density(B0, 1j)]
        desc = Multiplication(shift)
        for f in densities:
            F = SynthesizedFunction(f)
            moved = apply_descriptor(desc, f)
            for w in w_points:
                assert synthesize(moved, w) == pytest.approx(
                    complex(F(w + shift)), abs=1e-10)

    @pytest.mark.parametrize("mu", [0.5, 2.0])
    def test_dilation_intertwines(self, mu):
        w_points = (0.3 + 0.9j, -1.0 + 0.5j, 2j)
        densities = [PowerExp(1.0, 0.0, -1.0), PowerExp(1.0, 1.0, -2.0),
                     indicator(0.25, 1.5)]
        desc = ScaledDilation(mu)
        for f in densities:
            F = SynthesizedFunction(f)
            scaled = apply_descriptor(desc, f)
            for w in w_points:
                assert synthesize(scaled, w) == pytest.approx(
                    complex(F(mu * w)), abs=1e-10)


class TestComposition:
    def test_contracting_form_sends_kernels_to_kernels(self):
        mu = 0.5
        contracting = LFTMap(mu, 1j * (1.0 - mu))
        z = 0.3 + 0.9j
        image = apply_composition(contracting, Kernel(B0, z))
        assert isinstance(image, Kernel)
        expected_point = z / mu + 1j * (1.0 - mu) / mu
        assert image.w0 == pytest.approx(expected_point)
        assert image.coefficient == pytest.approx(mu ** -2.0)
        w = 0.2 + 1.4j
        assert complex(image(w)) == pytest.approx(
            complex(Kernel(B0, z)(contracting(w))))

    def test_expanding_form_on_simple_pole(self):
        expanding = LFTMap(2.0, 1j)
        G = apply_composition(expanding, InversePower(1.0, -1j, 1.0))
        for w in (1j, 0.5 + 0.5j):
            assert complex(G(w)) == pytest.approx(0.5 / (w + 1j))

    def test_translation_on_hardy_kernel(self):
        K = Kernel(HARDY, 1j)
        moved = apply_composition(LFTMap(1.0, 1.0), K)
        w = 0.7 + 0.8j
        assert complex(moved(w)) == pytest.approx(
            complex(1j / (2 * math.pi) / (w + 1.0 + 1j)))


class TestAdjoint:
    def test_descriptor_values(self):
        scalar, partner = adjoint_descriptor(LFTMap(0.5, 0.5j), HARDY)
        assert scalar == pytest.approx(2.0)
        assert partner == LFTMap(2.0, 1j)
        scalar, partner = adjoint_descriptor(LFTMap(0.5, 0.5j), B0)
        assert scalar == pytest.approx(4.0)
        scalar, partner = adjoint_descriptor(LFTMap(0.25, 0.75j), SpaceParams.bergman(1.0))
        assert scalar == pytest.approx(64.0)
        assert partner == LFTMap(4.0, 3j)

    def test_wrong_form_rejected(self):
        with pytest.raises(WrongFormError):
            adjoint_descriptor(LFTMap(0.5, 1j), HARDY)
        with pytest.raises(WrongFormError):
            adjoint_descriptor(LFTMap(2.0, -1j * (1.0 - 2.0)), HARDY)

    def test_identity_by_quadrature(self):
        _, _, err = adjoint_identity_error(B0, 0.5, 0.4 + 1.2j, -0.3 + 0.9j)
        assert err <= 1e-5
