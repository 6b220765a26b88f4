import math

import numpy as np
import pytest

from copspec import (INFINITY, NormalizationConstants, SpaceParams, cayley,
                     cayley_inverse, cpow, kernel_disc, kernel_halfplane)
from copspec.errors import UnsupportedSpaceError

ALPHAS = [-1.0, -0.5, 0.0, 1.0, 2.5]


def space_for(alpha):
    return SpaceParams.hardy() if alpha == -1.0 else SpaceParams.bergman(alpha)


class TestCayley:
    def test_known_values(self):
        assert cayley(0.0) == 1j
        assert cayley(-1.0) == 0j
        assert cayley(1j) == pytest.approx(-1.0)
        assert cayley(1.0) == INFINITY

    def test_inverse_known_values(self):
        assert cayley_inverse(1j) == 0j
        assert cayley_inverse(0.0) == pytest.approx(-1.0)
        assert cayley_inverse(INFINITY) == 1.0

    def test_pole_rejected(self):
        with pytest.raises(ValueError):
            cayley_inverse(-1j)

    def test_roundtrip(self):
        rng = np.random.default_rng(3)
        z = rng.uniform(-0.95, 0.95, 40) + 1j * rng.uniform(-0.95, 0.95, 40)
        z = z[np.abs(z) < 0.97]
        assert np.allclose(cayley_inverse(cayley(z)), z, atol=1e-14)
        w = rng.uniform(-5, 5, 40) + 1j * rng.uniform(0.1, 5, 40)
        assert np.allclose(cayley(cayley_inverse(w)), w, atol=1e-12)

    def test_interior_maps_to_interior(self):
        assert cayley(0.5 + 0.2j).imag > 0
        assert abs(cayley_inverse(3.0 + 0.7j)) < 1.0
        assert abs(cayley_inverse(5.0)) == pytest.approx(1.0)


class TestSpaceParams:
    def test_hardy_weight_pinned(self):
        assert SpaceParams.hardy().alpha == -1.0
        with pytest.raises(ValueError):
            SpaceParams(SpaceParams.hardy().kind, 0.0)

    @pytest.mark.parametrize("factory", [SpaceParams.bergman, SpaceParams.dirichlet])
    def test_weight_range(self, factory):
        with pytest.raises(ValueError):
            factory(-1.0)
        assert factory(-0.999).alpha == -0.999

    def test_fourier_weight_exponent(self):
        assert SpaceParams.hardy().fourier_weight_exponent() == 0.0
        assert SpaceParams.bergman(0.5).fourier_weight_exponent() == 1.5
        # the Dirichlet scale behaves like Bergman two indices down
        assert SpaceParams.dirichlet(0.5).fourier_weight_exponent() == -0.5

    def test_pw_norm_constant(self):
        assert SpaceParams.hardy().pw_norm_constant() == pytest.approx(2 * math.pi)
        assert SpaceParams.bergman(0.0).pw_norm_constant() == pytest.approx(math.pi)
        assert SpaceParams.bergman(1.0).pw_norm_constant() == pytest.approx(math.pi / 2)
        assert SpaceParams.dirichlet(1.0).pw_norm_constant() == pytest.approx(0.5)


class TestConstants:
    def test_hardy_values(self):
        c = NormalizationConstants.corrected(SpaceParams.hardy())
        assert c.c == pytest.approx(1 / math.sqrt(math.pi))
        assert c.d == pytest.approx(2j * math.sqrt(math.pi))
        assert c.k == pytest.approx(1j / (2 * math.pi))
        assert c.b == pytest.approx(2 * math.pi)
        assert c.nu == 1.0

    @pytest.mark.parametrize("alpha", [-0.5, 0.0, 1.0, 2.5])
    def test_corrected_roundtrip_condition(self, alpha):
        c = NormalizationConstants.corrected(SpaceParams.bergman(alpha))
        assert c.roundtrip_product() == pytest.approx(c.roundtrip_target(), rel=1e-14)

    def test_printed_bergman_breaks_roundtrip(self):
        c = NormalizationConstants.printed(SpaceParams.bergman(0.0))
        assert c.roundtrip_product() == 4j
        assert c.roundtrip_target() == pytest.approx(-4.0)

    def test_dirichlet_rejected(self):
        with pytest.raises(UnsupportedSpaceError):
            NormalizationConstants.corrected(SpaceParams.dirichlet(1.0))


class TestKernels:
    def test_halfplane_diagonals(self):
        assert complex(kernel_halfplane(SpaceParams.hardy(), 1j, 1j)) == \
            pytest.approx(1 / (4 * math.pi))
        assert complex(kernel_halfplane(SpaceParams.bergman(0.0), 1j, 1j)) == \
            pytest.approx(1 / (4 * math.pi))
        assert complex(kernel_halfplane(SpaceParams.bergman(2.0), 1j, 1j)) == \
            pytest.approx(3 / (4 * math.pi))

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_diagonal_positivity(self, alpha):
        space = space_for(alpha)
        for w0 in (1j, 0.5 + 0.4j, -2.0 + 3j, 4.0 + 0.05j):
            value = complex(kernel_halfplane(space, w0, w0))
            assert value.real > 0
            assert abs(value.imag) <= 1e-14 * value.real

    def test_disc_values(self):
        hardy = SpaceParams.hardy()
        for z in (0.0, 0.3 + 0.4j, -0.9j):
            assert complex(kernel_disc(hardy, 0.0, z)) == pytest.approx(1.0)
        assert complex(kernel_disc(SpaceParams.bergman(0.0), 0.0, 0.0)) == \
            pytest.approx(1 / math.pi)
        assert complex(kernel_disc(SpaceParams.bergman(1.0), 0.0, 0.0)) == \
            pytest.approx(2 / math.pi)

    def test_dirichlet_and_boundary_rejected(self):
        with pytest.raises(UnsupportedSpaceError):
            kernel_halfplane(SpaceParams.dirichlet(0.5), 1j, 1j)
        with pytest.raises(UnsupportedSpaceError):
            kernel_disc(SpaceParams.dirichlet(0.5), 0.0, 0.0)
        with pytest.raises(ValueError):
            kernel_halfplane(SpaceParams.hardy(), 1j, 2.0)
        with pytest.raises(ValueError):
            kernel_disc(SpaceParams.hardy(), 1.0, 0.0)

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_halfplane_kernel_is_lifted_disc_kernel(self, alpha):
        # pointwise chain: K_{w0}(w) agrees with the disc kernel pushed
        # through the identification, including all constants
        space = space_for(alpha)
        consts = NormalizationConstants.corrected(space)
        z0 = 0.3 - 0.25j
        w0 = cayley(z0)
        w = (np.linspace(-2, 2, 5)[:, None]
             + 1j * np.linspace(0.4, 3, 4)[None, :]).ravel()
        lifted = (kernel_disc(space, z0, cayley_inverse(w)) * consts.c
                  * cpow(w + 1j, -(alpha + 2.0)))
        scaled = cpow(1.0 - np.conj(z0), alpha + 2.0) / np.conj(consts.d) * lifted
        direct = kernel_halfplane(space, w0, w)
        assert np.allclose(scaled, direct, rtol=1e-13)
