"""Tests for the closed-form line models."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from mpmath import mp, mpf
from mpmath import log as mlog
from mpmath import pi as mpi
from mpmath import sqrt as msqrt

from txml.analytic import (
    MicrostripGeometry,
    PatchGeometry,
    PhysicalConstants,
    effective_permittivity,
    line_model,
    microstrip_impedance,
    patch_length_extension,
    patch_resonant_frequency,
)
from txml.errors import ConfigurationError, DomainError, SingularityError, UnknownKindError
from txml.reference import FREQUENCY_TABLE, IMPEDANCE_TABLE

eps_r_values = st.floats(min_value=1.0, max_value=20.0)
ratios = st.floats(min_value=1.0, max_value=50.0)


def mp_eps_eff(eps_r, u):
    eps_r, u = mpf(eps_r), mpf(u)
    return (eps_r + 1) / 2 + (eps_r - 1) / 2 / msqrt(1 + 12 / u)


def mp_z0(eps_r, u):
    mp.dps = 40
    u = mpf(u)
    return 120 * mpi / (msqrt(mp_eps_eff(eps_r, u)) * (u + mpf("1.393") + mpf(2) / 3 * mlog(u + mpf("1.444"))))


class TestEffectivePermittivity:
    def test_air_collapses_to_one(self):
        assert effective_permittivity(1.0, 3.7) == 1.0

    @pytest.mark.parametrize(
        "eps_r,u,expected",
        [
            # 1.5 + 0.5/sqrt(13) and 3.5 + 2.5/sqrt(7), evaluated at 40 digits with mpmath
            (2.0, 1.0, 1.638675049056307280504585433364),
            (6.0, 2.0, 4.444911182523068068036291340585),
        ],
    )
    def test_derived_values(self, eps_r, u, expected):
        assert effective_permittivity(eps_r, u) == pytest.approx(expected, rel=1e-15)
        assert round(effective_permittivity(eps_r, u), 6) == round(expected, 6)

    @given(eps_r_values, st.floats(min_value=1e-3, max_value=1e4))
    def test_bounded_by_one_and_eps_r(self, eps_r, u):
        e = effective_permittivity(eps_r, u)
        assert 1.0 <= e <= eps_r

    def test_monotone_approach_to_eps_r(self):
        grid = np.linspace(0.1, 1000, 5000)
        values = [effective_permittivity(4.0, u) for u in grid]
        assert all(b > a for a, b in zip(values, values[1:]))
        assert values[-1] < 4.0

    @pytest.mark.parametrize("eps_r,u", [(0.5, 2.0), (2.0, 0.0), (2.0, -1.0), (float("nan"), 2.0)])
    def test_domain_errors(self, eps_r, u):
        with pytest.raises(DomainError):
            effective_permittivity(eps_r, u)


class TestMicrostripImpedance:
    @pytest.mark.parametrize("u,expected", [(1.0, 98.525), (2.0, 68.774), (8.5, 24.445)])
    def test_reference_rows(self, u, expected):
        assert microstrip_impedance(MicrostripGeometry(2.0, u)) == pytest.approx(expected, abs=0.02)

    def test_reference_grid_all_rows(self):
        for x, actual in zip(IMPEDANCE_TABLE.x, IMPEDANCE_TABLE.actual):
            assert abs(microstrip_impedance(MicrostripGeometry(2.0, x)) - actual) <= 0.02

    @given(eps_r_values, ratios)
    def test_matches_high_precision_oracle(self, eps_r, u):
        got = microstrip_impedance(MicrostripGeometry(eps_r, u))
        assert got == pytest.approx(float(mp_z0(eps_r, u)), rel=1e-13)

    def test_strictly_decreasing(self):
        grid = 1.0 + 0.1 * np.arange(191)  # [1, 20]
        z = [microstrip_impedance(MicrostripGeometry(2.0, u)) for u in grid]
        assert all(b < a for a, b in zip(z, z[1:]))
        assert min(z) > 0

    def test_rejects_narrow_strip(self):
        with pytest.raises(DomainError, match="w/h >= 1"):
            MicrostripGeometry(2.0, 0.99)

    def test_rejects_low_eps_r(self):
        with pytest.raises(DomainError):
            MicrostripGeometry(0.9, 2.0)


class TestLengthExtension:
    def test_standard_value(self):
        # mpmath, 40 digits: 0.412e-3 * (4.744911 * 2.264) / (4.186911 * 2.8)
        got = patch_length_extension(4.444911, 2.0, 0.001, "standard")
        assert got == pytest.approx(0.0003775286792277852847327574638, rel=1e-14)

    @given(
        st.floats(min_value=1.0, max_value=20.0),
        st.floats(min_value=0.01, max_value=50.0),
        st.floats(min_value=1e-5, max_value=1e-2),
    )
    def test_variant_ratio(self, eps_eff, u, h):
        printed = patch_length_extension(eps_eff, u, h, "printed")
        standard = patch_length_extension(eps_eff, u, h, "standard")
        assert printed / standard == pytest.approx(u + 0.8, rel=1e-14)
        assert standard > 0

    def test_pole(self):
        with pytest.raises(SingularityError):
            patch_length_extension(0.258, 2.0, 0.001)
        with pytest.raises(SingularityError):
            patch_length_extension(0.1, 2.0, 0.001)

    @pytest.mark.parametrize("u,h", [(0.0, 0.001), (2.0, 0.0), (2.0, -1e-3)])
    def test_non_positive_inputs(self, u, h):
        with pytest.raises(DomainError):
            patch_length_extension(4.0, u, h)

    def test_unknown_variant(self):
        with pytest.raises(UnknownKindError):
            patch_length_extension(4.0, 2.0, 0.001, "typo")


class TestPatchFrequency:
    @pytest.mark.parametrize("u,mhz", [(1.0, 7710.557), (2.0, 7489.211)])
    def test_reference_rows(self, u, mhz):
        f = patch_resonant_frequency(PatchGeometry(6.0, u, effective_length_m=0.0095))
        assert f / 1e6 == pytest.approx(mhz, abs=0.1)

    def test_reference_grid_all_rows(self):
        for x, mhz in zip(FREQUENCY_TABLE.x, FREQUENCY_TABLE.actual):
            f = patch_resonant_frequency(PatchGeometry(6.0, x, effective_length_m=0.0095))
            assert abs(f / 1e6 - mhz) <= 0.1

    def test_halving_length_doubles_frequency(self):
        f1 = patch_resonant_frequency(PatchGeometry(6.0, 3.0, effective_length_m=0.0095))
        f2 = patch_resonant_frequency(PatchGeometry(6.0, 3.0, effective_length_m=0.00475))
        assert f2 == 2 * f1

    def test_physical_length_path(self):
        geom = PatchGeometry(4.4, 2.0, substrate_height_m=1.6e-3, patch_length_m=0.03)
        eps_eff = effective_permittivity(4.4, 2.0)
        dl = patch_length_extension(eps_eff, 2.0, 1.6e-3)
        expected = 3e8 / (2 * math.sqrt(eps_eff) * (0.03 + 2 * dl))
        assert patch_resonant_frequency(geom) == pytest.approx(expected, rel=1e-15)
        printed = patch_resonant_frequency(geom, "printed")
        assert printed < patch_resonant_frequency(geom)

    def test_custom_speed_of_light(self):
        geom = PatchGeometry(6.0, 2.0, effective_length_m=0.0095)
        f = patch_resonant_frequency(geom, constants=PhysicalConstants(c_m_per_s=1.5e8))
        assert f == pytest.approx(patch_resonant_frequency(geom) / 2, rel=1e-15)

    def test_decreasing_in_ratio(self):
        grid = 0.2 + 0.1 * np.arange(200)
        f = [patch_resonant_frequency(PatchGeometry(6.0, u, effective_length_m=0.0095)) for u in grid]
        assert all(b < a for a, b in zip(f, f[1:]))

    @pytest.mark.parametrize(
        "kwargs",
        [
            {},
            {"patch_length_m": 0.01},
            {"substrate_height_m": 0.001},
            {"effective_length_m": 0.0095, "patch_length_m": 0.01, "substrate_height_m": 0.001},
            {"effective_length_m": 0.0095, "patch_length_m": 0.01},
        ],
    )
    def test_length_configuration(self, kwargs):
        with pytest.raises(ConfigurationError):
            PatchGeometry(6.0, 2.0, **kwargs)

    def test_rejects_non_positive_length(self):
        with pytest.raises(DomainError):
            PatchGeometry(6.0, 2.0, effective_length_m=0.0)


class TestLineModel:
    def test_microstrip(self):
        assert line_model("microstrip_impedance")(2.0, 1.0) == pytest.approx(98.525, abs=0.02)

    def test_patch(self):
        f = line_model("patch_frequency")(6.0, 1.0, effective_length_m=0.0095)
        assert f / 1e6 == pytest.approx(7710.557, abs=0.1)

    def test_agrees_with_dedicated_operations(self):
        z = line_model("microstrip_impedance")
        p = line_model("patch_frequency", "printed")
        for u in (1.0, 2.5, 7.25):
            assert z(3.0, u) == microstrip_impedance(MicrostripGeometry(3.0, u))
            geom = PatchGeometry(3.0, u, substrate_height_m=1e-3, patch_length_m=0.02)
            assert p(3.0, u, substrate_height_m=1e-3, patch_length_m=0.02) == patch_resonant_frequency(geom, "printed")

    def test_unknown_kind(self):
        with pytest.raises(UnknownKindError):
            line_model("slotline")

    def test_rejects_stray_params(self):
        with pytest.raises(ConfigurationError):
            line_model("microstrip_impedance")(2.0, 2.0, effective_length_m=1.0)
        with pytest.raises(ConfigurationError):
            line_model("patch_frequency")(2.0, 2.0, width_m=1.0)
