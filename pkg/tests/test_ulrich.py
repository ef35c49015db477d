"""Ulrich numerics: polarization data, genus, stability and Koszul bounds."""

from __future__ import annotations

from fractions import Fraction

import pytest

from ulrich_lab import (
    BundleNumerics,
    DivisorClass,
    NotUlrichCompatible,
    NumericClassData,
    ParityViolation,
    PolarizedData,
    butler_semistability_criterion,
    coprime_stability_criterion,
    curve_section_genus,
    euler_char,
    is_ulrich_candidate,
    koszul_criterion,
    make_surface,
    parse_divisor,
    polarized_data_for,
    prioritary_polarization_check,
    ulrich_c2,
    ulrich_profile,
)

S3 = make_surface(3)
S4 = make_surface(4)


class TestPolarizedData:
    def test_fields(self):
        p = PolarizedData(2, 4, -4)
        assert (p.n, p.hn, p.hk) == (2, 4, -4)

    def test_round_trip(self):
        p = PolarizedData(2, 4, -4)
        assert p.to_dict() == {"n": 2, "Hn": 4, "HK": -4}
        assert PolarizedData.from_dict(p.to_dict()) == p

    def test_validation(self):
        with pytest.raises(ValueError):
            PolarizedData(1, 4, -4)
        with pytest.raises(ValueError):
            PolarizedData(2, 0, 0)
        with pytest.raises(ParityViolation):
            PolarizedData(2, 5, 0)

    @pytest.mark.parametrize("d", range(3, 9))
    def test_del_pezzo_data(self, d):
        assert polarized_data_for(make_surface(d)) == PolarizedData(2, d, -d)


class TestGenusAndProfile:
    @pytest.mark.parametrize("d", range(3, 9))
    def test_anticanonical_curve_is_elliptic(self, d):
        assert curve_section_genus(polarized_data_for(make_surface(d))) == 1

    def test_other_genera(self):
        assert curve_section_genus(PolarizedData(2, 4, 0)) == 3
        assert curve_section_genus(PolarizedData(3, 3, -6)) == 1

    def test_negative_genus_warns(self):
        with pytest.warns(RuntimeWarning):
            curve_section_genus(PolarizedData(2, 2, -8))

    def test_profile(self):
        assert ulrich_profile(2, polarized_data_for(S4)) == (8, Fraction(4))
        assert ulrich_profile(1, PolarizedData(2, 1, -1)) == (1, Fraction(1))
        assert ulrich_profile(3, polarized_data_for(S3)) == (9, Fraction(3))


class TestCriteria:
    @pytest.mark.parametrize("d", range(3, 9))
    def test_butler_holds_on_del_pezzo(self, d):
        assert butler_semistability_criterion(polarized_data_for(make_surface(d)))

    def test_butler_elsewhere(self):
        assert butler_semistability_criterion(PolarizedData(2, 4, 0))
        assert not butler_semistability_criterion(PolarizedData(2, 1, 1))

    @pytest.mark.parametrize("d", range(3, 9))
    def test_koszul_threshold(self, d):
        assert koszul_criterion(polarized_data_for(make_surface(d))) == (d >= 4)

    def test_koszul_elsewhere(self):
        assert koszul_criterion(PolarizedData(2, 10, -6))

    @pytest.mark.parametrize("d", range(3, 9))
    def test_coprime_holds_on_del_pezzo(self, d):
        assert coprime_stability_criterion(polarized_data_for(make_surface(d)))

    def test_coprime_fails_when_gcd_grows(self):
        # Genus 4 against h^0 - 1 = 4 resp. slope data sharing a factor 2.
        assert not coprime_stability_criterion(PolarizedData(2, 5, 1))
        assert not coprime_stability_criterion(PolarizedData(2, 7, -1))

    @pytest.mark.parametrize("d", range(3, 9))
    def test_prioritary_pairing_is_negative(self, d):
        assert prioritary_polarization_check(make_surface(d)) == 2 - d
        assert prioritary_polarization_check(make_surface(d)) < 0


class TestUlrichC2:
    def test_values(self):
        assert ulrich_c2(2, 12, S4) == 4
        assert ulrich_c2(2, 8, S3) == 3
        assert ulrich_c2(1, 2, S4) == 0
        assert ulrich_c2(3, 27, S3) == 12

    def test_parity_guard(self):
        with pytest.raises(NotUlrichCompatible):
            ulrich_c2(2, 13, S4)


class TestCandidates:
    def test_witness(self):
        witness = BundleNumerics(2, parse_divisor("(4;1,1,1,1,0)"), 4)
        assert is_ulrich_candidate(witness, S4)
        assert euler_char(witness, S4) == 8

    def test_wrong_c2(self):
        off = BundleNumerics(2, parse_divisor("(4;1,1,1,1,0)"), 5)
        assert not is_ulrich_candidate(off, S4)

    def test_wrong_slope(self):
        assert not is_ulrich_candidate(BundleNumerics(1, S4.zero_class(), 0), S4)

    def test_numeric_data(self):
        assert is_ulrich_candidate(NumericClassData(2, 12, 8, 4), S4)
        assert not is_ulrich_candidate(NumericClassData(2, 12, 8, 5), S4)
        assert not is_ulrich_candidate(NumericClassData(2, 12, 7, 4), S4)

    def test_rank_one_conic_class(self):
        conic = BundleNumerics(1, DivisorClass(2, (1, 1, 0, 0, 0)), 0)
        assert is_ulrich_candidate(conic, S4)
