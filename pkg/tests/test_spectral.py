import math

import numpy as np
import pytest

from audioactive import (
    DigitString,
    GROWTH_POLYNOMIAL,
    LengthBudgetError,
    TokenString,
    TransitionMatrix,
    characteristic_polynomial,
    dominant_eigenvalue,
    eigenvalues,
    empirical_growth,
    evolve,
    fermion_matrix,
    limiting_frequencies,
    matrix_from_chart,
    polynomial_division,
    primitivity_power,
)
from audioactive.particles import DecayRule, ParticleClass, decay_chart, lookup
from audioactive.spectral import charpoly_csv, eigenvalues_csv, frequencies_csv

import reference_values as ref


class TestMatrix:
    def test_hardcoded_entries(self):
        m = fermion_matrix()
        assert m.entries == ref.TRANSITION_MATRIX
        assert m.order == ref.MATRIX_ORDER

    def test_oracle_equivalence(self):
        assert matrix_from_chart() == fermion_matrix()

    def test_charm_column(self):
        m = fermion_matrix()
        assert m.entry("D", "C") == 1
        assert m.entry("B", "C") == 1
        assert sum(m.column("C")) == 2

    def test_electron_column(self):
        m = fermion_matrix()
        assert m.column("E") == (0, 1, 0, 0, 0, 0, 0, 0)  # E -> M only

    def test_trace_zero(self):
        assert fermion_matrix().trace() == 0

    def test_column_sums_match_product_counts(self):
        m = fermion_matrix()
        for rule in decay_chart():
            if rule.parent.kind is ParticleClass.FERMION:
                assert sum(m.column(rule.parent.symbol)) == len(rule.products)

    def test_single_rule(self):
        rule = DecayRule(lookup("E"), (lookup("M"),))
        m = matrix_from_chart([rule])
        assert m.entry("M", "E") == 1
        assert sum(v for row in m.entries for v in row) == 1

    def test_non_fermion_product_rejected(self):
        bogus = DecayRule(lookup("E"), (lookup("Ph"),))
        with pytest.raises(ValueError):
            matrix_from_chart([bogus])

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            TransitionMatrix(((1, 0),))
        with pytest.raises(ValueError):
            TransitionMatrix(((-1,) * 8,) * 8)

    def test_matrix_powers_match_multiset_evolution(self):
        m = fermion_matrix()
        order = list(m.order)
        vec = [1 if sym == "E" else 0 for sym in order]
        counts = {"E": 1}
        for _ in range(30):
            vec = [
                sum(m.entries[i][j] * vec[j] for j in range(8)) for i in range(8)
            ]
            counts = evolve(counts, 1)
            assert vec == [counts.get(sym, 0) for sym in order]


class TestEigenvalue:
    def test_dominant_value(self):
        lam = dominant_eigenvalue(fermion_matrix(), tol=1e-13)
        assert abs(lam - ref.PLASTIC_NUMBER) < 1e-8
        assert abs(lam**3 - lam - 1) < 1e-8

    def test_scalar_case(self):
        assert dominant_eigenvalue(TransitionMatrix(((2,),), order=("X",))) == pytest.approx(2.0)

    def test_tolerance_validation(self):
        with pytest.raises(ValueError):
            dominant_eigenvalue(fermion_matrix(), tol=0)


class TestCharacteristicPolynomial:
    def test_fermion_matrix_divisible_by_growth_polynomial(self):
        coeffs = characteristic_polynomial(fermion_matrix())
        assert len(coeffs) == 9 and coeffs[0] == 1
        quotient, remainder = polynomial_division(coeffs, GROWTH_POLYNOMIAL)
        assert remainder == ()
        assert len(quotient) == 6 and quotient[0] == 1

    def test_zero_matrix(self):
        assert characteristic_polynomial(((0, 0), (0, 0))) == (1, 0, 0)

    def test_swap_matrix(self):
        assert characteristic_polynomial(((0, 1), (1, 0))) == (1, 0, -1)

    def test_scalar(self):
        assert characteristic_polynomial(((5,),)) == (1, -5)

    def test_against_numpy_on_random_matrices(self):
        rng = np.random.default_rng(3)
        for _ in range(25):
            n = int(rng.integers(1, 7))
            m = rng.integers(-4, 5, size=(n, n))
            got = characteristic_polynomial(m.tolist())
            want = np.poly(m.astype(float))
            assert np.allclose(np.asarray(got, dtype=float), want, atol=1e-6)

    def test_division_validation(self):
        with pytest.raises(ValueError):
            polynomial_division((1, 0), (2, 1))

    def test_division_with_remainder(self):
        quotient, remainder = polynomial_division((1, 0, 0), (1, 1))  # x^2 / (x+1)
        assert quotient == (1, -1)
        assert remainder == (1,)


class TestPrimitivity:
    def test_fermion_matrix_is_14(self):
        assert primitivity_power(fermion_matrix()) == 14

    def test_power_14_entrywise_positive(self):
        m = fermion_matrix()
        power = [[1 if i == j else 0 for j in range(8)] for i in range(8)]
        for _ in range(14):
            power = [
                [sum(power[i][t] * m.entries[t][j] for t in range(8)) for j in range(8)]
                for i in range(8)
            ]
        assert all(v >= 1 for row in power for v in row)

    def test_identity_never_positive(self):
        ident = TransitionMatrix(
            tuple(tuple(1 if i == j else 0 for j in range(2)) for i in range(2)),
            order=("a", "b"),
        )
        assert primitivity_power(ident, bound=20) is None


class TestFrequencies:
    def test_values(self):
        freqs = limiting_frequencies()
        for sym, expected in ref.FERMION_FREQUENCIES.items():
            assert abs(freqs[sym] - expected) < 1e-4, sym

    def test_sum_to_one(self):
        freqs = limiting_frequencies()
        assert abs(sum(freqs.values()) - 1.0) < 1e-12

    def test_degenerate_tiers(self):
        freqs = limiting_frequencies()
        assert abs(freqs["M"] - freqs["D"]) < 1e-9
        assert abs(freqs["M"] - freqs["B"]) < 1e-9
        assert abs(freqs["U"] - freqs["S"]) < 1e-9
        assert abs(freqs["U"] - freqs["T"]) < 1e-9

    def test_convergence(self):
        a = limiting_frequencies(power=256)
        b = limiting_frequencies(power=512)
        assert all(abs(a[sym] - b[sym]) < 1e-6 for sym in a)

    def test_tier_ratio_is_inverse_growth_rate(self):
        freqs = limiting_frequencies()
        lam = dominant_eigenvalue(fermion_matrix())
        assert abs(freqs["M"] / freqs["E"] - 1 / lam) < 1e-3


class TestEigenvalues:
    def test_count_and_dominance(self):
        vals = eigenvalues(fermion_matrix())
        assert len(vals) == 8
        assert abs(vals[0] - ref.PLASTIC_NUMBER) < 1e-6
        assert abs(vals[0].imag) < 1e-9
        assert all(abs(z) <= abs(vals[0]) + 1e-9 for z in vals)

    def test_match_numpy(self):
        ours = sorted(eigenvalues(fermion_matrix()), key=lambda z: (round(z.real, 6), round(z.imag, 6)))
        direct = sorted(
            (complex(z) for z in np.linalg.eigvals(fermion_matrix().to_array())),
            key=lambda z: (round(z.real, 6), round(z.imag, 6)),
        )
        for a, b in zip(ours, direct):
            assert abs(a - b) < 1e-6


class TestGrowth:
    def test_base3(self):
        est = empirical_growth(DigitString("1", 3), 60)
        assert abs(est.estimate - ref.PLASTIC_NUMBER) < 0.005

    def test_base2(self):
        est = empirical_growth(DigitString("1", 2), 50)
        assert abs(est.estimate - ref.BASE2_GROWTH) < 0.005

    def test_base10(self):
        est = empirical_growth(DigitString("1", 10), 60)
        assert abs(est.estimate - ref.HIGH_BASE_GROWTH) < 0.01

    def test_fixed_string_ratios(self):
        est = empirical_growth(DigitString("22", 3), 20)
        assert set(est.ratios) == {1.0}
        assert est.estimate == 1.0

    def test_token_mode(self):
        est = empirical_growth(TokenString((1,)), 40)
        assert est.base is None
        assert abs(est.estimate - ref.HIGH_BASE_GROWTH) < 0.02

    def test_growth_agrees_with_spectrum(self):
        est = empirical_growth(DigitString("10", 3), 60)
        lam = dominant_eigenvalue(fermion_matrix())
        assert abs(est.estimate - lam) < 0.005

    def test_ratio_definition(self):
        est = empirical_growth(DigitString("1", 3), 12)
        assert len(est.ratios) == 12
        assert est.ratios[0] == est.lengths[1] / est.lengths[0]
        tail = max(1, 12 // 4)
        expected = (est.lengths[-1] / est.lengths[-1 - tail]) ** (1 / tail)
        assert est.estimate == pytest.approx(expected)
        assert math.isfinite(est.estimate)

    def test_budget(self):
        with pytest.raises(LengthBudgetError):
            empirical_growth(DigitString("1", 3), 60, max_length=1000)

    def test_minimum_iterations(self):
        with pytest.raises(ValueError):
            empirical_growth(DigitString("1", 3), 5)


class TestCsvEmission:
    def test_frequencies_csv(self):
        text = frequencies_csv(limiting_frequencies())
        lines = text.splitlines()
        assert lines[0] == "particle,frequency"
        assert lines[1].startswith("E,0.185")
        assert len(lines) == 9

    def test_charpoly_csv(self):
        text = charpoly_csv(characteristic_polynomial(fermion_matrix()))
        lines = text.splitlines()
        assert lines[0] == "coeff_degree,coeff_value"
        assert lines[1] == "8,1"
        assert lines[-1] == "0,-1"

    def test_eigenvalues_csv(self):
        text = eigenvalues_csv(eigenvalues(fermion_matrix()))
        lines = text.splitlines()
        assert lines[0] == "re,im"
        assert len(lines) == 9
        assert lines[1].startswith("1.324717957")
