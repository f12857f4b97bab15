import math

import numpy as np
import pytest
from scipy.special import gammainc

from focklab import (
    Divisor,
    FockParams,
    InfeasibleExperimentError,
    MeasurementVector,
    ParameterMismatchError,
    Window,
    analysis_matrix,
    basis_function,
    displaced_basis,
    frame_bounds,
    from_basis_coeffs,
    generate_disjoint_rings,
    generate_lattice,
    gram_matrix,
    hole_mass_experiment,
    measurements,
    min_norm_interpolate,
    riesz_bounds,
)

P1 = FockParams(1.0)


class TestMeasurements:
    def test_atom_at_own_point(self):
        lam = 0.7 - 0.3j
        divisor = Divisor(P1, ((lam, 3),))
        vector = measurements(displaced_basis(lam, 1, P1), divisor)
        assert np.allclose(vector.values, [0, 1, 0], atol=1e-14)

    def test_vacuum_measured_at_displaced_point(self):
        vector = measurements(basis_function(0, P1), Divisor(P1, ((1.0, 1),)))
        assert vector.values[0] == pytest.approx(math.exp(-0.5), rel=1e-12)

    def test_zero_function(self):
        divisor = Divisor(P1, ((0.0, 2), (1j, 1)))
        from focklab import FockFunction

        vector = measurements(FockFunction(P1, ()), divisor)
        assert np.all(vector.values == 0)

    def test_alpha_mismatch(self):
        with pytest.raises(ParameterMismatchError):
            measurements(basis_function(0, FockParams(2.0)), Divisor(P1, ((0.0, 1),)))


class TestAnalysisMatrix:
    def test_single_point_full_multiplicity_is_identity(self):
        for degree in (3, 7):
            divisor = Divisor(P1, ((0.0, degree + 1),))
            matrix = analysis_matrix(divisor, degree)
            assert np.allclose(matrix.entries, np.eye(degree + 1))

    def test_one_by_one_displacement(self):
        matrix = analysis_matrix(Divisor(P1, ((1.0, 1),)), 0)
        assert matrix.entries[0, 0] == pytest.approx(math.exp(-0.5), rel=1e-12)

    def test_path_consistency_with_measurements(self):
        coeffs = np.zeros(9, dtype=complex)
        coeffs[2] = 1.0
        coeffs[5] = 1.0
        f = from_basis_coeffs(coeffs, P1)
        divisor, _ = generate_lattice(1.0, 2.0, 2, 4.0)
        matrix = analysis_matrix(divisor, 8)
        direct = measurements(f, divisor)
        assert np.max(np.abs(matrix.entries @ coeffs - direct.values)) <= 1e-10

    def test_row_norms_at_most_one(self):
        divisor = Divisor(P1, ((0.5 + 0.5j, 2), (-1.0, 1)))
        matrix = analysis_matrix(divisor, 30)
        row_sums = np.sum(np.abs(matrix.entries) ** 2, axis=1)
        assert np.all(row_sums <= 1 + 1e-8)


class TestFrameBounds:
    def test_trivial_frame(self):
        for degree in (5, 20, 60):
            divisor = Divisor(P1, ((0.0, degree + 1),))
            summary = frame_bounds(analysis_matrix(divisor, degree))
            assert abs(summary.smin - 1.0) <= 1e-10
            assert abs(summary.smax - 1.0) <= 1e-10
            assert summary.ratio == pytest.approx(1.0, abs=1e-9)

    def test_rank_deficient_flagged(self):
        divisor = Divisor(P1, ((0.0, 2),))
        summary = frame_bounds(analysis_matrix(divisor, 5))
        assert summary.rank_deficient
        assert summary.smin == 0.0
        assert math.isinf(summary.ratio)

    def test_ratio_invariant_under_relabeling(self):
        rng = np.random.default_rng(3)
        pts = [complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(6)]
        mults = [int(m) for m in rng.integers(1, 4, 6)]
        entries = list(zip(pts, mults))
        divisor = Divisor(P1, tuple(entries))
        permuted = Divisor(P1, tuple(entries[::-1]))
        a = frame_bounds(analysis_matrix(divisor, 10))
        b = frame_bounds(analysis_matrix(permuted, 10))
        assert a.ratio == pytest.approx(b.ratio, rel=1e-10)

    def test_smin_monotone_under_added_points(self):
        rng = np.random.default_rng(21)
        for _ in range(10):
            pts = []
            while len(pts) < 5:
                z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
                if all(abs(z - p) > 1e-6 for p in pts):
                    pts.append(z)
            mults = [int(m) for m in rng.integers(1, 3, 5)]
            base = Divisor(P1, tuple(zip(pts[:4], mults[:4])))
            bigger = Divisor(P1, tuple(zip(pts, mults)))
            s_base = frame_bounds(analysis_matrix(base, 6)).smin
            s_big = frame_bounds(analysis_matrix(bigger, 6)).smin
            assert s_big >= s_base - 1e-12

    def test_empty_matrix_rejected(self):
        with pytest.raises(ValueError):
            frame_bounds(analysis_matrix(Divisor(P1, ()), 4))


class TestRieszBounds:
    def test_identity_gram(self):
        gram = gram_matrix([(0.0, 0), (0.0, 1), (0.0, 2)], P1)
        summary = riesz_bounds(gram)
        assert summary.smin == pytest.approx(1.0, abs=1e-12)
        assert summary.smax == pytest.approx(1.0, abs=1e-12)
        assert summary.ratio == pytest.approx(1.0, abs=1e-10)

    def test_condition_number_reported(self):
        gram = gram_matrix([(0.0, 0), (0.5, 0)], P1)
        summary = riesz_bounds(gram)
        assert summary.smin < 1 < summary.smax
        assert summary.ratio == pytest.approx(summary.smax / summary.smin, rel=1e-12)


class TestMinNormInterpolate:
    def test_single_point(self):
        divisor = Divisor(P1, ((0.0, 1),))
        data = MeasurementVector(tuple(divisor.atom_labels()), np.array([1.0 + 0j]))
        solution = min_norm_interpolate(divisor, data)
        assert solution.norm == pytest.approx(1.0)
        assert solution.residual <= 1e-12
        assert solution.function.atoms[0].k == 0

    def test_two_point_closed_form(self):
        divisor = Divisor(P1, ((0.0, 1), (4.0, 1)))
        data = MeasurementVector(tuple(divisor.atom_labels()), np.array([1.0 + 0j, 0j]))
        solution = min_norm_interpolate(divisor, data)
        assert solution.norm**2 == pytest.approx(1 / (1 - math.exp(-16)), rel=1e-12)
        assert solution.residual <= 1e-12

    def test_orthonormal_atoms_at_one_point(self):
        divisor = Divisor(P1, ((0.0, 2),))
        data = MeasurementVector(tuple(divisor.atom_labels()), np.array([0j, 1.0 + 0j]))
        solution = min_norm_interpolate(divisor, data)
        assert solution.norm == pytest.approx(1.0)
        assert solution.function.atoms[1].coeff == pytest.approx(1.0)

    def test_solution_measurements_match_data(self):
        divisor, _ = generate_disjoint_rings(1.0, 1.0, 10.0)
        labels = tuple(divisor.atom_labels())
        rng = np.random.default_rng(6)
        data = MeasurementVector(
            labels, rng.standard_normal(len(labels)) + 1j * rng.standard_normal(len(labels))
        )
        solution = min_norm_interpolate(divisor, data)
        recovered = measurements(solution.function, divisor)
        assert np.max(np.abs(recovered.values - data.values)) <= 1e-8 * (1 + data.norm())
        assert solution.function.norm() == pytest.approx(solution.norm, rel=1e-9)

    def test_truncation_flag_and_null_space_minimality(self):
        # nearly coincident points make the Gram numerically singular
        divisor = Divisor(P1, ((0.0, 1), (1e-9, 1)))
        labels = tuple(divisor.atom_labels())
        data = MeasurementVector(labels, np.array([1.0 + 0j, 1.0 + 0j]))
        solution = min_norm_interpolate(divisor, data, rcond=1e-6)
        assert solution.truncated
        gram = gram_matrix(labels, P1)
        w, u = np.linalg.eigh(gram.entries)
        null_dirs = u[:, w <= 1e-6 * w[-1]]
        assert null_dirs.shape[1] >= 1
        base = np.array([a.coeff for a in solution.function.atoms])
        base_norm = solution.norm
        rng = np.random.default_rng(1)
        for _ in range(10):
            mix = null_dirs @ (rng.standard_normal(null_dirs.shape[1])
                               + 1j * rng.standard_normal(null_dirs.shape[1]))
            perturbed = base + mix
            norm_sq = float(np.real(perturbed.conj() @ gram.entries @ perturbed))
            assert math.sqrt(max(norm_sq, 0.0)) >= base_norm - 1e-8

    def test_label_mismatch_rejected(self):
        divisor = Divisor(P1, ((0.0, 1), (1.0, 1)))
        bad = MeasurementVector(((0.0, 0),), np.array([1.0 + 0j]))
        with pytest.raises(ValueError):
            min_norm_interpolate(divisor, bad)

    def test_bad_rcond_rejected(self):
        divisor = Divisor(P1, ((0.0, 1),))
        data = MeasurementVector(tuple(divisor.atom_labels()), np.array([1.0 + 0j]))
        with pytest.raises(ValueError):
            min_norm_interpolate(divisor, data, rcond=0.0)

    def test_empty_divisor_rejected(self):
        data = MeasurementVector((), np.array([], dtype=complex))
        with pytest.raises(ValueError):
            min_norm_interpolate(Divisor(P1, ()), data)


class TestHoleMass:
    def test_empty_divisor_baseline(self):
        # unconstrained: the vacuum concentrates in any window containing 0
        value = hole_mass_experiment(Divisor(P1, ()), 3, Window(2.0, 0.1))
        assert value == pytest.approx(1 - math.exp(-4), rel=1e-10)

    def test_central_point_matches_incomplete_gamma(self):
        # constraints kill c_0..c_3, so the best survivor is e_4
        for radius in (2.0, 1.5):
            value = hole_mass_experiment(Divisor(P1, ((0.0, 4),)), 8, Window(radius, radius / 20))
            assert value == pytest.approx(float(gammainc(5, radius**2)), rel=1e-8)

    def test_decreasing_as_window_shrinks(self):
        divisor = Divisor(P1, ((0.0, 4),))
        big = hole_mass_experiment(divisor, 8, Window(2.0, 0.1))
        small = hole_mass_experiment(divisor, 8, Window(1.5, 0.1))
        assert small < big < 1

    def test_infeasible_constraints_rejected(self):
        with pytest.raises(InfeasibleExperimentError):
            hole_mass_experiment(Divisor(P1, ((0.0, 4),)), 3, Window(2.0, 0.1))

    def test_covering_divisor_expels_vanishing_functions(self):
        from focklab import generate_covering_rings

        divisor, _ = generate_covering_rings(1.0, 0.5, 3.0)
        degree = divisor.total_multiplicity() + 8
        window = Window(3.0, 0.05)
        value = hole_mass_experiment(divisor, degree, window)
        baseline = hole_mass_experiment(Divisor(P1, ()), degree, window)
        # FIXTURE: first verified run gave value ~1.1e-22 against baseline ~0.9999;
        # assert a conservative suppression factor
        assert baseline > 0.99
        assert value <= baseline * 1e-12
