import math

import mpmath
import numpy as np
import pytest

from ggl.grover import (
    GroverAngles,
    SearchInstance,
    basis_overlaps,
    engine_success_prob,
    engine_two_level,
    engine_two_level_power,
    grover_angles,
    grover_operators_dense,
    grover_state_dense,
    grover_success_prob,
)


def angles_highprec(n):
    """Independent 60-digit evaluation of (theta, alpha)."""
    with mpmath.workdps(60):
        n = mpmath.mpf(n)
        theta = mpmath.asin(2 * mpmath.sqrt(n - 1) / n)
        alpha = mpmath.acos(1 / mpmath.sqrt(n))
        return float(theta), float(alpha)


class TestInstanceValidation:
    def test_rejects_n_below_two(self):
        with pytest.raises(ValueError):
            SearchInstance(N=1)

    def test_rejects_non_integer_n(self):
        with pytest.raises(ValueError):
            SearchInstance(N=4.0)

    def test_rejects_marked_index_out_of_range(self):
        with pytest.raises(ValueError):
            SearchInstance(N=4, w=4)
        with pytest.raises(ValueError):
            SearchInstance(N=4, w=-1)

    def test_rejects_nonpositive_scales(self):
        with pytest.raises(ValueError):
            SearchInstance(N=4, E=0.0)
        with pytest.raises(ValueError):
            SearchInstance(N=4, hbar=-1.0)


class TestAngles:
    def test_n4_both_pi_over_three(self):
        ang = grover_angles(SearchInstance(N=4))
        assert ang.theta == pytest.approx(math.pi / 3.0, abs=1e-15)
        assert ang.alpha == pytest.approx(math.pi / 3.0, abs=1e-15)

    def test_large_n_reference_values(self):
        # frozen from the 60-digit oracle at N = 2**30
        ang = grover_angles(SearchInstance(N=2**30))
        assert ang.theta == pytest.approx(6.103515625947391e-05, abs=1e-18)
        assert ang.alpha == pytest.approx(1.570765809216767, abs=1e-14)

    @pytest.mark.parametrize("n", [2, 3, 16, 1024, 2**30, 10**8])
    def test_against_highprec_oracle(self, n):
        ang = grover_angles(SearchInstance(N=n))
        theta, alpha = angles_highprec(n)
        assert ang.theta == pytest.approx(theta, abs=1e-15, rel=1e-13)
        assert ang.alpha == pytest.approx(alpha, abs=1e-13)

    @pytest.mark.parametrize("n", [2, 5, 64, 4096, 2**30])
    def test_double_angle_identity(self, n):
        # asin(2 sqrt(N-1)/N) = 2 asin(1/sqrt(N)) on [0, pi/2]
        ang = grover_angles(SearchInstance(N=n))
        assert ang.theta == pytest.approx(2.0 * math.asin(1.0 / math.sqrt(n)), abs=1e-15)

    def test_small_angle_limit(self):
        inst = SearchInstance(N=10**8)
        theta = grover_angles(inst).theta
        assert abs(theta * inst.sqrt_n / 2.0 - 1.0) <= 1e-8


class TestBasisOverlaps:
    def test_marked_index(self):
        assert basis_overlaps(SearchInstance(N=4, w=2), 2) == (1.0, 0.0)

    def test_unmarked_index_n4(self):
        c_w, c_r = basis_overlaps(SearchInstance(N=4, w=0), 3)
        assert c_w == 0.0
        assert c_r == pytest.approx(1.0 / math.sqrt(3.0), abs=1e-15)

    def test_normalization(self):
        inst = SearchInstance(N=16, w=5)
        total = sum(basis_overlaps(inst, j)[1] ** 2 for j in range(16))
        assert total == pytest.approx(1.0, abs=1e-12)

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            basis_overlaps(SearchInstance(N=4), 4)


class TestDenseOperators:
    def test_oracle_n2(self):
        u_f, _, _ = grover_operators_dense(SearchInstance(N=2, w=0))
        assert np.array_equal(u_f, np.diag([-1.0 + 0j, 1.0]))

    def test_all_unitary(self):
        for mat in grover_operators_dense(SearchInstance(N=7, w=3)):
            gram = mat.conj().T @ mat
            assert np.max(np.abs(gram - np.eye(7))) <= 1e-10

    @pytest.mark.parametrize("w", [0, 1, 2, 3])
    def test_n4_one_step_reaches_marked(self, w):
        inst = SearchInstance(N=4, w=w)
        state = grover_state_dense(inst, 1)
        expected = np.zeros(4, dtype=complex)
        expected[w] = 1.0
        assert np.max(np.abs(state - expected)) <= 1e-12

    def test_over_cap_rejected(self, monkeypatch):
        monkeypatch.setenv("GGL_DENSE_CAP", "8")
        with pytest.raises(ValueError):
            grover_operators_dense(SearchInstance(N=9))


class TestSuccessProbability:
    def test_initial_overlap(self):
        for n in (2, 4, 100):
            assert grover_success_prob(SearchInstance(N=n), 0) == pytest.approx(
                1.0 / n, abs=1e-14
            )

    def test_in_unit_interval(self):
        inst = SearchInstance(N=37)
        for k in range(0, 60):
            assert 0.0 <= grover_success_prob(inst, k) <= 1.0
            assert 0.0 <= engine_success_prob(inst, k) <= 1.0

    def test_periodicity(self):
        inst = SearchInstance(N=64)
        period = math.pi / grover_angles(inst).theta
        for k in (0.0, 1.0, 2.5, 7.0):
            assert grover_success_prob(inst, k + period) == pytest.approx(
                grover_success_prob(inst, k), abs=1e-9
            )

    def test_near_optimal_count_n2_20(self):
        inst = SearchInstance(N=2**20)
        k = round(math.pi * inst.sqrt_n / 4.0)
        assert grover_success_prob(inst, k) >= 0.999

    def test_negative_count_rejected(self):
        with pytest.raises(ValueError):
            grover_success_prob(SearchInstance(N=4), -1)


class TestConventionCrossCheck:
    """The dense product is the ground truth for the sign convention.

    cos^2(k theta - alpha) reproduces it to rounding at every N and w;
    cos^2(k theta + alpha) only within its O(1/sqrt(N)) asymptotic window.
    """

    @pytest.mark.parametrize("n", [4, 8, 16, 64, 256])
    def test_engine_form_matches_dense_everywhere(self, n):
        ks = sorted({0, 1, 2, 5, round(math.pi * math.sqrt(n) / 4.0)})
        for w in range(n):
            inst = SearchInstance(N=n, w=w)
            state = np.full(n, 1.0 / math.sqrt(n), dtype=complex)
            k_prev = 0
            for k in ks:
                for _ in range(k - k_prev):
                    state[w] = -state[w]
                    state = 2.0 * state.mean() - state
                k_prev = k
                dense_prob = abs(state[w]) ** 2
                assert dense_prob == pytest.approx(
                    engine_success_prob(inst, k), abs=1e-9
                )

    @pytest.mark.parametrize("n", [2**10, 2**12])
    def test_quoted_form_within_asymptotic_window(self, n):
        inst = SearchInstance(N=n, w=0)
        k_max = round(math.pi * inst.sqrt_n / 4.0)
        state = np.full(n, 1.0 / math.sqrt(n), dtype=complex)
        worst_plus = 0.0
        for k in range(k_max + 1):
            dense_prob = abs(state[0]) ** 2
            assert dense_prob == pytest.approx(engine_success_prob(inst, k), abs=1e-9)
            worst_plus = max(worst_plus, abs(dense_prob - grover_success_prob(inst, k)))
            state[0] = -state[0]
            state = 2.0 * state.mean() - state
        assert worst_plus <= 5.0 / inst.sqrt_n

    def test_forms_disagree_at_small_n(self):
        # at N=4, k=1 the dense product reaches probability 1 while the
        # quoted form gives cos^2(theta + alpha) = 1/4: the +alpha form is
        # an asymptotic statement, not an identity
        inst = SearchInstance(N=4)
        assert engine_success_prob(inst, 1) == pytest.approx(1.0, abs=1e-12)
        assert grover_success_prob(inst, 1) == pytest.approx(0.25, abs=1e-12)


class TestStateEvolution:
    def test_initial_state_uniform(self):
        state = grover_state_dense(SearchInstance(N=8), 0)
        assert np.max(np.abs(state - 1.0 / math.sqrt(8.0))) <= 1e-15

    def test_norm_preserved_long_run(self):
        state = grover_state_dense(SearchInstance(N=64, w=9), 1000)
        assert abs(np.linalg.norm(state) - 1.0) <= 1e-10

    def test_invariant_subspace(self):
        inst = SearchInstance(N=8, w=2)
        _, _, u_g = grover_operators_dense(inst)
        w_vec = np.zeros(8, dtype=complex)
        w_vec[2] = 1.0
        r_vec = np.array([basis_overlaps(inst, j)[1] for j in range(8)], dtype=complex)
        for vec in (w_vec, r_vec):
            out = u_g @ vec
            residual = out - (w_vec @ out) * w_vec - (r_vec @ out) * r_vec
            assert np.max(np.abs(residual)) <= 1e-10


class TestTwoLevelEngine:
    def test_matches_dense_restriction(self):
        inst = SearchInstance(N=8, w=2)
        _, _, u_g = grover_operators_dense(inst)
        w_vec = np.zeros(8, dtype=complex)
        w_vec[2] = 1.0
        r_vec = np.array([basis_overlaps(inst, j)[1] for j in range(8)], dtype=complex)
        basis = np.column_stack([w_vec, r_vec])
        restricted = basis.conj().T @ u_g @ basis
        assert np.max(np.abs(restricted - engine_two_level(inst))) <= 1e-12

    def test_power_matches_repeated_product(self):
        inst = SearchInstance(N=16)
        direct = np.linalg.matrix_power(engine_two_level(inst), 77)
        assert np.max(np.abs(direct - engine_two_level_power(inst, 77))) <= 1e-11

    def test_angles_type(self):
        assert isinstance(grover_angles(SearchInstance(N=4)), GroverAngles)
