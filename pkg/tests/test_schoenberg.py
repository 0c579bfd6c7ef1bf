import numpy as np
import pytest

from oracles import brute_force_q3, random_symmetric_zero_diag
from twodist import Embeddability, embeddability, l1_distance, q_value

# path on 3 vertices with the non-edge pair at various squared lengths
P3_W19 = np.array([[0.0, 1.0, 9.0], [1.0, 0.0, 1.0], [9.0, 1.0, 0.0]])
P3_W14 = np.array([[0.0, 1.0, 4.0], [1.0, 0.0, 1.0], [4.0, 1.0, 0.0]])


def equilateral(n):
    return np.ones((n, n)) - np.eye(n)


class TestQValue:
    @pytest.mark.parametrize("n", [2, 3, 5, 10, 25, 50])
    def test_equilateral_is_minus_half(self, n):
        # x'(J - I)x = (sum x)^2 - |x|^2 = -1 on the constraint set
        assert abs(q_value(equilateral(n)).q + 0.5) <= 1e-10

    def test_violated_triangle(self):
        # eliminating the middle coordinate gives maximum 5/6; the grid
        # oracle agrees
        value = q_value(P3_W19)
        assert abs(value.q - 5.0 / 6.0) <= 1e-10
        assert abs(value.q - brute_force_q3(P3_W19)) <= 1e-4

    def test_collinear_is_degenerate_zero(self):
        # the form reduces to -(x1 - x3)^2, maximized at 0
        assert abs(q_value(P3_W14).q) <= 1e-10

    def test_two_points_closed_form(self):
        rng = np.random.default_rng(23)
        for _ in range(50):
            d = float(rng.uniform(0.1, 10.0))
            m = np.array([[0.0, d], [d, 0.0]])
            assert abs(q_value(m).q + d / 2.0) <= 1e-12

    def test_maximizer_certificate(self):
        rng = np.random.default_rng(29)
        for _ in range(300):
            n = int(rng.integers(2, 9))
            m = random_symmetric_zero_diag(rng, n)
            value = q_value(m)
            x = value.maximizer
            assert abs(x.sum()) <= 1e-10
            assert abs(np.linalg.norm(x) - 1.0) <= 1e-10
            direct = sum(
                m[i, j] * x[i] * x[j] for i in range(n) for j in range(i + 1, n)
            )
            assert abs(direct - value.q) <= 1e-10 * (1.0 + np.abs(m).max())

    def test_positive_homogeneity(self):
        rng = np.random.default_rng(31)
        for _ in range(200):
            n = int(rng.integers(2, 8))
            m = random_symmetric_zero_diag(rng, n)
            c = float(rng.uniform(1e-3, 1e3))
            q1 = q_value(m).q
            q2 = q_value(c * m).q
            assert abs(q2 - c * q1) <= 1e-10 * max(1.0, abs(c * q1))

    def test_l1_lipschitz(self):
        rng = np.random.default_rng(37)
        for _ in range(300):
            n = int(rng.integers(2, 9))
            m = random_symmetric_zero_diag(rng, n)
            other = random_symmetric_zero_diag(rng, n)
            assert abs(q_value(m).q - q_value(other).q) <= l1_distance(m, other) + 1e-9

    def test_matches_grid_oracle(self):
        rng = np.random.default_rng(41)
        for _ in range(10):
            m = random_symmetric_zero_diag(rng, 3)
            assert abs(q_value(m).q - brute_force_q3(m)) <= 1e-4

    def test_rejects_nonzero_diagonal(self):
        m = P3_W19.copy()
        m[0, 0] = 0.5
        with pytest.raises(ValueError, match="diagonal"):
            q_value(m)

    def test_rejects_single_vertex(self):
        with pytest.raises(ValueError):
            q_value(np.zeros((1, 1)))


class TestEmbeddability:
    def test_equilateral_full_dimension(self):
        result = embeddability(equilateral(3))
        assert result.kind is Embeddability.FULL_DIMENSION
        assert abs(result.value.q + 0.5) <= 1e-10

    def test_collinear_degenerate(self):
        assert embeddability(P3_W14).kind is Embeddability.DEGENERATE

    def test_violated_triangle_non_embeddable(self):
        assert embeddability(P3_W19).kind is Embeddability.NON_EMBEDDABLE

    def test_zero_matrix_degenerate(self):
        assert embeddability(np.zeros((3, 3))).kind is Embeddability.DEGENERATE

    def test_tolerance_must_be_positive(self):
        with pytest.raises(ValueError):
            embeddability(equilateral(3), tol=0.0)
