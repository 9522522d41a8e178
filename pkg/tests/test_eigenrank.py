import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netrank import (
    AdjacencyMatrix,
    DegenerateVectorError,
    MultiplicityError,
    NonConvergenceError,
    PowerIterConfig,
    SplitMix64,
    TransitionMatrix,
    damped_transition,
    eigenvalue_one_space,
    markovrank,
    pagerank,
    patch_zero_rows,
    stationary_power,
    transition_from_patched,
)

import golden


class TestEigenvalueOneSpace:
    def test_chain_3_unique_fixed_point(self):
        space = eigenvalue_one_space(golden.CHAIN_3)
        assert space.multiplicity == 1
        vec = space.vector / space.vector.sum()
        np.testing.assert_allclose(vec, golden.CHAIN_3_STATIONARY, atol=1e-9)

    def test_example_c_multiplicity_two(self):
        M = transition_from_patched(golden.EX_C)
        assert eigenvalue_one_space(M).multiplicity == 2

    def test_identity_multiplicity_two(self):
        assert eigenvalue_one_space(TransitionMatrix(np.eye(2))).multiplicity == 2

    def test_vector_none_when_not_unique(self):
        space = eigenvalue_one_space(TransitionMatrix(np.eye(3)))
        assert space.multiplicity == 3 and space.vector is None

    def test_residual_small(self):
        for adj in (golden.FOUR_NODE, golden.EX_A, golden.EX_B, golden.EX_D, golden.EX1):
            M = transition_from_patched(patch_zero_rows(adj))
            space = eigenvalue_one_space(M)
            v = space.vector / space.vector.sum()
            assert np.abs(M.entries @ v - v).max() <= 1e-8

    @pytest.mark.parametrize("seed", range(6))
    def test_multiplicity_matches_eigendecomposition(self, seed):
        # independent oracle: count eigenvalues with real part above the same
        # discrimination threshold the null-space tolerance encodes
        n = 5 + seed
        entries = SplitMix64(seed).uniforms(n * n).reshape(n, n) + 1e-3
        M = TransitionMatrix(entries / entries.sum(axis=0))
        eigvals = np.linalg.eigvals(M.entries)
        expected = int((np.real(eigvals) > 0.99999).sum())
        assert eigenvalue_one_space(M).multiplicity == expected


class TestStationaryPower:
    def test_chain_3_matches_printed_iterates(self):
        scores = stationary_power(golden.CHAIN_3, PowerIterConfig(tolerance=1e-6))
        np.testing.assert_allclose(scores.values, golden.CHAIN_3_POWER_1E6, atol=1e-6)

    def test_identity_fixed_point_after_one_check(self):
        M = TransitionMatrix(np.eye(3))
        start = np.array([0.2, 0.3, 0.5])
        scores = stationary_power(M, PowerIterConfig(initial=start))
        np.testing.assert_array_equal(scores.values, start)
        assert scores.iterations == 1

    def test_four_node_matches_printed_iterates(self):
        M = transition_from_patched(golden.FOUR_NODE)
        scores = stationary_power(M, PowerIterConfig(tolerance=1e-6))
        np.testing.assert_allclose(scores.values, golden.FOUR_NODE_POWER_1E6, atol=1e-6)

    def test_periodic_chain_does_not_converge(self):
        flip = TransitionMatrix(np.array([[0.0, 1.0], [1.0, 0.0]]))
        cfg = PowerIterConfig(
            tolerance=1e-12, max_iterations=500, initial=np.array([1.0, 0.0])
        )
        with pytest.raises(NonConvergenceError) as err:
            stationary_power(flip, cfg)
        assert err.value.iterations == 500
        assert err.value.last_iterate.shape == (2,)

    def test_bad_initial_rejected(self):
        with pytest.raises(ValueError, match="sum to 1"):
            stationary_power(
                golden.CHAIN_3, PowerIterConfig(initial=np.array([1.0, 1.0, 1.0]))
            )

    def test_labels_attached(self):
        scores = stationary_power(golden.CHAIN_3, labels=("x", "y", "z"))
        assert scores.labels == ("x", "y", "z")


class TestPagerankGolden:
    @pytest.mark.parametrize("alpha", sorted(golden.FOUR_NODE_PAGERANK))
    def test_four_node(self, alpha):
        scores = pagerank(golden.FOUR_NODE, alpha)
        np.testing.assert_allclose(
            scores.values, golden.FOUR_NODE_PAGERANK[alpha], atol=1e-6
        )

    @pytest.mark.parametrize("alpha", sorted(golden.EX1_PAGERANK))
    def test_six_node(self, alpha):
        scores = pagerank(golden.EX1, alpha)
        np.testing.assert_allclose(scores.values, golden.EX1_PAGERANK[alpha], atol=1e-6)

    def test_example_a_limit(self):
        np.testing.assert_allclose(
            pagerank(golden.EX_A, 1.0).values, golden.EX_A_PAGERANK_1, atol=1e-9
        )

    def test_example_b(self):
        scores = pagerank(golden.EX_B, 0.85)
        np.testing.assert_allclose(scores.values, golden.EX_B_PAGERANK_085, atol=1e-6)
        assert not scores.degenerate

    def test_example_c_at_one_reports_multiplicity(self):
        with pytest.raises(MultiplicityError) as err:
            pagerank(golden.EX_C, 1.0)
        assert err.value.multiplicity == 2
        assert "multiplicity of the eigenvalue 1 is not one" in str(err.value)

    def test_example_c_near_one(self):
        np.testing.assert_allclose(
            pagerank(golden.EX_C, 0.9999).values, golden.EX_C_PAGERANK_09999, atol=1e-6
        )
        with pytest.raises(MultiplicityError):
            pagerank(golden.EX_C, 0.99999)

    def test_example_c_at_085(self):
        np.testing.assert_allclose(
            pagerank(golden.EX_C, 0.85).values, golden.EX_C_PAGERANK_085, atol=1e-6
        )

    @pytest.mark.parametrize("alpha", [0.3, 0.85, 1.0])
    def test_k2_symmetry(self, alpha):
        np.testing.assert_allclose(pagerank(golden.K2, alpha).values, [0.5, 0.5], atol=1e-12)

    @pytest.mark.parametrize("alpha", [0.0, -1.0, 1.5])
    def test_alpha_range(self, alpha):
        with pytest.raises(ValueError, match="alpha"):
            pagerank(golden.FOUR_NODE, alpha)

    def test_unknown_method(self):
        with pytest.raises(ValueError, match="method"):
            pagerank(golden.FOUR_NODE, 0.85, method="magic")


class TestMarkovrankGolden:
    @pytest.mark.parametrize("eps", sorted(golden.FOUR_NODE_MARKOVRANK))
    def test_four_node(self, eps):
        scores = markovrank(golden.FOUR_NODE, eps)
        np.testing.assert_allclose(
            scores.values, golden.FOUR_NODE_MARKOVRANK[eps], atol=1e-6
        )

    @pytest.mark.parametrize("eps", sorted(golden.EX1_MARKOVRANK))
    def test_six_node(self, eps):
        scores = markovrank(golden.EX1, eps)
        np.testing.assert_allclose(scores.values, golden.EX1_MARKOVRANK[eps], atol=1e-6)

    def test_example_a(self):
        np.testing.assert_allclose(
            markovrank(golden.EX_A, 0.0).values, golden.EX_A_PAGERANK_1, atol=1e-9
        )
        np.testing.assert_allclose(
            markovrank(golden.EX_A, 1.0).values, golden.EX_A_MARKOVRANK_1, atol=1e-6
        )

    def test_example_b(self):
        scores = markovrank(golden.EX_B, 1.0)
        np.testing.assert_allclose(scores.values, golden.EX_B_MARKOVRANK_1, atol=1e-6)
        assert not scores.degenerate

    def test_example_b_unstable_epsilon_flags_degenerate(self):
        scores = markovrank(golden.EX_B, 1e-15)
        assert scores.degenerate
        # the two-cycle keeps all its mass; the rest decays to roundoff level
        np.testing.assert_allclose(scores.values[3:], [0.5, 0.5], atol=1e-9)

    def test_example_c_boundaries(self):
        for eps in (0.0, 1e-4):
            with pytest.raises(MultiplicityError):
                markovrank(golden.EX_C, eps)
        np.testing.assert_allclose(
            markovrank(golden.EX_C, 1e-3).values, golden.EX_C_MARKOVRANK_1E3, atol=1e-6
        )
        np.testing.assert_allclose(
            markovrank(golden.EX_C, 1.0).values, golden.EX_C_MARKOVRANK_1, atol=1e-6
        )

    @pytest.mark.parametrize("eps", [0.0, 0.5, 1.0])
    def test_k2_symmetry(self, eps):
        np.testing.assert_allclose(markovrank(golden.K2, eps).values, [0.5, 0.5], atol=1e-12)

    @pytest.mark.parametrize("eps", [-0.1, 1.2])
    def test_epsilon_range(self, eps):
        with pytest.raises(ValueError, match="epsilon"):
            markovrank(golden.FOUR_NODE, eps)


ALL_GOLDEN = [golden.FOUR_NODE, golden.EX1, golden.EX_A, golden.EX_B, golden.EX_D]
REGULAR_GOLDEN = [golden.FOUR_NODE, golden.EX_A, golden.EX_D, golden.EX1]


class TestCrossMethodProperties:
    @pytest.mark.parametrize("adj", ALL_GOLDEN)
    def test_damped_limit_equals_augmented_limit(self, adj):
        # with a unique fixed point, both parameter boundaries hit the same vector
        np.testing.assert_allclose(
            pagerank(adj, 1.0).values, markovrank(adj, 0.0).values, atol=1e-10
        )

    def test_continuity_toward_alpha_one(self):
        reference = pagerank(golden.EX_A, 1.0).values
        gaps = [
            np.abs(pagerank(golden.EX_A, a).values - reference).max()
            for a in (0.9, 0.99, 0.999, 0.9999)
        ]
        assert all(g1 > g2 for g1, g2 in zip(gaps, gaps[1:]))
        assert gaps[-1] < 1e-3

    def test_continuity_toward_epsilon_zero(self):
        reference = markovrank(golden.EX_A, 0.0).values
        assert np.abs(markovrank(golden.EX_A, 1e-4).values - reference).max() < 1e-3

    @pytest.mark.parametrize("adj", REGULAR_GOLDEN)
    def test_exact_and_power_agree(self, adj):
        for alpha in (0.85, 1.0):
            exact = pagerank(adj, alpha)
            power = pagerank(adj, alpha, method="power")
            assert np.abs(exact.values - power.values).max() <= 1e-8
        for eps in (0.0, 1.0):
            exact = markovrank(adj, eps)
            power = markovrank(adj, eps, method="power")
            assert np.abs(exact.values - power.values).max() <= 1e-8

    @pytest.mark.parametrize("adj", ALL_GOLDEN)
    def test_scores_sum_to_one_and_positive(self, adj):
        for scores in (pagerank(adj, 0.85), markovrank(adj, 1.0)):
            assert abs(scores.values.sum() - 1.0) <= 1e-9
            assert (scores.values > 0).all()


@given(st.integers(0, 10_000))
@settings(max_examples=25, deadline=None)
def test_augmented_ranking_is_damped_ranking_at_matched_parameter(seed):
    """Cross-check the two constructions against each other.

    Eliminating the hub state from the augmented chain's fixed-point equations
    leaves v = c * Mtilde v + t * ones with c = 2S / (2S + eps), S the total
    weight of the patched adjacency: the augmented ranking at eps must equal
    the damped ranking at alpha = c.
    """
    u = SplitMix64(seed).uniforms(2)
    n = 3 + int(u[0] * 12)
    eps = 0.05 + 0.95 * u[1]
    entries = (SplitMix64(seed + 7).uniforms(n * n) < 0.3).astype(float).reshape(n, n)
    adj = AdjacencyMatrix.from_entries(entries)
    S = patch_zero_rows(adj).entries.sum()
    alpha = 2 * S / (2 * S + eps)
    augmented = markovrank(adj, eps).values
    damped = pagerank(adj, alpha).values
    assert np.abs(augmented - damped).max() <= 1e-10


def test_degenerate_zero_sum_vector_raises():
    from netrank.eigenrank import _normalize_scores

    with pytest.raises(DegenerateVectorError, match="degenerate eigenvector"):
        _normalize_scores(np.array([1.0, -1.0]), ("a", "b"))


def test_power_method_default_tolerance_is_tight():
    scores = pagerank(golden.FOUR_NODE, 0.85, method="power")
    assert np.abs(scores.values - golden.FOUR_NODE_PAGERANK[0.85]).max() <= 1e-7
    assert scores.iterations is not None
