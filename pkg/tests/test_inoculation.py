import numpy as np
import pytest

from rumornet.inoculation import apply_plan, make_random_plan, make_targeted_plan, write_plan_csv
from rumornet.netgen import DegreeDistribution, build_configuration_network, sample_powerlaw_distribution


def random_dist(rng, max_classes=8):
    size = int(rng.integers(2, max_classes + 1))
    support = np.sort(rng.choice(np.arange(1, 80), size=size, replace=False))
    weights = rng.random(size) + 1e-3
    return DegreeDistribution(support, weights / weights.sum())


class TestRandomPlan:
    def test_zero_is_no_op(self):
        plan = make_random_plan(0.0)
        dist = sample_powerlaw_distribution(2.4, 2, 100)
        assert plan.mean_fraction(dist) == 0.0

    def test_stores_fraction(self):
        assert make_random_plan(0.3).g == 0.3

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            make_random_plan(1.2)
        with pytest.raises(ValueError):
            make_random_plan(-0.1)


class TestTargetedPlan:
    def test_two_class_example(self):
        dist = DegreeDistribution([2, 4], [0.5, 0.5])
        plan = make_targeted_plan(dist, 0.25)
        assert plan.k_t == 4
        assert plan.f == pytest.approx(0.5)

    def test_zero_fraction(self):
        dist = sample_powerlaw_distribution(2.4, 2, 500)
        plan = make_targeted_plan(dist, 0.0)
        assert np.all(plan.profile(dist) == 0.0)

    def test_full_fraction(self):
        dist = sample_powerlaw_distribution(2.4, 2, 500)
        plan = make_targeted_plan(dist, 1.0)
        assert plan.k_t == dist.k_min
        assert plan.f == pytest.approx(1.0)
        assert np.all(plan.profile(dist) == 1.0)

    def test_step_shape(self):
        dist = sample_powerlaw_distribution(2.4, 2, 2000)
        plan = make_targeted_plan(dist, 0.1)
        profile = plan.profile(dist)
        below = dist.support < plan.k_t
        above = dist.support > plan.k_t
        assert np.all(profile[below] == 0.0)
        assert np.all(profile[above] == 1.0)
        assert 0.0 < plan.f <= 1.0

    def test_reconstruction_over_random_inputs(self):
        rng = np.random.default_rng(42)
        for _ in range(1000):
            dist = random_dist(rng)
            g_bar = float(rng.random())
            plan = make_targeted_plan(dist, g_bar)
            assert plan.mean_fraction(dist) == pytest.approx(g_bar, abs=1e-9)

    def test_monotone_severity(self):
        rng = np.random.default_rng(43)
        for _ in range(200):
            dist = random_dist(rng)
            g1, g2 = np.sort(rng.random(2))
            low = make_targeted_plan(dist, float(g1)).profile(dist)
            high = make_targeted_plan(dist, float(g2)).profile(dist)
            assert np.all(high >= low - 1e-12)

    def test_mismatched_support_rejected(self):
        plan = make_targeted_plan(DegreeDistribution([2, 4], [0.5, 0.5]), 0.25)
        other = DegreeDistribution([2, 5], [0.5, 0.5])
        with pytest.raises(ValueError):
            plan.profile(other)


class TestApplyPlan:
    @pytest.fixture(scope="class")
    def network(self):
        dist = sample_powerlaw_distribution(2.4, 2, 10**4)
        return build_configuration_network(dist, 10**4, np.random.default_rng(3))

    def test_none_plan_empty(self, network):
        assert apply_plan(network, None, np.random.default_rng(0)).size == 0

    def test_random_binomial_count(self, network):
        ids = apply_plan(network, make_random_plan(0.5), np.random.default_rng(4))
        # 3 sigma of Binomial(10^4, 0.5)
        assert abs(ids.size - 5000) < 3 * 50

    def test_targeted_respects_cutoff(self, network):
        dist = network.empirical_distribution()
        plan = make_targeted_plan(dist, 0.1)
        ids = apply_plan(network, plan, np.random.default_rng(5))
        chosen = np.zeros(network.n, dtype=bool)
        chosen[ids] = True
        assert np.all(chosen[network.degrees > plan.k_t])
        assert not np.any(chosen[network.degrees < plan.k_t])
        at_cut = network.degrees == plan.k_t
        assert chosen[at_cut].sum() == int(round(plan.f * at_cut.sum()))

    def test_cutoff_below_min_degree_takes_all(self, network):
        dist = network.empirical_distribution()
        plan = make_targeted_plan(dist, 1.0)
        ids = apply_plan(network, plan, np.random.default_rng(6))
        assert ids.size == network.n

    def test_deterministic_under_seed(self, network):
        plan = make_random_plan(0.2)
        a = apply_plan(network, plan, np.random.default_rng(7))
        b = apply_plan(network, plan, np.random.default_rng(7))
        assert np.array_equal(a, b)


class TestSerialization:
    def test_random_line(self, tmp_path):
        path = tmp_path / "plan.csv"
        write_plan_csv(make_random_plan(0.3), path)
        assert path.read_text() == "g=0.3\n"

    def test_targeted_rows(self, tmp_path):
        dist = DegreeDistribution([2, 4], [0.5, 0.5])
        path = tmp_path / "plan.csv"
        write_plan_csv(make_targeted_plan(dist, 0.25), path)
        lines = path.read_text().splitlines()
        assert lines[0] == "k,g_k"
        assert lines[1] == "2,0.0"
        assert lines[2] == "4,0.5"
