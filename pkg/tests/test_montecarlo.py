import numpy as np
import pytest

from rumornet.inoculation import make_random_plan, make_targeted_plan
from rumornet.meanfield import ModelParams, final_rumor_size
from rumornet.montecarlo import (
    IGNORANT,
    SPREADER,
    STIFLER,
    contact_count,
    ensemble,
    mean_trace,
    run,
    write_ensemble_csv,
    write_trace_csv,
)
from rumornet.netgen import Network, build_configuration_network, sample_powerlaw_distribution


def complete_graph(n):
    return Network(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


@pytest.fixture(scope="module")
def powerlaw_net():
    dist = sample_powerlaw_distribution(2.4, 2, 10**4)
    return build_configuration_network(dist, 10**4, np.random.default_rng(100))


class TestContactCount:
    def test_degree_one_always_contacts(self):
        rng = np.random.default_rng(0)
        assert all(contact_count(1, 0.5, rng) == 1 for _ in range(200))

    def test_integer_power_is_exact(self):
        rng = np.random.default_rng(1)
        assert all(contact_count(4, 0.5, rng) == 2 for _ in range(200))
        assert all(contact_count(3, 1.0, rng) == 3 for _ in range(200))

    def test_mean_preserved(self):
        rng = np.random.default_rng(2)
        draws = np.array([contact_count(7, 0.6, rng) for _ in range(40_000)])
        mean = 7.0**0.6
        se = np.sqrt(0.25 / draws.size)  # Bernoulli variance bound on the fraction
        assert abs(draws.mean() - mean) < 5 * se

    def test_never_exceeds_degree(self):
        rng = np.random.default_rng(3)
        for k in (1, 2, 3, 9):
            assert all(contact_count(k, 1.0, rng) <= k for _ in range(50))


class TestRunBasics:
    def test_lambda_zero_only_seed_informed(self):
        net = complete_graph(20)
        trace = run(net, ModelParams(lam=0.0, alpha=1.0), seeds=1, rng=5)
        assert trace.final_r == pytest.approx(1 / 20)
        assert trace.spreader[-1] == 0.0

    def test_everyone_inoculated_but_seed(self):
        net = complete_graph(20)
        trace = run(net, ModelParams(lam=10.0, alpha=1.0), plan=make_random_plan(1.0), seeds=1, rng=6)
        assert trace.inoculated_fraction == pytest.approx(19 / 20)
        assert trace.final_r == pytest.approx(1 / 20)

    def test_seed_count_validation(self):
        net = complete_graph(5)
        params = ModelParams(lam=1.0, alpha=1.0)
        with pytest.raises(ValueError):
            run(net, params, seeds=0)
        with pytest.raises(ValueError):
            run(net, params, seeds=6)

    def test_fraction_seeding(self):
        net = complete_graph(50)
        trace = run(net, ModelParams(lam=0.0, alpha=1.0), seeds=0.1, rng=7)
        assert trace.final_r == pytest.approx(5 / 50)

    def test_fractions_sum_to_one(self):
        net = complete_graph(30)
        trace = run(net, ModelParams(lam=1.0, alpha=0.7, beta=-0.4),
                    plan=make_random_plan(0.3), seeds=2, rng=8)
        total = trace.ignorant + trace.spreader + trace.stifler + trace.inoculated_fraction
        assert np.allclose(total, 1.0, atol=1e-12)

    def test_stifler_fraction_nondecreasing(self):
        net = complete_graph(40)
        trace = run(net, ModelParams(lam=2.0, alpha=1.0), seeds=1, rng=9)
        assert np.all(np.diff(trace.stifler) >= 0.0)

    def test_determinism_bitwise(self):
        dist = sample_powerlaw_distribution(2.4, 2, 500)
        net = build_configuration_network(dist, 500, np.random.default_rng(10))
        params = ModelParams(lam=1.0, alpha=0.5, beta=-0.5)
        a = run(net, params, seeds=3, rng=123)
        b = run(net, params, seeds=3, rng=123)
        assert np.array_equal(a.times, b.times)
        assert np.array_equal(a.stifler, b.stifler)
        assert np.array_equal(a.spreader, b.spreader)
        assert a.final_r == b.final_r

    def test_one_directional_status_flow(self):
        net = complete_graph(25)
        trace = run(net, ModelParams(lam=3.0, alpha=1.0), seeds=2, rng=11, record_events=True)
        allowed = {(IGNORANT, SPREADER), (SPREADER, STIFLER)}
        assert trace.events
        per_node: dict[int, list] = {}
        for t, node, old, new in trace.events:
            assert (old, new) in allowed
            per_node.setdefault(node, []).append((t, old, new))
        for transitions in per_node.values():
            assert len(transitions) <= 2
            if len(transitions) == 2:
                assert transitions[0][2] == SPREADER and transitions[1][2] == STIFLER


class TestMarkovOracle:
    """Exhaustive 3-node complete-graph chain with the same per-step rules."""

    @staticmethod
    def oracle(lam, sigma, dt, max_informed_prob=True):
        p = min(1.0, lam * dt)  # per contacted ignorant, per contacting spreader
        q = 1.0 - np.exp(-sigma * dt)
        # states (ignorant, spreader, stifler) with i+s+r = 3
        states = [(i, s, 3 - i - s) for i in range(4) for s in range(4 - i)]
        index = {state: j for j, state in enumerate(states)}
        size = len(states)
        transition = np.zeros((size, size))
        from math import comb
        for (i, s, r), j in index.items():
            if s == 0:
                transition[j, j] = 1.0
                continue
            p_inform = 1.0 - (1.0 - p) ** s  # contacted by every spreader
            for new_inf in range(i + 1):
                pi = comb(i, new_inf) * p_inform**new_inf * (1 - p_inform) ** (i - new_inf)
                for stifled in range(s + 1):
                    ps = comb(s, stifled) * q**stifled * (1 - q) ** (s - stifled)
                    target = (i - new_inf, s - stifled + new_inf, r + stifled)
                    transition[j, index[target]] += pi * ps
        start = np.zeros(size)
        start[index[(2, 1, 0)]] = 1.0
        for _ in range(100_000):
            nxt = start @ transition
            if np.max(np.abs(nxt - start)) < 1e-15:
                start = nxt
                break
            start = nxt
        informed_mean = sum(prob * (3 - i) / 3 for (i, s, r), j in index.items()
                            for prob in [start[j]] if s == 0)
        all_informed = sum(start[index[(0, 0, 3)]] for _ in [0])
        return informed_mean, all_informed

    def test_ensemble_matches_exact_chain(self):
        lam, sigma, dt = 3.0, 1.0, 0.1
        exact_mean, exact_all = self.oracle(lam, sigma, dt)
        net = complete_graph(3)
        params = ModelParams(lam=lam, alpha=1.0, beta=0.0, sigma=sigma)
        summary = ensemble(net, params, runs=4000, seeds=1, dt=dt, t_max=500.0, master_seed=77)
        se = summary.std_final_r / np.sqrt(4000)
        assert abs(summary.mean_final_r - exact_mean) < 4 * se + 1e-4
        frac_all = float((summary.finals > 0.99).mean())
        se_all = np.sqrt(exact_all * (1 - exact_all) / 4000)
        assert abs(frac_all - exact_all) < 4 * se_all + 1e-4

    def test_high_rate_informs_everyone(self):
        exact_mean, exact_all = self.oracle(50.0, 1.0, 0.05)
        assert exact_all > 0.9  # sanity on the oracle itself
        net = complete_graph(3)
        summary = ensemble(net, ModelParams(lam=50.0, alpha=1.0), runs=500,
                           seeds=1, dt=0.05, t_max=100.0, master_seed=78)
        assert abs(summary.mean_final_r - exact_mean) < 0.03


class TestEnsemble:
    def test_single_run_equals_trace(self, powerlaw_net):
        params = ModelParams(lam=0.5, alpha=0.5, beta=-0.5)
        summary = ensemble(powerlaw_net, params, runs=1, seeds=5, master_seed=42, keep_traces=True)
        assert summary.mean_final_r == summary.traces[0].final_r
        assert summary.std_final_r == 0.0

    def test_lambda_zero_exact(self, powerlaw_net):
        summary = ensemble(powerlaw_net, ModelParams(lam=0.0, alpha=1.0), runs=5,
                           seeds=7, master_seed=43)
        assert summary.mean_final_r == pytest.approx(7 / powerlaw_net.n)
        assert summary.std_final_r == 0.0

    def test_deterministic_given_master_seed(self, powerlaw_net):
        params = ModelParams(lam=0.8, alpha=0.5, beta=-0.5)
        a = ensemble(powerlaw_net, params, runs=3, seeds=5, master_seed=7)
        b = ensemble(powerlaw_net, params, runs=3, seeds=5, master_seed=7)
        assert np.array_equal(a.finals, b.finals)
        assert np.array_equal(a.seeds, b.seeds)

    def test_network_generator_callable(self):
        dist = sample_powerlaw_distribution(2.4, 2, 300)
        builder = lambda gen: build_configuration_network(dist, 300, gen)
        summary = ensemble(builder, ModelParams(lam=0.5, alpha=0.5, beta=-0.5),
                           runs=3, seeds=2, master_seed=11)
        assert summary.finals.size == 3

    def test_classical_runs_match_meanfield_well_above_threshold(self, powerlaw_net):
        # annealed theory overshoots quenched simulation near threshold; well
        # above it the two land within 0.1
        params = ModelParams(lam=2.0, alpha=1.0, beta=0.0, sigma=1.0)
        summary = ensemble(powerlaw_net, params, runs=30, seeds=10, dt=0.1,
                           t_max=200.0, master_seed=3)
        dist = sample_powerlaw_distribution(2.4, 2, 10**4)
        r_mf = final_rumor_size(dist, params)
        assert abs(summary.mean_final_r - r_mf) < 0.1

    def test_inoculated_nodes_never_change_status(self, powerlaw_net):
        dist = powerlaw_net.empirical_distribution()
        plan = make_targeted_plan(dist, 0.2)
        params = ModelParams(lam=1.0, alpha=0.5, beta=-0.5)
        trace = run(powerlaw_net, params, plan=plan, seeds=5, rng=55, record_events=True)
        # events only ever touch non-inoculated nodes; fractions stay consistent
        total = trace.ignorant + trace.spreader + trace.stifler + trace.inoculated_fraction
        assert np.allclose(total, 1.0, atol=1e-12)
        assert trace.inoculated_fraction > 0.15


class TestExports:
    def test_trace_csv(self, tmp_path):
        net = complete_graph(10)
        trace = run(net, ModelParams(lam=1.0, alpha=1.0), seeds=1, rng=0)
        path = tmp_path / "trace.csv"
        write_trace_csv(trace, path)
        lines = path.read_text().splitlines()
        assert lines[0] == "t,I,S,R"
        assert len(lines) == trace.times.size + 1

    def test_ensemble_csv(self, tmp_path):
        net = complete_graph(10)
        summary = ensemble(net, ModelParams(lam=1.0, alpha=1.0), runs=4, seeds=1, master_seed=1)
        path = tmp_path / "ens.csv"
        write_ensemble_csv(summary, path)
        lines = path.read_text().splitlines()
        assert lines[0] == "run,final_R,peak_S,seed"
        assert len(lines) == 5

    def test_mean_trace_padding(self):
        net = complete_graph(12)
        summary = ensemble(net, ModelParams(lam=2.0, alpha=1.0), runs=6, seeds=1,
                           master_seed=2, keep_traces=True)
        times, i, s, r = mean_trace(summary.traces)
        assert times.size == max(t.times.size for t in summary.traces)
        assert np.allclose(i + s + r, 1.0, atol=1e-12)
        assert np.all(np.diff(r) >= -1e-12)
