"""Agent-level stochastic simulation of rumor spreading on concrete networks.

Discrete-time loop with step length dt.  Within a step, every current
spreader i of degree k_i draws a contact count by randomized rounding of
k_i**alpha, samples that many distinct neighbors uniformly, and converts each
contacted ignorant with probability min(1, lam * k_i * (w_ij / S_i) * dt),
where w_ij is the degree-derived tie strength and S_i the node's actual
summed tie strength on the graph.  After its contacts the spreader turns
stifler with probability 1 - exp(-sigma * dt).  Updates are synchronous: a
node informed in this step starts spreading in the next one.  Inoculated
nodes are frozen; they are skipped both as sources and as targets.

The per-pair transmission rate this realizes, lam * k_i**alpha * w_ij / S_i,
is invariant under dt, so halving dt only tightens the discretization
(measured at the default dt=0.1 on a 10^4-node power-law graph, halving dt
moves 50-run mean final sizes by under a few hundredths).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .inoculation import InoculationPlan, apply_plan
from .meanfield import ModelParams
from .netgen import Network

__all__ = [
    "IGNORANT",
    "INOCULATED",
    "SPREADER",
    "STIFLER",
    "EnsembleSummary",
    "SimState",
    "SimTrace",
    "contact_count",
    "ensemble",
    "mean_trace",
    "run",
    "write_ensemble_csv",
    "write_trace_csv",
]

IGNORANT, SPREADER, STIFLER, INOCULATED = 0, 1, 2, 3
STATUS_NAMES = {IGNORANT: "ignorant", SPREADER: "spreader", STIFLER: "stifler", INOCULATED: "inoculated"}


@dataclass
class SimState:
    """Per-node statuses at one instant of a run."""

    status: np.ndarray
    time: float = 0.0

    def counts(self) -> dict[str, int]:
        return {name: int((self.status == code).sum()) for code, name in STATUS_NAMES.items()}


@dataclass
class SimTrace:
    """Sampled population fractions of one run; informed = spreaders + stiflers."""

    times: np.ndarray
    ignorant: np.ndarray
    spreader: np.ndarray
    stifler: np.ndarray
    inoculated_fraction: float
    final_r: float
    peak_s: float
    seed: int | None = None
    events: list[tuple[float, int, int, int]] | None = None  # (t, node, old, new)


def contact_count(degree: int, alpha: float, rng: np.random.Generator) -> int:
    """Randomized rounding of degree**alpha: floor plus a Bernoulli on the fraction.

    Preserves the mean exactly and reduces to the integer itself when
    degree**alpha is integral (a degree-1 node always makes its one contact).
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if degree == 0:
        return 0
    mean = float(degree) ** alpha
    base = int(mean)
    frac = mean - base
    if frac > 0.0 and rng.random() < frac:
        base += 1
    return min(base, degree)


def _as_rng(rng) -> tuple[np.random.Generator, int | None]:
    if isinstance(rng, np.random.Generator):
        return rng, None
    seed = int(rng)
    return np.random.default_rng(seed), seed


def run(
    network: Network,
    params: ModelParams,
    plan: InoculationPlan | None = None,
    seeds: int | float = 1,
    dt: float = 0.1,
    t_max: float = 200.0,
    rng: np.random.Generator | int = 0,
    record_events: bool = False,
) -> SimTrace:
    """Simulate one outbreak; returns the sampled trace.

    ``seeds`` is an initial spreader count (int) or population fraction
    (float < 1).  Seed nodes are drawn first, uniformly over all nodes, and
    are excluded from inoculation, so a full-coverage plan still leaves the
    seeds active.  The loop stops when no spreaders remain or t reaches t_max.
    Passing an int ``rng`` records it as the run's seed; a Generator is used
    as-is.
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    gen, seed_label = _as_rng(rng)
    n = network.n
    if isinstance(seeds, float) and 0 < seeds < 1:
        n_seeds = max(1, int(round(seeds * n)))
    else:
        n_seeds = int(seeds)
    if not 1 <= n_seeds <= n:
        raise ValueError(f"need between 1 and {n} seed spreaders, got {n_seeds}")

    seed_ids = gen.choice(n, size=n_seeds, replace=False)
    inoculated = np.setdiff1d(apply_plan(network, plan, gen), seed_ids)

    deg = network.degrees.astype(np.float64)
    beta = params.beta
    # w_ij / S_i = k_j**beta / sum_{l in N(i)} k_l**beta  (the k_i**beta factors cancel)
    kbeta = np.where(deg > 0, deg ** beta, 0.0)
    strength = np.array(
        [kbeta[nbrs].sum() if nbrs.size else 0.0 for nbrs in network.adjacency]
    )
    pfac = np.where(strength > 0, params.lam * deg * dt / np.where(strength > 0, strength, 1.0), 0.0)
    c_mean = np.where(deg > 0, deg ** params.alpha, 0.0)
    c_floor = np.floor(c_mean).astype(np.int64)
    c_frac = c_mean - c_floor
    stifle_p = 1.0 - np.exp(-params.sigma * dt)

    status = np.zeros(n, dtype=np.int8)
    status[inoculated] = INOCULATED
    status[seed_ids] = SPREADER
    inoc_frac = inoculated.size / n
    events: list[tuple[float, int, int, int]] | None = [] if record_events else None
    if record_events:
        for node in seed_ids:
            events.append((0.0, int(node), IGNORANT, SPREADER))

    times = [0.0]
    spr_counts = [n_seeds]
    sti_counts = [0]
    t = 0.0
    adjacency = network.adjacency
    while t < t_max:
        spreaders = np.flatnonzero(status == SPREADER)
        if spreaders.size == 0:
            break
        hits: list[np.ndarray] = []
        for i in spreaders:
            nbrs = adjacency[i]
            if nbrs.size == 0:
                continue
            c = c_floor[i]
            if c_frac[i] > 0.0 and gen.random() < c_frac[i]:
                c += 1
            if c == 0:
                continue
            contacted = nbrs if c >= nbrs.size else gen.choice(nbrs, size=c, replace=False)
            ign = contacted[status[contacted] == IGNORANT]
            if ign.size:
                p = np.minimum(1.0, pfac[i] * kbeta[ign])
                hit = ign[gen.random(ign.size) < p]
                if hit.size:
                    hits.append(hit)
        stifled = spreaders[gen.random(spreaders.size) < stifle_p]
        t += dt
        status[stifled] = STIFLER
        if record_events:
            for node in stifled:
                events.append((t, int(node), SPREADER, STIFLER))
        if hits:
            new_ids = np.unique(np.concatenate(hits))
            new_ids = new_ids[status[new_ids] == IGNORANT]
            status[new_ids] = SPREADER
            if record_events:
                for node in new_ids:
                    events.append((t, int(node), IGNORANT, SPREADER))
        times.append(t)
        spr_counts.append(int((status == SPREADER).sum()))
        sti_counts.append(int((status == STIFLER).sum()))

    times_arr = np.array(times)
    spr = np.array(spr_counts, dtype=np.float64) / n
    sti = np.array(sti_counts, dtype=np.float64) / n
    ign = 1.0 - spr - sti - inoc_frac
    return SimTrace(
        times=times_arr,
        ignorant=ign,
        spreader=spr,
        stifler=sti,
        inoculated_fraction=inoc_frac,
        final_r=float(sti[-1] + spr[-1]),
        peak_s=float(spr.max()),
        seed=seed_label,
        events=events,
    )


@dataclass
class EnsembleSummary:
    """Aggregates of independent runs with identical settings."""

    mean_final_r: float
    std_final_r: float
    mean_peak_s: float
    finals: np.ndarray
    peaks: np.ndarray
    seeds: np.ndarray
    traces: list[SimTrace] | None = field(default=None, repr=False)


def _run_seed(master_seed: int, index: int) -> int:
    # counter-derived child seed; independent of execution order
    return int(np.random.SeedSequence([int(master_seed), int(index)]).generate_state(1)[0])


def ensemble(
    network_or_generator,
    params: ModelParams,
    plan: InoculationPlan | None = None,
    runs: int = 50,
    seeds: int | float = 1,
    dt: float = 0.1,
    t_max: float = 200.0,
    master_seed: int = 0,
    keep_traces: bool = False,
) -> EnsembleSummary:
    """Aggregate ``runs`` independent runs, deterministically keyed to master_seed.

    ``network_or_generator`` is either a fixed Network shared by every run or
    a callable taking a Generator and returning a fresh Network per run.
    """
    if runs < 1:
        raise ValueError("runs must be >= 1")
    finals = np.empty(runs)
    peaks = np.empty(runs)
    run_seeds = np.empty(runs, dtype=np.int64)
    traces: list[SimTrace] | None = [] if keep_traces else None
    for idx in range(runs):
        seed = _run_seed(master_seed, idx)
        gen = np.random.default_rng(seed)
        net = network_or_generator(gen) if callable(network_or_generator) else network_or_generator
        trace = run(net, params, plan=plan, seeds=seeds, dt=dt, t_max=t_max, rng=gen)
        trace.seed = seed
        finals[idx] = trace.final_r
        peaks[idx] = trace.peak_s
        run_seeds[idx] = seed
        if keep_traces:
            traces.append(trace)
    return EnsembleSummary(
        mean_final_r=float(finals.mean()),
        std_final_r=float(finals.std()),
        mean_peak_s=float(peaks.mean()),
        finals=finals,
        peaks=peaks,
        seeds=run_seeds,
        traces=traces,
    )


def mean_trace(traces: list[SimTrace]) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Average I/S/R curves over runs on a shared time grid.

    Runs end at different times; shorter runs are padded with their final
    values (the absorbing state persists).  Returns (times, I, S, R).
    """
    if not traces:
        raise ValueError("need at least one trace")
    longest = max(t.times.size for t in traces)
    ref = max(traces, key=lambda t: t.times.size).times

    def padded(values: np.ndarray) -> np.ndarray:
        out = np.full(longest, values[-1], dtype=np.float64)
        out[: values.size] = values
        return out

    i = np.mean([padded(t.ignorant) for t in traces], axis=0)
    s = np.mean([padded(t.spreader) for t in traces], axis=0)
    r = np.mean([padded(t.stifler) for t in traces], axis=0)
    return ref, i, s, r


def write_trace_csv(trace: SimTrace, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write("t,I,S,R\n")
        for j in range(trace.times.size):
            fh.write(
                f"{float(trace.times[j])!r},{float(trace.ignorant[j])!r},"
                f"{float(trace.spreader[j])!r},{float(trace.stifler[j])!r}\n"
            )


def write_ensemble_csv(summary: EnsembleSummary, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write("run,final_R,peak_S,seed\n")
        for idx in range(summary.finals.size):
            fh.write(f"{idx},{float(summary.finals[idx])!r},{float(summary.peaks[idx])!r},{int(summary.seeds[idx])}\n")
