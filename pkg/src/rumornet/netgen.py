"""Scale-free degree distributions and network synthesis.

Degree distributions are discrete power laws P(k) proportional to k**-gamma,
truncated to [k_min, k_max] with the finite-size hard cutoff
k_max = k_min * n**(1/(gamma-1)).  Networks are undirected simple graphs built
either by preferential-attachment growth (which locks the exponent near 3) or
by the configuration model (which realizes an arbitrary target distribution).
Edge weights are never stored: the tie strength of an edge is derived from its
endpoint degrees as w_ij = b * (k_i * k_j)**beta.

All generators are pure functions of an explicit numpy Generator, so they can
run concurrently as long as each task owns its own stream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DegreeDistribution",
    "DegreeSequenceError",
    "Network",
    "TieStrengthParams",
    "build_ba_network",
    "build_configuration_network",
    "degree_moment",
    "node_strength",
    "read_distribution_csv",
    "read_edge_list",
    "sample_powerlaw_distribution",
    "tie_strength",
    "write_distribution_csv",
    "write_edge_list",
]


class DegreeSequenceError(RuntimeError):
    """A drawn degree sequence cannot be realized as a simple graph."""


@dataclass(frozen=True)
class TieStrengthParams:
    """Parameters of the power-law tie strength w_ij = b * (k_i * k_j)**beta.

    beta > 0 favors transmission toward high-degree nodes, beta < 0 toward
    low-degree nodes, and beta = 0 recovers degree-independent transmission.
    The prefactor b cancels out of every normalized transmission rate; it is
    kept so raw edge weights remain meaningful.
    """

    beta: float = 0.0
    b: float = 1.0

    def __post_init__(self) -> None:
        if not self.b > 0:
            raise ValueError(f"tie-strength prefactor b must be positive, got {self.b}")


class DegreeDistribution:
    """Normalized degree distribution on a finite, strictly increasing support.

    Moments <k**q> are computed on demand and cached.  ``gamma`` records the
    power-law exponent when the distribution was built as a truncated power
    law; ad-hoc distributions leave it as None.
    """

    def __init__(self, support, probs, gamma: float | None = None):
        support = np.asarray(support, dtype=np.int64)
        probs = np.asarray(probs, dtype=np.float64)
        if support.ndim != 1 or support.shape != probs.shape or support.size == 0:
            raise ValueError("support and probs must be 1-d arrays of equal, nonzero length")
        if np.any(support < 1):
            raise ValueError("support degrees must be positive integers")
        if support.size > 1 and np.any(np.diff(support) <= 0):
            raise ValueError("support degrees must be strictly increasing")
        if np.any(probs < 0):
            raise ValueError("probabilities must be nonnegative")
        total = float(probs.sum())
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"probabilities must sum to 1 within 1e-12, got {total!r}")
        support.setflags(write=False)
        probs.setflags(write=False)
        self.support = support
        self.probs = probs
        self.k_min = int(support[0])
        self.k_max = int(support[-1])
        self.gamma = None if gamma is None else float(gamma)
        self._moments: dict[float, float] = {}

    def __repr__(self) -> str:
        g = f", gamma={self.gamma}" if self.gamma is not None else ""
        return f"DegreeDistribution(k_min={self.k_min}, k_max={self.k_max}, classes={self.support.size}{g})"

    def __len__(self) -> int:
        return int(self.support.size)

    @property
    def prob(self) -> dict[int, float]:
        """Mapping view degree -> probability."""
        return {int(k): float(p) for k, p in zip(self.support, self.probs)}

    @property
    def gamma_prime(self) -> float | None:
        """Alternative exponent convention P(k) ~ k**-(2 + gamma'), i.e. gamma' = gamma - 2."""
        return None if self.gamma is None else self.gamma - 2.0

    def moment(self, q: float) -> float:
        """Return <k**q> = sum_k k**q P(k)."""
        q = float(q)
        if q not in self._moments:
            self._moments[q] = float((self.support.astype(np.float64) ** q * self.probs).sum())
        return self._moments[q]

    @property
    def mean_degree(self) -> float:
        return self.moment(1.0)


def sample_powerlaw_distribution(gamma: float, k_min: int, n_nodes: int) -> DegreeDistribution:
    """Build the truncated power law P(k) ~ k**-gamma on {k_min .. floor(k_max)}.

    The hard cutoff k_max = k_min * n_nodes**(1/(gamma-1)) ties the largest
    admissible degree to the network size.  gamma must lie in (2, 3]; at or
    below 2 the mean degree diverges and the threshold analysis breaks down.
    """
    if not 2.0 < gamma <= 3.0:
        raise ValueError(f"gamma must lie in (2, 3], got {gamma}")
    if k_min < 1:
        raise ValueError(f"k_min must be >= 1, got {k_min}")
    if n_nodes < 2:
        raise ValueError(f"n_nodes must be >= 2, got {n_nodes}")
    k_max = int(math.floor(k_min * n_nodes ** (1.0 / (gamma - 1.0))))
    if k_max < k_min:
        raise ValueError(f"cutoff k_max={k_max} fell below k_min={k_min}")
    support = np.arange(k_min, k_max + 1, dtype=np.int64)
    probs = support.astype(np.float64) ** (-gamma)
    probs /= probs.sum()
    return DegreeDistribution(support, probs, gamma=gamma)


def degree_moment(dist: DegreeDistribution, q: float) -> float:
    """Return the distribution moment <k**q>."""
    return dist.moment(q)


def tie_strength(k_i: int, k_j: int, p: TieStrengthParams) -> float:
    """Tie strength w_ij = b * (k_i * k_j)**beta; symmetric in its degree arguments."""
    if k_i < 1 or k_j < 1:
        raise ValueError("degrees must be >= 1")
    return p.b * float(k_i * k_j) ** p.beta


def node_strength(dist: DegreeDistribution, k: int, p: TieStrengthParams) -> float:
    """Expected total tie strength of a degree-k node on an uncorrelated network.

    Uses the neighbor-degree closure P(l|k) = l P(l) / <k>, which gives
    S_k = b * k**(1+beta) * <k**(1+beta)> / <k>.
    """
    if k not in dist.support:
        raise ValueError(f"degree {k} not in the distribution support")
    return p.b * float(k) ** (1.0 + p.beta) * dist.moment(1.0 + p.beta) / dist.moment(1.0)


class Network:
    """Undirected simple graph stored as per-node neighbor arrays.

    ``erased_edges`` counts stub pairs the configuration model had to discard
    after its rejection rounds; it is 0 for every other builder.
    """

    def __init__(self, n: int, edges, erased_edges: int = 0):
        if n < 1:
            raise ValueError("a network needs at least one node")
        seen: set[int] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        count = 0
        for u, v in edges:
            u = int(u)
            v = int(v)
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            key = u * n + v if u < v else v * n + u
            if key in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
            count += 1
        self.n = n
        self.adjacency = tuple(np.array(sorted(nbrs), dtype=np.int64) for nbrs in adj)
        self.degrees = np.array([len(a) for a in self.adjacency], dtype=np.int64)
        self.degrees.setflags(write=False)
        self.edge_count = count
        self.erased_edges = int(erased_edges)

    def __repr__(self) -> str:
        return f"Network(n={self.n}, edges={self.edge_count})"

    def edges(self):
        """Yield each undirected edge once as (u, v) with u < v, sorted."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield u, int(v)

    def validate(self) -> None:
        """Re-check symmetry, simplicity, and degree bookkeeping."""
        for u in range(self.n):
            nbrs = self.adjacency[u]
            if len(nbrs) != self.degrees[u]:
                raise AssertionError(f"degree mismatch at node {u}")
            if len(np.unique(nbrs)) != len(nbrs):
                raise AssertionError(f"multi-edge at node {u}")
            if np.any(nbrs == u):
                raise AssertionError(f"self-loop at node {u}")
            for v in nbrs:
                if u not in self.adjacency[v]:
                    raise AssertionError(f"asymmetric edge ({u},{v})")
        if int(self.degrees.sum()) != 2 * self.edge_count:
            raise AssertionError("degree sum does not equal twice the edge count")

    def empirical_distribution(self) -> DegreeDistribution:
        """Degree distribution of the graph, restricted to nodes of degree >= 1."""
        degs = self.degrees[self.degrees >= 1]
        if degs.size == 0:
            raise ValueError("network has no edges")
        values, counts = np.unique(degs, return_counts=True)
        return DegreeDistribution(values, counts / counts.sum())


def build_ba_network(n_nodes: int, m0: int, m: int, rng: np.random.Generator) -> Network:
    """Grow a preferential-attachment network from an m0-clique seed.

    Each of the n_nodes - m0 added nodes attaches m distinct edges to existing
    nodes with probability proportional to their current degree, so the edge
    count is exactly C(m0, 2) + m * (n_nodes - m0) and the degree distribution
    approaches P(k) ~ k**-3 for large n_nodes.
    """
    if not (n_nodes > m0 >= m >= 1):
        raise ValueError(f"need n_nodes > m0 >= m >= 1, got n_nodes={n_nodes}, m0={m0}, m={m}")
    edges: list[tuple[int, int]] = []
    # one entry per unit of degree; uniform draws from it are degree-biased
    pool: list[int] = []
    for u in range(m0):
        for v in range(u + 1, m0):
            edges.append((u, v))
            pool.append(u)
            pool.append(v)
    if m0 == 1:
        pool.append(0)  # a bare single seed node is otherwise unreachable
    for v in range(m0, n_nodes):
        targets: set[int] = set()
        while len(targets) < m:
            targets.add(pool[int(rng.integers(len(pool)))])
        for u in targets:
            edges.append((u, v))
            pool.append(u)
            pool.append(v)
    return Network(n_nodes, edges)


def build_configuration_network(
    dist: DegreeDistribution,
    n_nodes: int,
    rng: np.random.Generator,
    max_rounds: int = 100,
    parity_retries: int = 100,
) -> Network:
    """Realize ``dist`` as a simple graph by stub matching.

    Degrees are drawn i.i.d. from the distribution; the last node is resampled
    until the stub sum is even.  Stubs are then shuffled and paired; pairs that
    would create a self-loop or repeat an existing edge are thrown back and
    re-shuffled, for up to ``max_rounds`` rounds.  Whatever stubs remain after
    that are erased (their count is recorded on the returned network), which
    keeps the generator total at the cost of a slightly truncated tail.
    """
    if n_nodes < 2:
        raise ValueError("need at least 2 nodes")
    degrees = rng.choice(dist.support, size=n_nodes, p=dist.probs)
    attempts = 0
    while degrees.sum() % 2 == 1:
        if attempts >= parity_retries:
            raise DegreeSequenceError(
                "could not reach an even stub sum by resampling the last node; "
                "the distribution cannot supply a feasible degree sequence"
            )
        degrees[-1] = rng.choice(dist.support, p=dist.probs)
        attempts += 1
    stubs = np.repeat(np.arange(n_nodes, dtype=np.int64), degrees)
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    leftover = stubs
    for _ in range(max_rounds):
        if leftover.size < 2:
            break
        rng.shuffle(leftover)
        rejected: list[int] = []
        it = iter(range(0, leftover.size - 1, 2))
        for i in it:
            u = int(leftover[i])
            v = int(leftover[i + 1])
            if u == v:
                rejected += (u, v)
                continue
            key = (u, v) if u < v else (v, u)
            if key in seen:
                rejected += (u, v)
                continue
            seen.add(key)
            edges.append(key)
        leftover = np.array(rejected, dtype=np.int64)
        if leftover.size == 0:
            break
    erased = int(leftover.size) // 2
    return Network(n_nodes, edges, erased_edges=erased)


def write_edge_list(network: Network, path) -> None:
    """Serialize to the text format: ``# nodes=<N>`` then one ``u v`` line per edge, u < v."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"# nodes={network.n}\n")
        for u, v in network.edges():
            fh.write(f"{u} {v}\n")


def read_edge_list(path) -> Network:
    n = None
    edges = []
    with open(path, encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                if n is None and "nodes=" in line:
                    n = int(line.split("nodes=")[1])
                continue
            u, v = line.split()
            edges.append((int(u), int(v)))
    if n is None:
        raise ValueError(f"{path}: missing '# nodes=<N>' header")
    return Network(n, edges)


def write_distribution_csv(dist: DegreeDistribution, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write("k,p\n")
        for k, p in zip(dist.support, dist.probs):
            fh.write(f"{int(k)},{float(p)!r}\n")


def read_distribution_csv(path) -> DegreeDistribution:
    ks, ps = [], []
    with open(path, encoding="ascii") as fh:
        header = fh.readline().strip()
        if header != "k,p":
            raise ValueError(f"{path}: expected 'k,p' header, got {header!r}")
        for line in fh:
            line = line.strip()
            if not line:
                continue
            k, p = line.split(",")
            ks.append(int(k))
            ps.append(float(p))
    return DegreeDistribution(ks, ps)
