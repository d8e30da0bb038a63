"""Synthetic directed networks: uniform random and scale-free.

Both generators draw exactly ``L = round(k * N / 2)`` distinct directed
edges (no self-loops), so the realized total-degree average ``2L/N`` matches
the request up to rounding. A single seeded RNG stream makes every output
reproducible. The scale-free sampler follows the static weighting scheme:
node ``i`` gets weight ``(i + 1 + tau) ** -alpha`` with
``alpha = 1 / (gamma - 1)`` independently for the out (source) and in
(target) side, which pins both the edge count and the tail exponents. The
small smoothing constant ``tau`` spreads weight away from the first few
ranks; without it the top-rank nodes condense enough degree at desk scales
to blur the dense-network bifurcation, while the tail exponent is
unaffected (the shift is invisible for ranks well above ``tau``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GenerationError
from .network import DirectedNetwork

RANK_SMOOTHING = 5.0  # tau: rank shift applied to the static weights


@dataclass(frozen=True)
class GenSpec:
    """Parameters for one synthetic network."""

    model: str  # "er" | "sf"
    n: int
    avg_degree: float
    gamma_in: float = 3.0
    gamma_out: float = 3.0
    seed: int = 0

    def __post_init__(self):
        if self.model not in ("er", "sf"):
            raise GenerationError(f"unknown model {self.model!r}")
        if self.n < 1:
            raise GenerationError("n must be at least 1")
        if self.avg_degree < 0:
            raise GenerationError("avg_degree must be non-negative")
        if self.model == "sf" and (self.gamma_in <= 2 or self.gamma_out <= 2):
            raise GenerationError("degree exponents must exceed 2")

    @property
    def edge_target(self) -> int:
        # half away from zero; round() would settle ties toward even
        return int(math.floor(self.avg_degree * self.n / 2 + 0.5))


def er_directed(spec: GenSpec) -> DirectedNetwork:
    """Uniform digraph: ``edge_target`` distinct edges without replacement."""
    if spec.model != "er":
        raise GenerationError("spec.model must be 'er'")
    target = spec.edge_target
    capacity = spec.n * (spec.n - 1)
    if target > capacity:
        raise GenerationError(
            f"{target} edges requested but only {capacity} possible")
    rng = np.random.default_rng(spec.seed)
    edges = _rejection_sample(rng, target, capacity * max(spec.n, 10),
                              lambda size: (rng.integers(0, spec.n, size),
                                            rng.integers(0, spec.n, size)))
    return DirectedNetwork(spec.n, edges)


def scale_free_directed(spec: GenSpec) -> DirectedNetwork:
    """Scale-free digraph via static per-node weights on both edge ends."""
    if spec.model != "sf":
        raise GenerationError("spec.model must be 'sf'")
    target = spec.edge_target
    capacity = spec.n * (spec.n - 1)
    if target > capacity:
        raise GenerationError(
            f"{target} edges requested but only {capacity} possible")
    rng = np.random.default_rng(spec.seed)
    ranks = np.arange(1, spec.n + 1, dtype=np.float64) + RANK_SMOOTHING
    p_out = ranks ** (-1.0 / (spec.gamma_out - 1.0))
    p_in = ranks ** (-1.0 / (spec.gamma_in - 1.0))
    p_out /= p_out.sum()
    p_in /= p_in.sum()
    stall_budget = max(spec.n * max(target, 1), 10_000)
    edges = _rejection_sample(
        rng, target, stall_budget,
        lambda size: (rng.choice(spec.n, size=size, p=p_out),
                      rng.choice(spec.n, size=size, p=p_in)))
    return DirectedNetwork(spec.n, edges)


def generate(spec: GenSpec) -> DirectedNetwork:
    return er_directed(spec) if spec.model == "er" else scale_free_directed(spec)


def _rejection_sample(rng, target, stall_budget, draw) -> list[tuple[int, int]]:
    """Accept distinct non-loop pairs from ``draw`` until ``target`` reached.

    ``stall_budget`` bounds the attempts allowed without accepting a new
    edge; exceeding it raises :class:`GenerationError` instead of spinning.
    """
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    since_accept = 0
    batch = max(1024, 2 * target)
    while len(edges) < target:
        srcs, dsts = draw(batch)
        accepted_any = False
        for u, v in zip(srcs.tolist(), dsts.tolist()):
            if u == v or (u, v) in seen:
                since_accept += 1
                if since_accept > stall_budget:
                    raise GenerationError(
                        f"no new edge after {since_accept} attempts "
                        f"({len(edges)}/{target} drawn)")
                continue
            seen.add((u, v))
            edges.append((u, v))
            since_accept = 0
            accepted_any = True
            if len(edges) == target:
                break
        if not accepted_any and since_accept > stall_budget:
            raise GenerationError("sampling stalled")
    return edges
