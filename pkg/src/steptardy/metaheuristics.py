"""Variable neighborhood search metaheuristics.

``gvns`` shakes the incumbent in a cycling neighborhood, improves the
shaken point with a variable neighborhood descent through all five
neighborhoods in a freshly randomized order, accepts strict improvements
only, and restarts from a three-cut perturbation of the incumbent after a
stretch of non-improving iterations.  ``vns`` is the plain variant: the
local search uses only the shaking neighborhood, the neighborhood index
advances only on failure, and there is no perturbation.

Each run draws from three independent substreams (shaking, descent order,
perturbation) derived from the run seed, so identical parameters reproduce
identical results, iteration counts included.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from random import Random
from typing import Sequence

from .core import Instance, RunResult, total_tardiness
from .neighborhoods import NEIGHBORHOOD_IDS, descend, perturb_three_opt, shake
from .seeding import derive_seed


@dataclass(frozen=True)
class SearchParams:
    """Stopping rule and seed for one metaheuristic run.

    The run stops once the iteration count exceeds ``iter_max`` or the
    number of consecutive non-improving iterations exceeds ``iter_nip``;
    ``gamma`` iterations without improvement trigger the perturbation.
    When ``gamma`` is omitted it defaults to half of ``iter_nip``.
    """

    iter_max: int = 500
    iter_nip: int = 150
    gamma: int | None = None
    seed: int = 0
    k_max: int = 5

    def __post_init__(self):
        if self.gamma is None:
            object.__setattr__(self, "gamma", self.iter_nip // 2)
        if self.iter_max <= 0:
            raise ValueError("iter_max must be positive")
        if not 0 < self.iter_nip <= self.iter_max:
            raise ValueError("iter_nip must satisfy 0 < iter_nip <= iter_max")
        if not 0 < self.gamma <= self.iter_nip:
            raise ValueError("gamma must satisfy 0 < gamma <= iter_nip")
        if not 1 <= self.k_max <= len(NEIGHBORHOOD_IDS):
            raise ValueError(f"k_max must lie in 1..{len(NEIGHBORHOOD_IDS)}")


def edd_sequence(instance: Instance) -> list[int]:
    """Job ids by non-decreasing due date, ties broken by smaller id."""
    return [job.id for job in sorted(instance.jobs, key=lambda j: (j.d, j.id))]


def vnd(instance: Instance, sequence: Sequence[int], order: Sequence[int]) -> list[int]:
    """Variable neighborhood descent through the neighborhoods in ``order``.

    Each neighborhood is descended to its fixpoint before moving to the
    next one, so a second application of the same neighborhood cannot
    improve and the scan needs a single pass.  The result never has a
    larger total than the input.
    """
    if sorted(order) != sorted(NEIGHBORHOOD_IDS[: len(order)]):
        raise ValueError(f"order {list(order)} must be a permutation of 1..{len(order)}")
    seq = list(sequence)
    for k in order:
        seq = descend(instance, seq, k)
    return seq


def gvns(instance: Instance, params: SearchParams = SearchParams()) -> RunResult:
    """General variable neighborhood search from an EDD start.

    One iteration shakes the incumbent in the cycling neighborhood k,
    applies VND in a freshly drawn random neighborhood order, and accepts
    the result only when strictly better.  The shaking neighborhood
    advances every iteration.  After more than ``gamma`` iterations without
    improvement (while the non-improvement stop is still out of reach) the
    incumbent is replaced by a three-opt perturbation of itself; the best
    sequence ever seen is tracked separately so the perturbation never
    loses it.
    """
    t0 = time.perf_counter()
    rng_shake = Random(derive_seed(params.seed, "shake"))
    rng_order = Random(derive_seed(params.seed, "order"))
    rng_perturb = Random(derive_seed(params.seed, "perturb"))

    cur = edd_sequence(instance)
    cur_val = total_tardiness(instance, cur)
    best, best_val = list(cur), cur_val
    ks = list(range(1, params.k_max + 1))
    iter1 = iter2 = iter3 = 0
    perturbations = 0
    k = 1
    trace = []
    while True:
        cand = shake(cur, k, rng_shake)
        order = list(ks)
        rng_order.shuffle(order)
        cand = vnd(instance, cand, order)
        cand_val = total_tardiness(instance, cand)
        if cand_val < cur_val:
            cur, cur_val = cand, cand_val
            iter2 = 0
            iter3 = 0
            if cur_val < best_val:
                best, best_val = list(cur), cur_val
        else:
            iter2 += 1
            iter3 += 1
        iter1 += 1
        trace.append(best_val)
        if iter3 > params.gamma and iter2 < params.iter_nip:
            if instance.n >= 4:
                cur = perturb_three_opt(cur, rng_perturb)
                cur_val = total_tardiness(instance, cur)
            # below 4 jobs the perturbation is the identity; the counter
            # still resets so the trigger is not re-armed every iteration
            iter3 = 0
            perturbations += 1
        k = k % params.k_max + 1
        if iter1 > params.iter_max or iter2 > params.iter_nip:
            break
    return RunResult(
        best_sequence=tuple(best),
        best_value=best_val,
        iterations=iter1,
        perturbations=perturbations,
        elapsed=time.perf_counter() - t0,
        seed=params.seed,
        trace=tuple(trace),
    )


def vns(instance: Instance, params: SearchParams = SearchParams()) -> RunResult:
    """Plain variable neighborhood search baseline.

    The local search applies only the shaking neighborhood's descent; on
    improvement the neighborhood is kept, otherwise the index advances.
    No perturbation phase, same stopping rule as ``gvns``.
    """
    t0 = time.perf_counter()
    rng_shake = Random(derive_seed(params.seed, "shake"))

    cur = edd_sequence(instance)
    cur_val = total_tardiness(instance, cur)
    iter1 = iter2 = 0
    k = 1
    trace = []
    while True:
        cand = shake(cur, k, rng_shake)
        cand = descend(instance, cand, k)
        cand_val = total_tardiness(instance, cand)
        if cand_val < cur_val:
            cur, cur_val = cand, cand_val
            iter2 = 0
        else:
            k = k % params.k_max + 1
            iter2 += 1
        iter1 += 1
        trace.append(cur_val)
        if iter1 > params.iter_max or iter2 > params.iter_nip:
            break
    return RunResult(
        best_sequence=tuple(cur),
        best_value=cur_val,
        iterations=iter1,
        perturbations=0,
        elapsed=time.perf_counter() - t0,
        seed=params.seed,
        trace=tuple(trace),
    )
