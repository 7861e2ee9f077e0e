"""Simple weighted search procedure: a deterministic constructive heuristic.

A grid of weight triples (w1, w2, w3) is generated; for each triple a
sequence is built greedily by always appending the unscheduled job with the
smallest weighted score w1*d_j + w2*p_j + w3*h_j, where p_j is the
processing time the job would actually incur if started now.  The best
constructed sequence is then polished by a pairwise-swap improvement pass.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from .core import Instance, RunResult, _arrays, _check_permutation, total_tardiness


@dataclass(frozen=True)
class WeightTriple:
    w1: float
    w2: float
    w3: float


@dataclass(frozen=True)
class SwspParams:
    """Weight-grid bounds and improvement options.

    w3 is 1 - w1 - w2 and falls back to ``w3_fallback`` whenever that is not
    positive.  ``swap_until_fixpoint`` repeats the swap pass until it stops
    improving instead of the default single pass.
    """

    w1_min: float = 0.2
    w1_max: float = 0.9
    w2_min: float = 0.1
    w2_max: float = 0.7
    w3_fallback: float = 0.1
    swap_until_fixpoint: bool = False

    def __post_init__(self):
        if self.w1_min > self.w1_max or self.w2_min > self.w2_max:
            raise ValueError("weight bounds must satisfy min <= max")
        if self.w3_fallback <= 0:
            raise ValueError("w3_fallback must be positive")


def weight_grid(n: int, params: SwspParams = SwspParams()) -> list[WeightTriple]:
    """All n*n weight triples in (l1, l2) lexicographic order.

    w1 ramps linearly from w1_min to w1_max over l1 = 1..n, w2 likewise over
    l2 = 1..n, and w3 = 1 - w1 - w2 clamped to the fallback when <= 0.
    Needs n >= 2 (the ramp divides by n - 1).
    """
    if n < 2:
        raise ValueError("weight grid needs n >= 2")
    triples = []
    for l1 in range(1, n + 1):
        w1 = params.w1_min + (params.w1_max - params.w1_min) * (l1 - 1) / (n - 1)
        for l2 in range(1, n + 1):
            w2 = params.w2_min + (params.w2_max - params.w2_min) * (l2 - 1) / (n - 1)
            w3 = 1.0 - w1 - w2
            if w3 <= 0:
                w3 = params.w3_fallback
            triples.append(WeightTriple(w1, w2, w3))
    return triples


def greedy_construct(instance: Instance, triple: WeightTriple) -> list[int]:
    """Build one sequence for a fixed weight triple.

    The job with the smallest due date opens the sequence; afterwards the
    unscheduled job with the smallest score w1*d + w2*p + w3*h is appended,
    with p the processing time the job would incur if started at the current
    completion time.  Score ties break on the smaller job id.
    """
    a, ab, d, h = _arrays(instance)
    n = instance.n
    unscheduled = set(range(1, n + 1))
    first = min(unscheduled, key=lambda j: (d[j], j))
    seq = [first]
    unscheduled.remove(first)
    c = a[first]  # first start is 0 <= h for any h >= 0
    w1, w2, w3 = triple.w1, triple.w2, triple.w3
    while unscheduled:
        nxt = None
        best_key = None
        for j in unscheduled:
            p = a[j] if c <= h[j] else ab[j]
            key = (w1 * d[j] + w2 * p + w3 * h[j], j)
            if best_key is None or key < best_key:
                best_key, nxt = key, j
        seq.append(nxt)
        unscheduled.remove(nxt)
        c += a[nxt] if c <= h[nxt] else ab[nxt]
    return seq


def pairwise_swap_pass(instance: Instance, sequence: Sequence[int]) -> list[int]:
    """One full i/j double loop of position swaps, accepting strict improvements.

    Both orders of every pair are visited (i = 1..n, j = 1..n, i != j); an
    accepted swap immediately replaces the working sequence, so later swaps
    are evaluated against it.
    """
    _check_permutation(instance, sequence)
    a, ab, d, h = _arrays(instance)
    n = instance.n
    seq = list(sequence)
    best = _total(seq, a, ab, d, h)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            seq[i], seq[j] = seq[j], seq[i]
            val = _total(seq, a, ab, d, h)
            if val < best:
                best = val
            else:
                seq[i], seq[j] = seq[j], seq[i]
    return seq


def weighted_search(
    instance: Instance, params: SwspParams = SwspParams()
) -> tuple[list[int], int, list[int]]:
    """Best greedy sequence over the whole weight grid.

    Returns (sequence, value, trace) where trace[i] is the best value after
    the i-th triple; the first triple reaching the best value wins ties.
    """
    a, ab, d, h = _arrays(instance)
    best_seq: list[int] | None = None
    best_val: int | None = None
    trace = []
    for triple in weight_grid(instance.n, params):
        seq = greedy_construct(instance, triple)
        val = _total(seq, a, ab, d, h)
        if best_val is None or val < best_val:
            best_seq, best_val = seq, val
        trace.append(best_val)
    assert best_seq is not None and best_val is not None
    return best_seq, best_val, trace


def swsp(instance: Instance, params: SwspParams = SwspParams()) -> RunResult:
    """Full procedure: weighted search, then the pairwise-swap pass.

    Fully deterministic; RunResult.iterations is the number of weight
    triples evaluated and RunResult.trace the per-triple best values.
    """
    t0 = time.perf_counter()
    seq, _, trace = weighted_search(instance, params)
    improved = pairwise_swap_pass(instance, seq)
    if params.swap_until_fixpoint:
        val = total_tardiness(instance, improved)
        while True:
            again = pairwise_swap_pass(instance, improved)
            new_val = total_tardiness(instance, again)
            if new_val >= val:
                break
            improved, val = again, new_val
    final_val = total_tardiness(instance, improved)
    return RunResult(
        best_sequence=tuple(improved),
        best_value=final_val,
        iterations=len(trace),
        perturbations=0,
        elapsed=time.perf_counter() - t0,
        seed=None,
        trace=tuple(trace),
    )


def _total(seq, a, ab, d, h) -> int:
    c = 0
    tot = 0
    for j in seq:
        c += a[j] if c <= h[j] else ab[j]
        if c > d[j]:
            tot += c - d[j]
    return tot
