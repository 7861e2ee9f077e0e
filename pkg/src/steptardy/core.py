"""Domain types and the schedule evaluator for single-machine scheduling
with step-deteriorating jobs.

A job j has a basic processing time a_j, a deterioration penalty b_j, a due
date d_j and a deteriorating date h_j.  Started at time s, the job takes a_j
time units if s <= h_j and a_j + b_j otherwise.  The machine processes one
job at a time with no idling, so a sequence (permutation of job ids) fully
determines every start, completion and tardiness.  The objective handled
throughout the package is the total tardiness sum(max(0, C_j - d_j)).

All times are exact integers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence


@dataclass(frozen=True)
class Job:
    """One schedulable task (all fields are integer time units)."""

    id: int
    a: int  # basic processing time, >= 1
    b: int  # deterioration penalty, >= 0
    d: int  # due date, >= 0
    h: int  # deteriorating date (latest start that avoids the penalty), >= 0


@dataclass(frozen=True)
class Instance:
    """An ordered collection of jobs with ids exactly 1..n."""

    jobs: tuple[Job, ...]
    name: str = ""
    seed: int | None = None

    @property
    def n(self) -> int:
        return len(self.jobs)

    def job(self, job_id: int) -> Job:
        for j in self.jobs:
            if j.id == job_id:
                return j
        raise KeyError(job_id)


@dataclass(frozen=True)
class ScheduleResult:
    """Evaluation of one sequence: per-position timings plus the objective.

    The tuples are aligned with ``order``: starts[k] is the start time of the
    job in position k (job id order[k]), and so on.  total is the objective
    value sum of tardiness.
    """

    order: tuple[int, ...]
    starts: tuple[int, ...]
    processing: tuple[int, ...]
    completions: tuple[int, ...]
    tardiness: tuple[int, ...]
    total: int


@dataclass(frozen=True)
class RunResult:
    """Outcome of one heuristic/metaheuristic run.

    elapsed is wall-clock seconds and is the only field excluded from the
    determinism guarantees; trace holds the best value after each iteration.
    """

    best_sequence: tuple[int, ...]
    best_value: int
    iterations: int
    perturbations: int
    elapsed: float
    seed: int | None
    trace: tuple[int, ...] | None = None


@lru_cache(maxsize=512)
def _arrays(instance: Instance) -> tuple[list[int], list[int], list[int], list[int]]:
    """Per-field lists indexed by job id (index 0 unused) for fast evaluation.

    Returns (a, ab, d, h) with ab[j] = a[j] + b[j].  Requires ids 1..n.
    """
    n = instance.n
    a = [0] * (n + 1)
    ab = [0] * (n + 1)
    d = [0] * (n + 1)
    h = [0] * (n + 1)
    filled = [False] * (n + 1)
    for job in instance.jobs:
        if not 1 <= job.id <= n or filled[job.id]:
            raise ValueError(f"instance job ids must be exactly 1..{n}")
        filled[job.id] = True
        a[job.id] = job.a
        ab[job.id] = job.a + job.b
        d[job.id] = job.d
        h[job.id] = job.h
    return a, ab, d, h


def _check_permutation(instance: Instance, sequence: Sequence[int]) -> None:
    n = instance.n
    if len(sequence) != n or set(sequence) != set(range(1, n + 1)):
        raise ValueError(
            f"sequence {list(sequence)} is not a permutation of 1..{n}"
        )


def actual_processing_time(job: Job, start: int) -> int:
    """Processing time incurred when the job begins at ``start``.

    The deterioration boundary is inclusive: starting exactly at h_j still
    takes only the basic time.
    """
    if start < 0:
        raise ValueError("start must be >= 0")
    return job.a if start <= job.h else job.a + job.b


def evaluate_schedule(instance: Instance, sequence: Sequence[int]) -> ScheduleResult:
    """Schedule the sequence with no idle time and report all timings.

    The first job starts at 0 and each later job starts at the previous
    completion.  Rejects sequences that are not permutations of 1..n.
    """
    _check_permutation(instance, sequence)
    a, ab, d, h = _arrays(instance)
    starts = []
    procs = []
    comps = []
    tards = []
    c = 0
    total = 0
    for j in sequence:
        starts.append(c)
        p = a[j] if c <= h[j] else ab[j]
        procs.append(p)
        c += p
        comps.append(c)
        t = c - d[j]
        if t < 0:
            t = 0
        tards.append(t)
        total += t
    return ScheduleResult(
        order=tuple(sequence),
        starts=tuple(starts),
        processing=tuple(procs),
        completions=tuple(comps),
        tardiness=tuple(tards),
        total=total,
    )


def total_tardiness(instance: Instance, sequence: Sequence[int]) -> int:
    """Total tardiness of the sequence (no-idle semantics), objective only."""
    a, ab, d, h = _arrays(instance)
    c = 0
    total = 0
    for j in sequence:
        c += a[j] if c <= h[j] else ab[j]
        if c > d[j]:
            total += c - d[j]
    return total


def validate_instance(instance: Instance) -> list[str]:
    """Check all Job and Instance invariants; each violation is one message.

    An empty report means the instance is valid.  Never raises: the report
    is the payload.
    """
    report = []
    n = instance.n
    if n < 1:
        report.append("instance must contain at least one job")
    seen: set[int] = set()
    for job in instance.jobs:
        if job.id in seen:
            report.append(f"job {job.id}: duplicate id")
        seen.add(job.id)
        if job.a < 1:
            report.append(f"job {job.id}: a must be >= 1 (got {job.a})")
        if job.b < 0:
            report.append(f"job {job.id}: b must be >= 0 (got {job.b})")
        if job.d < 0:
            report.append(f"job {job.id}: d must be >= 0 (got {job.d})")
        if job.h < 0:
            report.append(f"job {job.id}: h must be >= 0 (got {job.h})")
    missing = set(range(1, n + 1)) - seen
    extra = seen - set(range(1, n + 1))
    if missing:
        report.append(f"missing job ids: {sorted(missing)}")
    if extra:
        report.append(f"job ids out of range 1..{n}: {sorted(extra)}")
    return report


def check_dominance(instance: Instance, schedule: ScheduleResult) -> list[tuple[int, int]]:
    """Pairs (earlier, later) where the later job should precede the earlier.

    A pair of jobs both non-deteriorated in this schedule prefers the one
    with the smaller (a, d); a pair both deteriorated prefers the smaller
    (a + b, d).  A returned pair (k, j) means k is scheduled before j even
    though j dominates k.  Ties (equal key on both coordinates) are skipped
    since the preference is vacuous.  An empty list means the schedule is
    consistent with both pairwise preference rules.
    """
    jobs = {job.id: job for job in instance.jobs}
    deteriorated = {
        job_id: schedule.starts[pos] > jobs[job_id].h
        for pos, job_id in enumerate(schedule.order)
    }
    violations = []
    order = schedule.order
    for u in range(len(order)):
        k = order[u]
        for v in range(u + 1, len(order)):
            j = order[v]
            if deteriorated[k] != deteriorated[j]:
                continue
            if deteriorated[k]:
                key_j = (jobs[j].a + jobs[j].b, jobs[j].d)
                key_k = (jobs[k].a + jobs[k].b, jobs[k].d)
            else:
                key_j = (jobs[j].a, jobs[j].d)
                key_k = (jobs[k].a, jobs[k].d)
            if key_j == key_k:
                continue
            if key_j[0] <= key_k[0] and key_j[1] <= key_k[1]:
                violations.append((k, j))
    return violations


# --- instance JSON format -------------------------------------------------
#
# {"name": str, "seed": int|null, "jobs": [{"id", "a", "b", "d", "h"}, ...]}
# with jobs sorted by id.  Serialization is byte-stable for a given instance.


def instance_to_json(instance: Instance) -> str:
    payload = {
        "name": instance.name,
        "seed": instance.seed,
        "jobs": [
            {"id": j.id, "a": j.a, "b": j.b, "d": j.d, "h": j.h}
            for j in sorted(instance.jobs, key=lambda job: job.id)
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def instance_from_json(text: str) -> Instance:
    payload = json.loads(text)
    jobs = tuple(
        Job(id=row["id"], a=row["a"], b=row["b"], d=row["d"], h=row["h"])
        for row in payload["jobs"]
    )
    return Instance(jobs=jobs, name=payload.get("name", ""), seed=payload.get("seed"))


def save_instance(instance: Instance, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(instance_to_json(instance))


def load_instance(path) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return instance_from_json(fh.read())
