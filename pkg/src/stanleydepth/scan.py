"""Enumeration of monomial complete intersections and the conjecture scan."""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import asdict, dataclass

from .core import MonomialIdeal, render
from .solver import ci_bounds, conjecture_value, sdepth_exact


def integer_partitions(s: int, largest: int | None = None):
    """Partitions of s as non-increasing tuples."""
    largest = s if largest is None else largest
    if s == 0:
        yield ()
        return
    for first in range(min(s, largest), 0, -1):
        for rest in integer_partitions(s - first, first):
            yield (first,) + rest


def support_patterns(n: int):
    """One family of disjoint nonempty blocks of [n] per permutation class.

    A class is fixed by the multiset of block sizes; the representative uses
    consecutive variables with the larger blocks first.
    """
    for s in range(1, n + 1):
        for sizes in integer_partitions(s):
            blocks, start = [], 1
            for size in sizes:
                blocks.append(tuple(range(start, start + size)))
                start += size
            yield tuple(blocks)


def labelled_patterns(n: int):
    """Every family of disjoint nonempty blocks of [n] (no symmetry reduction)."""
    # each variable is unused (0) or carries a block label; relabellings collapse in `seen`
    seen = set()
    for labels in itertools.product(range(n + 1), repeat=n):
        blocks: dict = {}
        for j, lab in enumerate(labels, start=1):
            if lab:
                blocks.setdefault(lab, []).append(j)
        if not blocks:
            continue
        family = tuple(sorted(tuple(b) for b in blocks.values()))
        if family not in seen:
            seen.add(family)
            yield family


def pattern_class(blocks) -> tuple:
    return tuple(sorted((len(b) for b in blocks), reverse=True))


def pattern_vectors(n: int, blocks, exponents=None) -> list:
    """Exponent vector of the generator for each block, in block order."""
    gens = []
    for i, block in enumerate(blocks):
        v = [0] * n
        for t, j in enumerate(block):
            v[j - 1] = 1 if exponents is None else exponents[i][t]
        gens.append(tuple(v))
    return gens


def ideal_from_pattern(n: int, blocks, exponents=None) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(pattern_vectors(n, blocks, exponents)))


def _canonical_exponents(blocks, exponents) -> tuple:
    # variables inside a block and blocks of equal size are interchangeable
    return tuple(sorted((len(b), tuple(sorted(e, reverse=True)))
                        for b, e in zip(blocks, exponents)))


def exponent_assignments(blocks, exp_max: int, samples: int | None = None,
                         rng: random.Random | None = None):
    """Exponent choices in 1..exp_max for every variable of every block.

    All of them up to symmetry, or ``samples`` random ones when given.
    """
    size = sum(len(b) for b in blocks)
    if samples is not None:
        rng = rng or random.Random(0)
        for _ in range(samples):
            flat = [rng.randint(1, exp_max) for _ in range(size)]
            yield _split(blocks, flat)
        return
    seen = set()
    for flat in itertools.product(range(1, exp_max + 1), repeat=size):
        exps = _split(blocks, flat)
        key = _canonical_exponents(blocks, exps)
        if key not in seen:
            seen.add(key)
            yield exps


def _split(blocks, flat) -> tuple:
    out, pos = [], 0
    for b in blocks:
        out.append(tuple(flat[pos:pos + len(b)]))
        pos += len(b)
    return tuple(out)


@dataclass
class ScanRecord:
    n: int
    m: int
    support_pattern: list
    exponents: list
    ideal: str
    sdepth: int | None
    conjecture_value: int
    bounds: list
    match: bool | None
    status: str
    nodes: int
    elapsed: float

    def key(self) -> tuple:
        return (self.n, self.ideal)

    def to_json(self) -> dict:
        return asdict(self)


def scan_record(n: int, blocks, exponents=None, budget: int | None = None) -> ScanRecord:
    ideal = ideal_from_pattern(n, blocks, exponents)
    t0 = time.perf_counter()
    result = sdepth_exact(ideal, budget=budget)
    elapsed = time.perf_counter() - t0
    lo, hi = ci_bounds(ideal)
    predicted = conjecture_value(ideal)
    vectors = [list(v) for v in pattern_vectors(n, blocks, exponents)]
    return ScanRecord(
        n=n, m=ideal.m,
        support_pattern=[list(b) for b in blocks],
        exponents=vectors,
        ideal=render(ideal),
        sdepth=result.value,
        conjecture_value=predicted,
        bounds=[lo, hi],
        match=None if result.value is None else result.value == predicted,
        status="ok" if result.known else f"unknown [{result.lower},{result.upper}]",
        nodes=result.nodes,
        elapsed=round(elapsed, 6),
    )


def scan_jobs(n_min: int, n_max: int, exp_max: int = 1, exponents: bool = False,
              samples: int | None = None, seed: int = 0):
    """(n, blocks, exponents) triples in scan order."""
    rng = random.Random(seed)
    for n in range(n_min, n_max + 1):
        for blocks in support_patterns(n):
            if not exponents:
                yield n, blocks, None
                continue
            for exps in exponent_assignments(blocks, exp_max, samples, rng):
                yield n, blocks, exps


def _run(job):
    n, blocks, exps, budget = job
    return scan_record(n, blocks, exps, budget)


def scan_ci(n_min: int, n_max: int, exp_max: int = 1, exponents: bool = False,
            samples: int | None = None, seed: int = 0, budget: int | None = None,
            skip=frozenset(), threads: int = 1):
    """Yield a :class:`ScanRecord` per complete intersection, in job order.

    ``skip`` holds ``(n, ideal text)`` keys already done.  With ``threads``
    above one, records are computed in worker processes but still yielded in
    job order.
    """
    jobs = []
    for n, blocks, exps in scan_jobs(n_min, n_max, exp_max, exponents, samples, seed):
        if (n, render(ideal_from_pattern(n, blocks, exps))) in skip:
            continue
        jobs.append((n, blocks, exps, budget))
    if threads <= 1:
        for job in jobs:
            yield _run(job)
        return
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=threads) as pool:
        yield from pool.map(_run, jobs)


def summarize(records) -> dict:
    out = {"records": 0, "match": 0, "mismatch": 0, "unknown": 0, "by_n": {}}
    for r in records:
        row = out["by_n"].setdefault(str(r.n), {"records": 0, "match": 0, "mismatch": 0, "unknown": 0})
        kind = "unknown" if r.match is None else ("match" if r.match else "mismatch")
        for bucket in (out, row):
            bucket["records"] += 1
            bucket[kind] += 1
    return out
