"""Exact Stanley depth by searching interval partitions of the characteristic poset.

sdepth(I) >= k holds iff the characteristic poset (with g the lcm exponent
vector) splits into intervals [c, d] whose tops all satisfy rho(d) >= k.
:func:`exists_partition_at` decides that for one k; :func:`sdepth_exact`
walks k until the threshold is pinned from both sides.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .core import IdealError, MonomialIdeal, is_complete_intersection
from .poset import CharacteristicPoset, Interval, IntervalPartition, between, build_poset, rho

DEFAULT_BUDGET = 10**8
# failure memo entries kept per search; beyond this, failures are not recorded
MEMO_LIMIT = 1 << 21


def default_budget() -> int:
    env = os.environ.get("STANLEY_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class BudgetExceeded(Exception):
    """The node budget ran out before the search finished."""


@dataclass
class SearchStats:
    nodes: int = 0
    budget: int = field(default_factory=default_budget)

    def charge(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.nodes)


def _candidates(poset: CharacteristicPoset, k: int) -> list:
    """Per point, the bitmasks of intervals [point, d] with rho(d) >= k.

    Ordered by increasing rho (tops that only just reach k first), ties
    lex-descending in d.
    """
    g = poset.g
    index = poset.index
    out = []
    for sigma in poset.points:
        tops = []
        for d in between(sigma, g):
            r = sum(1 for a, b in zip(d, g) if a == b)
            if r >= k:
                tops.append((r, d))
        tops.sort(key=lambda t: (t[0], tuple(-a for a in t[1])))
        cands = []
        for r, d in tops:
            mask = 0
            for tau in between(sigma, d):
                mask |= 1 << index[tau]
            cands.append((mask, d))
        out.append(cands)
    return out


def _search(poset: CharacteristicPoset, k: int, stats: SearchStats):
    cands = _candidates(poset, k)
    index = poset.index
    full = (1 << len(poset.points)) - 1
    below = []
    for sigma in poset.points:
        mask = 0
        for j, a in enumerate(sigma):
            if a:
                tau = sigma[:j] + (a - 1,) + sigma[j + 1:]
                if tau in index:
                    mask |= 1 << index[tau]
        below.append(mask)
    dead_cache: set = set()
    chosen: list = []

    def pick(covered: int):
        # A point minimal among the uncovered ones must be the bottom of its
        # interval.  Return the minimal point with the fewest usable tops, or
        # -1 when some uncovered point can no longer be covered at all (every
        # interval through it inside the uncovered region contains an interval
        # with that point as bottom, so checking bottoms is enough).
        free = full & ~covered
        best, best_count = -1, None
        rest = free
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            if below[i] & free:
                if not any(m & covered == 0 for m, _ in cands[i]):
                    return -1
                continue
            count = sum(1 for m, _ in cands[i] if m & covered == 0)
            if count == 0:
                return -1
            if best_count is None or count < best_count:
                best, best_count = i, count
        return best

    def solve(covered: int) -> bool:
        if covered == full:
            return True
        if covered in dead_cache:
            return False
        stats.charge()
        i = pick(covered)
        if i >= 0:
            for mask, d in cands[i]:
                if mask & covered:
                    continue
                chosen.append((i, d))
                if solve(covered | mask):
                    return True
                chosen.pop()
        if len(dead_cache) < MEMO_LIMIT:
            dead_cache.add(covered)
        return False

    if not solve(0):
        return None
    return [Interval(poset.points[i], d) for i, d in chosen]


def exists_partition_at(poset: CharacteristicPoset, k: int,
                        stats: SearchStats | None = None) -> IntervalPartition | None:
    """A partition of ``poset`` with every rho(d) >= k, or None if there is none.

    Deterministic: the first certificate in the fixed branch order.
    Raises :class:`BudgetExceeded` when ``stats.budget`` nodes are used up.
    """
    if not 0 <= k <= poset.n:
        raise ValueError(f"k={k} outside 0..{poset.n}")
    if stats is None:
        stats = SearchStats()
    if k == 0:
        return IntervalPartition(poset, [Interval(s, s) for s in poset.points])
    intervals = _search(poset, k, stats)
    if intervals is None:
        return None
    return IntervalPartition(poset, intervals)


@dataclass
class SdepthResult:
    """Outcome of :func:`sdepth_exact`.

    When the budget runs out ``value`` is None and ``lower``/``upper`` bracket
    the Stanley depth; ``certificate`` then witnesses ``lower``.
    """

    ideal: MonomialIdeal
    value: int | None
    certificate: IntervalPartition | None
    refutation_level: int | None
    lower: int
    upper: int
    nodes: int

    @property
    def known(self) -> bool:
        return self.value is not None


def sdepth_exact(ideal: MonomialIdeal, budget: int | None = None,
                 start: int | None = None) -> SdepthResult:
    """Compute sdepth(I) exactly, with a certificate and a refuted level.

    The search starts at ``start`` (default: the complete-intersection upper
    bound when it applies, else n), climbs while partitions exist and descends
    while they do not.  Bounds only pick the starting point; every level
    reported is settled by search.
    """
    poset = build_poset(ideal)
    n = ideal.n
    stats = SearchStats(budget=default_budget() if budget is None else budget)
    if start is None:
        start = ci_bounds(ideal)[1] if is_complete_intersection(ideal) else n
    start = max(1, min(n, start))

    lower, upper = 0, n
    best = exists_partition_at(poset, 0, stats)
    refuted = n + 1
    k = start
    try:
        while lower < upper:
            part = exists_partition_at(poset, k, stats)
            if part is not None:
                lower, best = k, part
                k += 1
            else:
                upper, refuted = k - 1, k
                k -= 1
    except BudgetExceeded:
        return SdepthResult(ideal, None, best, None, lower, upper, stats.nodes)
    return SdepthResult(ideal, lower, best, refuted, lower, upper, stats.nodes)


def ci_bounds(ideal: MonomialIdeal) -> tuple:
    """(1 + n - m, ceil(m/2) + n - m) for a complete intersection."""
    if not is_complete_intersection(ideal):
        raise IdealError(f"{ideal} is not a complete intersection")
    n, m = ideal.n, ideal.m
    return 1 + n - m, -(-m // 2) + n - m


def depth_ci(ideal: MonomialIdeal) -> int:
    if not is_complete_intersection(ideal):
        raise IdealError(f"{ideal} is not a complete intersection")
    return ideal.n - ideal.m + 1


def irreducible_sdepth_formula(m: int, n: int) -> int:
    """sdepth of (x_1^a_1, ..., x_m^a_m) in n variables."""
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    return n - m + -(-m // 2)


def conjecture_value(ideal: MonomialIdeal) -> int:
    """ceil(m/2) + n - m, the conjectured sdepth of a complete intersection."""
    return -(-ideal.m // 2) + ideal.n - ideal.m
