"""The characteristic poset of a monomial ideal and its interval partitions."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from math import prod
from typing import Sequence

from .core import IdealError, MonomialIdeal, divides, lcm_exponent, minimalize


def box(g: Sequence[int]):
    """All vectors 0 <= sigma <= g, in lex order."""
    return itertools.product(*(range(a + 1) for a in g))


def between(c: Sequence[int], d: Sequence[int]):
    """Points of the interval [c, d] in lex order (empty when c is not <= d)."""
    return itertools.product(*(range(a, b + 1) for a, b in zip(c, d)))


def rho(d: Sequence[int], g: Sequence[int]) -> int:
    """Number of coordinates in which d reaches g."""
    if not divides(d, g):
        raise ValueError(f"{tuple(d)} is not <= {tuple(g)}")
    return sum(1 for a, b in zip(d, g) if a == b)


@dataclass(frozen=True)
class CharacteristicPoset:
    ideal: MonomialIdeal
    g: tuple
    points: tuple
    index: dict = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.ideal.n

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, sigma) -> bool:
        return tuple(sigma) in self.index


def build_poset(ideal: MonomialIdeal, g: Sequence[int] | None = None) -> CharacteristicPoset:
    """Enumerate every sigma <= g divisible by some generator.

    ``g`` defaults to the lcm exponent vector of the generators.
    """
    g = lcm_exponent(ideal) if g is None else tuple(int(a) for a in g)
    if len(g) != ideal.n:
        raise IdealError(f"bounding vector {g} has the wrong length")
    for v in ideal.generators:
        if not divides(v, g):
            raise IdealError(f"generator {v} does not divide x^g for g={g}")
    points = tuple(s for s in box(g) if ideal.contains(s))
    return CharacteristicPoset(ideal, g, points, {s: i for i, s in enumerate(points)})


@dataclass(frozen=True, order=True)
class Interval:
    c: tuple
    d: tuple

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(self.c))
        object.__setattr__(self, "d", tuple(self.d))

    def is_empty(self) -> bool:
        return not divides(self.c, self.d)

    def __len__(self) -> int:
        if self.is_empty():
            return 0
        return prod(b - a + 1 for a, b in zip(self.c, self.d))

    def __contains__(self, sigma) -> bool:
        return divides(self.c, sigma) and divides(sigma, self.d)

    def points(self):
        return between(self.c, self.d)


@dataclass(frozen=True)
class IntervalPartition:
    poset: CharacteristicPoset
    intervals: tuple

    def __post_init__(self):
        object.__setattr__(self, "intervals", tuple(self.intervals))

    @property
    def g(self) -> tuple:
        return self.poset.g

    def min_rho(self) -> int | None:
        if not self.intervals:
            return None
        return min(rho(iv.d, self.g) for iv in self.intervals)

    def canonical(self) -> tuple:
        return tuple(sorted(self.intervals))

    def to_json(self) -> dict:
        return {
            "n": self.poset.n,
            "g": list(self.g),
            "intervals": [{"c": list(iv.c), "d": list(iv.d)} for iv in self.canonical()],
        }


def partition_from_json(data: dict, ideal: MonomialIdeal | None = None) -> IntervalPartition:
    """Load a partition; without ``ideal`` it is recovered from the bottoms.

    The minimal points of a characteristic poset are exactly the minimal
    generators, and each minimal point is the bottom of its interval, so the
    ideal is the one generated by the interval bottoms.
    """
    n = int(data["n"])
    g = tuple(int(a) for a in data["g"])
    intervals = [Interval(tuple(iv["c"]), tuple(iv["d"])) for iv in data["intervals"]]
    if len(g) != n or any(len(iv.c) != n or len(iv.d) != n for iv in intervals):
        raise IdealError("partition vectors do not match n")
    if ideal is None:
        ideal = minimalize([iv.c for iv in intervals], n)
    return IntervalPartition(build_poset(ideal, g), intervals)


def load_partition(path, ideal: MonomialIdeal | None = None) -> IntervalPartition:
    with open(path, encoding="utf-8") as fh:
        return partition_from_json(json.load(fh), ideal)


def dump_partition(part: IntervalPartition, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(part.to_json(), fh)
        fh.write("\n")


@dataclass
class PartitionReport:
    covers: bool
    disjoint: bool
    inside: bool
    min_rho: int | None
    problems: list

    @property
    def valid(self) -> bool:
        return self.covers and self.disjoint and self.inside

    def as_dict(self) -> dict:
        return {"valid": self.valid, "covers": self.covers, "disjoint": self.disjoint,
                "inside": self.inside, "min_rho": self.min_rho, "problems": self.problems}


def validate_partition(poset: CharacteristicPoset, part: IntervalPartition) -> PartitionReport:
    """Check by full enumeration of the box [0, g] that ``part`` partitions ``poset``."""
    g = poset.g
    problems = []
    inside = True
    for iv in part.intervals:
        if len(iv.c) != poset.n or len(iv.d) != poset.n:
            inside = False
            problems.append(f"interval {iv} has the wrong length")
        elif iv.is_empty():
            inside = False
            problems.append(f"empty interval [{iv.c}, {iv.d}]")
        elif not divides(iv.d, g):
            inside = False
            problems.append(f"top {iv.d} exceeds g={g}")
        elif iv.c not in poset:
            inside = False
            problems.append(f"bottom {iv.c} is not in the poset")
    covers = disjoint = True
    for sigma in box(g):
        hits = sum(1 for iv in part.intervals if sigma in iv)
        if sigma in poset:
            if hits == 0:
                covers = False
                problems.append(f"{sigma} is not covered")
            elif hits > 1:
                disjoint = False
                problems.append(f"{sigma} lies in {hits} intervals")
        elif hits:
            inside = False
            problems.append(f"{sigma} is covered but not in the poset")
    report = PartitionReport(covers, disjoint, inside, None, problems)
    if report.valid and part.intervals:
        report.min_rho = min(rho(iv.d, g) for iv in part.intervals)
    return report
