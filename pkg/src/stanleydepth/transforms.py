"""Maps that move certificates between related ideals.

* raising or lowering by one the exponent of a variable that occurs in a
  single generator, carried out on interval partitions (sdepth is unchanged);
* the chain of such steps from a complete intersection down to its radical;
* setting a variable to 1, and adjoining a fresh variable, on Stanley
  decompositions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (IdealError, MonomialIdeal, is_complete_intersection, minimalize,
                   radical, render_monomial)
from .decomp import StanleyDecomposition, StanleySpace, verify_decomposition
from .poset import Interval, IntervalPartition, build_poset, validate_partition


class TransformError(IdealError):
    """A transform was applied outside its hypotheses."""


def owning_generator(ideal: MonomialIdeal, j: int) -> int:
    """0-based index of the only generator involving x_j."""
    if not 1 <= j <= ideal.n:
        raise TransformError(f"variable x{j} is outside 1..{ideal.n}")
    owners = [i for i, v in enumerate(ideal.generators) if v[j - 1] > 0]
    if not owners:
        raise TransformError(f"variable x{j} occurs in no generator")
    if len(owners) > 1:
        raise TransformError(f"variable x{j} occurs in {len(owners)} generators")
    return owners[0]


def bump_exponent(ideal: MonomialIdeal, j: int, delta: int) -> MonomialIdeal:
    """Change the exponent of x_j in its (unique) generator by ``delta``."""
    i = owning_generator(ideal, j)
    gens = list(ideal.generators)
    v = list(gens[i])
    v[j - 1] += delta
    if v[j - 1] < 1:
        raise TransformError(f"exponent of x{j} would drop below 1")
    gens[i] = tuple(v)
    return MonomialIdeal(ideal.n, tuple(gens))


def _checked(part: IntervalPartition, what: str) -> None:
    report = validate_partition(part.poset, part)
    if not report.valid:
        raise TransformError(f"{what} is not a valid partition: " + "; ".join(report.problems[:3]))


def _shift(v: tuple, j: int, delta: int) -> tuple:
    return v[:j - 1] + (v[j - 1] + delta,) + v[j:]


def lift_partition(part: IntervalPartition, j: int, a: int | None = None) -> IntervalPartition:
    """Partition for the ideal with x_j^a raised to x_j^(a+1).

    x_j must occur in exactly one generator, with exponent ``a`` equal to
    g(j).  Bottoms with c(j) = a and tops with d(j) >= a - 1 move up one
    step in coordinate j; every rho(d) is preserved.
    """
    ideal = part.poset.ideal
    exp = ideal.generators[owning_generator(ideal, j)][j - 1]
    if a is None:
        a = exp
    if a != exp:
        raise TransformError(f"x{j} has exponent {exp}, not {a}")
    g = part.poset.g
    if g[j - 1] != a:
        raise TransformError(f"bounding vector has g({j})={g[j - 1]}, expected {a}")
    _checked(part, "input")
    poset = build_poset(bump_exponent(ideal, j, 1), _shift(g, j, 1))
    out = []
    for iv in part.intervals:
        c = _shift(iv.c, j, 1) if iv.c[j - 1] == a else iv.c
        d = _shift(iv.d, j, 1) if iv.d[j - 1] >= a - 1 else iv.d
        out.append(Interval(c, d))
    return IntervalPartition(poset, out)


@dataclass
class LoweredPartition:
    partition: IntervalPartition
    dropped: int


def lower_partition(part: IntervalPartition, j: int, a: int | None = None) -> LoweredPartition:
    """Partition for the ideal with x_j^(a+1) lowered to x_j^a.

    Inverse direction of :func:`lift_partition`: bottoms with c(j) = a + 1
    and tops with d(j) >= a move down.  Intervals that become empty are
    dropped and counted; the minimum rho over the rest cannot go down.
    """
    ideal = part.poset.ideal
    exp = ideal.generators[owning_generator(ideal, j)][j - 1]
    if a is None:
        a = exp - 1
    if a + 1 != exp:
        raise TransformError(f"x{j} has exponent {exp}, not {a + 1}")
    if a < 1:
        raise TransformError(f"exponent of x{j} is already 1")
    g = part.poset.g
    if g[j - 1] != a + 1:
        raise TransformError(f"bounding vector has g({j})={g[j - 1]}, expected {a + 1}")
    _checked(part, "input")
    poset = build_poset(bump_exponent(ideal, j, -1), _shift(g, j, -1))
    out = []
    dropped = 0
    for iv in part.intervals:
        c = _shift(iv.c, j, -1) if iv.c[j - 1] == a + 1 else iv.c
        d = _shift(iv.d, j, -1) if iv.d[j - 1] >= a else iv.d
        lowered = Interval(c, d)
        if lowered.is_empty():
            dropped += 1
        else:
            out.append(lowered)
    return LoweredPartition(IntervalPartition(poset, out), dropped)


@dataclass(frozen=True)
class ReductionStep:
    variable: int   # 1-based
    generator: int  # 1-based position in before.generators
    before: MonomialIdeal
    after: MonomialIdeal

    def describe(self) -> str:
        v = self.before.generators[self.generator - 1]
        return f"{self.before} -> {self.after}  (x{self.variable} in {render_monomial(v)})"


def radical_reduction_chain(ideal: MonomialIdeal) -> list:
    """Single-exponent decrements taking a complete intersection to its radical.

    Always reduces the lowest variable that still has exponent >= 2.
    """
    if not is_complete_intersection(ideal):
        raise TransformError(f"{ideal} is not a complete intersection")
    steps = []
    current = ideal
    while True:
        for j in range(1, current.n + 1):
            owners = [i for i, v in enumerate(current.generators) if v[j - 1] >= 2]
            if owners:
                break
        else:
            break
        nxt = bump_exponent(current, j, -1)
        steps.append(ReductionStep(j, owners[0] + 1, current, nxt))
        current = nxt
    assert current == radical(ideal)
    return steps


def carry_partition(steps: list, part: IntervalPartition) -> IntervalPartition:
    """Push a partition of ``steps[0].before`` down the chain with :func:`lower_partition`."""
    for step in steps:
        if part.poset.ideal != step.before:
            raise TransformError(f"partition is for {part.poset.ideal}, step expects {step.before}")
        part = lower_partition(part, step.variable).partition
    return part


# -- decompositions ------------------------------------------------------------

def _drop_coordinate(v: tuple, j: int) -> tuple:
    return v[:j - 1] + v[j:]


def set_variable_to_one(ideal: MonomialIdeal, j: int | None = None) -> MonomialIdeal:
    """Image of the ideal under x_j -> 1 (default: the last variable), in n - 1 variables."""
    j = ideal.n if j is None else j
    if not 1 <= j <= ideal.n or ideal.n < 2:
        raise TransformError(f"cannot drop x{j} from an ideal in {ideal.n} variables")
    gens = [_drop_coordinate(v, j) for v in ideal.generators]
    if not all(any(v) for v in gens):
        raise TransformError(f"setting x{j} to 1 gives the unit ideal")
    return minimalize(gens, ideal.n - 1)


def extend_ideal(ideal: MonomialIdeal) -> MonomialIdeal:
    """The same generators in a polynomial ring with one more variable."""
    return MonomialIdeal(ideal.n + 1, tuple(v + (0,) for v in ideal.generators))


def _verified(dec: StanleyDecomposition, ideal: MonomialIdeal | None) -> MonomialIdeal:
    if ideal is None:
        ideal = dec.generated_ideal()
    report = verify_decomposition(ideal, dec)
    if not report.valid:
        raise TransformError(f"not a Stanley decomposition of {ideal}: {report.problem}")
    return ideal


def project_decomposition(dec: StanleyDecomposition, var: int | None = None,
                          ideal: MonomialIdeal | None = None) -> StanleyDecomposition:
    """Decomposition of the ideal obtained by setting x_var to 1 (default: last variable).

    Only spaces whose Z contains x_var survive; their u loses every factor
    x_var and Z loses x_var.  The sdepth drops by at most one.
    """
    ideal = _verified(dec, ideal)
    var = dec.n if var is None else var
    target = set_variable_to_one(ideal, var)
    spaces = []
    for s in dec.spaces:
        if var not in s.Z:
            continue
        Z = {j if j < var else j - 1 for j in s.Z if j != var}
        spaces.append(StanleySpace(_drop_coordinate(s.u, var), Z))
    if not spaces:
        raise TransformError(f"no Stanley space involves x{var}; the decomposition is inconsistent")
    out = StanleyDecomposition(dec.n - 1, spaces)
    report = verify_decomposition(target, out)
    if not report.valid:
        raise TransformError(f"projection failed to decompose {target}: {report.problem}")
    return out


def extend_decomposition(dec: StanleyDecomposition,
                         ideal: MonomialIdeal | None = None) -> StanleyDecomposition:
    """Decomposition of I S[x_{n+1}]: every Z gains the new variable."""
    _verified(dec, ideal)
    new = dec.n + 1
    return StanleyDecomposition(new, [StanleySpace(s.u + (0,), s.Z | {new}) for s in dec.spaces])
