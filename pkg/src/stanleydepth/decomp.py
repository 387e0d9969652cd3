"""Stanley decompositions: verification, the partition correspondence and
the squarefree constructions."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .core import (IdealError, MonomialIdeal, divides, is_squarefree, lcm_exponent,
                   minimalize, render_monomial, support, vmax)
from .poset import IntervalPartition, box, validate_partition


@dataclass(frozen=True)
class StanleySpace:
    """The monomials x^u * w with w a monomial in the variables Z (1-based)."""

    u: tuple
    Z: frozenset

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(int(a) for a in self.u))
        object.__setattr__(self, "Z", frozenset(int(j) for j in self.Z))

    def contains(self, sigma) -> bool:
        return all(s == a or (s > a and j in self.Z)
                   for j, (a, s) in enumerate(zip(self.u, sigma), start=1))

    def is_squarefree(self) -> bool:
        return is_squarefree(self.u) and support(self.u) <= self.Z

    def __str__(self) -> str:
        return f"{render_monomial(self.u)}*K[{','.join(f'x{j}' for j in sorted(self.Z))}]"


def spaces_meet(a: StanleySpace, b: StanleySpace) -> bool:
    """Whether two Stanley spaces share a monomial.

    They do iff lcm(u_a, u_b) lies in both, which only needs the supports of
    the two quotients to sit inside the respective Z.
    """
    w = vmax(a.u, b.u)
    return a.contains(w) and b.contains(w)


@dataclass(frozen=True)
class StanleyDecomposition:
    n: int
    spaces: tuple

    def __post_init__(self):
        object.__setattr__(self, "spaces", tuple(self.spaces))
        for s in self.spaces:
            if len(s.u) != self.n or any(not 1 <= j <= self.n for j in s.Z):
                raise IdealError(f"space {s} does not live in {self.n} variables")

    @property
    def sdepth(self) -> int | None:
        if not self.spaces:
            return None
        return min(len(s.Z) for s in self.spaces)

    def is_squarefree(self) -> bool:
        return all(s.is_squarefree() for s in self.spaces)

    def canonical(self) -> tuple:
        return tuple(sorted(self.spaces, key=lambda s: (s.u, sorted(s.Z))))

    def generated_ideal(self) -> MonomialIdeal:
        """The ideal generated by the u_i; equals I whenever this decomposes I."""
        return minimalize([s.u for s in self.spaces], self.n)

    def to_json(self) -> dict:
        return {"n": self.n,
                "spaces": [{"u": list(s.u), "Z": sorted(s.Z)} for s in self.canonical()]}

    def __str__(self) -> str:
        return " + ".join(str(s) for s in self.spaces) or "0"


def decomposition_from_json(data: dict) -> StanleyDecomposition:
    return StanleyDecomposition(int(data["n"]),
                                [StanleySpace(tuple(s["u"]), s["Z"]) for s in data["spaces"]])


def load_decomposition(path) -> StanleyDecomposition:
    with open(path, encoding="utf-8") as fh:
        return decomposition_from_json(json.load(fh))


def dump_decomposition(dec: StanleyDecomposition, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(dec.to_json(), fh)
        fh.write("\n")


@dataclass
class DecompositionReport:
    members: bool
    disjoint: bool
    covers: bool
    sdepth: int | None
    witness: tuple | None = None
    problem: str = ""

    @property
    def valid(self) -> bool:
        return self.members and self.disjoint and self.covers

    def as_dict(self) -> dict:
        return {"valid": self.valid, "members": self.members, "disjoint": self.disjoint,
                "covers": self.covers, "sdepth": self.sdepth,
                "witness": None if self.witness is None else render_monomial(self.witness),
                "problem": self.problem}


def coverage_cap(ideal: MonomialIdeal, dec: StanleyDecomposition) -> tuple:
    """Per-variable exponent cap beyond which no membership predicate changes."""
    g = lcm_exponent(ideal)
    caps = list(g)
    for s in dec.spaces:
        caps = [max(a, b) for a, b in zip(caps, s.u)]
    return tuple(a + 1 for a in caps)


def verify_decomposition(ideal: MonomialIdeal, dec: StanleyDecomposition) -> DecompositionReport:
    """Decide exactly whether ``dec`` is a Stanley decomposition of ``ideal``.

    Failures carry a witness monomial.
    """
    if dec.n != ideal.n:
        return DecompositionReport(False, False, False, dec.sdepth,
                                   problem=f"decomposition has n={dec.n}, ideal has n={ideal.n}")
    report = DecompositionReport(True, True, True, dec.sdepth)
    for s in dec.spaces:
        if not ideal.contains(s.u):
            report.members = False
            report.witness = s.u
            report.problem = f"{render_monomial(s.u)} is not in the ideal"
            return report
    for a, b in itertools.combinations(dec.spaces, 2):
        if spaces_meet(a, b):
            report.disjoint = False
            report.witness = vmax(a.u, b.u)
            report.problem = f"{render_monomial(report.witness)} lies in {a} and in {b}"
            return report
    for sigma in box(coverage_cap(ideal, dec)):
        if ideal.contains(sigma) and not any(s.contains(sigma) for s in dec.spaces):
            report.covers = False
            report.witness = sigma
            report.problem = f"{render_monomial(sigma)} is not covered"
            return report
    return report


def partition_to_decomposition(part: IntervalPartition) -> StanleyDecomposition:
    """Turn an interval partition of P_I^g into a Stanley decomposition of I.

    An interval [c, d] with Z = {j : d(j) = g(j)} contributes x^t K[Z] for
    every t in [c, d] agreeing with c on Z; when d(j) = c(j) off Z that is
    the single space x^c K[Z].  The sdepth equals the partition's min rho.
    """
    g = part.g
    report = validate_partition(part.poset, part)
    if not report.valid:
        raise IdealError("invalid partition: " + "; ".join(report.problems[:3]))
    spaces = []
    for iv in part.intervals:
        Z = frozenset(j + 1 for j in range(len(g)) if iv.d[j] == g[j])
        ranges = [range(iv.c[j], iv.c[j] + 1) if j + 1 in Z else range(iv.c[j], iv.d[j] + 1)
                  for j in range(len(g))]
        for t in itertools.product(*ranges):
            spaces.append(StanleySpace(t, Z))
    return StanleyDecomposition(part.poset.n, spaces)


def _subsets(items):
    items = sorted(items)
    return itertools.chain.from_iterable(itertools.combinations(items, r)
                                         for r in range(len(items) + 1))


def _indicator(n: int, F) -> tuple:
    return tuple(1 if j in F else 0 for j in range(1, n + 1))


def canonical_squarefree(ideal: MonomialIdeal) -> StanleyDecomposition:
    """One space x_F K[Z_F] for every F with x_F in the ideal."""
    if not ideal.is_squarefree():
        raise IdealError(f"{ideal} is not squarefree")
    n = ideal.n
    spaces = [StanleySpace(_indicator(n, F), F) for F in _subsets(range(1, n + 1))
              if ideal.contains(_indicator(n, F))]
    return StanleyDecomposition(n, spaces)


def squarefree_refine(dec: StanleyDecomposition, ideal: MonomialIdeal) -> StanleyDecomposition:
    """Keep the spaces with squarefree u and enlarge Z by supp(u)."""
    if not ideal.is_squarefree():
        raise IdealError(f"{ideal} is not squarefree")
    report = verify_decomposition(ideal, dec)
    if not report.valid:
        raise IdealError(f"not a decomposition of {ideal}: {report.problem}")
    spaces = [StanleySpace(s.u, s.Z | support(s.u)) for s in dec.spaces if is_squarefree(s.u)]
    return StanleyDecomposition(dec.n, spaces)


def intersect_space_with_ideal(space: StanleySpace, ideal: MonomialIdeal) -> StanleyDecomposition:
    """A squarefree decomposition of the monomials of ``space`` lying in ``ideal``.

    Monomials of a squarefree space u K[Z] are classified by their support
    G, supp(u) <= G <= Z, and membership in a squarefree ideal depends only
    on G.  The supports in the ideal form an up-set, which is split greedily:
    the lex-least uncovered support (as a 0/1 vector) becomes a bottom H and
    gets the largest top Y with [H, Y] inside the uncovered part of the up-set,
    giving the space x_H K[Y].
    """
    if not space.is_squarefree():
        raise IdealError(f"{space} is not a squarefree Stanley space")
    if not ideal.is_squarefree():
        raise IdealError(f"{ideal} is not squarefree")
    n = ideal.n
    base = support(space.u)
    free = sorted(space.Z - base)
    members = []
    for extra in _subsets(free):
        G = base | frozenset(extra)
        if ideal.contains(_indicator(n, G)):
            members.append(G)
    uncovered = set(members)
    spaces = []
    while uncovered:
        H = min(uncovered, key=lambda G: _indicator(n, G))
        best = None
        for extra in _subsets(sorted(space.Z - H)):
            Y = H | frozenset(extra)
            if all(H | frozenset(e) in uncovered for e in _subsets(sorted(Y - H))):
                key = (len(Y), _indicator(n, Y))
                if best is None or key > best[0]:
                    best = (key, Y)
        Y = best[1]
        for e in _subsets(sorted(Y - H)):
            uncovered.discard(H | frozenset(e))
        spaces.append(StanleySpace(_indicator(n, H), Y))
    return StanleyDecomposition(n, spaces)


def refine_by_intersection(dec: StanleyDecomposition, ideal: MonomialIdeal) -> StanleyDecomposition:
    """Intersect every space of ``dec`` with ``ideal`` and collect the pieces.

    With ``dec`` a squarefree decomposition of an ideal containing ``ideal``,
    the result is a squarefree decomposition of ``ideal``.
    """
    spaces = []
    for s in dec.spaces:
        spaces.extend(intersect_space_with_ideal(s, ideal).spaces)
    return StanleyDecomposition(dec.n, spaces)


def squarefree_decompositions(ideal: MonomialIdeal, min_sdepth: int = 0):
    """Yield every squarefree Stanley decomposition with all |Z| >= ``min_sdepth``.

    Exhaustive: only for small n.
    """
    if not ideal.is_squarefree():
        raise IdealError(f"{ideal} is not squarefree")
    n = ideal.n
    members = [frozenset(F) for F in _subsets(range(1, n + 1)) if ideal.contains(_indicator(n, F))]
    members.sort(key=lambda F: _indicator(n, F))

    def rec(uncovered: frozenset, acc: list):
        if not uncovered:
            yield StanleyDecomposition(n, list(acc))
            return
        H = min(uncovered, key=lambda F: _indicator(n, F))
        for extra in _subsets(sorted(set(range(1, n + 1)) - H)):
            Y = H | frozenset(extra)
            if len(Y) < min_sdepth:
                continue
            block = {H | frozenset(e) for e in _subsets(sorted(Y - H))}
            if block <= uncovered:
                acc.append(StanleySpace(_indicator(n, H), Y))
                yield from rec(uncovered - block, acc)
                acc.pop()

    yield from rec(frozenset(members), [])
