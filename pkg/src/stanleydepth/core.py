"""Exponent vectors, monomial ideals and the ideal text format.

Monomials are plain tuples of non-negative ints; entry ``j - 1`` is the
exponent of ``x_j``.  Everything downstream works on these tuples directly,
the coefficient field never shows up.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

ExponentVector = tuple  # tuple[int, ...]


class IdealError(ValueError):
    """Raised for inputs that do not describe a proper nonzero monomial ideal."""


class ParseError(IdealError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        self.reason = message
        super().__init__(f"{message} at position {pos}: {text!r}")

    def diagnostic(self) -> str:
        return f"{self.text}\n{' ' * self.pos}^ {self.reason}"


# -- exponent vector helpers -------------------------------------------------

def divides(u: Sequence[int], v: Sequence[int]) -> bool:
    """True iff x^u divides x^v, i.e. u <= v componentwise."""
    return all(a <= b for a, b in zip(u, v))


def support(u: Sequence[int]) -> frozenset:
    """1-based indices of the variables occurring in x^u."""
    return frozenset(j + 1 for j, a in enumerate(u) if a > 0)


def is_squarefree(u: Sequence[int]) -> bool:
    return all(a <= 1 for a in u)


def unit_vector(n: int, j: int) -> ExponentVector:
    """e_j in N^n (1-based j)."""
    return tuple(1 if i == j - 1 else 0 for i in range(n))


def add(u, v) -> ExponentVector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v) -> ExponentVector:
    return tuple(a - b for a, b in zip(u, v))


def vmax(u, v) -> ExponentVector:
    return tuple(max(a, b) for a, b in zip(u, v))


def render_monomial(u: Sequence[int]) -> str:
    parts = []
    for j, a in enumerate(u, start=1):
        if a == 1:
            parts.append(f"x{j}")
        elif a > 1:
            parts.append(f"x{j}^{a}")
    return "*".join(parts) if parts else "1"


# -- ideals ------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialIdeal:
    """A proper nonzero monomial ideal given by its minimal generators.

    Generators are kept in lex order, largest first (so ``x1^2*x2`` comes
    before ``x3``); use :func:`minimalize` to build one from an arbitrary
    generating set.
    """

    n: int
    generators: tuple

    def __post_init__(self):
        gens = tuple(tuple(int(a) for a in v) for v in self.generators)
        if not gens:
            raise IdealError("an ideal needs at least one generator")
        for v in gens:
            if len(v) != self.n:
                raise IdealError(f"generator {v} has length {len(v)}, expected {self.n}")
            if any(a < 0 for a in v):
                raise IdealError(f"negative exponent in {v}")
            if not any(v):
                raise IdealError("the unit ideal is not a proper monomial ideal")
        if len(set(gens)) != len(gens):
            raise IdealError("duplicate generators")
        for v in gens:
            for w in gens:
                if v != w and divides(v, w):
                    raise IdealError(f"generator {render_monomial(w)} is divisible by "
                                     f"{render_monomial(v)}; use minimalize()")
        object.__setattr__(self, "generators", tuple(sorted(gens, reverse=True)))

    @property
    def m(self) -> int:
        return len(self.generators)

    def contains(self, sigma: Sequence[int]) -> bool:
        """Membership of the monomial x^sigma."""
        return any(divides(v, sigma) for v in self.generators)

    def is_squarefree(self) -> bool:
        return all(is_squarefree(v) for v in self.generators)

    def __str__(self) -> str:
        return render(self)


def minimalize(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    """Reduce a generating set to the divisibility-minimal generators."""
    vecs = [tuple(int(a) for a in v) for v in gens]
    if not vecs:
        raise IdealError("empty generator list")
    if n is None:
        n = len(vecs[0])
    if any(len(v) != n for v in vecs):
        raise IdealError("generators of different lengths")
    uniq = sorted(set(vecs))
    # ascending lex order puts every proper divisor before its multiples
    minimal: list = []
    for v in uniq:
        if not any(divides(w, v) for w in minimal):
            minimal.append(v)
    return MonomialIdeal(n, tuple(minimal))


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    return minimalize([tuple(min(a, 1) for a in v) for v in ideal.generators], ideal.n)


def is_complete_intersection(ideal: MonomialIdeal) -> bool:
    seen: set = set()
    for v in ideal.generators:
        s = support(v)
        if seen & s:
            return False
        seen |= s
    return True


def lcm_exponent(ideal: MonomialIdeal) -> ExponentVector:
    return tuple(max(col) for col in zip(*ideal.generators))


def render(ideal: MonomialIdeal) -> str:
    """Canonical text form, parseable by :func:`parse_ideal`."""
    return "(" + ",".join(render_monomial(v) for v in ideal.generators) + ")"


# -- parser ------------------------------------------------------------------

class _Parser:
    # ideal := "(" gen ("," gen)* ")" ; gen := factor ("*" factor)* ;
    # factor := "x" INT ("^" INT)?

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None):
        raise ParseError(message, self.text, self.pos if pos is None else pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        value = int(self.text[start:self.pos])
        if value < 1:
            self.error("integers must be >= 1", start)
        return value

    def factor(self) -> tuple:
        if self.peek() != "x":
            self.error("expected a variable x<i>")
        self.pos += 1
        index = self.integer()
        exp = 1
        if self.peek() == "^":
            self.pos += 1
            self.skip_ws()
            exp = self.integer()
        return index, exp

    def generator(self) -> dict:
        powers: dict = {}
        while True:
            index, exp = self.factor()
            powers[index] = powers.get(index, 0) + exp
            if self.peek() != "*":
                return powers
            self.pos += 1

    def ideal(self) -> list:
        self.expect("(")
        gens = [self.generator()]
        while self.peek() == ",":
            self.pos += 1
            gens.append(self.generator())
        self.expect(")")
        if self.peek():
            self.error("trailing input after ')'")
        return gens


def parse_ideal(text: str, n: int | None = None) -> MonomialIdeal:
    """Parse text such as ``"(x1^2*x2, x3)"``.

    ``n`` defaults to the largest variable index that occurs.  Redundant
    generators are dropped.
    """
    gens = _Parser(text).ideal()
    top = max(max(g) for g in gens)
    if n is None:
        n = top
    elif top > n:
        raise ParseError(f"variable x{top} exceeds the declared {n} variables", text, 0)
    vecs = [tuple(g.get(j, 0) for j in range(1, n + 1)) for g in gens]
    return minimalize(vecs, n)
