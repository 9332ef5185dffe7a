"""Series data, matrix-unit generators, highest weights, indicator exponents.

Index conventions: matrix rows and columns run over
``-n, ..., -1, 1, ..., n`` for the symplectic and even orthogonal series,
with an extra ``0`` for the odd orthogonal one.  Series A is gl(n+1)
realized on indices ``-n, ..., -1, 1``; its distinguished subalgebra
gl(n-1) lives on ``-n, ..., -2``.  The integer order on indices is the
total order used everywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

SERIES_KINDS = ("A", "B", "C", "D")

Rat = Fraction


def as_fraction(x) -> Fraction:
    """Coerce ints, strings like '3/2', and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def sign(i: int) -> int:
    return 1 if i > 0 else -1 if i < 0 else 0


@dataclass(frozen=True)
class Series:
    """One of the four classical series at rank ``n``.

    B is o(2n+1), C is sp(2n), D is o(2n); A stands for gl(n+1) with the
    subalgebra gl(n-1) obtained by deleting the indices -1 and 1.
    """

    kind: str
    n: int

    def __post_init__(self) -> None:
        if self.kind not in SERIES_KINDS:
            raise ValueError(f"unknown series kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("rank must be a positive integer")
        if self.kind == "D" and self.n < 2:
            raise ValueError("series D requires n >= 2")

    @property
    def indices(self) -> tuple[int, ...]:
        """Matrix index universe, in increasing order."""
        n = self.n
        neg = tuple(range(-n, 0))
        if self.kind == "A":
            return neg + (1,)
        if self.kind == "B":
            return neg + (0,) + tuple(range(1, n + 1))
        return neg + tuple(range(1, n + 1))

    @property
    def matrix_size(self) -> int:
        return len(self.indices)

    @property
    def generator_kind(self) -> str:
        return "E" if self.kind == "A" else "F"

    @property
    def subalgebra_indices(self) -> tuple[int, ...]:
        """Index universe of the rank-(n-1) subalgebra."""
        n = self.n
        if self.kind == "A":
            return tuple(range(-n, -1))
        neg = tuple(range(-n, -1))
        pos = tuple(range(2, n + 1))
        if self.kind == "B":
            return neg + (0,) + pos
        return neg + pos

    @property
    def half_integer_allowed(self) -> bool:
        return self.kind in ("B", "D")

    def validate_index(self, i: int) -> None:
        if i not in self.indices:
            raise ValueError(f"index {i} not in the universe of {self}")

    def __str__(self) -> str:
        return f"{self.kind}{self.n}"


@dataclass(frozen=True)
class Generator:
    """A matrix-unit generator label: E(i,j) for series A, F(i,j) otherwise."""

    kind: str  # "E" or "F"
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.kind not in ("E", "F"):
            raise ValueError(f"generator kind must be E or F, got {self.kind!r}")

    def validate(self, series: Series) -> None:
        if self.kind != series.generator_kind:
            raise ValueError(f"{self} is not a generator label for series {series}")
        series.validate_index(self.i)
        series.validate_index(self.j)

    def __str__(self) -> str:
        return f"{self.kind}({self.i},{self.j})"


def E(i: int, j: int) -> Generator:
    return Generator("E", i, j)


def F(i: int, j: int) -> Generator:
    return Generator("F", i, j)


def expand_generator(g: Generator, series: Series) -> list[tuple[Fraction, tuple[int, int]]]:
    """Expand a generator into elementary matrix units E(a,b).

    Returns a list of (coefficient, (a, b)) pairs.  E labels expand to
    themselves; F labels give the two-term combination
    ``E(i,j) - E(-j,-i)`` for the orthogonal series and
    ``E(i,j) - sign(i)sign(j) E(-j,-i)`` for the symplectic one.  The two
    terms are kept even when they coincide or cancel.
    """
    g.validate(series)
    if g.kind == "E":
        return [(Fraction(1), (g.i, g.j))]
    if series.kind == "C":
        c = Fraction(-sign(g.i) * sign(g.j))
    else:
        c = Fraction(-1)
    return [(Fraction(1), (g.i, g.j)), (c, (-g.j, -g.i))]


def is_raising(g: Generator) -> bool:
    """True when the generator corresponds to an upper-triangular matrix unit.

    These are the operators annihilating highest vectors under the right
    action; the mirrored classification applies to left shifts.
    """
    return g.i < g.j


@dataclass(frozen=True)
class SubalgebraGenerators:
    generators: tuple[Generator, ...]
    raising: tuple[Generator, ...]
    cartan: tuple[Generator, ...]
    lowering: tuple[Generator, ...]


def _is_zero_generator(kind: str, series: Series, i: int, j: int) -> bool:
    # F(i,-i) vanishes identically for the orthogonal series, as does F(0,0).
    if kind != "F" or series.kind == "C":
        return False
    return i == -j


def subalgebra_generators(series: Series) -> SubalgebraGenerators:
    """Generator set of the rank-(n-1) subalgebra, split into raising /
    Cartan / lowering parts under the index order -n < ... < 0 < ... < n.

    For B, C, D the pairs (i,j) and (-j,-i) label proportional generators;
    one representative (the lexicographically smaller pair) is kept.
    """
    if series.n < 2:
        raise ValueError("subalgebra requires n >= 2")
    kind = series.generator_kind
    universe = series.subalgebra_indices
    seen: set[tuple[int, int]] = set()
    gens: list[Generator] = []
    for i in universe:
        for j in universe:
            if _is_zero_generator(kind, series, i, j):
                continue
            if kind == "F":
                mirror = (-j, -i)
                rep = min((i, j), mirror)
                if rep in seen:
                    continue
                seen.add(rep)
                gens.append(Generator(kind, *rep))
            else:
                gens.append(Generator(kind, i, j))
    raising = tuple(g for g in gens if g.i < g.j)
    cartan = tuple(g for g in gens if g.i == g.j)
    lowering = tuple(g for g in gens if g.i > g.j)
    return SubalgebraGenerators(tuple(gens), raising, cartan, lowering)


@dataclass(frozen=True)
class HighestWeight:
    """A dominant weight [m_{-n}, ..., m_{-1}] for the given series."""

    series: Series
    m: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", tuple(as_fraction(x) for x in self.m))
        s = self.series
        if len(self.m) != s.n:
            raise ValueError(f"weight needs {s.n} entries, got {len(self.m)}")
        halves = {x.denominator for x in self.m}
        if not halves <= {1, 2}:
            raise ValueError("weight entries must be integers or half-integers")
        if len(halves) > 1:
            raise ValueError("entries must be simultaneously integer or half-integer")
        if 2 in halves and not s.half_integer_allowed:
            raise ValueError(f"half-integer weights are not allowed for series {s.kind}")
        body, last = self.m[:-1], self.m[-1]
        chain = body + (abs(last),) if s.kind == "D" else self.m
        for a, b in zip(chain, chain[1:]):
            if a < b:
                raise ValueError(f"weight {self.m} is not dominant for {s}")
        if s.kind != "D" and last < 0:
            raise ValueError("a negative last entry is only allowed for series D")

    @property
    def is_half_integer(self) -> bool:
        return self.m[0].denominator == 2

    def entry(self, k: int) -> Fraction:
        """m_{-k} for k = n..1."""
        return self.m[self.series.n - k]

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.m) + "]"


def weight(series: Series, entries: Sequence) -> HighestWeight:
    return HighestWeight(series, tuple(as_fraction(x) for x in entries))


@dataclass(frozen=True)
class IndicatorExponents:
    """The exponent vector (r_{-n}, ..., r_{-1}) of the indicator system."""

    r: tuple[Fraction, ...]

    def entry(self, k: int) -> Fraction:
        return self.r[len(self.r) - k]


def indicator_exponents(w: HighestWeight, series: Series) -> IndicatorExponents:
    """Exponents r_{-i}: consecutive differences of the weight, with the
    series-dependent last entry (m_{-1} for A and C, 2 m_{-1} for B, and the
    pair m_{-2} -/+ |m_{-1}| for D)."""
    if w.series != series:
        raise ValueError("weight does not belong to the given series")
    n = series.n
    r: list[Fraction] = []
    for k in range(n, 1, -1):
        nxt = abs(w.entry(k - 1)) if (series.kind == "D" and k == 2) else w.entry(k - 1)
        r.append(w.entry(k) - nxt)
    if series.kind in ("A", "C"):
        r.append(w.entry(1))
    elif series.kind == "B":
        r.append(2 * w.entry(1))
    else:
        r.append(w.entry(2) + abs(w.entry(1)))
    exps = IndicatorExponents(tuple(r))
    for x in exps.r:
        if x.denominator != 1 or x < 0:
            raise ValueError(f"indicator exponents {exps.r} are not non-negative integers")
    return exps
