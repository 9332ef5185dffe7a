"""Highest vectors and the three conditions that select an irreducible
representation in the realization by functions on the group.

Condition 1: left shifts L(a,b) with a > b annihilate the vector.
Condition 2: left Cartan shifts have eigenvalue m_{-i}.
Condition 3: the indicator system L^(r+1) f = 0 holds with the exponents
of the indicator vector.

For the even orthogonal series with negative last weight entry the top
factor is the bar minor and the last two indicator equations swap their
exponents (the row-swap ruler); the literal system is stated only for the
non-negative case.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import HighestWeight, Series, indicator_exponents
from .minors import LeftShift, Minor, MinorPolynomial, left_act, minor
from .oracle import zero_test


def highest_vector(w: HighestWeight, series: Series) -> MinorPolynomial:
    """Product of principal minors with consecutive-difference exponents and
    the order-n carrier to the power |m_{-1}| (bar carrier when m_{-1} < 0)."""
    n = series.n
    factors: dict[Minor, Fraction] = {}
    for k in range(n, 1, -1):
        nxt = abs(w.entry(k - 1)) if k == 2 else w.entry(k - 1)
        e = w.entry(k) - nxt
        if e:
            factors[minor(n, range(-n, -k + 1))] = e
    last = w.entry(1)
    if last:
        if last < 0:
            factors[minor(n, tuple(range(-n, -1)) + (1,), bar=True)] = -last
        else:
            factors[minor(n, range(-n, 0))] = last
    return MinorPolynomial.monomial(factors)


def lowering_left_shifts(series: Series) -> list[LeftShift]:
    """All left shifts L(a,b) with source strictly above target; these must
    annihilate a highest vector."""
    idx = series.indices
    return [LeftShift(a, b) for a in idx for b in idx if a > b]


def left_cartan_weight(poly: MinorPolynomial, series: Series) -> tuple[Fraction, ...] | None:
    """Common eigenvalue vector of the left Cartan shifts, from row counts;
    None when monomials disagree."""
    n = series.n
    ref: tuple[Fraction, ...] | None = None
    for key in poly.terms:
        w = []
        for k in range(n, 0, -1):
            total = Fraction(0)
            for m, e in key:
                occ = m.rows.count(-k)
                if series.kind != "A":
                    occ -= m.rows.count(k)
                total += e * occ
            w.append(total)
        wt = tuple(w)
        if ref is None:
            ref = wt
        elif wt != ref:
            return None
    return ref


def indicator_operators(w: HighestWeight, series: Series) -> list[tuple[LeftShift, Fraction]]:
    """The indicator system as (operator, exponent r) pairs; each equation is
    L**(r+1) f = 0."""
    n = series.n
    r = indicator_exponents(w, series)
    negative = series.kind == "D" and w.entry(1) < 0
    ops: list[tuple[LeftShift, Fraction]] = []
    for i in range(n, 1, -1):
        if i == 2 and negative:
            break
        ops.append((LeftShift(-i, -i + 1), r.entry(i)))
    if series.kind in ("A", "C"):
        ops.append((LeftShift(-1, 1), r.entry(1)))
    elif series.kind == "B":
        ops.append((LeftShift(-1, 0), r.entry(1)))
    elif not negative:
        ops.append((LeftShift(-2, 1), r.entry(1)))
    else:
        ops.append((LeftShift(-2, 1), r.entry(2)))
        ops.append((LeftShift(-2, -1), r.entry(1)))
    return ops


@dataclass
class ConditionReport:
    ok: bool
    details: list[dict] = field(default_factory=list)


@dataclass
class HighestVectorReport:
    condition1: ConditionReport
    condition2: ConditionReport
    condition3: ConditionReport

    @property
    def ok(self) -> bool:
        return self.condition1.ok and self.condition2.ok and self.condition3.ok

    def to_json(self) -> dict:
        return {
            "pass": self.ok,
            "condition1": {"pass": self.condition1.ok, "checks": self.condition1.details},
            "condition2": {"pass": self.condition2.ok, "checks": self.condition2.details},
            "condition3": {"pass": self.condition3.ok, "checks": self.condition3.details},
        }


def indicator_check(
    f: MinorPolynomial,
    w: HighestWeight,
    series: Series,
    trials: int = 12,
    seed: int = 0,
) -> ConditionReport:
    """Apply each indicator operator to the power r+1 and zero-test."""
    details = []
    ok = True
    for op, r in indicator_operators(w, series):
        power = int(r) + 1
        g = f
        for _ in range(power):
            g = left_act(op, g, series)
        if g.is_zero():
            passed = True
        else:
            passed = zero_test(g, series, trials=trials, seed=seed).is_zero
        details.append({"operator": str(op), "power": power, "pass": passed})
        ok = ok and passed
    return ConditionReport(ok, details)


def check_defining_conditions(
    v: MinorPolynomial,
    w: HighestWeight,
    series: Series,
    trials: int = 12,
    seed: int = 0,
) -> HighestVectorReport:
    if v.is_zero():
        raise ValueError("cannot check the zero vector")
    # condition 1: lowering left shifts annihilate
    details1 = []
    ok1 = True
    for op in lowering_left_shifts(series):
        g = left_act(op, v, series)
        passed = g.is_zero() or zero_test(g, series, trials=trials, seed=seed).is_zero
        details1.append({"operator": str(op), "pass": passed})
        ok1 = ok1 and passed
    # condition 2: left Cartan eigenvalues equal the weight
    lw = left_cartan_weight(v, series)
    ok2 = lw == w.m
    details2 = [{"measured": [str(x) for x in lw] if lw else None, "expected": [str(x) for x in w.m]}]
    # condition 3: indicator system
    cond3 = indicator_check(v, w, series, trials=trials, seed=seed)
    return HighestVectorReport(
        ConditionReport(ok1, details1), ConditionReport(ok2, details2), cond3
    )
