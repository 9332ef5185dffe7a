"""Exact evaluation of minor polynomials at rational group points.

Points are sampled as products of one-parameter unipotent factors (exact
exponentials of the nilpotent generators) and a rational torus element, so
they lie in the identity component and admit a Gauss decomposition
generically.  The bilinear form is preserved exactly and asserted on
construction.  Zero testing is one-sided: a nonzero evaluation certifies a
nonzero function, while an all-zero run is probabilistic with a
Schwartz-Zippel style bound reported alongside.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .algebra import Series, sign
from .minors import (
    Minor,
    MinorPolynomial,
    bar_rows,
    default_rows,
    minor,
)

Matrix = tuple[tuple[Fraction, ...], ...]


class SingularPointError(Exception):
    """A Laurent or half-integer evaluation hit a vanishing denominator."""


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    size = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(size)) for j in range(size))
        for i in range(size)
    )


def _identity(size: int) -> Matrix:
    return tuple(
        tuple(Fraction(int(i == j)) for j in range(size)) for i in range(size)
    )


def _det(rows_of_entries: list[list[Fraction]]) -> Fraction:
    """Fraction Gaussian elimination; sizes here are tiny."""
    m = [row[:] for row in rows_of_entries]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, size):
            if m[r][col] != 0:
                factor = m[r][col] * inv
                m[r] = [m[r][c] - factor * m[col][c] for c in range(size)]
    return det


def form_matrix(series: Series) -> Matrix | None:
    """The invariant bilinear form J, derived from the generator definitions:
    antidiagonal units for B and D, antidiagonal signs for C, none for A."""
    if series.kind == "A":
        return None
    idx = series.indices
    pos = {v: i for i, v in enumerate(idx)}
    size = len(idx)
    rows = [[Fraction(0)] * size for _ in range(size)]
    for v in idx:
        rows[pos[v]][pos[-v]] = Fraction(sign(v) if series.kind == "C" else 1)
        if v == 0:
            rows[pos[0]][pos[0]] = Fraction(1)
    return tuple(tuple(r) for r in rows)


class GroupPoint:
    """Exact rational matrix in the relevant classical group."""

    def __init__(self, series: Series, matrix: Matrix, check: bool = True):
        self.series = series
        self.matrix = matrix
        self._pos = {v: i for i, v in enumerate(series.indices)}
        self._minor_cache: dict[tuple[tuple[int, ...], tuple[int, ...]], Fraction] = {}
        if check:
            self._check_form()

    def _check_form(self) -> None:
        j = form_matrix(self.series)
        if j is None:
            if _det([list(r) for r in self.matrix]) == 0:
                raise ValueError("sampled GL point is singular")
            return
        size = len(self.matrix)
        xt = tuple(
            tuple(self.matrix[r][c] for r in range(size)) for c in range(size)
        )
        if _mat_mul(_mat_mul(xt, j), self.matrix) != j:
            raise ValueError("form preservation failed; generator signs are wrong")

    def entry(self, row: int, col: int) -> Fraction:
        return self.matrix[self._pos[row]][self._pos[col]]

    def minor_value(self, m: Minor) -> Fraction:
        key = (m.rows, m.cols)
        cached = self._minor_cache.get(key)
        if cached is None:
            sub = [[self.entry(r, c) for c in m.cols] for r in m.rows]
            cached = _det(sub)
            self._minor_cache[key] = cached
        return cached

    def to_json(self) -> dict:
        return {
            "series": self.series.kind,
            "n": self.series.n,
            "matrix": [[str(x) for x in row] for row in self.matrix],
        }


def _exp_nilpotent(size: int, entries: dict[tuple[int, int], Fraction]) -> Matrix:
    """Exact exp of a nilpotent matrix given by positional entries."""
    f = [[Fraction(0)] * size for _ in range(size)]
    for (r, c), v in entries.items():
        f[r][c] += v
    fm: Matrix = tuple(tuple(row) for row in f)
    result = _identity(size)
    power = _identity(size)
    k = 1
    coeff = Fraction(1)
    while True:
        power = _mat_mul(power, fm)
        if all(x == 0 for row in power for x in row):
            break
        coeff /= k
        result = tuple(
            tuple(result[i][j] + coeff * power[i][j] for j in range(size))
            for i in range(size)
        )
        k += 1
        if k > size + 1:
            raise AssertionError("generator is not nilpotent")
    return result


def _one_parameter_factor(series: Series, i: int, j: int, alpha: Fraction) -> Matrix:
    """exp(alpha * X_{i,j}) for the elementary generator at (i, j) != (j, i)."""
    pos = {v: k for k, v in enumerate(series.indices)}
    entries: dict[tuple[int, int], Fraction] = {(pos[i], pos[j]): alpha}
    if series.kind != "A":
        c = -sign(i) * sign(j) if series.kind == "C" else -1
        entries[(pos[-j], pos[-i])] = entries.get((pos[-j], pos[-i]), Fraction(0)) + c * alpha
    return _exp_nilpotent(series.matrix_size, entries)


def _right_multiply(x: Matrix, factor: Matrix) -> Matrix:
    """x @ factor, exploiting that unipotent factors are sparse off-identity."""
    size = len(x)
    deltas: list[tuple[int, int, Fraction]] = []
    for r in range(size):
        for c in range(size):
            v = factor[r][c] - (1 if r == c else 0)
            if v:
                deltas.append((r, c, v))
    rows = [list(row) for row in x]
    for i in range(size):
        xi = x[i]
        for r, c, v in deltas:
            if xi[r]:
                rows[i][c] += xi[r] * v
    return tuple(tuple(r) for r in rows)


def sample_group_point(series: Series, seed: int, magnitude: int = 4) -> GroupPoint:
    """Deterministic-under-seed product of unipotent factors and a torus element.

    Lives in the identity component; the form-preservation invariant is
    checked exactly before returning.
    """
    rng = random.Random(f"branchkit:{series.kind}:{series.n}:{seed}:{magnitude}")

    def rat() -> Fraction:
        # integer unipotent parameters keep the entry sizes tame
        return Fraction(rng.randint(-magnitude, magnitude))

    def rat_nonzero() -> Fraction:
        num = rng.choice([x for x in range(-magnitude, magnitude + 1) if x])
        den = rng.randint(1, magnitude)
        return Fraction(num, den)

    size = series.matrix_size
    idx = series.indices
    x = _identity(size)
    pairs = [(i, j) for i in idx for j in idx if i > j]
    zero_pair = series.kind in ("B", "D")
    for i, j in pairs:
        if zero_pair and i == -j:
            continue
        x = _right_multiply(x, _one_parameter_factor(series, i, j, rat()))
    # torus
    pos = {v: k for k, v in enumerate(idx)}
    t = [[Fraction(0)] * size for _ in range(size)]
    if series.kind == "A":
        for v in idx:
            t[pos[v]][pos[v]] = rat_nonzero()
    else:
        for v in idx:
            if v < 0:
                tv = rat_nonzero()
                t[pos[v]][pos[v]] = tv
                t[pos[-v]][pos[-v]] = Fraction(1) / tv
            elif v == 0:
                t[pos[0]][pos[0]] = Fraction(1)
    x = _mat_mul(x, tuple(tuple(r) for r in t))
    for i, j in pairs:
        if zero_pair and i == -j:
            continue
        x = _right_multiply(x, _one_parameter_factor(series, j, i, rat()))
    return GroupPoint(series, x)


def point_stream(series: Series, seed: int, magnitude: int = 4) -> Iterator[GroupPoint]:
    k = 0
    while True:
        yield sample_group_point(series, seed + k, magnitude)
        k += 1


_POINT_BATCHES: dict[tuple, list] = {}


def sample_points(series: Series, count: int, seed: int = 0, magnitude: int = 4) -> list[GroupPoint]:
    """A reusable batch of points; minor values are cached on each point, so
    sharing a batch across many zero tests amortizes the determinants."""
    key = (series.kind, series.n, seed, magnitude)
    batch = _POINT_BATCHES.setdefault(key, [])
    while len(batch) < count:
        batch.append(sample_group_point(series, seed + len(batch), magnitude))
    return batch[:count]


def vanishes_at(poly: MinorPolynomial, points: Sequence[GroupPoint]) -> tuple[bool, int | None]:
    """Exact evaluation over a shared batch; returns (all-zero, witness index).

    Points where a Laurent denominator degenerates are skipped.
    """
    if poly.is_zero():
        return True, None
    for idx, point in enumerate(points):
        try:
            value = evaluate(poly, point).value
        except SingularPointError:
            continue
        if value != 0:
            return False, idx
    return True, None


# ---------------------------------------------------------------------------
# Carrier handling and evaluation


def carrier_minors(n: int) -> tuple[Minor, Minor]:
    """The two order-n principal-type minors that may carry half exponents."""
    return minor(n, range(-n, 0)), minor(n, tuple(range(-n, -1)) + (1,), bar=True)


def split_carrier(
    poly: MinorPolynomial, n: int
) -> tuple[MinorPolynomial, Minor | None, Fraction]:
    """Write poly = carrier**e_min * cleared with cleared free of half powers.

    Returns (cleared, carrier, e_min); (poly, None, 0) for integral input.
    """
    carriers = set()
    for key in poly.terms:
        for m, e in key:
            if e.denominator == 2:
                carriers.add(m)
    if not carriers:
        return poly, None, Fraction(0)
    if len(carriers) > 1 or next(iter(carriers)) not in carrier_minors(n):
        raise ValueError(f"half-integer exponents on unexpected minors: {carriers}")
    carrier = carriers.pop()
    exps = []
    for key in poly.terms:
        e = dict(key).get(carrier, Fraction(0))
        exps.append(e)
    e_min = min(exps)
    shift = MinorPolynomial.monomial({carrier: -e_min})
    cleared = poly * shift
    for key in cleared.terms:
        if any(e.denominator != 1 for _, e in key):
            raise ValueError("polynomial does not clear to integral exponents")
    return cleared, carrier, e_min


@dataclass
class EvaluationResult:
    value: Fraction
    carrier_exponent: Fraction
    carrier_value: Fraction

    @property
    def is_zero(self) -> bool:
        return self.value == 0


def evaluate(poly: MinorPolynomial, point: GroupPoint) -> EvaluationResult:
    """Exact value of the cleared polynomial part, along with the carrier value.

    Laurent exponents require the base minor to be nonzero at the point;
    otherwise a SingularPointError asks the caller to resample.
    """
    n = point.series.n
    cleared, carrier, e_min = split_carrier(poly, n)
    carrier_value = Fraction(1)
    if carrier is not None:
        carrier_value = point.minor_value(carrier)
        if carrier_value == 0:
            raise SingularPointError(f"carrier {carrier} vanishes at the point")
    total = Fraction(0)
    for key, coeff in cleared.terms.items():
        term = coeff
        for m, e in key:
            v = point.minor_value(m)
            k = int(e)
            if k < 0 and v == 0:
                raise SingularPointError(f"{m} vanishes at the point")
            term *= v ** k
            if term == 0:
                break
        total += term
    return EvaluationResult(total, e_min, carrier_value)


@dataclass
class ZeroTestReport:
    is_zero: bool
    trials: int
    witness_seed: int | None
    degree_bound: Fraction
    error_bound: Fraction


def is_zero_function(
    poly: MinorPolynomial,
    series: Series,
    trials: int = 50,
    seed: int = 0,
    magnitude: int = 4,
) -> bool:
    return zero_test(poly, series, trials, seed, magnitude).is_zero


def zero_test(
    poly: MinorPolynomial,
    series: Series,
    trials: int = 50,
    seed: int = 0,
    magnitude: int = 4,
) -> ZeroTestReport:
    """Evaluate at sampled points; nonzero is certain, zero is probabilistic.

    The reported error bound is the Schwartz-Zippel quantity
    trials independent draws of (deg / #parameter values); it is a coarse
    but honest certificate given the sampled parameter ranges.
    """
    deg = poly.total_degree_bound()
    pool = Fraction(2 * magnitude * magnitude + 1)
    per_trial = min(Fraction(1), deg / pool) if deg else Fraction(0)
    if poly.is_zero():
        return ZeroTestReport(True, 0, None, deg, Fraction(0))
    done = 0
    attempt = 0
    while done < trials:
        if attempt > 4 * trials + 20:
            raise RuntimeError("too many singular points while zero testing")
        point = sample_group_point(series, seed + attempt, magnitude)
        attempt += 1
        try:
            result = evaluate(poly, point)
        except SingularPointError:
            continue
        if not result.is_zero:
            return ZeroTestReport(False, done + 1, seed + attempt - 1, deg, Fraction(0))
        done += 1
    return ZeroTestReport(True, trials, None, deg, per_trial**trials)


# ---------------------------------------------------------------------------
# Relation suite


def _poly_of(n: int, cols: Iterable[int], bar: bool = False) -> MinorPolynomial:
    return MinorPolynomial.of(minor(n, cols, bar))


def plucker_exchange(n: int, left: Sequence[int], right: Sequence[int]) -> MinorPolynomial:
    """The single-column exchange identity between nested default minors.

    For column tuples I (order p) and J (order q <= p) the function
    a_I a_J - sum_k a_{I | i_k -> j_1} a_{J | j_1 -> i_k} vanishes on any
    matrix; returned as a polynomial for the zero tester.
    """
    left = tuple(left)
    right = tuple(right)
    if len(right) > len(left):
        raise ValueError("right tuple must not be longer than the left one")
    from .minors import canonical_minor

    def term(cols_a: Sequence[int], cols_b: Sequence[int], coeff: int) -> MinorPolynomial:
        sa, ma = canonical_minor(default_rows(n, len(cols_a)), cols_a)
        sb, mb = canonical_minor(default_rows(n, len(cols_b)), cols_b)
        if sa == 0 or sb == 0:
            return MinorPolynomial.zero()
        return MinorPolynomial.monomial({ma: Fraction(1)}) * MinorPolynomial.monomial(
            {mb: Fraction(1)}, coeff * sa * sb
        )

    total = term(left, right, 1)
    j1 = right[0]
    for k in range(len(left)):
        new_left = left[:k] + (j1,) + left[k + 1 :]
        new_right = (left[k],) + right[1:]
        total = total - term(new_left, new_right, 1)
    return total


def relation_suite(series: Series) -> list[tuple[str, MinorPolynomial]]:
    """Named polynomials that must vanish identically on the group."""
    n = series.n
    kind = series.kind
    neg = tuple(range(-n, 0))
    items: list[tuple[str, MinorPolynomial]] = []

    # Plucker exchange instances between consecutive orders and equal orders.
    for p in range(2, n + 1):
        big = neg[:p]
        small = neg[: p - 1][:-1] + (1,) if p >= 2 else (1,)
        items.append(
            (f"plucker({p},{p-1})", plucker_exchange(n, big, small))
        )
        other = neg[: p - 1] + (1,)
        items.append((f"plucker({p},{p})", plucker_exchange(n, big, other)))

    prefix3 = neg[: n - 2]  # -n .. -3
    prefix2 = neg[: n - 1]  # -n .. -2
    if kind == "C":
        lhs = _poly_of(n, prefix3 + (-2, 2))
        rhs = _poly_of(n, prefix3 + (-1, 1))
        items.append(("sp: a(..,-2,2) + a(..,-1,1)", lhs + rhs))
    if kind == "B":
        rel = _poly_of(n, prefix2 + (1,)) * _poly_of(n, prefix2 + (-1,)) + _poly_of(
            n, prefix2 + (0,)
        ) * _poly_of(n, prefix2 + (0,)).scale(Fraction(1, 2))
        items.append(("odd: a(..,1)a(..,-1) + a(..,0)^2/2", rel))
        # The same relation at the bar row set, used by the half-integer
        # indicator computation; asserted numerically rather than by analogy.
        rows = bar_rows(n)
        m_1 = Minor(rows, prefix2 + (1,))
        m_m1 = Minor(rows, prefix2 + (-1,))
        m_0 = Minor(rows, prefix2 + (0,))
        rel2 = MinorPolynomial.of(m_1) * MinorPolynomial.of(m_m1) + (
            MinorPolynomial.of(m_0) * MinorPolynomial.of(m_0)
        ).scale(Fraction(1, 2))
        items.append(("odd: shifted-row variant", rel2))
    if kind == "D":
        a = lambda cols: _poly_of(n, cols)  # noqa: E731
        ab = lambda cols: _poly_of(n, cols, bar=True)  # noqa: E731
        p_n = a(neg)  # principal order n
        items.append(
            ("even: a(..,2)a(..,-2) + a(..,1)a(..,-1)",
             a(prefix3 + (2,)) * a(prefix2) + a(prefix3 + (1,)) * a(prefix3 + (-1,)))
        )
        items.append(("even: a(..,-2,1) = 0", a(prefix2 + (1,))))
        items.append(("even: a(..,-1,2) = 0", a(prefix3 + (-1, 2))))
        items.append(("even: bar a(..,-2,-1) = 0", ab(prefix2 + (-1,))))
        items.append(("even: bar a(..,1,2) = 0", ab(prefix3 + (1, 2))))
        items.append(
            ("even: a(..,-1,1)a(..,-2) + a(..,1)a(..,-2,-1)",
             a(prefix3 + (-1, 1)) * a(prefix2) + a(prefix3 + (1,)) * p_n)
        )
        items.append(
            ("even: a(..,-2,2) - a(..,-1,1)",
             a(prefix3 + (-2, 2)) - a(prefix3 + (-1, 1)))
        )
        items.append(
            ("even: a(..,1,2)a(..,-2)^2 + a(..,1)^2 a(..,-2,-1)",
             a(prefix3 + (1, 2)) * a(prefix2) * a(prefix2)
             + a(prefix3 + (1,)) * a(prefix3 + (1,)) * p_n)
        )
        bar_top = ab(prefix2 + (1,))
        items.append(
            ("even: bar a(..,-1,1)a(..,-2) - a(..,-1) bar a(..,-2,1)",
             ab(prefix3 + (-1, 1)) * a(prefix2) - a(prefix3 + (-1,)) * bar_top)
        )
        items.append(
            ("even: bar a(..,-1,2)a(..,-2)^2 + a(..,-1)^2 bar a(..,-2,1)",
             ab(prefix3 + (-1, 2)) * a(prefix2) * a(prefix2)
             + a(prefix3 + (-1,)) * a(prefix3 + (-1,)) * bar_top)
        )
        items.append(
            ("even: bar a(..,-2,2) + bar a(..,-1,1)",
             ab(prefix3 + (-2, 2)) + ab(prefix3 + (-1, 1)))
        )
        items.append(
            ("even: a(..,-1) bar a(..,1) - a(..,-2)^2",
             p_n * bar_top - a(prefix2) * a(prefix2))
        )
    return items


@dataclass
class RelationReport:
    series: str
    n: int
    trials: int
    results: list[dict]

    @property
    def ok(self) -> bool:
        return all(r["pass"] for r in self.results)

    def to_json(self) -> dict:
        return {
            "series": self.series,
            "n": self.n,
            "trials": self.trials,
            "pass": self.ok,
            "identities": self.results,
        }


def verify_relation_suite(
    series: Series, trials: int = 100, seed: int = 0, magnitude: int = 4
) -> RelationReport:
    points = sample_points(series, trials, seed, magnitude)
    results = []
    for name, poly in relation_suite(series):
        ok, witness = vanishes_at(poly, points)
        entry = {
            "identity": name,
            "pass": ok,
            "seed": seed,
            "degree_bound": str(poly.total_degree_bound()),
        }
        if not ok:
            entry["witness_seed"] = seed + witness
            entry["residual"] = str(evaluate(poly, points[witness]).value)
        results.append(entry)
    return RelationReport(series.kind, series.n, trials, results)


# ---------------------------------------------------------------------------
# z-coordinate normal form


ZKey = tuple[tuple[tuple[int, int], int], ...]  # ((k, c), exponent), sorted
ZPoly = dict[ZKey, Fraction]


def z_zero() -> ZPoly:
    return {}


def z_const(c: Fraction) -> ZPoly:
    return {(): c} if c else {}


def z_var(k: int, c: int) -> ZPoly:
    return {(((k, c), 1),): Fraction(1)}


def z_add(p: ZPoly, q: ZPoly) -> ZPoly:
    out = dict(p)
    for key, c in q.items():
        s = out.get(key, Fraction(0)) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def z_mul(p: ZPoly, q: ZPoly) -> ZPoly:
    out: ZPoly = {}
    for k1, c1 in p.items():
        for k2, c2 in q.items():
            merged = dict(k1)
            for v, e in k2:
                s = merged.get(v, 0) + e
                if s:
                    merged[v] = s
                else:
                    merged.pop(v, None)
            key = tuple(sorted(merged.items()))
            c = out.get(key, Fraction(0)) + c1 * c2
            if c:
                out[key] = c
            else:
                out.pop(key, None)
    return out


def z_pow(p: ZPoly, e: Fraction) -> ZPoly:
    """Power of a z-expression; fractional or negative exponents only for
    invertible monomials (single-term expressions)."""
    if e.denominator == 1 and e >= 0:
        result = z_const(Fraction(1))
        for _ in range(int(e)):
            result = z_mul(result, p)
        return result
    if len(p) != 1:
        raise ValueError("fractional/negative power of a non-monomial z-expression")
    ((key, coeff),) = p.items()
    if e.denominator == 2:
        # Half powers only ever hit the carriers, whose z-expression is 1.
        if key == () and coeff == 1:
            return z_const(Fraction(1))
        raise ValueError("half power of a non-trivial z-expression")
    k = int(e)
    scaled = {}
    for v, kk in key:
        scaled[v] = kk * k
    return {tuple(sorted(scaled.items())): coeff**k}


def _z_expr(m: Minor, series: Series, negative_case: bool) -> ZPoly:
    """z-coordinate expression of a catalog minor; None-raising for others."""
    n = series.n
    kind = series.kind
    bar = m.rows == bar_rows(n) and m.rows != default_rows(n, m.order)
    cols = m.cols
    d = m.order
    if not bar and m.rows != default_rows(n, d):
        raise ValueError(f"{m} is not a catalog minor (non-default rows)")

    def zvar_1(k: int, c: int) -> ZPoly:
        # z_{-k, c} with the degenerate conventions at k = 1
        if k == 1:
            if c == -1:
                return z_const(Fraction(1))
            if c == 1:
                if kind in ("A", "C"):
                    return z_var(1, 1)
                if kind == "B":
                    return {(((1, 0), 2),): Fraction(-1, 2)}
                return z_zero()  # series D: z_{-1,1} = 0
        return z_var(k, c)

    prefix_len = 0
    while prefix_len < d and cols[prefix_len] == -n + prefix_len:
        prefix_len += 1
    tail = cols[prefix_len:]

    if not bar:
        if tail == ():
            return z_const(Fraction(1))
        k = n - d + 1
        if tail == (1,):
            return zvar_1(k, 1)
        if tail == (-1,):
            return zvar_1(k, -1)
        if tail == (-1, 1):
            a = z_mul(zvar_1(k + 1, -1), zvar_1(k, 1))
            b = z_mul(zvar_1(k + 1, 1), zvar_1(k, -1))
            return z_add(a, {kk: -v for kk, v in b.items()})
        if kind == "B" and tail == (0,) and d == n:
            return z_var(1, 0)
        if kind == "D" and tail == (2,) and d == n - 1:
            return {(((2, -1), 1), ((2, 1), 1)): Fraction(-1)}
        if kind == "D" and tail == (1, 2) and d == n:
            return {(((2, 1), 2),): Fraction(-1)}
        raise ValueError(f"{m} is not in the catalog for series {kind}")
    # bar minors: series D with negative last weight entry
    if kind != "D" or not negative_case:
        raise ValueError(f"bar minor {m} outside the negative even-orthogonal catalog")
    if tail == (1,):
        return z_const(Fraction(1))
    if tail == (-1, 1):
        return z_var(2, -1)
    if tail == (-1, 2):
        return {(((2, -1), 2),): Fraction(-1)}
    raise ValueError(f"{m} is not in the bar catalog")


def z_normal_form(
    poly: MinorPolynomial, series: Series, negative_case: bool = False
) -> ZPoly:
    """Substitute each catalog minor by its z-coordinate expression.

    Two catalog polynomials are equal as functions on the group iff their
    normal forms coincide; non-catalog minors are rejected.
    """
    total: ZPoly = {}
    for key, coeff in poly.terms.items():
        term = z_const(coeff)
        for m, e in key:
            term = z_mul(term, z_pow(_z_expr(m, series, negative_case), e))
        total = z_add(total, term)
    return total


# ---------------------------------------------------------------------------
# Exact rank of an evaluation matrix


def evaluation_rank(
    vectors: Sequence[MinorPolynomial],
    series: Series,
    points: int | None = None,
    seed: int = 0,
    magnitude: int = 4,
) -> int:
    """Exact rank of the vectors-times-points evaluation matrix.

    Half-integer vectors are compared after clearing the common carrier
    power; mixing carriers (or half-integer with integral vectors) is
    rejected.
    """
    vecs = [v for v in vectors]
    if not vecs:
        return 0
    n = series.n
    split = [split_carrier(v, n) for v in vecs]
    carriers = {c for _, c, _ in split if c is not None}
    if len(carriers) > 1:
        raise ValueError("vectors carry inconsistent half-integer factors")
    if carriers:
        if any(c is None for _, c, _ in split):
            raise ValueError("cannot mix half-integer and integral vectors")
        carrier = carriers.pop()
        e_min = min(e for _, _, e in split)
        cleared = []
        for v in vecs:
            shifted = v * MinorPolynomial.monomial({carrier: -e_min})
            for key in shifted.terms:
                if any(e.denominator != 1 for _, e in key):
                    raise ValueError("vectors carry inconsistent half-integer factors")
            cleared.append(shifted)
        vecs = cleared
    count = points if points is not None else len(vecs) + 8
    if count < len(vecs):
        raise ValueError("need at least as many points as vectors")
    rows: list[list[Fraction]] = [[] for _ in vecs]
    got = 0
    attempt = 0
    while got < count:
        if attempt > 4 * count + 40:
            raise RuntimeError("too many singular points while sampling for rank")
        point = sample_group_point(series, seed + attempt, magnitude)
        attempt += 1
        try:
            col = [evaluate(v, point).value for v in vecs]
        except SingularPointError:
            continue
        for r, x in zip(rows, col):
            r.append(x)
        got += 1
    return _rank(rows)


def _rank(rows: list[list[Fraction]]) -> int:
    m = [row[:] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = Fraction(1) / m[rank][col]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank
