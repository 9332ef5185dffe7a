"""Minor symbols and exact Laurent-type polynomials in them.

A minor ``a^{rows}_{cols}`` is the determinant of the submatrix of a group
element on the given rows and columns.  Default minors of order k use rows
``-n, ..., -n+k-1``; the even-orthogonal bar minors use rows
``-n, ..., -2, 1``.  Right infinitesimal shifts substitute column indices,
left ones substitute row indices; both extend to products as derivations.

Exponents are exact rationals with denominator 1 or 2; half exponents occur
only on the order-n principal-type carriers (see the half-integer weight
machinery).  Negative integer exponents are allowed: the rank-2 even
orthogonal construction genuinely produces Laurent monomials.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .algebra import Generator, Series, as_fraction, expand_generator


@dataclass(frozen=True)
class Minor:
    """Determinant symbol with strictly increasing row and column tuples."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != len(self.cols):
            raise ValueError("row and column sets must have equal size")
        for t in (self.rows, self.cols):
            if any(a >= b for a, b in zip(t, t[1:])):
                raise ValueError(f"{t} is not strictly increasing")

    @property
    def order(self) -> int:
        return len(self.cols)

    def sort_key(self) -> tuple:
        return (self.order, self.rows, self.cols)

    def __lt__(self, other: "Minor") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        body = ",".join(str(c) for c in self.cols)
        rows = ",".join(str(r) for r in self.rows)
        return f"a[{body}]^({rows})"


def default_rows(n: int, order: int) -> tuple[int, ...]:
    return tuple(range(-n, -n + order))


def bar_rows(n: int) -> tuple[int, ...]:
    return tuple(range(-n, -1)) + (1,)


def minor(n: int, cols: Iterable[int], bar: bool = False) -> Minor:
    """Default (or bar) minor on the given columns for rank n."""
    cols = tuple(cols)
    if bar:
        if len(cols) != n:
            raise ValueError("bar minors have full order n")
        return Minor(bar_rows(n), cols)
    return Minor(default_rows(n, len(cols)), cols)


def is_bar(m: Minor, n: int) -> bool:
    return m.rows == bar_rows(n) and m.rows != default_rows(n, m.order)


def canonical_minor(rows: Iterable[int], cols: Iterable[int]) -> tuple[int, Minor | None]:
    """Sort rows and columns, tracking the determinant sign.

    Returns (sign, minor); sign 0 (with minor None) when a row or column
    repeats.
    """
    rows = list(rows)
    cols = list(cols)
    if len(rows) != len(cols):
        raise ValueError("row and column sets must have equal size")
    total = 1
    for seq in (rows, cols):
        if len(set(seq)) != len(seq):
            return 0, None
        total *= _sort_parity(seq)
    return total, Minor(tuple(sorted(rows)), tuple(sorted(cols)))


def _sort_parity(seq: list[int]) -> int:
    parity = 1
    order = sorted(range(len(seq)), key=seq.__getitem__)
    visited = [False] * len(seq)
    for start in range(len(seq)):
        if visited[start]:
            continue
        length = 0
        k = start
        while not visited[k]:
            visited[k] = True
            k = order[k]
            length += 1
        if length % 2 == 0:
            parity = -parity
    return parity


# A monomial key: factors sorted by Minor.sort_key, zero exponents dropped.
FactorKey = tuple[tuple[Minor, Fraction], ...]


def _make_key(factors: dict[Minor, Fraction]) -> FactorKey:
    items = [(m, e) for m, e in factors.items() if e != 0]
    for m, e in items:
        if e.denominator not in (1, 2):
            raise ValueError(f"exponent {e} has denominator outside {{1,2}}")
    items.sort(key=lambda me: me[0].sort_key())
    return tuple(items)


class MinorPolynomial:
    """Exact-rational linear combination of Laurent monomials in minors."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[FactorKey, Fraction] | None = None):
        self.terms: dict[FactorKey, Fraction] = {}
        if terms:
            for key, coeff in terms.items():
                if coeff != 0:
                    self.terms[key] = coeff

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "MinorPolynomial":
        return MinorPolynomial()

    @staticmethod
    def constant(c) -> "MinorPolynomial":
        c = as_fraction(c)
        return MinorPolynomial({(): c} if c else {})

    @staticmethod
    def monomial(factors: dict[Minor, Fraction], coeff=1) -> "MinorPolynomial":
        c = as_fraction(coeff)
        if c == 0:
            return MinorPolynomial()
        return MinorPolynomial({_make_key({m: as_fraction(e) for m, e in factors.items()}): c})

    @staticmethod
    def of(m: Minor) -> "MinorPolynomial":
        return MinorPolynomial.monomial({m: Fraction(1)})

    # -- ring structure ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, MinorPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "MinorPolynomial") -> "MinorPolynomial":
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return MinorPolynomial(out)

    def __neg__(self) -> "MinorPolynomial":
        return MinorPolynomial({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "MinorPolynomial") -> "MinorPolynomial":
        return self + (-other)

    def scale(self, c) -> "MinorPolynomial":
        c = as_fraction(c)
        if c == 0:
            return MinorPolynomial()
        return MinorPolynomial({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "MinorPolynomial") -> "MinorPolynomial":
        out: dict[FactorKey, Fraction] = {}
        for k1, c1 in self.terms.items():
            f1 = dict(k1)
            for k2, c2 in other.terms.items():
                merged = dict(f1)
                for m, e in k2:
                    s = merged.get(m, Fraction(0)) + e
                    if s:
                        merged[m] = s
                    else:
                        merged.pop(m, None)
                key = _make_key(merged)
                c = out.get(key, Fraction(0)) + c1 * c2
                if c:
                    out[key] = c
                else:
                    out.pop(key, None)
        return MinorPolynomial(out)

    def __pow__(self, k: int) -> "MinorPolynomial":
        if k < 0:
            raise ValueError("use monomial() for Laurent powers")
        result = MinorPolynomial.constant(1)
        for _ in range(k):
            result = result * self
        return result

    # -- structure helpers ---------------------------------------------------

    def monomials(self) -> Iterator[tuple[FactorKey, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda kv: kv[0]))

    def lex_largest_key(self) -> FactorKey:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms)

    def normalized(self) -> "MinorPolynomial":
        """Divide by the coefficient of the lexicographically largest monomial."""
        if not self.terms:
            return self
        lead = self.terms[self.lex_largest_key()]
        return self.scale(Fraction(1) / lead)

    def map_minors(self, f: Callable[[Minor], Minor]) -> "MinorPolynomial":
        out: dict[FactorKey, Fraction] = {}
        for key, c in self.terms.items():
            new_key = _make_key({f(m): e for m, e in key})
            out[new_key] = out.get(new_key, Fraction(0)) + c
        return MinorPolynomial(out)

    def minors_used(self) -> set[Minor]:
        out: set[Minor] = set()
        for key in self.terms:
            out.update(m for m, _ in key)
        return out

    def total_degree_bound(self) -> Fraction:
        """Max over monomials of sum of |exponent| * order; Schwartz-Zippel input."""
        best = Fraction(0)
        for key in self.terms:
            d = sum(abs(e) * m.order for m, e in key)
            best = max(best, d)
        return best

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.monomials():
            body = "*".join(
                f"{m}" + (f"^{e}" if e != 1 else "") for m, e in key
            )
            parts.append(f"({c})" + (f"*{body}" if body else ""))
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# Derivation actions


def _derive(
    poly: MinorPolynomial, act_on_minor: Callable[[Minor], list[tuple[Fraction, Minor]]]
) -> MinorPolynomial:
    """Extend an action on single minors to the polynomial as a derivation."""
    out: dict[FactorKey, Fraction] = {}
    for key, coeff in poly.terms.items():
        factors = dict(key)
        for m, e in key:
            for c_img, m_img in act_on_minor(m):
                new_factors = dict(factors)
                if e == 1:
                    del new_factors[m]
                else:
                    new_factors[m] = e - 1
                new_factors[m_img] = new_factors.get(m_img, Fraction(0)) + 1
                new_key = _make_key(new_factors)
                c = out.get(new_key, Fraction(0)) + coeff * e * c_img
                if c:
                    out[new_key] = c
                else:
                    out.pop(new_key, None)
    return MinorPolynomial(out)


def _column_substitution(i: int, j: int) -> Callable[[Minor], list[tuple[Fraction, Minor]]]:
    def act(m: Minor) -> list[tuple[Fraction, Minor]]:
        if j not in m.cols:
            return []
        new_cols = [i if c == j else c for c in m.cols]
        sgn, image = canonical_minor(m.rows, new_cols)
        if sgn == 0:
            return []
        return [(Fraction(sgn), image)]

    return act


def _row_substitution(a: int, b: int) -> Callable[[Minor], list[tuple[Fraction, Minor]]]:
    def act(m: Minor) -> list[tuple[Fraction, Minor]]:
        if a not in m.rows:
            return []
        new_rows = [b if r == a else r for r in m.rows]
        sgn, image = canonical_minor(new_rows, m.cols)
        if sgn == 0:
            return []
        return [(Fraction(sgn), image)]

    return act


def right_act_elementary(i: int, j: int, poly: MinorPolynomial) -> MinorPolynomial:
    """Right shift by the matrix unit E(i,j): substitute column j by i."""
    if i == j:
        return _diagonal_count(poly, lambda m: m.cols.count(i))
    return _derive(poly, _column_substitution(i, j))


def left_act_elementary(a: int, b: int, poly: MinorPolynomial) -> MinorPolynomial:
    """Left shift by the matrix unit E(a,b): substitute row a by b."""
    if a == b:
        return _diagonal_count(poly, lambda m: m.rows.count(a))
    return _derive(poly, _row_substitution(a, b))


def _diagonal_count(poly: MinorPolynomial, weight_of: Callable[[Minor], int]) -> MinorPolynomial:
    out: dict[FactorKey, Fraction] = {}
    for key, coeff in poly.terms.items():
        w = sum(e * weight_of(m) for m, e in key)
        if w:
            out[key] = coeff * w
    return MinorPolynomial(out)


def right_act(g: Generator, poly: MinorPolynomial, series: Series) -> MinorPolynomial:
    """Right infinitesimal shift by a generator, via its elementary expansion."""
    result = MinorPolynomial.zero()
    for c, (i, j) in expand_generator(g, series):
        if c:
            result = result + right_act_elementary(i, j, poly).scale(c)
    return result


@dataclass(frozen=True)
class LeftShift:
    """Left infinitesimal shift L(a,b) by E(a,b) (series A) or F(a,b)."""

    a: int
    b: int

    def __str__(self) -> str:
        return f"L({self.a},{self.b})"


def left_act(op: LeftShift, poly: MinorPolynomial, series: Series) -> MinorPolynomial:
    gen = Generator(series.generator_kind, op.a, op.b)
    result = MinorPolynomial.zero()
    for c, (a, b) in expand_generator(gen, series):
        if c:
            result = result + left_act_elementary(a, b, poly).scale(c)
    return result


# ---------------------------------------------------------------------------
# Weights and admissibility


def _monomial_col_weight(key: FactorKey, k: int, series: Series) -> Fraction:
    w = Fraction(0)
    for m, e in key:
        occ = m.cols.count(-k)
        if series.kind != "A":
            occ -= m.cols.count(k)
        w += e * occ
    return w


@dataclass
class WeightReport:
    weight: tuple[Fraction, ...] | None
    offenders: list[str]

    @property
    def ok(self) -> bool:
        return self.weight is not None


def cartan_weight(poly: MinorPolynomial, series: Series) -> WeightReport:
    """Common right Cartan eigenvalue vector (w_{-n}, ..., w_{-1}).

    Counts column occurrences, with the +k columns counted negatively for
    B, C, D.  Fails (listing offending terms) when monomials disagree.
    """
    if poly.is_zero():
        raise ValueError("the zero polynomial has no weight")
    n = series.n
    keys = list(poly.terms)
    ref = tuple(_monomial_col_weight(keys[0], k, series) for k in range(n, 0, -1))
    offenders = []
    for key in keys[1:]:
        w = tuple(_monomial_col_weight(key, k, series) for k in range(n, 0, -1))
        if w != ref:
            offenders.append(_key_str(key))
    if offenders:
        return WeightReport(None, offenders)
    return WeightReport(ref, [])


def positive_one_weight(poly: MinorPolynomial, series: Series) -> Fraction:
    """Eigenvalue of E(1,1) (A) or F(1,1) (B, C, D); terms must agree."""
    vals = set()
    for key in poly.terms:
        w = Fraction(0)
        for m, e in key:
            occ = m.cols.count(1)
            if series.kind != "A":
                occ -= m.cols.count(-1)
            w += e * occ
        vals.add(w)
    if len(vals) != 1:
        raise ValueError("polynomial is not an eigenvector of the +1 Cartan element")
    return vals.pop()


def reported_weight_component(poly: MinorPolynomial, series: Series) -> Fraction:
    """The complementary-torus eigenvalue the tableau formulas predict:
    F(-1,-1) for B, C, D (also when m_{-1} < 0), and E(-1,-1) - E(1,1)
    for the gl realization of series A."""
    rep = cartan_weight(poly, series)
    if rep.weight is None:
        raise ValueError("polynomial is not a weight vector: " + "; ".join(rep.offenders))
    w1 = rep.weight[-1]
    if series.kind == "A":
        return w1 - positive_one_weight(poly, series)
    return w1


def _key_str(key: FactorKey) -> str:
    return "*".join(f"{m}^{e}" for m, e in key) if key else "1"


@dataclass
class AdmissibilityReport:
    ok: bool
    failures: list[str]
    laurent: bool  # some factor has a negative exponent


def is_admissible(
    poly: MinorPolynomial, w, series: Series
) -> AdmissibilityReport:
    """Per-monomial degree-sum conditions for the given highest weight.

    For every i = n..2 the exponents of order-(n-i+1) minors must sum to
    r_{-i}; the order-n exponents must sum to m_{-1} (to |m_{-1}| for the
    even orthogonal series with negative m_{-1}).  Half-integer weights
    additionally require exactly the odd-half exponent on the carrier.
    """
    from .algebra import indicator_exponents

    if poly.is_zero():
        raise ValueError("the zero polynomial is not admissible")
    n = series.n
    r = indicator_exponents(w, series)
    top_target = abs(w.entry(1))
    failures: list[str] = []
    laurent = False
    for key, _ in poly.terms.items():
        sums: dict[int, Fraction] = {}
        for m, e in key:
            sums[m.order] = sums.get(m.order, Fraction(0)) + e
            if e < 0:
                laurent = True
        for k in range(n, 1, -1):
            got = sums.get(n - k + 1, Fraction(0))
            if got != r.entry(k):
                failures.append(
                    f"{_key_str(key)}: order-{n - k + 1} sum {got} != r_{-k} = {r.entry(k)}"
                )
        got_top = sums.get(n, Fraction(0))
        if got_top != top_target:
            failures.append(f"{_key_str(key)}: order-{n} sum {got_top} != {top_target}")
        if w.is_half_integer:
            fractional = [(m, e) for m, e in key if e.denominator == 2]
            if len(fractional) != 1:
                failures.append(f"{_key_str(key)}: expected exactly one half-integer exponent")
    return AdmissibilityReport(not failures, failures, laurent)


# ---------------------------------------------------------------------------
# JSON serialization ("p/q" strings, bit-exact round trip)


def minor_to_json(m: Minor, n: int) -> dict:
    return {"rows": list(m.rows), "cols": list(m.cols), "bar": is_bar(m, n)}


def poly_to_json(poly: MinorPolynomial, n: int) -> dict:
    terms = []
    for key, coeff in poly.monomials():
        terms.append(
            {
                "coeff": str(coeff),
                "factors": [
                    dict(minor_to_json(m, n), exp=str(e)) for m, e in key
                ],
            }
        )
    return {"terms": terms}


def poly_from_json(doc: dict) -> MinorPolynomial:
    out: dict[FactorKey, Fraction] = {}
    for term in doc["terms"]:
        factors: dict[Minor, Fraction] = {}
        for f in term["factors"]:
            m = Minor(tuple(f["rows"]), tuple(f["cols"]))
            factors[m] = factors.get(m, Fraction(0)) + Fraction(f["exp"])
        key = _make_key(factors)
        out[key] = out.get(key, Fraction(0)) + Fraction(term["coeff"])
    return MinorPolynomial(out)


def poly_dumps(poly: MinorPolynomial, n: int) -> str:
    return json.dumps(poly_to_json(poly, n), sort_keys=True)
