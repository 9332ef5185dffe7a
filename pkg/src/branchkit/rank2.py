"""Rank-2 restriction problems: catalogs of subalgebra-highest minors and
the explicit n = 2 tableau bases.

Tableaux have three rows (weight, middle, bottom) with betweenness for
A, C and B (plus the parity marker sigma for B), and a two-entry pattern
for the even orthogonal case where the bottom entry may be negative and is
exempt from betweenness.  Vectors are normalized so the lexicographically
largest monomial has coefficient one.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import HighestWeight, Series, as_fraction
from .minors import Minor, MinorPolynomial, is_admissible, minor

P = MinorPolynomial


def _prefix(n: int, j: int) -> tuple[int, ...]:
    return tuple(range(-n, -n + j))


@dataclass(frozen=True)
class HighestMinorCatalog:
    series: Series
    negative_case: bool
    common: tuple[Minor, ...]
    tail: tuple[Minor, ...]

    @property
    def minors(self) -> list[Minor]:
        return list(self.common) + list(self.tail)


def catalog(series: Series, negative_case: bool = False) -> HighestMinorCatalog:
    """Minors annihilated by the raising generators of the subalgebra.

    The common part covers orders 1..n-1; the order-n tail depends on the
    series (and, for the even orthogonal one, on the sign of m_{-1}).
    """
    n = series.n
    if n < 2:
        raise ValueError("catalog requires n >= 2")
    if negative_case and series.kind != "D":
        raise ValueError("the negative case only exists for series D")
    common: list[Minor] = []
    for d in range(1, n):
        common.append(minor(n, _prefix(n, d)))
        common.append(minor(n, _prefix(n, d - 1) + (1,)))
        common.append(minor(n, _prefix(n, d - 1) + (-1,)))
        if d >= 2:
            common.append(minor(n, _prefix(n, d - 2) + (-1, 1)))
    kind = series.kind
    p_n = minor(n, _prefix(n, n - 1) + (-1,))
    s_n = minor(n, _prefix(n, n - 2) + (-1, 1))
    if kind in ("A", "C"):
        tail = [p_n, minor(n, _prefix(n, n - 1) + (1,)), s_n]
    elif kind == "B":
        # The top-order mixed minor takes part in the degree bookkeeping even
        # though the dependent a(.., -2, 1) is dropped.
        tail = [p_n, minor(n, _prefix(n, n - 1) + (0,)), s_n]
    elif not negative_case:
        tail = [
            minor(n, _prefix(n, n - 2) + (2,)),
            p_n,
            s_n,
            minor(n, _prefix(n, n - 2) + (1, 2)),
        ]
    else:
        tail = [
            minor(n, _prefix(n, n - 2) + (2,)),
            minor(n, _prefix(n, n - 1) + (1,), bar=True),
            minor(n, _prefix(n, n - 2) + (-1, 1), bar=True),
            minor(n, _prefix(n, n - 2) + (-1, 2), bar=True),
        ]
    return HighestMinorCatalog(series, negative_case, tuple(common), tuple(tail))


def is_g1_highest_admissible(poly: P, w: HighestWeight, series: Series):
    """Catalog membership plus the degree-sum conditions."""
    negative = series.kind == "D" and w.entry(1) < 0
    allowed = set(catalog(series, negative_case=negative).minors)
    stray = [m for m in poly.minors_used() if m not in allowed]
    report = is_admissible(poly, w, series)
    if stray:
        report.ok = False
        report.failures = [f"non-catalog minor {m}" for m in stray] + report.failures
    return report


# ---------------------------------------------------------------------------
# Tableaux


@dataclass(frozen=True)
class Tableau2:
    """Three-row branching pattern for the rank-2 problems.

    For A, C: rows (m2, m1) / (k2, k1) / (s2) with betweenness.  B adds
    sigma in {0, 1} (sigma = 0 forced when k1 = 0).  D keeps only (k2) and
    (s2); betweenness is deliberately not imposed on s2.
    """

    series: Series
    m2: Fraction
    m1: Fraction
    k2: Fraction
    k1: Fraction | None
    s2: Fraction
    sigma: int = 0

    def __post_init__(self) -> None:
        kind = self.series.kind
        m2, m1, k2, k1, s2 = self.m2, self.m1, self.k2, self.k1, self.s2
        entries = [m2, m1, k2, s2] + ([] if k1 is None else [k1])
        dens = {as_fraction(x).denominator for x in entries}
        if not dens <= {1, 2} or len(dens) > 1:
            raise ValueError("entries must be simultaneously integer or half-integer")
        if kind in ("A", "C", "B"):
            if k1 is None:
                raise ValueError("series A, B, C tableaux need a k1 entry")
            if not (m2 >= k2 >= m1 >= k1 >= 0 and k2 >= s2 >= k1):
                raise ValueError(f"betweenness fails for {self}")
            if kind != "B" and self.sigma:
                raise ValueError("sigma is a series-B marker")
            if kind == "B" and self.sigma not in (0, 1):
                raise ValueError("sigma must be 0 or 1")
            if kind == "B" and self.sigma == 1 and k1 == 0:
                raise ValueError("sigma = 1 requires k1 > 0")
        else:
            if k1 is not None:
                raise ValueError("series D tableaux have no k1 entry")
            if self.sigma:
                raise ValueError("sigma is a series-B marker")
            lo = abs(m1)
            if not (m2 >= k2 >= lo and m2 >= abs(s2)):
                raise ValueError(f"even-orthogonal bounds fail for {self}")
            k, l = self.kl
            if k < 0 or l < 0 or k > m2 - m1 or l > m2 + m1:
                raise ValueError(f"(k,l) box fails for {self}")

    @property
    def negative_case(self) -> bool:
        return self.series.kind == "D" and self.m1 < 0

    @property
    def kl(self) -> tuple[Fraction, Fraction]:
        """The even-orthogonal lowering exponents (k, l)."""
        if self.series.kind != "D":
            raise ValueError("(k, l) only exist for series D")
        if self.negative_case:
            l = self.m2 - self.k2
            k = self.k2 - self.s2
        else:
            k = self.m2 - self.k2
            l = self.k2 - self.s2
        return k, l

    @property
    def interface_k2(self) -> Fraction:
        """The middle value seen by the left-extension step.

        For the even orthogonal block this is max(m2 - k, l - m1), mirrored
        for negative m1.  It coincides with k2 unless the bottom entry is
        deeply negative (|s2| > |m1| on the k2 side), where the interface
        shifts so that, per bottom value, the interface values run exactly
        over [max(|s2|, |m1|), m2].  Pinned by the restriction
        multiplicities; see the tests.
        """
        if self.series.kind != "D":
            return self.k2
        k, l = self.kl
        if self.negative_case:
            return max(self.m2 - l, k + self.m1)
        return max(self.m2 - k, l - self.m1)

    def to_json(self) -> dict:
        doc = {
            "series": self.series.kind,
            "m": [str(self.m2), str(self.m1)],
            "k": [str(self.k2)] if self.k1 is None else [str(self.k2), str(self.k1)],
            "s": [str(self.s2)],
        }
        if self.series.kind == "B":
            doc["sigma"] = self.sigma
        return doc


def enumerate_tableaux2(series: Series, w: HighestWeight) -> list[Tableau2]:
    """All rank-2 tableaux for the weight, in a deterministic order."""
    if series.n != 2:
        raise ValueError("rank-2 enumeration needs n = 2")
    if w.series != series:
        raise ValueError("weight does not belong to the series")
    m2, m1 = w.entry(2), w.entry(1)
    out: list[Tableau2] = []
    if series.kind == "D":
        k = Fraction(0)
        while k <= m2 - m1:
            l = Fraction(0)
            while l <= m2 + m1:
                if m1 < 0:
                    k2, s2 = m2 - l, m2 - k - l
                else:
                    k2, s2 = m2 - k, m2 - k - l
                out.append(Tableau2(series, m2, m1, k2, None, s2))
                l += 1
            k += 1
        return out
    step = Fraction(1)
    k2 = m1
    while k2 <= m2:
        k1 = Fraction(0) if not w.is_half_integer else Fraction(1, 2)
        while k1 <= m1:
            s2 = k1
            while s2 <= k2:
                sigmas = (0, 1) if series.kind == "B" and k1 > 0 else (0,)
                for sigma in sigmas:
                    out.append(Tableau2(series, m2, m1, k2, k1, s2, sigma))
                s2 += step
            k1 += step
        k2 += step
    return out


# ---------------------------------------------------------------------------
# Vectors


def _ext_sum(
    n: int,
    m2: Fraction,
    m1: Fraction,
    k2: Fraction,
    k1: Fraction,
    s2: Fraction,
    pair_minor_high: Minor,
    pair_minor_low: Minor,
    single_minor: Minor,
    base_minor: Minor,
) -> P:
    """The two-variable sum shared by the rank-2 and extension vectors.

    Terms run over u + v = k2 - s2 with u bounded by k2 - m1 and v by
    m1 - k1; the coefficients are the inverse factorials of the four
    exponents.  base^(k2-m1-u) * single^u * pair_high^(m1-k1-v) * pair_low^v.
    """
    j = k2 - s2
    cap_u = k2 - m1
    cap_v = m1 - k1
    if j.denominator != 1 or cap_u.denominator != 1 or cap_v.denominator != 1:
        raise ValueError("tableau differences must be integers")
    total = P.zero()
    for u in range(max(0, int(j - cap_v)), min(int(j), int(cap_u)) + 1):
        v = int(j) - u
        coeff = Fraction(
            1,
            factorial(u)
            * factorial(v)
            * factorial(int(cap_u) - u)
            * factorial(int(cap_v) - v),
        )
        total = total + P.monomial(
            {
                base_minor: Fraction(int(cap_u) - u),
                single_minor: Fraction(u),
                pair_minor_high: Fraction(int(cap_v) - v),
                pair_minor_low: Fraction(v),
            },
            coeff,
        )
    if total.is_zero():
        raise ValueError("empty constraint set; tableau invariants violated upstream")
    return total


def vector_of_tableau2(t: Tableau2, ambient: int = 2) -> P:
    """The subalgebra-highest vector attached to a rank-2 tableau.

    ``ambient`` materializes the minors inside a larger-rank problem (used
    by the left-extension chain); the column tuples are unchanged, the rows
    follow the ambient default (the bar factor keeps its level-2 row set and
    is grown by the chain itself).
    """
    s = t.series
    n = ambient
    kind = s.kind
    a = lambda *cols: minor(n, cols)  # noqa: E731
    if kind in ("A", "C"):
        body = _ext_sum(
            n, t.m2, t.m1, t.k2, t.k1, t.s2, a(-2, 1), a(-1, 1), a(-1), a(-2)
        )
        prefactor = P.monomial({a(1): t.m2 - t.k2, a(-2, -1): t.k1})
        return (prefactor * body).normalized()
    if kind == "B":
        body = _ext_sum(
            n, t.m2, t.m1, t.k2, t.k1, t.s2, a(-2, 1), a(-1, 1), a(-1), a(-2)
        )
        # replace a(-2,1)^p by (-1/2)^p a(-2,0)^{2p} a(-2,-1)^{-p}
        substituted = P.zero()
        dep = a(-2, 1)
        for key, coeff in body.terms.items():
            factors = dict(key)
            p = factors.pop(dep, Fraction(0))
            factors[a(-2, 0)] = factors.get(a(-2, 0), Fraction(0)) + 2 * p
            factors[a(-2, -1)] = factors.get(a(-2, -1), Fraction(0)) - p
            substituted = substituted + P.monomial(
                factors, coeff * Fraction(-1, 2) ** int(p)
            )
        prefactor = P.monomial(
            {
                a(-2, 0): Fraction(t.sigma),
                a(1): t.m2 - t.k2,
                a(-2, -1): t.k1 - t.sigma,
            }
        )
        return (prefactor * substituted).normalized()
    # series D: a single Laurent monomial
    k, l = t.kl
    if t.negative_case:
        top = Minor((-2, 1), (-2, 1))  # level-2 bar factor
        top_exp = -t.m1
        base_exp = t.m2 + t.m1 - k - l
    else:
        top = a(-2, -1)
        top_exp = t.m1
        base_exp = t.m2 - t.m1 - k - l
    return P.monomial(
        {a(-2): base_exp, a(1): l, a(-1): k, top: top_exp}
    ).normalized()


def weight_of_tableau2(t: Tableau2) -> tuple[Fraction, Fraction]:
    """(s_{-2}, w) where w is the eigenvalue of the complementary Cartan
    element under the direct right-action convention.

    A, C: 2(k2+k1) - (m2+m1) - s2 (B subtracts sigma as well); even
    orthogonal: -2 k2 + (m2+m1) + s2 for m1 >= 0 and
    2 k2 - (m2-m1) - s2 otherwise.  In the negative case the value equals
    the F(-1,-1) eigenvalue and the F(1,1) eigenvalue is its negative (the
    +-1 directions trade places there).
    """
    kind = t.series.kind
    if kind in ("A", "C"):
        w = 2 * (t.k2 + t.k1) - (t.m2 + t.m1) - t.s2
    elif kind == "B":
        w = 2 * (t.k2 + t.k1) - (t.m2 + t.m1) - t.s2 - t.sigma
    elif not t.negative_case:
        w = -2 * t.k2 + (t.m2 + t.m1) + t.s2
    else:
        w = 2 * t.k2 - (t.m2 - t.m1) - t.s2
    return t.s2, w
